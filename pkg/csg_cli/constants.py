"""
Constants for the csg command-line front end.
"""

# Exit codes
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

# Graph file version token accepted after the "csg" keyword
FORMAT_VERSION = 1

# 17 significant digits round-trip every IEEE double exactly
FLOAT_FORMAT = '.17g'

# Machine-readable output stays clean unless a lower level is requested
DEFAULT_LOG_LEVEL = 'WARNING'
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

# Default gain draws for the random generators
DEFAULT_MODULUS_BOUNDS = (0.5, 2.0)
DEFAULT_ARGUMENT_BOUNDS = (0.0, 6.283185307179586)
