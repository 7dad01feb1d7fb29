"""
Numeric constants and default tunables for the skew gain library.
"""

import math

# Gains with modulus at or below this floor are rejected at build time
ZERO_GAIN_FLOOR = 1e-12

# Switching values must satisfy | |zeta(v)| - 1 | <= this
UNIT_MODULUS_TOLERANCE = 1e-9

# Default relative tolerance for gain equality, positive-real tests and
# the real-part tie in the lexicographic order
DEFAULT_TOLERANCE = 1e-9

# Distinct gains allowed per vertex of the shortest-path DAG
DEFAULT_GAIN_SET_CAP = 4096

# Per-source passes run sequentially unless configured otherwise
DEFAULT_MAX_WORKERS = 1

# Hermitian gate in front of the eigensolver and cospectrality checks
HERMITIAN_TOLERANCE = 1e-8

# Spectra compared by the balance characterizations
COSPECTRAL_TOLERANCE = 1e-8

# Imaginary residue accepted when rounding a Hermitian char poly to real
CHAR_POLY_RESIDUE_TOLERANCE = 1e-8

# Conditioning guard for the trace recurrence
CHAR_POLY_MAX_DIMENSION = 64

# Exhaustive elementary-subgraph enumeration is exponential
ELEMENTARY_MAX_DIMENSION = 12

# Closed-form cosine sum is singular when |g| <= floor * (1 + k^2)^2
SINGULAR_DENOMINATOR_FLOOR = 1e-12

# Below this relative denominator f / g loses more than 1e-8 to cancellation,
# so the spectra use the direct sum instead
CANCELLATION_DENOMINATOR_FLOOR = 1e-6

# Sine form of the unit-gain spectrum falls back to the direct sum when |sin(t/2)| <= this
SINE_FLOOR = 1e-2

# Tolerance attached to closed-form spectra
CYCLE_SPECTRUM_TOLERANCE = 1e-8

TWO_PI = 2.0 * math.pi
