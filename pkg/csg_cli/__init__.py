"""
Command-line front end for conjugate skew gain graphs.
"""

from .run_command import main, run_command

__all__ = ["main", "run_command"]
