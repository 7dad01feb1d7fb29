"""
Custom exceptions for the skew gain library.
"""

from typing import Any, Optional, Sequence, Tuple


class SkewGainError(Exception):
    """Base exception for all skew gain library errors."""

    code = "SkewGainError"

    def details(self) -> dict:
        """Structured attributes for diagnostics (JSON friendly)."""
        return {}


class ValidationError(SkewGainError):
    """Raised when data validation fails."""

    code = "Validation"

    def __init__(self, field: str, value: Any, message: str):
        self.field = field
        self.value = value
        super().__init__(f"Validation error for field '{field}': {message}")

    def details(self) -> dict:
        return {"field": self.field}


# ============================================================================
# Graph construction and queries
# ============================================================================

class SelfLoopError(SkewGainError):
    """Raised when an edge joins a vertex to itself."""

    code = "SelfLoop"

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Self-loop at vertex {vertex} is not allowed")

    def details(self) -> dict:
        return {"vertex": self.vertex}


class DuplicateEdgeError(SkewGainError):
    """Raised when the same unordered pair is given twice."""

    code = "DuplicateEdge"

    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"Edge between {u} and {v} already exists")

    def details(self) -> dict:
        return {"u": self.u, "v": self.v}


class ZeroGainError(SkewGainError):
    """Raised when an edge gain is (numerically) zero."""

    code = "ZeroGain"

    def __init__(self, u: int, v: int, gain: complex):
        self.u = u
        self.v = v
        self.gain = gain
        super().__init__(f"Gain of edge {u}->{v} must be nonzero, got {gain}")

    def details(self) -> dict:
        return {"u": self.u, "v": self.v}


class BadVertexError(SkewGainError):
    """Raised when a vertex index is outside 0..n-1."""

    code = "BadVertex"

    def __init__(self, vertex: Any, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"Vertex {vertex} is out of range for a graph on {n} vertices")

    def details(self) -> dict:
        return {"vertex": str(self.vertex), "n": self.n}


class NotAdjacentError(SkewGainError):
    """Raised when a gain is requested for a non-adjacent pair."""

    code = "NotAdjacent"

    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"Vertices {u} and {v} are not adjacent")

    def details(self) -> dict:
        return {"u": self.u, "v": self.v}


class LengthMismatchError(SkewGainError):
    """Raised when a per-vertex sequence has the wrong length."""

    code = "LengthMismatch"

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Expected {expected} values, got {actual}")

    def details(self) -> dict:
        return {"expected": self.expected, "actual": self.actual}


class NonUnitModulusError(SkewGainError):
    """Raised when a switching value does not lie on the unit circle."""

    code = "NonUnitModulus"

    def __init__(self, vertex: int, value: complex):
        self.vertex = vertex
        self.value = value
        super().__init__(f"Switching value at vertex {vertex} has modulus {abs(value)}, expected 1")

    def details(self) -> dict:
        return {"vertex": self.vertex, "modulus": abs(self.value)}


class DisconnectedError(SkewGainError):
    """Raised when an operation needs a connected graph."""

    code = "Disconnected"

    def __init__(self, n: int, components: int):
        self.n = n
        self.components = components
        super().__init__(f"Graph on {n} vertices is disconnected ({components} components)")

    def details(self) -> dict:
        return {"n": self.n, "components": self.components}


class InvalidCycleError(SkewGainError):
    """Raised when a vertex sequence is not an oriented cycle of the graph."""

    code = "InvalidCycle"

    def __init__(self, vertices: Sequence[int], reason: str):
        self.vertices = list(vertices)
        self.reason = reason
        super().__init__(f"Invalid cycle {self.vertices}: {reason}")

    def details(self) -> dict:
        return {"vertices": self.vertices}


# ============================================================================
# Shortest-path gains and distance matrices
# ============================================================================

class CapExceededError(SkewGainError):
    """Raised when a vertex accumulates more distinct shortest-path gains than allowed."""

    code = "CapExceeded"

    def __init__(self, vertex: int, cap: int):
        self.vertex = vertex
        self.cap = cap
        super().__init__(f"More than {cap} distinct shortest-path gains reach vertex {vertex}")

    def details(self) -> dict:
        return {"vertex": self.vertex, "cap": self.cap}


class NotDistanceCompatibleError(SkewGainError):
    """Raised when the common distance matrix is requested for an incompatible graph."""

    code = "NotDistanceCompatible"

    def __init__(self, pair: Tuple[int, int], gains: Sequence[complex], failed_property: str):
        self.pair = pair
        self.gains = list(gains)
        self.failed_property = failed_property
        super().__init__(
            f"NotDistanceCompatible witness=[{pair[0]},{pair[1]}] "
            f"({failed_property} fails, gains {self.gains[0]} and {self.gains[1]})"
        )

    def details(self) -> dict:
        return {
            "pair": list(self.pair),
            "failed_property": self.failed_property,
            "gains": [[g.real, g.imag] for g in self.gains],
        }


# ============================================================================
# Spectra and characteristic polynomials
# ============================================================================

class NotHermitianError(SkewGainError):
    """Raised when a Hermitian matrix is required."""

    code = "NotHermitian"

    def __init__(self, deviation: float):
        self.deviation = deviation
        super().__init__(f"Matrix is not Hermitian (max |m - m*| = {deviation:.3e})")

    def details(self) -> dict:
        return {"deviation": self.deviation}


class NoConvergenceError(SkewGainError):
    """Raised when the eigensolver fails to converge."""

    code = "NoConvergence"

    def __init__(self, residual: Optional[float], error: str):
        self.residual = residual
        super().__init__(f"Eigensolver did not converge (residual={residual}): {error}")

    def details(self) -> dict:
        return {"residual": self.residual}


class DimensionTooLargeError(SkewGainError):
    """Raised when an exact or conditioning-sensitive routine is asked for too large a dimension."""

    code = "DimensionTooLarge"

    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"Dimension {n} exceeds the limit of {limit}")

    def details(self) -> dict:
        return {"n": self.n, "limit": self.limit}


class DimensionMismatchError(SkewGainError):
    """Raised when two matrices must have the same dimension."""

    code = "DimensionMismatch"

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"Dimensions differ: {left} vs {right}")

    def details(self) -> dict:
        return {"left": self.left, "right": self.right}


class ComplexResidueError(SkewGainError):
    """Raised when a Hermitian characteristic polynomial has a non-negligible imaginary part."""

    code = "ComplexResidue"

    def __init__(self, residue: float):
        self.residue = residue
        super().__init__(f"Characteristic polynomial of a Hermitian matrix has imaginary residue {residue:.3e}")

    def details(self) -> dict:
        return {"residue": self.residue}


# ============================================================================
# Closed forms for odd cycles
# ============================================================================

class SingularDenominatorError(SkewGainError):
    """Raised when the closed-form cosine sum has a vanishing denominator."""

    code = "SingularDenominator"

    def __init__(self, k: float, theta: float, denominator: float):
        self.k = k
        self.theta = theta
        self.denominator = denominator
        super().__init__(f"Closed form is singular at k={k}, theta={theta} (g={denominator:.3e})")

    def details(self) -> dict:
        return {"k": self.k, "theta": self.theta}


class EvenLengthError(SkewGainError):
    """Raised when an odd cycle length is required."""

    code = "EvenLength"

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"Cycle length must be odd and at least 3, got {n}")

    def details(self) -> dict:
        return {"n": self.n}


class BadModulusError(SkewGainError):
    """Raised when a gain modulus is not a positive finite real."""

    code = "BadModulus"

    def __init__(self, k: float):
        self.k = k
        super().__init__(f"Gain modulus must be positive and finite, got {k}")

    def details(self) -> dict:
        return {"k": self.k}


# ============================================================================
# Generators and file input
# ============================================================================

class BadEdgeCountError(SkewGainError):
    """Raised when a connected simple graph cannot have the requested edge count."""

    code = "BadEdgeCount"

    def __init__(self, n: int, m: int):
        self.n = n
        self.m = m
        super().__init__(f"A connected simple graph on {n} vertices cannot have {m} edges")

    def details(self) -> dict:
        return {"n": self.n, "m": self.m}


class GraphFileError(SkewGainError):
    """Raised when a graph file cannot be parsed or describes an invalid graph."""

    code = "ParseError"

    def __init__(self, line: int, message: str, cause: Optional[SkewGainError] = None):
        self.line = line
        self.cause = cause
        if cause is not None:
            # Surface the underlying build error code with its line number
            self.code = cause.code
        super().__init__(f"Line {line}: {message}")

    def details(self) -> dict:
        result = {"line": self.line}
        if self.cause is not None:
            result.update(self.cause.details())
        return result
