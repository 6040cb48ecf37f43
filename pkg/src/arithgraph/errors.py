"""Exception hierarchy shared across the package.

Every error raised by the library derives from ArithError so the CLI can
map library failures to exit code 1 uniformly.
"""


class ArithError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(ArithError):
    """Operands have incompatible dimensions."""


class InvalidMatrix(ArithError):
    """Matrix input violates a structural requirement (shape, entry type...)."""


class InvalidGeneralizedGraph(ArithError):
    """Matrix is not a generalized-graph candidate (negative entry or non-zero diagonal)."""


class UnsupportedFamily(ArithError):
    """Requested graph family has no certified enumerator."""


class ReducibleMatrix(ArithError):
    """Matrix is reducible; the requested operation needs irreducibility."""


class NotZMatrix(ArithError):
    """Matrix has a positive off-diagonal entry."""


class KernelMismatch(ArithError):
    """Vector claimed to be in the kernel is not annihilated by the matrix."""


class NotAStructure(ArithError):
    """(d, r) pair is not an arithmetical structure on the given graph."""


class TrichotomyViolation(ArithError):
    """A wheel structure fits none of the three degree-vector cases."""


class NotAClique(ArithError):
    """Vertex set is not a clique of the graph."""


class ZeroX(ArithError):
    """Blowup weight vector q is orthogonal to r (x = 0)."""


class NonPositivePQ(ArithError):
    """Generalized blowup requires strictly positive p and q."""


class IntegralityViolation(ArithError):
    """Generalized blowup scaling would produce non-integer entries."""


class DivisibilityViolation(ArithError):
    """A required exact-divisibility condition fails."""


class PreconditionViolation(ArithError):
    """A documented operation precondition does not hold."""


class AffineResidueNotConstant(ArithError):
    """L(C_n, d) r is not a constant vector a*1."""


class BasisExpressionFailure(ArithError):
    """A column could not be expressed in the kernel-complement basis."""


class ParseError(ArithError):
    """Command-line input could not be parsed."""


class FileError(ArithError):
    """A referenced input file is missing or unreadable."""


class UnknownTable(ArithError):
    """reproduce was asked for a table id that does not exist."""
