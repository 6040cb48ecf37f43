"""Graph families, generalized Laplacians, and the generalized-graph class.

Wheel graphs follow the hub-first labeling: vertex 0 is the hub v0, vertices
1..n are the rim cycle v1..vn.  Star graphs put the center at index 0 with n
leaves, so ``star n`` has n+1 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch, InvalidGeneralizedGraph, InvalidMatrix, UnsupportedFamily
from .exactla import IntMatrix

FAMILIES = ("path", "cycle", "star", "complete", "wheel")


@dataclass(frozen=True)
class Graph:
    """Labeled graph given by a symmetric non-negative adjacency matrix."""

    adjacency: IntMatrix
    family: str = "custom"
    size: int | None = None
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        A = self.adjacency
        if not A.is_symmetric():
            raise InvalidMatrix("adjacency matrix must be symmetric")
        for i in range(A.n):
            if A.rows[i][i] != 0:
                raise InvalidMatrix("adjacency matrix must have zero diagonal")
            if any(x < 0 for x in A.rows[i]):
                raise InvalidMatrix("adjacency matrix must be non-negative")
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(f"v{i + 1}" for i in range(A.n))
            )
        elif len(self.labels) != A.n:
            raise DimensionMismatch("labels must match vertex count")

    @property
    def n(self) -> int:
        return self.adjacency.n

    def spec_string(self) -> str:
        if self.family == "custom" or self.size is None:
            return f"custom:{self.n}"
        return f"{self.family}:{self.size}"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(u for u, x in enumerate(self.adjacency.rows[v]) if x != 0)

    def edge_count(self) -> int:
        return sum(sum(row) for row in self.adjacency.rows) // 2

    def degrees(self) -> tuple[int, ...]:
        return self.adjacency.row_sums()


@dataclass(frozen=True)
class GeneralizedGraph:
    """Non-negative integer matrix with zero diagonal (need not be symmetric).

    Membership in the generalized-graph class additionally requires the
    matrix to be irreducible with dimension >= 2; see in_generalized_class.
    """

    matrix: IntMatrix

    def __post_init__(self):
        M = self.matrix
        for i in range(M.n):
            if M.rows[i][i] != 0:
                raise InvalidGeneralizedGraph("diagonal entries must be zero")
            if any(x < 0 for x in M.rows[i]):
                raise InvalidGeneralizedGraph("entries must be non-negative")

    @property
    def n(self) -> int:
        return self.matrix.n

    def spec_string(self) -> str:
        return f"custom:{self.n}"


def _hub_labels(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(n + 1))


def make_graph(family: str, n: int) -> Graph:
    """Build a family graph: path:n, cycle:n, star:n, complete:n, wheel:n.

    Cycles and wheels need n >= 3; the other families need n >= 1.  star:n and
    wheel:n have n+1 vertices (center/hub at index 0); the rest have n.
    """
    if family not in FAMILIES:
        raise UnsupportedFamily(f"unknown graph family {family!r}")
    if family in ("cycle", "wheel"):
        if n < 3:
            raise ValueError(f"{family} graphs need n >= 3, got {n}")
    elif n < 1:
        raise ValueError(f"{family} graphs need n >= 1, got {n}")

    if family == "path":
        rows = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            rows[i][i + 1] = rows[i + 1][i] = 1
        return Graph(IntMatrix(rows), "path", n)
    if family == "cycle":
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            j = (i + 1) % n
            rows[i][j] = rows[j][i] = 1
        return Graph(IntMatrix(rows), "cycle", n)
    if family == "complete":
        rows = [[int(i != j) for j in range(n)] for i in range(n)]
        return Graph(IntMatrix(rows), "complete", n)
    if family == "star":
        rows = [[0] * (n + 1) for _ in range(n + 1)]
        for i in range(1, n + 1):
            rows[0][i] = rows[i][0] = 1
        return Graph(IntMatrix(rows), "star", n, _hub_labels(n))
    # wheel: hub 0 joined to the rim cycle 1..n
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        rows[0][i] = rows[i][0] = 1
        j = i % n + 1
        rows[i][j] = rows[j][i] = 1
    return Graph(IntMatrix(rows), "wheel", n, _hub_labels(n))


def laplacian_like(A: IntMatrix, d) -> IntMatrix:
    """diag(d) - A."""
    d = tuple(d)
    if len(d) != A.n:
        raise DimensionMismatch(f"diagonal length {len(d)} != dimension {A.n}")
    return IntMatrix.diagonal(d) - A


def is_irreducible(M: IntMatrix) -> bool:
    """True iff the support digraph of M is strongly connected.

    Equivalent to: no bipartition N1, N2 of the indices has every entry from
    N1 to N2 equal to zero.  A 1x1 matrix is irreducible (no bipartition
    exists).
    """
    n = M.n
    if n == 1:
        return True
    forward = [tuple(j for j, x in enumerate(row) if x != 0 and j != i)
               for i, row in enumerate(M.rows)]
    backward = [[] for _ in range(n)]
    for i, outs in enumerate(forward):
        for j in outs:
            backward[j].append(i)

    def reaches_all(adj) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == n

    return reaches_all(forward) and reaches_all(backward)


def in_generalized_class(A: IntMatrix) -> bool:
    """Membership test for the generalized-graph class.

    For an irreducible non-negative zero-diagonal A with n >= 2, taking r as
    the all-ones vector and d as the row sums gives a singular Z-matrix
    diag(d) - A with a positive kernel vector, which is then almost
    non-singular; reducible matrices admit no such witness.  Membership is
    therefore decided by irreducibility.
    """
    GeneralizedGraph(A)  # raises InvalidGeneralizedGraph on bad shape
    return A.n >= 2 and is_irreducible(A)
