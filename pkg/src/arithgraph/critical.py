"""Critical groups of arithmetical structures and blowup invariance.

The critical group of (A, d, r) is the quotient of the lattice
{x in Z^n : r^T x = 0} by the column span of L = diag(d) - A.  It is computed
as a lattice quotient: express each column of L in a Hermite-derived basis of
the kernel lattice, then read the invariant factors off the Smith normal form
of the resulting (n-1) x n coefficient matrix.  No rational arithmetic is
involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import ArithError, BasisExpressionFailure, NotAStructure, PreconditionViolation
from .exactla import IntMatrix, _row_clear_unimodular, smith_normal_form
from .graphs import laplacian_like
from .structures import is_arithmetical
from .transforms import blowup_mq


@dataclass(frozen=True)
class CriticalGroup:
    """Invariant factors > 1 of the finite abelian quotient, in a divisibility chain."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        f = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", f)
        for a, b in zip(f, f[1:]):
            if b % a:
                raise ArithError(f"invariant factors must form a divisibility chain: {f}")
        if any(x <= 1 for x in f):
            raise ArithError("invariant factors must all exceed 1")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)


def critical_group(A: IntMatrix, d, r) -> CriticalGroup:
    """Critical group of an arithmetical structure (d, r) on A.

    Each column of L = diag(d) - A is checked to lie in the kernel lattice of
    r^T and expressed in its basis via the tracked inverse transform; a column
    outside the lattice raises BasisExpressionFailure (for symmetric A this
    would be an implementation bug, since L r = 0 and L = L^T force
    r^T L = 0).
    """
    d, r = tuple(d), tuple(r)
    if not is_arithmetical(A, d, r):
        raise NotAStructure("(d, r) is not an arithmetical structure for A")
    n = A.n
    L = laplacian_like(A, d)
    _, vinv, _ = _row_clear_unimodular(r)

    coeff_rows: list[list[int]] = [[] for _ in range(n - 1)]
    for j in range(n):
        col = L.column(j)
        y = vinv.matvec(col)
        if y[0] != 0:
            raise BasisExpressionFailure(
                f"column {j} of L is not orthogonal to r (r^T col = {sum(a*b for a, b in zip(r, col))})"
            )
        for i in range(n - 1):
            coeff_rows[i].append(y[i + 1])

    # pad with a zero row to reuse the square SNF; padding only adds a free
    # summand, leaving the torsion untouched
    padded = IntMatrix(coeff_rows + [[0] * n])
    diag = smith_normal_form(padded).diag
    nonzero = [s for s in diag if s != 0]
    if len(nonzero) < n - 1:
        raise ArithError(
            "critical group is not finite: diag(d) - A has rank below n - 1 "
            "(is the matrix reducible?)"
        )
    return CriticalGroup(tuple(s for s in nonzero if s > 1))


def blowup_preserves_critical_group(M: IntMatrix, d, r, q) -> bool:
    """Compare critical groups before and after the blowup of M = diag(d) - A.

    The blown-up structure is d_hat = (d_i + q_i^2, 1) with kernel vector
    (r, x); invariant-factor lists are compared for exact equality.
    """
    d, r = tuple(d), tuple(r)
    q = tuple(q)
    n = M.n
    if tuple(M.rows[i][i] for i in range(n)) != d:
        raise PreconditionViolation("M must be diag(d) - A, so its diagonal must equal d")
    A = IntMatrix.diagonal(d) - M
    before = critical_group(A, d, r)

    res = blowup_mq(M, q, r)
    d_hat = tuple(d[i] + q[i] * q[i] for i in range(n)) + (1,)
    A_hat = IntMatrix.diagonal(d_hat) - res.mq
    r_hat = r + (res.x,)
    after = critical_group(A_hat, d_hat, r_hat)
    return before.invariant_factors == after.invariant_factors
