"""Exact linear algebra over the integers.

Dense square matrices of arbitrary-precision Python ints; no floating point
anywhere.  Determinants use fraction-free (Bareiss) elimination, kernels and
invariant factors come from a Smith normal form with tracked unimodular
transforms, and kernel-complement bases come from a Hermite-style column
reduction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatch, InvalidMatrix, PreconditionViolation


def _check_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidMatrix(f"matrix entries must be plain integers, got {x!r}")
    return x


class IntMatrix:
    """Immutable square matrix of exact integers."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(_check_int(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise InvalidMatrix("matrix dimension must be >= 1")
        if any(len(row) != n for row in rows):
            raise InvalidMatrix("matrix must be square")
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries) -> "IntMatrix":
        entries = tuple(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_dim(other)
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_dim(other)
        return IntMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_dim(other)
        cols = list(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def _same_dim(self, other: "IntMatrix") -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"dimensions differ: {self.n} vs {other.n}")

    def matvec(self, v) -> tuple[int, ...]:
        v = tuple(v)
        if len(v) != self.n:
            raise DimensionMismatch(f"vector length {len(v)} != dimension {self.n}")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.rows)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def principal_submatrix(self, indices) -> "IntMatrix":
        idx = tuple(indices)
        return IntMatrix([[self.rows[i][j] for j in idx] for i in idx])

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def det(M: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = M.n
    a = [list(row) for row in M.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            # pick the smallest-magnitude non-zero pivot below to limit growth
            piv, best = None, None
            for i in range(k + 1, n):
                v = abs(a[i][k])
                if v and (best is None or v < best):
                    piv, best = i, v
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pkk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * a[n - 1][n - 1]


def proper_principal_minors_positive(
    M: IntMatrix, leading_only: bool = False
) -> tuple[bool, tuple[int, ...] | None]:
    """Check det(M[S]) > 0 for every proper non-empty index subset S.

    Returns (True, None) or (False, S) with S the first violating subset in
    (size, lexicographic) order.  ``leading_only`` restricts the scan to the
    leading subsets {0..k-1}; that mode is a quick screen, never a verdict.
    A 1x1 matrix has no proper non-empty subsets, so it passes vacuously.
    """
    n = M.n
    if leading_only:
        subsets = (tuple(range(k)) for k in range(1, n))
    else:
        subsets = (
            s for size in range(1, n) for s in itertools.combinations(range(n), size)
        )
    for s in subsets:
        if det(M.principal_submatrix(s)) <= 0:
            return False, s
    return True, None


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form U @ M @ V = diag(diag) with unimodular U, V."""

    diag: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix


def smith_normal_form(M: IntMatrix) -> SNFResult:
    """Smith normal form over the integers.

    Pivots are chosen as the smallest-magnitude non-zero entry of the trailing
    block (ties broken by lowest row, then column index), which keeps
    intermediate entries small and makes the reduction deterministic.  The
    returned diagonal is non-negative, satisfies the divisibility chain
    s_i | s_{i+1}, and has its zero entries last.
    """
    n = M.n
    a = [list(row) for row in M.rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, c: int) -> None:
        ad, asrc = a[dst], a[src]
        for j in range(n):
            ad[j] += c * asrc[j]
        ud, usrc = u[dst], u[src]
        for j in range(n):
            ud[j] += c * usrc[j]

    def add_col(dst: int, src: int, c: int) -> None:
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    for t in range(n):
        piv, best = None, None
        for i in range(t, n):
            for j in range(t, n):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    piv, best = (i, j), x
        if piv is None:
            break  # trailing block is zero; diagonal zeros follow
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        while True:
            i = next((i for i in range(t + 1, n) if a[i][t]), None)
            if i is not None:
                q = a[i][t] // a[t][t]
                add_row(i, t, -q)
                if a[i][t]:
                    swap_rows(t, i)  # remainder is a strictly smaller pivot
                continue
            j = next((j for j in range(t + 1, n) if a[t][j]), None)
            if j is not None:
                q = a[t][j] // a[t][t]
                add_col(j, t, -q)
                if a[t][j]:
                    swap_cols(t, j)
                continue
            p = a[t][t]
            bad = next(
                (
                    i
                    for i in range(t + 1, n)
                    if any(a[i][j] % p for j in range(t + 1, n))
                ),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)  # pull the non-divisible row in and re-reduce
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SNFResult(
        diag=tuple(a[i][i] for i in range(n)),
        left=IntMatrix(u),
        right=IntMatrix(v),
    )


def _sign_normalized(vec) -> tuple[int, ...]:
    lead = next((x for x in vec if x != 0), 0)
    if lead < 0:
        return tuple(-x for x in vec)
    return tuple(vec)


def integer_kernel(M: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the integer null lattice {x in Z^n : M x = 0}.

    Basis vectors are the columns of the right SNF transform at zero diagonal
    positions; they are primitive, and the empty list is returned exactly when
    M is non-singular.  Each vector is sign-normalized (first non-zero entry
    positive).
    """
    snf = smith_normal_form(M)
    return [
        _sign_normalized(snf.right.column(j))
        for j, s in enumerate(snf.diag)
        if s == 0
    ]


def _row_clear_unimodular(r) -> tuple[IntMatrix, IntMatrix, int]:
    """Unimodular V (and its inverse) with r^T V = (g, 0, ..., 0), g = gcd(r) > 0.

    Columns 1..n-1 of V form a lattice basis of {x in Z^n : r^T x = 0}, and for
    any x in that lattice its coordinates in the basis are rows 1..n-1 of
    V^{-1} x.
    """
    w = [int(x) for x in r]
    n = len(w)
    if n == 0 or any(x <= 0 for x in w):
        raise PreconditionViolation("r must be a non-empty vector of positive integers")
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_addmul(dst: int, src: int, c: int) -> None:
        # V <- V * E with E adding c*col_src to col_dst;  Vinv <- E^{-1} Vinv
        w[dst] += c * w[src]
        for row in v:
            row[dst] += c * row[src]
        rs, rd = vinv[src], vinv[dst]
        for j in range(n):
            rs[j] -= c * rd[j]

    def col_swap(i: int, j: int) -> None:
        w[i], w[j] = w[j], w[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    for j in range(1, n):
        while w[j] != 0:
            q = w[0] // w[j]
            if q:
                col_addmul(0, j, -q)
            col_swap(0, j)
    return IntMatrix(v), IntMatrix(vinv), w[0]


def kernel_complement_basis(r) -> list[tuple[int, ...]]:
    """Lattice basis of {x in Z^n : r^T x = 0} for positive r, via Hermite-style
    column reduction.  Returns n-1 sign-normalized integer vectors."""
    V, _, _ = _row_clear_unimodular(r)
    return [_sign_normalized(V.column(j)) for j in range(1, V.n)]


def gcd_vector(vec) -> int:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g
