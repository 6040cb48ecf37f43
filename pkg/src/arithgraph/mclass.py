"""Exact classification of integer Z-matrices and M-matrices.

The M-matrix test uses the classical principal-minor characterization (all
principal minors non-negative) so the whole classification stays in exact
integer arithmetic; no spectral radius is ever computed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import KernelMismatch, NotZMatrix, PreconditionViolation
from .exactla import IntMatrix, det
from .graphs import is_irreducible


@dataclass(frozen=True)
class MatrixClass:
    """Classification record for a square integer matrix.

    failing_minor is the first index subset (by size, then lexicographically)
    whose principal minor blocks the almost-non-singular property; the full
    index set is used when the only failure is a negative determinant.
    """

    is_z: bool
    is_m: bool
    is_almost_nonsingular_m: bool
    is_irreducible: bool
    det: int
    failing_minor: tuple[int, ...] | None = None


def is_z_matrix(M: IntMatrix) -> bool:
    return all(
        M.rows[i][j] <= 0 for i in range(M.n) for j in range(M.n) if i != j
    )


def classify(M: IntMatrix) -> MatrixClass:
    """Classify M: Z-matrix, M-matrix, almost non-singular M-matrix.

    A Z-matrix is an M-matrix iff all its principal minors are >= 0, and
    almost non-singular iff all proper principal minors are > 0 and det >= 0.
    All 2^n - 2 proper subsets are evaluated exactly.
    """
    n = M.n
    d = det(M)
    irr = is_irreducible(M)
    if not is_z_matrix(M):
        return MatrixClass(False, False, False, irr, d)

    all_nonneg = True
    all_proper_pos = True
    failing = None
    for size in range(1, n):
        for s in itertools.combinations(range(n), size):
            m = det(M.principal_submatrix(s))
            if m < 0:
                all_nonneg = False
            if m <= 0:
                all_proper_pos = False
                if failing is None:
                    failing = s

    is_m = all_nonneg and d >= 0
    almost = all_proper_pos and d >= 0
    if almost:
        failing = None
    elif failing is None and d < 0:
        failing = tuple(range(n))
    return MatrixClass(True, is_m, almost, irr, d, failing)


def default_diagonal_samples(n: int, seed: int = 20240) -> list[tuple[int, ...]]:
    """Sample diagonals D >= 0, D != 0: identity, 2*identity, each unit
    diagonal, and one seeded random positive diagonal."""
    rng = random.Random(seed)
    samples = [tuple([1] * n), tuple([2] * n)]
    for i in range(n):
        samples.append(tuple(int(j == i) for j in range(n)))
    samples.append(tuple(rng.randint(1, 5) for _ in range(n)))
    return samples


def _validate_sample(dvec, n: int) -> tuple[int, ...]:
    dvec = tuple(dvec)
    if len(dvec) != n or any(x < 0 for x in dvec) or not any(dvec):
        raise PreconditionViolation(
            "diagonal samples must be non-negative, non-zero vectors of matching length"
        )
    return dvec


def verify_thm_almost_nonsingular_equivalence(
    M: IntMatrix, diagonal_samples=None
) -> bool:
    """Sampled check of the diagonal-perturbation equivalence for Z-matrices.

    For each sampled D >= 0, D != 0, the check requires: M + D is a
    non-singular M-matrix iff M is almost non-singular.  When M is almost
    non-singular it additionally requires det(M + D) > det(M + D') > 0 for
    every sampled componentwise pair D > D' >= 0 with D' != 0.
    """
    if not is_z_matrix(M):
        raise NotZMatrix("diagonal-perturbation check needs a Z-matrix")
    n = M.n
    if diagonal_samples is None:
        diagonal_samples = default_diagonal_samples(n)
    samples = [_validate_sample(s, n) for s in diagonal_samples]

    almost = classify(M).is_almost_nonsingular_m
    ok = True
    for s in samples:
        c = classify(M + IntMatrix.diagonal(s))
        nonsingular_m = c.is_m and c.det > 0
        ok = ok and (nonsingular_m == almost)

    if almost:
        uniq = list(dict.fromkeys(samples))
        dets = {s: det(M + IntMatrix.diagonal(s)) for s in uniq}
        for big, small in itertools.permutations(uniq, 2):
            if big != small and all(b >= s for b, s in zip(big, small)):
                ok = ok and dets[big] > dets[small] > 0
    return ok


@dataclass(frozen=True)
class PositiveKernelCheck:
    m_matrix: bool
    almost_nonsingular_det0_iff_irreducible: bool


def verify_thm_positive_kernel(M: IntMatrix, r) -> PositiveKernelCheck:
    """Check the positive-kernel characterization on a concrete witness.

    Requires M to be a Z-matrix with M r = 0 for a positive integer vector r.
    Returns whether M classifies as an M-matrix (it must), and whether
    "almost non-singular with det 0" coincides with irreducibility.
    """
    if not is_z_matrix(M):
        raise NotZMatrix("positive-kernel check needs a Z-matrix")
    r = tuple(r)
    if any(x < 1 for x in r):
        raise PreconditionViolation("kernel vector r must have positive entries")
    if any(M.matvec(r)):
        raise KernelMismatch("M r != 0")
    c = classify(M)
    return PositiveKernelCheck(
        m_matrix=c.is_m,
        almost_nonsingular_det0_iff_irreducible=(
            (c.is_almost_nonsingular_m and c.det == 0) == c.is_irreducible
        ),
    )
