"""Arithmetical structures: verification, completion, enumeration, wheel classifiers.

An arithmetical structure on a graph with adjacency A is a pair of positive
integer vectors (d, r) with gcd(r) = 1 and (diag(d) - A) r = 0.  Either
vector determines the other, which the completion helpers d_from_r / r_from_d
exploit.

Three certified enumerators are provided:

* stars: ordered unit-fraction decompositions of an integer; the structure
  map sets r0 = lcm(leaf d's) and r_i = r0 / d_i.  Primitivity is automatic:
  for every prime p, a leaf attaining the maximal p-adic valuation among the
  d's gets r-valuation 0, so the leaf r's already have gcd 1.
* paths / cycles: closure of the all-ones base structures under edge
  subdivision (insert a vertex carrying the sum of its two neighbors);
  cross-validated against bounded brute force.
* the 3-wheel: pull-back of the 4-leaf star enumeration through the inverse
  of the clique-star structure map on the full clique (keep star structures
  with center d = 1 and all leaf d >= 2, then drop 1 from each leaf d).

The bounded enumerator works on any irreducible non-negative zero-diagonal
matrix and finds every structure whose r-entries stay below a cap, by
depth-first assignment with divisibility pruning.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    DimensionMismatch,
    NotAStructure,
    PreconditionViolation,
    ReducibleMatrix,
    TrichotomyViolation,
    UnsupportedFamily,
)
from .exactla import IntMatrix, gcd_vector, integer_kernel
from .graphs import GeneralizedGraph, Graph, in_generalized_class, laplacian_like, make_graph

CERTIFIED_FAMILIES = ("path", "cycle", "star", "wheel")
_STAR_MAX_N = 8
_CHAIN_MAX_N = 10


@dataclass(frozen=True)
class ArithStructure:
    """Pair of positive integer vectors (d, r) with r primitive."""

    d: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self):
        d, r = tuple(self.d), tuple(self.r)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)
        if len(d) != len(r):
            raise DimensionMismatch("d and r must have the same length")
        if any(x < 1 for x in d) or any(x < 1 for x in r):
            raise NotAStructure("d and r must have positive entries")
        if gcd_vector(r) != 1:
            raise NotAStructure("r must be primitive (gcd of entries 1)")

    @property
    def n(self) -> int:
        return len(self.d)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.r, self.d)


@dataclass(frozen=True)
class StructureSet:
    """Canonically sorted set of structures on one graph.

    complete=True only for the certified enumerators; bounded searches carry
    the cap they used.
    """

    graph: Graph | GeneralizedGraph
    structures: tuple[ArithStructure, ...]
    complete: bool
    r_cap: int | None = None

    def __len__(self) -> int:
        return len(self.structures)

    def r_vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s.r for s in self.structures)


def _canonical(structures) -> tuple[ArithStructure, ...]:
    return tuple(sorted(set(structures), key=ArithStructure.sort_key))


def is_arithmetical(A: IntMatrix, d, r) -> bool:
    """True iff (d, r) is an arithmetical structure for A."""
    d, r = tuple(d), tuple(r)
    if len(d) != A.n or len(r) != A.n:
        raise DimensionMismatch("d and r must match the matrix dimension")
    if any(x < 1 for x in d) or any(x < 1 for x in r):
        return False
    if gcd_vector(r) != 1:
        return False
    return not any(laplacian_like(A, d).matvec(r))


def d_from_r(A: IntMatrix, r) -> tuple[int, ...] | None:
    """Unique d with (diag(d) - A) r = 0, or None when no positive exact d exists."""
    r = tuple(r)
    if len(r) != A.n:
        raise DimensionMismatch("r must match the matrix dimension")
    if any(x < 1 for x in r):
        raise PreconditionViolation("r must have positive entries")
    if gcd_vector(r) != 1:
        raise PreconditionViolation("r must be primitive")
    weighted = A.matvec(r)
    d = []
    for total, rv in zip(weighted, r):
        q, rem = divmod(total, rv)
        if rem or q < 1:
            return None
        d.append(q)
    return tuple(d)


def r_from_d(A: IntMatrix, d) -> tuple[int, ...] | None:
    """Positive primitive kernel generator of diag(d) - A, or None."""
    d = tuple(d)
    if len(d) != A.n:
        raise DimensionMismatch("d must match the matrix dimension")
    if any(x < 1 for x in d):
        raise PreconditionViolation("d must have positive entries")
    kernel = integer_kernel(laplacian_like(A, d))
    if len(kernel) != 1:
        return None
    gen = kernel[0]
    if any(x <= 0 for x in gen):
        return None
    return gen


# ---------------------------------------------------------------------------
# certified enumeration
# ---------------------------------------------------------------------------


def _unit_fraction_partitions(slots: int, target: Fraction, min_d: int):
    """Nondecreasing d-tuples of given length with sum(1/d_i) == target."""
    if slots == 0:
        if target == 0:
            yield ()
        return
    if target <= 0:
        return
    lo = max(min_d, -(-target.denominator // target.numerator))
    hi = (slots * target.denominator) // target.numerator
    for d in range(lo, hi + 1):
        for tail in _unit_fraction_partitions(slots - 1, target - Fraction(1, d), d):
            yield (d,) + tail


def _distinct_permutations(values: tuple[int, ...]):
    """Distinct orderings of a multiset, in lexicographic order."""
    items = sorted(set(values))
    counts = {v: values.count(v) for v in items}
    perm: list[int] = []
    n = len(values)

    def rec():
        if len(perm) == n:
            yield tuple(perm)
            return
        for v in items:
            if counts[v]:
                counts[v] -= 1
                perm.append(v)
                yield from rec()
                perm.pop()
                counts[v] += 1

    yield from rec()


def _star_structures(n: int) -> list[ArithStructure]:
    out = []
    for hub_d in range(1, n + 1):
        for base in _unit_fraction_partitions(n, Fraction(hub_d), 1):
            for leaves in _distinct_permutations(base):
                r0 = lcm(*leaves)
                out.append(
                    ArithStructure(
                        d=(hub_d,) + leaves,
                        r=(r0,) + tuple(r0 // x for x in leaves),
                    )
                )
    return out


def _cycle_r_tuples(n: int) -> set[tuple[int, ...]]:
    cur = {(1,)}
    for k in range(2, n + 1):
        grown = {(1,) * k}
        for t in cur:
            m = len(t)
            for i in range(m):
                grown.add(t[: i + 1] + (t[i] + t[(i + 1) % m],) + t[i + 1 :])
        # rotation closure: a subdivision may land anywhere on the cycle
        cur = {t[i:] + t[:i] for t in grown for i in range(k)}
    return cur


def _path_r_tuples(n: int) -> set[tuple[int, ...]]:
    cur = {(1, 1)}
    for k in range(3, n + 1):
        grown = {(1,) * k}
        for t in cur:
            for i in range(len(t) - 1):
                grown.add(t[: i + 1] + (t[i] + t[i + 1],) + t[i + 1 :])
        cur = grown
    return cur


def _chain_structures(family: str, n: int) -> list[ArithStructure]:
    graph = make_graph(family, n)
    tuples = _cycle_r_tuples(n) if family == "cycle" else _path_r_tuples(n)
    out = []
    for r in sorted(tuples):
        d = d_from_r(graph.adjacency, r)
        if d is None:
            raise AssertionError(f"subdivision generator emitted a non-structure: {r}")
        out.append(ArithStructure(d, r))
    return out


def _wheel3_structures() -> list[ArithStructure]:
    wheel = make_graph("wheel", 3)
    out = []
    for s in _star_structures(4):
        if s.d[0] == 1 and all(x >= 2 for x in s.d[1:]):
            cand = ArithStructure(tuple(x - 1 for x in s.d[1:]), s.r[1:])
            if not is_arithmetical(wheel.adjacency, cand.d, cand.r):
                raise AssertionError(f"star pull-back produced a non-structure: {cand}")
            out.append(cand)
    return out


def enumerate_certified(family: str, n: int) -> StructureSet:
    """Complete enumeration for paths (n <= 10), cycles (n <= 10), stars
    (n <= 8) and the 3-wheel.  Raises UnsupportedFamily otherwise; use
    enumerate_bounded for anything else."""
    if family == "wheel3":
        family, n = "wheel", 3
    if family not in CERTIFIED_FAMILIES:
        raise UnsupportedFamily(
            f"no certified enumerator for family {family!r}; use enumerate_bounded"
        )
    if family == "wheel":
        if n != 3:
            raise UnsupportedFamily(
                "certified wheel enumeration is only available for n = 3; "
                "use enumerate_bounded for larger wheels"
            )
        return StructureSet(make_graph("wheel", 3), _canonical(_wheel3_structures()), True)
    if family == "star":
        if not 1 <= n <= _STAR_MAX_N:
            raise PreconditionViolation(f"star enumeration supports 1 <= n <= {_STAR_MAX_N}")
        return StructureSet(make_graph("star", n), _canonical(_star_structures(n)), True)
    lo = 3 if family == "cycle" else 2
    if not lo <= n <= _CHAIN_MAX_N:
        raise PreconditionViolation(
            f"{family} enumeration supports {lo} <= n <= {_CHAIN_MAX_N}"
        )
    return StructureSet(make_graph(family, n), _canonical(_chain_structures(family, n)), True)


# ---------------------------------------------------------------------------
# bounded enumeration
# ---------------------------------------------------------------------------


def _divisors(x: int) -> list[int]:
    small, large = [], []
    k = 1
    while k * k <= x:
        if x % k == 0:
            small.append(k)
            if k != x // k:
                large.append(x // k)
        k += 1
    return small + large[::-1]


def _search_plan(rows: tuple[tuple[int, ...], ...]):
    """Neighbor lists plus, per depth, the vertices whose relation becomes
    checkable once that depth is assigned."""
    n = len(rows)
    nbrs = [
        tuple(j for j, x in enumerate(rows[v]) if x != 0 and j != v) for v in range(n)
    ]
    ready_at: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        ready_at[max(v, max(nbrs[v]))].append(v)
    return nbrs, ready_at


def _bounded_dfs(
    rows: tuple[tuple[int, ...], ...],
    r_cap: int,
    assigned: list[int],
    out: list[tuple[tuple[int, ...], tuple[int, ...]]],
    nbrs,
    ready_at,
) -> None:
    n = len(rows)
    k = len(assigned)
    if k == n:
        if gcd_vector(assigned) != 1:
            return
        r = tuple(assigned)
        d = tuple(
            sum(rows[v][u] * r[u] for u in nbrs[v]) // r[v] for v in range(n)
        )
        out.append((d, r))
        return

    congruences = []
    self_total = None
    for v in ready_at[k]:
        if v == k:
            self_total = sum(rows[k][u] * assigned[u] for u in nbrs[k])
            continue
        coeff = rows[v][k]
        partial = sum(rows[v][u] * assigned[u] for u in nbrs[v] if u != k)
        rv = assigned[v]
        g = gcd(coeff, rv)
        if partial % g:
            return
        m = rv // g
        if m > 1:
            c = (-(partial // g) * pow(coeff // g, -1, m)) % m
            congruences.append((m, c, coeff, partial, rv))
        else:
            congruences.append((1, 0, coeff, partial, rv))

    if self_total is not None:
        if self_total < 1:
            return
        base = [x for x in _divisors(self_total) if x <= r_cap]
    elif congruences:
        m, c, *_ = max(congruences)
        first = c if c >= 1 else m
        base = range(first, r_cap + 1, m)
    else:
        base = range(1, r_cap + 1)

    for x in base:
        ok = True
        for m, c, coeff, partial, rv in congruences:
            if (partial + coeff * x) % rv:
                ok = False
                break
        if ok:
            assigned.append(x)
            _bounded_dfs(rows, r_cap, assigned, out, nbrs, ready_at)
            assigned.pop()


def _bounded_worker(args) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    rows, r_cap, first = args
    nbrs, ready_at = _search_plan(rows)
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    _bounded_dfs(rows, r_cap, [first], out, nbrs, ready_at)
    return out


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("ARITH_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            return 1
    return os.cpu_count() or 1


def enumerate_bounded(
    A: IntMatrix,
    r_cap: int,
    *,
    graph: Graph | GeneralizedGraph | None = None,
    workers: int | None = None,
) -> StructureSet:
    """All structures of an irreducible matrix whose r-entries are <= r_cap.

    Depth-first assignment in vertex order; a vertex's divisibility relation
    is checked as soon as its neighborhood is fully assigned, and the last
    unknown value of a relation is stepped through its residue class (or the
    divisors of the neighbor sum) instead of scanned.  The result is not
    certified complete: structures with larger r-entries may exist.

    Worker processes split the search over the first vertex's values; the
    merged output is canonically sorted, so results are schedule-independent.
    ``workers`` defaults to ARITH_THREADS or the available parallelism.
    """
    if r_cap < 1:
        raise PreconditionViolation("r_cap must be >= 1")
    if not in_generalized_class(A):
        raise ReducibleMatrix(
            "bounded enumeration needs an irreducible matrix of dimension >= 2 "
            "(a reducible one may carry infinitely many structures)"
        )
    tasks = [(A.rows, r_cap, first) for first in range(1, r_cap + 1)]
    nworkers = _worker_count(workers)
    if nworkers <= 1 or len(tasks) < 2:
        raw = [pair for task in tasks for pair in _bounded_worker(task)]
    else:
        chunk = max(1, len(tasks) // (nworkers * 4))
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            raw = [pair for res in pool.map(_bounded_worker, tasks, chunksize=chunk) for pair in res]
    structures = _canonical(ArithStructure(d, r) for d, r in raw)
    if graph is None:
        graph = GeneralizedGraph(A)
    return StructureSet(graph, structures, complete=False, r_cap=r_cap)


# ---------------------------------------------------------------------------
# statistics and wheel classifiers
# ---------------------------------------------------------------------------


def r1_histogram(S: StructureSet) -> dict[int, int]:
    """Count structures by the number of unit entries in r."""
    hist: dict[int, int] = {}
    for s in S.structures:
        k = sum(1 for x in s.r if x == 1)
        hist[k] = hist.get(k, 0) + 1
    return dict(sorted(hist.items()))


class WheelCase(Enum):
    ALL_ONES = "AllOnes"
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"


def classify_wheel_structure(n: int, d) -> WheelCase:
    """Place a wheel d-structure in the degree trichotomy.

    AllOnes when r is the all-ones vector; otherwise exactly one of:
    Case1 (hub d > n, some rim d < 3), Case2 (hub d < n, some rim d > 3),
    Case3 (hub d = n, rim entries both < 3 and > 3 at distinct indices).
    Raises NotAStructure when d is not a wheel d-structure, and
    TrichotomyViolation when no case applies (which would contradict the
    trichotomy; violations are reported, never suppressed).
    """
    d = tuple(d)
    if n < 3 or len(d) != n + 1:
        raise PreconditionViolation("need n >= 3 and a d-vector of length n + 1")
    wheel = make_graph("wheel", n)
    r = r_from_d(wheel.adjacency, d)
    if r is None:
        raise NotAStructure(f"{d} is not a d-structure on the {n}-wheel")
    if all(x == 1 for x in r):
        return WheelCase.ALL_ONES
    hub, rim = d[0], d[1:]
    if hub > n:
        if any(x < 3 for x in rim):
            return WheelCase.CASE1
    elif hub < n:
        if any(x > 3 for x in rim):
            return WheelCase.CASE2
    else:
        # d_i < 3 and d_j > 3 force i != j
        if any(x < 3 for x in rim) and any(x > 3 for x in rim):
            return WheelCase.CASE3
    raise TrichotomyViolation(f"wheel structure fits no case: n={n}, d={d}, r={r}")


def check_unit_d_neighbors(G: Graph, d) -> bool:
    """True iff every vertex with d = 1 has only neighbors with d > 1."""
    d = tuple(d)
    if len(d) != G.n:
        raise DimensionMismatch("d must match the vertex count")
    for v, dv in enumerate(d):
        if dv == 1 and any(d[u] == 1 for u in G.neighbors(v)):
            return False
    return True
