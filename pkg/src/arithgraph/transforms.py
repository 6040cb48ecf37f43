"""Structure-producing maps: clique-star, blowups, cycle-to-wheel, wheel extension.

Every transform verifies its output exactly against the target matrix before
returning; a failed verification is an implementation bug, not user error.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import (
    AffineResidueNotConstant,
    DimensionMismatch,
    DivisibilityViolation,
    IntegralityViolation,
    KernelMismatch,
    NonPositivePQ,
    NotAClique,
    NotAStructure,
    PreconditionViolation,
    ZeroX,
)
from .exactla import IntMatrix
from .graphs import GeneralizedGraph, Graph, laplacian_like, make_graph
from .structures import ArithStructure, d_from_r, is_arithmetical


def _as_positive(vec, name: str) -> tuple[int, ...]:
    vec = tuple(vec)
    if any(x < 1 for x in vec):
        raise NonPositivePQ(f"{name} must have strictly positive entries")
    return vec


def _require_structure(A: IntMatrix, d, r) -> ArithStructure:
    if not is_arithmetical(A, d, r):
        raise NotAStructure(f"(d={tuple(d)}, r={tuple(r)}) is not a structure here")
    return ArithStructure(tuple(d), tuple(r))


# ---------------------------------------------------------------------------
# clique-star
# ---------------------------------------------------------------------------


def clique_star(
    G: Graph, C, s: ArithStructure | None = None
) -> tuple[Graph, ArithStructure | None]:
    """Replace the internal edges of a clique C by a new vertex joined to C.

    The structure image adds 1 to d on C, gives the new vertex d = 1 and
    r = sum of the clique's r-values, and is verified on the new graph.
    """
    C = tuple(dict.fromkeys(C))
    n = G.n
    if not C or any(not 0 <= u < n for u in C):
        raise NotAClique("clique must be a non-empty set of valid vertex indices")
    for i, u in enumerate(C):
        for v in C[i + 1 :]:
            if G.adjacency[u, v] != 1:
                raise NotAClique(f"vertices {u} and {v} are not joined by a single edge")

    rows = [list(row) + [0] for row in G.adjacency.rows]
    rows.append([0] * (n + 1))
    for i, u in enumerate(C):
        for v in C[i + 1 :]:
            rows[u][v] = rows[v][u] = 0
        rows[u][n] = rows[n][u] = 1
    new_graph = Graph(IntMatrix(rows), "custom", labels=G.labels + ("v*",))

    if s is None:
        return new_graph, None
    if not is_arithmetical(G.adjacency, s.d, s.r):
        raise NotAStructure("given structure is not valid on the input graph")
    in_c = set(C)
    d_img = tuple(x + 1 if u in in_c else x for u, x in enumerate(s.d)) + (1,)
    r_img = s.r + (sum(s.r[u] for u in C),)
    image = _require_structure(new_graph.adjacency, d_img, r_img)
    return new_graph, image


# ---------------------------------------------------------------------------
# blowups
# ---------------------------------------------------------------------------


def _bordered(block: IntMatrix, col, row, corner: int) -> IntMatrix:
    n = block.n
    rows = [list(block.rows[i]) + [col[i]] for i in range(n)]
    rows.append(list(row) + [corner])
    return IntMatrix(rows)


def _outer(p, q) -> IntMatrix:
    return IntMatrix([[pi * qj for qj in q] for pi in p])


def assemble_blowup(M: IntMatrix, q) -> IntMatrix:
    """M_q = [[M + q q^T, -q], [-q^T, 1]]; no kernel data required."""
    q = tuple(q)
    if len(q) != M.n:
        raise DimensionMismatch("q must match the matrix dimension")
    return _bordered(M + _outer(q, q), [-x for x in q], [-x for x in q], 1)


@dataclass(frozen=True)
class BlowupResult:
    mq: IntMatrix
    mq_minus: IntMatrix
    x: int


def blowup_mq(M: IntMatrix, q, r) -> BlowupResult:
    """Blowup pair for a kernel vector r of M and weights q with x = q.r != 0.

    M_q annihilates (r, x) by construction and this is asserted.  The minus
    variant is assembled exactly as printed, [[M - q q^T, q], [q^T, 1]]; as
    printed it sends (r, x) to 2x times the last basis vector, so no kernel
    identity is asserted for it.
    """
    q, r = tuple(q), tuple(r)
    if len(q) != M.n or len(r) != M.n:
        raise DimensionMismatch("q and r must match the matrix dimension")
    if any(M.matvec(r)):
        raise KernelMismatch("M r != 0")
    x = sum(a * b for a, b in zip(q, r))
    if x == 0:
        raise ZeroX("q is orthogonal to r: x = sum(q_i r_i) must be non-zero")
    mq = assemble_blowup(M, q)
    mq_minus = _bordered(M - _outer(q, q), list(q), list(q), 1)
    if any(mq.matvec(r + (x,))):
        raise AssertionError("blowup must annihilate (r, x)")
    return BlowupResult(mq, mq_minus, x)


def pq_conjugation_check(M: IntMatrix, q) -> bool:
    """Whether P M_q Q = diag(M, 1) for P = [[I, q], [0, 1]], Q = [[I, 0], [q^T, 1]].

    This holds identically; returning False signals an implementation bug.
    """
    q = tuple(q)
    n = M.n
    mq = assemble_blowup(M, q)
    P = _bordered(IntMatrix.identity(n), list(q), [0] * n, 1)
    Q = _bordered(IntMatrix.identity(n), [0] * n, list(q), 1)
    return P @ mq @ Q == _bordered(M, [0] * n, [0] * n, 1)


def generalized_blowup_m(
    M: IntMatrix, d, r, p, q
) -> tuple[IntMatrix, ArithStructure]:
    """Bordered extension [[1, -q^T], [-p, p q^T + M]] with its structure.

    New vertex first: d_hat = (1, d_i + p_i q_i), r_hat = (q.r, r).  The
    kernel identity B r_hat = 0 is verified exactly.
    """
    d, r = tuple(d), tuple(r)
    p = _as_positive(p, "p")
    q = _as_positive(q, "q")
    n = M.n
    if len(d) != n or len(r) != n or len(p) != n or len(q) != n:
        raise DimensionMismatch("d, r, p, q must match the matrix dimension")
    if tuple(M.rows[i][i] for i in range(n)) != d:
        raise PreconditionViolation("M must be diag(d) - A, so its diagonal must equal d")
    if any(M.matvec(r)):
        raise KernelMismatch("M r != 0")

    block = _outer(p, q) + M
    rows = [[1] + [-x for x in q]]
    rows.extend([-p[i]] + list(block.rows[i]) for i in range(n))
    B = IntMatrix(rows)
    d_hat = (1,) + tuple(d[i] + p[i] * q[i] for i in range(n))
    r_hat = (sum(a * b for a, b in zip(q, r)),) + r
    if any(B.matvec(r_hat)):
        raise AssertionError("generalized blowup must annihilate r_hat")
    return B, ArithStructure(d_hat, r_hat)


@dataclass(frozen=True)
class GeneralizedBlowupA:
    """Adjacency-level blowup output.

    ``graph`` is None (and ``raw`` True) when the printed matrix has negative
    off-diagonal entries and therefore leaves the generalized-graph class.
    """

    matrix: IntMatrix
    structure: ArithStructure
    graph: GeneralizedGraph | None

    @property
    def raw(self) -> bool:
        return self.graph is None


def generalized_blowup_a(A: IntMatrix, d, r, p, q) -> GeneralizedBlowupA:
    """Adjacency-level blowup [[0, q^T], [p, A - [p q^T]/g]] with g = gcd(q).

    [p q^T] is the outer product with its diagonal zeroed.  The structure is
    d_hat = (g, d_i + p_i q_i / g), r_hat = (sum(r_j q_j)/g, r), and the
    identity (diag(d_hat) - A_hat) r_hat = 0 is verified exactly.
    """
    d, r = tuple(d), tuple(r)
    p = _as_positive(p, "p")
    q = _as_positive(q, "q")
    n = A.n
    if len(d) != n or len(r) != n or len(p) != n or len(q) != n:
        raise DimensionMismatch("d, r, p, q must match the matrix dimension")
    if any(laplacian_like(A, d).matvec(r)):
        raise KernelMismatch("(diag(d) - A) r != 0")
    g = gcd(*q) if n > 1 else q[0]
    for i in range(n):
        for j in range(n):
            if (p[i] * q[j]) % g:
                raise IntegralityViolation(
                    f"g = {g} does not divide p_{i} q_{j} = {p[i] * q[j]}"
                )

    rows = [[0] + list(q)]
    for i in range(n):
        row = [p[i]]
        for j in range(n):
            adj = 0 if i == j else p[i] * q[j] // g
            row.append(A.rows[i][j] - adj)
        rows.append(row)
    A_hat = IntMatrix(rows)
    d_hat = (g,) + tuple(d[i] + p[i] * q[i] // g for i in range(n))
    r_hat = (sum(a * b for a, b in zip(q, r)) // g,) + r
    if any(laplacian_like(A_hat, d_hat).matvec(r_hat)):
        raise AssertionError("adjacency blowup must annihilate r_hat")
    structure = ArithStructure(d_hat, r_hat)
    nonneg = all(x >= 0 for row in A_hat.rows for x in row)
    graph = GeneralizedGraph(A_hat) if nonneg else None
    return GeneralizedBlowupA(A_hat, structure, graph)


# ---------------------------------------------------------------------------
# cycle-to-wheel constructions
# ---------------------------------------------------------------------------


def cycle_to_wheel_divisor(dC, rC, n: int | None = None) -> ArithStructure:
    """Hub with d = 1: requires each r_i to divide the total rim sum."""
    dC, rC = tuple(dC), tuple(rC)
    if n is None:
        n = len(rC)
    if n != len(rC) or n != len(dC) or n < 3:
        raise DimensionMismatch("need matching d, r of length n >= 3")
    cycle = make_graph("cycle", n)
    if not is_arithmetical(cycle.adjacency, dC, rC):
        raise NotAStructure("(dC, rC) is not a structure on the cycle")
    total = sum(rC)
    for i, ri in enumerate(rC):
        if total % ri:
            raise DivisibilityViolation(
                f"r_{i + 1} = {ri} does not divide the rim sum {total}"
            )
    d = (1,) + tuple(dC[i] + total // rC[i] for i in range(n))
    r = (total,) + rC
    return _require_structure(make_graph("wheel", n).adjacency, d, r)


def cycle_to_wheel_lcm(rC, r0: int) -> ArithStructure:
    """Hub value r0 with lcm(r_i) | r0 and r0 | sum(r_i).

    The input rim order is preserved; rotations and reflections of the rim
    give further structures via the cyclic action.
    """
    rC = tuple(rC)
    n = len(rC)
    if n < 3:
        raise DimensionMismatch("need a rim of length >= 3")
    cycle = make_graph("cycle", n)
    if any(x < 1 for x in rC) or gcd(*rC) != 1:
        raise NotAStructure("rC is not an r-structure on the cycle")
    dC = d_from_r(cycle.adjacency, rC)
    if dC is None:
        raise NotAStructure("rC is not an r-structure on the cycle")
    p = lcm(*rC)
    if r0 < 1 or r0 % p:
        raise PreconditionViolation(f"lcm of rim entries ({p}) must divide r0 ({r0})")
    total = sum(rC)
    if total % r0:
        raise PreconditionViolation(f"r0 ({r0}) must divide the rim sum ({total})")
    d = (total // r0,) + tuple(r0 // rC[i] + dC[i] for i in range(n))
    r = (r0,) + rC
    return _require_structure(make_graph("wheel", n).adjacency, d, r)


def cycle_to_wheel_affine(dC, rC, a: int) -> ArithStructure:
    """Promote a constant-residue cycle pair: L(C_n, dC) rC = a * 1, a | sum(rC)."""
    dC, rC = tuple(dC), tuple(rC)
    n = len(rC)
    if n != len(dC) or n < 3:
        raise DimensionMismatch("need matching d, r of length n >= 3")
    if any(x < 1 for x in dC) or any(x < 1 for x in rC):
        raise PreconditionViolation("dC and rC must have positive entries")
    cycle = make_graph("cycle", n)
    residue = laplacian_like(cycle.adjacency, dC).matvec(rC)
    if any(x != a for x in residue):
        raise AffineResidueNotConstant(
            f"L(C_n, d) r = {residue} is not the constant vector {a}*1"
        )
    total = sum(rC)
    if a < 1 or total % a:
        raise DivisibilityViolation(f"a ({a}) must be a positive divisor of sum(r) ({total})")
    g = gcd(a, *rC)
    d = (total // a,) + dC
    r = (a // g,) + tuple(x // g for x in rC)
    return _require_structure(make_graph("wheel", n).adjacency, d, r)


def wheel_unit_structure(n: int) -> ArithStructure:
    """r = (n, 1, ..., 1), d = (1, n+2, ..., n+2) on the n-wheel."""
    if n < 3:
        raise PreconditionViolation("wheels need n >= 3")
    d = (1,) + (n + 2,) * n
    r = (n,) + (1,) * n
    return _require_structure(make_graph("wheel", n).adjacency, d, r)


# ---------------------------------------------------------------------------
# wheel extension and the cyclic action
# ---------------------------------------------------------------------------


def wheel_extend(dW, rW, n: int | None = None) -> ArithStructure:
    """Extend an n-wheel structure to the (n+1)-wheel.

    The new rim vertex is inserted between v1 and vn (adjacent to v0, v1, vn;
    the rim edge v1-vn is removed), carries r = r0 + r1 + rn, and the old
    hub/v1/vn degrees grow by (r0+r1+rn)/r0, (r0+r1)/r1, (r0+rn)/rn.
    Requires r0 | r1 + rn, r1 | r0 and rn | r0.
    """
    dW, rW = tuple(dW), tuple(rW)
    if n is None:
        n = len(rW) - 1
    if len(rW) != n + 1 or len(dW) != n + 1 or n < 3:
        raise DimensionMismatch("need wheel vectors of length n + 1 with n >= 3")
    wheel = make_graph("wheel", n)
    if not is_arithmetical(wheel.adjacency, dW, rW):
        raise NotAStructure("(dW, rW) is not a structure on the wheel")
    r0, r1, rn = rW[0], rW[1], rW[n]
    if (r1 + rn) % r0:
        raise PreconditionViolation(f"r0 ({r0}) must divide r1 + rn ({r1 + rn})")
    if r0 % r1:
        raise PreconditionViolation(f"r1 ({r1}) must divide r0 ({r0})")
    if r0 % rn:
        raise PreconditionViolation(f"rn ({rn}) must divide r0 ({r0})")

    new_r = r0 + r1 + rn
    d = list(dW)
    d[0] = dW[0] + new_r // r0
    d[1] = dW[1] + (r0 + r1) // r1
    d[n] = dW[n] + (r0 + rn) // rn
    d.append(1)
    r = list(rW) + [new_r]
    return _require_structure(make_graph("wheel", n + 1).adjacency, d, r)


def zn_orbit(n: int, r) -> tuple[tuple[int, ...], ...]:
    """Orbit of an r-structure on the n-wheel under rim rotation.

    The action fixes the hub value and cyclically rotates the rim; every
    element of the orbit is validated.  Returned sorted; the orbit size
    divides n.
    """
    r = tuple(r)
    if len(r) != n + 1 or n < 3:
        raise DimensionMismatch("need an r-vector of length n + 1 with n >= 3")
    wheel = make_graph("wheel", n)
    if gcd(*r) != 1 or any(x < 1 for x in r) or d_from_r(wheel.adjacency, r) is None:
        raise NotAStructure(f"{r} is not an r-structure on the {n}-wheel")
    hub, rim = r[0], r[1:]
    orbit = {(hub,) + rim[c:] + rim[:c] for c in range(n)}
    for elem in orbit:
        if d_from_r(wheel.adjacency, elem) is None:
            raise AssertionError(f"rotation left the structure set: {elem}")
    return tuple(sorted(orbit))
