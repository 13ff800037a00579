"""Rota-Baxter operators and O-operators, and every structure they induce.

Constructors enforce their preconditions and refuse to emit unverified
tables, since the constructions are only guaranteed valid under their
hypotheses; pass ``force=True`` to experiment anyway.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .axioms import CheckReport, _run
from .core import (
    Algebra,
    DimensionMismatch,
    LinearMap,
    PreconditionFailed,
    basis_vector,
    family_contract,
    rat,
    table_apply,
    vec_add,
    vec_sub,
)
from .representations import LDendModule, PreLieModule, left_family

__all__ = [
    "SearchSpaceTooLarge",
    "adjoint_family",
    "check_o_prelie",
    "check_rota_baxter_prelie",
    "check_o_lie",
    "check_o_ldend",
    "ldend_from_o_prelie",
    "ldend_from_rb",
    "prelie_from_o_lie",
    "ldend_from_commuting_pair",
    "compatible_ldend_from_invertible_o",
    "ldend_from_2cocycle",
    "search_rb",
]


class SearchSpaceTooLarge(ValueError):
    """An exhaustive search was asked to enumerate more candidates than its cap."""


def adjoint_family(lie: Algebra) -> tuple[LinearMap, ...]:
    """ad(e_i) matrices of a bracket table: ad(x)y = [x, y]."""
    return left_family(lie, "bracket")


def _require_shape(T: LinearMap, rows: int, cols: int, what: str):
    if T.rows != rows or T.cols != cols:
        raise DimensionMismatch(f"{what}: expected a {rows}x{cols} map, got {T.rows}x{T.cols}")


# ---------------------------------------------------------------------------
# operator checks

def check_o_prelie(T: LinearMap, m: PreLieModule) -> CheckReport:
    """T(u) o T(v) = T(l(T(u))v + r(T(v))u)  over all module basis pairs."""
    _require_shape(T, m.base.dim, m.vdim, "O-operator")
    circ = m.base.op("circ")

    def eq_2_10(u, v):
        tu, tv = T.column(u), T.column(v)
        lhs = table_apply(circ, tu, tv)
        arg = vec_add(family_contract(m.l, tu).column(v), family_contract(m.r, tv).column(u))
        return vec_sub(lhs, T.apply(arg))

    return _run([("eq-2.10", 2, eq_2_10)], m.vdim)


def check_rota_baxter_prelie(R: LinearMap, alg: Algebra) -> CheckReport:
    """Weight-zero Rota-Baxter identity R(x) o R(y) = R(R(x) o y + x o R(y))."""
    _require_shape(R, alg.dim, alg.dim, "Rota-Baxter operator")
    circ = alg.op("circ")
    n = alg.dim

    def eq_2_11(i, j):
        rx, ry = R.column(i), R.column(j)
        lhs = table_apply(circ, rx, ry)
        arg = vec_add(
            table_apply(circ, rx, basis_vector(n, j)),
            table_apply(circ, basis_vector(n, i), ry),
        )
        return vec_sub(lhs, R.apply(arg))

    return _run([("eq-2.11", 2, eq_2_11)], n)


def check_o_lie(T: LinearMap, lie: Algebra, rho: Sequence[LinearMap]) -> CheckReport:
    """[T(u), T(v)] = T(rho(T(u))v - rho(T(v))u)  over all basis pairs."""
    vdim = rho[0].rows if rho else 0
    if len(rho) != lie.dim:
        raise DimensionMismatch("representation family must match the Lie dimension")
    _require_shape(T, lie.dim, vdim, "O-operator")
    bracket = lie.op("bracket")

    def eq_3_13(u, v):
        tu, tv = T.column(u), T.column(v)
        lhs = table_apply(bracket, tu, tv)
        arg = vec_sub(family_contract(rho, tu).column(v), family_contract(rho, tv).column(u))
        return vec_sub(lhs, T.apply(arg))

    return _run([("eq-3.13", 2, eq_3_13)], vdim)


def check_o_ldend(T: LinearMap, m: LDendModule) -> CheckReport:
    """Both displayed O-operator identities of an L-dendriform module."""
    _require_shape(T, m.base.dim, m.vdim, "O-operator")
    tr = m.base.op("tri_r")
    tl = m.base.op("tri_l")

    def residual(table, lfam, rfam, u, v):
        tu, tv = T.column(u), T.column(v)
        lhs = table_apply(table, tu, tv)
        arg = vec_add(
            family_contract(lfam, tu).column(v), family_contract(rfam, tv).column(u)
        )
        return vec_sub(lhs, T.apply(arg))

    def eq_4_7_r(u, v):
        return residual(tr, m.l_r, m.r_r, u, v)

    def eq_4_7_l(u, v):
        return residual(tl, m.l_l, m.r_l, u, v)

    return _run([("eq-4.7-tri_r", 2, eq_4_7_r), ("eq-4.7-tri_l", 2, eq_4_7_l)], m.vdim)


# ---------------------------------------------------------------------------
# induced structures

def _gate(report: CheckReport, force: bool, what: str):
    if not report.passed and not force:
        first = report.failures[0]
        raise PreconditionFailed(
            f"{what} fails {first.identity} at {first.indices}: "
            f"residual {[str(x) for x in first.residual]}"
        )


def ldend_from_o_prelie(
    T: LinearMap, m: PreLieModule, force: bool = False
) -> tuple[Algebra, Algebra | None]:
    """L-dendriform structure  u |> v = l(T(u))v,  u <| v = -r(T(u))v  on V.

    Returns the V-structure and, when T has full column rank, the induced
    structure on the image T(V) in the basis (T(v_1), ..., T(v_m)), whose
    tables coincide with the V-structure because T intertwines the products.
    """
    _gate(check_o_prelie(T, m), force, "O-operator candidate")
    v = m.vdim
    tri_r = tuple(
        tuple(family_contract(m.l, T.column(u)).column(w) for w in range(v))
        for u in range(v)
    )
    tri_l = tuple(
        tuple(tuple(-x for x in family_contract(m.r, T.column(u)).column(w)) for w in range(v))
        for u in range(v)
    )
    on_v = Algebra(v, {"tri_r": tri_r, "tri_l": tri_l}, "ldend_from_o_prelie")
    on_image = None
    if T.rank() == v:
        on_image = Algebra(v, dict(on_v.ops), "ldend_from_o_prelie[image]")
    return on_v, on_image


def ldend_from_rb(R: LinearMap, alg: Algebra, force: bool = False) -> Algebra:
    """x |> y = R(x) o y,  x <| y = -(y o R(x))  from a Rota-Baxter operator."""
    _gate(check_rota_baxter_prelie(R, alg), force, "Rota-Baxter candidate")
    circ = alg.op("circ")
    n = alg.dim
    tri_r = tuple(
        tuple(table_apply(circ, R.column(i), basis_vector(n, j)) for j in range(n))
        for i in range(n)
    )
    tri_l = tuple(
        tuple(
            tuple(-x for x in table_apply(circ, basis_vector(n, j), R.column(i)))
            for j in range(n)
        )
        for i in range(n)
    )
    tag = f"ldend_from_rb({alg.class_tag})" if alg.class_tag else "ldend_from_rb"
    return Algebra(n, {"tri_r": tri_r, "tri_l": tri_l}, tag)


def prelie_from_o_lie(R: LinearMap, lie: Algebra, force: bool = False) -> Algebra:
    """x o y = [R(x), y]  from an O-operator for the adjoint representation."""
    _gate(check_o_lie(R, lie, adjoint_family(lie)), force, "O-operator candidate")
    bracket = lie.op("bracket")
    n = lie.dim
    circ = tuple(
        tuple(table_apply(bracket, R.column(i), basis_vector(n, j)) for j in range(n))
        for i in range(n)
    )
    tag = f"prelie_from_o_lie({lie.class_tag})" if lie.class_tag else "prelie_from_o_lie"
    return Algebra(n, {"circ": circ}, tag)


def ldend_from_commuting_pair(
    R1: LinearMap, R2: LinearMap, lie: Algebra, force: bool = False
) -> Algebra:
    """x |> y = [R1(R2(x)), y],  x <| y = [R2(x), R1(y)]  from a commuting
    pair of O-operators for the adjoint representation."""
    ad = adjoint_family(lie)
    _gate(check_o_lie(R1, lie, ad), force, "first O-operator candidate")
    _gate(check_o_lie(R2, lie, ad), force, "second O-operator candidate")
    if R1 @ R2 != R2 @ R1 and not force:
        raise PreconditionFailed("the two operators do not commute")
    bracket = lie.op("bracket")
    n = lie.dim
    r12 = R1 @ R2
    tri_r = tuple(
        tuple(table_apply(bracket, r12.column(i), basis_vector(n, j)) for j in range(n))
        for i in range(n)
    )
    tri_l = tuple(
        tuple(table_apply(bracket, R2.column(i), R1.column(j)) for j in range(n))
        for i in range(n)
    )
    tag = f"ldend_from_commuting_pair({lie.class_tag})" if lie.class_tag else "ldend_from_commuting_pair"
    return Algebra(n, {"tri_r": tri_r, "tri_l": tri_l}, tag)


def compatible_ldend_from_invertible_o(
    T: LinearMap, m: PreLieModule, force: bool = False
) -> Algebra:
    """Compatible L-dendriform structure on the base of an invertible
    O-operator:  x |> y = T(l(x) T^-1 y),  x <| y = -T(r(x) T^-1 y)."""
    if not T.is_square or not T.is_invertible:
        raise PreconditionFailed("the O-operator must be square and invertible")
    if T.rows != m.base.dim or m.vdim != m.base.dim:
        raise DimensionMismatch("invertible O-operator requires dim V = dim A")
    _gate(check_o_prelie(T, m), force, "O-operator candidate")
    t_inv = T.inverse()
    n = m.base.dim
    tri_r = tuple(
        tuple(T.apply(family_contract(m.l, basis_vector(n, a)).apply(t_inv.column(b))) for b in range(n))
        for a in range(n)
    )
    tri_l = tuple(
        tuple(
            tuple(-x for x in T.apply(family_contract(m.r, basis_vector(n, a)).apply(t_inv.column(b))))
            for b in range(n)
        )
        for a in range(n)
    )
    return Algebra(n, {"tri_r": tri_r, "tri_l": tri_l}, "compatible_ldend_from_invertible_o")


def ldend_from_2cocycle(alg: Algebra, B, force: bool = False) -> Algebra:
    """Compatible L-dendriform structure from a nondegenerate symmetric
    2-cocycle:  B(x|>y, z) = -B(y, [x,z])  and  B(x<|y, z) = -B(y, z o x),
    solved for each product pair via the inverse Gram matrix."""
    from .axioms import check_prelie_cocycle  # local import avoids a cycle

    circ = alg.op("circ")
    n = alg.dim
    if B.dim != n:
        raise DimensionMismatch("form dimension does not match the algebra")
    if not B.is_symmetric and not force:
        raise PreconditionFailed("the 2-cocycle must be symmetric")
    gram = LinearMap(n, n, B.gram)
    if not gram.is_invertible:
        raise PreconditionFailed("the 2-cocycle must be nondegenerate")
    _gate(check_prelie_cocycle(alg, B), force, "2-cocycle candidate")

    # each product vector w solves G^T w = rhs; computed once via the inverse
    solver = gram.transpose().inverse()
    e = lambda i: basis_vector(n, i)

    def bracket_vec(i, k):
        return vec_sub(circ[i][k], circ[k][i])

    tri_r_rows = []
    tri_l_rows = []
    for a in range(n):
        row_r = []
        row_l = []
        for b in range(n):
            rhs_r = tuple(-B.evaluate(e(b), bracket_vec(a, z)) for z in range(n))
            rhs_l = tuple(-B.evaluate(e(b), table_apply(circ, e(z), e(a))) for z in range(n))
            row_r.append(solver.apply(rhs_r))
            row_l.append(solver.apply(rhs_l))
        tri_r_rows.append(tuple(row_r))
        tri_l_rows.append(tuple(row_l))
    return Algebra(
        n,
        {"tri_r": tuple(tri_r_rows), "tri_l": tuple(tri_l_rows)},
        "ldend_from_2cocycle",
    )


# ---------------------------------------------------------------------------
# exhaustive fixture search

def search_rb(alg: Algebra, entry_set: Sequence, cap: int = 10**6) -> list[LinearMap]:
    """All square matrices with entries from ``entry_set`` that satisfy the
    weight-zero Rota-Baxter identity, in lexicographic (row-major) order of
    their entry tuples.  Exists to manufacture verified fixtures; exhaustive
    by design."""
    n = alg.dim
    values = sorted({rat(x) for x in entry_set})
    total = len(values) ** (n * n)
    if total > cap:
        raise SearchSpaceTooLarge(f"{total} candidates exceed the cap of {cap}")
    found = []
    for flat in itertools.product(values, repeat=n * n):
        R = LinearMap(n, n, tuple(flat[i * n:(i + 1) * n] for i in range(n)))
        if check_rota_baxter_prelie(R, alg).passed:
            found.append(R)
    return found
