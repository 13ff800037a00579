"""Modules over pre-Lie and L-dendriform algebras, duals, semidirect sums.

A module is stored extensionally as matrix families indexed by the base
algebra's basis, so linearity in the algebra argument is automatic and all
module identities reduce to exact matrix equalities over basis pairs.

Semidirect sums place base coordinates first and module coordinates second,
which fixes the block layout in file output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .axioms import CheckReport, _run
from .core import (
    Algebra,
    DimensionMismatch,
    LinearMap,
    Table,
    dual_rep,
    family_contract,
    vec_add,
    vec_sub,
)

__all__ = [
    "PreLieModule",
    "LDendModule",
    "left_family",
    "right_family",
    "regular_prelie_module",
    "regular_ldend_module",
    "check_prelie_module",
    "dual_prelie_module",
    "semidirect_prelie",
    "check_ldend_module",
    "dual_ldend_module",
    "semidirect_ldend",
]


def _check_family(family: Sequence[LinearMap], base_dim: int, vdim: int, name: str):
    if len(family) != base_dim:
        raise DimensionMismatch(f"family {name!r} must have one matrix per basis element")
    for m in family:
        if m.rows != vdim or m.cols != vdim:
            raise DimensionMismatch(f"family {name!r} matrices must be {vdim}x{vdim}")


@dataclass(frozen=True)
class PreLieModule:
    """Module data (l, r, V) over a pre-Lie algebra carried as op ``circ``."""

    base: Algebra
    vdim: int
    l: tuple[LinearMap, ...]
    r: tuple[LinearMap, ...]

    def __post_init__(self):
        self.base.op("circ")
        _check_family(self.l, self.base.dim, self.vdim, "l")
        _check_family(self.r, self.base.dim, self.vdim, "r")


@dataclass(frozen=True)
class LDendModule:
    """Module data (l_r, r_r, l_l, r_l, V) over an L-dendriform algebra."""

    base: Algebra
    vdim: int
    l_r: tuple[LinearMap, ...]
    r_r: tuple[LinearMap, ...]
    l_l: tuple[LinearMap, ...]
    r_l: tuple[LinearMap, ...]

    def __post_init__(self):
        self.base.op("tri_r")
        self.base.op("tri_l")
        for name in ("l_r", "r_r", "l_l", "r_l"):
            _check_family(getattr(self, name), self.base.dim, self.vdim, name)


def left_family(alg: Algebra, op: str) -> tuple[LinearMap, ...]:
    """Left multiplication operators L(e_i) of the named operation."""
    table = alg.op(op)
    n = alg.dim
    return tuple(
        LinearMap(n, n, tuple(tuple(table[i][j][k] for j in range(n)) for k in range(n)))
        for i in range(n)
    )


def right_family(alg: Algebra, op: str) -> tuple[LinearMap, ...]:
    """Right multiplication operators R(e_i):  R(e_i) e_j = e_j * e_i."""
    table = alg.op(op)
    n = alg.dim
    return tuple(
        LinearMap(n, n, tuple(tuple(table[j][i][k] for j in range(n)) for k in range(n)))
        for i in range(n)
    )


def _neg_family(family: Sequence[LinearMap]) -> tuple[LinearMap, ...]:
    return tuple(-m for m in family)


def regular_prelie_module(alg: Algebra) -> PreLieModule:
    """The regular module (L, R, A) of a pre-Lie algebra."""
    return PreLieModule(alg, alg.dim, left_family(alg, "circ"), right_family(alg, "circ"))


def regular_ldend_module(alg: Algebra) -> LDendModule:
    """The regular module (L_r, R_r, L_l, R_l, A) of an L-dendriform algebra."""
    return LDendModule(
        alg,
        alg.dim,
        left_family(alg, "tri_r"),
        right_family(alg, "tri_r"),
        left_family(alg, "tri_l"),
        right_family(alg, "tri_l"),
    )


# ---------------------------------------------------------------------------
# pre-Lie modules

def _flatten(m: LinearMap) -> tuple:
    return tuple(x for row in m.entries for x in row)


def check_prelie_module(m: PreLieModule) -> CheckReport:
    """Both module identities over all basis pairs, as matrix equalities.

    Residuals are the matrix difference of the two sides, flattened row-major.
    """
    circ = m.base.op("circ")
    l, r = m.l, m.r

    def at(family, coeffs):
        return family_contract(family, coeffs)

    def eq_2_5(i, j):
        lhs = l[i] @ l[j] - at(l, circ[i][j])
        rhs = l[j] @ l[i] - at(l, circ[j][i])
        return _flatten(lhs - rhs)

    def eq_2_6(i, j):
        lhs = l[i] @ r[j] - r[j] @ l[i]
        rhs = at(r, circ[i][j]) - r[j] @ r[i]
        return _flatten(lhs - rhs)

    return _run([("eq-2.5", 2, eq_2_5), ("eq-2.6", 2, eq_2_6)], m.base.dim)


def dual_prelie_module(m: PreLieModule) -> PreLieModule:
    """The dual module (l* - r*, -r*, V*)."""
    l_star = dual_rep(m.l)
    r_star = dual_rep(m.r)
    new_l = tuple(a - b for a, b in zip(l_star, r_star))
    new_r = _neg_family(r_star)
    return PreLieModule(m.base, m.vdim, new_l, new_r)


def semidirect_prelie(m: PreLieModule) -> Algebra:
    """Pre-Lie structure on A + V:  (x+u)(y+v) = x o y + l(x)v + r(y)u.

    Base coordinates come first, module coordinates second; V.V = 0.
    """
    n, v = m.base.dim, m.vdim
    dim = n + v
    circ = m.base.op("circ")
    dense = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                dense[i][j][k] = circ[i][j][k]
        for j in range(v):
            col = m.l[i].column(j)          # e_i . f_j
            for k in range(v):
                dense[i][n + j][n + k] = col[k]
    for i in range(v):
        for j in range(n):
            col = m.r[j].column(i)          # f_i . e_j
            for k in range(v):
                dense[n + i][j][n + k] = col[k]
    table = tuple(tuple(tuple(row) for row in plane) for plane in dense)
    tag = m.base.class_tag
    return Algebra(dim, {"circ": table}, f"semidirect_prelie({tag})" if tag else "semidirect_prelie")


# ---------------------------------------------------------------------------
# L-dendriform modules

def check_ldend_module(m: LDendModule) -> CheckReport:
    """The five module identities over all basis pairs, with the vertical,
    horizontal and bracket products recomputed from the base tables."""
    tr = m.base.op("tri_r")
    tl = m.base.op("tri_l")
    n = m.base.dim
    lr, rr, ll, rl = m.l_r, m.r_r, m.l_l, m.r_l

    def circ(i, j):
        return vec_sub(tr[i][j], tl[j][i])

    def bullet(i, j):
        return vec_add(tr[i][j], tl[i][j])

    def bracket(i, j):
        return vec_sub(bullet(i, j), bullet(j, i))

    def at(family, coeffs):
        return family_contract(family, coeffs)

    def comm(a, b):
        return a @ b - b @ a

    def eq_4_1(i, j):
        return _flatten(comm(lr[i], lr[j]) - at(lr, bracket(i, j)))

    def eq_4_2(i, j):
        return _flatten(comm(lr[i], ll[j]) - at(ll, circ(i, j)) - ll[j] @ ll[i])

    def eq_4_3(i, j):
        lhs = at(rr, tr[i][j])
        rhs = rr[j] @ rr[i] + rr[j] @ rl[i] + comm(lr[i], rr[j]) - rr[j] @ ll[i]
        return _flatten(lhs - rhs)

    def eq_4_4(i, j):
        lhs = at(rr, tl[i][j])
        rhs = rl[j] @ rr[i] + ll[i] @ rr[j] + comm(ll[i], rl[j])
        return _flatten(lhs - rhs)

    def eq_4_5(i, j):
        lhs = comm(lr[i], rl[j])
        rhs = at(rl, bullet(i, j)) - rl[j] @ rl[i]
        return _flatten(lhs - rhs)

    return _run(
        [
            ("eq-4.1", 2, eq_4_1),
            ("eq-4.2", 2, eq_4_2),
            ("eq-4.3", 2, eq_4_3),
            ("eq-4.4", 2, eq_4_4),
            ("eq-4.5", 2, eq_4_5),
        ],
        n,
    )


def dual_ldend_module(m: LDendModule) -> LDendModule:
    """The dual module (l_r* + l_l* - r_r* - r_l*,  r_r*,  r_r* - l_l*,
    -(r_r* + r_l*),  V*)."""
    lr_s = dual_rep(m.l_r)
    rr_s = dual_rep(m.r_r)
    ll_s = dual_rep(m.l_l)
    rl_s = dual_rep(m.r_l)
    new_lr = tuple(a + b - c - d for a, b, c, d in zip(lr_s, ll_s, rr_s, rl_s))
    new_rr = rr_s
    new_ll = tuple(a - b for a, b in zip(rr_s, ll_s))
    new_rl = tuple(-(a + b) for a, b in zip(rr_s, rl_s))
    return LDendModule(m.base, m.vdim, new_lr, new_rr, new_ll, new_rl)


def semidirect_ldend(m: LDendModule) -> Algebra:
    """L-dendriform structure on A + V from the four action families."""
    n, v = m.base.dim, m.vdim
    dim = n + v

    def block(table: Table, lfam, rfam) -> Table:
        dense = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    dense[i][j][k] = table[i][j][k]
            for j in range(v):
                col = lfam[i].column(j)
                for k in range(v):
                    dense[i][n + j][n + k] = col[k]
        for i in range(v):
            for j in range(n):
                col = rfam[j].column(i)
                for k in range(v):
                    dense[n + i][j][n + k] = col[k]
        return tuple(tuple(tuple(row) for row in plane) for plane in dense)

    ops = {
        "tri_r": block(m.base.op("tri_r"), m.l_r, m.r_r),
        "tri_l": block(m.base.op("tri_l"), m.l_l, m.r_l),
    }
    tag = m.base.class_tag
    return Algebra(dim, ops, f"semidirect_ldend({tag})" if tag else "semidirect_ldend")
