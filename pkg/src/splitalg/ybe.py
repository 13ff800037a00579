"""Tensor equations: the S-equation in a pre-Lie algebra and the LD-equation
in an L-dendriform algebra, their permutation variants, the equivalences with
O-operator conditions, and solution builders.

Residuals are the exact left-hand side of the cited equation, assembled from
slot products; the sub-adjacent bracket and the horizontal/vertical products
are always recomputed from the supplied tables and never trusted from a
class tag, so residuals stay meaningful on invalid inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import CheckReport, check_ldend_cocycle
from .core import (
    Algebra,
    DimensionMismatch,
    LinearMap,
    PreconditionFailed,
    Tensor2,
    Tensor3,
    basis_vector,
    exchange,
    form_from_invertible_map,
    rename_ops,
    slot_product,
    tensor2,
    tensor_to_map,
    vec_add,
    vec_sub,
)
from .functors import horizontal_prelie, sub_adjacent_lie, vertical_prelie
from .operators import check_o_ldend, check_o_prelie
from .representations import (
    LDendModule,
    PreLieModule,
    dual_ldend_module,
    dual_prelie_module,
    left_family,
    regular_ldend_module,
    right_family,
    semidirect_ldend,
    semidirect_prelie,
)

__all__ = [
    "LD_VARIANTS",
    "s_residual",
    "SEquivalenceReport",
    "s_equivalence_check",
    "ld_residual",
    "LDEquivalenceReport",
    "ld_equivalence_check",
    "build_s_solution",
    "build_ld_solution",
    "canonical_double_solution",
    "FormCriterionReport",
    "form_criterion_check",
    "embed_operator",
]


def _negf(family):
    return tuple(-m for m in family)


def _check_dims(alg: Algebra, r: Tensor2):
    if r.dim != alg.dim:
        raise DimensionMismatch("tensor dimension does not match the algebra")


# ---------------------------------------------------------------------------
# S-equation

def s_residual(alg: Algebra, r: Tensor2) -> Tensor3:
    """-r12 o r13 + r12 o r23 + [r13, r23], the bracket taken in the
    sub-adjacent Lie algebra of the circ table."""
    _check_dims(alg, r)
    lie = sub_adjacent_lie(alg)
    both = Algebra(alg.dim, {"circ": alg.op("circ"), "bracket": lie.op("bracket")})
    t1 = slot_product(r, (1, 2), r, (1, 3), both, "circ")
    t2 = slot_product(r, (1, 2), r, (2, 3), both, "circ")
    t3 = slot_product(r, (1, 3), r, (2, 3), both, "bracket")
    return (-t1) + t2 + t3


def _s_alternate_residual(alg: Algebra, r: Tensor2) -> Tensor3:
    """r13 o r23 + [r12, r23] - r13 o r12  (the equivalent displayed form)."""
    lie = sub_adjacent_lie(alg)
    both = Algebra(alg.dim, {"circ": alg.op("circ"), "bracket": lie.op("bracket")})
    t1 = slot_product(r, (1, 3), r, (2, 3), both, "circ")
    t2 = slot_product(r, (1, 2), r, (2, 3), both, "bracket")
    t3 = slot_product(r, (1, 3), r, (1, 2), both, "circ")
    return t1 + t2 + (-t3)


@dataclass(frozen=True)
class SEquivalenceReport:
    """Simultaneous-vanishing report for a symmetric tensor: the S-equation
    residual, its alternate displayed form, and the O-operator condition of
    the tensor's map for the dual of the regular module."""

    residual: Tensor3
    alternate: Tensor3
    operator: CheckReport

    @property
    def residual_zero(self) -> bool:
        return self.residual.is_zero

    @property
    def alternate_zero(self) -> bool:
        return self.alternate.is_zero

    @property
    def operator_zero(self) -> bool:
        return self.operator.passed

    @property
    def all_vanish(self) -> bool:
        return self.residual_zero and self.alternate_zero and self.operator_zero

    @property
    def consistent(self) -> bool:
        return self.residual_zero == self.alternate_zero == self.operator_zero


def s_equivalence_check(alg: Algebra, r: Tensor2) -> SEquivalenceReport:
    if not r.is_symmetric:
        raise PreconditionFailed("the S-equation equivalence needs a symmetric tensor")
    _check_dims(alg, r)
    dual = dual_prelie_module(
        PreLieModule(alg, alg.dim, left_family(alg, "circ"), right_family(alg, "circ"))
    )
    return SEquivalenceReport(
        residual=s_residual(alg, r),
        alternate=_s_alternate_residual(alg, r),
        operator=check_o_prelie(tensor_to_map(r), dual),
    )


# ---------------------------------------------------------------------------
# LD-equation and its permutation variants

#: equation id -> tuple of (sign, left_slots, right_slots, op) summands
LD_VARIANTS = {
    "eq-4.8": (
        (1, (1, 3), (2, 3), "circ"),
        (1, (1, 2), (2, 3), "bullet"),
        (-1, (1, 2), (1, 3), "tri_l"),
    ),
    "eq-4.9": (
        (1, (1, 3), (2, 3), "tri_r"),
        (1, (1, 2), (2, 3), "bracket"),
        (-1, (1, 3), (1, 2), "tri_r"),
    ),
    "eq-4.10": (
        (1, (2, 3), (1, 3), "tri_l"),
        (-1, (1, 3), (1, 2), "circ"),
        (-1, (2, 3), (1, 2), "bullet"),
    ),
    "eq-4.11": (
        (1, (2, 3), (1, 3), "circ"),
        (-1, (1, 2), (1, 3), "bullet"),
        (1, (1, 2), (2, 3), "tri_l"),
    ),
    "eq-4.12": (
        (1, (2, 3), (1, 2), "circ"),
        (1, (1, 3), (1, 2), "bullet"),
        (1, (1, 3), (2, 3), "tri_l"),
    ),
    "eq-4.13": (
        (1, (1, 2), (2, 3), "circ"),
        (1, (1, 3), (2, 3), "bullet"),
        (1, (1, 3), (1, 2), "tri_l"),
    ),
    "eq-4.14": (
        (1, (1, 2), (1, 3), "circ"),
        (-1, (2, 3), (1, 3), "bullet"),
        (1, (2, 3), (1, 2), "tri_l"),
    ),
}

_VARIANT_ALIASES = {
    "main": "eq-4.8",
    "aux-a": "eq-4.9",
    "aux-b": "eq-4.10",
    "p1": "eq-4.11",
    "p2": "eq-4.12",
    "p3": "eq-4.13",
    "p4": "eq-4.14",
}


def _ld_carrier(alg: Algebra) -> Algebra:
    """The L-dendriform tables together with their derived vertical,
    horizontal and bracket products, for slot-product consumption."""
    tr = alg.op("tri_r")
    tl = alg.op("tri_l")
    vert = vertical_prelie(alg)
    hor = horizontal_prelie(alg)
    lie = sub_adjacent_lie(vert)
    return Algebra(
        alg.dim,
        {
            "tri_r": tr,
            "tri_l": tl,
            "circ": vert.op("circ"),
            "bullet": hor.op("bullet"),
            "bracket": lie.op("bracket"),
        },
    )


def ld_residual(alg: Algebra, r: Tensor2, variant: str = "eq-4.8") -> Tensor3:
    """Exact residual of the selected LD-equation variant (an equation id
    eq-4.8 .. eq-4.14 or one of the aliases main, aux-a, aux-b, p1..p4)."""
    key = _VARIANT_ALIASES.get(variant, variant)
    if key not in LD_VARIANTS:
        known = sorted(LD_VARIANTS) + sorted(_VARIANT_ALIASES)
        raise ValueError(f"unknown LD-equation variant {variant!r} (choose from {known})")
    _check_dims(alg, r)
    carrier = _ld_carrier(alg)
    total = None
    for sign, left_slots, right_slots, op in LD_VARIANTS[key]:
        term = slot_product(r, left_slots, r, right_slots, carrier, op)
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    return total


@dataclass(frozen=True)
class LDEquivalenceReport:
    """The four equivalent conditions for a skew tensor (the LD-equation
    residual and three O-operator conditions) plus the two auxiliary
    residuals whose one-way implication is part of the statement."""

    residual: Tensor3
    operator_ldend: CheckReport
    operator_vertical: CheckReport
    operator_horizontal: CheckReport
    aux_a: Tensor3
    aux_b: Tensor3

    @property
    def residual_zero(self) -> bool:
        return self.residual.is_zero

    @property
    def operator_ldend_zero(self) -> bool:
        return self.operator_ldend.passed

    @property
    def operator_vertical_zero(self) -> bool:
        return self.operator_vertical.passed

    @property
    def operator_horizontal_zero(self) -> bool:
        return self.operator_horizontal.passed

    @property
    def all_vanish(self) -> bool:
        return (
            self.residual_zero
            and self.operator_ldend_zero
            and self.operator_vertical_zero
            and self.operator_horizontal_zero
        )

    @property
    def consistent(self) -> bool:
        flags = (
            self.residual_zero,
            self.operator_ldend_zero,
            self.operator_vertical_zero,
            self.operator_horizontal_zero,
        )
        return len(set(flags)) == 1

    @property
    def aux_implication(self) -> bool:
        """aux-b vanishing implies aux-a vanishing."""
        return self.aux_a.is_zero or not self.aux_b.is_zero


def ld_equivalence_check(alg: Algebra, r: Tensor2) -> LDEquivalenceReport:
    if not r.is_skew:
        raise PreconditionFailed("the LD-equation equivalence needs a skew tensor")
    _check_dims(alg, r)
    n = alg.dim
    T = tensor_to_map(r)

    lr = left_family(alg, "tri_r")
    ll = left_family(alg, "tri_l")
    rl = right_family(alg, "tri_l")

    m_ldend = dual_ldend_module(regular_ldend_module(alg))
    vert = vertical_prelie(alg)
    hor = rename_ops(horizontal_prelie(alg), {"bullet": "circ"})
    m_vert = dual_prelie_module(PreLieModule(vert, n, lr, _negf(ll)))
    m_hor = dual_prelie_module(PreLieModule(hor, n, lr, rl))

    return LDEquivalenceReport(
        residual=ld_residual(alg, r, "eq-4.8"),
        operator_ldend=check_o_ldend(T, m_ldend),
        operator_vertical=check_o_prelie(T, m_vert),
        operator_horizontal=check_o_prelie(T, m_hor),
        aux_a=ld_residual(alg, r, "eq-4.9"),
        aux_b=ld_residual(alg, r, "eq-4.10"),
    )


# ---------------------------------------------------------------------------
# solution builders

def embed_operator(T: LinearMap) -> Tensor2:
    """Identify T in Hom(V, A) with  sum_i T(v_i) (x) v_i*  inside the
    (rows+cols)^2 tensor square: an upper-right block equal to T's matrix."""
    dim = T.rows + T.cols
    sparse = []
    for a in range(T.rows):
        for i in range(T.cols):
            if T.entries[a][i]:
                sparse.append((a + 1, T.rows + i + 1, T.entries[a][i]))
    return tensor2(dim, sparse)


def build_s_solution(m: PreLieModule, T: LinearMap) -> tuple[Algebra, Tensor2]:
    """The semidirect pre-Lie algebra on A + V* through the dual module,
    together with the symmetric tensor T + sigma(T)."""
    if T.rows != m.base.dim or T.cols != m.vdim:
        raise DimensionMismatch("operator shape does not match the module")
    hat = semidirect_prelie(dual_prelie_module(m))
    t = embed_operator(T)
    return hat, t + exchange(t)


def build_ld_solution(m: LDendModule, T: LinearMap) -> tuple[Algebra, Tensor2]:
    """The semidirect L-dendriform algebra on A + V* through the dual module,
    together with the skew tensor T - sigma(T)."""
    if T.rows != m.base.dim or T.cols != m.vdim:
        raise DimensionMismatch("operator shape does not match the module")
    big = semidirect_ldend(dual_ldend_module(m))
    t = embed_operator(T)
    return big, t - exchange(t)


def canonical_double_solution(alg: Algebra) -> tuple[Algebra, Algebra, Tensor2]:
    """For an L-dendriform algebra of dimension n, both 2n-dimensional
    semidirect pre-Lie algebras (vertical and horizontal, each with its dual
    regular-action module) in which the canonical symmetric tensor
    sum_i (e_i (x) e_i* + e_i* (x) e_i)  solves the S-equation."""
    n = alg.dim
    lr = left_family(alg, "tri_r")
    ll = left_family(alg, "tri_l")
    rl = right_family(alg, "tri_l")
    vert = vertical_prelie(alg)
    hor = rename_ops(horizontal_prelie(alg), {"bullet": "circ"})
    hat_vert = semidirect_prelie(dual_prelie_module(PreLieModule(vert, n, lr, _negf(ll))))
    hat_hor = semidirect_prelie(dual_prelie_module(PreLieModule(hor, n, lr, rl)))
    r = tensor2(
        2 * n,
        [(i + 1, n + i + 1, 1) for i in range(n)]
        + [(n + i + 1, i + 1, 1) for i in range(n)],
    )
    return hat_vert, hat_hor, r


# ---------------------------------------------------------------------------
# invertible solutions and 2-cocycles

@dataclass(frozen=True)
class FormCriterionReport:
    """For skew invertible r: (a) the LD-equation residual, (b) the induced
    form's 2-cocycle identity, (c) the companion bracket identity; the
    statement gives (a) iff (b) and (b) implies (c)."""

    residual: Tensor3
    cocycle: CheckReport
    companion: CheckReport

    @property
    def residual_zero(self) -> bool:
        return self.residual.is_zero

    @property
    def cocycle_zero(self) -> bool:
        return self.cocycle.passed

    @property
    def companion_zero(self) -> bool:
        return self.companion.passed

    @property
    def equivalence_holds(self) -> bool:
        return self.residual_zero == self.cocycle_zero

    @property
    def implication_holds(self) -> bool:
        return self.companion_zero or not self.cocycle_zero


def _check_companion_identity(alg: Algebra, B) -> CheckReport:
    """B(x |> y, z) = -B(y, [x, z]) - B(x, z |> y)  over all basis triples."""
    from .axioms import _run

    tr = alg.op("tri_r")
    tl = alg.op("tri_l")
    n = alg.dim
    e = lambda m: basis_vector(n, m)

    def bracket_vec(i, k):
        bullet_ik = vec_add(tr[i][k], tl[i][k])
        bullet_ki = vec_add(tr[k][i], tl[k][i])
        return vec_sub(bullet_ik, bullet_ki)

    def eq_4_15(i, j, k):
        lhs = B.evaluate(tr[i][j], e(k))
        rhs = -B.evaluate(e(j), bracket_vec(i, k)) - B.evaluate(e(i), tr[k][j])
        return (lhs - rhs,)

    return _run([("eq-4.15", 3, eq_4_15)], n)


def form_criterion_check(alg: Algebra, r: Tensor2) -> FormCriterionReport:
    if not r.is_skew:
        raise PreconditionFailed("the form criterion needs a skew tensor")
    _check_dims(alg, r)
    T = tensor_to_map(r)
    if not T.is_invertible:
        raise PreconditionFailed("the form criterion needs an invertible tensor")
    B = form_from_invertible_map(T)
    return FormCriterionReport(
        residual=ld_residual(alg, r, "eq-4.8"),
        cocycle=check_ldend_cocycle(alg, B),
        companion=_check_companion_identity(alg, B),
    )
