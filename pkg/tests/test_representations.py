"""Module checks, duals and semidirect sums over pre-Lie and L-dendriform
algebras, including both directions of the module/semidirect equivalences."""

import pytest

import splitalg as sa
from splitalg.representations import (
    left_family,
    regular_ldend_module,
    regular_prelie_module,
    right_family,
)


def neg(family):
    return tuple(-m for m in family)


def zeros(n, count):
    return tuple(sa.LinearMap.zero(n, n) for _ in range(count))


# ---------------------------------------------------------------------------
# pre-Lie modules

def test_zero_prelie_module_passes(p2):
    m = sa.PreLieModule(p2, 2, zeros(2, 2), zeros(2, 2))
    assert sa.check_prelie_module(m).passed


def test_regular_module_passes(p2):
    assert sa.check_prelie_module(regular_prelie_module(p2)).passed


def test_left_action_only_module_passes(p2):
    # (l, 0): the second identity collapses and the first is the operator
    # form of the defining identity, so it must pass
    m = sa.PreLieModule(p2, 2, left_family(p2, "circ"), zeros(2, 2))
    assert sa.check_prelie_module(m).passed


def test_invalid_families_fail(p2):
    bad = (sa.linmap([[0, 1], [0, 0]]), sa.linmap([[0, 0], [1, 0]]))
    m = sa.PreLieModule(p2, 2, bad, zeros(2, 2))
    report = sa.check_prelie_module(m)
    assert not report.passed


def test_module_shape_validation(p2):
    with pytest.raises(sa.DimensionMismatch):
        sa.PreLieModule(p2, 2, (sa.LinearMap.identity(2),), zeros(2, 2))
    with pytest.raises(sa.DimensionMismatch):
        sa.PreLieModule(p2, 3, zeros(2, 2), zeros(2, 2))


def test_dual_prelie_module_zero(p2):
    m = sa.PreLieModule(p2, 2, zeros(2, 2), zeros(2, 2))
    d = sa.dual_prelie_module(m)
    assert d.l == zeros(2, 2) and d.r == zeros(2, 2)


def test_dual_prelie_module_frozen_matrices(p2):
    # negated transposes of the regular actions on P2
    d = sa.dual_prelie_module(regular_prelie_module(p2))
    assert d.l == (sa.linmap([[0, 0], [0, -1]]), sa.linmap([[0, 1], [0, 0]]))
    assert d.r == (sa.linmap([[1, 0], [0, 0]]), sa.linmap([[0, 1], [0, 0]]))


def test_dual_prelie_module_is_involution(p2):
    m = regular_prelie_module(p2)
    dd = sa.dual_prelie_module(sa.dual_prelie_module(m))
    assert dd.l == m.l and dd.r == m.r


def test_dual_preserves_modulehood(p2):
    assert sa.check_prelie_module(sa.dual_prelie_module(regular_prelie_module(p2))).passed


def test_semidirect_prelie_zero(z2):
    m = sa.PreLieModule(z2, 2, zeros(2, 2), zeros(2, 2))
    assert sa.semidirect_prelie(m) == sa.zero_algebra(4, ("circ",))


def test_semidirect_prelie_regular(p2):
    out = sa.semidirect_prelie(regular_prelie_module(p2))
    assert out.dim == 4
    assert sa.check_class(out, "pre_lie").passed


def test_semidirect_prelie_dual_regular(p2):
    out = sa.semidirect_prelie(sa.dual_prelie_module(regular_prelie_module(p2)))
    assert sa.check_class(out, "pre_lie").passed


def test_semidirect_block_layout(p2):
    # base coordinates first: the A.A block reproduces the base table and
    # the V.V block vanishes
    out = sa.semidirect_prelie(regular_prelie_module(p2))
    table = out.op("circ")
    base = p2.op("circ")
    for i in range(2):
        for j in range(2):
            assert table[i][j][:2] == base[i][j]
            assert table[2 + i][2 + j] == (0, 0, 0, 0)


def test_module_iff_semidirect_pre_lie(p2):
    # failing module data yields a semidirect table failing the class check,
    # and passing module data yields a passing one
    good = regular_prelie_module(p2)
    assert sa.check_prelie_module(good).passed
    assert sa.check_class(sa.semidirect_prelie(good), "pre_lie").passed

    bad_fams = (sa.linmap([[0, 1], [0, 0]]), sa.linmap([[0, 0], [1, 0]]))
    bad = sa.PreLieModule(p2, 2, bad_fams, zeros(2, 2))
    assert not sa.check_prelie_module(bad).passed
    assert not sa.check_class(sa.semidirect_prelie(bad), "pre_lie").passed


# ---------------------------------------------------------------------------
# L-dendriform modules

def test_zero_ldend_module_passes(ld2):
    z = zeros(2, 2)
    assert sa.check_ldend_module(sa.LDendModule(ld2, 2, z, z, z, z)).passed


def test_regular_ldend_module_passes(ld2):
    assert sa.check_ldend_module(regular_ldend_module(ld2)).passed


def test_broken_ldend_family_fails(ld2):
    # replace l_r by matrices that are not a bracket representation
    m = regular_ldend_module(ld2)
    bad_lr = (sa.linmap([[0, 1], [0, 0]]), sa.linmap([[0, 0], [1, 0]]))
    broken = sa.LDendModule(ld2, 2, bad_lr, m.r_r, m.l_l, m.r_l)
    report = sa.check_ldend_module(broken)
    assert not report.passed
    first = report.failures[0]
    assert first.identity == "eq-4.1"
    assert first.indices == (1, 2)
    assert first.residual == (1, 0, 0, -1)


def test_dual_ldend_module_zero(ld2):
    z = zeros(2, 2)
    d = sa.dual_ldend_module(sa.LDendModule(ld2, 2, z, z, z, z))
    assert d.l_r == z and d.r_r == z and d.l_l == z and d.r_l == z


def test_dual_ldend_module_passes(ld2):
    assert sa.check_ldend_module(sa.dual_ldend_module(regular_ldend_module(ld2))).passed


def test_dual_ldend_first_family_formula(ld2):
    m = regular_ldend_module(ld2)
    d = sa.dual_ldend_module(m)
    for i in range(2):
        expected = -((m.l_r[i] + m.l_l[i] - m.r_r[i] - m.r_l[i]).transpose())
        assert d.l_r[i] == expected


def test_dual_ldend_module_is_involution(ld2):
    m = regular_ldend_module(ld2)
    dd = sa.dual_ldend_module(sa.dual_ldend_module(m))
    assert (dd.l_r, dd.r_r, dd.l_l, dd.r_l) == (m.l_r, m.r_r, m.l_l, m.r_l)


def test_semidirect_ldend_zero():
    zero = sa.zero_algebra(1, ("tri_r", "tri_l"))
    z = zeros(1, 1)
    out = sa.semidirect_ldend(sa.LDendModule(zero, 1, z, z, z, z))
    assert out == sa.zero_algebra(2, ("tri_r", "tri_l"))


def test_semidirect_ldend_regular(ld2):
    out = sa.semidirect_ldend(regular_ldend_module(ld2))
    assert out.dim == 4
    assert sa.check_class(out, "l_dendriform").passed


def test_semidirect_ldend_dual(ld2):
    out = sa.semidirect_ldend(sa.dual_ldend_module(regular_ldend_module(ld2)))
    assert sa.check_class(out, "l_dendriform").passed


def test_module_iff_semidirect_l_dendriform(ld2):
    good = regular_ldend_module(ld2)
    assert sa.check_ldend_module(good).passed
    assert sa.check_class(sa.semidirect_ldend(good), "l_dendriform").passed

    bad_lr = (sa.linmap([[0, 1], [0, 0]]), sa.linmap([[0, 0], [1, 0]]))
    bad = sa.LDendModule(ld2, 2, bad_lr, good.r_r, good.l_l, good.r_l)
    assert not sa.check_ldend_module(bad).passed
    assert not sa.check_class(sa.semidirect_ldend(bad), "l_dendriform").passed


# ---------------------------------------------------------------------------
# the two pre-Lie modules carried by any L-dendriform algebra

def test_ldend_carries_prelie_modules(ld2, rb_induced_ldend):
    for alg in [ld2] + rb_induced_ldend:
        lr = left_family(alg, "tri_r")
        ll = left_family(alg, "tri_l")
        rl = right_family(alg, "tri_l")
        hor = sa.rename_ops(sa.horizontal_prelie(alg), {"bullet": "circ"})
        vert = sa.vertical_prelie(alg)
        assert sa.check_prelie_module(sa.PreLieModule(hor, alg.dim, lr, rl)).passed
        assert sa.check_prelie_module(sa.PreLieModule(vert, alg.dim, lr, neg(ll))).passed


def test_ldend_dual_prelie_modules_match_cited_tuples(ld2):
    # dual of (L_r, R_l) is (L_r* - R_l*, -R_l*); dual of (L_r, -L_l) is
    # (L_r* + L_l*, L_l*)
    lr = left_family(ld2, "tri_r")
    ll = left_family(ld2, "tri_l")
    rl = right_family(ld2, "tri_l")
    hor = sa.rename_ops(sa.horizontal_prelie(ld2), {"bullet": "circ"})
    vert = sa.vertical_prelie(ld2)

    d_hor = sa.dual_prelie_module(sa.PreLieModule(hor, 2, lr, rl))
    lr_s = sa.dual_rep(lr)
    rl_s = sa.dual_rep(rl)
    assert d_hor.l == tuple(a - b for a, b in zip(lr_s, rl_s))
    assert d_hor.r == tuple(-m for m in rl_s)

    d_vert = sa.dual_prelie_module(sa.PreLieModule(vert, 2, lr, neg(ll)))
    ll_s = sa.dual_rep(ll)
    assert d_vert.l == tuple(a + b for a, b in zip(lr_s, ll_s))
    assert d_vert.r == ll_s
