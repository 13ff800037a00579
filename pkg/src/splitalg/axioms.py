"""Membership checks for every algebra class, with counterexample reporting.

Each defining identity is evaluated exhaustively on basis tuples; bilinearity
makes that equivalent to checking all vectors.  Residuals are the exact
difference of the two sides of the displayed identity, so a report carries
everything needed to reproduce a violation by hand.

Identity ids are stable strings; indices in failures are 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Algebra,
    BilinearForm,
    DimensionMismatch,
    Table,
    UnknownOperation,
    Vector,
    basis_vector,
    is_zero_vector,
    table_add,
    table_apply,
    vec_add,
    vec_sub,
)

__all__ = [
    "CLASS_NAMES",
    "REQUIRED_OPS",
    "CheckReport",
    "Failure",
    "check_class",
    "check_prelie_cocycle",
    "check_ldend_cocycle",
]

CLASS_NAMES = ("pre_lie", "lie", "associative", "dendriform", "l_dendriform", "quadri")

REQUIRED_OPS = {
    "pre_lie": ("circ",),
    "lie": ("bracket",),
    "associative": ("circ",),
    "dendriform": ("succ", "prec"),
    "l_dendriform": ("tri_r", "tri_l"),
    "quadri": ("se", "ne", "nw", "sw"),
}


@dataclass(frozen=True)
class Failure:
    identity: str
    indices: tuple[int, ...]          # 1-based basis indices
    residual: tuple[Fraction, ...]

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "indices": list(self.indices),
            "residual": [str(x) for x in self.residual],
        }


@dataclass(frozen=True)
class CheckReport:
    failures: tuple[Failure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failures": [f.to_json_dict() for f in self.failures],
        }


def _run(identities, dim: int) -> CheckReport:
    """Evaluate (id, arity, residual_fn) rows over all basis tuples, in
    declaration order and lexicographic index order."""
    failures = []
    for identity_id, arity, fn in identities:
        for idx in itertools.product(range(dim), repeat=arity):
            residual = fn(*idx)
            if not is_zero_vector(residual):
                failures.append(
                    Failure(identity_id, tuple(i + 1 for i in idx), tuple(residual))
                )
    return CheckReport(tuple(failures))


# ---------------------------------------------------------------------------
# the class identity systems

def _prelie_identities(alg: Algebra):
    t = alg.op("circ")

    def assoc(i: int, j: int, k: int) -> Vector:
        return vec_sub(
            table_apply(t, t[i][j], basis_vector(alg.dim, k)),
            table_apply(t, basis_vector(alg.dim, i), t[j][k]),
        )

    def eq_2_2(i, j, k):
        return vec_sub(assoc(i, j, k), assoc(j, i, k))

    return [("eq-2.2", 3, eq_2_2)]


def _associative_identities(alg: Algebra):
    t = alg.op("circ")
    n = alg.dim

    def associativity(i, j, k):
        return vec_sub(
            table_apply(t, t[i][j], basis_vector(n, k)),
            table_apply(t, basis_vector(n, i), t[j][k]),
        )

    return [("associativity", 3, associativity)]


def _lie_identities(alg: Algebra):
    b = alg.op("bracket")
    n = alg.dim

    def antisym(i, j):
        return vec_add(b[i][j], b[j][i])

    def jacobi(i, j, k):
        e = lambda m: basis_vector(n, m)
        total = table_apply(b, e(i), b[j][k])
        total = vec_add(total, table_apply(b, e(j), b[k][i]))
        return vec_add(total, table_apply(b, e(k), b[i][j]))

    return [("lie-antisym", 2, antisym), ("lie-jacobi", 3, jacobi)]


def _dendriform_identities(succ: Table, prec: Table, dim: int, prefix: str = "eq-1.1"):
    star = table_add(succ, prec)
    e = lambda m: basis_vector(dim, m)

    def left(i, j, k):
        return vec_sub(
            table_apply(prec, prec[i][j], e(k)), table_apply(prec, e(i), star[j][k])
        )

    def mid(i, j, k):
        return vec_sub(
            table_apply(prec, succ[i][j], e(k)), table_apply(succ, e(i), prec[j][k])
        )

    def right(i, j, k):
        return vec_sub(
            table_apply(succ, e(i), succ[j][k]), table_apply(succ, star[i][j], e(k))
        )

    return [(f"{prefix}-left", 3, left), (f"{prefix}-mid", 3, mid), (f"{prefix}-right", 3, right)]


def _ldend_identities(alg: Algebra):
    tr = alg.op("tri_r")
    tl = alg.op("tri_l")
    n = alg.dim
    e = lambda m: basis_vector(n, m)

    def eq_3_1(i, j, k):
        lhs = table_apply(tr, e(i), tr[j][k])
        rhs = table_apply(tr, tr[i][j], e(k))
        rhs = vec_add(rhs, table_apply(tr, tl[i][j], e(k)))
        rhs = vec_add(rhs, table_apply(tr, e(j), tr[i][k]))
        rhs = vec_sub(rhs, table_apply(tr, tl[j][i], e(k)))
        rhs = vec_sub(rhs, table_apply(tr, tr[j][i], e(k)))
        return vec_sub(lhs, rhs)

    def eq_3_2(i, j, k):
        lhs = table_apply(tr, e(i), tl[j][k])
        rhs = table_apply(tl, tr[i][j], e(k))
        rhs = vec_add(rhs, table_apply(tl, e(j), tr[i][k]))
        rhs = vec_add(rhs, table_apply(tl, e(j), tl[i][k]))
        rhs = vec_sub(rhs, table_apply(tl, tl[j][i], e(k)))
        return vec_sub(lhs, rhs)

    return [("eq-3.1", 3, eq_3_1), ("eq-3.2", 3, eq_3_2)]


def _quadri_identities(alg: Algebra):
    se, ne, nw, sw = (alg.op(name) for name in ("se", "ne", "nw", "sw"))
    n = alg.dim
    e = lambda m: basis_vector(n, m)
    # derived operations, never required as input
    succ = table_add(ne, se)
    prec = table_add(nw, sw)
    vee = table_add(se, sw)
    wedge = table_add(ne, nw)
    star = table_add(se, ne, nw, sw)

    def ident(out_left, mid_left, out_right, mid_right):
        #  (x A y) B z  =  x C (y D z)   with B, C applied to a basis slot
        def fn(i, j, k):
            return vec_sub(
                table_apply(out_left, mid_left[i][j], e(k)),
                table_apply(out_right, e(i), mid_right[j][k]),
            )
        return fn

    return [
        ("eq-3.17-left", 3, ident(nw, nw, nw, star)),
        ("eq-3.17-mid", 3, ident(nw, ne, ne, prec)),
        ("eq-3.17-right", 3, ident(ne, wedge, ne, succ)),
        ("eq-3.18-left", 3, ident(nw, sw, sw, wedge)),
        ("eq-3.18-mid", 3, ident(nw, se, se, nw)),
        ("eq-3.18-right", 3, ident(ne, vee, se, ne)),
        ("eq-3.19-left", 3, ident(sw, prec, sw, vee)),
        ("eq-3.19-mid", 3, ident(sw, succ, se, sw)),
        ("eq-3.19-right", 3, ident(se, star, se, se)),
    ]


_BUILDERS = {
    "pre_lie": _prelie_identities,
    "lie": _lie_identities,
    "associative": _associative_identities,
    "dendriform": lambda alg: _dendriform_identities(
        alg.op("succ"), alg.op("prec"), alg.dim
    ),
    "l_dendriform": _ldend_identities,
    "quadri": _quadri_identities,
}


def check_class(alg: Algebra, class_name: str) -> CheckReport:
    """Decide membership of ``alg`` in the named algebra class.

    The class tag on the algebra is ignored; only the tables matter.
    """
    if class_name not in _BUILDERS:
        raise ValueError(f"unknown class {class_name!r} (choose from {CLASS_NAMES})")
    for op_name in REQUIRED_OPS[class_name]:
        if not alg.has_op(op_name):
            raise UnknownOperation(
                f"class {class_name!r} needs operation {op_name!r}"
            )
    return _run(_BUILDERS[class_name](alg), alg.dim)


# ---------------------------------------------------------------------------
# bilinear-form identities

def check_prelie_cocycle(alg: Algebra, B: BilinearForm) -> CheckReport:
    """2-cocycle identity  B(x.y, z) - B(x, y.z) = B(y.x, z) - B(y, x.z)."""
    t = alg.op("circ")
    if B.dim != alg.dim:
        raise DimensionMismatch("form dimension does not match the algebra")
    n = alg.dim
    e = lambda m: basis_vector(n, m)

    def eq_2_8(i, j, k):
        lhs = B.evaluate(t[i][j], e(k)) - B.evaluate(e(i), t[j][k])
        rhs = B.evaluate(t[j][i], e(k)) - B.evaluate(e(j), t[i][k])
        return (lhs - rhs,)

    return _run([("eq-2.8", 3, eq_2_8)], n)


def check_ldend_cocycle(alg: Algebra, B: BilinearForm) -> CheckReport:
    """Skew-symmetry plus  B(x<|y, z) = -B(y, z o x) + B(x, z * y)  where
    o and * are the vertical and horizontal products of the tables."""
    tr = alg.op("tri_r")
    tl = alg.op("tri_l")
    if B.dim != alg.dim:
        raise DimensionMismatch("form dimension does not match the algebra")
    n = alg.dim
    e = lambda m: basis_vector(n, m)

    def skew(i, j):
        return (B.gram[i][j] + B.gram[j][i],)

    def eq_4_16(i, j, k):
        circ_zk_i = vec_sub(tr[k][i], tl[i][k])          # z o x
        bullet_zk_j = vec_add(tr[k][j], tl[k][j])        # z * y
        lhs = B.evaluate(tl[i][j], e(k))
        rhs = -B.evaluate(e(j), circ_zk_i) + B.evaluate(e(i), bullet_zk_j)
        return (lhs - rhs,)

    return _run([("skew", 2, skew), ("eq-4.16", 3, eq_4_16)], n)
