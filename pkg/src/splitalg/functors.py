"""Constructions turning one algebra class into another.

Everything here is table-level: a functor never verifies that its input
satisfies any axioms (that is the axioms module's job, composed explicitly
where needed), which also lets tests feed deliberately invalid tables.
Outputs carry a class_tag recording their construction for audit trails.
"""

from __future__ import annotations

from .core import (
    Algebra,
    table_add,
    table_flip,
    table_neg,
    table_sub,
)

__all__ = [
    "sub_adjacent_lie",
    "horizontal_prelie",
    "vertical_prelie",
    "transpose",
    "dendriform_to_ldend",
    "quadri_derive",
    "QUADRI_DERIVED",
]


def _tag(name: str, alg: Algebra) -> str:
    return f"{name}({alg.class_tag})" if alg.class_tag else name


def sub_adjacent_lie(alg: Algebra) -> Algebra:
    """Commutator bracket [x,y] = x o y - y o x of a pre-Lie product."""
    c = alg.op("circ")
    return Algebra(alg.dim, {"bracket": table_sub(c, table_flip(c))}, _tag("sub_adjacent_lie", alg))


def horizontal_prelie(alg: Algebra) -> Algebra:
    """x . y = x |> y + x <| y."""
    t = table_add(alg.op("tri_r"), alg.op("tri_l"))
    return Algebra(alg.dim, {"bullet": t}, _tag("horizontal_prelie", alg))


def vertical_prelie(alg: Algebra) -> Algebra:
    """x o y = x |> y - y <| x."""
    t = table_sub(alg.op("tri_r"), table_flip(alg.op("tri_l")))
    return Algebra(alg.dim, {"circ": t}, _tag("vertical_prelie", alg))


def transpose(alg: Algebra) -> Algebra:
    """The transpose structure: |> unchanged,  x <|' y = -(y <| x)."""
    ops = {
        "tri_r": alg.op("tri_r"),
        "tri_l": table_neg(table_flip(alg.op("tri_l"))),
    }
    return Algebra(alg.dim, ops, _tag("transpose", alg))


def dendriform_to_ldend(alg: Algebra) -> Algebra:
    """Any dendriform algebra is L-dendriform under a straight renaming."""
    ops = {"tri_r": alg.op("succ"), "tri_l": alg.op("prec")}
    return Algebra(alg.dim, ops, _tag("dendriform_to_ldend", alg))


def _quadri_tables(alg: Algebra):
    return (alg.op("se"), alg.op("ne"), alg.op("nw"), alg.op("sw"))


def _q_succ(se, ne, nw, sw):
    return table_add(ne, se)


def _q_prec(se, ne, nw, sw):
    return table_add(nw, sw)


def _q_vee(se, ne, nw, sw):
    return table_add(se, sw)


def _q_wedge(se, ne, nw, sw):
    return table_add(ne, nw)


def _q_star(se, ne, nw, sw):
    return table_add(se, ne, nw, sw)


def _q_tri_r(se, ne, nw, sw):
    # x |> y = x se y - y nw x
    return table_sub(se, table_flip(nw))


def _q_tri_l(se, ne, nw, sw):
    # x <| y = x ne y - y sw x
    return table_sub(ne, table_flip(sw))


def _q_circ(se, ne, nw, sw):
    # x o y = x se y + x sw y - y nw x - y ne x
    return table_sub(table_add(se, sw), table_add(table_flip(nw), table_flip(ne)))


def _q_bullet(se, ne, nw, sw):
    # x . y = x se y + x ne y - y nw x - y sw x
    return table_sub(table_add(se, ne), table_add(table_flip(nw), table_flip(sw)))


def _q_bracket(se, ne, nw, sw):
    total = table_add(se, ne, nw, sw)
    return table_sub(total, table_flip(total))


QUADRI_DERIVED = {
    "succ": _q_succ,
    "prec": _q_prec,
    "vee": _q_vee,
    "wedge": _q_wedge,
    "star": _q_star,
    "tri_r": _q_tri_r,
    "tri_l": _q_tri_l,
    "circ": _q_circ,
    "bullet": _q_bullet,
    "bracket": _q_bracket,
}


def quadri_derive(alg: Algebra, which: str) -> Algebra:
    """One derived operation of a quadri-algebra, named by its target op."""
    if which not in QUADRI_DERIVED:
        raise ValueError(
            f"unknown derived operation {which!r} (choose from {sorted(QUADRI_DERIVED)})"
        )
    table = QUADRI_DERIVED[which](*_quadri_tables(alg))
    return Algebra(alg.dim, {which: table}, _tag(f"quadri_derive[{which}]", alg))
