"""Exact linear and multilinear algebra over the rationals.

Based vector spaces, multiplication tables (structure constants), linear
maps, rank-2/3 tensors and bilinear forms, all with ``fractions.Fraction``
entries.  Floating point never enters; equality is always exact.  Every
value is immutable after construction and every function is pure, so values
can be shared freely across threads.

Indexing is 0-based internally.  File formats and counterexample reports use
1-based basis indices (see :mod:`splitalg.fileio` and :mod:`splitalg.axioms`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

#: Closed vocabulary of operation names an algebra may carry.
OP_NAMES = (
    "circ",     # pre-Lie / associative product
    "bullet",   # horizontal pre-Lie product
    "tri_r",    # L-dendriform right-triangle product
    "tri_l",    # L-dendriform left-triangle product
    "succ",     # dendriform "greater" product
    "prec",     # dendriform "less" product
    "se",       # quadri south-east
    "ne",       # quadri north-east
    "nw",       # quadri north-west
    "sw",       # quadri south-west
    "bracket",  # Lie bracket
    "star",     # associative sum product
    "vee",      # quadri-derived dendriform "or"
    "wedge",    # quadri-derived dendriform "and"
)


class UnknownOperation(KeyError):
    """Operation name outside the vocabulary or absent from an algebra."""


class DimensionMismatch(ValueError):
    """Operands whose dimensions do not line up."""


class SingularMap(ArithmeticError):
    """A square map that was required to be invertible is not."""


class PreconditionFailed(ValueError):
    """A construction's mathematical precondition does not hold."""


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction or string like ``-3/4`` to an exact rational.

    Floats are rejected: this workbench never rounds.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


# ---------------------------------------------------------------------------
# vectors

Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def vector(entries: Iterable[int | str | Fraction]) -> Vector:
    return tuple(rat(x) for x in entries)


def zero_vector(dim: int) -> Vector:
    return (_ZERO,) * dim


def basis_vector(dim: int, i: int) -> Vector:
    return tuple(_ONE if k == i else _ZERO for k in range(dim))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vec_neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def vec_scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def is_zero_vector(x: Vector) -> bool:
    return not any(x)


# ---------------------------------------------------------------------------
# multiplication tables (structure constants)

#: entry [i][j][k] is the e_k coefficient of e_i * e_j.
Table = tuple[tuple[Vector, ...], ...]


def zero_table(dim: int) -> Table:
    return tuple(tuple(zero_vector(dim) for _ in range(dim)) for _ in range(dim))


def table_from_triples(dim: int, triples: Iterable[Sequence]) -> Table:
    """Build a dense table from sparse 1-based ``(i, j, k, value)`` rows."""
    dense = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for i, j, k, value in triples:
        if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
            raise DimensionMismatch(f"index ({i},{j},{k}) outside 1..{dim}")
        if (i, j, k) in seen:
            raise ValueError(f"duplicate structure constant at ({i},{j},{k})")
        seen.add((i, j, k))
        dense[i - 1][j - 1][k - 1] = rat(value)
    return tuple(tuple(tuple(row) for row in plane) for plane in dense)


def table_add(*tables: Table) -> Table:
    dim = len(tables[0])
    return tuple(
        tuple(
            tuple(sum(t[i][j][k] for t in tables) for k in range(dim))
            for j in range(dim)
        )
        for i in range(dim)
    )


def table_sub(a: Table, b: Table) -> Table:
    return tuple(
        tuple(vec_sub(a[i][j], b[i][j]) for j in range(len(a)))
        for i in range(len(a))
    )


def table_neg(a: Table) -> Table:
    return tuple(tuple(vec_neg(a[i][j]) for j in range(len(a))) for i in range(len(a)))


def table_flip(a: Table) -> Table:
    """Swap the two argument slots: flip(a)[i][j] = a[j][i]."""
    return tuple(tuple(a[j][i] for j in range(len(a))) for i in range(len(a)))


def table_apply(table: Table, x: Vector, y: Vector) -> Vector:
    """Bilinear contraction  sum_ij x_i y_j table[i][j]."""
    dim = len(table)
    out = [_ZERO] * dim
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, t in enumerate(table[i][j]):
                if t:
                    out[k] += c * t
    return tuple(out)


# ---------------------------------------------------------------------------
# algebras

@dataclass(frozen=True)
class Algebra:
    """A based vector space of dimension ``dim`` with named multiplication
    tables.  ``class_tag`` is unverified provenance metadata, never
    substitutes for an axioms check, and is ignored by equality."""

    dim: int
    ops: Mapping[str, Table]
    class_tag: str | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch(f"dimension must be positive, got {self.dim}")
        for name, table in self.ops.items():
            if name not in OP_NAMES:
                raise UnknownOperation(name)
            if len(table) != self.dim or any(
                len(plane) != self.dim or any(len(row) != self.dim for row in plane)
                for plane in table
            ):
                raise DimensionMismatch(f"table {name!r} is not {self.dim}^3")
        object.__setattr__(self, "ops", MappingProxyType(dict(self.ops)))

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.dim == other.dim and dict(self.ops) == dict(other.ops)

    def op(self, name: str) -> Table:
        if name not in OP_NAMES:
            raise UnknownOperation(name)
        try:
            return self.ops[name]
        except KeyError:
            have = ", ".join(sorted(self.ops)) or "none"
            raise UnknownOperation(
                f"algebra has no operation {name!r} (has: {have})"
            ) from None

    def has_op(self, name: str) -> bool:
        return name in self.ops


def algebra(
    dim: int,
    sparse_ops: Mapping[str, Iterable[Sequence]],
    class_tag: str | None = None,
) -> Algebra:
    """Build an algebra from sparse 1-based ``(i, j, k, value)`` tables."""
    tables = {name: table_from_triples(dim, rows) for name, rows in sparse_ops.items()}
    return Algebra(dim, tables, class_tag)


def zero_algebra(dim: int, op_names: Sequence[str], class_tag: str | None = None) -> Algebra:
    return Algebra(dim, {name: zero_table(dim) for name in op_names}, class_tag)


def rename_ops(alg: Algebra, mapping: Mapping[str, str]) -> Algebra:
    """Rename operations, e.g. view a dendriform algebra as L-dendriform."""
    ops = {}
    for name, table in alg.ops.items():
        ops[mapping.get(name, name)] = table
    if len(ops) != len(alg.ops):
        raise ValueError(f"renaming {mapping!r} collapses two operations")
    return Algebra(alg.dim, ops, alg.class_tag)


def merge_ops(*algs: Algebra, class_tag: str | None = None) -> Algebra:
    """Combine the operations of several same-dimensional algebras."""
    dim = algs[0].dim
    ops: dict[str, Table] = {}
    for a in algs:
        if a.dim != dim:
            raise DimensionMismatch("cannot merge algebras of different dimensions")
        for name, table in a.ops.items():
            if name in ops:
                raise ValueError(f"operation {name!r} present twice in merge")
            ops[name] = table
    return Algebra(dim, ops, class_tag)


def multiply(alg: Algebra, op: str, x: Sequence, y: Sequence) -> Vector:
    """Product of two coefficient vectors under the named operation."""
    if len(x) != alg.dim or len(y) != alg.dim:
        raise DimensionMismatch(
            f"vectors of length {len(x)}, {len(y)} in dimension {alg.dim}"
        )
    return table_apply(alg.op(op), vector(x), vector(y))


# ---------------------------------------------------------------------------
# linear maps

def _rows_tuple(entries: Iterable[Iterable]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(rat(x) for x in row) for row in entries)


@dataclass(frozen=True)
class LinearMap:
    """Exact matrix between two based spaces; column j is the image of the
    j-th source basis vector."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entry grid does not match rows x cols")

    @staticmethod
    def from_rows(entries: Iterable[Iterable]) -> "LinearMap":
        grid = _rows_tuple(entries)
        return LinearMap(len(grid), len(grid[0]) if grid else 0, grid)

    @staticmethod
    def identity(n: int) -> "LinearMap":
        return LinearMap(n, n, tuple(basis_vector(n, i) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "LinearMap":
        return LinearMap(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"map takes length {self.cols}, got {len(v)}")
        return tuple(
            sum((row[j] * v[j] for j in range(self.cols) if v[j]), _ZERO)
            for row in self.entries
        )

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other (matrix product self @ other)."""
        if self.cols != other.rows:
            raise DimensionMismatch("composition shape mismatch")
        entries = tuple(
            tuple(
                sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), _ZERO)
                for j in range(other.cols)
            )
            for i in range(self.rows)
        )
        return LinearMap(self.rows, other.cols, entries)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return self.compose(other)

    def transpose(self) -> "LinearMap":
        return LinearMap(
            self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("addition shape mismatch")
        return LinearMap(
            self.rows, self.cols,
            tuple(vec_add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + (-other)

    def __neg__(self) -> "LinearMap":
        return LinearMap(self.rows, self.cols, tuple(vec_neg(r) for r in self.entries))

    def scale(self, c: int | str | Fraction) -> "LinearMap":
        c = rat(c)
        return LinearMap(
            self.rows, self.cols, tuple(vec_scale(c, r) for r in self.entries)
        )

    def rank(self) -> int:
        work = [list(row) for row in self.entries]
        rank = 0
        for col in range(self.cols):
            pivot = next((r for r in range(rank, self.rows) if work[r][col]), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            inv = 1 / work[rank][col]
            work[rank] = [x * inv for x in work[rank]]
            for r in range(self.rows):
                if r != rank and work[r][col]:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
            rank += 1
        return rank

    def try_inverse(self) -> "LinearMap | None":
        """Gauss-Jordan inverse, or None when singular."""
        if not self.is_square:
            return None
        n = self.rows
        work = [list(row) + list(basis_vector(n, i)) for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                return None
            work[col], work[pivot] = work[pivot], work[col]
            inv = 1 / work[col][col]
            work[col] = [x * inv for x in work[col]]
            for r in range(n):
                if r != col and work[r][col]:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        return LinearMap(n, n, tuple(tuple(row[n:]) for row in work))

    def inverse(self) -> "LinearMap":
        inv = self.try_inverse()
        if inv is None:
            raise SingularMap("map is not invertible")
        return inv

    @property
    def is_invertible(self) -> bool:
        return self.try_inverse() is not None


def linmap(entries: Iterable[Iterable]) -> LinearMap:
    """Shorthand row-wise constructor with rational coercion."""
    return LinearMap.from_rows(entries)


def family_contract(family: Sequence[LinearMap], coeffs: Sequence) -> LinearMap:
    """Extend a basis-indexed matrix family linearly:  sum_i c_i family[i]."""
    if len(family) != len(coeffs):
        raise DimensionMismatch("family length does not match coefficient vector")
    out = LinearMap.zero(family[0].rows, family[0].cols)
    for c, m in zip(coeffs, family):
        c = rat(c)
        if c:
            out = out + m.scale(c)
    return out


def dual_rep(family: Sequence[LinearMap]) -> tuple[LinearMap, ...]:
    """Dual of a matrix family: rho*(e_i) = -(rho(e_i))^T in the dual basis."""
    size = None
    for m in family:
        if not m.is_square or (size is not None and m.rows != size):
            raise DimensionMismatch("dual_rep needs a family of equal square matrices")
        size = m.rows
    return tuple(-(m.transpose()) for m in family)


# ---------------------------------------------------------------------------
# tensors

def _grid(dim: int) -> list[list[Fraction]]:
    return [[_ZERO] * dim for _ in range(dim)]


@dataclass(frozen=True)
class Tensor2:
    """Element of A (x) A; entry [i][j] is the coefficient of e_i (x) e_j."""

    dim: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.dim or any(len(r) != self.dim for r in self.entries):
            raise DimensionMismatch("tensor entries are not dim x dim")

    @property
    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    @property
    def is_skew(self) -> bool:
        return all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.dim)
            for j in range(i, self.dim)
        )

    @property
    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def nonzero_entries(self):
        """Yield 1-based ((i, j), value) in lexicographic order."""
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                if value:
                    yield (i + 1, j + 1), value

    def __add__(self, other: "Tensor2") -> "Tensor2":
        if self.dim != other.dim:
            raise DimensionMismatch("tensor dimensions differ")
        return Tensor2(
            self.dim, tuple(vec_add(a, b) for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return self + (-other)

    def __neg__(self) -> "Tensor2":
        return Tensor2(self.dim, tuple(vec_neg(r) for r in self.entries))


def tensor2(dim: int, sparse: Iterable[Sequence] = ()) -> Tensor2:
    """Build from sparse 1-based ``(i, j, value)`` rows."""
    grid = _grid(dim)
    for i, j, value in sparse:
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise DimensionMismatch(f"index ({i},{j}) outside 1..{dim}")
        grid[i - 1][j - 1] = rat(value)
    return Tensor2(dim, tuple(tuple(r) for r in grid))


def tensor2_from_entries(entries: Iterable[Iterable]) -> Tensor2:
    grid = _rows_tuple(entries)
    return Tensor2(len(grid), grid)


@dataclass(frozen=True)
class Tensor3:
    """Element of A (x) A (x) A as a dense rank-3 coefficient array."""

    dim: int
    entries: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        d = self.dim
        if len(self.entries) != d or any(
            len(p) != d or any(len(r) != d for r in p) for p in self.entries
        ):
            raise DimensionMismatch("tensor entries are not dim^3")

    @property
    def is_zero(self) -> bool:
        return not any(any(any(row) for row in plane) for plane in self.entries)

    def nonzero_entries(self):
        """Yield 1-based ((i, j, k), value) in lexicographic order."""
        for i, plane in enumerate(self.entries):
            for j, row in enumerate(plane):
                for k, value in enumerate(row):
                    if value:
                        yield (i + 1, j + 1, k + 1), value

    def nonzero_count(self) -> int:
        return sum(1 for _ in self.nonzero_entries())

    def __add__(self, other: "Tensor3") -> "Tensor3":
        if self.dim != other.dim:
            raise DimensionMismatch("tensor dimensions differ")
        return Tensor3(
            self.dim,
            tuple(
                tuple(vec_add(a, b) for a, b in zip(pa, pb))
                for pa, pb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        return self + (-other)

    def __neg__(self) -> "Tensor3":
        return Tensor3(
            self.dim, tuple(tuple(vec_neg(r) for r in p) for p in self.entries)
        )


def zero_tensor3(dim: int) -> Tensor3:
    return Tensor3(dim, tuple(tuple(zero_vector(dim) for _ in range(dim)) for _ in range(dim)))


def tensor3_from_entries(entries) -> Tensor3:
    grid = tuple(tuple(tuple(rat(x) for x in row) for row in plane) for plane in entries)
    return Tensor3(len(grid), grid)


def tensor3(dim: int, sparse: Iterable[Sequence] = ()) -> Tensor3:
    """Build from sparse 1-based ``(i, j, k, value)`` rows."""
    grid = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, value in sparse:
        if not all(1 <= t <= dim for t in (i, j, k)):
            raise DimensionMismatch(f"index ({i},{j},{k}) outside 1..{dim}")
        grid[i - 1][j - 1][k - 1] = rat(value)
    return tensor3_from_entries(grid)


# ---------------------------------------------------------------------------
# bilinear forms

@dataclass(frozen=True)
class BilinearForm:
    """Gram-matrix bilinear form: B(e_i, e_j) = gram[i][j]."""

    dim: int
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.gram) != self.dim or any(len(r) != self.dim for r in self.gram):
            raise DimensionMismatch("gram matrix is not dim x dim")

    def evaluate(self, u: Sequence, v: Sequence) -> Fraction:
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("vector length does not match form dimension")
        total = _ZERO
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.gram[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    total += ui * vj * row[j]
        return total

    @property
    def is_symmetric(self) -> bool:
        return Tensor2(self.dim, self.gram).is_symmetric

    @property
    def is_skew(self) -> bool:
        return Tensor2(self.dim, self.gram).is_skew

    @property
    def is_nondegenerate(self) -> bool:
        return LinearMap(self.dim, self.dim, self.gram).is_invertible


def bilinear_form(entries: Iterable[Iterable]) -> BilinearForm:
    grid = _rows_tuple(entries)
    return BilinearForm(len(grid), grid)


# ---------------------------------------------------------------------------
# tensor machinery

def exchange(r: Tensor2) -> Tensor2:
    """Swap the two tensor factors: e_i (x) e_j -> e_j (x) e_i."""
    return Tensor2(
        r.dim,
        tuple(tuple(r.entries[j][i] for j in range(r.dim)) for i in range(r.dim)),
    )


def slot_product(
    r: Tensor2,
    r_slots: tuple[int, int],
    s: Tensor2,
    s_slots: tuple[int, int],
    alg: Algebra,
    op: str,
) -> Tensor3:
    """Product of two rank-2 tensors placed into slots of A (x) A (x) A.

    ``r_slots`` says which slots r's two components occupy (1-based, first
    component first), likewise ``s_slots``; the pairs must share exactly one
    slot.  In the shared slot the left argument's component multiplies the
    right argument's component under ``op``; each unshared slot carries the
    corresponding tensor's remaining component.  For instance slots (1,2) and
    (1,3) give  sum a_i*a_j (x) b_i (x) b_j.
    """
    for pair in (r_slots, s_slots):
        if len(pair) != 2 or pair[0] == pair[1] or not set(pair) <= {1, 2, 3}:
            raise ValueError(f"invalid slot pair {pair!r}")
    shared_set = set(r_slots) & set(s_slots)
    if len(shared_set) != 1:
        raise ValueError(f"slot pairs {r_slots} and {s_slots} must share exactly one slot")
    if r.dim != alg.dim or s.dim != alg.dim:
        raise DimensionMismatch("tensor dimensions do not match the algebra")
    (shared,) = shared_set
    r_other = r_slots[0] if r_slots[1] == shared else r_slots[1]
    s_other = s_slots[0] if s_slots[1] == shared else s_slots[1]
    r_shared_first = r_slots[0] == shared
    s_shared_first = s_slots[0] == shared

    table = alg.op(op)
    n = alg.dim
    out = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
    pos = [0, 0, 0]
    for u in range(n):          # r's component in the shared slot
        for x in range(n):      # r's component in its other slot
            cr = r.entries[u][x] if r_shared_first else r.entries[x][u]
            if not cr:
                continue
            pos[r_other - 1] = x
            for v in range(n):  # s's component in the shared slot
                prod = table[u][v]
                for y in range(n):
                    cs = s.entries[v][y] if s_shared_first else s.entries[y][v]
                    if not cs:
                        continue
                    pos[s_other - 1] = y
                    c = cr * cs
                    for k, w in enumerate(prod):
                        if w:
                            pos[shared - 1] = k
                            out[pos[0]][pos[1]][pos[2]] += c * w
    return tensor3_from_entries(out)


def tensor_to_map(r: Tensor2) -> LinearMap:
    """The map A* -> A identified with r:  e_i* -> sum_k r[i][k] e_k."""
    return LinearMap(
        r.dim, r.dim,
        tuple(tuple(r.entries[j][i] for j in range(r.dim)) for i in range(r.dim)),
    )


def map_to_tensor(T: LinearMap) -> Tensor2:
    """Inverse identification of :func:`tensor_to_map` (square maps only)."""
    if not T.is_square:
        raise DimensionMismatch("only square maps identify with rank-2 tensors")
    return Tensor2(
        T.rows,
        tuple(tuple(T.entries[j][i] for j in range(T.rows)) for i in range(T.rows)),
    )


def form_from_invertible_map(T: LinearMap) -> BilinearForm:
    """Nondegenerate form induced by an invertible map T: A* -> A, namely
    B(u, v) = <T^-1 u, v>.  In coordinates gram[i][j] = (T^-1)^T[i][j]."""
    if not T.is_square:
        raise DimensionMismatch("form requires a square map")
    inv = T.inverse()
    return BilinearForm(T.rows, inv.transpose().entries)


def map_from_form(B: BilinearForm) -> LinearMap:
    """Invert the pairing identification: the T with <T^-1 u, v> = B(u, v)."""
    gram = LinearMap(B.dim, B.dim, B.gram)
    if not gram.is_invertible:
        raise SingularMap("form is degenerate")
    return gram.transpose().inverse()
