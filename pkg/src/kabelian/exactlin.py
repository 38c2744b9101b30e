"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` throughout.  Row reduction is done on
integer rows (each row is kept primitive by dividing out its content), so no
intermediate Fraction arithmetic happens inside the elimination loop.  Rows are
stored sparsely as ``{column: int}`` dicts, which keeps the derivation systems
(hundreds of unknowns, mostly zero coefficients) cheap to solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, NotNilpotent

Rational = Fraction

__all__ = [
    "Rational",
    "Matrix",
    "Subspace",
    "Partition",
    "EchelonBuilder",
    "rref",
    "rank",
    "kernel_basis",
    "sparse_kernel",
    "span",
    "contains",
    "subspace_sum",
    "intersection",
    "rank_sequence",
    "nilpotent_jordan_partition",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or a rational string")
    return Fraction(x)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        ents = tuple(_frac(x) for x in self.entries)
        if len(ents) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(ents)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        ents = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            ents[i * n + i] = _frac(v)
        return cls(n, n, tuple(ents))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _sparse_rows(self) -> list[list[tuple[int, Fraction]]]:
        c = self.cols
        e = self.entries
        return [[(j, e[i * c + j]) for j in range(c) if e[i * c + j]] for i in range(self.rows)]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        brows = other._sparse_rows()
        out = []
        for arow in self._sparse_rows():
            acc = [Fraction(0)] * other.cols
            for k, a in arow:
                for j, b in brows[k]:
                    acc[j] += a * b
            out.extend(acc)
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> tuple:
        """Return ``self @ v`` for a coordinate vector ``v``."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape}")
        nz = [(j, _frac(x)) for j, x in enumerate(v) if x]
        c = self.cols
        e = self.entries
        return tuple(sum((e[i * c + j] * x for j, x in nz), Fraction(0)) for i in range(self.rows))

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, s) -> "Matrix":
        s = _frac(s)
        return Matrix(self.rows, self.cols, tuple(s * a for a in self.entries))

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _integer_row(vec: Mapping[int, Fraction]) -> dict[int, int]:
    """Scale a sparse rational row to a primitive integer row."""
    if all(type(x) is int for x in vec.values()):
        return _primitive({j: x for j, x in vec.items() if x})
    items = [(j, _frac(x)) for j, x in vec.items() if x]
    if not items:
        return {}
    den = 1
    for _, x in items:
        den = lcm(den, x.denominator)
    row = {j: int(x * den) for j, x in items}
    return _primitive(row)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _combine(a: int, row: dict[int, int], b: int, prow: dict[int, int]) -> dict[int, int]:
    """Return primitive(a*row - b*prow), dropping zeros."""
    out = {j: a * v for j, v in row.items()} if a != 1 else dict(row)
    for j, v in prow.items():
        w = out.get(j, 0) - b * v
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    return _primitive(out)


class EchelonBuilder:
    """Incremental Gauss-Jordan reduction over the integers.

    Rows added so far are kept in fully reduced form: each pivot column is
    nonzero in exactly one stored row, and every pivot entry is positive.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def _reduce(self, row: dict[int, int]) -> dict[int, int]:
        for pc in [c for c in row if c in self._rows]:
            b = row.get(pc, 0)
            if not b:
                continue
            prow = self._rows[pc]
            a = prow[pc]
            g = gcd(a, b)
            row = _combine(a // g, row, b // g, prow)
        return row

    def add(self, vec) -> bool:
        """Add a row (sparse dict or dense sequence); return True if it was independent."""
        if isinstance(vec, Mapping):
            if any(not (0 <= j < self.ncols) for j in vec):
                raise DimensionMismatch("column index out of range")
            row = _integer_row(vec)
        else:
            if len(vec) != self.ncols:
                raise DimensionMismatch(f"row of length {len(vec)}, expected {self.ncols}")
            row = _integer_row({j: x for j, x in enumerate(vec) if x})
        row = self._reduce(row)
        if not row:
            return False
        pc = min(row)
        if row[pc] < 0:
            row = {j: -v for j, v in row.items()}
        for c, other in list(self._rows.items()):
            b = other.get(pc, 0)
            if b:
                a = row[pc]
                g = gcd(a, b)
                self._rows[c] = _combine(a // g, other, b // g, row)
        self._rows[pc] = row
        return True

    def reduce(self, vec: Sequence) -> tuple:
        """Remainder of ``vec`` after clearing every pivot column (exact, rational)."""
        out = [_frac(x) for x in vec]
        for pc in self.pivots:
            x = out[pc]
            if x:
                prow = self._rows[pc]
                p = prow[pc]
                for j, v in prow.items():
                    out[j] -= x * v / p
        return tuple(out)

    def rref_rows(self) -> list[tuple]:
        rows = []
        for pc in self.pivots:
            r = self._rows[pc]
            p = r[pc]
            dense = [Fraction(0)] * self.ncols
            for j, v in r.items():
                dense[j] = Fraction(v, p)
            rows.append(tuple(dense))
        return rows

    def kernel_vectors(self) -> list[tuple]:
        """Basis of the null space of the stored rows, one vector per free column."""
        pivots = set(self._rows)
        out = []
        for f in range(self.ncols):
            if f in pivots:
                continue
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for pc, r in self._rows.items():
                x = r.get(f)
                if x:
                    v[pc] = Fraction(-x, r[pc])
            out.append(tuple(v))
        return out


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form of ``m`` (same shape, zero rows last) and its rank."""
    eb = EchelonBuilder(m.cols)
    for i in range(m.rows):
        eb.add(m.row(i))
    rows = eb.rref_rows()
    r = len(rows)
    rows.extend([(Fraction(0),) * m.cols] * (m.rows - r))
    return Matrix.from_rows(rows, m.cols), r


def rank(m: Matrix) -> int:
    eb = EchelonBuilder(m.cols)
    for i in range(m.rows):
        eb.add(m.row(i))
    return eb.rank


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held by its canonical (RREF) basis.

    Two subspaces compare equal exactly when they are the same subspace.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise DimensionMismatch("basis width differs from ambient dimension")

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix.zeros(0, n))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n))

    @classmethod
    def _from_builder(cls, eb: EchelonBuilder) -> "Subspace":
        return cls(eb.ncols, Matrix.from_rows(eb.rref_rows(), eb.ncols))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> list[tuple]:
        return [self.basis.row(i) for i in range(self.basis.rows)]

    @property
    def pivots(self) -> list[int]:
        out = []
        for v in self.vectors:
            out.append(next(j for j, x in enumerate(v) if x))
        return out

    def _builder(self) -> EchelonBuilder:
        eb = EchelonBuilder(self.ambient_dim)
        for v in self.vectors:
            eb.add(v)
        return eb

    def reduce(self, v: Sequence) -> tuple:
        """Canonical representative of ``v`` modulo this subspace (pivot coordinates zeroed)."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        out = [_frac(x) for x in v]
        for row, pc in zip(self.vectors, self.pivots):
            x = out[pc]
            if x:
                for j, y in enumerate(row):
                    if y:
                        out[j] -= x * y
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersection(self, other)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def span(vectors: Iterable[Sequence], ambient_dim: int | None = None) -> Subspace:
    """Canonical span of ``vectors``.  ``ambient_dim`` is required when the list is empty."""
    vectors = [tuple(v) for v in vectors]
    if ambient_dim is None:
        if not vectors:
            raise DimensionMismatch("ambient_dim is required for an empty span")
        ambient_dim = len(vectors[0])
    eb = EchelonBuilder(ambient_dim)
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
        eb.add(v)
    return Subspace._from_builder(eb)


def contains(s: Subspace, v: Sequence) -> bool:
    return s.contains(v)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces live in different spaces")
    return span(a.vectors + b.vectors, a.ambient_dim)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    """A ∩ B from the null space of [A^T | -B^T]."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces live in different spaces")
    n = a.ambient_dim
    av, bv = a.vectors, b.vectors
    if not av or not bv:
        return Subspace.zero(n)
    cols = len(av) + len(bv)
    eb = EchelonBuilder(cols)
    for j in range(n):
        eb.add([v[j] for v in av] + [-v[j] for v in bv])
    out = []
    for coeffs in eb.kernel_vectors():
        w = [Fraction(0)] * n
        for c, v in zip(coeffs[:len(av)], av):
            if c:
                for j, x in enumerate(v):
                    w[j] += c * x
        out.append(w)
    return span(out, n)


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical null space {v : m v = 0}."""
    eb = EchelonBuilder(m.cols)
    for i in range(m.rows):
        eb.add(m.row(i))
    return span(eb.kernel_vectors(), m.cols)


def sparse_kernel(rows: Iterable[Mapping[int, object]], ncols: int) -> Subspace:
    """Null space of a system given as sparse rows ``{column: coefficient}``."""
    eb = EchelonBuilder(ncols)
    for r in rows:
        if r:
            eb.add(r)
    return span(eb.kernel_vectors(), ncols)


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; compares lexicographically."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"


def _scaled_integer_rows(m: Matrix) -> list[list[tuple[int, int]]]:
    """Sparse rows of d*m for the least d making every entry an integer."""
    den = 1
    for x in m.entries:
        if x:
            den = lcm(den, x.denominator)
    c = m.cols
    e = m.entries
    return [
        [(j, int(e[i * c + j] * den)) for j in range(c) if e[i * c + j]]
        for i in range(m.rows)
    ]


def rank_sequence(n: Matrix) -> list[int]:
    """Ranks r_0 = dim, r_1 = rank N, r_2 = rank N^2, ... down to the first 0.

    Computed on images (r_k = dim N^k V) rather than on explicit powers, using
    an integer multiple of N (ranks are unchanged by scaling).  Raises
    NotNilpotent when the sequence stalls above zero.
    """
    if n.rows != n.cols:
        raise DimensionMismatch("operator must be square")
    dim = n.rows
    rows = _scaled_integer_rows(n)
    seq = [dim]
    images: list[dict[int, int]] = [{j: 1} for j in range(dim)]
    while seq[-1]:
        eb = EchelonBuilder(dim)
        for v in images:
            w = {}
            for i, row in enumerate(rows):
                s = 0
                for j, a in row:
                    x = v.get(j)
                    if x:
                        s += a * x
                if s:
                    w[i] = s
            eb.add(w)
        if eb.rank == seq[-1]:
            raise NotNilpotent(f"rank sequence stalls at {eb.rank}")
        seq.append(eb.rank)
        images = list(eb._rows.values())
    return seq


def nilpotent_jordan_partition(n: Matrix) -> Partition:
    """Jordan type of a nilpotent operator from its rank sequence.

    The number of blocks of size >= k is r_{k-1} - r_k.
    """
    r = rank_sequence(n)
    at_least = [r[k - 1] - r[k] for k in range(1, len(r))]
    parts = []
    for k in range(len(at_least), 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        parts.extend([k] * exact)
    return Partition(parts)
