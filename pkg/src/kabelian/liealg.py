"""Lie algebras given by structure constants.

Basis indices in bracket tables are 1-based (``[X_i, X_j] = sum c X_k`` with
``1 <= i, j, k <= dim``), matching the way such tables are written by hand and
the on-disk format.  Coordinate vectors are ordinary length-``dim`` sequences,
so basis index ``i`` is position ``i - 1``.

A Maurer-Cartan equation ``d w_k = w_i ^ w_j`` is read as ``[X_i, X_j] = X_k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DiagonalBracket,
    DimensionMismatch,
    IndexOutOfRange,
    NotAnIdeal,
    NotNilpotent,
    VectorInDerivedAlgebra,
)
from .exactlin import (
    EchelonBuilder,
    Matrix,
    Partition,
    Subspace,
    nilpotent_jordan_partition,
    sparse_kernel,
    span,
)

Vector = tuple


@dataclass(frozen=True)
class LieAlgebra:
    """Sparse antisymmetric bracket table.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to a tuple of ``(k, c)`` pairs
    sorted by ``k``, all coefficients nonzero.  Use :func:`from_brackets` to
    build one; it normalizes order and signs.
    """

    dim: int
    labels: tuple
    brackets: dict = field(hash=False)

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise DimensionMismatch(f"{len(self.labels)} labels for dimension {self.dim}")
        table: dict[int, dict[int, dict[int, Fraction]]] = {}
        for (i, j), terms in self.brackets.items():
            d = dict(terms)
            table.setdefault(i - 1, {})[j - 1] = {k - 1: c for k, c in d.items()}
            table.setdefault(j - 1, {})[i - 1] = {k - 1: -c for k, c in d.items()}
        object.__setattr__(self, "_table", table)

    def index(self, label: str) -> int:
        """1-based basis index of ``label``."""
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise KeyError(label) from None

    def basis_vector(self, which) -> Vector:
        """Unit coordinate vector for a label or a 1-based index."""
        i = self.index(which) if isinstance(which, str) else which
        if not 1 <= i <= self.dim:
            raise IndexOutOfRange(i)
        return tuple(Fraction(int(p == i - 1)) for p in range(self.dim))

    def zero(self) -> Vector:
        return (Fraction(0),) * self.dim

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        """[x, y] for coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length differs from algebra dimension")
        out = [Fraction(0)] * self.dim
        table = self._table
        ynz = [(b, yb) for b, yb in enumerate(y) if yb]
        for a, xa in enumerate(x):
            if not xa or a not in table:
                continue
            row = table[a]
            for b, yb in ynz:
                terms = row.get(b)
                if terms:
                    s = xa * yb
                    for k, c in terms.items():
                        out[k] += s * c
        return tuple(out)

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """Sparse [X_i, X_j] as ``{k: c}`` with 1-based keys."""
        terms = self._table.get(i - 1, {}).get(j - 1, {})
        return {k + 1: c for k, c in terms.items()}

    def structure_constants(self) -> list[tuple[int, int, int, Fraction]]:
        """All nonzero c_{ij}^k with i < j, as (i, j, k, c), sorted."""
        return [(i, j, k, c) for (i, j), terms in sorted(self.brackets.items()) for k, c in terms]

    def same_constants(self, other: "LieAlgebra") -> bool:
        return self.dim == other.dim and self.brackets == other.brackets

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.labels == other.labels and self.same_constants(other)

    def __hash__(self) -> int:
        return hash((self.dim, self.labels, tuple(self.structure_constants())))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.brackets)})"


def _coerce_term(t):
    if isinstance(t, tuple) and len(t) == 2:
        return t
    raise ValueError(f"bad bracket term {t!r}; expected (k, coefficient)")


def from_brackets(dim: int, labels: Sequence[str] | None, bracket_list: Iterable) -> LieAlgebra:
    """Build a normalized algebra from ``(i, j, terms)`` entries.

    ``terms`` is either a single 1-based index ``k`` (coefficient 1), or an
    iterable of ``(k, coefficient)``.  Entries with ``i > j`` are flipped with
    a sign change, repeated keys are summed and zero coefficients dropped.
    Jacobi is not checked here.
    """
    if labels is None:
        labels = [f"e{i}" for i in range(1, dim + 1)]
    labels = tuple(labels)
    acc: dict[tuple[int, int], dict[int, Fraction]] = {}
    for entry in bracket_list:
        i, j, terms = entry
        if isinstance(terms, int):
            terms = [(terms, 1)]
        for idx in (i, j):
            if not 1 <= idx <= dim:
                raise IndexOutOfRange(f"basis index {idx} outside 1..{dim}")
        if i == j:
            raise DiagonalBracket(f"[X{i}, X{i}] must not be specified")
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        slot = acc.setdefault((i, j), {})
        for term in terms:
            k, c = _coerce_term(term)
            if isinstance(c, float):
                raise TypeError(f"coefficient {c!r} is a float; use int or Fraction")
            if not 1 <= k <= dim:
                raise IndexOutOfRange(f"basis index {k} outside 1..{dim}")
            slot[k] = slot.get(k, Fraction(0)) + sign * Fraction(c)
    brackets = {}
    for key in sorted(acc):
        terms = tuple((k, c) for k, c in sorted(acc[key].items()) if c)
        if terms:
            brackets[key] = terms
    return LieAlgebra(dim, labels, brackets)


def abelian(dim: int) -> LieAlgebra:
    return from_brackets(dim, None, [])


@dataclass(frozen=True)
class JacobiViolation:
    i: int
    j: int
    k: int
    residual: Vector


def _sparse_bracket(g: LieAlgebra, u: dict[int, Fraction], v: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    table = g._table
    for a, x in u.items():
        row = table.get(a)
        if not row:
            continue
        for b, y in v.items():
            terms = row.get(b)
            if terms:
                s = x * y
                for k, c in terms.items():
                    out[k] = out.get(k, 0) + s * c
    return out


def jacobi_residual(g: LieAlgebra, i: int, j: int, k: int) -> Vector:
    """[[Xi,Xj],Xk] + [[Xk,Xi],Xj] + [[Xj,Xk],Xi] for 1-based indices."""
    total: dict[int, Fraction] = {}
    for a, b, c in ((i, j, k), (k, i, j), (j, k, i)):
        inner = _sparse_bracket(g, {a - 1: 1}, {b - 1: 1})
        if inner:
            for t, x in _sparse_bracket(g, inner, {c - 1: 1}).items():
                total[t] = total.get(t, 0) + x
    return tuple(Fraction(total.get(p, 0)) for p in range(g.dim))


def verify_jacobi(g: LieAlgebra) -> list[JacobiViolation]:
    """Every basis triple i < j < k whose Jacobi residual is nonzero."""
    bad = []
    for i, j, k in combinations(range(1, g.dim + 1), 3):
        r = jacobi_residual(g, i, j, k)
        if any(r):
            bad.append(JacobiViolation(i, j, k, r))
    return bad


def ad_matrix(g: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of Y -> [x, Y]; column j is [x, X_{j+1}]."""
    cols = [g.bracket(x, g.basis_vector(j)) for j in range(1, g.dim + 1)]
    return Matrix.from_rows([[cols[j][i] for j in range(g.dim)] for i in range(g.dim)], g.dim)


def bracket_subspaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """[A, B] = span of brackets of basis vectors."""
    eb = EchelonBuilder(g.dim)
    for u in a.vectors:
        for v in b.vectors:
            eb.add(g.bracket(u, v))
    return Subspace._from_builder(eb)


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    """C^0 = g, C^{k+1} = [g, C^k], up to and including the first repeated term."""
    full = Subspace.full(g.dim)
    series = [full]
    while True:
        nxt = bracket_subspaces(g, full, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def lcs_dims(g: LieAlgebra) -> list[int]:
    return [s.dim for s in lower_central_series(g)]


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def nilindex(g: LieAlgebra) -> int | None:
    """First k with C^k g = 0, or None if g is not nilpotent."""
    series = lower_central_series(g)
    return len(series) - 1 if series[-1].dim == 0 else None


def derived_algebra(g: LieAlgebra) -> Subspace:
    full = Subspace.full(g.dim)
    return bracket_subspaces(g, full, full)


def commutativity_index(g: LieAlgebra) -> int:
    """Smallest k >= 0 such that C^k g is abelian."""
    series = lower_central_series(g)
    if series[-1].dim != 0:
        raise NotNilpotent("commutativity index is defined for nilpotent algebras")
    for k, c in enumerate(series):
        if bracket_subspaces(g, c, c).dim == 0:
            return k
    raise AssertionError("unreachable: the zero ideal is abelian")


def char_seq_at(g: LieAlgebra, x: Sequence) -> Partition:
    """Jordan type of ad(x) for x outside the derived algebra."""
    if derived_algebra(g).contains(x):
        raise VectorInDerivedAlgebra("x lies in C^1 g")
    return nilpotent_jordan_partition(ad_matrix(g, x))


@dataclass(frozen=True)
class CharSeqSearch:
    partition: Partition
    witness: Vector
    candidates: int


def char_seq_search(g: LieAlgebra, seed: int = 0, samples: int = 64) -> CharSeqSearch:
    """Lexicographic max of c(x) over basis vectors outside C^1 g plus random combinations.

    Random vectors have integer coordinates in -3..3 drawn from
    ``random.Random(seed)``; those landing in C^1 g are skipped.  The result is
    a certified lower bound for the characteristic sequence.  Ties keep the
    first vector found, so basis vectors win over samples.
    """
    if not is_nilpotent(g):
        raise NotNilpotent("characteristic sequence needs a nilpotent algebra")
    c1 = derived_algebra(g)
    rng = random.Random(seed)
    candidates = [g.basis_vector(i) for i in range(1, g.dim + 1)]
    for _ in range(samples):
        candidates.append(tuple(Fraction(rng.randint(-3, 3)) for _ in range(g.dim)))
    best = None
    used = 0
    for x in candidates:
        if c1.contains(x):
            continue
        used += 1
        p = nilpotent_jordan_partition(ad_matrix(g, x))
        if best is None or p > best[0]:
            best = (p, tuple(x))
    if best is None:
        # g = 0
        return CharSeqSearch(Partition(), (), 0)
    return CharSeqSearch(best[0], best[1], used)


def char_seq_estimate(g: LieAlgebra, seed: int = 0, samples: int = 64) -> Partition:
    return char_seq_search(g, seed, samples).partition


def centralizer(g: LieAlgebra, s: Subspace) -> Subspace:
    """{x : [x, v] = 0 for all v in s}."""
    rows = []
    for v in s.vectors:
        cols = [g.bracket(g.basis_vector(a), v) for a in range(1, g.dim + 1)]
        for k in range(g.dim):
            rows.append({a: cols[a][k] for a in range(g.dim) if cols[a][k]})
    return sparse_kernel(rows, g.dim)


def center(g: LieAlgebra) -> Subspace:
    return centralizer(g, Subspace.full(g.dim))


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    full = Subspace.full(g.dim)
    return bracket_subspaces(g, full, s).is_subspace_of(s)


@dataclass(frozen=True)
class Projection:
    """Linear map g -> g/I onto the coordinates of a fixed complement.

    ``columns`` are the 0-based positions of the complement basis vectors in
    the ambient algebra (the non-pivot columns of the ideal's echelon basis).
    """

    ideal: Subspace
    columns: tuple

    def __call__(self, v: Sequence) -> Vector:
        r = self.ideal.reduce(v)
        return tuple(r[c] for c in self.columns)

    def image(self, s: Subspace) -> Subspace:
        return span([self(v) for v in s.vectors], len(self.columns))


def quotient(g: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, Projection]:
    """g / ideal on the complement spanned by basis vectors at non-pivot columns.

    Labels of the surviving basis vectors are kept.
    """
    if ideal.ambient_dim != g.dim:
        raise DimensionMismatch("ideal lives in a different space")
    if not is_ideal(g, ideal):
        raise NotAnIdeal("[g, I] is not contained in I")
    pivots = set(ideal.pivots)
    cols = tuple(c for c in range(g.dim) if c not in pivots)
    proj = Projection(ideal, cols)
    entries = []
    for a, b in combinations(range(len(cols)), 2):
        v = proj(g.bracket(g.basis_vector(cols[a] + 1), g.basis_vector(cols[b] + 1)))
        terms = [(k + 1, c) for k, c in enumerate(v) if c]
        if terms:
            entries.append((a + 1, b + 1, terms))
    labels = [g.labels[c] for c in cols]
    return from_brackets(len(cols), labels, entries), proj


def subalgebra(g: LieAlgebra, indices: Sequence[int]) -> LieAlgebra:
    """Restriction to the span of the given 1-based basis vectors, which must be closed."""
    idx = list(indices)
    pos = {i: p for p, i in enumerate(idx, start=1)}
    entries = []
    for a, b in combinations(idx, 2):
        for k, c in g.basis_bracket(a, b).items():
            if k not in pos:
                raise ValueError(f"[{g.labels[a-1]}, {g.labels[b-1]}] leaves the span")
            entries.append((pos[a], pos[b], [(pos[k], c)]))
    return from_brackets(len(idx), [g.labels[i - 1] for i in idx], entries)


@dataclass(frozen=True)
class AnalysisReport:
    dim: int
    lcs_dims: tuple
    nilindex: int | None
    commutativity_index: int | None
    char_seq_claimed_vector: Partition | None
    char_seq_sampled: Partition | None
    derived_dim: int


def analyze(g: LieAlgebra, seed: int = 0, samples: int = 64, vector=None) -> AnalysisReport:
    """Aggregate the series-level invariants of g.

    ``vector`` (label, 1-based index, or coordinates) is the candidate
    characteristic vector; it defaults to the first basis vector.
    """
    series = lower_central_series(g)
    nil = series[-1].dim == 0
    if vector is None:
        vector = 1
    x = g.basis_vector(vector) if isinstance(vector, (str, int)) else tuple(vector)
    claimed = sampled = None
    ci = None
    if nil:
        ci = commutativity_index(g)
        sampled = char_seq_estimate(g, seed, samples)
        if g.dim and not derived_algebra(g).contains(x):
            claimed = char_seq_at(g, x)
    return AnalysisReport(
        dim=g.dim,
        lcs_dims=tuple(s.dim for s in series),
        nilindex=len(series) - 1 if nil else None,
        commutativity_index=ci,
        char_seq_claimed_vector=claimed,
        char_seq_sampled=sampled,
        derived_dim=series[1].dim if len(series) > 1 else series[0].dim,
    )
