"""Derivations, diagonal tori, characteristic nilpotence and 2-cocycles.

An endomorphism D of an n-dimensional algebra is flattened row-major into a
vector of length n*n: entry ``D[a][b]`` (the X_{a+1} coordinate of D X_{b+1})
sits at position ``a*n + b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import DimensionMismatch
from .exactlin import EchelonBuilder, Matrix, Subspace, sparse_kernel
from .liealg import LieAlgebra, ad_matrix


def _sc_table(g: LieAlgebra) -> dict[tuple[int, int], dict[int, Fraction]]:
    """0-based c[(i, j)][k] for all ordered pairs with a nonzero bracket."""
    out = {}
    for (i, j), terms in g.brackets.items():
        out[(i - 1, j - 1)] = {k - 1: c for k, c in terms}
        out[(j - 1, i - 1)] = {k - 1: -c for k, c in terms}
    return out


@dataclass(frozen=True)
class DerivationSpace:
    algebra_dim: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def matrices(self) -> list[Matrix]:
        n = self.algebra_dim
        return [Matrix(n, n, v) for v in self.space.vectors]

    def contains(self, d: Matrix) -> bool:
        return self.space.contains(d.entries)


def derivation_space(g: LieAlgebra) -> DerivationSpace:
    """Solve D[X_i,X_j] = [D X_i, X_j] + [X_i, D X_j] for all i < j."""
    n = g.dim
    c = _sc_table(g)
    # by_first[a] = list of (b, {k: c}) with [X_a, X_b] nonzero
    by_first: dict[int, list] = {}
    for (a, b), terms in c.items():
        by_first.setdefault(a, []).append((b, terms))
    rows = []
    for i, j in combinations(range(n), 2):
        eq: dict[int, dict[int, Fraction]] = {k: {} for k in range(n)}
        # D [X_i, X_j]: sum_l c_ij^l D[k][l]
        for l, cl in c.get((i, j), {}).items():
            for k in range(n):
                col = k * n + l
                eq[k][col] = eq[k].get(col, 0) + cl
        # - [D X_i, X_j]: - sum_a D[a][i] c_aj^k
        for a in range(n):
            for k, cv in c.get((a, j), {}).items():
                col = a * n + i
                eq[k][col] = eq[k].get(col, 0) - cv
        # - [X_i, D X_j]: - sum_a D[a][j] c_ia^k
        for a, terms in by_first.get(i, []):
            for k, cv in terms.items():
                col = a * n + j
                eq[k][col] = eq[k].get(col, 0) - cv
        for k in range(n):
            row = {col: v for col, v in eq[k].items() if v}
            if row:
                rows.append(row)
    return DerivationSpace(n, sparse_kernel(rows, n * n))


def is_derivation(g: LieAlgebra, d: Matrix) -> list[tuple[int, int, tuple]]:
    """Pairs (i, j), 1-based, where D[X_i,X_j] - [D X_i,X_j] - [X_i,D X_j] != 0, with the residual."""
    if d.shape != (g.dim, g.dim):
        raise DimensionMismatch(f"expected a {g.dim}x{g.dim} matrix, got {d.shape}")
    bad = []
    images = [d.column(j) for j in range(g.dim)]
    for i, j in combinations(range(1, g.dim + 1), 2):
        xi, xj = g.basis_vector(i), g.basis_vector(j)
        lhs = d.apply(g.bracket(xi, xj))
        r1 = g.bracket(images[i - 1], xj)
        r2 = g.bracket(xi, images[j - 1])
        res = tuple(a - b - c for a, b, c in zip(lhs, r1, r2))
        if any(res):
            bad.append((i, j, res))
    return bad


@dataclass(frozen=True)
class CNResult:
    """Outcome of the characteristic-nilpotence test.

    ``profile`` lists dim D_0 = dim Der(g), dim D_1, ... .  When the chain
    stalls above zero, ``stable`` is the nonzero subspace it stalls at.
    """

    nilpotent: bool
    profile: tuple
    stable: Subspace | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.nilpotent


def is_characteristically_nilpotent(g: LieAlgebra, der: DerivationSpace | None = None) -> CNResult:
    """Whether Der(g) is nilpotent, via D_{t+1} = [Der(g), D_t] on matrix subspaces."""
    der = der if der is not None else derivation_space(g)
    n = g.dim
    base = der.matrices()
    current = base
    profile = [len(base)]
    while current:
        eb = EchelonBuilder(n * n)
        for a in base:
            for b in current:
                eb.add(a.commutator(b).entries)
                if eb.rank == len(current):
                    break
            if eb.rank == len(current):
                break
        if eb.rank == len(current):
            stable = Subspace._from_builder(eb)
            return CNResult(False, tuple(profile), stable)
        current = [Matrix(n, n, v) for v in eb.rref_rows()]
        profile.append(len(current))
    return CNResult(True, tuple(profile))


def weight_system(g: LieAlgebra) -> list[dict[int, int]]:
    """Rows of the linear system lambda_i + lambda_j - lambda_k = 0, one per nonzero c_ij^k."""
    rows = []
    for i, j, k, _ in g.structure_constants():
        row: dict[int, int] = {}
        for idx, s in ((i, 1), (j, 1), (k, -1)):
            row[idx - 1] = row.get(idx - 1, 0) + s
        row = {a: v for a, v in row.items() if v}
        if row:
            rows.append(row)
    return rows


def diagonal_torus(g: LieAlgebra) -> Subspace:
    """Weight vectors of the diagonal derivations in the given basis.

    A nonzero solution is a semisimple derivation, so dim >= 1 proves
    rank(g) >= 1.  Dimension 0 says nothing about other bases.
    """
    return sparse_kernel(weight_system(g), g.dim)


def weights_to_derivation(weights: Sequence) -> Matrix:
    return Matrix.diagonal(list(weights))


@dataclass(frozen=True)
class TwoCochain:
    """Alternating bilinear map given on basis pairs (i, j), i < j, 1-based.

    Values are coordinate vectors of length ``algebra_dim``.
    """

    algebra_dim: int
    values: dict = field(hash=False)

    def __post_init__(self):
        norm = {}
        n = self.algebra_dim
        for (i, j), v in self.values.items():
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise DimensionMismatch(f"bad cochain key {(i, j)}")
            v = tuple(Fraction(x) for x in v)
            if len(v) != n:
                raise DimensionMismatch("cochain value has wrong length")
            if i > j:
                i, j, v = j, i, tuple(-x for x in v)
            prev = norm.get((i, j))
            if prev is not None:
                v = tuple(a + b for a, b in zip(prev, v))
            norm[(i, j)] = v
        norm = {k: v for k, v in sorted(norm.items()) if any(v)}
        object.__setattr__(self, "values", norm)

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[tuple[int, int], Mapping[int, object]]) -> "TwoCochain":
        """Build from sparse ``{(i, j): {k: c}}`` with 1-based keys."""
        vals = {}
        for key, t in terms.items():
            v = [Fraction(0)] * n
            for k, c in t.items():
                v[k - 1] += Fraction(c)
            vals[key] = tuple(v)
        return cls(n, vals)

    def at(self, i: int, j: int) -> tuple:
        if i == j:
            return (Fraction(0),) * self.algebra_dim
        if i < j:
            return self.values.get((i, j), (Fraction(0),) * self.algebra_dim)
        return tuple(-x for x in self.values.get((j, i), (Fraction(0),) * self.algebra_dim))

    def __call__(self, x: Sequence, y: Sequence) -> tuple:
        n = self.algebra_dim
        out = [Fraction(0)] * n
        for (i, j), v in self.values.items():
            s = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if s:
                for k, c in enumerate(v):
                    if c:
                        out[k] += s * c
        return tuple(out)

    def scaled(self, s) -> "TwoCochain":
        s = Fraction(s)
        return TwoCochain(self.algebra_dim, {k: tuple(s * x for x in v) for k, v in self.values.items()})

    def __add__(self, other: "TwoCochain") -> "TwoCochain":
        if self.algebra_dim != other.algebra_dim:
            raise DimensionMismatch("cochains on different spaces")
        vals = dict(self.values)
        for k, v in other.values.items():
            if k in vals:
                vals[k] = tuple(a + b for a, b in zip(vals[k], v))
            else:
                vals[k] = v
        return TwoCochain(self.algebra_dim, vals)

    def bracket_entries(self) -> list[tuple[int, int, list]]:
        """The cochain as ``(i, j, [(k, c), ...])`` entries for :func:`from_brackets`."""
        return [
            (i, j, [(k + 1, c) for k, c in enumerate(v) if c])
            for (i, j), v in self.values.items()
        ]


def coboundary(g: LieAlgebra, c: TwoCochain, x, y, z) -> tuple:
    """(dc)(x,y,z) with coefficients in the adjoint module."""
    br = g.bracket
    parts = (
        br(x, c(y, z)),
        tuple(-a for a in br(y, c(x, z))),
        br(z, c(x, y)),
        tuple(-a for a in c(br(x, y), z)),
        c(br(x, z), y),
        tuple(-a for a in c(br(y, z), x)),
    )
    return tuple(sum(col, Fraction(0)) for col in zip(*parts))


def cocycle2_check(g: LieAlgebra, c: TwoCochain) -> list[tuple[int, int, int, tuple]]:
    """Basis triples (1-based, i < j < k) where the coboundary of c is nonzero."""
    if c.algebra_dim != g.dim:
        raise DimensionMismatch("cochain and algebra dimensions differ")
    bad = []
    for i, j, k in combinations(range(1, g.dim + 1), 3):
        r = coboundary(g, c, g.basis_vector(i), g.basis_vector(j), g.basis_vector(k))
        if any(r):
            bad.append((i, j, k, r))
    return bad


def inner_derivation(g: LieAlgebra, x: Sequence) -> Matrix:
    return ad_matrix(g, x)
