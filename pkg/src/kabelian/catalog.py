"""Constructors for the classified (n-5)-filiform families and the rigid g_m series.

Every family is g_0^n plus a fixed list of cocycle terms.  The basis of g_0^n
is ``X1..X6, Y1..Y_{n-6}``; the cocycle maps below are named after the
standard notation:

=========  ==========================================================
psi1(i,j)  [Y_i, Y_j] = X6
psi(i, s)  [Y_i, X_l] = X_{l+s} for 2 <= l <= 6-s      (s = 2, 3, 4)
phi1k(k)   [X5, X2] = [X3, X4] = Y_k
phi3k(k)   [X3, X2] = Y_k
phi1       [X5, X2] = [X3, X4] = X6
phi2       [X3, X2] = X5, [X4, X2] = X6
phi3       [X3, X2] = X6
=========  ==========================================================

Family recipes are frozen in ``_RECIPES``.  A family of dimension 2m (even)
or 2m+1 (odd) is admissible for m >= min_m; the trailing psi1 sum is written
as ``PsiSum(start, end_offset, shift, guard)`` meaning
``sum_{t=start}^{m+end_offset} psi1(2t+shift, 2t+shift+1)``, taken only when
``m > guard``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .derivations import TwoCochain
from .errors import (
    BoundsViolation,
    DimensionTooSmall,
    InadmissibleDimension,
    MissingParameter,
    UnexpectedParameter,
)
from .exactlin import Subspace, span
from .liealg import LieAlgebra, from_brackets, lower_central_series, quotient

# -- g_0^n and the cocycle maps ---------------------------------------------


def g0_labels(n: int) -> list[str]:
    return [f"X{i}" for i in range(1, 7)] + [f"Y{i}" for i in range(1, n - 5)]


def _x(i: int) -> int:
    return i


def _y(n: int, i: int) -> int:
    if not 1 <= i <= n - 6:
        raise InadmissibleDimension(f"Y{i} does not exist in dimension {n}")
    return 6 + i


def build_g0(n: int) -> LieAlgebra:
    """[X1, X_{j-1}] = X_j for 3 <= j <= 6; all Y central."""
    if n < 7:
        raise DimensionTooSmall(f"g_0^n needs n >= 7, got {n}")
    return from_brackets(n, g0_labels(n), [(1, j - 1, j) for j in range(3, 7)])


def psi1(n: int, i: int, j: int) -> TwoCochain:
    return TwoCochain.from_terms(n, {(_y(n, i), _y(n, j)): {6: 1}})


def psi(n: int, i: int, shift: int) -> TwoCochain:
    if shift not in (2, 3, 4):
        raise ValueError("psi shift must be 2, 3 or 4")
    y = _y(n, i)
    return TwoCochain.from_terms(n, {(y, l): {l + shift: 1} for l in range(2, 7 - shift)})


def phi1k(n: int, k: int) -> TwoCochain:
    y = _y(n, k)
    return TwoCochain.from_terms(n, {(5, 2): {y: 1}, (3, 4): {y: 1}})


def phi3k(n: int, k: int) -> TwoCochain:
    return TwoCochain.from_terms(n, {(3, 2): {_y(n, k): 1}})


def phi1(n: int) -> TwoCochain:
    return TwoCochain.from_terms(n, {(5, 2): {6: 1}, (3, 4): {6: 1}})


def phi2(n: int) -> TwoCochain:
    return TwoCochain.from_terms(n, {(3, 2): {5: 1}, (4, 2): {6: 1}})


def phi3(n: int) -> TwoCochain:
    return TwoCochain.from_terms(n, {(3, 2): {6: 1}})


def all_cocycles(n: int) -> dict[str, TwoCochain]:
    """Every named cocycle map on g_0^n, keyed by a readable name."""
    m = n - 6
    out: dict[str, TwoCochain] = {}
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            out[f"psi1_{i},{j}"] = psi1(n, i, j)
    for i in range(1, m + 1):
        for s in (2, 3, 4):
            out[f"psi_{i}^{s}"] = psi(n, i, s)
    for k in range(1, m + 1):
        out[f"phi1,{k}"] = phi1k(n, k)
        out[f"phi3,{k}"] = phi3k(n, k)
    out["phi1"] = phi1(n)
    out["phi2"] = phi2(n)
    out["phi3"] = phi3(n)
    return out


# -- family table -----------------------------------------------------------


@dataclass(frozen=True)
class CocycleTerm:
    """One summand of a recipe. ``kind`` is one of psi1, psi, phi1k, phi3k, phi1, phi2, phi3.

    ``alpha=True`` marks the term whose coefficient is the family parameter.
    """

    kind: str
    indices: tuple = ()
    alpha: bool = False

    def cochain(self, n: int, alpha: Fraction | None = None) -> TwoCochain:
        fn = _TERM_BUILDERS[self.kind]
        c = fn(n, *self.indices)
        return c.scaled(alpha) if self.alpha else c

    def __str__(self) -> str:
        name = {
            "psi1": "psi1_{%d,%d}",
            "psi": "psi_%d^%d",
            "phi1k": "phi_{1,%d}",
            "phi3k": "phi_{3,%d}",
        }.get(self.kind, self.kind)
        s = name % self.indices if self.indices else name
        return f"alpha*{s}" if self.alpha else s


_TERM_BUILDERS = {
    "psi1": psi1,
    "psi": psi,
    "phi1k": phi1k,
    "phi3k": phi3k,
    "phi1": phi1,
    "phi2": phi2,
    "phi3": phi3,
}


@dataclass(frozen=True)
class PsiSum:
    start: int
    end_offset: int
    shift: int
    guard: int | None = None

    def terms(self, m: int) -> list[CocycleTerm]:
        if self.guard is not None and not m > self.guard:
            return []
        return [
            CocycleTerm("psi1", (2 * t + self.shift, 2 * t + self.shift + 1))
            for t in range(self.start, m + self.end_offset + 1)
        ]


@dataclass(frozen=True)
class CatalogEntry:
    family_id: int
    parity: str  # "even" or "odd"
    min_m: int
    recipe: tuple
    conditional_terms: PsiSum
    has_param: bool
    expected_c1_dim: int

    def m_for(self, n: int) -> int | None:
        """The m with n = 2m (even) or 2m+1 (odd), or None on parity mismatch."""
        if self.parity == "even":
            return n // 2 if n % 2 == 0 else None
        return (n - 1) // 2 if n % 2 == 1 else None

    def admissible(self, n: int) -> bool:
        m = self.m_for(n)
        return m is not None and m >= self.min_m and n >= 7

    def dimensions(self, lo: int = 7, hi: int = 16) -> list[int]:
        return [n for n in range(lo, hi + 1) if self.admissible(n)]

    @property
    def min_dim(self) -> int:
        return self.dimensions(7, 64)[0]

    def terms(self, n: int) -> list[CocycleTerm]:
        m = self.m_for(n)
        return list(self.recipe) + self.conditional_terms.terms(m)


def _t(spec: str) -> CocycleTerm:
    """Parse a compact recipe token: 'f11', 'f32', 'p23' (psi_2^3), 'q24' (psi1_{2,4}), 'f1', 'af2'."""
    alpha = spec.startswith("a")
    if alpha:
        spec = spec[1:]
    if spec in ("f1", "f2", "f3"):
        return CocycleTerm("phi" + spec[1], (), alpha)
    if spec.startswith("f1") or spec.startswith("f3"):
        return CocycleTerm("phi%sk" % spec[1], (int(spec[2:]),), alpha)
    if spec.startswith("p"):
        return CocycleTerm("psi", (int(spec[1]), int(spec[2])), alpha)
    if spec.startswith("q"):
        return CocycleTerm("psi1", (int(spec[1]), int(spec[2])), alpha)
    raise ValueError(spec)


E, O = "even", "odd"
SHIFT_ODD_FIRST = -1  # pairs (2t-1, 2t)
SHIFT_EVEN_FIRST = 0  # pairs (2t, 2t+1)
SHIFT_ODD_LATE = 1  # pairs (2t+1, 2t+2)

# (id, parity, min_m, recipe tokens, PsiSum)
# Family 10's upper limit is m-3 (the printed m-1 would index Y's that do not
# exist).  Family 9's sum is over psi1.
_RECIPES = [
    (1, E, 4, "f11 f32 p23", PsiSum(2, -3, -1, 4)),
    (2, E, 5, "f11 f32 p33", PsiSum(2, -3, -1)),
    (3, O, 4, "f11 f32 p33", PsiSum(2, -3, 0, 4)),
    (4, E, 4, "f11 f32", PsiSum(2, -3, -1, 4)),
    (5, E, 4, "f11 f2 f32 p23", PsiSum(2, -3, -1, 4)),
    (6, O, 4, "f11 p23", PsiSum(2, -3, 0)),
    (7, E, 4, "f11 p23", PsiSum(2, -3, -1, 4)),
    (8, O, 3, "f11 f2", PsiSum(2, -3, 0, 3)),
    (9, O, 3, "f11 f3", PsiSum(1, -3, 0, 3)),
    (10, O, 3, "f11", PsiSum(1, -3, 0, 3)),
    (11, O, 3, "f31 p13 p14", PsiSum(1, -3, 0, 3)),
    (12, E, 4, "f31 p13 p14 p24", PsiSum(2, -3, -1, 4)),
    (13, E, 4, "f31 p13 p24", PsiSum(2, -3, -1, 4)),
    (14, O, 4, "f31 p13", PsiSum(1, -3, 0)),
    (15, O, 4, "f31 f1 p14 p23", PsiSum(1, -3, 0)),
    (16, E, 4, "f31 f1 p14 p23", PsiSum(2, -3, -1, 4)),
    (17, O, 3, "f31 f1 p14", PsiSum(1, -3, 0, 3)),
    (18, O, 4, "f31 f1 p34 p23", PsiSum(2, -3, 0, 4)),
    (19, E, 5, "f31 f1 q24 p23 p34", PsiSum(2, -4, 1, 5)),
    (20, E, 4, "f31 f1 p23", PsiSum(2, -3, -1, 4)),
    (21, O, 4, "f31 f1 p23", PsiSum(1, -3, 0)),
    (22, E, 4, "f31 f1 p24", PsiSum(2, -3, -1, 4)),
    (23, O, 3, "f31 f1", PsiSum(1, -3, 0)),
    (24, O, 3, "f31 af2 p13 p14", PsiSum(1, -3, 0, 3)),
    (25, E, 4, "f31 af2 p13 p14 p24", PsiSum(2, -3, -1, 4)),
    (26, E, 4, "f31 f2 p13 p24", PsiSum(2, -3, -1, 4)),
    (27, O, 3, "f31 f2 p13", PsiSum(1, -3, 0, 3)),
    (28, O, 4, "f31 f1 f2 p23 p34", PsiSum(2, -3, 0, 4)),
    (29, E, 5, "f31 f1 f2 p23 p34 q24", PsiSum(2, -4, 1, 5)),
    (30, E, 4, "f31 f1 f2 p23", PsiSum(2, -3, -1, 4)),
    (31, O, 4, "f31 f1 f2 p23", PsiSum(1, -3, 0)),
    (32, E, 4, "f31 f1 f2 p24", PsiSum(2, -3, -1, 4)),
    (33, E, 4, "f1 p13 p24", PsiSum(2, -3, -1, 4)),
    (34, E, 4, "f1 f2 p13 p24", PsiSum(2, -3, -1, 4)),
    (35, O, 4, "f1 p13 p24 q13", PsiSum(2, -3, 0, 4)),
    (36, O, 4, "f1 f2 p13 p24 q13", PsiSum(2, -3, 0, 4)),
    (37, O, 3, "f1 p13 p14", PsiSum(1, -3, 0, 3)),
    (38, E, 4, "f1 p13", PsiSum(1, -3, -1)),
    (39, E, 4, "f1 f2 p13", PsiSum(1, -3, -1)),
    (40, O, 3, "f1 p13", PsiSum(1, -3, 0)),
    (41, O, 3, "f1 f2 p13", PsiSum(1, -3, 0, 3)),
    (42, O, 3, "f1 p14", PsiSum(1, -3, 0, 3)),
    (43, O, 3, "f1 f2 p14", PsiSum(1, -3, 0, 3)),
    (44, E, 3, "f1", PsiSum(1, -3, -1, 3)),
    (45, E, 3, "f1 f2", PsiSum(1, -3, -1, 3)),
]


def _expected_c1(fid: int) -> int:
    if fid <= 5:
        return 6
    if fid <= 32:
        return 5
    return 4


CATALOG: dict[int, CatalogEntry] = {
    fid: CatalogEntry(
        family_id=fid,
        parity=par,
        min_m=mm,
        recipe=tuple(_t(s) for s in toks.split()),
        conditional_terms=ps,
        has_param=fid in (24, 25),
        expected_c1_dim=_expected_c1(fid),
    )
    for fid, par, mm, toks, ps in _RECIPES
}

# (n, family) pairs whose algebras are characteristically nilpotent in the
# classification; families 24 and 25 only for alpha != 0.
CN_INSTANCES = frozenset({
    (7, 11), (9, 15), (7, 17), (7, 24), (7, 27), (9, 36), (7, 37), (7, 41),
    (8, 12), (8, 16), (8, 25), (8, 26), (8, 34), (8, 39),
})


# At alpha = 0 the parametrized families reduce to these (same recipe minus alpha*phi2).
ALPHA_ZERO_TWIN = {24: 11, 25: 12}


def expected_cn(family_id: int, n: int, alpha=None) -> bool:
    """Membership in the listed characteristically nilpotent set.

    The list names families 24 and 25 only for alpha != 0; at alpha = 0 they
    coincide with families 11 and 12, whose status is used instead.
    """
    if family_id in ALPHA_ZERO_TWIN and (alpha is None or Fraction(alpha) == 0):
        return (n, ALPHA_ZERO_TWIN[family_id]) in CN_INSTANCES
    return (n, family_id) in CN_INSTANCES


def list_families() -> list[CatalogEntry]:
    return [CATALOG[i] for i in sorted(CATALOG)]


def family_terms(family_id: int, n: int) -> list[CocycleTerm]:
    entry = _entry(family_id)
    if not entry.admissible(n):
        raise InadmissibleDimension(
            f"family {family_id} is {entry.parity}-dimensional with m >= {entry.min_m}; n = {n} is not admissible"
        )
    return entry.terms(n)


def _entry(family_id: int) -> CatalogEntry:
    try:
        return CATALOG[family_id]
    except KeyError:
        raise InadmissibleDimension(f"no family {family_id}; ids run 1..45") from None


def build_family(family_id: int, n: int, alpha=None) -> LieAlgebra:
    """g_0^n plus the family's cocycle terms, as one bracket table."""
    entry = _entry(family_id)
    if entry.has_param and alpha is None:
        raise MissingParameter(f"family {family_id} needs alpha")
    if not entry.has_param and alpha is not None:
        raise UnexpectedParameter(f"family {family_id} takes no parameter")
    terms = family_terms(family_id, n)
    a = Fraction(alpha) if alpha is not None else None
    law = TwoCochain(n, {})
    for term in terms:
        law = law + term.cochain(n, a)
    g0 = build_g0(n)
    entries = [(i, j, list(t)) for (i, j), t in g0.brackets.items()]
    entries += law.bracket_entries()
    return from_brackets(n, g0_labels(n), entries)


def family_name(family_id: int, n: int, alpha=None) -> str:
    if alpha is None:
        return f"g^{family_id}_{n}"
    return f"g^{family_id},{Fraction(alpha)}_{n}"


def catalog_instances(lo: int = 7, hi: int = 16, alphas: Iterable = (0, 1, -1, Fraction(3, 2))):
    """(family_id, n, alpha) for every admissible instance in [lo, hi]."""
    out = []
    for entry in list_families():
        for n in entry.dimensions(lo, hi):
            if entry.has_param:
                out.extend((entry.family_id, n, Fraction(a)) for a in alphas)
            else:
                out.append((entry.family_id, n, None))
    return out


# -- the rigid-nilradical series g_m ----------------------------------------


def build_gm(m: int) -> LieAlgebra:
    """Dimension 2m+2 algebra of characteristic sequence (2m-1, 2, 1)."""
    if m < 4:
        raise DimensionTooSmall(f"g_m needs m >= 4, got {m}")
    dim = 2 * m + 2
    entries = [(1, j - 1, j) for j in range(3, 2 * m + 1)]
    for j in range(2, m + 1):
        entries.append((j, 2 * m + 1 - j, [(2 * m, (-1) ** j)]))
    entries.append((2, 3, 2 * m + 1))
    entries.append((1, 2 * m + 1, 2 * m + 2))
    entries.append((2, 4, 2 * m + 2))
    return from_brackets(dim, [f"X{i}" for i in range(1, dim + 1)], entries)


def _check_mk(m: int, k: int):
    if not (4 <= m <= k <= 2 * m - 2):
        raise BoundsViolation(f"need 4 <= m <= k <= 2m-2, got m={m}, k={k}")


def gm_factor(m: int, k: int) -> LieAlgebra:
    """g_m / C^k g_m on the surviving basis X1..X_{k+1}, X_{2m+1}, X_{2m+2}."""
    _check_mk(m, k)
    g = build_gm(m)
    ck = lower_central_series(g)[k]
    return quotient(g, ck)[0]


def gm_factor_expected(m: int, k: int) -> LieAlgebra:
    """The factor algebra written out directly from its defining equations."""
    _check_mk(m, k)
    labels = [f"X{i}" for i in range(1, k + 2)] + [f"X{2*m+1}", f"X{2*m+2}"]
    a, b = k + 2, k + 3  # positions of X_{2m+1}, X_{2m+2}
    entries = [(1, j - 1, j) for j in range(3, k + 2)]
    entries += [(2, 3, a), (1, a, b), (2, 4, b)]
    return from_brackets(k + 3, labels, entries)


def build_rmk(m: int, k: int, a=1, b=1) -> LieAlgebra:
    """Semidirect product of g_m/C^k g_m with a 2-dimensional torus.

    Basis order (V1, V2, X1..X_{k+1}, X_{2m+1}, X_{2m+2}).  The torus acts
    diagonally with the weights of :func:`rmk_weights`; ``a`` and ``b`` are the
    coefficients of [X2, X3] = a X_{2m+1} and [X2, X4] = b X_{2m+2}.
    """
    _check_mk(m, k)
    dim = k + 5
    labels = ["V1", "V2"] + [f"X{i}" for i in range(1, k + 2)] + [f"X{2*m+1}", f"X{2*m+2}"]

    def pos(j: int) -> int:
        if j == 2 * m + 1:
            return k + 4
        if j == 2 * m + 2:
            return k + 5
        return j + 2

    entries = []
    w1, w2 = rmk_weights(m, k)
    for v, w in ((1, w1), (2, w2)):
        for j, wt in w.items():
            if wt:
                entries.append((v, pos(j), [(pos(j), wt)]))
    entries += [(pos(1), pos(j), pos(j + 1)) for j in range(2, k + 1)]
    entries.append((pos(1), pos(2 * m + 1), pos(2 * m + 2)))
    entries.append((pos(2), pos(3), [(pos(2 * m + 1), a)]))
    entries.append((pos(2), pos(4), [(pos(2 * m + 2), b)]))
    return from_brackets(dim, labels, entries)


def rmk_weights(m: int, k: int) -> tuple[dict[int, int], dict[int, int]]:
    """Eigenvalues of ad V1 and ad V2 on X_j, keyed by the original index j.

    Obtained from lambda_1, lambda_2 + (k-1) lambda_1, lambda_j = lambda_2 +
    (k-3+j) lambda_1 (3 <= j <= k+1), lambda_{2m+1} = 2 lambda_2 + (2k-1) lambda_1,
    lambda_{2m+2} = 2 lambda_2 + 2k lambda_1 at (lambda_1, lambda_2) = (1, 0), (0, 1).
    """
    _check_mk(m, k)

    def weights(l1: int, l2: int) -> dict[int, int]:
        w = {1: l1, 2: l2 + (k - 1) * l1}
        for j in range(3, k + 2):
            w[j] = l2 + (k - 3 + j) * l1
        w[2 * m + 1] = 2 * l2 + (2 * k - 1) * l1
        w[2 * m + 2] = 2 * l2 + 2 * k * l1
        return w

    return weights(1, 0), weights(0, 1)


def build_smk(m: int, k: int) -> LieAlgebra:
    """r_{m,k} / <X_{2m+2}>."""
    r = build_rmk(m, k)
    top = r.basis_vector(r.dim)
    return quotient(r, span([top]))[0]


def nilradical_part(g: LieAlgebra) -> LieAlgebra:
    """Restriction of r_{m,k} or s_{m,k} to its X-labelled basis vectors."""
    from .liealg import subalgebra

    return subalgebra(g, [i for i in range(1, g.dim + 1) if g.labels[i - 1].startswith("X")])


def subspace_of_labels(g: LieAlgebra, labels: Iterable[str]) -> Subspace:
    return span([g.basis_vector(lab) for lab in labels], g.dim)
