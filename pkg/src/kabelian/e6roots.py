"""E6 positive roots and the 2-abelian analysis of parabolic nilradicals.

Roots are integer 6-tuples of coefficients over the simple roots, numbered
Bourbaki-style: alpha_1 - alpha_3 - alpha_4 - alpha_5 - alpha_6 is the long
chain and alpha_2 hangs off alpha_4.  With this numbering the highest root is
(1, 2, 2, 3, 2, 1).

Brackets of root vectors are decided by root addition only: [X_a, X_b] is a
nonzero multiple of X_{a+b} exactly when a + b is a root.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable

from .errors import KabelianError

Root = tuple

E6_CARTAN = (
    (2, 0, -1, 0, 0, 0),
    (0, 2, 0, -1, 0, 0),
    (-1, 0, 2, -1, 0, 0),
    (0, -1, -1, 2, -1, 0),
    (0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, -1, 2),
)

# The sixteen subsets whose nilradicals are claimed 2-abelian.
L_SUBSETS = (
    (1, 4), (4, 6), (3, 5), (3, 4), (4, 5), (2, 3), (2, 5), (2, 4),
    (1, 2, 3), (2, 5, 6), (1, 2, 5), (2, 3, 6), (1, 4, 6), (1, 2, 6),
    (1, 3, 5), (3, 5, 6),
)


def simple_root(i: int) -> Root:
    return tuple(int(k == i - 1) for k in range(6))


def add(*roots: Root) -> Root:
    return tuple(sum(c) for c in zip(*roots))


def sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class RootSystem:
    positive_roots: frozenset
    cartan_matrix: tuple

    @property
    def roots(self) -> frozenset:
        return self.positive_roots | frozenset(tuple(-c for c in r) for r in self.positive_roots)

    def is_root(self, r: Root) -> bool:
        r = tuple(r)
        return r in self.positive_roots or tuple(-c for c in r) in self.positive_roots

    def sorted_positive(self) -> list[Root]:
        """Positive roots by height, then lexicographically."""
        return sorted(self.positive_roots, key=lambda r: (sum(r), r))


def _pairing(beta: Root, i: int, cartan) -> int:
    """<beta, alpha_i^vee> = sum_j beta_j A_{j i}."""
    return sum(b * cartan[j][i] for j, b in enumerate(beta))


def build_e6(cartan=E6_CARTAN) -> RootSystem:
    """Positive roots by closing the simple roots under simple reflections."""
    rank = len(cartan)
    simples = [tuple(int(k == i) for k in range(rank)) for i in range(rank)]
    pos = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                p = _pairing(beta, i, cartan)
                r = list(beta)
                r[i] -= p
                r = tuple(r)
                if all(c >= 0 for c in r) and any(r) and r not in pos:
                    pos.add(r)
                    nxt.append(r)
        frontier = nxt
    return RootSystem(frozenset(pos), tuple(tuple(row) for row in cartan))


def maximal_root(rs: RootSystem) -> Root:
    """The positive root dominating every other one coefficient-wise."""
    roots = rs.sorted_positive()
    top = roots[-1]
    if not all(all(a <= b for a, b in zip(r, top)) for r in roots):
        raise KabelianError("no unique maximal root")
    return top


def _check_subset(delta1: Iterable[int]) -> tuple:
    d = tuple(sorted(set(delta1)))
    if not d:
        raise KabelianError("Delta_1 must be nonempty")
    if any(not 1 <= i <= 6 for i in d):
        raise KabelianError(f"Delta_1 indices must lie in 1..6, got {d}")
    return d


def height(root: Root, delta1: Iterable[int]) -> int:
    """Sum of the coefficients of root on the simple roots in delta1 (1-based)."""
    return sum(root[i - 1] for i in delta1)


def phi2_plus(rs: RootSystem, delta1: Iterable[int]) -> list[Root]:
    """Positive roots with nonzero support on delta1, in sorted order."""
    d = _check_subset(delta1)
    return [r for r in rs.sorted_positive() if height(r, d) > 0]


def layers(rs: RootSystem, delta1: Iterable[int]) -> dict[int, list[Root]]:
    """Delta_1(k): the roots of Phi_2^+ of delta1-height k."""
    d = _check_subset(delta1)
    out: dict[int, list[Root]] = {}
    for r in phi2_plus(rs, d):
        out.setdefault(height(r, d), []).append(r)
    return dict(sorted(out.items()))


def nilradical_lcs_dims(rs: RootSystem, delta1: Iterable[int]) -> list[int]:
    """dim C^k n = number of roots in layers >= k+1, for k = 0, 1, ... down to 0."""
    lay = layers(rs, delta1)
    top = max(lay)
    return [sum(len(v) for h, v in lay.items() if h >= k + 1) for k in range(top + 1)]


def nilradical_lcs_by_closure(rs: RootSystem, delta1: Iterable[int]) -> list[int]:
    """Same dims computed by bracket closure: C^{k+1} = {a+b : a in Phi_2^+, b in C^k, a+b root}."""
    n = set(phi2_plus(rs, delta1))
    current = set(n)
    dims = [len(current)]
    while current:
        current = {add(a, b) for a in n for b in current if add(a, b) in n}
        dims.append(len(current))
    return dims


@dataclass(frozen=True)
class TwoAbelian:
    alpha: Root
    beta: Root

    verdict = "TwoAbelian"


@dataclass(frozen=True)
class OneAbelian:
    verdict = "OneAbelian"


@dataclass(frozen=True)
class DeeperAbelian:
    """C^2 n is not abelian; ``gamma + epsilon`` is a root with both heights >= 3."""

    gamma: Root
    epsilon: Root

    verdict = "DeeperAbelian"


def _summing_pair(rs: RootSystem, pool: list[Root], d, prefer: int | None = None):
    """A pair in pool summing to a positive root, or None.

    Pairs with both roots in layer ``prefer`` rank first; within a rank a pair
    summing to the highest root is taken over any other.
    """
    top = maximal_root(rs)
    best = None
    for a, b in combinations_with_replacement(pool, 2):
        s = add(a, b)
        if s not in rs.positive_roots:
            continue
        in_layer = prefer is not None and height(a, d) == prefer and height(b, d) == prefer
        key = (not in_layer, s != top)
        if best is None or key < best[0]:
            best = (key, (a, b))
    return None if best is None else best[1]


def two_abelian_witness(rs: RootSystem, delta1: Iterable[int]):
    """Classify n(delta1) as OneAbelian, TwoAbelian (with a witness) or DeeperAbelian."""
    d = _check_subset(delta1)
    n2 = phi2_plus(rs, d)
    c1 = [r for r in n2 if height(r, d) >= 2]
    c2 = [r for r in n2 if height(r, d) >= 3]
    pair = _summing_pair(rs, c1, d, prefer=2)
    if pair is None:
        return OneAbelian()
    deep = _summing_pair(rs, c2, d)
    if deep is not None:
        return DeeperAbelian(*deep)
    return TwoAbelian(*pair)


@dataclass(frozen=True)
class WitnessCheck:
    delta1: tuple
    alpha: Root
    beta: Root
    alpha_in_phi2: bool
    beta_in_phi2: bool
    heights: tuple
    sum_in_phi2: bool

    @property
    def valid(self) -> bool:
        """Both roots in C^1 n and their bracket nonzero: enough to show C^1 n is not abelian."""
        return (
            self.alpha_in_phi2
            and self.beta_in_phi2
            and min(self.heights) >= 2
            and self.sum_in_phi2
        )

    @property
    def ok(self) -> bool:
        """The strict form: both heights exactly 2."""
        return (
            self.alpha_in_phi2
            and self.beta_in_phi2
            and self.heights == (2, 2)
            and self.sum_in_phi2
        )


def check_witness(rs: RootSystem, delta1: Iterable[int], alpha: Root, beta: Root) -> WitnessCheck:
    d = _check_subset(delta1)
    n2 = set(phi2_plus(rs, d))
    return WitnessCheck(
        delta1=d,
        alpha=tuple(alpha),
        beta=tuple(beta),
        alpha_in_phi2=tuple(alpha) in n2,
        beta_in_phi2=tuple(beta) in n2,
        heights=(height(alpha, d), height(beta, d)),
        sum_in_phi2=add(alpha, beta) in n2,
    )


def published_witnesses() -> list[tuple[tuple, Root, Root, Root]]:
    """The eleven published (delta1, alpha, beta, alpha+beta) witnesses, literally transcribed.

    delta = highest root, delta_1 = sum of the simple roots.
    """
    a = simple_root
    d = (1, 2, 2, 3, 2, 1)
    d1 = (1, 1, 1, 1, 1, 1)

    def lin(base, plus=(), minus=()):
        r = base
        for i in plus:
            r = add(r, a(i))
        for i in minus:
            r = sub(r, a(i))
        return r

    return [
        ((1, 4), lin(d1, minus=(5, 6)), lin(d, minus=(1, 2, 4)), d),
        ((3, 5), d1, lin(d1, plus=(4,), minus=(1, 6)), d),
        ((4, 5), lin(d1, minus=(1, 2, 6)), d1, lin(d, minus=(2, 4))),
        ((2, 3), d1, lin(d1, minus=(1, 2, 6)), lin(d, minus=(2, 4))),
        ((2, 4), d1, lin(d1, plus=(4,), minus=(1, 6)), d),
        ((1, 2, 3), sub(d, d1), lin(d1, minus=(2,)), lin(d, minus=(2,))),
        ((1, 2, 5), sub(d, d1), lin(d1, minus=(2,)), lin(d, minus=(2,))),
        ((1, 3, 6), lin(d1, minus=(6,)), lin(d1, minus=(1, 2)), lin(d, minus=(2, 4))),
        ((1, 4, 6), lin(d1, minus=(6,)), lin(d1, minus=(1, 2)), lin(d, minus=(2, 4))),
        ((1, 2, 6), lin(d1, minus=(1,)), lin(d1, plus=(4,)), d),
        ((1, 3, 5), lin(d1, minus=(2, 6)), lin(d1, plus=(4,)), lin(d, minus=(2,))),
    ]
