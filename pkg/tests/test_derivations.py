from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from kabelian.catalog import CATALOG, build_family, build_g0
from kabelian.derivations import (
    TwoCochain,
    cocycle2_check,
    derivation_space,
    diagonal_torus,
    inner_derivation,
    is_characteristically_nilpotent,
    is_derivation,
    weights_to_derivation,
)
from kabelian.exactlin import Matrix
from kabelian.liealg import abelian, from_brackets

F = Fraction


def heisenberg():
    return from_brackets(3, None, [(1, 2, 3)])


def model_filiform(n):
    return from_brackets(n, None, [(1, j, j + 1) for j in range(2, n)])


def der_dim_by_sympy(g) -> int:
    """Independent oracle: solve the derivation equations with sympy's rank."""
    n = g.dim
    rows = []
    for i, j in combinations(range(1, n + 1), 2):
        # D[Xi,Xj] - [D Xi, Xj] - [Xi, D Xj] = 0, coordinate k
        for k in range(1, n + 1):
            row = [0] * (n * n)
            for m, c in g.basis_bracket(i, j).items():
                row[(k - 1) * n + (m - 1)] += c
            for a in range(1, n + 1):
                # D X_i = sum_a D[a][i] X_a
                for kk, c in g.basis_bracket(a, j).items():
                    if kk == k:
                        row[(a - 1) * n + (i - 1)] -= c
                for kk, c in g.basis_bracket(i, a).items():
                    if kk == k:
                        row[(a - 1) * n + (j - 1)] -= c
            rows.append(row)
    if not rows:
        return n * n
    return n * n - sympy.Matrix(rows).rank()


@pytest.mark.parametrize(
    "g",
    [heisenberg(), abelian(3), model_filiform(5), model_filiform(6), build_g0(7), build_family(11, 7)],
    ids=["heis", "ab3", "fil5", "fil6", "g0_7", "g11_7"],
)
def test_derivation_dimension_matches_sympy(g):
    assert derivation_space(g).dim == der_dim_by_sympy(g)


def test_known_dimensions():
    assert derivation_space(abelian(3)).dim == 9
    assert derivation_space(heisenberg()).dim == 6


def test_basis_elements_are_derivations():
    g = build_family(11, 7)
    for d in derivation_space(g).matrices():
        assert is_derivation(g, d) == []


def test_inner_derivations_are_derivations():
    g = build_g0(8)
    rng = random.Random(3)
    der = derivation_space(g)
    for _ in range(5):
        x = tuple(F(rng.randint(-3, 3)) for _ in range(g.dim))
        d = inner_derivation(g, x)
        assert is_derivation(g, d) == []
        assert der.contains(d)


def test_non_derivation_reported():
    g = heisenberg()
    d = Matrix.diagonal([1, 0, 0])  # would need d(z) = z
    assert is_derivation(g, d)


def test_heisenberg_torus():
    t = diagonal_torus(heisenberg())
    assert t.dim == 2
    for w in t.vectors:
        assert is_derivation(heisenberg(), weights_to_derivation(w)) == []


def test_cn_examples():
    assert not is_characteristically_nilpotent(heisenberg())
    assert not is_characteristically_nilpotent(build_g0(7))
    res = is_characteristically_nilpotent(build_family(11, 7))
    assert res.nilpotent and res.profile[-1] == 0


def test_torus_forces_non_cn():
    for fid in (1, 2, 3, 4):
        g = build_family(fid, CATALOG[fid].min_dim)
        if diagonal_torus(g).dim:
            assert not is_characteristically_nilpotent(g)


def coboundary_of(g, f: Matrix) -> TwoCochain:
    """c(x, y) = [f x, y] + [x, f y] - f[x, y]: the coboundary of a 1-cochain."""
    n = g.dim
    vals = {}
    for i, j in combinations(range(1, n + 1), 2):
        x, y = g.basis_vector(i), g.basis_vector(j)
        a = g.bracket(f.apply(x), y)
        b = g.bracket(x, f.apply(y))
        c = f.apply(g.bracket(x, y))
        vals[(i, j)] = tuple(p + q - r for p, q, r in zip(a, b, c))
    return TwoCochain(n, vals)


def test_coboundaries_are_cocycles():
    g = build_g0(8)
    rng = random.Random(11)
    for _ in range(3):
        f = Matrix.from_rows([[rng.randint(-2, 2) for _ in range(8)] for _ in range(8)])
        assert cocycle2_check(g, coboundary_of(g, f)) == []


def test_non_cocycle_detected():
    g = model_filiform(5)
    c = TwoCochain.from_terms(5, {(2, 3): {1: 1}})
    assert cocycle2_check(g, c)


def test_cochain_normalization():
    c = TwoCochain.from_terms(3, {(2, 1): {3: 1}, (1, 2): {3: 2}})
    assert c.values == {(1, 2): (0, 0, 1)}
    assert c.at(2, 1) == (0, 0, -1)
    assert c((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert (c + c.scaled(-1)).values == {}


def random_derivation_charpoly(g, seed):
    rng = random.Random(seed)
    mats = derivation_space(g).matrices()
    n = g.dim
    d = [[0] * n for _ in range(n)]
    for m in mats:
        c = rng.randint(-5, 5)
        for i in range(n):
            for j in range(n):
                d[i][j] += c * m[i, j]
    x = sympy.Symbol("x")
    return sympy.Matrix(d).charpoly(x).as_expr(), x


@pytest.mark.parametrize("fid,n", [(34, 8), (36, 9), (37, 7), (39, 8)])
def test_non_nilpotent_derivation_exists(fid, n):
    # a derivation with a nonzero eigenvalue rules out characteristic nilpotence
    g = build_family(fid, n)
    assert not is_characteristically_nilpotent(g)
    p, x = random_derivation_charpoly(g, 0)
    assert sympy.expand(p - x**n) != 0


@pytest.mark.parametrize("fid,n", [(5, 8), (30, 8), (11, 7)])
def test_every_sampled_derivation_nilpotent(fid, n):
    g = build_family(fid, n)
    assert is_characteristically_nilpotent(g)
    for seed in range(3):
        p, x = random_derivation_charpoly(g, seed)
        assert sympy.expand(p - x**n) == 0
