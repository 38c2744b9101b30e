from __future__ import annotations

import random
from fractions import Fraction

import pytest

from kabelian.catalog import build_g0, build_gm
from kabelian.errors import (
    DiagonalBracket,
    IndexOutOfRange,
    NotAnIdeal,
    NotNilpotent,
    VectorInDerivedAlgebra,
)
from kabelian.exactlin import Partition, span
from kabelian.liealg import (
    abelian,
    ad_matrix,
    analyze,
    center,
    char_seq_at,
    char_seq_search,
    commutativity_index,
    derived_algebra,
    from_brackets,
    is_ideal,
    is_nilpotent,
    lcs_dims,
    lower_central_series,
    nilindex,
    quotient,
    subalgebra,
    verify_jacobi,
)

F = Fraction


def heisenberg():
    return from_brackets(3, ["x", "y", "z"], [(1, 2, 3)])


def model_filiform(n):
    """[e1, e_j] = e_{j+1} for 2 <= j < n."""
    return from_brackets(n, None, [(1, j, j + 1) for j in range(2, n)])


def sl2():
    # [h, e] = 2e, [h, f] = -2f, [e, f] = h
    return from_brackets(3, ["h", "e", "f"], [(1, 2, [(2, 2)]), (1, 3, [(3, -2)]), (2, 3, 1)])


def rand_vec(rng, n):
    return tuple(F(rng.randint(-3, 3)) for _ in range(n))


def test_normalization_flips_and_sums():
    g = from_brackets(3, None, [(2, 1, 3), (1, 2, [(3, 2)])])
    assert g.brackets == {(1, 2): ((3, F(1)),)}
    assert from_brackets(3, None, [(1, 2, 3), (2, 1, 3)]).brackets == {}


def test_bad_entries():
    with pytest.raises(DiagonalBracket):
        from_brackets(3, None, [(1, 1, 2)])
    with pytest.raises(IndexOutOfRange):
        from_brackets(3, None, [(1, 4, 2)])
    with pytest.raises(IndexOutOfRange):
        from_brackets(3, None, [(1, 2, 5)])
    with pytest.raises(TypeError):
        from_brackets(3, None, [(1, 2, [(3, 0.5)])])


def test_bracket_antisymmetric_bilinear():
    g = model_filiform(6)
    rng = random.Random(1)
    for _ in range(20):
        x, y, z = (rand_vec(rng, 6) for _ in range(3))
        assert g.bracket(x, y) == tuple(-c for c in g.bracket(y, x))
        s = tuple(a + b for a, b in zip(x, z))
        assert g.bracket(s, y) == tuple(a + b for a, b in zip(g.bracket(x, y), g.bracket(z, y)))


def test_jacobi_detects_failure():
    assert verify_jacobi(heisenberg()) == []
    assert verify_jacobi(sl2()) == []
    bad = from_brackets(4, None, [(1, 2, 3), (1, 3, 4), (2, 3, 4)])
    assert verify_jacobi(bad) == []
    bad = from_brackets(4, None, [(1, 2, 3), (2, 3, 4), (1, 4, 4)])
    assert verify_jacobi(bad)


def test_ad_is_a_homomorphism():
    # ad [x, y] = [ad x, ad y] is Jacobi in operator form
    g = build_g0(9)
    rng = random.Random(5)
    for _ in range(10):
        x, y = rand_vec(rng, 9), rand_vec(rng, 9)
        assert ad_matrix(g, g.bracket(x, y)) == ad_matrix(g, x).commutator(ad_matrix(g, y))


def test_heisenberg_series():
    g = heisenberg()
    assert lcs_dims(g) == [3, 1, 0]
    assert nilindex(g) == 2
    assert commutativity_index(g) == 1
    assert center(g) == span([(0, 0, 1)], 3)


def test_abelian():
    g = abelian(4)
    assert lcs_dims(g) == [4, 0]
    assert commutativity_index(g) == 0
    assert center(g).dim == 4


def test_model_filiform_char_seq():
    g = model_filiform(7)
    assert lcs_dims(g) == [7, 5, 4, 3, 2, 1, 0]
    assert char_seq_at(g, g.basis_vector(1)) == Partition((6, 1))
    assert char_seq_search(g).partition == Partition((6, 1))


def test_sl2_not_nilpotent():
    g = sl2()
    assert not is_nilpotent(g)
    assert nilindex(g) is None
    with pytest.raises(NotNilpotent):
        commutativity_index(g)


def test_char_seq_rejects_derived_vectors():
    g = heisenberg()
    with pytest.raises(VectorInDerivedAlgebra):
        char_seq_at(g, (0, 0, 1))


def test_g0_invariants():
    for n in range(7, 11):
        g = build_g0(n)
        assert verify_jacobi(g) == []
        assert commutativity_index(g) == 1
        assert char_seq_at(g, g.basis_vector("X1")) == Partition((5,) + (1,) * (n - 5))
        assert derived_algebra(g).dim == 4


def test_gm_low_terms_do_not_commute():
    # [X_m, X_{m+1}] = +-X_{2m}, and both lie deep in the central series
    m = 5
    g = build_gm(m)
    series = lower_central_series(g)
    xm, xm1 = g.basis_vector(f"X{m}"), g.basis_vector(f"X{m + 1}")
    assert series[m - 2].contains(xm) and series[m - 2].contains(xm1)
    assert any(g.bracket(xm, xm1))
    assert commutativity_index(g) == m - 1


def test_quotient_by_center():
    g = model_filiform(5)
    z = center(g)
    assert is_ideal(g, z)
    q, proj = quotient(g, z)
    assert q.dim == 4
    assert verify_jacobi(q) == []
    assert lcs_dims(q) == [4, 2, 1, 0]
    # projection is a homomorphism
    rng = random.Random(2)
    for _ in range(10):
        x, y = rand_vec(rng, 5), rand_vec(rng, 5)
        assert proj(g.bracket(x, y)) == q.bracket(proj(x), proj(y))


def test_quotient_needs_an_ideal():
    g = model_filiform(5)
    with pytest.raises(NotAnIdeal):
        quotient(g, span([g.basis_vector(2)], 5))


def test_subalgebra():
    g = model_filiform(5)
    h = subalgebra(g, [1, 4, 5])
    assert h.labels == ("e1", "e4", "e5")
    assert h.basis_bracket(1, 2) == {3: 1}
    with pytest.raises(ValueError):
        subalgebra(g, [1, 2])


def test_analyze_report():
    rep = analyze(build_g0(7))
    assert rep.dim == 7
    assert rep.commutativity_index == 1
    assert rep.char_seq_sampled == Partition((5, 1, 1))
    assert rep.derived_dim == 4
