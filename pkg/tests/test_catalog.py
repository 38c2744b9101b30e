from __future__ import annotations

from fractions import Fraction

import pytest

from kabelian import catalog as cat
from kabelian.derivations import cocycle2_check
from kabelian.errors import BoundsViolation, DimensionTooSmall, InadmissibleDimension, MissingParameter, UnexpectedParameter
from kabelian.exactlin import Partition
from kabelian.liealg import char_seq_at, commutativity_index, derived_algebra, lcs_dims, verify_jacobi


def test_family_count_and_parity():
    fams = cat.list_families()
    assert [f.family_id for f in fams] == list(range(1, 46))
    assert cat.CATALOG[1].dimensions(7, 16) == [8, 10, 12, 14, 16]
    assert cat.CATALOG[3].dimensions(7, 16) == [9, 11, 13, 15]
    assert cat.CATALOG[2].min_dim == 10
    assert cat.CATALOG[8].min_dim == 7


def test_instance_count():
    inst = cat.catalog_instances(7, 16)
    assert len(inst) == 242
    assert len(set(inst)) == len(inst)


def test_g0_brackets():
    g = cat.build_g0(8)
    x = lambda i: g.basis_vector(f"X{i}")
    assert g.bracket(x(1), x(2)) == x(3)
    assert g.bracket(x(1), x(5)) == x(6)
    assert not any(g.bracket(x(2), x(3)))
    assert lcs_dims(g) == [8, 4, 3, 2, 1, 0]


def test_g0_too_small():
    with pytest.raises(DimensionTooSmall):
        cat.build_g0(6)


def test_inadmissible_dimension():
    with pytest.raises(InadmissibleDimension):
        cat.build_family(1, 9)
    with pytest.raises(InadmissibleDimension):
        cat.build_family(2, 8)  # m >= 5
    with pytest.raises(InadmissibleDimension):
        cat.build_family(46, 8)


def test_parameter_handling():
    with pytest.raises(MissingParameter):
        cat.build_family(24, 7)
    with pytest.raises(UnexpectedParameter):
        cat.build_family(11, 7, alpha=1)
    g = cat.build_family(24, 7, alpha=Fraction(3, 2))
    x = lambda i: g.basis_vector(f"X{i}")
    # alpha * phi2: [X3, X2] = alpha X5 on top of the law
    assert g.bracket(x(3), x(2))[4] == Fraction(3, 2)


def test_family_terms_listed():
    terms = [str(t) for t in cat.family_terms(10, 11)]
    assert terms == ["phi_{1,1}", "psi1_{2,3}", "psi1_{4,5}"]
    # below the sum's range only the fixed part remains
    assert [str(t) for t in cat.family_terms(10, 7)] == ["phi_{1,1}"]


@pytest.mark.parametrize("n", range(7, 13))
def test_cocycles_on_g0(n):
    g = cat.build_g0(n)
    for name, c in cat.all_cocycles(n).items():
        assert cocycle2_check(g, c) == [], name


@pytest.mark.parametrize("fid", range(1, 46))
def test_smallest_instance(fid):
    n = cat.CATALOG[fid].min_dim
    alpha = 1 if cat.CATALOG[fid].has_param else None
    g = cat.build_family(fid, n, alpha)
    assert verify_jacobi(g) == []
    assert commutativity_index(g) == 2
    assert derived_algebra(g).dim == cat.CATALOG[fid].expected_c1_dim
    assert char_seq_at(g, g.basis_vector("X1")) == Partition((5,) + (1,) * (n - 5))


def test_expected_cn():
    assert cat.expected_cn(11, 7)
    assert not cat.expected_cn(11, 9)
    assert cat.expected_cn(24, 7, 2)
    # alpha = 0 reduces families 24, 25 to 11, 12
    assert cat.expected_cn(24, 7, 0) == cat.expected_cn(11, 7)
    assert cat.build_family(24, 7, 0).same_constants(cat.build_family(11, 7))


@pytest.mark.parametrize("m", [4, 5, 6])
def test_gm(m):
    g = cat.build_gm(m)
    assert g.dim == 2 * m + 2
    assert verify_jacobi(g) == []
    assert char_seq_at(g, g.basis_vector("X1")) == Partition((2 * m - 1, 2, 1))


def test_gm_factor_matches_direct_form():
    for m in (4, 5):
        for k in range(m, 2 * m - 1):
            q = cat.gm_factor(m, k)
            assert q == cat.gm_factor_expected(m, k)


def test_mk_bounds():
    with pytest.raises(BoundsViolation):
        cat.gm_factor(4, 7)
    with pytest.raises(BoundsViolation):
        cat.build_rmk(5, 4)


def test_rmk_jacobi_requires_a_equal_b():
    assert verify_jacobi(cat.build_rmk(4, 4)) == []
    assert verify_jacobi(cat.build_rmk(4, 4, a=2, b=2)) == []
    assert verify_jacobi(cat.build_rmk(4, 4, a=1, b=2))


def test_smk():
    s = cat.build_smk(5, 6)
    assert "X12" not in s.labels
    n = cat.nilradical_part(s)
    assert char_seq_at(n, n.basis_vector("X1")) == Partition((6, 1, 1))
    assert commutativity_index(n) == 1
