from __future__ import annotations

from itertools import product

import pytest

from kabelian import e6roots as e6
from kabelian.errors import KabelianError

RS = e6.build_e6()
TOP = (1, 2, 2, 3, 2, 1)


def norm(v):
    a = e6.E6_CARTAN
    return sum(v[i] * a[i][j] * v[j] for i in range(6) for j in range(6))


def test_roots_match_quadratic_form_enumeration():
    # simply laced: positive roots are exactly the nonnegative vectors of norm 2
    brute = {v for v in product(*(range(t + 1) for t in TOP)) if any(v) and norm(v) == 2}
    assert brute == set(RS.positive_roots)
    assert len(RS.positive_roots) == 36


def test_maximal_root():
    assert e6.maximal_root(RS) == TOP


def test_root_membership():
    assert RS.is_root(TOP)
    assert RS.is_root(tuple(-c for c in TOP))
    assert not RS.is_root((0, 1, 2, 2, 2, 1))
    assert len(RS.roots) == 72


def test_layers_and_lcs():
    lay = e6.layers(RS, (1, 4))
    assert sum(len(v) for v in lay.values()) == 31
    assert max(lay) == 4
    dims = e6.nilradical_lcs_dims(RS, (1, 4))
    assert dims == e6.nilradical_lcs_by_closure(RS, (1, 4))
    assert dims[-1] == 0


def test_full_delta_layers():
    delta = tuple(range(1, 7))
    assert max(e6.layers(RS, delta)) == 11
    dims = e6.nilradical_lcs_dims(RS, delta)
    assert len(dims) == 12 and dims[-1] == 0
    assert dims == e6.nilradical_lcs_by_closure(RS, delta)
    assert isinstance(e6.two_abelian_witness(RS, delta), e6.DeeperAbelian)


@pytest.mark.parametrize("d", e6.L_SUBSETS, ids=lambda d: "".join(map(str, d)))
def test_listed_sets_are_two_abelian(d):
    w = e6.two_abelian_witness(RS, d)
    assert isinstance(w, e6.TwoAbelian)
    assert e6.check_witness(RS, d, w.alpha, w.beta).valid
    assert e6.nilradical_lcs_dims(RS, d) == e6.nilradical_lcs_by_closure(RS, d)


def test_one_four_witness_sums_to_top():
    w = e6.two_abelian_witness(RS, (1, 4))
    chk = e6.check_witness(RS, (1, 4), w.alpha, w.beta)
    assert chk.ok and chk.heights == (2, 2)
    assert e6.add(w.alpha, w.beta) == TOP


def test_two_four_needs_a_mixed_pair():
    # no two height-2 roots sum to a root here; the witness uses heights 2 and 3
    w = e6.two_abelian_witness(RS, (2, 4))
    chk = e6.check_witness(RS, (2, 4), w.alpha, w.beta)
    assert chk.valid and not chk.ok
    assert sorted(chk.heights) == [2, 3]


def test_extra_set_one_three_six():
    assert isinstance(e6.two_abelian_witness(RS, (1, 3, 6)), e6.TwoAbelian)


@pytest.mark.parametrize("i", [1, 6])
def test_end_nodes_one_abelian(i):
    assert isinstance(e6.two_abelian_witness(RS, (i,)), e6.OneAbelian)
    assert e6.nilradical_lcs_dims(RS, (i,)) == [16, 0]


def test_bad_subsets():
    with pytest.raises(KabelianError):
        e6.layers(RS, ())
    with pytest.raises(KabelianError):
        e6.layers(RS, (7,))


def test_witness_check_fields():
    chk = e6.check_witness(RS, (1, 4), (1, 1, 1, 1, 0, 0), (0, 1, 2, 2, 2, 1))
    assert chk.alpha_in_phi2 and not chk.beta_in_phi2
    assert not chk.ok
