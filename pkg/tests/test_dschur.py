from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import ds_suite as D
from spiderq.dschur import (
    DSElement,
    DSWeight,
    SignSeq,
    ds_compose,
    generator,
    lusztig_T,
    oracle_equal,
    phi,
    phi_object,
)
from spiderq.scalar import ONE, QExponent, qint, qpow

B = QExponent(1, 0)


def test_sign_sequences():
    assert SignSeq([1, -1]) == (1, -1)
    with pytest.raises(ValueError):
        SignSeq([])
    with pytest.raises(ValueError):
        SignSeq([1, 0])


def test_weights():
    lam = DSWeight([2, B - 1])
    assert lam.valid_for((1, -1))
    assert not lam.valid_for((1, 1))
    assert not DSWeight([2, B + 1]).valid_for((1, -1))
    assert lam.shift(("E", 1)) == DSWeight([3, B - 2])
    assert lam.swap(1) == DSWeight([B - 1, 2])


def test_phi_object():
    assert phi_object((1, -1, 1), [2, B - 1, 0]) == ((2, 1), (1, -1), (0, 1))
    with pytest.raises(ValueError):
        phi_object((1,), [B])


def test_invalid_intermediate_weight_kills_the_term():
    # F_1 on (0, 0) leaves the positive cone
    x = generator((1, 1), [0, 0], "F", 1)
    assert x.is_zero()
    y = DSElement((1, 1), [0, 1], {(("E", 1), ("F", 1)): 1, (("F", 1), ("E", 1)): 1})
    assert list(y.terms) == [(("F", 1), ("E", 1))]


def test_target_mismatch_is_an_error():
    with pytest.raises(ValueError):
        DSElement((1, 1), [1, 1], {(("E", 1),): 1}, target=[1, 1])
    with pytest.raises(ValueError):
        DSElement((1, 1), [1, 1], {(("E", 2),): 1})


def test_compose():
    e = generator((1, 1), [0, 2], "E", 1)
    f = generator((1, 1), [1, 1], "F", 1)
    fe = ds_compose(f, e)
    assert list(fe.terms) == [(("F", 1), ("E", 1))]
    with pytest.raises(ValueError):
        ds_compose(e, e)


def test_phi_is_a_single_rung_per_letter():
    x = generator((1, -1), [1, B - 1], "E", 1)
    mor = phi(x)
    assert mor.source == (1, -1) and mor.target == (2, -2)
    (word,) = mor.terms
    assert [g.kind for g in word.gens] == ["E"]


@pytest.mark.parametrize("mn", [(2, 0), (1, 1), (2, 1)])
def test_ds1_ds2_ds3(mn):
    assert D.relation_failures(mn, ks=(2, 3)) == []


def test_far_commutation_needs_four_entries():
    assert D.relation_failures((2, 1), ks=(4,), hi=1, families=(D.ds3,)) == []


def test_oracle_equal_label_bound():
    x = generator((1, 1), [5, 0], "F", 1)
    with pytest.raises(ValueError):
        oracle_equal((1, 1), 4, x, x, (2, 0))


def test_lusztig_T_on_the_middle_generators():
    lam = [2, B - 1]
    e = generator((1, -1), lam, "E", 1)
    te = lusztig_T(1, e)
    assert te.eta == (-1, 1)
    assert te.source == DSWeight([B - 1, 2])
    assert te.terms == {(("F", 1),): qpow(QExponent(-1, 3))}
    f = generator((1, -1), lam, "F", 1)
    assert lusztig_T(1, f).terms == {(("E", 1),): qpow(QExponent(1, -1))}


def test_lusztig_T_needs_the_right_signs():
    x = generator((1, 1), [1, 1], "E", 1)
    with pytest.raises(ValueError):
        lusztig_T(1, x)
    with pytest.raises(ValueError):
        lusztig_T(2, generator((1, -1), [1, B - 1], "E", 1))


def test_lusztig_T_adjacent_generator():
    x = generator((1, -1, 1), [1, B - 1, 1], "F", 2)
    t = lusztig_T(1, x)
    assert t.eta == (-1, 1, 1)
    assert t.terms == {(("F", 1), ("F", 2)): qpow(-1), (("F", 2), ("F", 1)): -ONE}


@pytest.mark.parametrize("mn", [(2, 1), (1, 1)])
def test_lusztig_T_preserves_relations(mn):
    bad = []
    for name, eta, lam, x, y in D.relation_cases(mn, ks=(2, 3), hi=1):
        for i in range(1, len(eta)):
            if (eta[i - 1], eta[i]) != (1, -1):
                continue
            tx, ty = lusztig_T(i, x), lusztig_T(i, y)
            if not oracle_equal(tx.eta, D.N_MAX, tx, ty, mn):
                bad.append((name, eta, i))
    assert bad == []


def test_square_with_two_entries():
    cases = list(D.square_cases(2))
    assert cases
    assert [c for c in cases if not D.square_holds(*c)] == []


def test_square_middle_generators_with_three_entries():
    cases = [(i, x) for i, x in D.square_cases(3) if list(x.terms)[0][0][1] == i]
    assert cases
    assert [c for c in cases if not D.square_holds(*c)] == []


def test_square_adjacent_generators_agree_up_to_sign():
    # the adjacent-generator images match the conjugated operators up to a sign
    # that depends on the weight; the exact check lives in the acceptance module
    signs = {D.square_sign(i, x) for i, x in D.square_cases(3, hi=1)}
    assert 0 not in signs


@given(st.integers(0, 3), st.integers(0, 3))
def test_commutator_on_mixed_weights(a, b):
    eta = (1, -1)
    lam = [QExponent(0, a), QExponent(1, -b)]
    x = DSElement(eta, lam, {(("E", 1), ("F", 1)): 1, (("F", 1), ("E", 1)): -1})
    y = DSElement(eta, lam, {(): qint(lam[0] - lam[1])}, x.target)
    assert oracle_equal(eta, D.N_MAX, x, y, (2, 1))
