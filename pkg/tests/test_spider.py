from __future__ import annotations

import pytest

import relation_suite as R
from spiderq import howe
from spiderq.howe import apply_ladder, rt_eval
from spiderq.scalar import ONE, QExponent, qbinom, qint, qpow, specialize
from spiderq.spider import (
    E,
    F,
    LadderWord,
    Morphism,
    braiding,
    braiding_sign,
    colored_eval,
    functor_Q,
    merge_normalization,
    reduced_eval,
    split_merge,
    twist,
)
from spiderq.tangle import DOWN, UP, BoundaryWord, Cap, Crossing, Cup, End, TangleDiagram, close, parse_braid, unknot

SMALL_GRID = [(2, 0), (1, 1), (2, 1)]


@pytest.mark.parametrize("m,n", SMALL_GRID)
@pytest.mark.parametrize(
    "family",
    [f for f in R.FAMILIES if f not in (R.far_commutation,)],
    ids=lambda f: f.__name__,
)
def test_relation_family(family, m, n):
    bad = [c.label for c in family(m, n) if not c.holds()]
    assert bad == []


def test_far_commutation_small():
    bad = [c.label for c in R.far_commutation(1, 1) if not c.holds()]
    assert bad == []


def test_gl11_kernel():
    assert [c.label for c in R.gl11_kernel() if not c.holds()] == []


def test_braiding_of_two_ones():
    c = braiding(1, 1)
    w0 = LadderWord((1, 1), [F(0, 0), E(0, 0)])
    w1 = LadderWord((1, 1), [F(0, 1), E(0, 1)])
    assert c == Morphism((1, 1), (1, 1), {w0: qpow(-1), w1: -ONE})


def test_braiding_argument_checks():
    with pytest.raises(ValueError):
        braiding(0, 1)
    with pytest.raises(ValueError):
        braiding(1, 1, sign=2)


def test_braiding_sign_table():
    assert braiding_sign(1, 1) == 1
    assert braiding_sign(2, 2) == 1
    assert braiding_sign(1, 2) == -1
    assert braiding_sign(2, 3) == 1
    for a in range(1, 5):
        for b in range(1, 5):
            assert braiding_sign(a, b) == braiding_sign(b, a)


@pytest.mark.parametrize("a,b", [(1, 2), (2, 1), (2, 3), (1, 3)])
def test_natural_braiding_matches_the_r_matrix(a, b):
    for m, n in [(2, 0), (2, 1)]:
        for sign in (1, -1):
            t = parse_braid([sign], [a, b])
            ref = rt_eval(m, n, t)
            nat = apply_ladder(m, n, functor_Q(t, natural=True))
            printed = apply_ladder(m, n, functor_Q(t))
            assert nat == ref
            assert printed == ref.scale(braiding_sign(a, b))


def test_printed_braiding_is_not_natural():
    # E on (1, 1) passing a strand of color 1: the printed sum fails, the signed one holds
    printed = R._naturality(1, 1, 1, E, 1, "right", natural=False)
    natural = R._naturality(1, 1, 1, E, 1, "right", natural=True)
    assert not apply_ladder(2, 0, printed).is_zero()
    assert apply_ladder(2, 0, natural).is_zero()


def test_natural_braiding_fails_the_slide_coefficient():
    # the slide coefficient is exact for the printed sum only
    a, b = 2, 3
    lhs = R._cross(a - 1, b + 1, 1, natural=True) @ R._rung((a, b), F, 0)
    rhs = R._rung((b, a), E, 0) @ R._cross(a, b, 1, natural=True)
    diff = lhs - rhs.scale(-qpow(a - b - 1))
    assert not apply_ladder(2, 1, diff).is_zero()


def test_split_merge():
    for a in (1, 2, 3):
        iota, pi = split_merge(a)
        comp = Morphism.of(iota).compose(Morphism.identity((a,)))
        full = Morphism.of(pi) @ Morphism.of(iota)
        for m, n in [(2, 0), (1, 1)]:
            op = apply_ladder(m, n, full).scale(merge_normalization(a))
            assert op == apply_ladder(m, n, Morphism.identity((a,)))


def test_twist_values():
    assert twist(1) == qpow((-1, 0))
    assert twist(2) == qpow((-2, 2))
    with pytest.raises(ValueError):
        twist(0)


BETA = QExponent(1, 0)


@pytest.mark.parametrize("a", [1, 2, 3])
def test_colored_unknot(a):
    val = colored_eval(unknot(a))
    assert val == qbinom(BETA, a)
    for s in (1, -1):
        assert colored_eval(unknot(a, curls=s)) == twist(a) ** s * val
        assert colored_eval(unknot(a, curls=s), "normalized") == val


LINKS = [
    ([1, 1, 1], [1, 1]),
    ([1, -2, 1, -2], [1, 1, 1]),
    ([1, 1], [1, 1]),
    ([1, 1], [1, 2]),
    ([1, 1, 1], [2, 2]),
    ([1, -1], [2, 1]),
]


@pytest.mark.parametrize("word,colors", LINKS)
def test_colored_eval_matches_the_r_matrix(word, colors):
    t = close(parse_braid(word, colors))
    val = colored_eval(t)
    for m, n in [(2, 0), (3, 0), (1, 1), (2, 1)]:
        assert specialize(val, m - n) == rt_eval(m, n, t)


@pytest.mark.parametrize("word,colors", LINKS[:4])
def test_braid_fast_path_agrees_with_the_cabled_skein(word, colors):
    from spiderq.spider import cabled_eval

    t = close(parse_braid(word, colors))
    assert colored_eval(t) == cabled_eval(t)


def test_mirror_is_bar():
    t = close(parse_braid([1, 1, 1], [1, 1]))
    assert colored_eval(t.mirror()) == colored_eval(t).bar()


@pytest.mark.parametrize("word,n", [([1, 1, 1], 2), ([1, -2, 1, -2], 3)])
def test_reduced_alexander(word, n):
    t = close(parse_braid(word, [1] * n))
    vals = {reduced_eval(t, 0, at) for at in range(len(t.up_points(0)))}
    assert len(vals) == 1
    (val,) = vals
    from spiderq.tangle import cut_strand

    cut = cut_strand(t)
    op = rt_eval(1, 1, cut)
    key = (howe.wedge_basis(1, 1, 1)[0],)
    assert specialize(val, 0) == op.entry(key, key)


def test_reduced_trefoil_frozen():
    t = close(parse_braid([1, 1, 1], [1, 1]))
    # framed, cut open: q^2 - 1 + q^-2 at beta = 0
    assert specialize(reduced_eval(t), 0) == qpow(2) - 1 + qpow(-2)


def test_reduced_times_unknot_is_full():
    t = close(parse_braid([1, -2, 1, -2], [1, 1, 1]))
    assert reduced_eval(t) * qint(BETA) == colored_eval(t)


def test_colored_eval_rejects_open():
    with pytest.raises(ValueError):
        colored_eval(parse_braid([1], [1, 1]))
    with pytest.raises(ValueError):
        colored_eval(unknot(), "other")


def test_mixed_orientation_crossing_matches_the_r_matrix():
    for o1, o2 in [(UP, DOWN), (DOWN, UP), (DOWN, DOWN)]:
        for a, b in [(1, 1), (1, 2), (2, 1)]:
            t = TangleDiagram(BoundaryWord([End(a, o1), End(b, o2)]), [Crossing(0, 1)])
            ref = rt_eval(2, 1, t)
            assert apply_ladder(2, 1, functor_Q(t, natural=True)) == ref
