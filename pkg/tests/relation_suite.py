"""Ladder relations checked as operator identities through the matrix functor.

Each case is a linear combination of ladder words that must map to the zero
operator.  Objects are given padded, as ``(label, orientation)`` pairs, so
that zero labels can appear in the source weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from spiderq.howe import apply_ladder
from spiderq.scalar import ONE, Scalar, qbinom, qint, qpow
from spiderq.spider import (
    E,
    F,
    Gen,
    LadderWord,
    Morphism,
    braiding,
    cap,
    cup,
    functor_Q,
    ins0,
    twist,
)
from spiderq.tangle import DOWN, UP, BoundaryWord, Cap, Crossing, Cup, End, TangleDiagram

GRID = [(2, 0), (3, 0), (1, 1), (2, 1)]
ORIENTS = (UP, DOWN)

Padded = Sequence[tuple[int, int]]


def ladder(obj: Padded, gens: Sequence[Gen]) -> LadderWord:
    src = [a * o for a, o in obj if a]
    pre = [ins0(j, o) for j, (a, o) in enumerate(obj) if a == 0]
    return LadderWord(src, pre + list(gens))


def combo(obj: Padded, terms: Sequence[tuple[Scalar | int, Sequence[Gen]]]) -> Morphism | None:
    """The morphism sum(c * word); None when every word vanishes."""
    words = [(Scalar.coerce(c), ladder(obj, g)) for c, g in terms]
    live = [(c, w) for c, w in words if not w.is_zero()]
    if not live:
        return None
    out = Morphism(live[0][1].source, live[0][1].target)
    for c, w in live:
        out = out + Morphism.of(w, c)
    return out


@dataclass
class Case:
    family: str
    label: str
    m: int
    n: int
    build: Callable[[], Morphism | None]

    def holds(self) -> bool:
        mor = self.build()
        if mor is None:
            return True
        return apply_ladder(self.m, self.n, mor).is_zero()


def lam(a: int, o: int, d: int) -> int:
    """gl weight of an entry at beta = d: a for up strands, d - a for duals."""
    return a if o == UP else d - a


def objects(length: int, labels: Sequence[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    for labs in itertools.product(labels, repeat=length):
        for ors in itertools.product(ORIENTS, repeat=length):
            if any(labs):
                yield tuple(zip(labs, ors))


# ---------------------------------------------------------------------------
# families


def far_commutation(m: int, n: int) -> Iterator[Case]:
    for obj in objects(4, (0, 1, 2)):
        for X, Y in itertools.product((E, F), repeat=2):
            yield Case("far commutation", f"{X.__name__}0 {Y.__name__}2 on {obj}", m, n,
                       lambda obj=obj, X=X, Y=Y: combo(obj, [(1, [X(0), Y(2)]), (-1, [Y(2), X(0)])]))


def near_commutation(m: int, n: int) -> Iterator[Case]:
    for obj in objects(3, (0, 1, 2)):
        for i, j in ((0, 1), (1, 0)):
            yield Case("EF near commutation", f"E{i} F{j} on {obj}", m, n,
                       lambda obj=obj, i=i, j=j: combo(obj, [(1, [F(j), E(i)]), (-1, [E(i), F(j)])]))


def divided_powers(m: int, n: int) -> Iterator[Case]:
    for obj in objects(2, (0, 1, 2, 3)):
        for X in (E, F):
            for r in (1, 2):
                for s in range(1, 4 - r):
                    yield Case("divided-power merging", f"{X.__name__}({r}){X.__name__}({s}) on {obj}", m, n,
                               lambda obj=obj, X=X, r=r, s=s: combo(
                                   obj, [(1, [X(0, s), X(0, r)]), (-qbinom(r + s, r), [X(0, r + s)])]))


def commutator(m: int, n: int) -> Iterator[Case]:
    d = m - n
    for obj in objects(2, (0, 1, 2, 3)):
        (a, oa), (b, ob) = obj
        k = qint(lam(a, oa, d) - lam(b, ob, d))
        yield Case("EF commutator", f"[E,F] on {obj}", m, n,
                   lambda obj=obj, k=k: combo(obj, [(1, [F(0), E(0)]), (-1, [E(0), F(0)]), (-k, [])]))


def serre(m: int, n: int) -> Iterator[Case]:
    for obj in objects(3, (0, 1, 2)):
        for X in (E, F):
            for i, j in ((0, 1), (1, 0)):
                yield Case("Serre", f"{X.__name__}{i}{X.__name__}{j} on {obj}", m, n,
                           lambda obj=obj, X=X, i=i, j=j: combo(obj, [
                               (1, [X(j), X(i, 2)]), (-1, [X(i), X(j), X(i)]), (1, [X(i, 2), X(j)])]))


def spider_beta(m: int, n: int) -> Iterator[Case]:
    d = m - n
    one = ((1, UP),)
    yield Case("digon", "loop on the right", m, n, lambda: combo(
        one, [(1, [cup(1, 1, UP), E(0), F(0), cap(1, 1, UP)]), (-qint(d - 1), [])]))
    yield Case("digon", "loop on the left", m, n, lambda: combo(
        one, [(1, [cup(0, 1, DOWN), F(1), E(1), cap(0, 1, DOWN)]), (-qint(d - 1), [])]))
    for o in ORIENTS:
        yield Case("circle", f"orientation {o}", m, n, lambda o=o: combo(
            (), [(1, [cup(0, 1, o), cap(0, 1, o)]), (-qint(d), [])]))
    yield Case("sideways commutator", "on (1, 1*)", m, n, lambda: combo(
        ((1, UP), (1, DOWN)),
        [(1, [cap(0, 1, UP), cup(0, 1, UP)]), (-1, [E(0), F(0)]), (-qint(2 - d), [])]))
    yield Case("sideways commutator", "on (1*, 1)", m, n, lambda: combo(
        ((1, DOWN), (1, UP)),
        [(1, [cap(0, 1, DOWN), cup(0, 1, DOWN)]), (-1, [F(0), E(0)]), (-qint(2 - d), [])]))


def mixed_commutator(m: int, n: int) -> Iterator[Case]:
    """The commutator on a mixed pair, with the constant written in a and b."""
    d = m - n
    for a, b in itertools.product(range(0, 4), repeat=2):
        if a or b:
            yield Case("mixed commutator", f"(a, b*) a={a} b={b}", m, n, lambda a=a, b=b: combo(
                ((a, UP), (b, DOWN)), [(1, [F(0), E(0)]), (-1, [E(0), F(0)]), (-qint(a + b - d), [])]))
            yield Case("mixed commutator", f"(a*, b) a={a} b={b}", m, n, lambda a=a, b=b: combo(
                ((a, DOWN), (b, UP)), [(1, [F(0), E(0)]), (-1, [E(0), F(0)]), (-qint(d - a - b), [])]))


def zigzag(m: int, n: int) -> Iterator[Case]:
    for a in (1, 2, 3):
        for o in ORIENTS:
            obj = ((a, o),)
            yield Case("zig-zag", f"a={a} o={o} right", m, n, lambda obj=obj, a=a, o=o: combo(
                obj, [(1, [cup(1, a, -o), cap(0, a, o)]), (-1, [])]))
            yield Case("zig-zag", f"a={a} o={o} left", m, n, lambda obj=obj, a=a, o=o: combo(
                obj, [(1, [cup(0, a, o), cap(1, a, -o)]), (-1, [])]))


def dual_generators(m: int, n: int) -> Iterator[Case]:
    """Left and right duals of E and F agree with the rungs on dual strands."""
    for a, b in itertools.product(range(0, 4), repeat=2):
        for X, Y, sgn in ((F, E, 1), (E, F, -1)):
            r = 1
            x = (a + sgn * r, b - sgn * r)  # source of X, target (a, b)
            if min(x) < 0 or not (a or b) or not any(x):
                continue
            y = (a, b)
            ystar = ((b, DOWN), (a, DOWN))

            def right(x=x, y=y, X=X):
                gens = [cup(2, x[0], UP), cup(3, x[1], UP), X(2, r), cap(1, y[0], DOWN), cap(0, y[1], DOWN)]
                return gens

            def left(x=x, y=y, X=X):
                return [cup(0, x[1], DOWN), cup(1, x[0], DOWN), X(2, r), cap(3, y[1], UP), cap(2, y[0], UP)]

            if 0 in x or 0 in y:
                continue
            yield Case("dual generators", f"right dual of {X.__name__} into {y}", m, n,
                       lambda ystar=ystar, right=right, Y=Y: combo(ystar, [(1, right()), (-1, [Y(0, r)])]))
            yield Case("dual generators", f"left dual of {X.__name__} into {y}", m, n,
                       lambda ystar=ystar, left=left, Y=Y: combo(ystar, [(1, left()), (-1, [Y(0, r)])]))


def _kink(a: int, o: int, sign: int) -> TangleDiagram:
    bottom = BoundaryWord([End(a, o)])
    return TangleDiagram(bottom, [Cup(1, a, -o), Crossing(0, sign), Cap(0, a, -o)])


def twist_curl(m: int, n: int) -> Iterator[Case]:
    d = m - n
    for a in (1, 2, 3):
        for o in ORIENTS:
            for sign in (1, -1):
                def build(a=a, o=o, sign=sign):
                    th = twist(a) ** sign
                    return functor_Q(_kink(a, o, sign)) - Morphism.identity((a * o,)).scale(th.specialize(d))
                yield Case("twist", f"a={a} o={o} sign={sign}", m, n, build)


def _cross(a: int, b: int, sign: int, left: Sequence[int] = (), right: Sequence[int] = (), natural: bool = False) -> Morphism:
    return braiding(a, b, sign, natural=natural).embed(left, right)


def _rung(obj: Sequence[int], X, i: int, r: int = 1) -> Morphism | None:
    w = LadderWord(obj, [X(i, r)])
    return None if w.is_zero() else Morphism.of(w)


def crossing_slides(m: int, n: int) -> Iterator[Case]:
    """Moving a rung through a crossing of two upward strands."""
    for a, b in itertools.product(range(1, 4), repeat=2):
        for sign in (1, -1):
            for X in (E, F):
                yield Case("crossing slide", f"{X.__name__} a={a} b={b} sign={sign}", m, n,
                           lambda a=a, b=b, sign=sign, X=X: _slide(a, b, sign, X))


def _slide(a: int, b: int, sign: int, X) -> Morphism | None:
    # X on (a, b) followed by the crossing, against the crossing followed by the opposite rung
    if X is F:
        a2, b2, Y, special = a - 1, b + 1, E, a == b + 1
        ex = a - b - 1
    else:
        a2, b2, Y, special = a + 1, b - 1, F, a == b - 1
        ex = b - a - 1
    if a2 < 1 or b2 < 1:
        return None
    if sign < 0:
        ex = -ex
    coeff = qpow(ex) * (1 if special else -1)
    lhs = _cross(a2, b2, sign) @ _rung((a, b), X, 0)
    rhs = _rung((b, a), Y, 0) @ _cross(a, b, sign)
    return lhs - rhs.scale(coeff)


def braiding_naturality(
    m: int, n: int, labels: Sequence[int] = (1, 2), third: Sequence[int] = (1, 2), natural: bool = True
) -> Iterator[Case]:
    """A rung on two strands slides through a third strand crossing both, on either side."""
    for a, b, c in itertools.product(labels, labels, third):
        for X in (E, F):
            for sign in (1, -1):
                for side in ("left", "right"):
                    yield Case("braiding naturality", f"{X.__name__} on ({a},{b}), {c} on the {side}, sign={sign}", m, n,
                               lambda a=a, b=b, c=c, X=X, sign=sign, side=side: _naturality(a, b, c, X, sign, side, natural))


def _pass(obj: Sequence[int], c: int, sign: int, side: str, natural: bool) -> Morphism:
    """Crossing of the strand ``c`` with every strand of ``obj``.

    ``side="right"``: (obj, c) -> (c, obj); ``side="left"``: (c, obj) -> (obj, c).
    """
    obj = tuple(obj)
    k = len(obj)
    if side == "right":
        out = Morphism.identity(obj + (c,))
        for j in range(k - 1, -1, -1):
            out = _cross(obj[j], c, sign, obj[:j], obj[j + 1 :], natural) @ out
        return out
    out = Morphism.identity((c,) + obj)
    for j in range(k):
        out = _cross(c, obj[j], sign, obj[:j], obj[j + 1 :], natural) @ out
    return out


def _naturality(a: int, b: int, c: int, X, sign: int, side: str, natural: bool) -> Morphism | None:
    w = LadderWord((a, b), [X(0)])
    if w.is_zero():
        return None
    f = Morphism.of(w)
    src, tgt = (a, b), tuple(w.target)
    if side == "right":
        return _pass(tgt, c, sign, side, natural) @ f.embed((), (c,)) - f.embed((c,), ()) @ _pass(src, c, sign, side, natural)
    return _pass(tgt, c, sign, side, natural) @ f.embed((c,), ()) - f.embed((), (c,)) @ _pass(src, c, sign, side, natural)


def inverse_braiding(m: int, n: int) -> Iterator[Case]:
    for a, b in itertools.product((1, 2, 3), repeat=2):
        yield Case("inverse braiding", f"a={a} b={b}", m, n, lambda a=a, b=b: (
            braiding(b, a, -1) @ braiding(a, b, 1) - Morphism.identity((a, b))))


def gl11_kernel() -> Iterator[Case]:
    for a, b in itertools.product(range(0, 4), repeat=2):
        if not (a or b):
            continue
        obj = ((a, UP), (b, UP))
        c0 = qint(a + 1) * qint(a) * qint(b) * qint(b - 1)
        c1 = qint(2) * qint(a + 1) * qint(b - 1)
        c2 = qint(2) * qint(2)
        yield Case("gl(1|1) kernel", f"a={a} b={b}", 1, 1, lambda obj=obj, c0=c0, c1=c1, c2=c2: combo(
            obj, [(c0, []), (-c1, [E(0), F(0)]), (c2, [E(0, 2), F(0, 2)])]))


FAMILIES = [
    far_commutation,
    near_commutation,
    divided_powers,
    commutator,
    serre,
    spider_beta,
    mixed_commutator,
    zigzag,
    dual_generators,
    twist_curl,
    crossing_slides,
    braiding_naturality,
    inverse_braiding,
]


def all_cases(grid: Sequence[tuple[int, int]] = GRID) -> list[Case]:
    out = []
    for m, n in grid:
        for fam in FAMILIES:
            out.extend(fam(m, n))
    out.extend(gl11_kernel())
    return out


def failures(cases: Sequence[Case]) -> list[Case]:
    return [c for c in cases if not c.holds()]
