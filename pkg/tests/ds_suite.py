"""Relation instances for the doubled Schur algebra and the braid-symmetry square."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from spiderq.dschur import DSElement, braid_conjugate, generator, lusztig_T, oracle_equal, oracle_operator
from spiderq.scalar import QExponent, qint

N_MAX = 4


def weights(eta: Sequence[int], hi: int) -> Iterator[list[QExponent]]:
    """Weights whose ladder labels are at most ``hi``."""
    for vals in itertools.product(range(hi + 1), repeat=len(eta)):
        yield [QExponent(0, v) if e == 1 else QExponent(1, -v) for v, e in zip(vals, eta)]


def signs(k: int) -> Iterator[tuple[int, ...]]:
    return itertools.product((1, -1), repeat=k)


def _word(eta, lam, w, c=1) -> DSElement:
    return DSElement(eta, lam, {tuple(w): c})


def ds1(eta, lam) -> Iterator[tuple[DSElement, DSElement]]:
    k = len(eta)
    for i in range(1, k):
        for j in range(1, k):
            x = _word(eta, lam, [("E", i), ("F", j)]) - _word(eta, lam, [("F", j), ("E", i)])
            if i == j:
                y = DSElement(eta, lam, {(): qint(lam[i - 1] - lam[i])}, x.target)
            else:
                y = DSElement(eta, lam, {}, x.target)
            yield x, y


def ds2(eta, lam) -> Iterator[tuple[DSElement, DSElement]]:
    k = len(eta)
    for X in "EF":
        for i in range(1, k):
            for j in (i - 1, i + 1):
                if not 1 <= j < k:
                    continue
                x = DSElement(eta, lam, {
                    ((X, i), (X, i), (X, j)): 1,
                    ((X, i), (X, j), (X, i)): -qint(2),
                    ((X, j), (X, i), (X, i)): 1,
                })
                yield x, DSElement(eta, lam, {}, x.target)


def ds3(eta, lam) -> Iterator[tuple[DSElement, DSElement]]:
    k = len(eta)
    for i in range(1, k):
        for j in range(i + 2, k):
            for X, Y in itertools.product("EF", repeat=2):
                yield _word(eta, lam, [(X, i), (Y, j)]), _word(eta, lam, [(Y, j), (X, i)])


def relation_cases(mn, ks=(2, 3), hi=None, families=(ds1, ds2, ds3)):
    for k in ks:
        top = hi if hi is not None else (3 if k == 2 else 2 if k == 3 else 1)
        for eta in signs(k):
            for lam in weights(eta, top):
                for fam in families:
                    for x, y in fam(eta, lam):
                        yield fam.__name__, eta, lam, x, y


def relation_failures(mn, **kw) -> list:
    bad = []
    for name, eta, lam, x, y in relation_cases(mn, **kw):
        if not oracle_equal(eta, N_MAX, x, y, mn):
            bad.append((name, eta, [str(v) for v in lam]))
    return bad


def square_cases(k: int, hi: int = 2):
    """Generators ``x`` with eta_i = 1, eta_{i+1} = -1, for the braid-symmetry square."""
    for eta in signs(k):
        for i in range(1, k):
            if (eta[i - 1], eta[i]) != (1, -1):
                continue
            for lam in weights(eta, hi):
                for kind in "EF":
                    for j in range(1, k):
                        x = generator(eta, lam, kind, j)
                        if not x.is_zero():
                            yield i, x


def square_holds(i: int, x: DSElement, mn=(2, 1)) -> bool:
    return oracle_operator(lusztig_T(i, x), mn) == braid_conjugate(i, x, mn)


def square_sign(i: int, x: DSElement, mn=(2, 1)) -> int:
    """+1 or -1 if the two sides agree up to that sign, 0 otherwise."""
    lhs = oracle_operator(lusztig_T(i, x), mn)
    rhs = braid_conjugate(i, x, mn)
    if lhs == rhs:
        return 1
    if lhs == -rhs:
        return -1
    return 0
