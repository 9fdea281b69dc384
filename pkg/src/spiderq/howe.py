"""Matrix oracle: quantum exterior powers of C^{m|n} and the skew Howe action.

Rows ``1..m`` of ``V = C^{m|n}`` are even and rows ``m+1..m+n`` are odd.  A
basis vector of ``Lambda^a V`` is a sorted tuple of rows in which only odd
rows may repeat.  A basis vector of ``Lambda^N(V (x) C^k)`` is a tuple of
``(row, column)`` pairs sorted by ``(column, row)``, again with repeats only
for odd rows.  Reading such a word column by column identifies its weight
space ``(a_1, ..., a_k)`` with ``Lambda^{a_1} V (x) ... (x) Lambda^{a_k} V``.

Tensor products of exterior powers and their duals are represented by
vectors: dicts from tuples of single-column monomials to Scalars.  A dual
factor uses the same monomial as a label for the dual basis vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .scalar import ONE, ZERO, Scalar, qfactorial, qint, qpow
from .tangle import UP, Cap, Crossing, Cup, TangleDiagram, rotate_crossings

__all__ = [
    "parity",
    "wedge_basis",
    "word_basis",
    "straighten",
    "WedgeOperator",
    "act_E",
    "act_F",
    "act_weight",
    "rhat",
    "PivotalData",
    "pivotal",
    "split_map",
    "merge_map",
    "braid_table",
    "local_op",
    "rt_eval",
    "apply_ladder",
    "object_basis",
]

Mono = tuple  # sorted rows (one column) or sorted (row, col) pairs
Vec = dict
Table = Mapping[tuple, Sequence[tuple[tuple, Scalar]]]

Z = qpow(-1) - qpow(1)  # q^-1 - q


def parity(m: int, i: int) -> int:
    return 0 if i <= m else 1


def wedge_basis(m: int, n: int, a: int) -> list[Mono]:
    """Monomial basis of the a-th quantum exterior power of C^{m|n}."""
    if a < 0:
        return []
    return [
        S
        for S in itertools.combinations_with_replacement(range(1, m + n + 1), a)
        if all(S[j] != S[j + 1] or S[j] > m for j in range(a - 1))
    ]


def word_basis(m: int, n: int, k: int, N: int) -> list[Mono]:
    """Monomial basis of Lambda^N(C^{m|n} (x) C^k)."""
    pairs = sorted(((r, c) for r in range(1, m + n + 1) for c in range(1, k + 1)), key=lambda p: (p[1], p[0]))
    return [
        w
        for w in itertools.combinations_with_replacement(pairs, N)
        if all(w[j] != w[j + 1] or w[j][0] > m for j in range(N - 1))
    ]


def _add(acc: dict, key, c: Scalar) -> None:
    v = acc.get(key)
    v = c if v is None else v + c
    if v.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = v


@lru_cache(maxsize=None)
def _straighten(m: int, word: tuple) -> tuple:
    for t in range(len(word) - 1):
        (x, d), (y, c) = word[t], word[t + 1]
        if (d, x) < (c, y):
            continue
        if (d, x) == (c, y):
            if x <= m:
                return ()
            continue
        s = -1 if (x > m and y > m) else 1
        head, tail = word[:t], word[t + 2 :]
        swapped = head + ((y, c), (x, d)) + tail
        if d == c:
            terms = [(swapped, qpow(1) * (-s))]
        elif x == y:
            terms = [(swapped, -qpow(1) if x <= m else qpow(-1))]
        elif x < y:
            terms = [(swapped, Scalar.coerce(-s)), (head + ((x, c), (y, d)) + tail, Z)]
        else:
            terms = [(swapped, Scalar.coerce(-s))]
        acc: dict = {}
        for w, coef in terms:
            for w2, c2 in _straighten(m, w):
                _add(acc, w2, coef * c2)
        return tuple(sorted(acc.items()))
    return ((word, ONE),)


def straighten(m: int, n: int, word: Iterable[tuple[int, int]]) -> dict[Mono, Scalar]:
    """Rewrite a product of generators z_{row,col} in the sorted monomial basis."""
    word = tuple((int(a), int(b)) for a, b in word)
    if any(not 1 <= a <= m + n for a, _ in word):
        raise ValueError("row index out of range")
    return dict(_straighten(m, word))


# ---------------------------------------------------------------------------
# operators


class WedgeOperator:
    """Sparse matrix stored by columns: ``cols[source_key][target_key]``.

    ``source`` and ``target`` are labels (objects or weights); they take part
    in equality so that operators between different spaces never compare equal.
    """

    __slots__ = ("source", "target", "cols")

    def __init__(self, source: Hashable, target: Hashable, cols: Mapping[Hashable, Mapping[Hashable, Scalar]]):
        self.source = source
        self.target = target
        self.cols = {s: {t: c for t, c in col.items() if not c.is_zero()} for s, col in cols.items()}
        self.cols = {s: col for s, col in self.cols.items() if col}

    @classmethod
    def identity(cls, label: Hashable, basis: Iterable[Hashable]) -> "WedgeOperator":
        return cls(label, label, {b: {b: ONE} for b in basis})

    @classmethod
    def zero(cls, source: Hashable, target: Hashable) -> "WedgeOperator":
        return cls(source, target, {})

    def apply(self, vec: Mapping) -> dict:
        out: dict = {}
        for s, c in vec.items():
            for t, d in self.cols.get(s, {}).items():
                _add(out, t, c * d)
        return out

    def entry(self, target_key, source_key) -> Scalar:
        return self.cols.get(source_key, {}).get(target_key, ZERO)

    def compose(self, other: "WedgeOperator") -> "WedgeOperator":
        """``self`` after ``other``."""
        if other.target != self.source:
            raise ValueError(f"cannot compose: {other.target} != {self.source}")
        return WedgeOperator(other.source, self.target, {s: self.apply(col) for s, col in other.cols.items()})

    __matmul__ = compose

    def _combine(self, other: "WedgeOperator", sign: int) -> "WedgeOperator":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("operators act between different spaces")
        cols = {s: dict(col) for s, col in self.cols.items()}
        for s, col in other.cols.items():
            dst = cols.setdefault(s, {})
            for t, c in col.items():
                _add(dst, t, c if sign > 0 else -c)
        return WedgeOperator(self.source, self.target, cols)

    def __add__(self, other: "WedgeOperator") -> "WedgeOperator":
        return self._combine(other, 1)

    def __sub__(self, other: "WedgeOperator") -> "WedgeOperator":
        return self._combine(other, -1)

    def __neg__(self) -> "WedgeOperator":
        return self.scale(-1)

    def scale(self, c: Scalar | int) -> "WedgeOperator":
        c = Scalar.coerce(c)
        return WedgeOperator(self.source, self.target, {s: {t: c * x for t, x in col.items()} for s, col in self.cols.items()})

    def __rmul__(self, c: Scalar | int) -> "WedgeOperator":
        return self.scale(c)

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, WedgeOperator):
            return NotImplemented
        return (self.source, self.target, self.cols) == (other.source, other.target, other.cols)

    def __repr__(self) -> str:
        nnz = sum(len(c) for c in self.cols.values())
        return f"WedgeOperator({self.source} -> {self.target}, {nnz} nonzero entries)"


# ---------------------------------------------------------------------------
# skew Howe action of U_q(gl_k)


def _act_mono(m: int, word: tuple, i: int, raising: bool) -> dict:
    src, dst = (i + 1, i) if raising else (i, i + 1)
    out: dict = {}
    for t, (x, c) in enumerate(word):
        if c != src:
            continue
        # E_i carries K_i^-1 on later factors, F_i carries K_i on earlier ones
        others = word[t + 1 :] if raising else word[:t]
        e = sum((col == i) - (col == i + 1) for _, col in others)
        coef = qpow(-e if raising else e)
        new = word[:t] + ((x, dst),) + word[t + 1 :]
        for w2, c2 in _straighten(m, new):
            _add(out, w2, coef * c2)
    return out


def _act_vec(m: int, vec: Mapping, i: int, raising: bool) -> dict:
    out: dict = {}
    for w, c in vec.items():
        for w2, c2 in _act_mono(m, w, i, raising).items():
            _add(out, w2, c * c2)
    return out


def _divided(m: int, vec: Mapping, i: int, r: int, raising: bool) -> dict:
    for _ in range(r):
        vec = _act_vec(m, vec, i, raising)
    if r > 1:
        f = qfactorial(r)
        out = {}
        for w, c in vec.items():
            x = c / f
            if not x.is_laurent():
                raise ArithmeticError(f"divided power E^({r}) is not integral on {w}")
            out[w] = x
        vec = out
    return vec


def _full_op(m: int, n: int, k: int, N: int, fn: Callable[[tuple], Mapping]) -> WedgeOperator:
    label = ("wedge", m, n, k, N)
    return WedgeOperator(label, label, {w: fn(w) for w in word_basis(m, n, k, N)})


def act_E(m: int, n: int, k: int, N: int, i: int, r: int = 1) -> WedgeOperator:
    """The divided power E_i^(r) on Lambda^N(C^{m|n} (x) C^k)."""
    if not 1 <= i <= k - 1:
        raise ValueError(f"E_{i} needs 1 <= i <= {k - 1}")
    return _full_op(m, n, k, N, lambda w: _divided(m, {w: ONE}, i, r, True))


def act_F(m: int, n: int, k: int, N: int, i: int, r: int = 1) -> WedgeOperator:
    """The divided power F_i^(r) on Lambda^N(C^{m|n} (x) C^k)."""
    if not 1 <= i <= k - 1:
        raise ValueError(f"F_{i} needs 1 <= i <= {k - 1}")
    return _full_op(m, n, k, N, lambda w: _divided(m, {w: ONE}, i, r, False))


def act_weight(m: int, n: int, k: int, N: int, h: Sequence[int]) -> WedgeOperator:
    """q^h for h = sum h_j e_jj, acting diagonally by q^{<h, weight>}."""
    if len(h) != k:
        raise ValueError("h needs one entry per column")
    return _full_op(m, n, k, N, lambda w: {w: qpow(sum(h[c - 1] for _, c in w))})


def weight_of(word: Mono, k: int) -> tuple[int, ...]:
    out = [0] * k
    for _, c in word:
        out[c - 1] += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# R-matrix and pivotal structure


@lru_cache(maxsize=None)
def _rhat_table(m: int, n: int, sign: int) -> dict:
    table = {}
    for a in range(1, m + n + 1):
        for b in range(1, m + n + 1):
            s = -1 if (a > m and b > m) else 1
            if a == b:
                terms = [((a, a), qpow(-1) if a <= m else -qpow(1))]
            elif a < b:
                terms = [((b, a), Scalar.coerce(s))]
            else:
                terms = [((b, a), Scalar.coerce(s)), ((a, b), Z)]
            if sign < 0:
                # R^-1 = R - (q^-1 - q)
                acc = dict(terms)
                _add(acc, (a, b), -Z)
                terms = list(acc.items())
            table[(a, b)] = tuple(terms)
    return table


def rhat(m: int, n: int, sign: int = 1) -> WedgeOperator:
    """The braiding on V (x) V, or its inverse for ``sign = -1``.

    Basis keys are pairs of rows ``(a, b)`` for ``x_a (x) x_b``.
    """
    label = ("VV", m, n)
    return WedgeOperator(label, label, {k: dict(v) for k, v in _rhat_table(m, n, sign).items()})


@dataclass(frozen=True)
class PivotalData:
    """Weights of the twisted (co)evaluation maps on V = C^{m|n}.

    ``ev(x_i* (x) x_j) = delta_ij`` and ``coev = sum x_i (x) x_i*`` are the
    plain pairings.  The other pair is ``ev~(x_i (x) x_j*) = w_i delta_ij``
    and ``coev~ = sum w_i^-1 x_i* (x) x_i``.  On exterior powers the weight
    of a monomial is the product of the weights of its rows.
    """

    m: int
    n: int
    weights: tuple[Scalar, ...]

    def weight(self, S: Iterable[int]) -> Scalar:
        out = ONE
        for i in S:
            out = out * self.weights[i - 1]
        return out


def _closed_form_weight(m: int, n: int, i: int) -> Scalar:
    # (-1)^{|i|} q^{-(2 rho, eps_i)}
    d = m - n
    if i <= m:
        return qpow(-(d - 2 * i + 1))
    j = i - m
    return -qpow(d + 2 * n - 2 * j + 1)


@lru_cache(maxsize=None)
def pivotal(m: int, n: int) -> PivotalData:
    """Solve for the weights from the curl condition and check the closed form.

    A positive curl on V must equal q^-d.  Closing off the right strand of
    the braiding with ev~ and coev turns this into the triangular system
    ``z * sum_{i<j} w_i + r_j w_j = q^-d`` with ``r_j`` the diagonal entry
    of the braiding on ``x_j (x) x_j``.
    """
    d = m - n
    target = qpow(-d)
    weights: list[Scalar] = []
    for j in range(1, m + n + 1):
        r = qpow(-1) if j <= m else -qpow(1)
        acc = target - Z * sum(weights, ZERO)
        weights.append(acc / r)
    for i, w in enumerate(weights, start=1):
        if w != _closed_form_weight(m, n, i):
            raise AssertionError(f"pivotal weight {i} disagrees with the closed form")
    return PivotalData(m, n, tuple(weights))


# ---------------------------------------------------------------------------
# local operators on pairs of adjacent factors


def _columns(word: tuple, k: int) -> tuple:
    parts: list[list[int]] = [[] for _ in range(k)]
    for x, c in word:
        parts[c - 1].append(x)
    return tuple(tuple(p) for p in parts)


def _join(parts: Sequence[Mono]) -> tuple:
    return tuple((x, c) for c, part in enumerate(parts, start=1) for x in part)


@lru_cache(maxsize=None)
def _updown(m: int, n: int, a: int, b: int, r: int, raising: bool) -> dict:
    """E^(r) or F^(r) on Lambda^a (x) Lambda^b, as a table on pairs."""
    table = {}
    for S in wedge_basis(m, n, a):
        for T in wedge_basis(m, n, b):
            vec = _divided(m, {_join((S, T)): ONE}, 1, r, raising)
            table[(S, T)] = tuple((_columns(w, 2), c) for w, c in vec.items())
    return table


def _transpose_swap(table: Mapping) -> dict:
    # new[(sa, sb)] contains (ta, tb) with coefficient old[(tb, ta)][(sb, sa)]
    out: dict = {}
    for (x, y), terms in table.items():
        for (u, v), c in terms:
            out.setdefault((v, u), []).append(((y, x), c))
    return {k: tuple(v) for k, v in out.items()}


def _compose_tables(first: Mapping, second: Mapping) -> dict:
    out = {}
    for key, terms in first.items():
        acc: dict = {}
        for mid, c in terms:
            for k2, c2 in second.get(mid, ()):
                _add(acc, k2, c * c2)
        out[key] = tuple(acc.items())
    return out


def _apply_table(vec: Mapping, i: int, width: int, table: Mapping) -> dict:
    out: dict = {}
    for key, c in vec.items():
        for new, d in table.get(key[i : i + width], ()):
            _add(out, key[:i] + new + key[i + width :], c * d)
    return out


@lru_cache(maxsize=None)
def _cup_table(m: int, n: int, a: int, orientation: int) -> dict:
    basis = wedge_basis(m, n, a)
    if orientation == UP:
        return {(): tuple(((S, S), ONE) for S in basis)}
    piv = pivotal(m, n)
    return {(): tuple(((S, S), piv.weight(S).inverse()) for S in basis)}


@lru_cache(maxsize=None)
def _cap_table(m: int, n: int, a: int, orientation: int) -> dict:
    basis = wedge_basis(m, n, a)
    if orientation == UP:
        piv = pivotal(m, n)
        return {(S, S): (((), piv.weight(S)),) for S in basis}
    return {(S, S): (((), ONE),) for S in basis}


def _pair_vec_op(m: int, n: int, steps: Sequence[tuple], start: Mapping) -> dict:
    vec = dict(start)
    for i, width, table in steps:
        vec = _apply_table(vec, i, width, table)
    return vec


@lru_cache(maxsize=None)
def local_op(m: int, n: int, kind: str, oa: int, ob: int, a: int, b: int, r: int) -> dict:
    """Table of E^(r) or F^(r) on the adjacent pair (a, b) with orientations (oa, ob).

    Labels follow the ladder conventions: on ``(a, b)`` E moves r from the
    right label to the left one, on duals the arithmetic is mirrored.
    """
    raising = kind == "E"
    if (oa, ob) == (UP, UP):
        return _updown(m, n, a, b, r, raising)
    if (oa, ob) == (-UP, -UP):
        # transposes of the upward generators with the tensor order reversed
        if raising:
            return _transpose_swap(_updown(m, n, b + r, a - r, r, False)) if a >= r else {}
        return _transpose_swap(_updown(m, n, b - r, a + r, r, True)) if b >= r else {}
    out: dict = {}
    if (oa, ob) == (UP, -UP):
        for S in wedge_basis(m, n, a):
            for T in wedge_basis(m, n, b):
                if raising:
                    # (E_{a,r} (x) E_{r*,b*}) after (id (x) coev_r (x) id)
                    vec = _apply_table({(S, T): ONE}, 1, 0, _cup_table(m, n, r, UP))
                    vec = _apply_table(vec, 0, 2, _updown(m, n, a, r, r, True))
                    vec = _apply_table(vec, 2, 2, local_op(m, n, "E", -UP, -UP, r, b, r))
                    vec = {(k[0], k[3]): c for k, c in vec.items()}
                else:
                    # (id (x) ev~_r (x) id) after (F_{a,0} (x) F_{0*,b*})
                    vec = {(S, (), (), T): ONE}
                    vec = _apply_table(vec, 0, 2, _updown(m, n, a, 0, r, False))
                    vec = _apply_table(vec, 2, 2, local_op(m, n, "F", -UP, -UP, 0, b, r))
                    vec = _apply_table(vec, 1, 2, _cap_table(m, n, r, UP))
                out[(S, T)] = tuple(vec.items())
        return out
    for S in wedge_basis(m, n, a):
        for T in wedge_basis(m, n, b):
            if raising:
                # (id (x) ev_r (x) id) after (E_{a*,0*} (x) E_{0,b})
                vec = {(S, (), (), T): ONE}
                vec = _apply_table(vec, 0, 2, local_op(m, n, "E", -UP, -UP, a, 0, r))
                vec = _apply_table(vec, 2, 2, _updown(m, n, 0, b, r, True))
                vec = _apply_table(vec, 1, 2, _cap_table(m, n, r, -UP))
            else:
                # (F_{a*,r*} (x) F_{r,b}) after (id (x) coev~_r (x) id)
                vec = _apply_table({(S, T): ONE}, 1, 0, _cup_table(m, n, r, -UP))
                vec = _apply_table(vec, 0, 2, local_op(m, n, "F", -UP, -UP, a, r, r))
                vec = _apply_table(vec, 2, 2, _updown(m, n, r, b, r, False))
                vec = {(k[0], k[3]): c for k, c in vec.items()}
            out[(S, T)] = tuple(vec.items())
    return out


# ---------------------------------------------------------------------------
# split and merge maps between Lambda^a and V^(x)a


@lru_cache(maxsize=None)
def split_map(m: int, n: int, a: int) -> dict:
    """iota_a = F_{a-1}^(1) ... F_1^(a-1), from Lambda^a to V^(x)a (keys: row tuples)."""
    out = {}
    for S in wedge_basis(m, n, a):
        vec = {tuple((x, 1) for x in S): ONE}
        for i in range(1, a):
            vec = _divided(m, vec, i, a - i, False)
        out[S] = {tuple(x for x, _ in w): c for w, c in vec.items()}
    return out


@lru_cache(maxsize=None)
def merge_map(m: int, n: int, a: int) -> dict:
    """pi_a = E_1^(a-1) ... E_{a-1}^(1) / [a]!, from V^(x)a (row tuples) to Lambda^a.

    The ladder product alone composes with ``split_map`` to ``[a]!`` times
    the identity; the factor makes ``merge_map`` a left inverse.
    """
    out = {}
    norm = qfactorial(a).inverse()
    for rows in itertools.product(range(1, m + n + 1), repeat=a):
        vec = {tuple((x, c) for c, x in enumerate(rows, start=1)): ONE}
        for i in range(a - 1, 0, -1):
            vec = _divided(m, vec, i, a - i, True)
        out[rows] = {tuple(x for x, _ in w): c * norm for w, c in vec.items()}
    return out


@lru_cache(maxsize=None)
def braid_table(m: int, n: int, a: int, b: int, sign: int) -> dict:
    """Braiding Lambda^a (x) Lambda^b -> Lambda^b (x) Lambda^a through the cabled R-matrix."""
    iota_a, iota_b = split_map(m, n, a), split_map(m, n, b)
    pi_a, pi_b = merge_map(m, n, a), merge_map(m, n, b)
    R = _rhat_table(m, n, sign)
    out = {}
    for S, vs in iota_a.items():
        for T, vt in iota_b.items():
            vec: dict = {}
            for x, c in vs.items():
                for y, d in vt.items():
                    _add(vec, x + y, c * d)
            for j in range(a - 1, -1, -1):
                for step in range(b):
                    p = j + step
                    nxt: dict = {}
                    for key, c in vec.items():
                        for pair, d in R[key[p : p + 2]]:
                            _add(nxt, key[:p] + pair + key[p + 2 :], c * d)
                    vec = nxt
            res: dict = {}
            for key, c in vec.items():
                for T2, d in pi_b.get(key[:b], {}).items():
                    for S2, e in pi_a.get(key[b:], {}).items():
                        _add(res, (T2, S2), c * d * e)
            out[(S, T)] = tuple(res.items())
    return out


# ---------------------------------------------------------------------------
# Reshetikhin-Turaev evaluation


def object_basis(m: int, n: int, colors: Sequence[int]) -> list[tuple]:
    return [tuple(p) for p in itertools.product(*(wedge_basis(m, n, abs(c)) for c in colors))]


def rt_eval(m: int, n: int, t: TangleDiagram) -> Scalar | WedgeOperator:
    """Evaluate a colored tangle with the R-matrix of gl(m|n).

    A closed diagram gives a Laurent polynomial in q.  An open one gives the
    operator from the bottom to the top object, with objects labeled by
    signed color tuples.
    """
    r = rotate_crossings(t)
    src = tuple(r.bottom.signed())
    cols = {}
    for key in object_basis(m, n, src):
        vec = {key: ONE}
        for k, s in enumerate(r.slices):
            if isinstance(s, Crossing):
                word = r.word(k)
                a, b = word[s.pos].color, word[s.pos + 1].color
                vec = _apply_table(vec, s.pos, 2, braid_table(m, n, a, b, s.sign))
            elif isinstance(s, Cup):
                vec = _apply_table(vec, s.pos, 0, _cup_table(m, n, s.color, s.orientation))
            elif isinstance(s, Cap):
                vec = _apply_table(vec, s.pos, 2, _cap_table(m, n, s.color, s.orientation))
            if not vec:
                break
        cols[key] = vec
    if t.is_closed:
        return cols[()].get((), ZERO)
    return WedgeOperator(src, tuple(r.top.signed()), cols)


def apply_ladder(m: int, n: int, w) -> WedgeOperator:
    """The functor to gl(m|n)-modules on a ladder word or a morphism.

    ``w`` is a :class:`spiderq.spider.LadderWord` or
    :class:`spiderq.spider.Morphism`; both are handled by duck typing so that
    this module does not import the spider layer.
    """
    if hasattr(w, "terms"):
        out = WedgeOperator.zero(w.source, w.target)
        for word, c in w.terms.items():
            out = out + _apply_word(m, n, word).scale(c)
        return out
    return _apply_word(m, n, w)


def _apply_word(m: int, n: int, w) -> WedgeOperator:
    if w.is_zero():
        return WedgeOperator.zero(w.source, w.target)
    cols = {}
    for key in object_basis(m, n, w.source):
        vec = {key: ONE}
        for g, obj in zip(w.gens, w.objects):
            vec = _apply_gen(m, n, g, obj, vec)
            if not vec:
                break
        # drop zero-labeled factors to reach the canonical target
        last = w.objects[-1]
        keep = [j for j, (c, _) in enumerate(last) if c != 0]
        cols[key] = {tuple(k[j] for j in keep): c for k, c in vec.items()}
    return WedgeOperator(w.source, w.target, cols)


def _apply_gen(m: int, n: int, g, obj: Sequence[tuple[int, int]], vec: Mapping) -> dict:
    kind, i = g.kind, g.pos
    if kind in ("E", "F"):
        (a, oa), (b, ob) = obj[i], obj[i + 1]
        return _apply_table(vec, i, 2, local_op(m, n, kind, oa, ob, a, b, g.r))
    if kind == "cup":
        return _apply_table(vec, i, 0, _cup_table(m, n, g.r, g.orientation))
    if kind == "cap":
        return _apply_table(vec, i, 2, _cap_table(m, n, g.r, g.orientation))
    if kind == "ins0":
        return {k[:i] + ((),) + k[i:]: c for k, c in vec.items()}
    if kind == "del0":
        return {k[:i] + k[i + 1 :]: c for k, c in vec.items()}
    raise ValueError(f"unknown generator {kind!r}")
