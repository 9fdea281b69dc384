"""Hecke algebra arithmetic and HOMFLY-PT skein evaluation of color-1 diagrams.

Permutations are one-line tuples: ``w[j]`` is the image of position ``j``.
The product ``x * y`` composes with ``y`` applied first.  A braid word read
from bottom to top, ``i1, ..., ik``, is the Hecke element ``H_ik ... H_i1``;
a positive crossing on two upward strands is ``H_i`` and satisfies
``H_i^2 = (q^-1 - q) H_i + 1``.

Closed diagrams are evaluated by resolving crossings towards a descending
diagram.  With ``z = q^-1 - q`` the skein relation reads ``D+ = D- + z D0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .scalar import ONE, ZERO, QExponent, Scalar, qint, qpow
from .tangle import Crossing, TangleDiagram, close, parse_braid, walk_from

__all__ = [
    "Perm",
    "HeckeElement",
    "hecke_mul",
    "Antisymmetrizer",
    "antisymmetrizer",
    "antisymmetrizer_closed_form",
    "sign_character",
    "partial_trace",
    "markov_trace",
    "braid_element",
    "braid_closure_value",
    "eval_closed",
    "eval_open",
    "eval_hecke_insertion",
    "permutation_braid",
    "as_braid_closure",
]

Perm = tuple[int, ...]

BETA = QExponent(1, 0)
Z = qpow(-1) - qpow(1)  # q^-1 - q


# ---------------------------------------------------------------------------
# permutations


def perm_length(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x] = i
    return tuple(inv)


def perm_compose(x: Perm, y: Perm) -> Perm:
    """x after y."""
    return tuple(x[y[j]] for j in range(len(y)))


def _swap_values(w: Perm, i: int) -> Perm:
    """s_i composed after w: exchange the values i and i+1."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def reduced_word(w: Perm) -> list[int]:
    """0-based generators ``[i1, ..., ik]`` with ``w = s_i1 ... s_ik`` reduced."""
    word = []
    w = tuple(w)
    while True:
        inv = perm_inverse(w)
        for i in range(len(w) - 1):
            if inv[i] > inv[i + 1]:
                word.append(i)
                w = _swap_values(w, i)
                break
        else:
            return word


def permutation_braid(w: Perm) -> list[int]:
    """Bottom-to-top positive braid word (0-based positions) realizing ``H_w``."""
    return list(reversed(reduced_word(w)))


# ---------------------------------------------------------------------------
# Hecke algebra


class HeckeElement:
    """Scalar combination of the basis ``H_w``, ``w`` in ``S_rank``."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Perm, Scalar | int] | None = None):
        self.rank = rank
        clean: dict[Perm, Scalar] = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) != rank:
                raise ValueError(f"permutation {w} is not in S_{rank}")
            c = Scalar.coerce(c)
            if c:
                clean[w] = clean.get(w, ZERO) + c
                if not clean[w]:
                    del clean[w]
        self.terms = clean

    @classmethod
    def identity(cls, rank: int) -> "HeckeElement":
        return cls(rank, {tuple(range(rank)): ONE})

    @classmethod
    def basis(cls, w: Perm) -> "HeckeElement":
        return cls(len(w), {tuple(w): ONE})

    @classmethod
    def generator(cls, rank: int, i: int, sign: int = 1) -> "HeckeElement":
        """``H_i`` (0-based) or its inverse ``H_i - z``."""
        w = list(range(rank))
        w[i], w[i + 1] = w[i + 1], w[i]
        if sign > 0:
            return cls(rank, {tuple(w): ONE})
        return cls(rank, {tuple(w): ONE, tuple(range(rank)): -Z})

    def coefficient(self, w: Perm) -> Scalar:
        return self.terms.get(tuple(w), ZERO)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        _check_rank(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return HeckeElement._raw(self.rank, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement._raw(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, s: Scalar | int) -> "HeckeElement":
        s = Scalar.coerce(s)
        if not s:
            return HeckeElement(self.rank)
        return HeckeElement._raw(self.rank, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        parts = [f"({c})*H{list(w)}" for w, c in sorted(self.terms.items())]
        return f"HeckeElement[{self.rank}](" + " + ".join(parts) + ")"

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "HeckeElement":
        x = cls.__new__(cls)
        x.rank = rank
        x.terms = terms
        return x

    def left_generator(self, i: int, sign: int = 1) -> "HeckeElement":
        """``H_i^{sign} * self`` (0-based ``i``)."""
        out: dict[Perm, Scalar] = {}

        def add(w, c):
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)

        for w, c in self.terms.items():
            inv = perm_inverse(w)
            sw = _swap_values(w, i)
            if inv[i] < inv[i + 1]:
                add(sw, c)
                if sign < 0:
                    add(w, -Z * c)
            else:
                add(sw, c)
                if sign > 0:
                    add(w, Z * c)
        return HeckeElement._raw(self.rank, out)

    def tensor(self, other: "HeckeElement") -> "HeckeElement":
        """Juxtaposition ``H_r ⊗ H_s -> H_{r+s}``."""
        r = self.rank
        out: dict[Perm, Scalar] = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                out[u + tuple(x + r for x in v)] = c * d
        return HeckeElement._raw(r + other.rank, out)

    def bar(self) -> "HeckeElement":
        """Coefficientwise bar involution (not the Kazhdan-Lusztig involution)."""
        return HeckeElement._raw(self.rank, {w: c.bar() for w, c in self.terms.items()})


def _check_rank(x: HeckeElement, y: HeckeElement) -> None:
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} vs {y.rank}")


def hecke_mul(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Product in the basis ``H_w`` by repeated left multiplication with generators."""
    _check_rank(x, y)
    out = HeckeElement(x.rank)
    for w, c in x.terms.items():
        part = y
        for i in reversed(reduced_word(w)):
            part = part.left_generator(i)
        out = out + part.scale(c)
    return out


def braid_element(word: Sequence[int], rank: int) -> HeckeElement:
    """Hecke element of a bottom-to-top braid word of ±(1-based generators)."""
    x = HeckeElement.identity(rank)
    for g in word:
        x = x.left_generator(abs(g) - 1, 1 if g > 0 else -1)
    return x


def sign_character(x: HeckeElement) -> Scalar:
    """The one-dimensional character ``H_w -> (-q)^l(w)``."""
    out = ZERO
    for w, c in x.terms.items():
        ell = perm_length(w)
        out = out + c * qpow(ell) * (-1 if ell % 2 else 1)
    return out


# ---------------------------------------------------------------------------
# antisymmetrizers


@dataclass(frozen=True)
class Antisymmetrizer:
    a: int
    element: HeckeElement


@lru_cache(maxsize=None)
def antisymmetrizer(a: int) -> Antisymmetrizer:
    """The idempotent ``e_a`` with ``H_i e_a = e_a H_i = -q e_a``, found by a linear solve."""
    if a < 1:
        raise ValueError("antisymmetrizer needs a >= 1")
    if a == 1:
        return Antisymmetrizer(1, HeckeElement.identity(1))
    return Antisymmetrizer(a, _solve_antisymmetrizer(a))


def _solve_antisymmetrizer(a: int) -> HeckeElement:
    import sympy
    from sympy.polys.matrices import DomainMatrix

    qs = sympy.Symbol("q")
    basis = sorted(itertools.permutations(range(a)))
    index = {w: k for k, w in enumerate(basis)}
    field = sympy.QQ.frac_field(qs)

    def to_dom(s: Scalar):
        expr = sum(c * qs**i for (i, _), c in s.numerator.items())
        return field.from_sympy(sympy.together(expr * qs**4)) if s else field.zero

    rows = []
    for i in range(a - 1):
        for sgn in ("left", "right"):
            block = [[field.zero] * len(basis) for _ in basis]
            for w in basis:
                hw = HeckeElement.basis(w)
                if sgn == "left":
                    img = hw.left_generator(i)
                else:
                    img = hecke_mul(hw, HeckeElement.generator(a, i))
                img = img + hw.scale(qpow(1))
                for u, c in img.terms.items():
                    block[index[u]][index[w]] = to_dom(c)
            rows.extend(block)
    M = DomainMatrix(rows, (len(rows), len(basis)), field)
    null = M.nullspace()
    if null.shape[0] != 1:
        raise ArithmeticError(f"antisymmetrizer solution space for a={a} has dimension {null.shape[0]}")
    vec = [null.rep.to_ddm()[0][k] for k in range(len(basis))]
    v = HeckeElement(a, {w: _from_field(field, vec[index[w]], qs) for w in basis})
    sq = hecke_mul(v, v)
    # v^2 = mu v; read mu off any nonzero coefficient
    w0 = next(iter(v.terms))
    mu = sq.coefficient(w0) / v.coefficient(w0)
    e = v.scale(mu.inverse())
    if hecke_mul(e, e) != e:
        raise ArithmeticError("solved antisymmetrizer is not idempotent")
    return e


def _from_field(field, x, qs) -> Scalar:
    import sympy

    expr = sympy.cancel(field.to_sympy(x))
    num, den = sympy.fraction(expr)
    return _poly_scalar(sympy.Poly(num, qs)) / _poly_scalar(sympy.Poly(den, qs))


def _poly_scalar(p) -> Scalar:
    terms = {}
    for (deg,), c in p.terms():
        if c.q != 1:
            raise ArithmeticError("non-integral coefficient in antisymmetrizer solve")
        terms[(int(deg), 0)] = int(c)
    return Scalar(terms)


def antisymmetrizer_closed_form(a: int) -> HeckeElement:
    """``q^{-a(a-1)/2} / [a]! * sum_w (-q)^l(w) H_w``; used only as an independent check."""
    fact = ONE
    for j in range(1, a + 1):
        fact = fact * qint(j)
    pref = qpow(-a * (a - 1) // 2) / fact
    terms = {}
    for w in itertools.permutations(range(a)):
        ell = perm_length(w)
        terms[w] = pref * qpow(ell) * (-1 if ell % 2 else 1)
    return HeckeElement(a, terms)


def antisymmetrizer_product(colors: Sequence[int]) -> HeckeElement:
    x = HeckeElement.identity(0)
    for c in colors:
        x = x.tensor(antisymmetrizer(c).element)
    return x


# ---------------------------------------------------------------------------
# Markov trace (closure of the rightmost strand)


def partial_trace(x: HeckeElement) -> HeckeElement:
    """Close the last strand: ``H_w -> [beta] H_w`` if ``w`` fixes it, else ``Q^-1 H_u H_v``."""
    n = x.rank
    if n == 0:
        raise ValueError("nothing to close")
    last = n - 1
    out = HeckeElement(n - 1)
    grouped: dict[int, dict[Perm, Scalar]] = {}
    for w, c in x.terms.items():
        j = w[last]
        if j == last:
            key = w[:last]
            out = out + HeckeElement._raw(n - 1, {key: c * qint(BETA)})
            continue
        # w = (s_j ... s_{n-2}) w' with w' fixing the last point
        cj = list(range(n))
        for i in range(n - 2, j - 1, -1):
            cj = list(_swap_values(tuple(cj), i))
        # cj now equals s_j ... s_{n-2}
        wprime = perm_compose(perm_inverse(tuple(cj)), w)
        assert wprime[last] == last
        grouped.setdefault(j, {})
        g = grouped[j]
        v = g.get(wprime[:last], ZERO) + c
        if v:
            g[wprime[:last]] = v
        else:
            g.pop(wprime[:last], None)
    qinv = qpow((-1, 0))
    for j, terms in grouped.items():
        part = HeckeElement._raw(n - 1, dict(terms))
        for i in range(n - 3, j - 1, -1):
            part = part.left_generator(i)
        out = out + part.scale(qinv)
    return out


def markov_trace(x: HeckeElement) -> Scalar:
    """Value of the trace closure of ``x``."""
    while x.rank > 0:
        x = partial_trace(x)
    return x.coefficient(())


def braid_closure_value(word: Sequence[int], colors: Sequence[int]) -> Scalar:
    """Framed invariant of the closure of a colored braid, via the cabled Hecke algebra.

    Each strand of color ``a`` becomes ``a`` parallel strands carrying ``e_a``.
    """
    offs = [0]
    for c in colors:
        offs.append(offs[-1] + c)
    n = offs[-1]
    cur = list(colors)
    x = antisymmetrizer_product(colors)
    for g in word:
        i = abs(g) - 1
        sign = 1 if g > 0 else -1
        p = sum(cur[:i])
        a, b = cur[i], cur[i + 1]
        for j in range(a - 1, -1, -1):
            for step in range(b):
                x = x.left_generator(p + j + step, sign)
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
    if x.rank != n:
        raise AssertionError("rank bookkeeping failed")
    return markov_trace(x)


def as_braid_closure(t: TangleDiagram) -> tuple[list[int], list[int]] | None:
    """Recover (word, colors) if ``t`` has exactly the shape produced by ``close``."""
    sl = t.slices
    n = 0
    while n < len(sl) and type(sl[n]).__name__ == "Cup" and sl[n].pos == n and sl[n].orientation == 1:
        n += 1
    if n == 0:
        return None
    colors = [sl[j].color for j in range(n)]
    word = []
    k = n
    while k < len(sl) and isinstance(sl[k], Crossing):
        if sl[k].pos >= n - 1:
            return None
        word.append((sl[k].pos + 1) * sl[k].sign)
        k += 1
    rest = sl[k:]
    if len(rest) != n:
        return None
    for j, s in enumerate(rest):
        if type(s).__name__ != "Cap" or s.pos != n - 1 - j or s.orientation != 1:
            return None
    try:
        if close(parse_braid(word, colors)) != t:
            return None
    except ValueError:
        return None
    return word, colors


# ---------------------------------------------------------------------------
# combinatorial diagrams for skein resolution
#
# Ports are (crossing id, slot, direction) with slot 0/1 naming the two strands
# through the crossing and direction 0 = in, 1 = out.  Bottom endpoints
# ("B", j) behave as out-ports and top endpoints ("T", j) as in-ports.


class _State:
    __slots__ = ("xs", "nxt")

    def __init__(self, xs: dict, nxt: dict):
        self.xs = xs  # cid -> (sign, over slot)
        self.nxt = nxt

    def key(self):
        return (tuple(sorted(self.xs.items())), tuple(sorted(self.nxt.items(), key=repr)))


def _build_state(t: TangleDiagram) -> tuple[_State, int, int]:
    """Combinatorial form of a color-1 diagram whose boundary strands all point up.

    Returns (state, number of crossingless loops, number of open strands).
    """
    if any(e.color != 1 for w in t.levels for e in w):
        raise ValueError("skein evaluation needs colors all equal to 1")
    n = len(t.bottom)
    if len(t.top) != n or any(not e.up for e in t.bottom) or any(not e.up for e in t.top):
        raise ValueError("open skein evaluation needs an (n, n) tangle with upward endpoints")
    xs = {}
    xid = {}
    for k, s in enumerate(t.slices):
        if isinstance(s, Crossing):
            cid = len(xid)
            xid[k] = cid
            w = t.word(k)
            el, er = w[s.pos].orientation, w[s.pos + 1].orientation
            xs[cid] = (s.sign, 0 if s.sign == el * er else 1)
    port_slot = {0: 0, 2: 0, 1: 1, 3: 1}
    nxt: dict = {}
    loops = 0
    seen_comps = set()
    for j in range(n):
        seq, end = walk_from(t, (0, j))
        seen_comps.add(t.component_at(0, j))
        prev = ("B", j)
        for k, pin, pout in seq:
            nxt[prev] = (xid[k], port_slot[pin], 0)
            prev = (xid[k], port_slot[pout], 1)
        nxt[prev] = ("T", end[1])
    for comp in t.components:
        if comp.index in seen_comps:
            continue
        seq, end = walk_from(t, comp.points[0])
        if not seq:
            loops += 1
            continue
        m = len(seq)
        for idx in range(m):
            k, _, pout = seq[idx]
            k2, pin2, _ = seq[(idx + 1) % m]
            nxt[(xid[k], port_slot[pout], 1)] = (xid[k2], port_slot[pin2], 0)
    return _State(xs, nxt), loops, n


def _remove(state: _State, cids: Iterable[int], through) -> tuple[_State, int]:
    """Delete crossings, rerouting strands with ``through`` (in-port -> out-port).

    Returns the new state and the number of closed loops that vanished with them.
    """
    cset = set(cids)
    xs = {c: v for c, v in state.xs.items() if c not in cset}
    nxt = {}
    visited = set()
    for p, tgt in state.nxt.items():
        if isinstance(p[0], int) and p[0] in cset:
            continue
        cur = tgt
        while isinstance(cur[0], int) and cur[0] in cset and cur[2] == 0:
            visited.add(cur)
            cur = state.nxt[through(cur)]
        nxt[p] = cur
    loops = 0
    for c in cset:
        for slot in (0, 1):
            start = (c, slot, 0)
            if start in visited:
                continue
            cur = start
            while True:
                visited.add(cur)
                cur = state.nxt[through(cur)]
                if cur == start:
                    loops += 1
                    break
                if cur in visited:
                    break
    return _State(xs, nxt), loops


def _plain(p):
    return (p[0], p[1], 1)


def _smoothed(p):
    return (p[0], 1 - p[1], 1)


class _Evaluator:
    def __init__(self, n_open: int, rank_key=None, simplify: bool = True):
        self.n_open = n_open
        self.memo: dict = {}
        self.rank_key = rank_key or (lambda port: port)
        self.simplify = simplify
        self.unknot = qint(BETA)

    def value(self, state: _State) -> HeckeElement:
        key = state.key()
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        factor = ONE
        if self.simplify:
            state, factor = self._reduce(state)
            key2 = state.key()
            hit = self.memo.get(key2)
            if hit is not None:
                res = hit.scale(factor)
                self.memo[key] = res
                return res
        else:
            key2 = key
        res = self._resolve(state)
        self.memo[key2] = res
        res = res.scale(factor)
        self.memo[key] = res
        return res

    def _reduce(self, state: _State) -> tuple[_State, Scalar]:
        """Remove kinks and bigons; returns the simpler state and the accumulated factor."""
        factor = ONE
        changed = True
        while changed:
            changed = False
            for c, (sign, over) in sorted(state.xs.items()):
                for slot in (0, 1):
                    if state.nxt.get((c, slot, 1)) == (c, 1 - slot, 0):
                        state, loops = _remove(state, [c], _plain)
                        factor = factor * qpow((-sign, 0)) * self.unknot**loops
                        changed = True
                        break
                if changed:
                    break
            if changed:
                continue
            for c, (sign, over) in sorted(state.xs.items()):
                for slot in (0, 1):
                    tgt = state.nxt.get((c, slot, 1))
                    if not isinstance(tgt[0], int) or tgt[0] == c:
                        continue
                    d = tgt[0]
                    dsign, dover = state.xs[d]
                    if dsign != -sign:
                        continue
                    dslot = tgt[1]
                    other = 1 - slot
                    odslot = 1 - dslot
                    parallel = state.nxt.get((c, other, 1)) == (d, odslot, 0)
                    anti = state.nxt.get((d, odslot, 1)) == (c, other, 0)
                    if not (parallel or anti):
                        continue
                    # the strand on top at c must stay on top at d
                    if (over == slot) != (dover == dslot):
                        continue
                    state, loops = _remove(state, [c, d], _plain)
                    factor = factor * self.unknot**loops
                    changed = True
                    break
                if changed:
                    break
        return state, factor

    def _traverse(self, state: _State):
        """Yield crossings in traversal order with the slot of each passage."""
        starts = [("B", j) for j in range(self.n_open)]
        seen_in = set()
        order = []
        for s in starts:
            p = state.nxt[s]
            while p[0] != "T":
                seen_in.add(p)
                order.append(p)
                p = state.nxt[(p[0], p[1], 1)]
        remaining = [(c, slot, 0) for c in state.xs for slot in (0, 1)]
        remaining = [p for p in remaining if p not in seen_in]
        while remaining:
            base = min(remaining, key=self.rank_key)
            comp = []
            p = base
            while True:
                comp.append(p)
                seen_in.add(p)
                p = state.nxt[(p[0], p[1], 1)]
                if p == base:
                    break
            order.extend(comp)
            remaining = [p for p in remaining if p not in seen_in]
        return order

    def _resolve(self, state: _State) -> HeckeElement:
        order = self._traverse(state)
        first_slot: dict[int, int] = {}
        bad = None
        for c, slot, _ in order:
            if c in first_slot:
                continue
            first_slot[c] = slot
            if state.xs[c][1] != slot:
                bad = c
                break
        if bad is None:
            return self._descending_value(state)
        sign, over = state.xs[bad]
        xs = dict(state.xs)
        xs[bad] = (-sign, 1 - over)
        switched = _State(xs, state.nxt)
        smoothed, loops = _remove(state, [bad], _smoothed)
        v_sw = self.value(switched)
        v_sm = self.value(smoothed).scale(Z * self.unknot**loops)
        return v_sw + v_sm if sign > 0 else v_sw - v_sm

    def _descending_value(self, state: _State) -> HeckeElement:
        # component of each passage: follow strands and cycles
        comp_of: dict = {}
        perm = [0] * self.n_open
        ncomp = 0
        for j in range(self.n_open):
            p = state.nxt[("B", j)]
            while p[0] != "T":
                comp_of[p] = ("o", j)
                p = state.nxt[(p[0], p[1], 1)]
            perm[j] = p[1]
        for c in state.xs:
            for slot in (0, 1):
                start = (c, slot, 0)
                if start in comp_of:
                    continue
                label = ("c", ncomp)
                ncomp += 1
                p = start
                while p not in comp_of:
                    comp_of[p] = label
                    p = state.nxt[(p[0], p[1], 1)]
        writhe = 0
        for c, (sign, _) in state.xs.items():
            if comp_of[(c, 0, 0)] == comp_of[(c, 1, 0)]:
                writhe += sign
        val = qpow((-writhe, 0)) * self.unknot**ncomp
        return HeckeElement._raw(self.n_open, {tuple(perm): val})


def _rank_from_seed(seed: int | None):
    if seed is None:
        return None
    import random

    rng = random.Random(seed)
    cache: dict = {}

    def key(port):
        if port not in cache:
            cache[port] = rng.random()
        return cache[port]

    return key


def eval_open(t: TangleDiagram, seed: int | None = None, simplify: bool = True) -> HeckeElement:
    """Value of an (n, n) color-1 tangle with upward endpoints, as an element of ``H_n``."""
    state, loops, n = _build_state(t)
    ev = _Evaluator(n, _rank_from_seed(seed), simplify)
    return ev.value(state).scale(ev.unknot**loops)


def eval_closed(
    t: TangleDiagram, framing: str = "framed", seed: int | None = None, simplify: bool = True
) -> Scalar:
    """Framed HOMFLY-PT value of a closed color-1 diagram, unknot = [beta].

    ``framing="normalized"`` divides out the curl factor ``Q^-writhe`` of every component.
    ``seed`` randomizes base points and component order; the result must not depend on it.
    """
    if not t.is_closed:
        raise ValueError("eval_closed needs a closed diagram")
    if any(c.color != 1 for c in t.components):
        raise ValueError("eval_closed needs all colors equal to 1")
    val = eval_open(t, seed, simplify).coefficient(())
    if framing == "normalized":
        val = val * qpow((sum(t.writhes), 0))
    elif framing != "framed":
        raise ValueError(f"unknown framing mode {framing!r}")
    return val


def insert_hecke(t: TangleDiagram, placements: Sequence[tuple[int, int, Perm]]) -> TangleDiagram:
    """Insert positive permutation braids ``(level, pos, w)`` into ``t``."""
    out = t
    for level, pos, w in sorted(placements, key=lambda x: -x[0]):
        braid = [Crossing(pos + i, 1) for i in permutation_braid(w)]
        out = out.insert_slices(level, braid)
    return out


def eval_hecke_insertion(
    t: TangleDiagram,
    insertions: Mapping[int, HeckeElement],
    framing: str = "framed",
    seed: int | None = None,
) -> Scalar:
    """Evaluate a cabled closed diagram with Hecke elements inserted at its markers.

    ``insertions`` maps an original component index to an element whose rank equals
    that component's cable width.  Each ``H_w`` is expanded as a positive
    permutation braid and the evaluation is extended linearly.
    """
    markers = {m.component: m for m in t.markers}
    items = []
    for comp, x in insertions.items():
        if comp not in markers:
            raise ValueError(f"no cable marker for component {comp}")
        m = markers[comp]
        if x.rank != m.width:
            raise ValueError(f"insertion of rank {x.rank} into a cable of width {m.width}")
        items.append((m, list(x.terms.items())))
    total = ZERO
    for choice in itertools.product(*[terms for _, terms in items]):
        coeff = ONE
        placements = []
        for (m, _), (w, c) in zip(items, choice):
            coeff = coeff * c
            placements.append((m.level, m.pos, w))
        d = insert_hecke(t, placements)
        total = total + coeff * eval_closed(d, framing, seed)
    return total
