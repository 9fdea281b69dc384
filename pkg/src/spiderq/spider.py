"""Ladder morphisms of the exterior-power spider and the colored invariant pipeline.

Objects are tuples of nonzero integers: ``a > 0`` is an upward strand of
color ``a`` and ``-a`` its dual.  Inside a ladder word objects are padded:
each entry is a pair ``(label, orientation)`` and labels may be zero.  The
target of a word is always reported in canonical (zero-free) form.

Generators act on adjacent entries ``i, i+1``:

* ``E(i, r)`` / ``F(i, r)``: rungs of thickness ``r``.  On ``(a, b)`` E gives
  ``(a+r, b-r)``; on ``(a, b*)`` it gives ``(a+r, (b+r)*)``; on ``(a*, b)``
  ``((a-r)*, b-r)``; on ``(a*, b*)`` ``((a-r)*, (b+r)*)``.  F reverses E.
* ``cup(i, a, o)`` / ``cap(i, a, o)``: ``o`` is the orientation of the left end.
* ``ins0(i, o)`` / ``del0(i)``: insert or remove a zero-labeled entry.

A generator that would produce a negative label makes the word zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import skein
from .scalar import ONE, ZERO, Scalar, qfactorial, qpow
from .tangle import DOWN, UP, Cap, Crossing, Cup, TangleDiagram, cable, cut_strand, rotate_crossings

__all__ = [
    "SpiderObject",
    "Gen",
    "E",
    "F",
    "cup",
    "cap",
    "ins0",
    "del0",
    "LadderWord",
    "Morphism",
    "braiding",
    "twist",
    "split_merge",
    "functor_Q",
    "colored_eval",
    "reduced_eval",
    "cabled_eval",
    "braiding_sign",
    "merge_normalization",
]

Padded = tuple[tuple[int, int], ...]


class SpiderObject(tuple):
    """A canonical object: a tuple of nonzero signed colors."""

    def __new__(cls, items: Iterable[int] = ()):
        vals = tuple(int(x) for x in items)
        if any(x == 0 for x in vals):
            raise ValueError("canonical objects have no zero entries")
        return super().__new__(cls, vals)

    @classmethod
    def from_padded(cls, obj: Padded) -> "SpiderObject":
        return cls(a * o for a, o in obj if a != 0)

    def padded(self) -> Padded:
        return tuple((abs(x), UP if x > 0 else DOWN) for x in self)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{x}" if x > 0 else f"{-x}*" for x in self) + ")"


@dataclass(frozen=True)
class Gen:
    kind: str
    pos: int
    r: int = 0
    orientation: int = UP

    def __str__(self) -> str:
        if self.kind in ("E", "F"):
            return f"{self.kind}{self.pos}^({self.r})"
        if self.kind in ("cup", "cap"):
            return f"{self.kind}{self.pos}[{self.r}{'' if self.orientation == UP else '*'}]"
        return f"{self.kind}{self.pos}"


def E(i: int, r: int = 1) -> Gen:
    return Gen("E", i, r)


def F(i: int, r: int = 1) -> Gen:
    return Gen("F", i, r)


def cup(i: int, a: int, orientation: int = UP) -> Gen:
    return Gen("cup", i, a, orientation)


def cap(i: int, a: int, orientation: int = UP) -> Gen:
    return Gen("cap", i, a, orientation)


def ins0(i: int, orientation: int = UP) -> Gen:
    return Gen("ins0", i, 0, orientation)


def del0(i: int) -> Gen:
    return Gen("del0", i)


def _step(obj: Padded, g: Gen) -> Padded | None:
    """Object after ``g``; None when a label goes negative."""
    i = g.pos
    if g.kind in ("E", "F"):
        if not 0 <= i < len(obj) - 1:
            raise ValueError(f"{g} out of range for an object of length {len(obj)}")
        (a, oa), (b, ob) = obj[i], obj[i + 1]
        r = g.r if g.kind == "E" else -g.r
        # E on (a, b): left gains r; on a dual the label moves the other way
        na = a + r if oa == UP else a - r
        nb = b - r if ob == UP else b + r
        if na < 0 or nb < 0:
            return None
        return obj[:i] + ((na, oa), (nb, ob)) + obj[i + 2 :]
    if g.kind == "cup":
        if not 0 <= i <= len(obj):
            raise ValueError(f"{g} out of range")
        return obj[:i] + ((g.r, g.orientation), (g.r, -g.orientation)) + obj[i:]
    if g.kind == "cap":
        if obj[i : i + 2] != ((g.r, g.orientation), (g.r, -g.orientation)):
            raise ValueError(f"{g} does not match the object entries {obj[i:i + 2]}")
        return obj[:i] + obj[i + 2 :]
    if g.kind == "ins0":
        return obj[:i] + ((0, g.orientation),) + obj[i:]
    if g.kind == "del0":
        if obj[i][0] != 0:
            raise ValueError(f"{g} on a nonzero label")
        return obj[:i] + obj[i + 1 :]
    raise ValueError(f"unknown generator {g.kind!r}")


class LadderWord:
    """A composite of generators, applied left to right, from a canonical source."""

    __slots__ = ("source", "gens", "objects", "_zero")

    def __init__(self, source: Iterable[int], gens: Iterable[Gen] = ()):
        self.source = SpiderObject(source)
        self.gens = tuple(g for g in gens if not (g.kind in ("E", "F") and g.r == 0))
        objs: list[Padded] = [self.source.padded()]
        self._zero = False
        for g in self.gens:
            nxt = _step(objs[-1], g)
            if nxt is None:
                self._zero = True
                # keep the label shape so the target stays defined
                nxt = _step_shape(objs[-1], g)
            objs.append(nxt)
        self.objects = tuple(objs)

    @property
    def target(self) -> SpiderObject:
        return SpiderObject.from_padded(self.objects[-1])

    def is_zero(self) -> bool:
        return self._zero

    def then(self, other: "LadderWord") -> "LadderWord":
        """``other`` after ``self``."""
        if self.target != other.source:
            raise ValueError(f"cannot compose: {self.target} != {other.source}")
        last = self.objects[-1]
        drops = [del0(j) for j in range(len(last) - 1, -1, -1) if last[j][0] == 0]
        out = LadderWord(self.source, self.gens + tuple(drops) + other.gens)
        out._zero = out._zero or self._zero or other._zero
        return out

    def embed(self, left: Sequence[int], right: Sequence[int]) -> "LadderWord":
        """``id_left (x) self (x) id_right``."""
        k = len(left)
        gens = [Gen(g.kind, g.pos + k, g.r, g.orientation) for g in self.gens]
        out = LadderWord(tuple(left) + tuple(self.source) + tuple(right), gens)
        out._zero = out._zero or self._zero
        return out

    def _key(self):
        return (self.source, self.gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, LadderWord) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        body = " ".join(str(g) for g in self.gens) or "id"
        return f"LadderWord({self.source} -> {self.target}: {body})"


def _step_shape(obj: Padded, g: Gen) -> Padded:
    (a, oa), (b, ob) = obj[g.pos], obj[g.pos + 1]
    r = g.r if g.kind == "E" else -g.r
    na = a + r if oa == UP else a - r
    nb = b - r if ob == UP else b + r
    return obj[: g.pos] + ((max(na, 0), oa), (max(nb, 0), ob)) + obj[g.pos + 2 :]


class Morphism:
    """A Scalar combination of ladder words with common source and target."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: Iterable[int], target: Iterable[int], terms: Mapping[LadderWord, Scalar | int] = ()):
        self.source = SpiderObject(source)
        self.target = SpiderObject(target)
        out: dict[LadderWord, Scalar] = {}
        for w, c in dict(terms).items():
            if w.is_zero():
                continue
            if w.source != self.source or w.target != self.target:
                raise ValueError(f"word {w} does not match {self.source} -> {self.target}")
            v = out.get(w, ZERO) + Scalar.coerce(c)
            if v.is_zero():
                out.pop(w, None)
            else:
                out[w] = v
        self.terms = out

    @classmethod
    def of(cls, w: LadderWord, c: Scalar | int = 1) -> "Morphism":
        return cls(w.source, w.target, {w: c})

    @classmethod
    def identity(cls, obj: Iterable[int]) -> "Morphism":
        obj = SpiderObject(obj)
        return cls(obj, obj, {LadderWord(obj): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Morphism") -> "Morphism":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("morphisms have different source or target")
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, ZERO) + c
        return Morphism(self.source, self.target, terms)

    def __neg__(self) -> "Morphism":
        return self.scale(-1)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def scale(self, c: Scalar | int) -> "Morphism":
        c = Scalar.coerce(c)
        return Morphism(self.source, self.target, {w: c * x for w, x in self.terms.items()})

    def __rmul__(self, c: Scalar | int) -> "Morphism":
        return self.scale(c)

    def compose(self, other: "Morphism") -> "Morphism":
        """``self`` after ``other``."""
        if other.target != self.source:
            raise ValueError(f"cannot compose: {other.target} != {self.source}")
        terms: dict[LadderWord, Scalar] = {}
        for w1, c1 in other.terms.items():
            for w2, c2 in self.terms.items():
                w = w1.then(w2)
                terms[w] = terms.get(w, ZERO) + c1 * c2
        return Morphism(other.source, self.target, terms)

    __matmul__ = compose

    def embed(self, left: Sequence[int], right: Sequence[int]) -> "Morphism":
        left, right = tuple(left), tuple(right)
        return Morphism(
            left + tuple(self.source) + right,
            left + tuple(self.target) + right,
            {w.embed(left, right): c for w, c in self.terms.items()},
        )

    def bar(self) -> "Morphism":
        """Apply q -> q^-1 to the coefficients; ladder generators are bar-invariant."""
        return Morphism(self.source, self.target, {w: c.bar() for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.source, self.target, self.terms) == (other.source, other.target, other.terms)

    def __repr__(self) -> str:
        parts = [f"({c}) {w.gens}" for w, c in self.terms.items()]
        return f"Morphism({self.source} -> {self.target}: " + (" + ".join(parts) or "0") + ")"


# ---------------------------------------------------------------------------
# braiding, twist, split and merge


def braiding_sign(a: int, b: int) -> int:
    """Sign separating the two-case ladder sum from the natural braiding.

    The two-case sum agrees with c_{1,1} = q^-1 - FE but is natural with
    respect to merges only after multiplying by ``(-1)^{ab + min(a, b)}``.
    Closed diagrams never see the difference: the sign is symmetric, equals
    1 when ``a == b``, and strands of distinct components cross an even number
    of times.
    """
    return -1 if (a * b + min(a, b)) % 2 else 1


def _updown_braiding(a: int, b: int, natural: bool) -> Morphism:
    terms: dict[LadderWord, Scalar] = {}
    q = qpow(1)
    sgn = braiding_sign(a, b) if natural else 1
    if a <= b:
        pref = qpow(-a) * sgn
        for s in range(a + 1):
            w = LadderWord((a, b), [F(0, s), E(0, b - a + s)])
            terms[w] = pref * (-q) ** s
    else:
        pref = qpow(-b) * sgn
        for s in range(b + 1):
            w = LadderWord((a, b), [E(0, s), F(0, a - b + s)])
            terms[w] = pref * (-q) ** s
    return Morphism((a, b), (b, a), terms)


def braiding(
    a: int, b: int, sign: int = 1, orientations: tuple[int, int] = (UP, UP), natural: bool = False
) -> Morphism:
    """The crossing of a strand of color ``a`` (bottom left) with one of color ``b``.

    ``sign`` is the writhe sign.  For upward strands the positive crossing is
    the finite sum ``q^-a sum_s (-q)^s E^(b-a+s) F^(s)`` (``a <= b``) or its
    mirror ``q^-b sum_s (-q)^s F^(a-b+s) E^(s)`` (``a >= b``); the negative
    one has barred coefficients.  With ``natural=True`` the sum is multiplied
    by :func:`braiding_sign`, which gives the braiding that commutes with
    merges and splits.  Other orientations rotate the upward crossing with
    cups and caps.
    """
    if a < 1 or b < 1:
        raise ValueError("braiding needs positive colors")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if tuple(orientations) == (UP, UP):
        c = _updown_braiding(a, b, natural)
        return c if sign > 0 else c.bar()
    from .tangle import BoundaryWord, End

    t = TangleDiagram(BoundaryWord([End(a, orientations[0]), End(b, orientations[1])]), [Crossing(0, sign)])
    return functor_Q(t, natural=natural)


def twist(a: int) -> Scalar:
    """theta_a = Q^-a q^{a(a-1)}, the value of a positive curl on color a."""
    if a < 1:
        raise ValueError("twist needs a >= 1")
    return qpow((-a, a * (a - 1)))


def split_merge(a: int) -> tuple[LadderWord, LadderWord]:
    """The ladders iota_a: a -> 1^a and pi_a: 1^a -> a.

    ``pi_a`` after ``iota_a`` is ``[a]!`` times the identity, so
    ``pi_a / [a]!`` is a left inverse of ``iota_a``.
    """
    if a < 1:
        raise ValueError("split_merge needs a >= 1")
    iota = [ins0(1 + j) for j in range(a - 1)] + [F(i - 1, a - i) for i in range(1, a)]
    pi = [E(i - 1, a - i) for i in range(a - 1, 0, -1)]
    return LadderWord((a,), iota), LadderWord((1,) * a, pi)


def merge_normalization(a: int) -> Scalar:
    return qfactorial(a).inverse()


# ---------------------------------------------------------------------------
# tangles to ladders


def functor_Q(t: TangleDiagram, natural: bool = False) -> Morphism:
    """Slice-wise translation of a tangle into a ladder morphism.

    Crossings with a downward strand are first rotated into upward ones;
    ``natural`` selects the braiding convention as in :func:`braiding`.
    The number of words grows with the product of the braiding sizes, so
    this is meant for small diagrams.
    """
    r = rotate_crossings(t)
    out = Morphism.identity(r.bottom.signed())
    for k, s in enumerate(r.slices):
        word = r.word(k)
        signed = tuple(e.color * e.orientation for e in word)
        if isinstance(s, Crossing):
            a, b = word[s.pos].color, word[s.pos + 1].color
            piece = braiding(a, b, s.sign, natural=natural).embed(signed[: s.pos], signed[s.pos + 2 :])
        elif isinstance(s, Cup):
            piece = Morphism.of(LadderWord(signed, [cup(s.pos, s.color, s.orientation)]))
        elif isinstance(s, Cap):
            piece = Morphism.of(LadderWord(signed, [cap(s.pos, s.color, s.orientation)]))
        else:
            continue
        out = piece.compose(out)
    return out


def _twist_factor(t: TangleDiagram) -> Scalar:
    out = ONE
    for comp in t.components:
        out = out * twist(comp.color) ** (-comp.writhe)
    return out


def colored_eval(t: TangleDiagram, framing: str = "framed") -> Scalar:
    """The colored invariant P_beta of a closed diagram.

    Closures of colored braids use the cabled Markov trace; other diagrams
    are cabled, antisymmetrizers are inserted at each component's marker and
    the skein evaluator does the rest.  ``framing="normalized"`` multiplies
    by ``twist(a_c)^-w_c`` for every component.
    """
    if not t.is_closed:
        raise ValueError("colored_eval needs a closed diagram")
    if framing not in ("framed", "normalized"):
        raise ValueError(f"unknown framing mode {framing!r}")
    br = skein.as_braid_closure(t)
    if br is not None:
        val = skein.braid_closure_value(*br)
    else:
        val = cabled_eval(t)
    if framing == "normalized":
        val = val * _twist_factor(t)
    return val


def cabled_eval(t: TangleDiagram) -> Scalar:
    """Framed value through cabling and antisymmetrizer insertion (no fast path)."""
    if all(c.color == 1 for c in t.components):
        return skein.eval_closed(t)
    insertions = {c.index: skein.antisymmetrizer(c.color).element for c in t.components if c.color > 1}
    return skein.eval_hecke_insertion(cable(t), insertions)


def reduced_eval(t: TangleDiagram, component: int = 0, at: int = 0, framing: str = "framed") -> Scalar:
    """Invariant of ``t`` cut open at an upward point of ``component``.

    The cut tangle is an endomorphism of a single color-a strand, hence a
    scalar: the cabled open evaluation ``x`` in the Hecke algebra satisfies
    ``e_a x e_a = chi(x) e_a`` with ``chi(H_w) = (-q)^l(w)``.
    """
    if framing not in ("framed", "normalized"):
        raise ValueError(f"unknown framing mode {framing!r}")
    cut = cut_strand(t, component, at)
    cab = cable(cut)
    markers = {m.component: m for m in cab.markers}
    items = []
    for c in cut.components:
        if c.closed and c.color > 1:
            m = markers[c.index]
            items.append((m, list(skein.antisymmetrizer(c.color).element.terms.items())))
    total = ZERO
    for choice in itertools.product(*[terms for _, terms in items]):
        coeff = ONE
        placements = []
        for (m, _), (w, c) in zip(items, choice):
            coeff = coeff * c
            placements.append((m.level, m.pos, w))
        x = skein.eval_open(skein.insert_hecke(cab, placements))
        total = total + coeff * skein.sign_character(x)
    if framing == "normalized":
        total = total * _twist_factor(t)
    return total
