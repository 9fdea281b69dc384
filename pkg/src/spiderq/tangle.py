"""Oriented framed labeled tangles in slice form.

A diagram is a bottom boundary word followed by a list of elementary slices,
read from bottom to top.  Positions are 0-based: ``Crossing(i, s)`` crosses
the strands at positions ``i`` and ``i+1``, ``Cup(i, a, o)`` creates two new
endpoints at ``i`` and ``i+1`` and ``Cap(i, a, o)`` joins them.  For cups and
caps ``o`` is the orientation of the left endpoint.

Crossing signs are the usual writhe signs.  For two upward strands a positive
crossing has the left strand (the one entering at the bottom left) on top.
In general the left strand is over exactly when ``sign == eps_left * eps_right``.

Framing is blackboard throughout.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

UP = 1
DOWN = -1

__all__ = [
    "UP",
    "DOWN",
    "End",
    "BoundaryWord",
    "Crossing",
    "Cup",
    "Cap",
    "Identity",
    "Slice",
    "Component",
    "Marker",
    "TangleDiagram",
    "parse_braid",
    "close",
    "cable",
    "cut_strand",
    "rotate_crossings",
    "unknot",
    "add_kink",
    "from_pd",
    "to_pd",
    "walk_from",
    "parse_text",
    "TangleParseError",
]


class TangleParseError(ValueError):
    """Malformed tangle input."""


def _orient(x) -> int:
    if x in (1, "up", "+", "u", True):
        return UP
    if x in (-1, "down", "-", "d", False):
        return DOWN
    raise ValueError(f"bad orientation {x!r}")


def _orient_name(o: int) -> str:
    return "up" if o == UP else "down"


@dataclass(frozen=True)
class End:
    color: int
    orientation: int = UP

    def __post_init__(self):
        if not isinstance(self.color, int) or self.color < 1:
            raise ValueError(f"colors must be positive integers, got {self.color!r}")
        object.__setattr__(self, "orientation", _orient(self.orientation))

    @property
    def up(self) -> bool:
        return self.orientation == UP

    def __str__(self) -> str:
        return f"{self.color}" if self.up else f"{self.color}*"


class BoundaryWord(tuple):
    """Sequence of :class:`End`; ``(a, up)`` renders a and ``(a, down)`` renders a*."""

    def __new__(cls, items: Iterable = ()):
        ends = []
        for it in items:
            if isinstance(it, End):
                ends.append(it)
            elif isinstance(it, int):
                ends.append(End(abs(it), UP if it > 0 else DOWN))
            else:
                c, o = it
                ends.append(End(int(c), _orient(o)))
        return super().__new__(cls, ends)

    def signed(self) -> tuple[int, ...]:
        """Colors with down strands negated, e.g. (1, -2) for 1 ⊗ 2*."""
        return tuple(e.color * e.orientation for e in self)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self) + ")"


@dataclass(frozen=True)
class Crossing:
    pos: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")


@dataclass(frozen=True)
class Cup:
    pos: int
    color: int
    orientation: int = UP

    def __post_init__(self):
        object.__setattr__(self, "orientation", _orient(self.orientation))


@dataclass(frozen=True)
class Cap:
    pos: int
    color: int
    orientation: int = UP

    def __post_init__(self):
        object.__setattr__(self, "orientation", _orient(self.orientation))


@dataclass(frozen=True)
class Identity:
    pass


Slice = Union[Crossing, Cup, Cap, Identity]


def _shift(s: Slice, k: int) -> Slice:
    if isinstance(s, Crossing):
        return Crossing(s.pos + k, s.sign)
    if isinstance(s, Cup):
        return Cup(s.pos + k, s.color, s.orientation)
    if isinstance(s, Cap):
        return Cap(s.pos + k, s.color, s.orientation)
    return s


def apply_slice(word: Sequence[End], s: Slice) -> tuple[End, ...]:
    """Output word of ``s`` on input ``word``; raises ValueError if inconsistent."""
    w = list(word)
    n = len(w)
    if isinstance(s, Crossing):
        if not 0 <= s.pos < n - 1:
            raise ValueError(f"crossing at {s.pos} out of range for {n} strands")
        w[s.pos], w[s.pos + 1] = w[s.pos + 1], w[s.pos]
    elif isinstance(s, Cup):
        if not 0 <= s.pos <= n:
            raise ValueError(f"cup at {s.pos} out of range for {n} strands")
        w[s.pos : s.pos] = [End(s.color, s.orientation), End(s.color, -s.orientation)]
    elif isinstance(s, Cap):
        if not 0 <= s.pos < n - 1:
            raise ValueError(f"cap at {s.pos} out of range for {n} strands")
        left, right = w[s.pos], w[s.pos + 1]
        if left != End(s.color, s.orientation) or right != End(s.color, -s.orientation):
            raise ValueError(f"cap {s} does not match endpoints {left}, {right}")
        del w[s.pos : s.pos + 2]
    elif not isinstance(s, Identity):
        raise TypeError(f"unknown slice {s!r}")
    return tuple(w)


@dataclass(frozen=True)
class Component:
    index: int
    color: int
    writhe: int
    closed: bool
    # (level, position) of every point of the component, level-major order
    points: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Marker:
    """Where the parallel strands of one original component sit after cabling."""

    component: int
    level: int
    pos: int
    width: int


class _UF:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class TangleDiagram:
    bottom: BoundaryWord
    slices: tuple[Slice, ...] = ()
    markers: tuple[Marker, ...] = ()
    _levels: tuple = field(default=(), compare=False, repr=False)
    _comp_of: dict = field(default_factory=dict, compare=False, repr=False)
    _components: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "bottom", BoundaryWord(self.bottom))
        object.__setattr__(self, "slices", tuple(self.slices))
        levels = [tuple(self.bottom)]
        for k, s in enumerate(self.slices):
            try:
                levels.append(apply_slice(levels[-1], s))
            except ValueError as exc:
                raise ValueError(f"slice {k}: {exc}") from None
        object.__setattr__(self, "_levels", tuple(levels))
        self._find_components()

    # structure ------------------------------------------------------------
    @property
    def top(self) -> BoundaryWord:
        return BoundaryWord(self._levels[-1])

    @property
    def levels(self) -> tuple[tuple[End, ...], ...]:
        return self._levels

    def word(self, level: int) -> tuple[End, ...]:
        return self._levels[level]

    @property
    def is_closed(self) -> bool:
        return not self.bottom and not self._levels[-1]

    @property
    def components(self) -> tuple[Component, ...]:
        return self._components

    def component_at(self, level: int, pos: int) -> int:
        return self._comp_of[(level, pos)]

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(c.color for c in self._components)

    @property
    def writhes(self) -> tuple[int, ...]:
        return tuple(c.writhe for c in self._components)

    @property
    def crossing_count(self) -> int:
        return sum(isinstance(s, Crossing) for s in self.slices)

    def _find_components(self) -> None:
        uf = _UF()
        levels = self._levels
        for lvl, word in enumerate(levels):
            for p in range(len(word)):
                uf.find((lvl, p))
        for k, s in enumerate(self.slices):
            n = len(levels[k])
            if isinstance(s, Crossing):
                i = s.pos
                for p in range(n):
                    q = i + 1 if p == i else i if p == i + 1 else p
                    uf.union((k, p), (k + 1, q))
            elif isinstance(s, Cup):
                i = s.pos
                for p in range(n):
                    uf.union((k, p), (k + 1, p if p < i else p + 2))
                uf.union((k + 1, i), (k + 1, i + 1))
            elif isinstance(s, Cap):
                i = s.pos
                for p in range(n):
                    if p < i:
                        uf.union((k, p), (k + 1, p))
                    elif p > i + 1:
                        uf.union((k, p), (k + 1, p - 2))
                uf.union((k, i), (k, i + 1))
            else:
                for p in range(n):
                    uf.union((k, p), (k + 1, p))
        order: dict = {}
        points: dict = {}
        for lvl, word in enumerate(levels):
            for p in range(len(word)):
                r = uf.find((lvl, p))
                if r not in order:
                    order[r] = len(order)
                    points[r] = []
                points[r].append((lvl, p))
        comp_of = {node: order[uf.find(node)] for node in uf.parent}
        ncomp = len(order)
        colors = [0] * ncomp
        for (lvl, p), c in comp_of.items():
            col = levels[lvl][p].color
            if colors[c] and colors[c] != col:
                raise ValueError(f"component {c} carries two colors")
            colors[c] = col
        writhe = [0] * ncomp
        for k, s in enumerate(self.slices):
            if isinstance(s, Crossing):
                a = comp_of[(k, s.pos)]
                b = comp_of[(k, s.pos + 1)]
                if a == b:
                    writhe[a] += s.sign
        open_comps = {comp_of[(0, p)] for p in range(len(levels[0]))}
        open_comps |= {comp_of[(len(levels) - 1, p)] for p in range(len(levels[-1]))}
        comps = []
        for r, idx in sorted(order.items(), key=lambda t: t[1]):
            comps.append(Component(idx, colors[idx], writhe[idx], idx not in open_comps, tuple(points[r])))
        object.__setattr__(self, "_comp_of", comp_of)
        object.__setattr__(self, "_components", tuple(comps))

    def crossing_components(self) -> list[tuple[int, int, int, int]]:
        """(slice index, sign, component of left strand, component of right strand)."""
        out = []
        for k, s in enumerate(self.slices):
            if isinstance(s, Crossing):
                out.append((k, s.sign, self._comp_of[(k, s.pos)], self._comp_of[(k, s.pos + 1)]))
        return out

    def linking_numbers(self) -> dict[tuple[int, int], int]:
        twice: dict[tuple[int, int], int] = {}
        for _, sign, a, b in self.crossing_components():
            if a != b:
                key = (min(a, b), max(a, b))
                twice[key] = twice.get(key, 0) + sign
        return {k: v // 2 for k, v in twice.items()}

    def up_points(self, component: int) -> list[tuple[int, int]]:
        """Points on ``component`` where the strand is oriented upward."""
        comp = self._components[component]
        return [(lvl, p) for lvl, p in comp.points if self._levels[lvl][p].up]

    # composition --------------------------------------------------------------
    def then(self, other: "TangleDiagram") -> "TangleDiagram":
        """Stack ``other`` on top of ``self``."""
        if tuple(other.bottom) != tuple(self.top):
            raise ValueError(f"cannot compose: top {self.top} vs bottom {other.bottom}")
        return TangleDiagram(self.bottom, self.slices + other.slices)

    def tensor(self, other: "TangleDiagram") -> "TangleDiagram":
        """Place ``other`` to the right of ``self``."""
        n = len(self.bottom)
        lower = tuple(self.slices)
        upper = tuple(_shift(s, len(self.top)) for s in other.slices)
        _ = n
        return TangleDiagram(tuple(self.bottom) + tuple(other.bottom), lower + upper)

    def mirror(self) -> "TangleDiagram":
        """Switch every crossing."""
        return TangleDiagram(
            self.bottom,
            tuple(Crossing(s.pos, -s.sign) if isinstance(s, Crossing) else s for s in self.slices),
        )

    def insert_slices(self, level: int, new: Sequence[Slice]) -> "TangleDiagram":
        sl = list(self.slices)
        sl[level:level] = list(new)
        return TangleDiagram(self.bottom, sl)

    # serialization -------------------------------------------------------------
    def to_json(self) -> dict:
        out = {
            "bottom": [[e.color, _orient_name(e.orientation)] for e in self.bottom],
            "top": [[e.color, _orient_name(e.orientation)] for e in self.top],
            "slices": [_slice_json(s) for s in self.slices],
        }
        if self.markers:
            out["markers"] = [[m.component, m.level, m.pos, m.width] for m in self.markers]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "TangleDiagram":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            bottom = BoundaryWord((c, o) for c, o in data.get("bottom", []))
            slices = [_slice_from_json(s) for s in data["slices"]]
            markers = tuple(Marker(*map(int, m)) for m in data.get("markers", []))
            t = cls(bottom, slices, markers)
        except (KeyError, TypeError, ValueError) as exc:
            raise TangleParseError(f"bad tangle JSON: {exc}") from None
        if "top" in data and t.top != BoundaryWord((c, o) for c, o in data["top"]):
            raise TangleParseError("declared top word does not match the slices")
        return t

    def __str__(self) -> str:
        parts = []
        for s in self.slices:
            if isinstance(s, Crossing):
                parts.append(f"X{'+' if s.sign > 0 else '-'}{s.pos}")
            elif isinstance(s, Cup):
                parts.append(f"U{s.pos}:{s.color}{'u' if s.orientation == UP else 'd'}")
            elif isinstance(s, Cap):
                parts.append(f"N{s.pos}:{s.color}{'u' if s.orientation == UP else 'd'}")
            else:
                parts.append("I")
        return f"{self.bottom} " + " ".join(parts) + f" {self.top}"


def _slice_json(s: Slice) -> dict:
    if isinstance(s, Crossing):
        return {"type": "crossing", "pos": s.pos, "sign": s.sign}
    if isinstance(s, Cup):
        return {"type": "cup", "pos": s.pos, "color": s.color, "orientation": _orient_name(s.orientation)}
    if isinstance(s, Cap):
        return {"type": "cap", "pos": s.pos, "color": s.color, "orientation": _orient_name(s.orientation)}
    return {"type": "identity"}


def _slice_from_json(d: dict) -> Slice:
    kind = d["type"]
    if kind == "crossing":
        return Crossing(int(d["pos"]), int(d["sign"]))
    if kind == "cup":
        return Cup(int(d["pos"]), int(d["color"]), _orient(d.get("orientation", "up")))
    if kind == "cap":
        return Cap(int(d["pos"]), int(d["color"]), _orient(d.get("orientation", "up")))
    if kind == "identity":
        return Identity()
    raise ValueError(f"unknown slice type {kind!r}")


# ---------------------------------------------------------------------------
# constructors


def parse_braid(word: Sequence[int], colors: Sequence[int]) -> TangleDiagram:
    """Braid on ``len(colors)`` upward strands; generator ±i crosses strands i, i+1 (1-based)."""
    n = len(colors)
    slices = []
    for g in word:
        g = int(g)
        if g == 0 or abs(g) > n - 1:
            raise ValueError(f"braid generator {g} out of range for {n} strands")
        slices.append(Crossing(abs(g) - 1, 1 if g > 0 else -1))
    return TangleDiagram(BoundaryWord((c, UP) for c in colors), slices)


def close(t: TangleDiagram) -> TangleDiagram:
    """Trace closure: strand j is joined to its top by nested arcs on the right."""
    if tuple(t.bottom) != tuple(t.top):
        raise ValueError("closure needs equal bottom and top words")
    n = len(t.bottom)
    slices: list[Slice] = []
    for j, e in enumerate(t.bottom):
        slices.append(Cup(j, e.color, e.orientation))
    slices.extend(t.slices)
    for j in range(n - 1, -1, -1):
        e = t.bottom[j]
        slices.append(Cap(j, e.color, e.orientation))
    return TangleDiagram((), slices)


def unknot(color: int = 1, curls: int = 0) -> TangleDiagram:
    """Unknot of the given color with ``|curls|`` kinks of sign ``sign(curls)``."""
    t = TangleDiagram((), [Cup(0, color, UP), Cap(0, color, UP)])
    sign = 1 if curls > 0 else -1
    for _ in range(abs(curls)):
        t = add_kink(t, sign)
    return t


def add_kink(t: TangleDiagram, sign: int, component: int = 0, at: int = 0) -> TangleDiagram:
    """Insert a kink of the given sign at an upward point of ``component``."""
    lvl, p = t.up_points(component)[at]
    color = t.components[component].color
    kink = [Cup(p + 1, color, DOWN), Crossing(p, sign), Cap(p, color, DOWN)]
    return t.insert_slices(lvl, kink)


def cable(t: TangleDiagram) -> TangleDiagram:
    """Replace each color-a strand by a parallel color-1 strands (blackboard framing)."""
    slices: list[Slice] = []
    level_map = []
    for k, s in enumerate(t.slices):
        level_map.append(len(slices))
        word = t.word(k)
        off = [0]
        for e in word:
            off.append(off[-1] + e.color)
        if isinstance(s, Crossing):
            a = word[s.pos].color
            b = word[s.pos + 1].color
            p = off[s.pos]
            for j in range(a - 1, -1, -1):
                for step in range(b):
                    slices.append(Crossing(p + j + step, s.sign))
        elif isinstance(s, Cup):
            p = off[s.pos]
            for j in range(s.color):
                slices.append(Cup(p + j, 1, s.orientation))
        elif isinstance(s, Cap):
            p = off[s.pos]
            for j in range(s.color - 1, -1, -1):
                slices.append(Cap(p + j, 1, s.orientation))
    level_map.append(len(slices))
    bottom = BoundaryWord(End(1, e.orientation) for e in t.bottom for _ in range(e.color))
    markers = []
    for comp in t.components:
        ups = t.up_points(comp.index)
        if not ups:
            continue
        lvl, p = ups[0]
        word = t.word(lvl)
        pos = sum(e.color for e in word[:p])
        markers.append(Marker(comp.index, level_map[lvl], pos, comp.color))
    return TangleDiagram(bottom, slices, tuple(markers))


def cut_strand(t: TangleDiagram, component: int = 0, at: int = 0) -> TangleDiagram:
    """Open ``t`` at the ``at``-th upward point of ``component`` into an (a, a)-tangle.

    The lower end is dragged to the top right and the upper end to the bottom
    left, both passing over every other strand.  The cut strand keeps the
    writhe it had in ``t``.
    """
    if not t.is_closed:
        raise ValueError("cut_strand needs a closed diagram")
    if not 0 <= component < len(t.components):
        raise ValueError(f"component {component} not found")
    ups = t.up_points(component)
    if not 0 <= at < len(ups):
        raise ValueError(f"component {component} has {len(ups)} cut points, asked for {at}")
    h, p = ups[at]
    a = t.components[component].color
    word = t.word(h)
    slices: list[Slice] = [_shift(s, 1) for s in t.slices[:h]]
    # lower end (now at p+1) moves right over the strands to its right
    for j in range(p + 2, len(word) + 1):
        other = word[j - 1]
        slices.append(Crossing(j - 1, other.orientation))
    # new bottom strand moves right over word[0..p-1]
    for j in range(p):
        slices.append(Crossing(j, word[j].orientation))
    slices.extend(t.slices[h:])
    out = TangleDiagram([End(a, UP)], slices)
    # the detour changes the blackboard framing of the cut strand; kinks restore it
    k = next(c.index for c in out.components if not c.closed)
    shift = t.components[component].writhe - out.components[k].writhe
    for _ in range(abs(shift)):
        out = add_kink(out, 1 if shift > 0 else -1, k)
    return out


def rotate_crossings(t: TangleDiagram) -> TangleDiagram:
    """Equivalent diagram whose crossings all join two upward strands.

    A crossing with a downward strand is replaced by an upward crossing of the
    same sign conjugated by a cup and a cap, which is a planar isotopy.
    """
    out: list[Slice] = []
    word = list(t.bottom)
    for s in t.slices:
        if isinstance(s, Crossing):
            out.extend(_rotated(word, s.pos, s.sign))
        else:
            out.append(s)
        word = list(apply_slice(word, s))
    return TangleDiagram(t.bottom, out)


def _rotated(word: Sequence[End], i: int, sign: int) -> list[Slice]:
    left, right = word[i], word[i + 1]
    if left.up and right.up:
        return [Crossing(i, sign)]
    if not left.up and right.up:
        inner = [End(right.color, UP), End(left.color, UP)]
        return [Cup(i + 2, left.color, UP)] + _rotated_shift(inner, i + 1, sign) + [Cap(i, left.color, DOWN)]
    if left.up and not right.up:
        inner = [End(right.color, UP), End(left.color, UP)]
        return [Cup(i, right.color, DOWN)] + _rotated_shift(inner, i + 1, sign) + [Cap(i + 2, right.color, UP)]
    # both down: treat (a*, b*) with the (x*, y) rule where y = b* is itself down
    a, b = left.color, right.color
    inner_word = [End(b, DOWN), End(a, UP)]
    return [Cup(i + 2, a, UP)] + _rotated_shift(inner_word, i + 1, sign) + [Cap(i, a, DOWN)]


def _rotated_shift(pair: Sequence[End], i: int, sign: int) -> list[Slice]:
    word = [End(1, UP)] * i + list(pair)
    return _rotated(word, i, sign)


# ---------------------------------------------------------------------------
# PD codes
#
# A PD crossing (a, b, c, d) lists its four edges counterclockwise starting
# from the incoming under-strand edge.  Signs are passed explicitly, since
# published PD tables disagree about how to infer them.  A slice crossing has
# its ports counterclockwise as bottom-left, bottom-right, top-right, top-left.


def to_pd(t: TangleDiagram) -> tuple[list[tuple[int, int, int, int]], list[int], list[int], list[int]]:
    """PD code of a closed diagram.

    Returns (crossings, signs, component colors, colors of crossingless loops).
    Edges are numbered consecutively along each component, starting at 1.
    """
    if not t.is_closed:
        raise ValueError("to_pd needs a closed diagram")
    xid = {k: n for n, (k, _) in enumerate(iter_crossings(t))}
    ports: dict[int, dict[int, int]] = {i: {} for i in range(len(xid))}
    comp_colors: list[int] = []
    loop_colors: list[int] = []
    label = 0
    for comp, seq in _walk_components(t):
        if not seq:
            loop_colors.append(t.components[comp].color)
            continue
        comp_colors.append(t.components[comp].color)
        m = len(seq)
        for j, (k, pin, pout) in enumerate(seq):
            ports[xid[k]][pin] = label + 1 + (j - 1) % m
            ports[xid[k]][pout] = label + 1 + j
        label += m
    pd = []
    signs = []
    for k, s in iter_crossings(t):
        word = t.word(k)
        el, er = word[s.pos].orientation, word[s.pos + 1].orientation
        if s.sign == el * er:  # left strand over, so the right one is under
            start = 1 if er == UP else 3
        else:
            start = 0 if el == UP else 2
        cp = ports[xid[k]]
        pd.append(tuple(cp[(start + r) % 4] for r in range(4)))
        signs.append(s.sign)
    return pd, signs, comp_colors, loop_colors


def walk_from(t: TangleDiagram, start: tuple[int, int]) -> tuple[list[tuple[int, int, int]], tuple[int, int] | None]:
    """Follow the orientation from the point ``start`` = (level, position).

    Returns the crossing passages (slice index, in port, out port), with ports
    numbered 0..3 as bottom-left, bottom-right, top-right, top-left, and the
    boundary point where the walk ended, or None if it came back to ``start``.
    """
    levels = t.levels
    limit = 4 * sum(len(w) for w in levels) + 4
    cur = start
    seq = []
    for _ in range(limit):
        lvl, p = cur
        if levels[lvl][p].up:
            if lvl == len(t.slices):
                return seq, cur
            s = t.slices[lvl]
            if isinstance(s, Crossing) and p in (s.pos, s.pos + 1):
                seq.append((lvl, 0, 2) if p == s.pos else (lvl, 1, 3))
                cur = (lvl + 1, s.pos + 1 if p == s.pos else s.pos)
            elif isinstance(s, Cap) and p in (s.pos, s.pos + 1):
                cur = (lvl, s.pos + 1 if p == s.pos else s.pos)
            elif isinstance(s, Cup):
                cur = (lvl + 1, p if p < s.pos else p + 2)
            elif isinstance(s, Cap):
                cur = (lvl + 1, p if p < s.pos else p - 2)
            else:
                cur = (lvl + 1, p)
        else:
            if lvl == 0:
                return seq, cur
            s = t.slices[lvl - 1]
            if isinstance(s, Crossing) and p in (s.pos, s.pos + 1):
                seq.append((lvl - 1, 3, 1) if p == s.pos else (lvl - 1, 2, 0))
                cur = (lvl - 1, s.pos + 1 if p == s.pos else s.pos)
            elif isinstance(s, Cup) and p in (s.pos, s.pos + 1):
                cur = (lvl, s.pos + 1 if p == s.pos else s.pos)
            elif isinstance(s, Cup):
                cur = (lvl - 1, p if p < s.pos else p - 2)
            elif isinstance(s, Cap):
                cur = (lvl - 1, p if p < s.pos else p + 2)
            else:
                cur = (lvl - 1, p)
        if cur == start:
            return seq, None
    raise RuntimeError("strand walk did not terminate")


def _walk_components(t: TangleDiagram) -> list[tuple[int, list[tuple[int, int, int]]]]:
    return [(comp.index, walk_from(t, comp.points[0])[0]) for comp in t.components]


def from_pd(
    crossings: Sequence[Sequence[int]],
    signs: Sequence[int],
    colors: Sequence[int] | None = None,
    loops: Sequence[int] = (),
) -> TangleDiagram:
    """Slice diagram from a PD code, attaching one crossing at a time to a frontier.

    ``colors`` are per component, with components ordered by their smallest edge
    label; ``loops`` lists colors of extra crossingless circles.
    """
    X = [tuple(int(e) for e in c) for c in crossings]
    if len(signs) != len(X):
        raise TangleParseError("need one sign per PD crossing")
    if any(len(c) != 4 for c in X):
        raise TangleParseError("PD crossings have four edges")
    if any(int(s) not in (1, -1) for s in signs):
        raise TangleParseError("PD signs must be +1 or -1")
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(X):
        for r, e in enumerate(c):
            occurrences.setdefault(e, []).append((ci, r))
    for e, occ in occurrences.items():
        if len(occ) != 2:
            raise TangleParseError(f"edge {e} appears {len(occ)} times")
    # leaves[(ci, r)]: the edge at port r points away from crossing ci
    leaves: dict[tuple[int, int], bool] = {}
    for ci in range(len(X)):
        positive = int(signs[ci]) == 1
        leaves[(ci, 0)] = False
        leaves[(ci, 2)] = True
        leaves[(ci, 1)] = positive  # positive: over strand runs d -> b
        leaves[(ci, 3)] = not positive
    for e, ((c1, r1), (c2, r2)) in occurrences.items():
        if leaves[(c1, r1)] == leaves[(c2, r2)]:
            raise TangleParseError(f"edge {e} has inconsistent orientation")
    uf = _UF()
    for c in X:
        uf.union(c[0], c[2])
        uf.union(c[1], c[3])
    roots: dict = {}
    for e in sorted(occurrences):
        roots.setdefault(uf.find(e), len(roots))
    if colors is None:
        colors = [1] * len(roots)
    if len(colors) != len(roots):
        raise TangleParseError(f"PD code has {len(roots)} components but {len(colors)} colors")
    color_of = {e: int(colors[roots[uf.find(e)]]) for e in occurrences}

    def above(ci: int, r: int) -> int:
        # orientation of the strand leaving port r of ci upward
        return UP if leaves[(ci, r)] else DOWN

    def below(ci: int, r: int) -> int:
        # orientation of the strand arriving at port r of ci from below
        return DOWN if leaves[(ci, r)] else UP

    frontier: list[int] = []
    fdir: list[int] = []
    slices: list[Slice] = []

    def rotate_left() -> None:
        # carry frontier[0] around the bottom of everything to the right end
        nonlocal slices
        e0, o0 = frontier.pop(0), fdir.pop(0)
        col = color_of[e0]
        slices = [Cup(0, col, -o0)] + [_shift(s, 1) for s in slices] + [Cap(0, col, -o0)]
        frontier.append(e0)
        fdir.append(o0)

    def cap_pairs() -> None:
        while True:
            for j in range(len(frontier) - 1):
                if frontier[j] == frontier[j + 1]:
                    slices.append(Cap(j, color_of[frontier[j]], fdir[j]))
                    del frontier[j : j + 2]
                    del fdir[j : j + 2]
                    break
            else:
                if len(frontier) > 2 and frontier[0] == frontier[-1]:
                    rotate_left()
                    continue
                return

    remaining = list(range(len(X)))
    while remaining:
        ci = max(remaining, key=lambda i: (sum(e in frontier for e in X[i]), -i))
        c = X[ci]
        k = sum(e in frontier for e in c)
        n = len(frontier)
        if k == 0:
            start = next(s for s in range(4) if c[s] != c[(s + 1) % 4])
            p = n
        else:
            found = None
            for start in range(4):
                seq = [c[(start + j) % 4] for j in range(k)]
                if seq[0] not in frontier:
                    continue
                first = frontier.index(seq[0])
                if all(frontier[(first + j) % n] == seq[j] for j in range(k)):
                    found = (start, first)
                    break
            if found is None:
                raise TangleParseError("PD code could not be swept into slices (not planar?)")
            start, first = found
            if first + k > n:
                for _ in range(first):
                    rotate_left()
            p = frontier.index(c[start])
        ring = [(start + j) % 4 for j in range(4)]
        sign = int(signs[ci])
        if k == 0:
            bl, br, tr, tl = ring
            slices += [Cup(p, color_of[c[bl]], -below(ci, bl)), Cup(p + 2, color_of[c[br]], below(ci, br))]
            slices.append(Crossing(p + 1, sign))
            frontier[p:p] = [c[bl], c[tl], c[tr], c[br]]
            fdir[p:p] = [-below(ci, bl), above(ci, tl), above(ci, tr), -below(ci, br)]
        elif k == 1:
            br, tr, tl, bl = ring
            slices += [Cup(p, color_of[c[bl]], -below(ci, bl)), Crossing(p + 1, sign)]
            frontier[p : p + 1] = [c[bl], c[tl], c[tr]]
            fdir[p : p + 1] = [-below(ci, bl), above(ci, tl), above(ci, tr)]
        elif k == 2:
            bl, br, tr, tl = ring
            slices.append(Crossing(p, sign))
            frontier[p : p + 2] = [c[tl], c[tr]]
            fdir[p : p + 2] = [above(ci, tl), above(ci, tr)]
        elif k == 3:
            bl, br, tr, tl = ring
            slices += [Crossing(p, sign), Cap(p + 1, color_of[c[tr]], above(ci, tr))]
            frontier[p : p + 3] = [c[tl]]
            fdir[p : p + 3] = [above(ci, tl)]
        else:
            bl, br, tr, tl = ring
            slices += [Crossing(p, sign), Cap(p + 1, color_of[c[tr]], above(ci, tr)), Cap(p, color_of[c[tl]], above(ci, tl))]
            del frontier[p : p + 4]
            del fdir[p : p + 4]
        remaining.remove(ci)
        cap_pairs()
    if frontier:
        raise TangleParseError("PD sweep left open edges")
    for col in loops:
        slices += [Cup(0, int(col), UP), Cap(0, int(col), UP)]
    try:
        return TangleDiagram((), slices)
    except ValueError as exc:
        raise TangleParseError(f"PD code is inconsistent: {exc}") from None


# ---------------------------------------------------------------------------
# text grammar

_INTLIST = r"\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]"
_BRAID_RE = re.compile(
    r"^\s*braid\s+n\s*=\s*(\d+)\s+w\s*=\s*(" + _INTLIST + r")"
    r"(?:\s+colors\s*=\s*(" + _INTLIST + r"))?"
    r"(?:\s+close\s*=\s*(trace|none))?\s*$"
)
_PD_RE = re.compile(r"X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def _intlist(s: str) -> list[int]:
    inner = s.strip()[1:-1].strip()
    return [int(x) for x in inner.split(",")] if inner else []


def parse_text(text: str, close_default: bool = False) -> TangleDiagram:
    """Parse the one-line text grammar (braid or PD form); see README for the grammar."""
    text = text.strip()
    m = _BRAID_RE.match(text)
    if m:
        n = int(m.group(1))
        word = _intlist(m.group(2))
        colors = _intlist(m.group(4)) if m.group(4) else [1] * n
        if len(colors) != n:
            raise TangleParseError(f"colors has {len(colors)} entries for {n} strands")
        if any(c < 1 for c in colors):
            raise TangleParseError("colors must be positive")
        try:
            t = parse_braid(word, colors)
        except ValueError as exc:
            raise TangleParseError(str(exc)) from None
        mode = m.group(6)
        if mode == "trace" or (mode is None and close_default):
            t = close(t)
        return t
    if text.startswith("pd"):
        body = text[2:]
        xs = [tuple(int(v) for v in g) for g in _PD_RE.findall(body)]
        rest = _PD_RE.sub("", body)
        sm = re.search(r"signs\s*=\s*(" + _INTLIST + ")", rest)
        if not xs or not sm:
            raise TangleParseError("pd input needs X[...] crossings and signs=[...]")
        signs = _intlist(sm.group(1))
        cm = re.search(r"colors\s*=\s*(" + _INTLIST + ")", rest)
        colors = _intlist(cm.group(1)) if cm else None
        leftover = re.sub(r"(signs|colors)\s*=\s*" + _INTLIST, "", rest).strip()
        if leftover:
            raise TangleParseError(f"unexpected text in pd input: {leftover!r}")
        return from_pd(xs, signs, colors)
    raise TangleParseError(f"cannot parse tangle input: {text!r}")


def iter_crossings(t: TangleDiagram) -> Iterator[tuple[int, Crossing]]:
    for k, s in enumerate(t.slices):
        if isinstance(s, Crossing):
            yield k, s
