"""Doubled Schur algebras and their functor into ladder morphisms.

A sign sequence ``eta`` fixes which weight entries are ordinary
(``eta_i = +1``, entry in Z>=0) and which live on the beta side
(``eta_i = -1``, entry in beta - Z>=0).  Weight entries are
:class:`~spiderq.scalar.QExponent` values ``u*beta + v``.

Words are written as in the algebra: ``(("E", 1), ("F", 2))`` is
``E_1 F_2``, so the rightmost letter acts first.  Generator indices are
1-based.  A term whose source or intermediate weights leave ``P_eta`` is zero.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .howe import WedgeOperator, apply_ladder
from .scalar import ONE, ZERO, QExponent, Scalar, qint, qpow
from .spider import E as ladder_E
from .spider import F as ladder_F
from .spider import LadderWord, Morphism, braiding, ins0
from .tangle import DOWN, UP

__all__ = [
    "SignSeq",
    "DSWeight",
    "DSElement",
    "ds_compose",
    "generator",
    "phi",
    "phi_object",
    "oracle_equal",
    "oracle_operator",
    "lusztig_T",
    "braid_conjugate",
]

Letter = tuple[str, int]
Word = tuple[Letter, ...]


class SignSeq(tuple):
    def __new__(cls, items: Iterable[int]):
        vals = tuple(int(x) for x in items)
        if not vals:
            raise ValueError("a sign sequence is nonempty")
        if any(x not in (1, -1) for x in vals):
            raise ValueError("signs must be +1 or -1")
        return super().__new__(cls, vals)


class DSWeight(tuple):
    """A weight: a tuple of QExponents (plain ints are promoted)."""

    def __new__(cls, items: Iterable[QExponent | int | tuple[int, int]]):
        return super().__new__(cls, tuple(QExponent.of(x) for x in items))

    def valid_for(self, eta: Sequence[int]) -> bool:
        if len(self) != len(eta):
            return False
        for lam, e in zip(self, eta):
            if e == 1 and not (lam.u == 0 and lam.v >= 0):
                return False
            if e == -1 and not (lam.u == 1 and lam.v <= 0):
                return False
        return True

    def shift(self, letter: Letter) -> "DSWeight":
        """Weight after applying ``letter``: E_i adds alpha_i, F_i subtracts it."""
        kind, i = letter
        d = 1 if kind == "E" else -1
        out = list(self)
        out[i - 1] = out[i - 1] + d
        out[i] = out[i] - d
        return DSWeight(out)

    def swap(self, i: int) -> "DSWeight":
        out = list(self)
        out[i - 1], out[i] = out[i], out[i - 1]
        return DSWeight(out)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self) + ")"


def _check_letter(letter: Letter, k: int) -> Letter:
    kind, i = letter
    if kind not in ("E", "F"):
        raise ValueError(f"unknown generator {kind!r}")
    if not 1 <= i <= k - 1:
        raise ValueError(f"generator index {i} out of range for k = {k}")
    return (kind, int(i))


def _trace(eta: SignSeq, source: DSWeight, word: Word) -> tuple[DSWeight, bool]:
    """Target weight of ``word`` on ``source`` and whether every weight on the way is valid."""
    lam = source
    ok = lam.valid_for(eta)
    for letter in reversed(word):
        lam = lam.shift(letter)
        ok = ok and lam.valid_for(eta)
    return lam, ok


class DSElement:
    """A Scalar combination of words acting on the idempotent ``1_source``."""

    __slots__ = ("eta", "source", "target", "terms")

    def __init__(
        self,
        eta: Sequence[int],
        source: Sequence,
        terms: Mapping[Sequence[Letter], Scalar | int] = (),
        target: Sequence | None = None,
    ):
        self.eta = SignSeq(eta)
        self.source = DSWeight(source)
        if len(self.source) != len(self.eta):
            raise ValueError("weight and sign sequence have different lengths")
        k = len(self.eta)
        self.target = DSWeight(target) if target is not None else None
        out: dict[Word, Scalar] = {}
        for word, c in dict(terms).items():
            word = tuple(_check_letter(tuple(x), k) for x in word)
            tgt, ok = _trace(self.eta, self.source, word)
            if self.target is None:
                self.target = tgt
            elif tgt != self.target:
                raise ValueError(f"word {word} ends at {tgt}, not {self.target}")
            if not ok:
                continue
            v = out.get(word, ZERO) + Scalar.coerce(c)
            if v.is_zero():
                out.pop(word, None)
            else:
                out[word] = v
        if self.target is None:
            self.target = self.source
        self.terms = out

    @classmethod
    def identity(cls, eta: Sequence[int], weight: Sequence) -> "DSElement":
        return cls(eta, weight, {(): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def _same_shape(self, other: "DSElement") -> None:
        if (self.eta, self.source, self.target) != (other.eta, other.source, other.target):
            raise ValueError("elements have different signs, sources or targets")

    def __add__(self, other: "DSElement") -> "DSElement":
        self._same_shape(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, ZERO) + c
        return DSElement(self.eta, self.source, terms, self.target)

    def __neg__(self) -> "DSElement":
        return self.scale(-1)

    def __sub__(self, other: "DSElement") -> "DSElement":
        return self + (-other)

    def scale(self, c: Scalar | int) -> "DSElement":
        c = Scalar.coerce(c)
        return DSElement(self.eta, self.source, {w: c * x for w, x in self.terms.items()}, self.target)

    def __rmul__(self, c: Scalar | int) -> "DSElement":
        return self.scale(c)

    def __matmul__(self, other: "DSElement") -> "DSElement":
        return ds_compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DSElement):
            return NotImplemented
        return (self.eta, self.source, self.target, self.terms) == (other.eta, other.source, other.target, other.terms)

    def __repr__(self) -> str:
        def wstr(w: Word) -> str:
            return "".join(f"{k}{i}" for k, i in w) or "1"

        body = " + ".join(f"({c}) {wstr(w)}" for w, c in self.terms.items()) or "0"
        return f"DSElement[{self.source} -> {self.target}]({body})"


def generator(eta: Sequence[int], weight: Sequence, kind: str, i: int) -> DSElement:
    """``E_i 1_weight`` or ``F_i 1_weight``."""
    return DSElement(eta, weight, {((kind, i),): ONE})


def ds_compose(x: DSElement, y: DSElement) -> DSElement:
    """``x`` after ``y``: words are concatenated and zero terms dropped."""
    if x.eta != y.eta:
        raise ValueError("elements over different sign sequences")
    if y.target != x.source:
        raise ValueError(f"cannot compose: {y.target} != {x.source}")
    terms: dict[Word, Scalar] = {}
    for w2, c2 in y.terms.items():
        for w1, c1 in x.terms.items():
            w = w1 + w2
            terms[w] = terms.get(w, ZERO) + c1 * c2
    return DSElement(x.eta, y.source, terms, x.target)


# ---------------------------------------------------------------------------
# the functor into ladders


def _entry(lam: QExponent, e: int) -> tuple[int, int]:
    """Padded ladder entry (label, orientation) of one weight entry."""
    if e == 1:
        return (lam.v, UP)
    return (-lam.v, DOWN)


def phi_object(eta: Sequence[int], weight: Sequence) -> tuple[tuple[int, int], ...]:
    """The padded ladder object of a weight: ``lambda_i`` or ``(beta - lambda_i)*``."""
    eta = SignSeq(eta)
    weight = DSWeight(weight)
    if not weight.valid_for(eta):
        raise ValueError(f"weight {weight} is not valid for signs {tuple(eta)}")
    return tuple(_entry(lam, e) for lam, e in zip(weight, eta))


def _ladder(padded: Sequence[tuple[int, int]], word: Word) -> LadderWord:
    src = [a * o for a, o in padded if a]
    pre = [ins0(j, o) for j, (a, o) in enumerate(padded) if a == 0]
    gens = [(ladder_E if kind == "E" else ladder_F)(i - 1) for kind, i in reversed(word)]
    return LadderWord(src, pre + gens)


def phi(x: DSElement) -> Morphism:
    """Image of ``x`` in ladder morphisms: each letter becomes a single rung."""
    src = phi_object(x.eta, x.source)
    canon_src = tuple(a * o for a, o in src if a)
    if not x.target.valid_for(x.eta):
        # only possible for the zero element; its image is the zero map
        return Morphism(canon_src, canon_src)
    tgt = phi_object(x.eta, x.target)
    canon_tgt = tuple(a * o for a, o in tgt if a)
    out = Morphism(canon_src, canon_tgt)
    for word, c in x.terms.items():
        out = out + Morphism.of(_ladder(src, word), c)
    return out


def _at(mor: Morphism, d: int) -> Morphism:
    return Morphism(mor.source, mor.target, {w: c.specialize(d) for w, c in mor.terms.items()})


def _max_label(eta: Sequence[int], weight: Sequence) -> int:
    return max((abs(a) for a, _ in phi_object(eta, weight)), default=0)


def oracle_operator(x: DSElement, mn: tuple[int, int]) -> WedgeOperator:
    """The operator of ``phi(x)`` on gl(m|n) exterior powers, with beta = m - n."""
    m, n = mn
    return apply_ladder(m, n, _at(phi(x), m - n))


def oracle_equal(eta: Sequence[int], N: int, x: DSElement, y: DSElement, mn: tuple[int, int]) -> bool:
    """Whether ``x`` and ``y`` act identically on gl(m|n) exterior powers.

    Ladder labels of the source and target weights must not exceed ``N``.
    Equality here is a necessary condition for equality in the algebra.
    """
    eta = SignSeq(eta)
    for z in (x, y):
        if z.eta != eta:
            raise ValueError("element over a different sign sequence")
    if (x.source, x.target) != (y.source, y.target):
        raise ValueError("elements have different sources or targets")
    for lam in (x.source, x.target):
        if lam.valid_for(eta) and _max_label(eta, lam) > N:
            raise ValueError(f"weight {lam} has a label above N = {N}")
    if not x.target.valid_for(eta):
        return x.is_zero() and y.is_zero()
    return oracle_operator(x, mn) == oracle_operator(y, mn)


# ---------------------------------------------------------------------------
# symmetries


def _T_letter(i: int, letter: Letter, lam: DSWeight) -> dict[Word, Scalar]:
    """Image of ``letter 1_lam`` as a combination of words on ``1_{s lam}``."""
    kind, j = letter
    q = qpow(1)
    if j == i:
        diff = lam[i - 1] - lam[i]
        if kind == "E":
            return {(("F", i),): qpow(diff)}
        return {(("E", i),): qpow(-diff + 2)}
    if j in (i - 1, i + 1):
        if kind == "E":
            return {(("E", j), ("E", i)): q, (("E", i), ("E", j)): -ONE}
        return {(("F", i), ("F", j)): q.inverse(), (("F", j), ("F", i)): -ONE}
    return {(letter,): ONE}


def lusztig_T(i: int, x: DSElement) -> DSElement:
    """The symmetry T_i from signs eta (eta_i = +1, eta_{i+1} = -1) to s_i eta.

    Letters far from ``i`` are sent to themselves.
    """
    eta = x.eta
    if not 1 <= i <= len(eta) - 1:
        raise ValueError(f"index {i} out of range")
    if (eta[i - 1], eta[i]) != (1, -1):
        raise ValueError("T_i needs eta_i = +1 and eta_{i+1} = -1")
    eta2 = list(eta)
    eta2[i - 1], eta2[i] = eta2[i], eta2[i - 1]
    src = x.source.swap(i)
    tgt = x.target.swap(i)
    terms: dict[Word, Scalar] = {}
    for word, c in x.terms.items():
        # expand right to left, tracking the weight each letter starts from
        partial: dict[Word, Scalar] = {(): c}
        lam = x.source
        for letter in reversed(word):
            img = _T_letter(i, letter, lam)
            partial = {w2 + w1: c1 * c2 for w1, c1 in partial.items() for w2, c2 in img.items()}
            lam = lam.shift(letter)
        for w, v in partial.items():
            terms[w] = terms.get(w, ZERO) + v
    return DSElement(eta2, src, terms, tgt)


def _crossing_at(padded: Sequence[tuple[int, int]], i: int, sign: int, natural: bool) -> Morphism:
    """The crossing of entries i, i+1 (1-based) of a padded object, in canonical form."""
    canon = tuple(a * o for a, o in padded if a)
    (a, oa), (b, ob) = padded[i - 1], padded[i]
    if a == 0 or b == 0:
        return Morphism.identity(canon)
    left = tuple(x * o for x, o in padded[: i - 1] if x)
    right = tuple(x * o for x, o in padded[i + 1 :] if x)
    return braiding(a, b, sign, (oa, ob), natural=natural).embed(left, right)


def braid_conjugate(i: int, x: DSElement, mn: tuple[int, int], natural: bool = False) -> WedgeOperator:
    """``T_i G(phi(x)) T_i^-1`` with ``T_i`` the crossing of entries i and i+1."""
    m, n = mn
    d = m - n
    src = phi_object(x.eta, x.source)
    tgt = phi_object(x.eta, x.target)
    src_swapped = tuple(src[: i - 1]) + (src[i], src[i - 1]) + tuple(src[i + 1 :])
    t_tgt = _crossing_at(tgt, i, 1, natural)
    t_src_inv = _crossing_at(src_swapped, i, -1, natural)
    mor = t_tgt @ _at(phi(x), d) @ t_src_inv
    return apply_ladder(m, n, mor)
