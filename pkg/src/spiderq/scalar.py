"""Exact arithmetic in Z[q^{+-1}, Q^{+-1}] with quantum-integer denominators.

``Q`` stands for ``q^beta``.  A :class:`Scalar` is stored as

    numerator / ((q - q^-1)^k * prod_j Phi_j(q)^e_j)        (j >= 3)

where ``Phi_j`` is the j-th cyclotomic polynomial.  Every quantum integer
``[k]`` factors as ``q^(1-k) * prod_{d | 2k, d >= 3} Phi_d(q)``, so quotients
by quantum factorials stay inside this ring.  The exponents ``k`` and ``e_j``
are kept minimal, which makes the representation unique.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = [
    "QExponent",
    "Scalar",
    "qpow",
    "qint",
    "qbinom",
    "qfactorial",
    "specialize",
    "ZERO",
    "ONE",
]


@dataclass(frozen=True, order=True)
class QExponent:
    """The exponent ``u*beta + v``."""

    u: int = 0
    v: int = 0

    def __add__(self, other: "QExponent | int") -> "QExponent":
        other = QExponent.of(other)
        return QExponent(self.u + other.u, self.v + other.v)

    def __radd__(self, other: int) -> "QExponent":
        return self + other

    def __sub__(self, other: "QExponent | int") -> "QExponent":
        other = QExponent.of(other)
        return QExponent(self.u - other.u, self.v - other.v)

    def __rsub__(self, other: int) -> "QExponent":
        return QExponent.of(other) - self

    def __neg__(self) -> "QExponent":
        return QExponent(-self.u, -self.v)

    def __mul__(self, n: int) -> "QExponent":
        return QExponent(self.u * n, self.v * n)

    __rmul__ = __mul__

    @staticmethod
    def of(x: "QExponent | int | tuple[int, int]") -> "QExponent":
        if isinstance(x, QExponent):
            return x
        if isinstance(x, int):
            return QExponent(0, x)
        u, v = x
        return QExponent(int(u), int(v))

    def at(self, d: int) -> int:
        """Value of the exponent at ``beta = d``."""
        return self.u * d + self.v

    def __str__(self) -> str:
        if self.u == 0:
            return str(self.v)
        head = {1: "b", -1: "-b"}.get(self.u, f"{self.u}b")
        if self.v == 0:
            return head
        return f"{head}{self.v:+d}"


Poly = dict  # (q_exp, Q_exp) -> int, never contains zero coefficients


# ---------------------------------------------------------------------------
# univariate helpers (coefficient lists, lowest degree first)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _div_exact_list(num, list(cyclotomic(d)))
            assert num is not None
    return tuple(num)


def _div_exact_list(a: list[int], p: list[int]) -> list[int] | None:
    """Exact quotient a / p of integer polynomials with monic ``p``; None if inexact."""
    n = len(p) - 1
    if len(a) - 1 < n:
        return None if any(a) else []
    a = list(a)
    out = [0] * (len(a) - n)
    for i in range(len(a) - 1, n - 1, -1):
        c = a[i]
        if c:
            out[i - n] = c
            for j in range(n + 1):
                a[i - n + j] -= c * p[j]
    if any(a[:n]):
        return None
    return out


@lru_cache(maxsize=None)
def _euler_phi(n: int) -> int:
    return len(cyclotomic(n)) - 1


_QQ1 = (-1, 0, 1)  # q^2 - 1, so that q - q^-1 = q^-1 (q^2 - 1)


def _poly_div_q(num: Poly, p: tuple[int, ...], shift: int = 0) -> Poly | None:
    """Divide by the univariate q-polynomial ``p`` (times q^shift); None if inexact."""
    slices: dict[int, dict[int, int]] = {}
    for (i, j), c in num.items():
        slices.setdefault(j, {})[i] = c
    out: Poly = {}
    plist = list(p)
    for j, sl in slices.items():
        lo = min(sl)
        hi = max(sl)
        coeffs = [0] * (hi - lo + 1)
        for i, c in sl.items():
            coeffs[i - lo] = c
        quo = _div_exact_list(coeffs, plist)
        if quo is None:
            return None
        for t, c in enumerate(quo):
            if c:
                out[(lo + t - shift, j)] = c
    return out


def _poly_mul(a: Poly, b: Poly) -> Poly:
    if len(a) == 1 and len(b) == 1:
        ((ea, ca),) = a.items()
        ((eb, cb),) = b.items()
        return {(ea[0] + eb[0], ea[1] + eb[1]): ca * cb}
    out: Poly = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _poly_add(a: Poly, b: Poly, sign: int = 1) -> Poly:
    out = dict(a)
    for key, c in b.items():
        v = out.get(key, 0) + sign * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def _qmq_power(k: int) -> tuple:
    """(q - q^-1)^k as a sorted item tuple."""
    p: Poly = {(0, 0): 1}
    base = {(1, 0): 1, (-1, 0): -1}
    for _ in range(k):
        p = _poly_mul(p, base)
    return tuple(sorted(p.items()))


@lru_cache(maxsize=None)
def _cyc_power(j: int, e: int) -> tuple:
    base = {(i, 0): c for i, c in enumerate(cyclotomic(j)) if c}
    p: Poly = {(0, 0): 1}
    for _ in range(e):
        p = _poly_mul(p, base)
    return tuple(sorted(p.items()))


def _canon(num: Poly, k: int, cyc: Mapping[int, int]) -> tuple[Poly, int, tuple]:
    if not num:
        return {}, 0, ()
    while k > 0:
        r = _poly_div_q(num, _QQ1, shift=-1)
        if r is None:
            break
        num, k = r, k - 1
    out_cyc = []
    for j in sorted(cyc):
        e = cyc[j]
        while e > 0:
            r = _poly_div_q(num, cyclotomic(j))
            if r is None:
                break
            num, e = r, e - 1
        if e:
            out_cyc.append((j, e))
    return num, k, tuple(out_cyc)


def _strip_cyclotomics(num: Poly) -> tuple[Poly, int, dict[int, int]]:
    """Split off all factors (q - q^-1) and Phi_j (j >= 3) from ``num``."""
    k = 0
    while True:
        r = _poly_div_q(num, _QQ1, shift=-1)
        if r is None:
            break
        num, k = r, k + 1
    found: dict[int, int] = {}
    j = 3
    while True:
        qs = [i for i, _ in num]
        span = max(qs) - min(qs)
        if span == 0:
            break
        if j > 2 * span * span + 2:
            break
        if _euler_phi(j) <= span:
            r = _poly_div_q(num, cyclotomic(j))
            if r is not None:
                num = r
                found[j] = found.get(j, 0) + 1
                continue
        j += 1
    return num, k, found


class Scalar:
    """An element of Z[q^{+-1}, Q^{+-1}] localized at (q - q^-1) and cyclotomics in q."""

    __slots__ = ("_num", "_k", "_cyc", "_hash")

    def __init__(
        self,
        terms: Mapping[tuple[int, int], int] | int = 0,
        denom_power: int = 0,
        cyclotomic: Mapping[int, int] | Iterable[tuple[int, int]] = (),
        *,
        _raw: bool = False,
    ):
        if isinstance(terms, int):
            num = {(0, 0): terms} if terms else {}
        else:
            num = {tuple(key): int(c) for key, c in terms.items() if c}
        cyc = dict(cyclotomic)
        if any(j < 3 for j in cyc):
            raise ValueError("cyclotomic factors must have index >= 3")
        if denom_power < 0:
            raise ValueError("denom_power must be non-negative")
        if _raw:
            self._num, self._k, self._cyc = num, denom_power, tuple(sorted(cyc.items()))
        else:
            self._num, self._k, self._cyc = _canon(num, denom_power, cyc)
        self._hash = None

    @classmethod
    def _make(cls, num: Poly, k: int, cyc: tuple) -> "Scalar":
        s = cls.__new__(cls)
        s._num, s._k, s._cyc, s._hash = num, k, cyc, None
        return s

    # constructors -------------------------------------------------------
    @classmethod
    def monomial(cls, q_exp: int = 0, Q_exp: int = 0, coeff: int = 1) -> "Scalar":
        return cls._make({(q_exp, Q_exp): coeff} if coeff else {}, 0, ())

    @classmethod
    def coerce(cls, x: "Scalar | int") -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls._make({(0, 0): x} if x else {}, 0, ())
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    # accessors -----------------------------------------------------------
    @property
    def numerator(self) -> dict[tuple[int, int], int]:
        return dict(self._num)

    @property
    def denom_power(self) -> int:
        return self._k

    @property
    def cyclotomic(self) -> tuple[tuple[int, int], ...]:
        return self._cyc

    def is_zero(self) -> bool:
        return not self._num

    def is_laurent(self) -> bool:
        """True when there is no denominator at all."""
        return self._k == 0 and not self._cyc

    def depends_on_Q(self) -> bool:
        return any(j for (_, j) in self._num)

    def terms(self) -> list[tuple[int, int, int]]:
        """Numerator terms as (q_exp, Q_exp, coeff), ordered by (Q_exp, q_exp)."""
        return [(i, j, c) for (i, j), c in sorted(self._num.items(), key=lambda t: (t[0][1], t[0][0]))]

    # arithmetic -----------------------------------------------------------
    def _align(self, other: "Scalar") -> tuple[Poly, Poly, int, dict[int, int]]:
        k = max(self._k, other._k)
        cyc = dict(self._cyc)
        for j, e in other._cyc:
            cyc[j] = max(cyc.get(j, 0), e)

        def lift(s: "Scalar") -> Poly:
            num = s._num
            if k > s._k:
                num = _poly_mul(num, dict(_qmq_power(k - s._k)))
            mine = dict(s._cyc)
            for j, e in cyc.items():
                extra = e - mine.get(j, 0)
                if extra:
                    num = _poly_mul(num, dict(_cyc_power(j, extra)))
            return num

        return lift(self), lift(other), k, cyc

    def _addsub(self, other, sign: int) -> "Scalar":
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                other = Scalar.coerce(other)
            else:
                return NotImplemented
        if not other._num:
            return self if sign == 1 else self
        if not self._num:
            return other if sign == 1 else -other
        if self._k == other._k and self._cyc == other._cyc:
            num = _poly_add(self._num, other._num, sign)
            if self._k == 0 and not self._cyc:
                return Scalar._make(num, 0, ())
            n, k, c = _canon(num, self._k, dict(self._cyc))
            return Scalar._make(n, k, c)
        a, b, k, cyc = self._align(other)
        n, k, c = _canon(_poly_add(a, b, sign), k, cyc)
        return Scalar._make(n, k, c)

    def __add__(self, other):
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._addsub(other, -1)

    def __rsub__(self, other):
        return (-self)._addsub(other, 1)

    def __neg__(self) -> "Scalar":
        return Scalar._make({key: -c for key, c in self._num.items()}, self._k, self._cyc)

    def __pos__(self) -> "Scalar":
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Scalar._make({key: c * other for key, c in self._num.items()}, self._k, self._cyc)
        if not isinstance(other, Scalar):
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        num = _poly_mul(self._num, other._num)
        if not self._k and not self._cyc and not other._k and not other._cyc:
            return Scalar._make(num, 0, ())
        cyc = dict(self._cyc)
        for j, e in other._cyc:
            cyc[j] = cyc.get(j, 0) + e
        n, k, c = _canon(num, self._k + other._k, cyc)
        return Scalar._make(n, k, c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Multiplicative inverse; only units times quantum-integer factors are invertible."""
        if not self._num:
            raise ZeroDivisionError("Scalar division by zero")
        rest, k, found = _strip_cyclotomics(self._num)
        if len(rest) != 1:
            raise ArithmeticError(f"{self} is not invertible in the quantum coefficient ring")
        ((i, j), c) = next(iter(rest.items()))
        if c not in (1, -1):
            raise ArithmeticError(f"{self} is not invertible in the quantum coefficient ring")
        num: Poly = {(-i, -j): c}
        # old denominators move to the numerator
        if self._k:
            num = _poly_mul(num, dict(_qmq_power(self._k)))
        for jj, e in self._cyc:
            num = _poly_mul(num, dict(_cyc_power(jj, e)))
        n, kk, cc = _canon(num, k, found)
        return Scalar._make(n, kk, cc)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Scalar.coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def try_divide(self, other: "Scalar") -> "Scalar | None":
        try:
            return self / other
        except ArithmeticError:
            return None

    # comparison -------------------------------------------------------------
    def _key(self):
        return (tuple(sorted(self._num.items())), self._k, self._cyc)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Scalar.coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._k == other._k and self._cyc == other._cyc and self._num == other._num

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._num)

    # conversions -----------------------------------------------------------------
    def specialize(self, d: int) -> "Scalar":
        """Substitute Q = q^d."""
        num: Poly = {}
        for (i, j), c in self._num.items():
            key = (i + d * j, 0)
            v = num.get(key, 0) + c
            if v:
                num[key] = v
            else:
                num.pop(key, None)
        n, k, cyc = _canon(num, self._k, dict(self._cyc))
        return Scalar._make(n, k, cyc)

    def bar(self) -> "Scalar":
        """The involution q -> q^-1, Q -> Q^-1."""
        num = {(-i, -j): c for (i, j), c in self._num.items()}
        # (q^-1 - q)^k = (-1)^k (q - q^-1)^k ; Phi_j(q^-1) = q^-phi(j) Phi_j(q) for j >= 2
        sign = -1 if self._k % 2 else 1
        shift = sum(_euler_phi(j) * e for j, e in self._cyc)
        num = {(i + shift, j): sign * c for (i, j), c in num.items()}
        n, k, cyc = _canon(num, self._k, dict(self._cyc))
        return Scalar._make(n, k, cyc)

    def evaluate(self, q: complex, Q: complex | None = None) -> complex:
        """Numerical value, for debugging and sanity checks only."""
        if Q is None:
            Q = 1.0
        num = sum(c * q**i * Q**j for (i, j), c in self._num.items())
        den = (q - 1 / q) ** self._k
        for j, e in self._cyc:
            den *= sum(c * q**t for t, c in enumerate(cyclotomic(j))) ** e
        return num / den

    def to_json(self) -> dict:
        return {
            "terms": [list(t) for t in self.terms()],
            "denom_power": self._k,
            "cyclotomic": [list(t) for t in self._cyc],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "Scalar":
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict[tuple[int, int], int] = {}
        for i, j, c in data["terms"]:
            terms[(int(i), int(j))] = terms.get((int(i), int(j)), 0) + int(c)
        return cls(terms, int(data.get("denom_power", 0)), [tuple(t) for t in data.get("cyclotomic", [])])

    def numerator_str(self) -> str:
        if not self._num:
            return "0"
        parts = []
        for i, j, c in reversed(self.terms()):
            mono = []
            if i:
                mono.append("q" if i == 1 else f"q^{i}")
            if j:
                mono.append("Q" if j == 1 else f"Q^{j}")
            body = "*".join(mono)
            if not body:
                parts.append(f"{c:+d}")
            elif c == 1:
                parts.append(f"+{body}")
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c:+d}*{body}")
        s = " ".join(p[0] + " " + p[1:] for p in parts)
        s = s[2:] if s.startswith("+ ") else "-" + s[2:]
        return s

    def __str__(self) -> str:
        num = self.numerator_str()
        dens = []
        if self._k:
            dens.append("(q - q^-1)" + (f"^{self._k}" if self._k > 1 else ""))
        for j, e in self._cyc:
            dens.append(f"Phi{j}(q)" + (f"^{e}" if e > 1 else ""))
        if not dens:
            return num
        if len(self._num) > 1:
            num = f"({num})"
        return f"{num}/" + "*".join(dens) if len(dens) == 1 else f"{num}/(" + "*".join(dens) + ")"

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar._make({}, 0, ())
ONE = Scalar._make({(0, 0): 1}, 0, ())

Number = Union[Scalar, int]


def qpow(x: QExponent | int | tuple[int, int]) -> Scalar:
    """The unit monomial q^(u*beta + v) = Q^u q^v."""
    x = QExponent.of(x)
    return Scalar._make({(x.v, x.u): 1}, 0, ())


def qint(x: QExponent | int | tuple[int, int]) -> Scalar:
    """Quantum integer [x] = (q^x - q^-x)/(q - q^-1)."""
    x = QExponent.of(x)
    if x.u == 0 and x.v == 0:
        return ZERO
    return _qint_cached(x.u, x.v)


@lru_cache(maxsize=4096)
def _qint_cached(u: int, v: int) -> Scalar:
    return Scalar({(v, u): 1, (-v, -u): -1}, 1)


def qfactorial(k: int) -> Scalar:
    out = ONE
    for j in range(1, k + 1):
        out = out * qint(j)
    return out


def qbinom(x: QExponent | int | tuple[int, int], k: int) -> Scalar:
    """Quantum binomial [x][x-1]...[x-k+1] / [k]!."""
    if k < 0:
        return ZERO
    x = QExponent.of(x)
    return _qbinom_cached(x.u, x.v, k)


@lru_cache(maxsize=4096)
def _qbinom_cached(u: int, v: int, k: int) -> Scalar:
    x = QExponent(u, v)
    num = ONE
    for j in range(k):
        num = num * qint(x - j)
    return num / qfactorial(k)


def specialize(s: Scalar | int, d: int) -> Scalar:
    """Substitute Q = q^d, giving a Laurent fraction in q alone."""
    return Scalar.coerce(s).specialize(d)


q = Scalar.monomial(1, 0)
Q = Scalar.monomial(0, 1)
