"""Exact arithmetic: Laurent polynomials, truncated series, cyclic group
algebras and a little elementary number theory.

Everything here is immutable and uses Python integers or
:class:`fractions.Fraction`; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from .errors import DomainError, InvariantViolation

Coeff = Union[int, Fraction]

__all__ = [
    "LaurentPoly",
    "BivarPoly",
    "TruncSeries",
    "GroupAlgElem",
    "Y",
    "factorize",
    "moebius",
    "divisors",
    "ramanujan_sum",
    "cyclotomic_coeffs",
]


def _normalize_coeff(c) -> Coeff:
    if isinstance(c, bool):
        raise TypeError("boolean coefficients are not allowed")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _normalize_coeff(Fraction(c.numerator, c.denominator))
    raise TypeError(f"inexact coefficient {c!r} of type {type(c).__name__}")


class LaurentPoly:
    """A Laurent polynomial in one variable ``y`` with exact coefficients.

    Coefficients are ``int`` or ``Fraction``. A fraction whose denominator
    is 1 is stored as an ``int``, so :meth:`is_integral` is a plain type
    check. Zero coefficients are never stored; the zero polynomial has no
    terms.

    >>> p = LaurentPoly({0: 1, 1: -1})
    >>> p * p
    LaurentPoly('1 - 2*y + y^2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        items: Dict[int, Coeff] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(e, int) or isinstance(e, bool):
                    raise TypeError(f"exponent must be an integer, got {e!r}")
                c = _normalize_coeff(c)
                if c:
                    items[e] = c
        self._terms: Tuple[Tuple[int, Coeff], ...] = tuple(sorted(items.items()))
        self._hash = None

    # construction helpers

    @classmethod
    def _from_dict(cls, d: Dict[int, Coeff]) -> "LaurentPoly":
        # trusted path: coefficients already normalized, zeros allowed
        p = cls.__new__(cls)
        p._terms = tuple(sorted((e, c) for e, c in d.items() if c))
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Coeff) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: Coeff = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Coeff], shift: int = 0) -> "LaurentPoly":
        """Build ``sum(coeffs[i] * y**(i + shift))``."""
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return cls.constant(other)

    # accessors

    @property
    def terms(self) -> Tuple[Tuple[int, Coeff], ...]:
        """``(exponent, coefficient)`` pairs in ascending exponent order."""
        return self._terms

    def as_dict(self) -> Dict[int, Coeff]:
        return dict(self._terms)

    def coeff(self, e: int) -> Coeff:
        for exp, c in self._terms:
            if exp == e:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return self._terms[-1][0]

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no lowest degree")
        return self._terms[0][0]

    def leading_coeff(self) -> Coeff:
        return self._terms[-1][1] if self._terms else 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for _, c in self._terms)

    def to_integral(self) -> "LaurentPoly":
        """Return ``self`` after checking that no denominator survives."""
        for e, c in self._terms:
            if not isinstance(c, int):
                raise InvariantViolation(
                    f"coefficient {c} of y^{e} is not an integer"
                )
        return self

    # arithmetic

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_dict({e: -c for e, c in self._terms})

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.constant(other)
            except TypeError:
                return NotImplemented
        d = dict(self._terms)
        for e, c in other._terms:
            d[e] = _normalize_coeff(d.get(e, 0) + c)
        return LaurentPoly._from_dict(d)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            try:
                c = _normalize_coeff(other)
            except TypeError:
                return NotImplemented
            return LaurentPoly._from_dict(
                {e: _normalize_coeff(a * c) for e, a in self._terms}
            )
        d: Dict[int, Coeff] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly._from_dict({e: _normalize_coeff(c) for e, c in d.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int) or k < 0:
            raise DomainError("only nonnegative integer powers are supported")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``y**k``."""
        return LaurentPoly._from_dict({e + k: c for e, c in self._terms})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises :class:`InvariantViolation` on a remainder."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        lo_a, lo_b = self.min_degree(), other.min_degree()
        num = [0] * (self.degree() - lo_a + 1)
        for e, c in self._terms:
            num[e - lo_a] = c
        den = [0] * (other.degree() - lo_b + 1)
        for e, c in other._terms:
            den[e - lo_b] = c
        db = len(den) - 1
        if len(num) - 1 < db:
            raise InvariantViolation(f"{self} is not divisible by {other}")
        lc = den[-1]
        quot = [0] * (len(num) - db)
        for i in range(len(num) - 1, db - 1, -1):
            c = num[i]
            if c:
                c = _normalize_coeff(Fraction(c) / lc)
                quot[i - db] = c
                for j, b in enumerate(den):
                    num[i - db + j] -= c * b
        if any(num[:db]):
            raise InvariantViolation(f"{self} is not divisible by {other}")
        return LaurentPoly.from_coeffs(quot, lo_a - lo_b)

    def __call__(self, value) -> Coeff:
        """Evaluate at an exact number (negative exponents need a unit)."""
        total: Coeff = 0
        for e, c in self._terms:
            if e >= 0:
                total += c * value**e
            else:
                total += c * Fraction(1, 1) / Fraction(value) ** (-e)
        return _normalize_coeff(total)

    def map_terms(self, fn) -> "LaurentPoly":
        """Apply ``fn(e, c) -> (e', c')`` to every term and re-collect."""
        d: Dict[int, Coeff] = {}
        for e, c in self._terms:
            e2, c2 = fn(e, c)
            d[e2] = d.get(e2, 0) + c2
        return LaurentPoly({e: c for e, c in d.items()})

    # comparison, hashing, display

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        try:
            return self._terms == LaurentPoly.constant(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for i, (e, c) in enumerate(self._terms):
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = "y" if e == 1 else f"y^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
#: The variable ``y``.
Y = LaurentPoly.monomial(1)


class BivarPoly:
    """Polynomial in ``x`` and ``y`` with integer coefficients.

    Only what the E-polynomial cross-checks need: ring operations and the
    specialization ``x := value``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], int] | None = None):
        items = {}
        for (i, j), c in (terms or {}).items():
            if c:
                items[(int(i), int(j))] = int(c)
        self._terms = tuple(sorted(items.items()))

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @property
    def terms(self):
        return self._terms

    def coeff(self, i: int, j: int) -> int:
        return dict(self._terms).get((i, j), 0)

    def __add__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        d = dict(self._terms)
        for k, c in other._terms:
            d[k] = d.get(k, 0) + c
        return BivarPoly(d)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -c for k, c in self._terms})

    def __sub__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        return self + (-other)

    def __mul__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            return BivarPoly({k: c * other for k, c in self._terms})
        d: Dict[Tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms:
            for (i2, j2), c2 in other._terms:
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, 0) + c1 * c2
        return BivarPoly(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivarPoly":
        result = BivarPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def specialize_x(self, value: int) -> LaurentPoly:
        d: Dict[int, Coeff] = {}
        for (i, j), c in self._terms:
            d[j] = d.get(j, 0) + c * value**i
        return LaurentPoly(d)

    def __eq__(self, other) -> bool:
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self == BivarPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "BivarPoly(0)"
        body = " + ".join(f"{c}*x^{i}*y^{j}" for (i, j), c in self._terms)
        return f"BivarPoly({body})"


class TruncSeries:
    """Power series in ``t`` with Laurent-polynomial coefficients, known up to
    ``t**order`` inclusive."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise DomainError("truncation order must be nonnegative")
        cs = [LaurentPoly.coerce(c) for c in coeffs][: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self._coeffs: Tuple[LaurentPoly, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([ONE], order)

    @classmethod
    def linear(cls, c0, c1, order: int) -> "TruncSeries":
        """The series ``c0 + c1*t``."""
        return cls([c0, c1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple[LaurentPoly, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> LaurentPoly:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient t^{k} is beyond order {self.order}")
        return self._coeffs[k]

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        o = min(self.order, other.order)
        return TruncSeries([self._coeffs[i] + other._coeffs[i] for i in range(o + 1)], o)

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self._coeffs], self.order)
        o = min(self.order, other.order)
        out = []
        for k in range(o + 1):
            acc = ZERO
            for i in range(k + 1):
                a = self._coeffs[i]
                if a:
                    b = other._coeffs[k - i]
                    if b:
                        acc = acc + a * b
            out.append(acc)
        return TruncSeries(out, o)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncSeries":
        result = TruncSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def sum_coeffs(self) -> LaurentPoly:
        """Value at ``t = 1``; meaningful only if the series is a polynomial
        of degree at most ``order``."""
        acc = ZERO
        for c in self._coeffs:
            acc = acc + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries([{', '.join(str(c) for c in self._coeffs)}], order={self.order})"


# number theory


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization by trial division, ``{prime: exponent}``."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: Dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def moebius(k: int) -> int:
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"moebius is defined for positive integers, got {k!r}")
    f = factorize(k)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> List[int]:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"divisors are defined for positive integers, got {n!r}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def ramanujan_sum(q: int, d: int) -> int:
    """Sum of ``zeta**(-l*d)`` over units ``l`` mod ``q``, for a primitive
    ``q``-th root of unity ``zeta``.

    Uses ``c_q(d) = sum_{e | gcd(q, d)} mu(q/e) * e``.
    """
    if not isinstance(q, int) or q < 1:
        raise DomainError(f"ramanujan_sum needs q >= 1, got {q!r}")
    h = gcd(q, d)
    return sum(moebius(q // e) * e for e in divisors(h))


@lru_cache(maxsize=None)
def cyclotomic_coeffs(q: int) -> Tuple[int, ...]:
    """Coefficients of the ``q``-th cyclotomic polynomial, constant first."""
    if q < 1:
        raise DomainError(f"no cyclotomic polynomial of index {q}")
    num = [-1] + [0] * (q - 1) + [1]  # x^q - 1
    for e in divisors(q)[:-1]:
        num = _divide_monic(num, cyclotomic_coeffs(e))
    return tuple(num)


def _divide_monic(num: List[int], den: Sequence[int]) -> List[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    if any(num[:dd]):
        raise InvariantViolation("cyclotomic division left a remainder")
    return quot


class GroupAlgElem:
    """Element of the group algebra of the cyclic group of order ``q`` with
    Laurent-polynomial coefficients.

    ``comps[i]`` is the coefficient of ``zeta**i`` and ``zeta**q == 1``.
    Values at a primitive ``q``-th root of unity are obtained with
    :meth:`at_primitive_root`, which reduces modulo the cyclotomic
    polynomial; only after that reduction is :meth:`scalar` meaningful.
    """

    __slots__ = ("q", "comps")

    def __init__(self, q: int, comps: Iterable):
        if q < 1:
            raise DomainError("group order must be positive")
        cs = [LaurentPoly.coerce(c) for c in comps]
        if len(cs) > q:
            raise ValueError(f"{len(cs)} components for a group of order {q}")
        cs.extend([ZERO] * (q - len(cs)))
        self.q = q
        self.comps: Tuple[LaurentPoly, ...] = tuple(cs)

    @classmethod
    def constant(cls, q: int, c) -> "GroupAlgElem":
        return cls(q, [c])

    @classmethod
    def zeta(cls, q: int, power: int = 1, coeff=1) -> "GroupAlgElem":
        cs = [ZERO] * q
        cs[power % q] = LaurentPoly.coerce(coeff)
        return cls(q, cs)

    def _check(self, other: "GroupAlgElem") -> None:
        if other.q != self.q:
            raise ValueError(f"group orders differ: {self.q} vs {other.q}")

    def __add__(self, other) -> "GroupAlgElem":
        if not isinstance(other, GroupAlgElem):
            other = GroupAlgElem.constant(self.q, other)
        self._check(other)
        return GroupAlgElem(self.q, [a + b for a, b in zip(self.comps, other.comps)])

    __radd__ = __add__

    def __neg__(self) -> "GroupAlgElem":
        return GroupAlgElem(self.q, [-a for a in self.comps])

    def __sub__(self, other) -> "GroupAlgElem":
        if not isinstance(other, GroupAlgElem):
            other = GroupAlgElem.constant(self.q, other)
        return self + (-other)

    def __rsub__(self, other) -> "GroupAlgElem":
        return GroupAlgElem.constant(self.q, other) - self

    def __mul__(self, other) -> "GroupAlgElem":
        if not isinstance(other, GroupAlgElem):
            return GroupAlgElem(self.q, [a * other for a in self.comps])
        self._check(other)
        q = self.q
        out = [ZERO] * q
        for i, a in enumerate(self.comps):
            if not a:
                continue
            for j, b in enumerate(other.comps):
                if b:
                    k = (i + j) % q
                    out[k] = out[k] + a * b
        return GroupAlgElem(q, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GroupAlgElem":
        result = GroupAlgElem.constant(self.q, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def at_primitive_root(self) -> "GroupAlgElem":
        """Reduce modulo the ``q``-th cyclotomic polynomial.

        The result represents the same value at a primitive root of unity,
        written in the basis ``1, zeta, ..., zeta**(phi(q) - 1)``; higher
        components are zero.
        """
        phi = cyclotomic_coeffs(self.q)
        deg = len(phi) - 1
        cs = list(self.comps)
        for i in range(self.q - 1, deg - 1, -1):
            c = cs[i]
            if not c:
                continue
            s = i - deg
            for j, b in enumerate(phi):
                if b:
                    cs[s + j] = cs[s + j] - c * b
        return GroupAlgElem(self.q, cs)

    def is_scalar(self) -> bool:
        return all(c.is_zero() for c in self.comps[1:])

    def scalar(self) -> LaurentPoly:
        """The ``zeta**0`` component, after checking nothing else survives."""
        if not self.is_scalar():
            bad = [i for i, c in enumerate(self.comps) if i and c]
            raise InvariantViolation(
                f"group algebra element is not scalar (zeta powers {bad} survive)"
            )
        return self.comps[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgElem):
            return NotImplemented
        return self.q == other.q and self.comps == other.comps

    def __hash__(self) -> int:
        return hash((self.q, self.comps))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.comps)
        return f"GroupAlgElem(q={self.q}, [{body}])"

    def __iter__(self) -> Iterator[LaurentPoly]:
        return iter(self.comps)
