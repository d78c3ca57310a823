"""Compactly supported y-genus of the moduli space of semistable
PGL_n-Higgs bundles of degree ``d`` on a genus ``g`` curve.

Three independent routes are provided by :func:`pgl_hy`:

``direct``
    Sum over divisors ``m | n`` of the constant-rank chain contributions,
    enumerating the degree gaps ``k_1, ..., k_{n/m-1}`` subject to
    ``sum i*k_i = d (mod n/m)``.
``rootsum``
    The same congruence resolved by a root-of-unity filter, computed in the
    group algebra of the cyclic group of order ``n/m``.
``closed``
    The closed product formula (only valid for ``gcd(n, d) = 1``)::

        y^N ((1-y^n)/(1-y))^(g-1) sum_{m|n} mu(m)/m (m prod_{j<n/m} (1-y^{jm})^2)^(g-1)

    with ``N = (n^2 - 1)(g - 1)``.

All arithmetic is exact. Intermediate values may carry rational
coefficients; every route checks that they clear to integers at the end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator, Sequence, Tuple

from .curve import CurveContext, hy_sym_cxp
from .errors import DomainError, InvariantViolation
from .exactalg import ONE, ZERO, GroupAlgElem, LaurentPoly, divisors, moebius

__all__ = [
    "METHODS",
    "PglInput",
    "GapTuple",
    "prefactor",
    "pchain_hy",
    "gap_tuples",
    "gaps_to_degrees",
    "pgl_hy",
    "euler_pgl",
    "pm_gl_hy",
    "noncompact_ygenus",
]

METHODS = ("direct", "rootsum", "closed")


@dataclass(frozen=True)
class PglInput:
    """Rank ``n``, degree ``d`` and genus ``g`` of a PGL_n Higgs moduli problem."""

    n: int
    d: int
    g: int

    def __post_init__(self):
        for name in ("n", "d", "g"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise DomainError(f"{name} must be an integer, got {v!r}")
        if self.n < 1:
            raise DomainError(f"rank must be positive, got {self.n}")
        CurveContext(self.g)

    @property
    def N(self) -> int:
        """Half the dimension, ``(n^2 - 1)(g - 1)``."""
        return (self.n * self.n - 1) * (self.g - 1)

    @property
    def coprime(self) -> bool:
        return gcd(self.n, self.d) == 1


@dataclass(frozen=True)
class GapTuple:
    """Degree gaps of a constant-rank chain with ``q`` links of rank ``m``."""

    m: int
    q: int
    gaps: Tuple[int, ...]

    def __post_init__(self):
        gaps = tuple(self.gaps)
        if self.m < 1 or self.q < 1:
            raise DomainError("m and q must be positive")
        if len(gaps) != self.q - 1:
            raise DomainError(f"expected {self.q - 1} gaps, got {len(gaps)}")
        if any(k < 0 for k in gaps):
            raise DomainError(f"gaps must be nonnegative, got {gaps}")
        object.__setattr__(self, "gaps", gaps)

    def weighted_sum(self) -> int:
        return sum(i * k for i, k in enumerate(self.gaps, start=1))


@lru_cache(maxsize=None)
def prefactor(g: int, m: int) -> LaurentPoly:
    """``prod_{i=1}^{m-1} (1-y^i)^(g-1) (1-y^(i+1))^(g-1)``; 1 when ``m = 1``."""
    out = ONE
    for i in range(1, m):
        out = out * (ONE - LaurentPoly.monomial(i)) * (ONE - LaurentPoly.monomial(i + 1))
    return out ** (g - 1)


def pchain_hy(g: int, m: int, q: int, gaps: Sequence[int]) -> LaurentPoly:
    """y-genus of the Jacobian-quotiented moduli of constant-rank chains
    ``(m, ..., m)`` (``q`` entries) with the given degree gaps."""
    CurveContext(g)
    gt = gaps if isinstance(gaps, GapTuple) else GapTuple(m, q, tuple(gaps))
    out = prefactor(g, gt.m)
    for k in gt.gaps:
        out = out * hy_sym_cxp(g, gt.m, k)
        if not out:
            break
    return out


def gap_tuples(g: int, m: int, q: int, d: int) -> Iterator[GapTuple]:
    """Gap tuples with ``sum i*k_i = d (mod q)`` and every ``k_i <= 2m(g-1)``;
    larger gaps contribute nothing."""
    cap = 2 * m * (g - 1)
    for gaps in itertools.product(range(cap + 1), repeat=q - 1):
        gt = GapTuple(m, q, gaps)
        if (gt.weighted_sum() - d) % q == 0:
            yield gt


def gaps_to_degrees(gt: GapTuple, d: int, g: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Chain type ``(ranks, degrees)`` in the Higgs index set of degree ``d``
    realising the gaps ``d_{i-1} - d_i = k_i``."""
    m, q = gt.m, gt.q
    partial = list(itertools.accumulate(gt.gaps))
    higgs_shift = (g - 1) * m * q * (q - 1)
    num = d - higgs_shift + sum(partial)
    if num % q:
        raise DomainError(f"gaps {gt.gaps} do not satisfy the degree congruence")
    d0 = num // q
    degrees = (d0,) + tuple(d0 - s for s in partial)
    return (m,) * q, degrees


def _direct(inp: PglInput) -> LaurentPoly:
    total = ZERO
    for m in divisors(inp.n):
        q = inp.n // m
        inner = ZERO
        for gt in gap_tuples(inp.g, m, q, inp.d):
            term = ONE
            for k in gt.gaps:
                term = term * hy_sym_cxp(inp.g, m, k)
                if not term:
                    break
            inner = inner + term
        total = total + prefactor(inp.g, m) * inner
    return total.shift(inp.N)


def _rootsum_inner(g: int, m: int, q: int, d: int) -> LaurentPoly:
    """``(1/q) sum_l zeta^(-ld) prod_{j<m} prod_{0<i<q} (1-y^j zeta^(li))^(g-1)
    (1-y^(j+1) zeta^(li))^(g-1)`` at a primitive ``q``-th root of unity."""
    acc = GroupAlgElem.constant(q, ZERO)
    for l in range(1, q + 1):
        prod = GroupAlgElem.constant(q, ONE)
        for i in range(1, q):
            z = GroupAlgElem.zeta(q, l * i)
            for j in range(m):
                prod = prod * (1 - z * LaurentPoly.monomial(j)) * (
                    1 - z * LaurentPoly.monomial(j + 1)
                )
        prod = prod ** (g - 1)
        acc = acc + GroupAlgElem.zeta(q, -l * d) * prod
    value = acc.at_primitive_root().scalar()
    return value * Fraction(1, q)


def _rootsum(inp: PglInput) -> LaurentPoly:
    total = ZERO
    for m in divisors(inp.n):
        q = inp.n // m
        total = total + prefactor(inp.g, m) * _rootsum_inner(inp.g, m, q, inp.d)
    return total.shift(inp.N).to_integral()


def _closed(inp: PglInput) -> LaurentPoly:
    n, g = inp.n, inp.g
    geometric = (ONE - LaurentPoly.monomial(n)).divexact(ONE - LaurentPoly.monomial(1))
    acc = ZERO
    for m in divisors(n):
        inner = LaurentPoly.constant(m)
        for j in range(1, n // m):
            inner = inner * (ONE - LaurentPoly.monomial(j * m)) ** 2
        acc = acc + inner ** (g - 1) * Fraction(moebius(m), m)
    return (geometric ** (g - 1) * acc).shift(inp.N).to_integral()


def pgl_hy(inp: PglInput, method: str = "closed") -> LaurentPoly:
    """Compactly supported y-genus of ``M^{d,sst}(PGL_n)``.

    ``direct`` and ``rootsum`` accept every ``d``; ``closed`` requires
    ``gcd(n, d) = 1``.
    """
    if method == "closed":
        if not inp.coprime:
            raise DomainError("n and d must be coprime")
        out = _closed(inp)
    elif method == "direct":
        out = _direct(inp)
    elif method == "rootsum":
        out = _rootsum(inp)
    else:
        raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")
    if not out.is_integral():
        raise InvariantViolation(f"{method} produced non-integral coefficients")
    return out


def euler_pgl(n: int, g: int) -> int:
    """Euler characteristic: the closed form evaluated at ``y = 1``."""
    value = pgl_hy(PglInput(n, 1, g), "closed")(1)
    if not isinstance(value, int):
        raise InvariantViolation(f"Euler characteristic {value} is not an integer")
    return value


def pm_gl_hy(inp: PglInput) -> LaurentPoly:
    """y-genus of the GL-side moduli divided by ``P(1)``: ``y^g`` times the
    PGL result."""
    return pgl_hy(inp, "closed").shift(inp.g)


def noncompact_ygenus(P: LaurentPoly, N: int) -> LaurentPoly:
    """``(-y)^(2N) P(-1/y)``: the y-genus without supports of a pure space of
    dimension ``2N`` whose compactly supported y-genus is ``P``."""
    if N < 0:
        raise DomainError("N must be nonnegative")
    return P.map_terms(lambda e, c: (2 * N - e, c if e % 2 == 0 else -c))
