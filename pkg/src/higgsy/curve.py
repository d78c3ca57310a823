"""Zeta-function specializations for a curve ``C`` of genus ``g``.

Under the y-genus homomorphism the Lefschetz class goes to ``y`` and

    H_y(Z(C, t)) = (1 - t)^(g-1) (1 - y t)^(g-1),

so the zeta function of ``C x P^(m-1)``, being ``prod_i Z(C, L^i t)``, becomes
a product of ``2m`` linear factors raised to ``g - 1``. Its degree in ``t``
is ``2m(g-1)``, which is why symmetric powers beyond that have zero y-genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import DomainError
from .exactalg import ONE, ZERO, BivarPoly, LaurentPoly, TruncSeries

__all__ = [
    "CurveContext",
    "hy_zeta_series",
    "hy_cxp_series",
    "hy_sym_cxp",
    "e_zeta_coeff",
    "hy_p_series",
]


@dataclass(frozen=True)
class CurveContext:
    """A curve, remembered only through its genus (``g >= 2``)."""

    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or isinstance(self.g, bool):
            raise DomainError(f"genus must be an integer, got {self.g!r}")
        if self.g < 2:
            raise DomainError(f"genus must be at least 2, got {self.g}")


CurveLike = Union[CurveContext, int]


def _ctx(ctx: CurveLike) -> CurveContext:
    return ctx if isinstance(ctx, CurveContext) else CurveContext(ctx)


def _one_minus(a: int, order: int) -> TruncSeries:
    return TruncSeries.linear(ONE, -LaurentPoly.monomial(a), order)


def hy_zeta_series(ctx: CurveLike, a: int, order: int) -> TruncSeries:
    """``H_y(Z(C, L^a t))`` up to ``t**order``."""
    g = _ctx(ctx).g
    if a < 0:
        raise DomainError("the twist a must be nonnegative")
    if order < 0:
        raise DomainError("order must be nonnegative")
    return (_one_minus(a, order) * _one_minus(a + 1, order)) ** (g - 1)


@lru_cache(maxsize=None)
def _cxp_series(g: int, m: int) -> TruncSeries:
    order = 2 * m * (g - 1)
    s = TruncSeries.one(order)
    for a in range(m):
        s = s * hy_zeta_series(g, a, order)
    return s


def hy_cxp_series(ctx: CurveLike, m: int) -> TruncSeries:
    """``H_y(Z(C x P^(m-1), t))`` in full; it is a polynomial of degree
    ``2m(g-1)`` in ``t``."""
    if m < 1:
        raise DomainError("m must be positive")
    return _cxp_series(_ctx(ctx).g, m)


def hy_sym_cxp(ctx: CurveLike, m: int, k: int) -> LaurentPoly:
    """y-genus of the ``k``-th symmetric power of ``C x P^(m-1)``."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    series = hy_cxp_series(ctx, m)
    if k > series.order:
        return ZERO
    return series[k]


def e_zeta_coeff(ctx: CurveLike, k: int) -> BivarPoly:
    """E-polynomial of ``Sym^k C``: the ``t^k`` coefficient of
    ``(1-xt)^g (1-yt)^g / ((1-t)(1-xyt))``."""
    g = _ctx(ctx).g
    if k < 0:
        raise DomainError("k must be nonnegative")
    x, y = BivarPoly.x(), BivarPoly.y()
    # numerator coefficients: (1 - x t)^g (1 - y t)^g
    num = [BivarPoly.constant(1)]
    for factor in [x] * g + [y] * g:
        nxt = [BivarPoly() for _ in range(len(num) + 1)]
        for i, c in enumerate(num):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c * factor
        num = nxt
    # 1/((1-t)(1-xyt)) has t^j coefficient sum_{a<=j} (xy)^a
    xy = x * y
    total = BivarPoly()
    for i, c in enumerate(num[: k + 1]):
        j = k - i
        geo = BivarPoly()
        for a in range(j + 1):
            geo = geo + xy**a
        total = total + c * geo
    return total


def hy_p_series(ctx: CurveLike) -> TruncSeries:
    """``H_y(P(t)) = (1-t)^g (1-yt)^g`` as an exact series of order ``2g``."""
    g = _ctx(ctx).g
    order = 2 * g
    return (_one_minus(0, order) * _one_minus(1, order)) ** g
