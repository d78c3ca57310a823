"""Numerical stability combinatorics for holomorphic chains.

A chain ``E_r -> ... -> E_0`` is recorded by its rank vector, degree vector
and a stability parameter ``alpha``; all three are indexed ``0..r``. The
functions here never construct chains. They evaluate the necessary
conditions for the existence of ``alpha``-semistable chains, enumerate the
finitely many degree vectors passing them, and locate the parameter values
on a ray ``alpha + t*delta`` where some sub-datum has the same slope as the
whole.

Indexing conventions:

* ``alpha`` must be strictly increasing, ``alpha_0 < ... < alpha_r``.
* The maps go ``E_i -> E_{i-1}``, so on steps of equal rank degrees
  decrease: ``d_i <= d_{i-1}``. Degree gaps are ``d_{i-1} - d_i >= 0``.
* Condition C4 is computed as C3 on the dual datum
  ``(n_{r-i}, -d_{r-i}, -alpha_{r-i})``. It therefore applies to pairs
  ``k < j`` with ``n_k < min(n_{k+1}, ..., n_j)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd, lcm
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from .errors import DomainError, InvariantViolation

__all__ = [
    "ChainDatum",
    "ConditionFailure",
    "ConditionReport",
    "Wall",
    "WallReport",
    "GoodAlphaFamily",
    "as_rational",
    "slope",
    "satisfies_star",
    "higgs_alpha",
    "dual_datum",
    "necessary_conditions",
    "enumerate_admissible_degrees",
    "compositions",
    "higgs_index_set",
    "goodalpha_family",
    "find_walls",
    "equal_slope_decompositions",
]

Vector = Tuple[int, ...]
SubDatum = Tuple[Vector, Vector]


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, bool):
        raise DomainError("booleans are not stability parameters")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse rational {x!r}") from exc
    raise DomainError(f"inexact or unsupported number {x!r}")


def _rationals(xs) -> Tuple[Fraction, ...]:
    return tuple(as_rational(x) for x in xs)


def _ints(xs, what: str) -> Vector:
    out = []
    for x in xs:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DomainError(f"{what} must be integers, got {x!r}")
        out.append(x)
    return tuple(out)


def _strictly_increasing(alpha: Sequence[Fraction]) -> bool:
    return all(a < b for a, b in zip(alpha, alpha[1:]))


def _require_increasing(alpha: Sequence[Fraction]) -> None:
    if not _strictly_increasing(alpha):
        raise DomainError(
            f"alpha must be strictly increasing, got {[str(a) for a in alpha]}"
        )


@dataclass(frozen=True)
class ChainDatum:
    """Ranks, degrees and stability parameter of a chain type."""

    ranks: Vector
    degrees: Vector
    alpha: Tuple[Fraction, ...]

    def __post_init__(self):
        ranks = _ints(self.ranks, "ranks")
        degrees = _ints(self.degrees, "degrees")
        alpha = _rationals(self.alpha)
        if not ranks:
            raise DomainError("a chain datum needs at least one entry")
        if not len(ranks) == len(degrees) == len(alpha):
            raise DomainError(
                f"length mismatch: {len(ranks)} ranks, {len(degrees)} degrees, "
                f"{len(alpha)} parameters"
            )
        if any(n < 1 for n in ranks):
            raise DomainError(f"ranks must be positive, got {ranks}")
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "alpha", alpha)

    @property
    def r(self) -> int:
        return len(self.ranks) - 1

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def slope(self) -> Fraction:
        return slope(self.ranks, self.degrees, self.alpha)

    def dual(self) -> "ChainDatum":
        return ChainDatum(*dual_datum(self.ranks, self.degrees, self.alpha))


@dataclass(frozen=True)
class ConditionFailure:
    """One violated inequality ``lhs <= rhs``."""

    condition: str  # "C1" .. "C4"
    witness: Tuple[int, ...]  # (j,) or (k, j)
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class ConditionReport:
    failures: Tuple[ConditionFailure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class Wall:
    t: Fraction
    witnesses: Tuple[SubDatum, ...]


@dataclass(frozen=True)
class WallReport:
    walls: Tuple[Wall, ...] = ()

    @property
    def values(self) -> List[Fraction]:
        return [w.t for w in self.walls]


class GoodAlphaFamily(NamedTuple):
    """Direction ``delta`` and threshold ``t0`` of a ray of parameters.

    ``case`` is ``"increase"`` or ``"decrease"`` for non-constant ranks and
    ``"constant-rank"`` otherwise.
    """

    delta: Vector
    t0: Fraction
    case: str

    def alpha_at(self, alpha, t) -> Tuple[Fraction, ...]:
        t = as_rational(t)
        return tuple(as_rational(a) + t * d for a, d in zip(alpha, self.delta))


def slope(ranks, degrees, alpha) -> Fraction:
    """``(sum d_i + alpha_i n_i) / sum n_i``; zero ranks are allowed as long as
    the total rank is positive."""
    ranks = _ints(ranks, "ranks")
    degrees = _ints(degrees, "degrees")
    alpha = _rationals(alpha)
    if not ranks or not len(ranks) == len(degrees) == len(alpha):
        raise DomainError("slope needs nonempty vectors of equal length")
    total = sum(ranks)
    if total <= 0:
        raise DomainError("slope needs positive total rank")
    return Fraction(sum(degrees) + sum(a * n for a, n in zip(alpha, ranks)), total)


def satisfies_star(alpha, g: int) -> bool:
    """Whether consecutive parameter gaps are all at least ``2g - 2``."""
    alpha = _rationals(alpha)
    if not alpha:
        raise DomainError("alpha must be nonempty")
    return all(b - a >= 2 * g - 2 for a, b in zip(alpha, alpha[1:]))


def higgs_alpha(r: int, g: int) -> List[Fraction]:
    """The parameter ``alpha_i = i(2g - 2)`` cut out by Higgs-bundle stability."""
    if r < 0:
        raise DomainError("r must be nonnegative")
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")
    return [Fraction(i * (2 * g - 2)) for i in range(r + 1)]


def dual_datum(ranks, degrees, alpha):
    """``(n_i, d_i, alpha_i) -> (n_{r-i}, -d_{r-i}, -alpha_{r-i})``."""
    return (
        tuple(reversed(tuple(ranks))),
        tuple(-d for d in reversed(tuple(degrees))),
        tuple(-as_rational(a) for a in reversed(tuple(alpha))),
    )


# The individual conditions. Each is a pair of callables (lhs, rhs) taking
# (degrees, mu); for a fixed mu both sides are affine in the degrees, which
# is what the polytope bounds in enumerate_admissible_degrees rely on.

Side = Callable[[Sequence[int], Fraction], Fraction]


@dataclass(frozen=True)
class _Condition:
    cid: str
    witness: Tuple[int, ...]
    lhs: Side
    rhs: Side = field(default=lambda d, mu: mu)


def _c1(n, alpha, j) -> _Condition:
    rank = sum(n[: j + 1])
    shift = sum(alpha[i] * n[i] for i in range(j + 1))
    return _Condition(
        "C1", (j,), lambda d, mu: Fraction(sum(d[: j + 1]) + shift) / rank
    )


def _c2(n, j) -> _Condition:
    return _Condition(
        "C2",
        (j,),
        lambda d, mu: Fraction(d[j], n[j]),
        lambda d, mu: Fraction(d[j - 1], n[j - 1]),
    )


def _c3_lhs(n, alpha, k, j) -> Side:
    outside = [i for i in range(len(n)) if not k <= i <= j]
    width = j - k + 1
    rank = sum(n[i] for i in outside) + width * n[j]
    shift = sum(alpha[i] * n[i] for i in outside) + sum(alpha[k : j + 1]) * n[j]
    return lambda d, mu: Fraction(sum(d[i] for i in outside) + width * d[j] + shift) / rank


def _c4_lhs(n, alpha, k, j) -> Side:
    # slope of the kernel of E -> (E with E_{k+1..j} replaced by E_k)
    span = range(k + 1, j + 1)
    rank = sum(n[i] - n[k] for i in span)
    shift = sum(alpha[i] * (n[i] - n[k]) for i in span)
    return lambda d, mu: Fraction(sum(d[i] - d[k] for i in span) + shift) / rank


def _c3_pairs(n) -> List[Tuple[int, int]]:
    r = len(n) - 1
    return [(k, j) for j in range(1, r + 1) for k in range(j) if n[j] < min(n[k:j])]


def _c4_pairs(n) -> List[Tuple[int, int]]:
    # mirror images of the C3 pairs of the dual rank vector
    r = len(n) - 1
    return sorted((r - j, r - k) for k, j in _c3_pairs(tuple(reversed(n))))


def _conditions(n: Vector, alpha: Tuple[Fraction, ...]) -> List[_Condition]:
    r = len(n) - 1
    conds = [_c1(n, alpha, j) for j in range(r)]
    conds += [_c2(n, j) for j in range(1, r + 1) if n[j] == n[j - 1]]
    conds += [_Condition("C3", (k, j), _c3_lhs(n, alpha, k, j)) for k, j in _c3_pairs(n)]
    conds += [_Condition("C4", (k, j), _c4_lhs(n, alpha, k, j)) for k, j in _c4_pairs(n)]
    return conds


def necessary_conditions(datum: ChainDatum) -> ConditionReport:
    """Evaluate conditions C1-C4 for ``datum`` and collect every failure."""
    n, d, alpha = datum.ranks, datum.degrees, datum.alpha
    _require_increasing(alpha)
    r = len(n) - 1
    mu = datum.slope()
    dn, dd, da = dual_datum(n, d, alpha)
    dual_mu = -mu
    failures = []
    for cond in _conditions(n, alpha):
        lhs, rhs = cond.lhs(d, mu), cond.rhs(d, mu)
        ok = lhs <= rhs
        if cond.cid == "C4":
            k, j = cond.witness
            dual_ok = _c3_lhs(dn, da, r - j, r - k)(dd, dual_mu) <= dual_mu
            if dual_ok != ok:
                raise InvariantViolation(
                    f"C4 at {(k, j)} disagrees with C3 on the dual datum"
                )
            ok = dual_ok
        if not ok:
            failures.append(ConditionFailure(cond.cid, cond.witness, lhs, rhs))
    return ConditionReport(tuple(failures))


def _passes(n: Vector, d: Vector, alpha: Tuple[Fraction, ...]) -> bool:
    return necessary_conditions(ChainDatum(n, d, alpha)).passed


# Polytope of admissible degree vectors.

Row = Tuple[Tuple[int, ...], int]  # sum(a_i x_i) <= b


def _normalize_row(a: Sequence[Fraction], b: Fraction) -> Optional[Row]:
    """Primitive integer form of ``a.x <= b``; the bound is floored, which
    loses no integer solutions. ``None`` for a constant row."""
    a = [Fraction(x) for x in a]
    if not any(a):
        return None
    den = lcm(*(x.denominator for x in a))
    ints = [int(x * den) for x in a]
    g = gcd(*ints)
    return tuple(x // g for x in ints), floor(Fraction(b) * den / g)


def _linear_rows(n: Vector, alpha, total: int) -> List[Row]:
    """Rewrite every condition as a row over ``d_0 .. d_{r-1}`` after
    eliminating ``d_r = total - sum(d_0 .. d_{r-1})``."""
    size = len(n)
    rank = sum(n)
    mu = Fraction(total + sum(a * m for a, m in zip(alpha, n)), rank)
    zero = [0] * size
    rows: List[Row] = []
    for cond in _conditions(n, alpha):
        def f(d):
            return cond.lhs(d, mu) - cond.rhs(d, mu)

        c0 = f(zero)
        coeffs = []
        for i in range(size):
            e = list(zero)
            e[i] = 1
            coeffs.append(f(e) - c0)
        last = coeffs[-1]
        a = [coeffs[i] - last for i in range(size - 1)]
        b = -(c0 + last * total)
        rows.append((tuple(Fraction(x) for x in a), Fraction(b)))
    return rows  # still rational; _normalize_row makes them integral


def _eliminate(rows: List[Row], v: int) -> Tuple[List[Row], bool]:
    """Fourier-Motzkin elimination of variable ``v``.

    Returns the projected rows and ``False`` if an infeasible constant row
    was produced.
    """
    pos, neg, out = [], [], {}
    feasible = True
    for a, b in rows:
        if a[v] > 0:
            pos.append((a, b))
        elif a[v] < 0:
            neg.append((a, b))
        else:
            out[(a, b)] = None
    for ap, bp in pos:
        for an, bn in neg:
            lp, ln = ap[v], -an[v]
            a = tuple(ln * x + lp * y for x, y in zip(ap, an))
            b = ln * bp + lp * bn
            row = _normalize_row(a, b)
            if row is None:
                if b < 0:
                    feasible = False
                continue
            out[row] = None
    return list(out), feasible


def enumerate_admissible_degrees(ranks, alpha, total: int) -> List[Vector]:
    """All degree vectors summing to ``total`` that pass C1-C4 at ``alpha``.

    Per-coordinate bounds come from Fourier-Motzkin projections of the
    inequality system and lattice points are enumerated depth first. The
    last coordinate is bounded by the unprojected system, so every point
    reached is admissible.
    """
    n = _ints(ranks, "ranks")
    alpha = _rationals(alpha)
    if not n or len(n) != len(alpha):
        raise DomainError("ranks and alpha must be nonempty and of equal length")
    if any(m < 1 for m in n):
        raise DomainError(f"ranks must be positive, got {n}")
    if isinstance(total, bool) or not isinstance(total, int):
        raise DomainError(f"total degree must be an integer, got {total!r}")
    _require_increasing(alpha)
    r = len(n) - 1
    if r == 0:
        return [(total,)] if _passes(n, (total,), alpha) else []

    rows = []
    for a, b in _linear_rows(n, alpha, total):
        row = _normalize_row(a, b)
        if row is None:
            if b < 0:
                return []
            continue
        rows.append(row)
    # systems[k] constrains d_0 .. d_k only
    systems: List[List[Row]] = [[] for _ in range(r)]
    systems[r - 1] = rows
    for k in range(r - 2, -1, -1):
        systems[k], feasible = _eliminate(systems[k + 1], k + 1)
        if not feasible:
            return []

    found: List[Vector] = []

    def bounds(k: int, prefix: List[int]):
        lo: Optional[int] = None
        hi: Optional[int] = None
        for a, b in systems[k]:
            rest = b - sum(a[i] * prefix[i] for i in range(k))
            if a[k] > 0:
                v = rest // a[k]
                hi = v if hi is None else min(hi, v)
            elif a[k] < 0:
                v = -(rest // -a[k])
                lo = v if lo is None else max(lo, v)
            elif rest < 0:
                return None
        if lo is None or hi is None:
            raise InvariantViolation(
                f"degree polytope for ranks {n} at alpha {alpha} is unbounded in d_{k}"
            )
        return lo, hi

    def walk(k: int, prefix: List[int]) -> None:
        b = bounds(k, prefix)
        if b is None:
            return
        for x in range(b[0], b[1] + 1):
            prefix.append(x)
            if k == r - 1:
                # systems[r-1] holds every row, so d satisfies all conditions
                found.append(tuple(prefix) + (total - sum(prefix),))
            else:
                walk(k + 1, prefix)
            prefix.pop()

    walk(0, [])
    return sorted(found)


def compositions(n: int) -> List[Vector]:
    """Compositions of ``n`` sorted by (length, parts)."""
    if n < 1:
        raise DomainError("n must be positive")
    out = []
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, cur = [], 1
        for c in cuts:
            if c:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        out.append(tuple(parts))
    return sorted(out, key=lambda p: (len(p), p))


def higgs_index_set(n: int, d: int, g: int) -> List[SubDatum]:
    """Chain types ``(ranks, degrees)`` indexing fixed-point strata of rank
    ``n`` degree ``d`` Higgs bundles, restricted to admissible degrees."""
    if n < 1:
        raise DomainError("n must be positive")
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")
    out = []
    for ranks in compositions(n):
        r = len(ranks) - 1
        alpha = higgs_alpha(r, g)
        total = d - sum(i * (2 * g - 2) * m for i, m in enumerate(ranks))
        for degs in enumerate_admissible_degrees(ranks, alpha, total):
            out.append((ranks, degs))
    return sorted(out, key=lambda p: (len(p[0]), p[0], p[1]))


def _affine_root(f0: Fraction, f1: Fraction) -> Fraction:
    """Threshold ``t0 >= 0`` beyond which ``f(t) = f0 + (f1 - f0) t`` is
    positive."""
    b = f1 - f0
    if b <= 0:
        raise InvariantViolation("emptiness direction does not separate")
    return max(Fraction(0), -f0 / b)


def goodalpha_family(ranks, degrees, alpha, g: int) -> GoodAlphaFamily:
    """Ray ``alpha + t*delta`` along which the semistable locus becomes
    empty (non-constant ranks) or reaches the large-parameter regime
    (constant ranks), with the threshold ``t0`` past which this holds."""
    datum = ChainDatum(ranks, degrees, alpha)
    if not satisfies_star(datum.alpha, g):
        raise DomainError(f"alpha does not satisfy the 2g-2 gap condition for g={g}")
    n, deg, alpha = datum.ranks, datum.degrees, datum.alpha
    r = datum.r
    changes = [i for i in range(r) if n[i] != n[r]]
    if not changes:
        delta = tuple(range(r + 1))
        t0 = Fraction(0)
        for i in range(1, r + 1):
            gap = deg[i - 1] - deg[i]
            t0 = max(t0, gap - (alpha[i] - alpha[i - 1]))
        return GoodAlphaFamily(delta, t0, "constant-rank")
    k = changes[-1]
    if n[k + 1] < n[k]:
        delta = tuple(1 if i > k else 0 for i in range(r + 1))
        side, case = _c3_lhs, "increase"
    else:
        delta = tuple(0 if i > k else -1 for i in range(r + 1))
        side, case = _c4_lhs, "decrease"

    def excess(t: int) -> Fraction:
        at = tuple(a + t * dl for a, dl in zip(alpha, delta))
        mu = slope(n, deg, at)
        return side(n, at, k, k + 1)(deg, mu) - mu

    return GoodAlphaFamily(delta, _affine_root(excess(0), excess(1)), case)


def _support(m: Sequence[int]) -> List[int]:
    return [i for i, x in enumerate(m) if x]


def _admissible_on_support(m: Vector, alpha, total: int) -> List[Vector]:
    """Admissible degrees of a sub-rank vector with zeros, computed on its
    support and padded back with zero degrees."""
    supp = _support(m)
    sub = enumerate_admissible_degrees(
        [m[i] for i in supp], [alpha[i] for i in supp], total
    )
    out = []
    for e in sub:
        full = [0] * len(m)
        for i, x in zip(supp, e):
            full[i] = x
        out.append(tuple(full))
    return out


def _proper_subranks(n: Vector):
    for m in itertools.product(*(range(x + 1) for x in n)):
        if any(m) and m != n:
            yield m


def find_walls(ranks, degrees, alpha, delta, t_max) -> WallReport:
    """Parameters ``t`` in ``(0, t_max]`` at which some proper sub-datum has
    the same slope as ``(ranks, degrees)`` for ``alpha + t*delta``.

    Candidate sub-degrees are the admissible degree vectors of the sub-rank
    vector (on its support) at the wall parameter itself.
    """
    datum = ChainDatum(ranks, degrees, alpha)
    delta = _ints(delta, "delta")
    t_max = as_rational(t_max)
    if t_max <= 0:
        raise DomainError("t_max must be positive")
    if len(delta) != len(datum.ranks):
        raise DomainError("delta must have the same length as ranks")
    n, d, alpha = datum.ranks, datum.degrees, datum.alpha

    def at(t: Fraction) -> Tuple[Fraction, ...]:
        return tuple(a + t * x for a, x in zip(alpha, delta))

    _require_increasing(at(Fraction(0)))
    _require_increasing(at(t_max))

    N = sum(n)
    base = sum(d) + sum(a * x for a, x in zip(alpha, n))
    drift = sum(x * y for x, y in zip(delta, n))
    found: Dict[Fraction, List[SubDatum]] = {}
    for m in _proper_subranks(n):
        M = sum(m)
        # slope equality: E = c0 + c1*t, E the total sub-degree
        c0 = Fraction(M * base, N) - sum(a * x for a, x in zip(alpha, m))
        c1 = Fraction(M * drift, N) - sum(x * y for x, y in zip(delta, m))
        if c1 == 0:
            continue
        ends = sorted((c0, c0 + c1 * t_max))
        for E in range(floor(ends[0]), ceil(ends[1]) + 1):
            t = (E - c0) / c1
            if not 0 < t <= t_max:
                continue
            for e in _admissible_on_support(m, at(t), E):
                found.setdefault(t, []).append((m, e))
    walls = tuple(Wall(t, tuple(sorted(found[t]))) for t in sorted(found))
    return WallReport(walls)


def equal_slope_decompositions(ranks, degrees, alpha) -> List[Tuple[SubDatum, ...]]:
    """Ordered tuples of at least two proper sub-data that sum to the datum,
    all admissible at ``alpha`` and all of the datum's slope."""
    datum = ChainDatum(ranks, degrees, alpha)
    _require_increasing(datum.alpha)
    n, d, alpha = datum.ranks, datum.degrees, datum.alpha
    mu = datum.slope()
    memo: Dict[SubDatum, List[Tuple[SubDatum, ...]]] = {}

    def valid_piece(m: Vector, e: Vector) -> bool:
        if any(x == 0 and y != 0 for x, y in zip(m, e)):
            return False
        if slope(m, e, alpha) != mu:
            return False
        supp = _support(m)
        return _passes(
            tuple(m[i] for i in supp), tuple(e[i] for i in supp), tuple(alpha[i] for i in supp)
        )

    def tuples(m: Vector, e: Vector) -> List[Tuple[SubDatum, ...]]:
        key = (m, e)
        if key in memo:
            return memo[key]
        out: List[Tuple[SubDatum, ...]] = []
        if valid_piece(m, e):
            out.append(((m, e),))
        for p in _proper_subranks(m):
            E = mu * sum(p) - sum(a * x for a, x in zip(alpha, p))
            if E.denominator != 1:
                continue
            for pe in _admissible_on_support(p, alpha, int(E)):
                rest_m = tuple(x - y for x, y in zip(m, p))
                rest_e = tuple(x - y for x, y in zip(e, pe))
                if any(x == 0 and y != 0 for x, y in zip(rest_m, rest_e)):
                    continue
                for tail in tuples(rest_m, rest_e):
                    out.append(((p, pe),) + tail)
        memo[key] = out
        return out

    return sorted(t for t in tuples(n, d) if len(t) >= 2)
