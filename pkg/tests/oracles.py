"""Independent brute-force oracles used by the test suite.

Nothing here calls into the code paths it is used to check: the degree
box filter re-derives the inequalities from their displayed formulas in
cross-multiplied integer form and scans every lattice point; the gap sum
enumerates tuples without any congruence trick; the Ramanujan sum adds
roots of unity in the group algebra.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, lcm

import numba
import numpy as np

from higgsy.exactalg import GroupAlgElem, LaurentPoly


def moebius_by_recursion(n: int, _cache={1: 1}) -> int:
    """mu from sum_{e | n} mu(e) = [n == 1]."""
    if n not in _cache:
        _cache[n] = -sum(moebius_by_recursion(e) for e in range(1, n) if n % e == 0)
    return _cache[n]


def divisors_by_scan(n: int):
    return [e for e in range(1, n + 1) if n % e == 0]


def ramanujan_by_group_algebra(q: int, d: int) -> int:
    acc = GroupAlgElem.constant(q, 0)
    for l in range(1, q + 1):
        if gcd(l, q) == 1:
            acc = acc + GroupAlgElem.zeta(q, -l * d)
    value = acc.at_primitive_root().scalar()
    assert value.is_zero() or (value.terms[0][0] == 0 and len(value.terms) == 1)
    return value.coeff(0)


# degree polytope


def condition_rows(ranks, alpha, total):
    """Integer rows ``A d <= b`` of conditions C1-C4 at fixed total degree."""
    n = list(ranks)
    a = [Fraction(x) for x in alpha]
    L = len(n)
    N = sum(n)
    S = total + sum(ai * ni for ai, ni in zip(a, n))  # N * mu
    rows = []

    def add(coeffs, rhs):
        den = lcm(*(Fraction(c).denominator for c in coeffs), Fraction(rhs).denominator)
        rows.append(([int(Fraction(c) * den) for c in coeffs], int(Fraction(rhs) * den)))

    for j in range(L - 1):  # C1: prefix slope <= mu
        Nj = sum(n[: j + 1])
        coeffs = [N if i <= j else 0 for i in range(L)]
        add(coeffs, Nj * S - N * sum(a[i] * n[i] for i in range(j + 1)))
    for j in range(1, L):  # C2
        if n[j] == n[j - 1]:
            coeffs = [0] * L
            coeffs[j], coeffs[j - 1] = 1, -1
            add(coeffs, 0)
    for k in range(L):
        for j in range(k + 1, L):
            if n[j] < min(n[k:j]):  # C3
                out = [i for i in range(L) if i < k or i > j]
                D = sum(n[i] for i in out) + (j - k + 1) * n[j]
                coeffs = [0] * L
                for i in out:
                    coeffs[i] = N
                coeffs[j] += N * (j - k + 1)
                shift = sum(a[i] * n[i] for i in out) + sum(a[k : j + 1]) * n[j]
                add(coeffs, D * S - N * shift)
            if n[k] < min(n[k + 1 : j + 1]):  # C4, kernel of the E_k-quotient
                K = sum(n[i] - n[k] for i in range(k + 1, j + 1))
                coeffs = [0] * L
                for i in range(k + 1, j + 1):
                    coeffs[i] += N
                    coeffs[k] -= N
                shift = sum(a[i] * (n[i] - n[k]) for i in range(k + 1, j + 1))
                add(coeffs, K * S - N * shift)
    A = np.array([r[0] for r in rows], dtype=np.int64).reshape(len(rows), L)
    b = np.array([r[1] for r in rows], dtype=np.int64)
    return A, b


@numba.njit(cache=True)
def _scan(A, b, free, lo, hi, total, out):
    # A, b are already reduced to the free coordinates d_0 .. d_{free-1};
    # the last degree is total - sum(free coordinates) and must lie in the box.
    m = A.shape[0]
    outer = free - 1
    d = np.full(free, lo, np.int64)
    part = np.zeros(m, np.int64)
    count = 0
    while True:
        s = 0
        for i in range(outer):
            s += d[i]
        for r in range(m):
            acc = 0
            for i in range(outer):
                acc += A[r, i] * d[i]
            part[r] = acc
        for x in range(lo, hi + 1):
            last = total - s - x
            if last < lo or last > hi:
                continue
            ok = True
            for r in range(m):
                if part[r] + A[r, outer] * x > b[r]:
                    ok = False
                    break
            if ok:
                if count >= out.shape[0]:
                    return -1
                for i in range(outer):
                    out[count, i] = d[i]
                out[count, outer] = x
                out[count, free] = last
                count += 1
        pos = outer - 1
        while pos >= 0:
            d[pos] += 1
            if d[pos] <= hi:
                break
            d[pos] = lo
            pos -= 1
        if pos < 0:
            break
    return count


def box_filter(ranks, alpha, total, box=60):
    """Every lattice point of ``[-box, box]^(r+1)`` on ``sum d = total`` that
    satisfies all conditions, sorted."""
    A, b = condition_rows(ranks, alpha, total)
    L = len(ranks)
    if L == 1:
        return [(total,)] if abs(total) <= box and np.all(A @ [total] <= b) else []
    # substitute d_last = total - sum(others)
    Ared = A[:, :-1] - A[:, -1:]
    bred = b - A[:, -1] * total
    out = np.zeros((200_000, L), dtype=np.int64)
    count = _scan(np.ascontiguousarray(Ared), bred, L - 1, -box, box, total, out)
    if count < 0:
        raise RuntimeError("oracle buffer overflow")
    return sorted(tuple(int(x) for x in row) for row in out[:count])


def rows_accept(ranks, alpha, degrees) -> bool:
    A, b = condition_rows(ranks, alpha, sum(degrees))
    d = np.array(degrees, dtype=np.int64)
    return bool(np.all(A @ d <= b))


# gap sums


def direct_gap_sum_bruteforce(hy_sym, g, m, q, d, slack=2):
    """Constant-rank chain sum over all gap tuples up to ``cap + slack``,
    filtered by the congruence, with no truncation argument used."""
    cap = 2 * m * (g - 1) + slack
    total = LaurentPoly()
    for gaps in itertools.product(range(cap + 1), repeat=q - 1):
        if sum(i * k for i, k in enumerate(gaps, start=1)) % q != d % q:
            continue
        term = LaurentPoly.constant(1)
        for k in gaps:
            term = term * hy_sym(g, m, k)
        total = total + term
    return total


# desk-scale sample set shared by the polytope and duality checks

ALPHA_GRID = [Fraction(k, 2) for k in range(-12, 13)]  # [-6, 6] in steps of 1/2


def rank_vectors(max_total=5):
    out = []
    for L in range(1, max_total + 1):
        for ranks in itertools.product(range(1, max_total + 1), repeat=L):
            if sum(ranks) <= max_total:
                out.append(ranks)
    return out


def sample_alphas(ranks, count=20, seed=2024):
    import random

    rng = random.Random(f"{seed}:{ranks}")
    return [tuple(sorted(rng.sample(ALPHA_GRID, len(ranks)))) for _ in range(count)]


def dual_witness(cid, witness, r):
    """Where a failed condition of a datum shows up on its dual."""
    if cid == "C1":
        return "C1", (r - 1 - witness[0],)
    if cid == "C2":
        return "C2", (r + 1 - witness[0],)
    k, j = witness
    return {"C3": "C4", "C4": "C3"}[cid], (r - j, r - k)
