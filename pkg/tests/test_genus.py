import itertools
from math import gcd

import pytest

from higgsy.curve import hy_sym_cxp
from higgsy.errors import DomainError
from higgsy.exactalg import ONE, LaurentPoly, Y, moebius
from higgsy.genus import (
    GapTuple,
    PglInput,
    euler_pgl,
    gap_tuples,
    gaps_to_degrees,
    noncompact_ygenus,
    pchain_hy,
    pgl_hy,
    pm_gl_hy,
    prefactor,
)
from higgsy.stability import higgs_index_set
from oracles import direct_gap_sum_bruteforce

N2 = Y**6 - Y**5 - 2 * Y**4


def test_pchain_examples():
    assert pchain_hy(3, 1, 1, ()) == ONE
    assert pchain_hy(2, 1, 2, (1,)) == -(ONE + Y)
    assert pchain_hy(2, 2, 1, ()) == (ONE - Y) * (ONE - Y**2)
    with pytest.raises(DomainError):
        GapTuple(1, 3, (1,))


def test_pgl_examples():
    assert pgl_hy(PglInput(1, 0, 4)) == ONE
    assert pgl_hy(PglInput(2, 1, 2)) == N2
    assert pgl_hy(PglInput(2, 1, 2)) == Y**3 * (ONE + Y) * ((ONE - Y) ** 2 - 1)
    P3 = pgl_hy(PglInput(3, 1, 2), "direct")
    assert pgl_hy(PglInput(3, 1, 2), "rootsum") == P3 == pgl_hy(PglInput(3, 1, 2))


def test_closed_refuses_non_coprime():
    with pytest.raises(DomainError, match="coprime"):
        pgl_hy(PglInput(2, 2, 2), "closed")
    with pytest.raises(DomainError):
        pgl_hy(PglInput(2, 1, 2), "fancy")
    with pytest.raises(DomainError):
        PglInput(2, 1, 1)


def test_euler_examples():
    assert euler_pgl(1, 3) == 1
    assert euler_pgl(4, 2) == 0
    assert euler_pgl(2, 2) == -2


@pytest.mark.parametrize("g", [2, 3, 4])
def test_euler_identity(g):
    for n in range(1, 9):
        assert euler_pgl(n, g) == moebius(n) * n ** (2 * g - 3)
        assert pgl_hy(PglInput(n, 1, g))(1) == moebius(n) * n ** (2 * g - 3)


def test_pm_gl():
    assert pm_gl_hy(PglInput(1, 0, 2)) == Y**2
    assert pm_gl_hy(PglInput(2, 1, 2)) == Y**2 * N2
    assert pm_gl_hy(PglInput(3, 2, 3))(1) == moebius(3) * 3**3


def test_noncompact():
    assert noncompact_ygenus(Y**8, 4) == ONE
    assert noncompact_ygenus(ONE, 4) == Y**8
    # y^6 - y^5 - 2y^4 -> 1 + y - 2y^2 term by term
    assert noncompact_ygenus(N2, 3) == ONE + Y - 2 * Y**2


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("g", [2, 3])
def test_degree_independence(n, g):
    residues = [d for d in range(n) if gcd(n, d) == 1]
    values = {pgl_hy(PglInput(n, d, g), "direct") for d in residues}
    assert len(values) == 1


@pytest.mark.parametrize("n, d", [(4, 2), (4, 0), (6, 2), (6, 3), (6, 0)])
def test_non_coprime_direct_equals_rootsum(n, d):
    inp = PglInput(n, d, 2)
    assert pgl_hy(inp, "direct") == pgl_hy(inp, "rootsum")


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("g", [2, 3])
def test_top_term(n, g):
    P = pgl_hy(PglInput(n, 1, g))
    N = (n * n - 1) * (g - 1)
    assert P.degree() == 2 * N and P.leading_coeff() == 1


@pytest.mark.parametrize("g, m, q, d", [(2, 1, 2, 1), (2, 1, 3, 1), (2, 2, 2, 1), (3, 1, 3, 2), (2, 1, 4, 3)])
def test_truncated_gap_sum_matches_bruteforce(g, m, q, d):
    capped = LaurentPoly()
    for gt in gap_tuples(g, m, q, d):
        capped = capped + pchain_hy(g, m, q, gt)
    brute = direct_gap_sum_bruteforce(hy_sym_cxp, g, m, q, d) * prefactor(g, m)
    assert capped == brute


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_nonzero_contributions_are_admissible(n):
    g = 2
    for d in range(n):
        index = set(higgs_index_set(n, d, g))
        for m in (e for e in range(1, n + 1) if n % e == 0):
            for gt in gap_tuples(g, m, n // m, d):
                if not pchain_hy(g, m, n // m, gt).is_zero():
                    assert gaps_to_degrees(gt, d, g) in index, (n, d, gt)
