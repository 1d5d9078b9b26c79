from concurrent.futures import ThreadPoolExecutor

import pytest

from lucasnomial import (
    BivariatePolynomial,
    DomainError,
    LINEAR,
    CIRCULAR,
    LucasCache,
    check_lemma1,
    enumerate_tilings,
    lucas_F,
    lucas_L,
    lucas_factorial,
)
from lucasnomial.poly import ONE, S, T, TWO, ZERO


def P(text: str) -> BivariatePolynomial:
    return BivariatePolynomial.parse(text)


def test_first_lucas_polynomials():
    assert lucas_F(0) == ZERO
    assert lucas_F(1) == ONE
    assert lucas_F(2) == S
    assert lucas_F(3) == P("s^2 + t")
    assert lucas_F(4) == P("s^3 + 2*s*t")
    assert lucas_F(5) == P("s^4 + 3*s^2*t + t^2")


def test_first_companion_polynomials():
    assert lucas_L(0) == TWO
    assert lucas_L(1) == S
    assert lucas_L(2) == P("s^2 + 2*t")
    assert lucas_L(3) == P("s^3 + 3*s*t")


def test_factorials():
    assert lucas_factorial(0) == ONE
    assert lucas_factorial(2) == S
    assert lucas_factorial(4) == lucas_F(2) * lucas_F(3) * lucas_F(4)
    assert lucas_factorial(4) == P("s^6 + 3*s^4*t + 2*s^2*t^2")


def test_negative_index_rejected():
    with pytest.raises(DomainError):
        lucas_F(-1)


@pytest.mark.parametrize("n", range(2, 13))
def test_recursion_invariants(n):
    assert lucas_F(n) == S * lucas_F(n - 1) + T * lucas_F(n - 2)
    assert lucas_L(n) == S * lucas_L(n - 1) + T * lucas_L(n - 2)
    assert lucas_factorial(n) == lucas_factorial(n - 1) * lucas_F(n)


@pytest.mark.parametrize("n", range(1, 14))
def test_monic_and_homogeneous(n):
    terms = lucas_F(n).terms()
    a, b, c = terms[0]
    assert (a, b, c) == (n - 1, 0, 1)
    assert all(a + 2 * b == n - 1 for a, b, _ in terms)


@pytest.mark.parametrize("n", range(1, 13))
def test_coefficients_count_tilings_by_dominoes(n):
    # coefficient of s^(n-1-2d) t^d counts length-(n-1) tilings with d dominoes
    tilings = enumerate_tilings(LINEAR, n - 1)
    for a, b, c in lucas_F(n).terms():
        count = sum(1 for t in tilings if t.tiles.count("D") == b)
        assert c == count


@pytest.mark.parametrize("n", range(13))
def test_linear_weights_sum_to_next_polynomial(n):
    total = sum(
        (t.weight() for t in enumerate_tilings(LINEAR, n)), ZERO
    )
    assert total == lucas_F(n + 1)


@pytest.mark.parametrize("n", range(13))
def test_circular_weights_sum_to_companion(n):
    total = sum(
        (t.weight() for t in enumerate_tilings(CIRCULAR, n)), ZERO
    )
    assert total == (TWO if n == 0 else lucas_L(n))


def test_lemma1_base_case():
    report = check_lemma1(1, 0)
    assert report.passed
    assert report.cases_checked == 2


def test_lemma1_examples():
    assert lucas_F(4) == lucas_F(3) * lucas_F(2) + T * lucas_F(1) * lucas_F(2)
    assert lucas_F(5) * 2 == lucas_L(2) * lucas_F(3) + lucas_L(3) * lucas_F(2)
    assert check_lemma1(2, 2).passed
    assert check_lemma1(3, 2).passed


def test_lemma1_full_range():
    for m in range(1, 13):
        for n in range(13):
            assert check_lemma1(m, n).passed


def test_lemma1_rejects_m_zero():
    with pytest.raises(DomainError):
        check_lemma1(0, 3)


def test_fresh_cache_matches_module_cache():
    cache = LucasCache()
    assert cache.fib(10) == lucas_F(10)
    assert cache.luc(10) == lucas_L(10)
    assert cache.factorial(10) == lucas_factorial(10)


def test_concurrent_cache_extension_is_consistent():
    cache = LucasCache()
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(cache.fib, [40] * 8))
    assert all(r == lucas_F(40) for r in results)
    # monotone: lower indices were filled on the way up
    assert cache.fib(39) == lucas_F(39)
