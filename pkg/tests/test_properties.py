"""Property-based invariants for the arithmetic layer."""

from hypothesis import given, settings
from hypothesis import strategies as st

from orbitcert.numtheory.cyclotomic import cyclotomic_value
from orbitcert.numtheory.factorization import factorize, is_prime


@given(st.integers(min_value=2, max_value=(1 << 64) - 1))
@settings(max_examples=200, deadline=None)
def test_factorize_round_trips_and_returns_primes(value):
    factored = factorize(value)
    recomposed = 1
    for prime, exponent in factored.factors:
        assert is_prime(prime)
        assert exponent >= 1
        recomposed *= prime**exponent
    assert recomposed == value


@given(
    st.integers(min_value=2, max_value=200),
    st.integers(min_value=1, max_value=40),
)
@settings(max_examples=200, deadline=None)
def test_cyclotomic_values_multiply_to_power_minus_one(a, m):
    product = 1
    for d in range(1, m + 1):
        if m % d == 0:
            product *= cyclotomic_value(d, a)
    assert product == a**m - 1


@given(
    st.integers(min_value=2, max_value=80),
    st.integers(min_value=2, max_value=14),
)
@settings(max_examples=200, deadline=None)
def test_zsigmondy_primes_are_new_divisors_with_full_order(a, m):
    from orbitcert.numtheory.cyclotomic import order_check
    from orbitcert.numtheory.zsigmondy import zsigmondy_primes

    report = zsigmondy_primes(a, m)
    for prime, _ in report.zsigmondy_primes:
        assert (a**m - 1) % prime == 0
        assert order_check(a, m, prime)
        for k in range(1, m):
            assert (a**k - 1) % prime != 0
