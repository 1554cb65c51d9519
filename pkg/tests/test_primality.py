"""Deterministic primality: cross-checked against gmpy2/sympy oracles and
certificate re-verification."""

import random

import gmpy2
import pytest
import sympy

from orbitcert.errors import MagnitudeExceeded
from orbitcert.numtheory import certify_prime, check_certificate, is_prime

BOUND_13 = 3_317_044_064_679_887_385_961_981


def test_small_values_against_oracle():
    for n in range(2, 2000):
        assert is_prime(n) == bool(gmpy2.is_prime(n)), n


def test_zero_one_not_prime():
    assert not is_prime(0)
    assert not is_prime(1)


def test_negative_rejected():
    with pytest.raises(ValueError):
        is_prime(-7)


def test_random_64bit_against_oracle():
    rng = random.Random(20240817)
    for _ in range(500):
        n = rng.getrandbits(63) | 1
        assert is_prime(n) == bool(gmpy2.is_prime(n)), n


def test_mersenne_and_fermat_values():
    # Oracle recomputation keeps the asserted values honest.
    for e in (13, 17, 19, 31, 61, 89):
        n = 2**e - 1
        assert is_prime(n) == bool(gmpy2.is_prime(n)), e
    for k in (1, 2, 3, 4, 5):
        n = 2**(2**k) + 1
        assert is_prime(n) == bool(gmpy2.is_prime(n)), k


def test_above_13_base_bound_uses_certificates():
    # Primes above the proven fixed-witness bound must still come back
    # deterministic; spot-check against the oracle on both outcomes.
    candidates = [2**89 - 1, 2**89 + 1, BOUND_13 + 2, sympy.nextprime(BOUND_13)]
    for n in candidates:
        assert is_prime(n) == bool(gmpy2.is_prime(n)), n


def test_certificate_verifies_independently():
    n = 2**89 - 1
    assert gmpy2.is_prime(n)  # oracle first
    cert = certify_prime(n)
    assert cert.n == n
    assert check_certificate(cert)
    # Sub-certificates (if any) must also verify.
    stack = list(cert.sub_certificates)
    while stack:
        sub = stack.pop()
        assert check_certificate(sub)
        stack.extend(sub.sub_certificates)


def test_certificate_rejects_composite():
    with pytest.raises(Exception):
        certify_prime((2**89 - 1) * 3)


def test_magnitude_cap():
    with pytest.raises(MagnitudeExceeded):
        is_prime(2**4000 + 1)
