"""Cyclotomic values Phi_d(a) and the induced decomposition of a^m - 1.

a^m - 1 factors as the product of Phi_d(a) over divisors d of m.  Working
piecewise keeps every factorization task small: primes of a^m - 1 with
multiplicative order exactly m all live in the single piece Phi_m(a), and
any prime of Phi_m(a) not dividing m has order exactly m.
"""

import math
from functools import lru_cache

import sympy


@lru_cache(maxsize=None)
def cyclotomic_value(d: int, a: int) -> int:
    """Phi_d(a) for d >= 1, a >= 2, via the Moebius product over divisors."""
    if d < 1 or a < 2:
        raise ValueError("cyclotomic_value requires d >= 1 and a >= 2")
    numerator = 1
    denominator = 1
    for e in sympy.divisors(d):
        term = a**e - 1
        mu = sympy.mobius(d // e)
        if mu == 1:
            numerator *= term
        elif mu == -1:
            denominator *= term
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise AssertionError(f"Phi_{d}({a}) did not divide exactly")
    return value


def power_minus_one_pieces(a: int, m: int) -> dict:
    """a^m - 1 as {d: Phi_d(a)} over divisors d of m (product recomposes)."""
    return {d: cyclotomic_value(d, a) for d in sympy.divisors(m)}


def intrinsic_prime(m: int) -> int:
    """The largest prime factor of m: the only prime that can divide
    Phi_m(a) without having multiplicative order m."""
    return max(sympy.primefactors(m)) if m > 1 else 0


def zsigmondy_part(a: int, m: int) -> int:
    """Phi_m(a) with the intrinsic prime stripped.

    Every prime factor of the result has multiplicative order exactly m
    modulo a, so the result > 1 iff a Zsigmondy prime exists for (a, m),
    and prime valuations in it equal their valuations in a^m - 1.
    """
    value = cyclotomic_value(m, a)
    if m == 1:
        return value
    p = intrinsic_prime(m)
    while value % p == 0:
        value //= p
    return value


def order_check(a: int, m: int, l: int) -> bool:
    """True iff a has multiplicative order exactly m modulo prime l,
    verified by direct powering against the divisors of m."""
    if math.gcd(a, l) != 1 or pow(a, m, l) != 1:
        return False
    return all(pow(a, m // s, l) != 1 for s in sympy.primefactors(m))
