"""Verified integer factorization and multiplicative orders.

The splitting engine combines trial division, Brent cycle finding, and
sympy's factorizer for mid-sized chunks, but no result is ever trusted as-is:
every returned factorization is recomposed (product must equal the input) and
every listed prime passes the deterministic primality chain.  A failed check
is a hard error, never a partial answer.
"""

import math
from dataclasses import dataclass

import sympy

from ..config import LIMITS
from ..errors import MagnitudeExceeded, NotCoprime
from .primality import SMALL_PRIMES, _brent_rho, is_prime


@dataclass(frozen=True)
class FactoredInteger:
    """An exact nonnegative integer with complete prime factorization.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes and exponents >= 1; the empty tuple represents 1.
    """

    value: int
    factors: tuple

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("FactoredInteger requires value >= 1")
        recomposed = 1
        previous = 0
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("factors must have strictly increasing primes")
            if exponent < 1:
                raise ValueError("exponents must be >= 1")
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            previous = prime
            recomposed *= prime**exponent
        if recomposed != self.value:
            raise ValueError(
                f"factorization does not recompose: {recomposed} != {self.value}"
            )

    def as_dict(self) -> dict:
        return dict(self.factors)

    def primes(self) -> list:
        return [p for p, _ in self.factors]

    def valuation(self, prime: int) -> int:
        return self.as_dict().get(prime, 0)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(
            str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors
        )


_cache: dict = {}


def _split(n: int, budget: int) -> dict:
    """Fully factor n > 1 into certified primes; raises if budget runs out."""
    out: dict = {}
    stack = [n]
    while stack:
        chunk = stack.pop()
        if chunk == 1:
            continue
        if is_prime(chunk):
            out[chunk] = out.get(chunk, 0) + 1
            continue
        root = sympy.integer_nthroot
        # Perfect powers first: cycle finding behaves poorly on them.
        for k in (2, 3, 5, 7):
            base, exact = root(chunk, k)
            if exact:
                stack.extend([int(base)] * k)
                break
        else:
            if chunk < 2**64:
                for p, e in sympy.factorint(chunk).items():
                    stack.extend([int(p)] * int(e))
                continue
            factor = _brent_rho(chunk, budget)
            if factor == 0:
                raise MagnitudeExceeded(
                    f"failed to split {chunk.bit_length()}-bit composite within budget"
                )
            stack.append(factor)
            stack.append(chunk // factor)
    return out


def factorize(n: int) -> FactoredInteger:
    """Complete, verified prime factorization of n >= 1."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    if n.bit_length() > LIMITS.max_factor_bits:
        raise MagnitudeExceeded(
            f"{n.bit_length()}-bit input exceeds the {LIMITS.max_factor_bits}-bit limit"
        )
    cached = _cache.get(n)
    if cached is not None:
        return cached
    remaining = n
    factors: dict = {}
    for p in SMALL_PRIMES:
        if p * p > remaining:
            break
        while remaining % p == 0:
            remaining //= p
            factors[p] = factors.get(p, 0) + 1
    if remaining > 1:
        for p, e in _split(remaining, LIMITS.rho_budget).items():
            factors[p] = factors.get(p, 0) + e
    result = FactoredInteger(value=n, factors=tuple(sorted(factors.items())))
    _cache[n] = result
    return result


def multiplicative_order(a: int, modulus: int) -> int:
    """Least k >= 1 with a^k = 1 (mod modulus)."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if math.gcd(a, modulus) != 1:
        raise NotCoprime(f"gcd({a}, {modulus}) != 1")
    return int(sympy.n_order(a, modulus))


def valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
