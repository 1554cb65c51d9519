"""Deterministic primality: fixed-witness Miller-Rabin plus N-1 certification.

Probabilistic-only answers are never returned.  Three regimes:

* n < 2^64 — strong-pseudoprime test with a 7-witness set that has been
  exhaustively verified to have no composite survivors below 2^64.
* n < 3317044064679887385961981 (~3.3e24) — the first 13 primes as witnesses,
  proven sufficient below that bound (Sorenson & Webster).
* larger n — a recursive Pocklington/BLS N-1 certificate built from a
  partial factorization of n-1.  If the factoring budget runs out the test
  raises CertificationError rather than guessing.
"""

import math
from dataclasses import dataclass, field

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    def mpz(x):
        return x

from ..config import LIMITS
from ..errors import CertificationError, MagnitudeExceeded

# Witness sets with proven-exhaustive verification ranges.
_BASES_64 = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_BOUND_13 = 3_317_044_064_679_887_385_961_981
_BASES_13 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_TRIAL_LIMIT = 10_000


def _sieve(limit: int) -> list:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return [i for i in range(limit) if flags[i]]


SMALL_PRIMES = _sieve(_TRIAL_LIMIT)
_SMALL_PRIME_SET = set(SMALL_PRIMES)


def _strong_probable_prime(n: int, base: int) -> bool:
    """Strong probable-prime test of odd n > 2 to one base (reduced mod n)."""
    base %= n
    if base == 0:
        return True
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _mr(n: int, bases) -> bool:
    return all(_strong_probable_prime(n, b) for b in bases)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n within the magnitude limit."""
    if n < 0:
        raise ValueError("is_prime expects a nonnegative integer")
    if n.bit_length() > LIMITS.max_factor_bits:
        raise MagnitudeExceeded(
            f"{n.bit_length()}-bit input exceeds the {LIMITS.max_factor_bits}-bit limit"
        )
    if n < _TRIAL_LIMIT:
        return n in _SMALL_PRIME_SET
    for p in SMALL_PRIMES[:60]:
        if n % p == 0:
            return False
    if n < 2**64:
        return _mr(n, _BASES_64)
    if n < _BOUND_13:
        return _mr(n, _BASES_13)
    return _certified_prime(n)


@dataclass
class PrimeCertificate:
    """An independently checkable N-1 primality certificate.

    ``factored_part`` lists (prime, exponent) pairs whose product F divides
    n-1; ``witnesses`` maps each such prime q to a base a with
    a^(n-1) = 1 (mod n) and gcd(a^((n-1)/q) - 1, n) = 1.  ``method`` records
    the closing argument: "pocklington" when (F+1)^2 > n, "bls-cube" when
    F^3 > n plus the quadratic-form check.  Sub-certificates prove any
    factored-part prime that itself exceeds the fixed-witness range.
    """

    n: int
    method: str
    factored_part: list
    witnesses: dict
    sub_certificates: list = field(default_factory=list)


def _is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _integer_cube_root(n: int) -> int:
    """Largest r with r^3 <= n (exact, no float rounding)."""
    r = round(n ** (1.0 / 3.0))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def _brent_rho(n: int, budget: int) -> int:
    """Deterministic Brent cycle-finding; returns a nontrivial factor or 0.

    Parameters are fixed (x0 = 2, c = 1, 2, 3, ...) so results never depend
    on external randomness.
    """
    if n % 2 == 0:
        return 2
    n = mpz(n)
    for c in range(1, 20):
        y, r, q = mpz(2), 1, mpz(1)
        g, ys, x = 1, y, y
        count = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(int(q), int(n))
                k += 128
                count += 128
                if count > budget:
                    g = 0
                    break
            r *= 2
            if g == 0:
                break
        if g == 0:
            continue
        if g == n:
            # Backtrack one step at a time to split the batched gcd.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(int(abs(x - ys)), int(n))
        if g != n and g != 1:
            return int(g)
    return 0


def _partial_factor_for_certificate(m: int, target: int, budget: int):
    """Split certified prime powers off m until their product exceeds target.

    Returns (factors dict, remaining cofactor).  Factors are certified prime
    recursively; the cofactor is whatever is left unfactored.
    """
    factors: dict = {}
    produced = 1
    for p in SMALL_PRIMES:
        if produced > target:
            break
        while m % p == 0:
            m //= p
            factors[p] = factors.get(p, 0) + 1
            produced *= p
    stack = []
    if m > 1 and produced <= target:
        stack.append(m)
        m = 1
    while stack and produced <= target:
        chunk = stack.pop()
        if is_prime(chunk):
            factors[chunk] = factors.get(chunk, 0) + 1
            produced *= chunk
            continue
        split = _brent_rho(chunk, budget)
        if split == 0:
            m *= chunk
            continue
        stack.append(split)
        stack.append(chunk // split)
    while stack:
        m *= stack.pop()
    return factors, m


def _certified_prime(n: int) -> bool:
    try:
        certify_prime(n)
        return True
    except _Composite:
        return False


class _Composite(Exception):
    """Internal: certification discovered a factor (the number is composite)."""


def certify_prime(n: int, _depth: int = 0) -> PrimeCertificate:
    """Produce an N-1 certificate for n, or raise.

    Raises CertificationError if n-1 cannot be factored far enough within
    budget, and the internal composite marker if n is proven composite.
    """
    if _depth > 8:
        raise CertificationError(f"certificate recursion too deep at {n}")
    if n < 2:
        raise _Composite(n)
    if n < _BOUND_13:
        if is_prime(n):
            return PrimeCertificate(n=n, method="fixed-witness", factored_part=[], witnesses={})
        raise _Composite(n)
    for p in SMALL_PRIMES:
        if n % p == 0:
            raise _Composite(n)
    if not _strong_probable_prime(n, 2):
        raise _Composite(n)

    cube_target = _integer_cube_root(n) + 1  # factor n-1 past this: F^3 > n
    factors, cofactor = _partial_factor_for_certificate(
        n - 1, cube_target, LIMITS.rho_budget
    )
    f_value = 1
    for p, e in factors.items():
        f_value *= p**e
    if f_value <= cube_target and (f_value + 1) ** 2 <= n:
        raise CertificationError(
            f"could not factor enough of n-1 to certify {n} (reached {f_value})"
        )

    sub_certificates = []
    witnesses = {}
    for q in factors:
        if q >= _BOUND_13:
            sub_certificates.append(certify_prime(q, _depth + 1))
        for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
            if pow(a, n - 1, n) != 1:
                raise _Composite(n)
            g = math.gcd(pow(a, (n - 1) // q, n) - 1, n)
            if g == 1:
                witnesses[q] = a
                break
            if 1 < g < n:
                raise _Composite(n)
        else:
            raise CertificationError(f"no Pocklington witness found for prime {q} of {n}")

    if (f_value + 1) ** 2 > n:
        return PrimeCertificate(
            n=n,
            method="pocklington",
            factored_part=sorted(factors.items()),
            witnesses=witnesses,
            sub_certificates=sub_certificates,
        )
    if f_value**3 > n:
        # Every prime divisor of n is = 1 (mod F).  Writing
        # n = c2*F^2 + c1*F + 1, a factorization n = (aF+1)(bF+1) forces
        # a+b = c1 + tF and ab = c2 - t for t in {0, 1}; either case needs
        # (a+b)^2 - 4ab to be a perfect square.
        f = f_value
        c1 = ((n - 1) // f) % f
        c2 = (n - 1) // (f * f)
        for t in (0, 1):
            s, prod = c1 + t * f, c2 - t
            if prod >= 1 and _is_perfect_square(s * s - 4 * prod):
                raise CertificationError(
                    f"BLS cube test inconclusive for {n}; larger factored part needed"
                )
        return PrimeCertificate(
            n=n,
            method="bls-cube",
            factored_part=sorted(factors.items()),
            witnesses=witnesses,
            sub_certificates=sub_certificates,
        )
    raise CertificationError(f"factored part of n-1 too small to certify {n}")


def check_certificate(cert: PrimeCertificate) -> bool:
    """Re-verify a certificate from scratch (used by tests)."""
    n = cert.n
    if cert.method == "fixed-witness":
        return n < _BOUND_13 and is_prime(n)
    f_value = 1
    sub_proved = {c.n for c in cert.sub_certificates if check_certificate(c)}
    for q, e in cert.factored_part:
        if q >= _BOUND_13 and q not in sub_proved:
            return False
        if q < _BOUND_13 and not is_prime(q):
            return False
        if (n - 1) % (q**e) != 0:
            return False
        f_value *= q**e
    for q, _ in cert.factored_part:
        a = cert.witnesses[q]
        if pow(a, n - 1, n) != 1:
            return False
        if math.gcd(pow(a, (n - 1) // q, n) - 1, n) != 1:
            return False
    if cert.method == "pocklington":
        return (f_value + 1) ** 2 > n
    if cert.method == "bls-cube":
        if f_value**3 <= n:
            return False
        c1 = ((n - 1) // f_value) % f_value
        c2 = (n - 1) // (f_value * f_value)
        for t in (0, 1):
            s, prod = c1 + t * f_value, c2 - t
            if prod >= 1 and _is_perfect_square(s * s - 4 * prod):
                return False
        return True
    return False
