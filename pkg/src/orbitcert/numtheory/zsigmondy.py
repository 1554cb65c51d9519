"""Zsigmondy primes of (a, m) and the four qualifying-prime verdicts.

A Zsigmondy prime for (a, m) is a prime l dividing a^m - 1 but no a^i - 1
with 1 <= i < m; equivalently a has multiplicative order exactly m mod l,
forcing l = 1 (mod m).  All such primes live in the cyclotomic piece
Phi_m(a), which keeps both the report computation and the window-scan fast
paths away from full factorizations of a^m - 1.

Verdicts:

* feit_large    — some Zsigmondy l with l >= 2m+1 or l^2 | a^m - 1
* larger_3m1    — some Zsigmondy l with l >= 3m+1 or l^2 | a^m - 1
* cor34         — some prime l | a^m - 1 (Zsigmondy or not) with l >= 2m+1,
                  or l^2 | a^m - 1 and l^2 >= 2m+1
* cor36         — same with both thresholds at 3m
"""

import bisect
from dataclasses import dataclass

import sympy

from ..errors import MagnitudeExceeded
from .cyclotomic import (
    cyclotomic_value,
    order_check,
    power_minus_one_pieces,
    zsigmondy_part,
)
from .factorization import factorize, valuation

VERDICT_NAMES = ("feit_large", "larger_3m1", "cor34", "cor36")


@dataclass(frozen=True)
class Verdict:
    """Existence flag plus the smallest qualifying prime when materialized.

    ``witness`` may be None either because no prime qualifies (holds is
    False) or, on budget-limited scan paths, because existence was proven
    without naming the smallest prime.
    """

    holds: bool
    witness: int | None = None


@dataclass(frozen=True)
class ZsigmondyReport:
    a: int
    m: int
    zsigmondy_primes: tuple  # ((prime, multiplicity in a^m - 1), ...)
    verdicts: dict

    def primes(self) -> list:
        return [l for l, _ in self.zsigmondy_primes]


def _require_domain(a: int, m: int):
    if a <= 1 or m <= 1:
        raise ValueError(f"(a, m) = ({a}, {m}): both must exceed 1")


def zsigmondy_primes(a: int, m: int) -> ZsigmondyReport:
    """Full report for (a, m): every Zsigmondy prime with multiplicity,
    plus all four verdicts with smallest qualifying witnesses."""
    _require_domain(a, m)
    zpart = zsigmondy_part(a, m)
    zfactors = factorize(zpart).factors if zpart > 1 else ()
    listed = []
    for l, e in zfactors:
        if not order_check(a, m, l):
            raise AssertionError(f"{l} from Phi_{m}({a}) fails the order check")
        listed.append((l, e))

    # All primes of a^m - 1 with multiplicity, piece by piece.
    all_factors: dict = {}
    for piece in power_minus_one_pieces(a, m).values():
        if piece > 1:
            for l, e in factorize(piece).factors:
                all_factors[l] = all_factors.get(l, 0) + e

    def best(candidates) -> Verdict:
        qualifying = sorted(candidates)
        if qualifying:
            return Verdict(holds=True, witness=qualifying[0])
        return Verdict(holds=False)

    verdicts = {
        "feit_large": best(
            l for l, e in listed if l >= 2 * m + 1 or e >= 2
        ),
        "larger_3m1": best(
            l for l, e in listed if l >= 3 * m + 1 or e >= 2
        ),
        "cor34": best(
            l
            for l, e in all_factors.items()
            if l >= 2 * m + 1 or (e >= 2 and l * l >= 2 * m + 1)
        ),
        "cor36": best(
            l
            for l, e in all_factors.items()
            if l >= 3 * m or (e >= 2 and l * l >= 3 * m)
        ),
    }
    return ZsigmondyReport(
        a=a, m=m, zsigmondy_primes=tuple(listed), verdicts=verdicts
    )


# ---------------------------------------------------------------------------
# Scan fast paths: existence verdicts with no large factorizations.
# ---------------------------------------------------------------------------

def _strip(n: int, p: int):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def has_large_zsigmondy(a: int, m: int) -> bool:
    """feit_large existence without factoring.

    In the intrinsic-prime-stripped piece Z every prime is = 1 (mod m) and
    the only candidate below 2m+1 is m+1 itself, so after dividing out m+1
    any remainder > 1 certifies a prime >= 2m+1.
    """
    _require_domain(a, m)
    z = zsigmondy_part(a, m)
    if z == 1:
        return False
    if sympy.isprime(m + 1):
        e, rest = _strip(z, m + 1)
        if e >= 2:
            return True
        return rest > 1
    return True  # every prime of z is >= 2m+1 when m+1 is composite


def has_larger_zsigmondy(a: int, m: int) -> bool:
    """larger_3m1 existence without factoring; candidates below 3m+1 in the
    stripped piece are exactly m+1 and 2m+1."""
    _require_domain(a, m)
    z = zsigmondy_part(a, m)
    if z == 1:
        return False
    for candidate in (m + 1, 2 * m + 1):
        if sympy.isprime(candidate):
            e, z = _strip(z, candidate)
            if e >= 2:
                return True
    return z > 1


def _small_prime_profile(q: int, m: int, bound: int):
    """Valuations of q^m - 1 at every prime below bound, plus the stripped
    remainder."""
    n = q**m - 1
    profile = {}
    for l in sympy.primerange(2, bound):
        e, n = _strip(n, l)
        if e:
            profile[l] = e
    return profile, n


def cor34_holds(q: int, m: int) -> bool:
    """Some prime l | q^m - 1 with l >= 2m+1, or l^2 | q^m - 1, l^2 >= 2m+1."""
    _require_domain(q, m)
    profile, rest = _small_prime_profile(q, m, 2 * m + 1)
    if rest > 1:
        return True
    return any(e >= 2 and l * l >= 2 * m + 1 for l, e in profile.items())


def cor36_holds(q: int, m: int) -> bool:
    """Some prime l | q^m - 1 with l >= 3m, or l^2 | q^m - 1, l^2 >= 3m."""
    _require_domain(q, m)
    profile, rest = _small_prime_profile(q, m, 3 * m)
    if rest > 1:
        return True
    return any(e >= 2 and l * l >= 3 * m for l, e in profile.items())


# ---------------------------------------------------------------------------
# Budgeted witness search for scan reports.
# ---------------------------------------------------------------------------

_WITNESS_TRIAL_BOUND = 1_000_000
_FULL_FACTOR_BITS = 100
_trial_primes: list = []
_progression_cache: dict = {}


def _all_trial_primes() -> list:
    if not _trial_primes:
        _trial_primes.extend(sympy.primerange(2, _WITNESS_TRIAL_BOUND))
    return _trial_primes


def _progression_primes(m: int) -> list:
    """Primes = 1 (mod m) up to the trial bound, ascending."""
    cached = _progression_cache.get(m)
    if cached is None:
        cached = [l for l in _all_trial_primes() if l % m == 1]
        _progression_cache[m] = cached
    return cached


def progression_primes(m: int) -> list:
    """Primes = 1 (mod m) up to the shared trial bound, ascending."""
    return _progression_primes(m)


def _smallest_prime_factor(n: int, m: int) -> int | None:
    """Smallest prime of n, where every prime of n is = 1 (mod m).

    Tries the arithmetic progression up to the trial bound, then a full
    factorization when n is small enough; returns None when the budget does
    not determine it.
    """
    if n == 1:
        return None
    for l in _progression_primes(m):
        if n % l == 0:
            return l
        if l * l > n:
            return n
    if n.bit_length() <= _FULL_FACTOR_BITS:
        try:
            return factorize(n).factors[0][0]
        except MagnitudeExceeded:
            return None
    return None


def scan_witness(table_id: str, base: int, m: int) -> int | None:
    """Smallest qualifying prime for a non-exception scan cell, or None when
    the deterministic budget proves existence without naming it."""
    if table_id in ("feit_thm31", "cor33"):
        z = zsigmondy_part(base, m)
        if sympy.isprime(m + 1):
            e, rest = _strip(z, m + 1)
            if e >= 2:
                return m + 1
            z = rest
        return _smallest_prime_factor(z, m)
    if table_id in ("larger_thm32", "cor35"):
        z = zsigmondy_part(base, m)
        for candidate in (m + 1, 2 * m + 1):
            if sympy.isprime(candidate):
                e, z = _strip(z, candidate)
                if e >= 2:
                    return candidate
        return _smallest_prime_factor(z, m)
    if table_id in ("cor34", "cor36"):
        threshold = 2 * m + 1 if table_id == "cor34" else 3 * m
        profile, rest = _small_prime_profile(base, m, threshold)
        squares = sorted(
            l for l, e in profile.items() if e >= 2 and l * l >= threshold
        )
        if squares:
            return squares[0]
        if rest == 1:
            return None
        start = bisect.bisect_left(_all_trial_primes(), threshold)
        for l in _all_trial_primes()[start:]:
            if rest % l == 0:
                return l
            if l * l > rest:
                return rest
        if rest.bit_length() <= _FULL_FACTOR_BITS:
            try:
                return factorize(rest).factors[0][0]
            except MagnitudeExceeded:
                return None
        return None
    raise ValueError(f"unknown table {table_id!r}")
