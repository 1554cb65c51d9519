"""Exception tables for the qualifying-prime verdicts, plus window scans.

Each table names the finite set of pairs (base, m) in its domain for which
NO qualifying prime exists.  ``scan_window`` recomputes the verdict
empirically over a rectangle and cross-checks the stored table, so the
tables are certified rather than trusted.

Domains: feit_thm31 and larger_thm32 accept any base a >= 2; the four
cor3x tables are stated for prime powers q only and exclude m = 2 by
hypothesis, so scans list every (q, 2) as an exception without testing it.

Stored tables are the corrected ones (what the scans actually confirm).
The published larger_thm32 list is incomplete in two ways, recorded in
PUBLISHED_DEVIATIONS: its m = 2 rule omits the factor 5 (the correct rule
is a + 1 = 2^s * 3^t * 5^u with t, u <= 1; bases 4, 9, 14, 19, ... are
exceptions too), and it omits the sporadic pairs (10, 6), (17, 6) and
(3, 18).  At m = 6 an exception needs Phi_6(a) = a^2 - a + 1, stripped of
its single possible factor 3, to be 7^e * 13^d with e, d <= 1 — so a <= 17
and a in {2, 3, 4, 5, 10, 17}; at m = 18 the same bound with primes 19, 37
forces a in {2, 3}.  The prime-power pairs propagate into cor35.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

import sympy

from ..errors import NotPrimePower, TableMismatch, UsageError
from .zsigmondy import (
    cor34_holds,
    cor36_holds,
    has_large_zsigmondy,
    has_larger_zsigmondy,
    scan_witness,
)

TABLE_IDS = ("feit_thm31", "larger_thm32", "cor33", "cor34", "cor35", "cor36")


def is_prime_power(n: int):
    """(p, k) with n = p^k, or None."""
    if n < 2:
        return None
    factors = sympy.factorint(n)
    if len(factors) != 1:
        return None
    [(p, k)] = factors.items()
    return p, k


def _m2_two_three(a: int) -> bool:
    """a + 1 = 2^s * 3^t with t <= 1 (s = 0 allowed)."""
    b = a + 1
    if b % 3 == 0:
        b //= 3
    return b & (b - 1) == 0


def _m2_two_three_five(a: int) -> bool:
    """a + 1 = 2^s * 3^t * 5^u with t, u <= 1."""
    b = a + 1
    if b % 3 == 0:
        b //= 3
    if b % 5 == 0:
        b //= 5
    return b & (b - 1) == 0


@dataclass(frozen=True)
class ExceptionTable:
    table_id: str
    verdict: callable  # (base, m) -> bool, True = qualifying prime exists
    sporadic: dict  # base -> frozenset of m values
    m2_rule: callable | None  # membership for m = 2 when base-dependent
    m2_unconditional: bool  # every (base, 2) in domain is an exception
    prime_power_domain: bool

    def in_domain(self, base: int, m: int) -> bool:
        if base < 2 or m < 2:
            return False
        if self.prime_power_domain and is_prime_power(base) is None:
            return False
        return True

    def member(self, base: int, m: int) -> bool:
        if base < 2 or m < 2:
            raise ValueError(f"(base, m) = ({base}, {m}): both must exceed 1")
        if self.prime_power_domain and is_prime_power(base) is None:
            raise NotPrimePower(f"{base} is not a prime power")
        if m == 2:
            if self.m2_unconditional:
                return True
            return self.m2_rule(base)
        return m in self.sporadic.get(base, ())


TABLES = {
    "feit_thm31": ExceptionTable(
        table_id="feit_thm31",
        verdict=has_large_zsigmondy,
        sporadic={
            2: frozenset({4, 6, 10, 12, 18}),
            3: frozenset({4, 6}),
            5: frozenset({6}),
        },
        m2_rule=_m2_two_three,
        m2_unconditional=False,
        prime_power_domain=False,
    ),
    "larger_thm32": ExceptionTable(
        table_id="larger_thm32",
        verdict=has_larger_zsigmondy,
        sporadic={
            2: frozenset({3, 4, 6, 8, 10, 12, 18, 20}),
            3: frozenset({4, 6, 18}),
            4: frozenset({3, 6}),
            5: frozenset({6}),
            10: frozenset({6}),
            17: frozenset({6}),
        },
        m2_rule=_m2_two_three_five,
        m2_unconditional=False,
        prime_power_domain=False,
    ),
    "cor33": ExceptionTable(
        table_id="cor33",
        verdict=has_large_zsigmondy,
        sporadic={
            2: frozenset({4, 6, 10, 12, 18}),
            3: frozenset({4, 6}),
            5: frozenset({6}),
        },
        m2_rule=None,
        m2_unconditional=True,
        prime_power_domain=True,
    ),
    "cor34": ExceptionTable(
        table_id="cor34",
        verdict=cor34_holds,
        sporadic={
            2: frozenset({4, 6, 12}),
            3: frozenset({4}),
        },
        m2_rule=None,
        m2_unconditional=True,
        prime_power_domain=True,
    ),
    "cor35": ExceptionTable(
        table_id="cor35",
        verdict=has_larger_zsigmondy,
        sporadic={
            2: frozenset({3, 4, 6, 8, 10, 12, 18, 20}),
            3: frozenset({4, 6, 18}),
            4: frozenset({3, 6}),
            5: frozenset({6}),
            17: frozenset({6}),
        },
        m2_rule=None,
        m2_unconditional=True,
        prime_power_domain=True,
    ),
    "cor36": ExceptionTable(
        table_id="cor36",
        verdict=cor36_holds,
        sporadic={
            2: frozenset({3, 4, 6, 8, 12, 20}),
            3: frozenset({4, 6}),
            4: frozenset({6}),
        },
        m2_rule=None,
        m2_unconditional=True,
        prime_power_domain=True,
    ),
}


# Differences between the published exception lists and the stored
# (scan-confirmed) tables.  "extra_pairs" are exceptions the published list
# omits; "m2_rule_published" is the weaker published base-family at m = 2.
PUBLISHED_DEVIATIONS = {
    "larger_thm32": {
        "extra_pairs": ((3, 18), (10, 6), (17, 6)),
        "m2_rule_published": "a + 1 = 2^s * 3^t, t <= 1 (factor 5^u missing)",
        "m2_counterexamples": (4, 9, 14, 19, 29, 39, 59, 79),
    },
    "cor35": {
        "extra_pairs": ((3, 18), (17, 6)),
        "m2_rule_published": None,
        "m2_counterexamples": (),
    },
}


def get_table(table_id: str) -> ExceptionTable:
    try:
        return TABLES[table_id]
    except KeyError:
        raise UsageError(
            f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}"
        ) from None


def exception_member(table_id: str, base: int, m: int) -> bool:
    """Membership in the stored exception table (raises NotPrimePower for a
    composite non-prime-power base on the cor3x tables)."""
    return get_table(table_id).member(base, m)


@dataclass(frozen=True)
class ScanReport:
    table_id: str
    base_max: int
    m_max: int
    exceptions: tuple  # empirically verdict-free (base, m), sorted
    expected: tuple  # table membership over the same window, sorted
    witnesses: tuple  # ((base, m, smallest qualifying prime or None), ...)
    matches_table: bool

    def mismatches(self):
        found, want = set(self.exceptions), set(self.expected)
        return {
            "unexpected": tuple(sorted(found - want)),
            "missing": tuple(sorted(want - found)),
        }


def _scan_base(args):
    table_id, base, m_max, with_witnesses = args
    table = TABLES[table_id]
    exceptions = []
    witnesses = []
    for m in range(2, m_max + 1):
        if m == 2 and table.m2_unconditional:
            exceptions.append((base, m))
            continue
        if table.verdict(base, m):
            if with_witnesses:
                witnesses.append((base, m, scan_witness(table_id, base, m)))
        else:
            exceptions.append((base, m))
    return exceptions, witnesses


def scan_window(
    table_id: str,
    base_max: int,
    m_max: int,
    prime_powers_only: bool | None = None,
    with_witnesses: bool = True,
    jobs: int = 1,
) -> ScanReport:
    """Recompute the verdict on every domain pair with 2 <= base <= base_max
    and 2 <= m <= m_max, and compare against the stored table."""
    table = get_table(table_id)
    if base_max < 2 or m_max < 2:
        raise UsageError("scan window must include base >= 2 and m >= 2")
    restrict = table.prime_power_domain
    if prime_powers_only is not None:
        if table.prime_power_domain and not prime_powers_only:
            raise UsageError(
                f"{table_id} is only stated for prime-power bases"
            )
        restrict = prime_powers_only

    bases = [
        b
        for b in range(2, base_max + 1)
        if not restrict or is_prime_power(b) is not None
    ]
    tasks = [(table_id, b, m_max, with_witnesses) for b in bases]
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_base, tasks, chunksize=4))
    else:
        results = [_scan_base(t) for t in tasks]

    exceptions = sorted(pair for excs, _ in results for pair in excs)
    witnesses = sorted(w for _, wits in results for w in wits)
    expected = sorted(
        (b, m)
        for b in bases
        for m in range(2, m_max + 1)
        if table.member(b, m)
    )
    return ScanReport(
        table_id=table_id,
        base_max=base_max,
        m_max=m_max,
        exceptions=tuple(exceptions),
        expected=tuple(expected),
        witnesses=tuple(witnesses),
        matches_table=exceptions == expected,
    )


def require_match(report: ScanReport) -> ScanReport:
    """Raise TableMismatch unless the empirical scan equals the table."""
    if not report.matches_table:
        raise TableMismatch(
            f"{report.table_id} scan disagrees with stored table: "
            f"{report.mismatches()}"
        )
    return report


# ---------------------------------------------------------------------------
# Golden-file format: one "table_id base m" line per exception, sorted.
# ---------------------------------------------------------------------------

def golden_lines(report: ScanReport) -> list:
    return [
        f"{report.table_id} {base} {m}" for base, m in report.exceptions
    ]


def write_golden(report: ScanReport, path):
    with open(path, "w", encoding="utf-8") as fh:
        for line in golden_lines(report):
            fh.write(line + "\n")


def read_golden(path) -> tuple:
    """Parse a golden exception list back to (table_id, pairs)."""
    table_id = None
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise UsageError(f"malformed golden line: {line!r}")
            tid, base, m = parts[0], int(parts[1]), int(parts[2])
            if table_id is None:
                table_id = tid
            elif tid != table_id:
                raise UsageError("golden file mixes tables")
            pairs.append((base, m))
    return table_id, tuple(sorted(pairs))
