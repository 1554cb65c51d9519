"""Catalog of the finite simple groups.

Families are keyed by Lie type (``A_n`` ... ``2G2``), plus ``Alt``,
``Sporadic`` and ``Tits``.  For twisted types the defining parameter is
q with q^2 = p^f (``2A_n``, ``2D_n``, ``2E6``; f even) or q^3 = p^f
(``3D4``; f divisible by 3); everywhere else q = p^f.

Orders are assembled from cyclotomic pieces Phi_e(p), so the factored
order of a group never requires factoring anything larger than a single
cyclotomic value; the factored result is checked against the plain
integer formula every time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import sympy

from ..errors import InvalidParameters
from ..numtheory.cyclotomic import cyclotomic_value
from ..numtheory.factorization import FactoredInteger, factorize
from .static_tables import SPORADIC, TITS

FAMILIES = (
    "Alt",
    "Sporadic",
    "Tits",
    "A_n",
    "2A_n",
    "B_n",
    "C_n",
    "D_n",
    "2D_n",
    "E6",
    "2E6",
    "E7",
    "E8",
    "F4",
    "G2",
    "3D4",
    "2B2",
    "2F4",
    "2G2",
)

LIE_FAMILIES = tuple(
    fam for fam in FAMILIES if fam not in ("Alt", "Sporadic", "Tits")
)

#: Families parameterized by q^2 = p^f (stored f is even, q = p^(f/2)).
SQUARED_Q_FAMILIES = ("2A_n", "2D_n", "2E6")
#: Families parameterized by q^3 = p^f (stored f divisible by 3).
CUBED_Q_FAMILIES = ("3D4",)

RANKED_FAMILIES = ("A_n", "2A_n", "B_n", "C_n", "D_n", "2D_n")
MIN_RANK = {"A_n": 1, "2A_n": 2, "B_n": 2, "C_n": 3, "D_n": 4, "2D_n": 4}

#: Parameter points that the constructor accepts but flags as non-simple.
NON_SIMPLE_POINTS = {
    ("A_n", 1, 2): "solvable (order 6, symmetric group of degree 3)",
    ("A_n", 1, 3): "solvable (order 12, alternating group of degree 4)",
    ("2A_n", 2, 2): "solvable (order 72)",
    ("B_n", 2, 2): "not simple (symmetric group of degree 6; derived "
    "subgroup of index 2 is simple)",
    ("G2", None, 2): "not simple (derived subgroup of index 2 is simple)",
    ("2B2", None, 2): "solvable (order 20)",
    ("2G2", None, 3): "not simple (derived subgroup of index 3 is simple)",
    ("2F4", None, 2): "not simple (derived subgroup of index 2 is simple)",
}


@dataclass(frozen=True)
class GroupSpec:
    """One point of the catalog.

    ``Alt`` uses ``n`` (degree, >= 5); ``Sporadic`` uses ``name``; ``Tits``
    takes no parameters; Lie families use ``p`` (prime), ``f`` (>= 1) and,
    for ranked families, ``n``.
    """

    family: str
    n: int | None = None
    p: int | None = None
    f: int | None = None
    name: str | None = None

    def __post_init__(self):
        fam = self.family
        if fam not in FAMILIES:
            raise InvalidParameters(f"unknown family {fam!r}")
        if fam == "Alt":
            if self.n is None or self.n < 5:
                raise InvalidParameters("alternating groups require n >= 5")
            if self.p is not None or self.f is not None or self.name:
                raise InvalidParameters("alternating groups take only n")
            return
        if fam == "Sporadic":
            if self.name not in SPORADIC:
                raise InvalidParameters(f"unknown sporadic name {self.name!r}")
            if self.n is not None or self.p is not None or self.f is not None:
                raise InvalidParameters("sporadic groups take only a name")
            return
        if fam == "Tits":
            if (self.n, self.p, self.f, self.name) != (None, None, None, None):
                raise InvalidParameters("the Tits group takes no parameters")
            return
        # Lie families.
        if self.name is not None:
            raise InvalidParameters("Lie families do not take a name")
        if self.p is None or self.p < 2 or not sympy.isprime(self.p):
            raise InvalidParameters("p must be prime")
        if self.f is None or self.f < 1:
            raise InvalidParameters("f must be a positive integer")
        if fam in RANKED_FAMILIES:
            if self.n is None or self.n < MIN_RANK[fam]:
                raise InvalidParameters(
                    f"{fam} requires rank n >= {MIN_RANK[fam]}"
                )
        elif self.n is not None:
            raise InvalidParameters(f"{fam} does not take a rank")
        if fam in SQUARED_Q_FAMILIES and self.f % 2 != 0:
            raise InvalidParameters(f"{fam} requires q^2 = p^f with f even")
        if fam in CUBED_Q_FAMILIES and self.f % 3 != 0:
            raise InvalidParameters(f"{fam} requires q^3 = p^f with 3 | f")
        if fam in ("2B2", "2F4") and self.p != 2:
            raise InvalidParameters(f"{fam} requires p = 2")
        if fam == "2G2" and self.p != 3:
            raise InvalidParameters("2G2 requires p = 3")
        if fam in ("2B2", "2F4", "2G2") and self.f % 2 == 0:
            raise InvalidParameters(f"{fam} requires an odd power of {self.p}")

    @property
    def q(self) -> int | None:
        """The natural field parameter (q with q^2 = p^f or q^3 = p^f for
        the twisted families), or None outside the Lie families."""
        if self.family not in LIE_FAMILIES:
            return None
        if self.family in SQUARED_Q_FAMILIES:
            return self.p ** (self.f // 2)
        if self.family in CUBED_Q_FAMILIES:
            return self.p ** (self.f // 3)
        return self.p**self.f

    @property
    def nonsimple_reason(self) -> str | None:
        if self.family in ("Alt", "Sporadic", "Tits"):
            return None
        key = (self.family, self.n, self.q)
        if self.family not in RANKED_FAMILIES:
            key = (self.family, None, self.q)
        return NON_SIMPLE_POINTS.get(key)

    @property
    def is_simple(self) -> bool:
        return self.nonsimple_reason is None

    @property
    def label(self) -> str:
        if self.family == "Alt":
            return f"Alt({self.n})"
        if self.family == "Sporadic":
            return self.name
        if self.family == "Tits":
            return "Tits"
        q = self.q
        stem = self.family.replace("_n", f"_{self.n}")
        if self.family in SQUARED_Q_FAMILIES:
            return f"{stem}({q}^2)"
        if self.family in CUBED_Q_FAMILIES:
            return f"{stem}({q}^3)"
        return f"{stem}({q})"


def _order_recipe(spec: GroupSpec):
    """(q-power exponent, pieces, d) with pieces a tuple of
    (q-exponent, sign, multiplicity); sign +1 means q^e + 1."""
    fam, n, q = spec.family, spec.n, spec.q
    if fam == "A_n":
        pieces = tuple((i + 1, -1, 1) for i in range(1, n + 1))
        return n * (n + 1) // 2, pieces, math.gcd(n + 1, q - 1)
    if fam == "2A_n":
        pieces = tuple(
            (i + 1, -1 if (i + 1) % 2 == 0 else +1, 1)
            for i in range(1, n + 1)
        )
        return n * (n + 1) // 2, pieces, math.gcd(n + 1, q + 1)
    if fam in ("B_n", "C_n"):
        pieces = tuple((2 * i, -1, 1) for i in range(1, n + 1))
        return n * n, pieces, math.gcd(2, q - 1)
    if fam == "D_n":
        pieces = ((n, -1, 1),) + tuple(
            (2 * i, -1, 1) for i in range(1, n)
        )
        return n * (n - 1), pieces, math.gcd(4, q**n - 1)
    if fam == "2D_n":
        pieces = ((n, +1, 1),) + tuple(
            (2 * i, -1, 1) for i in range(1, n)
        )
        return n * (n - 1), pieces, math.gcd(4, q**n + 1)
    if fam == "E6":
        pieces = tuple(
            (e, -1, 1) for e in (12, 9, 8, 6, 5, 2)
        )
        return 36, pieces, math.gcd(3, q - 1)
    if fam == "2E6":
        pieces = (
            (12, -1, 1), (9, +1, 1), (8, -1, 1),
            (6, -1, 1), (5, +1, 1), (2, -1, 1),
        )
        return 36, pieces, math.gcd(3, q + 1)
    if fam == "E7":
        pieces = tuple((e, -1, 1) for e in (18, 14, 12, 10, 8, 6, 2))
        return 63, pieces, math.gcd(2, q - 1)
    if fam == "E8":
        pieces = tuple((e, -1, 1) for e in (30, 24, 20, 18, 14, 12, 8, 2))
        return 120, pieces, 1
    if fam == "F4":
        return 24, tuple((e, -1, 1) for e in (12, 8, 6, 2)), 1
    if fam == "G2":
        return 6, ((6, -1, 1), (2, -1, 1)), 1
    if fam == "3D4":
        # q^8 + q^4 + 1 = (q^12 - 1)/(q^4 - 1)
        pieces = ((12, -1, 1), (4, -1, -1), (6, -1, 1), (2, -1, 1))
        return 12, pieces, 1
    if fam == "2B2":
        return 2, ((2, +1, 1), (1, -1, 1)), 1
    if fam == "2F4":
        return 12, ((6, +1, 1), (4, -1, 1), (3, +1, 1), (1, -1, 1)), 1
    if fam == "2G2":
        return 3, ((3, +1, 1), (1, -1, 1)), 1
    raise InvalidParameters(f"no order recipe for family {fam!r}")


def _q_unit_exponent(spec: GroupSpec) -> int:
    """e with q = p^e."""
    if spec.family in SQUARED_Q_FAMILIES:
        return spec.f // 2
    if spec.family in CUBED_Q_FAMILIES:
        return spec.f // 3
    return spec.f


@lru_cache(maxsize=None)
def _factored_p_power_minus_one(p: int, m: int) -> tuple:
    """Factorization of p^m - 1 as a sorted tuple of (prime, exponent)."""
    counts: dict[int, int] = {}
    for e in sympy.divisors(m):
        for prime, mult in factorize(cyclotomic_value(e, p)).factors:
            counts[prime] = counts.get(prime, 0) + mult
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=None)
def _factored_p_power_plus_one(p: int, m: int) -> tuple:
    """Factorization of p^m + 1 via the pieces of p^(2m) - 1 outside p^m - 1."""
    counts: dict[int, int] = {}
    for e in sympy.divisors(2 * m):
        if m % e == 0:
            continue
        for prime, mult in factorize(cyclotomic_value(e, p)).factors:
            counts[prime] = counts.get(prime, 0) + mult
    return tuple(sorted(counts.items()))


def group_order_int(spec: GroupSpec) -> int:
    """|G| as a plain integer, straight from the order formula."""
    fam = spec.family
    if fam == "Alt":
        return math.factorial(spec.n) // 2
    if fam == "Sporadic":
        return SPORADIC[spec.name][0]
    if fam == "Tits":
        return TITS[1]
    q_exp, pieces, d = _order_recipe(spec)
    q = spec.q
    numerator = q**q_exp
    denominator = d
    for e, sign, mult in pieces:
        value = q**e + sign
        if mult > 0:
            numerator *= value**mult
        else:
            denominator *= value ** (-mult)
    order, remainder = divmod(numerator, denominator)
    if remainder:
        raise AssertionError(f"order formula did not divide at {spec.label}")
    return order


def group_order(spec: GroupSpec) -> FactoredInteger:
    """|G| fully factored; verified to recompose to group_order_int."""
    fam = spec.family
    if fam == "Alt":
        return factorize(math.factorial(spec.n) // 2)
    if fam == "Sporadic":
        factors = tuple(sorted(SPORADIC[spec.name][1].items()))
        return FactoredInteger(SPORADIC[spec.name][0], factors)
    if fam == "Tits":
        return FactoredInteger(TITS[1], tuple(sorted(TITS[2].items())))
    q_exp, pieces, d = _order_recipe(spec)
    unit = _q_unit_exponent(spec)
    counts: dict[int, int] = {spec.p: q_exp * unit}
    for e, sign, mult in pieces:
        if sign == -1:
            table = _factored_p_power_minus_one(spec.p, e * unit)
        else:
            table = _factored_p_power_plus_one(spec.p, e * unit)
        for prime, exponent in table:
            counts[prime] = counts.get(prime, 0) + mult * exponent
    for prime, exponent in factorize(d).factors:
        counts[prime] -= exponent
    factors = tuple(
        (prime, exponent) for prime, exponent in sorted(counts.items())
        if exponent
    )
    if any(exponent < 0 for _, exponent in factors):
        raise AssertionError(f"negative exponent in order at {spec.label}")
    value = group_order_int(spec)
    return FactoredInteger(value, factors)


def out_data(spec: GroupSpec) -> tuple[int, bool, int]:
    """(out_order, out_abelian, kk_bound) without factoring the order.

    out_abelian is True only when the outer automorphism group is
    certainly abelian; kk_bound is out_order when abelian and
    out_order // 2 otherwise, so it always dominates |K/K'| for every
    subgroup K of the outer automorphism group.
    """
    fam, n, q, f, p = spec.family, spec.n, spec.q, spec.f, spec.p
    if fam == "Alt":
        out = 4 if n == 6 else 2
        abelian = True
    elif fam == "Sporadic":
        out = SPORADIC[spec.name][2]
        abelian = True
    elif fam == "Tits":
        out, abelian = TITS[3], True
    elif fam == "A_n":
        if n == 1:
            out = math.gcd(2, q - 1) * f
            abelian = True
        else:
            d = math.gcd(n + 1, q - 1)
            out = 2 * f * d
            abelian = d <= 2
    elif fam == "2A_n":
        d = math.gcd(n + 1, q + 1)
        out = d * f
        abelian = d <= 2
    elif fam == "B_n":
        g = 2 if (n == 2 and p == 2) else 1
        out = math.gcd(2, q - 1) * f * g
        abelian = True
    elif fam == "C_n":
        out = math.gcd(2, q - 1) * f
        abelian = True
    elif fam == "D_n":
        if n == 4:
            out = math.gcd(2, q - 1) ** 2 * f * 6
            abelian = False
        elif n % 2 == 0:
            out = math.gcd(2, q - 1) ** 2 * f * 2
            abelian = q % 2 == 0
        else:
            d = math.gcd(4, q**n - 1)
            out = d * f * 2
            abelian = d <= 2
    elif fam == "2D_n":
        d = math.gcd(4, q**n + 1)
        out = d * f
        abelian = d <= 2
    elif fam == "E6":
        d = math.gcd(3, q - 1)
        out = d * f * 2
        abelian = d == 1
    elif fam == "2E6":
        d = math.gcd(3, q + 1)
        out = d * f
        abelian = d == 1
    elif fam == "E7":
        out = math.gcd(2, q - 1) * f
        abelian = True
    elif fam == "E8":
        out, abelian = f, True
    elif fam == "F4":
        out = 2 * f if p == 2 else f
        abelian = True
    elif fam == "G2":
        out = 2 * f if p == 3 else f
        abelian = True
    elif fam in ("3D4", "2B2", "2F4", "2G2"):
        out, abelian = f, True
    else:
        raise InvalidParameters(f"no outer data for family {fam!r}")
    if abelian:
        kk_bound = out
    else:
        if out % 2:
            raise AssertionError(
                f"nonabelian outer group of odd order at {spec.label}"
            )
        kk_bound = out // 2
    return out, abelian, kk_bound


@dataclass(frozen=True)
class GroupFacts:
    """Order and outer-automorphism data for one catalog point."""

    spec: GroupSpec
    order: FactoredInteger
    out_order: int
    out_abelian: bool
    kk_bound: int

    def to_json(self) -> dict:
        spec = self.spec
        return {
            "family": spec.family,
            "label": spec.label,
            "n": spec.n,
            "p": spec.p,
            "f": spec.f,
            "q": spec.q,
            "name": spec.name,
            "is_simple": spec.is_simple,
            "nonsimple_reason": spec.nonsimple_reason,
            "order": str(self.order.value),
            "order_factored": [
                [prime, exponent] for prime, exponent in self.order.factors
            ],
            "out_order": self.out_order,
            "out_abelian": self.out_abelian,
            "kk_bound": self.kk_bound,
        }


def group_facts(spec: GroupSpec) -> GroupFacts:
    out, abelian, kk_bound = out_data(spec)
    return GroupFacts(
        spec=spec,
        order=group_order(spec),
        out_order=out,
        out_abelian=abelian,
        kk_bound=kk_bound,
    )


def out_order(spec: GroupSpec) -> GroupFacts:
    """Alias for group_facts: the full record around the out-order."""
    return group_facts(spec)


def prime_powers_up_to(bound: int) -> list[int]:
    values = []
    for p in sympy.primerange(2, bound + 1):
        power = p
        while power <= bound:
            values.append(power)
            power *= p
    return sorted(values)


def enumerate_specs(
    family: str, n_max: int | None = None, q_max: int | None = None
) -> list[GroupSpec]:
    """All catalog points of a family within the given bounds.

    Degenerate points that satisfy the family constraints (such as
    A_1(2)) are included, flagged non-simple; points outside the
    constraints (such as 2B2 at q = 2) are not produced.
    """
    if family not in FAMILIES:
        raise InvalidParameters(f"unknown family {family!r}")
    if family == "Sporadic":
        return [GroupSpec("Sporadic", name=name) for name in sorted(SPORADIC)]
    if family == "Tits":
        return [GroupSpec("Tits")]
    if family == "Alt":
        if n_max is None:
            raise InvalidParameters("Alt enumeration requires n_max")
        return [GroupSpec("Alt", n=n) for n in range(5, n_max + 1)]
    if q_max is None:
        raise InvalidParameters("Lie enumeration requires q_max")
    specs = []
    if family in RANKED_FAMILIES:
        if n_max is None:
            raise InvalidParameters(f"{family} enumeration requires n_max")
        ranks = range(MIN_RANK[family], n_max + 1)
    else:
        ranks = (None,)
    for q in prime_powers_up_to(q_max):
        p, e = sympy.factorint(q).popitem()
        if family in ("2B2", "2F4"):
            if p != 2 or e % 2 == 0 or e < 3:
                continue
        elif family == "2G2":
            if p != 3 or e % 2 == 0 or e < 3:
                continue
        if family in SQUARED_Q_FAMILIES:
            f = 2 * e
        elif family in CUBED_Q_FAMILIES:
            f = 3 * e
        else:
            f = e
        for n in ranks:
            if family == "2A_n" and n == 2 and q == 2:
                continue
            specs.append(GroupSpec(family, n=n, p=int(p), f=f))
    specs.sort(key=lambda s: (s.n or 0, s.q))
    return specs
