"""Transcription of the published case-by-case analysis that this package
audits, together with recomputation of every printed quantity.

Each registry entry records verbatim what the published analysis prints for
one subcase: the outer-automorphism group order (sometimes only stated as an
upper bound), the abelian-subgroup cap it implies, whether the text flags
Out(G) as nonabelian, and every integer factorization it displays.  Nothing
here is trusted: :func:`verify_printed_factorizations` and
:func:`out_order_discrepancies` recompute all of it from scratch and return
exactly the places where the printed text and the recomputed truth disagree.

Printed values come in two shapes:

- a power expression ``base^exponent +- 1`` together with the factor list
  the text displays for it;
- an order literal (``base is None``), meaning the text factors the group
  order of the subcase itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..numtheory.factorization import FactoredInteger, factorize
from ..simple_groups.catalog import (
    RANKED_FAMILIES,
    GroupSpec,
    group_order_int,
    out_data,
)


@dataclass(frozen=True)
class PrintedValue:
    """One factorization displayed by the published analysis."""

    printed_factors: tuple  # factors exactly as printed (not nec. prime)
    base: int | None = None  # None: the printed value is the group order
    exponent: int = 0
    sign: int = 0  # -1 / +1 for base^exponent -+ 1

    def expression(self, spec_label: str | None = None) -> str:
        if self.base is None:
            return f"|{spec_label or 'G'}|"
        s = "+" if self.sign > 0 else "-"
        return f"{self.base}^{self.exponent}{s}1"

    def printed_product(self) -> int:
        product = 1
        for factor in self.printed_factors:
            product *= factor
        return product

    def true_value(self, spec: GroupSpec | None) -> int | None:
        if self.base is not None:
            return self.base**self.exponent + self.sign
        if spec is not None:
            return group_order_int(spec)
        return None


@dataclass(frozen=True)
class PublishedSubcase:
    """Everything the published analysis prints for one subcase."""

    subcase_id: str
    family: str
    n: int | None = None
    p: int | None = None
    f: int | None = None
    printed_out: int | None = None
    out_is_bound: bool = False
    printed_kk: int | None = None
    kk_is_bound: bool = False
    printed_nonabelian: bool = False
    values: tuple = field(default_factory=tuple)
    note: str = ""

    def spec(self) -> GroupSpec | None:
        """The concrete parameter point, or None when parametric/vacuous."""
        if self.family == "Alt":
            if self.n is None:
                return None
            return GroupSpec(family="Alt", n=self.n)
        if self.p is None or self.f is None:
            return None
        if self.family in RANKED_FAMILIES and self.n is None:
            return None
        return GroupSpec(family=self.family, n=self.n, p=self.p, f=self.f)


def _v(base: int, exponent: int, sign: int, *factors: int) -> PrintedValue:
    return PrintedValue(
        printed_factors=tuple(factors), base=base, exponent=exponent, sign=sign
    )


def _lit(*factors: int) -> PrintedValue:
    return PrintedValue(printed_factors=tuple(factors))


def _case(
    subcase_id: str,
    family: str,
    n: int | None = None,
    p: int | None = None,
    f: int | None = None,
    *,
    out: int | None = None,
    out_bound: bool = False,
    kk: int | None = None,
    kk_bound: bool = False,
    nonabelian: bool = False,
    values: tuple = (),
    note: str = "",
) -> PublishedSubcase:
    return PublishedSubcase(
        subcase_id=subcase_id,
        family=family,
        n=n,
        p=p,
        f=f,
        printed_out=out,
        out_is_bound=out_bound,
        printed_kk=kk,
        kk_is_bound=kk_bound,
        printed_nonabelian=nonabelian,
        values=values,
        note=note,
    )


REGISTRY: tuple = (
    # ---- linear groups of rank 1 --------------------------------------
    _case(
        "A_1:q-even:f=1", "A_n", 1, 2, 1,
        note="parameter point excluded: the group is solvable",
    ),
    _case(
        "A_1:q-even:f=2", "A_n", 1, 2, 2, out=2,
        values=(_lit(4, 3, 5),),
    ),
    _case(
        "A_1:q-even:f=6", "A_n", 1, 2, 6, out=6,
        values=(_v(2, 6, -1, 9, 7), _v(2, 6, +1, 5, 13)),
    ),
    _case(
        "A_1:q-even:f=3", "A_n", 1, 2, 3, out=3,
        values=(_v(2, 3, -1, 7), _v(2, 3, +1, 9)),
    ),
    _case("A_1:q-odd:f=1", "A_n", 1, None, 1, out=2),
    _case("A_1:q-odd:f=2", "A_n", 1, None, 2, out=4, out_bound=True),
    _case(
        "A_1:q-odd:p=3,f=4", "A_n", 1, 3, 4, out=8, out_bound=True,
        values=(_v(3, 4, -1, 16, 5), _v(3, 4, +1, 2, 41)),
        note="text picks the prime 41 and the unipotent square 9",
    ),
    # ---- alternating groups -------------------------------------------
    _case("Alt:general", "Alt", out=2, note="applies for degree != 6"),
    _case(
        "Alt:n=6", "Alt", 6, out=4,
        values=(_lit(8, 9, 5),),
        note="text pairs the squares 4 and 9",
    ),
    # ---- linear groups, branch keyed by f*n ----------------------------
    _case(
        "A_n:fn=2", "A_n", 2, None, 1,
        note="uses H1 = p^2 and a prime L | p^3-1 with L >= 6 or L^2 >= 6",
    ),
    _case(
        "A_n:fn=3:n=3", "A_n", 3, 2, 1, out=2,
        values=(_v(2, 3, -1, 7), _v(2, 4, -1, 3, 5)),
    ),
    _case(
        "A_n:fn=4:n=2", "A_n", 2, 2, 2, out=12, kk=6, nonabelian=True,
        values=(_v(2, 4, -1, 3, 5), _v(2, 6, -1, 7, 9)),
    ),
    _case(
        "A_n:fn=4:n=4", "A_n", 4, 2, 1, out=2,
        values=(_v(2, 4, -1, 3, 5), _v(2, 5, -1, 31)),
    ),
    _case(
        "A_n:fn=6:n=2", "A_n", 2, 2, 3, out=6,
        values=(_v(2, 6, -1, 9, 7), _v(2, 9, -1, 7, 73)),
    ),
    _case(
        "A_n:fn=6:n=3", "A_n", 3, 2, 2, out=4,
        values=(_v(2, 6, -1, 9, 7), _v(2, 8, -1, 3, 5, 17)),
    ),
    _case(
        "A_n:fn=6:n=6", "A_n", 6, 2, 1, out=2,
        values=(_v(2, 6, -1, 9, 7), _v(2, 7, -1, 127)),
    ),
    _case(
        "A_n:fn=8:n=2", "A_n", 2, 2, 4, out=24, kk=12, nonabelian=True,
        values=(_v(2, 8, -1, 3, 5, 17), _v(2, 12, -1, 9, 5, 7, 13)),
    ),
    _case(
        "A_n:fn=8:n=4", "A_n", 4, 2, 2, out=4,
        values=(_v(2, 8, -1, 3, 5, 17), _v(2, 10, -1, 3, 11, 31)),
    ),
    _case(
        "A_n:fn=8:n=8", "A_n", 8, 2, 1, out=2,
        values=(_v(2, 8, -1, 3, 5, 17), _v(2, 9, -1, 7, 73)),
    ),
    _case(
        "A_n:fn=10:n=2", "A_n", 2, 2, 5, out=10,
        values=(_v(2, 10, -1, 3, 11, 31), _v(2, 15, -1, 7, 31, 151)),
    ),
    _case(
        "A_n:fn=10:n=5", "A_n", 5, 2, 2, out=12,
        values=(_v(2, 10, -1, 3, 11, 31), _v(2, 12, -1, 9, 5, 7, 13)),
    ),
    _case(
        "A_n:fn=10:n=10", "A_n", 10, 2, 1, out=2,
        values=(_v(2, 10, -1, 3, 11, 31), _v(2, 11, -1, 23, 89)),
    ),
    _case(
        "A_n:fn=12:n=2", "A_n", 2, 2, 6, out=36, kk=18, nonabelian=True,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 18, -1, 27, 7, 19, 73)),
    ),
    _case(
        "A_n:fn=12:n=3", "A_n", 3, 2, 4, out=8,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 16, -1, 3, 5, 17, 257)),
    ),
    _case(
        "A_n:fn=12:n=4", "A_n", 4, 2, 3, out=6,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 15, -1, 7, 31, 151)),
    ),
    _case(
        "A_n:fn=12:n=6", "A_n", 6, 2, 2, out=4,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 14, -1, 3, 43, 127)),
    ),
    _case(
        "A_n:fn=12:n=12", "A_n", 12, 2, 1, out=2,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 13, -1, 7, 31, 8191)),
        note="printed factor list for 2^13-1 belongs to 2^20-1",
    ),
    _case(
        "A_n:fn=18:n=2", "A_n", 2, 2, 9, out=18,
        values=(_v(2, 18, -1, 27, 7, 19, 73), _v(2, 27, -1, 7, 73, 262654)),
        note="last printed factor of 2^27-1 is a typo for 262657",
    ),
    _case(
        "A_n:fn=18:n=3", "A_n", 3, 2, 6, out=12,
        values=(
            _v(2, 18, -1, 27, 7, 19, 73),
            _v(2, 24, -1, 9, 5, 7, 13, 17, 241),
        ),
    ),
    _case(
        "A_n:fn=18:n=6", "A_n", 6, 2, 3, out=42,
        values=(_v(2, 18, -1, 27, 7, 19, 73), _v(2, 21, -1, 49, 127, 337)),
    ),
    _case(
        "A_n:fn=18:n=9", "A_n", 9, 2, 2, out=4,
        values=(
            _v(2, 18, -1, 27, 7, 19, 73),
            _v(2, 20, -1, 3, 25, 11, 31, 41),
        ),
    ),
    _case(
        "A_n:fn=18:n=18", "A_n", 18, 2, 1, out=2,
        values=(_v(2, 18, -1, 27, 7, 19, 73), _v(2, 19, -1, 524287)),
    ),
    _case(
        "A_n:fn=20:n=2", "A_n", 2, 2, 10, out=60,
        values=(
            _v(2, 20, -1, 3, 25, 11, 31, 41),
            _v(2, 30, -1, 9, 7, 11, 31, 151, 331),
        ),
    ),
    _case(
        "A_n:fn=20:n=4", "A_n", 4, 2, 5, out=10,
        values=(
            _v(2, 20, -1, 3, 25, 11, 31, 41),
            _v(2, 25, -1, 31, 601, 1801),
        ),
    ),
    _case(
        "A_n:fn=20:n=5", "A_n", 5, 2, 4, out=8,
        values=(
            _v(2, 20, -1, 3, 25, 11, 31, 41),
            _v(2, 24, -1, 9, 5, 7, 13, 17, 241),
        ),
        note="printed gcd(6, q-1) = 1 is wrong at q = 16; true |Out| is 24",
    ),
    _case(
        "A_n:fn=20:n=10", "A_n", 10, 2, 2, out=4,
        values=(
            _v(2, 20, -1, 3, 25, 11, 31, 41),
            _v(2, 22, -1, 3, 23, 89, 683),
        ),
    ),
    _case(
        "A_n:fn=20:n=20", "A_n", 20, 2, 1, out=2,
        values=(
            _v(2, 20, -1, 3, 25, 11, 31, 41),
            _v(2, 21, -1, 49, 127, 337),
        ),
    ),
    _case(
        "A_n:fn=4:n=2:p=3", "A_n", 2, 3, 2, out=4,
        values=(_v(3, 4, -1, 5, 16), _v(3, 6, -1, 8, 7, 13)),
    ),
    _case(
        "A_n:fn=4:n=4:p=3", "A_n", 4, 3, 1, out=2,
        values=(_v(3, 4, -1, 5, 16), _v(3, 5, -1, 2, 11, 11)),
    ),
    _case(
        "A_n:fn=6:n=2:p=3", "A_n", 2, 3, 3, out=6,
        values=(_v(3, 6, -1, 8, 7, 13), _v(3, 9, -1, 2, 13, 757)),
    ),
    _case(
        "A_n:fn=6:n=3:p=3", "A_n", 3, 3, 2, out=16, kk=8, nonabelian=True,
        values=(_v(3, 6, -1, 8, 7, 13), _v(3, 8, -1, 32, 5, 41)),
    ),
    _case(
        "A_n:fn=6:n=6:p=3", "A_n", 6, 3, 1, out=2,
        values=(_v(3, 6, -1, 8, 7, 13), _v(3, 7, -1, 2, 1093)),
    ),
    _case(
        "A_n:fn=6:n=2:p=5", "A_n", 2, 5, 3, out=6,
        values=(_v(5, 6, -1, 8, 9, 7, 31), _v(5, 9, -1, 4, 19, 31, 829)),
    ),
    _case(
        "A_n:fn=6:n=3:p=5", "A_n", 3, 5, 2, out=16, nonabelian=True,
        values=(_v(5, 6, -1, 8, 9, 7, 31), _v(5, 8, -1, 32, 3, 13, 313)),
    ),
    _case(
        "A_n:fn=6:n=6:p=5", "A_n", 6, 5, 1, out=2,
        values=(_v(5, 6, -1, 8, 9, 7, 31), _v(5, 7, -1, 4, 19531)),
    ),
    # ---- linear groups, branch keyed by f*(n+1) ------------------------
    _case(
        "A_n:f(n+1)=4:n+1=4", "A_n", 3, 2, 1, out=2,
        values=(_v(2, 3, -1, 7), _v(2, 4, -1, 3, 5)),
    ),
    _case(
        "A_n:f(n+1)=6:n+1=3", "A_n", 2, 2, 2, out=12, kk=6, nonabelian=True,
        values=(_v(2, 4, -1, 3, 5), _v(2, 6, -1, 7, 9)),
    ),
    _case(
        "A_n:f(n+1)=6:n+1=6", "A_n", 5, 2, 1, out=2,
        values=(_v(2, 4, -1, 3, 5), _v(2, 5, -1, 31)),
    ),
    _case(
        "A_n:f(n+1)=12:n+1=3", "A_n", 2, 2, 4, out=24, kk=12,
        nonabelian=True,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 8, -1, 3, 5, 17)),
    ),
    _case(
        "A_n:f(n+1)=12:n+1=4", "A_n", 3, 2, 3, out=6,
        values=(_v(2, 9, -1, 7, 73), _v(2, 12, -1, 9, 5, 7, 13)),
    ),
    _case(
        "A_n:f(n+1)=12:n+1=6", "A_n", 5, 2, 2, out=4,
        values=(_v(2, 10, -1, 3, 11, 31), _v(2, 12, -1, 9, 5, 7, 13)),
        note=(
            "printed |Out| = 4 contradicts the same group's other branch "
            "(gcd(6, 3) = 3 gives 12)"
        ),
    ),
    _case(
        "A_n:f(n+1)=12:n+1=12", "A_n", 11, 2, 1, out=2,
        values=(_v(2, 11, -1, 23, 89), _v(2, 12, -1, 9, 5, 7, 13)),
    ),
    _case(
        "A_n:f(n+1)=4:n+1=4:p=3", "A_n", 3, 3, 1, out=4,
        values=(_v(3, 3, -1, 2, 13), _v(3, 4, -1, 16, 5)),
    ),
    _case(
        "A_n:f(n+1)=6:n+1=3:p=3", "A_n", 2, 3, 2, out=4,
        values=(_v(3, 4, -1, 16, 5), _v(3, 6, -1, 8, 7, 13)),
    ),
    _case(
        "A_n:f(n+1)=6:n+1=6:p=3", "A_n", 5, 3, 1, out=4,
        values=(_v(3, 5, -1, 2, 11, 11), _v(3, 6, -1, 8, 7, 13)),
    ),
    # ---- odd-characteristic orthogonal groups of rank >= 2 -------------
    _case(
        "B_n:f(2n-2)=2", "B_n", 2, None, 1,
        note="parametric: argument uses p^2-1 and p^4-1 generically",
    ),
    _case(
        "B_n:f(2n-2)=6:2n-2=2", "B_n", 2, 2, 3, out=6, out_bound=True,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 6, -1, 7, 9)),
        note="text picks the primes 13 and 7",
    ),
    _case(
        "B_n:f(2n-2)=6:2n-2=3", "B_n", out=4, out_bound=True,
        values=(_v(2, 10, -1, 3, 11, 31), _v(2, 6, -1, 7, 9)),
        note="vacuous: no integer rank satisfies 2n-2 = 3",
    ),
    _case(
        "B_n:f(2n)=6:n=3", "B_n", 3, 2, 1, out=2, out_bound=True,
        values=(_v(2, 6, -1, 7, 9), _v(2, 4, -1, 3, 5)),
        note="text picks the primes 7 and 5",
    ),
    # ---- symplectic groups ---------------------------------------------
    _case(
        "C_n:general", "C_n",
        note="no printed subcases; witness bounds derived independently",
    ),
    # ---- even-dimensional orthogonal groups, rank >= 5 ------------------
    _case(
        "D_n:2n-4=6:f=1", "D_n", 5, 2, 1, out=8, out_bound=True,
        values=(_v(2, 6, -1, 7, 9),),
    ),
    _case(
        "D_n:2n-4=6:f=2", "D_n", 5, 2, 2, out=16, out_bound=True,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 16, -1, 3, 5, 17, 257)),
        note="text picks the primes 17 and 257",
    ),
    _case(
        "D_n:2n-4=12:f=1", "D_n", 8, 2, 1, out=8, out_bound=True,
        values=(_v(2, 12, -1, 9, 5, 7, 13),),
    ),
    # ---- triality-symmetric orthogonal groups of rank 4 -----------------
    _case(
        "D_4:q-even:f=1", "D_n", 4, 2, 1, out=6, out_bound=True,
        kk=3, kk_bound=True, nonabelian=True,
        values=(_v(2, 6, -1, 9, 7), _v(2, 4, -1, 3, 5)),
        note="text picks 9 and 5",
    ),
    _case(
        "D_4:q-even:f=3", "D_n", 4, 2, 3, out=18, out_bound=True,
        kk=9, kk_bound=True,
        values=(_v(2, 18, -1, 7, 7, 19, 73), _v(2, 12, -1, 9, 5, 7, 13)),
        note=(
            "text picks 19 and 73; first printed factor of 2^18-1 is a "
            "typo for 27"
        ),
    ),
    _case(
        "D_4:q-odd:p=3", "D_n", 4, 3, 1, kk=12, kk_bound=True,
        values=(_v(3, 6, -1, 8, 7, 13), _v(3, 4, -1, 16, 5)),
        note="text picks 13 and 25",
    ),
    _case(
        "D_4:q-odd:p=5", "D_n", 4, 5, 1, kk=12, kk_bound=True,
        values=(_v(5, 6, -1, 8, 9, 7, 31), _v(5, 4, -1, 16, 3, 13)),
    ),
    # ---- unitary groups, branch keyed by f*n/2 --------------------------
    _case(
        "2A_n:fn/2=2", "2A_n", 2, None, 2,
        note="uses H1 = p^2 and a prime L | p^3+1 with L >= 6",
    ),
    _case(
        "2A_n:fn/2=3:n=3", "2A_n", 3, 2, 2, out=2,
        values=(_v(2, 3, +1, 9), _v(2, 4, -1, 3, 5)),
    ),
    _case(
        "2A_n:fn/2=4:n=2", "2A_n", 2, 2, 4, out=4,
        values=(_v(2, 4, -1, 3, 5), _v(2, 6, +1, 5, 13)),
    ),
    _case(
        "2A_n:fn/2=4:n=4", "2A_n", 4, 2, 2, out=2,
        values=(_v(2, 4, -1, 3, 5), _v(2, 5, +1, 3, 11)),
    ),
    _case(
        "2A_n:fn/2=6:n=2", "2A_n", 2, 2, 6, out=18, kk=9, nonabelian=True,
        values=(_v(2, 6, -1, 7, 9), _v(2, 9, +1, 27, 19)),
        note="nonabelian Out checked computationally (GAP)",
    ),
    _case(
        "2A_n:fn/2=6:n=3", "2A_n", 3, 2, 4, out=4,
        values=(_v(2, 6, +1, 5, 13), _v(2, 8, -1, 3, 5, 17)),
    ),
    _case(
        "2A_n:fn/2=6:n=6", "2A_n", 6, 2, 2, out=2,
        values=(_v(2, 6, -1, 7, 9), _v(2, 7, +1, 3, 43)),
    ),
    _case(
        "2A_n:fn/2=8:n=2", "2A_n", 2, 2, 8, out=8,
        values=(_v(2, 8, -1, 3, 5, 17), _v(2, 12, +1, 17, 241)),
    ),
    _case(
        "2A_n:fn/2=8:n=4", "2A_n", 4, 2, 4, out=20,
        values=(_v(2, 8, -1, 3, 5, 17), _v(2, 10, +1, 25, 41)),
    ),
    _case(
        "2A_n:fn/2=8:n=8", "2A_n", 8, 2, 2, out=6,
        values=(_v(2, 8, -1, 3, 5, 17), _v(2, 9, +1, 27, 19)),
    ),
    _case(
        "2A_n:fn/2=10:n=2", "2A_n", 2, 2, 10, out=30,
        values=(_v(2, 10, -1, 3, 11, 31), _v(2, 15, +1, 9, 11, 331)),
    ),
    _case(
        "2A_n:fn/2=10:n=5", "2A_n", 5, 2, 4, out=4,
        values=(_v(2, 10, +1, 25, 41), _v(2, 12, -1, 9, 5, 7, 13)),
    ),
    _case(
        "2A_n:fn/2=10:n=10", "2A_n", 10, 2, 2, out=2,
        values=(_v(2, 10, -1, 3, 11, 31), _v(2, 11, +1, 3, 683)),
    ),
    _case(
        "2A_n:fn/2=12:n=2", "2A_n", 2, 2, 12, out=12,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 18, +1, 5, 13, 37, 109)),
    ),
    _case(
        "2A_n:fn/2=12:n=3", "2A_n", 3, 2, 8, out=8,
        values=(_v(2, 12, +1, 17, 241), _v(2, 16, -1, 3, 5, 17, 257)),
    ),
    _case(
        "2A_n:fn/2=12:n=4", "2A_n", 4, 2, 6, out=6,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 15, +1, 9, 11, 331)),
    ),
    _case(
        "2A_n:fn/2=12:n=6", "2A_n", 6, 2, 4, out=4,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 14, +1, 5, 29, 113)),
    ),
    _case(
        "2A_n:fn/2=12:n=12", "2A_n", 12, 2, 2, out=2,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 13, +1, 3, 2731)),
    ),
    _case(
        "2A_n:fn/2=18:n=2", "2A_n", 2, 2, 18, out=54,
        values=(_v(2, 18, -1, 27, 7, 19, 73), _v(2, 27, +1, 81, 19, 87211)),
    ),
    _case(
        "2A_n:fn/2=18:n=3", "2A_n", 3, 2, 12, out=12,
        values=(
            _v(2, 18, +1, 5, 13, 37, 109),
            _v(2, 24, -1, 9, 5, 7, 13, 17, 241),
        ),
    ),
    _case(
        "2A_n:fn/2=18:n=6", "2A_n", 6, 2, 6, out=6,
        values=(_v(2, 18, -1, 27, 7, 19, 73), _v(2, 21, +1, 9, 43, 5419)),
    ),
    _case(
        "2A_n:fn/2=18:n=9", "2A_n", 9, 2, 4, out=20,
        values=(
            _v(2, 18, +1, 5, 13, 37, 109),
            _v(2, 20, -1, 3, 25, 11, 31, 41),
        ),
    ),
    _case(
        "2A_n:fn/2=18:n=18", "2A_n", 18, 2, 2, out=2,
        values=(_v(2, 18, -1, 27, 7, 19, 73), _v(2, 19, +1, 3, 174763)),
    ),
    _case(
        "2A_n:fn/2=20:n=2", "2A_n", 2, 2, 20, out=20,
        values=(
            _v(2, 20, -1, 3, 25, 11, 31, 41),
            _v(2, 30, +1, 25, 13, 41, 61, 1321),
        ),
    ),
    _case(
        "2A_n:fn/2=20:n=4", "2A_n", 4, 2, 10, out=10,
        values=(
            _v(2, 20, -1, 3, 25, 11, 31, 41),
            _v(2, 25, +1, 3, 11, 251, 4051),
        ),
    ),
    _case(
        "2A_n:fn/2=20:n=5", "2A_n", 5, 2, 8, out=8,
        values=(
            _v(2, 20, +1, 17, 61681),
            _v(2, 24, -1, 9, 5, 7, 13, 17, 241),
        ),
    ),
    _case(
        "2A_n:fn/2=20:n=10", "2A_n", 10, 2, 4, out=4,
        values=(
            _v(2, 20, -1, 3, 25, 11, 31, 41),
            _v(2, 22, +1, 5, 397, 2113),
        ),
    ),
    _case(
        "2A_n:fn/2=20:n=20", "2A_n", 20, 2, 2, out=12,
        values=(
            _v(2, 20, -1, 3, 25, 11, 31, 41),
            _v(2, 21, +1, 9, 43, 5419),
        ),
        note="printed |Out| = 12 is wrong: gcd(21, 3) * 2 = 6",
    ),
    _case(
        "2A_n:fn/2=4:n=2:p=3", "2A_n", 2, 3, 4, out=4,
        values=(_v(3, 4, -1, 5, 16), _v(3, 6, +1, 2, 5, 73)),
    ),
    _case(
        "2A_n:fn/2=4:n=4:p=3", "2A_n", 4, 3, 2, out=2,
        values=(_v(3, 4, -1, 5, 16), _v(3, 5, +1, 4, 61)),
    ),
    _case(
        "2A_n:fn/2=6:n=2:p=3", "2A_n", 2, 3, 6, out=6,
        values=(_v(3, 6, -1, 8, 7, 13), _v(3, 9, +1, 4, 7, 19, 37)),
    ),
    _case(
        "2A_n:fn/2=6:n=3:p=3", "2A_n", 3, 3, 4, out=8,
        values=(_v(3, 6, +1, 2, 5, 73), _v(3, 8, -1, 32, 5, 41)),
    ),
    _case(
        "2A_n:fn/2=6:n=6:p=3", "2A_n", 6, 3, 2, out=2,
        values=(_v(3, 6, -1, 8, 7, 13), _v(3, 7, +1, 4, 547)),
    ),
    _case(
        "2A_n:fn/2=6:n=2:p=5", "2A_n", 2, 5, 6, out=18,
        values=(_v(5, 6, -1, 8, 9, 7, 31), _v(5, 9, +1, 2, 27, 7, 5167)),
    ),
    _case(
        "2A_n:fn/2=6:n=3:p=5", "2A_n", 3, 5, 4, out=8,
        values=(_v(5, 6, +1, 2, 13, 601), _v(5, 8, -1, 32, 3, 13, 313)),
    ),
    _case(
        "2A_n:fn/2=6:n=6:p=5", "2A_n", 6, 5, 2, out=2,
        values=(_v(5, 6, -1, 8, 9, 7, 31), _v(5, 7, +1, 2, 3, 29, 449)),
    ),
    # ---- unitary groups, branch keyed by f*(n+1)/2 ----------------------
    _case(
        "2A_n:f(n+1)/2=4:n+1=4", "2A_n", 3, 2, 2, out=2,
        values=(_v(2, 3, +1, 9), _v(2, 4, -1, 3, 5)),
    ),
    _case(
        "2A_n:f(n+1)/2=6:n+1=3", "2A_n", 2, 2, 4, out=4,
        values=(_v(2, 4, -1, 3, 5), _v(2, 6, +1, 5, 13)),
    ),
    _case(
        "2A_n:f(n+1)/2=6:n+1=6", "2A_n", 5, 2, 2, out=6,
        values=(_v(2, 5, +1, 3, 11), _v(2, 6, -1, 7, 9)),
    ),
    _case(
        "2A_n:f(n+1)/2=10:n+1=5", "2A_n", 4, 2, 4, out=20,
        values=(_v(2, 8, -1, 3, 5, 17), _v(2, 10, +1, 25, 41)),
    ),
    _case(
        "2A_n:f(n+1)/2=10:n+1=10", "2A_n", 9, 2, 2, out=2,
        values=(_v(2, 9, +1, 27, 19), _v(2, 10, -1, 3, 11, 31)),
    ),
    _case(
        "2A_n:f(n+1)/2=12:n+1=3", "2A_n", 2, 2, 8, out=8,
        values=(_v(2, 12, +1, 17, 241), _v(2, 8, -1, 3, 5, 17)),
    ),
    _case(
        "2A_n:f(n+1)/2=12:n+1=4", "2A_n", 3, 2, 6, out=6,
        values=(_v(2, 9, +1, 27, 19), _v(2, 12, -1, 9, 5, 7, 13)),
    ),
    _case(
        "2A_n:f(n+1)/2=12:n+1=6", "2A_n", 5, 2, 4, out=4,
        values=(_v(2, 10, +1, 25, 41), _v(2, 12, -1, 9, 5, 7, 13)),
    ),
    _case(
        "2A_n:f(n+1)/2=12:n+1=12", "2A_n", 11, 2, 2, out=6,
        values=(_v(2, 11, +1, 3, 683), _v(2, 12, -1, 9, 5, 7, 13)),
    ),
    _case(
        "2A_n:f(n+1)/2=18:n+1=3", "2A_n", 2, 2, 12, out=12,
        values=(_v(2, 12, -1, 9, 5, 7, 13), _v(2, 18, +1, 5, 13, 37, 109)),
    ),
    _case(
        "2A_n:f(n+1)/2=18:n+1=6", "2A_n", 5, 2, 6, out=18,
        values=(_v(2, 15, +1, 9, 11, 331), _v(2, 18, -1, 27, 7, 19, 73)),
    ),
    _case(
        "2A_n:f(n+1)/2=18:n+1=9", "2A_n", 8, 2, 4, out=4,
        values=(
            _v(2, 16, -1, 3, 5, 17, 257),
            _v(2, 18, +1, 5, 13, 37, 109),
        ),
    ),
    _case(
        "2A_n:f(n+1)/2=18:n+1=18", "2A_n", 17, 2, 2, out=6,
        values=(_v(2, 17, +1, 3, 43691), _v(2, 18, -1, 27, 7, 19, 73)),
    ),
    _case(
        "2A_n:f(n+1)/2=4:n+1=4:p=3", "2A_n", 3, 3, 2, out=8, kk=4,
        nonabelian=True,
        values=(_v(3, 3, +1, 4, 7), _v(3, 4, -1, 16, 5)),
        note="nonabelian Out checked computationally (GAP)",
    ),
    _case(
        "2A_n:f(n+1)/2=6:n+1=3:p=3", "2A_n", 2, 3, 4, out=4,
        values=(_v(3, 4, -1, 16, 5), _v(3, 6, +1, 2, 5, 73)),
    ),
    _case(
        "2A_n:f(n+1)/2=6:n+1=6:p=3", "2A_n", 5, 3, 2, out=4,
        values=(_v(3, 5, +1, 4, 61), _v(3, 6, -1, 8, 7, 13)),
    ),
    _case(
        "2A_n:f(n+1)/2=6:n+1=3:p=5", "2A_n", 2, 5, 4, out=4,
        values=(_v(5, 4, -1, 16, 3, 13), _v(5, 6, +1, 2, 13, 601)),
    ),
    _case(
        "2A_n:f(n+1)/2=6:n+1=6:p=5", "2A_n", 5, 5, 2, out=12,
        values=(_v(5, 5, +1, 2, 3, 521), _v(5, 6, -1, 8, 7, 9, 31)),
    ),
    # ---- twisted even-dimensional orthogonal groups ---------------------
    _case(
        "2D_n:general", "2D_n",
        note=(
            "published prose for even q is fragmentary; the uniform bound "
            "|Out| <= 4f is applied throughout"
        ),
    ),
    _case(
        "2D_n:f(n-1)=6:p=3", "2D_n", 4, 3, 2, out=4,
        values=(_v(3, 6, -1, 8, 7, 13), _v(3, 4, -1, 16, 5)),
    ),
    _case(
        "2D_n:f(n-1)=6:p=5", "2D_n", 4, 5, 2, out=4,
        values=(_v(5, 6, -1, 8, 9, 7, 31), _v(5, 4, -1, 16, 3, 13)),
    ),
    _case(
        "2D_n:f(n-2)=4:p=3", "2D_n", 4, 3, 2, out=4,
        values=(_v(3, 6, -1, 8, 7, 13), _v(3, 4, -1, 5, 16)),
    ),
    # ---- exceptional groups ---------------------------------------------
    _case(
        "G2:p=2:f=1", "G2", None, 2, 1,
        values=(_v(2, 6, -1, 7, 9),),
        note="parameter point excluded: the group is not simple",
    ),
    _case(
        "G2:p=2:f=3", "G2", None, 2, 3,
        values=(_v(2, 6, -1, 7, 9),),
        note=(
            "text writes the exponent 6 where 2 is meant (q^2-1 at q = 8); "
            "the displayed value 63 = 7 * 9 is itself correct"
        ),
    ),
    _case(
        "3D4:p=2:f=3", "3D4", None, 2, 3,
        values=(_v(2, 6, -1, 7, 9),),
    ),
)

_REGISTRY_BY_ID = {entry.subcase_id: entry for entry in REGISTRY}
if len(_REGISTRY_BY_ID) != len(REGISTRY):
    raise AssertionError("duplicate subcase ids in registry")


def subcase(subcase_id: str) -> PublishedSubcase:
    return _REGISTRY_BY_ID[subcase_id]


def lookup_subcases(spec: GroupSpec) -> list:
    """Ids of every registry entry covering the given parameter point.

    Entries with ``None`` in a parameter slot are parametric and match any
    value of that slot.
    """
    out = []
    for entry in REGISTRY:
        if entry.family != spec.family:
            continue
        if entry.n is not None and entry.n != spec.n:
            continue
        if entry.p is not None and entry.p != spec.p:
            continue
        if entry.f is not None and entry.f != spec.f:
            continue
        out.append(entry.subcase_id)
    return out


@dataclass(frozen=True)
class FactorizationMismatch:
    """A printed factor list that does not recompose to its value."""

    subcase_id: str
    value_index: int
    expression: str
    printed_factors: tuple
    printed_product: int
    true_value: int
    corrected: FactoredInteger

    def describe_printed(self) -> str:
        factors = " * ".join(str(x) for x in self.printed_factors)
        return f"{self.expression} = {factors}"


def verify_printed_factorizations() -> list:
    """Recompose every printed factor list; return the mismatches.

    A printed list is wrong when the product of its factors differs from
    the exact value of the expression it is attached to.  Each mismatch
    carries the true value's verified prime factorization.
    """
    mismatches = []
    for entry in REGISTRY:
        spec = entry.spec()
        label = spec.label if spec is not None else None
        for index, pv in enumerate(entry.values):
            true_value = pv.true_value(spec)
            if true_value is None:
                continue
            product = pv.printed_product()
            if product != true_value:
                mismatches.append(
                    FactorizationMismatch(
                        subcase_id=entry.subcase_id,
                        value_index=index,
                        expression=pv.expression(label),
                        printed_factors=pv.printed_factors,
                        printed_product=product,
                        true_value=true_value,
                        corrected=factorize(true_value),
                    )
                )
    return mismatches


@dataclass(frozen=True)
class OutDiscrepancy:
    """A printed Out(G) quantity that disagrees with recomputation."""

    subcase_id: str
    label: str
    quantity: str  # "out_order" | "kk_bound" | "nonabelian"
    printed: int
    computed: int
    printed_as_bound: bool


def out_order_discrepancies() -> list:
    """Recompute |Out|, the abelian-subgroup cap and abelianness for every
    concrete subcase; return the printed claims that fail.

    Exact printed values must match the recomputation; printed upper bounds
    only fail when the recomputed value exceeds them.
    """
    problems = []
    for entry in REGISTRY:
        spec = entry.spec()
        if spec is None or not spec.is_simple:
            continue
        out, abelian, kk = out_data(spec)
        if entry.printed_out is not None:
            bad = (
                out > entry.printed_out
                if entry.out_is_bound
                else out != entry.printed_out
            )
            if bad:
                problems.append(
                    OutDiscrepancy(
                        subcase_id=entry.subcase_id,
                        label=spec.label,
                        quantity="out_order",
                        printed=entry.printed_out,
                        computed=out,
                        printed_as_bound=entry.out_is_bound,
                    )
                )
        if entry.printed_kk is not None:
            bad = (
                kk > entry.printed_kk
                if entry.kk_is_bound
                else kk != entry.printed_kk
            )
            if bad:
                problems.append(
                    OutDiscrepancy(
                        subcase_id=entry.subcase_id,
                        label=spec.label,
                        quantity="kk_bound",
                        printed=entry.printed_kk,
                        computed=kk,
                        printed_as_bound=entry.kk_is_bound,
                    )
                )
        if entry.printed_nonabelian and abelian:
            problems.append(
                OutDiscrepancy(
                    subcase_id=entry.subcase_id,
                    label=spec.label,
                    quantity="nonabelian",
                    printed=1,
                    computed=0,
                    printed_as_bound=False,
                )
            )
    return problems
