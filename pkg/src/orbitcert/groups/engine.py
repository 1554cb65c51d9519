"""Finite matrix groups over prime fields: closure, orbits, derived
subgroup, admissibility certification, and the abelianization bounds
|G/G'| <= M (largest orbit size) and |G/G'| < |V|.

Hot kernels (closure and orbit partition) come from the compiled backend
when it is available, otherwise from the pure-Python twin.  Set
``ORBITCERT_PURE=1`` to force the pure backend.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field

from ..config import LIMITS
from ..errors import (
    AdmissibilityRejected,
    BoundViolated,
    CapExceeded,
    InvalidParameters,
    SingularGenerator,
    VectorCapExceeded,
)
from ..numtheory.primality import is_prime

if os.environ.get("ORBITCERT_PURE"):
    from . import core_pure as _backend
else:
    try:
        from . import _fastcore as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import core_pure as _backend


def backend_name() -> str:
    """Which kernel implementation is active: "compiled" or "pure"."""
    return _backend.BACKEND


class PrimeField:
    """Arithmetic on residues 0..p-1 for prime p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise InvalidParameters(f"{p} is not prime")
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)


def _as_matrix(rows, p: int, dim: int) -> tuple:
    """Normalize a nested-list or flat matrix into a row-major tuple."""
    if len(rows) == dim and all(
        isinstance(r, (list, tuple)) and len(r) == dim for r in rows
    ):
        flat = [x for row in rows for x in row]
    elif len(rows) == dim * dim:
        flat = list(rows)
    else:
        raise InvalidParameters(
            f"matrix must be {dim}x{dim} rows or a flat tuple of {dim * dim}"
        )
    return tuple(int(x) % p for x in flat)


def _identity(dim: int) -> tuple:
    return tuple(1 if i == j else 0 for i in range(dim) for j in range(dim))


def det_mod(matrix: tuple, p: int, dim: int) -> int:
    """Determinant mod p by Gaussian elimination."""
    a = [list(matrix[i * dim : (i + 1) * dim]) for i in range(dim)]
    det = 1
    for col in range(dim):
        pivot = next(
            (r for r in range(col, dim) if a[r][col] % p), None
        )
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        inv = pow(a[col][col], p - 2, p)
        det = det * a[col][col] % p
        for r in range(col + 1, dim):
            factor = a[r][col] * inv % p
            if factor:
                for c in range(col, dim):
                    a[r][c] = (a[r][c] - factor * a[col][c]) % p
    return det % p


def mat_inv(matrix: tuple, p: int, dim: int) -> tuple:
    """Inverse matrix mod p (Gauss-Jordan)."""
    a = [list(matrix[i * dim : (i + 1) * dim]) for i in range(dim)]
    inv = [
        [1 if i == j else 0 for j in range(dim)] for i in range(dim)
    ]
    for col in range(dim):
        pivot = next((r for r in range(col, dim) if a[r][col] % p), None)
        if pivot is None:
            raise SingularGenerator("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = pow(a[col][col], p - 2, p)
        a[col] = [x * scale % p for x in a[col]]
        inv[col] = [x * scale % p for x in inv[col]]
        for r in range(dim):
            if r == col or not a[r][col]:
                continue
            factor = a[r][col]
            a[r] = [(x - factor * y) % p for x, y in zip(a[r], a[col])]
            inv[r] = [
                (x - factor * y) % p for x, y in zip(inv[r], inv[col])
            ]
    return tuple(x for row in inv for x in row)


@dataclass(frozen=True)
class MatrixGroupInstance:
    """A closed matrix group: parameters, generators, full element set."""

    p: int
    dim: int
    generators: tuple
    elements: frozenset
    order: int

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "dim": self.dim,
            "generators": [list(g) for g in self.generators],
            "order": self.order,
        }


@dataclass(frozen=True)
class OrbitReport:
    """Orbit partition plus abelianization data for one instance."""

    orbit_sizes: tuple  # multiset, ascending
    max_orbit: int
    derived_order: int
    abelianization: int
    admissibility: str

    def to_json(self) -> dict:
        return {
            "orbit_sizes": list(self.orbit_sizes),
            "max_orbit": self.max_orbit,
            "derived_order": self.derived_order,
            "abelianization": self.abelianization,
            "admissibility": self.admissibility,
        }


@dataclass(frozen=True)
class BoundVerdict:
    """Checked quantities for |G/G'| <= M and |G/G'| < |V|."""

    p: int
    dim: int
    order: int
    derived_order: int
    abelianization: int
    max_orbit: int
    module_size: int
    admissibility: str
    orbit_sizes: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return (
            self.abelianization <= self.max_orbit
            and self.abelianization < self.module_size
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "dim": self.dim,
            "order": self.order,
            "derived_order": self.derived_order,
            "abelianization": self.abelianization,
            "max_orbit": self.max_orbit,
            "module_size": self.module_size,
            "admissibility": self.admissibility,
            "orbit_sizes": list(self.orbit_sizes),
            "passed": self.passed,
        }


def close_group(
    p: int, dim: int, generators, cap: int | None = None
) -> MatrixGroupInstance:
    """Close a generator list into a full matrix group.

    Raises SingularGenerator for non-invertible input and CapExceeded when
    the closure outgrows ``cap`` (default: the configured element cap).
    """
    if not is_prime(p):
        raise InvalidParameters(f"{p} is not prime")
    if dim < 1:
        raise InvalidParameters("dimension must be positive")
    if cap is None:
        cap = LIMITS.max_group_elements
    if cap < 1:
        raise InvalidParameters("cap must be >= 1")
    gens = [_as_matrix(g, p, dim) for g in generators]
    for g in gens:
        if det_mod(g, p, dim) == 0:
            raise SingularGenerator(
                f"generator {g} is singular over GF({p})"
            )
    # Deduplicate while preserving order; drop explicit identities.
    ident = _identity(dim)
    unique = []
    for g in gens:
        if g != ident and g not in unique:
            unique.append(g)
    elements = _backend.close_set(unique, p, dim, cap)
    if elements is None:
        raise CapExceeded(
            f"closure exceeded cap of {cap} elements (p={p}, dim={dim})"
        )
    return MatrixGroupInstance(
        p=p,
        dim=dim,
        generators=tuple(unique) if unique else (ident,),
        elements=frozenset(elements),
        order=len(elements),
    )


def derived_subgroup(instance: MatrixGroupInstance) -> frozenset:
    """G': the normal closure of all generator-pair commutators.

    The result is verified to be normal (closed under conjugation by the
    generators) with abelian quotient (every commutator lands inside).
    """
    p, dim = instance.p, instance.dim
    gens = list(instance.generators)
    inverses = {g: mat_inv(g, p, dim) for g in gens}

    def commutator(a, b):
        ainv, binv = inverses[a], inverses[b]
        left = _backend.mat_mul(ainv, binv, p, dim)
        right = _backend.mat_mul(a, b, p, dim)
        return _backend.mat_mul(left, right, p, dim)

    seeds = []
    for a in gens:
        for b in gens:
            c = commutator(a, b)
            if c not in seeds:
                seeds.append(c)
    closed = _backend.close_set(seeds, p, dim, instance.order)
    if closed is None:  # pragma: no cover - |G'| <= |G| always
        raise CapExceeded("derived subgroup exceeded group order")
    while True:
        new = []
        for g in gens:
            ginv = inverses[g]
            for elem in sorted(closed):
                conj = _backend.mat_mul(
                    _backend.mat_mul(ginv, elem, p, dim), g, p, dim
                )
                if conj not in closed:
                    new.append(conj)
        if not new:
            break
        closed = _backend.close_set(
            list(closed) + new, p, dim, instance.order
        )
        if closed is None:  # pragma: no cover
            raise CapExceeded("derived subgroup exceeded group order")
    assert closed <= instance.elements
    assert instance.order % len(closed) == 0
    return frozenset(closed)


def _orbit_sizes(instance: MatrixGroupInstance) -> list:
    if instance.p**instance.dim > LIMITS.max_vectors:
        raise VectorCapExceeded(
            f"{instance.p}^{instance.dim} vectors exceed the configured cap"
        )
    return _backend.orbit_partition(
        list(instance.generators), instance.p, instance.dim
    )


def _spin_span(
    start: tuple, gens, p: int, dim: int
) -> int:
    """Dimension of the smallest G-invariant subspace containing start."""
    basis: list = []  # row-echelon rows, each a list with leading 1

    def reduce(vec):
        v = list(vec)
        for row in basis:
            lead = next(i for i, x in enumerate(row) if x)
            if v[lead]:
                factor = v[lead]
                for i in range(lead, dim):
                    v[i] = (v[i] - factor * row[i]) % p
        return v

    def insert(vec) -> bool:
        v = reduce(vec)
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return False
        scale = pow(v[lead], p - 2, p)
        v = [x * scale % p for x in v]
        basis.append(v)
        basis.sort(key=lambda row: next(i for i, x in enumerate(row) if x))
        return True

    queue = [start]
    insert(start)
    while queue and len(basis) < dim:
        vec = queue.pop()
        for g in gens:
            image = _backend.mat_vec(g, tuple(vec), p, dim)
            if insert(image):
                queue.append(list(image))
    return len(basis)


def admissibility(instance: MatrixGroupInstance) -> str:
    """Certify complete reducibility of the natural module.

    "coprime_maschke" when gcd(|G|, p) = 1; otherwise "irreducible_spin"
    when every nonzero vector spins to the whole space; otherwise
    "rejected".
    """
    p, dim = instance.p, instance.dim
    if math.gcd(instance.order, p) == 1:
        return "coprime_maschke"
    if p**dim > LIMITS.max_vectors:
        raise VectorCapExceeded(
            f"{p}^{dim} vectors exceed the configured cap"
        )
    gens = list(instance.generators)
    total = p**dim
    for index in range(1, total):
        vec = []
        rem = index
        for i in range(dim - 1, -1, -1):
            vec.append(rem // p**i)
            rem %= p**i
        if _spin_span(tuple(vec), gens, p, dim) < dim:
            return "rejected"
    return "irreducible_spin"


def orbits(instance: MatrixGroupInstance) -> OrbitReport:
    """Full orbit partition of GF(p)^dim plus abelianization data."""
    sizes = sorted(_orbit_sizes(instance))
    derived = derived_subgroup(instance)
    report = OrbitReport(
        orbit_sizes=tuple(sizes),
        max_orbit=max(sizes),
        derived_order=len(derived),
        abelianization=instance.order // len(derived),
        admissibility=admissibility(instance),
    )
    assert sum(report.orbit_sizes) == instance.p**instance.dim
    assert all(instance.order % size == 0 for size in report.orbit_sizes)
    return report


def verify_orbit_bound(instance: MatrixGroupInstance) -> BoundVerdict:
    """Check |G/G'| <= M and |G/G'| < p^dim on an admissible instance.

    Raises AdmissibilityRejected when complete reducibility cannot be
    certified, and BoundViolated if either inequality fails -- which would
    be a genuine counterexample and must never happen.
    """
    report = orbits(instance)
    if report.admissibility == "rejected":
        raise AdmissibilityRejected(
            f"cannot certify complete reducibility for p={instance.p}, "
            f"dim={instance.dim}, order={instance.order}"
        )
    verdict = BoundVerdict(
        p=instance.p,
        dim=instance.dim,
        order=instance.order,
        derived_order=report.derived_order,
        abelianization=report.abelianization,
        max_orbit=report.max_orbit,
        module_size=instance.p**instance.dim,
        admissibility=report.admissibility,
        orbit_sizes=report.orbit_sizes,
    )
    if verdict.abelianization > verdict.max_orbit:
        raise BoundViolated(
            f"|G/G'| = {verdict.abelianization} exceeds largest orbit "
            f"{verdict.max_orbit}"
        )
    if verdict.abelianization >= verdict.module_size:
        raise BoundViolated(
            f"|G/G'| = {verdict.abelianization} not below |V| = "
            f"{verdict.module_size}"
        )
    return verdict


def generate_corpus(
    seed: int,
    count: int,
    p_set,
    dim_max: int,
    cap: int = 100_000,
) -> tuple:
    """Deterministic corpus of admissible instances, plus skip statistics.

    The RNG stream depends only on the arguments, so equal seeds give
    byte-identical corpora.  Candidates whose closure overruns ``cap`` or
    whose module cannot be certified completely reducible are skipped and
    counted.
    """
    p_list = sorted(set(int(p) for p in p_set))
    for p in p_list:
        if not is_prime(p):
            raise InvalidParameters(f"{p} is not prime")
    if dim_max < 1:
        raise InvalidParameters("dim_max must be >= 1")
    rng = random.Random(seed)
    instances = []
    stats = {"kept": 0, "singular": 0, "cap_exceeded": 0, "rejected": 0}
    while len(instances) < count:
        p = rng.choice(p_list)
        dim = rng.randint(1, dim_max)
        n_gens = rng.randint(1, 3)
        gens = [
            [rng.randrange(p) for _ in range(dim * dim)]
            for _ in range(n_gens)
        ]
        try:
            instance = close_group(p, dim, gens, cap=cap)
        except SingularGenerator:
            stats["singular"] += 1
            continue
        except CapExceeded:
            stats["cap_exceeded"] += 1
            continue
        if admissibility(instance) == "rejected":
            stats["rejected"] += 1
            continue
        instances.append(instance)
        stats["kept"] += 1
    return instances, stats


def random_instances(
    seed: int, count: int, p_set, dim_max: int, cap: int = 100_000
) -> list:
    """Deterministic admissible random instances (see generate_corpus)."""
    return generate_corpus(seed, count, p_set, dim_max, cap)[0]
