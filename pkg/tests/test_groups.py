"""Matrix-group engine: closure, orbits, derived subgroup, admissibility,
and the abelianization bounds, against brute-force oracles."""

import math

import pytest

from orbitcert.errors import (
    AdmissibilityRejected,
    CapExceeded,
    InvalidParameters,
    SingularGenerator,
    VectorCapExceeded,
)
from orbitcert.groups import (
    PrimeField,
    admissibility,
    backend_name,
    close_group,
    derived_subgroup,
    det_mod,
    generate_corpus,
    mat_inv,
    orbits,
    random_instances,
    verify_orbit_bound,
)
from orbitcert.groups import core_pure

SL23_GENS = [[[1, 1], [0, 1]], [[0, 2], [1, 0]]]
GL22_GENS = [[[0, 1], [1, 0]], [[1, 1], [0, 1]]]


def _scalar_group(q):
    for candidate in range(2, q):
        seen, x = set(), 1
        for _ in range(q - 1):
            x = x * candidate % q
            seen.add(x)
        if len(seen) == q - 1:
            return close_group(q, 1, [[[candidate]]])
    raise AssertionError(f"no primitive root mod {q}")


# ---------------------------------------------------------------------------
# field and linear algebra primitives
# ---------------------------------------------------------------------------


def test_prime_field_axioms_exhaustive_small():
    for p in (2, 3, 5, 7, 11, 13, 97):
        field = PrimeField(p)
        for a in range(1, p):
            assert field.mul(a, field.inv(a)) == 1
        for a in range(p):
            for b in range(p):
                assert field.add(a, b) == (a + b) % p
                assert field.mul(a, b) == (a * b) % p
    with pytest.raises(InvalidParameters):
        PrimeField(6)


def test_matrix_inverse_roundtrip():
    import random

    rng = random.Random(7)
    identity3 = tuple(1 if i == j else 0 for i in range(3) for j in range(3))
    found = 0
    while found < 25:
        p = rng.choice([2, 3, 5, 7, 11])
        m = tuple(rng.randrange(p) for _ in range(9))
        if det_mod(m, p, 3) == 0:
            continue
        found += 1
        inv = mat_inv(m, p, 3)
        assert core_pure.mat_mul(m, inv, p, 3) == identity3
        assert core_pure.mat_mul(inv, m, p, 3) == identity3


def test_backends_agree_on_kernels():
    import random

    try:
        from orbitcert.groups import _fastcore
    except ImportError:
        pytest.skip("compiled backend not built")
    rng = random.Random(11)
    for _ in range(50):
        p = rng.choice([2, 3, 5, 7, 13])
        dim = rng.randint(1, 4)
        a = tuple(rng.randrange(p) for _ in range(dim * dim))
        b = tuple(rng.randrange(p) for _ in range(dim * dim))
        v = tuple(rng.randrange(p) for _ in range(dim))
        assert _fastcore.mat_mul(a, b, p, dim) == core_pure.mat_mul(
            a, b, p, dim
        )
        assert _fastcore.mat_vec(a, v, p, dim) == core_pure.mat_vec(
            a, v, p, dim
        )
    gens = [tuple(x for row in g for x in row) for g in SL23_GENS]
    assert _fastcore.close_set(gens, 3, 2, 100) == core_pure.close_set(
        gens, 3, 2, 100
    )
    assert _fastcore.orbit_partition(gens, 3, 2) == core_pure.orbit_partition(
        gens, 3, 2
    )


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------


def test_closure_fixture_orders():
    assert close_group(3, 2, SL23_GENS).order == 24
    assert close_group(2, 2, GL22_GENS).order == 6
    identity = [[1, 0], [0, 1]]
    assert close_group(5, 2, [identity]).order == 1


def test_closure_full_general_linear_group_dim4():
    cycle = [
        [0, 0, 0, 1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
    ]
    transvection = [
        [1, 1, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]
    instance = close_group(2, 4, [cycle, transvection])
    assert instance.order == 20160  # |GL(4,2)|


def test_closure_contains_identity_and_inverses():
    instance = close_group(3, 2, SL23_GENS)
    identity = tuple(1 if i == j else 0 for i in range(2) for j in range(2))
    assert identity in instance.elements
    for elem in instance.elements:
        assert mat_inv(elem, 3, 2) in instance.elements


def test_closure_idempotent():
    instance = close_group(3, 2, SL23_GENS)
    reclosed = close_group(3, 2, [list(e) for e in instance.elements])
    assert reclosed.elements == instance.elements


def test_closure_cap_and_singular_generator():
    with pytest.raises(CapExceeded):
        close_group(3, 2, SL23_GENS, cap=10)
    with pytest.raises(SingularGenerator):
        close_group(2, 2, [[[1, 1], [1, 1]]])
    with pytest.raises(InvalidParameters):
        close_group(4, 2, SL23_GENS)


# ---------------------------------------------------------------------------
# derived subgroup
# ---------------------------------------------------------------------------


def test_derived_subgroup_fixtures():
    sl23 = close_group(3, 2, SL23_GENS)
    derived = derived_subgroup(sl23)
    assert len(derived) == 8
    assert sl23.order // len(derived) == 3
    gl22 = close_group(2, 2, GL22_GENS)
    derived = derived_subgroup(gl22)
    assert len(derived) == 3
    assert gl22.order // len(derived) == 2
    scalars = _scalar_group(5)
    assert len(derived_subgroup(scalars)) == 1


def test_derived_subgroup_is_normal_with_abelian_quotient():
    for p, gens in ((3, SL23_GENS), (2, GL22_GENS)):
        instance = close_group(p, 2, gens)
        derived = derived_subgroup(instance)
        dim = instance.dim
        # Normality against the whole group, not just the generators.
        for g in instance.elements:
            ginv = mat_inv(g, p, dim)
            for h in derived:
                conj = core_pure.mat_mul(
                    core_pure.mat_mul(ginv, h, p, dim), g, p, dim
                )
                assert conj in derived
        # Abelian quotient: every commutator of group elements lies in G'.
        for a in instance.elements:
            ainv = mat_inv(a, p, dim)
            for b in instance.generators:
                binv = mat_inv(b, p, dim)
                comm = core_pure.mat_mul(
                    core_pure.mat_mul(ainv, binv, p, dim),
                    core_pure.mat_mul(a, b, p, dim),
                    p,
                    dim,
                )
                assert comm in derived


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------


def test_orbit_fixtures():
    rep = orbits(close_group(3, 2, SL23_GENS))
    assert rep.orbit_sizes == (1, 8)
    assert rep.max_orbit == 8
    assert rep.abelianization == 3
    assert rep.admissibility == "irreducible_spin"
    rep = orbits(close_group(2, 2, GL22_GENS))
    assert rep.orbit_sizes == (1, 3)
    assert (rep.derived_order, rep.abelianization) == (3, 2)
    rep = orbits(close_group(2, 1, [[[1]]]))
    assert rep.orbit_sizes == (1, 1) and rep.max_orbit == 1


def test_scalar_groups_attain_equality():
    for q in (5, 7, 13):
        scalars = _scalar_group(q)
        rep = orbits(scalars)
        assert rep.orbit_sizes == (1, q - 1)
        assert rep.admissibility == "coprime_maschke"
        verdict = verify_orbit_bound(scalars)
        assert verdict.abelianization == verdict.max_orbit == q - 1
        assert verdict.abelianization < verdict.module_size == q
        assert verdict.passed


def test_orbit_partition_laws_on_corpus():
    instances, _ = generate_corpus(3, 25, [2, 3, 5], 3)
    for instance in instances:
        rep = orbits(instance)
        assert sum(rep.orbit_sizes) == instance.p**instance.dim
        assert all(instance.order % s == 0 for s in rep.orbit_sizes)
        assert 1 in rep.orbit_sizes  # the zero vector is fixed
        assert rep.derived_order * rep.abelianization == instance.order


def test_orbit_vector_cap():
    identity21 = [[1 if i == j else 0 for j in range(21)] for i in range(21)]
    big = close_group(2, 21, [identity21])
    with pytest.raises(VectorCapExceeded):
        orbits(big)


# ---------------------------------------------------------------------------
# admissibility
# ---------------------------------------------------------------------------


def test_admissibility_fixtures():
    assert admissibility(close_group(3, 2, SL23_GENS)) == "irreducible_spin"
    assert admissibility(_scalar_group(5)) == "coprime_maschke"
    unitriangular = close_group(3, 2, [[[1, 1], [0, 1]]])
    assert admissibility(unitriangular) == "rejected"
    with pytest.raises(AdmissibilityRejected):
        verify_orbit_bound(unitriangular)


def _invariant_lines_exist(instance) -> bool:
    """Brute-force irreducibility oracle for dim = 2: check every line."""
    p = instance.p
    directions = [(1, y) for y in range(p)] + [(0, 1)]
    for v in directions:
        span = {tuple(c * x % p for x in v) for c in range(p)}
        if all(
            core_pure.mat_vec(g, v, p, 2) in span for g in instance.generators
        ):
            return True
    return False


def test_spin_matches_exhaustive_subspace_oracle():
    import random

    rng = random.Random(5)
    checked = 0
    while checked < 40:
        p = rng.choice([2, 3, 5])
        dim = rng.randint(1, 2)
        gens = [
            [rng.randrange(p) for _ in range(dim * dim)]
            for _ in range(rng.randint(1, 2))
        ]
        try:
            instance = close_group(p, dim, gens, cap=50_000)
        except SingularGenerator:
            continue
        checked += 1
        if math.gcd(instance.order, p) == 1:
            continue  # spin not consulted in the coprime branch
        verdict = admissibility(instance)
        if dim == 1:
            assert verdict == "irreducible_spin"
        else:
            expected = (
                "rejected"
                if _invariant_lines_exist(instance)
                else "irreducible_spin"
            )
            assert verdict == expected, (p, dim, instance.generators)


# ---------------------------------------------------------------------------
# corpus generation
# ---------------------------------------------------------------------------


def test_corpus_deterministic_and_admissible():
    first = random_instances(0, 15, [2, 3, 5, 7], 3)
    second = random_instances(0, 15, [2, 3, 5, 7], 3)
    assert [i.to_json() for i in first] == [i.to_json() for i in second]
    assert random_instances(0, 0, [2, 3], 2) == []
    for instance in first:
        assert admissibility(instance) != "rejected"
        assert verify_orbit_bound(instance).passed


def test_corpus_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        generate_corpus(0, 5, [4, 6], 2)
    with pytest.raises(InvalidParameters):
        generate_corpus(0, 5, [2, 3], 0)


def test_backend_name_reports():
    assert backend_name() in ("pure", "compiled")
