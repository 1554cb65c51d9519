"""Witness certificates, printed-figure recomputation, and the audit grid."""

import math

import pytest

from orbitcert.case_audit import (
    REGISTRY,
    audit_grid,
    audit_published_subcases,
    check_product_bound,
    designated_values,
    find_witnesses,
    lookup_subcases,
    out_order_discrepancies,
    product_bound_sides,
    subcase,
    verify_printed_factorizations,
)
from orbitcert.errors import InvalidParameters
from orbitcert.numtheory.cyclotomic import order_check
from orbitcert.numtheory.primality import is_prime
from orbitcert.simple_groups import GroupSpec, group_order_int

# ---------------------------------------------------------------------------
# witness picks on benchmark parameter points
# ---------------------------------------------------------------------------

EXPECTED_PICKS = [
    (GroupSpec(family="A_n", n=1, p=2, f=6), (13, 7)),
    (GroupSpec(family="B_n", n=2, p=2, f=3), (13, 7)),
    (GroupSpec(family="A_n", n=2, p=2, f=2), (7, 9)),
    (GroupSpec(family="A_n", n=1, p=3, f=4), (41, 9)),
    (GroupSpec(family="A_n", n=6, p=2, f=3), (337, 73)),
    (GroupSpec(family="A_n", n=2, p=2, f=1), (7, 3)),
    (GroupSpec(family="Alt", n=6), (4, 9)),
    (GroupSpec(family="Alt", n=7), (4, 3)),
    (GroupSpec(family="Sporadic", name="M11"), (4, 3)),
    (GroupSpec(family="Sporadic", name="M"), (4, 3)),
    (GroupSpec(family="Tits"), (4, 3)),
    (GroupSpec(family="2G2", p=3, f=3), (19, 13)),
    (GroupSpec(family="2B2", p=2, f=5), (41, 31)),
    (GroupSpec(family="2A_n", n=3, p=2, f=2), (5, 3)),
]


@pytest.mark.parametrize(
    "spec,expected", EXPECTED_PICKS, ids=lambda x: getattr(x, "label", str(x))
)
def test_benchmark_witness_picks(spec, expected):
    cert = find_witnesses(spec)
    assert (cert.witness1.order, cert.witness2.order) == expected
    assert cert.valid


def test_unipotent_square_witness():
    cert = find_witnesses(GroupSpec(family="A_n", n=1, p=3, f=4))
    assert cert.witness2.kind == "prime_square"
    assert cert.witness2.source == "unipotent p^2"
    assert cert.witness1.kind == "prime"
    assert cert.witness1.source == "3^8-1"


def test_certificates_satisfy_stated_checks():
    for spec, _ in EXPECTED_PICKS:
        cert = find_witnesses(spec)
        order = group_order_int(spec)
        for w in (cert.witness1, cert.witness2):
            assert order % w.order == 0, spec.label
            if w.kind == "prime":
                assert is_prime(w.order)
            else:
                root = math.isqrt(w.order)
                assert root * root == w.order and is_prime(root)
                assert order % w.order == 0
        assert math.gcd(cert.witness1.order, cert.witness2.order) == 1
        for w in (cert.witness1, cert.witness2):
            assert w.order**2 >= 4 * cert.out_order
            assert w.order >= cert.kk_bound


def test_zsigmondy_sources_are_genuine():
    # A witness drawn from p^e -+ 1 with a claimed multiplicative order
    # must actually have that order.
    for spec in (
        GroupSpec(family="A_n", n=1, p=2, f=6),
        GroupSpec(family="2B2", p=2, f=5),
        GroupSpec(family="2G2", p=3, f=3),
        GroupSpec(family="E8", p=2, f=1),
        GroupSpec(family="3D4", p=2, f=3),
    ):
        cert = find_witnesses(spec)
        dv1, dv2 = designated_values(spec)
        for w, dv in ((cert.witness1, dv1), (cert.witness2, dv2)):
            if w.kind != "prime" or w.source != dv.expression:
                continue
            if order_check(dv.base, dv.zsigmondy_order, w.order):
                assert w.order % dv.zsigmondy_order == 1 or dv.zsigmondy_order in (
                    1,
                    2,
                ), (spec.label, w.order)


def test_designated_value_conventions():
    dv1, dv2 = designated_values(GroupSpec(family="2A_n", n=3, p=2, f=2))
    assert (dv1.base, dv1.exponent, dv1.sign) == (2, 4, -1)
    assert (dv2.base, dv2.exponent, dv2.sign) == (2, 3, +1)
    assert dv2.value == 9 and dv2.zsigmondy_order == 6
    dv1, dv2 = designated_values(GroupSpec(family="2B2", p=2, f=5))
    assert (dv1.exponent, dv1.sign, dv1.value) == (10, +1, 1025)
    assert dv1.zsigmondy_order == 20
    dv1, dv2 = designated_values(GroupSpec(family="E8", p=3, f=1))
    assert (dv1.exponent, dv2.exponent) == (30, 24)


def test_degenerate_points_rejected():
    for kwargs in (
        {"family": "A_n", "n": 1, "p": 2, "f": 1},
        {"family": "A_n", "n": 1, "p": 3, "f": 1},
        {"family": "B_n", "n": 2, "p": 2, "f": 1},
        {"family": "G2", "p": 2, "f": 1},
        {"family": "2B2", "p": 2, "f": 1},
    ):
        with pytest.raises(InvalidParameters):
            find_witnesses(GroupSpec(**kwargs))


# ---------------------------------------------------------------------------
# exact product bound
# ---------------------------------------------------------------------------


def test_product_bound_examples():
    assert check_product_bound(6, 3)
    assert check_product_bound(1, 1)
    assert check_product_bound(54, 2)
    assert product_bound_sides(54, 2) == (108, 216, False)


def test_product_bound_odd_exponent_stays_integral():
    lhs, rhs, squared = product_bound_sides(6, 3)
    assert squared
    assert lhs == (2**2) ** 2 * 6**3 and rhs == (2**3) ** 2 * 6**3
    lhs, rhs, squared = product_bound_sides(1, 1)
    assert (lhs, rhs, squared) == (1, 4, True)


def test_product_bound_rejects_bad_input():
    with pytest.raises(InvalidParameters):
        product_bound_sides(0, 3)
    with pytest.raises(InvalidParameters):
        product_bound_sides(6, 0)


# ---------------------------------------------------------------------------
# printed-figure recomputation
# ---------------------------------------------------------------------------


def test_exactly_three_factorization_mismatches():
    mismatches = verify_printed_factorizations()
    by_id = {m.subcase_id: m for m in mismatches}
    assert set(by_id) == {
        "A_n:fn=12:n=12",
        "A_n:fn=18:n=2",
        "D_4:q-even:f=3",
    }
    m = by_id["A_n:fn=18:n=2"]
    assert m.expression == "2^27-1"
    assert m.true_value == 134217727
    assert m.printed_product == 134216194
    assert m.corrected.factors == ((7, 1), (73, 1), (262657, 1))
    m = by_id["D_4:q-even:f=3"]
    assert m.expression == "2^18-1"
    assert m.true_value == 262143
    assert m.corrected.factors == ((3, 3), (7, 1), (19, 1), (73, 1))
    m = by_id["A_n:fn=12:n=12"]
    assert m.expression == "2^13-1"
    assert m.true_value == 8191 and m.corrected.factors == ((8191, 1),)


def test_exactly_three_out_discrepancies():
    problems = out_order_discrepancies()
    triples = {(d.subcase_id, d.printed, d.computed) for d in problems}
    assert triples == {
        ("A_n:fn=20:n=5", 8, 24),
        ("A_n:f(n+1)=12:n+1=6", 4, 12),
        ("2A_n:fn/2=20:n=20", 12, 6),
    }
    assert all(d.quantity == "out_order" for d in problems)


def test_registry_values_recompose_except_known_typos():
    bad = {(m.subcase_id, m.value_index) for m in verify_printed_factorizations()}
    checked = 0
    for entry in REGISTRY:
        spec = entry.spec()
        for index, pv in enumerate(entry.values):
            true_value = pv.true_value(spec)
            if true_value is None:
                continue
            checked += 1
            if (entry.subcase_id, index) in bad:
                assert pv.printed_product() != true_value
            else:
                assert pv.printed_product() == true_value, entry.subcase_id
    assert checked > 200


def test_lookup_subcases_joins_both_branches():
    ids = lookup_subcases(GroupSpec(family="A_n", n=2, p=2, f=2))
    assert ids == ["A_n:fn=4:n=2", "A_n:f(n+1)=6:n+1=3"]
    cert = find_witnesses(GroupSpec(family="A_n", n=2, p=2, f=2))
    assert cert.published_subcase == "A_n:fn=4:n=2;A_n:f(n+1)=6:n+1=3"
    assert lookup_subcases(GroupSpec(family="E8", p=2, f=1)) == []


def test_certificate_discrepancies_attached_to_typo_cases():
    cert = find_witnesses(GroupSpec(family="A_n", n=2, p=2, f=9))
    assert len(cert.discrepancies) == 1
    printed, corrected = cert.discrepancies[0]
    assert printed == "2^27-1 = 7 * 73 * 262654"
    assert corrected.value == 134217727
    cert = find_witnesses(GroupSpec(family="D_n", n=4, p=2, f=3))
    assert len(cert.discrepancies) == 1
    assert cert.discrepancies[0][1].value == 262143
    clean = find_witnesses(GroupSpec(family="A_n", n=2, p=2, f=2))
    assert clean.discrepancies == ()


def test_vacuous_subcase_has_no_parameter_point():
    entry = subcase("B_n:f(2n-2)=6:2n-2=3")
    assert entry.spec() is None
    assert "vacuous" in entry.note


# ---------------------------------------------------------------------------
# the audit grid
# ---------------------------------------------------------------------------


def test_grid_certifies_small_window():
    certs, summary = audit_grid(n_max=4, q_max=16)
    assert summary["no_witness"] == []
    assert summary["magnitude_exceeded"] == []
    assert summary["certified"] == len(certs)
    assert summary["cells"] == summary["certified"] + len(
        summary["skipped_nonsimple"]
    )
    flagged = {label for label, _ in summary["skipped_nonsimple"]}
    assert flagged == {"A_1(2)", "A_1(3)", "B_2(2)", "G2(2)"}
    for cert in certs:
        assert cert.valid


def test_grid_is_deterministic_across_jobs():
    seq_certs, seq_summary = audit_grid(n_max=3, q_max=16)
    par_certs, par_summary = audit_grid(n_max=3, q_max=16, jobs=3)
    assert [c.to_json() for c in seq_certs] == [c.to_json() for c in par_certs]
    assert seq_summary == par_summary


def test_grid_sporadic_only():
    certs, summary = audit_grid(n_max=1, q_max=2, families=("Sporadic",))
    assert len(certs) == 26
    assert {(c.witness1.order, c.witness2.order) for c in certs} == {(4, 3)}
    assert summary["by_family"]["Sporadic"]["certified"] == 26


def test_grid_rejects_unknown_family():
    with pytest.raises(ValueError):
        audit_grid(n_max=3, q_max=8, families=("Q_n",))


def test_published_subcase_audit_report():
    report = audit_published_subcases()
    assert report["all_valid"]
    assert report["certification_failures"] == []
    assert report["registry_size"] == len(REGISTRY)
    assert report["parameter_points"] == len(report["certificates"])
    assert {m.subcase_id for m in report["factorization_mismatches"]} == {
        "A_n:fn=12:n=12",
        "A_n:fn=18:n=2",
        "D_4:q-even:f=3",
    }
    labels = {c.spec.label for c in report["certificates"]}
    assert {"A_2(4)", "B_2(8)", "2A_20(2^2)", "3D4(2^3)"} <= labels


def test_certificate_json_is_plain_data():
    import json

    cert = find_witnesses(GroupSpec(family="B_n", n=2, p=2, f=3))
    payload = cert.to_json()
    assert json.loads(json.dumps(payload)) == payload
    assert payload["witness1"]["order"] == 13
    assert payload["witness2"]["order"] == 7
    assert payload["checks"] == {
        "coprime": True,
        "bound_2sqrt": True,
        "bound_kk": True,
    }
