"""Single executable exposing every module as a subcommand.

Exit codes: 0 success, 1 usage or environment error, 2 a violated
mathematical assertion (bound violation, missing witness, table mismatch)
so CI can tell refutations from bugs.  Reports are deterministic: JSON is
emitted with sorted keys and sorted records, and no timestamps unless
``--timestamps`` is given.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
import time

from .case_audit import (
    audit_grid,
    out_order_discrepancies,
    verify_printed_factorizations,
)
from .config import parse_config_file
from .errors import (
    MathAssertionError,
    NoWitnessFound,
    OrbitCertError,
    UsageError,
)
from .groups import close_group, generate_corpus, orbits, verify_orbit_bound
from .numtheory import tables
from .numtheory.zsigmondy import zsigmondy_primes
from .simple_groups import GroupSpec, group_facts

_FORMATS = ("json", "csv", "plain")
_CONFIG_KEYS = ("format", "output", "jobs", "timestamps")


class _Parser(argparse.ArgumentParser):
    """Argument parser that signals usage problems via UsageError (exit 1)."""

    def error(self, message):
        raise UsageError(message)


def _common_options(parser) -> None:
    parser.add_argument(
        "--format",
        choices=_FORMATS,
        default=None,
        help="output format (default: plain)",
    )
    parser.add_argument(
        "--output", default=None, help="write the report to this path"
    )
    parser.add_argument(
        "--config", default=None, help="key = value config file"
    )
    parser.add_argument(
        "--jobs", type=int, default=None, help="parallel workers for scans"
    )
    parser.add_argument(
        "--timestamps",
        action="store_const",
        const=True,
        default=None,
        help="stamp reports with the generation time (off by default)",
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="orbitcert", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")

    zsig = sub.add_parser("zsig", help="Zsigmondy-prime queries and scans")
    zsig_sub = zsig.add_subparsers(dest="zsig_command", metavar="action")

    find = zsig_sub.add_parser(
        "find", help="report the Zsigmondy primes of a^m - 1"
    )
    find.add_argument("a", type=int, help="base a > 1")
    find.add_argument("m", type=int, help="exponent m > 1")
    _common_options(find)

    scan = zsig_sub.add_parser(
        "scan", help="scan a window and compare against a stored table"
    )
    scan.add_argument(
        "--table",
        required=True,
        choices=sorted(tables.TABLE_IDS),
        help="exception table to reproduce",
    )
    scan.add_argument("--base-max", type=int, required=True)
    scan.add_argument("--m-max", type=int, required=True)
    scan.add_argument(
        "--golden", default=None, help="compare exceptions to this golden file"
    )
    scan.add_argument(
        "--write-golden",
        default=None,
        help="write the scanned exceptions as a golden file",
    )
    _common_options(scan)

    for name, help_text in (
        ("simple-order", "order of a simple group from its parameters"),
        ("out-order", "outer-automorphism data of a simple group"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("family", help="family label, e.g. A_n, 2B2, Alt")
        cmd.add_argument("--n", type=int, default=None, help="rank or degree")
        cmd.add_argument("--p", type=int, default=None, help="characteristic")
        cmd.add_argument(
            "--f", type=int, default=None, help="field exponent (q = p^f)"
        )
        cmd.add_argument(
            "--name", default=None, help="sporadic group name, e.g. M11"
        )
        _common_options(cmd)

    audit = sub.add_parser(
        "audit", help="certify abelian-subgroup witnesses over a grid"
    )
    audit.add_argument("--n-max", type=int, required=True)
    audit.add_argument("--q-max", type=int, required=True)
    audit.add_argument(
        "--family",
        action="append",
        default=None,
        help="restrict to one or more families (repeatable, comma-separated)",
    )
    audit.add_argument(
        "--check-paper",
        action="store_true",
        help="cross-check the published tables and report discrepancies",
    )
    audit.add_argument(
        "--report", default=None, help="also write the full JSON report here"
    )
    _common_options(audit)

    orb = sub.add_parser(
        "orbits", help="close a matrix group and report its vector orbits"
    )
    orb.add_argument(
        "--gens",
        required=True,
        help="JSON file {p, dim, generators: [[row-major ints]]}",
    )
    orb.add_argument(
        "--check-bound",
        action="store_true",
        help="verify |G/G'| <= max orbit and |G/G'| < p^dim",
    )
    orb.add_argument(
        "--cap", type=int, default=None, help="group-size cap for the closure"
    )
    orb.add_argument(
        "--json",
        action="store_true",
        help="shorthand for --format json",
    )
    _common_options(orb)

    verify = sub.add_parser(
        "verify", help="generate a random corpus and verify the orbit bound"
    )
    verify.add_argument("--seed", type=int, required=True)
    verify.add_argument("--count", type=int, required=True)
    verify.add_argument(
        "--p-set", required=True, help="comma-separated primes, e.g. 2,3,5,7"
    )
    verify.add_argument("--dim-max", type=int, required=True)
    verify.add_argument(
        "--cap", type=int, default=100_000, help="group-size cap per instance"
    )
    _common_options(verify)

    return parser


# ---------------------------------------------------------------------------
# option resolution and rendering
# ---------------------------------------------------------------------------


def _resolve_options(args) -> dict:
    """Merge config-file values under explicit flags; flags win."""
    resolved = {"format": "plain", "output": None, "jobs": 1, "timestamps": False}
    if getattr(args, "config", None):
        file_values = parse_config_file(args.config)
        for key, value in file_values.items():
            if key not in _CONFIG_KEYS:
                raise UsageError(f"unknown config key: {key!r}")
            if key == "jobs":
                resolved["jobs"] = int(value)
            elif key == "timestamps":
                if value not in ("true", "false"):
                    raise UsageError("timestamps must be true or false")
                resolved["timestamps"] = value == "true"
            elif key == "format":
                if value not in _FORMATS:
                    raise UsageError(f"unknown format in config: {value!r}")
                resolved["format"] = value
            else:
                resolved["output"] = value
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            resolved[key] = flag
    if getattr(args, "json", False):
        resolved["format"] = "json"
    if resolved["jobs"] < 1:
        raise UsageError("--jobs must be >= 1")
    return resolved


def _emit(report, flat, plain_lines, options, stdout) -> None:
    fmt = options["format"]
    if options["timestamps"]:
        report = dict(report)
        report["generated_at"] = time.strftime(
            "%Y-%m-%dT%H:%M:%SZ", time.gmtime()
        )
    if fmt == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        if flat is None:
            raise UsageError(
                "csv output is only available for flat tables; use json"
            )
        header, rows = flat
        buffer = io.StringIO()
        buffer.write(",".join(header) + "\n")
        for row in rows:
            buffer.write(",".join(str(cell) for cell in row) + "\n")
        text = buffer.getvalue()
    else:
        text = "".join(line + "\n" for line in plain_lines)
    if options["output"]:
        with open(options["output"], "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_zsig_find(args, options, stdout) -> int:
    if args.a < 2 or args.m < 2:
        raise UsageError("zsig find requires a > 1 and m > 1")
    result = zsigmondy_primes(args.a, args.m)
    primes = [
        {"prime": prime, "multiplicity": mult}
        for prime, mult in result.zsigmondy_primes
    ]
    report = {
        "base": args.a,
        "m": args.m,
        "value": str(args.a**args.m - 1),
        "zsigmondy_primes": primes,
        "found": bool(primes),
    }
    expr = f"{args.a}^{args.m} - 1"
    if primes:
        listed = ", ".join(str(entry["prime"]) for entry in primes)
        plain = [f"Zsigmondy primes of {expr}: {listed}"]
    else:
        plain = [f"no Zsigmondy prime for {expr}"]
    flat = (
        ("prime", "multiplicity"),
        [(entry["prime"], entry["multiplicity"]) for entry in primes],
    )
    _emit(report, flat, plain, options, stdout)
    return 0


def _cmd_zsig_scan(args, options, stdout) -> int:
    if args.base_max < 2 or args.m_max < 1:
        raise UsageError("scan window must satisfy base-max >= 2, m-max >= 1")
    scan = tables.scan_window(
        args.table, args.base_max, args.m_max, jobs=options["jobs"]
    )
    report = {
        "table": scan.table_id,
        "window": {"base_max": scan.base_max, "m_max": scan.m_max},
        "exceptions": [{"base": b, "m": m} for b, m in scan.exceptions],
        "witnesses": [
            {"base": b, "m": m, "prime": prime}
            for b, m, prime in scan.witnesses
        ],
        "matches_table": scan.matches_table,
    }
    exit_code = 0
    plain = [
        f"table {scan.table_id}, window base <= {scan.base_max}, "
        f"m <= {scan.m_max}",
        f"exceptions: {len(scan.exceptions)}",
    ]
    plain.extend(f"  {b} {m}" for b, m in scan.exceptions)
    if not scan.matches_table:
        diff = scan.mismatches()
        report["mismatches"] = {
            "unexpected": [{"base": b, "m": m} for b, m in diff["unexpected"]],
            "missing": [{"base": b, "m": m} for b, m in diff["missing"]],
        }
        plain.append(f"MISMATCH against stored table: {diff}")
        exit_code = 2
    else:
        plain.append("matches stored table")
    if args.write_golden:
        tables.write_golden(scan, args.write_golden)
        plain.append(f"golden file written: {args.write_golden}")
    if args.golden:
        golden_table, golden_pairs = tables.read_golden(args.golden)
        agrees = (
            golden_table == scan.table_id and golden_pairs == scan.exceptions
        )
        report["golden"] = {"path": args.golden, "matches": agrees}
        if not agrees:
            plain.append(f"MISMATCH against golden file {args.golden}")
            exit_code = 2
        else:
            plain.append("matches golden file")
    flat = (("base", "m"), [(b, m) for b, m in scan.exceptions])
    _emit(report, flat, plain, options, stdout)
    return exit_code


def _spec_from_args(args) -> GroupSpec:
    return GroupSpec(
        family=args.family, n=args.n, p=args.p, f=args.f, name=args.name
    )


def _cmd_simple_order(args, options, stdout) -> int:
    facts = group_facts(_spec_from_args(args))
    report = facts.to_json()
    factored = " * ".join(
        f"{prime}^{exp}" if exp > 1 else str(prime)
        for prime, exp in report["order_factored"]
    )
    plain = [f"{report['label']}: |G| = {report['order']} = {factored}"]
    _emit(report, None, plain, options, stdout)
    return 0


def _cmd_out_order(args, options, stdout) -> int:
    facts = group_facts(_spec_from_args(args))
    report = facts.to_json()
    shape = "abelian" if report["out_abelian"] else "nonabelian"
    plain = [
        f"{report['label']}: |Out| = {report['out_order']} ({shape}), "
        f"largest abelian-quotient bound kk = {report['kk_bound']}"
    ]
    _emit(report, None, plain, options, stdout)
    return 0


def _parse_families(values):
    if not values:
        return None
    families = []
    for chunk in values:
        families.extend(part for part in chunk.split(",") if part)
    return families


def _cmd_audit(args, options, stdout) -> int:
    if args.n_max < 1 or args.q_max < 2:
        raise UsageError("audit requires --n-max >= 1 and --q-max >= 2")
    families = _parse_families(args.family)
    try:
        certificates, summary = audit_grid(
            args.n_max, args.q_max, families=families, jobs=options["jobs"]
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = {
        "summary": summary,
        "certificates": [cert.to_json() for cert in certificates],
    }
    plain = [
        f"cells: {summary['cells']}",
        f"certified: {summary['certified']}",
        f"skipped non-simple: {len(summary['skipped_nonsimple'])}",
        f"magnitude exceeded: {len(summary['magnitude_exceeded'])}",
        f"no witness: {len(summary['no_witness'])}",
    ]
    if args.check_paper:
        mismatches = verify_printed_factorizations()
        out_diffs = out_order_discrepancies()
        report["published_check"] = {
            "factorization_mismatches": [
                {
                    "subcase": item.subcase_id,
                    "expression": item.expression,
                    "printed": item.describe_printed(),
                    "printed_product": str(item.printed_product),
                    "true_value": str(item.true_value),
                    "corrected_factors": [
                        [prime, exp] for prime, exp in item.corrected.factors
                    ],
                }
                for item in mismatches
            ],
            "out_discrepancies": [
                {
                    "subcase": item.subcase_id,
                    "group": item.label,
                    "quantity": item.quantity,
                    "printed": item.printed,
                    "computed": item.computed,
                    "printed_as_bound": item.printed_as_bound,
                }
                for item in out_diffs
            ],
        }
        plain.append(
            f"printed-factorization mismatches: {len(mismatches)}"
        )
        plain.extend(
            f"  {item.subcase_id}: {item.describe_printed()} "
            f"(true value {item.true_value})"
            for item in mismatches
        )
        plain.append(f"printed out-order discrepancies: {len(out_diffs)}")
        plain.extend(
            f"  {item.subcase_id}: printed {item.printed}, "
            f"computed {item.computed}"
            for item in out_diffs
        )
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, sort_keys=True, indent=2)
            fh.write("\n")
        plain.append(f"report written: {args.report}")
    flat = (
        ("label", "witness1", "witness1_kind", "witness2", "witness2_kind",
         "out_order", "kk_bound"),
        [
            (
                cert.spec.label,
                cert.witness1.order,
                cert.witness1.kind,
                cert.witness2.order,
                cert.witness2.kind,
                cert.out_order,
                cert.kk_bound,
            )
            for cert in certificates
        ],
    )
    _emit(report, flat, plain, options, stdout)
    if summary["no_witness"]:
        raise NoWitnessFound(
            f"{len(summary['no_witness'])} grid cells lack a witness pair"
        )
    return 0


def _load_generators(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read generator file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"generator file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("generator file must be a JSON object")
    missing = {"p", "dim", "generators"} - set(data)
    if missing:
        raise UsageError(
            f"generator file missing keys: {', '.join(sorted(missing))}"
        )
    return data["p"], data["dim"], data["generators"]


def _cmd_orbits(args, options, stdout) -> int:
    p, dim, generators = _load_generators(args.gens)
    instance = close_group(p, dim, generators, cap=args.cap)
    orbit_report = orbits(instance)
    report = {
        "p": instance.p,
        "dim": instance.dim,
        "order": instance.order,
        **orbit_report.to_json(),
    }
    plain = [
        f"group order: {instance.order}",
        "orbit sizes: "
        + " ".join(str(s) for s in orbit_report.orbit_sizes),
        f"max orbit: {orbit_report.max_orbit}",
        f"derived subgroup order: {orbit_report.derived_order}",
        f"abelianization: {orbit_report.abelianization}",
        f"admissibility: {orbit_report.admissibility}",
    ]
    if args.check_bound:
        verdict = verify_orbit_bound(instance)
        report["verdict"] = verdict.to_json()
        plain.append(
            f"bound: {verdict.abelianization} <= {verdict.max_orbit} "
            f"and {verdict.abelianization} < {verdict.module_size}: pass"
        )
    flat = (("orbit_size",), [(s,) for s in orbit_report.orbit_sizes])
    _emit(report, flat, plain, options, stdout)
    return 0


_FIXTURE_SL23 = (3, 2, [[[1, 1], [0, 1]], [[0, 2], [1, 0]]])
_FIXTURE_GL22 = (2, 2, [[[0, 1], [1, 0]], [[1, 1], [0, 1]]])
_SCALAR_ROOTS = {5: 2, 7: 3, 13: 2}


def _fixture_records():
    records = []
    for name, (p, dim, gens) in (
        ("special linear SL(2,3)", _FIXTURE_SL23),
        ("general linear GL(2,2)", _FIXTURE_GL22),
    ):
        verdict = verify_orbit_bound(close_group(p, dim, gens))
        records.append({"name": name, **verdict.to_json()})
    for q, root in sorted(_SCALAR_ROOTS.items()):
        verdict = verify_orbit_bound(close_group(q, 1, [[[root]]]))
        record = {"name": f"scalar group GF({q})*", **verdict.to_json()}
        record["tight"] = verdict.abelianization == verdict.max_orbit
        records.append(record)
    return records


def _cmd_verify(args, options, stdout) -> int:
    try:
        p_set = sorted({int(part) for part in args.p_set.split(",") if part})
    except ValueError as exc:
        raise UsageError(f"--p-set must be comma-separated integers: {exc}")
    if not p_set:
        raise UsageError("--p-set must name at least one prime")
    instances, stats = generate_corpus(
        args.seed, args.count, p_set, args.dim_max, cap=args.cap
    )
    records = []
    for instance in instances:
        verdict = verify_orbit_bound(instance)
        records.append(verdict.to_json())
    fixtures = _fixture_records()
    report = {
        "seed": args.seed,
        "count": args.count,
        "p_set": p_set,
        "dim_max": args.dim_max,
        "stats": stats,
        "instances": records,
        "fixtures": fixtures,
        "all_passed": all(r["passed"] for r in records + fixtures),
    }
    plain = [
        f"verified {len(records)} generated instances: all bounds hold",
        "generation stats: "
        + ", ".join(f"{key}={stats[key]}" for key in sorted(stats)),
    ]
    plain.extend(
        f"fixture {record['name']}: |G/G'| = {record['abelianization']} <= "
        f"max orbit {record['max_orbit']} < |V| is "
        f"{record['abelianization'] < record['module_size']}"
        for record in fixtures
    )
    flat = (
        ("p", "dim", "order", "derived_order", "abelianization", "max_orbit",
         "module_size", "admissibility", "passed"),
        [
            (
                r["p"], r["dim"], r["order"], r["derived_order"],
                r["abelianization"], r["max_orbit"], r["module_size"],
                r["admissibility"], r["passed"],
            )
            for r in records
        ],
    )
    _emit(report, flat, plain, options, stdout)
    return 0


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def dispatch(argv, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        raise UsageError("a subcommand is required (see --help)")
    if args.command == "zsig":
        if args.zsig_command is None:
            raise UsageError("zsig requires an action: find or scan")
        options = _resolve_options(args)
        if args.zsig_command == "find":
            return _cmd_zsig_find(args, options, stdout)
        return _cmd_zsig_scan(args, options, stdout)
    options = _resolve_options(args)
    handler = {
        "simple-order": _cmd_simple_order,
        "out-order": _cmd_out_order,
        "audit": _cmd_audit,
        "orbits": _cmd_orbits,
        "verify": _cmd_verify,
    }[args.command]
    return handler(args, options, stdout)


def main(argv=None) -> int:
    try:
        return dispatch(argv if argv is not None else sys.argv[1:])
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except MathAssertionError as exc:
        print(f"assertion violated: {exc}", file=sys.stderr)
        return 2
    except OrbitCertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
