"""Command-line interface.

Subcommands:

``qrep analyze (--group TOKEN | --perm-file PATH) [--seed N] [--tol X]
[--skip-coset-oracle] [--skip-reps] [--out DIR]``
    Analyze one group: emits a markdown table row and the JSON report on
    stdout; with ``--out`` also writes ``report.json``, ``report.csv`` and
    PNG figures into the directory.

``qrep verify [--max-order N] [--seed N] [--out DIR]``
    Run the theorem-verification suite over the built-in catalog.

``qrep catalog``
    List the available group tokens with their orders.

Exit codes: 0 pass, 1 property failure, 2 usage error, 3 resource cap.
The environment variable ``QREP_COSET_CAP`` overrides the coset-table bound
used by the enumeration oracle.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import CATALOG_TOKENS, parse_group_token
from .errors import QrepError, ResourceLimitError, ValidationError
from .groups import FiniteGroup, group_from_perm_gens, permutations_from_cycle_text
from .report import (
    GroupReport,
    analyze_group,
    markdown_header,
    markdown_row,
    report_csv_text,
    report_json_bytes,
    suite_csv_text,
    suite_json_bytes,
    verify_theorem_suite,
)

__all__ = ["main", "build_parser", "group_from_perm_file", "report_property_failures"]

EXIT_PASS = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrep",
        description=("Cohomology, representation, and enveloping-group "
                     "analysis of conjugation quandles of finite groups."))
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze a single group")
    src = pa.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", metavar="TOKEN",
                     help="catalog token, e.g. S3, D4, Q8, A5, C2xC4")
    src.add_argument("--perm-file", metavar="PATH",
                     help="file with 'perm <degree>' then one generator per "
                          "line in disjoint-cycle notation")
    pa.add_argument("--seed", type=int, default=0,
                    help="seed for randomized numerics (default 0)")
    pa.add_argument("--tol", type=float, default=1e-9,
                    help="numerical tolerance (default 1e-9)")
    pa.add_argument("--skip-coset-oracle", action="store_true",
                    help="skip the coset-enumeration oracle")
    pa.add_argument("--skip-reps", action="store_true",
                    help="skip the irreducible-representation section")
    pa.add_argument("--out", metavar="DIR",
                    help="write report.json, report.csv and figures here")

    pv = sub.add_parser("verify", help="run the theorem-verification suite")
    pv.add_argument("--max-order", type=int, default=16,
                    help="only check groups up to this order (default 16)")
    pv.add_argument("--seed", type=int, default=0,
                    help="seed for sampled checks (default 0)")
    pv.add_argument("--out", metavar="DIR",
                    help="write suite.json, suite.csv and a figure here")

    sub.add_parser("catalog", help="list available group tokens")
    return parser


def group_from_perm_file(path) -> FiniteGroup:
    """Build a permutation group from a generator file.

    First non-blank line: ``perm <degree>``. Every following non-blank line
    is one generator in 0-based disjoint-cycle notation, e.g. ``(0 1)(2 3)``.
    """
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].strip().lower().startswith("perm"):
        raise ValidationError("perm file must start with 'perm <degree>'")
    head = lines[0].split()
    if len(head) != 2:
        raise ValidationError("perm file must start with 'perm <degree>'")
    try:
        degree = int(head[1])
    except ValueError as exc:
        raise ValidationError(f"bad degree in perm file: {head[1]!r}") from exc
    if degree < 1:
        raise ValidationError("degree must be a positive integer")
    gens = permutations_from_cycle_text(lines[1:], degree)
    if not gens:
        raise ValidationError("perm file contains no generators")
    return group_from_perm_gens(gens, degree=degree,
                                name=Path(path).stem)


def report_property_failures(report: GroupReport) -> list[str]:
    """Internal-consistency failures that should flip the exit code to 1.

    A "fails" theorem verdict is a mathematical finding, not a failure of
    the tool, so it does not appear here.
    """
    problems: list[str] = []
    q = report.quandle
    if not q["axioms_ok"]:
        problems.append("conjugation quandle failed an axiom")
    if not q["orbits_match_classes"]:
        problems.append("quandle orbits differ from conjugacy classes")
    coh = report.cohomology
    if coh.get("status") == "ok":
        if not coh["realization_consistent"]:
            problems.append("|H2(Z/n)| != |QZ-trivial| * |H2(Cx)|")
        if not coh["hs2_subset_bc"]:
            problems.append("symmetric classes not inside the Bogomolov subgroup")
    reps = report.reps
    if reps.get("status") == "ok":
        if reps["sum_dim_sq"] != report.order:
            problems.append("sum of squared irreducible dimensions != |G|")
        if reps.get("all_extractions_cx_trivial") is False:
            problems.append("a linear irreducible extracted a nontrivial class")
    env = report.enveloping
    if env["ab_rank"] != report.class_count or env["ab_torsion"]:
        problems.append("enveloping abelianization is not free on the classes")
    if not env["images_standard_basis_by_class"]:
        problems.append("generator images are not the standard class basis")
    if not env["pi_ab_well_defined"]:
        problems.append("pi x abelianization is not well defined")
    oracle = env.get("coset_oracle", {})
    if oracle.get("status") == "ok" and oracle.get("match") is False:
        problems.append("coset enumeration disagrees with the closed form")
    return problems


def _cmd_analyze(args) -> int:
    try:
        if args.group is not None:
            G = parse_group_token(args.group)
        else:
            G = group_from_perm_file(args.perm_file)
    except (ValidationError, OSError) as exc:
        print(f"qrep: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        report = analyze_group(G, seed=args.seed, tol=args.tol,
                               skip_coset_oracle=args.skip_coset_oracle,
                               skip_reps=args.skip_reps)
    except ResourceLimitError as exc:
        print(f"qrep: analysis aborted by resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    print(markdown_header())
    print(markdown_row(report))
    print()
    sys.stdout.write(report_json_bytes(report).decode())
    for section, seconds in report.timings.items():
        print(f"timing {section}: {seconds:.3f}s", file=sys.stderr)

    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "report.json").write_bytes(report_json_bytes(report))
        (outdir / "report.csv").write_text(report_csv_text(report))
        from .figures import render_report_figures

        for p in render_report_figures(report, outdir):
            print(f"wrote {p}", file=sys.stderr)

    problems = report_property_failures(report)
    for problem in problems:
        print(f"qrep: property failure: {problem}", file=sys.stderr)
    return EXIT_PROPERTY_FAILURE if problems else EXIT_PASS


def _cmd_verify(args) -> int:
    if args.max_order < 1:
        print("qrep: --max-order must be positive", file=sys.stderr)
        return EXIT_USAGE
    suite = verify_theorem_suite(max_order=args.max_order, seed=args.seed)
    sys.stdout.write(suite_csv_text(suite))
    print(f"suite: {'PASS' if suite.passed else 'FAIL'} "
          f"(max order {suite.max_order}, seed {suite.seed})")
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "suite.json").write_bytes(suite_json_bytes(suite))
        (outdir / "suite.csv").write_text(suite_csv_text(suite))
        from .figures import render_suite_figure

        for p in render_suite_figure(suite, outdir):
            print(f"wrote {p}", file=sys.stderr)
    return EXIT_PASS if suite.passed else EXIT_PROPERTY_FAILURE


def _cmd_catalog(_args) -> int:
    for token in CATALOG_TOKENS:
        G = parse_group_token(token)
        print(f"{token}\t{G.order}")
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_catalog(args)
    except ResourceLimitError as exc:
        print(f"qrep: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except QrepError as exc:
        print(f"qrep: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
