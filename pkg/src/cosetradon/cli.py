"""Command-line front end.

Subcommands: ``verify`` runs claim suites and emits a deterministic report,
``matrix`` assembles one operator matrix, ``example`` evaluates the
complex-circle reconstruction grid, ``groups`` lists the built-in corpus.
When a report is written to a file, a companion figure is rendered next to
it unless --no-plot is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .corpus import DEFAULT_CORPUS, corpus_group, default_corpus_names, load_group
from .errors import CosetRadonError
from .complex_circle import default_grid, verify_reconstruction
from .groups import FiniteGroup, all_subgroups, generated_subgroup, subgroup
from .measures import constant_rho, rho_function
from .radon import (
    OperatorMatrix,
    coset_sum_matrix,
    descent_matrix,
    pullback_matrix,
    radon_dual_general_matrix,
    radon_dual_nested_matrix,
    radon_general_matrix,
    radon_nested_matrix,
    weighted_coset_sum_matrix,
)
from .report import exit_status, report_to_csv, report_to_json, summarize
from .serialize import matrix_to_csv, matrix_to_json, str_to_rational
from .suites import FAMILIES, SuiteConfig, config_dict, run_suite
from .transport import conjugacy_witness, transport_group_matrix, transport_quotient_matrix

MATRIX_OPS = (
    "radon-nested",
    "radon-dual-nested",
    "radon-general",
    "radon-dual-general",
    "coset-sum",
    "weighted-coset-sum",
    "pullback",
    "descent",
    "group-transport",
    "quotient-transport",
)


def _parse_subgroup_spec(group: FiniteGroup, spec: Optional[str]):
    """Parse a subgroup flag: 'e', 'all', or comma-separated generators."""
    if spec is None:
        return None
    text = spec.strip()
    if text in ("e", ""):
        return (group.identity,)
    if text == "all":
        return tuple(range(group.order))
    generators = [int(part) for part in text.split(",") if part.strip() != ""]
    return generated_subgroup(group, generators).elements


def _write_output(payload: str, out: Optional[str]) -> Optional[Path]:
    if out is None:
        sys.stdout.write(payload)
        return None
    path = Path(out)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(payload, encoding="utf-8")
    return path


def cmd_groups(args: argparse.Namespace) -> int:
    rows = []
    for name in default_corpus_names():
        group = corpus_group(name)
        rows.append(
            {
                "name": name,
                "order": group.order,
                "subgroups": len(all_subgroups(group)),
            }
        )
    if args.format == "json":
        payload = json.dumps(rows, sort_keys=True, indent=2) + "\n"
    else:
        lines = ["name,order,subgroups"]
        lines += [f"{r['name']},{r['order']},{r['subgroups']}" for r in rows]
        payload = "\n".join(lines) + "\n"
    _write_output(payload, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    groups = tuple(args.group) if args.group else default_corpus_names()
    families = tuple(args.family) if args.family else tuple(
        f for f in FAMILIES
    )
    explicit_l = explicit_h = explicit_k = None
    if args.subgroup_L or args.subgroup_H or args.subgroup_K:
        if len(groups) != 1:
            raise CosetRadonError(
                "explicit subgroup flags require exactly one --group"
            )
        the_group = load_group(groups[0])
        explicit_l = _parse_subgroup_spec(the_group, args.subgroup_L)
        explicit_h = _parse_subgroup_spec(the_group, args.subgroup_H)
        explicit_k = _parse_subgroup_spec(the_group, args.subgroup_K)
    config = SuiteConfig(
        groups=groups,
        families=families,
        convention=args.convention,
        seed=args.seed,
        explicit_l=explicit_l,
        explicit_h=explicit_h,
        explicit_k=explicit_k,
        samples=args.samples,
        rho_samples=args.rho_samples,
        inject_failure=args.inject_failure,
    )
    started = time.perf_counter()
    cases = run_suite(config)
    elapsed = time.perf_counter() - started

    if args.format == "json":
        payload = report_to_json(cases, config_dict(config))
    else:
        payload = report_to_csv(cases)
    out_path = _write_output(payload, args.out)

    counts = summarize(cases)
    print(
        f"{len(cases)} cases: {counts['pass']} pass, {counts['fail']} fail, "
        f"{counts['recorded']} recorded ({elapsed:.2f}s)",
        file=sys.stderr,
    )
    if out_path is not None and not args.no_plot:
        from .plots import save_report_figure

        figure = save_report_figure(cases, out_path)
        print(f"figure: {figure}", file=sys.stderr)
    return exit_status(cases)


def _resolve_matrix(args: argparse.Namespace) -> OperatorMatrix:
    group = load_group(args.group)

    def need(flag_value: Optional[str], flag_name: str):
        if flag_value is None:
            raise CosetRadonError(f"--op {args.op} requires {flag_name}")
        return subgroup(group, _parse_subgroup_spec(group, flag_value))

    convention = args.convention
    if args.op == "radon-nested":
        return radon_nested_matrix(
            group,
            need(args.subgroup_L, "--subgroup-L"),
            need(args.subgroup_H, "--subgroup-H"),
            convention or "normalized",
        )
    if args.op == "radon-dual-nested":
        return radon_dual_nested_matrix(
            group,
            need(args.subgroup_L, "--subgroup-L"),
            need(args.subgroup_H, "--subgroup-H"),
        )
    if args.op == "radon-general":
        return radon_general_matrix(
            group,
            need(args.subgroup_K, "--subgroup-K"),
            need(args.subgroup_H, "--subgroup-H"),
            convention or "normalized",
        )
    if args.op == "radon-dual-general":
        return radon_dual_general_matrix(
            group,
            need(args.subgroup_K, "--subgroup-K"),
            need(args.subgroup_H, "--subgroup-H"),
            convention or "normalized",
        )
    if args.op == "coset-sum":
        return coset_sum_matrix(
            group, need(args.subgroup_H, "--subgroup-H"), convention or "counting"
        )
    if args.op == "weighted-coset-sum":
        sub = need(args.subgroup_H, "--subgroup-H")
        if args.rho is not None:
            values = [str_to_rational(v) for v in json.loads(Path(args.rho).read_text())]
            rho = rho_function(group, sub, values)
        else:
            rho = constant_rho(group, sub)
        return weighted_coset_sum_matrix(group, rho, convention or "counting")
    if args.op == "pullback":
        return pullback_matrix(group, need(args.subgroup_H, "--subgroup-H"))
    if args.op == "descent":
        return descent_matrix(
            group, need(args.subgroup_H, "--subgroup-H"), convention or "normalized"
        )
    if args.op in ("group-transport", "quotient-transport"):
        witness = conjugacy_witness(
            group,
            need(args.subgroup_K, "--subgroup-K"),
            need(args.subgroup_H, "--subgroup-H"),
        )
        if args.op == "group-transport":
            return transport_group_matrix(witness)
        return transport_quotient_matrix(witness)
    raise CosetRadonError(f"unknown matrix op {args.op!r}")


def cmd_matrix(args: argparse.Namespace) -> int:
    matrix = _resolve_matrix(args)
    payload = matrix_to_json(matrix) if args.format == "json" else matrix_to_csv(matrix)
    out_path = _write_output(payload, args.out)
    if out_path is not None and not args.no_plot:
        from .plots import save_matrix_figure

        figure = save_matrix_figure(matrix, out_path)
        print(f"figure: {figure}", file=sys.stderr)
    return 0


def cmd_example(args: argparse.Namespace) -> int:
    grid = default_grid(
        radii=args.radii, angles=args.angles, r_min=args.r_min, r_max=args.r_max
    )
    report = verify_reconstruction(grid, tolerance=args.tolerance)
    if args.format == "json":
        payload = (
            json.dumps(
                {
                    "max_deviation": report.max_deviation,
                    "max_invariance_deviation": report.max_invariance_deviation,
                    "passed": report.passed,
                    "rows": [
                        {
                            "r": row.radius,
                            "angle": row.angle,
                            "f": row.f,
                            "radon": row.radon,
                            "deviation": row.deviation,
                        }
                        for row in report.rows
                    ],
                    "tolerance": report.tolerance,
                },
                sort_keys=True,
                indent=2,
            )
            + "\n"
        )
    else:
        lines = ["r,angle,f,radon,deviation"]
        lines += [
            f"{row.radius!r},{row.angle!r},{row.f!r},{row.radon!r},{row.deviation!r}"
            for row in report.rows
        ]
        payload = "\n".join(lines) + "\n"
    out_path = _write_output(payload, args.out)
    print(
        f"max deviation {report.max_deviation:.3e} over {len(report.rows)} samples "
        f"({'pass' if report.passed else 'FAIL'})",
        file=sys.stderr,
    )
    if out_path is not None and not args.no_plot:
        from .plots import save_example_figure

        figure = save_example_figure(report.rows, out_path)
        print(f"figure: {figure}", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosetradon",
        description=(
            "Exact verification of Radon transforms, quasi-invariant measures, "
            "and transport isomorphisms on coset spaces of finite groups."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    groups_parser = subparsers.add_parser("groups", help="list the built-in corpus")
    groups_parser.add_argument("--format", choices=("json", "csv"), default="csv")
    groups_parser.add_argument("--out", default=None, help="write output to this path")
    groups_parser.set_defaults(func=cmd_groups)

    verify_parser = subparsers.add_parser(
        "verify", help="run claim suites and emit a deterministic report"
    )
    verify_parser.add_argument(
        "--group",
        action="append",
        default=None,
        help=f"corpus name, constructor (cyclic:N, ...), or JSON file; "
        f"repeatable (default: {','.join(DEFAULT_CORPUS)})",
    )
    verify_parser.add_argument(
        "--family",
        action="append",
        choices=FAMILIES,
        default=None,
        help="claim family to run; repeatable (default: all)",
    )
    verify_parser.add_argument("--subgroup-L", default=None, help="generators, 'e', or 'all'")
    verify_parser.add_argument("--subgroup-H", default=None, help="generators, 'e', or 'all'")
    verify_parser.add_argument("--subgroup-K", default=None, help="generators, 'e', or 'all'")
    verify_parser.add_argument(
        "--convention", choices=("counting", "normalized"), default="counting"
    )
    verify_parser.add_argument("--seed", type=int, default=0)
    verify_parser.add_argument("--samples", type=int, default=100)
    verify_parser.add_argument("--rho-samples", type=int, default=10)
    verify_parser.add_argument("--format", choices=("json", "csv"), default="json")
    verify_parser.add_argument("--out", default=None)
    verify_parser.add_argument("--no-plot", action="store_true")
    verify_parser.add_argument(
        "--inject-failure", action="store_true", help=argparse.SUPPRESS
    )
    verify_parser.set_defaults(func=cmd_verify)

    matrix_parser = subparsers.add_parser("matrix", help="assemble one operator matrix")
    matrix_parser.add_argument("--group", required=True)
    matrix_parser.add_argument("--op", choices=MATRIX_OPS, required=True)
    matrix_parser.add_argument("--subgroup-L", default=None)
    matrix_parser.add_argument("--subgroup-H", default=None)
    matrix_parser.add_argument("--subgroup-K", default=None)
    matrix_parser.add_argument(
        "--convention", choices=("counting", "normalized"), default=None
    )
    matrix_parser.add_argument(
        "--rho", default=None, help="JSON file of rational strings (weighted-coset-sum)"
    )
    matrix_parser.add_argument("--format", choices=("json", "csv"), default="csv")
    matrix_parser.add_argument("--out", default=None)
    matrix_parser.add_argument("--no-plot", action="store_true")
    matrix_parser.set_defaults(func=cmd_matrix)

    example_parser = subparsers.add_parser(
        "example", help="evaluate the complex-circle reconstruction grid"
    )
    example_parser.add_argument("--radii", type=int, default=100)
    example_parser.add_argument("--angles", type=int, default=8)
    example_parser.add_argument("--r-min", type=float, default=0.01)
    example_parser.add_argument("--r-max", type=float, default=2.0)
    example_parser.add_argument("--tolerance", type=float, default=1e-12)
    example_parser.add_argument("--format", choices=("csv", "json"), default="csv")
    example_parser.add_argument("--out", default=None)
    example_parser.add_argument("--no-plot", action="store_true")
    example_parser.set_defaults(func=cmd_example)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CosetRadonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
