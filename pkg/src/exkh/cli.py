"""Command-line interface.

Subcommands: ``info`` (diagram summary), ``homology`` (extreme-grading
homology via faces, cube, or both), ``verify`` (the machine-check suites
over a single diagram or a corpus).  Output is deterministic byte for
byte for fixed inputs and flags; wall-clock data never appears.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 resource cap reached.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .corpus import check_expected, load_corpus
from .diagram import link_diagram
from .exceptions import CubeTooLarge, ExkhError, TooManyFaces
from .homology import GradedAbelianGroup
from .lando import (
    DEFAULT_FACE_LIMIT,
    extreme_khovanov_homology,
    independence_complex,
    jmax_khovanov_homology,
    lando_graph,
)
from .oracle import jmax, jmin, khovanov_homology
from .resolution import DEFAULT_CUBE_CAP, State, looks_nonplanar, resolve
from .verify import verify_diagram

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _read_input(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    try:
        p = Path(spec)
        if p.exists() and p.is_file():
            return p.read_text()
    except OSError:  # inline PD text can exceed path-length limits
        pass
    return spec


def _default_cube_cap() -> int:
    env = os.environ.get("EXKH_CUBE_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_CUBE_CAP


def _add_common(parser: argparse.ArgumentParser, with_cube: bool = True):
    parser.add_argument(
        "-i",
        "--input",
        required=False,
        help="PD text, a file containing it, or - for stdin",
    )
    parser.add_argument(
        "--face-limit",
        type=int,
        default=DEFAULT_FACE_LIMIT,
        help="abort face enumeration beyond this many faces",
    )
    parser.add_argument(
        "--format",
        choices=("table", "json"),
        default="table",
        help="output format",
    )
    if with_cube:
        parser.add_argument(
            "--cube-cap",
            type=int,
            default=None,
            help="largest crossing count for full-cube work "
            "(default 20, or EXKH_CUBE_CAP)",
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exkh",
        description="extreme Khovanov homology of link diagrams, "
        "computed and cross-verified two independent ways",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="summarize a diagram")
    _add_common(p_info, with_cube=False)

    p_hom = sub.add_parser("homology", help="homology at an extreme grading")
    _add_common(p_hom)
    p_hom.add_argument(
        "--grading",
        default="min",
        help="min, max, or an explicit quantum grading (integer)",
    )
    p_hom.add_argument(
        "--via",
        choices=("extreme", "oracle", "both"),
        default="extreme",
        help="face pipeline, cube oracle, or both with a match verdict",
    )
    p_hom.add_argument("--out", help="also write a JSON result to this path")

    p_ver = sub.add_parser("verify", help="run the verification suites")
    _add_common(p_ver)
    p_ver.add_argument(
        "--corpus",
        help="corpus JSON path; the bundled corpus when neither "
        "--input nor --corpus is given",
    )
    p_ver.add_argument("--out", help="also write a JSON report to this path")
    return parser


def _group_table(group: GradedAbelianGroup) -> str:
    return str(group)


def cmd_info(args) -> int:
    if not args.input:
        print("info needs --input", file=sys.stderr)
        return EXIT_INPUT
    d = link_diagram(_read_input(args.input))
    g = lando_graph(d)
    x = independence_complex(g, args.face_limit)
    rows = [
        ("crossings", d.n),
        ("positive crossings", d.n_plus),
        ("negative crossings", d.n_minus),
        ("unknotted components", d.unknotted_components),
        ("circles of the zero smoothing", resolve(d, State.zero(d.n)).circle_count),
        ("j_min", jmin(d)),
        ("j_max", jmax(d)),
        ("chord graph vertices", len(g.vertices)),
        ("chord graph edges", len(g.edges)),
        ("independence complex faces", x.face_count),
        ("independence complex dim", x.dim),
    ]
    warn = looks_nonplanar(d)
    if args.format == "json":
        data = {k.replace(" ", "_"): v for k, v in rows}
        data["nonplanar_suspect"] = warn
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        width = max(len(k) for k, _ in rows)
        for k, v in rows:
            print(f"{k:<{width}}  {v}")
        if warn:
            print("warning: circle counts exceed the planar bound; "
                  "this code does not describe a planar diagram")
    return EXIT_OK


def cmd_homology(args) -> int:
    if not args.input:
        print("homology needs --input", file=sys.stderr)
        return EXIT_INPUT
    cube_cap = args.cube_cap if args.cube_cap is not None else _default_cube_cap()
    d = link_diagram(_read_input(args.input))

    selector = args.grading
    if selector not in ("min", "max"):
        try:
            j = int(selector)
        except ValueError:
            print(
                f"--grading must be min, max, or an integer, not {selector!r}",
                file=sys.stderr,
            )
            return EXIT_INPUT
        if args.via != "oracle":
            print(
                "an explicit quantum grading requires the cube: pass --via oracle",
                file=sys.stderr,
            )
            return EXIT_INPUT
        results = {"oracle": khovanov_homology(d, j, cube_cap)}
    else:
        j = jmin(d) if selector == "min" else jmax(d)
        results = {}
        if args.via in ("extreme", "both"):
            results["extreme"] = (
                extreme_khovanov_homology(d, args.face_limit)
                if selector == "min"
                else jmax_khovanov_homology(d, args.face_limit)
            )
        if args.via in ("oracle", "both"):
            results["oracle"] = khovanov_homology(d, j, cube_cap)

    match = None
    if len(results) == 2:
        match = results["extreme"] == results["oracle"]

    if args.format == "json":
        data = {
            "quantum_grading": j,
            "selector": selector,
            "results": {k: v.to_json_dict() for k, v in results.items()},
        }
        if match is not None:
            data["match"] = match
        text = json.dumps(data, indent=2, sort_keys=True)
    else:
        lines = [f"quantum grading j = {j} ({selector})"]
        for k in sorted(results):
            lines.append(f"via {k}: {_group_table(results[k])}")
        if match is not None:
            lines.append("verdict: MATCH" if match else "verdict: MISMATCH")
        text = "\n".join(lines)
    print(text)
    if args.out:
        data = {
            "quantum_grading": j,
            "selector": selector,
            "results": {k: v.to_json_dict() for k, v in results.items()},
        }
        if match is not None:
            data["match"] = match
        Path(args.out).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    if match is False:
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_verify(args) -> int:
    cube_cap = args.cube_cap if args.cube_cap is not None else _default_cube_cap()
    reports = []
    failures = []

    if args.input:
        d = link_diagram(_read_input(args.input))
        if d.n > cube_cap:
            print(
                f"diagram has {d.n} crossings, above the cube cap {cube_cap}; "
                "full verification needs the cube oracle",
                file=sys.stderr,
            )
            return EXIT_RESOURCE
        rep = verify_diagram(d, "input", cube_cap, args.face_limit)
        reports.append(rep.to_json_dict())
        if not rep.passed:
            failures.append(rep.first_witness())
        if args.format == "table":
            print(rep.to_table())
        else:
            print(json.dumps(reports[0], indent=2, sort_keys=True))
    else:
        entries = load_corpus(args.corpus)
        out_lines = []
        for entry in entries:
            d = entry.diagram()
            checks = [
                {"name": name, "passed": ok, "witness": witness}
                for name, ok, witness in check_expected(entry, args.face_limit)
            ]
            oracle_ran = d.n <= cube_cap
            if oracle_ran:
                rep = verify_diagram(d, entry.name, cube_cap, args.face_limit)
                checks.extend(
                    {"name": c.name, "passed": c.passed, "witness": c.witness}
                    for c in rep.checks
                )
            passed = all(c["passed"] for c in checks)
            reports.append(
                {
                    "diagram": entry.name,
                    "oracle": "checked" if oracle_ran else "skipped (cube cap)",
                    "passed": passed,
                    "checks": checks,
                }
            )
            if not passed:
                first = next(c for c in checks if not c["passed"])
                failures.append(
                    f"{entry.name}: {first['name']}: {first['witness']}"
                )
            status = "pass" if passed else "FAIL"
            extent = "full" if oracle_ran else "faces-only"
            out_lines.append(f"[{status}] {entry.name} ({extent}, {len(checks)} checks)")
        if args.format == "table":
            print("\n".join(out_lines))
            print(
                "note: certifies graded integral cohomology only; "
                "the stable equivalence itself is not machine-checked"
            )
        else:
            print(json.dumps({"reports": reports}, indent=2, sort_keys=True))

    if args.out:
        Path(args.out).write_text(
            json.dumps(
                {"reports": reports, "passed": not failures},
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
    if failures:
        print(f"first failure: {failures[0]}", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "info":
            return cmd_info(args)
        if args.command == "homology":
            return cmd_homology(args)
        if args.command == "verify":
            return cmd_verify(args)
    except CubeTooLarge as exc:
        hint = " (drop --via oracle or raise --cube-cap)"
        print(f"error: {exc}{hint}", file=sys.stderr)
        return EXIT_RESOURCE
    except TooManyFaces as exc:
        print(f"error: {exc} (raise --face-limit)", file=sys.stderr)
        return EXIT_RESOURCE
    except ExkhError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
