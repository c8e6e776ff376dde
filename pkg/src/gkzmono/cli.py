"""Command-line front end.

Matrices are given inline as JSON (-A '[[1,1,1],[0,1,2]]'), as @file, or
through --input pointing at a JSON file {"A": [[..]], "beta": [..]}.
Rational parameter entries are "p/q" strings (floats are rejected); complex
entries are {"re": "p/q", "im": "p/q"} objects.  Every command renders a
single report value either as text or, with --json, as JSON.

Exit codes: 0 success, 1 input error, 2 scale limit, 3 internal
inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import exporters, toric
from .classify import classify
from .cones import enumerate_faces, reduce_configuration
from .errors import InputError, InternalInconsistency, ScaleLimit
from .groebner import DEFAULT_STEP_BUDGET
from .intlinalg import IntMatrix, kernel_lattice_basis
from .resonance import describe_resonant_arrangement, resonance_centers
from .volume import normalized_volume

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SCALE = 2
EXIT_INTERNAL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkzmono",
        description="Exact reducibility classification for GKZ hypergeometric systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_beta):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-A", "--matrix", help="matrix as JSON [[..]] or @file")
        p.add_argument("--input", help="JSON file with {'A': [[..]], 'beta': [..]}")
        if needs_beta:
            p.add_argument("-b", "--beta", help="comma-separated p/q entries or JSON list")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument(
            "--faces-method",
            choices=("auto", "brute", "dd"),
            default="auto",
            help="face enumeration strategy (brute = feasibility oracle)",
        )
        p.add_argument(
            "--max-steps",
            type=int,
            default=DEFAULT_STEP_BUDGET,
            help="step budget for toric-ideal saturation",
        )
        return p

    add("reduce", "normalize (A, beta) so the columns generate Z^d", True)
    add("faces", "list all faces of the cone with witnesses", False)
    add("centers", "resonance report for beta", True)
    add("classify", "reducible/irreducible verdict with evidence", True)
    add("volume", "normalized volume (generic rank)", False)
    add("kernel", "basis of the integer kernel lattice", False)
    add("toric-ideal", "saturated toric ideal generators", False)
    exp = add("export", "write the hypergeometric system for external tools", True)
    exp.add_argument(
        "--format",
        choices=exporters.FORMATS,
        required=True,
        help="output format",
    )
    add("arrangement", "describe the resonant arrangement", False)
    return parser


def _load_matrix_literal(text: str) -> IntMatrix:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"matrix is not valid JSON: {exc}") from exc
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("matrix JSON must be a list of rows")
    try:
        return IntMatrix(rows)
    except TypeError as exc:
        raise InputError(f"matrix entries must be integers: {exc}") from exc


def _parse_beta_literal(text: str) -> list:
    text = text.strip()
    if text.startswith("["):
        try:
            entries = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"beta is not valid JSON: {exc}") from exc
        if not isinstance(entries, list):
            raise InputError("beta JSON must be a list")
        return entries
    return [tok.strip() for tok in text.split(",") if tok.strip()]


def _gather_input(args) -> tuple[IntMatrix, Optional[list]]:
    matrix = None
    beta = None
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            try:
                payload = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"input file is not valid JSON: {exc}") from exc
        if "A" not in payload:
            raise InputError("input file is missing the 'A' matrix")
        if not isinstance(payload["A"], list):
            raise InputError("input file field 'A' must be a list of rows")
        matrix = _load_matrix_literal(json.dumps(payload["A"]))
        beta = payload.get("beta")
    if getattr(args, "matrix", None):
        matrix = _load_matrix_literal(args.matrix)
    if getattr(args, "beta", None):
        beta = _parse_beta_literal(args.beta)
    if matrix is None:
        raise InputError("no matrix given (use -A or --input)")
    return matrix, beta


def _require_beta(beta, matrix) -> list:
    if beta is None:
        raise InputError("this command needs a parameter vector (use -b or --input)")
    if len(beta) != matrix.rows:
        raise InputError(
            f"beta has {len(beta)} entries but the matrix has {matrix.rows} rows"
        )
    return beta


def _render_faces(report: dict) -> str:
    lines = []
    for face in report["faces"]:
        indices = "{" + ",".join(str(j) for j in face["indices"]) + "}"
        witness = "(" + ",".join(str(x) for x in face["witness"]) + ")"
        lines.append(f"{indices} witness {witness}")
    return "\n".join(lines)


def _render_classify(report: dict) -> str:
    lines = [f"verdict: {report['verdict']}"]
    centers = ", ".join(
        "{" + ",".join(str(j) for j in c) + "}" for c in report["centers"]
    )
    lines.append(f"centers: {centers}")
    lines.append(f"generic rank: {report['generic_rank']}")
    for detail in report["center_details"]:
        indices = "{" + ",".join(str(j) for j in detail["indices"]) + "}"
        pyramid = detail["pyramid"]["is_pyramid"]
        vol = detail["face_volume"]
        vol_text = "n/a" if vol is None else str(vol)
        lines.append(f"center {indices}: pyramid={pyramid} face_volume={vol_text}")
    return "\n".join(lines)


def _render_centers(report: dict) -> str:
    centers = ", ".join(
        "{" + ",".join(str(j) for j in c["indices"]) + "}" for c in report["centers"]
    )
    lines = [
        f"nonresonant: {report['is_nonresonant']}",
        f"centers: {centers}",
        "member faces: "
        + ", ".join(
            "{" + ",".join(str(j) for j in f["indices"]) + "}"
            for f in report["member_faces"]
        ),
    ]
    return "\n".join(lines)


def _render_reduce(report: dict) -> str:
    return "\n".join(
        [
            f"A' = {report['A']}",
            f"beta' = {report['beta']}",
            f"B = {report['B']}",
        ]
    )


def _render_kernel(report: dict) -> str:
    if not report["kernel"]:
        return "(trivial kernel)"
    return "\n".join("(" + ",".join(str(x) for x in u) + ")" for u in report["kernel"])


def _render_arrangement(report: dict) -> str:
    if not report["components"]:
        return "(no proper faces: every parameter is nonresonant)"
    lines = []
    for comp in report["components"]:
        indices = "{" + ",".join(str(j) for j in comp["face"]["indices"]) + "}"
        lines.append(f"face {indices}: " + "; ".join(comp["congruences"]))
    return "\n".join(lines)


def _render_toric(report: dict) -> str:
    def mono(exps):
        parts = [
            f"d{j}" + (f"^{e}" if e > 1 else "")
            for j, e in enumerate(exps, start=1)
            if e
        ]
        return "*".join(parts) if parts else "1"

    if not report["binomials"]:
        return "(zero ideal)"
    lines = [f"{mono(b['plus'])} - {mono(b['minus'])}" for b in report["binomials"]]
    lines.append(f"saturated: {report['saturated']}")
    return "\n".join(lines)


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        matrix, beta = _gather_input(args)
        if args.command == "reduce":
            config, beta_red, basis = reduce_configuration(
                matrix, _require_beta(beta, matrix)
            )
            report = {
                "A": [list(r) for r in config.A.data],
                "beta": [b.to_json() for b in beta_red],
                "B": [list(r) for r in basis.data],
            }
            text = _render_reduce(report)
        elif args.command == "faces":
            config, _, _ = reduce_configuration(matrix, [0] * matrix.rows)
            lattice = enumerate_faces(config, method=args.faces_method)
            report = {"faces": lattice.to_json()}
            text = _render_faces(report)
        elif args.command == "centers":
            config, beta_red, _ = reduce_configuration(
                matrix, _require_beta(beta, matrix)
            )
            result = resonance_centers(config, beta_red, method=args.faces_method)
            report = result.to_json()
            text = _render_centers(report)
        elif args.command == "classify":
            result = classify(
                matrix, _require_beta(beta, matrix), faces_method=args.faces_method
            )
            report = result.to_json()
            text = _render_classify(report)
        elif args.command == "volume":
            config, _, _ = reduce_configuration(matrix, [0] * matrix.rows)
            result = normalized_volume(config)
            report = result.to_json()
            text = str(result.volume)
        elif args.command == "kernel":
            report = {"kernel": [list(u) for u in kernel_lattice_basis(matrix)]}
            text = _render_kernel(report)
        elif args.command == "toric-ideal":
            config, _, _ = reduce_configuration(matrix, [0] * matrix.rows)
            generators = toric.toric_ideal_generators(config, max_steps=args.max_steps)
            report = {
                "binomials": [b.to_json() for b in generators],
                "saturated": True,
            }
            text = _render_toric(report)
        elif args.command == "export":
            config, beta_red, _ = reduce_configuration(
                matrix, _require_beta(beta, matrix)
            )
            system = toric.hypergeometric_system(
                config, beta_red, max_steps=args.max_steps
            )
            print(exporters.export(system, args.format), end="")
            return EXIT_OK
        elif args.command == "arrangement":
            config, _, _ = reduce_configuration(matrix, [0] * matrix.rows)
            result = describe_resonant_arrangement(config, method=args.faces_method)
            report = {"components": result.to_json()}
            text = _render_arrangement(report)
        else:  # pragma: no cover - argparse enforces the choices
            raise InputError(f"unknown command {args.command}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ScaleLimit as exc:
        print(f"scale limit: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except InternalInconsistency as exc:
        print(f"internal inconsistency (bug): {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)
    return EXIT_OK


def main():  # pragma: no cover - thin wrapper
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":  # pragma: no cover
    main()
