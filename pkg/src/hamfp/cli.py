"""Command-line interface: generate, verify, classify.

Exit codes form a stable scripting contract: 0 when every check passes, 1
when some check fails, 2 for malformed input or usage errors. Reports are
deterministic (byte-identical for identical inputs and flags); --json emits
a machine-readable report with all large integers as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import dataio
from .basis import BasisRestrictions, build_basis, express_in_basis
from .errors import (
    DataError,
    DegenerateGammaError,
    ExpansionError,
    IntegralityError,
    InvalidGeneratorError,
    NotAManifoldError,
)
from .fpdata import (
    CheckResult,
    FixedPointData,
    make_standard_g2,
    point_invariants,
    validate,
)
from .grassring import (
    basis_images,
    betti,
    ordinary_chern,
    ring_integral,
    ring_make,
    ring_mul,
)
from .localize import (
    chern_number,
    chern_restriction,
    integrate,
    pairing_matrix,
    partitions,
    symplectic_class,
)
from .solver import check_symmetry, classify

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _fmt_fraction(value: Fraction) -> str:
    return str(value)


def _point_lines(data: FixedPointData) -> list[str]:
    lines = []
    for i, p in enumerate(data.points):
        inv = point_invariants(data, i)
        weights = ", ".join(str(w) for w in p.weights)
        lines.append(
            f"  P{i}  phi={p.phi}  weights=({weights})  Gamma={inv.gamma}  "
            f"Lambda={inv.lambda_full}  L-={inv.lambda_minus}  L+={inv.lambda_plus}"
        )
    return lines


def _point_json(data: FixedPointData) -> list[dict[str, Any]]:
    out = []
    for i, p in enumerate(data.points):
        inv = point_invariants(data, i)
        out.append(
            {
                "phi": str(p.phi),
                "weights": [str(w) for w in p.weights],
                "gamma": str(inv.gamma),
                "lambda": str(inv.lambda_full),
                "lambda_minus": str(inv.lambda_minus),
                "lambda_plus": str(inv.lambda_plus),
            }
        )
    return out


def _check_lines(checks: list[CheckResult]) -> list[str]:
    return [
        f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in checks
    ]


def _checks_json(checks: list[CheckResult]) -> list[dict[str, Any]]:
    return [
        {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
    ]


def _localization_checks(data: FixedPointData) -> list[CheckResult]:
    checks = []
    u = symplectic_class(data)
    failures = []
    for a in range(1, data.n):
        try:
            integrate(data, u.power(a))
        except NotAManifoldError as exc:
            failures.append(f"power {a}: {exc}")
    checks.append(
        CheckResult(
            "symplectic-class-vanishing",
            not failures,
            "; ".join(failures)
            if failures
            else f"powers 1..{data.n - 1} all integrate to 0",
        )
    )
    euler = integrate(data, chern_restriction(data, data.n)).coeff
    checks.append(
        CheckResult(
            "euler-characteristic",
            euler == data.n + 2,
            f"top Chern class integrates to {euler}, fixed points: {data.n + 2}",
        )
    )
    return checks


def _basis_section(data: FixedPointData, basis: BasisRestrictions) -> dict[str, Any]:
    matrix = [[_fmt_fraction(c) for c in row.coeffs] for row in basis.rows]
    integral = all(c.denominator == 1 for row in basis.rows for c in row.coeffs)
    check = CheckResult(
        "basis-integrality",
        integral,
        "all restriction entries are integers"
        if integral
        else "fractional restriction entries found",
    )
    return {
        "matrix": matrix,
        "half_degrees": list(basis.half_degrees),
        "checks": [check],
    }


def _chern_section(data: FixedPointData, basis: BasisRestrictions) -> dict[str, Any]:
    checks = []
    expansions = {}
    all_integral = True
    first_coeff = None
    try:
        for i in range(1, data.n + 1):
            expansion = express_in_basis(basis, chern_restriction(data, i))
            expansions[f"c_{i}"] = [
                {"coefficient": _fmt_fraction(c), "t_power": p}
                for c, p in expansion.terms
            ]
            all_integral = all_integral and expansion.integral
            if i == 1:
                first_coeff = expansion.terms[1][0]
    except ExpansionError as exc:
        return {
            "expansions": expansions,
            "checks": [CheckResult("chern-expansion-integrality", False, str(exc))],
        }
    checks.append(
        CheckResult(
            "chern-expansion-integrality",
            all_integral,
            "all expansion coefficients are integers"
            if all_integral
            else "fractional expansion coefficients found",
        )
    )
    checks.append(
        CheckResult(
            "first-chern-coefficient",
            first_coeff == data.n,
            f"coefficient of the degree-2 basis row is {first_coeff}, n is {data.n}",
        )
    )
    section: dict[str, Any] = {"expansions": expansions}
    numbers = {}
    numbers_integral = True
    try:
        for parts in partitions(data.n):
            value = chern_number(data, parts)
            key = "{" + ",".join(str(p) for p in parts) + "}"
            numbers[key] = _fmt_fraction(value)
            numbers_integral = numbers_integral and value.denominator == 1
        checks.append(
            CheckResult(
                "chern-numbers-integral",
                numbers_integral,
                "all Chern numbers are integers"
                if numbers_integral
                else "fractional Chern numbers found",
            )
        )
    except NotAManifoldError as exc:
        checks.append(CheckResult("chern-numbers-integral", False, str(exc)))
    section["numbers"] = numbers
    if all_integral:
        table = ring_make(data.n)
        classes = ordinary_chern(data, basis, table)
        section["ordinary"] = {
            f"c_{i + 1}": str(elem) for i, elem in enumerate(classes)
        }
        section["betti"] = betti(data.n)
    section["checks"] = checks
    return section


def _pairing_section(data: FixedPointData, basis: BasisRestrictions) -> dict[str, Any]:
    checks = []
    half = data.n // 2
    try:
        matrix = pairing_matrix(data, basis)
    except (IntegralityError, NotAManifoldError) as exc:
        return {"checks": [CheckResult("pairing-integrality", False, str(exc))]}
    checks.append(
        CheckResult("pairing-integrality", True, "all pairings are integers")
    )
    block = [
        [matrix[half][half], matrix[half][half + 1]],
        [matrix[half + 1][half], matrix[half + 1][half + 1]],
    ]
    det = block[0][0] * block[1][1] - block[0][1] * block[1][0]
    checks.append(
        CheckResult(
            "middle-block-unimodular",
            det in (1, -1),
            f"middle block {block} has determinant {det}",
        )
    )
    table = ring_make(data.n)
    images = basis_images(table)
    ring_matches = all(
        matrix[i][j]
        == ring_integral(table, ring_mul(table, images[i], images[j]))
        for i in range(data.n + 2)
        for j in range(data.n + 2)
        if basis.rows[i].degree_half + basis.rows[j].degree_half == data.n
    )
    checks.append(
        CheckResult(
            "pairing-matches-ring",
            ring_matches,
            "localization pairing equals the ring pairing of the ordinary images"
            if ring_matches
            else "localization pairing differs from the ring pairing",
        )
    )
    return {"matrix": matrix, "middle_block": block, "determinant": det, "checks": checks}


def _render_verify(report: dict[str, Any], as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2, sort_keys=True)
    lines = [f"fixed-point data: n={report['n']}, {report['n'] + 2} fixed points"]
    lines += report["_point_lines"]
    lines.append("checks:")
    for section_name in ("validation", "localization", "basis", "chern", "pairing"):
        section = report.get(section_name)
        if not section:
            continue
        lines += _check_lines(section["_checks"])
    if "pairing" in report and "middle_block" in report["pairing"]:
        p = report["pairing"]
        lines.append(
            f"middle pairing block {p['middle_block']} determinant {p['determinant']}"
        )
    if "chern" in report and "ordinary" in report["chern"]:
        ordinary = report["chern"]["ordinary"]
        lines.append(
            "ordinary Chern classes: "
            + "; ".join(f"{k} = {v}" for k, v in ordinary.items())
        )
    lines.append("result: " + ("PASS" if report["passed"] else "FAIL"))
    return "\n".join(lines)


def _strip_private(report: Any) -> Any:
    if isinstance(report, dict):
        return {
            k: _strip_private(v) for k, v in report.items() if not k.startswith("_")
        }
    if isinstance(report, list):
        return [_strip_private(v) for v in report]
    if isinstance(report, CheckResult):
        return {"name": report.name, "passed": report.passed, "detail": report.detail}
    return report


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        exponents = [int(part) for part in args.b.split(",") if part.strip() != ""]
    except ValueError:
        print(f"error: --b expects comma-separated integers, got {args.b!r}",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        data = make_standard_g2(exponents)
    except InvalidGeneratorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = dataio.data_to_document(data)
    if args.out:
        dataio.dump_document(doc, args.out)
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"standard fixed-point data: n={data.n}, {data.n + 2} fixed points")
        for line in _point_lines(data):
            print(line)
        if args.out:
            print(f"written to {args.out}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        data = dataio.data_from_document(dataio.load_document(args.path))
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    report: dict[str, Any] = {"command": "verify", "n": data.n}
    report["points"] = _point_json(data)
    report["_point_lines"] = _point_lines(data)

    validation = validate(data)
    report["validation"] = {
        "_checks": list(validation.checks),
        "checks": _checks_json(list(validation.checks)),
    }
    loc_checks = _localization_checks(data)
    report["localization"] = {
        "_checks": loc_checks,
        "checks": _checks_json(loc_checks),
    }

    basis = None
    if args.basis or args.chern or args.pairing:
        try:
            basis = build_basis(data)
        except DegenerateGammaError as exc:
            fail = CheckResult("basis-construction", False, str(exc))
            report["basis"] = {"_checks": [fail], "checks": _checks_json([fail])}
    if basis is not None and args.basis:
        section = _basis_section(data, basis)
        section["_checks"] = section.pop("checks")
        section["checks"] = _checks_json(section["_checks"])
        report["basis"] = section
    if basis is not None and args.chern:
        section = _chern_section(data, basis)
        section["_checks"] = section.pop("checks")
        section["checks"] = _checks_json(section["_checks"])
        report["chern"] = section
    if basis is not None and args.pairing:
        section = _pairing_section(data, basis)
        section["_checks"] = section.pop("checks")
        section["checks"] = _checks_json(section["_checks"])
        report["pairing"] = section

    all_checks: list[CheckResult] = []
    for name in ("validation", "localization", "basis", "chern", "pairing"):
        if name in report and "_checks" in report[name]:
            all_checks += report[name]["_checks"]
    report["passed"] = all(c.passed for c in all_checks)

    print(_render_verify(_strip_private(report) if args.json else report, args.json))
    return EXIT_OK if report["passed"] else EXIT_CHECK_FAILED


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        profile = dataio.profile_from_document(dataio.load_document(args.path))
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdict = classify(profile, args.bound)
    symmetric = check_symmetry(profile)
    if args.json:
        doc = {
            "command": "classify",
            "n": profile.n,
            "phi": [str(v) for v in profile.phi],
            "bound": profile.spread if args.bound is None else args.bound,
            "candidates": [
                dataio.data_to_document(c) for c in verdict.candidates
            ],
            "candidate_count": len(verdict.candidates),
            "unique_standard": verdict.is_unique_standard,
            "symmetric": symmetric,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        phis = ", ".join(str(v) for v in profile.phi)
        print(f"profile: n={profile.n}, phi=({phis})")
        print(f"symmetric about the middle pair: {'yes' if symmetric else 'no'}")
        print(f"{len(verdict.candidates)} candidate(s)")
        for k, cand in enumerate(verdict.candidates):
            print(f"candidate {k}:")
            for line in _point_lines(cand):
                print(line)
        print(f"unique standard data: {'yes' if verdict.is_unique_standard else 'no'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamfp",
        description=(
            "Exact verification and classification of fixed-point data of "
            "Hamiltonian circle actions with n+2 isolated fixed points."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser(
        "generate", help="emit the standard dataset for given exponents"
    )
    gen.add_argument("--b", required=True, help="comma-separated distinct integers")
    gen.add_argument("--out", help="write the dataset as JSON to this path")
    gen.add_argument("--json", action="store_true", help="print the JSON document")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="run all checks on a dataset file")
    ver.add_argument("path", help="dataset JSON file (with weights)")
    ver.add_argument("--chern", action="store_true", help="Chern expansions and numbers")
    ver.add_argument("--basis", action="store_true", help="basis restriction matrix")
    ver.add_argument("--pairing", action="store_true", help="intersection pairing")
    ver.add_argument("--json", action="store_true", help="machine-readable report")
    ver.set_defaults(func=cmd_verify)

    cls = sub.add_parser("classify", help="enumerate weight data for a profile")
    cls.add_argument("path", help="profile JSON file (no weights)")
    cls.add_argument("--bound", type=int, default=None, help="weight magnitude bound")
    cls.add_argument("--json", action="store_true", help="machine-readable report")
    cls.set_defaults(func=cmd_classify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
