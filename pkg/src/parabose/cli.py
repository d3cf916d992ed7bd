"""Command-line front door.

Subcommands:

    classify   resolve (k, m, p, group) to a module summary
    rmatrix    build an R-matrix and export it as JSON or CSV
    verify     run one named residual check; exit 0 pass / 1 fail
    reproduce  compare built matrices against the golden fixtures
    selftest   a compact battery of the above

All stdout is deterministic JSON (fixed field order, floats at 17
significant digits).  Exit codes: 0 success/pass, 1 verification failure or
numeric singularity, 2 invalid input.
"""

import argparse
import json
import sys

import numpy as np

from .braid import DEFAULT_SIZE_CAP, braid_generators, braid_relation_residual, intertwiner_commutant_residual
from .document import document_matrix, dumps_document, dumps_entries_csv, fmt_float, loads_document, matrix_document
from .errors import QAlgebraError, SingularFactorError, ZeroDenominatorError
from .fock import (
    Group,
    build_module,
    canonical_p,
    central_values,
    classify,
    defining_relation_residual,
)
from .golden import GOLDEN_CASE_IDS, reproduce_case
from .rmatrix import intertwine_residual, qybe_residual, r_explicit, r_universal, weight_conservation_residual
from .roots import make_root

PASS, FAIL, INVALID = 0, 1, 2


def parse_complex(text: str) -> complex:
    """Parse 're' or 're,im' into a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def _jvalue(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return fmt_float(v)
    if isinstance(v, complex):
        return "[" + fmt_float(v.real) + "," + fmt_float(v.imag) + "]"
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_jvalue(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ",".join(json.dumps(k) + ":" + _jvalue(x) for k, x in v.items()) + "}"
    if v is None:
        return "null"
    raise TypeError(f"cannot serialize {type(v)}")


def emit(obj: dict):
    """Write one deterministic JSON object to stdout."""
    sys.stdout.write(_jvalue(obj) + "\n")


def _auto_group(root, p) -> Group:
    """Default representation group: the irreducible one matching p's arithmetic."""
    from .fock import _as_int

    n = _as_int(complex(p))
    if root.root_class.value == "I":
        return Group.Ib if n is not None else Group.Ia
    return Group.IIb if (n is not None and n % 2 == 0) else Group.IIa


def _resolve_group(root, p, group_flag):
    if group_flag in (None, "auto"):
        return _auto_group(root, p)
    return Group(group_flag)


def _module(args, p, group_flag):
    root = make_root(args.k, args.m)
    spec = classify(root, p, _resolve_group(root, p, group_flag))
    return build_module(spec)


def cmd_classify(args) -> int:
    root = make_root(args.k, args.m)
    spec = classify(root, args.p, _resolve_group(root, args.p, args.group))
    emit(
        {
            "schema_version": "1",
            "k": root.k,
            "m": root.m,
            "class": root.root_class.value,
            "group": spec.group.value,
            "p": spec.p,
            "canonical_p": canonical_p(root, spec.p),
            "L": spec.L,
            "dim": spec.dim,
            "indecomposable": spec.indecomposable,
            "universal_r_known_absent": root.universal_r_known_absent,
        }
    )
    return PASS


def cmd_rmatrix(args) -> int:
    mod1 = _module(args, args.p1, args.group1)
    mod2 = _module(args, args.p2, args.group2)
    build = r_explicit if args.method == "explicit" else r_universal
    rmat = build(mod1, mod2)
    doc = matrix_document(rmat)
    if args.format == "json":
        payload = dumps_document(doc)
    else:
        payload = dumps_entries_csv(rmat.matrix)
    summary = {
        "schema_version": "1",
        "dim": rmat.dim,
        "construction": rmat.construction.value,
        "entries": len(doc["entries"]),
        "format": args.format,
    }
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
        summary["out"] = args.out
        emit(summary)
    else:
        sys.stdout.write(payload)
        sys.stderr.write(_jvalue(summary) + "\n")
    return PASS


def _report(check: str, parameters: dict, residuals: dict, tol: float):
    verdict = "pass" if all(r <= tol for r in residuals.values()) else "fail"
    emit(
        {
            "schema_version": "1",
            "check": check,
            "parameters": parameters,
            "residuals": residuals,
            "tolerance": tol,
            "verdict": verdict,
        }
    )
    return PASS if verdict == "pass" else FAIL


def cmd_verify(args) -> int:
    tol = args.tol
    if args.check == "qybe":
        for flag in ("p1", "p2", "p3"):
            if getattr(args, flag) is None:
                raise QAlgebraError("missing-flag", f"verify qybe requires --{flag}")
        mods = [
            _module(args, args.p1, args.group1),
            _module(args, args.p2, args.group2),
            _module(args, args.p3, args.group3),
        ]
        res = qybe_residual(*mods)
        params = {"k": args.k, "m": args.m, "p": [m.p for m in mods], "groups": [m.spec.group.value for m in mods]}
        return _report("qybe", params, {"qybe": res}, tol)

    if args.check == "intertwine":
        for flag in ("p1", "p2"):
            if getattr(args, flag) is None:
                raise QAlgebraError("missing-flag", f"verify intertwine requires --{flag}")
        m1 = _module(args, args.p1, args.group1)
        m2 = _module(args, args.p2, args.group2)
        residuals = {
            "intertwine": intertwine_residual(m1, m2),
            "weight_conservation": weight_conservation_residual(m1, m2),
        }
        params = {"k": args.k, "m": args.m, "p": [m1.p, m2.p], "groups": [m1.spec.group.value, m2.spec.group.value]}
        return _report("intertwine", params, residuals, tol)

    if args.check == "braid":
        if args.p is None:
            raise QAlgebraError("missing-flag", "verify braid requires --p")
        mod = _module(args, args.p, args.group)
        rep = braid_generators(mod, args.N, size_cap=args.size_cap)
        far, yb = braid_relation_residual(rep)
        residuals = {"far_commutation": far, "yang_baxter": yb}
        if args.N == 2:
            residuals["commutant"] = intertwiner_commutant_residual(rep)
        params = {"k": args.k, "m": args.m, "p": mod.p, "group": mod.spec.group.value, "N": args.N}
        return _report("braid", params, residuals, tol)

    if args.check == "relations":
        if args.p is None:
            raise QAlgebraError("missing-flag", "verify relations requires --p")
        mod = _module(args, args.p, args.group)
        params = {"k": args.k, "m": args.m, "p": mod.p, "group": mod.spec.group.value}
        return _report("relations", params, {"relations": defining_relation_residual(mod)}, tol)

    if args.check == "central":
        if args.p is None:
            raise QAlgebraError("missing-flag", "verify central requires --p")
        mod = _module(args, args.p, args.group)
        x_plus, x_minus, z, scal = central_values(mod)
        expected_z = mod.root.power(2 * mod.root.k * mod.p)
        residuals = {
            "x_plus": abs(x_plus),
            "x_minus": abs(x_minus),
            "z_deviation": abs(z - expected_z),
            "scalarness": scal,
        }
        params = {"k": args.k, "m": args.m, "p": mod.p, "group": mod.spec.group.value}
        return _report("central", params, residuals, tol)

    raise QAlgebraError("unknown-check", f"unknown verify check {args.check!r}")


def cmd_reproduce(args) -> int:
    cases = GOLDEN_CASE_IDS if args.example == "all" else (args.example,)
    tol = args.tol
    reports = []
    overall = "pass"
    for case in cases:
        samples = reproduce_case(case)
        worst = max(s["max_deviation"] for s in samples)
        verdict = "pass" if worst <= tol else "fail"
        if verdict == "fail":
            overall = "fail"
        reports.append(
            {
                "example": case,
                "samples": [{"p": list(s["p"]), "max_deviation": s["max_deviation"]} for s in samples],
                "max_deviation": worst,
                "verdict": verdict,
            }
        )
    emit(
        {
            "schema_version": "1",
            "check": "reproduce",
            "tolerance": tol,
            "cases": reports,
            "verdict": overall,
        }
    )
    return PASS if overall == "pass" else FAIL


def cmd_selftest(args) -> int:
    checks = []

    def record(name, residual, tol):
        checks.append(
            {"name": name, "residual": residual, "tolerance": tol, "verdict": "pass" if residual <= tol else "fail"}
        )

    for case in GOLDEN_CASE_IDS:
        worst = max(s["max_deviation"] for s in reproduce_case(case))
        record(f"reproduce-{case}", worst, 1e-12)

    r2 = make_root(2, 1)
    fermi = build_module(classify(r2, 1, Group.Ib))
    r3 = make_root(3, 1)
    iic = [build_module(classify(r3, p, Group.IIc)) for p in (2.3, 0.9, 4.1)]

    dev = float(np.max(np.abs(r_explicit(fermi, fermi).matrix - r_universal(fermi, fermi).matrix)))
    record("oracle-equivalence-k2", dev, 1e-11)
    dev = float(np.max(np.abs(r_explicit(iic[0], iic[1]).matrix - r_universal(iic[0], iic[1]).matrix)))
    record("oracle-equivalence-k3", dev, 1e-11)

    record("qybe-k3-three-parameters", qybe_residual(*iic), 1e-9)
    record("intertwine-k2", intertwine_residual(fermi, fermi), 1e-12)
    record("relations-k3", defining_relation_residual(iic[0]), 1e-10)
    x_plus, x_minus, z, scal = central_values(iic[0])
    record("central-k3", max(abs(x_plus), abs(x_minus), scal, abs(z - r3.power(2 * r3.k * iic[0].p))), 1e-12)

    rep = braid_generators(fermi, 3)
    far, yb = braid_relation_residual(rep)
    record("braid-k2-N3", max(far, yb), 1e-9)
    record("commutant-k2", intertwiner_commutant_residual(braid_generators(fermi, 2)), 1e-12)

    doc = matrix_document(r_explicit(fermi, fermi))
    text = dumps_document(doc)
    text2 = dumps_document(loads_document(text))
    record("document-roundtrip", 0.0 if text == text2 else 1.0, 0.0)
    dev = float(np.max(np.abs(document_matrix(loads_document(text)) - r_explicit(fermi, fermi).matrix)))
    record("document-matrix", dev, 1e-13)

    overall = "pass" if all(c["verdict"] == "pass" for c in checks) else "fail"
    emit({"schema_version": "1", "check": "selftest", "checks": checks, "verdict": overall})
    return PASS if overall == "pass" else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parabose",
        description="Root-of-unity Fock modules of the deformed para-Bose superalgebra and their R-matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    groups = [g.value for g in Group] + ["auto"]

    def add_km(p):
        p.add_argument("--k", type=int, required=True, help="root index k >= 2")
        p.add_argument("--m", type=int, required=True, help="root index m, co-prime with k, 1 <= m <= k-1")

    p_classify = sub.add_parser("classify", help="classify (k, m, p, group) into a module summary")
    add_km(p_classify)
    p_classify.add_argument("--p", type=parse_complex, required=True, help="order parameter: 're' or 're,im'")
    p_classify.add_argument("--group", choices=groups, default="auto")
    p_classify.set_defaults(func=cmd_classify)

    p_rmat = sub.add_parser("rmatrix", help="build an R-matrix and export it")
    add_km(p_rmat)
    p_rmat.add_argument("--p1", type=parse_complex, required=True)
    p_rmat.add_argument("--p2", type=parse_complex, required=True)
    p_rmat.add_argument("--group1", choices=groups, default="auto")
    p_rmat.add_argument("--group2", choices=groups, default="auto")
    p_rmat.add_argument("--method", choices=["explicit", "universal"], default="explicit")
    p_rmat.add_argument("--out", default=None, help="output file (stdout if omitted)")
    p_rmat.add_argument("--format", choices=["json", "csv"], default="json")
    p_rmat.set_defaults(func=cmd_rmatrix)

    p_verify = sub.add_parser("verify", help="run one residual check")
    p_verify.add_argument("check", choices=["qybe", "intertwine", "braid", "relations", "central"])
    add_km(p_verify)
    p_verify.add_argument("--p", type=parse_complex, default=None)
    p_verify.add_argument("--p1", type=parse_complex, default=None)
    p_verify.add_argument("--p2", type=parse_complex, default=None)
    p_verify.add_argument("--p3", type=parse_complex, default=None)
    p_verify.add_argument("--group", choices=groups, default="auto")
    p_verify.add_argument("--group1", choices=groups, default="auto")
    p_verify.add_argument("--group2", choices=groups, default="auto")
    p_verify.add_argument("--group3", choices=groups, default="auto")
    p_verify.add_argument("--N", type=int, default=3, help="strand count for braid checks")
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    p_verify.set_defaults(func=cmd_verify)

    p_rep = sub.add_parser("reproduce", help="compare against the golden fixtures")
    p_rep.add_argument("--example", choices=list(GOLDEN_CASE_IDS) + ["all"], default="all")
    p_rep.add_argument("--tol", type=float, default=1e-12)
    p_rep.set_defaults(func=cmd_reproduce)

    p_self = sub.add_parser("selftest", help="run the built-in verification battery")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SingularFactorError, ZeroDenominatorError) as err:
        sys.stderr.write(f"numeric singularity: {err}\n")
        return FAIL
    except QAlgebraError as err:
        sys.stderr.write(f"invalid input: {err}\n")
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
