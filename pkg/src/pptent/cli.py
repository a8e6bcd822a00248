"""Command-line front end: construct, classify, certify, and serialize.

Each subcommand prints a one-line-per-check text report to stdout and,
when asked, writes a machine-readable JSON report.  Exit codes: 0 when
every certificate passes, 1 when a certificate fails (not entangled, not
extreme, ...), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import choimaps, construct, extremality, schmidt, serialize
from .choimaps import MapFamilyParams
from .construct import EntangledState, StateParams
from .errors import InvalidInputError


def _plain(obj):
    """Recursively convert numpy scalars/arrays for json.dump."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def _check(label: str, ok: bool, value=None) -> str:
    tail = "" if value is None else f"  value={value!r}"
    return f"{'PASS' if ok else 'FAIL'}  {label}{tail}"


def _emit(lines: list[str], report: dict, json_path: str | None) -> None:
    for line in lines:
        print(line)
    if json_path:
        serialize.dump(_plain(report), json_path)


def _cmd_construct(args) -> int:
    st = construct.build_state(StateParams(args.lam))
    mat = st.matrix / st.trace if args.normalize else st.matrix
    obj = serialize.state_to_json(EntangledState(lam=st.lam, matrix=mat))
    if args.out:
        serialize.dump(obj, args.out)
        print(f"wrote state A(lambda={args.lam!r}) trace={float(np.trace(mat).real)!r} to {args.out}")
    else:
        json.dump(obj, sys.stdout, indent=1)
        print()
    return 0


def _cmd_classify(args) -> int:
    p = MapFamilyParams(args.a, args.b, args.c)
    rep = choimaps.classify(p)
    report = {
        "params": {"a": p.a, "b": p.b, "c": p.c},
        "positive": rep.positive,
        "decomposable": rep.decomposable,
        "completely_positive": rep.completely_positive,
        "completely_copositive": rep.completely_copositive,
        "indecomposable_positive": rep.indecomposable_positive,
        "on_decomposability_boundary": rep.on_decomposability_boundary,
        "evidence": rep.evidence,
    }
    lines = [
        _check("positive", rep.positive),
        _check("decomposable", rep.decomposable),
        _check("completely_positive", rep.completely_positive,
               rep.evidence["choi_min_eig"]),
        _check("completely_copositive", rep.completely_copositive,
               rep.evidence["choi_pt_min_eig"]),
        _check("on_decomposability_boundary", rep.on_decomposability_boundary,
               rep.evidence["surface_residual_4bc_minus_sq_3_minus_a"]),
    ]
    _emit(lines, report, args.json)
    return 0 if rep.positive else 1


def _cmd_witness(args) -> int:
    s = StateParams(args.lam)
    cert = construct.entanglement_witness(s, args.epsilon)
    wp = cert.witness_params
    report = {
        "lambda": s.lam,
        "epsilon": cert.eps,
        "witness_params": {"a": wp.a, "b": wp.b, "c": wp.c},
        "witness_positive": cert.witness_positive,
        "pairing": cert.pairing_value,
        "entangled": cert.entangled_verdict,
    }
    lines = [
        _check(f"witness Phi[{wp.a!r},{wp.b!r},{wp.c!r}] positive", cert.witness_positive),
        _check("pairing < 0", cert.pairing_value < 0, cert.pairing_value),
        _check("entangled", cert.entangled_verdict),
    ]
    _emit(lines, report, args.json)
    return 0 if cert.entangled_verdict else 1


def _verification_dict(rep: construct.VerificationReport) -> dict:
    return {
        "psd": rep.psd,
        "psd_min_eig": rep.psd_min_eig,
        "ppt": rep.ppt,
        "ppt_min_eig": rep.ppt_min_eig,
        "rank": rep.rank,
        "rank_partial_transpose": rep.rank_partial_transpose,
        "face_pairings": {label: val for label, val in rep.face_pairings},
        "all_pass": rep.all_pass,
    }


def _verification_lines(rep: construct.VerificationReport) -> list[str]:
    lines = [
        _check("psd", rep.psd, rep.psd_min_eig),
        _check("ppt", rep.ppt, rep.ppt_min_eig),
        f"INFO  rank={rep.rank} rank_partial_transpose={rep.rank_partial_transpose}",
    ]
    for label, val in rep.face_pairings:
        lines.append(_check(f"pairing {label} = 0", abs(val) <= construct.PAIRING_TOL, val))
    lines.append(_check("all_pass", rep.all_pass))
    return lines


def _cmd_verify(args) -> int:
    mat = serialize.state_from_json(serialize.load(args.state)).matrix
    st = EntangledState(lam=args.lam, matrix=mat)
    rep = construct.verify_state(st)
    report = {"lambda": args.lam, **_verification_dict(rep)}
    _emit(_verification_lines(rep), report, args.json)
    return 0 if rep.all_pass else 1


def _cmd_schmidt(args) -> int:
    cert = schmidt.schmidt_number_certificate(StateParams(args.lam))
    report = {
        "lambda": cert.lam,
        "lower_bound_entangled": cert.lower_bound_entangled,
        "upper_bound_schmidt2": cert.upper_bound_schmidt2,
        "residual": cert.residual,
        "witness_pairing": cert.witness.pairing_value,
        "verdict": cert.verdict,
    }
    lines = [
        _check("decomposition residual", cert.upper_bound_schmidt2, cert.residual),
        _check("witness certifies entanglement", cert.lower_bound_entangled,
               cert.witness.pairing_value),
        _check(f"schmidt number verdict = {cert.verdict!r}", cert.verdict == "2"),
    ]
    _emit(lines, report, args.json)
    return 0 if cert.verdict == "2" else 1


def _cmd_extreme(args) -> int:
    mat = serialize.state_from_json(serialize.load(args.state)).matrix
    rep = extremality.extremality_check(mat, tol=args.tol)
    report = {
        "solution_dim": rep.solution_dim,
        "extreme": rep.extreme,
        "smallest_retained_singular_value": rep.smallest_retained_singular_value,
        "largest_discarded": rep.largest_discarded,
        "gap_ratio": rep.gap_ratio,
        "status": rep.status,
    }
    lines = [
        f"INFO  solution_dim={rep.solution_dim} gap_ratio={rep.gap_ratio!r}",
        _check("extreme ray", rep.extreme),
        _check("rank decision confident", rep.status == "confident", rep.gap_ratio),
    ]
    _emit(lines, report, args.json)
    return 0 if rep.extreme else 1


def _cmd_pipeline(args) -> int:
    p = MapFamilyParams(args.a, args.b, args.c)
    dec = choimaps.canonical_decomposition(p)
    result = construct.construct_from_boundary_map(dec.cp, dec.cocp)
    report = {
        "params": {"a": p.a, "b": p.b, "c": p.c},
        "cp_weight": dec.cp_weight,
        "cocp_weight": dec.cocp_weight,
        "operator_span_dim": result.face.d.dim,
        "face_dim": result.face_dim,
        "refined": result.refined,
        "candidate": serialize.block_matrix_to_json(result.candidate, 3, 3),
        **_verification_dict(result.report),
    }
    lines = [
        f"INFO  cp_weight={dec.cp_weight!r} cocp_weight={dec.cocp_weight!r} "
        f"refined={result.refined}",
        *_verification_lines(result.report),
    ]
    _emit(lines, report, args.json)
    return 0 if result.report.all_pass else 1


def _cmd_boundary(args) -> int:
    alpha = choimaps.boundary_parameter(MapFamilyParams(args.a, args.b, args.c))
    print(repr(alpha))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pptent",
        description="Construct and certify PPT entangled states from "
        "indecomposable positive maps on M3.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_lambda(sp):
        sp.add_argument("--lambda", dest="lam", type=float, required=True)

    def add_abc(sp):
        for name in ("a", "b", "c"):
            sp.add_argument(f"--{name}", type=float, required=True)

    def add_json(sp):
        sp.add_argument("--json", metavar="PATH")

    sp = sub.add_parser("construct", help="build A(lambda) and serialize it")
    add_lambda(sp)
    sp.add_argument("--normalize", action="store_true")
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(func=_cmd_construct)

    sp = sub.add_parser("classify", help="classify Phi[a,b,c]")
    add_abc(sp)
    add_json(sp)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("witness", help="entanglement witness for A(lambda)")
    add_lambda(sp)
    sp.add_argument("--epsilon", type=float)
    add_json(sp)
    sp.set_defaults(func=_cmd_witness)

    sp = sub.add_parser("verify", help="PSD/PPT/pairing checks on a stored state")
    sp.add_argument("--state", required=True, metavar="PATH")
    add_lambda(sp)
    add_json(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("schmidt", help="Schmidt-number-two certificate")
    add_lambda(sp)
    add_json(sp)
    sp.set_defaults(func=_cmd_schmidt)

    sp = sub.add_parser("extreme", help="extreme-ray check on a stored state")
    sp.add_argument("--state", required=True, metavar="PATH")
    sp.add_argument("--tol", type=float, default=extremality.KERNEL_RTOL)
    add_json(sp)
    sp.set_defaults(func=_cmd_extreme)

    sp = sub.add_parser(
        "pipeline",
        help="canonical decomposition -> boundary-map construction -> report",
    )
    add_abc(sp)
    add_json(sp)
    sp.set_defaults(func=_cmd_pipeline)

    sp = sub.add_parser("boundary", help="print the boundary parameter alpha")
    add_abc(sp)
    sp.set_defaults(func=_cmd_boundary)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (InvalidInputError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
