"""Command-line front end.

Exit codes: 0 on pass/success, 1 on a validation or verification
failure, 2 on input or usage errors.  The environment variable
FUSIONBENCH_TOL overrides the default numerical tolerance of 1e-9.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import io as fio
from .catalog import CATALOG, render, write_examples
from .category import (DEFAULT_TOL, TYPointedParams, TYTYParams,
                       build_pointed, build_TY, build_TY_pointed_bicrossed,
                       build_TY_TY_bicrossed, c2_nontrivial_cocycle,
                       check_pentagon, check_triangle, fibonacci_ring,
                       group_ring, standard_bicharacter, trivial_cocycle,
                       ty_ring, validate_bicharacter, validate_cocycle)
from .errors import FusionbenchError, InputError, VerificationError
from .factorization import (canonical_matched_pair, certify_theorem_iso,
                            check_exact_factorization)
from .grading import (adjoint_subring, is_nilpotent, pointed_subring,
                      universal_grading)
from .groups import FiniteGroup, cyclic_group, direct_product, find_isomorphism, parse_group_name
from .matched_pair import ring_bicrossed, validate_ring_matched_pair
from .report import Report
from .rings import FusionRing, fpdim_basis, fpdim_ring, validate_fusion_ring

CHI_ALIASES = {"std", "-1", "i"}


def _fmt(x) -> str:
    """12-significant-digit rendering for real or complex scalars."""
    z = complex(x)
    if abs(z.imag) < 1e-15:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _divisor_factorizations(n: int):
    """All sorted tuples (d1,...,dk), each di >= 2, with product n."""
    if n == 1:
        yield ()
        return
    for d in range(2, n + 1):
        if n % d == 0:
            for rest in _divisor_factorizations(n // d):
                if not rest or d <= rest[0]:
                    yield (d,) + rest


def group_name(G: FiniteGroup) -> str:
    """A short structural name (Cn, CnxCm, S3) when one applies."""
    n = G.order
    if n == 1:
        return "C1"
    if G.is_abelian():
        for factors in sorted(_divisor_factorizations(n), key=len):
            cand = cyclic_group(factors[0])
            for d in factors[1:]:
                cand = direct_product(cand, cyclic_group(d))
            if find_isomorphism(G, cand) is not None:
                return "x".join(f"C{d}" for d in factors)
    elif n == 6:
        return "S3"
    return f"group of order {n}"


def _load_object(path):
    d = fio.load(path)
    kind = fio.detect_kind(d)
    return kind, fio.KIND_SERIALIZERS[kind][1](d)


def _emit(report: Report, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        for line in report.lines():
            print(line)
        if report.max_residual is not None:
            print(f"max residual = {_fmt(report.max_residual)}")
    return 0 if report.passed else 1


def _ring_of(kind, obj):
    if kind == "ring":
        return obj
    if kind == "category":
        return obj.ring
    raise InputError(f"expected a ring or category file, got a {kind}")


def cmd_validate(args) -> int:
    kind, obj = _load_object(args.file)
    if kind == "ring":
        report = validate_fusion_ring(obj)
    elif kind == "group":
        report = obj.validate()
    elif kind == "matched_pair":
        report = validate_ring_matched_pair(obj)
    elif kind == "category":
        ring_report = validate_fusion_ring(obj.ring)
        checks = ring_report.checks
        if ring_report.passed:
            checks = checks + check_triangle(obj).checks + \
                check_pentagon(obj, args.tol).checks
        report = Report(checks)
    else:  # grading: the degree map alone; homogeneity needs the ring
        report = obj.group.validate()
    return _emit(report, args.json)


def cmd_invariants(args) -> int:
    kind, obj = _load_object(args.file)
    R = _ring_of(kind, obj)
    report = validate_fusion_ring(R)
    if not report.passed:
        return _emit(report, args.json)
    grading = universal_grading(R)
    ad = adjoint_subring(R)
    pt = pointed_subring(R)
    nil, depth = is_nilpotent(R)
    out = {
        "rank": R.rank,
        "fpdim": fpdim_ring(R),
        "fpdim_basis": [fpdim_basis(R, i) for i in range(R.rank)],
        "universal_grading_group": group_name(grading.group),
        "universal_grading_order": grading.group.order,
        "degree": list(grading.degree),
        "adjoint": [R.basis_labels[i] for i in ad.indices],
        "pointed": [R.basis_labels[i] for i in pt.indices],
        "nilpotent": nil,
        "nilpotency_depth": depth,
    }
    if args.json:
        out["fpdim"] = float(f"{out['fpdim']:.12g}")
        out["fpdim_basis"] = [float(f"{x:.12g}") for x in out["fpdim_basis"]]
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"rank: {R.rank}")
        print(f"FPdim: {_fmt(out['fpdim'])}")
        print("FPdim basis: " + ", ".join(
            f"{lbl}={_fmt(x)}" for lbl, x in zip(R.basis_labels, out["fpdim_basis"])))
        print(f"U(R): {out['universal_grading_group']} "
              f"(order {out['universal_grading_order']})")
        print("adjoint: {" + ", ".join(out["adjoint"]) + "}")
        print("pointed: {" + ", ".join(out["pointed"]) + "}")
        print(f"nilpotent: {'yes' if nil else 'no'} (depth {depth})")
    return 0


def _parse_indices(text: str, R: FusionRing):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        out.append(int(tok) if tok.lstrip("-").isdigit() else R.index_of(tok))
    return out


def cmd_factorize(args) -> int:
    kind, obj = _load_object(args.file)
    R = _ring_of(kind, obj)
    a = _parse_indices(args.a, R)
    c = _parse_indices(args.c, R)
    result = check_exact_factorization(R, a, c)
    if isinstance(result, Report):
        return _emit(result, args.json)
    report = certify_theorem_iso(result)
    if args.out:
        rmp = canonical_matched_pair(result)
        fio.save(args.out, fio.matched_pair_to_dict(rmp))
    return _emit(report, args.json)


def cmd_bicrossed(args) -> int:
    kind, obj = _load_object(args.file)
    if kind != "matched_pair":
        raise InputError(f"expected a matched-pair file, got a {kind}")
    B = ring_bicrossed(obj)
    text = fio.dumps_canonical(fio.ring_to_dict(B))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _resolve_group(name: str) -> FiniteGroup:
    if name is None:
        raise InputError("--group is required for this kind")
    return parse_group_name(name)


def _resolve_chi(spec: str, G: FiniteGroup):
    if spec not in CHI_ALIASES:
        raise InputError(f"--chi must be one of {sorted(CHI_ALIASES)}")
    return standard_bicharacter(G)


def _resolve_tau(spec: str, order: int) -> float:
    if spec not in {"+", "-"}:
        raise InputError("--tau must be '+' or '-'")
    return (1 if spec == "+" else -1) / math.sqrt(order)


def _resolve_sign(spec: str, flag: str) -> int:
    if spec not in {"+", "-"}:
        raise InputError(f"{flag} must be '+' or '-'")
    return 1 if spec == "+" else -1


def make_object(args):
    """Build the requested object; returns (kind, dict)."""
    kind = args.kind
    if kind == "group-ring":
        return "ring", fio.ring_to_dict(group_ring(_resolve_group(args.group)))
    if kind == "ty-ring":
        return "ring", fio.ring_to_dict(ty_ring(_resolve_group(args.group)))
    if kind == "fibonacci":
        return "ring", fio.ring_to_dict(fibonacci_ring())
    if kind == "pointed":
        G = _resolve_group(args.group)
        if args.omega == "trivial":
            w = trivial_cocycle(G)
        else:
            if G.order != 2:
                raise InputError(
                    "--omega nontrivial is only built in for the group C2")
            w = c2_nontrivial_cocycle()
        return "category", fio.category_to_dict(build_pointed(G, w))
    if kind == "ty":
        G = _resolve_group(args.group)
        chi = _resolve_chi(args.chi, G)
        tau = _resolve_tau(args.tau, G.order)
        return "category", fio.category_to_dict(build_TY(G, chi, tau))
    if kind == "ty-pointed":
        G = _resolve_group(args.group or "C2")
        K = parse_group_name(args.k_group)
        p = TYPointedParams.trivial(G, _resolve_chi(args.chi, G),
                                    _resolve_tau(args.tau, G.order), K)
        return "category", fio.category_to_dict(build_TY_pointed_bicrossed(p))
    if kind == "ty-ty":
        H = _resolve_group(args.group or "C2")
        K = parse_group_name(args.k_group)
        p = TYTYParams(
            H, _resolve_chi(args.chi, H), _resolve_tau(args.tau, H.order),
            K, standard_bicharacter(K), _resolve_tau(args.tau, K.order),
            tuple(range(H.order)), tuple(range(K.order)),
            _resolve_sign(args.theta_l, "--theta-l"),
            _resolve_sign(args.theta_r, "--theta-r"))
        return "category", fio.category_to_dict(build_TY_TY_bicrossed(p))
    raise InputError(f"unknown make kind: {kind}")


def cmd_make(args) -> int:
    _, d = make_object(args)
    text = fio.dumps_canonical(d)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _coherence(args, checker, default_tol) -> int:
    kind, obj = _load_object(args.file)
    if kind != "category":
        raise InputError(f"expected a category file, got a {kind}")
    tol = args.tol if args.tol is not None else default_tol
    return _emit(checker(obj, tol), args.json)


def cmd_pentagon(args) -> int:
    return _coherence(args, check_pentagon, args.default_tol)


def cmd_triangle(args) -> int:
    return _coherence(args, check_triangle, 1e-12)


def cmd_examples(args) -> int:
    if args.dir:
        for path in write_examples(args.dir):
            print(path)
    else:
        for name in sorted(CATALOG):
            print(f"{name}\t{CATALOG[name][0]}")
    return 0


def build_parser(default_tol: float) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionbench",
        description="Fusion rings, bicrossed products, and pentagon checks.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn, default_tol=default_tol)
        return p

    p = add("validate", cmd_validate, help="run the validator for a JSON file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tol", type=float, default=default_tol)

    p = add("invariants", cmd_invariants,
            help="FPdim, universal grading, adjoint/pointed, nilpotency")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = add("factorize", cmd_factorize,
            help="check an exact factorization and certify the bicrossed model")
    p.add_argument("file")
    p.add_argument("--a", required=True,
                   help="comma-separated basis indices or labels for A")
    p.add_argument("--c", required=True,
                   help="comma-separated basis indices or labels for C")
    p.add_argument("-o", "--out", help="write the recovered matched pair here")
    p.add_argument("--json", action="store_true")

    p = add("bicrossed", cmd_bicrossed,
            help="bicrossed product ring of a matched-pair file")
    p.add_argument("file")
    p.add_argument("-o", "--out")

    p = add("make", cmd_make, help="construct a named ring or category")
    p.add_argument("kind", choices=["group-ring", "ty-ring", "fibonacci",
                                    "pointed", "ty", "ty-pointed", "ty-ty"])
    p.add_argument("--group", help="Cn, CnxCm, or S3")
    p.add_argument("--k-group", default="C2",
                   help="second factor group for ty-pointed / ty-ty")
    p.add_argument("--chi", default="std",
                   help="bicharacter: std (aliases: -1, i)")
    p.add_argument("--tau", default="+", help="sign of 1/sqrt(|group|)")
    p.add_argument("--omega", default="trivial",
                   choices=["trivial", "nontrivial"])
    p.add_argument("--theta-l", default="+")
    p.add_argument("--theta-r", default="+")
    p.add_argument("-o", "--out")

    p = add("pentagon", cmd_pentagon, help="pentagon residual of a category file")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; checks are cheap enough "
                        "to run serially")
    p.add_argument("--json", action="store_true")

    p = add("triangle", cmd_triangle, help="triangle residual of a category file")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--json", action="store_true")

    p = add("examples", cmd_examples, help="list or write the example catalog")
    p.add_argument("--dir", help="write all examples into this directory")
    return parser


def run(argv=None) -> int:
    try:
        default_tol = float(os.environ.get("FUSIONBENCH_TOL", "1e-9"))
    except ValueError:
        print("FUSIONBENCH_TOL is not a number", file=sys.stderr)
        return 2
    parser = build_parser(default_tol)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        if exc.report is not None:
            for line in exc.report.lines():
                print(line, file=sys.stderr)
        return 1
    except (FusionbenchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
