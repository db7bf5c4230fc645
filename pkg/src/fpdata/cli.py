"""Command line: ``fpdata {basis,constraints,generators,dims,check,verify}``.

Exit codes: 0 success (or member), 1 verified false (or non-member),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .fixedpoints import FPFunction
from .groups import InvalidParameter
from .lattice import constraints, dims, generator_matrix, membership
from .naming import group_label, parse_group, pretty
from .reps import pair_class_basis
from .verify import render_json, render_text, run_suite

PLATONIC_LABELS = ("A4", "S4", "A5+", "A5-")


class UsageError(Exception):
    pass


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_basis(args) -> tuple[str, int]:
    model = parse_group(args.group)
    basis = pair_class_basis(model)
    if args.format == "json":
        pairs = [
            {
                "pair": p.label,
                "subgroup": p.subgroup.label,
                "iso_type": str(p.subgroup.iso_type),
                "rep": p.rep.label,
                "stabilizer_order": p.stabilizer_order,
            }
            for p in basis.pairs
        ]
        return json.dumps({"group": group_label(model), "pairs": pairs}, indent=2), 0
    if args.format == "csv":
        rows = [(p.label, p.subgroup.label, p.rep.label, p.stabilizer_order) for p in basis.pairs]
        return _csv(("pair", "subgroup", "rep", "stabilizer_order"), rows), 0
    width = max(len(pretty(lab)) for lab in basis.labels)
    lines = [
        f"{pretty(p.label):<{width}}  |N(H,rho)| = {p.stabilizer_order}" for p in basis.pairs
    ]
    return "\n".join(lines), 0


def cmd_constraints(args) -> tuple[str, int]:
    model = parse_group(args.group)
    system = constraints(model)
    if args.format == "json":
        return json.dumps({"group": group_label(model), "constraints": system.labels()}, indent=2), 0
    if args.format == "csv":
        labels = system.basis.labels
        rows = [[(row >> i) & 1 for i in range(len(labels))] for row in system.rows]
        return _csv(labels, rows), 0
    if not system.rows:
        return "no constraints: every datum is realizable mod 2", 0
    lines = [" + ".join(pretty(lab) for lab in eq) + " ≡ 0 (mod 2)" for eq in system.labels()]
    return "\n".join(lines), 0


def cmd_generators(args) -> tuple[str, int]:
    model = parse_group(args.group)
    M = generator_matrix(model)
    if args.format == "json":
        out = [dict(n.to_json(), provenance=n.provenance) for n in M.sources]
        return json.dumps(out, indent=2), 0
    if args.format == "csv":
        labels = pair_class_basis(model).labels
        rows = [(n.provenance, *n.values) for n in M.sources]
        return _csv(("generator", *labels), rows), 0
    lines = []
    for n in M.sources:
        parts = ", ".join(f"{pretty(lab)}={v}" for lab, v in n.as_dict().items())
        lines.append(f"{n.provenance}: {parts}")
    return "\n".join(lines), 0


def _dims_groups(args) -> list[str]:
    if args.groups:
        return args.groups
    labels: list[str] = []
    if args.max_m is None:
        return list(PLATONIC_LABELS) + [f"D{m}" for m in range(2, 11)]
    if args.platonic:
        labels += PLATONIC_LABELS
    labels += [f"D{m}" for m in range(2, args.max_m + 1)]
    return labels


def cmd_dims(args) -> tuple[str, int]:
    rows = []
    for label in _dims_groups(args):
        model = parse_group(label)
        a, b = dims(model, check=False)
        rows.append((group_label(model), a, b))
    header = ("group", "dim_A_mod_F", "dim_F_mod_2A")
    if args.format == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2), 0
    if args.format == "csv":
        return _csv(header, rows), 0
    lines = [f"{'group':<6} {'dim A/F':>8} {'dim F/2A':>9}"]
    lines += [f"{g:<6} {a:>8} {b:>9}" for g, a, b in rows]
    return "\n".join(lines), 0


def _read_datum(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from None


def cmd_check(args) -> tuple[str, int]:
    model = parse_group(args.group)
    obj = _read_datum(args.file)
    n = FPFunction.from_json(obj, model)
    if n.basis is not pair_class_basis(model):
        raise UsageError(f"datum is for {group_label(n.basis.model)}, not {group_label(model)}")
    cert = membership(model, n)
    is_realizable = cert.member and min(n.values, default=0) >= 0
    twice = {lab: v for lab, v in zip(n.basis.labels, cert.twice) if v}
    code = 0 if cert.member else 1
    if args.format == "json":
        out = {
            "group": group_label(model),
            "member": cert.member,
            "realizable": is_realizable,
            "certificate": (
                {"generators": list(cert.generator_labels), "twice": twice}
                if cert.member
                else {"violated": list(cert.violated_labels)}
            ),
        }
        return json.dumps(out, indent=2), code
    if args.format == "csv":
        return _csv(("group", "member", "realizable"), [(group_label(model), cert.member, is_realizable)]), code
    if cert.member:
        gens = " + ".join(cert.generator_labels) or "0"
        extra = ", ".join(f"{pretty(k)}={v}" for k, v in twice.items())
        lines = [
            f"member of F({group_label(model)}): yes",
            f"realizable: {'yes' if is_realizable else 'no (negative entries)'}",
            f"certificate: {gens}" + (f" + 2*({extra})" if extra else ""),
        ]
    else:
        eq = " + ".join(pretty(lab) for lab in cert.violated_labels)
        lines = [
            f"member of F({group_label(model)}): no",
            f"violated: {eq} ≡ 0 (mod 2)",
        ]
    return "\n".join(lines), code


def cmd_verify(args) -> tuple[str, int]:
    platonic = args.platonic or args.all or args.max_m is None
    max_m = args.max_m if args.max_m is not None else (100 if args.all else None)
    if max_m is not None and max_m < 2:
        raise UsageError(f"--max-m must be >= 2, got {max_m}")
    reports = run_suite(max_m=max_m, platonic=platonic)
    code = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        return render_json(reports), code
    if args.format == "csv":
        rows = [(r.subject, "pass" if r.passed else "fail", f"{r.elapsed:.4f}") for r in reports]
        return _csv(("subject", "verdict", "elapsed_s"), rows), code
    return render_text(reports), code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpdata",
        description="Fixed-point data of finite rotation groups and their mod 2 constraints.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, helptext in (
        ("basis", cmd_basis, "list the pair classes (H, rho) with |N_G(H, rho)|"),
        ("constraints", cmd_constraints, "parity equations cutting out F(G) mod 2"),
        ("generators", cmd_generators, "synthesized fixed-point data spanning F(G) mod 2"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("group", help="Dm (m >= 2), A4, S4, A5+ or A5-")
        p.set_defaults(func=func)

    p = sub.add_parser("dims", parents=[common], help="table of dim A/F and dim F/2A")
    p.add_argument("groups", nargs="*", help="explicit group labels")
    p.add_argument("--max-m", type=int, metavar="N", help="dihedral groups D2..DN")
    p.add_argument("--platonic", action="store_true", help="include A4, S4, A5+, A5- with --max-m")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("check", parents=[common], help="membership in F(G) with a certificate")
    p.add_argument("group")
    p.add_argument("file", help="JSON datum, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[common], help="run the theorem checks")
    p.add_argument("--max-m", type=int, metavar="N", help="dihedral groups D2..DN")
    p.add_argument("--platonic", action="store_true", help="Platonic groups")
    p.add_argument("--all", action="store_true", help="Platonic groups and D2..D100 unless --max-m is given")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        text, code = args.func(args)
    except (UsageError, InvalidParameter, LookupError, ValueError) as exc:
        print(f"fpdata: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"fpdata: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
