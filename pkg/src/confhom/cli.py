"""Command-line interface with deterministic, machine-readable output.

Every payload is byte-identical across runs for identical arguments: the
JSON schema is {"command", "params", "result", "status"} with stable key
order, and timing goes to stderr only.  Exit codes: 0 on success, 1 when a
verification fails, 2 on usage errors or mathematically unsupported cases.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .algebra import as_prime
from .bv import (
    REGIME_TENSOR_BS1,
    default_degree_bound,
    delta,
    delta_matrix,
    equivariant_s1,
    equivariant_zp,
    gravity_op_degree,
)
from .catalog import UnsupportedCaseError, plane_config_generators
from .enumeration import monomial_basis, poincare
from .signhom import sign_rep_homology
from .verify import VERIFY_TARGETS, run_verifications


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "table", "csv"), default="json")

    parser = argparse.ArgumentParser(
        prog="confhom",
        description="Mod-p homology of planar configuration spaces and braid quotients",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("basis", parents=[fmt], help="weight-n monomial basis")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("poincare", parents=[fmt], help="degree-indexed dimensions")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("delta", parents=[fmt], help="matrix of the BV operator")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--degree", type=int, default=None)

    sp = sub.add_parser("equivariant", parents=[fmt], help="equivariant homology")
    sp.add_argument("--group", choices=("S1", "Zp"), required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--dmax", type=int, default=None)

    sp = sub.add_parser("sign", parents=[fmt], help="sign-coefficient braid quotient homology")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--dmax", type=int, default=None)

    sp = sub.add_parser("gravity-degree", parents=[fmt], help="degree of an induced operation")
    sp.add_argument("--op-degree", type=int, required=True)
    sp.add_argument("--arity", type=int, required=True)
    sp.add_argument("--input", type=int, required=True)
    sp.add_argument("--parity", choices=("even", "odd"), required=True)

    sp = sub.add_parser("verify", parents=[fmt], help="run consistency checks")
    sp.add_argument("target", choices=VERIFY_TARGETS)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-n", type=int, default=24)
    sp.add_argument("--max-q", type=int, default=4)

    return parser


def _cmd_basis(args) -> tuple[dict, list[list], list[str]]:
    prime = as_prime(args.p)
    gens = plane_config_generators(prime, max(args.n, 1))
    rows = [
        {"monomial": m.text(), "degree": m.degree, "weight": m.weight}
        for m in monomial_basis(gens, args.n, prime)
    ]
    table = [[r["monomial"], r["degree"], r["weight"]] for r in rows]
    return {"rows": rows}, table, ["monomial", "degree", "weight"]


def _cmd_poincare(args) -> tuple[dict, list[list], list[str]]:
    prime = as_prime(args.p)
    gens = plane_config_generators(prime, max(args.n, 1))
    dims = poincare(gens, args.n, prime)
    return (
        {"dims": dims.to_pairs(), "total": dims.total()},
        dims.to_pairs(),
        ["degree", "dim"],
    )


def _cmd_delta(args) -> tuple[dict, list[list], list[str]]:
    prime = as_prime(args.p)
    gens = plane_config_generators(prime, max(args.n, 1))
    mons = monomial_basis(gens, args.n, prime)
    by_deg: dict[int, list] = {}
    for m in mons:
        by_deg.setdefault(m.degree, []).append(m)
    degrees = [args.degree] if args.degree is not None else sorted(by_deg)
    maps = []
    for d in degrees:
        source = by_deg.get(d, [])
        target = by_deg.get(d + 1, [])
        mat = delta_matrix(args.n, prime, d, bases=(source, target))
        maps.append(
            {
                "degree": d,
                "source": [m.text() for m in source],
                "target": [m.text() for m in target],
                "matrix": mat.a.tolist(),
                "rank": mat.rank(),
                "images": [
                    {"monomial": m.text(), "image": delta(m, prime).text()} for m in source
                ],
            }
        )
    table = [[mp["degree"], len(mp["source"]), len(mp["target"]), mp["rank"]] for mp in maps]
    return {"maps": maps}, table, ["degree", "source_dim", "target_dim", "rank"]


def _cmd_equivariant(args) -> tuple[dict, list[list], list[str]]:
    prime = as_prime(args.p)
    dmax = args.dmax if args.dmax is not None else default_degree_bound(args.n)
    if args.group == "Zp":
        dims = equivariant_zp(args.n, prime, dmax)
        result = {"group": "Zp", "dims": dims.to_pairs(), "degree_bound": dmax}
        return result, dims.to_pairs(), ["degree", "dim"]
    answer = equivariant_s1(args.n, prime, dmax)
    if answer.regime == REGIME_TENSOR_BS1:
        basis = [
            {"monomial": m.text(), "circle_degree": c} for m, c in answer.basis
        ]
    else:
        basis = [{"monomial": m.text()} for m in answer.basis]
    result = {
        "group": "S1",
        "regime": answer.regime,
        "dims": answer.dims.to_pairs(),
        "basis": basis,
        "degree_bound": dmax,
    }
    return result, answer.dims.to_pairs(), ["degree", "dim"]


def _cmd_sign(args) -> tuple[dict, list[list], list[str]]:
    prime = as_prime(args.p)
    dmax = args.dmax if args.dmax is not None else default_degree_bound(args.n)
    dims = sign_rep_homology(args.n, prime, args.q, dmax)
    result = {
        "dims": dims.to_pairs(),
        "total_through_bound": dims.total(),
        "degree_bound": dmax,
    }
    return result, dims.to_pairs(), ["degree", "dim"]


def _cmd_gravity(args) -> tuple[dict, list[list], list[str]]:
    out = gravity_op_degree(args.op_degree, args.arity, args.input, args.parity)
    return {"degree": out}, [[out]], ["degree"]


def _cmd_verify(args) -> tuple[dict, list[list], list[str]]:
    reports = run_verifications(args.target, args.p, args.max_n, args.max_q)
    result = {
        "checks": [r.to_payload() for r in reports],
        "passed": all(r.passed for r in reports),
    }
    table = [[r.name, "pass" if r.passed else "FAIL"] for r in reports]
    return result, table, ["check", "status"]


_HANDLERS = {
    "basis": _cmd_basis,
    "poincare": _cmd_poincare,
    "delta": _cmd_delta,
    "equivariant": _cmd_equivariant,
    "sign": _cmd_sign,
    "gravity-degree": _cmd_gravity,
    "verify": _cmd_verify,
}


def _params_of(args) -> dict:
    skip = {"command", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def _render_table(table: list[list], header: list[str]) -> str:
    rows = [header] + [[str(c) for c in row] for row in table]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _render_csv(table: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(table)
    return buf.getvalue().rstrip("\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    status = "ok"
    try:
        result, table, header = _HANDLERS[args.command](args)
    except UnsupportedCaseError as exc:
        payload = {
            "command": args.command,
            "params": _params_of(args),
            "result": {"error": str(exc)},
            "status": "unsupported",
        }
        print(json.dumps(payload, indent=2))
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "verify" and not result["passed"]:
        status = "failed"
    payload = {
        "command": args.command,
        "params": _params_of(args),
        "result": result,
        "status": status,
    }
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "table":
        print(_render_table(table, header))
    else:
        print(_render_csv(table, header))
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    print(f"elapsed_ms={elapsed_ms:.1f}", file=sys.stderr)
    return 0 if status == "ok" else 1


if __name__ == "__main__":
    sys.exit(main())
