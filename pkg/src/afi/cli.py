"""Command-line interface: feasible, bounds, construct, verify, classify,
equiv, census.  Every command takes --json for a structured envelope with
the same content as the human-readable output.

Exit codes: 0 success, 1 domain error (infeasible triple, bad matrix file,
rank/idempotence requirement not met), 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict

from . import __version__
from .canonical import canonical_rep, col_types, row_types, to_standard_form
from .census import (
    GENERAL_CAP,
    census_general,
    census_rank2,
    record_to_dict,
    records_to_text,
    summarize,
    write_records,
)
from .construct import (
    block_construction,
    construct_for_triple,
    rank1_canonical,
    rank2_standard,
)
from .core import SignMatrix, format_matrix, parse_matrix
from .equivalence import are_equivalent
from .feasibility import feasible_triples, rank2_bounds
from .verify import exact_rank, full_report, is_flat_idempotent


def _read_matrix(path: str) -> tuple[SignMatrix, int]:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_matrix(text)


def _emit(args, command: str, inputs: dict, result: dict, human: str) -> None:
    if args.json:
        envelope = {
            "command": command,
            "inputs": inputs,
            "result": result,
            "version": __version__,
        }
        print(json.dumps(envelope, sort_keys=True))
    elif human:
        print(human, end="" if human.endswith("\n") else "\n")


def cmd_feasible(args) -> int:
    triples = feasible_triples(args.n_max)
    rows = [{"n": t.n, "k": t.k, "r": t.r, "m": t.m, "u": t.u} for t in triples]
    human = "n k r m u\n" + "\n".join(f"{t.n} {t.k} {t.r} {t.m} {t.u}" for t in triples)
    _emit(args, "feasible", {"n_max": args.n_max}, {"triples": rows}, human)
    return 0


def cmd_bounds(args) -> int:
    b = rank2_bounds(args.n, args.k)
    result = {"lower": b.lower, "upper": b.upper, "exact": b.exact}
    human = f"lower {b.lower}\nupper {b.upper}\nexact {b.exact if b.exact is not None else '-'}"
    _emit(args, "bounds", {"n": args.n, "k": args.k}, result, human)
    return 0


def cmd_construct(args) -> int:
    n, k, r = args.n, args.k, args.r
    method = args.method
    if method == "auto":
        method = "rank1" if r == 1 else "block"
    params = None
    if method == "rank1":
        if r != 1:
            raise ValueError("--method rank1 requires --r 1")
        mat = rank1_canonical(n, k)
    elif method == "block":
        mat = block_construction(n, k, r)
    elif method == "rank2":
        if r != 2:
            raise ValueError("--method rank2 requires --r 2")
        params, mat = rank2_standard(n, k, args.t, args.q, args.l)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown method {method}")
    text = format_matrix(mat, k)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    result = {
        "n": n,
        "k": k,
        "r": r,
        "method": method,
        "matrix": mat.to_strings(),
        "params": asdict(params) if params else None,
        "out": args.out,
    }
    _emit(args, "construct", {"n": n, "k": k, "r": r, "method": args.method},
          result, "" if args.out else text)
    return 0


def _report_dict(report) -> dict:
    triple = None
    if report.inferred_triple:
        t = report.inferred_triple
        triple = {"n": t.n, "k": t.k, "r": t.r, "m": t.m, "u": t.u}
    return {
        "is_idempotent": report.is_idempotent,
        "rank": report.rank,
        "trace": report.trace,
        "row_negative_counts": list(report.row_negative_counts),
        "diag_negative_count": report.diag_negative_count,
        "inferred_triple": triple,
    }


def cmd_verify(args) -> int:
    mat, k = _read_matrix(args.matrix)
    report = full_report(mat, k)
    result = _report_dict(report)
    lines = [
        f"is_idempotent {str(report.is_idempotent).lower()}",
        f"rank {report.rank}",
        f"trace {report.trace}",
        f"row_negative_counts {' '.join(map(str, report.row_negative_counts))}",
        f"diag_negative_count {report.diag_negative_count}",
    ]
    if report.inferred_triple:
        t = report.inferred_triple
        lines.append(f"inferred_triple n={t.n} k={t.k} r={t.r} m={t.m} u={t.u}")
    _emit(args, "verify", {"matrix": args.matrix, "k": k}, result, "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    mat, k = _read_matrix(args.matrix)
    rt, ct = row_types(mat), col_types(mat)
    idem = is_flat_idempotent(mat, k)
    rank = exact_rank(mat)
    params = None
    if idem and rank == 2:
        params = to_standard_form(mat, k).params
    canon = canonical_rep(mat)
    canon_text = format_matrix(canon, k)
    digest = hashlib.sha256(canon_text.encode()).hexdigest()
    result = {
        "is_idempotent": idem,
        "rank": rank,
        "row_type_count": rt.count,
        "col_type_count": ct.count,
        "row_multiplicity": list(rt.multiplicity),
        "col_multiplicity": list(ct.multiplicity),
        "standard_params": asdict(params) if params else None,
        "canonical": canon.to_strings(),
        "canonical_sha256": digest,
    }
    lines = [
        f"is_idempotent {str(idem).lower()}",
        f"rank {rank}",
        f"row_types {rt.count} multiplicity {{{','.join(map(str, rt.multiplicity))}}}",
        f"col_types {ct.count} multiplicity {{{','.join(map(str, ct.multiplicity))}}}",
    ]
    if params:
        lines.append(f"standard_params t={params.t} q={params.q} l={params.l} x={params.x} y={params.y}")
    lines.append(f"canonical_sha256 {digest}")
    _emit(args, "classify", {"matrix": args.matrix, "k": k}, result, "\n".join(lines))
    return 0


def cmd_equiv(args) -> int:
    ma, ka = _read_matrix(args.matrix_a)
    mb, kb = _read_matrix(args.matrix_b)
    if ka != kb:
        raise ValueError(f"matrices declare different scales k={ka} and k={kb}")
    include_transpose = not args.no_transpose
    eq = are_equivalent(ma, mb, include_transpose)
    result = {"equivalent": eq, "transpose_included": include_transpose}
    _emit(args, "equiv", {"matrix_a": args.matrix_a, "matrix_b": args.matrix_b},
          result, f"equivalent {str(eq).lower()}")
    return 0


def cmd_census(args) -> int:
    if args.rank2_only:
        records = census_rank2(args.n, args.k)
    else:
        records = census_general(args.n, args.k, cap=GENERAL_CAP, jobs=args.jobs)
    if args.out:
        write_records(args.out, records)
    summary = summarize(records)
    result = {
        "records": [record_to_dict(rec) for rec in records],
        "summary": summary,
        "out": args.out,
    }
    lines = [f"n={s['n']} k={s['k']} r={s['r']} classes={s['classes']} raw={s['raw']}" for s in summary]
    if not lines:
        lines = ["no classes found"]
    _emit(args, "census", {"n": args.n, "k": args.k, "rank2_only": args.rank2_only,
                           "jobs": args.jobs}, result, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="afi",
        description="Construct, verify, classify and count absolutely flat idempotent matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("feasible", help="list feasible (n,k,r) triples")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("bounds", help="rank-2 class-count bounds for (n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="emit a flat idempotent in matrix text format")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", choices=("auto", "rank1", "block", "rank2"), default="auto")
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a matrix file (use - for stdin)")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="types, multiplicities, standard form, canonical hash")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equiv", help="decide equivalence of two matrix files")
    p.add_argument("matrix_a")
    p.add_argument("matrix_b")
    p.add_argument("--no-transpose", action="store_true",
                   help="restrict to permutation/signature similarity")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("census", help="enumerate equivalence classes for (n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rank2-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_census)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="emit a structured envelope")
    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"afi: error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
