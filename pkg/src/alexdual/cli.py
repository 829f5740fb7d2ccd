"""Command-line interface.

Exit codes: 0 success, 1 a verification or commutation check failed,
2 usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence, TextIO

from .algebra import INTEGERS, GroupInvariants, IntMatrix, RingSpec
from .duality import (
    build_phi,
    commutation_by_degree,
    enumerate_complexes,
    sample_complexes,
    verify_duality,
)
from .homology import (
    homology_invariants,
    reduced_chain_complex,
    reduced_cochain_complex,
    relative_chain_complex,
)
from .io import ParseError, parse_complex, serialize_complex, serialize_report
from .simplicial import DomainError, Face, SimplicialComplex, alexander_dual, full_simplex


class VerificationFailed(Exception):
    pass


def face_label(face: Face, n: int) -> str:
    if not face:
        return "{}"
    return ("" if n < 10 else ",").join(map(str, face))


def format_matrix(m: IntMatrix, rows: Sequence[Face], cols: Sequence[Face], n: int) -> list[str]:
    row_labels = [face_label(f, n) for f in rows]
    col_labels = [face_label(f, n) for f in cols]
    width = max([len(s) for s in col_labels] + [len(str(x)) for r in m.tolist() for x in r] + [1])
    lead = max([len(s) for s in row_labels] + [1])
    lines = [" " * lead + "".join(" " + s.rjust(width) for s in col_labels)]
    for label, values in zip(row_labels, m.tolist()):
        lines.append(label.ljust(lead) + "".join(" " + str(x).rjust(width) for x in values))
    return lines


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _group_record(degree: int, g: GroupInvariants) -> dict:
    return {"degree": degree, "group": str(g), "free_rank": g.free_rank, "torsion": list(g.torsion)}


def _print_groups(groups: dict[int, GroupInvariants], symbol: str, machine: bool, out: TextIO):
    if machine:
        for i, g in groups.items():
            out.write(_dumps(_group_record(i, g)) + "\n")
        return
    nontrivial = [(i, g) for i, g in groups.items() if not g.is_trivial]
    for i, g in nontrivial:
        out.write(f"{symbol.format(i)} = {g}\n")
    if not nontrivial:
        out.write(f"{symbol.format('*')} = 0\n")


def _read_complex(path: str | None, stdin: bytes | None) -> SimplicialComplex:
    if path is not None:
        with open(path, "rb") as fh:
            return parse_complex(fh.read())
    if stdin is None:
        stdin = sys.stdin.buffer.read()
    return parse_complex(stdin)


def _cmd_homology(args, X, out):
    c = reduced_chain_complex(X, args.ring)
    groups = {i: homology_invariants(c, i) for i in range(-1, X.n)}
    _print_groups(groups, "H~_{}", args.machine, out)


def _cmd_cohomology(args, X, out):
    c = reduced_cochain_complex(X, args.ring)
    groups = {i: homology_invariants(c, i) for i in range(-1, X.n)}
    _print_groups(groups, "H~^{}", args.machine, out)


def _relative_pair(args, X):
    if args.subcomplex is None:
        return full_simplex(X.n), X
    return X, _read_complex(args.subcomplex, None)


def _cmd_relative(args, X, out):
    big, small = _relative_pair(args, X)
    c = relative_chain_complex(big, small, args.ring)
    groups = {i: homology_invariants(c, i) for i in range(-1, X.n)}
    _print_groups(groups, "H~_{}(X,A)", args.machine, out)


def _cmd_dual(args, X, out):
    out.write(serialize_complex(alexander_dual(X)).decode() + "\n")


def _cmd_matrices(args, X, out):
    if args.kind == "chain":
        c, name = reduced_chain_complex(X, args.ring), "d_{i}: C_{i} -> C_{j}"
    elif args.kind == "cochain":
        c, name = reduced_cochain_complex(X, args.ring), "d^{i}: C^{j} -> C^{i}"
    else:
        big, small = _relative_pair(args, X)
        c, name = relative_chain_complex(big, small, args.ring), "d_{i}: R_{i} -> R_{j}"
    for i in sorted(c.operators):
        m = c.operator(i)
        if args.kind == "cochain":
            rows, cols = c.basis(i), c.basis(i - 1)
        else:
            rows, cols = c.basis(i - 1), c.basis(i)
        if args.machine:
            out.write(_dumps({
                "degree": i,
                "rows": [face_label(f, X.n) for f in rows],
                "cols": [face_label(f, X.n) for f in cols],
                "entries": m.tolist(),
            }) + "\n")
            continue
        out.write(name.format(i=i, j=i - 1) + f" ({m.rows}x{m.cols})\n")
        for line in format_matrix(m, rows, cols, X.n):
            out.write(line + "\n")
        out.write("\n")


def _cmd_phi(args, X, out):
    checks = commutation_by_degree(X, range(-1, X.n))
    for j, commutes in checks.items():
        phi = build_phi(X, j)
        if args.machine:
            out.write(_dumps({
                "degree": j,
                "rows": [face_label(f, X.n) for f in phi.target_basis],
                "cols": [face_label(f, X.n) for f in phi.source_basis],
                "entries": phi.matrix.tolist(),
                "commutes": commutes,
            }) + "\n")
            continue
        m = phi.matrix
        out.write(f"phi_{j}: R_{j} -> C^{X.n - j - 2} ({m.rows}x{m.cols})\n")
        for line in format_matrix(m, phi.target_basis, phi.source_basis, X.n):
            out.write(line + "\n")
        out.write(f"commutes: {str(commutes).lower()}\n\n")
    if not all(checks.values()):
        raise VerificationFailed("commutation square failed")


def _report_lines(report, machine: bool) -> list[str]:
    if machine:
        return [serialize_report(report).decode()]
    lines = [f"{report.complex_id} over {report.ring}:"]
    for row in report.per_degree:
        mark = "ok" if row.matched else "MISMATCH"
        lines.append(
            f"  H~_{row.degree}(X) = {row.homology}   "
            f"H~^{report.n - row.degree - 3}(X*) = {row.cohomology}   {mark}"
        )
    return lines


def _complex_stream(args, X_or_none) -> Iterable[SimplicialComplex]:
    if args.exhaustive:
        if args.n is None:
            raise DomainError("--exhaustive needs --n")
        return enumerate_complexes(args.n)
    if args.count is not None:
        if args.n is None:
            raise DomainError("--count needs --n")
        return sample_complexes(args.n, args.count, args.seed)
    return [X_or_none]


def _verify_one(item):
    X, ring = item
    return verify_duality(X, ring)


def _reports(args, complexes):
    items = ((X, args.ring) for X in complexes)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            yield from pool.map(_verify_one, items, chunksize=64)
    else:
        yield from map(_verify_one, items)


def _cmd_verify(args, X, out):
    single = not args.exhaustive and args.count is None
    total = matched = 0
    for report in _reports(args, _complex_stream(args, X)):
        total += 1
        matched += report.all_matched
        if not single and (args.command == "enumerate" or not report.all_matched):
            out.write(f"{report.complex_id} {'ok' if report.all_matched else 'FAIL'}\n")
        if single or not report.all_matched:
            for line in _report_lines(report, args.machine):
                out.write(line + "\n")
    if not single:
        out.write(f"{matched}/{total} matched\n")
    if matched != total:
        raise VerificationFailed(f"{total - matched} of {total} complexes failed duality")


HANDLERS = {
    "homology": _cmd_homology,
    "cohomology": _cmd_cohomology,
    "relative": _cmd_relative,
    "dual": _cmd_dual,
    "matrices": _cmd_matrices,
    "phi": _cmd_phi,
    "verify": _cmd_verify,
    "enumerate": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", type=RingSpec.parse, default=INTEGERS,
                        help="coefficients: z, q or fp:<p> (default z)")
    common.add_argument("--input", help="complex document (default: standard input)")
    common.add_argument("--machine", action="store_true", help="stable JSON-lines output")

    parser = argparse.ArgumentParser(
        prog="alexdual",
        description="Homology of simplicial complexes and combinatorial Alexander duality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("homology", parents=[common], help="reduced homology")
    sub.add_parser("cohomology", parents=[common], help="reduced cohomology")
    for name, text in (("relative", "relative homology"), ("matrices", "labelled operator matrices")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--subcomplex", help="subcomplex A; without it the pair is (full simplex, X)")
        if name == "matrices":
            p.add_argument("--kind", choices=("chain", "cochain", "relative"), default="chain")
    sub.add_parser("dual", parents=[common], help="Alexander dual document")
    sub.add_parser("phi", parents=[common], help="complement isomorphism and its commutation check")
    for name, text in (("verify", "check duality"), ("enumerate", "stream verifier lines")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--n", type=int)
        p.add_argument("--count", type=int)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--exhaustive", action="store_true")
        p.add_argument("--jobs", type=int, default=1)
    return parser


def _needs_input(args) -> bool:
    if args.command in ("verify", "enumerate"):
        return not args.exhaustive and args.count is None
    return True


def run(
    argv: Sequence[str],
    stdin: bytes | None = None,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    """Run one command, writing results to ``out`` and diagnostics to ``err``."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "enumerate" and not args.exhaustive and args.count is None:
        args.exhaustive = True
    try:
        X = _read_complex(args.input, stdin) if _needs_input(args) else None
        HANDLERS[args.command](args, X, out)
    except VerificationFailed as exc:
        err.write(f"alexdual: {exc}\n")
        return 1
    except (ParseError, DomainError, ValueError, OSError) as exc:
        err.write(f"alexdual: {exc}\n")
        return 2
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
