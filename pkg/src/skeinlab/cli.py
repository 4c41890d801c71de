"""Command line front end.

Every subcommand prints one JSON document (or a TSV table with --tsv).
Exit status: 0 on success, 1 on a domain error, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .chebyshev import cheb_remainder
from .cyclotomic import root_spec
from .exceptions import SkeinlabError
from .lattice import LatticeSubgroup, Region, count_points, determinant, index
from .normal_curves import decompose
from .residue_degree import (
    D_formula,
    build_lattices,
    independence_certificate,
    is_central,
    open_index_exponent,
    residue_order,
    spanning_check,
)
from .surface_coords import SurfaceSig, Triangulation, build_datum, load_surface
from .torus_algebra import TorusSkein, dim_over_center, parse_torus, product, reduced_trace


class InputError(Exception):
    """Malformed command line input (exit status 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 as well; keep messages uniform
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _json_arg(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot parse {what}: {exc}") from None


def _int_vector(text: str, what: str = "vector") -> tuple[int, ...]:
    text = text.strip()
    data = _json_arg(text, what) if text.startswith("[") else [t for t in text.replace(",", " ").split()]
    try:
        return tuple(int(x) for x in data)
    except (TypeError, ValueError):
        raise InputError(f"{what} must be a list of integers") from None


def _int_matrix(text: str, what: str) -> list[list[int]]:
    data = _json_arg(text, what)
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise InputError(f"{what} must be a JSON list of lists")
    try:
        return [[int(x) for x in row] for row in data]
    except (TypeError, ValueError):
        raise InputError(f"{what} must contain integers") from None


def _torus_arg(text: str, n: int) -> TorusSkein:
    try:
        return parse_torus(text, n)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from None


def _datum(args: argparse.Namespace):
    if args.surface:
        try:
            return load_surface(args.surface)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read surface file: {exc}") from None
    if args.g is None or args.p is None:
        raise InputError("give --surface FILE or both --g and --p")
    return build_datum(SurfaceSig(args.g, args.p), args.variant)


def _add_surface(p: argparse.ArgumentParser) -> None:
    p.add_argument("--surface", help="surface JSON file")
    p.add_argument("--g", type=int, help="genus")
    p.add_argument("--p", type=int, help="number of punctures")
    p.add_argument("--variant", type=int, default=0, help="which built-in triangulation or pants decomposition")


# subcommands

def cmd_dimension(args) -> dict:
    sig = SurfaceSig(args.g, args.p)
    spec = root_spec(args.n)
    D = D_formula(sig, spec)
    if sig.g == 1 and sig.p == 0:
        order = dim_over_center(spec)
    else:
        order = residue_order(build_lattices(build_datum(sig, args.variant), spec))
    return {"D": D, "residue_order": order, "match": D == order}


def cmd_residue(args) -> dict:
    datum = _datum(args)
    spec = root_spec(args.n)
    lat = build_lattices(datum, spec)
    desc = lat.residue_quotient.descriptor
    D = D_formula(datum.sig, spec)
    return {
        "order": desc.order,
        "invariant_factors": list(desc.invariant_factors),
        "D_formula": D,
        "match": desc.order == D,
    }


def cmd_center_test(args) -> dict:
    datum = _datum(args)
    v = _int_vector(args.vector)
    return {"vector": list(v), "n": args.n, "central": is_central(datum, v, root_spec(args.n))}


def cmd_decompose(args) -> dict:
    datum = _datum(args)
    if not isinstance(datum, Triangulation):
        raise SkeinlabError("decomposition needs a punctured surface")
    v = _int_vector(args.vector)
    rows = [{"coords": list(vec), "multiplicity": mult} for vec, mult in decompose(datum, v)]
    return {"vector": list(v), "rows": rows}


def cmd_torus_mul(args) -> list:
    spec = root_spec(args.n)
    x = _torus_arg(args.x, args.n)
    y = _torus_arg(args.y, args.n)
    return product(x, y, spec).to_json()


def cmd_torus_trace(args) -> list:
    spec = root_spec(args.n)
    return reduced_trace(_torus_arg(args.x, args.n), spec).to_json()


def cmd_cheb_rem(args) -> Any:
    if not (args.q >= 0 and args.l >= 1 and 0 <= args.r < args.l):
        raise SkeinlabError("need q >= 0, l >= 1 and 0 <= r < l")
    rem = cheb_remainder(args.q, args.l, args.r)
    if args.reduced:
        return {f"T_{k}": p.to_string("u") for k, p in sorted(rem.reduced().items())}
    return str(rem)


def _region(args) -> Region:
    if args.region == "simplex":
        return Region.simplex(args.dim)
    if args.region == "cube":
        return Region.cube(args.dim)
    data = _json_arg(args.region, "region")
    try:
        return Region.make(data["lower"], data["upper"], [(row, b) for row, b in data.get("inequalities", [])])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad region: {exc}") from None


def cmd_latcount(args) -> dict:
    lam_gens = _int_matrix(args.lattice, "lattice")
    if not lam_gens:
        raise InputError("lattice needs generators")
    r = len(lam_gens[0])
    if args.region in ("simplex", "cube") and args.dim is None:
        args.dim = r
    region = _region(args)
    lam = LatticeSubgroup.of(r, lam_gens)
    sub = LatticeSubgroup.of(r, _int_matrix(args.sublattice, "sublattice")) if args.sublattice else None
    ks = _int_vector(args.k, "k list")
    out: dict[str, Any] = {}
    rows = []
    idx = None
    if sub is not None:
        if not lam.contains_lattice(sub):
            raise SkeinlabError("sublattice is not contained in the lattice")
        idx = index(sub, lam)
        out["index"] = idx
    for k in ks:
        row: dict[str, Any] = {"k": k, "count": count_points(lam, region, k)}
        if sub is not None:
            c_sub = count_points(sub, region, k - args.u)
            row["count_sub"] = c_sub
            ratio = Fraction(row["count"], c_sub) if c_sub else None
            row["ratio"] = float(ratio) if ratio is not None else None
            row["rel_error"] = abs(float(ratio) / idx - 1) if ratio is not None else None
        rows.append(row)
    out["rows"] = rows
    return out


def cmd_independence(args) -> dict:
    datum = _datum(args)
    vectors = _int_matrix(args.vectors, "vectors")
    lat = build_lattices(datum, root_spec(args.n))
    cert = independence_certificate(lat, vectors)
    return {
        "independent": cert.independent,
        "witness": list(cert.witness) if cert.witness else None,
        "rows": [{"vector": list(v), "residue": list(res)} for v, res in zip(vectors, cert.residues)],
    }


def cmd_spanning_check(args) -> dict:
    sig = SurfaceSig(args.g, args.p)
    M = _int_matrix(args.matrix, "matrix")
    ok = spanning_check(sig, M)
    return {"det": abs(determinant(M)), "expected": 2 ** open_index_exponent(sig), "result": ok}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skeinlab", description="Exact computations with skein algebras at roots of unity.")
    parser.add_argument("--tsv", action="store_true", help="print tables as tab separated values")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tsv", action="store_true", default=argparse.SUPPRESS, help="print tables as tab separated values")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name: str, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser  # type: ignore[method-assign]

    p = sub.add_parser("dimension", help="dimension formula against the residue group order")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", type=int, default=0)
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("residue", help="invariant factors of the residue group")
    _add_surface(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_residue)

    p = sub.add_parser("center-test", help="is the diagram with these coordinates central")
    _add_surface(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vector", required=True, help="coordinates, e.g. 2,2,0 or [2,2,0]")
    p.set_defaults(func=cmd_center_test)

    p = sub.add_parser("decompose", help="components of a normal multicurve")
    _add_surface(p)
    p.add_argument("--vector", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("torus-mul", help="product in the torus skein algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True, help='e.g. "[(1,0):1, (2,1):z^2]"')
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_torus_mul)

    p = sub.add_parser("torus-trace", help="reduced trace in the torus skein algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_torus_trace)

    p = sub.add_parser("cheb-rem", help="remainder of T_(ql+r) against T_l - u")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--reduced", action="store_true", help="print the fully reduced remainder per T_k")
    p.set_defaults(func=cmd_cheb_rem)

    p = sub.add_parser("latcount", help="lattice points in scaled regions")
    p.add_argument("--lattice", required=True, help="generators as a JSON list of rows")
    p.add_argument("--sublattice", help="generators of a sublattice for ratio columns")
    p.add_argument("--region", default="simplex", help="simplex, cube, or JSON {lower, upper, inequalities}")
    p.add_argument("--dim", type=int)
    p.add_argument("--k", default="50,100,200", help="comma separated scale factors")
    p.add_argument("--u", type=int, default=0, help="shift k -> k-u for the sublattice count")
    p.set_defaults(func=cmd_latcount)

    p = sub.add_parser("independence", help="distinct-degree certificate")
    _add_surface(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vectors", required=True, help="JSON list of coordinate vectors")
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("spanning-check", help="determinant test for a spanning family of curves")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--matrix", required=True, help="JSON list of rows")
    p.set_defaults(func=cmd_spanning_check)
    return parser


def _cell(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, dict)):
        return json.dumps(x, separators=(",", ":"), sort_keys=True)
    return "" if x is None else str(x)


def to_tsv(result: Any) -> str:
    lines = []
    if isinstance(result, dict):
        rows = result.get("rows")
        for k, v in result.items():
            if k != "rows":
                lines.append(f"{k}\t{_cell(v)}")
        if rows:
            header = list(rows[0])
            lines.append("\t".join(header))
            lines.extend("\t".join(_cell(r.get(h)) for h in header) for r in rows)
    elif isinstance(result, list) and result and isinstance(result[0], dict):
        header = list(result[0])
        lines.append("\t".join(header))
        lines.extend("\t".join(_cell(r.get(h)) for h in header) for r in result)
    else:
        lines.append(_cell(result))
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except InputError as exc:
        print(f"skeinlab: error: {exc}", file=err)
        return 2
    except (SkeinlabError, ValueError, ArithmeticError, NotImplementedError, RuntimeError) as exc:
        print(f"skeinlab: {type(exc).__name__}: {exc}", file=err)
        return 1
    if args.tsv:
        print(to_tsv(result), file=out)
    else:
        print(json.dumps(result, sort_keys=False), file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
