"""Command-line front end.

Graph arguments accept a file path, "-" for standard input, or a generator
shorthand like "petersen", "complete:4", "complete_bipartite:2,3". Alpha is
given as a decimal (--alpha 0.5) or an exact fraction (--exact 1/2), the
latter switching exact rational arithmetic on where it matters.

Exit codes: 0 ok, 1 usage or unreadable input, 2 violated precondition,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .closedform import charpoly_cvjoin, charpoly_central_regular, quadratic_roots, solve_poly_real
from .construct import central_graph, central_vertex_join
from .errors import ParameterError, ParseError, PreconditionError, SingularityError
from .graphs import FAMILIES, as_complete_bipartite, format_edge_list, generate, parse_edge_list, regularity
from .spectra import Spectrum, a_alpha_energy, a_alpha_matrix, char_poly, eigenvalues_sym
from . import verify as verify_mod

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_VERIFICATION = 3


def _load_graph(spec):
    if spec == "-":
        return parse_edge_list(sys.stdin.read())
    path = Path(spec)
    if path.exists():
        return parse_edge_list(path.read_text())
    name, _, rest = spec.partition(":")
    if name in FAMILIES:
        params = [int(x) for x in rest.split(",") if x] if rest else []
        return generate(name, params)
    raise FileNotFoundError(f"graph argument {spec!r}: no such file and not a "
                            f"generator shorthand (families: {', '.join(FAMILIES)})")


def _alpha_from(args):
    if getattr(args, "exact", None):
        try:
            return Fraction(args.exact)
        except (ValueError, ZeroDivisionError):
            raise ParameterError(f"--exact expects a fraction like 1/2, got {args.exact!r}")
    if args.alpha is None:
        raise ParameterError("alpha required: pass --alpha A or --exact P/Q")
    return args.alpha


def _grid_from(text):
    grid = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        grid.append(Fraction(tok) if "/" in tok else float(tok))
    return grid


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser():
    p = argparse.ArgumentParser(
        prog="alphacentral",
        description="Spectra of central graphs and central vertex joins for "
                    "the matrix family alpha*D + (1-alpha)*A.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a catalog graph as an edge list")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--out")

    for name, helptext in [("spectrum", "eigensolver spectrum of A_alpha(G)"),
                           ("charpoly", "characteristic polynomial of A_alpha(G)")]:
        s = sub.add_parser(name, help=helptext)
        s.add_argument("graph")
        s.add_argument("--alpha", type=float)
        s.add_argument("--exact", help="alpha as an exact fraction P/Q")
        s.add_argument("--json", action="store_true")

    c = sub.add_parser("central", help="emit the central graph C(G)")
    c.add_argument("graph")
    c.add_argument("--out")

    j = sub.add_parser("cvjoin", help="emit the central vertex join of G1 and G2")
    j.add_argument("graph1")
    j.add_argument("graph2")
    j.add_argument("--out")

    cs = sub.add_parser("closed-spectrum",
                        help="closed-form spectrum with factor provenance")
    cs.add_argument("mode", choices=["central", "cvjoin"])
    cs.add_argument("graphs", nargs="+")
    cs.add_argument("--alpha", type=float)
    cs.add_argument("--exact", help="alpha as an exact fraction P/Q")
    cs.add_argument("--json", action="store_true")

    e = sub.add_parser("energy", help="A_alpha energy of G")
    e.add_argument("graph")
    e.add_argument("--alpha", type=float)
    e.add_argument("--exact", help="alpha as an exact fraction P/Q")

    v = sub.add_parser("verify", help="run the formula-vs-eigensolver sweep")
    v.add_argument("--catalog", help="catalog file; default is the built-in catalog")
    v.add_argument("--grid", default="0,0.25,0.5,0.75,1")
    v.add_argument("--json", action="store_true")
    v.add_argument("--csv", help="also write the report table to this CSV file")

    co = sub.add_parser("cospectral",
                        help="certify a cospectral join family from two seeds")
    co.add_argument("graph1")
    co.add_argument("graph2")
    co.add_argument("graphh")
    co.add_argument("--grid", default="0,0.25,0.5,0.75,1")
    co.add_argument("--json", action="store_true")
    return p


def _cmd_generate(args):
    _emit(format_edge_list(generate(args.family, args.params)), args.out)
    return EXIT_OK


def _cmd_spectrum(args):
    alpha = _alpha_from(args)
    G = _load_graph(args.graph)
    spec = eigenvalues_sym(a_alpha_matrix(G, alpha))
    if args.json:
        payload = spec.to_json()
        payload["alpha"] = str(alpha)
        payload["mode"] = "exact-matrix" if isinstance(alpha, Fraction) else "float"
        print(json.dumps(payload))
    else:
        for v in spec.values:
            print(f"{v:.12g}")
    return EXIT_OK


def _cmd_charpoly(args):
    alpha = _alpha_from(args)
    G = _load_graph(args.graph)
    poly = char_poly(a_alpha_matrix(G, alpha))
    if args.json:
        print(json.dumps(poly.to_json()))
    else:
        print(" ".join(str(c) if isinstance(c, Fraction) else f"{c:.12g}"
                       for c in poly.coeffs))
    return EXIT_OK


def _cmd_central(args):
    _emit(format_edge_list(central_graph(_load_graph(args.graph))), args.out)
    return EXIT_OK


def _cmd_cvjoin(args):
    g1 = _load_graph(args.graph1)
    g2 = _load_graph(args.graph2)
    _emit(format_edge_list(central_vertex_join(g1, g2)), args.out)
    return EXIT_OK


def _cmd_closed_spectrum(args):
    alpha = float(_alpha_from(args))
    if args.mode == "central":
        if len(args.graphs) != 1:
            raise ParameterError("closed-spectrum central takes one graph")
        fac = charpoly_central_regular(_load_graph(args.graphs[0]), alpha)
    else:
        if len(args.graphs) != 2:
            raise ParameterError("closed-spectrum cvjoin takes two graphs")
        g1 = _load_graph(args.graphs[0])
        g2 = _load_graph(args.graphs[1])
        if regularity(g2) is None and as_complete_bipartite(g2) is None:
            raise PreconditionError(
                "G2 is neither regular nor complete bipartite; no rooted "
                "closed form exists, use the spectrum subcommand instead")
        fac = charpoly_cvjoin(g1, g2, alpha)

    rows = []
    if fac.linear_mult:
        rows.append((f"subdivision (x - {fac.linear_root:.10g})",
                     [fac.linear_root] * fac.linear_mult))
    for f in fac.factors:
        if f.degree == 1:
            c0, c1 = f.poly.coeffs
            roots = [-c0 / c1]
        elif f.degree == 2:
            roots = quadratic_roots(f.poly)
        else:
            roots = solve_poly_real(f.poly)
        rows.append((f.label, sorted(roots * f.mult, reverse=True)))

    if args.json:
        allvals = sorted((v for _, roots in rows for v in roots), reverse=True)
        print(json.dumps({"spectrum": Spectrum.from_values(allvals).to_json(),
                          "factors": fac.to_json()}))
    else:
        for label, roots in rows:
            pretty = " ".join(f"{v:.12g}" for v in roots)
            print(f"{label}: {pretty}")
    return EXIT_OK


def _cmd_energy(args):
    alpha = _alpha_from(args)
    print(f"{a_alpha_energy(_load_graph(args.graph), alpha):.12g}")
    return EXIT_OK


def _parse_catalog_file(path):
    entries = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "central" and len(parts) == 2:
            entries.append(_load_graph(parts[1]))
        elif kind == "cvjoin" and len(parts) == 3:
            entries.append((_load_graph(parts[1]), _load_graph(parts[2])))
        elif kind == "kpq" and len(parts) == 4:
            entries.append((_load_graph(parts[1]), (int(parts[2]), int(parts[3]))))
        else:
            raise ParseError(f"catalog line {lineno}: expected 'central G', "
                             f"'cvjoin G1 G2', or 'kpq G1 p q', got {line!r}")
    return entries


def _cmd_verify(args):
    catalog = (_parse_catalog_file(args.catalog) if args.catalog
               else verify_mod.default_catalog())
    report = verify_mod.sweep(catalog, _grid_from(args.grid))
    if args.csv:
        Path(args.csv).write_text(report.to_csv())
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.all_passed else EXIT_VERIFICATION


def _cmd_cospectral(args):
    report = verify_mod.cospectral_cvjoin_family(
        _load_graph(args.graph1), _load_graph(args.graph2),
        _load_graph(args.graphh), _grid_from(args.grid))
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.all_passed else EXIT_VERIFICATION


_DISPATCH = {
    "generate": _cmd_generate,
    "spectrum": _cmd_spectrum,
    "charpoly": _cmd_charpoly,
    "central": _cmd_central,
    "cvjoin": _cmd_cvjoin,
    "closed-spectrum": _cmd_closed_spectrum,
    "energy": _cmd_energy,
    "verify": _cmd_verify,
    "cospectral": _cmd_cospectral,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _DISPATCH[args.command](args)
    except (PreconditionError, SingularityError) as exc:
        # must precede ValueError: PreconditionError subclasses it
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParseError, ParameterError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
