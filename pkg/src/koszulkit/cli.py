"""Command-line front end.

Exit codes: 0 success/verified, 1 verified-false (for example an invalid
certificate or a missing G-sequence), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import corpus as corpus_mod
from . import filtration as flt
from . import gtheory as gt
from . import quotient as qt
from . import resolution as rs
from .files import (
    FileFormatError,
    load_forms,
    load_graph,
    load_ideal,
    load_matrix,
    load_quotient_ring,
)
from .groebner import IdealS, buchberger, colon, toric_ideal
from .rings import DegRevLex, GF, ParseError, PolyRing, QQ


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _print_basis(gb):
    print(f"elements = {len(gb.elements)}")
    flags = []
    for name in ("reduced", "quadratic", "binomial", "disjoint_support"):
        if getattr(gb, name):
            flags.append(name.replace("_", "-"))
    print(f"flags = {', '.join(flags) if flags else 'none'}")
    for g in gb.elements:
        print(g)


def cmd_gb(args):
    ring, gens = load_ideal(_read(args.file))
    gb = buchberger(IdealS(ring, gens))
    _print_basis(gb)
    return 0


def cmd_nf(args):
    ring, gens = load_ideal(_read(args.file))
    gb = buchberger(IdealS(ring, gens))
    print(gb.normal_form(ring.parse(args.poly)))
    return 0


def cmd_colon(args):
    ring, gens = load_ideal(_read(args.file))
    f = ring.parse(args.poly)
    for g in colon(gens, f, ring, ring.order):
        print(g)
    return 0


def cmd_ann(args):
    R, _ = load_quotient_ring(_read(args.file))
    w = R.ambient.parse(args.poly)
    ann = qt.annihilator(w, R)
    for g in ann.min_gens():
        print(g)
    return 0


def cmd_gset(args):
    ring, gens = load_ideal(_read(args.file))
    gb = buchberger(IdealS(ring, gens))
    vs = [ring.var_index(v) for v in args.vars]
    ok = gt.is_gset(gb, vs)
    print("G-set = " + ("true" if ok else "false"))
    return 0 if ok else 1


def cmd_gseq(args):
    ring, gens = load_ideal(_read(args.file))
    gb = buchberger(IdealS(ring, gens))
    vs = [ring.var_index(v) for v in args.vars] if args.vars else list(range(ring.n))
    if not gt.is_gset(gb, vs):
        print("G-sequence = none (not a G-set)")
        return 1
    seq = gt.find_gsequence(gb, vs)
    if seq is None:
        print("G-sequence = none")
        return 1
    for level in seq.chain:
        print("{" + ", ".join(ring.names[i] for i in sorted(level)) + "}")
    return 0


def cmd_gseq_filtration(args):
    ring, gens = load_ideal(_read(args.file))
    gb = buchberger(IdealS(ring, gens))
    cert = gt.gsequence_filtration_cert(gb)
    report = flt.verify_filtration(cert)
    js = flt.certificate_to_json(cert)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(js + "\n")
    else:
        print(js)
    print(f"members = {cert.member_count()}")
    print("verified = " + ("true" if report.valid else "false"))
    return 0 if report.valid else 1


def cmd_bei(args):
    graph = load_graph(_read(args.graph))
    ideal = gt.binomial_edge_ideal(graph, QQ)
    ok = gt.edge_binomials_are_groebner(ideal)
    print(f"edges = {len(graph.edges)}")
    print("edge binomials form a Groebner basis = " + ("true" if ok else "false"))
    for g in ideal.gens:
        print(g)
    if not args.filtration:
        return 0 if ok else 1
    if not ok:
        return 1
    gb, seq = gt.bei_gset_chain(graph, QQ)
    cert = gt.gsequence_filtration_cert(gb, seq)
    report = flt.verify_filtration(cert)
    print(f"members = {cert.member_count()}")
    print("filtration verified = " + ("true" if report.valid else "false"))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(flt.certificate_to_json(cert) + "\n")
    return 0 if report.valid else 1


def cmd_toric(args):
    mat = load_matrix(_read(args.matrix))
    n = len(mat[0])
    field = GF(args.field) if args.field else QQ
    ring = PolyRing(field, [f"x{i}" for i in range(1, n + 1)], DegRevLex(n))
    ideal = toric_ideal(mat, ring)
    for g in ideal.gens:
        print(g)
    return 0


def cmd_filtration(args):
    if args.action == "build":
        R, _ = load_quotient_ring(_read(args.file))
        forms = load_forms(_read(args.forms), R.ambient)
        lf = flt.partial_linear_filtration(R, forms)
        pkf = flt.partial_koszul_filtration(R, lf)
        has_max = flt.contains_maximal_ideal(pkf)
        js = flt.certificate_to_json(pkf)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(js + "\n")
        else:
            print(js)
        print("contains maximal ideal = " + ("true" if has_max else "false"))
        return 0
    cert = flt.import_certificate(args.file)
    report = flt.verify_filtration(cert)
    print("valid = " + ("true" if report.valid else "false"))
    for v in report.violations:
        print(f"violation: {v.axiom}: {v.detail}"
              + (f" [{', '.join(str(g) for g in v.ideal.gens)}]" if v.ideal else ""))
    return 0 if report.valid else 1


def cmd_flags(args):
    R, _ = load_quotient_ring(_read(args.file))
    forms = load_forms(_read(args.forms), R.ambient)
    found = flt.linear_flags(R, forms)
    print(f"flags = {len(found)}")
    for chain in found:
        print(" < ".join(
            "(" + ", ".join(str(g) for g in m.min_gens()) + ")" if m.min_gens() else "(0)"
            for m in chain
        ))
    return 0 if found else 1


def cmd_colonsets(args):
    R, _ = load_quotient_ring(_read(args.file))
    gens = [R.ambient.parse(s) for s in args.gens]
    seeds = [R.ambient.parse(s) for s in args.seeds]
    lists = flt.linear_colon_ideals(R, gens, seeds)
    print(f"lists = {len(lists)}")
    for lst in lists:
        print("[" + " ; ".join(
            "(" + ", ".join(str(g) for g in c.min_gens()) + ")" for c in lst
        ) + "]")
    return 0


def cmd_betti(args):
    R, ideals = load_quotient_ring(_read(args.file))
    if args.ideal:
        gens = [R.ambient.parse(s) for s in args.ideal]
    elif ideals:
        gens = ideals[0]
    else:
        raise FileFormatError("no ideal given (use --ideal or an ideal: section)")
    a = R.ideal(gens)
    table = rs.betti_truncated(a, args.steps, cutoff=args.cutoff)
    print(table.render())
    return 0


def cmd_hilbert(args):
    ring, gens = load_ideal(_read(args.file))
    series = rs.hilbert_series(IdealS(ring, gens))
    print(series)
    reduced = series.reduced()
    print(f"reduced: {reduced}")
    return 0


def cmd_corpus(args):
    if args.name == "all":
        ok = corpus_mod.run_all()
    elif args.name in corpus_mod.CASES:
        ok = corpus_mod.run_case(args.name)
    else:
        names = ", ".join(sorted(corpus_mod.CASES))
        print(f"unknown corpus case {args.name!r}; available: {names}", file=sys.stderr)
        return 2
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="koszulkit",
        description="Koszul filtrations, binomial Groebner bases, and graded "
                    "resolutions over exact fields.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("KOSZULKIT_THREADS", 0)) or None,
        help="worker pool size (outputs never depend on it)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_gb)

    p = sub.add_parser("nf", help="normal form of a polynomial")
    p.add_argument("file")
    p.add_argument("poly")
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("colon", help="colon ideal (ideal : polynomial) in S")
    p.add_argument("file")
    p.add_argument("poly")
    p.set_defaults(fn=cmd_colon)

    p = sub.add_parser("ann", help="annihilator of an element of a quotient ring")
    p.add_argument("file")
    p.add_argument("poly")
    p.set_defaults(fn=cmd_ann)

    p = sub.add_parser("gset", help="test a variable subset against the basis")
    p.add_argument("file")
    p.add_argument("--vars", nargs="+", required=True)
    p.set_defaults(fn=cmd_gset)

    p = sub.add_parser("gseq", help="search for a G-sequence witness chain")
    p.add_argument("file")
    p.add_argument("--vars", nargs="*", default=None)
    p.set_defaults(fn=cmd_gseq)

    p = sub.add_parser("gseq-filtration", help="build and verify the monomial "
                                               "Koszul filtration certificate")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gseq_filtration)

    p = sub.add_parser("bei", help="binomial edge ideal of a graph file")
    p.add_argument("graph")
    p.add_argument("--filtration", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_bei)

    p = sub.add_parser("toric", help="toric ideal of an integer matrix file")
    p.add_argument("matrix")
    p.add_argument("--field", type=int, default=None, metavar="P")
    p.set_defaults(fn=cmd_toric)

    p = sub.add_parser("filtration", help="build (algorithms 1+2) or check certificates")
    p.add_argument("action", choices=["build", "check"])
    p.add_argument("file")
    p.add_argument("--forms")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_filtration)

    p = sub.add_parser("flags", help="all linear flags over a pool of forms")
    p.add_argument("file")
    p.add_argument("--forms", required=True)
    p.set_defaults(fn=cmd_flags)

    p = sub.add_parser("colonsets", help="colon lists of partial linear flags")
    p.add_argument("file")
    p.add_argument("--gens", nargs="+", required=True)
    p.add_argument("--seeds", nargs="+", required=True)
    p.set_defaults(fn=cmd_colonsets)

    p = sub.add_parser("betti", help="truncated Betti table of R/a")
    p.add_argument("file")
    p.add_argument("--ideal", nargs="+")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=None)
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("hilbert", help="Hilbert series of a monomial quotient")
    p.add_argument("file")
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("corpus", help="run an embedded corpus case (or 'all')")
    p.add_argument("name")
    p.set_defaults(fn=cmd_corpus)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "filtration" and args.action == "build" and not args.forms:
        parser.error("filtration build requires --forms")
    try:
        return args.fn(args)
    except (FileFormatError, ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
