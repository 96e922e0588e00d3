"""Command line front end: ``hyperlap <command> [options] [file]``.

Every command reads a hypergraph document from a file or stdin (``-``) and
writes JSON to stdout. Exit codes: 0 success, 1 a verified bound failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import itertools
import sys

import numpy as np

from . import bounds, cheeger, core, limits, nodal, spectra
from . import operators as ops
from .io import DocumentError, parse, serialize
from .limits import EnumerationLimitError
from .reports import FAIL, BoundReport, dumps, not_applicable, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _index_set(text: str) -> list[int]:
    try:
        return sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str, allow_invalid: bool = False) -> core.OrientedHypergraph:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
    return parse(data, allow_invalid)


def _config(args) -> spectra.EigenConfig:
    changes = {
        "off_diag_tol": args.tol_off_diag,
        "zero_tol": args.tol_zero,
        "cluster_tol": args.tol_cluster,
        "bound_tol": args.tol_bound,
        "max_sweeps": args.max_sweeps,
    }
    return spectra.DEFAULT.with_(**{k: v for k, v in changes.items() if v is not None})


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


# ---------------------------------------------------------------- commands


def cmd_generate(args) -> int:
    fam = args.family
    if fam == "random":
        if args.n is None or args.m is None:
            raise UsageError("random needs --n and --m")
        rng = np.random.default_rng(args.seed)
        g = core.random_hypergraph(rng, args.n, args.m, only_inputs=args.only_inputs, balanced=args.balanced)
        g = g.with_name(f"random[{args.seed}]")
    elif fam == "disjoint_union":
        if args.n is None or args.r is None or args.n % args.r:
            raise UsageError("disjoint_union needs --n and --r with r dividing n")
        g = core.copies(core.complete_graph(args.n // args.r), args.r)
    elif fam == "remark_4_3":
        g = core.remark_4_3()
    else:
        params = {k: v for k, v in (("n", args.n), ("c", args.c)) if v is not None}
        g = core.generate(fam, **params)
    sys.stdout.buffer.write(serialize(g))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    g = _read(args.file)
    cfg = _config(args)
    build = {
        "normalized": spectra.spectrum_normalized,
        "unnormalized": spectra.spectrum_unnormalized,
        "hyperedge": spectra.spectrum_hyperedge,
    }[args.operator]
    sp = build(g, cfg)
    out = {
        "name": g.name,
        "operator": args.operator,
        "eigenvalues": sp.eigenvalues,
        "zero_multiplicity": sp.zero_mult,
        "clusters": [{"start": s, "size": r} for s, r in sp.clusters],
    }
    if args.operator == "normalized":
        zm = spectra.zero_multiplicities(g, cfg)
        out.update(m_V=zm.m_V, m_H=zm.m_H, lambda_min=sp.lambda_min, lambda_max=sp.lambda_max)
    if args.vectors:
        vecs = sp.eigenfunctions if args.operator == "normalized" else sp.eigenvectors
        out["eigenvectors"] = vecs.T
    _emit(out)
    return EXIT_OK


MATRICES = {
    "incidence": ops.incidence,
    "degree": ops.degree_matrix,
    "adjacency": ops.adjacency,
    "normalized": ops.normalized_laplacian,
    "symmetric": ops.sym_laplacian,
    "unnormalized": ops.unnormalized_laplacian,
    "hyperedge": ops.hyperedge_laplacian,
}


def cmd_matrix(args) -> int:
    g = _read(args.file, allow_invalid=args.which in ("incidence", "adjacency", "degree"))
    M = MATRICES[args.which](g)
    if args.format == "csv":
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in M:
            writer.writerow([f"{float(x):.15g}" for x in row])
        sys.stdout.write(buf.getvalue())
    else:
        _emit({"name": g.name, "matrix": args.which, "rows": M})
    return EXIT_OK


def cmd_cheeger(args) -> int:
    g = _read(args.file)
    out: dict = {"name": g.name}
    if args.subset is not None:
        if any(not 0 <= v < g.n for v in args.subset) or not args.subset:
            raise UsageError(f"--subset must be a nonempty set of vertices in [0, {g.n})")
        vs = cheeger.vertex_subset(g, args.subset)
        out["subset"] = {"members": list(vs.members), "vol": vs.vol, "e_tilde": vs.e_tilde, "nu_tilde": vs.nu_tilde}
    else:
        res = cheeger.cheeger_constants(g, args.limit)
        out["h_tilde"] = res.h_tilde
        out["argmin"] = list(res.argmin_subset.members)
        out["nu_max"] = res.nu_max
        out["argmax"] = list(res.argmax_subset.members)
        if args.prime:
            out["h_tilde_prime"] = res.h_tilde_prime
            out["argmin_prime"] = list(res.argmin_subset_prime.members)
    _emit(out)
    return EXIT_OK


def cmd_nodal(args) -> int:
    g = _read(args.file)
    cfg = _config(args)
    if args.function is not None:
        f = np.array(args.function, dtype=float)
        if f.shape != (g.n,):
            raise UsageError(f"--function needs {g.n} values")
        pos, neg = nodal.signed_nodal_counts(g, f)
        _emit({"name": g.name, "signless": nodal.signless_nodal_count(g, f), "signed": [pos, neg]})
        return EXIT_OK
    operators = ("normalized", "unnormalized") if args.operator == "both" else (args.operator,)
    reports = nodal.verify_courant(g, cfg, operators)
    _emit({"name": g.name, "reports": reports, "all_pass": all(r.passed for r in reports)})
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_bounds(args) -> int:
    g = _read(args.file)
    reports = bounds.run_suite(g, args.suite, _config(args), args.delete_set)
    _emit(reports)
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


def cmd_transform(args) -> int:
    g = _read(args.file)
    if args.op == "dual":
        out = core.dual(g)
    elif args.op == "product":
        out = core.cartesian_product(g, _read(args.other))
    else:
        if any(not 0 <= v < g.n for v in args.vertices):
            raise UsageError(f"vertices must lie in [0, {g.n})")
        out = core.weak_delete(g, args.vertices)
        out = core.OrientedHypergraph(out.n, out.hyperedges, allow_isolated=True, name=out.name)
    sys.stdout.buffer.write(serialize(out))
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _graph_deletion_set(g: core.OrientedHypergraph, max_size: int, budget: int = 5000) -> list[int] | None:
    """Smallest vertex set (first in lexicographic order) whose weak deletion leaves a graph."""
    tried = 0
    for r in range(0, max_size + 1):
        for vs in itertools.combinations(range(g.n), r):
            tried += 1
            if tried > budget:
                return None
            if core.weak_delete(g, vs).is_graph():
                return list(vs)
    return None


def verification_report(
    g: core.OrientedHypergraph,
    cfg: spectra.EigenConfig = spectra.DEFAULT,
    seed: int = 0,
    delete_set=None,
) -> dict:
    """Every applicable check on ``g`` in a fixed order; deterministic given ``seed``."""
    rng = np.random.default_rng(seed)
    sections: dict[str, list[BoundReport]] = {}

    sections["structural"] = spectra.structural_reports(g, cfg)
    inter = []
    for r in (1, 2):
        if r < g.n:
            vs = sorted(rng.choice(g.n, size=r, replace=False).tolist())
            inter.append(spectra.interlacing_check(g, vs, cfg))
    if g.is_regular() is not None and g.is_uniform() is not None and all(not h.is_empty for h in g.hyperedges):
        inter.append(spectra.dual_scaling_check(g, cfg))
    else:
        inter.append(not_applicable("dual_scaling", "needs a regular, uniform hypergraph"))
    sections["spectral"] = inter

    ch = [
        cheeger.verify_nu_upper_any(g, cfg),
        cheeger.verify_h_tilde_at_most_one(g),
        cheeger.verify_cheeger_upper(g, cfg),
    ]
    k = spectra.spectrum_normalized(g, cfg).zero_mult + 1
    found = _graph_deletion_set(g, max(k - 2, 0)) if g.n <= limits.get("cheeger") else None
    if found is None:
        ch.append(not_applicable("cheeger_lower_via_graph", "no small deletion set leaves a graph"))
    else:
        ch.append(cheeger.verify_cheeger_lower_via_graph(g, found, cfg))
    ch.append(cheeger.verify_cheeger_lower_underlying(g, cfg))
    sections["cheeger"] = ch

    sections["bounds"] = bounds.run_suite(g, "all", cfg, delete_set)

    nodal_reports = nodal.verify_courant(g, cfg)
    findings = []
    if cheeger.balance_constant(g):
        findings.append(cheeger.verify_underlying_zero_claim(g, cfg))

    counted = [r for rs in sections.values() for r in rs]
    summary = summarize(counted)
    summary["nodal_pass"] = sum(r.passed for r in nodal_reports)
    summary["nodal_fail"] = sum(not r.passed for r in nodal_reports)
    failed = summary[FAIL] + summary["nodal_fail"]
    return {
        "instance": {"name": g.name, "n": g.n, "m": g.m},
        "config": {"eigen": cfg.as_dict(), "seed": seed, "limits": {key: limits.get(key) for key in limits.DEFAULTS}},
        "summary": summary,
        "ok": failed == 0,
        **{name: reports for name, reports in sections.items()},
        "nodal": [
            {
                "operator": r.operator,
                "index": r.vector_index,
                "eigenvalue": r.eigenvalue,
                "k": r.eigen_index,
                "r": r.multiplicity,
                "signless": r.signless_count,
                "signed": [r.positive_count, r.negative_count],
                "bound_signless": r.bound_signless,
                "bound_signed": r.bound_signed if r.signed_pass is not None else None,
                "pass": r.passed,
            }
            for r in nodal_reports
        ],
        "findings": findings,
    }


def cmd_verify(args) -> int:
    g = _read(args.file)
    report = verification_report(g, _config(args), args.seed, args.delete_set)
    _emit(report)
    return EXIT_OK if report["ok"] else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized choices (default 0)")
    common.add_argument("--tol-off-diag", type=float, help="Jacobi off-diagonal stopping tolerance")
    common.add_argument("--tol-zero", type=float, help="zero-eigenvalue threshold (default 1e-8*n)")
    common.add_argument("--tol-cluster", type=float, help="gap below which eigenvalues are equal")
    common.add_argument("--tol-bound", type=float, help="slack allowed on inequality checks")
    common.add_argument("--max-sweeps", type=int, help="Jacobi sweep cap")

    def add_file(p):
        p.add_argument("file", nargs="?", default="-", help="hypergraph JSON (default stdin)")

    parser = argparse.ArgumentParser(prog="hyperlap", description="Spectra and bounds for oriented hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="emit a named family or a random instance")
    p.add_argument("family", choices=sorted(set(core.FAMILIES) | {"random"}))
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--r", type=int, help="copies for disjoint_union")
    p.add_argument("--m", type=int, help="hyperedges for random")
    p.add_argument("--balanced", action="store_true")
    p.add_argument("--only-inputs", action="store_true")
    p.set_defaults(run=cmd_generate)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of one operator")
    p.add_argument("--operator", choices=("normalized", "unnormalized", "hyperedge"), default="normalized")
    p.add_argument("--vectors", action="store_true", help="include eigenvectors")
    add_file(p)
    p.set_defaults(run=cmd_spectrum)

    p = sub.add_parser("matrix", parents=[common], help="print an operator matrix")
    p.add_argument("--which", choices=sorted(MATRICES), default="normalized")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_file(p)
    p.set_defaults(run=cmd_matrix)

    p = sub.add_parser("cheeger", parents=[common], help="generalized Cheeger constants")
    p.add_argument("--limit", type=int, help="largest n for subset enumeration")
    p.add_argument("--prime", action="store_true", help="also report the uncapped constant")
    p.add_argument("--subset", type=_index_set, help="evaluate one vertex set, e.g. 0,3,5")
    add_file(p)
    p.set_defaults(run=cmd_cheeger)

    p = sub.add_parser("nodal", parents=[common], help="nodal domain bounds on eigenvectors")
    p.add_argument("--operator", choices=("normalized", "unnormalized", "both"), default="both")
    p.add_argument("--function", type=lambda s: [float(t) for t in s.split(",")], help="count domains of one function")
    add_file(p)
    p.set_defaults(run=cmd_nodal)

    p = sub.add_parser("bounds", parents=[common], help="eigenvalue-1, general and coloring bounds")
    p.add_argument("--suite", choices=("all",) + bounds.SUITES, default="all")
    p.add_argument("--delete-set", type=_index_set, help="weak deletion leaving #in = #out, e.g. 1,4")
    add_file(p)
    p.set_defaults(run=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="run every applicable check")
    p.add_argument("--delete-set", type=_index_set)
    add_file(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("transform", parents=[common], help="dual, Cartesian product or weak deletion")
    tsub = p.add_subparsers(dest="op", required=True)
    t = tsub.add_parser("dual")
    add_file(t)
    t = tsub.add_parser("product")
    t.add_argument("other", help="second factor")
    add_file(t)
    t = tsub.add_parser("weak-delete")
    t.add_argument("vertices", type=_index_set)
    add_file(t)
    p.set_defaults(run=cmd_transform)
    return parser


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.run(args)
    except (UsageError, DocumentError, core.HypergraphError, EnumerationLimitError, ValueError) as exc:
        print(f"hyperlap {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
