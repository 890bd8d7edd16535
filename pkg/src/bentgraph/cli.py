"""Command-line front end.

Exit codes: 0 success, 1 parse/usage error, 2 resource guard refusal,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field

from . import errors
from .boolfn import BooleanFunction, bits_str, is_bent, nonlinearity, support
from .cayley import adjacency_rank, build_cayley, component_count
from .errors import InfeasibleParameters, InvariantError, ResourceLimitError
from .genlab import enumerate_bent, mm_bent, nyberg_vectorial_bent, random_function, random_mm_bent
from .parse import SpecError, format_function, parse_function
from .srg import (SrgParams, check_srg, lambda_equals_mu, paper_discrepancy,
                  predicted_bent_params, printed_example_check, spectrum_from_params)
from .transform import cayley_eigenvalues, fourier
from .vectorial import VectorialFunction, check_support_srg_condition, is_vectorial_bent, nl

BIT_ORDER_NOTE = "entry i of a table is f(b(i)); b(i) lists x1..xn with x1 the most significant bit of i"


def params_dict(p: SrgParams | None) -> dict | None:
    if p is None:
        return None
    out = {"v": p.v, "k": p.k,
           "lambda": p.lambda_ if p.lambda_defined else None,
           "mu": p.mu if p.mu_defined else None,
           "lambda_eq_mu": lambda_equals_mu(p)}
    if p.loops:
        out["loops"] = True
    return out


@dataclass
class AnalysisReport:
    function_id: str
    n: int
    support_size: int
    nonlinearity: int
    is_bent: bool
    fourier_numerators: list[int]
    eigenvalues: list[list[int]]
    components: int
    adjacency_rank: int
    graph: dict | None
    warnings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "function_id": self.function_id,
            "n": self.n,
            "support_size": self.support_size,
            "nonlinearity": self.nonlinearity,
            "is_bent": self.is_bent,
            "fourier_numerators": self.fourier_numerators,
            "eigenvalues": self.eigenvalues,
            "components": self.components,
            "adjacency_rank": self.adjacency_rank,
            "graph": self.graph,
            "warnings": self.warnings,
        }


def analyze(f: BooleanFunction, function_id: str, srg_max_n: int = errors.SRG_COUNT_MAX_N,
            rank_max_n: int = errors.RANK_MAX_N) -> AnalysisReport:
    spec = fourier(f)
    ev = cayley_eigenvalues(f)
    bent = is_bent(f)
    warnings: list[str] = []
    if f.n % 2:
        warnings.append(f"not bent: {bent.reason}")
    g = build_cayley(f)
    if g.has_loops:
        warnings.append("loops: f(0) = 1, every vertex carries a loop and counts as its "
                        "own common neighbour")
    graph = None
    if f.n <= srg_max_n:
        rep = check_srg(g, srg_max_n)
        if rep.is_srg:
            graph = params_dict(rep.params)
            if not rep.params.mu_defined:
                warnings.append("complete graph: no non-adjacent pair, lambda = mu holds vacuously")
            if bent and f.n % 2 == 0:
                note = paper_discrepancy(f.n, rep.params)
                if note:
                    warnings.append(note)
        else:
            graph = {"srg": False, "violation": rep.violation}
    else:
        warnings.append(f"srg counting skipped: n = {f.n} exceeds limit {srg_max_n}")
    if graph is not None and f.table[0] == 0 and f.n % 2 == 0:
        lam_mu = bool(graph.get("lambda_eq_mu"))
        if bent and not lam_mu:
            raise InvariantError("bent function whose Cayley graph is not srg with lambda = mu")
        if lam_mu and not bent:
            # Single-point supports (a perfect matching) and the all-nonzero support
            # (a complete graph) give lambda = mu without bentness once n >= 4.
            warnings.append("degenerate graph: lambda = mu holds but f is not bent")
    report = AnalysisReport(
        function_id=function_id,
        n=f.n,
        support_size=len(support(f)),
        nonlinearity=nonlinearity(f),
        is_bent=bool(bent),
        fourier_numerators=list(spec.numerators),
        eigenvalues=[list(p) for p in ev.sorted_pairs()],
        components=component_count(f),
        adjacency_rank=adjacency_rank(f, max_n=rank_max_n),
        graph=graph,
        warnings=warnings,
    )
    if report.support_size != report.fourier_numerators[0]:
        raise InvariantError("support size differs from numerator 0")
    return report


def spectrum_csv(f: BooleanFunction) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "i_bits", "lambda_i"])
    for i, lam in enumerate(cayley_eigenvalues(f).indexed):
        w.writerow([i, bits_str(i, f.n), lam])
    return buf.getvalue()


def graph_dot(f: BooleanFunction, name: str = "G") -> str:
    g = build_cayley(f)
    lines = [f"graph {name} {{"]
    for u in range(g.v):
        lines.append(f'  {u} [label="{bits_str(u, g.n)}"];')
    for u in g.loops():
        lines.append(f"  {u} -- {u};")
    for u, w in g.edges():
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def predict_report(n: int) -> dict:
    out = {"n": n, "cases": []}
    for case, p in zip(("plus", "minus"), predicted_bent_params(n)):
        s = spectrum_from_params(p)
        out["cases"].append({
            "case": case,
            "params": params_dict(p),
            "spectrum": {"k": s.k, "theta1": s.theta1, "m1": s.m1,
                         "theta2": s.theta2, "m2": s.m2},
        })
    out["warnings"] = printed_example_check(n)
    return out


def vectorial_report(F: VectorialFunction) -> dict:
    vb = is_vectorial_bent(F)
    subsets = []
    for r in check_support_srg_condition(F):
        subsets.append({
            "indicator": bits_str(r.indicator, F.m),
            "subset": list(r.subset),
            "support_size": r.support_size,
            "params": params_dict(r.params),
            "lambda_eq_mu": r.lambda_eq_mu,
            "support_is_xor_support": r.bridge_ok,
            "violation": r.violation,
        })
    warnings = []
    if any(f.table[0] for f in F.components):
        warnings.append("loops: some component has f(0) = 1")
    return {
        "n": F.n,
        "m": F.m,
        "nl": nl(F),
        "vectorial_bent": bool(vb),
        "witness": None if vb else bits_str(vb.witness, F.m),
        "subsets": subsets,
        "warnings": warnings,
    }


def enumerate_csv(fs: list[BooleanFunction]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "weight"])
    for f in fs:
        w.writerow([f.to_bits(), f.weight])
    return buf.getvalue()


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


LIMIT_NAMES = {
    "srg": "SRG_COUNT_MAX_N",
    "rank": "RANK_MAX_N",
}


def parse_limits(items: list[str]) -> dict[str, int]:
    limits = {key: getattr(errors, attr) for key, attr in LIMIT_NAMES.items()}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or key not in limits or not value.isdigit():
            raise SpecError(f"bad --limit {item!r}; use NAME=INT with NAME in {sorted(limits)}")
        limits[key] = int(value)
    return limits


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to FILE instead of standard output")
    common.add_argument("--limit", action="append", default=[], metavar="NAME=INT",
                        help="override a resource guard: " + ", ".join(LIMIT_NAMES))

    p = argparse.ArgumentParser(
        prog="bentgraph",
        description="Bent functions, Walsh spectra and Cayley graphs on Z_2^n.",
        epilog="Function specs: b:<bits>, h:<hex>, a:n=<N>: <anf>.  " + BIT_ORDER_NOTE,
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="spectra, nonlinearity and srg check")
    a.add_argument("spec")
    a.add_argument("--n", type=int)
    a.add_argument("--format", choices=["json", "csv"], default="json")

    g = sub.add_parser("graph", parents=[common], help="export the Cayley graph")
    g.add_argument("spec")
    g.add_argument("--n", type=int)
    g.add_argument("--format", choices=["dot"], default="dot")

    pr = sub.add_parser("predict", parents=[common], help="srg parameters of bent Cayley graphs")
    pr.add_argument("n", type=int, nargs="?")
    pr.add_argument("--n", dest="n_opt", type=int)
    pr.add_argument("--format", choices=["json"], default="json")

    v = sub.add_parser("vectorial", parents=[common], help="support condition for an (n,m) function")
    v.add_argument("specs", nargs="+", help="one spec per component f1..fm")
    v.add_argument("--n", type=int)
    v.add_argument("--format", choices=["json"], default="json")

    e = sub.add_parser("enumerate", parents=[common], help="all bent functions for n = 2 or 4")
    e.add_argument("n", type=int, nargs="?")
    e.add_argument("--n", dest="n_opt", type=int)
    e.add_argument("--format", choices=["json", "csv"], default="json")

    gen = sub.add_parser("generate", parents=[common], help="emit generated function specs")
    gen.add_argument("family", choices=["mm", "nyberg", "random"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--format", choices=["json"], default="json")
    return p


def _positional_n(args) -> int:
    n = args.n if args.n is not None else args.n_opt
    if n is None:
        raise SpecError("arity n is required")
    return n


def run(args) -> str:
    limits = parse_limits(args.limit)
    if args.command == "analyze":
        f = parse_function(args.spec, args.n)
        if args.format == "csv":
            return spectrum_csv(f)
        rep = analyze(f, args.spec, srg_max_n=limits["srg"], rank_max_n=limits["rank"])
        return dump_json(rep.as_dict())
    if args.command == "graph":
        return graph_dot(parse_function(args.spec, args.n))
    if args.command == "predict":
        return dump_json(predict_report(_positional_n(args)))
    if args.command == "vectorial":
        comps = [parse_function(s, args.n) for s in args.specs]
        F = VectorialFunction.of(comps)
        errors.check_limit("arity for exhaustive srg counting", F.n, limits["srg"])
        return dump_json(vectorial_report(F))
    if args.command == "enumerate":
        n = _positional_n(args)
        fs = enumerate_bent(n)
        if args.format == "csv":
            return enumerate_csv(fs)
        return dump_json({"n": n, "count": len(fs)})
    if args.command == "generate":
        n = args.n
        if args.family == "mm":
            f = mm_bent(n) if args.seed is None else random_mm_bent(n, args.seed)
            return dump_json({"family": "mm", "n": n, "seed": args.seed,
                              "functions": [format_function(f)]})
        if args.family == "nyberg":
            F = nyberg_vectorial_bent(n)
            return dump_json({"family": "nyberg", "n": n, "m": F.m,
                              "functions": [format_function(c) for c in F.components]})
        seed = 0 if args.seed is None else args.seed
        return dump_json({"family": "random", "n": n, "seed": seed,
                          "functions": [format_function(random_function(n, seed))]})
    raise SpecError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        text = run(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (SpecError, InfeasibleParameters, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
