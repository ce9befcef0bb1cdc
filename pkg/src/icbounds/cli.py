"""Command-line surface: generators, bounds, the LP hierarchy, the
approximation pipeline, the rate-2 decider, code construction, combined
reports, and the one-shot reproduction suite.

Output formats: json (default), csv (flattened key,value rows), table
(aligned, rationals annotated with an approximate 4-place decimal).  All
rationals are printed as "p/q".  Exit codes: 0 success, 2 validation error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from . import codes, families
from .approx import approximate_beta
from .beta2 import decide_beta_eq_2, undirected_beta2
from .combinatorial import (
    alpha_exact,
    fractional_cover,
    integer_clique_cover,
    minrk2,
    representation_rank,
)
from .hierarchy import solve_bk
from .instance import (
    Graph,
    Instance,
    ParseError,
    from_graph,
    read_problem,
    validate,
)
from .numeric import format_rational
from .report import BoundReport, CapExceeded, build_report

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP = 3


# -- output formatting -------------------------------------------------------


def _flatten(obj, prefix="", out=None):
    if out is None:
        out = []
    if isinstance(obj, dict):
        for k in obj:
            _flatten(obj[k], f"{prefix}{k}." if prefix else f"{k}.", out)
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            _flatten(v, f"{prefix}{i}.", out)
    else:
        out.append((prefix.rstrip("."), obj))
    return out


def _decimalize(v):
    # tables show "p/q (~x.xxxx approx)" for non-integer rationals
    if isinstance(v, str) and "/" in v:
        try:
            f = Fraction(v)
            return f"{v} (~{float(f):.4f} approx)"
        except ValueError:
            return v
    return v


def emit(obj: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        json.dump(obj, stream, indent=1, sort_keys=True)
        stream.write("\n")
    elif fmt == "csv":
        w = csv.writer(stream)
        w.writerow(["key", "value"])
        for k, v in _flatten(obj):
            w.writerow([k, v])
    else:
        rows = [(k, _decimalize(v)) for k, v in _flatten(obj)]
        width = max((len(k) for k, _ in rows), default=0)
        for k, v in rows:
            stream.write(f"{k:<{width}}  {v}\n")


def _rat(x) -> str:
    return format_rational(Fraction(x))


# -- input plumbing ----------------------------------------------------------


def _load(path: str):
    """Returns (instance, graph-or-None, metadata dict)."""
    inst, data = read_problem(path)
    graph = None
    if "edges" in data:
        graph = Graph.from_edge_list(
            int(data["n"]), [(int(u), int(v)) for u, v in data["edges"]]
        )
    rep = validate(inst)
    if not rep.ok:
        raise ParseError(f"invalid instance: {rep.violations}")
    return inst, graph, data


def _sym_arg(spec: str | None, inst: Instance):
    if not spec or spec in ("none", "auto"):
        return None  # "auto" defers to symmetry metadata in the input file
    if spec == "cyclic":
        return [families.shift_perm(inst.n)]
    if spec.startswith("file:"):
        with open(spec[5:]) as fh:
            return json.load(fh)
    raise ParseError(f"unknown symmetry spec {spec!r} (use cyclic, none, file:PATH)")


# -- subcommands -------------------------------------------------------------


def cmd_gen(args) -> dict:
    params = {}
    for kv in args.params:
        if "=" not in kv:
            raise ParseError(f"family parameter {kv!r} is not key=value")
        k, v = kv.split("=", 1)
        params[k] = int(v)
    out = families.family(args.family, **params)
    if out.graph is not None:
        data = {"n": out.graph.n, "edges": out.graph.edge_list()}
    else:
        data = {
            "n": out.instance.n,
            "receivers": [
                {"wants": r.wants, "knows": sorted(r.knows)}
                for r in out.instance.receivers
            ],
        }
    data["family"] = {"name": out.name, "params": params}
    if out.matrix is not None:
        data["matrix"] = out.matrix
        if out.name == "projective-hadamard":
            data["matrix_field"] = params.get("q", 3)
    if args.with_expected:
        data["expected"] = {k: _rat(v) for k, v in out.expected.items()}
    if out.symmetry:
        data["symmetry"] = out.symmetry
    with open(args.output, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")
    return {"written": args.output, "n": data["n"], "kind": "graph" if out.graph else "instance"}


def cmd_bounds(args) -> dict:
    inst, graph, _ = _load(args.instance)
    out: dict = {"n": inst.n, "m": inst.m}
    if args.alpha:
        v, seq = alpha_exact(inst)
        out["alpha"] = {"value": _rat(v), "sequence": list(seq.receivers)}
    if args.psif:
        c = fractional_cover(inst, "weak")
        out["psif"] = {
            "value": _rat(c.total),
            "cover": [[sorted(s), _rat(w)] for s, w in c.items],
        }
    if args.chibarf:
        c = fractional_cover(inst, "strong")
        out["chibarf"] = {
            "value": _rat(c.total),
            "cover": [[sorted(s), _rat(w)] for s, w in c.items],
        }
    if args.chibar:
        if graph is None:
            raise ParseError("chibar needs a graph input")
        k, cover = integer_clique_cover(graph)
        out["chibar"] = {"value": str(k), "cover": [sorted(c) for c in cover]}
    if args.minrk2:
        if graph is None:
            raise ParseError("minrk2 needs a graph input")
        if args.minrk2 == "exact":
            if 2 * len(graph.edges) > args.minrk_cap:
                raise CapExceeded("minrk-free-entries", 2 * len(graph.edges), args.minrk_cap)
            mr = minrk2(graph)
        else:
            _, _, data = _load(args.instance)
            if "matrix" not in data:
                raise ParseError("gram mode needs a 'matrix' entry in the input file")
            mr = representation_rank(graph, data["matrix"], data.get("matrix_field", 2))
        out["minrk2"] = {"value": str(mr.value), "field": mr.field, "exact": mr.exact}
    return out


def cmd_hierarchy(args) -> dict:
    inst, _, data = _load(args.instance)
    if 1 << inst.n > args.max_lp_vars:
        raise CapExceeded("max-lp-vars", 1 << inst.n, args.max_lp_vars)
    sym = _sym_arg(args.sym, inst)
    if sym is None and args.sym == "auto":
        sym = data.get("symmetry")
    t0 = time.perf_counter()
    b = solve_bk(inst, args.level, sym=sym)
    out = {
        "level": b.level,
        "value": _rat(b.value),
        "variables": b.variables,
        "rows": b.rows,
        "runtime_ms": int((time.perf_counter() - t0) * 1000),
    }
    if args.dump_lp:
        out["constraint_counts"] = b.counts
    return out


def cmd_approx(args) -> dict:
    inst, _, _ = _load(args.instance)
    r = approximate_beta(inst, mc=args.mc, seed=args.seed)
    cert = r.certificate
    return {
        "lower": _rat(r.lower),
        "sequence": list(r.sequence.receivers),
        "tau": _rat(r.upper),
        "ratio_bound": _rat(r.ratio_bound) if r.ratio_bound is not None else None,
        "mode": cert.mode,
        "seed": cert.seed,
        "k_cap": cert.k_cap,
        "fallback": cert.fallback,
        "classes": [
            {
                "s": c.s,
                "vertices": c.vertices,
                "k": c.k,
                "cover_term": _rat(c.cover_term) if c.cover_term is not None else None,
                "trivial_term": _rat(c.trivial_term),
                "choice": c.choice,
                "term": _rat(c.term),
            }
            for c in cert.classes
        ],
    }


def cmd_decide2(args) -> dict:
    inst, graph, _ = _load(args.instance)
    cert = decide_beta_eq_2(inst)
    out: dict = {"verdict": cert.is_two}
    if cert.is_two:
        out["labeling"] = cert.labeling
        out["classes"] = cert.num_classes
        out["scheme"] = {
            "field": cert.scheme.field,
            "broadcast_symbols": cert.scheme.broadcast_symbols,
            "rate": _rat(cert.scheme.rate),
        }
    elif cert.aac is not None:
        out["aac_witness"] = {
            "n": cert.aac.n,
            "vertices": cert.aac.vertices,
            "edges": cert.aac.edges,
        }
        out["bound"] = _rat(cert.bound)
    else:
        out["reason"] = cert.reason
    if graph is not None and graph.edges:
        out["undirected_check"] = undirected_beta2(graph)
    return out


def _scheme_json(scheme: codes.CodeScheme) -> dict:
    return {
        "kind": scheme.kind,
        "field": scheme.field,
        "msg_symbols": scheme.msg_symbols,
        "rate": _rat(scheme.rate),
        "encoder": scheme.encoder,
        "decoders": [
            {
                "receiver": d.receiver,
                "bcast_coef": d.bcast_coef,
                "side_coef": d.side_coef,
            }
            for d in scheme.decoders
        ],
    }


def cmd_code(args) -> dict:
    inst, graph, data = _load(args.instance)
    name = args.scheme
    if name == "cliquecover":
        if graph is None:
            raise ParseError("cliquecover needs a graph input")
        _, cover = integer_clique_cover(graph)
        scheme = codes.clique_cover_code(graph, cover)
    elif name == "strongcover":
        scheme = codes.strong_cover_code(inst, fractional_cover(inst, "strong"))
    elif name == "mds":
        scheme = codes.mds_weak_cover_code(inst, fractional_cover(inst, "weak"))
    elif name == "minrk":
        if graph is None:
            raise ParseError("minrk needs a graph input")
        if "matrix" in data:
            rep = representation_rank(graph, data["matrix"], data.get("matrix_field", 2))
        else:
            if 2 * len(graph.edges) > args.minrk_cap:
                raise CapExceeded("minrk-free-entries", 2 * len(graph.edges), args.minrk_cap)
            rep = minrk2(graph)
        scheme = codes.minrk_code(graph, rep)
    elif name == "twosymbol":
        cert = decide_beta_eq_2(inst)
        if not cert.is_two:
            raise ParseError("two-symbol scheme needs a rate-2 instance "
                             f"(decider says no: {cert.reason or 'obstruction found'})")
        scheme = cert.scheme
    else:
        raise ParseError(f"unknown scheme {name!r}")

    mode, trials, seed = "auto", codes.RANDOM_TRIALS, 0
    if args.verify:
        if args.verify == "exhaustive":
            total = scheme.field ** (inst.n * scheme.msg_symbols)
            if total > codes.EXHAUSTIVE_CAP:
                raise CapExceeded("exhaustive-verify", total, codes.EXHAUSTIVE_CAP)
            mode = "exhaustive"
        elif args.verify.startswith("random"):
            parts = args.verify.split(":")
            mode = "random"
            if len(parts) > 1:
                trials = int(parts[1])
            if len(parts) > 2:
                seed = int(parts[2])
        else:
            raise ParseError(f"bad --verify spec {args.verify!r}")
    ver = codes.verify_code(inst, scheme, mode=mode, trials=trials, seed=seed)
    return {
        "scheme": _scheme_json(scheme),
        "verification": {
            "mode": ver.mode,
            "trials": ver.trials,
            "seed": ver.seed,
            "passed": ver.passed,
            "failures": [[list(v), j] for v, j in ver.failures],
        },
    }


def cmd_report(args) -> dict:
    inst, graph, data = _load(args.instance)
    if args.levels:
        levels = tuple(int(x) for x in args.levels.split(","))
    else:
        levels = (args.level,)
    sym = _sym_arg(args.sym, inst)
    if sym is None and args.sym == "auto":
        sym = data.get("symmetry")
    rep = build_report(
        inst,
        graph,
        descriptor=args.instance,
        levels=levels,
        sym=sym,
        with_chibar=args.all and graph is not None,
        with_minrk=(args.all and graph is not None
                    and 2 * len(graph.edges) <= args.minrk_cap),
        with_decide2=args.all or args.decide2,
        max_lp_vars=args.max_lp_vars,
        seed=args.seed,
    )
    return rep.as_dict()


# -- reproduction suite ------------------------------------------------------


def _suite_c5():
    f = families.family("cycle", n=5)
    inst = from_graph(f.graph)
    b2 = solve_bk(inst, 2, sym=f.symmetry).value
    cover = fractional_cover(inst, "strong")
    scheme = codes.strong_cover_code(inst, cover)
    ver = codes.verify_code(inst, scheme, mode="exhaustive")
    ok = b2 == Fraction(5, 2) and scheme.rate == Fraction(5, 2) and ver.passed
    return ok, ("beta(C5) = 5/2 exact" if ok else f"b2={b2} rate={scheme.rate} ver={ver.passed}")


def _suite_cycles():
    for n, want in ((7, Fraction(7, 2)), (9, Fraction(9, 2))):
        f = families.family("cycle", n=n)
        v = solve_bk(from_graph(f.graph), 2, sym=f.symmetry).value
        if v != want:
            return False, f"b2(C{n}) = {v} != {want}"
    return True, "b2(C7) = 7/2, b2(C9) = 9/2"


def _suite_complements():
    for n, want in ((5, Fraction(5, 2)), (7, Fraction(7, 3))):
        f = families.family("complement-cycle", n=n)
        inst = from_graph(f.graph)
        v = solve_bk(inst, 2, sym=f.symmetry).value
        cf = fractional_cover(inst, "strong").total
        if v != want or cf != want:
            return False, f"complement C{n}: b2={v} chibarf={cf} want {want}"
    return True, "complement cycles match n/floor(n/2)"


def _suite_tri3():
    inst = families.tri3()
    b2 = solve_bk(inst, 2).value
    b3 = solve_bk(inst, 3).value
    cert = decide_beta_eq_2(inst)
    ver = codes.verify_code(inst, cert.scheme, mode="exhaustive") if cert.is_two else None
    ok = b2 == 2 and b3 == 3 and cert.is_two and ver.passed
    return ok, f"b2={b2} b3={b3} rate-2 scheme verified={bool(ver and ver.passed)}"


def _suite_decide2():
    import random

    rng = random.Random(11)
    done = 0
    while done < 10:
        n = rng.randint(3, 8)
        g = families.random_gnp(n, rng.uniform(0.2, 0.8), rng)
        comp = families.complement(g)
        if not comp.edges:
            continue
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(comp.edge_list())
        if not nx.is_bipartite(h):
            continue
        inst = from_graph(g)
        cert = decide_beta_eq_2(inst)
        if not cert.is_two:
            return False, f"decider false on complement-bipartite graph {g.edge_list()}"
        if not codes.verify_code(inst, cert.scheme, mode="exhaustive").passed:
            return False, "two-symbol scheme failed verification"
        done += 1
    c5 = from_graph(families.cycle(5))
    if decide_beta_eq_2(c5).is_two:
        return False, "decider true on C5"
    for k in (1, 2, 3):
        inst = families.aac_instance(k)
        cert = decide_beta_eq_2(inst)
        b2 = solve_bk(inst, 2).value
        if cert.is_two or cert.bound != 2 + Fraction(1, k) or b2 != cert.bound:
            return False, f"aac({k}): verdict {cert.is_two} bound {cert.bound} b2 {b2}"
    return True, "10 bipartite-complement schemes verified; AAC obstructions tight"


def _suite_circulant_cayley():
    f = families.family("circulant", n=7, k=2)
    inst = from_graph(f.graph)
    b2 = solve_bk(inst, 2, sym=f.symmetry).value
    cf = fractional_cover(inst, "strong")
    if b2 != Fraction(7, 3) or cf.total != Fraction(7, 3):
        return False, f"circulant(7,2): b2={b2} chibarf={cf.total}"
    scheme = codes.strong_cover_code(inst, cf)
    if not codes.verify_code(inst, scheme, mode="exhaustive").passed:
        return False, "circulant(7,2) cover code failed"
    f = families.family("cayley3", n=8)
    inst = from_graph(f.graph)
    b2 = solve_bk(inst, 2, sym=f.symmetry).value
    cf = fractional_cover(inst, "strong")
    if b2 != 4 or cf.total != 4:
        return False, f"cayley3(8): b2={b2} chibarf={cf.total}"
    scheme = codes.strong_cover_code(inst, cf)
    ok = codes.verify_code(inst, scheme).passed
    return ok, "circulant(7,2) = 7/3, cayley3(8) = 4, cover codes verified"


def _suite_hadamard():
    f = families.family("projective-hadamard", q=3)
    inst = from_graph(f.graph)
    a = alpha_exact(inst)[0]
    rep = representation_rank(f.graph, f.matrix, 3)
    scheme = codes.minrk_code(f.graph, rep)
    ver = codes.verify_code(inst, scheme, mode="exhaustive")
    cf = fractional_cover(inst, "strong").total
    ok = inst.n == 9 and a == 3 and rep.value == 3 and ver.passed and cf >= 3
    return ok, f"n={inst.n} alpha={a} gram rank={rep.value} chibarf={cf} (>= n/alpha = 3)"


def _suite_oddtown():
    from .combinatorial import rank_gf2

    f = families.family("oddtown", m=6)
    g, inc = f.graph, f.matrix
    inst = from_graph(g)
    tri_free = all(
        not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c))
        for a in range(g.n) for b in range(a + 1, g.n) for c in range(b + 1, g.n)
    )
    cf = fractional_cover(inst, "strong").total
    gram = [
        [sum(inc[i][t] * inc[j][t] for t in range(len(inc[0]))) % 2 for j in range(g.n)]
        for i in range(g.n)
    ]
    rep = representation_rank(g, gram, 2)
    scheme = codes.minrk_code(g, rep)
    ver = codes.verify_code(inst, scheme, mode="exhaustive")
    ok = g.n == 16 and tri_free and cf >= 8 and rep.value <= 6 and ver.passed
    return ok, f"n={g.n} triangle-free={tri_free} chibarf={cf} rank={rep.value}"


def _suite_union():
    from .hierarchy import componentwise_b2
    from .instance import graph_disjoint_union

    for k in (2, 3):
        g = families.cycle(5)
        big = g
        for _ in range(k - 1):
            big = graph_disjoint_union(big, g)
        inst = from_graph(big)
        parts = [from_graph(g)] * k
        syms = [[families.shift_perm(5)]] * k
        v = componentwise_b2(parts, syms)
        a = alpha_exact(inst)[0]
        if v != Fraction(5 * k, 2) or a != 2 * k:
            return False, f"{k}C5: b2={v} alpha={a}"
    return True, "k*C5 additivity holds for k=2,3"


def _suite_petersen():
    f = families.family("petersen")
    inst = from_graph(f.graph)
    a = alpha_exact(inst)[0]
    b2 = solve_bk(inst, 2, sym=f.symmetry).value
    cf = fractional_cover(inst, "strong").total
    ok = a == 4 and b2 == 5 and cf == 5
    return ok, f"alpha={a} b2={b2} chibarf={cf}"


def _suite_groetzsch():
    f = families.family("groetzsch")
    inst = from_graph(f.graph)
    a = alpha_exact(inst)[0]
    b2 = solve_bk(inst, 2, sym=f.symmetry).value
    ok = a == 5 and b2 == Fraction(11, 2)
    return ok, f"alpha={a} b2={b2}"


def _suite_chvatal():
    f = families.family("chvatal")
    inst = from_graph(f.graph)
    a = alpha_exact(inst)[0]
    b2 = solve_bk(inst, 2, sym=f.symmetry).value
    ok = a == 4 and b2 == 6
    return ok, f"alpha={a} b2={b2}"


QUICK_SUITE = [
    ("beta(C5) = 5/2 with verified scheme", _suite_c5),
    ("odd cycles C7, C9", _suite_cycles),
    ("complements of C5, C7", _suite_complements),
    ("tri3: b3 overshoots a rate-2 scheme", _suite_tri3),
    ("rate-2 decider with certificates", _suite_decide2),
    ("circulant(7,2) and cayley3(8)", _suite_circulant_cayley),
    ("projective-hadamard q=3", _suite_hadamard),
    ("triangle-free oddtown m=6", _suite_oddtown),
    ("disjoint-union additivity k*C5", _suite_union),
]
FULL_SUITE = QUICK_SUITE + [
    ("petersen full tier", _suite_petersen),
    ("groetzsch full tier", _suite_groetzsch),
    ("chvatal full tier", _suite_chvatal),
]


def _run_suite_item(item):
    name, fn = item
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as e:  # a crashed claim is a failed claim
        ok, detail = False, f"error: {e}"
    return {
        "claim": name,
        "pass": ok,
        "detail": detail,
        "runtime_ms": int((time.perf_counter() - t0) * 1000),
    }


def cmd_paper_suite(args) -> dict:
    items = FULL_SUITE if args.scale == "full" else QUICK_SUITE
    workers = int(os.environ.get("ICBOUNDS_WORKERS", "1"))
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_suite_item, items))
    else:
        results = [_run_suite_item(it) for it in items]
    return {
        "scale": args.scale,
        "passed": sum(r["pass"] for r in results),
        "failed": sum(not r["pass"] for r in results),
        "claims": results,
    }


# -- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="icbounds",
        description="certified bounds, decision procedures, and index codes "
        "for the broadcasting-with-side-information rate",
    )
    ap.add_argument("--format", choices=["json", "csv", "table"], default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named family to a JSON file")
    p.add_argument("family", choices=families.FAMILY_NAMES)
    p.add_argument("params", nargs="*", help="key=value family parameters")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--with-expected", action="store_true")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("bounds", help="combinatorial bounds with witnesses")
    p.add_argument("instance")
    p.add_argument("--alpha", action="store_true")
    p.add_argument("--psif", action="store_true")
    p.add_argument("--chibarf", action="store_true")
    p.add_argument("--chibar", action="store_true")
    p.add_argument("--minrk2", choices=["exact", "gram"])
    p.add_argument("--minrk-cap", type=int, default=26)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("hierarchy", help="solve one LP hierarchy level")
    p.add_argument("instance")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--sym", default=None,
                   help="cyclic | none | file:PATH | auto (from input metadata)")
    p.add_argument("--dump-lp", action="store_true")
    p.add_argument("--max-lp-vars", type=int, default=100_000)
    p.set_defaults(fn=cmd_hierarchy)

    p = sub.add_parser("approx", help="greedy lower bound and tau certificate")
    p.add_argument("instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mc", action="store_true")
    p.set_defaults(fn=cmd_approx)

    p = sub.add_parser("decide2", help="decide whether the rate equals 2")
    p.add_argument("instance")
    p.set_defaults(fn=cmd_decide2)

    p = sub.add_parser("code", help="build and verify an index code")
    p.add_argument("instance")
    p.add_argument("--scheme", required=True,
                   choices=["cliquecover", "strongcover", "mds", "minrk", "twosymbol"])
    p.add_argument("--verify", default=None, help="exhaustive | random[:N[:seed]]")
    p.add_argument("--minrk-cap", type=int, default=26)
    p.set_defaults(fn=cmd_code)

    p = sub.add_parser("report", help="paired lower/upper bound report")
    p.add_argument("instance")
    p.add_argument("--all", action="store_true")
    p.add_argument("--level", type=int, default=2)
    p.add_argument("--levels", default=None, help="comma-separated levels")
    p.add_argument("--sym", default="auto")
    p.add_argument("--decide2", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-lp-vars", type=int, default=100_000)
    p.add_argument("--minrk-cap", type=int, default=26)
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("paper-suite", help="run the reproduction suite")
    p.add_argument("scale", choices=["quick", "full"], nargs="?", default="quick")
    p.set_defaults(fn=cmd_paper_suite)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        out = args.fn(args)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    emit(out, args.format)
    if args.command == "paper-suite" and out["failed"]:
        return 1
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
