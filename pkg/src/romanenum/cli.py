"""Command-line front end.

Subcommands:

  enumerate   stream every minimal function of a variant for a graph
  fixed-two   stream the completions of one 2-set A
  oracle      exhaustive reference answers on small graphs
  check       explain whether one function is (minimally) of a variant
  gadget      build a reduction instance (graph + labels + 2-set/function)
  gen         write a generated instance from a named family
  bench       growth sweep over a family, CSV on stdout

Exit codes: 0 success (or nonempty result), 1 input/parse/cap trouble,
2 unsupported variant/graph-class combination, 3 empty result where
emptiness is the answer.  Function streams are flushed line by line;
--stats appends '# key=value' lines after the stream.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import families
from .engine import EnumerationStats, enumerate_with_budget, iter_minimal
from .fixed_two import IntervalConnectedSolver, solver_for
from .gadgets import (
    GadgetError,
    gadget_crdf_from_sat,
    gadget_maxrd_from_extds,
    gadget_split_from_hypergraph,
    gadget_trdf_from_sat,
)
from .graphs import (
    Graph,
    GraphFormatError,
    format_graph,
    format_intervals,
    format_vertex_set,
    parse_graph,
    parse_intervals,
    parse_vertex_set,
    validate_interval_model,
)
from .oracle import (
    CapExceeded,
    oracle_all_minimal,
    oracle_fixed_two,
    parse_dimacs,
    parse_hypergraph,
)
from .roman import (
    UnsupportedRoute,
    Variant,
    format_function,
    level_mask,
    minimality_report,
    parse_function,
)

OK, ERR_INPUT, ERR_UNSUPPORTED, ERR_EMPTY = 0, 1, 2, 3


@dataclass
class RunConfig:
    """Resolved options for one command invocation."""

    command: str
    variant: Optional[Variant] = None
    graph_class: str = "auto"
    graph_path: Optional[str] = None
    intervals_path: Optional[str] = None
    two_set: Optional[str] = None
    function: Optional[str] = None
    output: Optional[str] = None
    limit: int = 0
    stats: bool = False
    fmt: str = "text"
    cap: int = 10
    seed: int = 0
    extra: dict = field(default_factory=dict)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(cfg: RunConfig) -> Graph:
    if cfg.graph_path is None:
        raise GraphFormatError("no graph file given")
    return parse_graph(_read_text(cfg.graph_path))


def _load_model(cfg: RunConfig, g: Graph):
    if cfg.intervals_path is None:
        return None
    model = parse_intervals(_read_text(cfg.intervals_path))
    if len(model) != g.n:
        raise GraphFormatError("interval file size does not match the graph")
    if not validate_interval_model(g, model):
        print(
            "warning: intervals do not realize the graph's edge set exactly; "
            "proceeding with their endpoint order",
            file=sys.stderr,
        )
    return model


class _Out:
    def __init__(self, path: Optional[str]):
        self.path = path
        self.fh = open(path, "w", encoding="utf-8") if path else sys.stdout

    def line(self, text: str) -> None:
        print(text, file=self.fh, flush=True)

    def close(self) -> None:
        if self.path:
            self.fh.close()


def _function_line(f, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "values": list(f),
                "v2": sorted_bits(level_mask(f, 2)),
                "v1": sorted_bits(level_mask(f, 1)),
            },
            separators=(",", ":"),
        )
    return format_function(f)


def sorted_bits(mask: int) -> list:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _emit_stats(out: _Out, st: EnumerationStats) -> None:
    for key, value in st.as_dict().items():
        out.line(f"# {key}={value}")


def _make_solver(cfg: RunConfig, g: Graph):
    model = _load_model(cfg, g)
    return solver_for(
        g,
        cfg.variant,
        model=model,
        class_hint=cfg.graph_class,
        validate_model=False,  # validated (with warning) in _load_model
    )


def cmd_enumerate(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    solver = _make_solver(cfg, g)
    out = _Out(cfg.output)
    try:
        st = EnumerationStats()
        stream = iter_minimal(g, cfg.variant, solver, stats=st)
        count = 0
        for _a, f in stream:
            out.line(_function_line(f, cfg.fmt))
            count += 1
            if cfg.limit and count >= cfg.limit:
                break
        stream.close()
        if cfg.stats:
            _emit_stats(out, st)
        return OK
    finally:
        out.close()


def cmd_fixed_two(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    a = parse_vertex_set(cfg.two_set or "", g.n)
    solver = _make_solver(cfg, g)
    out = _Out(cfg.output)
    try:
        start = time.perf_counter()
        count = 0
        for f in solver.stream(a):
            out.line(_function_line(f, cfg.fmt))
            count += 1
            if cfg.limit and count >= cfg.limit:
                break
        if cfg.stats:
            out.line(f"# outputs={count}")
            out.line(f"# seconds={round(time.perf_counter() - start, 6)}")
        return OK if count else ERR_EMPTY
    finally:
        out.close()


def cmd_oracle(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    out = _Out(cfg.output)
    try:
        if cfg.two_set is not None:
            a = parse_vertex_set(cfg.two_set, g.n)
            fns = sorted(oracle_fixed_two(g, cfg.variant, a, cap=cfg.cap))
        else:
            fns = sorted(oracle_all_minimal(g, cfg.variant, cap=cfg.cap))
        for f in fns:
            out.line(_function_line(f, cfg.fmt))
        if cfg.stats:
            out.line(f"# outputs={len(fns)}")
        if cfg.two_set is not None and not fns:
            return ERR_EMPTY
        return OK
    finally:
        out.close()


def cmd_check(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    f = parse_function(cfg.function or "")
    if len(f) != g.n:
        raise GraphFormatError(
            f"function has {len(f)} digits, graph has {g.n} vertices"
        )
    verdict, lines = minimality_report(g, f, cfg.variant)
    out = _Out(cfg.output)
    try:
        for line in lines:
            out.line(line)
        return OK if verdict else ERR_EMPTY
    finally:
        out.close()


def cmd_gadget(cfg: RunConfig) -> int:
    kind = cfg.extra["kind"]
    if kind in ("crdf-sat", "trdf-sat"):
        if cfg.extra.get("cnf") is None:
            raise GraphFormatError("sat gadgets need --cnf FILE")
        cnf = parse_dimacs(_read_text(cfg.extra["cnf"]))
        build = gadget_crdf_from_sat if kind == "crdf-sat" else gadget_trdf_from_sat
        inst = build(cnf, strict=cfg.extra.get("strict", False))
    elif kind == "mrdf-extension":
        g = _load_graph(cfg)
        u = parse_vertex_set(cfg.extra.get("set") or "", g.n)
        inst = gadget_maxrd_from_extds(g, u)
    elif kind == "split-transversal":
        if cfg.extra.get("hypergraph") is None:
            raise GraphFormatError("split gadget needs --hypergraph FILE")
        h = parse_hypergraph(_read_text(cfg.extra["hypergraph"]))
        inst = gadget_split_from_hypergraph(
            h, allow_universal=cfg.extra.get("allow_universal", False)
        )
    else:  # pragma: no cover - argparse restricts choices
        raise GraphFormatError(f"unknown gadget kind {kind}")

    prefix = cfg.extra.get("out")
    graph_text = format_graph(inst.graph)
    label_lines = [f"{v} {name}" for v, name in enumerate(inst.labels)]
    if prefix:
        with open(f"{prefix}.graph", "w", encoding="utf-8") as fh:
            fh.write(graph_text)
        with open(f"{prefix}.labels", "w", encoding="utf-8") as fh:
            fh.write("\n".join(label_lines) + "\n")
        if inst.fixed_two is not None:
            with open(f"{prefix}.two_set", "w", encoding="utf-8") as fh:
                fh.write(format_vertex_set(inst.fixed_two) + "\n")
        else:
            with open(f"{prefix}.prefunction", "w", encoding="utf-8") as fh:
                fh.write(format_function(inst.prefunction) + "\n")
        print(f"wrote {prefix}.graph")
        return OK
    out = _Out(cfg.output)
    try:
        out.line(graph_text.rstrip("\n"))
        out.line("# labels")
        for line in label_lines:
            out.line("# " + line)
        if inst.fixed_two is not None:
            out.line(f"# two_set={format_vertex_set(inst.fixed_two)}")
        else:
            out.line(f"# prefunction={format_function(inst.prefunction)}")
        return OK
    finally:
        out.close()


def _family_instance(family: str, n: int, p: float, seed: int):
    """Returns (graph, model-or-None, partition-or-None, distinguished-set-or-None)."""
    rng = random.Random(seed)
    if family == "path":
        return families.path_graph(n), None, None, None
    if family == "cycle":
        return families.cycle_graph(n), None, None, None
    if family == "complete":
        return families.complete_graph(n), None, None, None
    if family == "random":
        return families.random_graph(n, p, rng), None, None, None
    if family == "connected-random":
        return families.random_connected_graph(n, p, rng), None, None, None
    if family == "cobipartite-random":
        g, part = families.random_cobipartite(n, p, rng)
        return g, None, part, None
    if family == "interval-random":
        g, model = families.random_interval_instance(n, rng)
        return g, model, None, None
    if family == "split-random":
        return families.random_split_graph(n, p, rng), None, None, None
    if family == "gn":
        g, model, a = families.double_link_chain(n)
        return g, model, None, a
    raise GraphFormatError(f"unknown family {family}")


def cmd_gen(cfg: RunConfig) -> int:
    family = cfg.extra["family"]
    n = cfg.extra["n"]
    g, model, part, dset = _family_instance(family, n, cfg.extra.get("p", 0.5), cfg.seed)
    prefix = cfg.extra.get("out")
    if prefix:
        with open(f"{prefix}.graph", "w", encoding="utf-8") as fh:
            fh.write(format_graph(g))
        if model is not None:
            with open(f"{prefix}.intervals", "w", encoding="utf-8") as fh:
                fh.write(format_intervals(model))
        print(f"wrote {prefix}.graph")
        return OK
    out = _Out(cfg.output)
    try:
        out.line(f"# family={family} n={n} seed={cfg.seed}")
        if part is not None:
            out.line(
                f"# cobipartite: {format_vertex_set(part.c1)} | {format_vertex_set(part.c2)}"
            )
        if dset is not None:
            out.line(f"# two_set={format_vertex_set(dset)}")
        out.line(format_graph(g).rstrip("\n"))
        if model is not None:
            out.line("# intervals")
            out.line(format_intervals(model).rstrip("\n"))
        return OK
    finally:
        out.close()


BENCH_COLUMNS = (
    "family,variant,n,seed,outputs,sets_explored,empty_sets_explored,"
    "max_consecutive_empty,max_inter_output_work,seconds"
)


def _bench_row(family: str, variant: Variant, n: int, p: float, seed: int) -> EnumerationStats:
    g, model, part, dset = _family_instance(family, n, p, seed)
    if family == "gn":
        if variant is not Variant.CRDF:
            raise UnsupportedRoute("the gn family benches the interval crdf pipeline")
        solver = IntervalConnectedSolver(g, model, validate=False)
        st = EnumerationStats()
        start = time.perf_counter()
        st.sets_explored = 1
        for _f in solver.stream(dset):
            st.outputs += 1
        st.max_inter_output_work = 1
        st.seconds = time.perf_counter() - start
        return st
    solver = solver_for(g, variant, partition=part, model=model, validate_model=False)
    st = EnumerationStats()
    for _pair in iter_minimal(g, variant, solver, stats=st):
        pass
    return st


def cmd_bench(cfg: RunConfig) -> int:
    family = cfg.extra["family"]
    n_min, n_max = cfg.extra["n_min"], cfg.extra["n_max"]
    step = cfg.extra.get("step", 1)
    out = _Out(cfg.output)
    try:
        out.line(BENCH_COLUMNS)
        for n in range(n_min, n_max + 1, step):
            st = _bench_row(family, cfg.variant, n, cfg.extra.get("p", 0.5), cfg.seed)
            d = st.as_dict()
            out.line(
                f"{family},{cfg.variant.value},{n},{cfg.seed},{d['outputs']},"
                f"{d['sets_explored']},{d['empty_sets_explored']},"
                f"{d['max_consecutive_empty']},{d['max_inter_output_work']},{d['seconds']}"
            )
        return OK
    finally:
        out.close()


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="romanenum",
        description="Enumerate minimal Roman domination functions and variants.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, variants=("rdf", "mrdf", "trdf", "crdf")):
        p.add_argument("--graph", required=False, help="graph file ('n m' header + edge lines)")
        p.add_argument("--variant", choices=variants, default="rdf")
        p.add_argument("--output", help="write results here instead of stdout")
        p.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")

    p = sub.add_parser("enumerate", help="stream all minimal functions of a variant")
    common(p)
    p.add_argument("--class", dest="graph_class", choices=("auto", "general", "cobipartite", "interval"), default="auto")
    p.add_argument("--intervals", help="interval file (needed for --class interval)")
    p.add_argument("--limit", type=int, default=0, help="stop after this many functions")
    p.add_argument("--stats", action="store_true", help="append '# key=value' lines")

    p = sub.add_parser("fixed-two", help="stream the completions of one 2-set")
    common(p)
    p.add_argument("--class", dest="graph_class", choices=("auto", "general", "cobipartite", "interval"), default="auto")
    p.add_argument("--intervals")
    p.add_argument("--two-set", required=True, help="comma-separated vertices, '' for the empty set")
    p.add_argument("--limit", type=int, default=0)
    p.add_argument("--stats", action="store_true")

    p = sub.add_parser("oracle", help="exhaustive reference answers (small graphs)")
    common(p, variants=("rdf", "mrdf", "trdf", "crdf", "prdf"))
    p.add_argument("--two-set", help="restrict to functions whose 2-set is exactly this")
    p.add_argument("--cap", type=int, default=10, help="largest n the oracle will scan")
    p.add_argument("--stats", action="store_true")

    p = sub.add_parser("check", help="explain whether a function is (minimally) of a variant")
    common(p, variants=("rdf", "mrdf", "trdf", "crdf", "prdf"))
    p.add_argument("--function", required=True, help="digit string, e.g. 2002")

    p = sub.add_parser("gadget", help="build a reduction instance")
    p.add_argument("--kind", required=True, choices=("crdf-sat", "trdf-sat", "mrdf-extension", "split-transversal"))
    p.add_argument("--cnf", help="DIMACS file for the sat kinds")
    p.add_argument("--graph", help="graph file for mrdf-extension")
    p.add_argument("--set", help="vertex set U for mrdf-extension")
    p.add_argument("--hypergraph", help="hypergraph file for split-transversal")
    p.add_argument("--strict", action="store_true", help="enforce the exactly-(2,2) occurrence discipline")
    p.add_argument("--allow-universal", action="store_true", help="accept hypergraphs with a universal element")
    p.add_argument("--out", help="write PREFIX.graph / PREFIX.labels / PREFIX.two_set|prefunction")
    p.add_argument("--output", help="write stdout form here instead")

    p = sub.add_parser("gen", help="generate an instance from a named family")
    p.add_argument("--family", required=True, choices=(
        "path", "cycle", "complete", "random", "connected-random",
        "cobipartite-random", "interval-random", "split-random", "gn"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5, help="edge probability for random families")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write PREFIX.graph (+ PREFIX.intervals)")
    p.add_argument("--output")

    p = sub.add_parser("bench", help="growth sweep over a family (CSV)")
    p.add_argument("--family", required=True, choices=(
        "path", "random", "connected-random", "cobipartite-random", "interval-random", "gn"))
    p.add_argument("--variant", choices=("rdf", "mrdf", "trdf", "crdf"), default="rdf")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")

    return top


def _config_from(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    if getattr(ns, "variant", None):
        cfg.variant = Variant(ns.variant)
    for src, dst in (
        ("graph", "graph_path"),
        ("intervals", "intervals_path"),
        ("two_set", "two_set"),
        ("function", "function"),
        ("output", "output"),
        ("limit", "limit"),
        ("stats", "stats"),
        ("fmt", "fmt"),
        ("cap", "cap"),
        ("seed", "seed"),
        ("graph_class", "graph_class"),
    ):
        if hasattr(ns, src) and getattr(ns, src) is not None:
            setattr(cfg, dst, getattr(ns, src))
    for key in ("kind", "cnf", "set", "hypergraph", "strict", "allow_universal",
                "out", "family", "n", "p", "n_min", "n_max", "step"):
        if hasattr(ns, key):
            cfg.extra[key] = getattr(ns, key)
    return cfg


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "fixed-two": cmd_fixed_two,
    "oracle": cmd_oracle,
    "check": cmd_check,
    "gadget": cmd_gadget,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = _build_parser().parse_args(argv)
    cfg = _config_from(ns)
    try:
        return _COMMANDS[cfg.command](cfg)
    except UnsupportedRoute as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERR_UNSUPPORTED
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERR_INPUT
    except (GraphFormatError, GadgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERR_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERR_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERR_INPUT


if __name__ == "__main__":
    sys.exit(main())
