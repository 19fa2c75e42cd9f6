"""Fixed-2-set solvers.

For a variant P and a vertex set A, the completion set C(A) holds every
pointwise-minimal function with property P whose set of 2-values is exactly
A.  The enumeration engine walks candidate sets A and asks a solver for the
stream of C(A); solvers exist for

  rdf   on all graphs (C(A) is the canonical rdf of A, or empty),
  mrdf  on all graphs (at most n candidates),
  trdf / crdf on cobipartite graphs (at most n^2+n+1 candidates),
  crdf  on interval graphs (sliding-window tables, polynomial delay).

Emptiness of C is monotone downward in A (a nonempty superset forces a
nonempty subset), which is what makes pruning in the engine sound.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

from .graphs import (
    Graph,
    IntervalModel,
    bit,
    bits,
    mask_of,
    recognize_cobipartite,
    same_component,
    validate_cobipartite,
    validate_interval_model,
)
from .roman import (
    RomanFunction,
    UnsupportedRoute,
    Variant,
    add_one,
    canonical_rdf,
    is_minimal_variant,
    is_variant,
    pos_mask,
    valid_two_set,
)
from .graphs import private_neighbors_within

# when set, every solver re-checks each yielded function against the
# minimality predicate (used by tests; off by default for speed)
VERIFY_YIELDS = False


def _checked(g: Graph, variant: Variant, f: RomanFunction) -> RomanFunction:
    if VERIFY_YIELDS:
        assert is_minimal_variant(g, f, variant), f
    return f


class FixedTwoSolver:
    """Base class: a solver is bound to one graph and one variant."""

    variant: Variant
    graph_class = "general"

    def __init__(self, g: Graph):
        self.graph = g

    def stream(self, a: int) -> Iterator[RomanFunction]:
        raise NotImplementedError

    def first(self, a: int) -> Optional[RomanFunction]:
        return next(iter(self.stream(a)), None)

    def cardinality_bound(self, n: int) -> Optional[int]:
        return None


class RdfSolver(FixedTwoSolver):
    """C(A) is {canonical rdf of A} when A is a valid 2-set, else empty."""

    variant = Variant.RDF

    def stream(self, a: int) -> Iterator[RomanFunction]:
        if valid_two_set(self.graph, a):
            yield _checked(self.graph, self.variant, canonical_rdf(self.graph, a))

    def first(self, a: int) -> Optional[RomanFunction]:
        if valid_two_set(self.graph, a):
            return canonical_rdf(self.graph, a)
        return None

    def cardinality_bound(self, n: int) -> int:
        return 1


class MrdfSolver(FixedTwoSolver):
    """Maximal-variant completions on arbitrary graphs.

    If the canonical rdf f of A is itself maximal it is the only member.
    Otherwise every member arises from f by raising the 0-neighbors of one
    vertex v outside A to 1, so at most n candidates need the minimality
    filter.
    """

    variant = Variant.MRDF

    def stream(self, a: int) -> Iterator[RomanFunction]:
        g = self.graph
        if not valid_two_set(g, a):
            return
        f = canonical_rdf(g, a)
        if is_variant(g, f, Variant.MRDF):
            yield _checked(g, self.variant, f)
            return
        m0 = g.full & ~pos_mask(f)
        seen = set()
        for v in range(g.n):
            if a >> v & 1:
                continue
            cand = add_one(f, m0 & g.cadj[v])
            if cand in seen:
                continue
            seen.add(cand)
            if is_minimal_variant(g, cand, Variant.MRDF):
                yield _checked(g, self.variant, cand)

    def cardinality_bound(self, n: int) -> int:
        return n


class CobipartiteSolver(FixedTwoSolver):
    """Total/connected completions on cobipartite graphs.

    Members differ from the canonical rdf of A by raising at most two
    0-vertices, so the candidate space is quadratic and the minimality
    predicate does the filtering.
    """

    graph_class = "cobipartite"

    def __init__(self, g: Graph, variant: Variant, part=None):
        super().__init__(g)
        if variant not in (Variant.TRDF, Variant.CRDF):
            raise UnsupportedRoute(f"cobipartite solver handles trdf/crdf, not {variant.value}")
        if part is None:
            part = recognize_cobipartite(g)
            if part is None:
                raise UnsupportedRoute("graph is not cobipartite")
        elif not validate_cobipartite(g, part):
            raise ValueError("invalid cobipartite partition")
        self.part = part
        self.variant = variant

    def stream(self, a: int) -> Iterator[RomanFunction]:
        g = self.graph
        if not valid_two_set(g, a):
            return
        f = canonical_rdf(g, a)
        if is_minimal_variant(g, f, self.variant):
            yield _checked(g, self.variant, f)
        zeros = list(bits(g.full & ~pos_mask(f)))
        for v in zeros:
            cand = add_one(f, bit(v))
            if is_minimal_variant(g, cand, self.variant):
                yield _checked(g, self.variant, cand)
        for i, v in enumerate(zeros):
            for u in zeros[i + 1 :]:
                cand = add_one(f, bit(v) | bit(u))
                if is_minimal_variant(g, cand, self.variant):
                    yield _checked(g, self.variant, cand)

    def cardinality_bound(self, n: int) -> int:
        return n * n + n + 1


class WindowTables:
    """Sliding-window membership tables for connected completions on an
    interval order.

    Fix a 2-set a and let f be its canonical rdf.  A candidate set X of
    0-vertices completes f to a minimal connected rdf exactly when, reading X
    in interval order (left endpoint, right endpoint, index),

      - |X| <= 3: checked directly, or
      - |X| >= 4: the three smallest members pass the start test, the three
        largest pass the end test, and every four consecutive members pass
        the middle test.

    Each test combines a private-neighbor condition (removing the window must
    not use up all private neighbors of any 2-vertex) with three connectivity
    probes on induced subgraphs: the window must connect its span, and
    dropping either middle element must break it.  s and t are the extremal
    positive vertices of f; probes from them detect whether X reaches the
    ends of the layout.
    """

    def __init__(self, g: Graph, model: IntervalModel, a: int):
        if len(model) != g.n:
            raise ValueError("interval model size does not match the graph")
        self.g = g
        self.a = a
        f = canonical_rdf(g, a)
        self.base = f
        self.base_pos = pos_mask(f)
        self.v1 = self.base_pos & ~a
        if self.base_pos == 0:
            raise ValueError("no positive vertex to anchor the window tests")
        iv = model.intervals
        self.sort_key = lambda v: (iv[v][0], iv[v][1], v)
        self.universe = sorted(bits(g.full & ~self.base_pos), key=self.sort_key)
        self.s = min(bits(self.base_pos), key=self.sort_key)
        self.t = max(bits(self.base_pos), key=lambda v: (iv[v][1], iv[v][0], v))
        self._start: dict = {}
        self._end: dict = {}
        self._middle: dict = {}

    def _private_ok(self, removed: int) -> bool:
        g = self.g
        allowed = g.full & ~(self.v1 | removed)
        for v in bits(self.a):
            if not private_neighbors_within(g, allowed, self.a, v) & ~bit(v):
                return False
        return True

    def start_ok(self, x: int, y: int, z: int) -> bool:
        key = (x, y, z)
        hit = self._start.get(key)
        if hit is None:
            g, s, base = self.g, self.s, self.base_pos
            hit = (
                same_component(g, base | mask_of((x, y, z)), s, z)
                and not same_component(g, base | mask_of((x, z)), s, z)
                and not same_component(g, base | mask_of((y, z)), s, z)
                and self._private_ok(mask_of((x, y, z)))
            )
            self._start[key] = hit
        return hit

    def end_ok(self, x: int, y: int, z: int) -> bool:
        key = (x, y, z)
        hit = self._end.get(key)
        if hit is None:
            g, t, base = self.g, self.t, self.base_pos
            hit = (
                same_component(g, base | mask_of((x, y, z)), t, x)
                and not same_component(g, base | mask_of((x, z)), t, x)
                and not same_component(g, base | mask_of((x, y)), t, x)
                and self._private_ok(mask_of((x, y, z)))
            )
            self._end[key] = hit
        return hit

    def middle_ok(self, w: int, x: int, y: int, z: int) -> bool:
        key = (w, x, y, z)
        hit = self._middle.get(key)
        if hit is None:
            g, base = self.g, self.base_pos
            hit = (
                same_component(g, base | mask_of((w, x, y, z)), w, z)
                and not same_component(g, base | mask_of((w, x, z)), w, z)
                and not same_component(g, base | mask_of((w, y, z)), w, z)
                and self._private_ok(mask_of((w, x, y, z)))
            )
            self._middle[key] = hit
        return hit


def build_window_tables(g: Graph, model: IntervalModel, a: int, validate: bool = True) -> WindowTables:
    if validate and not validate_interval_model(g, model):
        raise ValueError("interval model does not match the graph")
    return WindowTables(g, model, a)


class IntervalConnectedSolver(FixedTwoSolver):
    """Connected completions on interval graphs with polynomial delay.

    Completion sets of size at most 3 are scanned directly.  Larger ones are
    source-to-sink paths in a DAG whose nodes are window-passing triples;
    restricting the walk to nodes that can reach a sink keeps the delay
    polynomial.
    """

    graph_class = "interval"
    variant = Variant.CRDF

    def __init__(self, g: Graph, model: IntervalModel, validate: bool = True):
        super().__init__(g)
        if validate and not validate_interval_model(g, model):
            raise ValueError("interval model does not match the graph")
        self.model = model

    def stream(self, a: int) -> Iterator[RomanFunction]:
        g = self.graph
        if not valid_two_set(g, a):
            return
        f = canonical_rdf(g, a)
        iv = self.model.intervals
        universe = sorted(bits(g.full & ~pos_mask(f)), key=lambda v: (iv[v][0], iv[v][1], v))
        for k in range(min(3, len(universe)) + 1):
            for combo in combinations(universe, k):
                cand = add_one(f, mask_of(combo))
                if is_minimal_variant(g, cand, Variant.CRDF):
                    yield _checked(g, self.variant, cand)
        if len(universe) >= 4:
            yield from self._large_stream(f, universe, WindowTables(g, self.model, a))

    def _large_stream(self, f, universe, tables) -> Iterator[RomanFunction]:
        g = self.graph
        m = len(universe)
        succ_memo: dict = {}
        reach_memo: dict = {}

        def successors(node):
            got = succ_memo.get(node)
            if got is None:
                i, j, k = node
                got = [
                    (j, k, l)
                    for l in range(k + 1, m)
                    if tables.middle_ok(universe[i], universe[j], universe[k], universe[l])
                ]
                succ_memo[node] = got
            return got

        def is_sink(node):
            i, j, k = node
            return tables.end_ok(universe[i], universe[j], universe[k])

        def reaches_sink(node):
            got = reach_memo.get(node)
            if got is None:
                reach_memo[node] = got = is_sink(node) or any(
                    reaches_sink(nxt) for nxt in successors(node)
                )
            return got

        def walk(path):
            node = path[-1]
            if len(path) >= 2 and is_sink(node):
                chosen = mask_of(universe[i] for i in path[0]) | mask_of(
                    universe[p[2]] for p in path[1:]
                )
                yield _checked(g, self.variant, add_one(f, chosen))
            for nxt in successors(node):
                if reaches_sink(nxt):
                    yield from walk(path + [nxt])

        for node in combinations(range(m), 3):
            i, j, k = node
            if tables.start_ok(universe[i], universe[j], universe[k]) and reaches_sink(node):
                yield from walk([node])

    def cardinality_bound(self, n: int) -> Optional[int]:
        return None


def solver_for(
    g: Graph,
    variant: Variant,
    partition=None,
    model: Optional[IntervalModel] = None,
    class_hint: str = "auto",
    validate_model: bool = True,
) -> FixedTwoSolver:
    """Pick the solver for a (variant, graph class) combination.

    auto routing: rdf/mrdf run on any graph; trdf tries the cobipartite
    recognizer; crdf tries cobipartite first, then interval when a model is
    supplied.  Raises UnsupportedRoute when nothing applies (for the
    connected/total variants on general graphs even deciding non-emptiness
    of a completion set is NP-complete).
    """
    if variant is Variant.RDF:
        if class_hint not in ("auto", "general"):
            raise UnsupportedRoute(f"rdf solver is general-graph; got class {class_hint}")
        return RdfSolver(g)
    if variant is Variant.MRDF:
        if class_hint not in ("auto", "general"):
            raise UnsupportedRoute(f"mrdf solver is general-graph; got class {class_hint}")
        return MrdfSolver(g)
    if variant is Variant.TRDF:
        if class_hint not in ("auto", "cobipartite"):
            raise UnsupportedRoute(
                "trdf enumeration is implemented for cobipartite graphs only"
            )
        return CobipartiteSolver(g, variant, partition)
    if variant is Variant.CRDF:
        if class_hint == "cobipartite":
            return CobipartiteSolver(g, variant, partition)
        if class_hint == "interval":
            if model is None:
                raise UnsupportedRoute("interval routing needs an interval model")
            return IntervalConnectedSolver(g, model, validate=validate_model)
        if class_hint == "auto":
            if partition is not None or recognize_cobipartite(g) is not None:
                return CobipartiteSolver(g, variant, partition)
            if model is not None:
                return IntervalConnectedSolver(g, model, validate=validate_model)
            raise UnsupportedRoute(
                "crdf enumeration needs a cobipartite graph or an interval model; "
                "on general graphs even non-emptiness is NP-complete"
            )
        raise UnsupportedRoute(f"no crdf solver for class {class_hint}")
    raise UnsupportedRoute(f"no enumeration solver for variant {variant.value}")


def rdf_fixed_two(g: Graph, a: int) -> list:
    return list(RdfSolver(g).stream(a))


def mrdf_fixed_two(g: Graph, a: int) -> list:
    return list(MrdfSolver(g).stream(a))


def cobipartite_fixed_two(g: Graph, variant: Variant, a: int, part=None) -> list:
    return list(CobipartiteSolver(g, variant, part).stream(a))


def interval_crdf_fixed_two(g: Graph, model: IntervalModel, a: int, validate: bool = True) -> list:
    return list(IntervalConnectedSolver(g, model, validate=validate).stream(a))
