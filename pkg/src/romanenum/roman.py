"""Roman domination functions: predicates, minimality tests, extension checks.

A function is a tuple of values in {0,1,2}, one per vertex.  Variants:

  rdf   every 0-vertex has a neighbor of value 2
  mrdf  rdf whose 0-set is not dominating ("maximal")
  trdf  rdf whose positive set induces no isolated vertex ("total")
  crdf  rdf whose positive set induces a connected subgraph ("connected")
  prdf  every 0-vertex has exactly one neighbor of value 2 ("perfect";
        predicate only, no minimality characterization here)

Minimality is with respect to the pointwise order on functions.
"""

from __future__ import annotations

from enum import Enum

from .graphs import (
    Graph,
    bit,
    bits,
    closed_neighborhood,
    is_connected_set,
    is_dominating,
    open_neighborhood,
    private_neighbors_within,
)


class Variant(Enum):
    RDF = "rdf"
    MRDF = "mrdf"
    TRDF = "trdf"
    CRDF = "crdf"
    PRDF = "prdf"


class UnsupportedRoute(ValueError):
    """No implemented computation applies to this (variant, graph class)."""


RomanFunction = tuple  # values 0/1/2 per vertex


def parse_function(text: str) -> RomanFunction:
    """Parse a digit string such as "2002"."""
    text = text.strip()
    values = []
    for ch in text:
        if ch not in "012":
            raise ValueError(f"invalid function digit {ch!r}")
        values.append(int(ch))
    return tuple(values)


def format_function(f: RomanFunction) -> str:
    return "".join(str(v) for v in f)


def level_mask(f: RomanFunction, value: int) -> int:
    m = 0
    for v, val in enumerate(f):
        if val == value:
            m |= 1 << v
    return m


def pos_mask(f: RomanFunction) -> int:
    """Mask of vertices with positive value."""
    m = 0
    for v, val in enumerate(f):
        if val:
            m |= 1 << v
    return m


def two_mask(f: RomanFunction) -> int:
    m = 0
    for v, val in enumerate(f):
        if val == 2:
            m |= 1 << v
    return m


def weight(f: RomanFunction) -> int:
    return sum(f)


def leq(f: RomanFunction, g: RomanFunction) -> bool:
    """Pointwise order; errors on length mismatch."""
    if len(f) != len(g):
        raise ValueError("functions live on different vertex sets")
    return all(a <= b for a, b in zip(f, g))


def add_one(f: RomanFunction, mask: int) -> RomanFunction:
    """Raise every vertex of the mask by one."""
    out = list(f)
    for v in bits(mask):
        if out[v] >= 2:
            raise ValueError(f"vertex {v} already at value 2")
        out[v] += 1
    return tuple(out)


def sub_one(f: RomanFunction, mask: int) -> RomanFunction:
    """Lower every vertex of the mask by one."""
    out = list(f)
    for v in bits(mask):
        if out[v] <= 0:
            raise ValueError(f"vertex {v} already at value 0")
        out[v] -= 1
    return tuple(out)


# ------------------------------------------------------------- predicates


def is_variant(g: Graph, f: RomanFunction, variant: Variant) -> bool:
    if len(f) != g.n:
        raise ValueError("function length does not match graph order")
    pos = pos_mask(f)
    m2 = two_mask(f)
    m0 = g.full & ~pos
    covered = open_neighborhood(g, m2)
    if variant is Variant.PRDF:
        for v in bits(m0):
            two_nbrs = g.adj[v] & m2
            if two_nbrs == 0 or two_nbrs & (two_nbrs - 1):
                return False
        return True
    if m0 & ~covered:
        return False
    if variant is Variant.RDF:
        return True
    if variant is Variant.MRDF:
        return not is_dominating(g, m0)
    if variant is Variant.TRDF:
        for v in bits(pos):
            if not g.adj[v] & pos:
                return False
        return True
    if variant is Variant.CRDF:
        return is_connected_set(g, pos)
    raise ValueError(f"unknown variant {variant}")


def canonical_rdf(g: Graph, a: int) -> RomanFunction:
    """The pointwise-least rdf whose 2-set is a: 2 on a, 1 outside N[a]."""
    covered = closed_neighborhood(g, a)
    return tuple(2 if a >> v & 1 else (0 if covered >> v & 1 else 1) for v in range(g.n))


def valid_two_set(g: Graph, a: int) -> bool:
    """True iff every member of a keeps a private neighbor besides itself.

    Exactly these sets arise as 2-sets of minimal rdfs, and canonical_rdf is
    the bijection witnessing it.
    """
    for v in bits(a):
        others = closed_neighborhood(g, a & ~bit(v))
        if g.cadj[v] & ~others & ~bit(v):
            continue
        return False
    return True


def _has_external_private(g: Graph, f_pos: int, f_two: int, v: int) -> bool:
    # private neighbor besides v itself, inside G[V0 union V2]
    allowed = (g.full & ~f_pos) | f_two
    priv = private_neighbors_within(g, allowed, f_two, v)
    return bool(priv & ~bit(v))


def is_minimal_variant(g: Graph, f: RomanFunction, variant: Variant) -> bool:
    """Minimality among all functions with the given property.

    rdf minimality goes through the 2-set bijection; the other variants use
    their per-vertex characterizations (no 1-vertex can be dropped without a
    structural reason, every 2-vertex keeps an external private neighbor).
    """
    if variant is Variant.PRDF:
        raise UnsupportedRoute("no minimality characterization for prdf")
    if variant is Variant.RDF:
        a = two_mask(f)
        return valid_two_set(g, a) and f == canonical_rdf(g, a)
    if not is_variant(g, f, variant):
        return False
    pos = pos_mask(f)
    m2 = two_mask(f)
    m1 = pos & ~m2
    for v in bits(m2):
        if not _has_external_private(g, pos, m2, v):
            return False
    if variant is Variant.MRDF:
        m0 = g.full & ~pos
        undominated = g.full & ~closed_neighborhood(g, m0)
        for v in bits(m1):
            if not g.adj[v] & m2:
                continue
            if undominated & ~g.cadj[v]:
                return False
        return True
    if variant is Variant.TRDF:
        for v in bits(m1):
            if not g.adj[v] & m2:
                continue
            rest = pos & ~bit(v)
            if not any(not g.adj[u] & rest for u in bits(rest)):
                return False
        return True
    if variant is Variant.CRDF:
        for v in bits(m1):
            if not g.adj[v] & m2:
                continue
            if is_connected_set(g, pos & ~bit(v)):
                return False
        return True
    raise ValueError(f"unknown variant {variant}")


# --------------------------------------------- branching-framework conditions


def zero_raise_keeps_property(g: Graph, f: RomanFunction, v: int, variant: Variant) -> bool:
    """Raising a 0-vertex to 1 must preserve the property.

    Preconditions: f has the property and f(v) = 0.
    """
    if f[v] != 0:
        raise ValueError(f"vertex {v} does not have value 0")
    if not is_variant(g, f, variant):
        raise ValueError("function does not have the property")
    return is_variant(g, add_one(f, bit(v)), variant)


def two_drop_iff_no_private(g: Graph, f: RomanFunction, v: int, variant: Variant) -> bool:
    """Lowering a 2-vertex to 1 preserves the property exactly when the vertex
    has no private neighbor besides itself among the non-1 vertices.

    Preconditions: f has the property and f(v) = 2.  Returns True iff the
    biconditional holds at v.
    """
    if f[v] != 2:
        raise ValueError(f"vertex {v} does not have value 2")
    if not is_variant(g, f, variant):
        raise ValueError("function does not have the property")
    keeps = is_variant(g, sub_one(f, bit(v)), variant)
    no_external = not _has_external_private(g, pos_mask(f), two_mask(f), v)
    return keeps == no_external


# ------------------------------------------------------------- extension


def extension_check(
    g: Graph,
    f: RomanFunction,
    variant: Variant,
    mode: str = "fast",
    cap: int = 12,
    partition=None,
    model=None,
) -> bool:
    """Is there a minimal function of the variant that dominates f pointwise?

    fast mode requires that no 1-vertex of f touch a 2-vertex; the answer
    then coincides with non-emptiness of the fixed-two-set completion at the
    2-set of f, computed by the matching solver.  oracle mode brute-forces
    the minimal functions (n <= cap).
    """
    if len(f) != g.n:
        raise ValueError("function length does not match graph order")
    if mode == "oracle":
        if g.n > cap:
            raise ValueError(f"oracle extension capped at n={cap}")
        from . import oracle

        return any(leq(f, h) for h in oracle.oracle_all_minimal(g, variant, cap=cap))
    if mode != "fast":
        raise ValueError(f"unknown mode {mode!r}")
    pos = pos_mask(f)
    m2 = two_mask(f)
    m1 = pos & ~m2
    if open_neighborhood(g, m1) & m2:
        raise UnsupportedRoute(
            "fast extension requires that no 1-vertex touch a 2-vertex"
        )
    from . import fixed_two

    solver = fixed_two.solver_for(g, variant, partition=partition, model=model)
    return solver.first(m2) is not None


# ------------------------------------------------------------- diagnostics


def minimality_report(g: Graph, f: RomanFunction, variant: Variant) -> tuple[bool, list[str]]:
    """Human-readable breakdown of the minimality conditions, for the CLI."""
    lines = []
    pos = pos_mask(f)
    m2 = two_mask(f)
    m1 = pos & ~m2
    m0 = g.full & ~pos
    if variant is Variant.PRDF:
        holds = is_variant(g, f, variant)
        lines.append(f"prdf: {'yes' if holds else 'no'} (predicate only, no minimality test)")
        return holds, lines
    uncovered = m0 & ~open_neighborhood(g, m2)
    ok = True
    if uncovered:
        lines.append(f"not an rdf: 0-vertices without a 2-neighbor: {sorted(bits(uncovered))}")
        ok = False
    else:
        lines.append("rdf: ok")
    if variant is Variant.MRDF:
        if is_dominating(g, m0):
            lines.append("0-set dominates the graph: not maximal")
            ok = False
        else:
            lines.append("0-set not dominating: ok")
    elif variant is Variant.TRDF:
        isolated = [v for v in bits(pos) if not g.adj[v] & pos]
        if isolated:
            lines.append(f"positive set has isolated vertices: {isolated}")
            ok = False
        else:
            lines.append("positive set has no isolated vertex: ok")
    elif variant is Variant.CRDF:
        if not is_connected_set(g, pos):
            lines.append("positive set is not connected")
            ok = False
        else:
            lines.append("positive set connected: ok")
    if not ok:
        lines.append(f"minimal {variant.value}: NO (property fails)")
        return False, lines
    bad_two = [v for v in bits(m2) if not _has_external_private(g, pos, m2, v)]
    if bad_two:
        lines.append(f"2-vertices without an external private neighbor: {bad_two}")
    else:
        lines.append("every 2-vertex keeps an external private neighbor: ok")
    if variant is Variant.RDF:
        if f != canonical_rdf(g, m2):
            lines.append("differs from the canonical rdf of its 2-set: some value is droppable")
        else:
            lines.append("equals the canonical rdf of its 2-set: ok")
    else:
        bad_one = []
        for v in bits(m1):
            if not g.adj[v] & m2:
                continue
            if variant is Variant.MRDF:
                undominated = g.full & ~closed_neighborhood(g, m0)
                needed = not (undominated & ~g.cadj[v])
            elif variant is Variant.TRDF:
                rest = pos & ~bit(v)
                needed = any(not g.adj[u] & rest for u in bits(rest))
            else:
                needed = not is_connected_set(g, pos & ~bit(v))
            if not needed:
                bad_one.append(v)
        if bad_one:
            lines.append(f"droppable 1-vertices: {bad_one}")
        else:
            lines.append("no droppable 1-vertex: ok")
    minimal = is_minimal_variant(g, f, variant)
    lines.append(f"minimal {variant.value}: {'YES' if minimal else 'NO'}")
    return minimal, lines
