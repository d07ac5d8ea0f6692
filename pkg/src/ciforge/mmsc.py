"""Model-based most specific concepts at fixed and adaptable depths."""

from __future__ import annotations

from dataclasses import dataclass

from .concepts import (
    And,
    Atom,
    BOTTOM,
    Bottom,
    Concept,
    Exists,
    Interpretation,
    TOP,
    Top,
    canonicalize,
    conjuncts_of,
)
from .errors import ValidationError
from .graphs import (
    DEFAULT_NODE_CAP,
    concept_of_tree,
    graph_of_interpretation,
    product_reachable,
    unravel,
)
from .mvf import condensation, max_weight, mmvf, mvf, scc
from .simulation import extension, subsumed_empty


@dataclass(frozen=True)
class DepthReport:
    x_lim: frozenset  # members of X whose walks are all bounded
    product_mvf: int
    chosen_depth: int
    branch: str  # "bounded" | "cyclic"


def bounded_walks(i: Interpretation, x) -> bool:
    """True iff every walk from x in G(I) has bounded length, i.e. x cannot
    reach a cyclic component (size > 1 or self-loop)."""
    if x not in i.domain:
        raise ValidationError(f"{x!r} is not a domain element")
    g = graph_of_interpretation(i)
    partition = scc(g)
    seen = {x}
    frontier = [x]
    while frontier:
        v = frontier.pop()
        if partition.cyclic[partition.component_of[v]]:
            return False
        for _, w in g.successors(v):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return True


def _sorted_elements(X) -> tuple:
    return tuple(sorted(set(X), key=repr))


def adaptable_depth(
    i: Interpretation, X, node_cap: int = DEFAULT_NODE_CAP
) -> DepthReport:
    """Unravelling depth sufficient for MMSC extension stabilization: take
    d = mvf of the |X|-fold product at the X-tuple, then d − 1 if some member
    of X has bounded walks, else d times the mmvf of G(I)."""
    elements = _sorted_elements(X)
    if not elements:
        raise ValidationError("adaptable depth needs a non-empty element set")
    g = graph_of_interpretation(i)
    product = product_reachable(g, elements, node_cap=node_cap)
    d = mvf(product, elements)
    x_lim = frozenset(x for x in elements if bounded_walks(i, x))
    if x_lim:
        return DepthReport(x_lim, d, d - 1, "bounded")
    return DepthReport(x_lim, d, d * mmvf(g), "cyclic")


def prune_subsumed_conjuncts(c: Concept) -> Concept:
    """Drop conjuncts that are consequences of a more specific sibling; keeps
    emitted MMSCs readable, preserves equivalence."""
    if isinstance(c, (Top, Bottom, Atom)):
        return c
    if isinstance(c, Exists):
        return Exists(c.role, prune_subsumed_conjuncts(c.filler))
    parts = [prune_subsumed_conjuncts(d) for d in conjuncts_of(c)]
    kept: list[Concept] = []
    for idx, d in enumerate(parts):
        redundant = False
        for jdx, e in enumerate(parts):
            if idx == jdx or not subsumed_empty(e, d):
                continue
            # e entails d: keep d only if it is the earlier of two equivalent
            # conjuncts, otherwise drop it.
            if subsumed_empty(d, e) and idx < jdx:
                continue
            redundant = True
            break
        if not redundant:
            kept.append(d)
    return canonicalize(And(tuple(kept)))


def mmsc_at_depth(
    i: Interpretation,
    X,
    d: int,
    node_cap: int = DEFAULT_NODE_CAP,
    prune: bool = False,
) -> Concept:
    """Most specific concept of role depth <= d whose extension contains X.

    The product of the depth-d unravellings of the members of X equals the
    depth-d unravelling of the reachable product started at the X-tuple, so
    the product graph (usually small) is built first and unravelled once.
    """
    elements = _sorted_elements(X)
    if not elements:
        return BOTTOM
    g = graph_of_interpretation(i)
    product = product_reachable(g, elements, node_cap=node_cap)
    tree = unravel(product, elements, d, node_cap=node_cap)
    concept = concept_of_tree(tree)
    if prune:
        concept = prune_subsumed_conjuncts(concept)
    return concept


def mmsc_adaptive(
    i: Interpretation, X, node_cap: int = DEFAULT_NODE_CAP, prune: bool = False
) -> Concept:
    """MMSC at the adaptable depth; Bottom for the empty set."""
    elements = _sorted_elements(X)
    if not elements:
        return BOTTOM
    report = adaptable_depth(i, elements, node_cap=node_cap)
    return mmsc_at_depth(i, elements, report.chosen_depth, node_cap=node_cap, prune=prune)


def lower_approximation(c: Concept, i: Interpretation) -> Concept:
    """Replace each top-level existential filler E by the adaptive MMSC of
    E's extension; same extension as c, but built from mined vocabulary."""
    if isinstance(c, Bottom):
        return BOTTOM
    if isinstance(c, Top):
        return TOP
    parts: list[Concept] = []
    for d in conjuncts_of(c):
        if isinstance(d, Exists):
            filler_ext = extension(d.filler, i)
            parts.append(Exists(d.role, mmsc_adaptive(i, filler_ext)))
        else:
            parts.append(d)
    return canonicalize(And(tuple(parts)))
