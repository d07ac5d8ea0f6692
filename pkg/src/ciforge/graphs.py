"""Description graphs and trees: interpretation graphs, concept trees,
unravellings, and (reachable) products."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .concepts import (
    And,
    Atom,
    Bottom,
    Concept,
    Exists,
    Interpretation,
    TOP,
    canonicalize,
    conjuncts_of,
)
from .errors import ResourceCapError, ValidationError

DEFAULT_NODE_CAP = 500_000


class DescriptionGraph:
    """Vertex-labeled digraph with role-labeled edges.

    Vertices are opaque hashable ids; labels map each vertex to a frozenset of
    concept names.  Adjacency is indexed at construction time.
    """

    __slots__ = ("vertices", "edges", "labels", "_succ")

    def __init__(self, vertices, edges, labels):
        self.vertices = frozenset(vertices)
        self.edges = frozenset(edges)
        self.labels = {v: frozenset(labels.get(v, ())) for v in self.vertices}
        for src, role, tgt in self.edges:
            if src not in self.vertices or tgt not in self.vertices:
                raise ValidationError(f"edge ({src!r},{role!r},{tgt!r}) leaves the vertex set")
        for v in labels:
            if v not in self.vertices:
                raise ValidationError(f"label key {v!r} is not a vertex")
        succ = {v: [] for v in self.vertices}
        for src, role, tgt in sorted(self.edges, key=repr):
            succ[src].append((role, tgt))
        self._succ = succ

    def successors(self, v):
        return self._succ[v]

    def successors_by_role(self, v, role):
        return [tgt for r, tgt in self._succ[v] if r == role]

    def label(self, v):
        return self.labels[v]

    def __eq__(self, other):
        return (
            isinstance(other, DescriptionGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
            and self.labels == other.labels
        )

    def __repr__(self):
        return f"DescriptionGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True, eq=False)
class DescriptionTree:
    """A description graph that is a directed tree, plus its root."""

    graph: DescriptionGraph
    root: object

    def __post_init__(self):
        g = self.graph
        if self.root not in g.vertices:
            raise ValidationError("tree root is not a vertex")
        seen = {self.root}
        frontier = [self.root]
        while frontier:
            v = frontier.pop()
            for _, child in g.successors(v):
                if child in seen:
                    raise ValidationError("tree has a reconvergent or cyclic edge")
                seen.add(child)
                frontier.append(child)
        if seen != g.vertices:
            raise ValidationError("tree has vertices unreachable from the root")

    def children(self, v):
        return self.graph.successors(v)


def graph_of_interpretation(i: Interpretation) -> DescriptionGraph:
    labels = {x: set() for x in i.domain}
    for name, ext in i.concept_ext.items():
        for x in ext:
            labels[x].add(name)
    edges = {
        (src, role, tgt)
        for role, pairs in i.role_ext.items()
        for src, tgt in pairs
    }
    return DescriptionGraph(i.domain, edges, labels)


def tree_of_concept(c: Concept) -> DescriptionTree:
    """Description tree of a canonical concept; Bottom has none."""
    if isinstance(c, Bottom):
        raise ValidationError("Bottom has no description tree")
    vertices = []
    edges = []
    labels = {}

    def build(concept) -> int:
        node = len(vertices)
        vertices.append(node)
        labels[node] = set()
        for part in conjuncts_of(concept):
            if isinstance(part, Atom):
                labels[node].add(part.name)
            elif isinstance(part, Exists):
                child = build(part.filler)
                edges.append((node, part.role, child))
            elif not isinstance(part, (Bottom,)):
                raise ValidationError(f"concept not canonical: {part!r}")
            else:
                raise ValidationError("Bottom has no description tree")
        return node

    root = build(c)
    return DescriptionTree(DescriptionGraph(vertices, edges, labels), root)


def concept_of_tree(t: DescriptionTree) -> Concept:
    """Canonical concept of a tree, built bottom-up.

    Children are canonical by construction, so each level only sorts and
    dedups its own conjuncts; rendered forms (the canonical sort key) are
    carried upwards to avoid re-rendering whole subtrees at every level.
    """

    def build(v) -> tuple[Concept, str]:
        # (sort key, concept) pairs; the key is the concept's rendered form.
        parts = [(a, Atom(a)) for a in sorted(t.graph.label(v))]
        for role, child in t.children(v):
            c, rendered = build(child)
            if isinstance(c, (And, Exists)):
                rendered = f"({rendered})"
            parts.append((f"some {role}.{rendered}", Exists(role, c)))
        if not parts:
            return TOP, "Top"
        parts.sort(key=lambda kv: kv[0])
        unique = []
        last_key = None
        for key, c in parts:
            if key != last_key:
                unique.append((key, c))
                last_key = key
        if len(unique) == 1:
            return unique[0][1], unique[0][0]
        texts = [
            f"({key})" if isinstance(c, (And, Exists)) else key
            for key, c in unique
        ]
        return And(tuple(c for _, c in unique)), " and ".join(texts)

    concept, _ = build(t.root)
    return concept


def unravel(g: DescriptionGraph, x, d: int, node_cap: int = DEFAULT_NODE_CAP) -> DescriptionTree:
    """Tree of walks from x of length <= d; node ids are ints, the walk is
    recoverable through the parent structure (kept implicitly via edges)."""
    if x not in g.vertices:
        raise ValidationError(f"{x!r} is not a vertex")
    # node -> (last graph vertex of the walk, remaining depth)
    vertices = [0]
    labels = {0: g.label(x)}
    edges = []
    frontier = [(0, x, d)]
    while frontier:
        node, last, budget = frontier.pop()
        if budget == 0:
            continue
        for role, tgt in g.successors(last):
            child = len(vertices)
            if child >= node_cap:
                raise ResourceCapError(
                    f"unravelling exceeded the node cap of {node_cap}"
                )
            vertices.append(child)
            labels[child] = g.label(tgt)
            edges.append((node, role, child))
            frontier.append((child, tgt, budget - 1))
    return DescriptionTree(DescriptionGraph(vertices, edges, labels), 0)


def product_trees(trees, node_cap: int = DEFAULT_NODE_CAP) -> DescriptionTree:
    """Product of description trees, restricted to the part reachable from the
    tuple of roots.  An edge exists iff every factor has a same-role edge;
    labels are intersections."""
    trees = list(trees)
    if not trees:
        raise ValidationError("product of zero trees is undefined")
    root = tuple(t.root for t in trees)
    vertices = {root}
    labels = {}
    edges = set()
    frontier = [root]
    while frontier:
        tup = frontier.pop()
        labels[tup] = frozenset.intersection(
            *(t.graph.label(v) for t, v in zip(trees, tup))
        )
        per_role = []
        shared = None
        for t, v in zip(trees, tup):
            roles = {}
            for role, child in t.children(v):
                roles.setdefault(role, []).append(child)
            per_role.append(roles)
            shared = set(roles) if shared is None else shared & set(roles)
        for role in sorted(shared):
            for combo in itertools.product(*(roles[role] for roles in per_role)):
                if len(vertices) >= node_cap:
                    raise ResourceCapError(
                        f"tree product exceeded the node cap of {node_cap}"
                    )
                vertices.add(combo)
                edges.add((tup, role, combo))
                frontier.append(combo)
    return DescriptionTree(DescriptionGraph(vertices, edges, labels), root)


def product_reachable(
    g: DescriptionGraph, start: tuple, node_cap: int = DEFAULT_NODE_CAP
) -> DescriptionGraph:
    """Sub-graph of the n-fold product of g induced by the vertices reachable
    from `start`; avoids materializing the exponential full product."""
    start = tuple(start)
    for v in start:
        if v not in g.vertices:
            raise ValidationError(f"{v!r} is not a vertex")
    vertices = {start}
    edges = set()
    labels = {}
    frontier = [start]
    while frontier:
        tup = frontier.pop()
        labels[tup] = frozenset.intersection(*(g.label(v) for v in tup))
        per_vertex = []
        shared = None
        for v in tup:
            roles = {}
            for role, child in g.successors(v):
                roles.setdefault(role, []).append(child)
            per_vertex.append(roles)
            shared = set(roles) if shared is None else shared & set(roles)
        for role in sorted(shared):
            for combo in itertools.product(*(roles[role] for roles in per_vertex)):
                edges.add((tup, role, combo))
                if combo not in vertices:
                    if len(vertices) >= node_cap:
                        raise ResourceCapError(
                            f"reachable product exceeded the node cap of {node_cap}"
                        )
                    vertices.add(combo)
                    frontier.append(combo)
    return DescriptionGraph(vertices, edges, labels)
