"""Small graph builders and independent oracles shared by the tests."""

from __future__ import annotations

import random
from math import perm

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from stratcensus.classify import horned_tree
from stratcensus.graph import Edge, StratGraph, black, relabel, white


def path(l1, l2, g1=0, g2=0):
    return StratGraph.build([white("u", g1), black("b"), white("v", g2)], [Edge("u", "b", l1), Edge("v", "b", l2)])


def b111():
    return StratGraph.build(
        [black("B"), white("x"), white("y"), white("z")],
        [Edge("x", "B", 1), Edge("y", "B", 1), Edge("z", "B", 1)],
    )


def with_arms(g, at):
    """Hang w -(1)- b -(2)- W from each listed white."""
    vertices, edges = list(g.vertices), list(g.edges)
    for w in at:
        vertices += [black(f"{w}_a"), white(f"{w}_t")]
        edges += [Edge(w, f"{w}_a", 1), Edge(f"{w}_t", f"{w}_a", 2)]
    return StratGraph.build(vertices, edges)


def shuffled(g, rng: random.Random):
    ids = [v.id for v in g.vertices]
    fresh = [f"v{i}" for i in range(len(ids))]
    rng.shuffle(fresh)
    h = relabel(g, dict(zip(ids, fresh)))
    vs, es = list(h.vertices), list(h.edges)
    rng.shuffle(vs)
    rng.shuffle(es)
    return StratGraph.build(vs, es)


def free_trees(n):
    if n == 1:
        g = nx.Graph()
        g.add_node(0)
        return [g]
    return list(nx.nonisomorphic_trees(n))


def decorated_orbits(n, marks):
    """Burnside count of (tree, ordered distinct marks, root) classes on n vertices."""
    total = 0
    for t in free_trees(n):
        autos = list(GraphMatcher(t, t).isomorphisms_iter())
        fixed = [sum(1 for v in t if f[v] == v) for f in autos]
        total += sum(perm(f, marks) * f for f in fixed) // len(autos)
    return total


def to_nx(g: StratGraph):
    h = nx.Graph()
    for v in g.vertices:
        h.add_node(v.id, color=v.color.value)
    for e in g.edges:
        h.add_edge(e.white, e.black, label=e.label)
    return h


def cubic_shapes(max_inner):
    """Trees whose internal vertices have degree 3, with 1..max_inner internal vertices."""
    for k in range(1, max_inner + 1):
        for t in nx.nonisomorphic_trees(2 * k + 2):
            if all(d in (1, 3) for _, d in t.degree()):
                yield list(t.edges())


def contains_horned_oracle(g: StratGraph) -> bool:
    host = to_nx(g)
    inner = len(g.degree3_blacks())
    for shape in cubic_shapes(max(inner, 1)):
        pattern = to_nx(horned_tree(shape))
        gm = GraphMatcher(
            host,
            pattern,
            node_match=lambda a, b: a["color"] == b["color"],
            edge_match=lambda a, b: a["label"] == b["label"],
        )
        if any(True for _ in gm.subgraph_monomorphisms_iter()):
            return True
    return False


def subdivided_universe(n):
    """Every bisected tree on n whites with each black labeled {1, 2} either way round, keyed by code."""
    from itertools import product

    from stratcensus.graph import canonical_code

    out = {}
    for t in free_trees(n):
        tedges = list(t.edges())
        vertices = [white(f"w{v}") for v in t] + [black(f"c{i}") for i in range(len(tedges))]
        for flips in product((False, True), repeat=len(tedges)):
            edges = []
            for i, ((x, y), flip) in enumerate(zip(tedges, flips)):
                if flip:
                    x, y = y, x
                edges += [Edge(f"w{x}", f"c{i}", 2), Edge(f"w{y}", f"c{i}", 1)]
            g = StratGraph.build(vertices, edges)
            out.setdefault(canonical_code(g), g)
    return out
