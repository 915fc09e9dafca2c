"""Simple-connectivity test for trivalent graphs and pi_1 presentations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from .graph import (
    Color,
    Edge,
    Reason,
    StratGraph,
    Verdict,
    black,
    canonical_code,
    is_tree,
    is_trivalent,
    rooted_codes,
    validate,
    vertex_symbol,
    white,
)


@dataclass(frozen=True)
class CollapsibleVerdict:
    is_collapsible: bool
    root: Optional[str] = None

    def __bool__(self) -> bool:
        return self.is_collapsible


@dataclass(frozen=True)
class StarDecomposition:
    star: StratGraph
    boundary_whites: frozenset
    components: Tuple[StratGraph, ...]


def collapsible_root(g: StratGraph) -> Optional[str]:
    """The white vertex without a label-1 edge, when it is unique and every other white has exactly one."""
    roots = []
    for v in g.whites:
        ones = sum(1 for _, lab in g.incidence[v.id] if lab == 1)
        if ones == 0:
            roots.append(v.id)
        elif ones > 1:
            return None
    return roots[0] if len(roots) == 1 else None


def is_21_collapsible(g: StratGraph) -> CollapsibleVerdict:
    no = CollapsibleVerdict(False)
    if not validate(g) or not is_tree(g):
        return no
    if any(v.genus != 0 for v in g.whites):
        return no
    if any(g.labels_at(b.id) != [1, 2] for b in g.blacks):
        return no
    root = collapsible_root(g)
    return CollapsibleVerdict(True, root) if root is not None else no


def closed_star_B(g: StratGraph) -> StarDecomposition:
    """St(B) for the degree-3 blacks B, plus the components left after deleting the open star."""
    bset = set(g.degree3_blacks())
    boundary = {e.white for e in g.edges if e.black in bset}
    star = StratGraph(
        tuple(v for v in g.vertices if v.id in bset or v.id in boundary),
        tuple(e for e in g.edges if e.black in bset),
    )
    rest = StratGraph(
        tuple(v for v in g.vertices if v.id not in bset),
        tuple(e for e in g.edges if e.black not in bset),
    )
    return StarDecomposition(star, frozenset(boundary), tuple(rest.components()))


def _component_roots(dec: StarDecomposition) -> Dict[str, str]:
    """Map each boundary white to the root of its component; raise on a non-collapsible one."""
    roots: Dict[str, str] = {}
    for comp in dec.components:
        verdict = is_21_collapsible(comp)
        if not verdict:
            ids = sorted(v.id for v in comp.vertices)
            raise ValueError(f"component not collapsible: {ids}")
        for v in comp.vertices:
            if v.id in dec.boundary_whites:
                roots[v.id] = verdict.root
    return roots


def reduced_graph(g: StratGraph) -> StratGraph:
    dec = closed_star_B(g)
    roots = _component_roots(dec)
    vertices = list(dec.star.vertices)
    edges = list(dec.star.edges)
    taken = {v.id for v in g.vertices}
    for v in dec.star.whites:
        if roots[v.id] == v.id:
            continue
        bid, wid = _fresh(f"{v.id}.b", taken), _fresh(f"{v.id}.w", taken)
        vertices += [black(bid), white(wid)]
        edges += [Edge(v.id, bid, 1), Edge(wid, bid, 2)]
    return StratGraph.build(vertices, edges)


def _fresh(base: str, taken: Set[str]) -> str:
    name, k = base, 0
    while name in taken:
        k += 1
        name = f"{base}{k}"
    taken.add(name)
    return name


# ---------------------------------------------------------------------------
# horned trees


def horned_tree(tree_edges: List[Tuple[int, int]]) -> StratGraph:
    """Build H_T from a tree T whose non-leaf vertices all have degree 3."""
    deg: Dict[int, int] = {}
    for a, b in tree_edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    if len(tree_edges) < 2 or any(d not in (1, 3) for d in deg.values()):
        raise ValueError("horned trees start from a tree with >= 2 edges and internal degree 3")
    vertices = [black(f"B{v}") for v, d in sorted(deg.items()) if d == 3]
    vertices += [white(f"L{v}") for v, d in sorted(deg.items()) if d == 1]
    edges = []
    for i, (a, b) in enumerate(tree_edges):
        if deg[a] == 1 or deg[b] == 1:
            leaf, inner = (a, b) if deg[a] == 1 else (b, a)
            vertices += [white(f"e{i}"), black(f"f{i}")]
            edges += [Edge(f"e{i}", f"B{inner}", 1), Edge(f"e{i}", f"f{i}", 1), Edge(f"L{leaf}", f"f{i}", 2)]
        else:
            vertices.append(white(f"e{i}"))
            edges += [Edge(f"e{i}", f"B{a}", 1), Edge(f"e{i}", f"B{b}", 1)]
    return StratGraph.build(vertices, edges)


def smallest_horned_tree() -> StratGraph:
    return horned_tree([(0, 1), (0, 2), (0, 3)])


def is_horned_tree(g: StratGraph) -> bool:
    if not validate(g) or not is_tree(g) or any(v.genus != 0 for v in g.whites):
        return False
    inner = [b.id for b in g.blacks if g.degree(b.id) == 3]
    if not inner:
        return False
    index = {vid: i for i, vid in enumerate(inner)}
    t_edges: List[Tuple[int, int]] = []
    for v in g.whites:
        if g.degree(v.id) != 1:
            continue
        # leaf W -(2)- b -(1)- w -(1)- B
        (b, lab), = g.incidence[v.id]
        if lab != 2 or g.degree(b) != 2:
            return False
        (w, lab_bw), = [x for x in g.incidence[b] if x[0] != v.id]
        if lab_bw != 1 or g.degree(w) != 2:
            return False
        (big, lab_wB), = [x for x in g.incidence[w] if x[0] != b]
        if lab_wB != 1 or big not in index:
            return False
        index[v.id] = len(index)
        t_edges.append((index[big], index[v.id]))
    for v in g.whites:
        nbrs = [x for x, _ in g.incidence[v.id]]
        if len(nbrs) == 2 and all(x in inner for x in nbrs):
            t_edges.append((index[nbrs[0]], index[nbrs[1]]))
    try:
        rebuilt = horned_tree(t_edges)
    except ValueError:
        return False
    return len(rebuilt.vertices) == len(g.vertices) and canonical_code(rebuilt) == canonical_code(g)


def _arm(g: StratGraph, w: str, inner: str) -> Optional[Tuple[str, str]]:
    """A path w -(1)- b -(2)- W with b != inner, if one exists."""
    for b, lab in g.incidence[w]:
        if lab != 1 or b == inner or g.by_id[b].color is not Color.BLACK:
            continue
        for far, lab2 in g.incidence[b]:
            if lab2 == 2 and far != w and g.by_id[far].color is Color.WHITE:
                return b, far
    return None


def find_horned_tree(g: StratGraph) -> Optional[StratGraph]:
    """A horned subtree of g (colors and labels inherited), or None.

    Inner vertices are blacks with three label-1 edges.  Starting from each such
    black, a neighbour white becomes an arm when it can; otherwise it must link
    to exactly one further inner black, and the search branches over the choice.
    """
    inner = {
        b.id
        for b in g.blacks
        if g.degree(b.id) == 3 and g.labels_at(b.id) == [1, 1, 1]
    }
    for start in sorted(inner):
        found = _grow(g, inner, {start}, [(start, w) for w, _ in g.incidence[start]], [], [])
        if found is not None:
            kept, edges = found
            return StratGraph.build([g.by_id[v] for v in sorted(kept)], edges)
    return None


def _grow(g, inner, members, frontier, used, edges):
    if not frontier:
        kept = set(members)
        for e in edges:
            kept |= {e.white, e.black}
        return kept, edges
    (B, w), rest = frontier[0], frontier[1:]
    here = edges + [Edge(w, B, 1)]
    if w in used:
        return None
    arm = _arm(g, w, B)
    if arm is not None:
        b, far = arm
        arm_edges = here + [Edge(w, b, 1), Edge(far, b, 2)]
        return _grow(g, inner, members, rest, used + [w], arm_edges)
    for nxt, lab in g.incidence[w]:
        if nxt == B or nxt not in inner or nxt in members or lab != 1:
            continue
        new_front = rest + [(nxt, x) for x, _ in g.incidence[nxt] if x != w]
        found = _grow(g, inner, members | {nxt}, new_front, used + [w], here + [Edge(w, nxt, 1)])
        if found is not None:
            return found
    return None


def contains_horned_tree(g: StratGraph) -> bool:
    return find_horned_tree(g) is not None


# ---------------------------------------------------------------------------


def is_simply_connected(g: StratGraph) -> Verdict:
    base = validate(g)
    if not base:
        return base
    if not g.vertices:
        return Verdict.from_reasons([Reason("empty graph", "graph has no vertices")])
    reasons: List[Reason] = []
    tree = is_tree(g)
    if not tree:
        reasons.append(Reason("not a tree", "graph is disconnected or contains a cycle"))
    for v in g.whites:
        if v.genus != 0:
            reasons.append(Reason("nonzero genus", f"white vertex {v.id!r} has genus {v.genus}"))
    for v in g.blacks:
        if g.degree(v.id) <= 1:
            reasons.append(Reason("black terminal vertex", f"black vertex {v.id!r} is terminal"))
    if not is_trivalent(g):
        bad = [b.id for b in g.blacks if g.labels_at(b.id) not in ([3], [1, 2], [1, 1, 1])]
        reasons.append(Reason("not trivalent", f"black vertices {bad} break the trivalent patterns"))
    if tree:
        dec = closed_star_B(g)
        collapsible = True
        for comp in dec.components:
            if not is_21_collapsible(comp):
                collapsible = False
                ids = sorted(v.id for v in comp.vertices)
                reasons.append(Reason("component not collapsible", f"component {ids} is not (2,1)-collapsible"))
        if collapsible and contains_horned_tree(reduced_graph(g)):
            reasons.append(Reason("horned tree", "the reduced graph contains a horned tree"))
    return Verdict.from_reasons(reasons)


# ---------------------------------------------------------------------------
# pi_1

Word = Tuple[Tuple[str, int], ...]


@dataclass(frozen=True)
class Pi1Presentation:
    generators: Tuple[str, ...]
    relations: Tuple[Word, ...]

    def render(self) -> str:
        def word(w: Word) -> str:
            return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w)

        return "⟨" + ", ".join(self.generators) + " | " + ", ".join(word(r) for r in self.relations) + "⟩"


def pi1_presentation(g: StratGraph) -> Pi1Presentation:
    """Presentation for a genus-0 tree: one generator per black and per edge.

    Each white contributes the product of its edge generators; each edge
    ``c`` of label m at black ``b`` contributes ``b^m c^-1``.
    """
    if not validate(g) or not is_tree(g):
        raise ValueError("pi1_presentation needs a valid tree")
    if any(v.genus != 0 for v in g.whites):
        raise ValueError("pi1_presentation only covers genus-0 white vertices")
    order = sorted(range(len(g.edges)), key=lambda i: (g.edges[i].white, g.edges[i].black, g.edges[i].label, i))
    blacks = sorted(b.id for b in g.blacks)
    prefix = "c"
    while any(f"{prefix}{k}" in blacks for k in range(1, len(order) + 1)):
        prefix += "_"
    name = {i: f"{prefix}{k}" for k, i in enumerate(order, 1)}
    generators = tuple(blacks) + tuple(name[i] for i in order)

    symbol = {v.id: vertex_symbol(v) for v in g.vertices}
    relations: List[Word] = []
    for v in sorted(g.whites, key=lambda v: v.id):
        codes = rooted_codes(g.incidence, v.id, symbol)
        incident = [i for i, e in enumerate(g.edges) if e.white == v.id]
        incident.sort(key=lambda i: (codes[g.edges[i].black], g.edges[i].label, name[i]))
        if incident:
            relations.append(tuple((name[i], 1) for i in incident))
    for i in order:
        e = g.edges[i]
        relations.append(((e.black, e.label), (name[i], -1)))
    return Pi1Presentation(generators, tuple(relations))
