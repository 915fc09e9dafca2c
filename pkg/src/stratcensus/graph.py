"""Bi-colored labeled graphs, structural validation, canonical codes."""

from __future__ import annotations

import hashlib
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import permutations
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple


class Color(str, Enum):
    WHITE = "white"
    BLACK = "black"


@dataclass(frozen=True)
class Vertex:
    id: str
    color: Color
    genus: Optional[int] = None

    @property
    def is_white(self) -> bool:
        return self.color is Color.WHITE


@dataclass(frozen=True)
class Edge:
    white: str
    black: str
    label: int


@dataclass(frozen=True)
class Reason:
    code: str
    message: str


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reasons: Tuple[Reason, ...] = ()

    @classmethod
    def from_reasons(cls, reasons: Iterable[Reason]) -> "Verdict":
        reasons = tuple(reasons)
        return cls(accepted=not reasons, reasons=reasons)

    @property
    def codes(self) -> List[str]:
        return [r.code for r in self.reasons]

    def __bool__(self) -> bool:
        return self.accepted


@dataclass(frozen=True)
class StratGraph:
    """A graph whose white vertices are surfaces and black vertices singular circles.

    Edges always name their white end first; whether the named ends really have
    those colors is checked by :func:`validate`, not at construction.
    """

    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[Edge, ...] = ()

    @classmethod
    def build(cls, vertices: Iterable[Vertex], edges: Iterable[Edge]) -> "StratGraph":
        return cls(tuple(vertices), tuple(edges))

    @cached_property
    def by_id(self) -> Dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def incidence(self) -> Dict[str, List[Tuple[str, int]]]:
        """vertex id -> list of (neighbor id, edge label); one entry per edge end."""
        inc: Dict[str, List[Tuple[str, int]]] = {v.id: [] for v in self.vertices}
        for e in self.edges:
            if e.white in inc and e.black in inc and e.white != e.black:
                inc[e.white].append((e.black, e.label))
                inc[e.black].append((e.white, e.label))
        return inc

    def degree(self, vid: str) -> int:
        return len(self.incidence[vid])

    def labels_at(self, vid: str) -> List[int]:
        return sorted(lab for _, lab in self.incidence[vid])

    @property
    def whites(self) -> List[Vertex]:
        return [v for v in self.vertices if v.color is Color.WHITE]

    @property
    def blacks(self) -> List[Vertex]:
        return [v for v in self.vertices if v.color is Color.BLACK]

    @property
    def n_white(self) -> int:
        return len(self.whites)

    def degree3_blacks(self) -> List[str]:
        return [v.id for v in self.blacks if self.degree(v.id) == 3]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0].id}
        stack = [self.vertices[0].id]
        while stack:
            u = stack.pop()
            for w, _ in self.incidence[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def subgraph(self, vertex_ids: Iterable[str]) -> "StratGraph":
        keep = set(vertex_ids)
        return StratGraph(
            tuple(v for v in self.vertices if v.id in keep),
            tuple(e for e in self.edges if e.white in keep and e.black in keep),
        )

    def components(self) -> List["StratGraph"]:
        seen: set = set()
        out = []
        for v in self.vertices:
            if v.id in seen:
                continue
            comp = {v.id}
            stack = [v.id]
            while stack:
                u = stack.pop()
                for w, _ in self.incidence[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(self.subgraph(comp))
        return out


def white(vid: str, genus: int = 0) -> Vertex:
    return Vertex(vid, Color.WHITE, genus)


def black(vid: str) -> Vertex:
    return Vertex(vid, Color.BLACK, None)


def relabel(g: StratGraph, mapping: Mapping[str, str]) -> StratGraph:
    """Rename vertex ids; vertex and edge order is preserved."""
    return StratGraph(
        tuple(Vertex(mapping[v.id], v.color, v.genus) for v in g.vertices),
        tuple(Edge(mapping[e.white], mapping[e.black], e.label) for e in g.edges),
    )


def validate(g: StratGraph) -> Verdict:
    reasons: List[Reason] = []
    counts = Counter(v.id for v in g.vertices)
    for vid, k in sorted(counts.items()):
        if k > 1:
            reasons.append(Reason("duplicate vertex id", f"vertex id {vid!r} occurs {k} times"))
    for v in g.vertices:
        if v.color is Color.WHITE and v.genus is None:
            reasons.append(Reason("missing genus", f"white vertex {v.id!r} has no genus"))
        if v.color is Color.BLACK and v.genus is not None:
            reasons.append(Reason("black genus", f"black vertex {v.id!r} carries a genus"))
    ids = g.by_id
    for i, e in enumerate(g.edges):
        ends = (e.white, e.black)
        missing = [x for x in ends if x not in ids]
        if missing:
            reasons.append(Reason("unknown vertex", f"edge {i} references unknown vertex {missing[0]!r}"))
            continue
        if ids[e.white].color is not Color.WHITE or ids[e.black].color is not Color.BLACK:
            reasons.append(
                Reason(
                    "non-bipartite edge",
                    f"edge {i} ({e.white}, {e.black}) does not join a white vertex to a black vertex",
                )
            )
        if not isinstance(e.label, int) or e.label < 1:
            reasons.append(Reason("nonpositive label", f"edge {i} ({e.white}, {e.black}) has label {e.label}"))
    return Verdict.from_reasons(reasons)


def is_tree(g: StratGraph) -> bool:
    return bool(g.vertices) and len(g.edges) == len(g.vertices) - 1 and g.is_connected()


_BLACK_PATTERNS = ([3], [1, 2], [1, 1, 1])


def black_is_trivalent(g: StratGraph, vid: str) -> bool:
    return g.labels_at(vid) in _BLACK_PATTERNS


def is_trivalent(g: StratGraph) -> bool:
    blacks = g.blacks
    if not blacks:
        # the one-white-vertex graph is the only admissible black-free input
        return len(g.vertices) == 1 and not g.edges
    return all(black_is_trivalent(g, b.id) for b in blacks)


# ---------------------------------------------------------------------------
# AHU codes over plain adjacency maps.  Symbols must avoid the characters "(),:".

Adjacency = Mapping[Hashable, Sequence[Tuple[Hashable, int]]]


def centroids(adj: Adjacency) -> List[Hashable]:
    nodes = list(adj)
    if len(nodes) <= 1:
        return nodes
    root = nodes[0]
    order, parent = [root], {root: None}
    for u in order:
        for w, _ in adj[u]:
            if w != parent[u]:
                parent[w] = u
                order.append(w)
    size = {u: 1 for u in nodes}
    for u in reversed(order):
        if parent[u] is not None:
            size[parent[u]] += size[u]
    total = len(nodes)
    best, out = total, []
    for u in nodes:
        heaviest = total - size[u]
        for w, _ in adj[u]:
            if w != parent[u]:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, out = heaviest, [u]
        elif heaviest == best:
            out.append(u)
    return out


def rooted_codes(adj: Adjacency, root: Hashable, symbol: Mapping[Hashable, str]) -> Dict[Hashable, str]:
    """Code of every subtree when the tree hangs from ``root``.

    The code of a non-root vertex includes the label of its parent edge.
    """
    order, parent = [root], {root: (None, None)}
    for u in order:
        for w, lab in adj[u]:
            if w != parent[u][0]:
                parent[w] = (u, lab)
                order.append(w)
    kids: Dict[Hashable, List[str]] = defaultdict(list)
    codes: Dict[Hashable, str] = {}
    for u in reversed(order):
        body = symbol[u] + "(" + ",".join(sorted(kids[u])) + ")"
        p, lab = parent[u]
        codes[u] = body if p is None else f"{lab}:{body}"
        if p is not None:
            kids[p].append(codes[u])
    return codes


def tree_code(adj: Adjacency, symbol: Mapping[Hashable, str]) -> str:
    if not adj:
        return ""
    return min(rooted_codes(adj, c, symbol)[c] for c in centroids(adj))


def _rooted_isomorphisms(
    adj: Adjacency,
    src: Hashable,
    dst: Hashable,
    codes_src: Mapping[Hashable, str],
    codes_dst: Mapping[Hashable, str],
    src_parent: Hashable = None,
    dst_parent: Hashable = None,
) -> Iterator[Dict[Hashable, Hashable]]:
    a = [w for w, _ in adj[src] if w != src_parent]
    b = [w for w, _ in adj[dst] if w != dst_parent]
    groups_a: Dict[str, List[Hashable]] = defaultdict(list)
    groups_b: Dict[str, List[Hashable]] = defaultdict(list)
    for w in a:
        groups_a[codes_src[w]].append(w)
    for w in b:
        groups_b[codes_dst[w]].append(w)
    # one list of choices per child of src: (child image, sub-isomorphism)
    pairings = []
    for code, xs in sorted(groups_a.items()):
        ys = groups_b[code]
        pairings.append([list(zip(xs, perm)) for perm in permutations(ys)])

    def extend(i: int, acc: Dict[Hashable, Hashable]) -> Iterator[Dict[Hashable, Hashable]]:
        if i == len(pairings):
            yield acc
            return
        for pairing in pairings[i]:
            yield from _combine(pairing, 0, acc, i)

    def _combine(pairing, j, acc, i):
        if j == len(pairing):
            yield from extend(i + 1, acc)
            return
        x, y = pairing[j]
        for sub in _rooted_isomorphisms(adj, x, y, codes_src, codes_dst, src, dst):
            yield from _combine(pairing, j + 1, {**acc, **sub}, i)

    yield from extend(0, {src: dst})


def tree_automorphisms(adj: Adjacency, symbol: Mapping[Hashable, str]) -> Iterator[Dict[Hashable, Hashable]]:
    """All symbol- and label-preserving automorphisms of a tree, as vertex maps."""
    if not adj:
        yield {}
        return
    cs = centroids(adj)
    base = cs[0]
    codes = {c: rooted_codes(adj, c, symbol) for c in cs}
    for c in cs:
        if codes[c][c] == codes[base][base]:
            yield from _rooted_isomorphisms(adj, base, c, codes[base], codes[c])


# ---------------------------------------------------------------------------


def vertex_symbol(v: Vertex) -> str:
    return f"w{v.genus}" if v.color is Color.WHITE else "b"


def _wl_code(g: StratGraph) -> str:
    colors = {v.id: vertex_symbol(v) for v in g.vertices}
    for _ in range(len(g.vertices)):
        refined = {
            vid: hashlib.sha256(
                (colors[vid] + "|" + ",".join(sorted(f"{lab}:{colors[w]}" for w, lab in g.incidence[vid]))).encode()
            ).hexdigest()[:16]
            for vid in colors
        }
        if len(set(refined.values())) == len(set(colors.values())):
            colors = refined
            break
        colors = refined
    return "G" + ",".join(sorted(colors.values()))


def canonical_code(g: StratGraph) -> str:
    """Isomorphism invariant, complete on trees.

    Tree codes start with ``T``; other connected graphs get an invariant
    (colour-refinement) code starting with ``G``.
    """
    if not g.is_connected():
        raise ValueError("canonical_code requires a connected graph")
    if not g.vertices:
        return "T"
    if not is_tree(g):
        return _wl_code(g)
    symbol = {v.id: vertex_symbol(v) for v in g.vertices}
    return "T" + tree_code(g.incidence, symbol)


def are_isomorphic(g1: StratGraph, g2: StratGraph) -> bool:
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    return canonical_code(g1) == canonical_code(g2)


def code_digest(code: str) -> str:
    return hashlib.sha256(code.encode()).hexdigest()[:16]
