"""Generating trees, skeletons with attachment slots, and split variants."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, Iterator, List, Sequence, Tuple

from .graph import (
    Edge,
    StratGraph,
    black,
    tree_automorphisms,
    tree_code,
    vertex_symbol,
    white,
)
from .trees import adjacency, enum_free

Perm = Tuple[int, ...]


@dataclass(frozen=True)
class GeneratingTree:
    """Colored tree: ``colors[i]`` is "b" or "w"; empty for the b = 0 marker."""

    colors: Tuple[str, ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def b(self) -> int:
        return self.colors.count("b")

    def adjacency(self) -> Dict[int, List[Tuple[int, int]]]:
        adj: Dict[int, List[Tuple[int, int]]] = {i: [] for i in range(len(self.colors))}
        for u, v in self.edges:
            adj[u].append((v, 1))
            adj[v].append((u, 1))
        return adj

    @property
    def code(self) -> str:
        return tree_code(self.adjacency(), dict(enumerate(self.colors)))


@dataclass(frozen=True)
class Skeleton:
    name: str
    base: StratGraph
    slots: Tuple[str, ...]
    symmetries: Tuple[Perm, ...]

    @property
    def units(self) -> Tuple[Tuple[str, ...], ...]:
        return tuple((s,) for s in self.slots)

    @property
    def b(self) -> int:
        return len(self.base.blacks)

    def nonterminal_slots(self) -> List[str]:
        return [s for s in self.slots if self.base.degree(s) >= 2]


@dataclass(frozen=True)
class SplitSkeleton:
    """Skeleton whose split whites became copies joined later by one multi-marked tree.

    ``units`` lists single slots (one bi-rooted tree each) and groups of copies
    (one d-rooted tree each, with d - 1 = number of copies; mark k lands on copy k).
    """

    name: str
    parent: Skeleton
    base: StratGraph
    units: Tuple[Tuple[str, ...], ...]
    symmetries: Tuple[Perm, ...]

    @property
    def groups(self) -> List[Tuple[str, ...]]:
        return [u for u in self.units if len(u) > 1]

    @property
    def b(self) -> int:
        return self.parent.b


def enum_generating_trees(b: int) -> List[GeneratingTree]:
    """Trees with b blacks (degree <= 3), whites of degree >= 3 adjacent only to blacks.

    For b = 0 a single empty marker tree is returned.
    """
    if b < 0:
        raise ValueError("b must be non-negative")
    if b == 0:
        return [GeneratingTree((), ())]
    found: Dict[str, GeneratingTree] = {}
    # a white of degree >= 3 forces extra leaves, and leaves are black
    for n_white in range(0, max(0, b - 2) + 1):
        size = b + n_white
        for t in enum_free(size):
            adj = adjacency(t.levels)
            edges = tuple((u, w) for u in adj for w, _ in adj[u] if u < w)
            for whites in combinations(range(size), n_white):
                colors = tuple("w" if i in whites else "b" for i in range(size))
                if any(len(adj[i]) < 3 for i in whites):
                    continue
                if any(colors[i] == "b" and len(adj[i]) > 3 for i in range(size)):
                    continue
                if any(colors[u] == colors[w] == "w" for u, w in edges):
                    continue
                gt = GeneratingTree(colors, edges)
                found.setdefault(gt.code, gt)
    return [found[c] for c in sorted(found)]


def _slot_perms(base: StratGraph, units: Sequence[Tuple[str, ...]]) -> Tuple[Perm, ...]:
    adj = {v: list(nbrs) for v, nbrs in base.incidence.items()}
    symbol = {v.id: vertex_symbol(v) for v in base.vertices}
    for k, unit in enumerate(units):
        if len(unit) > 1:
            hub = f"#hub{k}"
            adj[hub] = [(c, 0) for c in unit]
            for c in unit:
                adj[c] = adj[c] + [(hub, 0)]
            symbol[hub] = "h"
    where: Dict[str, int] = {}
    for k, unit in enumerate(units):
        where[unit[0] if len(unit) == 1 else f"#hub{k}"] = k
    perms = set()
    for auto in tree_automorphisms(adj, symbol):
        perms.add(tuple(where[auto[key]] for key, _ in sorted(where.items(), key=lambda kv: kv[1])))
    return tuple(sorted(perms))


def _decorated_code(base: StratGraph, units: Sequence[Tuple[str, ...]]) -> str:
    adj = {v: list(nbrs) for v, nbrs in base.incidence.items()}
    symbol = {v.id: vertex_symbol(v) for v in base.vertices}
    for k, unit in enumerate(units):
        if len(unit) > 1:
            hub = f"#hub{k}"
            adj[hub] = [(c, 0) for c in unit]
            for c in unit:
                adj[c] = adj[c] + [(hub, 0)]
            symbol[hub] = "h"
    return tree_code(adj, symbol)


def skeleton_of(t: GeneratingTree, name: str = "") -> Skeleton:
    if t.b == 0:
        raise ValueError("the b = 0 generating tree has no skeleton")
    vertices = []
    edges = []
    for i, c in enumerate(t.colors):
        vertices.append(black(f"B{i}") if c == "b" else white(f"W{i}"))
    degree = {i: 0 for i in range(len(t.colors))}
    for u, v in t.edges:
        degree[u] += 1
        degree[v] += 1
        if t.colors[u] == t.colors[v] == "b":
            s = f"S{min(u, v)}_{max(u, v)}"
            vertices.append(white(s))
            edges += [Edge(s, f"B{u}", 1), Edge(s, f"B{v}", 1)]
        else:
            bu, wu = (u, v) if t.colors[u] == "b" else (v, u)
            edges.append(Edge(f"W{wu}", f"B{bu}", 1))
    for i, c in enumerate(t.colors):
        if c != "b":
            continue
        for k in range(3 - degree[i]):
            p = f"P{i}_{k}"
            vertices.append(white(p))
            edges.append(Edge(p, f"B{i}", 1))
    base = StratGraph.build(vertices, edges)
    whites = base.whites
    slots = tuple(
        v.id for v in sorted(whites, key=lambda v: (base.degree(v.id) == 1, v.id))
    )
    units = [(s,) for s in slots]
    return Skeleton(name or f"b{t.b}", base, slots, _slot_perms(base, units))


def skeletons(b: int) -> List[Skeleton]:
    return [skeleton_of(t, f"b{b}.{k}") for k, t in enumerate(enum_generating_trees(b))]


def set_partitions(items: Sequence[str]) -> Iterator[List[List[str]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]
        yield [[first]] + part


def split_variants(s: Skeleton) -> List[SplitSkeleton]:
    """Every way to split non-terminal slots; a split slot's blacks are grouped onto copies."""
    inner = s.nonterminal_slots()
    choices = []
    for slot in inner:
        blacks = sorted(x for x, _ in s.base.incidence[slot])
        choices.append([(slot, p) for p in set_partitions(blacks)])
    found: Dict[str, SplitSkeleton] = {}
    for combo in product(*choices):
        split = [(slot, p) for slot, p in combo if len(p) > 1]
        if not split:
            continue
        vertices = [v for v in s.base.vertices if v.id not in {slot for slot, _ in split}]
        edges = [e for e in s.base.edges if e.white not in {slot for slot, _ in split}]
        groups = []
        for slot, parts in split:
            copies = []
            for k, part in enumerate(sorted(parts)):
                cid = f"{slot}~{k}"
                copies.append(cid)
                vertices.append(white(cid))
                edges += [Edge(cid, bid, 1) for bid in part]
            groups.append(tuple(copies))
        base = StratGraph.build(vertices, edges)
        split_ids = {slot for slot, _ in split}
        units = tuple((x,) for x in s.slots if x not in split_ids) + tuple(groups)
        code = _decorated_code(base, units)
        if code in found:
            continue
        desc = ",".join(f"{slot}:{len(parts)}" for slot, parts in split)
        found[code] = SplitSkeleton(f"{s.name}/split({desc})", s, base, units, _slot_perms(base, units))
    return [found[c] for c in sorted(found)]


def templates(b: int) -> List["Skeleton | SplitSkeleton"]:
    out: List = []
    for s in skeletons(b):
        out.append(s)
        out.extend(split_variants(s))
    return out


def canonical_sizes(sizes: Sequence[int], symmetries: Sequence[Perm]) -> Tuple[int, ...]:
    """Largest rearrangement of per-unit sizes reachable under the unit symmetries."""
    best = tuple(sizes)
    for perm in symmetries:
        moved = [0] * len(sizes)
        for i, target in enumerate(perm):
            moved[target] = sizes[i]
        best = max(best, tuple(moved))
    return best
