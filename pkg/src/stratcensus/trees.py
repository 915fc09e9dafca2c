"""Rooted, bi-rooted and d-rooted unlabeled trees.

Rooted trees are canonical level sequences (preorder depths, lexicographically
largest over plane embeddings) produced by the Beyer-Hedetniemi successor rule.
Trees carrying marks are put in a canonical form by sorting children on their
decorated AHU codes, so two isomorphic decorated trees compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterator, List, Sequence, Tuple

from .graph import Edge, StratGraph, black, rooted_codes, tree_code, white


def level_sequences(n: int) -> Iterator[Tuple[int, ...]]:
    """Canonical level sequences of rooted trees on n vertices, path first."""
    if n < 1:
        raise ValueError("n must be positive")
    levels = list(range(n))
    while True:
        yield tuple(levels)
        p = n - 1
        while p > 0 and levels[p] == 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, n):
            levels[i] = levels[i - shift]


def parents_of(levels: Sequence[int]) -> List[int]:
    parent = [-1] * len(levels)
    stack: List[int] = []
    for i, lv in enumerate(levels):
        del stack[lv:]
        if stack:
            parent[i] = stack[-1]
        stack.append(i)
    return parent


def adjacency(levels: Sequence[int]) -> Dict[int, List[Tuple[int, int]]]:
    adj: Dict[int, List[Tuple[int, int]]] = {i: [] for i in range(len(levels))}
    for i, p in enumerate(parents_of(levels)):
        if p >= 0:
            adj[i].append((p, 1))
            adj[p].append((i, 1))
    return adj


def _canonical_marked(
    adj: Dict[int, List[Tuple[int, int]]], root: int, marks: Sequence[int]
) -> Tuple[str, Tuple[int, ...], Tuple[int, ...]]:
    """Canonical (code, level sequence, mark positions) of a tree with root and ordered marks."""
    symbol = {v: "v" for v in adj}
    for k, m in enumerate(marks, 1):
        symbol[m] = f"m{k}"
    codes = rooted_codes(adj, root, symbol)
    levels: List[int] = []
    index: Dict[int, int] = {}
    stack = [(root, -1, 0)]
    while stack:
        u, p, depth = stack.pop()
        index[u] = len(levels)
        levels.append(depth)
        kids = sorted((w for w, _ in adj[u] if w != p), key=lambda w: codes[w])
        # pushing ascending means the largest code is visited first
        stack.extend((w, u, depth + 1) for w in kids)
    return codes[root], tuple(levels), tuple(index[m] for m in marks)


@dataclass(frozen=True, order=True)
class RootedTree:
    levels: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.levels)

    def parents(self) -> List[int]:
        return parents_of(self.levels)


@dataclass(frozen=True)
class MarkedTree:
    """Tree rooted at preorder index 0 with ordered, pairwise distinct marks."""

    levels: Tuple[int, ...]
    marks: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.levels)

    @property
    def root(self) -> int:
        return 0

    @property
    def code(self) -> str:
        return _canonical_marked(adjacency(self.levels), 0, self.marks)[0]

    @classmethod
    def canonical(cls, adj: Dict[int, List[Tuple[int, int]]], root: int, marks: Sequence[int]):
        _, levels, new_marks = _canonical_marked(adj, root, marks)
        return cls(levels, new_marks)


class BiRootedTree(MarkedTree):
    @property
    def mark(self) -> int:
        return self.marks[0]


class DRootedTree(MarkedTree):
    @property
    def d(self) -> int:
        return len(self.marks) + 1


@lru_cache(maxsize=None)
def enum_rooted(n: int) -> Tuple[RootedTree, ...]:
    return tuple(RootedTree(lv) for lv in level_sequences(n))


def count_rooted(n: int) -> int:
    return sum(1 for _ in level_sequences(n))


@lru_cache(maxsize=None)
def enum_free(n: int) -> Tuple[RootedTree, ...]:
    """Unrooted trees on n vertices, each given as a level sequence from some vertex."""
    seen: Dict[str, RootedTree] = {}
    for t in enum_rooted(n):
        adj = adjacency(t.levels)
        code = tree_code(adj, {v: "v" for v in adj})
        seen.setdefault(code, t)
    return tuple(seen[c] for c in sorted(seen))


def _dedupe(trees: Dict[str, MarkedTree]) -> tuple:
    return tuple(trees[c] for c in sorted(trees))


@lru_cache(maxsize=None)
def enum_birooted(n: int) -> Tuple[BiRootedTree, ...]:
    out: Dict[str, BiRootedTree] = {}
    for t in enum_rooted(n):
        adj = adjacency(t.levels)
        for m in range(n):
            bt = BiRootedTree.canonical(adj, 0, (m,))
            out.setdefault(bt.code, bt)
    return _dedupe(out)


def enum_birooted_from_free(n: int) -> Tuple[BiRootedTree, ...]:
    """Same classes as :func:`enum_birooted`, reached through free trees and all (mark, root) pairs."""
    out: Dict[str, BiRootedTree] = {}
    for t in enum_free(n):
        adj = adjacency(t.levels)
        for r in range(n):
            for m in range(n):
                bt = BiRootedTree.canonical(adj, r, (m,))
                out.setdefault(bt.code, bt)
    return _dedupe(out)


def count_birooted(n: int) -> int:
    return len(enum_birooted(n))


def count_U(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return count_birooted(n) - count_rooted(n)


@lru_cache(maxsize=None)
def enum_drooted(n: int, d: int) -> Tuple[DRootedTree, ...]:
    if d < 3:
        raise ValueError("d-rooted trees need d >= 3")
    if n < d - 1:
        raise ValueError(f"{d - 1} distinct marks do not fit on {n} vertices")
    out: Dict[str, DRootedTree] = {}
    for t in enum_rooted(n):
        adj = adjacency(t.levels)
        for marks in permutations(range(n), d - 1):
            dt = DRootedTree.canonical(adj, 0, marks)
            out.setdefault(dt.code, dt)
    return _dedupe(out)


def sequence_table(max_n: int) -> List[Tuple[int, int, int, int]]:
    """Rows (n, R_n, M_n, U_n) for n = 1..max_n."""
    rows = []
    for n in range(1, max_n + 1):
        r, m = count_rooted(n), count_birooted(n)
        rows.append((n, r, m, m - r))
    return rows


def bisect_levels(levels: Sequence[int], prefix: str = "") -> StratGraph:
    """Bisect a rooted tree (root = index 0); label 2 on edges at even distance from the root, 1 on odd.

    White vertex ``{prefix}w{i}`` is preorder vertex i; black ``{prefix}c{i}`` bisects the edge above i.
    """
    vertices = [white(f"{prefix}w{i}") for i in range(len(levels))]
    edges = []
    for i, p in enumerate(parents_of(levels)):
        if p < 0:
            continue
        vertices.append(black(f"{prefix}c{i}"))
        edges.append(Edge(f"{prefix}w{p}", f"{prefix}c{i}", 2))
        edges.append(Edge(f"{prefix}w{i}", f"{prefix}c{i}", 1))
    return StratGraph.build(vertices, edges)


def rooted_to_collapsible(t: RootedTree) -> StratGraph:
    return bisect_levels(t.levels)
