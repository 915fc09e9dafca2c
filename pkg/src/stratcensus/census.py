"""Counting 1-connected trivalent graphs with n white vertices.

Three engines are kept independent of one another:

* ``formula``: rooted-tree counts for b = 0 and the scalene/isosceles/
  equilateral sums for b = 1;
* ``constructive``: skeletons and split variants with bi-/d-rooted trees
  attached, filtered by the classification test and deduplicated;
* ``brute``: every bipartite tree with the right vertex and degree counts,
  taken from networkx's free-tree generator, filtered the same way.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .classify import is_simply_connected
from .graph import Edge, StratGraph, black, canonical_code, white
from .skeleton import canonical_sizes, templates
from .trees import (
    MarkedTree,
    bisect_levels,
    count_birooted,
    count_rooted,
    enum_birooted,
    enum_drooted,
    enum_rooted,
    rooted_to_collapsible,
)

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 8
ENGINES = ("formula", "constructive", "brute")


def multiset_count(m: int, r: int) -> int:
    """Number of non-increasing maps {1..r} -> {1..m}."""
    if m < 1 or r < 1:
        raise ValueError("multiset_count needs m >= 1 and r >= 1")
    return comb(m + r - 1, r)


def count_b0(n: int) -> int:
    return count_rooted(n)


@dataclass(frozen=True)
class B1Term:
    kind: str
    parts: Tuple[int, int, int]
    value: int

    @property
    def descriptor(self) -> str:
        return b1_descriptor(self.parts)


@dataclass(frozen=True)
class B1Count:
    S: int
    I: int
    E: int
    terms: Tuple[B1Term, ...] = ()

    @property
    def total(self) -> int:
        return self.S + self.I + self.E


def b1_shape(parts: Sequence[int]) -> Tuple[str, Tuple[int, int, int]]:
    """Shape letter and conventional ordering: scalene descending, isosceles odd part first."""
    a = sorted(parts, reverse=True)
    if a[0] == a[1] == a[2]:
        return "E", tuple(a)
    if a[0] == a[1]:
        return "I", (a[2], a[0], a[1])
    if a[1] == a[2]:
        return "I", (a[0], a[1], a[2])
    return "S", tuple(a)


def b1_descriptor(parts: Sequence[int]) -> str:
    kind, ordered = b1_shape(parts)
    return f"{kind}{ordered}".replace(" ", "")


def count_b1(n: int) -> B1Count:
    if n < 3:
        return B1Count(0, 0, 0)
    M = {a: count_birooted(a) for a in range(1, n - 1)}
    U = {a: M[a] - count_rooted(a) for a in M}

    def c(x: int, k: int) -> int:
        return comb(x + k - 1, k) if x > 0 else 0

    terms: List[B1Term] = []
    for a1 in range(n - 2, 0, -1):
        for a2 in range(a1 - 1, 0, -1):
            a3 = n - a1 - a2
            if 0 < a3 < a2:
                v = M[a1] * M[a2] * M[a3] - U[a1] * U[a2] * U[a3]
                terms.append(B1Term("S", (a1, a2, a3), v))
    for a in range(1, n):
        a1 = n - 2 * a
        if a1 >= 1 and a1 != a:
            v = M[a1] * c(M[a], 2) - U[a1] * c(U[a], 2)
            terms.append(B1Term("I", (a1, a, a), v))
    if n % 3 == 0:
        a = n // 3
        terms.append(B1Term("E", (a, a, a), c(M[a], 3) - c(U[a], 3)))
    total = {k: sum(t.value for t in terms if t.kind == k) for k in "SIE"}
    return B1Count(total["S"], total["I"], total["E"], tuple(terms))


# ---------------------------------------------------------------------------
# constructive engine


def attach(template, assignment: Sequence[MarkedTree], n: Optional[int] = None) -> StratGraph:
    """Glue one tree per template unit; each tree's k-th mark is identified with the unit's k-th vertex.

    Tree edges get labels by distance parity to the tree's own root.
    """
    units = template.units
    if len(assignment) != len(units):
        raise ValueError(f"expected {len(units)} attachment trees, got {len(assignment)}")
    vertices = list(template.base.vertices)
    edges = list(template.base.edges)
    for k, (unit, tree) in enumerate(zip(units, assignment)):
        if len(tree.marks) != len(unit):
            raise ValueError(f"unit {unit} needs {len(unit)} marks, tree has {len(tree.marks)}")
        prefix = f"u{k}."
        piece = bisect_levels(tree.levels, prefix)
        rename = {f"{prefix}w{m}": vid for m, vid in zip(tree.marks, unit)}
        vertices += [v for v in piece.vertices if v.id not in rename]
        edges += [Edge(rename.get(e.white, e.white), e.black, e.label) for e in piece.edges]
    g = StratGraph.build(vertices, edges)
    if n is not None and g.n_white != n:
        raise ValueError(f"attachment sizes give {g.n_white} white vertices, expected {n}")
    return g


def compositions(n: int, minimums: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    if not minimums:
        if n == 0:
            yield ()
        return
    rest_min = sum(minimums[1:])
    for first in range(minimums[0], n - rest_min + 1):
        for tail in compositions(n - first, minimums[1:]):
            yield (first,) + tail


def _trees_for(unit: Tuple[str, ...], size: int) -> Tuple[MarkedTree, ...]:
    if len(unit) == 1:
        return enum_birooted(size)
    return enum_drooted(size, len(unit) + 1)


@dataclass(frozen=True)
class Generated:
    code: str
    graph: StratGraph
    template: str
    sizes: Tuple[int, ...]
    descriptor: str


def constructive_graphs(n: int, b: int) -> Dict[str, Generated]:
    """Canonical code -> one witness graph with the template row it came from."""
    if n < 1 or b < 0:
        raise ValueError("need n >= 1 and b >= 0")
    found: Dict[str, Generated] = {}
    if b == 0:
        for t in enum_rooted(n):
            g = rooted_to_collapsible(t)
            code = canonical_code(g)
            found.setdefault(code, Generated(code, g, "rooted", (n,), f"R_{n}"))
        return dict(sorted(found.items()))
    for tpl in templates(b):
        mins = [len(u) for u in tpl.units]
        if sum(mins) > n:
            continue
        for sizes in compositions(n, mins):
            if canonical_sizes(sizes, tpl.symmetries) != sizes:
                continue
            desc = b1_descriptor(sizes) if b == 1 else f"{tpl.name} sizes={','.join(map(str, sizes))}"
            pools = [_trees_for(u, s) for u, s in zip(tpl.units, sizes)]
            for choice in product(*pools):
                g = attach(tpl, choice, n)
                if not is_simply_connected(g):
                    continue
                code = canonical_code(g)
                if code not in found:
                    found[code] = Generated(code, g, tpl.name, sizes, desc)
    return dict(sorted(found.items()))


def constructive_census(n: int, b: int) -> Tuple[str, ...]:
    return tuple(constructive_graphs(n, b))


# ---------------------------------------------------------------------------
# brute-force engine


def _free_trees(order: int) -> Iterator[nx.Graph]:
    if order == 1:
        g = nx.Graph()
        g.add_node(0)
        yield g
        return
    yield from nx.nonisomorphic_trees(order)


def brute_force_graphs(n: int, limit: int = DEFAULT_LIMIT) -> Dict[int, Dict[str, StratGraph]]:
    """b -> canonical code -> graph, over all trees with n genus-0 whites and n - 1 - b blacks."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise ValueError(f"n = {n} is above the brute-force limit {limit}")
    out: Dict[int, Dict[str, StratGraph]] = {}
    for b in range(0, (n - 1) // 2 + 1):
        m = n - 1 - b
        found: Dict[str, StratGraph] = {}
        for t in _free_trees(n + m):
            parity = nx.single_source_shortest_path_length(t, 0)
            for white_parity in (0, 1):
                whites = [v for v in t if parity[v] % 2 == white_parity]
                blacks = [v for v in t if parity[v] % 2 != white_parity]
                if len(whites) != n:
                    continue
                degs = [t.degree(v) for v in blacks]
                if any(d not in (2, 3) for d in degs) or degs.count(3) != b:
                    continue
                found.update(_labelings(t, whites, blacks))
        out[b] = dict(sorted(found.items()))
        log.debug("brute force n=%d b=%d: %d graphs", n, b, len(found))
    return out


def _labelings(t: nx.Graph, whites: List[int], blacks: List[int]) -> Dict[str, StratGraph]:
    vertices = [white(f"w{v}") for v in whites] + [black(f"b{v}") for v in blacks]
    fixed: List[Edge] = []
    choices: List[List[Tuple[Edge, Edge]]] = []
    for v in blacks:
        nbrs = sorted(t[v])
        if len(nbrs) == 3:
            fixed += [Edge(f"w{x}", f"b{v}", 1) for x in nbrs]
        else:
            x, y = nbrs
            choices.append(
                [
                    (Edge(f"w{x}", f"b{v}", 1), Edge(f"w{y}", f"b{v}", 2)),
                    (Edge(f"w{x}", f"b{v}", 2), Edge(f"w{y}", f"b{v}", 1)),
                ]
            )
    found: Dict[str, StratGraph] = {}
    for pick in product(*choices):
        edges = list(fixed)
        for pair in pick:
            edges.extend(pair)
        g = StratGraph.build(vertices, edges)
        if is_simply_connected(g):
            found.setdefault(canonical_code(g), g)
    return found


def brute_force_census(n: int, limit: int = DEFAULT_LIMIT) -> Dict[int, Tuple[str, ...]]:
    return {b: tuple(codes) for b, codes in brute_force_graphs(n, limit).items()}


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CensusRow:
    n: int
    b: int
    engine: str
    descriptor: str
    count: int
    template: str = ""


@dataclass
class CensusReport:
    n: int
    rows: List[CensusRow] = field(default_factory=list)
    totals: Dict[str, Dict[int, int]] = field(default_factory=dict)
    agreement: Dict[int, bool] = field(default_factory=dict)
    witnesses: List[str] = field(default_factory=list)

    def grand_total(self, engine: Optional[str] = None) -> int:
        if engine is None:
            engine = next(e for e in ("brute", "constructive", "formula") if e in self.totals)
        return sum(self.totals[engine].values())

    @property
    def agrees(self) -> bool:
        return all(self.agreement.values())

    def rows_for(self, engine: str, b: Optional[int] = None) -> List[CensusRow]:
        return [r for r in self.rows if r.engine == engine and (b is None or r.b == b)]


def formula_rows(n: int) -> List[CensusRow]:
    rows = [CensusRow(n, 0, "formula", f"R_{n}", count_b0(n))]
    for t in count_b1(n).terms:
        rows.append(CensusRow(n, 1, "formula", t.descriptor, t.value))
    return rows


def constructive_rows(n: int, b: int, graphs: Dict[str, Generated]) -> List[CensusRow]:
    counts: Dict[Tuple[str, str], int] = defaultdict(int)
    for gen in graphs.values():
        counts[(gen.template, gen.descriptor)] += 1
    return [CensusRow(n, b, "constructive", desc, k, tpl) for (tpl, desc), k in sorted(counts.items())]


def max_b(n: int) -> int:
    return (n - 1) // 2


def reconcile(
    n: int,
    limit: int = DEFAULT_LIMIT,
    engines: Sequence[str] = ENGINES,
    b_filter: Optional[int] = None,
) -> CensusReport:
    """Run the requested engines and compare them b by b."""
    if n < 1:
        raise ValueError("n must be positive")
    unknown = set(engines) - set(ENGINES)
    if unknown:
        raise ValueError(f"unknown engines {sorted(unknown)}")
    if n > limit and set(engines) & {"constructive", "brute"}:
        raise ValueError(f"n = {n} is above the configured limit {limit}")
    bs = [b for b in range(max_b(n) + 1) if b_filter is None or b == b_filter]
    report = CensusReport(n)
    code_sets: Dict[str, Dict[int, Tuple[str, ...]]] = {}

    if "formula" in engines and any(b <= 1 for b in bs):
        rows = [r for r in formula_rows(n) if r.b in bs]
        report.rows += rows
        report.totals["formula"] = {b: sum(r.count for r in rows if r.b == b) for b in bs if b <= 1}
    if "constructive" in engines:
        code_sets["constructive"] = {}
        report.totals["constructive"] = {}
        for b in bs:
            graphs = constructive_graphs(n, b)
            code_sets["constructive"][b] = tuple(graphs)
            report.totals["constructive"][b] = len(graphs)
            report.rows += constructive_rows(n, b, graphs)
    if "brute" in engines:
        brute = brute_force_census(n, limit)
        code_sets["brute"] = {b: brute.get(b, ()) for b in bs}
        report.totals["brute"] = {b: len(code_sets["brute"][b]) for b in bs}
        report.rows += [CensusRow(n, b, "brute", "all", report.totals["brute"][b]) for b in bs]

    for b in bs:
        counts = {e: t[b] for e, t in report.totals.items() if b in t}
        ok = len(set(counts.values())) <= 1
        if len(code_sets) == 2:
            a, z = (set(code_sets[e][b]) for e in ("constructive", "brute"))
            for missing, present_in in ((a - z, "constructive"), (z - a, "brute")):
                for code in sorted(missing)[:1]:
                    ok = False
                    report.witnesses.append(f"b={b}: only in {present_in}: {code}")
        if not ok and not report.witnesses:
            report.witnesses.append(f"b={b}: counts differ {counts}")
        report.agreement[b] = ok
    return report
