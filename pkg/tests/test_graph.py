import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from builders import b111, path, shuffled
from stratcensus.census import brute_force_graphs
from stratcensus.graph import (
    Edge,
    StratGraph,
    are_isomorphic,
    black,
    canonical_code,
    is_tree,
    is_trivalent,
    validate,
    white,
)
from stratcensus.trees import enum_rooted, rooted_to_collapsible


def single(genus=0):
    return StratGraph.build([white("w", genus)], [])


class TestValidate:
    def test_single_white(self):
        assert validate(single()).accepted

    def test_white_white_edge(self):
        g = StratGraph.build([white("a"), white("c")], [Edge("a", "c", 1)])
        v = validate(g)
        assert not v.accepted
        assert v.codes == ["non-bipartite edge"]

    def test_label_zero(self):
        v = validate(path(0, 1))
        assert v.codes == ["nonpositive label"]

    def test_reasons_iff_rejected(self):
        g = StratGraph.build([white("a"), white("a"), black("b")], [Edge("a", "q", -1)])
        v = validate(g)
        assert not v.accepted and {"duplicate vertex id", "unknown vertex"} <= set(v.codes)

    def test_genus_on_black(self):
        from stratcensus.graph import Color, Vertex

        g = StratGraph.build([Vertex("b", Color.BLACK, 2)], [])
        assert validate(g).codes == ["black genus"]


class TestShape:
    def test_single_white_is_tree(self):
        assert is_tree(single())

    def test_path_is_tree(self):
        assert is_tree(path(2, 1))

    def test_parallel_edges_are_not_a_tree(self):
        g = StratGraph.build([white("w"), black("b")], [Edge("w", "b", 1), Edge("w", "b", 2)])
        assert validate(g).accepted
        assert not is_tree(g)

    @pytest.mark.parametrize(
        "labels, expected",
        [([3], True), ([1, 2], True), ([1, 1, 1], True), ([1, 1], False), ([2, 2], False), ([1, 1, 1, 1], False)],
    )
    def test_black_patterns(self, labels, expected):
        vs = [black("b")] + [white(f"w{i}") for i in range(len(labels))]
        es = [Edge(f"w{i}", "b", lab) for i, lab in enumerate(labels)]
        assert is_trivalent(StratGraph.build(vs, es)) is expected

    def test_single_white_counts_as_trivalent(self):
        assert is_trivalent(single())

    def test_two_isolated_whites_are_not(self):
        assert not is_trivalent(StratGraph.build([white("a"), white("c")], []))


class TestCanonicalCode:
    def test_relabel(self):
        g = path(2, 1)
        h = StratGraph.build(
            [white("q", 0), white("p", 0), black("z")], [Edge("p", "z", 1), Edge("q", "z", 2)]
        )
        assert canonical_code(g) == canonical_code(h)

    def test_label_order_does_not_matter(self):
        assert canonical_code(path(2, 1)) == canonical_code(path(1, 2))

    def test_genus_is_part_of_the_code(self):
        a = StratGraph.build([white("w", 0), black("b")], [Edge("w", "b", 3)])
        b = StratGraph.build([white("w", -1), black("b")], [Edge("w", "b", 3)])
        assert canonical_code(a) != canonical_code(b)

    def test_labels_are_part_of_the_code(self):
        assert canonical_code(path(2, 1)) != canonical_code(path(1, 1))

    def test_disconnected_raises(self):
        with pytest.raises(ValueError):
            canonical_code(StratGraph.build([white("a"), white("c")], []))

    def test_non_tree_code_is_invariant(self):
        g = StratGraph.build([white("w"), black("b")], [Edge("w", "b", 1), Edge("w", "b", 2)])
        h = StratGraph.build([black("x"), white("y")], [Edge("y", "x", 2), Edge("y", "x", 1)])
        assert canonical_code(g) == canonical_code(h)
        assert canonical_code(g).startswith("G")

    def test_isomorphic_self(self):
        assert are_isomorphic(b111(), b111())

    def test_different_sizes(self):
        assert not are_isomorphic(path(2, 1), b111())

    def test_two_collapsible_trees_on_three_whites_differ(self):
        a, b = (rooted_to_collapsible(t) for t in enum_rooted(3))
        assert not are_isomorphic(a, b)

    def test_code_is_stable(self):
        # rooted at the centroid black, children sorted by code
        assert canonical_code(path(2, 1)) == "Tb(1:w0(),2:w0())"

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=1, max_value=6), st.randoms(use_true_random=False))
    def test_relabel_invariance_property(self, n, rng):
        for g in (rooted_to_collapsible(t) for t in enum_rooted(n)):
            assert canonical_code(shuffled(g, rng)) == canonical_code(g)


def test_codes_separate_all_census_graphs():
    # distinct codes per b, and no code shared across different b
    seen = {}
    for b, graphs in brute_force_graphs(7).items():
        for code in graphs:
            assert code not in seen
            seen[code] = b


def test_handshake_identity_on_generated_graphs():
    for n in range(1, 8):
        for b, graphs in brute_force_graphs(n).items():
            for g in graphs.values():
                assert len(g.blacks) == n - 1 - b
                assert len(g.degree3_blacks()) == b
                assert all(g.degree(x.id) in (2, 3) for x in g.blacks)
