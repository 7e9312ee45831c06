import itertools
import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecctree import (
    BadLabel,
    NotATree,
    ParseError,
    all_pairs_distances,
    canonical_form,
    ecc_profile,
    from_edge_list,
    is_caterpillar,
    is_isomorphic,
    leaves,
    longest_path,
    parse_edge_list,
    to_edge_list,
)
from ecctree.enumeration import free_trees, prufer_decode

from conftest import random_trees, to_nx

prufer_words = st.integers(3, 20).flatmap(
    lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)
)


class TestFromEdgeList:
    def test_single_edge(self):
        t = from_edge_list(2, [(0, 1)])
        assert t.adj == ((1,), (0,))

    def test_path(self, p4):
        assert from_edge_list(4, [(0, 1), (1, 2), (2, 3)]) == p4
        assert p4.edges == [(0, 1), (1, 2), (2, 3)]

    def test_triangle_rejected(self):
        with pytest.raises(NotATree):
            from_edge_list(4, [(0, 1), (1, 2), (0, 2)])

    @pytest.mark.parametrize(
        "n, edges",
        [
            (3, [(0, 1)]),
            (3, [(0, 1), (0, 1)]),
            (3, [(0, 0), (1, 2)]),
            (1, []),
        ],
    )
    def test_malformed(self, n, edges):
        with pytest.raises(NotATree):
            from_edge_list(n, edges)

    def test_bad_label(self):
        with pytest.raises(BadLabel):
            from_edge_list(3, [(0, 1), (1, 3)])


def test_distances_path_and_star(p4, k13):
    assert list(all_pairs_distances(p4)[0]) == [0, 1, 2, 3]
    d = all_pairs_distances(k13)
    assert d[1, 2] == 2
    assert all(d[0, j] == 1 for j in (1, 2, 3))


def test_distances_cat13(cat13):
    assert all_pairs_distances(cat13)[0, 7] == 7


@given(prufer_words)
@settings(max_examples=60, deadline=None)
def test_distances_match_networkx(word):
    t = prufer_decode(word)
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(t)))
    d = all_pairs_distances(t)
    assert d.dtype == np.int32
    assert all(d[u, v] == ref[u][v] for u in range(t.n) for v in range(t.n))


class TestEccProfile:
    def test_p4(self, p4):
        prof = ecc_profile(p4)
        assert prof.eccentricities == (3, 2, 2, 3)
        assert (prof.radius, prof.diameter, prof.center) == (2, 3, {1, 2})

    def test_star(self, k13):
        prof = ecc_profile(k13)
        assert prof.eccentricities == (1, 2, 2, 2)
        assert (prof.radius, prof.diameter) == (1, 2)

    def test_cat13(self, cat13):
        # oracle: networkx eccentricity
        expected = sorted(nx.eccentricity(to_nx(cat13)).values())
        assert expected == [4, 4, 5, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7]
        assert sorted(ecc_profile(cat13).eccentricities) == expected

    def test_radius_diameter_relation(self):
        for n in range(2, 11):
            for t in free_trees(n):
                prof = ecc_profile(t)
                assert prof.radius == -(-prof.diameter // 2)
                assert len(prof.center) == (1 if prof.diameter % 2 == 0 else 2)


def test_leaves(p4, k13, cat13):
    assert leaves(p4) == {0, 3}
    assert leaves(k13) == {1, 2, 3}
    assert leaves(cat13) == {0, 7, 8, 9, 10, 11, 12}


class TestLongestPath:
    def test_examples(self, p4, k13, cat13):
        assert longest_path(p4) == [0, 1, 2, 3]
        lp = longest_path(k13)
        assert len(lp) == 3 and lp[1] == 0
        assert len(longest_path(cat13)) == 8

    def test_length_is_diameter(self):
        for t in random_trees(200, 2, 25, seed=1):
            lp = longest_path(t)
            assert len(lp) - 1 == all_pairs_distances(t).max()
            assert all(b in t.adj[a] for a, b in zip(lp, lp[1:]))

    def test_deterministic(self, cat13):
        assert longest_path(cat13) == longest_path(cat13)


def _caterpillar_brute(t):
    inner = {v for v in range(t.n) if t.degree(v) > 1}
    g = to_nx(t)
    for a, b in itertools.combinations_with_replacement(range(t.n), 2):
        if inner <= set(nx.shortest_path(g, a, b)):
            return True
    return False


class TestCaterpillar:
    def test_cat13(self, cat13):
        ok, backbone = is_caterpillar(cat13)
        assert ok and backbone == [1, 2, 3, 4, 5, 6]

    def test_spider(self):
        spider = from_edge_list(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        assert is_caterpillar(spider) == (False, None)

    def test_p2(self):
        assert is_caterpillar(from_edge_list(2, [(0, 1)]))[0]

    def test_exhaustive_against_brute_force(self):
        for n in range(2, 10):
            for t in free_trees(n):
                assert is_caterpillar(t)[0] == _caterpillar_brute(t)


class TestCanonicalForm:
    def test_relabel(self, p4):
        other = from_edge_list(4, [(2, 0), (0, 3), (3, 1)])
        assert is_isomorphic(p4, other)

    def test_path_vs_star(self, p4, k13):
        assert not is_isomorphic(p4, k13)

    def test_pair11_pair(self, pair11):
        assert not is_isomorphic(*pair11)

    def test_random_relabelings(self):
        rng = random.Random(7)
        for t in random_trees(1000, 2, 20, seed=3):
            form = canonical_form(t)
            for _ in range(5):
                perm = list(range(t.n))
                rng.shuffle(perm)
                assert canonical_form(t.relabel(perm)) == form

    def test_distinct_classes_distinct_forms(self):
        for n in range(2, 9):
            forms = [canonical_form(t) for t in free_trees(n)]
            assert len(set(forms)) == len(forms)

    @given(prufer_words, prufer_words)
    @settings(max_examples=80, deadline=None)
    def test_agrees_with_networkx(self, w1, w2):
        t1, t2 = prufer_decode(w1), prufer_decode(w2)
        expected = t1.n == t2.n and nx.is_isomorphic(to_nx(t1), to_nx(t2))
        assert is_isomorphic(t1, t2) == expected


class TestEdgeListFormat:
    def test_round_trip(self, cat13):
        text = to_edge_list(cat13, ["comment"])
        assert text.startswith("# comment\n13\n")
        again = parse_edge_list(text)
        assert again == cat13
        assert to_edge_list(again, ["comment"]) == text

    def test_comments_and_blanks(self):
        t = parse_edge_list("# hi\n3\n\n0 1\n# mid\n2 1\n")
        assert t.edges == [(0, 1), (1, 2)]

    @pytest.mark.parametrize("text", ["", "a b\n", "3 4\n0 1\n", "3\n0 1 2\n1 2\n"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_edge_list(text)

    def test_not_a_tree(self):
        with pytest.raises(NotATree):
            parse_edge_list("3\n0 1\n")
