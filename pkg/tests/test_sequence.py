import pytest

from ecctree import (
    BadParameters,
    EccSequence,
    InvalidSequence,
    NotReducible,
    ParseError,
    build_extremal,
    build_Tdn,
    counterexample_pair,
    ecc_profile,
    from_edge_list,
    is_caterpillar,
    is_isomorphic,
    of_tree,
    parse_sequence,
    path,
    seq_reduce,
    sequences_of_order,
    star,
    validate_sorted,
)
from ecctree.enumeration import free_trees

from conftest import PAIR11_T1_EDGES, PAIR11_T2_EDGES


class TestValidateSorted:
    def test_star(self):
        assert validate_sorted([1, 2, 2, 2]) == EccSequence(1, (3,))

    def test_chair(self):
        # realised by the 5-vertex chair
        chair = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
        assert sorted(ecc_profile(chair).eccentricities) == [2, 2, 3, 3, 3]
        assert validate_sorted([2, 2, 3, 3, 3]) == EccSequence(2, (3,))

    def test_center_condition(self):
        with pytest.raises(InvalidSequence) as info:
            validate_sorted([2, 2, 2, 3, 3])
        assert info.value.reason == "CenterCondition"
        realised = {tuple(sorted(ecc_profile(t).eccentricities)) for t in free_trees(5)}
        assert (2, 2, 2, 3, 3) not in realised

    def test_cat13(self, cat13):
        s = validate_sorted(sorted(ecc_profile(cat13).eccentricities))
        assert s == EccSequence(4, (4, 3, 4))

    def test_single_edge(self):
        assert validate_sorted([1, 1]) == EccSequence(1, ())
        with pytest.raises(InvalidSequence):
            validate_sorted([1, 2])

    @pytest.mark.parametrize(
        "seq, reason",
        [
            ([1], "TooShort"),
            ([2, 1, 2], "NotSorted"),
            ([0, 1, 1], "NotSorted"),
            ([2, 3, 3, 4], "MultiplicityGap"),
            ([2, 3, 3, 3, 4], "MultiplicityGap"),
            ([1, 1, 2], "CenterCondition"),
            ([2, 2, 2, 3, 3, 3], "CenterCondition"),
        ],
    )
    def test_rejection_reasons(self, seq, reason):
        with pytest.raises(InvalidSequence) as info:
            validate_sorted(seq)
        assert info.value.reason == reason

    def test_derived_fields(self):
        s = EccSequence(4, (4, 3, 4))
        assert (s.order, s.diameter, s.length, s.center_count) == (13, 7, 4, 2)
        assert s.full() == [4, 4, 5, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7]
        assert str(s) == "4;4,3,4"

    @pytest.mark.parametrize("r, mults", [(1, (1,)), (3, (2,)), (1, (2, 2)), (0, ())])
    def test_compact_invariants(self, r, mults):
        with pytest.raises(InvalidSequence):
            EccSequence(r, mults)


class TestParse:
    def test_forms(self):
        assert parse_sequence("2,2,3,3,3") == EccSequence(2, (3,))
        assert parse_sequence(" 4;4,3,4 ") == EccSequence(4, (4, 3, 4))
        assert parse_sequence("1;") == EccSequence(1, ())

    @pytest.mark.parametrize("text", ["a,b", "2;x", ""])
    def test_garbage(self, text):
        with pytest.raises(ParseError):
            parse_sequence(text)


class TestOfTree:
    def test_examples(self, p4, cat13, spider222):
        assert of_tree(p4) == EccSequence(2, (2,))
        assert of_tree(cat13) == EccSequence(4, (4, 3, 4))
        assert sorted(ecc_profile(spider222).eccentricities) == [2, 3, 3, 3, 4, 4, 4]
        assert of_tree(spider222) == EccSequence(2, (3, 3))


class TestBuildExtremal:
    def test_cat13(self, cat13):
        t = build_extremal(EccSequence(4, (4, 3, 4)))
        assert t.n == 13
        assert is_isomorphic(t, cat13)
        # pendants: 2 at v3, 1 at v2, 2 at v1
        assert [t.degree(v) - 2 for v in (1, 2, 3)] == [2, 1, 2]

    def test_bare_path(self):
        assert build_extremal(EccSequence(2, (2,))) == path(4)

    def test_star(self):
        assert is_isomorphic(build_extremal(EccSequence(1, (3,))), star(4))

    def test_round_trip_all_sequences(self):
        for n in range(2, 15):
            for s in sequences_of_order(n):
                t = build_extremal(s)
                assert of_tree(t) == s
                assert is_caterpillar(t)[0]
                prof = ecc_profile(t)
                assert (prof.radius, prof.diameter) == (s.radius, s.diameter)


class TestTdn:
    def test_n7_d4(self):
        t = build_Tdn(7, 4)
        assert of_tree(t) == EccSequence(2, (4, 2))
        assert t.degree(2) == 4

    def test_path(self):
        for d in range(2, 9):
            assert is_isomorphic(build_Tdn(d + 1, d), path(d + 1))

    def test_pair11(self, pair11):
        assert build_Tdn(11, 7) == pair11[0]
        assert sorted(build_Tdn(11, 7).edges) == sorted(PAIR11_T1_EDGES)

    @pytest.mark.parametrize("n, d", [(5, 1), (5, 5), (4, 7)])
    def test_bad(self, n, d):
        with pytest.raises(BadParameters):
            build_Tdn(n, d)


class TestSeqReduce:
    def test_examples(self):
        assert seq_reduce(EccSequence(4, (4, 3, 4))) == EccSequence(4, (4, 5, 2))
        assert seq_reduce(EccSequence(2, (3, 3))) == EccSequence(2, (4, 2))

    def test_not_reducible(self):
        with pytest.raises(NotReducible):
            seq_reduce(EccSequence(4, (5, 2, 2)))
        with pytest.raises(NotReducible):
            seq_reduce(EccSequence(1, (5,)))

    def test_iteration_reaches_Tdn(self):
        for n in range(4, 15):
            for s in sequences_of_order(n):
                steps = 0
                while True:
                    try:
                        nxt = seq_reduce(s)
                    except NotReducible:
                        break
                    assert (nxt.order, nxt.radius, nxt.diameter) == (s.order, s.radius, s.diameter)
                    s = nxt
                    steps += 1
                assert steps <= max(s.length - 2, 0)
                assert all(m == 2 for m in s.mults[1:])
                if s.diameter >= 2:
                    assert is_isomorphic(build_extremal(s), build_Tdn(s.order, s.diameter))


class TestCounterexamplePair:
    def test_pair11(self, pair11):
        t1, t2 = counterexample_pair(11, 7)
        assert sorted(t1.edges) == sorted(PAIR11_T1_EDGES)
        assert sorted(t2.edges) == sorted(PAIR11_T2_EDGES)

    def test_n8_d5(self):
        t1, t2 = counterexample_pair(8, 5)
        assert t1.degree(2) == 4 and t1.degree(3) == 2
        assert t2.degree(2) == 3 and t2.degree(3) == 3
        assert of_tree(t1) == of_tree(t2)

    def test_bad(self):
        for d in range(3, 8):
            with pytest.raises(BadParameters):
                counterexample_pair(d + 2, d)
        with pytest.raises(BadParameters):
            counterexample_pair(10, 2)

    def test_shared_sequence_not_isomorphic(self):
        for d in range(3, 10):
            for n in range(d + 3, d + 8):
                t1, t2 = counterexample_pair(n, d)
                assert sorted(ecc_profile(t1).eccentricities) == sorted(ecc_profile(t2).eccentricities)
                assert not is_isomorphic(t1, t2)
                assert is_isomorphic(t1, build_extremal(of_tree(t1)))


def test_sequences_of_order_matches_validator():
    # independent oracle: run the validator on every nondecreasing list
    from itertools import combinations_with_replacement

    for n in range(3, 9):
        accepted = set()
        for seq in combinations_with_replacement(range(1, n), n):
            try:
                accepted.add(validate_sorted(seq))
            except InvalidSequence:
                pass
        assert accepted == set(sequences_of_order(n))
