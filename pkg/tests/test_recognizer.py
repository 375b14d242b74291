import random

import pytest

from strongroman.graphs import Tree
from strongroman.recognizer import (
    BASE_K1_FULL,
    BASE_X_EMPTY,
    ReductionTrace,
    TraceStep,
    Triple,
    configuration_case,
    decide_in_S,
    find_locus,
    reduce,
    triple_for_tree,
    verify_trace,
)
from strongroman.solver import solve_report

from conftest import subsets, trees_of_order

K1 = Tree(1, ())
P4 = Tree(4, [(0, 1), (1, 2), (2, 3)])
P5 = Tree(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
K13C1 = Tree(4, [(1, 0), (1, 2), (1, 3)])  # star with center 1
K14 = Tree(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


class TestTriple:
    def test_validation(self):
        with pytest.raises(ValueError):
            Triple(P4, frozenset({0}), frozenset())  # x not inside y
        with pytest.raises(ValueError):
            Triple(P4, frozenset(), frozenset({9}))

    def test_canonical_key_is_isomorphism_invariant(self):
        a = Triple(Tree(3, [(0, 1), (1, 2)]), frozenset({0}), frozenset({0, 1}))
        b = Triple(Tree(3, [(2, 1), (1, 0)]), frozenset({2}), frozenset({2, 1}))
        assert a.canonical_key == b.canonical_key

    def test_canonicalized_idempotent(self):
        tr = triple_for_tree(K14)
        canon, _ = tr.canonicalized()
        again, mapping = canon.canonicalized()
        assert again == canon
        assert mapping == {v: v for v in range(canon.n)}


class TestFindLocus:
    def test_p4(self):
        loc = find_locus(triple_for_tree(P4))
        assert (loc.u, loc.v, loc.ws, loc.ell) == (2, 1, (0,), 1)

    def test_star_center_is_cut_vertex(self):
        loc = find_locus(triple_for_tree(K13C1))
        assert loc.v == 1
        assert loc.ell == 2
        assert len(loc.ws) == 2  # the two non-path leaves

    def test_k14(self):
        loc = find_locus(triple_for_tree(K14))
        assert loc.v == 0 and loc.ell == 3 and len(loc.ws) == 3

    def test_requires_three_marked(self):
        with pytest.raises(ValueError):
            find_locus(Triple(P4, frozenset({0, 3}), frozenset(range(4))))


class TestReduce:
    def test_p4_rejected(self):
        tr = triple_for_tree(P4)
        assert reduce(tr, find_locus(tr)) == []

    def test_star_case_a(self):
        tr = triple_for_tree(K13C1)
        kids = reduce(tr, find_locus(tr))
        assert len(kids) == 1
        child = kids[0]
        assert child.n == 1 and child.x == frozenset() and child.y == frozenset()

    def test_k14_case_b(self):
        tr = triple_for_tree(K14)
        kids = reduce(tr, find_locus(tr))
        assert len(kids) == 2
        assert [sorted(k.y) for k in kids] == [[], [0]]
        assert all(k.x == frozenset() for k in kids)

    def test_locus_triple_mismatch(self):
        with pytest.raises(ValueError, match="locus"):
            reduce(triple_for_tree(P5), find_locus(triple_for_tree(K14)))


class TestDecide:
    def test_base_cases(self):
        ok, trace = decide_in_S(triple_for_tree(K1))
        assert ok and trace.base == BASE_K1_FULL
        ok, trace = decide_in_S(Triple(K1, frozenset(), frozenset()))
        assert ok and trace.base == BASE_X_EMPTY
        ok, trace = decide_in_S(Triple(P4, frozenset(), frozenset()))
        assert ok and trace.base == BASE_X_EMPTY
        ok, _ = decide_in_S(Triple(P4, frozenset(), frozenset({2})))
        assert not ok
        ok, _ = decide_in_S(Triple(P4, frozenset({1}), frozenset({1})))
        assert not ok
        ok, _ = decide_in_S(Triple(P4, frozenset({0, 3}), frozenset(range(4))))
        assert not ok

    def test_star_accepts_one_step(self):
        ok, trace = decide_in_S(triple_for_tree(K13C1))
        assert ok
        assert len(trace.steps) == 1 and trace.steps[0].case == "a"

    def test_k14_accepts_case_b(self):
        ok, trace = decide_in_S(triple_for_tree(K14))
        assert ok and trace.steps[0].case == "b"

    def test_p5_rejected(self):
        ok, trace = decide_in_S(triple_for_tree(P5))
        assert not ok and trace.failure

    def test_wrong_y_rejected(self):
        # members with x a proper subset leave room to perturb y while
        # keeping x <= y <= V; uniqueness of the certificate set must reject
        rng = random.Random(77)
        checked = 0
        for n in range(3, 7):
            for t in trees_of_order(n):
                for x in subsets(n):
                    rep = solve_report(t, x)
                    if not rep.all_min_wrdfs_are_rdf:
                        continue
                    y_true = rep.y
                    candidates = sorted(y_true - x) + sorted(frozenset(range(n)) - y_true)
                    rng.shuffle(candidates)
                    for v in candidates[:2]:
                        wrong = y_true - {v} if v in y_true else y_true | {v}
                        ok, _ = decide_in_S(Triple(t, x, wrong))
                        assert not ok
                        checked += 1
        assert checked > 0

    def test_matches_oracle_small(self):
        # the broader sweeps live in the acceptance suite
        for n in range(1, 7):
            for t in trees_of_order(n):
                for x in subsets(n):
                    rep = solve_report(t, x)
                    ok, _ = decide_in_S(Triple(t, x, rep.y))
                    assert ok == rep.all_min_wrdfs_are_rdf


class TestVerifyTrace:
    def test_roundtrip(self):
        tr = triple_for_tree(K13C1)
        ok, trace = decide_in_S(tr)
        assert ok and verify_trace(tr, trace)

    def test_roundtrip_many(self):
        rng = random.Random(4)
        for n in range(1, 9):
            for t in trees_of_order(n):
                tr = triple_for_tree(t)
                ok, trace = decide_in_S(tr)
                if ok:
                    assert verify_trace(tr, trace)
                else:
                    assert not verify_trace(tr, trace)

    def test_corrupted_flag(self):
        tr = triple_for_tree(K13C1)
        _, trace = decide_in_S(tr)
        s = trace.steps[0]
        bad = ReductionTrace(
            (TraceStep(s.u, s.v, s.ws, s.ell, s.case, not s.y_prime_has_u, s.child_canonical),),
            trace.base,
            None,
        )
        assert not verify_trace(tr, bad)

    def test_corrupted_child_key(self):
        tr = triple_for_tree(K13C1)
        _, trace = decide_in_S(tr)
        s = trace.steps[0]
        bad = ReductionTrace(
            (TraceStep(s.u, s.v, s.ws, s.ell, s.case, s.y_prime_has_u, "(bogus)"),),
            trace.base,
            None,
        )
        assert not verify_trace(tr, bad)

    def test_empty_trace_base_case(self):
        tr = triple_for_tree(K1)
        assert verify_trace(tr, ReductionTrace((), BASE_K1_FULL, None))
        assert not verify_trace(tr, ReductionTrace((), BASE_X_EMPTY, None))

    def test_json_roundtrip(self):
        tr = triple_for_tree(K14)
        _, trace = decide_in_S(tr)
        again = ReductionTrace.from_json_dict(trace.to_json_dict())
        assert again == trace
        assert verify_trace(tr, again)


def test_configuration_case_examples():
    tr = triple_for_tree(K13C1)
    assert configuration_case(tr, 1, 0) == "a"
    assert configuration_case(tr, 0, 1) is None  # no branches at a leaf
    big = triple_for_tree(K14)
    assert configuration_case(big, 0, 1) == "b"


def test_scales_beyond_the_oracle_cap():
    from strongroman.generator import random_member, replay

    for seed in range(3):
        tr, steps = random_member(40, seed=seed)
        ok, trace = decide_in_S(tr)
        assert ok and verify_trace(tr, trace)
        assert replay(steps).canonical_key == tr.canonical_key
    path = triple_for_tree(Tree(120, [(i, i + 1) for i in range(119)]))
    ok, _ = decide_in_S(path)
    assert not ok
    star = triple_for_tree(Tree(80, [(0, i) for i in range(1, 80)]))
    ok, trace = decide_in_S(star)
    assert ok and len(trace.steps) == 1 and verify_trace(star, trace)
