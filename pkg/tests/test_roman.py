import itertools
import random

import pytest

from strongroman.graphs import Tree
from strongroman.roman import (
    Assignment,
    MoveError,
    is_rdf,
    is_wrdf,
    is_wrdf_x,
    is_x_dominating,
    move,
)

from conftest import all_graphs_upto

P2 = Tree(2, [(0, 1)])
P3 = Tree(3, [(0, 1), (1, 2)])


def A(g, *vals):
    return Assignment(g, tuple(vals))


class TestAssignment:
    def test_weight_and_digits(self):
        f = A(P3, 0, 2, 0)
        assert f.weight == 2
        assert f.digits() == "020"
        assert Assignment.from_digits(P3, "020") == f
        assert f.weight_on({1, 2}) == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            A(P3, 0, 1)
        with pytest.raises(ValueError):
            A(P3, 0, 3, 0)


class TestMove:
    def test_p2(self):
        assert move(A(P2, 1, 0), 0, 1).values == (0, 1)

    def test_p3_from_two(self):
        assert move(A(P3, 0, 2, 0), 1, 0).values == (1, 1, 0)

    def test_target_at_two(self):
        with pytest.raises(MoveError):
            move(A(P3, 0, 2, 2), 1, 2)

    def test_source_empty(self):
        with pytest.raises(MoveError):
            move(A(P3, 0, 0, 1), 0, 1)

    def test_same_vertex(self):
        with pytest.raises(MoveError):
            move(A(P3, 1, 0, 0), 0, 0)

    def test_involution(self):
        rng = random.Random(3)
        for _ in range(200):
            g = P3
            vals = tuple(rng.randint(0, 2) for _ in range(3))
            f = Assignment(g, vals)
            v, u = rng.sample(range(3), 2)
            if f.values[v] >= 1 and f.values[u] <= 1:
                assert move(move(f, v, u), u, v) == f


class TestXDominating:
    def test_vacuous(self):
        assert is_x_dominating((), (), P3)

    def test_center(self):
        assert is_x_dominating({1}, range(3), P3)

    def test_leaf_fails(self):
        assert not is_x_dominating({0}, range(3), P3)

    def test_bad_vertex(self):
        with pytest.raises(ValueError):
            is_x_dominating({7}, range(3), P3)


class TestRdf:
    def test_center_two(self):
        assert is_rdf(P3, range(3), A(P3, 0, 2, 0))

    def test_no_two_neighbor(self):
        assert not is_rdf(P3, range(3), A(P3, 1, 0, 1))

    def test_vacuous_x(self):
        assert is_rdf(P3, (), A(P3, 0, 0, 0))


class TestWrdf:
    def test_p2(self):
        assert is_wrdf(P2, range(2), (), A(P2, 1, 0))

    def test_p3_center_one(self):
        assert not is_wrdf(P3, range(3), (), A(P3, 0, 1, 0))

    def test_p3_two_leaves(self):
        assert is_wrdf(P3, range(3), (), A(P3, 1, 0, 1))

    def test_single_set_alias(self):
        for vals in itertools.product((0, 1, 2), repeat=3):
            f = Assignment(P3, vals)
            assert is_wrdf_x(P3, range(3), f) == is_wrdf(P3, range(3), (), f)

    def test_overlapping_sets_rejected(self):
        with pytest.raises(ValueError):
            is_wrdf(P3, {0, 1}, {1}, A(P3, 1, 1, 1))

    def test_empty_sets_accept_everything(self):
        for vals in itertools.product((0, 1, 2), repeat=3):
            assert is_wrdf(P3, (), (), Assignment(P3, vals))

    def test_every_rdf_is_wrdf_all_small_graphs(self):
        # over every graph with at most 5 vertices and every assignment,
        # with the full vertex set as the constraint
        for g in all_graphs_upto(5):
            x = range(g.n)
            for vals in itertools.product((0, 1, 2), repeat=g.n):
                f = Assignment(g, vals)
                if is_rdf(g, x, f):
                    assert is_wrdf(g, x, (), f)

    def test_three_set_form_splits_domination_target(self):
        # a vertex in x1 needs rescuing, but only x0 needs to stay dominated
        g = Tree(3, [(0, 1), (1, 2)])
        f = A(g, 1, 0, 0)
        assert is_wrdf(g, {0, 1}, (), f)
        assert is_wrdf(g, {0}, {1}, f)
        assert not is_wrdf(g, {0}, {2}, f)  # vertex 2 has no positive neighbor
