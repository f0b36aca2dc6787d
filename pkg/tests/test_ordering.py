"""Tests for path and module orderings"""

import itertools
import random

import pytest

from src.errors import SemanticError
from src.instances import random_problem
from src.ordering import Cmp, OrderMode, OrderSpec
from src.quiver_paths import ZERO, Quiver, compose


@pytest.fixture
def loops():
    return Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])


def test_degree_direction(loops):
    x, xx = loops.path("x"), loops.path("x", "x")
    neg = OrderSpec.for_quiver(loops, OrderMode.NEGATIVE_DEGREE)
    pos = OrderSpec.for_quiver(loops, OrderMode.POSITIVE_DEGREE)
    assert neg.compare_paths(x, xx) == Cmp.GT
    assert pos.compare_paths(x, xx) == Cmp.LT
    assert neg.compare_paths(loops.trivial("v"), x) == Cmp.GT
    assert pos.compare_paths(loops.trivial("v"), x) == Cmp.LT
    assert neg.is_negative and not pos.is_negative


def test_precedence(loops):
    x, y = loops.path("x"), loops.path("y")
    default = OrderSpec.for_quiver(loops)
    assert default.compare_paths(x, y) == Cmp.LT
    flipped = OrderSpec.for_quiver(loops, precedence=["y", "x"])
    assert flipped.compare_paths(x, y) == Cmp.GT


def test_left_lexicographic(loops):
    order = OrderSpec.for_quiver(loops)
    assert order.compare_paths(loops.path("x", "y"), loops.path("y", "x")) == Cmp.LT
    assert order.compare_paths(loops.path("y", "x"), loops.path("y", "y")) == Cmp.LT
    assert order.compare_paths(loops.path("x"), loops.path("x")) == Cmp.EQ


def test_trivial_paths_follow_vertex_order():
    q = Quiver(["u", "v"], [("a", "u", "v")])
    order = OrderSpec.for_quiver(q)
    assert order.compare_paths(q.trivial("u"), q.trivial("v")) == Cmp.LT


def test_module_ties_prefer_smaller_index(loops):
    order = OrderSpec.for_quiver(loops)
    x = loops.path("x")
    assert order.compare_module_monomials((1, x), (0, x)) == Cmp.LT
    assert order.compare_signatures((0, x), (1, x)) == Cmp.GT
    # the path decides before the index
    assert order.compare_module_monomials((0, loops.path("x", "x")), (1, x)) == Cmp.LT


def test_bad_precedence(loops):
    with pytest.raises(SemanticError):
        OrderSpec.for_quiver(loops, precedence=["x"])
    with pytest.raises(SemanticError):
        OrderSpec.for_quiver(loops, precedence=["x", "z"])


def test_to_dict(loops):
    order = OrderSpec.for_quiver(loops, OrderMode.POSITIVE_DEGREE, ["y", "x"])
    assert order.to_dict() == {"mode": "deglex", "precedence": ["y", "x"]}


MODES = [OrderMode.NEGATIVE_DEGREE, OrderMode.POSITIVE_DEGREE]


@pytest.fixture
def mixed():
    return Quiver(["u", "v"], [("a", "u", "v"), ("b", "v", "u"), ("c", "u", "u"), ("d", "v", "v")])


@pytest.mark.parametrize("mode", MODES)
def test_total_order_on_random_triples(mixed, mode):
    order = OrderSpec.for_quiver(mixed, mode, ["d", "a", "c", "b"])
    rng = random.Random(1)
    paths = mixed.paths_up_to(3)
    for _ in range(2000):
        p, q, r = rng.choice(paths), rng.choice(paths), rng.choice(paths)
        assert order.compare_paths(p, q) == -order.compare_paths(q, p)
        assert (order.compare_paths(p, q) == Cmp.EQ) == (p == q)
        if order.compare_paths(p, q) >= 0 and order.compare_paths(q, r) >= 0:
            assert order.compare_paths(p, r) >= 0


@pytest.mark.parametrize("mode", MODES)
def test_multiplicative(mixed, mode):
    """b1 > b2 implies b1·b > b2·b and b'·b1 > b'·b2 whenever both products are paths"""
    order = OrderSpec.for_quiver(mixed, mode, ["c", "b", "d", "a"])
    paths = mixed.paths_up_to(2)
    checked = 0
    for b1, b2 in itertools.permutations(paths, 2):
        if order.compare_paths(b1, b2) != Cmp.GT:
            continue
        for b in paths:
            right = (compose(b1, b), compose(b2, b))
            if ZERO not in right:
                assert order.compare_paths(*right) == Cmp.GT
                checked += 1
            left = (compose(b, b1), compose(b, b2))
            if ZERO not in left:
                assert order.compare_paths(*left) == Cmp.GT
                checked += 1
    assert checked > 100


@pytest.mark.parametrize("mode", MODES)
def test_module_order_respects_path_order(mixed, mode):
    order = OrderSpec.for_quiver(mixed, mode)
    paths = mixed.paths_up_to(2)
    for b1, b2 in itertools.permutations(paths, 2):
        if order.compare_paths(b1, b2) == Cmp.GT:
            for i in range(3):
                assert order.compare_module_monomials((i, b1), (i, b2)) == Cmp.GT


@pytest.mark.parametrize("mode", MODES)
def test_small_cofactors_keep_module_order(mode):
    """v_i·b1 > v_j·b2 and c small for b1 give v_i·b1·c > v_j·LM(b2·c) unless b2·c = 0"""
    rng = random.Random(23)
    checked = 0
    for _ in range(15):
        algebra = random_problem(rng, mode=mode, max_dim=10).algebra
        order = algebra.order
        for b1, b2 in itertools.product(algebra.stdmon, repeat=2):
            for i, j in itertools.product(range(2), repeat=2):
                if order.compare_module_monomials((i, b1), (j, b2)) != Cmp.GT:
                    continue
                for c in algebra.small_cofactors(b1):
                    product = algebra.multiply_paths(b2, c)
                    if not product:
                        continue
                    lhs = (i, compose(b1, c))
                    rhs = (j, algebra.leading_path(product))
                    assert order.compare_module_monomials(lhs, rhs) == Cmp.GT
                    checked += 1
    assert checked > 0
