import random

import pytest

from hilb4n.orders import DEGREVLEX, LEX, BlockOrder, WeightOrder, compare_monomials, order_by_name
from hilb4n.poly import monomial_mul, monomials_of_degree


def test_degrevlex_examples():
    # x^2 vs x*y, x*t vs y^2
    assert compare_monomials((2, 0, 0, 0), (1, 1, 0, 0), DEGREVLEX) == 1
    assert compare_monomials((1, 0, 0, 1), (0, 2, 0, 0), DEGREVLEX) == -1


def test_lex_example():
    assert compare_monomials((1, 0, 0, 1), (0, 2, 0, 0), LEX) == 1


def test_equal_iff_identical():
    assert compare_monomials((1, 2, 0, 0), (1, 2, 0, 0), DEGREVLEX) == 0


def test_mismatched_lengths_rejected():
    with pytest.raises(ValueError):
        compare_monomials((1, 0), (1, 0, 0), DEGREVLEX)


@pytest.mark.parametrize(
    "order",
    [DEGREVLEX, LEX, WeightOrder((3, 1, 1, 0), DEGREVLEX), BlockOrder(1, LEX, DEGREVLEX)],
)
def test_multiplicativity(order):
    rng = random.Random(7)
    monos = [m for d in range(0, 9) for m in monomials_of_degree(d, 4)]
    for _ in range(300):
        a, b, c = (rng.choice(monos) for _ in range(3))
        cmp_ab = order.compare(a, b)
        cmp_shifted = order.compare(monomial_mul(a, c), monomial_mul(b, c))
        assert cmp_ab == cmp_shifted


def test_degrevlex_is_graded():
    rng = random.Random(11)
    for _ in range(200):
        d1, d2 = rng.randint(0, 6), rng.randint(0, 6)
        a = rng.choice(list(monomials_of_degree(d1, 4)))
        b = rng.choice(list(monomials_of_degree(d2, 4)))
        if d1 != d2:
            assert DEGREVLEX.compare(a, b) == (1 if d1 > d2 else -1)


def test_block_order_eliminates():
    order = BlockOrder(1, DEGREVLEX, DEGREVLEX)
    # any monomial with the first variable beats any without
    assert order.compare((1, 0, 0, 0), (0, 5, 5, 5)) == 1


def test_order_by_name():
    assert order_by_name("lex") is LEX
    with pytest.raises(ValueError):
        order_by_name("mystery")
