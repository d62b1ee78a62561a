import pytest

from hilb4n.borel import (
    borel_closure,
    enumerate_borel_ideals,
    is_strongly_stable,
    lex_ideal,
)
from hilb4n.gin import is_saturated
from hilb4n.hilbert import HilbertPolynomial, hilbert_function, quotient_hilbert_polynomial
from hilb4n.ideals import Ideal, equal
from hilb4n.poly import count_monomials, monomials_of_degree, variables
from hilb4n.strata import FOUR_N

x, y, z, t = variables()


def test_is_strongly_stable_examples(catalog):
    assert is_strongly_stable(catalog["B4"].ideal)
    assert not is_strongly_stable(Ideal([x * x, y * y]))
    assert is_strongly_stable(Ideal([x]))


def test_is_strongly_stable_rejects_nonmonomial():
    with pytest.raises(ValueError):
        is_strongly_stable(Ideal([x + y]))


def test_borel_closure_examples():
    closed = borel_closure([y**3])
    assert equal(closed, Ideal([x**3, x * x * y, x * y * y, y**3]))
    assert equal(borel_closure([x]), Ideal([x]))


def test_borel_closure_empty_rejected():
    with pytest.raises(ValueError):
        borel_closure([])


def test_borel_closure_minimality(rng):
    target = (0, 4, 2, 0)  # y^4 z^2
    closed = borel_closure([target])
    assert is_strongly_stable(closed)
    # minimal among random strongly stable ideals containing the monomial
    monos = [m for d in (4, 5, 6) for m in monomials_of_degree(d, 4)]
    for _ in range(20):
        extra = [rng.choice(monos) for _ in range(rng.randint(0, 3))]
        other = borel_closure([target] + extra)
        assert other.contains_ideal(closed)


def test_enumeration_is_the_catalog(catalog):
    found = enumerate_borel_ideals(FOUR_N)
    assert len(found) == 4
    keys = {tuple(I.monomial_generators()) for I in found}
    expected = {tuple(catalog[k].ideal.monomial_generators()) for k in catalog}
    assert keys == expected


def test_enumeration_outputs_verified(catalog):
    for I in enumerate_borel_ideals(FOUR_N):
        assert is_strongly_stable(I)
        assert is_saturated(I)
        assert quotient_hilbert_polynomial(I) == FOUR_N


def test_enumeration_small_polynomials():
    point = enumerate_borel_ideals(HilbertPolynomial([1]))
    assert len(point) == 1 and equal(point[0], Ideal([x, y, z]))
    line = enumerate_borel_ideals(HilbertPolynomial([1, 1]))
    assert len(line) == 1 and equal(line[0], Ideal([x, y]))


def test_lex_ideal_examples(catalog):
    assert equal(lex_ideal(FOUR_N), catalog["B6"].ideal)
    assert equal(lex_ideal(HilbertPolynomial([1])), Ideal([x, y, z]))
    assert equal(lex_ideal(HilbertPolynomial([1, 1])), Ideal([x, y]))


def test_lex_ideal_is_lex_greatest():
    # each graded piece of the lex point is spanned by the initial lex segment
    # of its dimension, so it is degreewise lex-greatest
    from hilb4n.ideals import graded_monomial_basis

    L = lex_ideal(FOUR_N)
    assert any(equal(L, I) for I in enumerate_borel_ideals(FOUR_N))
    for n in range(1, 8):
        dim = hilbert_function(L, n)
        piece = L.graded_piece(n)
        assert piece.dim == dim
        idx = {e: i for i, e in enumerate(graded_monomial_basis(n, 4))}
        for m in sorted(monomials_of_degree(n, 4), reverse=True)[:dim]:
            v = [0] * count_monomials(n, 4)
            v[idx[m]] = 1
            assert piece.contains(v)


def test_catalog_regularities(catalog):
    for name, entry in catalog.items():
        assert entry.regularity == int(name[1])
        assert max(sum(g) for g in entry.ideal.monomial_generators()) == entry.regularity
