import pytest

from hilb4n.groebner import (
    buchberger,
    buchberger_with_reps,
    division_quotients,
    gb_syzygies,
    normal_form_poly,
    reduce_by_linear_forms,
)
from hilb4n.orders import DEGREVLEX, LEX
from hilb4n.poly import Polynomial, monomial_divides, random_form, variables

x, y, z, t = variables()
B3 = [x * x, x * y, y**3]


def _is_reduced_basis(gb, order=DEGREVLEX):
    lms = [g.leading_monomial(order) for g in gb]
    for i, g in enumerate(gb):
        assert g.leading_coefficient(order) == 1
        for e in g.terms:
            assert not any(
                monomial_divides(lms[k], e) for k in range(len(gb)) if k != i
            ), "tail divisible by another leading monomial"
        assert not any(
            monomial_divides(lms[k], lms[i]) for k in range(len(gb)) if k != i
        )


def _spoly(f, g, order=DEGREVLEX):
    from hilb4n.poly import monomial_div, monomial_lcm

    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = monomial_lcm(lf, lg)
    return f.mul_monomial(monomial_div(lcm, lf)) * g.leading_coefficient(order) - g.mul_monomial(
        monomial_div(lcm, lg)
    ) * f.leading_coefficient(order)


def test_normal_form_examples():
    assert normal_form_poly(x * x * y, B3).is_zero()
    assert normal_form_poly(t**3, B3) == t**3
    assert normal_form_poly(y**3 + z * t * t, B3) == z * t * t


def test_normal_form_membership_difference():
    # f - nf(f) lies in the ideal
    f = x * x * z + y**3 * t - z * t * t * t
    nf = normal_form_poly(f, B3)
    assert normal_form_poly(f - nf, B3).is_zero()


def test_monomial_ideal_is_own_basis():
    gb = buchberger([x * x, x * y, x * z * z, y**4])
    assert sorted(g.leading_monomial() for g in gb) == sorted(
        [(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 2, 0), (0, 4, 0, 0)]
    )


def test_linear_algebra_degree_one():
    gb = buchberger([x, x + y])
    assert gb == [x, y]


def test_buchberger_criterion_oracle():
    # every S-polynomial of the output reduces to zero, and the basis is reduced
    gens = [x * x - y * t, x * y - z * t]
    gb = buchberger(gens)
    _is_reduced_basis(gb)
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            assert normal_form_poly(_spoly(gb[i], gb[j]), gb).is_zero()
    # the input generators live in the ideal
    for g in gens:
        assert normal_form_poly(g, gb).is_zero()


def test_reduced_basis_unique_under_permutation(rng):
    for _ in range(15):
        gens = [random_form(rng, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(gens) == buchberger(shuffled)


@pytest.mark.parametrize("order", [DEGREVLEX, LEX])
def test_membership_of_random_combinations(order, rng):
    gens = [random_form(rng, 2), random_form(rng, 2)]
    gb = buchberger(gens, order)
    combo = gens[0] * random_form(rng, 2) + gens[1] * random_form(rng, 2)
    assert normal_form_poly(combo, gb, order).is_zero()


def test_division_quotients_identity(rng):
    gens = [random_form(rng, 2), random_form(rng, 1)]
    f = random_form(rng, 3)
    r, quots = division_quotients(f, gens)
    recomposed = r
    for q, g in zip(quots, gens):
        recomposed = recomposed + q * g
    assert recomposed == f


def test_buchberger_with_reps_identity(rng):
    gens = [random_form(rng, 2), random_form(rng, 2), random_form(rng, 1)]
    gb, reps = buchberger_with_reps(gens)
    assert gb == buchberger(gens)
    for basis_elem, row in zip(gb, reps):
        total = Polynomial.zero(4)
        for coeff, g in zip(row, gens):
            total = total + coeff * g
        assert total == basis_elem


def test_gb_syzygies_annihilate(rng):
    gens = [random_form(rng, 2), random_form(rng, 2)]
    gb = buchberger(gens)
    for row in gb_syzygies(gb):
        total = Polynomial.zero(4)
        for coeff, g in zip(row, gb):
            total = total + coeff * g
        assert total.is_zero()


def test_degree_truncated_basis_agrees_low_degrees(rng):
    # a degree-truncated run still resolves every graded piece below the bound
    from hilb4n.ideals import Ideal

    gens = [random_form(rng, 2), random_form(rng, 2), random_form(rng, 3)]
    full = Ideal(gens)
    truncated = buchberger(gens, DEGREVLEX, max_degree=4)
    trunc_ideal = Ideal(truncated)
    for n in range(5):
        assert trunc_ideal.graded_piece(n).dim == full.graded_piece(n).dim


def test_reduce_by_linear_forms_consistency(rng):
    gens = [x + y, random_form(rng, 2), random_form(rng, 3)]
    linear, rest = reduce_by_linear_forms(gens)
    assert [g.homogeneous_degree() for g in linear] == [1]
    combined = sorted(
        linear + buchberger(rest), key=lambda p: DEGREVLEX.key(p.leading_monomial())
    )
    direct = sorted(buchberger(gens), key=lambda p: DEGREVLEX.key(p.leading_monomial()))
    assert combined == direct
