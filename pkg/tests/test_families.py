from fractions import Fraction

import pytest

from hilb4n.families import (
    FamilyError,
    ParamFamily,
    family_limit,
    family_limit_data,
    rs_degeneration,
    va_degeneration,
    weight_action_family,
    weight_limit,
)
from hilb4n.hilbert import hilbert_function, quotient_hilbert_polynomial
from hilb4n.ideals import Ideal, equal
from hilb4n.poly import Polynomial, variables
from hilb4n.strata import FOUR_N, R5Shape, build_stratum_ideal, sample_stratum

x, y, z, t = variables()


def _pencil(ell, ell1, ell2, p, q):
    """The family (ell*ell1 + a*q, ell*ell2 - a*p)."""
    a = Polynomial.variable(4, 5)
    return ParamFamily(
        ((ell * ell1).extend() + a * q.extend(), (ell * ell2).extend() - a * p.extend()),
        description="test pencil",
    )


def test_specialize_at_zero_gives_base_pencil():
    fam = _pencil(x, y, z, t * t, y * y)
    fiber = fam.specialize(0)
    assert equal(fiber, Ideal([x * y, x * z]))


def test_specialize_generic_is_complete_intersection():
    from hilb4n.strata import gcd_forms

    fam = _pencil(x, y, z, t * t, y * y)
    for value in (1, 2, 7):
        fiber = fam.specialize(value)
        assert gcd_forms(fiber.gens[0], fiber.gens[1]).homogeneous_degree() == 0


def test_specialize_degenerate_rejected():
    a = Polynomial.variable(4, 5)
    fam = ParamFamily((a * x.extend(),), "collapses at zero")
    with pytest.raises(FamilyError):
        fam.specialize(0)


def test_constant_family_limit(catalog):
    fam = ParamFamily.constant(catalog["B3"].ideal)
    assert equal(family_limit(fam, 0), catalog["B3"].ideal)
    assert equal(family_limit(fam, "inf"), catalog["B3"].ideal)


def test_pencil_limit_recovers_shared_factor_ideal():
    # limit at 0 of (x*y + a*y^2, x*z - a*t^2) is (x*y, x*z, y*t^2 + y^2*z)
    fam = _pencil(x, y, z, t * t, y * y)
    expected = Ideal([x * y, x * z, y * (t * t) + y * y * z])
    assert equal(family_limit(fam, 0), expected)


def test_weight_limit_examples(catalog):
    assert equal(weight_limit(Ideal([x + y]), (0, 1, 0, 0), 0), Ideal([x]))
    assert equal(weight_limit(catalog["B4"].ideal, (1, 0, 0, 0), "inf"), catalog["B4"].ideal)


def test_weight_limit_trivial_weights_rejected():
    with pytest.raises(ValueError):
        weight_action_family(Ideal([x + y]), (1, 1, 1, 1))


def test_family_generators_validated():
    a = Polynomial.variable(4, 5)
    with pytest.raises(ValueError, match="homogeneous"):
        ParamFamily((x.extend() + a * (y * y).extend(),), "mixed degrees")
    with pytest.raises(ValueError, match="parameter"):
        ParamFamily((x,), "wrong ring")


def test_va_degeneration_example():
    I = Ideal([x * y, x * z, y * t * t + y * y * z])
    family, limit = va_degeneration(I)
    assert equal(limit, I)
    assert len(family.generators) == 2


def test_va_degeneration_b3(catalog):
    family, limit = va_degeneration(catalog["B3"].ideal)
    assert equal(limit, catalog["B3"].ideal)


def test_va_degeneration_rejects_ci(rng):
    I = sample_stratum("V", rng)
    with pytest.raises(ValueError, match="R3'"):
        va_degeneration(I)


def test_rs_degeneration_case1_example():
    I = Ideal([t * x, t * y, t * z, x**5, x**4 * y])
    chain = rs_degeneration(I)
    assert len(chain.steps) == 1
    last = chain.steps[-1]
    assert last.report.stratum == "R6"
    # the saturated limit contains a linear form
    assert min(g.homogeneous_degree() for g in chain.terminal.gens) == 1
    # before the final saturation, the limit contains the distinguished cone
    xcone = Ideal([x * x, x * y, x * z, x * t**4])
    assert last.raw_limit.contains_ideal(xcone)


def test_rs_degeneration_case2_nonzero_torus_term():
    shape = R5Shape(
        case=2, ell=x, L=(x, y, z), ell1=y, ell2=z,
        h=y**4 + z**4 + t**4, alpha=Fraction(2), w=t,
    )
    I = build_stratum_ideal(shape)
    chain = rs_degeneration(I)
    assert chain.steps[-1].report.stratum == "R6"
    xcone = Ideal([x * x, x * y, x * z, x * t**4])
    assert chain.steps[-1].raw_limit.contains_ideal(xcone)


def test_rs_degeneration_two_step_chain(catalog):
    chain = rs_degeneration(catalog["B5"].ideal)
    assert len(chain.steps) == 2
    assert chain.steps[0].report.stratum == "R5"
    assert chain.steps[1].report.stratum == "R6"
    # every step limit is saturated with the right quotient Hilbert polynomial
    for step in chain.steps:
        assert quotient_hilbert_polynomial(step.limit) == FOUR_N


def test_rs_degeneration_rejects_wrong_stratum(catalog):
    with pytest.raises(ValueError, match="R5"):
        rs_degeneration(catalog["B4"].ideal)


def test_semicontinuity_of_limits(rng):
    I = sample_stratum("R3'", rng)
    family, limit = va_degeneration(I, rng)
    fiber = family.specialize(17)
    for n in range(9):
        assert hilbert_function(limit, n) >= hilbert_function(fiber, n)


def test_limit_preserves_quotient_hp(rng):
    I = sample_stratum("V", rng)
    fam = weight_action_family(I, (2, 1, 0, 0))
    data = family_limit_data(fam, 0, rng)
    assert data.quotient_hp == FOUR_N
    assert quotient_hilbert_polynomial(data.saturated) == FOUR_N
