from fractions import Fraction

import pytest

from hilb4n.hilbert import hilbert_function, quotient_hilbert_polynomial
from hilb4n.ideals import Ideal, equal
from hilb4n.poly import LinearChange, apply_change, random_form, variables
from hilb4n.strata import (
    FOUR_N,
    PHI,
    CIShape,
    R3PrimeShape,
    R4Shape,
    R5Shape,
    R6Shape,
    RSFamilyShape,
    ShapeError,
    build_stratum_ideal,
    classify,
    dimension_table,
    factor_quadric_net,
    gcd_forms,
    point_ideal,
    rs_family_ideal,
    sample_stratum,
    sample_rs_family,
)

x, y, z, t = variables()


def test_gcd_examples(rng):
    assert gcd_forms(x * y, x * z) == x
    assert gcd_forms((x + y) * (y + z), (x + y) * (z + t)) == x + y
    f, g = random_form(rng, 2), random_form(rng, 2)
    d = gcd_forms(f, g)
    assert d.homogeneous_degree() in (0, 1, 2)


def test_gcd_of_generic_quadrics_is_one(rng):
    # coprimality certified by the graded dimension: dim (f,g)_3 = 8
    for _ in range(5):
        f, g = random_form(rng, 2), random_form(rng, 2)
        if gcd_forms(f, g).homogeneous_degree() == 0:
            assert hilbert_function(Ideal([f, g]), 3) == 8


def test_factor_quadric_net_examples():
    ell, L = factor_quadric_net([x * y, x * z, x * t])
    assert ell == x and [f.leading_monomial() for f in L]
    ell2, L2 = factor_quadric_net([x * x, x * y, x * z])
    assert ell2 == x
    assert factor_quadric_net([x * x, y * y, z * z]) is None


def test_factor_quadric_net_roundtrip(rng):
    for _ in range(5):
        ell = random_form(rng, 1)
        forms = [random_form(rng, 1) for _ in range(3)]
        try:
            result = factor_quadric_net([ell * f for f in forms])
        except ValueError:
            continue  # dependent draw
        assert result is not None
        ell_found, L = result
        rebuilt = Ideal([ell_found * f for f in L])
        assert equal(rebuilt, Ideal([ell * f for f in forms]))


def test_factor_quadric_net_wrong_size():
    with pytest.raises(ValueError):
        factor_quadric_net([x * y, x * z])


def test_build_examples_match_catalog(catalog):
    b4 = build_stratum_ideal(R4Shape(ell=x, ell1=x, ell2=y, q=z * z, p=y**4))
    assert equal(b4, catalog["B4"].ideal)
    b6 = build_stratum_ideal(R6Shape(ell=x, f=y**4, h=y, g=z * z))
    assert equal(b6, catalog["B6"].ideal)


def test_build_r5_case1_example():
    shape = R5Shape(case=1, ell=t, L=(x, y, z), ell1=x, ell2=y, h=x**4)
    I = build_stratum_ideal(shape)
    assert equal(I, Ideal([t * x, t * y, t * z, x**5, x**4 * y]))
    assert tuple(hilbert_function(I, n) for n in range(6)) == (0, 0, 3, 9, 19, 36)
    assert hilbert_function(Ideal([t * x, t * y, t * z]), 5) == 34


def test_shape_validation_names_clause():
    with pytest.raises(ShapeError, match="independent"):
        build_stratum_ideal(R4Shape(ell=x, ell1=y, ell2=y, q=z * z, p=y**4))
    with pytest.raises(ShapeError, match="divisible"):
        R3PrimeShape(ell=x, ell1=x, ell2=y, cubic=x * x * y).validate()
    with pytest.raises(ShapeError, match="common divisor"):
        CIShape(x * y, x * z).validate()
    with pytest.raises(ShapeError, match="must not lie"):
        R6Shape(ell=x, f=y**4, h=y, g=x * y).validate()


def test_sampler_contracts(rng):
    for label, reg in (("V", 3), ("R3'", 3), ("R4", 4), ("R5", 5), ("R6", 6)):
        I = sample_stratum(label, rng)
        assert tuple(hilbert_function(I, n) for n in range(9)) == PHI[reg]


def test_classify_examples(catalog, rng):
    rep = classify(catalog["B6"].ideal)
    assert (rep.regularity, rep.stratum) == (6, "R6")
    assert rep.components_certain == ("H_RS",)
    rep = classify(catalog["B4"].ideal)
    assert (rep.regularity, rep.stratum) == (4, "R4")
    assert rep.components_certain == ("H_RS",)
    I = sample_stratum("V", rng)
    rep = classify(I)
    assert (rep.stratum, rep.ci) == ("V", True)
    assert rep.components_certain == ("H_VA",)
    assert rep.components_unknown == ("H_RS",)


def test_classify_rejects_wrong_input(catalog):
    with pytest.raises(ValueError, match="4n"):
        classify(Ideal([x]))
    with pytest.raises(ValueError, match="saturated"):
        classify(Ideal([g * v for g in catalog["B3"].ideal.gens for v in (x, y, z, t)]))


def test_classify_is_change_invariant(rng):
    I = sample_stratum("R3'", rng)
    base = classify(I)
    for _ in range(5):
        g = LinearChange.random(rng, bound=6)
        moved = Ideal([apply_change(p, g) for p in I.gens])
        rep = classify(moved)
        assert (rep.stratum, rep.regularity, rep.components_certain) == (
            base.stratum,
            base.regularity,
            base.components_certain,
        )


def test_dimension_table_values():
    table = dimension_table()
    assert {name: e.dimension for name, e in table.items()} == {
        "V": 16,
        "R3'": 15,
        "R4": 23,
        "R5": 22,
        "R6": 21,
        "H1": 19,
        "Hq": 6,
        "Z": 23,
    }
    for entry in table.values():
        assert sum(v for _, v in entry.terms) == entry.dimension


def test_rs_family_ideal(rng):
    I = sample_rs_family(rng)
    assert quotient_hilbert_polynomial(I) == FOUR_N
    rep = classify(I)
    assert rep.stratum == "R4"


def test_rs_family_rejects_coincident_points():
    shape = RSFamilyShape(
        ell=x,
        f=y**4 + z**4 + t**4,
        pt1=(Fraction(0), Fraction(1), Fraction(0), Fraction(0)),
        pt2=(Fraction(0), Fraction(2), Fraction(0), Fraction(0)),
    )
    with pytest.raises(ShapeError, match="distinct"):
        rs_family_ideal(shape)


def test_rs_family_rejects_point_on_curve():
    shape = RSFamilyShape(
        ell=x,
        f=y**4,
        pt1=(Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
        pt2=(Fraction(1), Fraction(1), Fraction(1), Fraction(1)),
    )
    with pytest.raises(ShapeError, match="curve"):
        rs_family_ideal(shape)


def test_point_ideal():
    P = point_ideal((1, 2, 3, 4))
    assert all(g.homogeneous_degree() == 1 for g in P.gens)
    for g in P.gens:
        assert g.evaluate((1, 2, 3, 4)) == 0
