"""Regularity strata of the Hilbert scheme of quotient Hilbert polynomial 4n.

Shape constructors and validators for every ideal pattern occurring in the
stratification (complete intersections, the non-CI regularity-3 ideals, and
the regularity 4/5/6 strata), random samplers, the stratum classifier, and
the dimension ledger with recomputed parameter counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .gin import is_saturated
from .hilbert import (
    HilbertPolynomial,
    hilbert_function,
    quotient_hilbert_polynomial,
    regularity,
)
from .ideals import (
    Ideal,
    _coords,
    divide_exact,
    graded_monomial_basis,
    intersect,
)
from .linalg import Subspace, rank
from .poly import (
    NVARS,
    Polynomial,
    count_monomials,
    linear_form,
    random_form,
    variables,
)

FOUR_N = HilbertPolynomial([0, 4])

PHI = {
    3: (0, 0, 2, 8, 19, 36, 60, 92, 133),
    4: (0, 0, 2, 8, 19, 36, 60, 92, 133),
    5: (0, 0, 3, 9, 19, 36, 60, 92, 133),
    6: (0, 1, 4, 10, 20, 36, 60, 92, 133),
}

STRATA = ("V", "R3'", "R4", "R5", "R6")


class ShapeError(ValueError):
    """A shape invariant failed; the message names the violated clause."""


def _require(cond: bool, clause: str):
    if not cond:
        raise ShapeError(clause)


def _span_contains(forms: Sequence[Polynomial], f: Polynomial, degree: int) -> bool:
    if f.is_zero():
        return True
    space = Ideal(list(forms)).graded_piece(degree) if forms else None
    monos = graded_monomial_basis(degree, f.nvars)
    index = {e: i for i, e in enumerate(monos)}
    if space is None:
        return False
    return space.contains(_coords(f, index))


def _linear_span_contains(forms: Sequence[Polynomial], f: Polynomial) -> bool:
    monos = graded_monomial_basis(1, f.nvars)
    index = {e: i for i, e in enumerate(monos)}
    space = Subspace([_coords(g, index) for g in forms], len(monos))
    return space.contains(_coords(f, index))


def _independent_linear(forms: Sequence[Polynomial]) -> bool:
    monos = graded_monomial_basis(1, forms[0].nvars)
    index = {e: i for i, e in enumerate(monos)}
    return rank([_coords(g, index) for g in forms]) == len(forms)


def _subring_contains(frame: Sequence[Polynomial], f: Polynomial, degree: int) -> bool:
    """Membership of a degree-d form in the subring generated by linear forms."""
    if f.is_zero():
        return True
    from .poly import monomials_of_degree

    products = []
    for e in monomials_of_degree(degree, len(frame)):
        p = Polynomial.constant(1, f.nvars)
        for form, k in zip(frame, e):
            for _ in range(k):
                p = p * form
        products.append(p)
    monos = graded_monomial_basis(degree, f.nvars)
    index = {e: i for i, e in enumerate(monos)}
    space = Subspace([_coords(p, index) for p in products], len(monos))
    return space.contains(_coords(f, index))


# ---------------------------------------------------------------------------
# gcd of forms and quadric-net factorization

def gcd_forms(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor, computed as f*g divided by the generator
    of the principal intersection (f) cap (g)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("gcd of forms requires nonzero inputs")
    if f.is_monomial() and g.is_monomial():
        from .poly import monomial_gcd

        e = monomial_gcd(f.leading_monomial(), g.leading_monomial())
        return Polynomial.monomial(e)
    inter = intersect(Ideal([f]), Ideal([g]))
    gens = inter.gens
    if len(gens) != 1:
        raise ArithmeticError("intersection of principal ideals must be principal")
    product = f * g
    gcd = divide_exact(product, gens[0])
    if gcd is None:
        raise ArithmeticError("lcm must divide the product of the forms")
    return gcd.monic()


def factor_quadric_net(
    quadrics: Sequence[Polynomial],
) -> Optional[Tuple[Polynomial, List[Polynomial]]]:
    """Factor a 3-dimensional space of quadrics as (linear form) * (3-space of
    linear forms), when possible."""
    basis = list(quadrics)
    if len(basis) != 3:
        raise ValueError("a quadric net is given by three independent quadrics")
    monos = graded_monomial_basis(2, basis[0].nvars)
    index = {e: i for i, e in enumerate(monos)}
    if rank([_coords(q, index) for q in basis]) != 3:
        raise ValueError("quadrics are not independent")
    for i in range(3):
        for j in range(i + 1, 3):
            g = gcd_forms(basis[i], basis[j])
            d = g.homogeneous_degree()
            if d == 0:
                return None
            if d == 1:
                quotients = [divide_exact(q, g) for q in basis]
                if any(q is None for q in quotients):
                    return None
                if not _independent_linear(quotients):
                    raise ArithmeticError("factored net must give independent linear forms")
                return g.monic(), [q.monic() for q in quotients]
    raise ArithmeticError("independent quadrics cannot be pairwise proportional")


# ---------------------------------------------------------------------------
# shapes

@dataclass(frozen=True)
class CIShape:
    f: Polynomial
    g: Polynomial

    def validate(self):
        _require(self.f.homogeneous_degree() == 2, "f must be a quadric")
        _require(self.g.homogeneous_degree() == 2, "g must be a quadric")
        _require(
            gcd_forms(self.f, self.g).homogeneous_degree() == 0,
            "f and g must have no common divisor",
        )


@dataclass(frozen=True)
class R3PrimeShape:
    ell: Polynomial
    ell1: Polynomial
    ell2: Polynomial
    cubic: Polynomial

    def validate(self):
        for name, form in (("ell", self.ell), ("ell1", self.ell1), ("ell2", self.ell2)):
            _require(form.homogeneous_degree() == 1, f"{name} must be a nonzero linear form")
        _require(_independent_linear([self.ell1, self.ell2]), "ell1, ell2 must be independent")
        _require(self.cubic.homogeneous_degree() == 3, "the extra generator must be a cubic")
        _require(
            _span_contains([self.ell1, self.ell2], self.cubic, 3),
            "the cubic must lie in (ell1, ell2)",
        )
        _require(divide_exact(self.cubic, self.ell) is None, "the cubic must not be divisible by ell")

    @staticmethod
    def from_pq(ell, ell1, ell2, p, q) -> "R3PrimeShape":
        return R3PrimeShape(ell, ell1, ell2, ell1 * p + ell2 * q)


@dataclass(frozen=True)
class R4Shape:
    ell: Polynomial
    ell1: Polynomial
    ell2: Polynomial
    q: Polynomial
    p: Polynomial

    def validate(self):
        for name, form in (("ell", self.ell), ("ell1", self.ell1), ("ell2", self.ell2)):
            _require(form.homogeneous_degree() == 1, f"{name} must be a nonzero linear form")
        _require(_independent_linear([self.ell1, self.ell2]), "ell1, ell2 must be independent")
        _require(self.q.homogeneous_degree() == 2, "q must be a quadric")
        _require(
            not _span_contains([self.ell1, self.ell2], self.q, 2),
            "q must not lie in (ell1, ell2)",
        )
        _require(self.p.homogeneous_degree() == 4, "p must be a quartic")
        _require(
            _span_contains([self.ell1, self.ell2, self.q], self.p, 4),
            "p must lie in (ell1, ell2, q)",
        )
        _require(divide_exact(self.p, self.ell) is None, "p must not be divisible by ell")


@dataclass(frozen=True)
class R5Shape:
    case: int
    ell: Polynomial
    L: Tuple[Polynomial, Polynomial, Polynomial]
    ell1: Polynomial
    ell2: Polynomial
    h: Polynomial
    alpha: Fraction = Fraction(0)
    w: Optional[Polynomial] = None  # distinguished complement variable, case 2

    def complement_frame(self) -> List[Polynomial]:
        if self.case == 1:
            return list(self.L)
        selected = [self.ell]
        completion: List[Polynomial] = []
        for b in self.L:
            if _independent_linear(selected + [b]):
                selected.append(b)
                completion.append(b)
        return completion + ([self.w] if self.w is not None else [])

    def validate(self):
        _require(self.case in (1, 2), "case must be 1 or 2")
        _require(self.ell.homogeneous_degree() == 1, "ell must be a nonzero linear form")
        _require(len(self.L) == 3 and _independent_linear(list(self.L)), "L must be 3-dimensional")
        _require(self.h.homogeneous_degree() == 4, "h must be a quartic")
        if self.case == 1:
            _require(
                not _linear_span_contains(list(self.L), self.ell), "case 1 needs ell outside L"
            )
            _require(self.alpha == 0, "case 1 carries no torus term")
        else:
            _require(_linear_span_contains(list(self.L), self.ell), "case 2 needs ell inside L")
            _require(self.w is not None and self.w.homogeneous_degree() == 1, "case 2 needs w")
            _require(
                not _linear_span_contains(list(self.L), self.w),
                "w must complement L",
            )
        frame = self.complement_frame()
        _require(len(frame) == 3 and _independent_linear(frame), "complement frame degenerate")
        _require(_linear_span_contains(frame, self.ell1), "ell1 must lie in the complement ring")
        _require(_linear_span_contains(frame, self.ell2), "ell2 must lie in the complement ring")
        _require(_independent_linear([self.ell1, self.ell2]), "ell1, ell2 must be independent")
        _require(_subring_contains(frame, self.h, 4), "h must lie in the complement ring")
        if self.case == 2 and self.alpha != 0:
            _require(
                _linear_span_contains(list(self.L), self.ell2),
                "with a nonzero torus term, ell2 must lie in the designated 2-space",
            )


@dataclass(frozen=True)
class R6Shape:
    ell: Polynomial
    f: Polynomial
    h: Polynomial
    g: Polynomial

    def validate(self):
        _require(self.ell.homogeneous_degree() == 1, "ell must be a nonzero linear form")
        _require(self.f.homogeneous_degree() == 4, "f must be a quartic")
        _require(divide_exact(self.f, self.ell) is None, "f must not be divisible by ell")
        _require(self.h.homogeneous_degree() == 1, "h must be a nonzero linear form")
        _require(not _linear_span_contains([self.ell], self.h), "h must not be proportional to ell")
        _require(self.g.homogeneous_degree() == 2, "g must be a quadric")
        _require(
            not _span_contains([self.ell, self.h], self.g, 2),
            "g must not lie in (ell, h)",
        )


@dataclass(frozen=True)
class RSFamilyShape:
    ell: Polynomial
    f: Polynomial
    pt1: Tuple[Fraction, ...]
    pt2: Tuple[Fraction, ...]

    def validate(self):
        _require(self.ell.homogeneous_degree() == 1, "ell must be a nonzero linear form")
        _require(self.f.homogeneous_degree() == 4, "f must be a quartic")
        _require(divide_exact(self.f, self.ell) is None, "f must not be divisible by ell")
        for name, pt in (("pt1", self.pt1), ("pt2", self.pt2)):
            _require(len(pt) == NVARS and any(pt), f"{name} must be a point of projective space")
        _require(not _proportional(self.pt1, self.pt2), "the two points must be distinct")
        for name, pt in (("pt1", self.pt1), ("pt2", self.pt2)):
            on_curve = self.ell.evaluate(pt) == 0 and self.f.evaluate(pt) == 0
            _require(not on_curve, f"{name} must avoid the curve")


def _proportional(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    return rank([list(a), list(b)]) < 2


# ---------------------------------------------------------------------------
# building ideals from shapes

def shape_stratum(shape) -> Tuple[str, int]:
    if isinstance(shape, CIShape):
        return "V", 3
    if isinstance(shape, R3PrimeShape):
        return "R3'", 3
    if isinstance(shape, R4Shape):
        return "R4", 4
    if isinstance(shape, R5Shape):
        return "R5", 5
    if isinstance(shape, R6Shape):
        return "R6", 6
    raise TypeError(f"not a stratum shape: {shape!r}")


def shape_generators(shape) -> List[Polynomial]:
    if isinstance(shape, CIShape):
        return [shape.f, shape.g]
    if isinstance(shape, R3PrimeShape):
        return [shape.ell * shape.ell1, shape.ell * shape.ell2, shape.cubic]
    if isinstance(shape, R4Shape):
        return [
            shape.ell * shape.ell1,
            shape.ell * shape.ell2,
            shape.ell * shape.q,
            shape.p,
        ]
    if isinstance(shape, R5Shape):
        gens = [shape.ell * b for b in shape.L]
        f = shape.ell1 * shape.h
        if shape.case == 2 and shape.alpha != 0:
            f = f + (shape.ell * shape.w**4).scale(shape.alpha)
        gens += [f, shape.ell2 * shape.h]
        return gens
    if isinstance(shape, R6Shape):
        return [shape.ell, shape.f * shape.h, shape.f * shape.g]
    raise TypeError(f"not a stratum shape: {shape!r}")


def build_stratum_ideal(shape, check: bool = True) -> Ideal:
    """The ideal a validated shape denotes; checks the Hilbert-function and
    regularity contract of its stratum."""
    shape.validate()
    label, reg = shape_stratum(shape)
    ideal = Ideal(shape_generators(shape))
    if check:
        values = tuple(hilbert_function(ideal, n) for n in range(9))
        if values != PHI[reg]:
            raise ShapeError(
                f"shape of stratum {label} has Hilbert function {values}, expected {PHI[reg]}"
            )
        actual = regularity(ideal)
        if actual != reg:
            raise ShapeError(f"shape of stratum {label} has regularity {actual}, expected {reg}")
    return ideal


# ---------------------------------------------------------------------------
# random samplers

_MAX_DRAWS = 200


def _random_independent_linears(rng, count: int, bound: int = 5) -> List[Polynomial]:
    for _ in range(_MAX_DRAWS):
        forms = [random_form(rng, 1, bound=bound) for _ in range(count)]
        if _independent_linear(forms):
            return forms
    raise ArithmeticError("failed to draw independent linear forms")


def sample_shape(label: str, rng: random.Random, bound: int = 5):
    """A random valid shape for the given stratum, by rejection."""
    for _ in range(_MAX_DRAWS):
        try:
            if label == "V":
                shape = CIShape(random_form(rng, 2, bound=bound), random_form(rng, 2, bound=bound))
            elif label == "R3'":
                ell, ell1, ell2 = (
                    random_form(rng, 1, bound=bound),
                    *_random_independent_linears(rng, 2, bound),
                )
                shape = R3PrimeShape.from_pq(
                    ell, ell1, ell2, random_form(rng, 2, bound=bound), random_form(rng, 2, bound=bound)
                )
            elif label == "R4":
                ell = random_form(rng, 1, bound=bound)
                ell1, ell2 = _random_independent_linears(rng, 2, bound)
                q = random_form(rng, 2, bound=bound)
                p = (
                    ell1 * random_form(rng, 3, bound=bound)
                    + ell2 * random_form(rng, 3, bound=bound)
                    + q * random_form(rng, 2, bound=bound)
                )
                shape = R4Shape(ell, ell1, ell2, q, p)
            elif label == "R5":
                shape = _sample_r5(rng, bound)
            elif label == "R6":
                ell, h = _random_independent_linears(rng, 2, bound)
                shape = R6Shape(
                    ell, random_form(rng, 4, bound=bound), h, random_form(rng, 2, bound=bound)
                )
            else:
                raise ValueError(f"unknown stratum {label!r}; choose from {STRATA}")
            shape.validate()
            return shape
        except ShapeError:
            continue
    raise ArithmeticError(f"rejection sampling for stratum {label} exhausted")


def _sample_r5(rng: random.Random, bound: int) -> R5Shape:
    case = rng.choice((1, 2))
    frame_all = _random_independent_linears(rng, 4, bound)
    if case == 1:
        ell, L = frame_all[0], tuple(frame_all[1:])
        frame = list(L)
        w = None
        alpha = Fraction(0)
    else:
        ell = frame_all[0]
        L = (ell, frame_all[1], frame_all[2])
        w = frame_all[3]
        frame = [frame_all[1], frame_all[2], w]
        alpha = Fraction(0) if rng.random() < 0.5 else Fraction(rng.randint(1, bound))
    # with alpha = 0, half the samples avoid the complement variable entirely,
    # which keeps the torus term absent in every renormalization
    planar = case == 2 and alpha == 0 and rng.random() < 0.5
    coeff_sets = []
    for idx in (
        (0, 1) if planar else (0, 1, 2),
        (0, 1) if planar or (case == 2 and alpha != 0) else (0, 1, 2),
    ):
        coeffs = [Fraction(0)] * 3
        while not any(coeffs):
            coeffs = [
                Fraction(rng.randint(-bound, bound)) if i in idx else Fraction(0)
                for i in range(3)
            ]
        coeff_sets.append(coeffs)
    ell1 = sum((f.scale(c) for f, c in zip(frame, coeff_sets[0])), Polynomial.zero(NVARS))
    ell2 = sum((f.scale(c) for f, c in zip(frame, coeff_sets[1])), Polynomial.zero(NVARS))
    h3 = random_form(rng, 4, nvars=3, bound=bound,
                     var_subset=(0, 1) if planar else None)
    h = h3.substitute(frame)
    return R5Shape(case=case, ell=ell, L=L, ell1=ell1, ell2=ell2, h=h, alpha=alpha, w=w)


def sample_stratum_with_shape(label: str, rng: random.Random, bound: int = 5):
    """A random valid (shape, ideal) pair; degenerate draws are rejected."""
    for _ in range(_MAX_DRAWS):
        shape = sample_shape(label, rng, bound)
        try:
            return shape, build_stratum_ideal(shape)
        except ShapeError:
            continue
    raise ArithmeticError(f"rejection sampling for stratum {label} exhausted")


def sample_stratum(label: str, rng: random.Random, bound: int = 5) -> Ideal:
    """A random ideal of the stratum with integer coefficients; the shape
    contract (Hilbert function and regularity) is asserted."""
    return sample_stratum_with_shape(label, rng, bound)[1]


# ---------------------------------------------------------------------------
# the family of plane-quartic-plus-two-points ideals

def point_ideal(pt: Sequence) -> Ideal:
    pt = [Fraction(c) for c in pt]
    if len(pt) != NVARS or not any(pt):
        raise ValueError("a point needs a nonzero coordinate 4-tuple")
    pivot = next(i for i, c in enumerate(pt) if c)
    gens = []
    for i in range(NVARS):
        if i == pivot:
            continue
        coeffs = [Fraction(0)] * NVARS
        coeffs[i] = pt[pivot]
        coeffs[pivot] = -pt[i]
        gens.append(linear_form(coeffs))
    return Ideal(gens)


def rs_family_ideal(shape: RSFamilyShape) -> Ideal:
    """(ell, f) intersected with two point ideals; quotient Hilbert polynomial
    4n is asserted."""
    shape.validate()
    plane_curve = Ideal([shape.ell, shape.f])
    result = intersect(intersect(plane_curve, point_ideal(shape.pt1)), point_ideal(shape.pt2))
    if quotient_hilbert_polynomial(result) != FOUR_N:
        raise ArithmeticError("family member must have quotient Hilbert polynomial 4n")
    return result


def sample_rs_family(rng: random.Random, bound: int = 5) -> Ideal:
    """A generic member of the plane-quartic-plus-two-points family: the
    points avoid the plane of the curve, not just the curve itself."""
    for _ in range(_MAX_DRAWS):
        try:
            ell = random_form(rng, 1, bound=bound)
            f = random_form(rng, 4, bound=bound)
            pt1 = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(NVARS))
            pt2 = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(NVARS))
            if ell.evaluate(pt1) == 0 or ell.evaluate(pt2) == 0:
                continue
            shape = RSFamilyShape(ell, f, pt1, pt2)
            return rs_family_ideal(shape)
        except (ShapeError, ValueError):
            continue
    raise ArithmeticError("rejection sampling for the curve-plus-points family exhausted")


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class StratumReport:
    regularity: int
    stratum: str
    hilbert_values: Tuple[int, ...]
    ci: bool
    components_certain: Tuple[str, ...]
    components_unknown: Tuple[str, ...]

    def to_dict(self) -> Dict:
        return {
            "regularity": self.regularity,
            "stratum": self.stratum,
            "hilbert_values": list(self.hilbert_values),
            "ci": self.ci,
            "components": list(self.components_certain),
            "components_unknown": list(self.components_unknown),
        }


def graded_basis_polynomials(I: Ideal, n: int) -> List[Polynomial]:
    monos = graded_monomial_basis(n, I.nvars)
    piece = I.graded_piece(n)
    return [Polynomial({monos[i]: c for i, c in enumerate(row)}, I.nvars) for row in piece.rows]


def classify(I: Ideal) -> StratumReport:
    """Regularity stratum and component memberships of a Hilbert scheme point.

    Regularity 3 points lie on the complete-intersection component (CI points
    by definition, the rest by degeneration); regularity 4, 5, 6 points lie on
    the lex-point component (its closure is the regularity-4 closure).
    Membership in the other component is reported as unknown.
    """
    if quotient_hilbert_polynomial(I) != FOUR_N:
        raise ValueError("classification requires quotient Hilbert polynomial 4n")
    if not is_saturated(I):
        raise ValueError("classification requires a saturated ideal")
    reg = regularity(I)
    if reg not in (3, 4, 5, 6):
        raise ArithmeticError(f"impossible regularity {reg} for this Hilbert scheme")
    values = tuple(hilbert_function(I, n) for n in range(8))
    ci = False
    if reg == 3:
        quadrics = graded_basis_polynomials(I, 2)
        if len(quadrics) != 2:
            raise ArithmeticError("a regularity-3 point must have two quadric generators")
        ci = gcd_forms(quadrics[0], quadrics[1]).homogeneous_degree() == 0
        stratum = "V" if ci else "R3'"
        certain, unknown = ("H_VA",), ("H_RS",)
    else:
        stratum = f"R{reg}"
        certain, unknown = ("H_RS",), ("H_VA",)
    return StratumReport(
        regularity=reg,
        stratum=stratum,
        hilbert_values=values,
        ci=ci,
        components_certain=certain,
        components_unknown=unknown,
    )


# ---------------------------------------------------------------------------
# the dimension ledger

@dataclass(frozen=True)
class DimensionEntry:
    name: str
    dimension: int
    terms: Tuple[Tuple[str, int], ...]

    def derivation(self) -> str:
        return " + ".join(f"{label}={value}" for label, value in self.terms)


def _grass_dim(k: int, n: int) -> int:
    return k * (n - k)


def _proj_dim(n: int) -> int:
    return n - 1


def dimension_table() -> Dict[str, DimensionEntry]:
    """Dimensions of the strata and auxiliary spaces, each recomputed from
    Grassmannian / projective-space dimensions and graded piece counts."""
    x, y, z, t = variables()
    dim_p1 = count_monomials(1, NVARS)
    dim_p2 = count_monomials(2, NVARS)
    dim_p4 = count_monomials(4, NVARS)

    # representative graded dimensions, computed by the engine
    line = Ideal([y, z])  # (ell1, ell2) for ell1=y, ell2=z
    cubic_choices = hilbert_function(line, 3) - hilbert_function(Ideal([x * y, x * z]), 3)
    conic = Ideal([y, z, t * t])  # (ell1, ell2, q) with q outside (ell1, ell2)
    quartic_choices = hilbert_function(conic, 4) - hilbert_function(
        Ideal([x * y, x * z, x * t * t]), 4
    )
    q_choices = dim_p2 - hilbert_function(line, 2)
    f_choices = dim_p4 - hilbert_function(Ideal([x]), 4)
    h_choices = dim_p1 - 1
    g_choices = dim_p2 - hilbert_function(Ideal([x, y]), 2)

    entries = [
        DimensionEntry("V", _grass_dim(2, dim_p2), (("Grass(2,P2)", _grass_dim(2, dim_p2)),)),
        DimensionEntry(
            "R3'",
            _proj_dim(dim_p1) + _grass_dim(2, dim_p1) + _proj_dim(cubic_choices),
            (
                ("P(P1)", _proj_dim(dim_p1)),
                ("Grass(2,P1)", _grass_dim(2, dim_p1)),
                ("P(cubics)", _proj_dim(cubic_choices)),
            ),
        ),
        DimensionEntry(
            "Hq",
            _grass_dim(2, dim_p1) + _proj_dim(q_choices),
            (("Grass(2,P1)", _grass_dim(2, dim_p1)), ("P(quadrics)", _proj_dim(q_choices))),
        ),
        DimensionEntry(
            "R4",
            _proj_dim(dim_p1) + (_grass_dim(2, dim_p1) + _proj_dim(q_choices)) + _proj_dim(quartic_choices),
            (
                ("P(P1)", _proj_dim(dim_p1)),
                ("Hq", _grass_dim(2, dim_p1) + _proj_dim(q_choices)),
                ("P(quartics)", _proj_dim(quartic_choices)),
            ),
        ),
        DimensionEntry(
            "H1",
            _proj_dim(dim_p1) + _grass_dim(2, dim_p1 - 1) + _proj_dim(f_choices),
            (
                ("P(P1)", _proj_dim(dim_p1)),
                ("Grass(2,P1/ell)", _grass_dim(2, dim_p1 - 1)),
                ("P(P4/ell*P3)", _proj_dim(f_choices)),
            ),
        ),
        DimensionEntry(
            "R5",
            _proj_dim(dim_p1) + _grass_dim(2, dim_p1 - 1) + _proj_dim(f_choices) + 3,
            (
                ("H1", _proj_dim(dim_p1) + _grass_dim(2, dim_p1 - 1) + _proj_dim(f_choices)),
                ("fibre", 3),
            ),
        ),
        DimensionEntry(
            "R6",
            _proj_dim(dim_p1) + _proj_dim(f_choices) + _proj_dim(h_choices) + _proj_dim(g_choices),
            (
                ("P(P1)", _proj_dim(dim_p1)),
                ("P(P4/ell*P3)", _proj_dim(f_choices)),
                ("P(P1/ell)", _proj_dim(h_choices)),
                ("P(P2/(ell,h))", _proj_dim(g_choices)),
            ),
        ),
        DimensionEntry(
            "Z",
            _proj_dim(dim_p1) + _proj_dim(f_choices) + 3 + 3,
            (
                ("P(P1)", _proj_dim(dim_p1)),
                ("P(P4/ell*P3)", _proj_dim(f_choices)),
                ("point1", 3),
                ("point2", 3),
            ),
        ),
    ]
    return {e.name: e for e in entries}
