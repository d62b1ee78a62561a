"""One-parameter families of ideals and exact flat limits.

A family lives in the ring k[x,y,z,t,a] with generators homogeneous in the
geometric variables; the parameter a has its own exponent slot.  The limit at
a -> 0 is the Hilbert-scheme limit: the saturation of the family by a,
specialized at 0, then saturated by the irrelevant ideal.  It is computed
degreewise: each graded piece of the a-saturated family is a free module over
k[a], and its fibre at 0 is the exact limit of the moving graded pieces,
obtained by integer-echelon elimination with division by a on collapse.
Limits at infinity substitute a -> 1/a and clear denominators first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .hilbert import HilbertPolynomial, gotzmann_number, quotient_hilbert_polynomial
from .ideals import (
    Ideal,
    _coords,
    divide_exact,
    graded_monomial_basis,
    equal,
    saturate_irrelevant,
)
from .linalg import Subspace
from .orders import Exponent
from .poly import (
    NVARS,
    LinearChange,
    Polynomial,
    count_monomials,
    monomial_mul,
    monomials_of_degree,
    variables,
)
from .strata import (
    R5Shape,
    StratumReport,
    build_stratum_ideal,
    classify,
    factor_quadric_net,
    gcd_forms,
    graded_basis_polynomials,
)

PARAM = NVARS  # index of the parameter variable in the extended ring
FAMILY_NVARS = NVARS + 1
_LIMIT_STEP_CAP = 20000


class FamilyError(ValueError):
    """A family violated its flatness or shape preconditions."""


@dataclass(frozen=True)
class ParamFamily:
    """Ideal generators over the ring extended by one parameter."""

    generators: Tuple[Polynomial, ...]
    description: str = ""

    def __post_init__(self):
        for g in self.generators:
            if g.nvars != FAMILY_NVARS:
                raise ValueError("family generators must carry the parameter slot")
            if g and self.geometric_degree(g) is None:
                raise ValueError(f"family generator is not homogeneous in x,y,z,t: {g!r}")

    @staticmethod
    def geometric_degree(g: Polynomial) -> Optional[int]:
        degs = {sum(e[:NVARS]) for e in g.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    @staticmethod
    def constant(I: Ideal, description: str = "constant family") -> "ParamFamily":
        return ParamFamily(tuple(g.extend() for g in I.gens), description)

    def specialize(self, value) -> Ideal:
        """Substitute the parameter; not automatically saturated."""
        value = Fraction(value)
        gens = []
        for g in self.generators:
            terms: Dict[Exponent, Fraction] = {}
            for e, c in g.terms.items():
                coeff = c * value ** e[PARAM]
                if coeff:
                    key = e[:NVARS]
                    terms[key] = terms.get(key, Fraction(0)) + coeff
            p = Polynomial(terms, NVARS)
            if p:
                gens.append(p)
        if not gens:
            raise FamilyError(f"family degenerates at parameter {value}")
        return Ideal(gens, NVARS)

    def invert_parameter(self) -> "ParamFamily":
        """Substitute a -> 1/a and clear denominators generator by generator."""
        gens = []
        for g in self.generators:
            top = max(e[PARAM] for e in g.terms)
            terms = {e[:NVARS] + (top - e[PARAM],): c for e, c in g.terms.items()}
            gens.append(Polynomial(terms, FAMILY_NVARS))
        return ParamFamily(tuple(gens), f"{self.description} [a -> 1/a]")


def weight_action_family(I: Ideal, weights: Sequence[int], description: str = "") -> ParamFamily:
    """The family sigma_w(a) . I for the torus action scaling x_i by a^w_i."""
    if len(weights) != NVARS:
        raise ValueError("one weight per geometric variable")
    if len(set(weights)) == 1:
        raise ValueError("weight vector must not be constant (trivial action)")
    gens = []
    for g in I.gens:
        exps = [sum(w * ei for w, ei in zip(weights, e)) for e in g.terms]
        base = min(exps)
        terms = {
            e + (k - base,): c
            for (e, c), k in zip(g.terms.items(), exps)
        }
        gens.append(Polynomial(terms, FAMILY_NVARS))
    return ParamFamily(tuple(gens), description or f"torus action with weights {list(weights)}")


def apply_torus(I: Ideal, weights: Sequence[int], value) -> Ideal:
    value = Fraction(value)
    images = [
        Polynomial.variable(i, NVARS).scale(value ** weights[i]) for i in range(NVARS)
    ]
    return Ideal([g.substitute(images) for g in I.gens], NVARS)


# ---------------------------------------------------------------------------
# exact limits of moving graded pieces

class _KaVector:
    """Vector over k[a]: integer coefficient layers by ascending a-power."""

    __slots__ = ("layers",)

    def __init__(self, layers: List[List[int]]):
        while layers and not any(layers[-1]):
            layers.pop()
        self.layers = layers

    def is_zero(self) -> bool:
        return not self.layers

    def valuation_strip(self) -> "_KaVector":
        layers = self.layers
        while layers and not any(layers[0]):
            layers = layers[1:]
        return _KaVector([row[:] for row in layers])

    def combine(self, s: int, other: "_KaVector", t: int) -> "_KaVector":
        """s * self + t * other."""
        n = max(len(self.layers), len(other.layers))
        width = len(self.layers[0]) if self.layers else len(other.layers[0])
        out = []
        for k in range(n):
            row = [0] * width
            if k < len(self.layers):
                a = self.layers[k]
                for i in range(width):
                    row[i] = s * a[i]
            if k < len(other.layers):
                b = other.layers[k]
                for i in range(width):
                    row[i] += t * b[i]
            out.append(row)
        return _KaVector(out)

    def content_reduce(self):
        g = 0
        for row in self.layers:
            for c in row:
                g = gcd(g, abs(c))
                if g == 1:
                    return
        if g > 1:
            for row in self.layers:
                for i in range(len(row)):
                    row[i] //= g


def _limit_space(vectors: List[_KaVector], width: int, rank_target: int) -> List[List[int]]:
    """Basis (integer rows) of the limit at a=0 of the moving span of the
    given k[a]-vectors, which has the given generic rank.

    Every kept vector is an exact a-power-divided combination of the inputs,
    hence an honest element of the saturated family module; a vector whose
    fibre keeps collapsing into the echelon is a unit-denominator combination
    of earlier ones and contributes nothing, so it is dropped once its
    division budget is exhausted.
    """

    pivots: Dict[int, _KaVector] = {}

    def reduce_fibre(v: _KaVector) -> _KaVector:
        for col in sorted(pivots):
            head = v.layers[0] if v.layers else None
            if head is None or not head[col]:
                continue
            p = pivots[col]
            pc = p.layers[0][col]
            vc = head[col]
            g = gcd(pc, vc)
            v = v.combine(pc // g, p, -(vc // g))
        return v

    def insert(v: _KaVector, cap: int) -> bool:
        """True if the vector landed (new pivot or exact dependence)."""
        for _ in range(cap):
            v = v.valuation_strip()
            if v.is_zero():
                return True
            v.content_reduce()
            v = reduce_fibre(v)
            if v.is_zero():
                return True
            head = v.layers[0]
            lead = next((i for i, c in enumerate(head) if c), None)
            if lead is not None:
                v.content_reduce()
                pivots[lead] = v
                return True
            # fibre collapsed: divide by a and try again
        return False

    deferred: List[_KaVector] = []
    for v in vectors:
        if len(pivots) == rank_target:
            break
        if not insert(v, cap=40):
            deferred.append(v)
    if len(pivots) < rank_target:
        for v in deferred:
            if len(pivots) == rank_target:
                break
            insert(v, cap=2000)
    if len(pivots) != rank_target:
        raise ArithmeticError(
            f"limit piece has rank {len(pivots)}, expected {rank_target}"
        )
    return [pivots[col].layers[0][:] for col in sorted(pivots)]


def _family_graded_vectors(F: ParamFamily, degree: int) -> List[_KaVector]:
    monos = graded_monomial_basis(degree, NVARS)
    index = {e: i for i, e in enumerate(monos)}
    width = len(monos)
    out = []
    for g in F.generators:
        gd = ParamFamily.geometric_degree(g)
        den = 1
        for c in g.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        int_terms = [(e, int(c * den)) for e, c in g.terms.items()]
        if gd is None or gd > degree:
            continue
        top = max(e[PARAM] for e, _ in int_terms)
        for m in monomials_of_degree(degree - gd, NVARS):
            layers = [[0] * width for _ in range(top + 1)]
            for e, c in int_terms:
                col = index[monomial_mul(e[:NVARS], m)]
                layers[e[PARAM]][col] += c
            out.append(_KaVector(layers))
    return out


def limit_graded_piece(F: ParamFamily, degree: int, fiber: Optional[Ideal] = None) -> Subspace:
    """Exact degree-d piece of the flat limit at a -> 0 (before the final
    irrelevant saturation).  The generic rank is read off a fibre."""
    from .hilbert import hilbert_function

    if fiber is None:
        fiber = next(
            F.specialize(v) for v in (1, 2, 3, 5, 7) if _specializes(F, v)
        )
    width = count_monomials(degree, NVARS)
    target = hilbert_function(fiber, degree)
    rows = _limit_space(_family_graded_vectors(F, degree), width, target)
    return Subspace(rows, width)


def _specializes(F: ParamFamily, value) -> bool:
    try:
        F.specialize(value)
        return True
    except FamilyError:
        return False


@dataclass(frozen=True)
class LimitData:
    raw: Ideal          # generated by the limit graded pieces through the Gotzmann degree
    saturated: Ideal    # the Hilbert-scheme limit
    quotient_hp: HilbertPolynomial


def _generic_quotient_hp(
    F: ParamFamily, rng: random.Random
) -> Tuple[HilbertPolynomial, Ideal]:
    for _ in range(3):
        values: List[Fraction] = []
        fibers = []
        hps = []
        draws = 0
        while len(values) < 3 and draws < 20:
            draws += 1
            v = Fraction(rng.randint(1, 999983))
            if v in values:
                continue
            try:
                fiber = F.specialize(v)
            except FamilyError:
                continue
            hps.append(quotient_hilbert_polynomial(fiber))
            fibers.append(fiber)
            values.append(v)
        if len(values) == 3 and hps[0] == hps[1] == hps[2]:
            return hps[0], fibers[0]
    raise FamilyError("family is not flat: quotient Hilbert polynomial varies with the parameter")


def family_limit_data(F: ParamFamily, at=0, rng: Optional[random.Random] = None) -> LimitData:
    if at in ("inf", "infinity"):
        return family_limit_data(F.invert_parameter(), 0, rng)
    if at not in (0, "0"):
        raise ValueError("limits are taken at 0 or at infinity")
    rng = rng if rng is not None else random.Random(97)
    p, probe_fiber = _generic_quotient_hp(F, rng)
    rho = gotzmann_number(p)
    gens: List[Polynomial] = []
    current: Optional[Ideal] = None
    for d in range(rho + 1):
        piece = limit_graded_piece(F, d, fiber=probe_fiber)
        if piece.dim == 0:
            continue
        monos = graded_monomial_basis(d, NVARS)
        index = {e: i for i, e in enumerate(monos)}
        space = current.graded_piece(d) if current is not None else Subspace([], len(monos))
        for row in piece.rows:
            if not space.contains(row):
                gens.append(Polynomial({monos[i]: c for i, c in enumerate(row) if c}, NVARS))
                space = space.extended([row])
                current = Ideal(gens, NVARS)
    raw = Ideal(gens, NVARS)
    saturated = saturate_irrelevant(raw)
    if quotient_hilbert_polynomial(saturated) != p:
        raise ArithmeticError("flat limit lost the quotient Hilbert polynomial")
    return LimitData(raw=raw, saturated=saturated, quotient_hp=p)


def family_limit(F: ParamFamily, at=0, rng: Optional[random.Random] = None) -> Ideal:
    """The Hilbert-scheme limit of the family: saturate by the parameter,
    specialize, then saturate by the irrelevant ideal."""
    return family_limit_data(F, at, rng).saturated


def weight_limit(I: Ideal, weights: Sequence[int], at=0,
                 rng: Optional[random.Random] = None) -> Ideal:
    """Flat limit of the torus orbit of I under the weight action."""
    if len(weights) != NVARS or len(set(weights)) == 1:
        raise ValueError("weight vector must have one entry per variable, not all equal")
    if I.is_monomial():
        return Ideal([Polynomial.monomial(e) for e in I.monomial_generators()], I.nvars)
    F = weight_action_family(I, weights)
    limit = family_limit(F, at, rng)
    fixed = apply_torus(limit, weights, 2)
    if not equal(fixed, limit):
        raise ArithmeticError("weight limit is not fixed by the torus action")
    return limit


# ---------------------------------------------------------------------------
# the complete-intersection degeneration of a non-CI regularity-3 ideal

def _basis_search_forms() -> List[Polynomial]:
    xs = variables()
    out = [Polynomial.zero(NVARS)]
    for v in xs:
        out.append(v)
        out.append(-v)
    for v in xs:
        out.append(v * 2)
    for i in range(NVARS):
        for j in range(i + 1, NVARS):
            out.append(xs[i] + xs[j])
            out.append(xs[i] - xs[j])
    return out


def r3prime_data(I: Ideal) -> Tuple[Polynomial, Polynomial, Polynomial, Polynomial,
                                    Polynomial, Polynomial]:
    """Extract (ell, ell1, ell2, F, p, q) with I = (ell*ell1, ell*ell2, F) and
    F = ell1*p + ell2*q, neither p nor q divisible by ell."""
    quadrics = graded_basis_polynomials(I, 2)
    if len(quadrics) != 2:
        raise FamilyError("expected two quadric generators")
    ell = gcd_forms(quadrics[0], quadrics[1])
    if ell.homogeneous_degree() != 1:
        raise FamilyError("the quadric pencil must share a linear factor")
    ell1 = divide_exact(quadrics[0], ell)
    ell2 = divide_exact(quadrics[1], ell)
    # a cubic generator outside P1 * I2
    cubic_monos = graded_monomial_basis(3, NVARS)
    index = {e: i for i, e in enumerate(cubic_monos)}
    from_quadrics = Ideal([quadrics[0], quadrics[1]]).graded_piece(3)
    cubic = None
    for candidate in graded_basis_polynomials(I, 3):
        residue = from_quadrics.reduce(_coords(candidate, index))
        if any(residue):
            cubic = Polynomial({cubic_monos[i]: c for i, c in enumerate(residue) if c}, NVARS)
            break
    if cubic is None:
        raise FamilyError("no cubic generator beyond the quadrics")
    # solve F = ell1 * p + ell2 * q
    quad_monos = graded_monomial_basis(2, NVARS)
    columns = []
    for form in (ell1, ell2):
        for m in quad_monos:
            columns.append(_coords(form.mul_monomial(m), index))
    matrix = [[columns[j][i] for j in range(len(columns))] for i in range(len(cubic_monos))]
    from .linalg import solve

    sol = solve(matrix, _coords(cubic, index))
    if sol is None:
        raise FamilyError("cubic generator does not lie in (ell1, ell2)")
    half = len(quad_monos)
    p = Polynomial({quad_monos[i]: sol[i] for i in range(half)}, NVARS)
    q = Polynomial({quad_monos[i]: sol[half + i] for i in range(half)}, NVARS)
    # adjust along the Koszul relation so neither piece is divisible by ell
    for s in _basis_search_forms():
        p2 = p + ell2 * s
        q2 = q - ell1 * s
        if divide_exact(p2, ell) is None and divide_exact(q2, ell) is None:
            return ell, ell1, ell2, cubic, p2, q2
    raise FamilyError("could not arrange the decomposition off the shared factor")


def va_degeneration(I: Ideal, rng: Optional[random.Random] = None) -> Tuple[ParamFamily, Ideal]:
    """Present a non-CI regularity-3 ideal as the limit at 0 of a family of
    complete intersections of two quadrics.

    Returns the family (ell*ell1 + a*q, ell*ell2 - a*p) and its limit, which
    is asserted to equal the input; three sampled fibres are checked to be
    complete intersections.
    """
    rng = rng if rng is not None else random.Random(1009)
    report = classify(I)
    if report.stratum != "R3'":
        raise ValueError(f"degeneration applies to the R3' stratum, got {report.stratum}")
    ell, ell1, ell2, cubic, p, q = r3prime_data(I)
    f0 = (ell * ell1).extend()
    g0 = (ell * ell2).extend()
    a = Polynomial.variable(PARAM, FAMILY_NVARS)
    family = ParamFamily(
        (f0 + a * q.extend(), g0 - a * p.extend()),
        description="pencil of complete intersections through a shared-factor ideal",
    )
    checked = 0
    attempts = 0
    while checked < 3 and attempts < 25:
        attempts += 1
        value = Fraction(rng.randint(1, 999983))
        fiber = family.specialize(value)
        fgens = fiber.gens
        if len(fgens) == 2 and gcd_forms(fgens[0], fgens[1]).homogeneous_degree() == 0:
            checked += 1
    if checked < 3:
        raise ArithmeticError("generic fibres failed the complete-intersection check")
    limit = family_limit(family, 0, rng)
    if not equal(limit, I):
        raise ArithmeticError("limit of the complete-intersection family must recover the ideal")
    return family, limit


# ---------------------------------------------------------------------------
# the degeneration chain from regularity 5 to regularity 6

@dataclass(frozen=True)
class DegenerationStep:
    family: ParamFamily
    at: str
    limit: Ideal
    report: StratumReport
    raw_limit: Ideal


@dataclass(frozen=True)
class DegenerationChain:
    steps: Tuple[DegenerationStep, ...]
    terminal: Ideal


def _forms_to_change(rows: Sequence[Polynomial]) -> LinearChange:
    """The change of coordinates sending the i-th given linear form to the
    i-th variable (forms transform by v -> v A, so A inverts the row matrix)."""
    matrix = []
    for f in rows:
        matrix.append(
            [f.coefficient(tuple(1 if j == i else 0 for j in range(NVARS))) for i in range(NVARS)]
        )
    return LinearChange(matrix).inverse()


def _graded_residues(I: Ideal, degree: int, modulus: Ideal) -> List[Polynomial]:
    """Basis of the image of I_degree in P_degree modulo a monomial ideal."""
    gens = modulus.monomial_generators()
    from .poly import monomial_divides

    monos = graded_monomial_basis(degree, NVARS)
    index = {e: i for i, e in enumerate(monos)}
    vectors = []
    for b in graded_basis_polynomials(I, degree):
        filtered = Polynomial(
            {e: c for e, c in b.terms.items() if not any(monomial_divides(g, e) for g in gens)},
            NVARS,
        )
        if filtered:
            vectors.append(_coords(filtered, index))
    space = Subspace(vectors, len(monos))
    return [Polynomial({monos[i]: c for i, c in enumerate(row) if c}, NVARS) for row in space.rows]


def _normalize_case1(I: Ideal, ell: Polynomial, L: List[Polynomial]) -> Tuple[Ideal, LinearChange]:
    change = _forms_to_change(L + [ell])  # L -> (x, y, z), ell -> t
    moved = Ideal([change.apply(g) for g in I.gens])
    return moved, change


def _extract_case1(moved: Ideal) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """On (t(x,y,z), f, g) coordinates: the shared quartic h and the two
    linear cofactors, living in k[x,y,z]."""
    x, y, z, t = variables()
    quad = Ideal([t * x, t * y, t * z])
    residues = _graded_residues(moved, 5, quad)
    if len(residues) != 2:
        raise FamilyError("expected a two-dimensional space of quintics beyond the quadrics")
    for r in residues:
        if any(e[3] for e in r.terms):
            raise FamilyError("quintic representatives must avoid the distinguished variable")
    f, g = residues
    h = gcd_forms(f, g)
    if h.homogeneous_degree() != 4:
        raise FamilyError("quintics must share a quartic factor")
    ell1 = divide_exact(f, h)
    ell2 = divide_exact(g, h)
    return h, ell1, ell2


def _case1_inner_change(h, ell1, ell2) -> LinearChange:
    """A further change fixing t, sending a basis of the cofactor pencil to
    (x, y) while making the quartic's x^4 coefficient nonzero.

    The coefficient is h at the point dual to x; varying the second basis form
    through the pencil and shifting the completing form walks that point over
    enough of the plane to escape the at most four lines where h vanishes.
    """
    t_form = variables()[3]
    x4 = (4, 0, 0, 0)
    from .strata import _independent_linear

    small = (0, 1, -1, 2, -2, 3, -3, 4, -4)
    for d in small:
        second = ell2 + ell1.scale(d) if d else ell2
        first = ell1
        axis = next(
            v for v in variables()[:3] if _independent_linear([first, second, v])
        )
        for shift in small:
            third = axis + first.scale(shift) if shift else axis
            if not _independent_linear([first, second, third, t_form]):
                continue
            change = _forms_to_change([first, second, third, t_form])
            h2 = change.apply(h)
            if h2.coefficient(x4):
                return change
    raise FamilyError("no coordinate adjustment exposes the quartic's leading power")


def _psi_sigma_family(moved: Ideal) -> ParamFamily:
    """The composite family: scale y, z by a^{-2}, then shear t by -a*x."""
    sigma = weight_action_family(moved, (0, -2, -2, 0))
    a = Polynomial.variable(PARAM, FAMILY_NVARS)
    x5, y5, z5, t5 = (Polynomial.variable(i, FAMILY_NVARS) for i in range(4))
    images = [x5, y5, z5, t5 - a * x5, Polynomial.variable(PARAM, FAMILY_NVARS)]
    gens = tuple(g.substitute(images) for g in sigma.generators)
    return ParamFamily(gens, "scale the plane directions, then shear the distinguished axis")


def _extract_case2(moved: Ideal) -> Tuple[Polynomial, Polynomial, Polynomial, Fraction]:
    """On (x(x,y,z), f, g) coordinates: h, the cofactors, and the coefficient
    of x*t^4; representatives live in k[y,z,t] + k*x*t^4."""
    x, y, z, t = variables()
    quad = Ideal([x * x, x * y, x * z])
    residues = _graded_residues(moved, 5, quad)
    if len(residues) != 2:
        raise FamilyError("expected a two-dimensional space of quintics beyond the quadrics")
    xt4 = (1, 0, 0, 4)
    alphas = [r.coefficient(xt4) for r in residues]
    if alphas[0] == 0 and alphas[1] == 0:
        f, g = residues
        alpha = Fraction(0)
    else:
        carrier = 0 if alphas[0] else 1
        f = residues[carrier]
        g = residues[1 - carrier] - f.scale(alphas[1 - carrier] / alphas[carrier])
        alpha = alphas[carrier]
    f_prime = f - Polynomial.monomial(xt4, alpha)
    for r in (f_prime, g):
        if any(e[0] for e in r.terms):
            raise FamilyError("representatives must be free of the shared linear form")
    h = gcd_forms(f_prime, g) if f_prime and g else None
    if h is None or h.homogeneous_degree() != 4:
        raise FamilyError("quintics must share a quartic factor")
    ell1 = divide_exact(f_prime, h)
    ell2 = divide_exact(g, h)
    return h, ell1, ell2, alpha


def rs_degeneration(I: Ideal, rng: Optional[random.Random] = None) -> DegenerationChain:
    """Degenerate a regularity-5 ideal into the regularity-6 stratum along the
    one-parameter families dictated by its normal form."""
    rng = rng if rng is not None else random.Random(4001)
    report = classify(I)
    if report.stratum != "R5":
        raise ValueError(f"degeneration applies to the R5 stratum, got {report.stratum}")
    quadrics = graded_basis_polynomials(I, 2)
    factored = factor_quadric_net(quadrics)
    if factored is None:
        raise FamilyError("regularity-5 quadrics must factor through a linear form")
    ell, L = factored
    from .strata import _linear_span_contains

    if not _linear_span_contains(L, ell):
        return _rs_case1(I, ell, L, rng)
    return _rs_case2(I, ell, L, rng)


def _rs_case1(I: Ideal, ell, L, rng) -> DegenerationChain:
    moved, _ = _normalize_case1(I, ell, L)
    h, ell1, ell2 = _extract_case1(moved)
    inner = _case1_inner_change(h, ell1, ell2)
    normalized = Ideal([inner.apply(g) for g in moved.gens])
    family = _psi_sigma_family(normalized)
    data = family_limit_data(family, at="inf", rng=rng)
    limit_report = classify(data.saturated)
    step = DegenerationStep(
        family=family, at="inf", limit=data.saturated, report=limit_report, raw_limit=data.raw
    )
    if limit_report.stratum != "R6":
        raise ArithmeticError("composite degeneration must land in the regularity-6 stratum")
    return DegenerationChain(steps=(step,), terminal=data.saturated)


def _case2_normalized(I: Ideal, ell, L) -> Ideal:
    completion = []
    selected = [ell]
    from .strata import _independent_linear

    for b in L:
        if _independent_linear(selected + [b]):
            selected.append(b)
            completion.append(b)
    w = next(v for v in variables() if _independent_linear(selected + [v]))
    change = _forms_to_change([ell] + completion + [w])
    return Ideal([change.apply(g) for g in I.gens])


def _rs_case2(I: Ideal, ell, L, rng) -> DegenerationChain:
    x, y, z, t = variables()
    moved = _case2_normalized(I, ell, L)
    h, ell1, ell2, alpha = _extract_case2(moved)
    weights = (1, 0, 0, 0)
    if alpha != 0:
        family = weight_action_family(moved, weights, "scale the shared linear form")
        data = family_limit_data(family, at="inf", rng=rng)
        limit_report = classify(data.saturated)
        if limit_report.stratum != "R6":
            raise ArithmeticError("torus degeneration must land in the regularity-6 stratum")
        step = DegenerationStep(
            family=family, at="inf", limit=data.saturated, report=limit_report,
            raw_limit=data.raw,
        )
        return DegenerationChain(steps=(step,), terminal=data.saturated)
    # alpha = 0: route through the auxiliary ideal carrying an x*t^4 term
    from .strata import _linear_span_contains

    if not _linear_span_contains([y, z], ell2):
        if _linear_span_contains([y, z], ell1):
            ell1, ell2 = ell2, ell1
        else:
            # combine the cofactors to land the second one in <y, z>
            c1 = ell1.coefficient((0, 0, 0, 1))
            c2 = ell2.coefficient((0, 0, 0, 1))
            ell2 = ell2.scale(c1) - ell1.scale(c2)
            if ell2.is_zero():
                raise FamilyError("cofactors cannot be combined into the designated plane")
    shape = R5Shape(
        case=2, ell=x, L=(x, y, z), ell1=ell1, ell2=ell2, h=h, alpha=Fraction(1), w=t
    )
    bridge = build_stratum_ideal(shape)
    back_family = weight_action_family(bridge, weights, "undo the torus term")
    back = family_limit_data(back_family, at=0, rng=rng)
    if not equal(back.saturated, moved):
        raise ArithmeticError("the bridge ideal must degenerate back to the input")
    step1 = DegenerationStep(
        family=back_family, at="0", limit=back.saturated, report=classify(back.saturated),
        raw_limit=back.raw,
    )
    family = weight_action_family(bridge, weights, "scale the shared linear form")
    data = family_limit_data(family, at="inf", rng=rng)
    limit_report = classify(data.saturated)
    if limit_report.stratum != "R6":
        raise ArithmeticError("torus degeneration must land in the regularity-6 stratum")
    step2 = DegenerationStep(
        family=family, at="inf", limit=data.saturated, report=limit_report, raw_limit=data.raw
    )
    return DegenerationChain(steps=(step1, step2), terminal=data.saturated)
