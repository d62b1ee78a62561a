"""Tangent spaces of the Hilbert scheme at points given by saturated ideals.

The tangent space at [X] is the degree-0 part of Hom(I, M) where I is the
saturated ideal and M = directsum_n H0(X, O_X(n)) is the module of twisted
sections: one image per minimal generator, constrained by every generating
syzygy.  M agrees with P/I from the regularity on, and its low graded pieces
are realized inside a fixed high degree R by multiplication with a power of a
linear nonzerodivisor l: the image of M_d in (P/I)_R is the degree-R part of
the saturation of I + (l^{R-d}).  The dimension is then the exact kernel
dimension of a linear system over Q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .gin import is_saturated
from .hilbert import quotient_hilbert_polynomial, regularity
from .ideals import (
    Ideal,
    _coords,
    equal,
    graded_monomial_basis,
    initial_ideal,
    minimal_generators,
    quotient,
    saturate_irrelevant,
    syzygies_of,
)
from .linalg import Subspace, kernel_basis
from .orders import Exponent
from .poly import Polynomial, linear_form, monomial_divides, variables
from . import groebner as _gb

FOUR_N_COEFFS = (Fraction(0), Fraction(4))


@dataclass(frozen=True)
class TangentReport:
    dimension: int
    generator_degrees: Tuple[int, ...]
    constraint_count: int
    warning: Optional[str] = None


def _standard_monomials(in_gens, degree: int, nvars: int) -> List[Exponent]:
    return [
        m
        for m in graded_monomial_basis(degree, nvars)
        if not any(monomial_divides(g, m) for g in in_gens)
    ]


def _nonzerodivisor_form(I: Ideal) -> Polynomial:
    candidates = list(variables(I.nvars))[::-1]
    rng = random.Random(271828)
    for _ in range(20):
        for ell in candidates:
            if equal(quotient(I, ell), I):
                return ell
        candidates = [
            linear_form([rng.randint(-4, 4) for _ in range(I.nvars)], I.nvars)
            or variables(I.nvars)[0]
            for _ in range(4)
        ]
        candidates = [c for c in candidates if c]
    raise ArithmeticError("no linear nonzerodivisor found; is the ideal irrelevant-primary?")


def _section_space(I: Ideal, ell: Polynomial, k: int, degree_r: int,
                   in_gens, gb) -> List[Polynomial]:
    """Basis of the image of H0(O_X(degree_r - k)) in (P/I)_{degree_r}: the
    degree-R part of the saturation of I + (ell^k), reduced modulo I."""
    monos = graded_monomial_basis(degree_r, I.nvars)
    index = {e: i for i, e in enumerate(monos)}
    if k == 0:
        return [Polynomial.monomial(m) for m in _standard_monomials(in_gens, degree_r, I.nvars)]
    bumped = saturate_irrelevant(Ideal(list(I.gens) + [ell**k], I.nvars))
    space = Subspace([], len(monos))
    basis: List[Polynomial] = []
    for row in bumped.graded_piece(degree_r).rows:
        rep = Polynomial({monos[i]: c for i, c in enumerate(row) if c}, I.nvars)
        reduced = _gb.normal_form_poly(rep, gb)
        if reduced.is_zero():
            continue
        v = _coords(reduced, index)
        if not space.contains(v):
            space = space.extended([v])
            basis.append(reduced)
    return basis


def tangent_dimension(I: Ideal) -> TangentReport:
    """Dimension of the Hilbert-scheme tangent space at a saturated ideal,
    as degree-0 homomorphisms from the ideal to the twisted-section module,
    constrained by a generating set of syzygies."""
    if I.is_zero():
        raise ValueError("tangent space at the zero ideal is undefined")
    warning = None
    hp = quotient_hilbert_polynomial(I)
    if hp.coeffs != FOUR_N_COEFFS or not is_saturated(I):
        warning = "not a saturated quotient-Hilbert-polynomial-4n ideal"
    gens = minimal_generators(I)
    degrees = tuple(g.homogeneous_degree() for g in gens)
    syzygies = syzygies_of(gens)
    gb = I.groebner_basis()
    in_gens = initial_ideal(I).monomial_generators()
    degree_r = max(regularity(I), max(degrees))
    ell = _nonzerodivisor_form(I)

    # image of each needed section space inside degree R, modulo I
    section_bases: Dict[int, List[Polynomial]] = {}
    for d in sorted(set(degrees)):
        section_bases[d] = _section_space(I, ell, degree_r - d, degree_r, in_gens, gb)
    blocks = [section_bases[d] for d in degrees]
    offsets = [0]
    for b in blocks:
        offsets.append(offsets[-1] + len(b))
    total_unknowns = offsets[-1]
    shift = degree_r - min(degrees)  # uniform multiplier exponent

    rows: List[List[Fraction]] = []
    for syz in syzygies:
        syz_degree = None
        for s, d in zip(syz, degrees):
            if s and not s.is_zero():
                syz_degree = s.homogeneous_degree() + d
                break
        if syz_degree is None:
            continue
        target_degree = syz_degree + shift
        target = _standard_monomials(in_gens, target_degree, I.nvars)
        index = {m: i for i, m in enumerate(target)}
        block_rows = [[Fraction(0)] * total_unknowns for _ in target]
        for gi, s in enumerate(syz):
            if not s or s.is_zero():
                continue
            # s_i * l^shift * phi_i = s_i * l^(shift - k_i) * w_i with k_i = R - d_i
            multiplier = s * ell ** (shift - (degree_r - degrees[gi]))
            for bi, w in enumerate(blocks[gi]):
                image = _gb.normal_form_poly(multiplier * w, gb)
                col = offsets[gi] + bi
                for e, c in image.terms.items():
                    block_rows[index[e]][col] += c
        rows.extend(block_rows)

    if not rows:
        dimension = total_unknowns
    else:
        dimension = len(kernel_basis(rows))
    return TangentReport(
        dimension=dimension,
        generator_degrees=degrees,
        constraint_count=len(rows),
        warning=warning,
    )
