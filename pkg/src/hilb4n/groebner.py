"""Buchberger engine: normal forms, reduced Groebner bases, S-pair traces.

Reductions run fraction-free on primitive integer coefficient dicts (one
content gcd per full normal form instead of one per step); public results are
exact monic polynomials over Q.  Pair handling uses the degree-graded normal
strategy with both classical pair-elimination criteria.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .orders import DEGREVLEX, Exponent, MonomialOrder
from .poly import (
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_gcd,
    monomial_lcm,
    monomial_mul,
)

IntPoly = Dict[Exponent, int]


# ---------------------------------------------------------------------------
# integer polynomial helpers

def _to_int_poly(p: Polynomial) -> Tuple[IntPoly, Fraction]:
    """Primitive integer form: returns (q, s) with p = s * q and content(q)=1."""
    if not p.terms:
        return {}, Fraction(1)
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in p.terms.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, abs(v))
    ints = {e: v // g for e, v in ints.items()}
    return ints, Fraction(g, den)


def _content(p: IntPoly) -> int:
    g = 0
    for v in p.values():
        g = gcd(g, abs(v))
        if g == 1:
            return 1
    return g


def _make_primitive(p: IntPoly) -> IntPoly:
    g = _content(p)
    if g > 1:
        return {e: v // g for e, v in p.items()}
    return dict(p)


class _Basis:
    """Working basis element with cached leading data."""

    __slots__ = ("poly", "lm", "lc", "tail")

    def __init__(self, poly: IntPoly, order: MonomialOrder):
        self.poly = poly
        self.lm = max(poly, key=order.key)
        self.lc = poly[self.lm]
        self.tail = [(e, c) for e, c in poly.items() if e != self.lm]


def _normal_form_int(
    p: IntPoly,
    basis: Sequence[_Basis],
    order: MonomialOrder,
    trace: Optional[List[IntPoly]] = None,
) -> Tuple[IntPoly, int]:
    """Fraction-free full normal form.

    Returns (r, m) with m * p = r + sum(q_i * basis_i) and no monomial of r
    divisible by a basis leading monomial.  When ``trace`` is given it must
    hold one dict per basis element and receives the quotients q_i.
    """
    key = order.key
    work = dict(p)
    remainder: IntPoly = {}
    mult = 1
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        if not c:
            continue
        for gi, g in enumerate(basis):
            if monomial_divides(g.lm, e):
                break
        else:
            remainder[e] = c
            continue
        gg = gcd(c, g.lc)
        a = g.lc // gg  # scale everything by a
        b = c // gg     # subtract b * shift * g
        if a != 1:
            if a < 0:
                a, b = -a, -b
            mult *= a
            for k in work:
                work[k] *= a
            for k in remainder:
                remainder[k] *= a
            if trace is not None:
                for q in trace:
                    for k in q:
                        q[k] *= a
        shift = monomial_div(e, g.lm)
        for ge, gc in g.tail:
            k = monomial_mul(ge, shift)
            nv = work.get(k, 0) - b * gc
            if nv:
                work[k] = nv
            elif k in work:
                del work[k]
        if trace is not None:
            q = trace[gi]
            q[shift] = q.get(shift, 0) + b
    return remainder, mult


def normal_form_poly(
    f: Polynomial, basis_polys: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX
) -> Polynomial:
    """Exact normal form of f modulo the given basis (need not be a GB)."""
    fi, scale = _to_int_poly(f)
    if not fi:
        return f
    basis = [_Basis(_to_int_poly(g)[0], order) for g in basis_polys if g]
    r, mult = _normal_form_int(fi, basis, order)
    factor = scale / mult
    return Polynomial({e: factor * c for e, c in r.items()}, f.nvars)


def _spair(f: _Basis, g: _Basis) -> IntPoly:
    lcm = monomial_lcm(f.lm, g.lm)
    sf, sg = monomial_div(lcm, f.lm), monomial_div(lcm, g.lm)
    gg = gcd(f.lc, g.lc)
    a, b = g.lc // gg, f.lc // gg
    out: IntPoly = {}
    for e, c in f.poly.items():
        out[monomial_mul(e, sf)] = a * c
    for e, c in g.poly.items():
        k = monomial_mul(e, sg)
        nv = out.get(k, 0) - b * c
        if nv:
            out[k] = nv
        elif k in out:
            del out[k]
    return out


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
    max_degree: Optional[int] = None,
) -> List[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``max_degree`` truncates the pair queue (valid for homogeneous input when
    only graded pieces up to that degree are consumed downstream).
    """
    nvars = gens[0].nvars if gens else 0
    basis: List[_Basis] = []
    for g in gens:
        gi, _ = _to_int_poly(g)
        if gi:
            basis.append(_Basis(_make_primitive(gi), order))
    if not basis:
        return []

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lcm_of(i: int, j: int) -> Exponent:
        return monomial_lcm(basis[i].lm, basis[j].lm)

    while pairs:
        i, j = min(pairs, key=lambda p: (sum(lcm_of(*p)), order.key(lcm_of(*p))))
        pairs.discard((i, j))
        lcm = lcm_of(i, j)
        if max_degree is not None and sum(lcm) > max_degree:
            continue
        # coprime leading monomials: S-pair reduces to zero
        if not any(monomial_gcd(basis[i].lm, basis[j].lm)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if monomial_divides(basis[k].lm, lcm):
                if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = _spair(basis[i], basis[j])
        r, _ = _normal_form_int(s, basis, order)
        if r:
            basis.append(_Basis(_make_primitive(r), order))
            new = len(basis) - 1
            for k in range(new):
                pairs.add((k, new))
    return _reduce_basis(basis, order, nvars)


def _reduce_basis(basis: List[_Basis], order: MonomialOrder, nvars: int) -> List[Polynomial]:
    # minimal generators: drop elements whose lm is divisible by another lm
    kept: List[_Basis] = []
    lms = [b.lm for b in basis]
    for i, b in enumerate(basis):
        if any(
            monomial_divides(lms[k], b.lm) and (lms[k] != b.lm or k < i)
            for k in range(len(basis))
            if k != i
        ):
            continue
        kept.append(b)
    # tail-reduce each against the others, make monic
    out: List[Polynomial] = []
    for i, b in enumerate(kept):
        others = [kept[k] for k in range(len(kept)) if k != i]
        r, _ = _normal_form_int(b.poly, others, order)
        lc = r[max(r, key=order.key)]
        out.append(Polynomial({e: Fraction(c, lc) for e, c in r.items()}, nvars))
    out.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    return out


# ---------------------------------------------------------------------------
# syzygies of a Groebner basis via traced S-pair reductions

def gb_syzygies(gb: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> List[List[Polynomial]]:
    """Generators of the syzygy module of a Groebner basis.

    Every S-pair of the basis reduces to zero; its traced reduction yields one
    relation.  The full pair set is processed (Schreyer), so the returned
    vectors generate all syzygies of ``gb``.
    """
    nvars = gb[0].nvars if gb else 0
    basis = [_Basis(_to_int_poly(g)[0], order) for g in gb]
    scales = [_to_int_poly(g)[1] for g in gb]
    syz: List[List[Polynomial]] = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            f, g = basis[i], basis[j]
            lcm = monomial_lcm(f.lm, g.lm)
            sf, sg = monomial_div(lcm, f.lm), monomial_div(lcm, g.lm)
            cg = gcd(f.lc, g.lc)
            a, b = g.lc // cg, f.lc // cg
            s = _spair(f, g)
            trace: List[IntPoly] = [dict() for _ in basis]
            r, mult = _normal_form_int(s, basis, order, trace=trace)
            if r:
                raise ArithmeticError("input was not a Groebner basis: S-pair did not vanish")
            # mult * (a x^sf g_i - b x^sg g_j) = sum_k q_k g_k
            row = [Polynomial.zero(nvars) for _ in basis]
            row[i] = Polynomial({sf: Fraction(a * mult)}, nvars)
            row[j] = Polynomial({sg: Fraction(-b * mult)}, nvars)
            for k, q in enumerate(trace):
                if q:
                    row[k] = row[k] - Polynomial({e: Fraction(c) for e, c in q.items()}, nvars)
            # rescale to act on the exact (monic) basis elements
            row = [p.scale(1 / scales[k]) if p else p for k, p in enumerate(row)]
            if any(row):
                syz.append(row)
    return syz


def division_quotients(
    f: Polynomial, basis_polys: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX
) -> Tuple[Polynomial, List[Polynomial]]:
    """Exact division: returns (r, [q_i]) with f = r + sum(q_i * basis_i)."""
    fi, scale = _to_int_poly(f)
    if not fi:
        return f, [Polynomial.zero(f.nvars) for _ in basis_polys]
    data = [_to_int_poly(g) for g in basis_polys]
    basis = [_Basis(d[0], order) for d in data]
    trace: List[IntPoly] = [dict() for _ in basis]
    r, mult = _normal_form_int(fi, basis, order, trace=trace)
    factor = scale / mult
    remainder = Polynomial({e: factor * c for e, c in r.items()}, f.nvars)
    quots = [
        Polynomial({e: factor * c / data[k][1] for e, c in q.items()}, f.nvars)
        for k, q in enumerate(trace)
    ]
    return remainder, quots


def buchberger_with_reps(
    gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX
) -> Tuple[List[Polynomial], List[List[Polynomial]]]:
    """Reduced Groebner basis together with representations over ``gens``.

    Returns (gb, reps) with gb[k] = sum_i reps[k][i] * gens[i], exactly.
    """
    nvars = gens[0].nvars
    ngens = len(gens)
    zero = Polynomial.zero(nvars)

    basis: List[_Basis] = []
    reps: List[List[Polynomial]] = []
    for i, g in enumerate(gens):
        gi, scale = _to_int_poly(g)
        if not gi:
            continue
        basis.append(_Basis(gi, order))
        row = [zero] * ngens
        row[i] = Polynomial.constant(1 / scale, nvars)
        reps.append(row)

    def combine(rows, coeffs):
        out = [zero] * ngens
        for row, c in zip(rows, coeffs):
            if not c:
                continue
            for k in range(ngens):
                if row[k]:
                    out[k] = out[k] + row[k] * c
        return out

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                sum(monomial_lcm(basis[p[0]].lm, basis[p[1]].lm)),
                order.key(monomial_lcm(basis[p[0]].lm, basis[p[1]].lm)),
            ),
        )
        pairs.discard((i, j))
        f, g = basis[i], basis[j]
        if not any(monomial_gcd(f.lm, g.lm)):
            continue
        lcm = monomial_lcm(f.lm, g.lm)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if monomial_divides(basis[k].lm, lcm):
                if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = _spair(f, g)
        trace: List[IntPoly] = [dict() for _ in basis]
        r, mult = _normal_form_int(s, basis, order, trace=trace)
        if not r:
            continue
        sf, sg = monomial_div(lcm, f.lm), monomial_div(lcm, g.lm)
        cg = gcd(f.lc, g.lc)
        a, b = g.lc // cg, f.lc // cg
        coeffs = [
            -Polynomial({e: Fraction(c) for e, c in q.items()}, nvars) if q else zero
            for q in trace
        ]
        coeffs[i] = coeffs[i] + Polynomial({sf: Fraction(a * mult)}, nvars)
        coeffs[j] = coeffs[j] + Polynomial({sg: Fraction(-b * mult)}, nvars)
        # r = mult * S - sum(q_k b_k), with S = a x^sf b_i - b x^sg b_j,
        # so coeffs above already represent r over the working basis
        rep = combine(reps, coeffs)
        content = _content(r)
        basis.append(_Basis({e: c // content for e, c in r.items()}, order))
        reps.append([p.scale(Fraction(1, content)) for p in rep])
        new = len(basis) - 1
        for k in range(new):
            pairs.add((k, new))

    # minimalize
    keep: List[int] = []
    for i, b in enumerate(basis):
        if any(
            monomial_divides(basis[k].lm, b.lm) and (basis[k].lm != b.lm or k < i)
            for k in range(len(basis))
            if k != i
        ):
            continue
        keep.append(i)
    # tail-reduce with traces, make monic
    out_polys: List[Polynomial] = []
    out_reps: List[List[Polynomial]] = []
    for i in keep:
        others = [basis[k] for k in keep if k != i]
        other_reps = [reps[k] for k in keep if k != i]
        trace = [dict() for _ in others]
        r, mult = _normal_form_int(basis[i].poly, others, order, trace=trace)
        lc = r[max(r, key=order.key)]
        out_polys.append(Polynomial({e: Fraction(c, lc) for e, c in r.items()}, nvars))
        coeffs = [
            -Polynomial({e: Fraction(c) for e, c in q.items()}, nvars) if q else zero
            for q in trace
        ]
        rep = combine(other_reps, coeffs)
        base = [p * Fraction(mult) for p in reps[i]]
        rep = [u + v for u, v in zip(base, rep)]
        out_reps.append([p.scale(Fraction(1, lc)) for p in rep])
    pairs_sorted = sorted(
        zip(out_polys, out_reps),
        key=lambda pr: order.key(pr[0].leading_monomial(order)),
        reverse=True,
    )
    out_polys = [p for p, _ in pairs_sorted]
    out_reps = [r for _, r in pairs_sorted]
    return out_polys, out_reps


def reduce_by_linear_forms(
    gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX
) -> Tuple[List[Polynomial], List[Polynomial]]:
    """Split off the ideal's linear forms by exact substitution.

    Returns (linear, rest): ``linear`` is an echelonized basis of the degree-1
    piece spanned by degree-1 generators, and ``rest`` generates the image of
    the remaining generators under the substitution killing each pivot
    variable.  The reduced GB of the input is the union of ``linear`` and the
    reduced GB of ``rest`` (pivot variables are the largest in each form).
    """
    linear = [g for g in gens if g and g.homogeneous_degree() == 1]
    rest = [g for g in gens if g and g.homogeneous_degree() != 1]
    if not linear:
        return [], list(rest)
    nvars = gens[0].nvars
    echelon: List[Polynomial] = []
    for f in linear:
        for e in echelon:
            lm = e.leading_monomial(order)
            c = f.coefficient(lm)
            if c:
                f = f - e.scale(c)
        if f:
            f = f.monic(order)
            echelon = [
                h - f.scale(h.coefficient(f.leading_monomial(order))) for h in echelon
            ]
            echelon.append(f)
    echelon.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    images = list(Polynomial.variable(i, nvars) for i in range(nvars))
    for f in echelon:
        lm = f.leading_monomial(order)
        pivot = next(i for i, e in enumerate(lm) if e)
        images[pivot] = Polynomial.variable(pivot, nvars) - f
    # iterate substitution until stable (pivot tails may involve other pivots)
    for _ in range(len(echelon)):
        images = [im.substitute(images) for im in images]
    substituted = [g.substitute(images) for g in rest]
    return echelon, [g for g in substituted if g]
