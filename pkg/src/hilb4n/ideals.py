"""Homogeneous ideals: Groebner caches, initial ideals, quotients, saturation,
intersection, equality, and syzygies.

Monomial ideals take combinatorial fast paths throughout; everything else goes
through the Buchberger engine.  Intersections use a single elimination tag
variable; saturation by a variable uses the degrevlex last-variable division
trick (exact), and general saturation iterates stable quotients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .linalg import Subspace
from .orders import DEGREVLEX, Exponent, MonomialOrder, elimination_order
from .poly import (
    NVARS,
    Polynomial,
    count_monomials,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomials_of_degree,
)
from . import groebner as _gb


class Ideal:
    """Homogeneous ideal given by generators, with cached reduced bases."""

    __slots__ = ("gens", "nvars", "_gb_cache", "_gin", "_hp", "_series")

    def __init__(self, gens: Iterable[Polynomial], nvars: Optional[int] = None):
        gens = [g for g in gens if g and not g.is_zero()]
        if nvars is None:
            if not gens:
                raise ValueError("empty ideal needs an explicit variable count")
            nvars = gens[0].nvars
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generators live in different rings")
            if not g.is_homogeneous():
                raise ValueError(f"generator is not homogeneous: {g!r}")
        self.gens: Tuple[Polynomial, ...] = tuple(gens)
        self.nvars = nvars
        self._gb_cache: Dict[MonomialOrder, Tuple[Polynomial, ...]] = {}
        self._gin = None
        self._hp = None
        self._series = None

    # -- basics ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def monomial_generators(self) -> List[Exponent]:
        """Minimal monomial generators (monomial ideals only)."""
        if not self.is_monomial():
            raise ValueError("not a monomial ideal")
        return minimalize_monomials([g.leading_monomial() for g in self.gens])

    def groebner_basis(self, order: MonomialOrder = DEGREVLEX) -> Tuple[Polynomial, ...]:
        cached = self._gb_cache.get(order)
        if cached is not None:
            return cached
        gb = tuple(groebner_basis(list(self.gens), order))
        self._gb_cache[order] = gb
        return gb

    def contains(self, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> bool:
        return normal_form(f, self, order).is_zero()

    def contains_ideal(self, other: "Ideal", order: MonomialOrder = DEGREVLEX) -> bool:
        return all(self.contains(g, order) for g in other.gens)

    def min_generator_degrees(self) -> List[int]:
        return sorted(g.homogeneous_degree() for g in minimal_generators(self))

    def graded_piece(self, n: int) -> Subspace:
        """Degree-n piece of the ideal as a subspace of P_n in the monomial
        coordinate basis (degrevlex-descending)."""
        monos = graded_monomial_basis(n, self.nvars)
        index = {e: i for i, e in enumerate(monos)}
        vectors = []
        for g in self.gens:
            d = g.homogeneous_degree()
            if d is None or d > n:
                continue
            for m in monomials_of_degree(n - d, self.nvars):
                shifted = g.mul_monomial(m)
                vectors.append(_coords(shifted, index))
        return Subspace(vectors, len(monos))

    def __eq__(self, other):
        return isinstance(other, Ideal) and equal(self, other)

    def __hash__(self):
        # canonical: hash of the reduced degrevlex basis
        return hash(self.groebner_basis(DEGREVLEX))

    def __repr__(self):
        from .poly import format_polynomial

        inner = ", ".join(format_polynomial(g) for g in self.gens) or "0"
        return f"Ideal({inner})"


def _coords(p: Polynomial, index: Dict[Exponent, int]) -> List[Fraction]:
    v = [Fraction(0)] * len(index)
    for e, c in p.terms.items():
        v[index[e]] = c
    return v


def graded_monomial_basis(n: int, nvars: int) -> List[Exponent]:
    return sorted(monomials_of_degree(n, nvars), key=DEGREVLEX.key, reverse=True)


# ---------------------------------------------------------------------------
# monomial combinatorics

def minimalize_monomials(monos: Iterable[Exponent]) -> List[Exponent]:
    ms = sorted(set(monos), key=lambda e: (sum(e), DEGREVLEX.key(e)))
    out: List[Exponent] = []
    for m in ms:
        if not any(monomial_divides(k, m) for k in out):
            out.append(m)
    return sorted(out, key=DEGREVLEX.key, reverse=True)


def monomial_ideal(monos: Iterable[Exponent], nvars: int = NVARS) -> Ideal:
    return Ideal([Polynomial.monomial(e) for e in minimalize_monomials(monos)], nvars)


def _monomial_intersect(a: Sequence[Exponent], b: Sequence[Exponent], nvars: int) -> Ideal:
    return monomial_ideal([monomial_lcm(x, y) for x in a for y in b], nvars)


def _monomial_saturate_var(monos: Sequence[Exponent], var: int, nvars: int) -> List[Exponent]:
    out = []
    for m in monos:
        e = list(m)
        e[var] = 0
        out.append(tuple(e))
    return minimalize_monomials(out)


# ---------------------------------------------------------------------------
# core operations

def groebner_basis(
    gens: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
    max_degree: Optional[int] = None,
) -> List[Polynomial]:
    """Reduced Groebner basis of the ideal the generators span."""
    gens = [g for g in gens if g and not g.is_zero()]
    if not gens:
        return []
    if all(g.is_monomial() for g in gens):
        monic = [g.leading_monomial() for g in gens]
        return [Polynomial.monomial(e) for e in minimalize_monomials(monic)]
    from .orders import DegRevLex

    if isinstance(order, DegRevLex):
        linear, rest = _gb.reduce_by_linear_forms(gens, order)
        if linear and rest:
            inner = _gb.buchberger(rest, order, max_degree=max_degree)
            combined = linear + inner
            combined.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
            return combined
        if linear and not rest:
            return linear
    return _gb.buchberger(gens, order, max_degree=max_degree)


def normal_form(f: Polynomial, I: Ideal, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Unique remainder of f modulo I under the given order."""
    return _gb.normal_form_poly(f, I.groebner_basis(order), order)


def initial_ideal(I: Ideal, order: MonomialOrder = DEGREVLEX) -> Ideal:
    """Monomial ideal of leading monomials."""
    gb = I.groebner_basis(order)
    return monomial_ideal([g.leading_monomial(order) for g in gb], I.nvars)


def equal(I: Ideal, J: Ideal) -> bool:
    if I.nvars != J.nvars:
        return False
    return I.groebner_basis(DEGREVLEX) == J.groebner_basis(DEGREVLEX)


def minimal_generators(I: Ideal) -> List[Polynomial]:
    """Minimal homogeneous generators.

    In each degree d, the reduced basis elements of degree d span I_d together
    with P_1 * I_{d-1}, so a basis of I_d modulo P_1 * I_{d-1} chosen among
    them is a minimal generating set in that degree.
    """
    if I.is_zero():
        return []
    if I.is_monomial():
        return [Polynomial.monomial(e) for e in I.monomial_generators()]
    gb = list(I.groebner_basis(DEGREVLEX))
    degrees = sorted({g.homogeneous_degree() for g in gb})
    kept: List[Polynomial] = []
    for d in degrees:
        lower = Ideal(kept, I.nvars).graded_piece(d) if kept else Subspace([], count_monomials(d, I.nvars))
        monos = graded_monomial_basis(d, I.nvars)
        index = {e: i for i, e in enumerate(monos)}
        space = lower
        for g in gb:
            if g.homogeneous_degree() != d:
                continue
            if not space.contains(_coords(g, index)):
                kept.append(g)
                space = space.extended([_coords(g, index)])
    return kept


# ---------------------------------------------------------------------------
# elimination machinery

def _tag_extend(p: Polynomial) -> Polynomial:
    """View p in the ring with a leading elimination tag variable."""
    return Polynomial({(0,) + e: c for e, c in p.terms.items()}, p.nvars + 1)


def eliminate_tag(gens_ext: Sequence[Polynomial], nvars: int) -> List[Polynomial]:
    """Groebner-eliminate the leading tag variable; returns generators of the
    contraction to the original ring."""
    order = elimination_order(1)
    gb = _gb.buchberger(list(gens_ext), order)
    out = []
    for g in gb:
        if all(e[0] == 0 for e in g.terms):
            out.append(Polynomial({e[1:]: c for e, c in g.terms.items()}, nvars))
    return out


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """Exact ideal intersection via one auxiliary tag variable."""
    if I.nvars != J.nvars:
        raise ValueError("ideals live in different rings")
    if I.is_zero() or J.is_zero():
        return Ideal([], I.nvars)
    if I.is_monomial() and J.is_monomial():
        return _monomial_intersect(I.monomial_generators(), J.monomial_generators(), I.nvars)
    n = I.nvars
    u = Polynomial.variable(0, n + 1)
    one = Polynomial.constant(1, n + 1)
    ext = [u * _tag_extend(g) for g in I.gens]
    ext += [(one - u) * _tag_extend(g) for g in J.gens]
    return Ideal(eliminate_tag(ext, n), n)


def divide_exact(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """f / g when g divides f exactly, else None."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r, quots = _gb.division_quotients(f, [g])
    return quots[0] if r.is_zero() else None


def quotient(I: Ideal, f: Polynomial) -> Ideal:
    """Colon ideal I : f = {g : g*f in I}."""
    if f.is_zero():
        raise ValueError("cannot form the colon ideal by zero")
    if not f.is_homogeneous():
        raise ValueError("colon divisor must be homogeneous")
    if I.is_zero():
        return Ideal([], I.nvars)
    if I.is_monomial() and f.is_monomial():
        fm = f.leading_monomial()
        quots = [
            monomial_div(monomial_lcm(m, fm), fm) for m in I.monomial_generators()
        ]
        return monomial_ideal(quots, I.nvars)
    inter = intersect(I, Ideal([f], I.nvars))
    out = []
    for g in inter.gens:
        q = divide_exact(g, f)
        if q is None:
            raise ArithmeticError("intersection with a principal ideal must be divisible")
        out.append(q)
    return Ideal(out, I.nvars)


def _permute_poly(p: Polynomial, perm: Sequence[int]) -> Polynomial:
    return Polynomial({tuple(e[i] for i in perm): c for e, c in p.terms.items()}, p.nvars)


def saturate_by_variable(I: Ideal, var: int) -> Ideal:
    """I : x_var^infinity via the degrevlex last-variable division trick."""
    if I.is_zero():
        return I
    if I.is_monomial():
        return monomial_ideal(
            _monomial_saturate_var(I.monomial_generators(), var, I.nvars), I.nvars
        )
    n = I.nvars
    perm = [i for i in range(n) if i != var] + [var]
    inv = [perm.index(i) for i in range(n)]
    gens = [_permute_poly(g, perm) for g in I.gens]
    gb = groebner_basis(gens, DEGREVLEX)
    out = []
    for g in gb:
        v = min(e[n - 1] for e in g.terms)
        if v:
            g = Polynomial(
                {e[: n - 1] + (e[n - 1] - v,): c for e, c in g.terms.items()}, n
            )
        out.append(_permute_poly(g, inv))
    return Ideal(out, n)


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """Stable colon ideal I : f^infinity."""
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    var = _as_variable(f)
    if var is not None:
        return saturate_by_variable(I, var)
    if f.homogeneous_degree() == 1:
        # change coordinates so the form becomes the last variable
        change = _linear_to_last_variable(f)
        moved = Ideal([change.apply(g) for g in I.gens], I.nvars)
        sat = saturate_by_variable(moved, I.nvars - 1)
        back = change.inverse()
        return Ideal([back.apply(g) for g in sat.gens], I.nvars)
    current = I
    while True:
        nxt = quotient(current, f)
        if equal(nxt, current):
            return current
        current = nxt


def _as_variable(f: Polynomial) -> Optional[int]:
    if len(f.terms) != 1:
        return None
    (e,) = f.terms
    if sum(e) == 1:
        return e.index(1)
    return None


def _linear_to_last_variable(f: Polynomial):
    """Invertible change sending the linear form f to the last variable."""
    from .poly import LinearChange

    n = f.nvars
    coeffs = [f.coefficient(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
    lead = next(i for i, c in enumerate(coeffs) if c)
    rows = []
    for i in range(n):
        if i == lead:
            continue
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        rows.append(row)
    rows.append(coeffs)
    # forms transform by v -> v * A, so A = M^{-1} sends f to the last variable
    m = LinearChange(rows)
    return m.inverse()


def is_unit_ideal(I: Ideal) -> bool:
    return any(g.homogeneous_degree() == 0 for g in I.gens)


def saturate_irrelevant(I: Ideal) -> Ideal:
    """Saturation by the irrelevant maximal ideal: the largest homogeneous
    ideal with the same sheaf.  Computed as the intersection of the
    saturations by each variable (unit factors drop out)."""
    if I.is_zero():
        return I
    sats = [saturate_by_variable(I, var) for var in range(I.nvars)]
    nontrivial = [s for s in sats if not is_unit_ideal(s)]
    if not nontrivial:
        return Ideal([Polynomial.constant(1, I.nvars)], I.nvars)
    result = nontrivial[0]
    for s in nontrivial[1:]:
        result = intersect(result, s)
    return result


def syzygy_generators(
    I: Ideal, order: MonomialOrder = DEGREVLEX
) -> List[List[Polynomial]]:
    """Generating set of the syzygy module of I's listed generators."""
    return syzygies_of(list(I.gens), order)


def syzygies_of(
    gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX
) -> List[List[Polynomial]]:
    """Generators of {(s_i) : sum s_i gens_i = 0}.

    Monomial generators get the pairwise lcm (Taylor) syzygies, which generate;
    otherwise syzygies of the reduced basis are transported along the change of
    generating sets.
    """
    gens = list(gens)
    nvars = gens[0].nvars
    zero = Polynomial.zero(nvars)
    if all(g.is_monomial() for g in gens):
        out = []
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                mi, ci = gens[i].leading_monomial(order), gens[i].leading_coefficient(order)
                mj, cj = gens[j].leading_monomial(order), gens[j].leading_coefficient(order)
                lcm = monomial_lcm(mi, mj)
                row = [zero] * len(gens)
                row[i] = Polynomial.monomial(monomial_div(lcm, mi), Fraction(1, ci))
                row[j] = Polynomial.monomial(monomial_div(lcm, mj), Fraction(-1, cj))
                out.append(row)
        return out
    gb, reps = _gb.buchberger_with_reps(gens, order)
    gb_syz = _gb.gb_syzygies(gb, order)
    # express each original generator over the basis: gens = A * gb
    a_rows = []
    for g in gens:
        r, quots = _gb.division_quotients(g, gb, order)
        if not r.is_zero():
            raise ArithmeticError("generator failed to reduce against its own basis")
        a_rows.append(quots)
    # syzygies of gens: transported basis syzygies plus rows of (Id - A B)
    out = []
    for s in gb_syz:
        row = [zero] * len(gens)
        for k, sk in enumerate(s):
            if not sk:
                continue
            for j in range(len(gens)):
                if reps[k][j]:
                    row[j] = row[j] + sk * reps[k][j]
        if any(row):
            out.append(row)
    for i in range(len(gens)):
        row = [zero] * len(gens)
        row[i] = Polynomial.constant(1, nvars)
        for k, quo in enumerate(a_rows[i]):
            if not quo:
                continue
            for j in range(len(gens)):
                if reps[k][j]:
                    row[j] = row[j] - quo * reps[k][j]
        if any(row):
            out.append(row)
    return out
