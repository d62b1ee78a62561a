"""Hilbert functions, Hilbert polynomials, regularity, Macaulay growth, and
Gotzmann numbers.

Conventions are ideal-side: hilbert_function(I, n) = dim I_n; quotient-side
values are obtained by subtracting from dim P_n.  All values are exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .ideals import Ideal, initial_ideal, minimalize_monomials
from .orders import Exponent
from .poly import Polynomial, count_monomials, monomial_divides, monomials_of_degree


# ---------------------------------------------------------------------------
# Hilbert polynomials

class HilbertPolynomial:
    """Polynomial in n with rational coefficients, ascending-power storage."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "HilbertPolynomial":
        return HilbertPolynomial([])

    @staticmethod
    def constant(c) -> "HilbertPolynomial":
        return HilbertPolynomial([c])

    @staticmethod
    def binomial(shift: int, k: int) -> "HilbertPolynomial":
        """The polynomial n -> C(n + shift, k)."""
        out = HilbertPolynomial.constant(Fraction(1, 1))
        for j in range(k):
            out = out * HilbertPolynomial([shift - j, 1])
        return out * Fraction(1, _factorial(k))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, n: int) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * n + c
        return total

    def __add__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        a, b = self.coeffs, other.coeffs
        length = max(len(a), len(b))
        return HilbertPolynomial(
            [
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                for i in range(length)
            ]
        )

    def __sub__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        return self + other * Fraction(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HilbertPolynomial([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return HilbertPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, HilbertPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def gotzmann_decomposition(self) -> List[int]:
        """Exponents (a_1 >= a_2 >= ... >= a_r >= 0) of the unique binomial
        decomposition p(n) = sum_i C(n + a_i - i + 1, a_i)."""
        return _gotzmann_decomposition(self)

    def __repr__(self):
        return f"HilbertPolynomial({format_hp(self)})"


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def format_hp(p: HilbertPolynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for power in range(p.degree(), -1, -1):
        c = p.coeffs[power]
        if not c:
            continue
        if power == 0:
            body = str(abs(c))
        else:
            mono = "n" if power == 1 else f"n^{power}"
            body = mono if abs(c) == 1 else f"({abs(c)})*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _gotzmann_decomposition(p: HilbertPolynomial, max_terms: int = 10000) -> List[int]:
    if p.is_zero():
        return []
    q = p
    exponents: List[int] = []
    i = 0
    while not q.is_zero():
        i += 1
        if i > max_terms:
            raise ValueError("no Gotzmann decomposition: too many terms")
        a = q.degree()
        if a < 0 or q.leading_coefficient() <= 0:
            raise ValueError("no Gotzmann decomposition: not a quotient Hilbert polynomial")
        if exponents and a > exponents[-1]:
            raise ValueError("no Gotzmann decomposition: exponents not descending")
        term = HilbertPolynomial.binomial(a - i + 1, a)
        q = q - term
        exponents.append(a)
        if not q.is_zero() and (q.degree() > a or q.leading_coefficient() < 0):
            raise ValueError("no Gotzmann decomposition: not a quotient Hilbert polynomial")
    return exponents


def gotzmann_number(p: HilbertPolynomial) -> int:
    """Number of terms of the binomial decomposition; bounds the regularity of
    every saturated ideal with quotient Hilbert polynomial p."""
    return len(_gotzmann_decomposition(p))


# ---------------------------------------------------------------------------
# Hilbert functions

class HilbertFunction:
    """Table of graded dimensions dim I_n for an ideal."""

    __slots__ = ("table", "nvars")

    def __init__(self, table: Dict[int, int], nvars: int):
        self.table = dict(table)
        self.nvars = nvars

    @staticmethod
    def of_ideal(I: Ideal, upto: int) -> "HilbertFunction":
        return HilbertFunction({n: hilbert_function(I, n) for n in range(upto + 1)}, I.nvars)

    def values(self, upto: int) -> Tuple[int, ...]:
        return tuple(self.table[n] for n in range(upto + 1))

    def __getitem__(self, n: int) -> int:
        return self.table[n]

    def __repr__(self):
        vals = [self.table[k] for k in sorted(self.table)]
        return f"HilbertFunction({vals})"


def _initial_generators(I: Ideal) -> List[Exponent]:
    if I.is_zero():
        return []
    if I.is_monomial():
        return I.monomial_generators()
    return initial_ideal(I).monomial_generators()


def standard_monomial_count(gens: Sequence[Exponent], n: int, nvars: int) -> int:
    """Number of degree-n monomials outside the monomial ideal."""
    relevant = [g for g in gens if sum(g) <= n]
    if not relevant:
        return count_monomials(n, nvars)
    count = 0
    for m in monomials_of_degree(n, nvars):
        if not any(monomial_divides(g, m) for g in relevant):
            count += 1
    return count


def hilbert_function(I: Ideal, n: int) -> int:
    """dim_k I_n, via standard monomials of the degrevlex initial ideal."""
    if n < 0:
        raise ValueError("Hilbert function is defined for non-negative degrees")
    if I.is_zero():
        return 0
    gens = _initial_generators(I)
    return count_monomials(n, I.nvars) - standard_monomial_count(gens, n, I.nvars)


def quotient_hilbert_function(I: Ideal, n: int) -> int:
    return count_monomials(n, I.nvars) - hilbert_function(I, n)


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals (exact numerator over (1-T)^nvars)

def _series_numerator(gens: Tuple[Exponent, ...], nvars: int) -> Dict[int, int]:
    gens = tuple(sorted(minimalize_monomials(gens)))
    return dict(_series_numerator_cached(gens, nvars))


@lru_cache(maxsize=None)
def _series_numerator_cached(gens: Tuple[Exponent, ...], nvars: int) -> Tuple[Tuple[int, int], ...]:
    if not gens:
        return ((0, 1),)
    # pairwise coprime generators: Koszul product
    coprime = all(
        not any(min(a, b) for a, b in zip(gens[i], gens[j]))
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )
    if coprime:
        num = {0: 1}
        for g in gens:
            d = sum(g)
            new: Dict[int, int] = {}
            for k, c in num.items():
                new[k] = new.get(k, 0) + c
                new[k + d] = new.get(k + d, 0) - c
            num = new
        return tuple(sorted(num.items()))
    # split on a variable power occurring in several generators
    counts = [sum(1 for g in gens if g[v]) for v in range(nvars)]
    var = max(range(nvars), key=lambda v: counts[v])
    exp = min(g[var] for g in gens if g[var])
    pivot = tuple(exp if i == var else 0 for i in range(nvars))
    plus = minimalize_monomials(list(gens) + [pivot])
    colon = minimalize_monomials(
        tuple(max(gi - pi, 0) for gi, pi in zip(g, pivot)) for g in gens
    )
    n_plus = _series_numerator(tuple(plus), nvars)
    n_colon = _series_numerator(tuple(colon), nvars)
    out: Dict[int, int] = dict(n_plus)
    d = sum(pivot)
    for k, c in n_colon.items():
        out[k + d] = out.get(k + d, 0) + c
    return tuple(sorted((k, c) for k, c in out.items() if c))


def _quotient_hp_from_series(gens: Sequence[Exponent], nvars: int) -> Tuple[HilbertPolynomial, int]:
    """Quotient Hilbert polynomial of a monomial ideal plus the degree from
    which the Hilbert function equals it."""
    num = _series_numerator(tuple(gens), nvars)
    hp = HilbertPolynomial.zero()
    for d, c in num.items():
        hp = hp + HilbertPolynomial.binomial(nvars - 1 - d, nvars - 1) * c
    cutoff = max((d for d in num), default=0) - nvars + 1
    return hp, max(cutoff, 0)


def ambient_hilbert_polynomial(nvars: int) -> HilbertPolynomial:
    return HilbertPolynomial.binomial(nvars - 1, nvars - 1)


def hilbert_polynomial(I: Ideal) -> HilbertPolynomial:
    """The unique polynomial agreeing with hilbert_function(I, n) for large n.

    Interpolated at four consecutive degrees past every stabilization bound,
    guarded by four extra evaluations and by the exact Hilbert-series value.
    """
    if I._hp is not None:
        return I._hp
    if I.is_zero():
        I._hp = HilbertPolynomial.zero()
        return I._hp
    gens = _initial_generators(I)
    series_quotient, cutoff = _quotient_hp_from_series(gens, I.nvars)
    series_hp = ambient_hilbert_polynomial(I.nvars) - series_quotient
    max_gen_degree = max(sum(g) for g in gens)
    base = max(6, max_gen_degree, cutoff)
    points = [
        (n, hilbert_function(I, n)) for n in range(base, base + I.nvars)
    ]
    interp = _interpolate(points)
    for n in range(base + I.nvars, base + I.nvars + 4):
        if interp(n) != hilbert_function(I, n):
            raise ArithmeticError("Hilbert polynomial guard failed: bad stabilization bound")
    if interp != series_hp:
        raise ArithmeticError("Hilbert polynomial guard failed: series/interpolation disagree")
    I._hp = interp
    return interp


def _interpolate(points: Sequence[Tuple[int, int]]) -> HilbertPolynomial:
    out = HilbertPolynomial.zero()
    for i, (xi, yi) in enumerate(points):
        term = HilbertPolynomial.constant(yi)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            term = term * HilbertPolynomial([-xj, 1]) * Fraction(1, xi - xj)
        out = out + term
    return out


def quotient_hilbert_polynomial(I: Ideal) -> HilbertPolynomial:
    return ambient_hilbert_polynomial(I.nvars) - hilbert_polynomial(I)


# ---------------------------------------------------------------------------
# regularity

def regularity(I: Ideal) -> int:
    """Castelnuovo-Mumford regularity: the maximal minimal-generator degree of
    the generic initial ideal (characteristic 0, degrevlex)."""
    if I.is_zero():
        raise ValueError("regularity of the zero ideal is undefined")
    from .borel import is_strongly_stable

    if I.is_monomial() and is_strongly_stable(I):
        return max(sum(g) for g in I.monomial_generators())
    from .gin import generic_initial_ideal

    result = generic_initial_ideal(I)
    return max(sum(g) for g in result.gin.monomial_generators())


# ---------------------------------------------------------------------------
# Macaulay minimal growth

def lex_segment(size: int, degree: int, nvars: int) -> List[Exponent]:
    monos = sorted(monomials_of_degree(degree, nvars), reverse=True)
    if size > len(monos) or size < 0:
        raise ValueError(f"no lex segment of size {size} in degree {degree}, {nvars} variables")
    return monos[:size]


def macaulay_min_growth(a: int, d: int, r: int) -> int:
    """Minimal dimension of P_1 * W over a-dimensional subspaces W of the
    degree-d forms in r variables; attained by the lexicographic segment."""
    total = count_monomials(d, r)
    if not 0 <= a <= total:
        raise ValueError(f"subspace dimension {a} out of range 0..{total}")
    if a == 0:
        return 0
    segment = lex_segment(a, d, r)
    grown = {
        tuple(m[k] + (1 if k == i else 0) for k in range(r))
        for m in segment
        for i in range(r)
    }
    return len(grown)
