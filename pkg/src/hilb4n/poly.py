"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are exponent tuples (see orders.py); a polynomial is an immutable
map monomial -> Fraction with no zero coefficients stored.  The default ring
is k[x,y,z,t] with x > y > z > t; internal constructions extend it by a family
parameter ``a`` or an elimination tag.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .orders import DEGREVLEX, Exponent, MonomialOrder

RING_VARS = ("x", "y", "z", "t")
NVARS = len(RING_VARS)
PARAM_VAR = "a"
FAMILY_VARS = RING_VARS + (PARAM_VAR,)


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)

def monomial_degree(e: Exponent) -> int:
    return sum(e)


def monomial_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponent, b: Exponent) -> bool:
    """True iff the monomial a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponent, b: Exponent) -> Exponent:
    """Exponent tuple of a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: Exponent, b: Exponent) -> Exponent:
    return tuple(min(x, y) for x, y in zip(a, b))


def monomials_of_degree(n: int, nvars: int) -> Iterator[Exponent]:
    """All exponent tuples of total degree n."""
    if nvars == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in monomials_of_degree(n - first, nvars - 1):
            yield (first,) + rest


def count_monomials(n: int, nvars: int) -> int:
    """dim of the degree-n graded piece of a polynomial ring in nvars variables."""
    if n < 0:
        return 0
    num, den = 1, 1
    for i in range(1, nvars):
        num *= n + i
        den *= i
    return num // den


class Polynomial:
    """Immutable sparse polynomial; terms map exponent tuples to Fractions."""

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Dict[Exponent, Fraction] | Iterable, nvars: int = NVARS):
        items = terms.items() if isinstance(terms, dict) else terms
        clean: Dict[Exponent, Fraction] = {}
        for exp, coeff in items:
            c = Fraction(coeff)
            if c:
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not fit a {nvars}-variable ring")
                clean[exp] = clean.get(exp, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self.nvars = nvars
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(nvars: int = NVARS) -> "Polynomial":
        return Polynomial({}, nvars)

    @staticmethod
    def constant(c, nvars: int = NVARS) -> "Polynomial":
        return Polynomial({(0,) * nvars: Fraction(c)}, nvars)

    @staticmethod
    def variable(i: int, nvars: int = NVARS) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return Polynomial({tuple(e): Fraction(1)}, nvars)

    @staticmethod
    def monomial(e: Exponent, coeff=1) -> "Polynomial":
        return Polynomial({tuple(e): Fraction(coeff)}, len(e))

    # -- structure ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_degree(self) -> Optional[int]:
        """The common degree of all terms, or None if inhomogeneous / zero."""
        degs = {sum(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def graded_part(self, n: int) -> "Polynomial":
        return Polynomial({e: c for e, c in self.terms.items() if sum(e) == n}, self.nvars)

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        return Polynomial({e: c / lc for e, c in self.terms.items()}, self.nvars)

    def coefficient(self, e: Exponent) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(out, self.nvars)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return Polynomial(out, self.nvars)

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: Dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = monomial_mul(ea, eb)
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return Polynomial(out, self.nvars)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial({e: cf * c for e, cf in self.terms.items()}, self.nvars)

    def mul_monomial(self, e: Exponent, coeff=1) -> "Polynomial":
        coeff = Fraction(coeff)
        return Polynomial(
            {monomial_mul(m, e): c * coeff for m, c in self.terms.items()}, self.nvars
        )

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- substitution --------------------------------------------------------

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending variable i to images[i]; exact."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        tgt = images[0].nvars if images else self.nvars
        # cache powers of each image
        powers: List[Dict[int, Polynomial]] = [
            {0: Polynomial.constant(1, tgt)} for _ in images
        ]
        out = Polynomial.zero(tgt)
        for e, c in self.terms.items():
            term = Polynomial.constant(c, tgt)
            for i, ei in enumerate(e):
                if ei == 0:
                    continue
                cache = powers[i]
                if ei not in cache:
                    p = cache[max(cache)]
                    for k in range(max(cache) + 1, ei + 1):
                        p = p * images[i]
                        cache[k] = p
                term = term * cache[ei]
            out = out + term
        return out

    def evaluate(self, values: Sequence) -> Fraction:
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for ei, v in zip(e, vals):
                if ei:
                    term *= v**ei
            total += term
        return total

    def extend(self, extra: int = 1) -> "Polynomial":
        """View in a ring with ``extra`` additional trailing variables."""
        pad = (0,) * extra
        return Polynomial({e + pad: c for e, c in self.terms.items()}, self.nvars + extra)

    def contract(self, target_nvars: int) -> "Polynomial":
        """Drop trailing variables, which must not occur."""
        cut = self.nvars - target_nvars
        out = {}
        for e, c in self.terms.items():
            if any(e[target_nvars:]):
                raise ValueError("polynomial involves a dropped variable")
            out[e[:target_nvars]] = c
        return Polynomial(out, target_nvars)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"


# ---------------------------------------------------------------------------
# formatting

def format_polynomial(p: Polynomial, names: Sequence[str] | None = None) -> str:
    if p.is_zero():
        return "0"
    if names is None:
        names = RING_VARS if p.nvars == NVARS else FAMILY_VARS[: p.nvars]
        if len(names) < p.nvars:
            names = tuple(f"v{i}" for i in range(p.nvars))
    parts = []
    for e, c in p.sorted_terms():
        factors = []
        for name, ei in zip(names, e):
            if ei == 1:
                factors.append(name)
            elif ei > 1:
                factors.append(f"{name}^{ei}")
        mono = "*".join(factors)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# ---------------------------------------------------------------------------
# building blocks in the default ring

def variables(nvars: int = NVARS) -> Tuple[Polynomial, ...]:
    return tuple(Polynomial.variable(i, nvars) for i in range(nvars))


def linear_form(coeffs: Sequence, nvars: int = NVARS) -> Polynomial:
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * nvars
        e[i] = 1
        terms[tuple(e)] = Fraction(c)
    return Polynomial(terms, nvars)


def random_form(rng, degree: int, nvars: int = NVARS, bound: int = 5,
                var_subset: Sequence[int] | None = None) -> Polynomial:
    """Random homogeneous form with integer coefficients in [-bound, bound];
    resamples until nonzero.  var_subset restricts the variables used."""
    idx = list(range(nvars)) if var_subset is None else list(var_subset)
    monos = [
        e
        for e in monomials_of_degree(degree, nvars)
        if all(e[i] == 0 for i in range(nvars) if i not in idx)
    ]
    while True:
        terms = {e: Fraction(rng.randint(-bound, bound)) for e in monos}
        p = Polynomial(terms, nvars)
        if p:
            return p


# ---------------------------------------------------------------------------
# linear changes of coordinates

class LinearChange:
    """Invertible substitution: variable i maps to the linear form with
    coefficient row matrix[i]."""

    __slots__ = ("matrix", "nvars")

    def __init__(self, matrix: Sequence[Sequence]):
        m = [[Fraction(c) for c in row] for row in matrix]
        n = len(m)
        if any(len(row) != n for row in m):
            raise ValueError("matrix must be square")
        if _det(m) == 0:
            raise ValueError("linear change must be invertible (nonzero determinant)")
        self.matrix = tuple(tuple(row) for row in m)
        self.nvars = n

    @staticmethod
    def identity(nvars: int = NVARS) -> "LinearChange":
        return LinearChange([[1 if i == j else 0 for j in range(nvars)] for i in range(nvars)])

    @staticmethod
    def random(rng, nvars: int = NVARS, bound: int = 10) -> "LinearChange":
        while True:
            m = [[rng.randint(-bound, bound) for _ in range(nvars)] for _ in range(nvars)]
            try:
                return LinearChange(m)
            except ValueError:
                continue

    def images(self) -> Tuple[Polynomial, ...]:
        return tuple(linear_form(row, self.nvars) for row in self.matrix)

    def apply(self, p: Polynomial) -> Polynomial:
        if p.nvars != self.nvars:
            raise ValueError("polynomial and change act on different rings")
        return p.substitute(self.images())

    def compose(self, other: "LinearChange") -> "LinearChange":
        """Change acting as: first ``other``, then ``self``."""
        n = self.nvars
        prod = [
            [sum(other.matrix[i][k] * self.matrix[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        return LinearChange(prod)

    def inverse(self) -> "LinearChange":
        n = self.nvars
        aug = [list(self.matrix[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[pivot] = aug[pivot], aug[col]
            pv = aug[col][col]
            aug[col] = [v / pv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return LinearChange([row[n:] for row in aug])

    def __repr__(self):
        return f"LinearChange({[list(map(str, row)) for row in self.matrix]})"


def _det(m: List[List[Fraction]]) -> Fraction:
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return det


def apply_change(p: Polynomial, g: LinearChange) -> Polynomial:
    """Image of p under the coordinate substitution g; preserves degree."""
    return g.apply(p)
