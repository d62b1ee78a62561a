"""Generic initial ideals via randomized coordinate changes.

Genericity is enforced as a runtime contract: a candidate gin is accepted only
if it is strongly stable, two independent trials agree, and the Hilbert
function is preserved in low degrees; otherwise the coefficient bound doubles
and the draw repeats.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .borel import is_strongly_stable
from .hilbert import hilbert_function, standard_monomial_count
from .ideals import Ideal, equal, groebner_basis, monomial_ideal, saturate, saturate_irrelevant
from .orders import DEGREVLEX, Exponent
from .poly import LinearChange, count_monomials, linear_form

_HF_CHECK_DEGREE = 8
_MAX_ESCALATIONS = 6
_DEFAULT_SEED = 31415926


@dataclass(frozen=True)
class GinResult:
    gin: Ideal
    trials: int
    coefficient_bound: int
    seeds: Tuple[int, ...] = field(default_factory=tuple)


def _initial_of_transformed(I: Ideal, change: LinearChange) -> Tuple[Exponent, ...]:
    moved = [change.apply(g) for g in I.gens]
    gb = groebner_basis(moved, DEGREVLEX)
    return tuple(monomial_ideal([g.leading_monomial() for g in gb], I.nvars).monomial_generators())


def generic_initial_ideal(I: Ideal, rng: Optional[random.Random] = None) -> GinResult:
    """Degrevlex generic initial ideal with verified genericity.

    Accepts a candidate only when (a) it is strongly stable, (b) two
    independent random trials agree, and (c) the Hilbert function of I is
    preserved through degree 8.  Retries with doubled coefficient bound.
    """
    if I.is_zero():
        raise ValueError("gin of the zero ideal is undefined")
    if I._gin is not None:
        return I._gin
    if I.is_monomial() and is_strongly_stable(I):
        result = GinResult(gin=monomial_ideal(I.monomial_generators(), I.nvars), trials=0,
                           coefficient_bound=0)
        I._gin = result
        return result
    rng = rng if rng is not None else random.Random(_DEFAULT_SEED)
    hf_target = [hilbert_function(I, n) for n in range(_HF_CHECK_DEGREE + 1)]

    def acceptable(cand: Tuple[Exponent, ...]) -> bool:
        M = monomial_ideal(cand, I.nvars)
        if not is_strongly_stable(M):
            return False
        for n in range(_HF_CHECK_DEGREE + 1):
            ideal_dim = count_monomials(n, I.nvars) - standard_monomial_count(cand, n, I.nvars)
            if ideal_dim != hf_target[n]:
                return False
        return True

    bound = 10
    seeds: List[int] = []
    trials = 0
    for _ in range(_MAX_ESCALATIONS):
        draws = []
        for _ in range(2):
            seed = rng.getrandbits(48)
            seeds.append(seed)
            trials += 1
            change = LinearChange.random(random.Random(seed), I.nvars, bound)
            draws.append(_initial_of_transformed(I, change))
        if draws[0] != draws[1]:
            seed = rng.getrandbits(48)
            seeds.append(seed)
            trials += 1
            change = LinearChange.random(random.Random(seed), I.nvars, bound)
            third = _initial_of_transformed(I, change)
            if third == draws[0] or third == draws[1]:
                draws = [third, third]
        if draws[0] == draws[1] and acceptable(draws[0]):
            result = GinResult(
                gin=monomial_ideal(draws[0], I.nvars),
                trials=trials,
                coefficient_bound=bound,
                seeds=tuple(seeds),
            )
            I._gin = result
            return result
        bound *= 2
    raise ArithmeticError(
        "generic initial ideal did not stabilize after repeated escalation"
    )


def is_saturated(I: Ideal) -> bool:
    """True iff I equals its saturation by the irrelevant maximal ideal.

    Monomial ideals are checked combinatorially.  Otherwise a single random
    linear form is tried: equality of I with I : l^infinity certifies
    saturatedness (an unsaturated ideal grows under every such colon), and a
    prime-avoidance failure falls back to the exact intersection computation.
    """
    if I.is_zero():
        return True
    if I.is_monomial():
        if is_strongly_stable(I):
            last = I.nvars - 1
            return all(g[last] == 0 for g in I.monomial_generators())
        return equal(saturate_irrelevant(I), I)
    rng = random.Random(_DEFAULT_SEED + 1)
    for _ in range(2):
        coeffs = [rng.randint(-9, 9) for _ in range(I.nvars)]
        if not any(coeffs):
            coeffs[-1] = 1
        ell = linear_form(coeffs, I.nvars)
        if equal(saturate(I, ell), I):
            return True
    return equal(saturate_irrelevant(I), I)
