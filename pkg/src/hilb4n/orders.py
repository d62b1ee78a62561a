"""Monomial orders on exponent tuples.

A monomial is a plain tuple of non-negative integer exponents, one per ring
variable, with variables listed from greatest to least (default x > y > z > t).
Each order turns an exponent tuple into a sort key; Python's native tuple
comparison on keys realizes the order, so ``max(terms, key=order.key)`` is the
leading monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

Exponent = Tuple[int, ...]


class MonomialOrder:
    """Base class: a multiplicative total well-order on monomials."""

    name = "order"

    def key(self, e: Exponent):
        raise NotImplementedError

    def compare(self, a: Exponent, b: Exponent) -> int:
        """Return -1, 0, or 1 as a <, =, > b."""
        if len(a) != len(b):
            raise ValueError(f"monomials live in different rings: {a} vs {b}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        return self.name


@dataclass(frozen=True, repr=False)
class Lex(MonomialOrder):
    name = "lex"

    def key(self, e: Exponent):
        return e


@dataclass(frozen=True, repr=False)
class DegRevLex(MonomialOrder):
    """Degree first; ties broken by the reverse-lex rule (the monomial whose
    last nonzero exponent difference is negative wins)."""

    name = "degrevlex"

    def key(self, e: Exponent):
        return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True, repr=False)
class WeightOrder(MonomialOrder):
    """Weight-vector comparison refined by a tiebreak order."""

    weights: Tuple[int, ...]
    tiebreak: MonomialOrder

    @property
    def name(self):
        return f"weight{list(self.weights)}/{self.tiebreak.name}"

    def key(self, e: Exponent):
        w = sum(wi * ei for wi, ei in zip(self.weights, e))
        return (w, self.tiebreak.key(e))


@dataclass(frozen=True, repr=False)
class BlockOrder(MonomialOrder):
    """Block (elimination) order: the first ``split`` variables are compared
    by ``first``, ties by ``second`` on the remaining variables.  Any monomial
    involving a block-one variable is greater than every monomial free of
    them, so block-one variables can be eliminated from a Groebner basis."""

    split: int
    first: MonomialOrder
    second: MonomialOrder

    @property
    def name(self):
        return f"block({self.split};{self.first.name},{self.second.name})"

    def key(self, e: Exponent):
        return (self.first.key(e[: self.split]), self.second.key(e[self.split :]))


DEGREVLEX = DegRevLex()
LEX = Lex()


def elimination_order(num_eliminated: int) -> BlockOrder:
    """Order eliminating the first ``num_eliminated`` variables, degrevlex
    within each block."""
    return BlockOrder(num_eliminated, DEGREVLEX, DEGREVLEX)


def order_by_name(name: str) -> MonomialOrder:
    table = {"degrevlex": DEGREVLEX, "lex": LEX}
    try:
        return table[name]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}; choose from {sorted(table)}")


def compare_monomials(a: Exponent, b: Exponent, order: MonomialOrder) -> int:
    """Compare two exponent tuples under ``order``; -1/0/1 for less/equal/greater."""
    return order.compare(tuple(a), tuple(b))
