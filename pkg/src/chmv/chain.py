"""Exact arithmetic in Lukasiewicz chains.

A chain is either the finite subalgebra L_n = {0, 1/(n-1), ..., 1} of the
unit interval (n >= 2) or the full rational unit interval, written Linf.
All values are Fractions in lowest terms, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ChainError(ValueError):
    """Base class for chain arithmetic errors."""


class OutOfRangeError(ChainError):
    """Value outside the unit interval."""


class NotInChainError(ChainError):
    """Value in [0,1] but not on the grid of a finite chain."""


class ChainMismatchError(ChainError):
    """Binary operation applied to values from different chains."""


@dataclass(frozen=True)
class ChainSize:
    """Size tag of a chain: L_n when n is an int >= 2, Linf when n is None."""

    n: int | None = None

    def __post_init__(self) -> None:
        if self.n is not None and (not isinstance(self.n, int) or self.n < 2):
            raise ChainError(f"chain size must be an integer >= 2, got {self.n!r}")

    @property
    def is_finite(self) -> bool:
        return self.n is not None

    def values(self) -> list[Fraction]:
        """All elements of a finite chain, in increasing order."""
        if self.n is None:
            raise ChainError("cannot enumerate the infinite chain")
        return [Fraction(k, self.n - 1) for k in range(self.n)]

    def __str__(self) -> str:
        return "Linf" if self.n is None else f"L{self.n}"


LINF = ChainSize(None)


def check_member(v: Fraction, c: ChainSize) -> None:
    """Raise unless v is an element of the chain c."""
    if v < _ZERO or v > _ONE:
        raise OutOfRangeError(f"{v} is outside [0, 1]")
    if c.is_finite and (v * (c.n - 1)).denominator != 1:
        raise NotInChainError(f"{v} is not a multiple of 1/{c.n - 1}")


@dataclass(frozen=True)
class ChainValue:
    """An exact rational element of a chain."""

    chain: ChainSize
    value: Fraction

    def __post_init__(self) -> None:
        check_member(self.value, self.chain)

    def __str__(self) -> str:
        return str(self.value)


def make_chain_value(v, c: ChainSize) -> ChainValue:
    """Build a chain value, normalizing to lowest terms."""
    return ChainValue(c, Fraction(v))


# Fraction-level operations, shared with the pointwise algebra code.

def frac_oplus(a: Fraction, b: Fraction) -> Fraction:
    return min(a + b, _ONE)


def frac_neg(a: Fraction) -> Fraction:
    return _ONE - a


def frac_odot(a: Fraction, b: Fraction) -> Fraction:
    return max(a + b - _ONE, _ZERO)


FRAC_OPS = {
    "oplus": frac_oplus,
    "odot": frac_odot,
    "meet": min,
    "join": max,
}

MV_OP_KINDS = ("oplus", "neg", "odot", "meet", "join")


def mv_op(kind: str, a: ChainValue, b: ChainValue | None = None) -> ChainValue:
    """Apply one of the five MV operations inside a single chain.

    Chains are closed under all five, so the result lives in a.chain.
    """
    if kind == "neg":
        if b is not None:
            raise ChainError("neg takes a single operand")
        return ChainValue(a.chain, frac_neg(a.value))
    if kind not in FRAC_OPS:
        raise ChainError(f"unknown operation {kind!r}")
    if b is None:
        raise ChainError(f"{kind} needs two operands")
    if a.chain != b.chain:
        raise ChainMismatchError(f"operands live in {a.chain} and {b.chain}")
    return ChainValue(a.chain, FRAC_OPS[kind](a.value, b.value))


def nat_mult(n: int, a: ChainValue) -> ChainValue:
    """n-fold truncated sum: min(n * a, 1)."""
    if n < 1:
        raise ChainError(f"multiplier must be >= 1, got {n}")
    return ChainValue(a.chain, min(n * a.value, _ONE))


def chain_subset(c1: ChainSize, c2: ChainSize) -> bool:
    """Whether every element of the chain c1 belongs to c2.

    L_n sits inside L_m exactly when (n-1) divides (m-1); every chain sits
    inside Linf; Linf sits in no finite chain.
    """
    if not c2.is_finite:
        return True
    if not c1.is_finite:
        return False
    return (c2.n - 1) % (c1.n - 1) == 0
