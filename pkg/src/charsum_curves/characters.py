"""Multiplicative characters of F_p, extended to all of F_p by chi(0) = 0.

The character group is cyclic of order p-1: against the fixed primitive root
g, the character with index k sends g**m to zeta**(k*m) where zeta is the
primitive (p-1)-th root of unity exp(2*pi*i/(p-1)).  Values are carried
around as exact root-of-unity exponents and only converted to floating
complex at the edge of a computation.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContextMismatchError
from .field import FieldContext


@lru_cache(maxsize=64)
def roots_of_unity(n: int) -> tuple[complex, ...]:
    """exp(2*pi*i*k/n) for k in 0..n-1, with exact values at quarter turns."""
    quarter = (1 + 0j, 1j, -1 + 0j, -1j)
    return tuple(
        quarter[4 * k // n] if 4 * k % n == 0 else cmath.exp(2j * cmath.pi * k / n)
        for k in range(n)
    )


@dataclass(frozen=True)
class CharValue:
    """A character value: zero, or the root of unity zeta**exponent.

    order is the order of zeta (always p-1 here); exponent None encodes the
    value 0, which absorbs multiplication.
    """

    order: int
    exponent: int | None

    @classmethod
    def zero(cls, order: int) -> CharValue:
        return cls(order=order, exponent=None)

    @classmethod
    def root(cls, order: int, exponent: int) -> CharValue:
        return cls(order=order, exponent=exponent % order)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: CharValue) -> CharValue:
        if self.order != other.order:
            raise ContextMismatchError("cannot multiply values of different root orders")
        if self.exponent is None or other.exponent is None:
            return CharValue.zero(self.order)
        return CharValue.root(self.order, self.exponent + other.exponent)

    def conjugate(self) -> CharValue:
        if self.exponent is None:
            return self
        return CharValue.root(self.order, -self.exponent)

    def as_complex(self) -> complex:
        if self.exponent is None:
            return 0j
        return roots_of_unity(self.order)[self.exponent]


@dataclass(frozen=True)
class Character:
    """The multiplicative character of F_p with the given index mod p-1."""

    ctx: FieldContext
    index: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "index", self.index % self.ctx.group_order)

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    @property
    def is_quadratic(self) -> bool:
        return self.index == self.ctx.group_order // 2

    @property
    def order(self) -> int:
        from math import gcd

        n = self.ctx.group_order
        return n // gcd(self.index, n)

    def __call__(self, x: int) -> CharValue:
        n = self.ctx.group_order
        x %= self.ctx.p
        if x == 0:
            return CharValue.zero(n)
        return CharValue.root(n, self.index * self.ctx.log_table[x])

    def __mul__(self, other: Character) -> Character:
        if self.ctx.p != other.ctx.p:
            raise ContextMismatchError(
                f"characters over different fields: p={self.ctx.p} vs p={other.ctx.p}"
            )
        return Character(self.ctx, self.index + other.index)

    def conjugate(self) -> Character:
        return Character(self.ctx, -self.index)

    def at_minus_one(self) -> int:
        """chi(-1) as an exact integer, always +1 or -1."""
        n = self.ctx.group_order
        return 1 if (self.index * (n // 2)) % n == 0 else -1

    def __repr__(self) -> str:
        if self.is_trivial:
            return f"eps(p={self.ctx.p})"
        if self.is_quadratic:
            return f"phi(p={self.ctx.p})"
        return f"chi_{self.index}(p={self.ctx.p})"


def character_by_index(ctx: FieldContext, k: int) -> Character:
    return Character(ctx, k)


def trivial_character(ctx: FieldContext) -> Character:
    return Character(ctx, 0)


def quadratic_character(ctx: FieldContext) -> Character:
    return Character(ctx, ctx.group_order // 2)


def all_characters(ctx: FieldContext) -> list[Character]:
    """All p-1 characters, ordered by index; entry 0 is trivial."""
    return [Character(ctx, k) for k in range(ctx.group_order)]
