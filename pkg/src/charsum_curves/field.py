"""Exact arithmetic in the prime field F_p.

A FieldContext fixes an odd prime p together with its least primitive root
and full discrete-log/exponential tables, so that every later character
evaluation is a table lookup.  Desk-scale primes only: tables take O(p)
memory and the context is immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator

from .errors import (
    EvenPrimeError,
    NonResidueError,
    NoRepresentationError,
    NotPrimeError,
    ZeroArgumentError,
)


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_in_range(lo: int, hi: int) -> Iterator[int]:
    """Yield primes p with lo <= p <= hi in increasing order."""
    for n in range(max(lo, 2), hi + 1):
        if is_prime(n):
            yield n


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def least_primitive_root(p: int) -> int:
    """Smallest g generating the full multiplicative group mod p."""
    targets = [(p - 1) // q for q in _prime_factors(p - 1)]
    for g in range(2, p):
        if all(pow(g, t, p) != 1 for t in targets):
            return g
    raise NotPrimeError(f"{p} has no primitive root; it is not prime")


@dataclass(frozen=True, eq=False)
class FieldContext:
    """An odd prime p with discrete-log tables against its least primitive root.

    log_table[x] = L(x) with g**L(x) == x mod p for x in 1..p-1 (entry 0 is -1);
    exp_table[m] = g**m mod p for m in 0..p-2.
    """

    p: int
    g: int
    log_table: tuple[int, ...]
    exp_table: tuple[int, ...]

    @property
    def group_order(self) -> int:
        return self.p - 1

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p}, g={self.g})"


@lru_cache(maxsize=512)
def build_field_context(p: int) -> FieldContext:
    """Build (and memoize) the field context for an odd prime p.

    Raises NotPrimeError if p is composite and EvenPrimeError for p = 2.
    """
    if p == 2:
        raise EvenPrimeError("p = 2: contexts are built for odd primes only")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    g = least_primitive_root(p)
    log = [-1] * p
    exp = [0] * (p - 1)
    acc = 1
    for m in range(p - 1):
        log[acc] = m
        exp[m] = acc
        acc = (acc * g) % p
    return FieldContext(p=p, g=g, log_table=tuple(log), exp_table=tuple(exp))


def discrete_log(ctx: FieldContext, x: int) -> int:
    """L(x) in Z/(p-1), looked up from the table.  x must be nonzero mod p."""
    x %= ctx.p
    if x == 0:
        raise ZeroArgumentError("discrete log of 0 is undefined")
    return ctx.log_table[x]


def quadratic_character_value(ctx: FieldContext, x: int) -> int:
    """Legendre symbol of x mod p: 0 at zero, +1 on squares, -1 otherwise."""
    x %= ctx.p
    if x == 0:
        return 0
    return 1 if ctx.log_table[x] % 2 == 0 else -1


def sqrt_mod(ctx: FieldContext, a: int) -> int:
    """The smaller square root of a mod p.

    a = g**L with L even has roots g**(L/2) and its negative; the minimum of
    the two is returned so the output is deterministic.
    """
    a %= ctx.p
    if a == 0:
        return 0
    log = ctx.log_table[a]
    if log % 2 != 0:
        raise NonResidueError(f"{a} is not a square mod {ctx.p}")
    r = ctx.exp_table[log // 2]
    return min(r, ctx.p - r)


@dataclass(frozen=True)
class TwoSquares:
    """Decomposition p = x**2 + y**2 with x odd, both parts positive."""

    x: int
    y: int


def two_squares_decomposition(p: int) -> TwoSquares:
    """Write a prime p = 1 mod 4 as x^2 + y^2 with x odd.

    Exhaustive O(sqrt p) scan; the normalization (x odd, y positive) makes
    the answer unique.  Raises NoRepresentationError when p = 3 mod 4.
    """
    if p % 4 != 1:
        raise NoRepresentationError(f"{p} is not 1 mod 4, no odd/even two-squares split")
    for x in range(1, isqrt(p) + 1, 2):
        rest = p - x * x
        y = isqrt(rest)
        if y * y == rest:
            return TwoSquares(x=x, y=y)
    raise NoRepresentationError(f"no two-squares decomposition found for {p}")
