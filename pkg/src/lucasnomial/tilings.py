"""Monomino/domino tilings of a 1 x n strip, linear and circular.

A tiling's weight is s^(monominoes) * t^(dominoes), where a wrap-around
domino counts like any other.  Two conventions carry real content: the
empty tiling weighs 1 as a linear tiling but 2 as a circular one, and for
n = 2 the straight domino and the wrap domino are distinct circular
tilings (the companion polynomial s^2 + 2t forces both).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .errors import DomainError
from .lucas import lucas_F, lucas_L
from .poly import BivariatePolynomial, ONE, T, TWO, ZERO

MONO = "M"
DOMINO = "D"

LINEAR = "linear"
LINEAR_NOLEAD = "linear_nolead"
CIRCULAR = "circular"
KINDS = (LINEAR, LINEAR_NOLEAD, CIRCULAR)


@dataclass(frozen=True)
class Tiling:
    """One covering of a strip; wrap marks the circular domino, which covers
    the last and first squares, so tiles then lists only squares 2..n-1."""

    kind: str
    tiles: tuple[str, ...]
    wrap: bool = False

    def __post_init__(self) -> None:
        if self.kind not in (LINEAR, CIRCULAR):
            raise ValueError(f"unknown tiling kind {self.kind!r}")
        if any(t not in (MONO, DOMINO) for t in self.tiles):
            raise ValueError(f"unknown tile in {self.tiles!r}")
        if self.wrap and self.kind != CIRCULAR:
            raise ValueError("only circular tilings may wrap")

    @property
    def length(self) -> int:
        """Number of squares covered."""
        inner = sum(2 if t == DOMINO else 1 for t in self.tiles)
        return inner + (2 if self.wrap else 0)

    def weight(self) -> BivariatePolynomial:
        a, b, c = self.weight_exponents()
        return BivariatePolynomial.monomial(a, b, c)

    def weight_exponents(self) -> tuple[int, int, int]:
        """(s-power, t-power, coefficient) of the weight monomial."""
        if self.kind == CIRCULAR and not self.tiles and not self.wrap:
            return 0, 0, 2
        monos = self.tiles.count(MONO)
        doms = self.tiles.count(DOMINO) + (1 if self.wrap else 0)
        return monos, doms, 1

    def text(self) -> str:
        parts = (["(D)"] if self.wrap else []) + list(self.tiles)
        return " ".join(parts) if parts else "(empty)"


@cache
def _tile_seqs(n: int) -> tuple[tuple[str, ...], ...]:
    """All linear tile sequences covering n squares, lexicographic order."""
    if n == 0:
        return ((),)
    out = []
    if n >= 2:
        out.extend((DOMINO,) + rest for rest in _tile_seqs(n - 2))
    out.extend((MONO,) + rest for rest in _tile_seqs(n - 1))
    return tuple(out)


@cache
def _tiling_pool(kind: str, n: int) -> tuple[Tiling, ...]:
    if kind == LINEAR:
        return tuple(Tiling(LINEAR, seq) for seq in _tile_seqs(n))
    if kind == LINEAR_NOLEAD:
        if n == 0:
            return (Tiling(LINEAR, ()),)
        if n == 1:
            return ()
        return tuple(Tiling(LINEAR, (DOMINO,) + rest) for rest in _tile_seqs(n - 2))
    if kind == CIRCULAR:
        straight = tuple(Tiling(CIRCULAR, seq) for seq in _tile_seqs(n))
        if n < 2:
            return straight
        wrapped = tuple(Tiling(CIRCULAR, seq, wrap=True) for seq in _tile_seqs(n - 2))
        return straight + wrapped
    raise DomainError(f"unknown tiling kind {kind!r}")


def enumerate_tilings(kind: str, n: int) -> list[Tiling]:
    """Every tiling of a 1 x n strip, deterministically ordered.

    Order is lexicographic over tile sequences; circular tilings list the
    non-wrapping ones first.  linear_nolead drops tilings that begin with a
    monomino, which leaves nothing at n = 1 and only the empty tiling at
    n = 0.
    """
    if n < 0:
        raise DomainError("strip length must be nonnegative")
    return list(_tiling_pool(kind, n))


def gf(kind: str, n: int) -> BivariatePolynomial:
    """Closed form for the total weight over enumerate_tilings(kind, n)."""
    if n < 0:
        raise DomainError("strip length must be nonnegative")
    if kind == LINEAR:
        return lucas_F(n + 1)
    if kind == LINEAR_NOLEAD:
        if n == 0:
            return ONE
        if n == 1:
            return ZERO
        return T * lucas_F(n - 1)
    if kind == CIRCULAR:
        return TWO if n == 0 else lucas_L(n)
    raise DomainError(f"unknown tiling kind {kind!r}")
