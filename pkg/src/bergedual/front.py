"""Toroidal front projections in (L(p,q), xi_{p,q}).

A front is summarised by its writhe, cusp counts and the two intersection
numbers a = <alpha, f(L)>, b = <f(L), beta>; tb, rot and sl follow exactly.

Grid-number-one fronts are modelled on a p-column discretisation of the
Heegaard torus. The beta-parallel arc starts in ``start_column`` and each pass
across alpha moves it ``q`` columns (``-q`` when travelling against alpha's
coorientation). The alpha-parallel connector then runs horizontally from the
arc's end column back to its start, crossing the full-height pieces of the
vertical arc that lie strictly between the two. Heights are symbolic: the
connector sits at the common height of the arc's endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameters
from .modmath import mod_inverse


@dataclass(frozen=True)
class FrontData:
    w: int
    c_u: int
    c_d: int
    a: int
    b: int
    p: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise InvalidParameters(f"p must be >= 2, got {self.p}")
        if self.c_u < 0 or self.c_d < 0:
            raise InvalidParameters("cusp counts must be nonnegative")
        if (self.c_u + self.c_d) % 2:
            raise InvalidParameters("a closed front has an even number of cusps")

    def homology_consistent(self, q: int) -> bool:
        """b = a q (mod p)."""
        return (self.b - self.a * q) % self.p == 0


def tb(fd: FrontData) -> Fraction:
    return fd.w - Fraction(fd.c_u + fd.c_d, 2) + Fraction(fd.a * fd.b, fd.p)


def rot(fd: FrontData) -> Fraction:
    return Fraction(fd.c_d - fd.c_u, 2) + Fraction(fd.a + fd.b, fd.p)


def sl_push(fd: FrontData) -> Fraction:
    """Self-linking of the positive transverse push-off, from the closed form."""
    return fd.w - fd.c_d + Fraction(fd.a * fd.b - fd.a - fd.b, fd.p)


def sl_push_negative(fd: FrontData) -> Fraction:
    """Self-linking of the negative push-off, i.e. sl in the coorientation-reversed structure."""
    return tb(fd) + rot(fd)


def _sign(x: int) -> int:
    return 1 if x > 0 else -1


@dataclass(frozen=True)
class GridOneFront:
    p: int
    q: int
    wraps: int
    start_column: int = 0
    orientation: tuple[int, int] = (1, 1)

    def __post_init__(self) -> None:
        if self.p < 2:
            raise InvalidParameters(f"p must be >= 2, got {self.p}")
        if not 0 <= self.q < self.p or math.gcd(self.p, self.q) != 1:
            raise InvalidParameters(f"q = {self.q} is not a unit in [0, {self.p})")
        if self.wraps < 1:
            raise InvalidParameters("wraps must be positive")
        if not 0 <= self.start_column < self.p:
            raise InvalidParameters("start_column out of range")
        if any(s not in (1, -1) for s in self.orientation):
            raise InvalidParameters("orientation entries must be +1 or -1")

    @property
    def step(self) -> int:
        return self.orientation[0] * self.q

    @property
    def end_column(self) -> int:
        return (self.start_column + self.wraps * self.step) % self.p


def gn1_strand_columns(gf: GridOneFront) -> list[int]:
    """Columns occupied by the vertical arc, one per alpha-crossing, starting with the start column."""
    if gf.wraps > gf.p:
        raise InvalidParameters(f"wraps = {gf.wraps} exceeds p = {gf.p}")
    return [(gf.start_column + j * gf.step) % gf.p for j in range(gf.wraps)]


def connector_span(gf: GridOneFront, connector_direction: int) -> int:
    """Number of beta lines the connector crosses travelling from the end column to the start."""
    if connector_direction not in (1, -1):
        raise InvalidParameters("connector_direction must be +1 or -1")
    return (connector_direction * (gf.start_column - gf.end_column)) % gf.p


def connector_interior(gf: GridOneFront, connector_direction: int) -> list[int]:
    span = connector_span(gf, connector_direction)
    return [(gf.end_column + connector_direction * t) % gf.p for t in range(1, span)]


def gn1_writhe(gf: GridOneFront, connector_direction: int) -> int:
    """Signed crossings of the connector with the full-height pieces of the vertical arc.

    The vertical arc is always the over-strand. Every crossing has sign
    ``orientation[0] * connector_direction``; with that choice tb and rot are
    unchanged when either arc is swapped for its complement, as the isotopy
    between those fronts requires.
    """
    columns = gn1_strand_columns(gf)
    full_pieces = set(columns[1:])
    crossings = sum(1 for c in connector_interior(gf, connector_direction) if c in full_pieces)
    return gf.orientation[0] * connector_direction * crossings


# Cusp counts by orientation pair (sign a, sign b). Only (+, +) is pinned by the
# torus-dual construction; the rest follow from reversing orientation and from
# complement replacement toggling the cusp count between 0 and 2.
CUSP_TABLE: dict[tuple[int, int], tuple[int, int]] = {
    (1, 1): (2, 0),
    (-1, -1): (0, 2),
    (1, -1): (0, 0),
    (-1, 1): (0, 0),
}


def gn1_front_data(gf: GridOneFront, connector_direction: int | None = None) -> FrontData:
    """Front invariants of a grid-number-one front.

    The connector must travel against the sign of b (b > 0 means it moves
    toward lower column indices); by default that direction is used.
    """
    sign_a, sign_b = gf.orientation
    if connector_direction is None:
        connector_direction = -sign_b
    if connector_direction != -sign_b:
        raise InvalidParameters("connector direction disagrees with the sign of b")
    span = connector_span(gf, connector_direction)
    c_u, c_d = CUSP_TABLE[gf.orientation]
    return FrontData(
        w=gn1_writhe(gf, connector_direction),
        c_u=c_u,
        c_d=c_d,
        a=sign_a * gf.wraps,
        b=sign_b * span,
        p=gf.p,
    )


def gn1_front(p: int, a: int, b: int, q: int | None = None, start_column: int = 0) -> tuple[GridOneFront, FrontData]:
    """Grid-number-one front with intersection numbers exactly ``a`` and ``b``.

    ``q`` defaults to ``-a^{-2}`` mod p, the value forced for a surgery dual in
    class a. Requires 0 < |a| < p, 0 < |b| < p and b = a q mod p.
    """
    if not (0 < abs(a) < p and 0 < abs(b) < p):
        raise InvalidParameters("need 0 < |a|, |b| < p")
    if q is None:
        q = (-mod_inverse(a * a, p)).value
    if (b - a * q) % p:
        raise InvalidParameters(f"b = {b} is not a*q mod {p}")
    gf = GridOneFront(p=p, q=q, wraps=abs(a), start_column=start_column, orientation=(_sign(a), _sign(b)))
    fd = gn1_front_data(gf)
    if fd.b != b:
        raise AssertionError("connector span does not reproduce b")
    return gf, fd


def torus_dual_front(i: int, k: int) -> tuple[GridOneFront, FrontData]:
    """Front of the dual to (ik+1)-surgery on the (i, k) torus knot, class a = k.

    The vertical arc wraps k times in L(ik+1, -i^2) and ends i columns from its
    start; no full-height piece lands in the i - 1 columns between, so the
    connector routed through that gap crosses nothing.
    """
    if i < 2 or k < 2:
        raise InvalidParameters("torus parameters must be >= 2")
    if math.gcd(i, k) != 1:
        raise InvalidParameters(f"({i}, {k}) is not coprime")
    p = i * k + 1
    q = (-i * i) % p
    gf = GridOneFront(p=p, q=q, wraps=k, start_column=0, orientation=(1, 1))
    return gf, gn1_front_data(gf, connector_direction=-1)


def torus_gap_holds(i: int, k: int) -> bool:
    """(-m i^2 mod ik+1) >= i for every 0 < m < k."""
    p = i * k + 1
    return all((-m * i * i) % p >= i for m in range(1, k))
