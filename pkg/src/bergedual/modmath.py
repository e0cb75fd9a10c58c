"""Exact modular arithmetic and the two binary quadratic forms used by Types VII and VIII.

Everything here works on Python ints, so there is no wraparound. The one place
that drops to fixed-width integers (vectorised root search) checks its bound
first and falls back to plain ints beyond it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import DegenerateModulus, InvalidParameters, ModulusMismatch, NotInvertible

IntLike = Union[int, "Residue"]

# x*x + x + 1 must fit in int64 for the numpy path.
_NUMPY_ROOT_LIMIT = 3_000_000_000


@dataclass(frozen=True, order=True)
class Residue:
    """An integer class modulo ``modulus``, stored by its representative in [0, modulus)."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise InvalidParameters(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    @classmethod
    def of(cls, value: int, modulus: int) -> Residue:
        return cls(value % modulus, modulus)

    def _coerce(self, other: IntLike) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"mod {self.modulus} vs mod {other.modulus}")
            return other.value
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return int(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: IntLike) -> Residue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue.of(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> Residue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue.of(self.value - o, self.modulus)

    def __rsub__(self, other: IntLike) -> Residue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue.of(o - self.value, self.modulus)

    def __mul__(self, other: IntLike) -> Residue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue.of(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue.of(-self.value, self.modulus)

    def __pow__(self, exponent: int) -> Residue:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def inverse(self) -> Residue:
        return mod_inverse(self.value, self.modulus)

    def signed(self) -> int:
        """Representative of least absolute value (ties go positive)."""
        v = self.value
        return v - self.modulus if 2 * v > self.modulus else v

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(x, y) > 0`` and ``u*x + v*y = g``."""
    if x == 0 and y == 0:
        raise InvalidParameters("ext_gcd(0, 0) is undefined")
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_u, u = u, old_u - quo * u
        old_v, v = v, old_v - quo * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def mod_inverse(a: int, p: int) -> Residue:
    if p < 2:
        raise InvalidParameters(f"modulus must be >= 2, got {p}")
    g, u, _ = ext_gcd(a % p, p)
    if g != 1:
        raise NotInvertible(f"{a} is not invertible mod {p} (gcd {g})")
    return Residue.of(u, p)


def sl_class(a: Residue) -> Residue:
    """Class of p times the self-linking number for a knot in homology class ``a``.

    This is -1 - a + a^{-1} mod p; it depends only on ``a`` because b = -a^{-1}
    for duals of S^3 surgeries.
    """
    return -1 - a + a.inverse()


@dataclass(frozen=True)
class EisensteinRep:
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r <= 0 or self.s <= 0:
            raise InvalidParameters("r and s must be positive")
        if math.gcd(self.r, self.s) != 1:
            raise InvalidParameters(f"({self.r}, {self.s}) is not primitive")

    @property
    def p(self) -> int:
        return self.r * self.r + self.r * self.s + self.s * self.s

    def root(self) -> Residue:
        """r^2 s^{-2} mod p, a root of x^2 + x + 1."""
        p = self.p
        return Residue.of(self.r * self.r, p) * mod_inverse(self.s * self.s, p)


def primitive_reps_eisenstein(p: int) -> list[EisensteinRep]:
    """All coprime ``r, s > 0`` with ``r^2 + rs + s^2 = p``, lexicographic.

    For each r the quadratic in s is solved exactly with an integer square root.
    """
    if p < 2:
        raise InvalidParameters(f"p must be >= 2, got {p}")
    reps = []
    r = 1
    while 3 * r * r <= 4 * p:
        disc = 4 * p - 3 * r * r
        root = math.isqrt(disc)
        if root * root == disc and (root - r) % 2 == 0 and root > r:
            s = (root - r) // 2
            if math.gcd(r, s) == 1:
                reps.append(EisensteinRep(r, s))
        r += 1
    return reps


def roots_x2_x_1(p: int) -> list[Residue]:
    """All x in [0, p) with x^2 + x + 1 = 0 mod p, found by exhaustive search."""
    if p < 2:
        raise InvalidParameters(f"p must be >= 2, got {p}")
    if p < _NUMPY_ROOT_LIMIT:
        x = np.arange(p, dtype=np.int64)
        hits = np.flatnonzero((x * x + x + 1) % p == 0)
        return [Residue(int(v), p) for v in hits]
    return [Residue(x, p) for x in range(p) if (x * x + x + 1) % p == 0]


def golden_form(x: int, y: int) -> int:
    """x^2 + xy - y^2."""
    return x * x + x * y - y * y


@dataclass(frozen=True)
class FibPairTrace:
    """Pairs produced by repeatedly applying (x, y) -> (y - x, x) to ``start``.

    ``pairs`` excludes the starting pair, so an unmoved input has an empty trace.
    """

    start: tuple[int, int]
    pairs: tuple[tuple[int, int], ...] = field(default=())

    @property
    def steps(self) -> int:
        return len(self.pairs)

    def sequence(self) -> list[tuple[int, int]]:
        return [self.start, *self.pairs]


def gamma_step(x: int, y: int) -> tuple[int, int]:
    return y - x, x


def gamma_normalize(a: int, b: int) -> tuple[int, int, FibPairTrace]:
    """Move a coprime pair to ``c > d > 0`` with ``c^2 + cd - d^2 = |n|``.

    Here ``n = b^2 - ab - a^2``. Each step flips the sign of the form and keeps
    the ratio ``x * y^{-1}`` fixed mod ``|n|``, so the first positive pair with
    ``x > y`` (reached after an odd number of steps when n > 0, even when n < 0)
    is the answer.
    """
    if a <= 0 or b <= 0:
        raise InvalidParameters("gamma_normalize needs positive a, b")
    if math.gcd(a, b) != 1:
        raise InvalidParameters(f"({a}, {b}) is not coprime")
    n = b * b - a * b - a * a
    if abs(n) <= 1:
        raise DegenerateModulus(f"|n| = {abs(n)} for ({a}, {b})")
    x, y = a, b
    pairs: list[tuple[int, int]] = []
    # Termination is guaranteed by the Fibonacci convergents of a/b; the cap is a tripwire.
    cap = 4 * (int(math.log(a + b, (1 + 5 ** 0.5) / 2)) + 4)
    while not (x > y > 0 and golden_form(x, y) > 0):
        x, y = gamma_step(x, y)
        pairs.append((x, y))
        if len(pairs) > cap:
            raise RuntimeError(f"gamma_normalize({a}, {b}) did not terminate")
    return x, y, FibPairTrace((a, b), tuple(pairs))


def fibonacci_step_bound(a: int, b: int) -> int:
    """2 * ceil(log_phi(a + b)) + 2, the allowance on gamma_normalize steps."""
    phi = (1 + 5 ** 0.5) / 2
    return 2 * math.ceil(math.log(a + b, phi)) + 2
