"""Berge knot duals, Types I-X, as records of (p, -chi, candidate classes a_K).

Each constructor validates its raw parameters, computes the surgery slope p
and -chi(K), and lists the classes a_K that need checking. Classes a and
-a^{-1} give the same self-linking class, so only one of each such pair is
listed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .braid import chi_berge
from .errors import DegenerateCable, InvalidParameters
from .modmath import Residue, gamma_normalize, mod_inverse

FAMILIES = ("I", "II", "III", "IV", "V", "VII", "VIII", "IX", "X")

PARAM_NAMES: dict[str, tuple[str, ...]] = {
    "I": ("i", "k", "sign"),
    "II": ("i", "k", "sign"),
    "III": ("delta", "eps", "A", "k", "t"),
    "IV": ("delta", "eps", "A", "k", "t"),
    "V": ("delta", "eps", "A", "k", "t"),
    "VII": ("r", "s"),
    "VIII": ("r", "s"),
    "IX": ("j",),
    "X": ("j",),
}


@dataclass(frozen=True)
class BergeDualRecord:
    family: str
    params: tuple[int, ...]
    p: int
    chi_neg: int
    a_candidates: tuple[Residue, ...]
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidParameters(f"unknown family {self.family!r}")
        if self.p < 2:
            raise InvalidParameters(f"p = {self.p} < 2")
        for a in self.a_candidates:
            if a.modulus != self.p or math.gcd(a.value, self.p) != 1:
                raise InvalidParameters(f"candidate {a} is not a unit mod {self.p}")

    @property
    def named(self) -> dict[str, int]:
        """Raw parameters by name, plus derived quantities the registry refers to."""
        values = dict(zip(PARAM_NAMES[self.family], self.params))
        if self.family in ("III", "IV", "V"):
            tp = TypeIIIVParams(self.family, *self.params)
            values.update(B=tp.B, b=tp.b, a_param=tp.a_param)
        values["p"] = self.p
        return values

    def to_line(self) -> str:
        return json.dumps(
            {
                "family": self.family,
                "params": list(self.params),
                "p": self.p,
                "chi_neg": self.chi_neg,
                "a_candidates": [a.value for a in self.a_candidates],
                "notes": list(self.notes),
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_line(cls, line: str) -> BergeDualRecord:
        d = json.loads(line)
        p = d["p"]
        return cls(
            family=d["family"],
            params=tuple(d["params"]),
            p=p,
            chi_neg=d["chi_neg"],
            a_candidates=tuple(Residue(a, p) for a in d["a_candidates"]),
            notes=tuple(d["notes"]),
        )


def _pm(x: int, p: int) -> tuple[Residue, Residue]:
    return Residue.of(x, p), Residue.of(-x, p)


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise InvalidParameters(f"sign must be +1 or -1, got {sign}")


def type_I(i: int, k: int, sign: int) -> BergeDualRecord:
    _check_sign(sign)
    if i < 2 or k < 2:
        raise InvalidParameters("Type I needs i, k >= 2")
    if math.gcd(i, k) != 1:
        raise InvalidParameters(f"Type I needs coprime i, k; got ({i}, {k})")
    p = i * k + sign
    return BergeDualRecord(
        "I",
        (i, k, sign),
        p,
        i * k - i - k,
        _pm(k, p),
        ("classes +-i are images of +-k under a -> -a^-1; not listed",),
    )


def type_II(i: int, k: int, sign: int) -> BergeDualRecord:
    _check_sign(sign)
    if i < 4 or k < 4:
        raise InvalidParameters("Type II needs i, k >= 4")
    if math.gcd(i, k) != 2:
        raise InvalidParameters(f"Type II needs gcd(i, k) = 2; got ({i}, {k})")
    p = i * k + sign
    return BergeDualRecord("II", (i, k, sign), p, i * k - i - k + sign, _pm(k, p))


@dataclass(frozen=True)
class TypeIIIVParams:
    family: str
    delta: int
    eps: int
    A: int
    k: int
    t: int

    def __post_init__(self) -> None:
        if self.family not in ("III", "IV", "V"):
            raise InvalidParameters(f"{self.family} is not one of III, IV, V")
        if self.delta not in (1, -1) or self.eps not in (1, -1):
            raise InvalidParameters("delta and eps must be +1 or -1")
        if self.k < 0:
            raise InvalidParameters("k must be nonnegative")
        if self.family == "III" and self.A < 2:
            raise InvalidParameters("Type III needs A >= 2")
        if self.family == "IV" and (self.A < 5 or self.A % 2 == 0):
            raise InvalidParameters("Type IV needs odd A >= 5")
        if self.family == "V" and (self.A < 3 or self.A % 2 == 0):
            raise InvalidParameters("Type V needs odd A >= 3")
        if self.b == 0:
            raise InvalidParameters("b = 0")

    @property
    def c(self) -> int:
        return 2 if self.family == "III" else 1

    @property
    def a_param(self) -> int:
        return 0 if self.family == "III" else 1

    @property
    def B(self) -> int:
        A, k, eps = self.A, self.k, self.eps
        if self.family == "III":
            return A * (3 + 2 * k) - eps
        if self.family == "IV":
            twice = A * (5 + 2 * k) - eps
            if twice % 2:
                raise InvalidParameters("Type IV B is not an integer")
            return twice // 2
        l = 2 + k if eps == 1 else 3 + k
        return A * l + eps

    @property
    def b(self) -> int:
        return -self.delta * self.eps * (self.c * self.A + self.t * self.B)

    @property
    def p(self) -> int:
        return abs(self.B * self.b + self.A * self.delta)


def type_III_V(params: TypeIIIVParams) -> BergeDualRecord:
    p, B = params.p, params.B
    if p < 2:
        raise InvalidParameters(f"p = {p} < 2")
    chi = chi_berge(params.A, B, params.b, params.delta, params.a_param)
    return BergeDualRecord(
        params.family,
        (params.delta, params.eps, params.A, params.k, params.t),
        p,
        chi,
        _pm(B, p),
        (f"B={B}", f"b={params.b}"),
    )


def type_VII(r: int, s: int) -> BergeDualRecord:
    if r <= 0 or s <= 0:
        raise InvalidParameters("Type VII needs r, s > 0")
    if math.gcd(r, s) != 1:
        raise InvalidParameters(f"Type VII needs coprime r, s; got ({r}, {s})")
    p = r * r + r * s + s * s
    a = Residue.of(r * r, p) * mod_inverse(s * s, p)
    return BergeDualRecord("VII", (r, s), p, p - 2 * (r + s), (a,))


def cable_index(r: int, s: int) -> int:
    """The m with (m-1)s < r < ms."""
    if r <= 0 or s <= 0:
        raise InvalidParameters("need r, s > 0")
    if r % s == 0:
        raise DegenerateCable(f"s = {s} divides r = {r}")
    return r // s + 1


def x_rs(r: int, s: int) -> int:
    """-chi for the Type VIII knot of (r, s): (2m-1)rs - m(m-1)s^2 - r^2 + s^2 - 2s."""
    m = cable_index(r, s)
    return (2 * m - 1) * r * s - m * (m - 1) * s * s - r * r + s * s - 2 * s


def type_VIII(r: int, s: int) -> BergeDualRecord:
    if math.gcd(r, s) != 1:
        raise InvalidParameters(f"Type VIII needs coprime r, s; got ({r}, {s})")
    if s == 1:
        raise DegenerateCable(f"(r, s) = ({r}, 1): no m with (m-1)s < r < ms")
    if not r > s >= 2:
        raise InvalidParameters(f"Type VIII needs r > s >= 2; got ({r}, {s})")
    p = r * r + r * s - s * s
    a = Residue.of(r, p) * mod_inverse(s, p)
    return BergeDualRecord("VIII", (r, s), p, x_rs(r, s), (a, -a))


def type_VIII_from_pair(a: int, b: int) -> BergeDualRecord:
    """Type VIII record for a general coprime pair with |b^2 - ab - a^2| = p."""
    c, d, trace = gamma_normalize(a, b)
    rec = type_VIII(c, d)
    note = f"normalized from ({a}, {b}) in {trace.steps} steps"
    return BergeDualRecord(rec.family, rec.params, rec.p, rec.chi_neg, rec.a_candidates, rec.notes + (note,))


def type_IX_X(family: str, j: int) -> BergeDualRecord:
    if j in (0, -1):
        raise InvalidParameters("j must avoid {0,-1}")
    if family == "IX":
        p = 22 * j * j + 9 * j + 1
        base = 11 * j + 2
        chi = 22 * j * j - 1 if j > 0 else 22 * j * j + 18 * j + 3
    elif family == "X":
        p = 22 * j * j + 13 * j + 2
        base = 11 * j + 3
        chi = 22 * j * j + 4 * j - 1 if j > 0 else 22 * j * j + 22 * j + 5
    else:
        raise InvalidParameters(f"family must be IX or X, got {family!r}")
    return BergeDualRecord(family, (j,), p, chi, _pm(base, p))


def q_of(rec: BergeDualRecord, a: Residue) -> Residue:
    """The lens space parameter q = -a^{-2} forced by an integral S^3 surgery."""
    if a not in rec.a_candidates:
        raise InvalidParameters(f"{a} is not a candidate class of this record")
    return -((a * a).inverse())


def b_of(rec: BergeDualRecord, a: Residue) -> Residue:
    """b_K = a q = -a^{-1}."""
    return a * q_of(rec, a)


def build(family: str, params: tuple[int, ...]) -> BergeDualRecord:
    """Construct a record from a family tag and its raw parameter tuple."""
    if family not in FAMILIES:
        raise InvalidParameters(f"unknown family {family!r}")
    expected = len(PARAM_NAMES[family])
    if len(params) != expected:
        raise InvalidParameters(f"Type {family} takes {expected} parameters")
    if family == "I":
        return type_I(*params)
    if family == "II":
        return type_II(*params)
    if family in ("III", "IV", "V"):
        return type_III_V(TypeIIIVParams(family, *params))
    if family == "VII":
        return type_VII(*params)
    if family == "VIII":
        return type_VIII(*params)
    return type_IX_X(family, *params)
