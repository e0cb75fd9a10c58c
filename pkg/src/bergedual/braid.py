"""Braid words built from W(n) = s_{n-1} s_{n-2} ... s_1, and the Euler
characteristic of positive braid closures.

The Type III-V knots are closures of W(B)^b W(A+1-a)^delta. Reducing that to a
positive word happens on parameters: negating b together with delta (a mirror
image, same genus) and then Yamada's rewrite
W(n1)^m W(n2)^{-1} ~ W(n1)^{m-1} W(n1-n2+1). Letters are only materialised to
count crossings and closure components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DisconnectedClosure, InvalidParameters, NonPositiveWord

Letter = tuple[int, int]  # (generator index, +1 or -1)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise InvalidParameters("a braid needs at least one strand")
        for gen, sign in self.letters:
            if not 1 <= gen < self.strands:
                raise InvalidParameters(f"generator s_{gen} not in B_{self.strands}")
            if sign not in (1, -1):
                raise InvalidParameters(f"bad exponent {sign}")

    def __mul__(self, other: BraidWord) -> BraidWord:
        strands = max(self.strands, other.strands)
        return BraidWord(strands, self.letters + other.letters)

    def __pow__(self, m: int) -> BraidWord:
        if m >= 0:
            return BraidWord(self.strands, self.letters * m)
        return self.inverse() ** (-m)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((g, -s) for g, s in reversed(self.letters)))

    def on(self, strands: int) -> BraidWord:
        """The same word viewed in B_strands (strands >= current)."""
        if strands < self.strands:
            raise InvalidParameters("cannot shrink the strand count")
        return BraidWord(strands, self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_positive(self) -> bool:
        return all(s > 0 for _, s in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return f"1 in B_{self.strands}"
        body = " ".join(f"s{g}" if s > 0 else f"s{g}^-1" for g, s in self.letters)
        return f"{body} in B_{self.strands}"


def _w_letters(n: int) -> tuple[Letter, ...]:
    return tuple((g, 1) for g in range(n - 1, 0, -1))


def w_word(n: int) -> BraidWord:
    if n < 2:
        raise InvalidParameters(f"W(n) needs n >= 2, got {n}")
    return BraidWord(n, _w_letters(n))


def berge_braid(A: int, B: int, b: int, delta: int, a_param: int) -> BraidWord:
    """W(B)^b W(A+1-a)^delta on B strands, the small factor on the first strands."""
    n2 = A + 1 - a_param
    if a_param not in (0, 1):
        raise InvalidParameters("a_param must be 0 or 1")
    if delta not in (1, -1):
        raise InvalidParameters("delta must be +1 or -1")
    if B < 2 or n2 < 2 or n2 > B:
        raise InvalidParameters(f"need B >= 2 and 2 <= A+1-a <= B, got A={A}, B={B}, a={a_param}")
    return w_word(B) ** b * (w_word(n2) ** delta).on(B)


def yamada_rewrite(n1: int, m: int, n2: int) -> tuple[int, int, int]:
    """W(n1)^m W(n2)^{-1}  ->  W(n1)^(m-1) W(n1-n2+1), as parameter triples."""
    if m < 1:
        raise InvalidParameters("rewrite needs m > 0")
    if not 2 <= n2 <= n1:
        raise InvalidParameters("rewrite needs 2 <= n2 <= n1")
    return n1, m - 1, n1 - n2 + 1


@dataclass(frozen=True)
class PositiveForm:
    """W(strands)^power W(tail), all letters positive, plus the moves used to get there."""

    strands: int
    power: int
    tail: int
    mirrored: bool
    rewrites: int

    def letter_count(self) -> int:
        return self.power * (self.strands - 1) + max(self.tail - 1, 0)

    def word(self) -> BraidWord:
        tail = BraidWord(self.strands, _w_letters(self.tail)) if self.tail >= 2 else BraidWord(self.strands)
        return w_word(self.strands) ** self.power * tail


def normalize_berge(A: int, B: int, b: int, delta: int, a_param: int) -> PositiveForm:
    """Parameter-level reduction of W(B)^b W(A+1-a)^delta to a positive word."""
    n2 = A + 1 - a_param
    if b == 0:
        raise InvalidParameters("b = 0 does not occur for Berge knots")
    if a_param not in (0, 1) or delta not in (1, -1):
        raise InvalidParameters("a_param must be 0/1 and delta +1/-1")
    if B < 2 or not 2 <= n2 <= B:
        raise InvalidParameters(f"need B >= 2 and 2 <= A+1-a <= B, got A={A}, B={B}, a={a_param}")
    mirrored = b < 0
    if mirrored:
        b, delta = -b, -delta
    rewrites = 0
    n1, m, tail = B, b, n2
    while delta == -1:
        n1, m, tail = yamada_rewrite(n1, m, tail)
        delta = 1
        rewrites += 1
    return PositiveForm(strands=n1, power=m, tail=tail, mirrored=mirrored, rewrites=rewrites)


def permutation(w: BraidWord) -> list[int]:
    """Image of each strand position under the underlying permutation."""
    perm = list(range(w.strands))
    for gen, _ in w.letters:
        perm[gen - 1], perm[gen] = perm[gen], perm[gen - 1]
    return perm


def _cycle_count(perm: Iterable[int]) -> int:
    perm = list(perm)
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def closure_components(w: BraidWord) -> int:
    return _cycle_count(permutation(w))


def chi_positive_closure(w: BraidWord) -> int:
    """Euler characteristic of Seifert's surface for the closure of a positive braid word."""
    if not w.is_positive:
        raise NonPositiveWord(str(w))
    components = closure_components(w)
    if components != 1:
        raise DisconnectedClosure(f"closure has {components} components")
    return w.strands - len(w)


def chi_berge(A: int, B: int, b: int, delta: int, a_param: int) -> int:
    """-chi = |b|(B-1) + delta'(A-a) - B for the closure of W(B)^b W(A+1-a)^delta.

    ``delta'`` is the exponent after the b < 0 mirror flip, i.e. delta * sign(b);
    with the raw delta the formula disagrees with the positive-braid count
    whenever b < 0.
    """
    sign_b = 1 if b > 0 else -1
    return abs(b) * (B - 1) + delta * sign_b * (A - a_param) - B
