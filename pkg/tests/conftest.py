from __future__ import annotations

import sympy as sp

from bergedual.braid import BraidWord

T = sp.symbols("t")


def _burau_generator(n: int, gen: int, sign: int) -> sp.Matrix:
    m = sp.eye(n - 1)
    r = gen - 1
    if r >= 1:
        m[r - 1, r] = T
    m[r, r] = -T
    if r + 1 < n - 1:
        m[r + 1, r] = 1
    return m if sign > 0 else m.inv()


def alexander_span(w: BraidWord) -> int:
    """Degree span of the Alexander polynomial of the closure, via reduced Burau.

    For a knot closing a positive braid the span is 2g = 1 - chi.
    """
    n = w.strands
    mat = sp.eye(n - 1)
    for gen, sign in w.letters:
        mat = mat * _burau_generator(n, gen, sign)
    delta = sp.cancel((sp.eye(n - 1) - mat).det() * (1 - T) / (1 - T**n))
    num, den = sp.fraction(sp.together(delta))
    degrees = [m[0] for m in sp.Poly(sp.expand(num), T).monoms()]
    assert len(sp.Poly(sp.expand(den), T).monoms()) == 1
    return max(degrees) - min(degrees)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
