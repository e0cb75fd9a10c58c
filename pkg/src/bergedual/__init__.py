"""Exact arithmetic for self-linking congruences of Berge knot duals in lens spaces."""

from .errors import BergeDualError
from .families import BergeDualRecord, build
from .modmath import Residue
from .verify import CongruenceReport, classify, congruence_residual

__all__ = [
    "BergeDualError",
    "BergeDualRecord",
    "CongruenceReport",
    "Residue",
    "build",
    "classify",
    "congruence_residual",
]

__version__ = "0.1.0"
