"""Multiple-correction approximations of the Euler-Mascheroni and Landau constants.

Exact values come back as :class:`fractions.Fraction`; enclosures as
``(lo, hi)`` float pairs rounded outward from the certified interval.
"""

from fractions import Fraction

from . import _mcorr
from ._mcorr import (
    default_precision_bits,
    derive_targets,
    digits,
    gamma_approx,
    gamma_schemes,
    landau_approx,
    landau_schemes,
    reproduce,
    reproduce_targets,
    table,
    verify,
)

__all__ = [
    "default_precision_bits",
    "derive",
    "derive_targets",
    "digits",
    "gamma_approx",
    "gamma_schemes",
    "harmonic",
    "landau_G",
    "landau_approx",
    "landau_schemes",
    "reproduce",
    "reproduce_targets",
    "table",
    "verify",
]


def harmonic(n: int) -> Fraction:
    """H_n exactly."""
    return Fraction(_mcorr.harmonic(n))


def landau_G(n: int) -> Fraction:
    """G(n) exactly."""
    return Fraction(_mcorr.landau_G(n))


def derive(target: str, steps: int = 1) -> dict:
    """Correction steps with constants and Φ coefficients as Fractions."""
    out = _mcorr.derive(target, steps)
    for step in out["steps"]:
        step["C"] = Fraction(step["C"])
        step["next_C"] = Fraction(step["next_C"])
        step["phi"] = [Fraction(c) for c in step["phi"]]
    return out
