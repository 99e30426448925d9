"""Exact rational scalars and eigenvalue multiplicities.

All set calculus in this package runs on ``fractions.Fraction`` so that set
equality, interval merging and the multiplicity bookkeeping are exact.
Floating point only appears at the numerical-oracle and Dirac-box boundaries.
"""

from __future__ import annotations

from fractions import Fraction


class _InfiniteMultiplicity:
    """Singleton marker for an eigenvalue of infinite multiplicity."""

    __slots__ = ()
    _instance = None

    def __new__(cls) -> "_InfiniteMultiplicity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = _InfiniteMultiplicity()

#: An eigenvalue multiplicity: a positive integer or :data:`INFINITE`.
Mult = int | _InfiniteMultiplicity


def check_mult(mult: object) -> Mult:
    """Validate a multiplicity, returning it unchanged.

    Accepts :data:`INFINITE` or an ``int`` >= 1; anything else raises
    ``ValueError``.
    """
    if mult is INFINITE:
        return INFINITE
    if isinstance(mult, int) and not isinstance(mult, bool) and mult >= 1:
        return mult
    raise ValueError(f"multiplicity must be a positive integer or INFINITE, got {mult!r}")


def parse_scalar(text: str) -> Fraction:
    """Parse a decimal or ``p/q`` literal into an exact rational.

    Decimal strings convert digit for digit (``"0.1"`` becomes ``1/10``,
    never a binary float).
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def parse_mult(token: str) -> Mult:
    """Parse a multiplicity token: a positive integer or ``inf``."""
    token = token.strip()
    if token == "inf":
        return INFINITE
    try:
        value = int(token)
    except ValueError as exc:
        raise ValueError(f"not a multiplicity: {token!r} (expected a positive integer or 'inf')") from exc
    return check_mult(value)


def format_mult(mult: Mult) -> str:
    return "inf" if mult is INFINITE else str(mult)
