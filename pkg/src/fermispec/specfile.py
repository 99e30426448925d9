"""Parser for the line-oriented spectral-data file format.

One directive per line, ``#`` starts a comment::

    point <value> <mult|inf>    # eigenvalue with multiplicity
    interval <lo> <hi>          # essential-spectrum interval
    epoint <value>              # isolated essential point

Values are decimals or ``p/q`` rationals and are parsed exactly.
"""

from __future__ import annotations

import os

from .scalars import parse_mult, parse_scalar
from .spectra import PointSpectrum, SpectralData


class SpecFileError(ValueError):
    """A malformed spectral-data file, with the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


def parse_spectral_data(text: str) -> SpectralData:
    """Parse spectral-data directives into a :class:`SpectralData`."""
    points = []
    intervals = []
    essential_points = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        directive, args = fields[0], fields[1:]
        try:
            if directive == "point":
                if len(args) != 2:
                    raise ValueError("point takes <value> <mult|inf>")
                points.append((parse_scalar(args[0]), parse_mult(args[1])))
            elif directive == "interval":
                if len(args) != 2:
                    raise ValueError("interval takes <lo> <hi>")
                lo, hi = parse_scalar(args[0]), parse_scalar(args[1])
                if lo > hi:
                    raise ValueError(f"interval has lo > hi: [{lo}, {hi}]")
                intervals.append((lo, hi))
            elif directive == "epoint":
                if len(args) != 1:
                    raise ValueError("epoint takes <value>")
                essential_points.append(parse_scalar(args[0]))
            else:
                raise ValueError(f"unknown directive {directive!r}")
        except ValueError as exc:
            raise SpecFileError(str(exc), line_no) from exc
    return SpectralData(
        points=PointSpectrum(tuple(points)),
        essential_intervals=tuple(intervals),
        essential_points=tuple(essential_points),
    )


def load_spectral_data(path: str | os.PathLike) -> SpectralData:
    with open(path, encoding="utf-8") as handle:
        return parse_spectral_data(handle.read())


def as_point_spectrum(data: SpectralData) -> PointSpectrum:
    """Extract the point spectrum, rejecting any essential part."""
    if data.has_essential_part():
        raise ValueError(
            "a purely discrete spectrum is required here; "
            "the description contains intervals or essential points"
        )
    return data.points
