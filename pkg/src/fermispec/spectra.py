"""Fermionic many-particle spectral calculus.

Given a finite description of a self-adjoint operator's spectrum, the
functions here compute the point spectrum and the full spectrum of the
induced operators on antisymmetric n-particle spaces, and of the two
fermionic second-quantization lifts (additive energies and multiplicative
eigenvalues).  The single combinatorial ingredient everywhere is the Pauli
exclusion constraint: an eigenvalue may be selected at most as often as its
multiplicity, while essential-spectrum components may be reused freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .realsets import Interval, RealSetUnion, canonicalize, interval_mul
from .scalars import INFINITE, Mult, check_mult


class EmptySpectrumError(ValueError):
    """Raised when an operation requires at least one spectral value."""


@dataclass(frozen=True)
class PointSpectrum:
    """Eigenvalues with multiplicities: finitely many (value, mult) pairs.

    Entries are normalized at construction: values are coerced to exact
    rationals and sorted ascending; duplicate values merge by adding their
    multiplicities (INFINITE absorbs).
    """

    entries: tuple[tuple[Fraction, Mult], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[Fraction, Mult] = {}
        for value, mult in self.entries:
            v = Fraction(value)
            m = check_mult(mult)
            old = merged.get(v)
            if old is None:
                merged[v] = m
            elif old is INFINITE or m is INFINITE:
                merged[v] = INFINITE
            else:
                merged[v] = old + m
        object.__setattr__(self, "entries", tuple(sorted(merged.items())))

    def __len__(self) -> int:
        return len(self.entries)

    def values(self) -> tuple[Fraction, ...]:
        return tuple(v for v, _ in self.entries)

    def total_multiplicity(self) -> Mult:
        """Sum of all multiplicities; INFINITE if any entry is infinite."""
        total = 0
        for _, m in self.entries:
            if m is INFINITE:
                return INFINITE
            total += m
        return total


@dataclass(frozen=True)
class SpectralData:
    """A spectrum as a finite description: eigenvalues plus essential part.

    ``points`` carries the point spectrum with multiplicities.  The
    essential part is a finite union of closed intervals and isolated
    essential points.  The represented set must be nonempty.
    """

    points: PointSpectrum = PointSpectrum()
    essential_intervals: tuple[Interval, ...] = ()
    essential_points: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        essential = canonicalize(self.essential_points, self.essential_intervals)
        object.__setattr__(self, "essential_intervals", essential.intervals)
        object.__setattr__(self, "essential_points", essential.points)
        if not self.points.entries and essential.is_empty():
            raise EmptySpectrumError("empty spectrum")

    def has_essential_part(self) -> bool:
        return bool(self.essential_intervals or self.essential_points)

    def is_discrete(self, value) -> bool:
        """True when ``value`` is an isolated eigenvalue of finite multiplicity.

        Such values, and only such values, are subject to the exclusion cap
        in full-spectrum computations.
        """
        v = Fraction(value)
        mult = dict(self.points.entries).get(v)
        if mult is None or mult is INFINITE:
            return False
        if v in self.essential_points:
            return False
        return not any(lo <= v <= hi for lo, hi in self.essential_intervals)

    def represented_set(self) -> RealSetUnion:
        """The spectrum as a plain subset of the reals."""
        pts = list(self.points.values()) + list(self.essential_points)
        return canonicalize(pts, self.essential_intervals)

    def total_multiplicity(self) -> Mult:
        """Total dimension of the described space; INFINITE with an essential part."""
        if self.has_essential_part():
            return INFINITE
        return self.points.total_multiplicity()

    def infimum(self) -> Fraction:
        value = self.represented_set().infimum()
        assert value is not None  # nonempty by construction
        return value


def multiset_selections(
    entries: Sequence[tuple[object, Mult]], n: int
) -> Iterator[tuple[int, ...]]:
    """Yield every admissible count vector of total size ``n``.

    A count vector assigns to each entry how many of the ``n`` slots select
    it; counts never exceed the entry's multiplicity (INFINITE imposes no
    bound).  Vectors come out in ascending lexicographic order, with no
    duplicates.  The stream is empty when no selection exists.
    """
    if n < 0:
        raise ValueError("selection size must be non-negative")
    caps = [check_mult(m) for _, m in entries]
    return _selection_counts(caps, n)


def _selection_counts(caps: Sequence[Mult], n: int) -> Iterator[tuple[int, ...]]:
    # suffix_room[i]: capacity of entries i.. (None = unbounded), for pruning
    suffix_room: list[int | None] = [0] * (len(caps) + 1)
    for i in range(len(caps) - 1, -1, -1):
        rest = suffix_room[i + 1]
        if rest is None or caps[i] is INFINITE:
            suffix_room[i] = None
        else:
            suffix_room[i] = rest + caps[i]

    prefix: list[int] = []

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == len(caps):
            if remaining == 0:
                yield tuple(prefix)
            return
        room = suffix_room[i]
        if room is not None and room < remaining:
            return
        cap = caps[i]
        top = remaining if cap is INFINITE else min(cap, remaining)
        for count in range(top + 1):
            prefix.append(count)
            yield from rec(i + 1, remaining - count)
            prefix.pop()

    return rec(0, n)


def _require_nonempty(spectrum: PointSpectrum) -> None:
    if not spectrum.entries:
        raise EmptySpectrumError("empty spectrum")


def _check_sector(n: int) -> None:
    if n < 0:
        raise ValueError("particle number must be non-negative")


def point_spectrum_nfold_sum(spectrum: PointSpectrum, n: int) -> set[Fraction]:
    """Point spectrum of the n-particle energy operator.

    Every value is a sum of ``n`` eigenvalues in which each eigenvalue
    appears at most its multiplicity.  The vacuum sector (``n == 0``) is
    ``{0}``; a sector with no admissible selection is empty.
    """
    _require_nonempty(spectrum)
    _check_sector(n)
    if n == 0:
        return {Fraction(0)}
    values = spectrum.values()
    out: set[Fraction] = set()
    for counts in multiset_selections(spectrum.entries, n):
        out.add(sum(c * v for c, v in zip(counts, values)))
    return out


def point_spectrum_nfold_product(spectrum: PointSpectrum, n: int) -> set[Fraction]:
    """Point spectrum of the n-fold antisymmetric tensor power.

    Values are products of ``n`` eigenvalues under the same exclusion cap
    as the sums.  When 0 is an eigenvalue, 0 additionally belongs to the
    result whenever the sector is nontrivial (any admissible selection
    exists), because kernel vectors wedge with everything.
    """
    _require_nonempty(spectrum)
    _check_sector(n)
    if n == 0:
        return {Fraction(1)}
    values = spectrum.values()
    out: set[Fraction] = set()
    for counts in multiset_selections(spectrum.entries, n):
        out.add(math.prod((v ** c for c, v in zip(counts, values)), start=Fraction(1)))
    if out and Fraction(0) in values:
        out.add(Fraction(0))
    return out


@dataclass(frozen=True)
class _Component:
    """One selectable element of a spectrum: a point or interval with a cap."""

    lo: Fraction
    hi: Fraction
    cap: Mult


def _components(data: SpectralData) -> list[_Component]:
    comps = []
    for value, mult in data.points.entries:
        cap = mult if data.is_discrete(value) else INFINITE
        comps.append(_Component(value, value, cap))
    for lo, hi in data.essential_intervals:
        comps.append(_Component(lo, hi, INFINITE))
    for value in data.essential_points:
        comps.append(_Component(value, value, INFINITE))
    return comps


def _sector_pieces(data: SpectralData, n: int, multiply: bool) -> list[Interval]:
    """Raw (lo, hi) pieces contributed by the n-particle sector."""
    comps = _components(data)
    caps = [c.cap for c in comps]
    pieces: list[Interval] = []
    for counts in _selection_counts(caps, n):
        if multiply:
            piece: Interval = (Fraction(1), Fraction(1))
            for comp, count in zip(comps, counts):
                for _ in range(count):
                    piece = interval_mul(piece, (comp.lo, comp.hi))
        else:
            lo = sum(count * comp.lo for comp, count in zip(comps, counts))
            hi = sum(count * comp.hi for comp, count in zip(comps, counts))
            piece = (Fraction(lo), Fraction(hi))
        pieces.append(piece)
    return pieces


def spectrum_nfold_sum(data: SpectralData, n: int) -> RealSetUnion:
    """Spectrum of the n-particle energy operator.

    Slots assigned to isolated finite-multiplicity eigenvalues respect the
    exclusion cap; slots assigned to essential components (intervals,
    essential points, embedded or infinite-multiplicity eigenvalues) are
    unconstrained and contribute their whole range to the sum.
    """
    _check_sector(n)
    if n == 0:
        return canonicalize(points=(Fraction(0),))
    return canonicalize(intervals=_sector_pieces(data, n, multiply=False))


def spectrum_nfold_product(data: SpectralData, n: int) -> RealSetUnion:
    """Spectrum of the n-fold antisymmetric tensor power.

    Interval factors multiply by closed-interval arithmetic, folded left to
    right (the fold order is immaterial for closed intervals).  No extra
    zero is inserted beyond what the selections themselves produce.
    """
    _check_sector(n)
    if n == 0:
        return canonicalize(points=(Fraction(1),))
    return canonicalize(intervals=_sector_pieces(data, n, multiply=True))


@dataclass(frozen=True)
class TruncationReport:
    """Whether a truncated union over particle sectors is provably complete.

    ``complete`` is claimed in exactly two situations: the description has
    finite total multiplicity and every nonempty sector was enumerated, or a
    window was given, the spectrum is bounded below by ``spectrum_min > 0``,
    and sectors beyond ``n_max`` can only produce sums above the window.
    """

    complete: bool
    n_max: int
    spectrum_min: Fraction
    window: tuple[Fraction, Fraction] | None
    detail: str


def _truncation_report(
    data: SpectralData, n_max: int, window: tuple[Fraction, Fraction] | None
) -> TruncationReport:
    delta = data.infimum()
    total = data.total_multiplicity()
    if total is not INFINITE and n_max >= total:
        return TruncationReport(
            True, n_max, delta, window, f"all sectors beyond n={total} are empty"
        )
    if window is not None and delta > 0:
        required = math.ceil(window[1] / delta)
        if n_max >= required:
            return TruncationReport(
                True,
                n_max,
                delta,
                window,
                f"sectors beyond n_max exceed the window (gap {delta})",
            )
        return TruncationReport(
            False, n_max, delta, window, f"window requires n_max >= {required}"
        )
    if window is None:
        return TruncationReport(
            False, n_max, delta, window, "no window given; higher sectors may contribute"
        )
    return TruncationReport(
        False, n_max, delta, window, "spectrum is not bounded below by a positive gap"
    )


def _check_window(window) -> tuple[Fraction, Fraction] | None:
    if window is None:
        return None
    lo, hi = Fraction(window[0]), Fraction(window[1])
    if lo > hi:
        raise ValueError(f"window has lo > hi: [{lo}, {hi}]")
    return (lo, hi)


def dgamma_spectrum(
    data: SpectralData, n_max: int, window=None
) -> tuple[RealSetUnion, TruncationReport]:
    """Spectrum of the additive second quantization, truncated at ``n_max``.

    Returns ``{0}`` union the sector spectra for n = 1..n_max, intersected
    with the optional closed window, together with a completeness report
    for the truncation.
    """
    _check_sector(n_max)
    win = _check_window(window)
    pieces: list[Interval] = [(Fraction(0), Fraction(0))]
    for n in range(1, n_max + 1):
        pieces.extend(_sector_pieces(data, n, multiply=False))
    result = canonicalize(intervals=pieces)
    if win is not None:
        result = result.intersect(*win)
    return result, _truncation_report(data, n_max, win)


def dgamma_point_spectrum(spectrum: PointSpectrum, n_max: int) -> set[Fraction]:
    """Point spectrum of the additive second quantization up to ``n_max``."""
    _require_nonempty(spectrum)
    _check_sector(n_max)
    out = {Fraction(0)}
    for n in range(1, n_max + 1):
        out |= point_spectrum_nfold_sum(spectrum, n)
    return out


def gamma_spectrum(data: SpectralData, n_max: int) -> RealSetUnion:
    """Spectrum of the multiplicative second quantization up to ``n_max``."""
    _check_sector(n_max)
    pieces: list[Interval] = [(Fraction(1), Fraction(1))]
    for n in range(1, n_max + 1):
        pieces.extend(_sector_pieces(data, n, multiply=True))
    return canonicalize(intervals=pieces)


def gamma_point_spectrum(spectrum: PointSpectrum, n_max: int) -> set[Fraction]:
    """Point spectrum of the multiplicative second quantization up to ``n_max``.

    Zero enters through the per-sector rule of the product computation, not
    as an unconditional insertion.
    """
    _require_nonempty(spectrum)
    _check_sector(n_max)
    out = {Fraction(1)}
    for n in range(1, n_max + 1):
        out |= point_spectrum_nfold_product(spectrum, n)
    return out


def tensor_point_spectrum_sum(spectra: Sequence[PointSpectrum]) -> set[Fraction]:
    """Eigenvalue sums over distinguishable tensor factors, one value each.

    Unlike the antisymmetric case there is no multiplicity constraint: the
    factors are independent, so repeated values are allowed.
    """
    if not spectra:
        raise EmptySpectrumError("empty spectrum list")
    for spectrum in spectra:
        _require_nonempty(spectrum)
    out = {Fraction(0)}
    for spectrum in spectra:
        out = {acc + v for acc in out for v in spectrum.values()}
    return out


def tensor_point_spectrum_product(spectra: Sequence[PointSpectrum]) -> set[Fraction]:
    """Eigenvalue products over distinguishable tensor factors.

    Zero belongs to the result whenever any factor spectrum contains zero.
    """
    if not spectra:
        raise EmptySpectrumError("empty spectrum list")
    for spectrum in spectra:
        _require_nonempty(spectrum)
    out = {Fraction(1)}
    for spectrum in spectra:
        out = {acc * v for acc in out for v in spectrum.values()}
    if any(Fraction(0) in spectrum.values() for spectrum in spectra):
        out.add(Fraction(0))
    return out
