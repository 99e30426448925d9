"""Request and response schemas for the HTTP interface.

Exact rationals travel over the wire as strings (``"3/2"``, ``"-0.25"``)
so that nothing is lost to floating point; floats appear only where the
underlying computation is numerical (oracle verification, Dirac box).
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..realsets import RealSetUnion
from ..scalars import INFINITE, format_mult, parse_scalar
from ..spectra import PointSpectrum, SpectralData, TruncationReport


class PointEntry(BaseModel):
    value: str = Field(description="eigenvalue as a decimal or p/q literal")
    mult: int | Literal["inf"] = Field(default=1, description="multiplicity, or 'inf'")


class SpectrumPayload(BaseModel):
    """A spectrum description: eigenvalues plus optional essential part."""

    points: list[PointEntry] = []
    intervals: list[tuple[str, str]] = []
    essential_points: list[str] = []

    def to_point_spectrum(self) -> PointSpectrum:
        if self.intervals or self.essential_points:
            raise ValueError(
                "a purely discrete spectrum is required here; "
                "the description contains intervals or essential points"
            )
        return PointSpectrum(
            tuple(
                (parse_scalar(e.value), INFINITE if e.mult == "inf" else e.mult)
                for e in self.points
            )
        )

    def to_spectral_data(self) -> SpectralData:
        return SpectralData(
            points=PointSpectrum(
                tuple(
                    (parse_scalar(e.value), INFINITE if e.mult == "inf" else e.mult)
                    for e in self.points
                )
            ),
            essential_intervals=tuple(
                (parse_scalar(lo), parse_scalar(hi)) for lo, hi in self.intervals
            ),
            essential_points=tuple(parse_scalar(v) for v in self.essential_points),
        )

    @classmethod
    def from_spectral_data(cls, data: SpectralData) -> "SpectrumPayload":
        return cls(
            points=[
                PointEntry(value=str(v), mult="inf" if m is INFINITE else m)
                for v, m in data.points.entries
            ],
            intervals=[(str(lo), str(hi)) for lo, hi in data.essential_intervals],
            essential_points=[str(v) for v in data.essential_points],
        )


class SectorRequest(BaseModel):
    spectrum: SpectrumPayload
    n: int = Field(ge=0, description="particle number")


class QuantizationRequest(BaseModel):
    spectrum: SpectrumPayload
    n_max: int = Field(ge=0, description="largest particle sector included")
    window: tuple[str, str] | None = None


class TensorRequest(BaseModel):
    spectra: list[SpectrumPayload] = Field(min_length=1)


class VerifyRequest(BaseModel):
    dim: int = Field(ge=1, le=12)
    n: int = Field(ge=0)
    trials: int = Field(ge=1)
    seed: int = 0
    mode: Literal["sum", "product"] = "sum"
    tol: float = Field(default=1e-8, gt=0)


class ParseRequest(BaseModel):
    text: str = Field(description="spectral-data file content")


class DiracLevelsRequest(BaseModel):
    L: float = Field(gt=0, description="box side length")
    M: float = Field(default=0.0, ge=0, description="bare mass")
    n_max: int = Field(ge=0, description="largest squared lattice norm")


class DiracEnergiesRequest(BaseModel):
    L: float = Field(gt=0)
    M: float = Field(default=0.0, ge=0)
    cutoff: float = Field(ge=0, description="total-energy cutoff")


class DiracSectorRequest(BaseModel):
    L: float = Field(gt=0)
    M: float = Field(default=0.0, ge=0)
    n: int = Field(ge=0, description="fermion count")


class ValuesResponse(BaseModel):
    values: list[str]


class RealSetPayload(BaseModel):
    points: list[str]
    intervals: list[tuple[str, str]]

    @classmethod
    def from_set(cls, s: RealSetUnion) -> "RealSetPayload":
        return cls(
            points=[str(p) for p in s.points],
            intervals=[(str(lo), str(hi)) for lo, hi in s.intervals],
        )


class TruncationPayload(BaseModel):
    complete: bool
    n_max: int
    spectrum_min: str
    window: tuple[str, str] | None
    detail: str

    @classmethod
    def from_report(cls, report: TruncationReport) -> "TruncationPayload":
        window = None
        if report.window is not None:
            window = (str(report.window[0]), str(report.window[1]))
        return cls(
            complete=report.complete,
            n_max=report.n_max,
            spectrum_min=str(report.spectrum_min),
            window=window,
            detail=report.detail,
        )


class SpectrumResponse(BaseModel):
    result: RealSetPayload
    truncation: TruncationPayload | None = None


class TrialMismatch(BaseModel):
    trial: int
    eigs: list[int]
    mults: list[int]
    formula_set: list[float]
    oracle_set: list[float]
    max_deviation: float


class VerifyResponse(BaseModel):
    trials: int
    matched: int
    mode: Literal["sum", "product"]
    mismatches: list[TrialMismatch]


class LevelPayload(BaseModel):
    shell: int
    energy: float
    mult: int


class LevelTableResponse(BaseModel):
    levels: list[LevelPayload]


class EnergiesResponse(BaseModel):
    energies: list[float]
    merged: int


class SectorEnergyResponse(BaseModel):
    energy: float


class LatticeCountResponse(BaseModel):
    n: int
    count: int


def values_response(values) -> ValuesResponse:
    return ValuesResponse(values=[str(v) for v in sorted(values)])
