"""Spectra of fermionic many-particle and second-quantization operators.

The core calculus (exact, over rationals) lives here; the numerical matrix
oracle is in :mod:`fermispec.oracle`, the Dirac-box worked example in
:mod:`fermispec.dirac`, and the HTTP surface in :mod:`fermispec.service`.
"""

from .realsets import RealSetUnion, canonicalize, interval_mul, union
from .scalars import INFINITE, Mult, parse_scalar
from .specfile import SpecFileError, as_point_spectrum, load_spectral_data, parse_spectral_data
from .spectra import (
    EmptySpectrumError,
    PointSpectrum,
    SpectralData,
    TruncationReport,
    dgamma_point_spectrum,
    dgamma_spectrum,
    gamma_point_spectrum,
    gamma_spectrum,
    multiset_selections,
    point_spectrum_nfold_product,
    point_spectrum_nfold_sum,
    spectrum_nfold_product,
    spectrum_nfold_sum,
    tensor_point_spectrum_product,
    tensor_point_spectrum_sum,
)

__version__ = "0.1.0"

__all__ = [
    "EmptySpectrumError",
    "INFINITE",
    "Mult",
    "PointSpectrum",
    "RealSetUnion",
    "SpecFileError",
    "SpectralData",
    "TruncationReport",
    "as_point_spectrum",
    "canonicalize",
    "dgamma_point_spectrum",
    "dgamma_spectrum",
    "gamma_point_spectrum",
    "gamma_spectrum",
    "interval_mul",
    "load_spectral_data",
    "multiset_selections",
    "parse_scalar",
    "parse_spectral_data",
    "point_spectrum_nfold_product",
    "point_spectrum_nfold_sum",
    "spectrum_nfold_product",
    "spectrum_nfold_sum",
    "tensor_point_spectrum_product",
    "tensor_point_spectrum_sum",
    "union",
]
