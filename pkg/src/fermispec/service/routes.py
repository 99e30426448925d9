"""HTTP endpoints exposing the spectral calculus, the oracle and the Dirac box.

Every handler is a plain synchronous function over pydantic models, so the
CLI can call them in process while HTTP clients go through FastAPI.  The
computations are pure and stateless; concurrent requests are safe.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import dirac, oracle, spectra
from ..scalars import parse_scalar
from ..specfile import parse_spectral_data
from . import models

app = FastAPI(
    title="fermispec",
    version="0.1.0",
    description=(
        "Spectra of fermionic n-particle and second-quantization operators "
        "computed exactly from a finite spectrum description, with an "
        "independent compound-matrix oracle."
    ),
)


@app.exception_handler(ValueError)
def _domain_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/point-sum", response_model=models.ValuesResponse)
def point_sum(req: models.SectorRequest) -> models.ValuesResponse:
    spectrum = req.spectrum.to_point_spectrum()
    return models.values_response(spectra.point_spectrum_nfold_sum(spectrum, req.n))


@app.post("/point-prod", response_model=models.ValuesResponse)
def point_prod(req: models.SectorRequest) -> models.ValuesResponse:
    spectrum = req.spectrum.to_point_spectrum()
    return models.values_response(spectra.point_spectrum_nfold_product(spectrum, req.n))


@app.post("/spectrum-sum", response_model=models.SpectrumResponse)
def spectrum_sum(req: models.SectorRequest) -> models.SpectrumResponse:
    data = req.spectrum.to_spectral_data()
    result = spectra.spectrum_nfold_sum(data, req.n)
    return models.SpectrumResponse(result=models.RealSetPayload.from_set(result))


@app.post("/spectrum-prod", response_model=models.SpectrumResponse)
def spectrum_prod(req: models.SectorRequest) -> models.SpectrumResponse:
    data = req.spectrum.to_spectral_data()
    result = spectra.spectrum_nfold_product(data, req.n)
    return models.SpectrumResponse(result=models.RealSetPayload.from_set(result))


@app.post("/dgamma", response_model=models.SpectrumResponse)
def dgamma(req: models.QuantizationRequest) -> models.SpectrumResponse:
    data = req.spectrum.to_spectral_data()
    window = None
    if req.window is not None:
        window = (parse_scalar(req.window[0]), parse_scalar(req.window[1]))
    result, report = spectra.dgamma_spectrum(data, req.n_max, window)
    return models.SpectrumResponse(
        result=models.RealSetPayload.from_set(result),
        truncation=models.TruncationPayload.from_report(report),
    )


@app.post("/dgamma-points", response_model=models.ValuesResponse)
def dgamma_points(req: models.QuantizationRequest) -> models.ValuesResponse:
    spectrum = req.spectrum.to_point_spectrum()
    return models.values_response(spectra.dgamma_point_spectrum(spectrum, req.n_max))


@app.post("/gamma", response_model=models.SpectrumResponse)
def gamma(req: models.QuantizationRequest) -> models.SpectrumResponse:
    data = req.spectrum.to_spectral_data()
    result = spectra.gamma_spectrum(data, req.n_max)
    return models.SpectrumResponse(result=models.RealSetPayload.from_set(result))


@app.post("/gamma-points", response_model=models.ValuesResponse)
def gamma_points(req: models.QuantizationRequest) -> models.ValuesResponse:
    spectrum = req.spectrum.to_point_spectrum()
    return models.values_response(spectra.gamma_point_spectrum(spectrum, req.n_max))


@app.post("/tensor-sum", response_model=models.ValuesResponse)
def tensor_sum(req: models.TensorRequest) -> models.ValuesResponse:
    spectra_list = [p.to_point_spectrum() for p in req.spectra]
    return models.values_response(spectra.tensor_point_spectrum_sum(spectra_list))


@app.post("/tensor-prod", response_model=models.ValuesResponse)
def tensor_prod(req: models.TensorRequest) -> models.ValuesResponse:
    spectra_list = [p.to_point_spectrum() for p in req.spectra]
    return models.values_response(spectra.tensor_point_spectrum_product(spectra_list))


@app.post("/verify", response_model=models.VerifyResponse)
def verify(req: models.VerifyRequest) -> models.VerifyResponse:
    records = oracle.run_verification_trials(
        req.dim, req.n, req.trials, req.seed, req.mode, req.tol
    )
    mismatches = [
        models.TrialMismatch(
            trial=r.trial,
            eigs=list(r.eigs),
            mults=list(r.mults),
            formula_set=list(r.report.formula_set),
            oracle_set=list(r.report.oracle_set),
            max_deviation=r.report.max_deviation,
        )
        for r in records
        if not r.report.matched
    ]
    return models.VerifyResponse(
        trials=len(records),
        matched=sum(1 for r in records if r.report.matched),
        mode=req.mode,
        mismatches=mismatches,
    )


@app.post("/parse-spectrum", response_model=models.SpectrumPayload)
def parse_spectrum(req: models.ParseRequest) -> models.SpectrumPayload:
    return models.SpectrumPayload.from_spectral_data(parse_spectral_data(req.text))


@app.post("/dirac/levels", response_model=models.LevelTableResponse)
def dirac_levels(req: models.DiracLevelsRequest) -> models.LevelTableResponse:
    table = dirac.one_particle_spectrum(dirac.BoxParams(req.L, req.M), req.n_max)
    return models.LevelTableResponse(
        levels=[models.LevelPayload(shell=l.shell, energy=l.energy, mult=l.mult) for l in table]
    )


@app.post("/dirac/energies", response_model=models.EnergiesResponse)
def dirac_energies(req: models.DiracEnergiesRequest) -> models.EnergiesResponse:
    result = dirac.enumerate_total_energies(dirac.BoxParams(req.L, req.M), req.cutoff)
    return models.EnergiesResponse(energies=list(result.energies), merged=result.merged)


@app.post("/dirac/sector-min", response_model=models.SectorEnergyResponse)
def dirac_sector_min(req: models.DiracSectorRequest) -> models.SectorEnergyResponse:
    return models.SectorEnergyResponse(
        energy=dirac.min_energy_sector(dirac.BoxParams(req.L, req.M), req.n)
    )


@app.get("/dirac/r3/{n}", response_model=models.LatticeCountResponse)
def dirac_r3(n: int) -> models.LatticeCountResponse:
    return models.LatticeCountResponse(n=n, count=dirac.r3(n))
