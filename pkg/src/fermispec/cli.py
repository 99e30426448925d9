"""Command-line front end.

A thin client over the service layer: each verb loads its inputs, builds the
corresponding request model, invokes the same handler the HTTP endpoint
uses, and renders the response as deterministic text.  Exit codes: 0 on
success, 1 on usage or parse errors, 2 when verification reports a mismatch.
"""

from __future__ import annotations

import argparse
import sys

from .scalars import parse_scalar
from .service import models
from .service import routes as svc
from .specfile import load_spectral_data


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 instead of argparse's exit 2
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _fmt_float(value: float) -> str:
    return format(float(value), ".12g")


def _load_payload(path: str) -> models.SpectrumPayload:
    return models.SpectrumPayload.from_spectral_data(load_spectral_data(path))


def _parse_window(text: str) -> tuple[str, str]:
    parts = text.split(":")
    if len(parts) != 2:
        raise _UsageError("--window expects LO:HI")
    return (parts[0], parts[1])


def _print_values(values: list[str]) -> None:
    for value in values:
        print(value)


def _print_set(payload: models.RealSetPayload, fmt: str) -> None:
    items = [(parse_scalar(p), ("point", p)) for p in payload.points]
    items += [(parse_scalar(lo), ("interval", lo, hi)) for lo, hi in payload.intervals]
    items.sort(key=lambda entry: entry[0])
    for _, item in items:
        if fmt == "csv":
            print(",".join(item))
        elif item[0] == "point":
            print(item[1])
        else:
            print(f"[{item[1]}, {item[2]}]")


def _cmd_point_sum(args) -> int:
    response = svc.point_sum(
        models.SectorRequest(spectrum=_load_payload(args.spec), n=args.n)
    )
    _print_values(response.values)
    return 0


def _cmd_point_prod(args) -> int:
    response = svc.point_prod(
        models.SectorRequest(spectrum=_load_payload(args.spec), n=args.n)
    )
    _print_values(response.values)
    return 0


def _cmd_spectrum_sum(args) -> int:
    response = svc.spectrum_sum(
        models.SectorRequest(spectrum=_load_payload(args.spec), n=args.n)
    )
    _print_set(response.result, args.format)
    return 0


def _cmd_spectrum_prod(args) -> int:
    response = svc.spectrum_prod(
        models.SectorRequest(spectrum=_load_payload(args.spec), n=args.n)
    )
    _print_set(response.result, args.format)
    return 0


def _cmd_dgamma(args) -> int:
    window = _parse_window(args.window) if args.window else None
    response = svc.dgamma(
        models.QuantizationRequest(
            spectrum=_load_payload(args.spec), n_max=args.nmax, window=window
        )
    )
    _print_set(response.result, args.format)
    report = response.truncation
    status = "complete" if report.complete else "incomplete"
    print(f"# truncation: {status} ({report.detail})", file=sys.stderr)
    return 0


def _cmd_gamma(args) -> int:
    response = svc.gamma(
        models.QuantizationRequest(spectrum=_load_payload(args.spec), n_max=args.nmax)
    )
    _print_set(response.result, args.format)
    return 0


def _cmd_tensor_sum(args) -> int:
    request = models.TensorRequest(spectra=[_load_payload(p) for p in args.spec])
    _print_values(svc.tensor_sum(request).values)
    return 0


def _cmd_tensor_prod(args) -> int:
    request = models.TensorRequest(spectra=[_load_payload(p) for p in args.spec])
    _print_values(svc.tensor_prod(request).values)
    return 0


def _cmd_verify(args) -> int:
    response = svc.verify(
        models.VerifyRequest(
            dim=args.dim,
            n=args.n,
            trials=args.trials,
            seed=args.seed,
            mode=args.mode,
            tol=args.tol,
        )
    )
    if args.format == "csv":
        print(f"{response.matched},{response.trials}")
    else:
        print(f"{response.matched}/{response.trials} matched")
    for miss in response.mismatches:
        print(
            f"trial {miss.trial}: eigs={miss.eigs} mults={miss.mults} "
            f"deviation={_fmt_float(miss.max_deviation)}",
            file=sys.stderr,
        )
    return 0 if response.matched == response.trials else 2


def _cmd_dirac(args) -> int:
    chosen = [
        flag
        for flag, value in (
            ("--r3", args.r3),
            ("--nmax", args.nmax),
            ("--cutoff", args.cutoff),
            ("--n", args.n),
        )
        if value is not None
    ]
    if len(chosen) != 1:
        raise _UsageError("dirac: exactly one of --r3, --nmax, --cutoff, --n is required")
    if args.r3 is not None:
        print(svc.dirac_r3(args.r3).count)
        return 0
    if args.L is None:
        raise _UsageError(f"dirac: {chosen[0]} requires --L")
    if args.nmax is not None:
        response = svc.dirac_levels(
            models.DiracLevelsRequest(L=args.L, M=args.M, n_max=args.nmax)
        )
        separator = "," if args.format == "csv" else " "
        for level in response.levels:
            print(separator.join((str(level.shell), _fmt_float(level.energy), str(level.mult))))
        return 0
    if args.cutoff is not None:
        response = svc.dirac_energies(
            models.DiracEnergiesRequest(L=args.L, M=args.M, cutoff=args.cutoff)
        )
        for energy in response.energies:
            print(_fmt_float(energy))
        print(f"# merged {response.merged} numerically coincident sums", file=sys.stderr)
        return 0
    response = svc.dirac_sector_min(
        models.DiracSectorRequest(L=args.L, M=args.M, n=args.n)
    )
    print(_fmt_float(response.energy))
    return 0


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="fermispec",
        description="Spectra of fermionic many-particle and second-quantization operators.",
    )
    subparsers = parser.add_subparsers(dest="verb", required=True, parser_class=_ArgumentParser)

    def add(verb: str, handler, help_text: str) -> _ArgumentParser:
        sub = subparsers.add_parser(verb, help=help_text)
        sub.set_defaults(handler=handler)
        sub.add_argument("--format", choices=("text", "csv"), default="text")
        return sub

    for verb, handler, help_text in (
        ("point-sum", _cmd_point_sum, "point spectrum of the n-particle energy operator"),
        ("point-prod", _cmd_point_prod, "point spectrum of the n-fold antisymmetric power"),
        ("spectrum-sum", _cmd_spectrum_sum, "spectrum of the n-particle energy operator"),
        ("spectrum-prod", _cmd_spectrum_prod, "spectrum of the n-fold antisymmetric power"),
    ):
        sub = add(verb, handler, help_text)
        sub.add_argument("--spec", required=True, help="spectral-data file")
        sub.add_argument("--n", type=int, required=True, help="particle number")

    sub = add("dgamma", _cmd_dgamma, "spectrum of the additive second quantization")
    sub.add_argument("--spec", required=True)
    sub.add_argument("--nmax", type=int, required=True, help="largest particle sector")
    sub.add_argument("--window", help="restrict to a closed window LO:HI")

    sub = add("gamma", _cmd_gamma, "spectrum of the multiplicative second quantization")
    sub.add_argument("--spec", required=True)
    sub.add_argument("--nmax", type=int, required=True)

    for verb, handler in (("tensor-sum", _cmd_tensor_sum), ("tensor-prod", _cmd_tensor_prod)):
        sub = add(verb, handler, "eigenvalue sums/products over distinguishable factors")
        sub.add_argument(
            "--spec",
            action="append",
            required=True,
            help="spectral-data file; repeat once per tensor factor",
        )

    sub = add("verify", _cmd_verify, "compare the formulae against the matrix oracle")
    sub.add_argument("--dim", type=int, required=True, help="matrix dimension (<= 12)")
    sub.add_argument("--n", type=int, required=True, help="particle number")
    sub.add_argument("--trials", type=int, default=20)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--mode", choices=("sum", "product"), default="sum")
    sub.add_argument("--tol", type=float, default=1e-8)

    sub = add("dirac", _cmd_dirac, "free Dirac fermions in a periodic box")
    sub.add_argument("--L", type=float, help="box side length")
    sub.add_argument("--M", type=float, default=0.0, help="bare mass")
    sub.add_argument("--r3", type=int, help="print the lattice count for one norm")
    sub.add_argument("--nmax", type=int, help="print levels up to this squared norm")
    sub.add_argument("--cutoff", type=float, help="print total energies up to this cutoff")
    sub.add_argument("--n", type=int, help="print the n-fermion ground-state energy")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
