"""Acceptance suite.

Each test runs one acceptance criterion at its stated tolerance and prints a
single pass/fail line (visible with ``pytest -s`` or on failure).  The
oracle-backed criteria compare the exact set calculus against independently
computed references: dense compound-matrix diagonalization, grid-discretized
brute force, and exhaustive lattice enumeration.
"""

import itertools
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import numpy as np

from fermispec import (
    INFINITE,
    PointSpectrum,
    SpectralData,
    canonicalize,
    dgamma_spectrum,
    point_spectrum_nfold_product,
    point_spectrum_nfold_sum,
    spectrum_nfold_product,
    spectrum_nfold_sum,
)
from fermispec import oracle as orc
from fermispec.dirac import BoxParams, dirac_dgamma_spectrum, min_energy_sector, r3

GRID_STEP = F(1, 64)


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        print(f"[criterion {number}] FAIL  {title}")
        raise
    print(f"[criterion {number}] PASS  {title}")


def ps(*pairs):
    return PointSpectrum(tuple(pairs))


def sd(points=(), intervals=(), epoints=()):
    return SpectralData(
        points=ps(*points),
        essential_intervals=tuple(intervals),
        essential_points=tuple(epoints),
    )


def test_criterion_1_sum_formula_oracle_equivalence():
    with criterion(1, "sum formula equals additive-compound spectra (200 instances)"):
        rng = np.random.default_rng(0xFE51)
        start = time.perf_counter()
        instances = 0
        for dim in range(2, 7):
            for _ in range(40):
                eigs, mults = orc.random_spectrum_instance(dim, rng)
                seed = int(rng.integers(0, 2**31 - 1))
                for n in range(1, dim + 1):
                    report = orc.verify_sector(eigs, mults, n, seed, tol=1e-8, mode="sum")
                    assert report.matched, (eigs, mults, n, report.max_deviation)
                instances += 1
        elapsed = time.perf_counter() - start
        assert instances == 200
        assert elapsed < 10.0, f"took {elapsed:.1f}s"


def test_criterion_2_product_formula_oracle_equivalence():
    with criterion(2, "product formula equals compound-matrix spectra (200 instances)"):
        rng = np.random.default_rng(0xFE52)
        instances = 0
        with_zero = 0
        for dim in range(2, 7):
            for _ in range(40):
                force_zero = instances % 4 == 0
                eigs, mults = orc.random_spectrum_instance(dim, rng, include_zero=force_zero)
                if 0 in eigs:
                    with_zero += 1
                seed = int(rng.integers(0, 2**31 - 1))
                for n in range(1, dim + 1):
                    report = orc.verify_sector(
                        eigs, mults, n, seed, tol=1e-8, mode="product"
                    )
                    assert report.matched, (eigs, mults, n, report.max_deviation)
                instances += 1
        assert instances == 200
        assert with_zero >= 50


def test_criterion_3_pauli_exclusion_on_scalar_operators():
    with criterion(3, "scalar operator sectors saturate exactly at the dimension"):
        for lam in (F(-3), F(1, 2), F(2)):
            for dim in range(1, 9):
                spec = ps((lam, dim))
                for n in range(0, dim + 1):
                    assert point_spectrum_nfold_sum(spec, n) == {n * lam}
                assert point_spectrum_nfold_sum(spec, dim + 1) == set()


def test_criterion_4_second_quantization_truncation():
    with criterion(4, "truncated additive second quantization matches the full Fock oracle"):
        result, report = dgamma_spectrum(sd(points=[(1, 1), (2, 1)]), 3)
        assert result == canonicalize(points=[0, 1, 2, 3])
        assert report.complete

        matrix = orc.random_symmetric_with_spectrum([1, 2], [1, 1], seed=11)
        fock = []
        for n in range(0, 3):  # the whole 4-dimensional Fock space of a 2-level system
            fock.extend(orc.jacobi_eigenvalues(orc.additive_compound(matrix, n)))
        oracle_set = orc.dedup_close(fock, 1e-8)
        formula_set = sorted(float(p) for p in result.points)
        assert orc.hausdorff_distance(formula_set, oracle_set) <= 1e-8


def _grid_sums(capped_points, interval, n):
    """Brute-force n-fold sums over capped points plus a discretized interval."""
    values = [(value, cap) for value, cap in capped_points]
    position = interval[0]
    while position <= interval[1]:
        values.append((position, None))
        position += GRID_STEP
    if values[-1][0] != interval[1]:
        values.append((interval[1], None))
    sums = set()
    for combo in itertools.combinations_with_replacement(range(len(values)), n):
        admissible = True
        for idx in set(combo):
            cap = values[idx][1]
            if cap is not None and combo.count(idx) > cap:
                admissible = False
                break
        if admissible:
            sums.add(sum(values[idx][0] for idx in combo))
    return sums


def _assert_grid_supports_exact(exact, grid):
    for value in grid:
        assert exact.contains(value)
    for lo, hi in exact.intervals:
        inside = [g for g in grid if lo <= g <= hi]
        assert inside, (lo, hi)
        assert min(inside) <= lo + GRID_STEP
        assert max(inside) >= hi - GRID_STEP
    for point in exact.points:
        assert point in grid


def test_criterion_5_interval_calculus():
    with criterion(5, "interval sum calculus matches the 1/64-grid brute force"):
        single = sd(points=[(2, 1)], intervals=[(0, 1)])
        exact_single = spectrum_nfold_sum(single, 2)
        assert exact_single == canonicalize(intervals=[(0, 3)])
        _assert_grid_supports_exact(exact_single, _grid_sums([(F(2), 1)], (F(0), F(1)), 2))

        double = sd(points=[(2, 2)], intervals=[(0, 1)])
        exact_double = spectrum_nfold_sum(double, 2)
        assert exact_double == canonicalize(points=[4], intervals=[(0, 3)])
        _assert_grid_supports_exact(exact_double, _grid_sums([(F(2), 2)], (F(0), F(1)), 2))


def test_criterion_6_lattice_counts():
    with criterion(6, "three-square counts match exhaustive enumeration up to 500"):
        histogram = [0] * 501
        bound = math.isqrt(500)
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                partial = a * a + b * b
                if partial > 500:
                    continue
                for c in range(-bound, bound + 1):
                    norm = partial + c * c
                    if norm <= 500:
                        histogram[norm] += 1
        for n in range(0, 501):
            assert r3(n) == histogram[n], n
        assert [r3(0), r3(1), r3(2), r3(3), r3(7)] == [1, 6, 12, 8, 0]


def test_criterion_7_dirac_sector_energies():
    with criterion(7, "massless box: sector minima and the Pauli-capped cutoff set"):
        start = time.perf_counter()
        box = BoxParams(2.0 * math.pi, 0.0)
        assert abs(min_energy_sector(box, 5) - 1.0) <= 1e-9
        assert abs(min_energy_sector(box, 28) - 24.0) <= 1e-9
        assert dirac_dgamma_spectrum(box, 0.5) == [0.0]
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0, f"took {elapsed:.1f}s"


def _random_spectral_data(rng):
    width = rng.randint(1, 3)
    values = rng.sample(range(-5, 6), width)
    points = [
        (F(v, rng.randint(1, 2)), rng.choice([1, 2, 3, INFINITE])) for v in values
    ]
    intervals = []
    for _ in range(rng.randint(0, 2)):
        lo = F(rng.randint(-4, 4), rng.randint(1, 2))
        intervals.append((lo, lo + F(rng.randint(0, 4), rng.randint(1, 2))))
    epoints = [F(rng.randint(-6, 6)) for _ in range(rng.randint(0, 1))]
    return points, intervals, epoints


def _scale_set(s, factor):
    assert factor > 0
    return canonicalize(
        points=[p * factor for p in s.points],
        intervals=[(lo * factor, hi * factor) for lo, hi in s.intervals],
    )


def _shift_set(s, offset):
    return canonicalize(
        points=[p + offset for p in s.points],
        intervals=[(lo + offset, hi + offset) for lo, hi in s.intervals],
    )


def test_criterion_8_invariant_suites():
    with criterion(8, "shift/scale/permutation/canonical-form/trace invariants"):
        rng = random.Random(0xACCE)

        # shift covariance of sums: 100 cases, exact
        for _ in range(100):
            points, intervals, epoints = _random_spectral_data(rng)
            data = sd(points, intervals, epoints)
            n = rng.randint(1, 4)
            offset = F(rng.randint(-6, 6), rng.randint(1, 3))
            shifted = sd(
                [(v + offset, m) for v, m in points],
                [(lo + offset, hi + offset) for lo, hi in intervals],
                [e + offset for e in epoints],
            )
            assert spectrum_nfold_sum(shifted, n) == _shift_set(
                spectrum_nfold_sum(data, n), n * offset
            )
            spec = ps(*points)
            assert point_spectrum_nfold_sum(ps(*[(v + offset, m) for v, m in points]), n) == {
                value + n * offset for value in point_spectrum_nfold_sum(spec, n)
            }

        # scale covariance: sums scale linearly, products by the n-th power
        for _ in range(100):
            points, intervals, epoints = _random_spectral_data(rng)
            data = sd(points, intervals, epoints)
            n = rng.randint(1, 4)
            factor = F(rng.randint(1, 5), rng.randint(1, 5))
            scaled = sd(
                [(v * factor, m) for v, m in points],
                [(lo * factor, hi * factor) for lo, hi in intervals],
                [e * factor for e in epoints],
            )
            assert spectrum_nfold_sum(scaled, n) == _scale_set(
                spectrum_nfold_sum(data, n), factor
            )
            assert spectrum_nfold_product(scaled, n) == _scale_set(
                spectrum_nfold_product(data, n), factor**n
            )
            spec = ps(*points)
            scaled_spec = ps(*[(v * factor, m) for v, m in points])
            assert point_spectrum_nfold_product(scaled_spec, n) == {
                value * factor**n for value in point_spectrum_nfold_product(spec, n)
            }

        # permutation invariance: input order never matters
        for _ in range(100):
            points, intervals, epoints = _random_spectral_data(rng)
            data = sd(points, intervals, epoints)
            shuffled_points = points[:]
            rng.shuffle(shuffled_points)
            shuffled_intervals = intervals[:]
            rng.shuffle(shuffled_intervals)
            reordered = sd(shuffled_points, shuffled_intervals, list(reversed(epoints)))
            n = rng.randint(0, 3)
            assert spectrum_nfold_sum(data, n) == spectrum_nfold_sum(reordered, n)
            assert spectrum_nfold_product(data, n) == spectrum_nfold_product(reordered, n)

        # canonical form of every output, checked independently of the type
        for _ in range(100):
            points, intervals, epoints = _random_spectral_data(rng)
            data = sd(points, intervals, epoints)
            n = rng.randint(0, 3)
            op = rng.choice([spectrum_nfold_sum, spectrum_nfold_product])
            out = op(data, n)
            assert all(a < b for a, b in zip(out.points, out.points[1:]))
            assert all(lo < hi for lo, hi in out.intervals)
            flattened = [x for pair in out.intervals for x in pair]
            assert flattened == sorted(flattened)
            assert all(
                hi0 < lo1
                for (_, hi0), (lo1, _) in zip(out.intervals, out.intervals[1:])
            )
            assert not any(
                lo <= p <= hi for p in out.points for lo, hi in out.intervals
            )

        # compound-matrix trace identities on random dense symmetric matrices
        np_rng = np.random.default_rng(0xACCF)
        for _ in range(100):
            dim = int(np_rng.integers(2, 9))
            raw = np_rng.standard_normal((dim, dim))
            matrix = (raw + raw.T) / 2.0
            n = int(np_rng.integers(1, dim + 1))
            additive_trace = np.trace(orc.additive_compound(matrix, n))
            expected = math.comb(dim - 1, n - 1) * np.trace(matrix)
            assert abs(additive_trace - expected) < 1e-9
            eigs = orc.jacobi_eigenvalues(matrix)
            elementary = sum(
                math.prod(combo) for combo in itertools.combinations(eigs, n)
            )
            multiplicative_trace = np.trace(orc.multiplicative_compound(matrix, n))
            assert abs(multiplicative_trace - elementary) < 1e-8
