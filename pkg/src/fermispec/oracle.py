"""Finite-dimensional matrix oracle for the spectral formulae.

This is the independent verification path: build an explicit dense symmetric
matrix with a prescribed spectrum, form its n-particle operators in the
wedge basis (the additive compound for energy sums, the classical n-th
compound for products), diagonalize them with a cyclic Jacobi solver, and
compare against the exact set calculus.  Everything is deterministic for a
fixed seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Literal, Sequence

import numpy as np

from .spectra import PointSpectrum, point_spectrum_nfold_product, point_spectrum_nfold_sum

#: Largest supported matrix dimension; keeps conditioning benign and the
#: compound sizes at desk scale.
MAX_DIM = 12


class JacobiConvergenceError(RuntimeError):
    """Jacobi sweeps failed to reach the requested off-diagonal residual."""

    def __init__(self, residual: float, sweeps: int):
        self.residual = residual
        self.sweeps = sweeps
        super().__init__(
            f"no convergence after {sweeps} sweeps (off-diagonal residual {residual:.3e})"
        )


def random_symmetric_with_spectrum(
    eigs: Sequence[float], mults: Sequence[int], seed: int
) -> np.ndarray:
    """A dense symmetric matrix with the given eigenvalues and multiplicities.

    Conjugates the diagonal by a random orthogonal matrix obtained by
    composing seeded Householder reflections.  Identical seeds give
    bit-identical matrices.
    """
    if len(eigs) != len(mults) or not len(eigs):
        raise ValueError("need matching, nonempty eigenvalue and multiplicity lists")
    if any(int(m) < 1 for m in mults):
        raise ValueError("multiplicities must be positive")
    dim = int(sum(int(m) for m in mults))
    if dim > MAX_DIM:
        raise ValueError(f"total multiplicity {dim} exceeds the dimension bound {MAX_DIM}")
    rng = np.random.default_rng(seed)
    diag = np.repeat(np.asarray(eigs, dtype=float), np.asarray(mults, dtype=int))
    q = np.eye(dim)
    for _ in range(dim):
        v = rng.standard_normal(dim)
        norm = np.linalg.norm(v)
        if norm < 1e-12:  # keep q orthogonal in the astronomically unlikely case
            continue
        v /= norm
        q -= 2.0 * np.outer(v, v @ q)
    matrix = (q * diag) @ q.T
    return (matrix + matrix.T) / 2.0


def wedge_basis(dim: int, n: int) -> list[tuple[int, ...]]:
    """All strictly increasing n-tuples over 1..dim, in lexicographic order.

    These index the orthonormal basis of the antisymmetric n-particle space;
    the list is empty when ``n > dim`` (the sector is trivial).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > dim:
        return []
    return list(combinations(range(1, dim + 1), n))


def _as_square(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("a square matrix is required")
    return a


def _sort_with_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    # insertion sort with swap parity; tuples are tiny (n <= 12)
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return tuple(idx), sign


def additive_compound(matrix, n: int) -> np.ndarray:
    """Matrix of the slot-summed operator restricted to the wedge basis.

    Built literally: apply the one-particle matrix to each slot of a wedge
    basis vector, expand in the standard basis, drop wedges with repeated
    indices, and reorder with the permutation sign.  The eigenvalues are the
    admissible n-fold eigenvalue sums.
    """
    a = _as_square(matrix)
    dim = a.shape[0]
    if not 0 <= n <= dim:
        raise ValueError(f"n must lie in [0, {dim}], got {n}")
    basis = wedge_basis(dim, n)
    rank = {key: i for i, key in enumerate(basis)}
    out = np.zeros((len(basis), len(basis)))
    for col, key in enumerate(basis):
        occupied = set(key)
        for slot, k in enumerate(key):
            for i in range(1, dim + 1):
                coeff = a[i - 1, k - 1]
                if coeff == 0.0:
                    continue
                if i == k:
                    out[col, col] += coeff
                    continue
                if i in occupied:
                    continue  # repeated index: the wedge vanishes
                replaced = key[:slot] + (i,) + key[slot + 1 :]
                ordered, sign = _sort_with_sign(replaced)
                out[rank[ordered], col] += sign * coeff
    return out


def _det_bareiss(rows: list[list[float]]) -> float:
    """Determinant by fraction-free elimination with partial pivoting."""
    size = len(rows)
    if size == 0:
        return 1.0
    m = [row[:] for row in rows]
    sign = 1.0
    prev = 1.0
    for k in range(size - 1):
        pivot_row = max(range(k, size), key=lambda r: abs(m[r][k]))
        if m[pivot_row][k] == 0.0:
            return 0.0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, size):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) / prev
        prev = pivot
    return sign * m[-1][-1]


def multiplicative_compound(matrix, n: int) -> np.ndarray:
    """The classical n-th compound: all n-by-n minors in the wedge basis.

    Entry (K, L) is the determinant of the submatrix with rows K and
    columns L.  The eigenvalues are the admissible n-fold eigenvalue
    products.  Only the upper triangle is evaluated; symmetry of the input
    makes the mirrored minors equal.
    """
    a = _as_square(matrix)
    dim = a.shape[0]
    if not 0 <= n <= dim:
        raise ValueError(f"n must lie in [0, {dim}], got {n}")
    basis = wedge_basis(dim, n)
    size = len(basis)
    out = np.zeros((size, size))
    for bi in range(size):
        rows = [r - 1 for r in basis[bi]]
        for bj in range(bi, size):
            cols = [c - 1 for c in basis[bj]]
            minor = [[float(a[r, c]) for c in cols] for r in rows]
            value = _det_bareiss(minor)
            out[bi, bj] = value
            out[bj, bi] = value
    return out


def jacobi_eigenvalues(matrix, tol: float = 1e-10, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below ``tol``;
    raises :class:`JacobiConvergenceError` after ``max_sweeps`` sweeps.
    Returns the sorted diagonal.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a = _as_square(matrix).copy()
    dim = a.shape[0]
    if dim == 0:
        return []
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.abs(a).max()))):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2.0
    if dim == 1:
        return [float(a[0, 0])]
    skip = tol / (2.0 * dim * dim)
    residual = math.inf
    mask = ~np.eye(dim, dtype=bool)
    for _ in range(max_sweeps):
        residual = math.sqrt(float(np.sum(np.square(a[mask]))))
        if residual <= tol:
            return sorted(float(x) for x in np.diag(a))
        for p in range(dim - 1):
            for q in range(p + 1, dim):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise JacobiConvergenceError(residual, max_sweeps)


def dedup_close(values: Iterable[float], tol: float) -> list[float]:
    """Collapse sorted values into representatives of clusters of width ``tol``."""
    out: list[float] = []
    cluster: list[float] = []
    for v in sorted(values):
        if cluster and v - cluster[-1] > tol:
            out.append(sum(cluster) / len(cluster))
            cluster = []
        cluster.append(v)
    if cluster:
        out.append(sum(cluster) / len(cluster))
    return out


def hausdorff_distance(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Hausdorff distance between two finite value sets (inf if one is empty)."""
    if not xs and not ys:
        return 0.0
    if not xs or not ys:
        return math.inf
    forward = max(min(abs(x - y) for y in ys) for x in xs)
    backward = max(min(abs(x - y) for x in xs) for y in ys)
    return max(forward, backward)


Mode = Literal["sum", "product"]


@dataclass(frozen=True)
class SpectrumReport:
    """Comparison of a formula-computed set against the matrix oracle."""

    formula_set: tuple[float, ...]
    oracle_set: tuple[float, ...]
    max_deviation: float
    matched: bool


def verify_sector(
    eigs: Sequence[float],
    mults: Sequence[int],
    n: int,
    seed: int,
    tol: float = 1e-8,
    mode: Mode = "sum",
) -> SpectrumReport:
    """Check one n-particle sector of one instance against the oracle.

    The exact calculus runs on the (value, multiplicity) description; the
    oracle diagonalizes the corresponding compound of a random matrix with
    that spectrum.  The two sets must agree within Hausdorff distance
    ``tol`` after deduplication.
    """
    if mode not in ("sum", "product"):
        raise ValueError(f"mode must be 'sum' or 'product', got {mode!r}")
    total = sum(int(m) for m in mults)
    if not 0 <= n <= total:
        raise ValueError(f"n must lie in [0, {total}], got {n}")
    spectrum = PointSpectrum(tuple((Fraction(float(e)), int(m)) for e, m in zip(eigs, mults)))
    if mode == "sum":
        formula = point_spectrum_nfold_sum(spectrum, n)
        compound = additive_compound
    else:
        formula = point_spectrum_nfold_product(spectrum, n)
        compound = multiplicative_compound
    matrix = random_symmetric_with_spectrum(eigs, mults, seed)
    oracle_set = dedup_close(jacobi_eigenvalues(compound(matrix, n)), tol)
    formula_set = sorted(float(v) for v in formula)
    deviation = hausdorff_distance(formula_set, oracle_set)
    return SpectrumReport(tuple(formula_set), tuple(oracle_set), deviation, deviation <= tol)


def random_spectrum_instance(
    dim: int, rng: np.random.Generator, include_zero: bool = False
) -> tuple[list[int], list[int]]:
    """Draw distinct integer eigenvalues in [-5, 5] with multiplicities summing to ``dim``."""
    if not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dim must lie in [1, {MAX_DIM}]")
    k = int(rng.integers(1, dim + 1))
    if k > 1:
        cuts = np.sort(rng.choice(np.arange(1, dim), size=k - 1, replace=False))
        mults = np.diff(np.concatenate(([0], cuts, [dim]))).tolist()
    else:
        mults = [dim]
    eigs = [int(e) for e in rng.choice(np.arange(-5, 6), size=k, replace=False)]
    if include_zero and 0 not in eigs:
        eigs[int(rng.integers(0, k))] = 0
    return eigs, [int(m) for m in mults]


@dataclass(frozen=True)
class TrialRecord:
    """One verification trial: the drawn instance and its report."""

    trial: int
    eigs: tuple[int, ...]
    mults: tuple[int, ...]
    report: SpectrumReport


def run_verification_trials(
    dim: int,
    n: int,
    trials: int,
    seed: int,
    mode: Mode = "sum",
    tol: float = 1e-8,
) -> list[TrialRecord]:
    """Run seeded random instances of one sector check; deterministic per seed."""
    if trials < 1:
        raise ValueError("trials must be positive")
    if not 0 <= n <= dim:
        raise ValueError(f"n must lie in [0, {dim}]")
    rng = np.random.default_rng(seed)
    records = []
    for trial in range(trials):
        eigs, mults = random_spectrum_instance(dim, rng)
        matrix_seed = int(rng.integers(0, 2**31 - 1))
        report = verify_sector(eigs, mults, n, matrix_seed, tol, mode)
        records.append(TrialRecord(trial, tuple(eigs), tuple(mults), report))
    return records
