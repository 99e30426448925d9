"""Free Dirac fermions in a periodic box.

The one-particle Hamiltonian is the relativistic kinetic energy on the
momentum lattice of a cubic box with side ``L``: eigenvalues
``sqrt(4*pi^2*N/L^2 + M^2)`` indexed by squared lattice norms ``N``, each
with multiplicity ``4*r3(N)`` (four spinor components times the number of
lattice triples of that norm).  The many-fermion energies follow from the
exclusion-constrained sum calculus; because the levels are irrational this
module works in floating point with a relative deduplication tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

#: Relative tolerance at which numerically coincident energy sums merge.
DEDUP_RTOL = 1e-9


@dataclass(frozen=True)
class BoxParams:
    """Box side length ``L > 0`` and bare mass ``M >= 0``."""

    L: float
    M: float = 0.0

    def __post_init__(self) -> None:
        if not self.L > 0:
            raise ValueError("box side length must be positive")
        if self.M < 0:
            raise ValueError("bare mass must be non-negative")


@lru_cache(maxsize=None)
def r3(n: int) -> int:
    """Number of integer triples (a, b, c) with a^2 + b^2 + c^2 = n.

    Exhaustive search over coordinates bounded by isqrt(n); the third
    coordinate is resolved by an integer square-root test.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    bound = math.isqrt(n)
    count = 0
    for a in range(-bound, bound + 1):
        rest_a = n - a * a
        b_bound = math.isqrt(rest_a)
        for b in range(-b_bound, b_bound + 1):
            rest = rest_a - b * b
            c = math.isqrt(rest)
            if c * c == rest:
                count += 1 if c == 0 else 2
    return count


class Level(NamedTuple):
    """One energy level: squared lattice norm, energy, multiplicity."""

    shell: int
    energy: float
    mult: int


@dataclass(frozen=True)
class LevelTable:
    """One-particle levels sorted by strictly increasing energy."""

    levels: tuple[Level, ...]

    def __iter__(self) -> Iterator[Level]:
        return iter(self.levels)

    def __len__(self) -> int:
        return len(self.levels)


def level_energy(params: BoxParams, shell: int) -> float:
    """Energy of the level with squared lattice norm ``shell``."""
    k = 2.0 * math.pi / params.L
    return math.sqrt(k * k * shell + params.M * params.M)


def one_particle_spectrum(params: BoxParams, n_max: int) -> LevelTable:
    """All levels with squared lattice norm up to ``n_max``.

    Norms not expressible as a sum of three squares carry no lattice points
    and are omitted.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    rows = []
    for shell in range(n_max + 1):
        count = r3(shell)
        if count:
            rows.append(Level(shell, level_energy(params, shell), 4 * count))
    return LevelTable(tuple(rows))


def min_energy_sector(params: BoxParams, n: int) -> float:
    """Ground-state energy of the n-fermion sector.

    Fills levels in ascending energy order, each up to its multiplicity.
    """
    if n < 0:
        raise ValueError("particle number must be non-negative")
    total = 0.0
    remaining = n
    shell = 0
    while remaining > 0:
        mult = 4 * r3(shell)
        if mult:
            take = min(mult, remaining)
            total += take * level_energy(params, shell)
            remaining -= take
        shell += 1
    return total


@dataclass(frozen=True)
class EnergyEnumeration:
    """Deduplicated total energies plus the number of tolerance merges.

    ``merged`` counts bitwise-distinct sums that fell within the relative
    deduplication tolerance of a neighbour and were collapsed.
    """

    energies: tuple[float, ...]
    merged: int


def enumerate_total_energies(params: BoxParams, energy_cutoff: float) -> EnergyEnumeration:
    """All many-fermion total energies up to the cutoff, vacuum included.

    Depth-first search over occupation counts of the admissible levels
    (ascending energy, each capped by its multiplicity), pruned as soon as
    a partial sum exceeds the cutoff.  Zero-energy levels cannot change a
    total and are skipped; the exclusion cap makes the search finite even
    for a massless box.
    """
    if energy_cutoff < 0:
        raise ValueError("energy cutoff must be non-negative")
    limit = energy_cutoff * (1.0 + DEDUP_RTOL)
    levels: list[Level] = []
    shell = 0
    while True:
        energy = level_energy(params, shell)
        if energy > limit:
            break
        count = r3(shell)
        if count and energy > 0.0:
            levels.append(Level(shell, energy, 4 * count))
        shell += 1

    sums: set[float] = set()

    def walk(idx: int, total: float) -> None:
        if idx == len(levels):
            sums.add(total)
            return
        energy, mult = levels[idx].energy, levels[idx].mult
        running = total
        occupancy = 0
        while occupancy <= mult and running <= limit:
            walk(idx + 1, running)
            running += energy
            occupancy += 1

    walk(0, 0.0)

    ordered = sorted(sums)
    energies: list[float] = []
    merged = 0
    previous: float | None = None
    for value in ordered:
        if previous is not None and math.isclose(value, previous, rel_tol=DEDUP_RTOL, abs_tol=0.0):
            merged += 1
            previous = value
            continue
        energies.append(value)
        previous = value
    return EnergyEnumeration(tuple(energies), merged)


def dirac_dgamma_spectrum(params: BoxParams, energy_cutoff: float) -> list[float]:
    """Sorted many-fermion total energies up to the cutoff."""
    return list(enumerate_total_energies(params, energy_cutoff).energies)
