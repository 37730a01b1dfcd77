"""Shape of the spectrum E(n) along a one-parameter family.

For any strictly deformed member (q < 1) the level energies rise over the
first few n, reach a single maximum, then decay monotonically to zero; the
peak moves right as q grows toward the equally-spaced q = 1 limit.
"""

from dataclasses import dataclass

from .core import DeformationPoint, energy_iter, energy_spectrum
from .errors import ConsistencyError, DomainError
from .families import family_p

# a decrease sustained this long certifies the peak: past the maximum both
# brackets in E_n shrink geometrically, so no later rebound is possible
_SETTLE_RUN = 10
_SCAN_CAP = 10_000


@dataclass(frozen=True)
class SpectrumProfile:
    """E_0..E_n_max with the peak position and the tail value E_n_max.

    decay_violations lists any post-peak indices n where E_n fails to
    decrease strictly (empty for a well-formed profile).
    """

    family: object
    q: float
    energies: tuple
    peak_index: int
    tail_bound: float
    decay_violations: tuple


def profile(fam, q, n_max=200):
    """Profile the spectrum at the family member q (strictly deformed)."""
    if not isinstance(n_max, int) or n_max < 2:
        raise DomainError(f"n_max must be an integer >= 2, got {n_max!r}")
    q = float(q)
    if q >= 1.0:
        raise DomainError("profile needs q < 1; the undeformed spectrum is linear and has no peak")
    point = DeformationPoint(q, family_p(fam, q))
    energies = energy_spectrum(n_max, point)
    peak = max(range(len(energies)), key=lambda n: (energies[n], -n))
    violations = tuple(n + 1 for n in range(peak, n_max)
                       if energies[n + 1] >= energies[n])
    return SpectrumProfile(family=fam, q=q, energies=tuple(energies),
                           peak_index=peak, tail_bound=energies[n_max],
                           decay_violations=violations)


def peak_level(fam, q, scan_cap=_SCAN_CAP):
    """Index of the spectral maximum, found by scanning until the energies
    have decreased for 10 consecutive levels."""
    q = float(q)
    if q >= 1.0:
        raise DomainError("peak_level needs q < 1")
    point = DeformationPoint(q, family_p(fam, q))
    best = -1.0
    best_n = 0
    run = 0
    for n, e in enumerate(energy_iter(point)):
        if e > best:
            best, best_n, run = e, n, 0
        else:
            run += 1
            if run >= _SETTLE_RUN:
                return best_n
        if n >= scan_cap:
            raise ConsistencyError(
                f"no certified spectral peak within {scan_cap} levels at q={q}")
