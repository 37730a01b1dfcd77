"""One-parameter reductions p = f(q) of the two-parameter oscillator.

An admissible reduction must be non-decreasing on its domain, stay inside
[0, 1], and satisfy f(1) = 1; each such map selects a one-parameter
q-oscillator class.  Built-in families:

    power:  p = q^l         (l >= 0; l = 1 is the p = q diagonal,
                             l = 0 the constant boundary member p = 1)
    log:    p = 1 + a ln q  (a > 0; domain clipped to [exp(-1/a), 1])
    exp:    p = exp(a(q-1)) (a > 0)

plus arbitrary user maps via CustomFamily.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .core import DeformationPoint, energy_level
from .degeneracy import _residual_grid, _residual_raw
from .errors import ConsistencyError, DomainError
from .roots import bisect_bracket, grid_roots_from_values

# grid sizes fixed by the admissibility / non-admission contracts
_VALIDATE_GRID = 10_000
_SOLVE_GRID = 10_001
_BOUNDS_SLACK = 1e-12


class ReductionFamily:
    """Base interface: a label, the smallest admissible q, and the map itself."""

    label = "?"
    domain_low = 0.0

    def p_of_q(self, q):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.label!r})"


class PowerFamily(ReductionFamily):
    def __init__(self, exponent):
        exponent = float(exponent)
        if not math.isfinite(exponent) or exponent < 0.0:
            raise DomainError(f"power exponent must be >= 0, got {exponent}")
        self.exponent = exponent
        self.label = f"power:{exponent:g}"
        self.domain_low = 0.0

    def p_of_q(self, q):
        return q ** self.exponent


class LogFamily(ReductionFamily):
    def __init__(self, alpha):
        alpha = float(alpha)
        if not math.isfinite(alpha) or alpha <= 0.0:
            raise DomainError(f"log coefficient must be > 0, got {alpha}")
        self.alpha = alpha
        self.label = f"log:{alpha:g}"
        self.domain_low = math.exp(-1.0 / alpha)  # where p reaches 0

    def p_of_q(self, q):
        return 1.0 + self.alpha * math.log(q)


class ExpFamily(ReductionFamily):
    def __init__(self, alpha):
        alpha = float(alpha)
        if not math.isfinite(alpha) or alpha <= 0.0:
            raise DomainError(f"exp coefficient must be > 0, got {alpha}")
        self.alpha = alpha
        self.label = f"exp:{alpha:g}"
        self.domain_low = 0.0

    def p_of_q(self, q):
        return math.exp(self.alpha * (q - 1.0))


class CustomFamily(ReductionFamily):
    """User-supplied map; must be side-effect-free and finite on its domain."""

    def __init__(self, func, label, domain_low=0.0):
        if not (0.0 <= domain_low < 1.0):
            raise DomainError(f"domain_low must lie in [0, 1), got {domain_low}")
        self._func = func
        self.label = str(label)
        self.domain_low = float(domain_low)

    def p_of_q(self, q):
        return self._func(q)


def parse_family(text):
    """Parse the CLI grammar power:<l> | log:<alpha> | exp:<alpha>."""
    kind, sep, value = str(text).partition(":")
    if not sep:
        raise ValueError(f"family must look like kind:value, got {text!r}")
    try:
        number = float(value)
    except ValueError:
        raise ValueError(f"family parameter must be a decimal literal, got {value!r}") from None
    makers = {"power": PowerFamily, "log": LogFamily, "exp": ExpFamily}
    if kind not in makers:
        raise ValueError(f"unknown family kind {kind!r}; expected power, log or exp")
    return makers[kind](number)


def _p_clamped(fam, q):
    # boundary values like 1 + a*ln(exp(-1/a)) land a few ulp outside [0, 1]
    p = fam.p_of_q(q)
    if -_BOUNDS_SLACK < p < 0.0:
        return 0.0
    if 1.0 < p < 1.0 + _BOUNDS_SLACK:
        return 1.0
    return p


def family_p(fam, q):
    """f(q), validated against the family domain and the unit interval."""
    q = float(q)
    if not (math.isfinite(q) and fam.domain_low <= q <= 1.0):
        raise DomainError(f"q={q} outside family domain [{fam.domain_low}, 1]")
    p = _p_clamped(fam, q)
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"{fam.label} leaves the unit interval: f({q}) = {p}")
    return p


@dataclass
class FamilyReport:
    """Admissibility check result; failures are content, not exceptions."""

    passed: bool
    endpoint_value: float            # f(1)
    violations: list = field(default_factory=list)  # (q, reason), capped
    n_violations: int = 0
    notes: list = field(default_factory=list)

    _CAP = 10

    def add(self, q, reason):
        self.n_violations += 1
        if len(self.violations) < self._CAP:
            self.violations.append((q, reason))
        self.passed = False


def validate_family(fam, grid_points=_VALIDATE_GRID):
    """Check the two admissibility requirements on a uniform grid:
    f is non-decreasing on [domain_low, 1] and f(1) = 1 (plus 0 <= f <= 1)."""
    lo = fam.domain_low
    step = (1.0 - lo) / (grid_points - 1)
    qs = [lo + i * step for i in range(grid_points - 1)] + [1.0]
    ps = [fam.p_of_q(q) for q in qs]

    report = FamilyReport(passed=True, endpoint_value=ps[-1])
    if abs(ps[-1] - 1.0) > _BOUNDS_SLACK:
        report.add(1.0, f"f(1) = {ps[-1]!r}, expected 1")
    for q, p in zip(qs, ps):
        if not math.isfinite(p) or p < -_BOUNDS_SLACK or p > 1.0 + _BOUNDS_SLACK:
            report.add(q, f"f(q) = {p!r} outside [0, 1]")
    for i in range(len(qs) - 1):
        if ps[i + 1] < ps[i] - _BOUNDS_SLACK:
            report.add(qs[i + 1], f"f decreases: {ps[i]!r} -> {ps[i + 1]!r}")
    if isinstance(fam, PowerFamily) and fam.exponent == 0.0:
        report.notes.append("boundary member: constant map p = 1")
    return report


def solve_degeneracy_on_family(fam, cond, grid_points=_SOLVE_GRID):
    """The q strictly between domain_low and 1 where the family line crosses
    the degeneracy curve of cond, or None when the family does not admit
    that degeneracy.

    The composed residual g(q) = F(q, f(q)) is scanned on a uniform grid
    (resolution <= 1e-4) for sign changes, then bisected; roots closer than
    the grid to a tangency can be missed.  Two or more candidates raise
    ConsistencyError, since each admissible line crosses each curve at most
    once.
    """
    lo = fam.domain_low
    step = (1.0 - lo) / (grid_points - 1)
    qs = [lo + i * step for i in range(grid_points - 1)] + [1.0]
    # the excluded corner (0, 0): neighbor/general residuals vanish there
    # identically, which is not a degeneracy of any admissible point
    qs = [q for q in qs if not (q == 0.0 and _p_clamped(fam, 0.0) == 0.0)]

    def g(q):
        return _residual_raw(cond, q, _p_clamped(fam, q))

    ps = [_p_clamped(fam, q) for q in qs]
    vals = _residual_grid(cond, np.array(qs), np.array(ps))
    candidates = grid_roots_from_values(qs, vals)
    # a zero exactly on the domain boundary is not an in-family degeneracy:
    # e.g. the constant member p = 1 touches every curve at the (0, 1) corner,
    # where the whole spectrum above the ground state collapses
    candidates = [(a, b) for a, b in candidates
                  if not (a == b and (a == qs[0] or a == qs[-1]))]
    if not candidates:
        return None
    if len(candidates) > 1:
        raise ConsistencyError(
            f"{fam.label} crosses the {cond} curve {len(candidates)} times; expected one")
    a, b = candidates[0]
    if a == b:
        return a
    a, b = bisect_bracket(g, a, b, xtol=1e-14)
    return 0.5 * (a + b)


def family_energy(fam, n, q):
    """E_n along the family: energy_level at the composed point (q, f(q))."""
    return energy_level(n, DeformationPoint(q, family_p(fam, q)))
