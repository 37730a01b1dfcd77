"""Large-momentum intercept of the two-particle correlation in the deformed
Bose gas built on a reduction family.

The asymptote is lambda = q + f(q) - 1.  Two members have this form on
record: the constant family p = 1, where the intercept is q itself, and the
exponential family with coefficient 1/2, where it is -1 + q + exp((q-1)/2).
For every other family the same expression is an extrapolation and is
labeled as such in emitted tables.
"""

from dataclasses import dataclass

from .errors import DomainError
from .families import ExpFamily, PowerFamily, family_p


def asymptotic_intercept(fam, q):
    """lambda(q) = q + f(q) - 1; equals 1 at q = 1 for any admissible family."""
    # grouped as q + (p - 1) so the constant family returns q bit-exactly
    return q + (family_p(fam, q) - 1.0)


@dataclass(frozen=True)
class InterceptCurve:
    family: object
    samples: tuple          # (q, lambda) pairs on a uniform q-grid
    extrapolated: bool      # True unless the family has the form on record


def _is_extrapolated(fam):
    if isinstance(fam, PowerFamily) and fam.exponent == 0.0:
        return False
    if isinstance(fam, ExpFamily) and fam.alpha == 0.5:
        return False
    return True


def intercept_curve(fam, n_samples):
    """Sample the intercept on a uniform q-grid over the family domain."""
    if not isinstance(n_samples, int) or n_samples < 2:
        raise DomainError(f"need at least 2 samples, got {n_samples!r}")
    lo = fam.domain_low
    last = n_samples - 1
    samples = []
    for i in range(n_samples):
        q = lo + (1.0 - lo) * i / last if i < last else 1.0
        samples.append((q, asymptotic_intercept(fam, q)))
    return InterceptCurve(family=fam, samples=tuple(samples),
                          extrapolated=_is_extrapolated(fam))
