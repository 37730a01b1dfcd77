"""qposc: spectra and pairwise level degeneracies of (q, p)-deformed oscillators.

The package evaluates deformed brackets and energy levels, traces the
curves in the (q, p) unit square on which two prescribed levels coincide,
reduces the two-parameter model to one-parameter families p = f(q), solves
for the deformation value realizing a prescribed degeneracy inside a
family, profiles the spectrum shape, and computes the asymptotic
two-particle correlation intercept.  The qposc CLI emits all of it as
deterministic CSV tables.
"""

__version__ = "0.1.0"

from .core import (EPS_EQUAL, DeformationPoint, FockRep, energy_iter,
                   energy_level, energy_spectrum, fock_rep, fock_residuals,
                   qp_bracket, qp_bracket_int)
from .degeneracy import (CurvePoint, CurveTrace, DegeneracyCondition,
                         endpoint_q, implicit_derivative, residual,
                         solve_p_for_q, trace_curve)
from .errors import ConsistencyError, DomainError
from .families import (CustomFamily, ExpFamily, FamilyReport, LogFamily,
                       PowerFamily, ReductionFamily, family_energy, family_p,
                       parse_family, solve_degeneracy_on_family,
                       validate_family)
from .intercept import InterceptCurve, asymptotic_intercept, intercept_curve
from .spectrum import SpectrumProfile, peak_level, profile

__all__ = [
    "__version__", "EPS_EQUAL",
    "DomainError", "ConsistencyError",
    "DeformationPoint", "FockRep",
    "qp_bracket", "qp_bracket_int", "energy_level", "energy_spectrum",
    "energy_iter", "fock_rep", "fock_residuals",
    "DegeneracyCondition", "CurvePoint", "CurveTrace",
    "residual", "solve_p_for_q", "implicit_derivative", "endpoint_q",
    "trace_curve",
    "ReductionFamily", "PowerFamily", "LogFamily", "ExpFamily",
    "CustomFamily", "FamilyReport", "family_p", "validate_family",
    "solve_degeneracy_on_family", "family_energy", "parse_family",
    "SpectrumProfile", "profile", "peak_level",
    "InterceptCurve", "asymptotic_intercept", "intercept_curve",
]
