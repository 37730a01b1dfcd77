"""Two-parameter deformed oscillator: brackets, energy levels, Fock matrices.

The model is the (q, p)-deformed ladder algebra

    A A+ - q A+ A = p^N,        A A+ - p A+ A = q^N,

realized on the number basis through the deformed integers ("brackets")

    [[x]] = (q^x - p^x) / (q - p),

which for a non-negative integer k reduce to the symmetric homogeneous
polynomial  [[k]] = sum_{r=0}^{k-1} q^(k-1-r) p^r.  The Hamiltonian
H = (A A+ + A+ A) / 2 then has the spectrum E_n = ([[n+1]] + [[n]]) / 2,
with E_0 = 1/2 for every admissible (q, p) and E_n = n + 1/2 at q = p = 1.

All functions here are pure; values are plain floats / numpy arrays and can
be shared freely between threads.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# |q - p| below this switches qp_bracket to its q == p limit form, avoiding
# the 0/0 cancellation in the defining ratio.
EPS_EQUAL = 1e-9


@dataclass(frozen=True)
class DeformationPoint:
    """A point (q, p) of the closed unit square, excluding the corner (0, 0)."""

    q: float
    p: float

    def __post_init__(self):
        q, p = float(self.q), float(self.p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)
        if not (math.isfinite(q) and math.isfinite(p)):
            raise DomainError(f"deformation parameters must be finite, got ({q}, {p})")
        if not (0.0 <= q <= 1.0 and 0.0 <= p <= 1.0):
            raise DomainError(f"({q}, {p}) lies outside the unit square")
        if q == 0.0 and p == 0.0:
            raise DomainError("the corner (0, 0) is excluded from the parameter domain")


def _pows(x, n):
    """[x^0, x^1, ..., x^n] by repeated multiplication (x^0 == 1 even at x = 0)."""
    out = [1.0] * (n + 1)
    for j in range(1, n + 1):
        out[j] = out[j - 1] * x
    return out


def _bracket_sum(k, q, p):
    """[[k]] as the homogeneous polynomial sum; zero for k == 0."""
    if k == 0:
        return 0.0
    qp, pp = _pows(q, k - 1), _pows(p, k - 1)
    return math.fsum(qp[k - 1 - r] * pp[r] for r in range(k))


def _check_level(n):
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DomainError(f"level index must be an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"level index must be non-negative, got {n}")


def qp_bracket_int(k, point):
    """The bracket [[k]] for an integer k >= 0 at the given point.

    Evaluated as the polynomial sum, which stays exact at q == p and on the
    axes (the x^0 factors are taken as 1 so that [[1]] == 1 everywhere).
    """
    _check_level(k)
    return _bracket_sum(k, point.q, point.p)


def qp_bracket(x, point):
    """The bracket [[x]] for real x.

    Non-negative integer x always goes through the polynomial sum; otherwise
    the defining ratio (q^x - p^x)/(q - p) is used, replaced by its limit
    x * q^(x-1) when |q - p| < EPS_EQUAL.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"bracket argument must be finite, got {x}")
    if x.is_integer() and x >= 0:
        return _bracket_sum(int(x), point.q, point.p)
    q, p = point.q, point.p
    if q == 0.0 or p == 0.0:
        raise DomainError(f"[[{x}]] is undefined on the axes (power of zero)")
    if abs(q - p) < EPS_EQUAL:
        return x * q ** (x - 1.0)
    return (q ** x - p ** x) / (q - p)


def energy_level(n, point):
    """E_n = ([[n+1]] + [[n]]) / 2 for the deformed oscillator."""
    _check_level(n)
    q, p = point.q, point.p
    return 0.5 * (_bracket_sum(n + 1, q, p) + _bracket_sum(n, q, p))


def energy_spectrum(n_max, point):
    """[E_0, ..., E_n_max], element-wise equal to energy_level calls."""
    _check_level(n_max)
    return [energy_level(n, point) for n in range(n_max + 1)]


def energy_iter(point):
    """Yield E_0, E_1, ... in O(1) per step via [[n+1]] = q [[n]] + p^n.

    This is the fast scanning path for long spectra (peak searches); values
    may differ from energy_level by a few ulp at large n.
    """
    q, p = point.q, point.p
    bracket = 0.0  # [[n]]
    p_pow = 1.0    # p^n
    while True:
        nxt = q * bracket + p_pow
        yield 0.5 * (nxt + bracket)
        bracket = nxt
        p_pow *= p


@dataclass(frozen=True)
class FockRep:
    """Truncated number-basis matrices of the deformed ladder operators.

    a_matrix annihilates (upper bidiagonal with entries sqrt([[n]])),
    a_dagger_matrix is its transpose, n_matrix = diag(0, 1, ..., dim-1).
    """

    dim: int
    a_matrix: np.ndarray
    a_dagger_matrix: np.ndarray
    n_matrix: np.ndarray


def fock_rep(dim, point):
    """Build the dim-dimensional truncated representation.

    The defining relations hold on the first dim-1 basis columns; the top
    state is necessarily violated by the cutoff.
    """
    if not isinstance(dim, (int, np.integer)) or dim < 2:
        raise DomainError(f"representation dimension must be an integer >= 2, got {dim!r}")
    a = np.zeros((dim, dim))
    for n in range(1, dim):
        a[n - 1, n] = math.sqrt(_bracket_sum(n, point.q, point.p))
    return FockRep(dim=dim, a_matrix=a, a_dagger_matrix=a.T.copy(),
                   n_matrix=np.diag(np.arange(dim, dtype=float)))


def fock_residuals(rep, point):
    """Max entrywise residuals of the two ladder relations on the first
    dim-1 columns: (A A+ - q A+ A - p^N, A A+ - p A+ A - q^N)."""
    q, p = point.q, point.p
    a, ad = rep.a_matrix, rep.a_dagger_matrix
    aad = a @ ad
    ada = ad @ a
    p_n = np.diag(np.array([p ** n for n in range(rep.dim)]))
    q_n = np.diag(np.array([q ** n for n in range(rep.dim)]))
    cols = rep.dim - 1
    r1 = np.abs(aad - q * ada - p_n)[:, :cols].max()
    r2 = np.abs(aad - p * ada - q_n)[:, :cols].max()
    return float(r1), float(r2)
