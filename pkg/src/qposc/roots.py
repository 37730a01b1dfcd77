"""Scan-and-bisect root location on a bounded interval.

Bisection is used instead of Newton so that convergence is guaranteed for
the polynomial residuals this package works with; the scan step fixes the
resolution at which nearby roots can still be told apart.
"""

import math


def bisect_bracket(f, lo, hi, flo=None, fhi=None, xtol=1e-13, max_iter=200):
    """Shrink a sign-change bracket [lo, hi] until hi - lo <= xtol.

    Returns the final (lo, hi) pair.  If an exact zero of f is hit, both
    entries equal that abscissa.  f(lo) and f(hi) must have opposite signs
    (pass flo/fhi if already evaluated).
    """
    if flo is None:
        flo = f(lo)
    if fhi is None:
        fhi = f(hi)
    if flo == 0.0:
        return lo, lo
    if fhi == 0.0:
        return hi, hi
    if (flo < 0.0) == (fhi < 0.0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        if hi - lo <= xtol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # interval below float resolution
            break
        fm = f(mid)
        if fm == 0.0:
            return mid, mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return lo, hi


def grid_roots_from_values(xs, vals):
    """Root candidates given pre-evaluated grid values.

    Returns a list of (a, b) pairs ordered by position: a == b marks an
    exact zero at a grid node, a < b marks a sign change between adjacent
    nodes.  Non-finite values are rejected.
    """
    found = []
    for i, (x, v) in enumerate(zip(xs, vals)):
        if not math.isfinite(v):
            raise ValueError(f"non-finite residual {v} at {x}")
        if v == 0.0:
            found.append((x, x))
        if i + 1 < len(xs) and v * vals[i + 1] < 0.0:
            found.append((x, xs[i + 1]))
    return found


def grid_roots(f, xs):
    """Locate root candidates of f on the grid xs (see grid_roots_from_values)."""
    return grid_roots_from_values(xs, [f(x) for x in xs])
