"""Bracketed bisection, the normative root finder for the spectrum equations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable


class NoSignChange(ValueError):
    """The bracket endpoints do not straddle a root."""


@dataclass(frozen=True)
class BisectResult:
    root: float
    f_root: float
    iterations: int
    width: float


def bisect(f: Callable[[float], float], lo: float, hi: float,
           tol: float = 1e-13, max_iter: int = 200) -> BisectResult:
    """Find a root of ``f`` on [lo, hi] by bisection.

    Requires a sign change on the bracket.  Stops when the bracket width
    drops below ``tol`` (absolute) and returns the midpoint together with the
    residual there.  Monotone and bracket-preserving: the returned root is
    always inside the initial interval.
    """
    if not lo < hi:
        raise ValueError(f"empty bracket [{lo}, {hi}]")
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return BisectResult(lo, 0.0, 0, 0.0)
    if fhi == 0.0:
        return BisectResult(hi, 0.0, 0, 0.0)
    if (flo > 0.0) == (fhi > 0.0):
        raise NoSignChange(f"f({lo}) = {flo} and f({hi}) = {fhi} "
                           "have the same sign")
    it = 0
    while hi - lo > tol and it < max_iter:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return BisectResult(mid, 0.0, it + 1, hi - lo)
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        it += 1
    root = 0.5 * (lo + hi)
    return BisectResult(root, f(root), it, hi - lo)
