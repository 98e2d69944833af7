"""Thermal photon statistics and certified Fock-space truncation.

Each cavity mode in equilibrium is a geometric (Bose-Einstein) mixture of
Fock states.  The infinite double sums over photon numbers are truncated at a
cutoff whose neglected mass is bounded on output, so downstream results carry
a certificate instead of a guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def thermal_weight(nbar: float, n: int) -> float:
    """Probability of finding n photons in a thermal mode with mean nbar.

    Evaluates nbar^n / (1 + nbar)^(n+1) in ratio form, (nbar/(1+nbar))^n / (1+nbar),
    so large n cannot overflow.  The vacuum limit nbar = 0 gives delta_{n,0}.
    """
    if nbar < 0:
        raise ValueError(f"nbar must be >= 0; got {nbar!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0; got {n!r}")
    if nbar == 0.0:
        return 1.0 if n == 0 else 0.0
    return (nbar / (1.0 + nbar)) ** n / (1.0 + nbar)


def mean_from_temperature(x: float) -> float:
    """Mean photon number of a mode in equilibrium, 1/(exp(x) - 1).

    ``x`` is the dimensionless ratio (mode quantum energy)/(k_B T); no unit
    system is imposed.
    """
    if not (x > 0):
        raise ValueError(f"energy/temperature ratio must be > 0; got {x!r}")
    return 1.0 / math.expm1(x)


def _check_cutoff_args(nbar, tol, moment_order):
    if nbar < 0:
        raise ValueError(f"nbar must be >= 0; got {nbar!r}")
    if tol <= 0:
        raise ValueError(f"tol must be > 0; got {tol!r}")
    if moment_order not in (0, 1, 2):
        raise ValueError(f"moment_order must be 0, 1 or 2; got {moment_order!r}")


def _tail_scan(nbar: float, moment_order: int, stop: float):
    """Partial sums of t_n = p_n (n+2)^m until the remainder is provably < stop.

    The term ratio t_{n+1}/t_n = r ((n+3)/(n+2))^m decreases towards
    r = nbar/(1+nbar), so once q = r ((n+4)/(n+3))^m < 1 the remainder past n
    is bounded by the geometric majorant t_{n+1}/(1-q).  Returns the list of
    partial sums and the final remainder bound.
    """
    r = nbar / (1.0 + nbar)
    partials = []
    total = 0.0
    n = 0
    while True:
        total += thermal_weight(nbar, n) * float(n + 2) ** moment_order
        partials.append(total)
        q = r * ((n + 4) / (n + 3)) ** moment_order
        if q < 1.0:
            remainder = thermal_weight(nbar, n + 1) * float(n + 3) ** moment_order / (1.0 - q)
            if remainder < stop:
                return partials, remainder
        n += 1


def choose_cutoff(nbar: float, tol: float, moment_order: int = 2) -> tuple[int, float]:
    """Smallest cutoff N with sum_{n>N} p_n (n+2)^moment_order < tol, for one mode.

    moment_order 0 is the plain probability tail, with the closed form
    (nbar/(1+nbar))^(N+1); orders 1 and 2 cover the photon-number-weighted
    sums in the dynamics (order 2 bounds every summand family that occurs).

    Returns (N, tail_bound) with tail_bound a certified upper bound < tol.
    """
    _check_cutoff_args(nbar, tol, moment_order)
    if nbar == 0.0:
        return 0, 0.0
    r = nbar / (1.0 + nbar)
    if moment_order == 0:
        n, tail = 0, r
        while tail >= tol:
            n += 1
            tail *= r
        return n, tail
    partials, slack = _tail_scan(nbar, moment_order, stop=tol * 1e-3)
    total_upper = partials[-1] + slack
    for n, partial in enumerate(partials):
        tail = total_upper - partial
        if tail < tol:
            return n, max(tail, 0.0)
    raise AssertionError("unreachable: final tail equals the remainder bound")


def tail_mass(nbar: float, n_max: int, moment_order: int = 2) -> float:
    """Certified upper bound on sum_{n>n_max} p_n (n+2)^moment_order for one mode.

    Used when a cutoff is imposed by hand instead of chosen from a tolerance.
    """
    if nbar < 0:
        raise ValueError(f"nbar must be >= 0; got {nbar!r}")
    if moment_order not in (0, 1, 2):
        raise ValueError(f"moment_order must be 0, 1 or 2; got {moment_order!r}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0; got {n_max!r}")
    if nbar == 0.0:
        return 0.0
    r = nbar / (1.0 + nbar)
    if moment_order == 0:
        return r ** (n_max + 1)
    total = 0.0
    n = n_max + 1
    while True:
        total += thermal_weight(nbar, n) * float(n + 2) ** moment_order
        q = r * ((n + 4) / (n + 3)) ** moment_order
        if q < 1.0:
            remainder = thermal_weight(nbar, n + 1) * float(n + 3) ** moment_order / (1.0 - q)
            if remainder <= max(1e-300, 1e-16 * total):
                return total + remainder
        n += 1


@dataclass(frozen=True)
class FockCutoff:
    """Per-mode Fock truncation with a certified bound on the neglected mass.

    The thermal weights factorize, so the pair grid is the product of the two
    per-mode ranges and the combined neglected mass is at most the sum of the
    per-mode tails.
    """

    n_max1: int
    n_max2: int
    tail_bound: float

    @classmethod
    def choose(
        cls, nbar1: float, nbar2: float, tol: float = 1e-10, moment_order: int = 2
    ) -> "FockCutoff":
        """Smallest per-mode cutoffs whose combined tail stays below tol."""
        n1, t1 = choose_cutoff(nbar1, tol / 2.0, moment_order)
        n2, t2 = choose_cutoff(nbar2, tol / 2.0, moment_order)
        return cls(n1, n2, t1 + t2)

    @classmethod
    def explicit(
        cls, n_max1: int, n_max2: int, nbar1: float, nbar2: float, moment_order: int = 2
    ) -> "FockCutoff":
        """Cutoff fixed by hand; the tail bound is computed, not requested."""
        bound = tail_mass(nbar1, n_max1, moment_order) + tail_mass(nbar2, n_max2, moment_order)
        return cls(n_max1, n_max2, bound)
