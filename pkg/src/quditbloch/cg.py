"""Clebsch-Gordan coefficients in the Condon-Shortley convention.

Coefficients are evaluated from the Racah closed-form sum with exact integer
factorial arithmetic (``fractions.Fraction``), followed by a single floating
square root. No table lookup is involved, so any half-integer key is
supported.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def _twice(x, name: str) -> int:
    two = 2 * x
    n = int(round(float(two)))
    if abs(two - n) > 1e-9:
        raise ValueError(f"{name}={x} is not a half-integer")
    return n


def clebsch_gordan(j1, m1, j2, m2, j, m) -> float:
    """Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m>.

    Equals C^{j m}_{j1 m1, j2 m2} in the tensor-coupling notation. Arguments
    are half-integers (``0.5`` steps are exact in binary floating point).
    Returns 0 when ``m1 + m2 != m``, when the triangle inequality
    ``|j1 - j2| <= j <= j1 + j2`` fails, or when a projection is not in the
    lattice of its angular momentum. Negative ``j`` raises ``ValueError``.
    """
    tj1 = _twice(j1, "j1")
    tj2 = _twice(j2, "j2")
    tj = _twice(j, "j")
    if tj1 < 0 or tj2 < 0 or tj < 0:
        raise ValueError("angular momenta must be nonnegative")
    tm1 = _twice(m1, "m1")
    tm2 = _twice(m2, "m2")
    tm = _twice(m, "m")
    return _cg_cached(tj1, tm1, tj2, tm2, tj, tm)


@lru_cache(maxsize=None)
def _cg_cached(tj1: int, tm1: int, tj2: int, tm2: int, tj: int, tm: int) -> float:
    # selection rules; all arguments are twice-values
    if tm1 + tm2 != tm:
        return 0.0
    if not (abs(tj1 - tj2) <= tj <= tj1 + tj2):
        return 0.0
    if (tj1 + tj2 + tj) % 2 != 0:
        return 0.0
    if abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tm) > tj:
        return 0.0
    # each m must live on the lattice of its j (j + m integer)
    if (tj1 + tm1) % 2 or (tj2 + tm2) % 2 or (tj + tm) % 2:
        return 0.0

    def h(x: int) -> int:
        return x // 2

    f = math.factorial
    pre = Fraction(tj + 1) * Fraction(
        f(h(tj1 + tj2 - tj)) * f(h(tj1 - tj2 + tj)) * f(h(-tj1 + tj2 + tj)),
        f(h(tj1 + tj2 + tj) + 1),
    )
    pre *= (
        f(h(tj + tm)) * f(h(tj - tm))
        * f(h(tj1 + tm1)) * f(h(tj1 - tm1))
        * f(h(tj2 + tm2)) * f(h(tj2 - tm2))
    )

    kmin = max(0, -h(tj - tj2 + tm1), -h(tj - tj1 - tm2))
    kmax = min(h(tj1 + tj2 - tj), h(tj1 - tm1), h(tj2 + tm2))
    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        total += Fraction(
            (-1) ** k,
            f(k)
            * f(h(tj1 + tj2 - tj) - k)
            * f(h(tj1 - tm1) - k)
            * f(h(tj2 + tm2) - k)
            * f(h(tj - tj2 + tm1) + k)
            * f(h(tj - tj1 - tm2) + k),
        )
    if total == 0:
        return 0.0
    # one rounding step: the square of the result is an exact rational
    value = math.sqrt(float(pre * total * total))
    return value if total > 0 else -value
