"""Closed forms for three one-parameter families and their generating functions.

Families are named after their level patterns:

  12k3 : one low level, k middle copies, one high level  -> signature (1, k, 1)
  123k : three levels, the top one repeated k times      -> signature (1, 1, k)
  223k : doubled low level, top repeated k times         -> signature (2, k)

The 12k3 family has a scalar one-step recurrence with an explicit unrolled
solution and a fully explicit h-vector.  The 123k and 223k families are
coupled; their solution is driven by the polynomial sequence ``phi`` with

    phi(0) = 0,  phi(1) = 1,  phi(k+1) = (s^2 + s) phi(k) - s^2 phi(k-1),

which supplies the entries of powers of the system matrix and the kernel of
both rational generating functions.  All divisions by (s - 1) or t that
appear in derivations are replaced by explicit geometric sums, so every
computation stays inside integer-coefficient polynomials.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum

from .poly import IntPoly, SeriesRational, z_mul
from .signatures import Signature


class Family(str, Enum):
    GZ_12K3 = "12k3"
    GZ_123K = "123k"
    GZ_223K = "223k"


class PhiSequence:
    """Grow-only cache of the phi polynomials, safe under concurrent readers."""

    def __init__(self) -> None:
        self._cache: list[IntPoly] = [IntPoly(), IntPoly([1])]
        self._lock = threading.Lock()

    def __call__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("phi is defined for k >= 0 only")
        if k < len(self._cache):
            return self._cache[k]
        with self._lock:
            b = IntPoly([0, 1, 1])    # s^2 + s
            a = IntPoly([0, 0, -1])   # -s^2
            while len(self._cache) <= k:
                self._cache.append(b * self._cache[-1] + a * self._cache[-2])
        return self._cache[k]


phi = PhiSequence()


def geometric(n: int) -> IntPoly:
    """1 + s + ... + s^n, the expanded form of (s^(n+1) - 1)/(s - 1)."""
    if n < 0:
        raise ValueError("geometric sum needs n >= 0")
    return IntPoly([1] * (n + 1))


def h_12k3(k: int) -> IntPoly:
    """h-polynomial of the (1, k, 1) family, degree 2k + 1.

    Counting which geometric blocks of the unrolled solution cover each
    power gives the coefficients directly:

        h_{2k-2j}   = 1 + 2 (min(2j+1, k) - j)   for 0 <= j <= k,
        h_{2k-2j-1} = 2 (min(2j+2, k) - j)       for 0 <= j <= k-1,
        h_{2k+1}    = 1.

    The result is an asymmetric hill: entries below the top coefficient
    rise by one up to index k + 1, then fall by one.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    n = 2 * k + 1
    h = [0] * (n + 1)
    h[n] = 1
    for j in range(k + 1):
        h[2 * k - 2 * j] = 1 + 2 * (min(2 * j + 1, k) - j)
    for j in range(k):
        h[2 * k - 2 * j - 1] = 2 * (min(2 * j + 2, k) - j)
    return IntPoly(h)


def f_12k3(k: int) -> IntPoly:
    """f-polynomial of the (1, k, 1) family by unrolling its recurrence:

    f_k = (1+t)^(2k) (2+t)
          + sum_{j=1..k} (1+t)^(2(k-j)) ((2+2t) * f_simplex_j + 1),

    where f_simplex_j = ((1+t)^(j+1) - 1)/t expanded as binomials.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    from .engine import simplex_f_polynomial

    one_plus_t = IntPoly([1, 1])
    total = one_plus_t ** (2 * k) * IntPoly([2, 1])
    for j in range(1, k + 1):
        term = IntPoly([2, 2]) * simplex_f_polynomial(j) + IntPoly([1])
        total = total + one_plus_t ** (2 * (k - j)) * term
    return total


def h_123k(k: int) -> IntPoly:
    """h-polynomial of the (1, 1, k) family:
    sum_{j=0..k} (1 + s + ... + s^(j+1)) * phi(k - j + 1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    total = IntPoly()
    for j in range(k + 1):
        total = total + geometric(j + 1) * phi(k - j + 1)
    return total


def h_223k(k: int) -> IntPoly:
    """h-polynomial of the (2, k) family:
    sum_{j=0..k} s^(j+2) * phi(k - j)  +  (1 + s + ... + s^k)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    total = geometric(k)
    for j in range(k + 1):
        total = total + IntPoly.monomial(j + 2) * phi(k - j)
    return total


@dataclass(frozen=True)
class HPair:
    """h-polynomials of the coupled families at a common k."""

    h_123k: IntPoly
    h_223k: IntPoly


_Mat = tuple[IntPoly, IntPoly, IntPoly, IntPoly]  # row-major 2x2


def _system_matrix_power(m: int) -> _Mat:
    """m-th power of the coupled system's matrix [[s^2+s-1, 1], [s-1, 1]].

    For m >= 1 the entries are phi combinations; m = 0 is the identity,
    special-cased so no negative phi index is ever needed.
    """
    if m < 0:
        raise ValueError("matrix power must be >= 0")
    if m == 0:
        return (IntPoly([1]), IntPoly(), IntPoly(), IntPoly([1]))
    s_sq = IntPoly([0, 0, 1])
    s_minus_1 = IntPoly([-1, 1])
    return (phi(m + 1) - phi(m), phi(m),
            s_minus_1 * phi(m), phi(m) - s_sq * phi(m - 1))


def _mat_vec(m: _Mat, v: tuple[IntPoly, IntPoly]) -> tuple[IntPoly, IntPoly]:
    return (m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1])


def h_pair_matrix(k: int) -> HPair:
    """Both coupled h-polynomials at once, through matrix powers:

    (h_123k, h_223k)^T = M^k (s+1, 1)^T + sum_{j=1..k} M^(k-j) ((s+1) g_j, g_j)^T

    with g_j = 1 + s + ... + s^j.  Must agree with h_123k / h_223k entrywise.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    s_plus_1 = IntPoly([1, 1])
    top, bot = _mat_vec(_system_matrix_power(k), (s_plus_1, IntPoly([1])))
    for j in range(1, k + 1):
        g = geometric(j)
        inc_top, inc_bot = _mat_vec(_system_matrix_power(k - j), (s_plus_1 * g, g))
        top = top + inc_top
        bot = bot + inc_bot
    return HPair(top, bot)


def generating_function(family: Family | str) -> SeriesRational:
    """Rational series in z whose z^k coefficient is the family's h-polynomial.

    Numerators: (s + 1) - s z for the 123k family, 1 - s z for 223k; the
    shared denominator is (1 - z)(1 - s z)(1 - (s^2+s) z + s^2 z^2).
    """
    fam = Family(family)
    if fam is Family.GZ_12K3:
        raise ValueError("no rational generating function is provided for the 12k3 family")
    den: tuple[IntPoly, ...] = (IntPoly([1]),)
    for factor in (
        (IntPoly([1]), IntPoly([-1])),                              # 1 - z
        (IntPoly([1]), IntPoly([0, -1])),                           # 1 - s z
        (IntPoly([1]), IntPoly([0, -1, -1]), IntPoly([0, 0, 1])),   # 1 - (s^2+s) z + s^2 z^2
    ):
        den = z_mul(den, factor)
    if fam is Family.GZ_123K:
        num: tuple[IntPoly, ...] = (IntPoly([1, 1]), IntPoly([0, -1]))
    else:
        num = (IntPoly([1]), IntPoly([0, -1]))
    return SeriesRational(num, den)


def family_signature(family: Family | str, k: int) -> Signature:
    """Signature of the family member at parameter k (k = 0 degenerates
    gracefully: repeated blocks simply vanish)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    fam = Family(family)
    if fam is Family.GZ_12K3:
        return Signature((1, k, 1) if k else (1, 1))
    if fam is Family.GZ_123K:
        return Signature((1, 1, k) if k else (1, 1))
    return Signature((2, k) if k else (2,))


def family_h(family: Family | str, k: int) -> IntPoly:
    """Closed-form h-polynomial of the family member at parameter k."""
    fam = Family(family)
    if fam is Family.GZ_12K3:
        return h_12k3(k)
    if fam is Family.GZ_123K:
        return h_123k(k)
    return h_223k(k)


def phi_root_form_value(k: int, s: float) -> float:
    """Floating-point phi(k)(s) from the characteristic roots.

    The roots of x^2 - (s^2+s) x + s^2 are s * (s + 1 +- sqrt(s^2+2s-3))/2,
    so the two-term solution carries a factor s^(k-1) in front of the
    half-root powers; valid for s > 1.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 0.0
    disc = math.sqrt(s * s + 2 * s - 3)
    lam_plus = (s + 1 + disc) / 2
    lam_minus = (s + 1 - disc) / 2
    return s ** (k - 1) * (lam_plus ** k - lam_minus ** k) / disc
