"""Face-polynomial recurrence driven by the projection onto a cube.

A polytope with k distinct levels projects onto the cube
1 <= u_1 <= 2 <= ... <= u_{k-1} <= k by keeping, per adjacent pair of
distinct levels, the one second-row coordinate sitting between them.
Every face maps onto a face of that cube, and the fiber over the
barycenter of each cube face is combinatorially another polytope of the
same kind whose level sequence is one entry shorter.  Matching faces of
the fibers to faces upstairs shifts dimensions by the cube-face dimension,
which yields

    f(t) = sum over cube faces A of  t^dim(A) * f_fiber(A)(t).

A cube face is picked by choosing, for each coordinate j, the endpoint j,
the endpoint j+1, or the free middle; the fiber's level sequence
interleaves the chosen barycenter coordinates with the surviving copies of
the original levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable

from .poly import IntPoly
from .signatures import LevelSequence, Signature, canonicalize, reverse_normal_form

_HALF = Fraction(1, 2)


class Pick(Enum):
    """Per-cube-coordinate choice selecting a cube-face barycenter."""

    LOW = "low"    # u_j fixed at j
    MID = "mid"    # u_j free, barycenter at j + 1/2
    HIGH = "high"  # u_j fixed at j + 1


@dataclass(frozen=True)
class FiberChild:
    """One barycenter fiber: the pick vector, the cube-face dimension it
    spans, and the fiber's canonical signature."""

    picks: tuple[Pick, ...]
    cube_dim: int
    child: Signature


def fiber_child(sig: Signature, picks: Iterable[Pick]) -> FiberChild:
    """Fiber signature over the cube-face barycenter selected by ``picks``.

    Writes i_q - 1 copies of level q for each q, inserting the picked
    coordinate (q, q + 1/2, or q + 1) after each block; the result is
    nondecreasing by construction and one entry shorter than the parent.
    """
    picks = tuple(picks)
    k = sig.k
    if k < 2:
        raise ValueError("fibers need at least two distinct levels")
    if len(picks) != k - 1:
        raise ValueError(f"expected {k - 1} picks, got {len(picks)}")
    values: list[Fraction] = []
    for q, m in enumerate(sig.mults, start=1):
        values.extend([Fraction(q)] * (m - 1))
        if q < k:
            p = picks[q - 1]
            if p is Pick.LOW:
                values.append(Fraction(q))
            elif p is Pick.HIGH:
                values.append(Fraction(q + 1))
            else:
                values.append(q + _HALF)
    child = canonicalize(LevelSequence(tuple(values)))
    assert child.s == sig.s - 1
    cube_dim = sum(1 for p in picks if p is Pick.MID)
    return FiberChild(picks, cube_dim, child)


def cube_children(sig: Signature) -> list[FiberChild]:
    """All 3^(k-1) barycenter fibers, in lexicographic pick order."""
    if sig.k < 2:
        raise ValueError("cube_children needs at least two distinct levels")
    return [fiber_child(sig, picks)
            for picks in product((Pick.LOW, Pick.MID, Pick.HIGH), repeat=sig.k - 1)]


def simplex_f_polynomial(m: int) -> IntPoly:
    """f-polynomial of an m-simplex: sum_d C(m+1, d+1) t^d."""
    if m < 0:
        raise ValueError("simplex dimension must be >= 0")
    return IntPoly([math.comb(m + 1, d + 1) for d in range(m + 1)])


@dataclass(frozen=True)
class EngineConfig:
    """Feature toggles; disabling either is meant for self-tests only."""

    simplex_shortcut: bool = True   # closed form for signatures (1, m) / (m, 1)
    fold_reversals: bool = True     # memoize on min(sig, reversed sig)


class FaceCountEngine:
    """Memoized evaluator of the cube-projection recurrence.

    The cache maps signatures to finished polynomials.  Entries are
    immutable and keyed deterministically, so concurrent callers at worst
    recompute an identical value; no locking is required.
    """

    def __init__(self, config: EngineConfig = EngineConfig()) -> None:
        self.config = config
        self._cache: dict[Signature, IntPoly] = {}

    def _key(self, sig: Signature) -> Signature:
        return reverse_normal_form(sig) if self.config.fold_reversals else sig

    def f_polynomial(self, sig: Signature) -> IntPoly:
        """Exact f-polynomial: coefficient of t^d counts d-dimensional faces,
        the polytope itself included."""
        key = self._key(sig)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        out = self._compute(key)
        self._cache[key] = out
        return out

    def h_polynomial(self, sig: Signature) -> IntPoly:
        """h(s) = f(s - 1)."""
        return self.f_polynomial(sig).shift(-1)

    def _compute(self, sig: Signature) -> IntPoly:
        if sig.k == 1:
            # all levels equal: the polytope is a point, whatever the length
            return IntPoly([1])
        if self.config.simplex_shortcut and sig.k == 2 and 1 in sig.mults:
            return simplex_f_polynomial(sig.s - 1)
        grouped: dict[tuple[int, Signature], int] = {}
        for fc in cube_children(sig):
            gk = (fc.cube_dim, self._key(fc.child))
            grouped[gk] = grouped.get(gk, 0) + 1
        total = IntPoly()
        for (cube_dim, child), count in grouped.items():
            total = total + IntPoly.monomial(cube_dim, count) * self.f_polynomial(child)
        return total


_DEFAULT_ENGINE = FaceCountEngine()


def f_polynomial(sig: Signature) -> IntPoly:
    """f-polynomial via the shared default engine."""
    return _DEFAULT_ENGINE.f_polynomial(sig)


def h_polynomial(sig: Signature) -> IntPoly:
    """h-polynomial via the shared default engine."""
    return _DEFAULT_ENGINE.h_polynomial(sig)
