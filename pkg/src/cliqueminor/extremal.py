"""Shape feasibility, integer/linear optima, lower envelopes and extremal bounds.

A forbidden minor enters only through ``(t, x)``: its order and the size of a
largest matching in its complement. The shape ``K(a, b)`` avoids a connected
``H`` with parameters ``(t, x)`` iff ``3a + 2b < 2t - x`` when ``a >= x`` and
``2a + b < t`` when ``a < x``. Everything below is integer or rational exact;
floats appear only in ``*_float`` conveniences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError
from .graph import Graph, ShapeParams, complement_of_matching, disjoint_union
from .matching import missing_matching_size

LOG2_3 = math.log2(3)


@dataclass(frozen=True)
class ForbiddenMinorSpec:
    t: int
    x: int
    connected: bool = True
    graph: Graph | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.t < 1:
            raise InputError(f"forbidden minor needs t >= 1, got {self.t}")
        if not 0 <= self.x <= self.t // 2:
            raise InputError(f"need 0 <= x <= t//2, got t={self.t}, x={self.x}")

    @classmethod
    def from_graph(cls, h: Graph) -> "ForbiddenMinorSpec":
        return cls(h.n, missing_matching_size(h), h.is_connected(), h)

    @classmethod
    def clique(cls, t: int) -> "ForbiddenMinorSpec":
        return cls(t, 0)

    def b_cap(self, a: int) -> int:
        """Largest integer ``b`` with ``K(a, b)`` free of this minor (negative if none)."""
        if a < self.x:
            return self.t - 2 * a - 1
        return (2 * self.t - self.x - 3 * a - 1) // 2


def _check_family(family: Sequence[ForbiddenMinorSpec]) -> list[ForbiddenMinorSpec]:
    family = list(family)
    if not family:
        raise InputError("family of forbidden minors is empty")
    for spec in family:
        if not spec.connected:
            raise InputError("family members must be connected graphs")
    return family


def shape_minor_free(t: int, x: int, a: int, b: int) -> bool:
    """Whether ``K(a, b)`` avoids every connected minor with parameters ``(t, x)``."""
    if t < 1 or not 0 <= x <= t // 2 or a < 0 or b < 0:
        raise InputError(f"parameters out of domain: t={t}, x={x}, a={a}, b={b}")
    if a >= x:
        return 3 * a + 2 * b < 2 * t - x
    return 2 * a + b < t


def family_b_cap(family: Sequence[ForbiddenMinorSpec], a: int) -> int:
    return min(spec.b_cap(a) for spec in family)


# -- exact comparison of 3^a 2^b for rational a, b ----------------------


def power_key(a: Fraction, b: Fraction, scale: int = 6) -> int:
    """``(3**a * 2**b) ** scale`` as an integer; ``scale`` must clear denominators."""
    sa, sb = a * scale, b * scale
    if sa.denominator != 1 or sb.denominator != 1:
        raise ValueError(f"scale {scale} does not clear the denominators of ({a}, {b})")
    return 3 ** int(sa) * 2 ** int(sb)


def exponent_float(a, b) -> float:
    """``log2(3**a * 2**b)``."""
    return LOG2_3 * float(a) + float(b)


@dataclass(frozen=True)
class LPOptimum:
    a: Fraction
    b: Fraction

    @property
    def exponent(self) -> float:
        return exponent_float(self.a, self.b)

    def key(self, scale: int = 6) -> int:
        return power_key(self.a, self.b, scale)


@dataclass(frozen=True)
class ShapeOptimum:
    shape: ShapeParams
    lp: LPOptimum

    @property
    def clique_count(self) -> int:
        return self.shape.clique_count

    def within_factor(self, factor: int) -> bool:
        """``factor * 3^a 2^b >= LP value``, compared exactly."""
        return (factor * self.clique_count) ** 6 >= self.lp.key(6)


def _ip_optimum(family: Sequence[ForbiddenMinorSpec]) -> ShapeParams:
    best = None
    best_count = -1
    limit = max(spec.t for spec in family)
    for a in range(limit + 1):
        b = family_b_cap(family, a)
        if b < 0:
            break
        count = 3 ** a * 2 ** b
        if count > best_count:
            best, best_count = ShapeParams(a, b), count
    return best


def _best_point(points: Iterable[tuple[Fraction, Fraction]]) -> LPOptimum:
    best = None
    for a, b in points:
        if best is None or power_key(a, b) > power_key(best[0], best[1]):
            best = (a, b)
    return LPOptimum(*best)


def single_minor_optimum(spec: ForbiddenMinorSpec) -> ShapeOptimum:
    """Best shape avoiding one connected minor, with its linear relaxation."""
    if not spec.connected:
        raise InputError("forbidden minor must be connected")
    shape = _ip_optimum([spec])
    lp = _best_point([(Fraction(2 * spec.t - spec.x, 3), Fraction(0)), (Fraction(0), Fraction(spec.t))])
    return ShapeOptimum(shape, lp)


# -- lower envelope ------------------------------------------------------


def _lines(spec: ForbiddenMinorSpec):
    """Intercept and slope magnitude of the lines ``b = c - s*a`` bounding one region."""
    t, x = Fraction(spec.t), Fraction(spec.x)
    shallow = (t - x / 2, Fraction(3, 2))
    return [(t, Fraction(2)), shallow] if spec.x > 0 else [shallow]


def _closure_bound(spec: ForbiddenMinorSpec, a: Fraction) -> Fraction:
    if a < spec.x:
        return spec.t - 2 * a
    return spec.t - Fraction(spec.x, 2) - Fraction(3, 2) * a


@dataclass(frozen=True)
class LowerEnvelope:
    constraints: tuple[tuple[int, int], ...]
    extreme_points: tuple[tuple[Fraction, Fraction], ...]

    def height(self, a) -> Fraction:
        a = Fraction(a)
        return min(_closure_bound(ForbiddenMinorSpec(t, x), a) for t, x in self.constraints)

    def contains(self, a, b) -> bool:
        """Whether ``(a, b)`` lies in the closed feasible region."""
        a, b = Fraction(a), Fraction(b)
        return a >= 0 and b >= 0 and b <= self.height(a)

    @property
    def exponents(self) -> list[float]:
        return [exponent_float(a, b) for a, b in self.extreme_points]


def envelope_build(family: Sequence[ForbiddenMinorSpec]) -> LowerEnvelope:
    family = _check_family(family)
    specs = list(family)

    def height(a):
        return min(_closure_bound(s, a) for s in specs)

    lines = [p for s in specs for p in _lines(s)]
    cands = {Fraction(0)}
    for s in specs:
        cands.add(Fraction(s.x))
    for i, (c1, s1) in enumerate(lines):
        cands.add(c1 / s1)
        for c2, s2 in lines[i + 1:]:
            if s1 != s2:
                cands.add((c1 - c2) / (s1 - s2))
    # the envelope is strictly decreasing and its root is the root of the
    # active line there, which is among the candidates
    end = min(a for a in cands if a >= 0 and height(a) <= 0)
    pts = [(a, height(a)) for a in sorted(a for a in cands if 0 <= a <= end)]
    keep = []
    for p in pts:
        while len(keep) >= 2:
            (a0, b0), (a1, b1) = keep[-2], keep[-1]
            if (b1 - b0) * (p[0] - a1) == (p[1] - b1) * (a1 - a0):
                keep.pop()
            else:
                break
        if not keep or keep[-1] != p:
            keep.append(p)
    return LowerEnvelope(tuple((s.t, s.x) for s in specs), tuple(keep))


def family_ip_optimum(family: Sequence[ForbiddenMinorSpec]) -> ShapeOptimum:
    """Best shape avoiding every member, with the envelope-vertex LP optimum."""
    family = _check_family(family)
    shape = _ip_optimum(family)
    env = envelope_build(family)
    result = ShapeOptimum(shape, _best_point(env.extreme_points))
    if not result.within_factor(6):
        raise AssertionError(f"integer optimum {shape} is more than a factor 6 below the LP value")
    return result


@dataclass(frozen=True)
class ExtremalExponent:
    a: Fraction
    b: Fraction
    shape: ShapeParams

    @property
    def value(self) -> float:
        """``log2(3) * a + b``."""
        return exponent_float(self.a, self.b)

    @property
    def gap(self) -> float:
        """Exponent lost by the integer shape; at most ``log2(6)``."""
        return self.value - exponent_float(self.shape.a, self.shape.b)


def extremal_exponent(family: Sequence[ForbiddenMinorSpec]) -> ExtremalExponent:
    opt = family_ip_optimum(family)
    return ExtremalExponent(opt.lp.a, opt.lp.b, opt.shape)


# -- closed-form bounds -------------------------------------------------


@dataclass(frozen=True)
class KsBound:
    """The bound ``c(G)**3 <= 3**s`` for graphs with ``n + omega <= s``."""

    s: int

    def admits(self, clique_count: int) -> bool:
        return clique_count ** 3 <= 3 ** self.s

    @property
    def value_float(self) -> float:
        return 3 ** (self.s / 3)

    @property
    def exact_value(self) -> int | None:
        return 3 ** (self.s // 3) if self.s % 3 == 0 else None

    @property
    def witness(self) -> ShapeParams | None:
        return ShapeParams(self.s // 3, 0) if self.s % 3 == 0 else None


def k_s_bound(s: int) -> KsBound:
    if s < 0:
        raise InputError("s must be nonnegative")
    return KsBound(s)


@dataclass(frozen=True)
class SmallNBound:
    t: int
    n: int
    shape: ShapeParams
    count: int
    log2_part: int
    log3_part: int

    @property
    def theorem_value(self) -> int:
        """``2**log2_part * 3**log3_part`` without the error term."""
        return 2 ** self.log2_part * 3 ** self.log3_part


def small_n_bound(t: int, n: int) -> SmallNBound:
    """Construction and exponent for ``K_t``-minor-free graphs with ``t <= n <= (4t-2)/3``.

    For ``n < t`` the answer is ``K_n`` itself with ``2**n`` cliques.
    """
    if t < 1 or n < 0:
        raise InputError(f"need t >= 1 and n >= 0, got t={t}, n={n}")
    if n < t:
        return SmallNBound(t, n, ShapeParams(0, n), 2 ** n, n, 0)
    if 3 * n > 4 * t - 2:
        raise InputError(f"n={n} exceeds (4t-2)/3 for t={t}")
    x = 2 * (n - t) + 1
    shape = ShapeParams(x, n - 2 * x)
    out = SmallNBound(t, n, shape, shape.clique_count, 4 * t - 3 * n, 2 * (n - t))
    if 4 * out.count != 3 * out.theorem_value:
        raise AssertionError("construction is not 3/4 of the theorem value")
    return out


def wood_bound(t: int, n: int) -> int:
    """``2**(t-2) * (n-t+3)``."""
    if t < 3 or n < t - 2:
        raise InputError(f"need t >= 3 and n >= t-2, got t={t}, n={n}")
    return 2 ** (t - 2) * (n - t + 3)


# -- extremal disjoint unions -------------------------------------------


def feasible_shapes(family: Sequence[ForbiddenMinorSpec], max_order: int) -> list[ShapeParams]:
    """Nonempty shapes on at most ``max_order`` vertices avoiding every member."""
    out = []
    for a in range(max_order // 2 + 1):
        cap = family_b_cap(family, a)
        for b in range(min(cap, max_order - 2 * a) + 1):
            if a or b:
                out.append(ShapeParams(a, b))
    return out


@dataclass(frozen=True)
class UnionConstruction:
    pieces: tuple[ShapeParams, ...]
    count: int

    @property
    def order(self) -> int:
        return sum(p.order for p in self.pieces)

    def graph(self) -> Graph:
        return disjoint_union([complement_of_matching(p) for p in self.pieces])


def extremal_union_construct(family: Sequence[ForbiddenMinorSpec], n: int) -> UnionConstruction:
    """Disjoint union of feasible shapes on exactly ``n`` vertices with most cliques.

    Each piece contributes ``3^a 2^b - 1`` nonempty cliques; the union has the
    sum plus one (the shared empty clique).
    """
    family = _check_family(family)
    if n < 0:
        raise InputError("n must be nonnegative")
    pieces = feasible_shapes(family, n)
    if n > 0 and not any(p.order == 1 for p in pieces):
        raise InputError("no nonempty graph avoids the family (a forbidden minor has t = 1)")
    best = [0] + [-1] * n
    choice: list[ShapeParams | None] = [None] * (n + 1)
    for m in range(1, n + 1):
        for p in pieces:
            if p.order <= m and best[m - p.order] >= 0:
                gain = best[m - p.order] + p.clique_count - 1
                if gain > best[m]:
                    best[m], choice[m] = gain, p
    out = []
    m = n
    while m:
        out.append(choice[m])
        m -= choice[m].order
    out.sort(key=lambda p: (-p.order, p.a))
    return UnionConstruction(tuple(out), best[n] + 1)
