"""Exact group law on rational points of short Weierstrass curves, and the
translation / point-reflection dynamics living on them.

Points are either ``None`` (the point at infinity, the group identity) or a
pair of Fractions satisfying y^2 = x^3 + A x + B exactly.  The maps of
interest are P -> P + Omega (translations) and P -> -P + S; the latter are
involutions and reverse every translation, and composition of such maps is
closed-form: the two kinds generate a semidirect product of the translation
group by the point reflection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

TRANSLATION = "translation"
NEG_TRANSLATION = "neg-translation"


class PointNotOnCurve(ValueError):
    """An affine point does not satisfy the curve equation."""


class SingularCurve(ValueError):
    """4A^3 + 27B^2 = 0: the cubic is singular and carries no group law."""


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + A x + B over the rationals, nonsingular."""

    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        if self.discriminant == 0:
            raise SingularCurve(f"4A^3 + 27B^2 = 0 for A={self.A}, B={self.B}")

    @property
    def discriminant(self) -> Fraction:
        return -16 * (4 * self.A ** 3 + 27 * self.B ** 2)


def point(x, y):
    return (Fraction(x), Fraction(y))


def is_on_curve(curve: Curve, p) -> bool:
    if p is None:
        return True
    x, y = p
    return y * y == x ** 3 + curve.A * x + curve.B


def _require_on_curve(curve: Curve, p):
    if not is_on_curve(curve, p):
        raise PointNotOnCurve(f"{p} is not on y^2 = x^3 + {curve.A}x + {curve.B}")


def neg(curve: Curve, p):
    """The group inverse (x, -y); infinity is its own inverse."""
    _require_on_curve(curve, p)
    if p is None:
        return None
    x, y = p
    return (x, -y)


def add(curve: Curve, p, q):
    """Chord-tangent addition with full case analysis, exact rationals."""
    _require_on_curve(curve, p)
    _require_on_curve(curve, q)
    if p is None:
        return q
    if q is None:
        return p
    x1, y1 = p
    x2, y2 = q
    if x1 == x2 and y1 == -y2:
        return None
    if p == q:
        slope = (3 * x1 * x1 + curve.A) / (2 * y1)
    else:
        slope = (y2 - y1) / (x2 - x1)
    x3 = slope * slope - x1 - x2
    y3 = slope * (x1 - x3) - y1
    return (x3, y3)


def scalar_mul(curve: Curve, k: int, p):
    """k-fold sum by double-and-add; negative k negates first."""
    _require_on_curve(curve, p)
    if k < 0:
        return scalar_mul(curve, -k, neg(curve, p))
    result = None
    addend = p
    while k:
        if k & 1:
            result = add(curve, result, addend)
        k >>= 1
        if k:
            addend = add(curve, addend, addend)
    return result


@dataclass(frozen=True)
class CurveMap:
    """Either P -> P + base (translation) or P -> -P + base."""

    kind: str
    base: "tuple | None"

    def __post_init__(self):
        if self.kind not in (TRANSLATION, NEG_TRANSLATION):
            raise ValueError(f"unknown map kind {self.kind!r}")


def translation(curve: Curve, omega) -> CurveMap:
    _require_on_curve(curve, omega)
    return CurveMap(TRANSLATION, omega)


def neg_translation(curve: Curve, s) -> CurveMap:
    _require_on_curve(curve, s)
    return CurveMap(NEG_TRANSLATION, s)


def apply_map(curve: Curve, m: CurveMap, p):
    _require_on_curve(curve, p)
    if m.kind == TRANSLATION:
        return add(curve, p, m.base)
    return add(curve, neg(curve, p), m.base)


def compose_maps(curve: Curve, m1: CurveMap, m2: CurveMap) -> CurveMap:
    """Closed-form composition m1 o m2 (apply m2 first).

    Two translations compose to a translation; a translation against a point
    reflection stays a reflection; two reflections compose to a translation.
    """
    a, b = m1.base, m2.base
    if m1.kind == TRANSLATION and m2.kind == TRANSLATION:
        return CurveMap(TRANSLATION, add(curve, a, b))
    if m1.kind == TRANSLATION:
        return CurveMap(NEG_TRANSLATION, add(curve, b, a))
    if m2.kind == TRANSLATION:
        return CurveMap(NEG_TRANSLATION, add(curve, a, neg(curve, b)))
    return CurveMap(TRANSLATION, add(curve, a, neg(curve, b)))


def map_order_two(curve: Curve, m: CurveMap) -> bool:
    sq = compose_maps(curve, m, m)
    return sq.kind == TRANSLATION and sq.base is None


def check_reversor_on_samples(curve: Curve, omega, s, samples) -> bool:
    """Point reflections reverse translations: with f = (P -> P + omega) and
    r = (P -> -P + s), verify r o f o r = (P -> P - omega), both in the
    closed-form composition algebra and pointwise over the samples."""
    f = translation(curve, omega)
    r = neg_translation(curve, s)
    conj = compose_maps(curve, r, compose_maps(curve, f, r))
    expected = translation(curve, neg(curve, omega))
    if conj != expected:
        return False
    for p in samples:
        _require_on_curve(curve, p)
        via_maps = apply_map(curve, r, apply_map(curve, f, apply_map(curve, r, p)))
        direct = add(curve, p, neg(curve, omega))
        if via_maps != direct:
            return False
    return True


def sample_points(curve: Curve, bases, count: int = 12):
    """Deterministic sample list: small multiples and sums of the bases,
    cycled to the requested length (repeats allowed on curves with few
    rational points)."""
    for b in bases:
        _require_on_curve(curve, b)
    raw = [None]
    for k in range(1, count + 1):
        for i, b in enumerate(bases):
            p = scalar_mul(curve, k, b)
            for other in bases[i + 1:]:
                raw.append(add(curve, p, other))
            raw.append(p)
    # dedupe while preserving order, then cycle to the requested count
    seen = []
    for p in raw:
        if p not in seen:
            seen.append(p)
    out = []
    i = 0
    while len(out) < count:
        out.append(seen[i % len(seen)])
        i += 1
    return out
