"""Exact symbolic polynomial self-maps and their reversing symmetries.

Polynomials are sparse multivariate objects with Fraction coefficients; maps
are tuples of component polynomials.  Composition is exact substitution, so
identities such as f(r(f(x))) = r(x) can be verified with zero tolerance.
The reversor check is deliberately inverse-free: for invertible f and r,
r f r^-1 = f^-1 is equivalent to f o r o f = r, which avoids implementing
polynomial-map inversion.

Included verification targets:

* three families of planar maps built from odd polynomials, realizing the
  possible reversing-symmetry-group structures over C2 x C-infinity (all
  reversors involutory; all of order 4; both orders present, in which case
  the map is the square of an explicit generator t);
* the three-variable trace map (x,y,z) -> (y,z,2yz-x), its two involutory
  reversors and the invariant x^2+y^2+z^2-2xyz-1 it preserves.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_MAX_DEGREE = 200
_DEGREE_ENV = "REVSYM_MAX_DEGREE"


class OddnessViolated(ValueError):
    """A parameter polynomial is not an odd function."""


class DegreeLimitExceeded(RuntimeError):
    """A composition would exceed the configured total-degree guardrail."""


def max_composition_degree() -> int:
    value = os.environ.get(_DEGREE_ENV)
    if value is None:
        return DEFAULT_MAX_DEGREE
    return int(value)


class MultiPoly:
    """Sparse multivariate polynomial over Q; terms keyed by exponent tuple."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        clean = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != nvars:
                raise ValueError("exponent arity mismatch")
            coeff = Fraction(coeff)
            if coeff:
                clean[expo] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @staticmethod
    def constant(c, nvars) -> "MultiPoly":
        return MultiPoly(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def variable(i, nvars) -> "MultiPoly":
        expo = [0] * nvars
        expo[i] = 1
        return MultiPoly(nvars, {tuple(expo): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            acc = out.get(expo, 0) + coeff
            if acc:
                out[expo] = acc
            else:
                out.pop(expo, None)
        return MultiPoly(self.nvars, out)

    def __neg__(self):
        return MultiPoly(self.nvars,
                         {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(expo, 0) + c1 * c2
                if acc:
                    out[expo] = acc
                else:
                    out.pop(expo, None)
        return MultiPoly(self.nvars, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable-count mismatch")
            return other
        return MultiPoly.constant(other, self.nvars)

    def substitute(self, replacements) -> "MultiPoly":
        """Exact substitution of one polynomial per variable."""
        comps = tuple(replacements.components
                      if isinstance(replacements, PolyMap) else replacements)
        if len(comps) != self.nvars:
            raise ValueError("variable-count mismatch")
        nvars_out = comps[0].nvars if comps else self.nvars
        limit = max_composition_degree()
        comp_deg = [c.total_degree() for c in comps]
        worst = max((sum(e * d for e, d in zip(expo, comp_deg))
                     for expo in self.terms), default=0)
        if worst > limit:
            raise DegreeLimitExceeded(
                f"composition degree {worst} exceeds limit {limit} "
                f"(override with {_DEGREE_ENV})")
        powers = [{0: MultiPoly.constant(1, nvars_out)} for _ in comps]

        def power_of(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power_of(i, e - 1) * comps[i]
            return cache[e]

        total = MultiPoly.constant(0, nvars_out)
        for expo, coeff in self.terms.items():
            term = MultiPoly.constant(coeff, nvars_out)
            for i, e in enumerate(expo):
                if e:
                    term = term * power_of(i, e)
            total = total + term
        return total

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError("dimension mismatch")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            val = coeff
            for x, e in zip(point, expo):
                if e:
                    val *= x ** e
            total += val
        return total

    def sorted_terms(self):
        """Graded-lexicographic term order, highest first."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def to_text(self, names=None) -> str:
        if self.is_zero():
            return "0"
        names = names or _default_names(self.nvars)
        parts = []
        for expo, coeff in self.sorted_terms():
            factors = [f"{names[i]}^{e}" if e > 1 else names[i]
                       for i, e in enumerate(expo) if e]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_text()!r})"


def _default_names(nvars):
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple(f"x{i}" for i in range(nvars))


@dataclass(frozen=True)
class PolyMap:
    """Self-map of affine space given by one polynomial per coordinate."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("map needs at least one component")
        v = comps[0].nvars
        if len(comps) != v:
            raise ValueError("component count must equal variable count")
        for c in comps:
            if c.nvars != v:
                raise ValueError("component variable counts differ")

    @property
    def nvars(self) -> int:
        return len(self.components)

    @staticmethod
    def identity(nvars) -> "PolyMap":
        return PolyMap(tuple(MultiPoly.variable(i, nvars)
                             for i in range(nvars)))

    def to_text(self) -> str:
        names = _default_names(self.nvars)
        return "(" + ", ".join(c.to_text(names) for c in self.components) + ")"


def compose(f: PolyMap, g: PolyMap) -> PolyMap:
    """The map f o g (apply g first), by exact substitution."""
    if f.nvars != g.nvars:
        raise ValueError("variable-count mismatch")
    return PolyMap(tuple(c.substitute(g) for c in f.components))


def poly_map_equal(f: PolyMap, g: PolyMap) -> bool:
    return f.nvars == g.nvars and f.components == g.components


def check_reversor_identity(f: PolyMap, r: PolyMap) -> bool:
    """Inverse-free reversor test: f o r o f = r (equivalent to
    r f r^-1 = f^-1 for invertible f and r)."""
    return poly_map_equal(compose(f, compose(r, f)), r)


def check_symmetry_identity(f: PolyMap, s: PolyMap) -> bool:
    return poly_map_equal(compose(f, s), compose(s, f))


def iterate(f: PolyMap, point, k: int):
    """k-fold exact evaluation of the map at a rational point."""
    if len(point) != f.nvars:
        raise ValueError("dimension mismatch")
    current = tuple(Fraction(x) for x in point)
    for _ in range(k):
        current = tuple(c.evaluate(current) for c in f.components)
    return current


# ---------------------------------------------------------------------------
# Example families of planar maps built from odd polynomials


def univariate(coeffs) -> MultiPoly:
    """Univariate polynomial from little-endian coefficients."""
    return MultiPoly(1, {(i,): Fraction(c) for i, c in enumerate(coeffs)})


def is_odd_function(p: MultiPoly) -> bool:
    if p.nvars != 1:
        raise ValueError("oddness check applies to univariate polynomials")
    return all(e[0] % 2 == 1 for e in p.terms)


def _embed(p: MultiPoly, target: MultiPoly) -> MultiPoly:
    """p(target) where p is univariate and target is a planar polynomial."""
    return p.substitute((target,))


@dataclass(frozen=True)
class ExampleFamily:
    case: int
    f: PolyMap
    s: PolyMap
    r: PolyMap
    t: PolyMap | None = None


def build_example_family(case: int, p: MultiPoly | None = None,
                         q: MultiPoly | None = None) -> ExampleFamily:
    """The planar example maps.

    Case 1: f(x,y) = (x + p(y), y + q(x + p(y))) with p != q odd; the
            point reflection s and r(x,y) = (-x - p(y), y) are involutions.
    Case 2: the fixed cubic map f(x,y) = (-x + y^3, -y - (-x + y^3)^3),
            with the quarter-turn r(x,y) = (-y, x) of order 4, r^2 = s.
    Case 3: as case 1 with q = p; then t(x,y) = (y, x + p(y)) satisfies
            t^2 = f, and t o r is a reversor of order 4.
    """
    x = MultiPoly.variable(0, 2)
    y = MultiPoly.variable(1, 2)
    neg = PolyMap((-x, -y))
    if case == 2:
        if p is not None or q is not None:
            raise ValueError("case 2 is a fixed map without parameters")
        f1 = -x + y ** 3
        f2 = -y - f1 ** 3
        f = PolyMap((f1, f2))
        r = PolyMap((-y, x))
        return ExampleFamily(case=2, f=f, s=neg, r=r)
    if case not in (1, 3):
        raise ValueError("case must be 1, 2 or 3")
    if p is None:
        p = univariate([0, 0, 0, 1])  # y^3
    if case == 1 and q is None:
        q = univariate([0, 1, 0, 1])  # x + x^3
    if case == 3:
        if q is not None and q != p:
            raise ValueError("case 3 requires q = p")
        q = p
    if not is_odd_function(p):
        raise OddnessViolated("p must be an odd polynomial")
    if not is_odd_function(q):
        raise OddnessViolated("q must be an odd polynomial")
    if case == 1 and p == q:
        raise ValueError("case 1 requires p != q")
    p_of_y = _embed(p, y)
    xprime = x + p_of_y
    f = PolyMap((xprime, y + _embed(q, xprime)))
    r = PolyMap((-x - p_of_y, y))
    t = PolyMap((y, x + p_of_y)) if case == 3 else None
    return ExampleFamily(case=case, f=f, s=neg, r=r, t=t)


# ---------------------------------------------------------------------------
# Trace map


def trace_map() -> PolyMap:
    x, y, z = (MultiPoly.variable(i, 3) for i in range(3))
    return PolyMap((y, z, (y * z) * 2 - x))


def trace_invariant() -> MultiPoly:
    x, y, z = (MultiPoly.variable(i, 3) for i in range(3))
    return x ** 2 + y ** 2 + z ** 2 - (x * y * z) * 2 - MultiPoly.constant(1, 3)


@dataclass
class TraceMapReport:
    checks: list  # (name, passed)

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def trace_map_suite() -> TraceMapReport:
    """Verify symbolically that the trace map preserves its invariant and is
    reversed by the coordinate swap (x,y,z) -> (z,y,x) and by
    (x,y,z) -> (2yz - x, z, y), both involutions."""
    x, y, z = (MultiPoly.variable(i, 3) for i in range(3))
    f = trace_map()
    inv = trace_invariant()
    r = PolyMap((z, y, x))
    r2 = PolyMap(((y * z) * 2 - x, z, y))
    ident = PolyMap.identity(3)
    checks = [
        ("invariant-preserved", inv.substitute(f) == inv),
        ("swap-is-reversor", check_reversor_identity(f, r)),
        ("partner-is-reversor", check_reversor_identity(f, r2)),
        ("reversors-are-involutions",
         poly_map_equal(compose(r, r), ident)
         and poly_map_equal(compose(r2, r2), ident)),
    ]
    return TraceMapReport(checks=checks)
