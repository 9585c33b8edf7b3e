"""Reversibility analysis for elements of GL(n,Z) and PGL(n,Z).

An element r of the ambient group reverses f when r f r^-1 = f^-1; elements
commuting with f are its symmetries.  This module decides and classifies
these relations with exact integer arithmetic:

* symmetry / reversor predicates (projective variants compare up to sign);
* the integer lattice of intertwiners {X : X A = B X}, computed through an
  exact integer kernel, which turns reversor search into a low-rank
  coefficient enumeration instead of a search over raw matrix entries;
* generators of the commutant of a 2x2 matrix via the quadratic-form
  equation a^2 + t*a*b + d*b^2 = +-1 satisfied by unimodular a*I + b*M;
* a decision table classifying the reversing symmetry group of a 2x2
  integer matrix of infinite order into the three possible structures
  (all reversors involutions, all of order 4, or both orders present);
* an orchestrating `analyze` that produces a full ReversibilityReport.

Negative search results are reported as bound-relative unless an exact
obstruction (non-reciprocal characteristic polynomial, or an intertwiner
lattice that is empty over Z) proves irreversibility outright.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from math import isqrt

from .exactmath import (
    IntMatrix,
    IntPoly,
    NotUnimodular,
    RECIPROCAL_NONE,
    char_poly,
    finite_order_test,
    mat_det,
    mat_inverse_unimodular,
    mat_mul,
    mat_pow,
    reciprocity_class,
)

STATUS_CLASSIFIED = "classified"
STATUS_IRREVERSIBLE = "irreversible-proven"
STATUS_INCONCLUSIVE = "inconclusive-up-to-bound"
STATUS_TRIVIAL = "trivially-reversible"

CASE_DINF = "dinf"
CASE_ONE = "case1"
CASE_TWO = "case2"
CASE_THREE = "case3"
CASE_UNCLASSIFIED = "reversible-unclassified"

_MAX_ENUMERATION = 2_000_000


class EmptyLattice(Exception):
    """The intertwiner lattice is trivial over Z: no reversor exists at all,
    not merely none within the search bound."""


class GeneratorNotFound(Exception):
    """No commutant generator passed the completeness cross-check; the search
    bound is too small."""


class FiniteOrderInput(ValueError):
    """Operation requires a matrix of infinite order."""


class NotInSpan(Exception):
    """Element is not +-g^k within the discrete-log bound."""


class InfiniteOrderReversor(ValueError):
    """Order-based reduction requires a finite-order reversor."""


class NotAReversor(ValueError):
    """The supplied element does not reverse f."""


class SigmaOutsidePlusMinus(Exception):
    """Conjugation of the commutant generator did not land in {+-I} times a
    generator power: the generator is not fundamental, re-run with a larger
    generator search bound."""


@dataclass(frozen=True)
class GroupContext:
    """Ambient matrix group: GL(n,Z), or PGL(n,Z) when projective."""

    n: int
    projective: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("context dimension must be >= 2")


@dataclass(frozen=True)
class SearchBounds:
    reversor_bound: int = 10
    generator_bound: int = 50


def canonical_sign(a: IntMatrix) -> IntMatrix:
    """Representative with the first nonzero entry (row-major) positive."""
    for row in a.rows:
        for v in row:
            if v > 0:
                return a
            if v < 0:
                return -a
    return a


def ctx_eq(a: IntMatrix, b: IntMatrix, ctx: GroupContext) -> bool:
    return a == b or (ctx.projective and a == -b)


def _check_element(m: IntMatrix, ctx: GroupContext):
    if m.n != ctx.n:
        raise ValueError(f"dimension mismatch: element is {m.n}x{m.n} in a "
                         f"{ctx.n}-dimensional context")
    if mat_det(m) not in (1, -1):
        raise NotUnimodular("element is not unimodular")


def is_symmetry(s: IntMatrix, f: IntMatrix, ctx: GroupContext) -> bool:
    """True iff s f s^-1 = f (up to overall sign in the projective case)."""
    _check_element(s, ctx)
    _check_element(f, ctx)
    return ctx_eq(mat_mul(s, f), mat_mul(f, s), ctx)


def is_reversor(r: IntMatrix, f: IntMatrix, ctx: GroupContext) -> bool:
    """True iff r f r^-1 = f^-1 (up to overall sign in the projective case)."""
    _check_element(r, ctx)
    _check_element(f, ctx)
    finv = mat_inverse_unimodular(f)
    return ctx_eq(mat_mul(r, f), mat_mul(finv, r), ctx)


# ---------------------------------------------------------------------------
# Integer kernels and intertwiner lattices


def _reduce_column(work, start, col):
    """Integer-eliminate `col` among rows start.. ; returns True if a pivot
    row was produced (and swapped into position `start`)."""
    while True:
        nz = [i for i in range(start, len(work)) if work[i][col] != 0]
        if not nz:
            return False
        if len(nz) == 1:
            i = nz[0]
            work[start], work[i] = work[i], work[start]
            return True
        nz.sort(key=lambda i: (abs(work[i][col]), i))
        base = nz[0]
        pivot_val = work[base][col]
        for i in nz[1:]:
            q = work[i][col] // pivot_val
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[base])]


def _integer_kernel(rows, ncols):
    """Basis of {x in Z^ncols : rows . x = 0} via unimodular row reduction of
    the stacked matrix [A^T | I]."""
    m = len(rows)
    work = [[rows[i][j] for i in range(m)] +
            [1 if k == j else 0 for k in range(ncols)]
            for j in range(ncols)]
    pivot = 0
    for col in range(m):
        if _reduce_column(work, pivot, col):
            pivot += 1
    return [tuple(row[m:]) for row in work[pivot:]]


def _hnf_rows(vectors):
    """Canonical (Hermite) basis of the lattice spanned by `vectors`:
    positive pivots, entries above each pivot reduced modulo it."""
    work = [list(v) for v in vectors if any(v)]
    if not work:
        return []
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        if not _reduce_column(work, r, col):
            continue
        if work[r][col] < 0:
            work[r] = [-x for x in work[r]]
        p = work[r][col]
        for i in range(r):
            q = work[i][col] // p
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[r])]
        r += 1
    return [tuple(row) for row in work[:r]]


def intertwiner_lattice(a: IntMatrix, b: IntMatrix) -> list[IntMatrix]:
    """Canonical basis of the lattice {X integer n x n : X A = B X}.

    The linear conditions are solved exactly over Z, so the returned basis
    spans the full solution module (the lattice may be empty).
    """
    if mat_det(a) not in (1, -1) or mat_det(b) not in (1, -1):
        raise NotUnimodular("intertwiner_lattice requires unimodular inputs")
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    n = a.n
    rows = []
    for i in range(n):
        for j in range(n):
            coef = [0] * (n * n)
            for k in range(n):
                coef[i * n + k] += a.rows[k][j]
                coef[k * n + j] -= b.rows[i][k]
            rows.append(coef)
    kernel = _hnf_rows(_integer_kernel(rows, n * n))
    return [IntMatrix([vec[i * n:(i + 1) * n] for i in range(n)])
            for vec in kernel]


def _combination(basis, coeffs, n):
    rows = [[0] * n for _ in range(n)]
    for c, mat in zip(coeffs, basis):
        if c:
            for i in range(n):
                row = mat.rows[i]
                out = rows[i]
                for j in range(n):
                    out[j] += c * row[j]
    return IntMatrix(rows)


def _enumerate_unimodular(lattices, bound):
    """Yield (lattice_index, coeffs, X) for all bounded integer combinations
    with det X = +-1, in sorted coefficient order."""
    for idx, basis in enumerate(lattices):
        if not basis:
            continue
        rank = len(basis)
        if (2 * bound + 1) ** rank > _MAX_ENUMERATION:
            raise ValueError(
                f"search space (2*{bound}+1)^{rank} too large; lower the "
                f"coefficient bound")
        n = basis[0].n
        for coeffs in itertools.product(range(-bound, bound + 1), repeat=rank):
            if not any(coeffs):
                continue
            x = _combination(basis, coeffs, n)
            if mat_det(x) in (1, -1):
                yield idx, coeffs, x


def search_reversors(f: IntMatrix, ctx: GroupContext, coeff_bound: int):
    """All unimodular bounded combinations over the reversor lattice(s).

    Solves X f = f^-1 X (and X f = -f^-1 X in the projective case) over Z,
    then enumerates integer combinations with coefficients bounded by
    `coeff_bound`, keeping those with determinant +-1.  Each reversor is
    returned with its order (None = infinite); the output is deduplicated up
    to sign in the projective case and sorted by coefficient vector.

    Raises EmptyLattice when the solution module itself is trivial, which
    proves that no reversor exists over Z at any bound.
    """
    _check_element(f, ctx)
    f2 = mat_mul(f, f)
    if ctx_eq(f2, IntMatrix.identity(f.n), ctx):
        warnings.warn("input satisfies f^2 = 1; every symmetry is already a "
                      "reversor", stacklevel=2)
    finv = mat_inverse_unimodular(f)
    lattices = [intertwiner_lattice(f, finv)]
    if ctx.projective:
        lattices.append(intertwiner_lattice(f, -finv))
    if not any(lattices):
        raise EmptyLattice("no nonzero integer solution of X f = +-f^-1 X")
    found = []
    seen = set()
    for idx, coeffs, x in _enumerate_unimodular(lattices, coeff_bound):
        rep = canonical_sign(x) if ctx.projective else x
        if rep in seen:
            continue
        seen.add(rep)
        found.append((rep, finite_order_test(rep, ctx.projective)))
    return found


def are_conjugate_bounded(a: IntMatrix, b: IntMatrix, ctx: GroupContext,
                          coeff_bound: int):
    """Search for a unimodular X with X A X^-1 = B (up to sign when
    projective); returns the witness or None.  A None result is
    bound-relative unless the lattice itself was empty."""
    _check_element(a, ctx)
    _check_element(b, ctx)
    lattices = [intertwiner_lattice(a, b)]
    if ctx.projective:
        lattices.append(intertwiner_lattice(a, -b))
    for _, _, x in _enumerate_unimodular(lattices, coeff_bound):
        return x
    return None


# ---------------------------------------------------------------------------
# Commutant generators for 2x2 matrices


@dataclass(frozen=True)
class SymmetryDescriptor:
    """Symmetry group of a 2x2 matrix in coordinates: a finite part of order
    `finite_part_order`, an infinite-order generator g, and the expression of
    the analyzed matrix as f_sign * g^f_exponent."""

    finite_part_order: int
    generator: IntMatrix
    f_sign: int
    f_exponent: int


def _dlog(s: IntMatrix, g: IntMatrix, cap: int):
    """Smallest |k| with s = +-g^k, searched for |k| <= cap; None if absent."""
    ident = IntMatrix.identity(g.n)
    ginv = mat_inverse_unimodular(g)
    pos = neg = ident
    for k in range(cap + 1):
        for mat, kk in ((pos, k), (neg, -k)) if k else ((pos, 0),):
            if mat == s:
                return (1, kk)
            if mat == -s:
                return (-1, kk)
        pos = mat_mul(pos, g)
        neg = mat_mul(neg, ginv)
    return None


_DLOG_CAP = 128


def symmetry_generator_2x2(m: IntMatrix, ctx: GroupContext,
                           search_bound: int) -> SymmetryDescriptor:
    """Fundamental infinite-order generator of the commutant of a 2x2 matrix.

    Every integer matrix commuting with m (irreducible characteristic
    polynomial) is a*I + b*m, and such a combination is unimodular exactly
    when a^2 + t*a*b + d*b^2 = +-1 with t = trace(m), d = det(m).  All
    solutions with |a|, |b| <= search_bound are enumerated; candidate
    generators are tried in order of increasing max(|a|,|b|) (sign chosen so
    the trace is positive) and the first one for which every bounded solution
    is +-g^k is returned, together with m expressed as +-g^exponent.
    """
    if ctx.n != 2 or m.n != 2:
        raise ValueError("symmetry_generator_2x2 requires a 2x2 context")
    _check_element(m, ctx)
    if finite_order_test(m) is not None:
        raise FiniteOrderInput("matrix must have infinite order")
    t = m.trace()
    d = mat_det(m)
    disc = t * t - 4 * d
    root = isqrt(disc) if disc >= 0 else None
    if root is not None and root * root == disc:
        raise ValueError("characteristic polynomial is reducible; the "
                         "commutant is not of the form a*I + b*M")
    ident = IntMatrix.identity(2)
    solutions = []
    for a, b in itertools.product(range(-search_bound, search_bound + 1),
                                  repeat=2):
        if (a, b) == (0, 0):
            continue
        if a * a + t * a * b + d * b * b in (1, -1):
            solutions.append((a, b))
    candidates = []
    seen = set()
    for a, b in solutions:
        if b == 0:
            continue
        g = ident.scaled(a) + m.scaled(b)
        if g.trace() < 0:
            g, a, b = -g, -a, -b
        if g in seen:
            continue
        seen.add(g)
        candidates.append((max(abs(a), abs(b)), a, b, g))
    candidates.sort(key=lambda item: item[:3])
    for _, _, _, g in candidates:
        table = {}
        ok = True
        for a, b in solutions:
            s = ident.scaled(a) + m.scaled(b)
            res = _dlog(s, g, _DLOG_CAP)
            if res is None:
                ok = False
                break
            table[(a, b)] = res
        if not ok:
            continue
        eps, expo = table[(0, 1)]
        gen = g
        if expo < 0:
            gen = mat_inverse_unimodular(g)
            expo = -expo
        return SymmetryDescriptor(
            finite_part_order=1 if ctx.projective else 2,
            generator=gen, f_sign=eps, f_exponent=expo)
    raise GeneratorNotFound(
        f"no generator within |a|,|b| <= {search_bound} reproduces every "
        f"bounded commutant solution; enlarge the bound")


def discrete_log_in_symmetries(s: IntMatrix, desc: SymmetryDescriptor,
                               bound: int):
    """Express s as (sign, k) with s = sign * g^k, |k| <= bound."""
    res = _dlog(s, desc.generator, bound)
    if res is None:
        raise NotInSpan(f"element is not +-g^k for |k| <= {bound}")
    return res


def induced_automorphism(r: IntMatrix, s: IntMatrix,
                         ctx: GroupContext) -> IntMatrix:
    """Conjugation action sigma(s) = r s r^-1."""
    _check_element(r, ctx)
    _check_element(s, ctx)
    return mat_mul(mat_mul(r, s), mat_inverse_unimodular(r))


def power_of_two_reversor(r: IntMatrix, f: IntMatrix,
                          ctx: GroupContext) -> IntMatrix:
    """Reduce a finite-order reversor to one of 2-power order.

    If r has order 2^l * (2m+1), then r^(2m+1) is again a reversor (odd
    powers of a reversor reverse) and has order exactly 2^l.
    """
    if not is_reversor(r, f, ctx):
        raise NotAReversor("element does not reverse f")
    order = finite_order_test(r, ctx.projective)
    if order is None:
        raise InfiniteOrderReversor("reversor has infinite order")
    odd = order
    while odd % 2 == 0:
        odd //= 2
    reduced = mat_pow(r, odd)
    return canonical_sign(reduced) if ctx.projective else reduced


# ---------------------------------------------------------------------------
# Classification and reports


def pgl_reciprocity_ok(p: IntPoly) -> bool:
    """Necessary spectral condition for reversibility up to sign: the
    characteristic polynomial of the inverse must match that of +-M."""
    rev = p.reversed_coeffs()
    c0 = p.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError("expected the characteristic polynomial of a "
                         "unimodular matrix")
    direct = p if c0 == 1 else -p
    variant = p.sign_alternated()
    variant = variant if c0 == 1 else -variant
    return rev == direct or rev == variant


def _sign_of(m: IntMatrix):
    ident = IntMatrix.identity(m.n)
    if m == ident:
        return 1
    if m == -ident:
        return -1
    return None


def _classify_from(desc: SymmetryDescriptor, first_reversor: IntMatrix,
                   ctx: GroupContext) -> str:
    g = desc.generator
    r = first_reversor
    for _ in range(2):
        r_sq_sign = _sign_of(mat_mul(r, r))
        if r_sq_sign is None:
            raise SigmaOutsidePlusMinus(
                "the square of a reversor is not +-I; the commutant "
                "generator is not fundamental")
        sigma_gg = _sign_of(mat_mul(induced_automorphism(r, g, ctx), g))
        if sigma_gg is None:
            raise SigmaOutsidePlusMinus(
                "sigma(g)*g is not +-I; the commutant generator is not "
                "fundamental, enlarge the generator search bound")
        involutory = r_sq_sign == 1
        if involutory and sigma_gg == 1:
            return CASE_ONE
        if not involutory and sigma_gg == 1:
            return CASE_TWO
        if involutory and sigma_gg == -1:
            return CASE_THREE
        # order-4 reversor with twisted action: r*g is an involution, retry
        r = mat_mul(r, g)
    raise AssertionError("normalization r -> r*g must terminate in one step")


def classify_two_infty(m: IntMatrix, ctx: GroupContext,
                       bounds: SearchBounds | None = None) -> str:
    """Structure of the reversing symmetry group of an infinite-order 2x2
    integer matrix whose symmetry group is {+-g^k}.

    Returns one of "case1" (all reversors involutions), "case2" (all of
    order 4), "case3" (both orders occur), "irreversible-proven" or
    "inconclusive-up-to-bound".
    """
    if ctx.projective:
        raise ValueError("classification table applies to the GL context")
    bounds = bounds or SearchBounds()
    desc = symmetry_generator_2x2(m, ctx, bounds.generator_bound)
    try:
        reversors = search_reversors(m, ctx, bounds.reversor_bound)
    except EmptyLattice:
        return STATUS_IRREVERSIBLE
    if not reversors:
        if reciprocity_class(char_poly(m)) == RECIPROCAL_NONE:
            return STATUS_IRREVERSIBLE
        return STATUS_INCONCLUSIVE
    return _classify_from(desc, reversors[0][0], ctx)


def verify_coset_decomposition(f: IntMatrix, desc: SymmetryDescriptor,
                               r: IntMatrix, ctx: GroupContext,
                               bound: int) -> bool:
    """Check that the reversors within the search bound are exactly the coset
    r * {+-g^k}: every found reversor factors through the symmetry
    coordinates, and every such product reverses f."""
    if not is_reversor(r, f, ctx):
        raise NotAReversor("r does not reverse f")
    rinv = mat_inverse_unimodular(r)
    for x, _ in search_reversors(f, ctx, bound):
        s = mat_mul(rinv, x)
        discrete_log_in_symmetries(s, desc, 4 * bound + 8)
    g = desc.generator
    for k in range(-bound, bound + 1):
        power = mat_pow(g, k)
        for eps in (1, -1):
            candidate = mat_mul(r, power.scaled(eps))
            if not is_reversor(candidate, f, ctx):
                return False
    return True


@dataclass
class ReversibilityReport:
    matrix: IntMatrix
    context: GroupContext
    order: int | None
    characteristic_polynomial: IntPoly
    reciprocity: str
    sign_adjusted_reciprocity: bool
    status: str
    classification_case: str | None = None
    symmetry_descriptor: SymmetryDescriptor | None = None
    reversors: list = field(default_factory=list)
    bounds: SearchBounds = field(default_factory=SearchBounds)
    irreversibility_reason: str | None = None


def analyze(m: IntMatrix, ctx: GroupContext,
            bounds: SearchBounds | None = None) -> ReversibilityReport:
    """Full reversibility pipeline for one matrix.

    Computes order, characteristic polynomial and reciprocity data, searches
    for reversors over the intertwiner lattice, and classifies the reversing
    symmetry group where the 2x2 theory applies.  Inputs of order 1 or 2 are
    short-circuited: conjugating such f to its inverse is no condition at
    all, so the reversing symmetry group equals the symmetry group.
    """
    bounds = bounds or SearchBounds()
    _check_element(m, ctx)
    cp = char_poly(m)
    rec = reciprocity_class(cp)
    pgl_rec = pgl_reciprocity_ok(cp)
    order = finite_order_test(m, ctx.projective)
    report = ReversibilityReport(
        matrix=m, context=ctx, order=order, characteristic_polynomial=cp,
        reciprocity=rec, sign_adjusted_reciprocity=pgl_rec,
        status=STATUS_INCONCLUSIVE, bounds=bounds)
    if order in (1, 2):
        report.status = STATUS_TRIVIAL
        return report

    lattice_empty = False
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report.reversors = search_reversors(m, ctx, bounds.reversor_bound)
    except EmptyLattice:
        lattice_empty = True

    if m.n == 2 and order is None:
        try:
            report.symmetry_descriptor = symmetry_generator_2x2(
                m, ctx, bounds.generator_bound)
        except (ValueError, GeneratorNotFound):
            report.symmetry_descriptor = None

    if report.reversors:
        report.status = STATUS_CLASSIFIED
        if m.n == 2 and order is None and ctx.projective:
            report.classification_case = CASE_DINF
        elif (m.n == 2 and order is None and not ctx.projective
              and report.symmetry_descriptor is not None):
            report.classification_case = _classify_from(
                report.symmetry_descriptor, report.reversors[0][0], ctx)
        else:
            report.classification_case = CASE_UNCLASSIFIED
        return report

    obstructed = (rec == RECIPROCAL_NONE) if not ctx.projective \
        else (not pgl_rec)
    if lattice_empty or obstructed:
        report.status = STATUS_IRREVERSIBLE
        reasons = []
        if obstructed:
            reasons.append("characteristic polynomial is not self-reciprocal"
                           + ("" if ctx.projective else
                              " (neither directly nor up to sign)"))
        if lattice_empty:
            reasons.append("intertwiner lattice is trivial over Z")
        report.irreversibility_reason = "; ".join(reasons)
    return report
