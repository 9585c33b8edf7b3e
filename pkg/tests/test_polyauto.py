import random
from fractions import Fraction

import pytest

from revsym.polyauto import (
    DegreeLimitExceeded,
    MultiPoly,
    OddnessViolated,
    PolyMap,
    build_example_family,
    check_reversor_identity,
    check_symmetry_identity,
    compose,
    is_odd_function,
    iterate,
    poly_map_equal,
    trace_invariant,
    trace_map,
    trace_map_suite,
    univariate,
)

X = MultiPoly.variable(0, 2)
Y = MultiPoly.variable(1, 2)
NEG = PolyMap((-X, -Y))
IDENT2 = PolyMap.identity(2)


def random_map(rng, nvars, nterms=2, degree=3):
    comps = []
    for _ in range(nvars):
        terms = {}
        for _ in range(nterms):
            expo = tuple(rng.randint(0, degree) for _ in range(nvars))
            if sum(expo) > degree:
                expo = tuple(0 for _ in range(nvars))
            terms[expo] = Fraction(rng.randint(-3, 3))
        comps.append(MultiPoly(nvars, terms) + MultiPoly.variable(0, nvars))
    return PolyMap(tuple(comps))


class TestCompose:
    def test_identity(self):
        fam = build_example_family(1)
        assert poly_map_equal(compose(fam.f, IDENT2), fam.f)
        assert poly_map_equal(compose(IDENT2, fam.f), fam.f)

    def test_negation_involution(self):
        assert poly_map_equal(compose(NEG, NEG), IDENT2)

    def test_quarter_turn_squares_to_negation(self):
        r = PolyMap((-Y, X))
        assert poly_map_equal(compose(r, r), NEG)

    def test_associativity_random(self):
        rng = random.Random(3)
        for nvars in (2, 3):
            for _ in range(10):
                f, g, h = (random_map(rng, nvars) for _ in range(3))
                lhs = compose(compose(f, g), h)
                rhs = compose(f, compose(g, h))
                assert poly_map_equal(lhs, rhs)

    def test_variable_count_mismatch(self):
        with pytest.raises(ValueError):
            compose(IDENT2, PolyMap.identity(3))

    def test_evaluation_compatible_with_composition(self):
        rng = random.Random(9)
        for _ in range(10):
            f = random_map(rng, 2)
            g = random_map(rng, 2)
            v = (Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                 Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
            comp = compose(f, g)
            assert iterate(comp, v, 1) == iterate(f, iterate(g, v, 1), 1)


class TestExampleFamilies:
    def test_case1_reversor_and_symmetry(self):
        fam = build_example_family(1)
        assert check_reversor_identity(fam.f, fam.r)
        assert check_symmetry_identity(fam.f, fam.s)
        assert poly_map_equal(compose(fam.r, fam.r), IDENT2)
        assert poly_map_equal(compose(fam.s, fam.s), IDENT2)

    def test_case1_reversor_is_not_symmetry(self):
        fam = build_example_family(1)
        assert not check_symmetry_identity(fam.f, fam.r)
        assert not check_reversor_identity(fam.f, IDENT2)

    def test_equality_and_self_symmetry(self):
        fam = build_example_family(1)
        assert poly_map_equal(fam.f, fam.f)
        assert not poly_map_equal(IDENT2, fam.s)
        assert check_symmetry_identity(fam.f, fam.f)

    def test_case2_order_four_reversor(self):
        fam = build_example_family(2)
        assert check_reversor_identity(fam.f, fam.r)
        assert check_symmetry_identity(fam.f, fam.s)
        r2 = compose(fam.r, fam.r)
        assert poly_map_equal(r2, fam.s)
        assert poly_map_equal(compose(r2, r2), IDENT2)

    def test_case3_square_root_and_order_four_reversor(self):
        fam = build_example_family(3)
        assert fam.t is not None
        assert poly_map_equal(compose(fam.t, fam.t), fam.f)
        assert check_reversor_identity(fam.f, fam.r)
        rprime = compose(fam.t, fam.r)
        assert check_reversor_identity(fam.f, rprime)
        sq = compose(rprime, rprime)
        assert poly_map_equal(sq, fam.s)
        assert not poly_map_equal(sq, IDENT2)
        assert poly_map_equal(compose(sq, sq), IDENT2)

    def test_case3_grading_product_of_reversors(self):
        fam = build_example_family(3)
        rprime = compose(fam.t, fam.r)
        assert poly_map_equal(compose(rprime, fam.r), fam.t)
        assert check_symmetry_identity(fam.f, fam.t)

    def test_custom_odd_parameters(self):
        p = univariate([0, 2, 0, 1])   # 2y + y^3
        q = univariate([0, -1, 0, 1])  # -x + x^3
        fam = build_example_family(1, p=p, q=q)
        assert check_reversor_identity(fam.f, fam.r)
        assert check_symmetry_identity(fam.f, fam.s)

    def test_oddness_enforced(self):
        with pytest.raises(OddnessViolated):
            build_example_family(1, p=univariate([0, 0, 1]))  # y^2
        with pytest.raises(OddnessViolated):
            build_example_family(3, p=univariate([1, 1]))     # 1 + y

    def test_case1_requires_distinct_polynomials(self):
        p = univariate([0, 0, 0, 1])
        with pytest.raises(ValueError):
            build_example_family(1, p=p, q=p)

    def test_case2_no_involutory_reversor_in_bounded_words(self):
        # pointwise refutation: no r o sigma with sigma = s^a f^k (|k| <= 3)
        # is an involution
        fam = build_example_family(2)
        x1, y1 = MultiPoly.variable(0, 2), MultiPoly.variable(1, 2)
        f_inv = PolyMap((-x1 + (-y1 - x1 ** 3) ** 3, -y1 - x1 ** 3))
        assert poly_map_equal(compose(fam.f, f_inv), IDENT2)
        samples = [(Fraction(1), Fraction(2)), (Fraction(2), Fraction(-1)),
                   (Fraction(1, 2), Fraction(3))]

        def apply(m, pt):
            return iterate(m, pt, 1)

        for a in (0, 1):
            for k in range(-3, 4):
                def sigma_apply(pt, a=a, k=k):
                    cur = pt
                    step = fam.f if k >= 0 else f_inv
                    for _ in range(abs(k)):
                        cur = apply(step, cur)
                    if a:
                        cur = apply(fam.s, cur)
                    return cur

                def candidate(pt):
                    return apply(fam.r, sigma_apply(pt))

                involution = all(candidate(candidate(pt)) == pt
                                 for pt in samples)
                assert not involution, (a, k)


class TestTraceMap:
    def test_suite_passes(self):
        report = trace_map_suite()
        assert report.all_passed
        assert dict(report.checks) == {
            "invariant-preserved": True,
            "swap-is-reversor": True,
            "partner-is-reversor": True,
            "reversors-are-involutions": True,
        }

    def test_invariant_difference_is_zero_polynomial(self):
        f = trace_map()
        inv = trace_invariant()
        assert (inv.substitute(f) - inv).is_zero()

    def test_fixed_point(self):
        assert iterate(trace_map(), (1, 1, 1), 5) == \
            (Fraction(1), Fraction(1), Fraction(1))

    def test_case2_origin_fixed(self):
        fam = build_example_family(2)
        assert iterate(fam.f, (0, 0), 2) == (Fraction(0), Fraction(0))

    def test_iterate_identity(self):
        v = (Fraction(3, 2), Fraction(-1, 3))
        assert iterate(IDENT2, v, 7) == v


class TestGuardrails:
    def test_degree_limit(self, monkeypatch):
        monkeypatch.setenv("REVSYM_MAX_DEGREE", "10")
        cube = PolyMap((X ** 3, Y ** 3))
        with pytest.raises(DegreeLimitExceeded):
            compose(cube, compose(cube, cube))

    def test_degree_limit_override(self, monkeypatch):
        monkeypatch.setenv("REVSYM_MAX_DEGREE", "30")
        cube = PolyMap((X ** 3, Y ** 3))
        out = compose(cube, compose(cube, cube))
        assert out.components[0] == X ** 27

    def test_odd_check(self):
        assert is_odd_function(univariate([0, 1, 0, 5]))
        assert not is_odd_function(univariate([1, 1]))
        with pytest.raises(ValueError):
            is_odd_function(MultiPoly.variable(0, 2))


class TestTextRendering:
    def test_poly_text(self):
        p = X ** 2 - Y * 3 + MultiPoly.constant(1, 2)
        assert p.to_text() == "x^2 - 3*y + 1"

    def test_map_text(self):
        fam = build_example_family(1)
        assert fam.r.to_text() == "(-y^3 - x, y)"
