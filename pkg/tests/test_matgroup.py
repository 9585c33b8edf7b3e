import itertools
import random

import pytest

from revsym.exactmath import (
    IntMatrix,
    IntPoly,
    RECIPROCAL_DIRECT,
    RECIPROCAL_NONE,
    char_poly,
    finite_order_test,
    mat_det,
    mat_inverse_unimodular,
    mat_mul,
    mat_pow,
    reciprocity_class,
)
from revsym.matgroup import (
    CASE_DINF,
    CASE_ONE,
    CASE_THREE,
    CASE_TWO,
    EmptyLattice,
    FiniteOrderInput,
    GroupContext,
    InfiniteOrderReversor,
    NotAReversor,
    NotInSpan,
    STATUS_CLASSIFIED,
    STATUS_IRREVERSIBLE,
    STATUS_TRIVIAL,
    SearchBounds,
    analyze,
    are_conjugate_bounded,
    canonical_sign,
    classify_two_infty,
    discrete_log_in_symmetries,
    induced_automorphism,
    intertwiner_lattice,
    is_reversor,
    is_symmetry,
    pgl_reciprocity_ok,
    power_of_two_reversor,
    search_reversors,
    symmetry_generator_2x2,
    verify_coset_decomposition,
)

GL2 = GroupContext(2)
PGL2 = GroupContext(2, projective=True)
GL4 = GroupContext(4)
PGL4 = GroupContext(4, projective=True)

FIB = IntMatrix([[0, 1], [1, 1]])
R2 = IntMatrix([[1, 0], [1, -1]])
R4 = IntMatrix([[0, -1], [1, 0]])
CASE1_M = IntMatrix([[1, 2], [1, 3]])
CASE2_M = IntMatrix([[5, 7], [7, 10]])
CASE3_M = IntMatrix([[1, 1], [1, 2]])

M4 = IntMatrix([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, 2, 2, 2]])
RR = IntMatrix([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
N4 = IntMatrix([[1, 0, -3, 1], [-1, 3, 2, -1], [1, -3, 1, 0], [0, 1, -3, 1]])
N4P = IntMatrix([[-1, 3, 2, -1], [1, -3, 1, 0], [0, 1, -3, 1], [-1, 2, 3, -1]])


def contains_up_to_sign(reversors, mat):
    return any(x == mat or x == -mat for x, _ in reversors)


class TestPredicates:
    def test_self_symmetry(self):
        assert is_symmetry(CASE1_M, CASE1_M, GL2)

    def test_neg_identity_is_symmetry(self):
        assert is_symmetry(-IntMatrix.identity(2), CASE1_M, GL2)

    def test_commuting_quartics(self):
        assert is_symmetry(N4, M4, PGL4)
        assert is_symmetry(N4, M4, GL4)

    def test_reference_reversors(self):
        assert is_reversor(R2, FIB, PGL2)
        assert is_reversor(R4, FIB, PGL2)
        assert is_reversor(R4, CASE2_M, GL2)
        assert is_reversor(R2, CASE1_M, GL2)
        assert is_reversor(R2, CASE3_M, GL2)
        assert is_reversor(R4, CASE3_M, GL2)

    def test_fibonacci_not_reversible_in_gl(self):
        assert not is_reversor(R2, FIB, GL2)

    def test_identity_not_a_reversor(self):
        assert not is_reversor(IntMatrix.identity(2), CASE1_M, GL2)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            is_symmetry(FIB, M4, GL4)


class TestIntertwinerLattice:
    def test_identity_full_lattice(self):
        basis = intertwiner_lattice(IntMatrix.identity(2), IntMatrix.identity(2))
        assert len(basis) == 4

    def test_commutant_is_span_of_identity_and_m(self):
        basis = intertwiner_lattice(CASE1_M, CASE1_M)
        assert len(basis) == 2
        # brute force: every commuting X with entries in [-5,5] is a + b*M
        brute = []
        for e in itertools.product(range(-5, 6), repeat=4):
            x = IntMatrix([[e[0], e[1]], [e[2], e[3]]])
            if mat_mul(x, CASE1_M) == mat_mul(CASE1_M, x):
                brute.append(x)
        for x in brute:
            b = x.rows[1][0]
            a = x.rows[0][0] - b
            assert IntMatrix.identity(2).scaled(a) + CASE1_M.scaled(b) == x
        # and the basis itself commutes with M
        for mat in basis:
            assert mat_mul(mat, CASE1_M) == mat_mul(CASE1_M, mat)

    def test_reversor_lattice_contains_reference_reversor(self):
        minv = mat_inverse_unimodular(CASE1_M)
        basis = intertwiner_lattice(CASE1_M, minv)
        assert len(basis) == 2
        for mat in basis:
            assert mat_mul(mat, CASE1_M) == mat_mul(minv, mat)
        found = search_reversors(CASE1_M, GL2, 3)
        assert contains_up_to_sign(found, R2)

    def test_deterministic_basis(self):
        b1 = intertwiner_lattice(CASE3_M, CASE3_M)
        b2 = intertwiner_lattice(CASE3_M, CASE3_M)
        assert b1 == b2


class TestSearchReversors:
    def test_case1_contains_involution(self):
        found = search_reversors(CASE1_M, GL2, 3)
        assert contains_up_to_sign(found, R2)
        assert set(order for _, order in found) == {2}

    def test_case2_only_order_four(self):
        found = search_reversors(CASE2_M, GL2, 3)
        assert contains_up_to_sign(found, R4)
        assert set(order for _, order in found) == {4}

    def test_case3_both_orders(self):
        found = search_reversors(CASE3_M, GL2, 3)
        assert contains_up_to_sign(found, R2)
        assert contains_up_to_sign(found, R4)
        assert set(order for _, order in found) == {2, 4}

    def test_matches_entrywise_brute_force(self):
        # oracle: raw entry enumeration in [-5,5]
        for m in (CASE1_M, CASE2_M, CASE3_M):
            minv = mat_inverse_unimodular(m)
            brute = set()
            for e in itertools.product(range(-5, 6), repeat=4):
                x = IntMatrix([[e[0], e[1]], [e[2], e[3]]])
                if mat_det(x) in (1, -1) and mat_mul(x, m) == mat_mul(minv, x):
                    brute.add(x)
            found = {x for x, _ in search_reversors(m, GL2, 12)}
            assert brute <= found

    def test_empty_lattice_proves_irreversibility(self):
        with pytest.raises(EmptyLattice):
            search_reversors(FIB, GL2, 5)

    def test_pgl_finds_sign_twisted_reversors(self):
        found = search_reversors(FIB, PGL2, 3)
        assert found
        assert contains_up_to_sign(found, R2)
        assert contains_up_to_sign(found, R4)
        assert set(order for _, order in found) == {2}

    def test_results_are_genuine_reversors(self):
        for m, ctx in ((CASE1_M, GL2), (CASE3_M, GL2), (FIB, PGL2)):
            for x, order in search_reversors(m, ctx, 4):
                assert is_reversor(x, m, ctx)
                assert finite_order_test(x, ctx.projective) == order

    def test_warns_on_involution_input(self):
        with pytest.warns(UserWarning):
            search_reversors(IntMatrix([[0, 1], [1, 0]]), GL2, 2)


class TestSymmetryGenerator:
    def test_fibonacci_generates_itself(self):
        desc = symmetry_generator_2x2(FIB, PGL2, 10)
        assert desc.generator == FIB
        assert desc.f_sign == 1
        assert desc.f_exponent == 1
        assert desc.finite_part_order == 1

    def test_case3_has_square_root(self):
        desc = symmetry_generator_2x2(CASE3_M, GL2, 10)
        assert desc.generator == FIB
        assert desc.f_sign == 1
        assert desc.f_exponent == 2
        assert mat_pow(desc.generator, 2) == CASE3_M
        assert desc.finite_part_order == 2

    def test_case1_regression(self):
        desc = symmetry_generator_2x2(CASE1_M, GL2, 10)
        # frozen regression: the fundamental solution is (a0, b0) = (0, 1)
        assert desc.generator == CASE1_M
        assert (desc.f_sign, desc.f_exponent) == (1, 1)

    def test_case2_regression(self):
        desc = symmetry_generator_2x2(CASE2_M, GL2, 20)
        assert desc.generator == CASE2_M
        assert (desc.f_sign, desc.f_exponent) == (1, 1)

    def test_negative_power_expression(self):
        m = -mat_pow(FIB, 2)
        desc = symmetry_generator_2x2(m, GL2, 10)
        assert desc.f_sign == -1
        assert desc.f_exponent == 2
        assert mat_pow(desc.generator, 2).scaled(-1) == m

    def test_finite_order_rejected(self):
        with pytest.raises(FiniteOrderInput):
            symmetry_generator_2x2(R4, GL2, 5)

    def test_reducible_rejected(self):
        with pytest.raises(ValueError):
            symmetry_generator_2x2(IntMatrix([[1, 1], [0, 1]]), GL2, 5)


class TestDiscreteLog:
    def test_trivial_values(self):
        desc = symmetry_generator_2x2(CASE3_M, GL2, 10)
        assert discrete_log_in_symmetries(IntMatrix.identity(2), desc, 5) == (1, 0)
        assert discrete_log_in_symmetries(-desc.generator, desc, 5) == (-1, 1)

    def test_square_of_generator(self):
        desc = symmetry_generator_2x2(CASE3_M, GL2, 10)
        assert discrete_log_in_symmetries(CASE3_M, desc, 5) == (1, 2)

    def test_out_of_span(self):
        desc = symmetry_generator_2x2(CASE3_M, GL2, 10)
        with pytest.raises(NotInSpan):
            discrete_log_in_symmetries(R4, desc, 8)


class TestInducedAutomorphism:
    def test_reversor_inverts_f(self):
        sigma = induced_automorphism(R2, CASE1_M, GL2)
        assert sigma == mat_inverse_unimodular(CASE1_M)

    def test_case3_signature(self):
        g = FIB
        sigma_g = induced_automorphism(R2, g, GL2)
        assert mat_mul(sigma_g, g) == -IntMatrix.identity(2)

    def test_case2_generator_inverted(self):
        desc = symmetry_generator_2x2(CASE2_M, GL2, 20)
        sigma_g = induced_automorphism(R4, desc.generator, GL2)
        assert sigma_g == mat_inverse_unimodular(desc.generator)


class TestPowerOfTwoReversor:
    def test_involution_fixed(self):
        assert power_of_two_reversor(R2, CASE1_M, GL2) == R2

    def test_order_six_reduces_to_involution(self):
        # block matrix: reverses the first block, order-3 rotation on the second
        f = IntMatrix([[1, 2, 0, 0], [1, 3, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        r = IntMatrix([[1, 0, 0, 0], [1, -1, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]])
        assert finite_order_test(r) == 6
        reduced = power_of_two_reversor(r, f, GL4)
        assert finite_order_test(reduced) == 2
        assert is_reversor(reduced, f, GL4)

    def test_order_twelve_reduces_to_order_four(self):
        f = IntMatrix([[5, 7, 0, 0], [7, 10, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        r = IntMatrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]])
        assert finite_order_test(r) == 12
        reduced = power_of_two_reversor(r, f, GL4)
        assert finite_order_test(reduced) == 4
        assert is_reversor(reduced, f, GL4)
        assert reduced == mat_pow(r, 3)

    def test_rejects_non_reversor(self):
        with pytest.raises(NotAReversor):
            power_of_two_reversor(IntMatrix.identity(2), CASE1_M, GL2)

    def test_rejects_infinite_order(self):
        rprime = mat_mul(RR, N4P)
        assert is_reversor(rprime, M4, PGL4)
        with pytest.raises(InfiniteOrderReversor):
            power_of_two_reversor(rprime, M4, PGL4)


class TestClassification:
    def test_three_reference_cases(self):
        assert classify_two_infty(CASE1_M, GL2) == CASE_ONE
        assert classify_two_infty(CASE2_M, GL2) == CASE_TWO
        assert classify_two_infty(CASE3_M, GL2) == CASE_THREE

    def test_agrees_with_exhaustive_order_spectra(self):
        expected = {CASE_ONE: {2}, CASE_TWO: {4}, CASE_THREE: {2, 4}}
        for m in (CASE1_M, CASE2_M, CASE3_M):
            case = classify_two_infty(m, GL2)
            spectrum = {order for _, order in search_reversors(m, GL2, 5)}
            assert spectrum == expected[case]

    def test_fibonacci_irreversible_in_gl(self):
        assert classify_two_infty(FIB, GL2) == STATUS_IRREVERSIBLE


class TestCosetDecomposition:
    def test_fibonacci_coset(self):
        desc = symmetry_generator_2x2(FIB, PGL2, 10)
        assert verify_coset_decomposition(FIB, desc, R2, PGL2, 4)

    def test_case3_coset_and_alternating_orders(self):
        desc = symmetry_generator_2x2(CASE3_M, GL2, 10)
        assert verify_coset_decomposition(CASE3_M, desc, R2, GL2, 3)
        g = desc.generator
        # orders of R2 * g^k alternate with the parity of k, per the identity
        # (r s)^2 = sigma(s) s for involutory r
        for k in range(-3, 4):
            candidate = mat_mul(R2, mat_pow(g, k))
            order = finite_order_test(candidate)
            assert order == (2 if k % 2 == 0 else 4)
            sq = mat_mul(candidate, candidate)
            sigma_s = induced_automorphism(R2, mat_pow(g, k), GL2)
            assert sq == mat_mul(sigma_s, mat_pow(g, k))


class TestConjugacy:
    def test_self_conjugate(self):
        w = are_conjugate_bounded(CASE1_M, CASE1_M, GL2, 2)
        assert w is not None
        assert mat_mul(w, CASE1_M) == mat_mul(CASE1_M, w)

    def test_distinct_involutions_not_conjugate(self):
        assert are_conjugate_bounded(R2, R4, PGL2, 10) is None

    def test_constructed_conjugation_found(self):
        s = IntMatrix([[1, 1], [1, 2]])
        m2 = mat_pow(CASE1_M, 2)
        target = mat_mul(mat_mul(s, m2), mat_inverse_unimodular(s))
        w = are_conjugate_bounded(m2, target, GL2, 10)
        assert w is not None
        assert mat_mul(mat_mul(w, m2), mat_inverse_unimodular(w)) == target


class TestAnalyze:
    def test_fibonacci_gl_irreversible(self):
        report = analyze(FIB, GL2)
        assert report.status == STATUS_IRREVERSIBLE
        assert report.reciprocity == RECIPROCAL_NONE
        assert report.order is None

    def test_fibonacci_pgl_dinf(self):
        report = analyze(FIB, PGL2)
        assert report.status == STATUS_CLASSIFIED
        assert report.classification_case == CASE_DINF
        assert report.reversors
        assert all(order == 2 for _, order in report.reversors)

    def test_identity_trivially_reversible(self):
        report = analyze(IntMatrix.identity(2), GL2)
        assert report.status == STATUS_TRIVIAL
        assert report.order == 1

    def test_square_of_fibonacci_case3(self):
        report = analyze(CASE3_M, GL2)
        assert report.status == STATUS_CLASSIFIED
        assert report.classification_case == CASE_THREE

    def test_case_reports(self):
        assert analyze(CASE1_M, GL2).classification_case == CASE_ONE
        assert analyze(CASE2_M, GL2).classification_case == CASE_TWO


class TestQuarticSuite:
    def test_characteristic_polynomials(self):
        assert char_poly(M4) == IntPoly([1, -2, -2, -2, 1])
        assert char_poly(N4) == IntPoly([1, -14, 22, -6, 1])
        assert reciprocity_class(char_poly(M4)) == RECIPROCAL_DIRECT
        assert reciprocity_class(char_poly(N4)) == RECIPROCAL_NONE
        assert not pgl_reciprocity_ok(char_poly(N4))

    def test_np_is_product(self):
        assert mat_mul(M4, N4) == N4P

    def test_involutory_reversor(self):
        assert mat_mul(RR, RR) == IntMatrix.identity(4)
        assert is_reversor(RR, M4, PGL4)
        assert is_reversor(RR, M4, GL4)

    def test_symmetries(self):
        assert is_symmetry(N4, M4, PGL4)
        assert is_symmetry(N4P, M4, PGL4)

    def test_commuting_pair_and_infinite_reversor(self):
        assert mat_mul(RR, N4P) == mat_mul(N4P, RR)
        rprime = mat_mul(RR, N4P)
        assert is_reversor(rprime, M4, PGL4)
        assert finite_order_test(rprime, projective=True) is None


class TestPglReciprocity:
    def test_fibonacci_sign_variant(self):
        p = char_poly(FIB)
        assert reciprocity_class(p) == RECIPROCAL_NONE
        assert pgl_reciprocity_ok(p)

    def test_direct_implies_ok(self):
        assert pgl_reciprocity_ok(char_poly(CASE1_M))


class TestGroupProperties:
    """Randomized structural invariants with a fixed seed."""

    def _reversor_symmetry_pool(self, m, ctx, desc):
        reversors = [x for x, _ in search_reversors(m, ctx, 3)]
        symmetries = [mat_pow(desc.generator, k).scaled(eps)
                      for k in range(-4, 5) for eps in (1, -1)]
        return reversors, symmetries

    def test_grading_homomorphism(self):
        rng = random.Random(2024)
        for m, ctx in ((CASE1_M, GL2), (CASE2_M, GL2), (CASE3_M, GL2),
                       (FIB, PGL2)):
            desc = symmetry_generator_2x2(m, ctx, 20)
            reversors, symmetries = self._reversor_symmetry_pool(m, ctx, desc)
            for _ in range(100):
                r1, r2 = rng.choice(reversors), rng.choice(reversors)
                assert is_symmetry(mat_mul(r1, r2), m, ctx)
                s = rng.choice(symmetries)
                assert is_reversor(mat_mul(r1, s), m, ctx)
                assert is_reversor(mat_mul(s, r1), m, ctx)

    def test_no_odd_order_reversor(self):
        for m, ctx in ((CASE1_M, GL2), (CASE2_M, GL2), (CASE3_M, GL2),
                       (FIB, PGL2)):
            for _, order in search_reversors(m, ctx, 5):
                assert order is None or order % 2 == 0

    def test_order_divides_four_in_gl2(self):
        for m in (CASE1_M, CASE2_M, CASE3_M):
            for _, order in search_reversors(m, GL2, 5):
                if order is not None:
                    assert 4 % order == 0

    def test_reversor_square_identity(self):
        rng = random.Random(77)
        for m in (CASE1_M, CASE3_M):
            desc = symmetry_generator_2x2(m, GL2, 20)
            g = desc.generator
            for _ in range(100):
                j = rng.randint(-5, 5)
                k = rng.randint(1, 5)
                eps = rng.choice((1, -1))
                s = mat_pow(g, j).scaled(eps)
                lhs = mat_pow(mat_mul(R2, s), 2 * k)
                rhs = mat_pow(mat_mul(induced_automorphism(R2, s, GL2), s), k)
                assert lhs == rhs

    def test_reversibility_implies_reciprocity(self):
        for m, ctx in ((CASE1_M, GL2), (CASE2_M, GL2), (CASE3_M, GL2)):
            if search_reversors(m, ctx, 5):
                assert reciprocity_class(char_poly(m)) != RECIPROCAL_NONE
        assert search_reversors(FIB, PGL2, 5)
        assert pgl_reciprocity_ok(char_poly(FIB))


class TestCanonicalSign:
    def test_flip(self):
        assert canonical_sign(IntMatrix([[0, -1], [1, 0]])) == \
            IntMatrix([[0, 1], [-1, 0]])
        assert canonical_sign(IntMatrix([[0, 1], [-1, 0]])) == \
            IntMatrix([[0, 1], [-1, 0]])


class TestAnalyzeEdgePaths:
    def test_quartic_reversible_but_unclassified(self):
        report = analyze(M4, PGL4, SearchBounds(reversor_bound=2))
        assert report.status == STATUS_CLASSIFIED
        assert report.classification_case == "reversible-unclassified"
        orders = {order for _, order in report.reversors}
        assert 2 in orders and None in orders

    def test_quartic_symmetry_generator_irreversible(self):
        report = analyze(N4, PGL4, SearchBounds(reversor_bound=3))
        assert report.status == STATUS_IRREVERSIBLE
        assert "lattice" in report.irreversibility_reason

    def test_finite_order_above_two_unclassified(self):
        # quarter turn has order 4 in GL(2,Z) and is reversed by a reflection
        report = analyze(R4, GL2, SearchBounds(reversor_bound=2))
        assert report.order == 4
        assert report.status == STATUS_CLASSIFIED
        assert report.classification_case == "reversible-unclassified"
        assert contains_up_to_sign(report.reversors,
                                   IntMatrix([[1, 0], [0, -1]]))

    def test_zero_bound_is_inconclusive(self):
        from revsym.matgroup import STATUS_INCONCLUSIVE
        report = analyze(CASE1_M, GL2, SearchBounds(reversor_bound=0))
        assert report.status == STATUS_INCONCLUSIVE
        assert not report.reversors

    def test_sigma_guard_fires_on_bogus_descriptor(self):
        from revsym.matgroup import (SigmaOutsidePlusMinus, SymmetryDescriptor,
                                     _classify_from)
        bogus = SymmetryDescriptor(finite_part_order=2,
                                   generator=IntMatrix([[1, 1], [0, 1]]),
                                   f_sign=1, f_exponent=1)
        with pytest.raises(SigmaOutsidePlusMinus):
            _classify_from(bogus, R2, GL2)
