import math

from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st

from exactnum.exceptions import InvalidArgument, UnsupportedSpec
from exactnum.linalg import mat_vec
from forge.testing import pc_elements
from oracle.box import box_conjugator_search
from polycyclic.elements import PCElement, pc_identity, pc_inv, pc_mul
from polycyclic.metric import pc_length_est, witness_norm_inequality
from polycyclic.services import (
    orbit_order,
    pc_conj_nonzero,
    pc_conj_translation,
    pc_conjugacy,
    scan_window,
    shift_data,
    solve_translation,
    stabiliser_basis,
)
from polycyclic.spec import SpecError, pc_validate_spec, spec_from_json

CAT = [[2, 1], [1, 1]]
SOL = pc_validate_spec([CAT])
SWAP = pc_validate_spec([[[0, 1], [1, 0]]])
# A ⊕ I and I ⊕ A on Z⁴
SL4 = pc_validate_spec(
    [
        [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]],
    ]
)
# A ⊕ 1: one fixed direction
CAT_PLUS_ONE = pc_validate_spec([[[2, 1, 0], [1, 1, 0], [0, 0, 1]]])
# A ⊕ A and A ⊕ A⁻¹: the stabiliser of the second block is spanned by (1, 1)
DIAGONAL_PAIR = pc_validate_spec(
    [
        [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]],
        [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, -1], [0, 0, -1, 2]],
    ]
)


def pc(a, b):
    return PCElement.make(a, b)


class SpecTests(SimpleTestCase):
    def test_cat_map_is_hyperbolic(self):
        self.assertEqual((SOL.n, SOL.k), (2, 1))
        self.assertTrue(SOL.hyperbolic)
        self.assertTrue(SOL.positive_real_spectrum)

    def test_swap_has_no_positive_spectrum(self):
        self.assertFalse(SWAP.positive_real_spectrum)
        self.assertFalse(SWAP.hyperbolic)

    def test_rejections_name_the_condition(self):
        cases = [
            ([], "empty"),
            ([[[2, 0], [0, 1]]], "not_unimodular"),
            ([[[1, 1], [0, 1]]], "not_semisimple"),
            ([CAT, [[1, 1], [0, 1]]], "not_commuting"),
            ([CAT, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]], "shape"),
            ([[["x", 1], [1, 1]]], "malformed"),
        ]
        for raw, code in cases:
            with self.subTest(code=code):
                with self.assertRaises(SpecError) as caught:
                    pc_validate_spec(raw)
                self.assertEqual(caught.exception.code, code)

    def test_declared_sizes_must_match(self):
        with self.assertRaises(SpecError):
            spec_from_json({"n": 3, "k": 1, "generators": [CAT]})
        with self.assertRaises(SpecError):
            spec_from_json({"n": 2})

    def test_json_round_trip_keeps_equality(self):
        self.assertEqual(spec_from_json(SOL.to_json()), SOL)

    def test_phi_multiplies_generator_powers(self):
        self.assertEqual(SOL.phi((2,)), ((5, 3), (3, 2)))
        self.assertEqual(SOL.phi((-1,)), ((1, -1), (-1, 2)))


class ElementTests(SimpleTestCase):
    def test_product(self):
        self.assertEqual(
            pc_mul(pc((2, 1), (0,)), pc((0, 0), (1,)), SOL), pc((2, 1), (1,))
        )

    def test_parse(self):
        self.assertEqual(PCElement.parse("2,1;0"), pc((2, 1), (0,)))
        self.assertEqual(str(pc((2, 1), (0,))), "2,1;0")

    def test_shape_is_checked(self):
        with self.assertRaises(InvalidArgument):
            pc_mul(pc((1, 2, 3), (0,)), pc((0, 0), (0,)), SOL)

    @given(pc_elements(SOL), pc_elements(SOL), pc_elements(SOL))
    def test_group_laws(self, a, b, c):
        self.assertEqual(
            pc_mul(pc_mul(a, b, SOL), c, SOL), pc_mul(a, pc_mul(b, c, SOL), SOL)
        )
        self.assertEqual(pc_mul(pc_inv(a, SOL), a, SOL), pc_identity(SOL))

    def test_length_estimate(self):
        self.assertAlmostEqual(pc_length_est(pc((2, 1), (0,)), SOL), math.log2(3))
        self.assertEqual(pc_length_est(pc_identity(SL4), SL4), 0)

    def test_length_estimate_checks_the_spec(self):
        with self.assertRaises(InvalidArgument):
            pc_length_est(pc((2, 1), (0,)), SL4)


class TranslationTests(SimpleTestCase):
    def test_solve(self):
        y, stats = solve_translation((2, 1), (1, 0), SOL)

        self.assertEqual(y, (1,))
        self.assertEqual(stats["method_used"], "numeric")

    def test_no_solution(self):
        y, _ = solve_translation((1, 0), (0, 1), SOL)

        self.assertIsNone(y)
        self.assertIsNone(solve_translation((1, 0), (0, 1), SOL, "scan")[0])

    def test_equal_vectors_need_no_search(self):
        y, stats = solve_translation((3, 4), (3, 4), SWAP)

        self.assertEqual(y, (0,))
        self.assertEqual(stats["method_used"], "trivial")

    def test_numeric_needs_positive_spectrum(self):
        with self.assertRaises(UnsupportedSpec):
            solve_translation((0, 1), (1, 0), SWAP)

    def test_scan_covers_finite_order_generators(self):
        self.assertEqual(scan_window((0, 1), (1, 0), SWAP), 1)
        self.assertEqual(solve_translation((0, 1), (1, 0), SWAP, "scan")[0], (1,))

    def test_scan_needs_one_generator(self):
        with self.assertRaises(InvalidArgument):
            solve_translation((1, 0, 0, 0), (0, 1, 0, 0), SL4, "scan")

    @given(
        st.lists(st.integers(-15, 15), min_size=2, max_size=2).filter(any),
        st.integers(-3, 3),
    )
    def test_numeric_and_scan_agree(self, a, y):
        target = mat_vec(SOL.phi((y,)), a)

        self.assertEqual(solve_translation(target, a, SOL, "numeric")[0], (y,))
        self.assertEqual(solve_translation(target, a, SOL, "scan")[0], (y,))

    def test_two_generators(self):
        w = pc((1, 2, 3, 4), (0, 0))
        u = pc(mat_vec(SL4.phi((1, -1)), w.a), (0, 0))
        outcome = pc_conj_translation(u, w, SL4)

        self.assertTrue(outcome.conjugate)
        self.assertEqual(outcome.witness, pc((0, 0, 0, 0), (1, -1)))

    def test_translation_case_needs_zero_shift(self):
        with self.assertRaises(InvalidArgument):
            pc_conj_translation(pc((1, 0), (1,)), pc((1, 0), (1,)), SOL)


class OrbitOrderTests(SimpleTestCase):
    def test_unit_index(self):
        self.assertEqual(shift_data(SOL, (1,)).index, 1)
        self.assertEqual(orbit_order((5, -3), (1,), 0, SOL), 1)

    def test_lattice_vectors_have_order_one(self):
        self.assertEqual(orbit_order((0, 0), (2,), 0, SOL), 1)

    def test_order_two(self):
        # Id − φ² has index 5 and (Id − φ)(1, 0) is not in its image
        self.assertEqual(shift_data(SOL, (2,)).index, 5)
        self.assertEqual(orbit_order((1, 0), (2,), 0, SOL), 2)

    @given(st.lists(st.integers(-20, 20), min_size=2, max_size=2), st.integers(1, 3))
    def test_order_is_at_most_the_index(self, a, shift):
        order = orbit_order(a, (shift,), 0, SOL)

        self.assertGreaterEqual(order, 1)
        self.assertLessEqual(order, shift_data(SOL, (shift,)).index)

    def test_bad_direction(self):
        with self.assertRaises(InvalidArgument):
            orbit_order((1, 0), (1,), 1, SOL)

    def test_generator_must_fix_the_eigenvalue_one_part(self):
        with self.assertRaises(InvalidArgument):
            orbit_order((0, 0, 1, 0), (1, 0), 1, SL4)


class NonzeroShiftTests(SimpleTestCase):
    def test_single_generator_witness(self):
        outcome = pc_conj_nonzero(pc((0, 0), (1,)), pc((1, 0), (1,)), SOL)

        self.assertTrue(outcome.conjugate)
        self.assertEqual(outcome.witness, pc((0, 1), (0,)))
        self.assertTrue(outcome.certificate["lattice_membership"])

    def test_fixed_direction_must_agree(self):
        u = pc((0, 0, 5), (1,))

        self.assertEqual(
            pc_conj_nonzero(u, pc((1, 0, 5), (1,)), CAT_PLUS_ONE).witness,
            pc((0, 1, 0), (0,)),
        )
        self.assertFalse(
            pc_conj_nonzero(u, pc((1, 0, 4), (1,)), CAT_PLUS_ONE).conjugate
        )

    def test_two_generators_invertible_shift(self):
        u = pc((1, 0, 0, 0), (1, 1))
        gamma = pc((0, 1, 1, 0), (0, 0))
        w = pc_mul(pc_inv(gamma, SL4), pc_mul(u, gamma, SL4), SL4)
        outcome = pc_conj_nonzero(u, w, SL4)

        self.assertTrue(outcome.conjugate)
        self.assertEqual(outcome.witness, gamma)
        self.assertEqual(outcome.statistics["orbit_orders"], [1, 1])

    def test_two_generators_with_fixed_directions(self):
        u = pc((1, 0, 2, 1), (1, 0))
        gamma = pc((1, 2, 0, 0), (0, 1))
        w = pc_mul(pc_inv(gamma, SL4), pc_mul(u, gamma, SL4), SL4)
        outcome = pc_conj_nonzero(u, w, SL4)

        self.assertEqual(w, pc((4, 1, 1, 0), (1, 0)))
        self.assertTrue(outcome.conjugate)
        self.assertEqual(outcome.witness, gamma)
        self.assertEqual(outcome.statistics["e1_dimension"], 2)
        self.assertTrue(outcome.certificate["e1_condition"])

    def test_unrelated_fixed_parts(self):
        outcome = pc_conj_nonzero(
            pc((0, 0, 2, 1), (1, 0)), pc((0, 0, 1, 1), (1, 0)), SL4
        )

        self.assertFalse(outcome.conjugate)

    def test_shift_parts_must_agree(self):
        self.assertFalse(
            pc_conjugacy(pc((0, 0), (1,)), pc((0, 0), (-1,)), SOL).conjugate
        )

    def test_zero_shift_is_rejected(self):
        with self.assertRaises(InvalidArgument):
            pc_conj_nonzero(pc((0, 0), (0,)), pc((0, 0), (0,)), SOL)


class SolConjugacyTests(SimpleTestCase):
    @given(pc_elements(SOL), pc_elements(SOL, a_range=6))
    def test_conjugates_are_found(self, u, gamma):
        w = pc_mul(pc_inv(gamma, SOL), pc_mul(u, gamma, SOL), SOL)
        outcome = pc_conjugacy(u, w, SOL)

        self.assertTrue(outcome.conjugate)
        self.assertEqual(
            pc_mul(u, outcome.witness, SOL), pc_mul(outcome.witness, w, SOL)
        )
        if any(u.b):
            lhs, rhs = witness_norm_inequality(u, w, outcome.witness, SOL)
            self.assertLessEqual(lhs, rhs)

    @given(pc_elements(SOL, a_range=5, b_range=1), pc_elements(SOL, a_range=5, b_range=1))
    def test_box_search_never_beats_the_procedure(self, u, v):
        found = box_conjugator_search(u, v, SOL, x_bound=6, y_bound=3).found

        if found:
            self.assertTrue(pc_conjugacy(u, v, SOL).conjugate)

    def test_box_search_finds_the_example_witness(self):
        result = box_conjugator_search(pc((0, 0), (1,)), pc((1, 0), (1,)), SOL, 3, 2)

        self.assertTrue(result.found)
        self.assertFalse(result.complete)


class TwoGeneratorConjugacyTests(SimpleTestCase):
    @given(
        pc_elements(SL4, a_range=10, b_range=2),
        pc_elements(SL4, a_range=4, b_range=1),
    )
    def test_conjugates_are_found(self, u, gamma):
        w = pc_mul(pc_inv(gamma, SL4), pc_mul(u, gamma, SL4), SL4)
        outcome = pc_conjugacy(u, w, SL4)

        self.assertTrue(outcome.conjugate)
        if any(u.b):
            index = outcome.statistics["index"]
            self.assertTrue(
                all(t <= index for t in outcome.statistics["orbit_orders"])
            )


class StabiliserTests(SimpleTestCase):
    def test_generator_axes(self):
        self.assertEqual(stabiliser_basis((0, 0, 1, 0), SL4), [(1, 0)])
        self.assertEqual(stabiliser_basis((0, 0, 0, 0), SL4), [(1, 0), (0, 1)])

    def test_diagonal_direction(self):
        basis = stabiliser_basis((0, 0, 1, 0), DIAGONAL_PAIR)

        self.assertEqual(len(basis), 1)
        self.assertIn(basis[0], [(1, 1), (-1, -1)])

    def test_conjugate_with_diagonal_stabiliser(self):
        u = pc((1, 0, 1, 0), (1, 1))
        gamma = pc((0, 1, 0, 0), (1, 0))
        w = pc_mul(
            pc_inv(gamma, DIAGONAL_PAIR),
            pc_mul(u, gamma, DIAGONAL_PAIR),
            DIAGONAL_PAIR,
        )
        outcome = pc_conjugacy(u, w, DIAGONAL_PAIR)

        self.assertTrue(outcome.conjugate)
        self.assertEqual(
            pc_mul(u, outcome.witness, DIAGONAL_PAIR),
            pc_mul(outcome.witness, w, DIAGONAL_PAIR),
        )
        self.assertEqual(len(outcome.statistics["stabiliser_basis"]), 1)

    def test_mismatched_second_block_is_not_conjugate(self):
        u = pc((0, 0, 1, 0), (1, 1))
        outcome = pc_conjugacy(u, pc((0, 0, 2, 0), (1, 1)), DIAGONAL_PAIR)

        self.assertFalse(outcome.conjugate)
