import math

from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st

from bs.elements import BSElement, bs_generators, bs_inv, bs_mul
from bs.hyperbolic import (
    act_on_plane,
    hyp_dist,
    hyp_dist_rescaled,
    log_valuation_chain,
)
from bs.metric import LengthEstimate, bs_length_bounds, horocycle_constant
from bs.services import bs_conjugacy
from exactnum.exceptions import GrammarError, InternalInvariantError, InvalidArgument
from exactnum.qfraction import QFraction
from forge.testing import bs_elements


def bs(text, q=2):
    return BSElement.parse(text, q)


class ElementTests(SimpleTestCase):
    def test_product(self):
        self.assertEqual(bs_mul(bs("1;0"), bs("0;1")), bs("1;2"))

    def test_identity_and_inverse(self):
        g = bs("-2;5/2^3")

        self.assertEqual(bs_mul(BSElement.identity(2), g), g)
        self.assertEqual(bs_mul(g, bs_inv(g)), BSElement.identity(2))

    def test_relation_holds(self):
        a, a_inv, b, _ = bs_generators(3)

        self.assertEqual(
            bs_mul(bs_mul(a, b), a_inv), bs_mul(bs_mul(b, b), b)
        )

    def test_parse_errors(self):
        with self.assertRaisesMessage(GrammarError, "n;f"):
            bs("1")
        with self.assertRaises(GrammarError):
            bs("1;3/3^1")

    def test_mismatched_q(self):
        with self.assertRaises(InvalidArgument):
            bs_mul(bs("1;0", 2), bs("1;0", 3))

    @given(bs_elements(3), bs_elements(3), bs_elements(3))
    def test_group_laws(self, a, b, c):
        self.assertEqual(bs_mul(bs_mul(a, b), c), bs_mul(a, bs_mul(b, c)))
        self.assertEqual(bs_mul(bs_inv(a), a), BSElement.identity(3))


class HyperbolicTests(SimpleTestCase):
    def test_vertical_distance(self):
        self.assertAlmostEqual(hyp_dist(1j, 2j), math.log(2))
        self.assertAlmostEqual(hyp_dist_rescaled(1j, 8j, 2), 3.0)
        self.assertEqual(hyp_dist(1j, 1j), 0.0)

    def test_translation_distance(self):
        self.assertAlmostEqual(hyp_dist(1j, 3 + 1j), math.acosh(1 + 9 / 2))

    def test_points_must_be_in_the_upper_half_plane(self):
        with self.assertRaises(InvalidArgument):
            hyp_dist(1j, complex(0.0, -1.0))

    def test_action(self):
        self.assertEqual(act_on_plane(bs("1;0"), 1j), 2j)
        self.assertEqual(act_on_plane(bs("0;3"), 1j), 3 + 1j)

    @given(st.integers(-200, 200), st.integers(-3, 3))
    def test_valuation_chain(self, numerator, exponent):
        lower, d, upper = log_valuation_chain(QFraction(numerator, exponent, 2))

        self.assertLessEqual(lower, d + 1e-9)
        self.assertLessEqual(d, upper + 1e-9)


class MetricTests(SimpleTestCase):
    def test_identity(self):
        estimate = bs_length_bounds(BSElement.identity(2))

        self.assertEqual((estimate.lower, estimate.upper, estimate.exact), (0, 0, 0))

    def test_pure_shift_is_exact(self):
        estimate = bs_length_bounds(bs("4;0"))

        self.assertEqual(estimate.exact, 4)
        self.assertEqual(estimate.lower, estimate.upper)

    def test_unknown_metric(self):
        with self.assertRaises(InvalidArgument):
            bs_length_bounds(bs("1;1"), metric="taxicab")

    def test_horocycle_constant(self):
        self.assertAlmostEqual(horocycle_constant(2), 0.5 * math.log(math.sqrt(2)))
        self.assertEqual(horocycle_constant(100), 1.0)

    @given(bs_elements(2) | bs_elements(3) | bs_elements(5))
    def test_lower_never_exceeds_upper(self, g):
        estimate = bs_length_bounds(g)

        self.assertLessEqual(estimate.lower, estimate.upper + 1e-9)
        self.assertEqual(estimate.metric, "rescaled")

    @given(bs_elements(2))
    def test_raw_metric_is_consistent_for_q2(self, g):
        estimate = bs_length_bounds(g, metric="raw")

        self.assertLessEqual(estimate.lower, estimate.upper + 1e-9)
        self.assertTrue(estimate.ordered)

    def test_ordered_estimates_are_checked(self):
        with self.assertRaises(InternalInvariantError):
            LengthEstimate(3.0, 2.0)
        with self.assertRaises(InternalInvariantError):
            LengthEstimate(3.0, 2.0, metric="raw")
        self.assertFalse(LengthEstimate(3.0, 2.0, metric="raw", ordered=False).ordered)

    def test_raw_metric_for_q3_is_marked_unordered(self):
        estimate = bs_length_bounds(bs("20;1", 3), metric="raw")

        self.assertFalse(estimate.ordered)
        self.assertGreater(estimate.lower, estimate.upper)
        self.assertTrue(bs_length_bounds(bs("20;1", 3)).ordered)


class ConjugacyTests(SimpleTestCase):
    def test_nonzero_shift_witness(self):
        outcome = bs_conjugacy(bs("1;0"), bs("1;1"))

        self.assertTrue(outcome.conjugate)
        self.assertEqual(outcome.witness, bs("0;1"))
        self.assertTrue(outcome.certificate["valuation_inequality"])

    def test_not_divisible(self):
        outcome = bs_conjugacy(bs("2;0"), bs("2;1"))

        self.assertFalse(outcome.conjugate)
        self.assertEqual(outcome.statistics["divisor"], 3)

    def test_zero_shift_witness(self):
        outcome = bs_conjugacy(bs("0;1"), bs("0;2"))

        self.assertTrue(outcome.conjugate)
        self.assertEqual(outcome.witness, bs("-1;0"))

    def test_zero_shift_sign_matters(self):
        self.assertFalse(bs_conjugacy(bs("0;1"), bs("0;-2")).conjugate)
        self.assertFalse(bs_conjugacy(bs("0;0"), bs("0;4")).conjugate)

    def test_shift_parts_must_agree(self):
        self.assertFalse(bs_conjugacy(bs("1;0"), bs("-1;0")).conjugate)

    def test_mismatched_q(self):
        with self.assertRaises(InvalidArgument):
            bs_conjugacy(bs("0;1", 2), bs("0;1", 3))

    @given(bs_elements(2), bs_elements(2))
    def test_conjugates_are_found(self, u, gamma):
        v = bs_mul(bs_inv(gamma), bs_mul(u, gamma))
        outcome = bs_conjugacy(u, v)

        self.assertTrue(outcome.conjugate)
        self.assertEqual(bs_mul(u, outcome.witness), bs_mul(outcome.witness, v))
        self.assertTrue(all(outcome.certificate.values()))

    @given(bs_elements(3), bs_elements(3))
    def test_negative_shifts_and_other_q(self, u, gamma):
        v = bs_mul(bs_inv(gamma), bs_mul(u, gamma))

        self.assertTrue(bs_conjugacy(u, v).conjugate)
