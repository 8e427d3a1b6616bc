from django.test import SimpleTestCase
from hypothesis import given

from exactnum.exceptions import GrammarError, InvalidArgument
from exactnum.laurent import LaurentPoly
from forge.testing import ll_elements
from lamplighter.diestel_leader import (
    DLPoint,
    DLVertex,
    Side,
    basepoint,
    dl_action,
    dl_distance,
    dl_point,
)
from lamplighter.elements import LLElement, ll_generators, ll_inv, ll_mul
from lamplighter.metric import ll_length_bounds, ll_word_length
from lamplighter.services import CONJUGATOR_CONSTANT, ll_conjugacy


def ll(text, q=2):
    return LLElement.parse(text, q)


class ElementTests(SimpleTestCase):
    def test_product(self):
        self.assertEqual(ll_mul(ll("1;1@0"), ll("0;1@0")), ll("1;1@0,1@1"))

    def test_identity_and_inverse(self):
        g = ll("3;1@-2,1@5")

        self.assertEqual(ll_mul(LLElement.identity(2), g), g)
        self.assertEqual(ll_mul(g, ll_inv(g)), LLElement.identity(2))

    def test_parse_errors_name_the_grammar(self):
        with self.assertRaisesMessage(GrammarError, "n;f"):
            ll("1@0")
        with self.assertRaises(GrammarError):
            ll("x;1@0")

    def test_mismatched_q(self):
        with self.assertRaises(InvalidArgument):
            ll_mul(ll("0;1@0", 2), ll("0;1@0", 3))
        with self.assertRaises(InvalidArgument):
            LLElement(2, 0, LaurentPoly.monomial(3, 0))

    def test_generators_are_symmetric(self):
        gens = ll_generators(3)

        self.assertEqual(len(gens), 6)
        self.assertTrue(all(ll_inv(s) in gens for s in gens))

    @given(ll_elements(3), ll_elements(3), ll_elements(3))
    def test_group_laws(self, a, b, c):
        self.assertEqual(ll_mul(ll_mul(a, b), c), ll_mul(a, ll_mul(b, c)))
        self.assertEqual(ll_mul(ll_inv(a), a), LLElement.identity(3))


class DiestelLeaderTests(SimpleTestCase):
    def test_generator_moves_basepoint_down_the_first_tree(self):
        p = dl_action(ll("1;1@0"), basepoint(2))

        self.assertEqual(p.first.level, 1)
        self.assertEqual(p.first.trunc, LaurentPoly.monomial(2, 0))
        self.assertEqual(p.second.level, -1)
        self.assertFalse(p.second.trunc)

    def test_levels_must_sum_to_zero(self):
        zero = LaurentPoly.zero(2)
        with self.assertRaises(InvalidArgument):
            DLPoint(DLVertex(2, 1, zero, Side.FIRST), DLVertex(2, 0, zero, Side.SECOND))

    def test_vertex_coefficients_respect_level(self):
        with self.assertRaises(InvalidArgument):
            DLVertex(2, 0, LaurentPoly.monomial(2, 0), Side.FIRST)

    def test_distances(self):
        origin = basepoint(2)

        self.assertEqual(dl_distance(origin, origin), 0)
        self.assertEqual(dl_distance(origin, dl_point(ll("0;1@0,1@2"))), 6)
        self.assertEqual(dl_distance(origin, dl_point(ll("5;"))), 5)

    @given(ll_elements(2, span=4), ll_elements(2, span=4))
    def test_action_matches_multiplication(self, g, h):
        self.assertEqual(dl_action(g, dl_point(h)), dl_point(ll_mul(g, h)))

    @given(ll_elements(2, span=4), ll_elements(2, span=4), ll_elements(2, span=4))
    def test_distance_is_invariant(self, g, h, k):
        p, r = dl_point(h), dl_point(k)

        self.assertEqual(
            dl_distance(dl_action(g, p), dl_action(g, r)), dl_distance(p, r)
        )
        self.assertEqual(dl_distance(p, r), dl_distance(r, p))


class MetricTests(SimpleTestCase):
    def test_word_lengths(self):
        self.assertEqual(ll_word_length(LLElement.identity(2)), 0)
        self.assertEqual(ll_word_length(ll("0;1@0,1@2")), 6)
        self.assertEqual(ll_word_length(ll("-3;")), 3)
        self.assertEqual(ll_word_length(ll("1;1@0")), 1)

    def test_bounds_for_unipotent_elements_are_exact(self):
        bounds = ll_length_bounds(ll("0;1@-1"))

        self.assertEqual(bounds.exact, 2)
        self.assertEqual(bounds.upper, 2)
        self.assertEqual(bounds.lower, 1)

    def test_bounds_for_pure_shifts(self):
        bounds = ll_length_bounds(ll("-4;"))

        self.assertEqual((bounds.lower, bounds.exact, bounds.upper), (4, 4, 4))

    @given(ll_elements(2, span=5))
    def test_bounds_bracket_the_word_length(self, g):
        bounds = ll_length_bounds(g)
        length = ll_word_length(g)

        self.assertLessEqual(bounds.lower, length)
        self.assertLessEqual(length, bounds.upper)
        if bounds.exact is not None:
            self.assertEqual(bounds.exact, length)


class ConjugacyTests(SimpleTestCase):
    def test_zero_shift_witness(self):
        outcome = ll_conjugacy(ll("0;1@0"), ll("0;1@1"))

        self.assertTrue(outcome.conjugate)
        self.assertEqual(outcome.witness, ll("-1;"))

    def test_nonzero_shift_witness(self):
        outcome = ll_conjugacy(ll("1;1@0"), ll("1;1@1"))

        self.assertTrue(outcome.conjugate)
        self.assertEqual(outcome.witness, ll("0;1@0"))
        self.assertTrue(outcome.certificate["length_bound"])

    def test_not_conjugate(self):
        outcome = ll_conjugacy(ll("0;1@0"), ll("0;1@0,1@1"))

        self.assertFalse(outcome.conjugate)
        self.assertIn("reason", outcome.statistics)

    def test_shift_parts_must_agree(self):
        self.assertFalse(ll_conjugacy(ll("1;"), ll("2;")).conjugate)

    def test_odd_lamp_count_blocks_shift_one(self):
        # for s = 1 the lamp sums of u and v must agree mod q
        outcome = ll_conjugacy(ll("1;1@0"), ll("1;"))

        self.assertFalse(outcome.conjugate)

    def test_negative_shift_uses_inverses(self):
        outcome = ll_conjugacy(ll("-2;1@0"), ll("-2;1@2"))

        self.assertTrue(outcome.conjugate)
        self.assertTrue(outcome.statistics["inverted"])

    def test_mismatched_q(self):
        with self.assertRaises(InvalidArgument):
            ll_conjugacy(ll("0;", 2), ll("0;", 3))

    @given(ll_elements(2, span=4, max_terms=3), ll_elements(2, span=4, max_terms=3))
    def test_conjugates_are_found_within_the_bound(self, u, gamma):
        v = ll_mul(ll_inv(gamma), ll_mul(u, gamma))
        outcome = ll_conjugacy(u, v)

        self.assertTrue(outcome.conjugate)
        self.assertEqual(
            ll_mul(u, outcome.witness), ll_mul(outcome.witness, v)
        )
        self.assertLessEqual(
            outcome.lengths["witness"],
            CONJUGATOR_CONSTANT * (outcome.lengths["u"] + outcome.lengths["v"]),
        )
