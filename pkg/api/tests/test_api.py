import math
from unittest.mock import patch

from django.contrib.auth import get_user_model
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase

from exactnum.exceptions import InternalInvariantError
from forge.models import AuditRun

SOL_SPEC = {"n": 2, "k": 1, "generators": [[[2, 1], [1, 1]]]}


class ForgeAPITestCase(APITestCase):
    def setUp(self):
        self.user = get_user_model().objects.create_user(
            username="analyst1",
            password="TestPass123!",
        )
        self.eval_url = reverse("api_eval")
        self.conjugacy_url = reverse("api_conjugacy")
        self.audit_list_url = reverse("api_audit_list_create")

    def login(self):
        self.client.login(username="analyst1", password="TestPass123!")


class EvalAPITests(ForgeAPITestCase):
    def test_anonymous_requests_are_refused(self):
        payload = {"group": "ll", "q": 2, "operation": "len", "element": "0;"}

        response = self.client.post(self.eval_url, payload, format="json")

        self.assertIn(
            response.status_code,
            [status.HTTP_403_FORBIDDEN, status.HTTP_401_UNAUTHORIZED],
        )

    def test_lamplighter_length(self):
        self.login()
        payload = {
            "group": "ll",
            "q": 2,
            "operation": "len",
            "element": "0;1@0,1@2",
        }

        response = self.client.post(self.eval_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data, {"length": 6})

    def test_product_of_json_and_text_elements(self):
        self.login()
        payload = {
            "group": "bs",
            "q": 2,
            "operation": "mul",
            "lhs": {"n": 1, "f": "0"},
            "rhs": "0;1",
        }

        response = self.client.post(self.eval_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data, {"n": 1, "f": "2"})

    def test_polycyclic_with_inline_spec(self):
        self.login()
        payload = {
            "group": "pc",
            "spec": SOL_SPEC,
            "operation": "len",
            "element": {"a": [2, 1], "b": [0]},
        }

        response = self.client.post(self.eval_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertAlmostEqual(response.data["estimate"], math.log2(3))

    def test_missing_operands(self):
        self.login()
        payload = {"group": "ll", "q": 2, "operation": "mul", "lhs": "0;"}

        response = self.client.post(self.eval_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn("rhs", response.data)

    def test_bad_spec(self):
        self.login()
        payload = {
            "group": "pc",
            "spec": {"generators": [[[2, 0], [0, 1]]]},
            "operation": "len",
            "element": "1,0;0",
        }

        response = self.client.post(self.eval_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn("spec", response.data)

    def test_grammar_error(self):
        self.login()
        payload = {"group": "ll", "q": 2, "operation": "len", "element": "1@0"}

        response = self.client.post(self.eval_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data["error"], "GrammarError")


class ConjugacyAPITests(ForgeAPITestCase):
    def test_lamplighter_witness(self):
        self.login()
        payload = {"group": "ll", "q": 2, "u": "1;1@0", "v": "1;1@1"}

        response = self.client.post(self.conjugacy_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.data["conjugate"])
        self.assertTrue(response.data["within_bound"])

    def test_oracle_cross_check(self):
        self.login()
        payload = {"group": "ll", "q": 2, "u": "1;", "v": "-1;", "oracle": True}

        response = self.client.post(self.conjugacy_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertFalse(response.data["conjugate"])
        self.assertTrue(response.data["oracle"]["agrees"])

    def test_mixed_groups(self):
        self.login()
        payload = {
            "group": "bs",
            "q": 2,
            "u": "1;0",
            "v": {"group": "bs", "q": 3, "n": 1, "f": "0"},
        }

        response = self.client.post(self.conjugacy_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data["error"], "MixedGroups")

    @patch("api.views.conjugacy_report")
    def test_internal_invariant_is_a_server_error(self, conjugacy_report):
        conjugacy_report.side_effect = InternalInvariantError("witness check failed")
        self.login()
        payload = {"group": "bs", "q": 2, "u": "1;0", "v": "1;1"}

        with self.assertLogs("api", level="ERROR"):
            response = self.client.post(self.conjugacy_url, payload, format="json")

        self.assertEqual(
            response.status_code, status.HTTP_500_INTERNAL_SERVER_ERROR
        )


class AuditAPITests(ForgeAPITestCase):
    def test_run_and_record_an_audit(self):
        self.login()
        payload = {"group": "ll", "q": 2, "samples": 5, "seed": 1, "max_len": 4}

        response = self.client.post(self.audit_list_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_201_CREATED)
        self.assertTrue(response.data["passed"])
        self.assertEqual(response.data["report"]["samples"], 5)
        self.assertEqual(AuditRun.objects.count(), 1)

    def test_sample_limit(self):
        self.login()
        payload = {"group": "ll", "q": 2, "samples": 5000}

        response = self.client.post(self.audit_list_url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn("samples", response.data)
        self.assertFalse(AuditRun.objects.exists())

    def test_list_and_detail(self):
        self.login()
        self.client.post(
            self.audit_list_url,
            {"group": "pc", "spec": SOL_SPEC, "samples": 3, "max_len": 4},
            format="json",
        )
        run = AuditRun.objects.get()

        listing = self.client.get(self.audit_list_url)
        detail = self.client.get(reverse("api_audit_detail", args=[run.pk]))

        self.assertEqual(listing.status_code, status.HTTP_200_OK)
        self.assertEqual([item["id"] for item in listing.data], [run.pk])
        self.assertNotIn("report", listing.data[0])
        self.assertEqual(detail.status_code, status.HTTP_200_OK)
        self.assertEqual(detail.data["report"]["group"]["spec"], SOL_SPEC)
