from django.test import SimpleTestCase

from forge.audit import _ratio, audit_sample, run_audit
from forge.sampling import sample_conjugate_pair, sample_rng
from forge.services import GroupContext
from polycyclic.spec import pc_validate_spec

SOL = pc_validate_spec([[[2, 1], [1, 1]]])
SL4 = pc_validate_spec(
    [
        [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]],
    ]
)


class SamplingTests(SimpleTestCase):
    def test_streams_depend_on_seed_and_index(self):
        self.assertEqual(sample_rng(4, 2).random(), sample_rng(4, 2).random())
        self.assertNotEqual(sample_rng(4, 2).random(), sample_rng(4, 3).random())

    def test_pairs_are_conjugate_by_gamma(self):
        for ctx in (
            GroupContext.build("ll", 3),
            GroupContext.build("bs", 2),
            GroupContext.build("pc", spec=SOL),
        ):
            with self.subTest(group=ctx.family.value):
                u, gamma, v = sample_conjugate_pair(ctx, sample_rng(1, 0), 6)
                self.assertEqual(
                    ctx.multiply(u, gamma), ctx.multiply(gamma, v)
                )
                again = sample_conjugate_pair(ctx, sample_rng(1, 0), 6)
                self.assertEqual(again, (u, gamma, v))


class AuditTests(SimpleTestCase):
    def test_ratio_of_empty_lengths(self):
        self.assertEqual(_ratio(0, 0, 0), 0.0)
        self.assertEqual(_ratio(6, 1, 2), 2.0)

    def test_sample_record(self):
        record = audit_sample(GroupContext.build("ll", 2), 0, 6, 5)

        self.assertEqual(record["index"], 5)
        self.assertTrue(record["verified"])
        self.assertFalse(record["violation"])
        self.assertTrue(record["checks"]["length_bound"])

    def test_no_violations(self):
        for ctx in (
            GroupContext.build("ll", 2),
            GroupContext.build("ll", 3),
            GroupContext.build("bs", 2),
            GroupContext.build("bs", 5),
            GroupContext.build("pc", spec=SOL),
            GroupContext.build("pc", spec=SL4),
        ):
            with self.subTest(group=ctx.descriptor()):
                report = run_audit(ctx, 15, 7, 6, workers=1)
                self.assertEqual(report["violations"], 0)
                self.assertEqual(report["aggregate"]["verified"], 15)

    def test_polycyclic_norm_inequality_is_checked(self):
        report = run_audit(GroupContext.build("pc", spec=SOL), 20, 3, 6, workers=1)
        shifted = [r for r in report["records"] if any(r["u"]["b"])]

        self.assertTrue(shifted)
        self.assertTrue(all(r["checks"]["norm_inequality"] for r in shifted))

    def test_zero_length_budget(self):
        report = run_audit(GroupContext.build("ll", 2), 3, 0, 0, workers=1)

        self.assertEqual(report["aggregate"]["max_ratio"], 0.0)
        self.assertEqual(report["violations"], 0)

    def test_report_ignores_worker_count(self):
        ctx = GroupContext.build("bs", 3)

        self.assertEqual(
            run_audit(ctx, 8, 5, 6, workers=1),
            run_audit(ctx, 8, 5, 6, workers=2),
        )

    def test_theorem_is_reported(self):
        report = run_audit(GroupContext.build("ll", 2), 1, 0, 2, workers=1)

        self.assertEqual(report["theorem"]["constant"], 3)
        self.assertTrue(report["theorem"]["asserted"])
        self.assertEqual(report["schema"], 1)
