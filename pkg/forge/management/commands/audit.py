"""
forge/management/commands/audit.py

Randomised conjugator-length audit.

Usage:
  python manage.py audit --group ll --q 2 --samples 1000 --seed 42 --max-len 12
  python manage.py audit --group pc --spec sol.json --samples 500 --seed 7 --out pc.json
"""

from __future__ import annotations

from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser

from forge.audit import dump_report, run_audit, write_report
from forge.cli import (
    EXIT_DISAGREEMENT,
    EXIT_PARSE,
    EXIT_UNWRITABLE,
    add_group_arguments,
    build_context,
    command_errors,
)
from forge.models import AuditRun


class Command(BaseCommand):
    help = "Sample conjugate pairs and audit the conjugator length bounds."

    def add_arguments(self, parser: CommandParser) -> None:
        add_group_arguments(parser)
        parser.add_argument("--samples", type=int, default=100)
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--max-len", type=int, default=12)
        parser.add_argument("--out", help="Write the report here instead of stdout.")
        parser.add_argument(
            "--workers",
            type=int,
            help="Worker processes; the report does not depend on this.",
        )
        parser.add_argument(
            "--record",
            action="store_true",
            help="Also store the run in the database.",
        )

    def handle(self, *args: Any, **options: Any) -> None:
        if options["samples"] < 0 or options["max_len"] < 0:
            raise CommandError(
                "--samples and --max-len must be non-negative",
                returncode=EXIT_PARSE,
            )
        with command_errors():
            ctx = build_context(options)
            report = run_audit(
                ctx,
                options["samples"],
                options["seed"],
                options["max_len"],
                options.get("workers"),
            )

        if options.get("out"):
            try:
                write_report(report, options["out"])
            except OSError as exc:
                raise CommandError(
                    f"cannot write report: {exc}", returncode=EXIT_UNWRITABLE
                ) from exc
        else:
            self.stdout.write(dump_report(report), ending="")

        if options["record"]:
            AuditRun.from_report(report).save()

        aggregate = report["aggregate"]
        self.stderr.write(
            f"{report['group']['group']} audit: {report['samples']} samples, "
            f"{aggregate['verified']} verified, {report['violations']} violations, "
            f"max ratio {aggregate['max_ratio']}"
        )
        if report["violations"]:
            raise CommandError(
                f"{report['violations']} audit violations",
                returncode=EXIT_DISAGREEMENT,
            )
