"""
forge/management/commands/conj.py

Decide conjugacy of two elements and print the witness as JSON.

Usage:
  python manage.py conj --group ll --q 2 --u "1;1@0" --v "1;1@1"
  python manage.py conj --group pc --spec sol.json --u "0,0;1" --v "1,0;1" --oracle
"""

from __future__ import annotations

from typing import Any

from django.core.management.base import CommandError, CommandParser

from forge.cli import (
    EXIT_DISAGREEMENT,
    ElementCommand,
    add_group_arguments,
    build_context,
    command_errors,
    element_option,
    emit,
)
from forge.services import conjugacy_report, oracle_check


class Command(ElementCommand):
    help = "Decide whether u and v are conjugate and build a conjugator."

    def add_arguments(self, parser: CommandParser) -> None:
        add_group_arguments(parser)
        parser.add_argument("--u", help="First element (text or JSON).")
        parser.add_argument("--v", help="Second element (text or JSON).")
        parser.add_argument(
            "--oracle",
            action="store_true",
            help="Cross-check the verdict with a brute-force conjugator search.",
        )

    def handle(self, *args: Any, **options: Any) -> None:
        with command_errors():
            ctx = build_context(options)
            u = element_option(ctx, options, "u")
            v = element_option(ctx, options, "v")
            report = conjugacy_report(ctx, u, v)
            if options["oracle"]:
                report["oracle"] = oracle_check(ctx, u, v, report["conjugate"])
        emit(self, report)

        verdict = "conjugate" if report["conjugate"] else "not conjugate"
        self.stderr.write(f"{ctx.descriptor()['group']}: {verdict}")
        if options["oracle"] and not report["oracle"]["agrees"]:
            raise CommandError(
                "brute-force oracle disagrees with the decision procedure",
                returncode=EXIT_DISAGREEMENT,
            )
