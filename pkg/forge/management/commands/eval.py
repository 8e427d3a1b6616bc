"""
forge/management/commands/eval.py

Group arithmetic and metrics on the command line.

Usage:
  python manage.py eval len --group ll --q 2 --n 0 --f "1@0,1@2"
  python manage.py eval mul --group bs --q 2 --lhs "1;0" --rhs "0;1"
"""

from __future__ import annotations

from typing import Any

from django.core.management.base import CommandParser

from forge.cli import (
    ElementCommand,
    add_group_arguments,
    build_context,
    command_errors,
    element_option,
    emit,
)

OPERATIONS = ("mul", "inv", "len", "bounds", "dl-dist", "oracle-len")


class Command(ElementCommand):
    help = "Evaluate products, inverses, word lengths and length bounds."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("operation", choices=OPERATIONS)
        add_group_arguments(parser)
        parser.add_argument("--element", help="Element as text or JSON.")
        parser.add_argument("--n", type=int, help="Shift part (ll, bs).")
        parser.add_argument("--f", help="Lamp configuration or Z[1/q] part.")
        parser.add_argument("--a", help="Zⁿ part, comma separated (pc).")
        parser.add_argument("--b", help="Zᵏ part, comma separated (pc).")
        parser.add_argument("--lhs", help="Left operand for mul and dl-dist.")
        parser.add_argument("--rhs", help="Right operand for mul and dl-dist.")
        parser.add_argument(
            "--metric",
            choices=("rescaled", "raw"),
            default="rescaled",
            help="Hyperbolic metric for BS bounds.",
        )
        parser.add_argument(
            "--radius", type=int, help="BFS radius for oracle-len."
        )

    def handle(self, *args: Any, **options: Any) -> None:
        with command_errors():
            ctx = build_context(options)
            operation = options["operation"]
            if operation in ("mul", "dl-dist"):
                lhs = element_option(ctx, options, "lhs")
                rhs = element_option(ctx, options, "rhs")
                if operation == "mul":
                    result = ctx.to_json(ctx.multiply(lhs, rhs))
                else:
                    result = {"distance": ctx.dl_distance(lhs, rhs)}
            else:
                g = element_option(ctx, options)
                if operation == "inv":
                    result = ctx.to_json(ctx.inverse(g))
                elif operation == "len":
                    result = ctx.length(g)
                elif operation == "bounds":
                    result = ctx.bounds(g, options["metric"])
                else:
                    result = ctx.oracle_length(g, options.get("radius"))
        emit(self, result)
