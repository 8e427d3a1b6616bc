"""
forge/cli.py

Argument handling shared by the ``eval``, ``conj`` and ``audit``
management commands, and the mapping from library errors to exit codes:

    2  element or spec could not be parsed, or inputs name different groups
    3  domain error (bad argument, unsupported spec, oracle limits)
    1  internal invariant failed (reported as a bug trap)
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser

from exactnum.exceptions import (
    ConjForgeError,
    GrammarError,
    InternalInvariantError,
)
from polycyclic.spec import SpecError, load_spec_file

from .services import GroupContext, MixedGroups

EXIT_DISAGREEMENT = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_UNWRITABLE = 4

ELEMENT_OPTIONS = frozenset(
    ("--element", "--u", "--v", "--lhs", "--rhs", "--f", "--a", "--b")
)
NEGATIVE_VALUE = re.compile(r"-\d")


def join_element_values(argv: list[str]) -> list[str]:
    """
    Glue ``--v -1;`` into ``--v=-1;``.

    argparse reads a separate token such as ``-1;`` or ``-2,0;1`` as an
    option string, so negative-shift elements never reach the parser.
    """
    joined: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in ELEMENT_OPTIONS
            and i + 1 < len(argv)
            and NEGATIVE_VALUE.match(argv[i + 1])
        ):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            joined.append(token)
            i += 1
    return joined


class ElementCommand(BaseCommand):
    """Management command whose element options may start with a minus."""

    def run_from_argv(self, argv: list[str]) -> None:
        super().run_from_argv(join_element_values(argv))


def add_group_arguments(parser: CommandParser) -> None:
    parser.add_argument(
        "--group",
        required=True,
        choices=("ll", "bs", "pc"),
        help="Group family: lamplighter, Baumslag-Solitar or polycyclic.",
    )
    parser.add_argument("--q", type=int, help="q for ll and bs groups.")
    parser.add_argument("--spec", help="JSON spec file for pc groups.")


@contextmanager
def command_errors() -> Iterator[None]:
    """Translate library exceptions into ``CommandError`` exit codes."""
    try:
        yield
    except (GrammarError, MixedGroups) as exc:
        raise CommandError(str(exc), returncode=EXIT_PARSE) from exc
    except SpecError as exc:
        code = EXIT_PARSE if exc.code == "malformed" else EXIT_DOMAIN
        raise CommandError("; ".join(exc.messages), returncode=code) from exc
    except InternalInvariantError as exc:
        raise CommandError(
            f"internal invariant failed: {exc}", returncode=EXIT_DISAGREEMENT
        ) from exc
    except ConjForgeError as exc:
        raise CommandError(str(exc), returncode=EXIT_DOMAIN) from exc


def build_context(options: dict[str, Any]) -> GroupContext:
    family = options["group"]
    spec = None
    if family == "pc":
        if not options.get("spec"):
            raise CommandError("--spec is required for --group pc", returncode=EXIT_PARSE)
        try:
            spec = load_spec_file(options["spec"])
        except OSError as exc:
            raise CommandError(
                f"cannot read spec file: {exc}", returncode=EXIT_PARSE
            ) from exc
    elif options.get("q") is None:
        raise CommandError(f"--q is required for --group {family}", returncode=EXIT_PARSE)
    return GroupContext.build(family, options.get("q"), spec)


def element_option(
    ctx: GroupContext, options: dict[str, Any], name: str = "element"
) -> Any:
    """
    Element from ``--<name>`` (text grammar or JSON), or from the component
    flags ``--n/--f`` (ll, bs) and ``--a/--b`` (pc) when ``name`` is absent.
    """
    text = options.get(name)
    if text is not None:
        return ctx.parse(text)
    if name != "element":
        raise CommandError(f"--{name} is required", returncode=EXIT_PARSE)
    if ctx.spec is not None and options.get("a") is not None:
        return ctx.parse(f"{options['a']};{options.get('b') or ''}")
    if options.get("n") is not None:
        default_f = "" if ctx.family.value == "ll" else "0"
        return ctx.from_json({"n": options["n"], "f": options.get("f") or default_f})
    raise CommandError(
        "give an element with --element, --n/--f or --a/--b",
        returncode=EXIT_PARSE,
    )


def emit(command: BaseCommand, payload: Any) -> None:
    command.stdout.write(json.dumps(payload, sort_keys=True, ensure_ascii=False))
