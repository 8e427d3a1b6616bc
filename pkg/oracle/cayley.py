"""
oracle/cayley.py

Breadth-first search in Cayley graphs: balls, word lengths and exhaustive
conjugator search. Elements are deduplicated by their canonical forms, so
equality of group elements is plain ``==``.

BFS order is deterministic: generators are tried in the order the
generating set lists them and neighbours are g·s (right multiplication).
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

from exactnum.conf import forge_setting
from exactnum.exceptions import InvalidArgument

from .exceptions import OracleBudgetExceeded, OracleOutOfRange
from .generating_sets import GeneratingSet

logger = logging.getLogger(__name__)


def element_budget() -> int:
    """How many elements a ball may hold under ``ORACLE_MEM_LIMIT``."""
    return forge_setting("ORACLE_MEM_LIMIT") // forge_setting(
        "ORACLE_BYTES_PER_ELEMENT"
    )


def default_radius(gens: GeneratingSet) -> int:
    return forge_setting("ORACLE_RADIUS")[gens.family.value]


@dataclass
class Ball:
    """Elements within ``radius`` mapped to their word length, in BFS order."""

    radius: int
    lengths: dict[Any, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.lengths)

    def __contains__(self, g: Any) -> bool:
        return g in self.lengths

    def __iter__(self) -> Iterator[Any]:
        return iter(self.lengths)

    def sphere_sizes(self) -> list[int]:
        sizes = [0] * (self.radius + 1)
        for length in self.lengths.values():
            sizes[length] += 1
        return sizes

    def within(self, radius: int) -> Iterator[tuple[Any, int]]:
        """Elements of length ≤ radius; BFS order makes this a prefix."""
        for g, length in self.lengths.items():
            if length > radius:
                return
            yield g, length


def _bfs(
    gens: GeneratingSet, radius: int, budget: int
) -> Iterator[tuple[Any, int]]:
    if radius < 0:
        raise InvalidArgument(f"radius must be non-negative, got {radius}")
    seen = {gens.identity}
    queue = deque([(gens.identity, 0)])
    while queue:
        g, length = queue.popleft()
        yield g, length
        if length == radius:
            continue
        for s in gens.generators:
            h = gens.multiply(g, s)
            if h in seen:
                continue
            seen.add(h)
            if len(seen) > budget:
                logger.warning(
                    "ball of %s outgrew %d elements at radius %d",
                    gens.label, budget, length + 1,
                )
                raise OracleBudgetExceeded(
                    f"more than {budget} elements within radius {length + 1}",
                    partial_count=len(seen) - 1,
                )
            queue.append((h, length + 1))


def enumerate_ball(
    gens: GeneratingSet, radius: int, budget: int | None = None
) -> Ball:
    """
    The exact ball of the given radius with true word lengths.

    Raises:
        InvalidArgument: negative radius.
        OracleBudgetExceeded: more elements than the memory budget allows;
            ``partial_count`` says how many were found.
    """
    budget = element_budget() if budget is None else budget
    ball = Ball(radius)
    for g, length in _bfs(gens, radius, budget):
        ball.lengths[g] = length
    logger.debug("ball of %s, radius %d: %d elements", gens.label, radius, len(ball))
    return ball


def bfs_word_length(
    gens: GeneratingSet,
    g: Any,
    radius: int | None = None,
    budget: int | None = None,
) -> int:
    """
    Word length of g, stopping as soon as BFS reaches it.

    Raises:
        OracleOutOfRange: g is farther than ``radius``.
    """
    radius = default_radius(gens) if radius is None else radius
    budget = element_budget() if budget is None else budget
    for h, length in _bfs(gens, radius, budget):
        if h == g:
            return length
    raise OracleOutOfRange(f"{g} is not within radius {radius}", radius=radius)


@dataclass(frozen=True)
class BruteResult:
    """
    Outcome of an exhaustive conjugator search.

    ``complete`` is true when the caller vouched that the radius is large
    enough to contain a conjugator whenever one exists; only then does a
    missing witness certify non-conjugacy.
    """

    witness: Any
    length: int | None
    radius: int
    complete: bool
    searched: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def brute_conjugator(
    gens: GeneratingSet,
    u: Any,
    v: Any,
    radius: int,
    *,
    ball: Ball | None = None,
    complete: bool = False,
    budget: int | None = None,
) -> BruteResult:
    """
    First γ in BFS order with u·γ = γ·v and |γ| ≤ radius.

    A precomputed ``ball`` of at least this radius is reused, which is how
    the exhaustive tests amortise one BFS over many pairs.
    """
    if ball is not None and ball.radius < radius:
        raise InvalidArgument(
            f"ball of radius {ball.radius} cannot serve radius {radius}"
        )
    if ball is not None:
        candidates = ball.within(radius)
    else:
        budget = element_budget() if budget is None else budget
        candidates = _bfs(gens, radius, budget)
    searched = 0
    mul = gens.multiply
    for gamma, length in candidates:
        searched += 1
        if mul(u, gamma) == mul(gamma, v):
            return BruteResult(gamma, length, radius, complete, searched)
    return BruteResult(None, None, radius, complete, searched)
