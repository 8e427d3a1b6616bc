"""
oracle/generating_sets.py

Symmetric generating sets for the three group families, packaged with the
group law so the BFS code never needs to know which family it walks.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Any

from bs.elements import BSElement, bs_generators, bs_inv, bs_mul
from exactnum.exceptions import InvalidArgument
from lamplighter.elements import LLElement, ll_generators, ll_inv, ll_mul
from polycyclic.elements import pc_generators, pc_identity, pc_inv, pc_mul
from polycyclic.spec import PCGroupSpec


class Family(str, Enum):
    LAMPLIGHTER = "ll"
    BAUMSLAG_SOLITAR = "bs"
    POLYCYCLIC = "pc"


@dataclass(frozen=True)
class GeneratingSet:
    family: Family
    generators: tuple[Any, ...]
    multiply: Callable[[Any, Any], Any]
    inverse: Callable[[Any], Any]
    identity: Any
    label: str = ""

    def __post_init__(self) -> None:
        closed = set(self.generators)
        missing = [s for s in self.generators if self.inverse(s) not in closed]
        if missing:
            raise InvalidArgument(f"generating set is not symmetric: {missing}")

    def __len__(self) -> int:
        return len(self.generators)


def lamplighter_generating_set(q: int) -> GeneratingSet:
    """{(1, b) : b ∈ Z_q} and inverses; the Cayley graph is DL_2(q)."""
    return GeneratingSet(
        Family.LAMPLIGHTER,
        ll_generators(q),
        ll_mul,
        ll_inv,
        LLElement.identity(q),
        label=f"Z_{q} wr Z",
    )


def bs_generating_set(q: int) -> GeneratingSet:
    """a^{±1}, b^{±1} for ⟨a, b | aba⁻¹ = b^q⟩."""
    return GeneratingSet(
        Family.BAUMSLAG_SOLITAR,
        bs_generators(q),
        bs_mul,
        bs_inv,
        BSElement.identity(q),
        label=f"BS(1,{q})",
    )


def pc_generating_set(spec: PCGroupSpec) -> GeneratingSet:
    """Unit vectors of Zⁿ and Zᵏ with their inverses."""
    return GeneratingSet(
        Family.POLYCYCLIC,
        tuple(pc_generators(spec)),
        partial(pc_mul, spec=spec),
        partial(pc_inv, spec=spec),
        pc_identity(spec),
        label=f"Z^{spec.n} x| Z^{spec.k}",
    )
