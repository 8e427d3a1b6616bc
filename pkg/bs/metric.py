"""
bs/metric.py

Estimates of the displacement d_X(x, γx) in the treebolic space of
BS(1, q), x the basepoint (B(0, q⁰), i).

Only lower and upper estimates are computable; the exact value is known
when f = 0. Hyperbolic distances default to the log q rescaled metric,
which makes horocycle spacing agree with the tree; ``metric="raw"`` uses
the unscaled plane instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Literal

from exactnum.exceptions import InternalInvariantError, InvalidArgument

from .elements import BSElement
from .hyperbolic import act_on_plane, hyp_dist, hyp_dist_rescaled

Metric = Literal["rescaled", "raw"]

ORDER_TOLERANCE = 1e-9


@dataclass(frozen=True)
class LengthEstimate:
    lower: float
    upper: float
    exact: int | None = None
    metric: Metric = "rescaled"
    # False only for raw estimates with q > 2, where lower may exceed upper
    ordered: bool = True

    def __post_init__(self) -> None:
        if self.lower < 0 or self.upper < 0:
            raise InvalidArgument("length estimates are non-negative")
        if self.ordered and self.lower > self.upper + ORDER_TOLERANCE:
            raise InternalInvariantError(
                f"{self.metric} estimate has lower {self.lower} > upper {self.upper}"
            )


def horocycle_constant(q: int) -> float:
    """A = min{½(log q - log √2), 1}."""
    return min(0.5 * (math.log(q) - math.log(math.sqrt(2.0))), 1.0)


def bs_length_bounds(g: BSElement, metric: Metric = "rescaled") -> LengthEstimate:
    """
    Lower bound: the largest of |n|, ½(d(i, γi) + max{-v0, 0}),
    max{-v0, 0}, d(i, γi) and, when n = 0, A·|v0|.

    Upper bound: |n| + d(i, i + f) + 2·max{-v0, 0} (the path through
    (0, f) then (n, 0)); for n = 0 this is d(i, γi) + 2·max{-v0, 0}.
    """
    if metric not in ("rescaled", "raw"):
        raise InvalidArgument(f"unknown metric {metric!r}")
    n, f = g.n, g.f
    if not f:
        return LengthEstimate(abs(n), abs(n), abs(n), metric)

    if metric == "rescaled":
        distance = partial(hyp_dist_rescaled, q=g.q)
    else:
        distance = hyp_dist
    origin = 1j
    d_gamma = distance(origin, act_on_plane(g, origin))
    d_translation = distance(origin, complex(float(f), 1.0))
    v0 = int(f.v0)
    below = max(-v0, 0)

    lower_items = [abs(n), 0.5 * (d_gamma + below), below, d_gamma]
    if n == 0:
        lower_items.append(horocycle_constant(g.q) * abs(v0))
        upper = d_gamma + 2 * below
    else:
        upper = abs(n) + d_translation + 2 * below
    return LengthEstimate(
        float(max(lower_items)),
        float(upper),
        None,
        metric,
        ordered=metric == "rescaled" or g.q == 2,
    )
