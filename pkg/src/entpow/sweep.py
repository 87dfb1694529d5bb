"""Parameter sweeps over built-in operator families, rendered as CSV.

Output is locale-independent by construction: '.' decimal separator, LF
line endings, floats at 17 significant digits.  A fixed spec always
renders to byte-identical CSV.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import numpy as np

from .entanglement import (
    operator_entanglement,
    swapped_operator_entanglement,
    entangling_power,
)
from .operators import ControlledUSpec, controlled_u, exp_swap, haar_unitary
from .rearrange import BipartiteOperator

__all__ = ["FAMILIES", "SweepSpec", "sweep_rows", "render_csv"]

FAMILIES = ("exp_swap", "controlled_u_random", "haar")

CSV_HEADER = "param,e_op,e_op_swapped,e_power"


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a family evaluated on a uniform parameter grid.

    For ``exp_swap`` the parameter is the angle t; the random families draw
    a fresh instance per grid point from a child seed, and the parameter
    column merely labels the row.
    """

    family: str
    d: int
    param_start: float
    param_end: float
    steps: int
    seed: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(
                f"unknown family {self.family!r}; valid families: {', '.join(FAMILIES)}"
            )
        if not isinstance(self.d, int) or self.d < 2:
            raise ValueError(f"local dimension must be an integer >= 2, got {self.d!r}")
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")
        if not (math.isfinite(self.param_start) and math.isfinite(self.param_end)):
            raise ValueError("parameter range must be finite")
        if self.param_start > self.param_end:
            raise ValueError(
                f"param_start {self.param_start} exceeds param_end {self.param_end}"
            )
        if self.seed < 0:
            raise ValueError(f"seed must be a nonnegative 64-bit integer, got {self.seed}")


def sweep_rows(spec: SweepSpec) -> list[tuple[float, float, float, float]]:
    """Evaluate the sweep: one (param, E(U), E(S12 U), e_p) tuple per grid point."""
    params = [float(t) for t in np.linspace(spec.param_start, spec.param_end, spec.steps)]
    child_seeds = _child_seeds(spec)
    rows = []
    for k, t in enumerate(params):
        u = _instance(spec, k, t, child_seeds)
        rows.append(
            (
                t,
                operator_entanglement(u),
                swapped_operator_entanglement(u),
                entangling_power(u),
            )
        )
    return rows


def render_csv(rows) -> str:
    """Render sweep rows as CSV text (LF endings, 17 significant digits)."""
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(",".join(format(x, ".17g") for x in row))
    return "\n".join(lines) + "\n"


def _child_seeds(spec: SweepSpec) -> np.ndarray:
    # one independent child seed per random draw, derived from (seed, index)
    n = spec.steps * (spec.d if spec.family == "controlled_u_random" else 1)
    return np.random.SeedSequence(spec.seed).generate_state(n, dtype=np.uint64)


def _instance(spec: SweepSpec, k: int, t: float, child_seeds: np.ndarray) -> BipartiteOperator:
    d = spec.d
    if spec.family == "exp_swap":
        return exp_swap(d, t)
    if spec.family == "haar":
        return BipartiteOperator(d, haar_unitary(d * d, int(child_seeds[k])))
    blocks = tuple(haar_unitary(d, int(child_seeds[k * d + n])) for n in range(d))
    return controlled_u(ControlledUSpec(d, blocks))
