from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from Compilers.CompiledSystem import CompiledSystem, log_term
from ProgressManager.Output.OutputProcedure import OutputProcedure as output

KINDS = ("single-pixel", "multi-pixel", "stripes", "square", "grid-repeat", "pn-lift")


@dataclass(frozen=True)
class AuditRow:
    params:     str
    kind:       str
    n:          int
    tile_count: int
    budget_cap: int

    @property
    def within_budget(self) -> bool:
        return self.tile_count <= self.budget_cap


def kind_of(cs: CompiledSystem) -> str:
    return next((k for k in KINDS if cs.blueprint.name.startswith(k)), "other")


def audit_row(cs: CompiledSystem, params: Optional[str] = None) -> AuditRow:
    return AuditRow(params or cs.blueprint.name, kind_of(cs), cs.target.width, cs.tile_count, cs.budget.cap)


def growth_ratio(kind: str, n: int, tile_count: int) -> float:
    """Tiles over the asymptotic term the construction claims; NaN where none is tracked."""
    if kind == "square":
        return tile_count / (n * n / log_term(n))
    if kind in ("single-pixel", "stripes"):
        return tile_count / log_term(n)
    return np.nan


def complexity_audit(systems: Sequence[CompiledSystem],
                     params: Optional[Sequence[str]] = None) -> Tuple[List[AuditRow], pd.DataFrame]:
    """Budget check per system plus a growth table sorted by kind and n.

    The table carries the ratio of tiles to the claimed term and, per kind, the tile increase
    from the previous (smaller) n.
    """
    params = params or [None] * len(systems)
    rows = [audit_row(cs, p) for cs, p in zip(systems, params)]
    growth = pd.DataFrame([{
        "params":        r.params,
        "kind":          r.kind,
        "n":             r.n,
        "tiles":         r.tile_count,
        "cap":           r.budget_cap,
        "within_budget": r.within_budget,
        "ratio":         growth_ratio(r.kind, r.n, r.tile_count),
    } for r in rows], columns=["params", "kind", "n", "tiles", "cap", "within_budget", "ratio"])
    growth = growth.sort_values(["kind", "n"], kind="stable").reset_index(drop=True)
    growth["increase"] = growth.groupby("kind")["tiles"].diff()

    over = [r.params for r in rows if not r.within_budget]
    if over:
        output.console_log_WARNING(f"over budget: {', '.join(over)}")
    return rows, growth


def ratio_spread(growth: pd.DataFrame) -> pd.DataFrame:
    """min/max ratio per kind, for kinds with a tracked term."""
    tracked = growth.dropna(subset=["ratio"])
    return tracked.groupby("kind")["ratio"].agg(["min", "max"])
