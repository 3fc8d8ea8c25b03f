from dataclasses import dataclass, field
from typing import Dict, Tuple

from ConfigValidator.Config.WorkbenchConfig import WorkbenchConfig
from ConfigValidator.CustomErrors.ModelErrors import ParseError
from Compilers.Blueprint import Blueprint
from Patterns.Generators import ceil_log2
from Patterns.Pattern import Pattern
from ProgressManager.Output.OutputProcedure import OutputProcedure as output
from TileModel.TileAssemblySystem import TileAssemblySystem

LOG_N = "O(log_n)"
PIXELS_LOG_N = "O(|L|log_n)"
SQUARE = "O(n^2/log_n)"
REPEAT = "O(n^2/log_n+log_nm)"
LIFT = "O(|b|+log_m)"


def log_term(n: int) -> int:
    return max(1, ceil_log2(n))


@dataclass(frozen=True)
class Budget:
    """A claimed tile-type bound, evaluated with the constants of `WorkbenchConfig.budget_constants`."""
    symbolic:   str
    cap:        int

    @staticmethod
    def log_n(kind: str, n: int) -> 'Budget':
        c, c0 = WorkbenchConfig.budget_constants[kind]
        return Budget(LOG_N, c * log_term(n) + c0)

    @staticmethod
    def pixels(n: int, count: int) -> 'Budget':
        c, c0 = WorkbenchConfig.budget_constants['multi-pixel']
        return Budget(PIXELS_LOG_N, c * max(1, count) * log_term(n) + c0)

    @staticmethod
    def square(n: int) -> 'Budget':
        c, c0 = WorkbenchConfig.budget_constants['square']
        return Budget(SQUARE, c * n * n // log_term(n) + c0)

    @staticmethod
    def repeat(n: int, m: int) -> 'Budget':
        c, c2 = WorkbenchConfig.budget_constants['grid-repeat']
        return Budget(REPEAT, c * n * n // log_term(n) + c2 * log_term(n * m))

    @staticmethod
    def lift(length: int, m: int) -> 'Budget':
        c, c0 = WorkbenchConfig.budget_constants['pn-lift']
        return Budget(LIFT, c * (length + log_term(m)) + c0)

    def line(self, actual: int) -> str:
        return f"BUDGET {self.symbolic} {self.cap} {actual}"

    @staticmethod
    def parse_line(text: str) -> Tuple['Budget', int]:
        """(budget, recorded tile count) of a `BUDGET <symbolic> <cap> <actual>` line."""
        parts = text.split()
        if len(parts) != 4 or parts[0] != "BUDGET" or not (parts[2].isdigit() and parts[3].isdigit()):
            raise ParseError(1, f"expected `BUDGET <symbolic> <cap> <actual>`, found `{text.strip()}`")
        return Budget(parts[1], int(parts[2])), int(parts[3])


@dataclass
class CompiledSystem:
    system:     TileAssemblySystem
    target:     Pattern
    budget:     Budget
    blueprint:  Blueprint
    families:   Dict[str, Tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.within_budget:
            output.console_log_WARNING(
                f"{self.blueprint.name}: {self.tile_count} tile types exceed the {self.budget.symbolic} cap {self.budget.cap}")

    @property
    def tile_count(self) -> int:
        return len(self.system.tileset)

    @property
    def within_budget(self) -> bool:
        return self.tile_count <= self.budget.cap

    def budget_line(self) -> str:
        return self.budget.line(self.tile_count)

    def rib_family(self, direction: str) -> Tuple[int, ...]:
        """Tile indices of the eastward ("east") or westward ("west") rib family."""
        return self.families.get(f"rib-{direction}", ())


def resolve_certify(certify) -> bool:
    return WorkbenchConfig.certify_blueprints if certify is None else certify
