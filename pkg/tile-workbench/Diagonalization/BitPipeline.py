from itertools import islice
from typing import Iterable, List, Optional, Tuple

from AssemblyEngine.TrialPool import map_in_order
from ConfigValidator.Config.WorkbenchConfig import WorkbenchConfig
from ConfigValidator.CustomErrors.DiagErrors import UniverseTooLargeError, UnsupportedError
from ConfigValidator.CustomErrors.SimulationErrors import StepBudgetOverflowError
from Diagonalization.BitSequence import FLIP, BitSequence
from Diagonalization.SFCounting import count_sf_systems
from Diagonalization.SFEnumerator import sf_enumerator
from Diagonalization.SFModels import PAPER_FLOW, SFSystem, Universe
from Diagonalization.SFSimulation import Probe, probe_sf
from ProgressManager.Output.OutputProcedure import OutputProcedure as output

Job = Tuple[SFSystem, int, int, int, Universe, int]


def _jobs(universe: Universe, steps: int, patt_size: int, hard_cap: int) -> Iterable[Job]:
    for index, sys in enumerate(sf_enumerator(universe)):
        yield sys, steps, patt_size, index, universe, hard_cap


def _sweep_parameters(universe: Universe, hard_cap: int) -> Tuple[int, int, int]:
    total = count_sf_systems(universe)
    steps = universe.step_budget(total)
    if steps > hard_cap:
        raise StepBudgetOverflowError(steps, hard_cap)
    return total, steps, universe.pattern_size(total)


def compute_bits(universe: Universe, cap: Optional[int] = None, workers: int = 1,
                 hard_cap: Optional[int] = None) -> BitSequence:
    """Simulates every system of the universe in sweep order and saves one bit per system.

    The probe offset of a system is its serial number. With `workers` > 1 simulations run in a
    process pool; bits are still collected in serial order.
    """
    cap = WorkbenchConfig.universe_hard_cap if cap is None else cap
    hard_cap = WorkbenchConfig.max_steps_hard_cap if hard_cap is None else hard_cap
    if universe.mode == PAPER_FLOW:
        raise UnsupportedError(universe.mode)
    total = count_sf_systems(universe)
    if total > cap:
        raise UniverseTooLargeError(total, cap)

    total, steps, patt_size = _sweep_parameters(universe, hard_cap)
    output.console_log(f"simulating {total} systems, {steps} steps each, cell size {patt_size}")

    bits = BitSequence()
    for probe in map_in_order(probe_sf, _jobs(universe, steps, patt_size, hard_cap), workers, chunksize=64):
        bits.append(probe.bit, probe.reason)

    flips = sum(1 for r in bits.provenance if r.reason == FLIP)
    output.console_log_OK(f"{len(bits)} bits computed, {flips} from a probed color")
    return bits


def replay(universe: Universe, serials: List[int], hard_cap: Optional[int] = None) -> List[Tuple[int, Probe]]:
    """Re-runs the systems with the given serial numbers and returns their probes."""
    hard_cap = WorkbenchConfig.max_steps_hard_cap if hard_cap is None else hard_cap
    wanted = set(serials)
    if not wanted:
        return []
    _, steps, patt_size = _sweep_parameters(universe, hard_cap)
    found = []
    for index, sys in enumerate(islice(sf_enumerator(universe), max(wanted) + 1)):
        if index in wanted:
            found.append((index, probe_sf(sys, steps, patt_size, index, universe, hard_cap)))
    return found
