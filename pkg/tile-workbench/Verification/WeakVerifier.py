from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from AssemblyEngine.AttachmentPolicy import AttachmentPolicy, PaperOrder, UniformRandom
from AssemblyEngine.Simulator import simulate
from AssemblyEngine.TerminalEnumerator import FrozenAssembly, Overflow, enumerate_terminal, thaw
from AssemblyEngine.TrialPool import map_in_order, resolve_workers
from Compilers.CompiledSystem import CompiledSystem
from ConfigValidator.Config.WorkbenchConfig import WorkbenchConfig
from ConfigValidator.CustomErrors.SimulationErrors import StepBudgetOverflowError
from ConfigValidator.CustomErrors.VerifyErrors import NonTerminatingError
from Patterns.AssemblyPattern import NotRectangular, assembly_pattern
from Patterns.Pattern import Pattern
from ProgressManager.Output.OutputProcedure import OutputProcedure as output
from TileModel.Assembly import Assembly
from TileModel.TileAssemblySystem import TileAssemblySystem
from Verification.VerifyReport import Mismatch, VerifyReport


@dataclass(frozen=True)
class TrialOutcome:
    terminal:   bool
    steps:      int
    placements: FrozenAssembly


def _run_trial(system: TileAssemblySystem, policy: AttachmentPolicy, step_cap: int, hard_cap: int) -> TrialOutcome:
    result = simulate(system, step_cap, policy, hard_cap)
    return TrialOutcome(result.terminal, result.steps, result.asm.frozen())


def trial_policies(trials: int, rng_seed: int) -> List[AttachmentPolicy]:
    """PaperOrder first, then UniformRandom with seeds drawn from `rng_seed`."""
    seeds = np.random.default_rng(rng_seed).integers(0, 2 ** 31 - 1, size=max(0, trials - 1))
    return [PaperOrder()] + [UniformRandom(int(s)) for s in seeds]


def _viewed_plane(system: TileAssemblySystem) -> Optional[int]:
    return 1 if system.dim == 3 else None


def compare(system: TileAssemblySystem, target: Pattern, asm: Assembly, strict: bool = False) -> Optional[Mismatch]:
    """First disagreement between a terminal assembly and the target after translation to the origin."""
    tiles = system.tileset
    z = _viewed_plane(system)
    got = assembly_pattern(asm, lambda idx: tiles[idx].color, tiles.palette, z=z)
    if isinstance(got, NotRectangular):
        xs = [x for (x, _, lz) in asm if z is None or lz == z]
        ys = [y for (_, y, lz) in asm if z is None or lz == z]
        x, y = got.hole[0] - min(xs), got.hole[1] - min(ys)
        expected = target.color(x, y) if x < target.width and y < target.height else None
        return Mismatch((x, y), expected, None)

    diff = target.first_difference(got)
    if diff is not None:
        x, y, _, _ = diff
        expected = target.color(x, y) if x < target.width and y < target.height else None
        actual = got.color(x, y) if x < got.width and y < got.height else None
        return Mismatch((x, y), expected, actual)

    if strict:
        foreign = sorted({t.color for t in tiles} - target.colors_present())
        if foreign:
            return Mismatch(None, None, foreign[0])
    return None


def _exhaustive(system: TileAssemblySystem, target: Pattern, step_cap: int) -> Optional[List[Assembly]]:
    area = target.width * target.height
    if area > WorkbenchConfig.exhaustive_max_area or len(system.tileset) > WorkbenchConfig.exhaustive_max_types:
        return None
    found = enumerate_terminal(system, WorkbenchConfig.exhaustive_max_assemblies, step_cap + len(system.seed))
    if isinstance(found, Overflow):
        output.console_log_WARNING(f"exhaustive exploration gave up ({found.reason}), sampling instead")
        return None
    return [thaw(f) for f in sorted(found, key=sorted)]


def _report(system, target, assemblies: Iterable[Assembly], trials: int, strict: bool, exhaustive: bool) -> VerifyReport:
    first = None
    distinct = set()
    for asm in assemblies:
        distinct.add(asm.frozen())
        mismatch = compare(system, target, asm, strict)
        if first is None and mismatch is not None:
            first = mismatch
    return VerifyReport(trials, True, first is None, len(distinct), first, exhaustive)


def verify_system(system: TileAssemblySystem, target: Pattern, trials: Optional[int] = None,
                  rng_seed: Optional[int] = None, strict: bool = False, workers: Optional[int] = None,
                  hard_cap: Optional[int] = None) -> VerifyReport:
    """Checks that every terminal assembly of `system` shows `target`.

    Small systems are explored exhaustively. Others get one PaperOrder trial and `trials - 1`
    UniformRandom trials, each allowed four steps per target cell.
    """
    trials = WorkbenchConfig.default_trials if trials is None else trials
    rng_seed = WorkbenchConfig.default_rng_seed if rng_seed is None else rng_seed
    hard_cap = WorkbenchConfig.max_steps_hard_cap if hard_cap is None else hard_cap
    if trials < 1:
        raise ValueError(f"at least one trial is needed, found {trials}")
    step_cap = 4 * target.width * target.height
    if step_cap > hard_cap:
        raise StepBudgetOverflowError(step_cap, hard_cap)

    terminals = _exhaustive(system, target, step_cap)
    if terminals is not None:
        output.console_log(f"{len(terminals)} terminal assemblies found exhaustively")
        return _report(system, target, terminals, len(terminals), strict, True)

    jobs = ((system, policy, step_cap, hard_cap) for policy in trial_policies(trials, rng_seed))
    outcomes: List[TrialOutcome] = []
    for index, outcome in enumerate(map_in_order(_run_trial, jobs, resolve_workers(workers), chunksize=1)):
        if not outcome.terminal:
            raise NonTerminatingError(index, step_cap)
        outcomes.append(outcome)
    return _report(system, target, (thaw(o.placements) for o in outcomes), trials, strict, False)


def verify_weak(cs: CompiledSystem, trials: Optional[int] = None, rng_seed: Optional[int] = None,
                strict: bool = False, workers: Optional[int] = None) -> VerifyReport:
    return verify_system(cs.system, cs.target, trials, rng_seed, strict, workers)
