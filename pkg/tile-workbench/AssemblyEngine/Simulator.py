from dataclasses import dataclass
from typing import Optional, Union

from AssemblyEngine.AttachmentPolicy import AttachmentPolicy, PaperOrder, UniformRandom
from AssemblyEngine.AttachmentRule import AttachmentRule, ATAMRule
from AssemblyEngine.SimState import SimState
from ConfigValidator.Config.WorkbenchConfig import WorkbenchConfig
from ConfigValidator.CustomErrors.SimulationErrors import StepBudgetOverflowError
from TileModel.Assembly import Assembly
from TileModel.Direction import Location
from TileModel.TileAssemblySystem import TileAssemblySystem


@dataclass(frozen=True)
class Placement:
    loc:        Location
    tile_index: int


class Exhausted:
    """No legal attachment exists: the assembly is terminal."""

    def __repr__(self):
        return "Exhausted"


EXHAUSTED = Exhausted()


@dataclass
class RunResult:
    asm:        Assembly
    terminal:   bool
    steps:      int


def init_state(system: Union[TileAssemblySystem, AttachmentRule]) -> SimState:
    rule = ATAMRule(system) if isinstance(system, TileAssemblySystem) else system
    state = SimState(rule)
    for loc in state.asm.insertion_order:
        update_frontier(state, loc)
    return state


def update_frontier(state: SimState, loc: Location):
    state.frontier.pop(loc, None)
    state.forget(loc)
    for d in state.rule.probe_order:
        neighbor = d.step(loc)
        state.forget(neighbor)
        if neighbor in state.asm or neighbor in state.frontier or not state.rule.in_space(neighbor):
            continue
        if state.legal_at(neighbor):
            state.frontier[neighbor] = None


def place(state: SimState, loc: Location, tile_index: int) -> Placement:
    state.asm.place(loc, tile_index)
    state.steps += 1
    update_frontier(state, loc)
    return Placement(loc, tile_index)


def add_tile(state: SimState, policy: AttachmentPolicy) -> Union[Placement, Exhausted]:
    if isinstance(policy, UniformRandom):
        return _add_random(state, policy)

    while state.frontier:
        loc = next(iter(state.frontier))
        legal = state.legal_at(loc)
        if not legal:
            del state.frontier[loc]     # stale
            continue
        return place(state, loc, legal[0])
    return EXHAUSTED


def _add_random(state: SimState, policy: UniformRandom) -> Union[Placement, Exhausted]:
    if state.rng is None:
        state.rng = policy.generator()

    live = []
    total = 0
    for loc in list(state.frontier):
        legal = state.legal_at(loc)
        if not legal:
            del state.frontier[loc]
            continue
        live.append((loc, legal))
        total += len(legal)
    if total == 0:
        return EXHAUSTED

    r = int(state.rng.integers(total))
    for loc, legal in live:
        if r < len(legal):
            return place(state, loc, legal[r])
        r -= len(legal)


def is_terminal(state: SimState) -> bool:
    for loc in list(state.frontier):
        if state.legal_at(loc):
            return False
        del state.frontier[loc]
    return True


def run(state: SimState, max_steps: int, policy: AttachmentPolicy = PaperOrder(),
        hard_cap: Optional[int] = None) -> RunResult:
    hard_cap = WorkbenchConfig.max_steps_hard_cap if hard_cap is None else hard_cap
    if max_steps > hard_cap:
        raise StepBudgetOverflowError(max_steps, hard_cap)

    while state.steps < max_steps:
        if add_tile(state, policy) is EXHAUSTED:
            return RunResult(state.asm, True, state.steps)
    return RunResult(state.asm, is_terminal(state), state.steps)


def simulate(system: TileAssemblySystem, max_steps: int, policy: AttachmentPolicy = PaperOrder(),
             hard_cap: Optional[int] = None) -> RunResult:
    return run(init_state(system), max_steps, policy, hard_cap)
