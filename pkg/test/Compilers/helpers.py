from AssemblyEngine.AttachmentPolicy import PaperOrder
from AssemblyEngine.Simulator import simulate
from Compilers.CompiledSystem import CompiledSystem
from Patterns.AssemblyPattern import assembly_pattern


def grow(compiled: CompiledSystem, policy=PaperOrder(), z=None):
    """Runs the compiled system to completion and returns (terminal?, pattern of the result or of plane z)."""
    system = compiled.system
    result = simulate(system, 2 * len(compiled.blueprint) + 16, policy)
    pattern = assembly_pattern(result.asm, lambda idx: system.tileset[idx].color, system.tileset.palette, z=z)
    return result.terminal, pattern
