import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union
from tabulate import tabulate

from AssemblyEngine.AssemblyAudit import audit_assembly
from AssemblyEngine.AttachmentPolicy import parse_policy
from AssemblyEngine.AttachmentRule import ATAMRule
from AssemblyEngine.Simulator import simulate
from AssemblyEngine.Trace import dump_trace
from AssemblyEngine.TrialPool import resolve_workers
from Compilers.CompiledSystem import Budget, CompiledSystem
from Compilers.GridRepeat import compile_grid_repeat
from Compilers.MultiPixel import compile_multi_pixel
from Compilers.SinglePixel import compile_single_pixel
from Compilers.SquarePattern import compile_square_pattern
from Compilers.Stripes import compile_stripes
from ConfigValidator.Config.Models.Metadata import Metadata
from ConfigValidator.Config.Validation.ConfigValidator import ConfigValidator
from ConfigValidator.Config.WorkbenchConfig import WorkbenchConfig
from ConfigValidator.CustomErrors.CLIErrors import *
from ConfigValidator.CustomErrors.PatternErrors import NotRectangularError
from ConfigValidator.CustomErrors.VerifyErrors import VerificationFailedError
from Diagonalization.BitPipeline import compute_bits
from Diagonalization.BitSequence import BitSequence
from Diagonalization.Codec.BitCodec import BitCodec
from Diagonalization.PnLift import compile_pn_lift
from Diagonalization.PnRenderer import render_pn
from Diagonalization.SFCounting import count_sf_systems, count_sf_systems_reference
from Diagonalization.SFModels import Universe
from ProgressManager.Misc.BashHeaders import BashHeaders
from Patterns.AssemblyPattern import NotRectangular, assembly_pattern
from Patterns.Codec.PPMExporter import export_ppm, parse_color_map
from Patterns.Codec.PatternCodec import PatternCodec
from Patterns.Generators import grid_repeat, multi_pixel, random_two_colored, single_pixel, stripes
from Patterns.Pattern import Pattern
from ProgressManager.Output.JSONOutputManager import JSONOutputManager
from ProgressManager.Output.OutputProcedure import OutputProcedure as output
from TileModel.Codec.TamsetCodec import TamsetCodec
from TileModel.TileAssemblySystem import TileAssemblySystem
from Verification.ComplexityAudit import complexity_audit, ratio_spread
from Verification.PnDiffers import pn_differs
from Verification.WeakVerifier import verify_system


class Arguments:
    """Positional arguments plus `-o value` style options and `--switch` flags of one command."""

    def __init__(self, command: str, usage: str, argv: Sequence[str],
                 values: Sequence[str] = (), switches: Sequence[str] = ()):
        self.command = command
        self.usage = usage
        self.positional: List[str] = []
        self.options: Dict[str, Union[str, bool]] = {}
        i = 0
        while i < len(argv):
            token = argv[i]
            if token in values:
                if i + 1 >= len(argv):
                    self.fail()
                self.options[token] = argv[i + 1]
                i += 2
                continue
            if token in switches:
                self.options[token] = True
            elif token.startswith("-") and len(token) > 1 and not token.lstrip("-").isdigit():
                self.fail()
            else:
                self.positional.append(token)
            i += 1

    def fail(self):
        raise UsageError(self.command, self.usage)

    def expect(self, count: int) -> List[str]:
        if len(self.positional) != count:
            self.fail()
        return self.positional

    def integer(self, token: str) -> int:
        try:
            return int(token)
        except ValueError:
            self.fail()

    def option(self, name: str, default=None):
        return self.options.get(name, default)

    def int_option(self, name: str, default: Optional[int]) -> Optional[int]:
        value = self.options.get(name)
        return default if value is None else self.integer(value)


def _read(path: str, reader: Callable):
    try:
        return reader(path)
    except OSError:
        raise InvalidUserSpecifiedPathError(path)


def _read_text(path: str) -> str:
    def reader(p):
        with open(p, 'r', encoding='utf-8') as f:
            return f.read()
    return _read(path, reader)


def _write_text(text: str, path: Optional[str]):
    if path is None:
        output.emit(text)
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    except OSError:
        raise InvalidUserSpecifiedPathError(path)


def _write_bytes(data: bytes, path: Optional[str]):
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        with open(path, 'wb') as f:
            f.write(data)
    except OSError:
        raise InvalidUserSpecifiedPathError(path)


def _budget_path(tamset: str) -> Path:
    return Path(f"{tamset}.budget")


def _write_compiled(cs: CompiledSystem, out: Optional[str]):
    """The TAMSET to `out` (stdout when None) and its budget line to the `.budget` file next to it."""
    _write_text(TamsetCodec.serialize(cs.system), out)
    if out is not None:
        _write_text(cs.budget_line() + "\n", str(_budget_path(out)))


def _read_budget(tamset: str) -> Optional[Tuple[Budget, int]]:
    path = _budget_path(tamset)
    return Budget.parse_line(_read_text(str(path))) if path.is_file() else None


def _pixels(a: Arguments, tokens: Sequence[str]) -> List[Tuple[int, int]]:
    pixels = []
    for token in tokens:
        x, sep, y = token.partition(",")
        if sep != ",":
            a.fail()
        pixels.append((a.integer(x), a.integer(y)))
    return pixels


def _bits_from_text(a: Arguments, text: str) -> BitSequence:
    if text == "" or any(c not in "01" for c in text):
        a.fail()
    return BitCodec.parse(text)


def _reports() -> JSONOutputManager:
    return JSONOutputManager(WorkbenchConfig.results_output_path)


class Compile:
    USAGE = "compile <single-pixel n i j | multi-pixel n x,y ... | stripes n i j | square in.pat | " \
            "grid-repeat in.pat m> [-o out.tamset] [--no-certify]"

    @staticmethod
    def description_params() -> str:
        return "<class> [params] [-o out.tamset]"

    @staticmethod
    def description_short() -> str:
        return "Compiles a pattern class into a tile assembly system"

    @staticmethod
    def description_long() -> str:
        output.console_log_bold(Compile.USAGE)
        output.console_log("With -o, the line `BUDGET <symbolic> <cap> <actual>` goes to out.tamset.budget; "
                           "verify and stats read it from there.")

    @staticmethod
    def build(a: Arguments) -> CompiledSystem:
        if not a.positional:
            a.fail()
        kind, params = a.positional[0], a.positional[1:]
        certify = False if a.option("--no-certify") else None
        if kind in ("single-pixel", "stripes"):
            if len(params) != 3:
                a.fail()
            n, i, j = (a.integer(p) for p in params)
            return (compile_single_pixel if kind == "single-pixel" else compile_stripes)(n, i, j, certify)
        if kind == "multi-pixel":
            if len(params) < 1:
                a.fail()
            return compile_multi_pixel(a.integer(params[0]), _pixels(a, params[1:]), certify)
        if kind == "square" and len(params) == 1:
            return compile_square_pattern(_read(params[0], PatternCodec.read), certify)
        if kind == "grid-repeat" and len(params) == 2:
            return compile_grid_repeat(_read(params[0], PatternCodec.read), a.integer(params[1]), certify)
        a.fail()

    @staticmethod
    def execute(args=None) -> None:
        a = Arguments("compile", Compile.USAGE, args or [], values=("-o",), switches=("--no-certify",))
        cs = Compile.build(a)
        _write_compiled(cs, a.option("-o"))
        output.console_log_OK(f"{cs.blueprint.name}: {cs.tile_count} tile types, {cs.budget_line()}")


class Simulate:
    USAGE = "simulate in.tamset [--steps N] [--policy paper|random:SEED] [--trace out.trace] [--audit] [-o out.pat]"

    @staticmethod
    def description_params() -> str:
        return "in.tamset [--steps N] [--policy P] [--trace f] [-o out.pat]"

    @staticmethod
    def description_short() -> str:
        return "Grows a system and writes the pattern of the result"

    @staticmethod
    def description_long() -> str:
        output.console_log_bold(Simulate.USAGE)

    @staticmethod
    def execute(args=None) -> None:
        a = Arguments("simulate", Simulate.USAGE, args or [],
                      values=("--steps", "--policy", "--trace", "-o"), switches=("--audit",))
        path, = a.expect(1)
        system = _read(path, TamsetCodec.read)
        steps = a.int_option("--steps", WorkbenchConfig.default_max_steps)
        try:
            policy = parse_policy(a.option("--policy", "paper"))
        except ValueError:
            a.fail()

        result = simulate(system, steps, policy)
        if result.terminal:
            output.console_log_OK(f"terminal after {result.steps} attachments")
        else:
            output.console_log_WARNING(f"not terminal after {result.steps} attachments")

        if a.option("--trace") is not None:
            _write_text(dump_trace(ATAMRule(system), result.asm, len(system.seed)), a.option("--trace"))
        if a.option("--audit"):
            violations = audit_assembly(system, result.asm)
            if violations:
                output.console_log_FAIL(f"{len(violations)} placements below temperature, first {violations[0]}")
            else:
                output.console_log_OK("every placement met the temperature")

        tiles = system.tileset
        pattern = assembly_pattern(result.asm, lambda idx: tiles[idx].color, tiles.palette,
                                   z=1 if system.dim == 3 else None)
        if isinstance(pattern, NotRectangular):
            raise NotRectangularError(pattern.hole)
        _write_text(PatternCodec.serialize(pattern), a.option("-o"))


class Verify:
    USAGE = "verify in.tamset target.pat [--trials K] [--seed S] [--strict] [--report]"

    @staticmethod
    def description_params() -> str:
        return "in.tamset target.pat [--trials K] [--strict]"

    @staticmethod
    def description_short() -> str:
        return "Checks that every terminal assembly shows the target pattern"

    @staticmethod
    def description_long() -> str:
        output.console_log_bold(Verify.USAGE)
        output.console_log("Exit code 1 when some terminal assembly differs from the target.")

    @staticmethod
    def execute(args=None) -> None:
        a = Arguments("verify", Verify.USAGE, args or [], values=("--trials", "--seed"),
                      switches=("--strict", "--report"))
        tamset, target = a.expect(2)
        system = _read(tamset, TamsetCodec.read)
        pattern = _read(target, PatternCodec.read)
        trials = a.int_option("--trials", WorkbenchConfig.default_trials)
        if trials < 1:
            a.fail()

        report = verify_system(system, pattern, trials, a.int_option("--seed", None), bool(a.option("--strict")))
        output.emit(report.to_line())
        claimed = _read_budget(tamset)
        budget_failure = None
        if claimed is not None:
            budget, recorded = claimed
            count = len(system.tileset)
            output.emit(budget.line(count))
            if count != recorded:
                budget_failure = f"{count} tile types, {recorded} recorded next to the tile set"
            elif count > budget.cap:
                budget_failure = f"{count} tile types exceed the {budget.symbolic} cap {budget.cap}"
        if a.option("--report"):
            manager = _reports()
            manager.write_metadata(Metadata.of_system(system))
            output.console_log(f"report written to {manager.write_report('verify', report)}")
        if not report.passed:
            raise VerificationFailedError(report.to_line())
        if budget_failure is not None:
            raise VerificationFailedError(budget_failure)


class Render:
    USAGE = "render in.pat [-o out.ppm] [--colors file]"

    @staticmethod
    def description_params() -> str:
        return "in.pat [-o out.ppm] [--colors file]"

    @staticmethod
    def description_short() -> str:
        return "Writes a pattern as a plain-text PPM image"

    @staticmethod
    def description_long() -> str:
        output.console_log_bold(Render.USAGE)
        output.console_log("A colors file holds lines `<name> <r> <g> <b>`.")

    @staticmethod
    def execute(args=None) -> None:
        a = Arguments("render", Render.USAGE, args or [], values=("-o", "--colors"))
        path, = a.expect(1)
        pattern = _read(path, PatternCodec.read)
        colors = a.option("--colors")
        color_map = parse_color_map(_read_text(colors)) if colors is not None else None
        _write_bytes(export_ppm(pattern, color_map), a.option("-o"))


class Diag:
    USAGE = "diag <count | bits | pattern --size m | lift <bits> m | differs --size m> " \
            "[--universe spec] [--bits file] [--cell c] [-o out] [--report] [--no-certify]"

    @staticmethod
    def description_params() -> str:
        return "count|bits|pattern|lift|differs [--universe spec] [-o out]"

    @staticmethod
    def description_short() -> str:
        return "Strength-free enumeration, bit sequences and the diagonal pattern"

    @staticmethod
    def description_long() -> str:
        output.console_log_bold(Diag.USAGE)
        output.console_log("Universe spec: tiles=T,colors=C,coops=K,steps=S,pattsize=P,mode=directSF "
                           "or a preset (micro, micro-colors, micro-coops, micro-full, micro-column, paper).")

    @staticmethod
    def __bits(a: Arguments, universe: Universe) -> BitSequence:
        path = a.option("--bits")
        if path is not None:
            return _read(path, BitCodec.read)
        return compute_bits(universe, workers=resolve_workers())

    @staticmethod
    def execute(args=None) -> None:
        a = Arguments("diag", Diag.USAGE, args or [], values=("--universe", "--bits", "--cell", "--size", "-o"),
                      switches=("--report", "--no-certify"))
        if not a.positional:
            a.fail()
        sub = a.positional[0]
        universe = Universe.from_text(a.option("--universe", ""))
        out = a.option("-o")

        if sub == "count":
            a.expect(1)
            total = count_sf_systems(universe)
            if total != count_sf_systems_reference(universe):
                output.console_log_FAIL("closed form and reference count disagree")
            output.emit(str(total))
        elif sub == "bits":
            a.expect(1)
            bits = compute_bits(universe, workers=resolve_workers())
            if out is None:
                output.emit(BitCodec.serialize(bits))
            else:
                BitCodec.write(bits, out, out + ".prov")
            if a.option("--report"):
                output.console_log(f"report written to {_reports().write_report('bits', bits)}")
        elif sub == "pattern":
            a.expect(1)
            size = a.int_option("--size", None)
            if size is None or size < 1:
                a.fail()
            bits = Diag.__bits(a, universe)
            default_cell = len(bits) if a.option("--bits") else universe.pattern_size(count_sf_systems(universe))
            cell = a.int_option("--cell", default_cell)
            if cell < 2:
                a.fail()
            _write_text(PatternCodec.serialize(render_pn(bits.bits, cell, size)), out)
        elif sub == "lift":
            if len(a.positional) == 3:
                bits = _bits_from_text(a, a.positional[1])
                m = a.integer(a.positional[2])
            elif len(a.positional) == 2 and a.option("--bits") is not None:
                bits = _read(a.option("--bits"), BitCodec.read)
                m = a.integer(a.positional[1])
            else:
                a.fail()
            cs = compile_pn_lift(bits.bits, m, False if a.option("--no-certify") else None)
            _write_compiled(cs, out)
        elif sub == "differs":
            a.expect(1)
            size = a.int_option("--size", None)
            if size is None or size < 1:
                a.fail()
            bits = compute_bits(universe, workers=resolve_workers())
            pattern = render_pn(bits.bits, universe.pattern_size(count_sf_systems(universe)), size)
            report = pn_differs(pattern, universe, bits)
            line = (f"DIFFERS {'pass' if report.ok else 'fail'} witnesses={len(report.witnesses)} "
                    f"flips={report.flips} compared={report.compared}")
            output.emit(line)
            if a.option("--report"):
                output.console_log(f"report written to {_reports().write_report('differs', report.witnesses)}")
            if not report.ok:
                raise VerificationFailedError(line)
        else:
            a.fail()


class Stats:
    USAGE = "stats in.tamset"

    @staticmethod
    def description_params() -> str:
        return "in.tamset"

    @staticmethod
    def description_short() -> str:
        return "Tile and glue counts, budget line and fingerprint of a system"

    @staticmethod
    def description_long() -> str:
        output.console_log_bold(Stats.USAGE)

    @staticmethod
    def lines(system: TileAssemblySystem, claimed: Optional[Tuple[Budget, int]] = None) -> List[str]:
        inventory = system.tileset.glue_inventory()
        lines = [
            f"TILES {len(system.tileset)}",
            f"GLUES {len(inventory)}",
            f"LABELS {len({label for label, _ in inventory})}",
            f"TEMP {system.temperature}",
            f"DIM {system.dim}",
        ]
        if claimed is not None:
            budget, recorded = claimed
            lines.append(budget.line(recorded))
        lines.append(f"MD5 {Metadata.of_system(system).md5sum.hex()}")
        return lines

    @staticmethod
    def execute(args=None) -> None:
        a = Arguments("stats", Stats.USAGE, args or [])
        path, = a.expect(1)
        system = TamsetCodec.parse(_read_text(path))
        output.emit("\n".join(Stats.lines(system, _read_budget(path))))
        histogram = system.tileset.strength_histogram()
        output.console_log_tabulate_rows(sorted(histogram.items()), ["Strength", "Sides"])


class PatternCommand:
    USAGE = "pattern <single-pixel n i j | multi-pixel n x,y ... | stripes n i j | grid-repeat in.pat m | " \
            "random n seed | pn bits c m> [-o out.pat]"

    @staticmethod
    def description_params() -> str:
        return "<class> [params] [-o out.pat]"

    @staticmethod
    def description_short() -> str:
        return "Writes a generated pattern as PAT text"

    @staticmethod
    def description_long() -> str:
        output.console_log_bold(PatternCommand.USAGE)

    @staticmethod
    def build(a: Arguments) -> Pattern:
        if not a.positional:
            a.fail()
        kind, params = a.positional[0], a.positional[1:]
        if kind in ("single-pixel", "stripes") and len(params) == 3:
            n, i, j = (a.integer(p) for p in params)
            return (single_pixel if kind == "single-pixel" else stripes)(n, i, j)
        if kind == "multi-pixel" and len(params) >= 1:
            return multi_pixel(a.integer(params[0]), _pixels(a, params[1:]))
        if kind == "grid-repeat" and len(params) == 2:
            return grid_repeat(_read(params[0], PatternCodec.read), a.integer(params[1]))
        if kind == "random" and len(params) == 2:
            return random_two_colored(a.integer(params[0]), a.integer(params[1]))
        if kind == "pn" and len(params) == 3:
            c, m = a.integer(params[1]), a.integer(params[2])
            if c < 2 or m < 1:
                a.fail()
            return render_pn(_bits_from_text(a, params[0]).bits, c, m)
        a.fail()

    @staticmethod
    def execute(args=None) -> None:
        a = Arguments("pattern", PatternCommand.USAGE, args or [], values=("-o",))
        _write_text(PatternCodec.serialize(PatternCommand.build(a)), a.option("-o"))


class Audit:
    USAGE = "audit [--max-n N] [--report]"

    @staticmethod
    def description_params() -> str:
        return "[--max-n N] [--report]"

    @staticmethod
    def description_short() -> str:
        return "Tile counts against the claimed budgets for growing n"

    @staticmethod
    def description_long() -> str:
        output.console_log_bold(Audit.USAGE)
        output.console_log("Compiles square, single-pixel and stripes systems for n = 8, 16, ... up to N (default 64).")

    @staticmethod
    def execute(args=None) -> None:
        a = Arguments("audit", Audit.USAGE, args or [], values=("--max-n",), switches=("--report",))
        a.expect(0)
        max_n = a.int_option("--max-n", 64)
        sizes = [n for n in (8, 16, 32, 64, 128) if n <= max_n]
        if not sizes:
            a.fail()
        systems = [compile_square_pattern(random_two_colored(n, n), certify=False) for n in sizes]
        systems += [compile_single_pixel(n, n // 2, n // 3, certify=False) for n in sizes]
        systems += [compile_stripes(n, 3, 5, certify=False) for n in sizes if n >= 8]
        rows, growth = complexity_audit(systems)

        output.console_log_tabulate_rows(growth.values.tolist(), list(growth.columns))
        spread = ratio_spread(growth)
        output.console_log_tabulate_rows(spread.reset_index().values.tolist(), ["kind", "min ratio", "max ratio"])
        if a.option("--report"):
            output.console_log(f"report written to {_reports().write_report('audit', rows)}")


class ConfigShow:
    @staticmethod
    def description_params() -> str:
        return ""

    @staticmethod
    def description_short() -> str:
        return "Shows the active configuration"

    @staticmethod
    def description_long() -> str:
        output.console_log_bold("Prints every WorkbenchConfig attribute after command-line overrides.")

    @staticmethod
    def execute(args=None) -> None:
        Arguments("config", "config", args or []).expect(0)
        output.console_log_tabulate_class(WorkbenchConfig)


class Help:
    @staticmethod
    def description_params() -> str:
        return ""

    @staticmethod
    def description_short() -> str:
        return "An overview of all available commands"

    @staticmethod
    def description_long() -> str:
        print(BashHeaders.BOLD + "--- TILE_WORKBENCH HELP ---" + BashHeaders.ENDC)
        print("\n%-*s  %s" % (10, "Usage:", "python tile-workbench/ [global flags] <command> [params]"))
        print("%-*s  %s" % (10, "Global:", "--max-steps-cap N  --universe-cap N  --workers N  --quiet"))

        print("\nAvailable commands:\n")
        print(tabulate([(k, v.description_params(), v.description_short()) for k, v in CLIRegister.register.items()],
                       ["Command", "Parameters", "Description"]))

        print("\nHelp can be called for each command:")
        print(BashHeaders.WARNING + "example: " + BashHeaders.ENDC + "python tile-workbench/ diag help")

    @staticmethod
    def execute(args=None) -> None:
        Help.description_long()


class CLIRegister:
    register = {
        "compile":  Compile,
        "simulate": Simulate,
        "verify":   Verify,
        "render":   Render,
        "diag":     Diag,
        "stats":    Stats,
        "pattern":  PatternCommand,
        "audit":    Audit,
        "config":   ConfigShow,
        "help":     Help
    }

    GLOBAL_VALUES = {
        "--max-steps-cap":  "max_steps_hard_cap",
        "--universe-cap":   "universe_hard_cap",
        "--workers":        "worker_count",
    }

    @staticmethod
    def apply_global_flags(args: List[str]) -> List[str]:
        """Moves global flags into WorkbenchConfig and returns the remaining arguments."""
        rest = []
        i = 0
        while i < len(args):
            token = args[i]
            if token in CLIRegister.GLOBAL_VALUES:
                if i + 1 >= len(args) or not args[i + 1].isdigit():
                    raise UsageError(token, f"{token} <non-negative integer>")
                setattr(WorkbenchConfig, CLIRegister.GLOBAL_VALUES[token], int(args[i + 1]))
                i += 2
                continue
            if token == "--quiet":
                output.quiet = True
            else:
                rest.append(token)
            i += 1
        return rest

    @staticmethod
    def parse_command(args: List):
        args = [args[0]] + CLIRegister.apply_global_flags(list(args[1:]))
        if len(args) == 1:
            args.append('help')
        ConfigValidator.validate_config(WorkbenchConfig)

        command_class = CLIRegister.register.get(args[1])
        if command_class is None:
            raise CommandNotRecognisedError

        if len(args) > 2 and args[2] == 'help':
            command_class.description_long()
        else:
            command_class.execute(args[2:])
