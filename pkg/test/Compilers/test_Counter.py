import unittest

from AssemblyEngine.Simulator import simulate
from ConfigValidator.CustomErrors.CompilerErrors import SpecError
from Compilers.Blueprint import Blueprint
from Compilers.Counter import CounterField, CounterSpec, ZigZagCounter, make_counter
from TileModel.Direction import Direction
from TileModel.Palette import Color


def grow_counter(group):
    result = simulate(group.system, 4 * group.width * group.length + 16)
    return result


class TestCounterField(unittest.TestCase):
    def test_stop_starts_short_of_all_ones(self):
        f = CounterField.stop(8)
        self.assertEqual((f.width, f.start), (3, 0))
        self.assertEqual(CounterField.stop(5, 4).start, 11)

    def test_stop_too_narrow(self):
        with self.assertRaises(SpecError):
            CounterField.stop(9, 3)
        with self.assertRaises(SpecError):
            CounterField.stop(0)

    def test_wrap(self):
        f = CounterField.wrap(3, 1)
        self.assertEqual((f.width, f.reset, f.start), (2, 1, 2))
        self.assertEqual(CounterField.wrap(1).width, 0)


class TestMakeCounter(unittest.TestCase):
    def test_full_count(self):
        group = make_counter(CounterSpec(3, 0, 7))
        result = grow_counter(group)
        self.assertTrue(result.terminal)
        self.assertEqual(len(result.asm), 24)
        (x0, y0, _), (x1, y1, _) = result.asm.bounds
        self.assertEqual((x1 - x0 + 1, y1 - y0 + 1), (3, 8))
        for x in range(3):
            tile = group.system.tileset[result.asm.get((x, 7, 0))]
            self.assertEqual(tile.glue(Direction.N), group.done)

    def test_single_row(self):
        group = make_counter(CounterSpec(1, 0, 0))
        result = grow_counter(group)
        self.assertEqual(len(result.asm), 1)
        self.assertEqual(group.system.tileset[result.asm.get((0, 0, 0))].glue(Direction.N), group.done)

    def test_partial_range(self):
        group = make_counter(CounterSpec(3, 2, 5, orientation="east"))
        result = grow_counter(group)
        self.assertEqual(len(result.asm), 12)
        (x0, y0, _), (x1, y1, _) = result.asm.bounds
        self.assertEqual((x1 - x0 + 1, y1 - y0 + 1), (4, 3))

    def test_start_after_end(self):
        with self.assertRaises(SpecError):
            make_counter(CounterSpec(3, 5, 2))
        with self.assertRaises(SpecError):
            make_counter(CounterSpec(2, 0, 4))

    def test_black_rows(self):
        group = make_counter(CounterSpec(2, 0, 3, orientation="south", black_rows=frozenset({0, 3})))
        colors = {loc: group.system.tileset[idx].color for loc, idx in grow_counter(group).asm.items()}
        for x in range(2):
            self.assertEqual(colors[(x, 0, 0)], Color.BLACK)
            self.assertEqual(colors[(x, -1, 0)], Color.WHITE)
            self.assertEqual(colors[(x, -3, 0)], Color.BLACK)

    def test_arbitrary_black_rows(self):
        group = make_counter(CounterSpec(3, 0, 7, black_rows=frozenset({2, 5})))
        colors = {loc: group.system.tileset[idx].color for loc, idx in grow_counter(group).asm.items()}
        for y in range(8):
            expected = Color.BLACK if y in (2, 5) else Color.WHITE
            for x in range(3):
                self.assertEqual(colors[(x, y, 0)], expected, (x, y))

    def test_black_row_inside_a_partial_range(self):
        group = make_counter(CounterSpec(3, 2, 5, black_rows=frozenset({3})))
        colors = {loc: group.system.tileset[idx].color for loc, idx in grow_counter(group).asm.items()}
        self.assertEqual([colors[(0, y, 0)] for y in range(4)], [Color.WHITE, Color.BLACK, Color.WHITE, Color.WHITE])

    def test_black_rows_must_be_counts(self):
        with self.assertRaises(SpecError):
            make_counter(CounterSpec(3, 1, 6, black_rows=frozenset({7})))

    def test_ticks_on_every_row(self):
        group = make_counter(CounterSpec(2, 0, 3))
        asm = grow_counter(group).asm
        lo, hi = group.ticks
        for y in range(4):
            self.assertEqual(group.system.tileset[asm.get((0, y, 0))].glue(Direction.W), lo)
            self.assertEqual(group.system.tileset[asm.get((1, y, 0))].glue(Direction.E), hi)

    def test_namespaces_stay_apart(self):
        for ns in ("alpha", "beta"):
            group = make_counter(CounterSpec(3, 1, 6, namespace=ns))
            labels = {g.label for t in group.system.tileset for g in t.glues if not g.is_null}
            self.assertTrue(all(label.startswith(f"{ns}:") for label in labels))


class TestZigZagCounter(unittest.TestCase):
    def test_wrap_marks_rows(self):
        counter = ZigZagCounter("z", [CounterField.wrap(3, 1), CounterField.stop(10)])
        bp = Blueprint("wrap", 2)
        layout = counter.lay_out(bp, (0, 0, 0), Direction.E, Direction.N, "z",
                                 color=lambda u, flags, initial: Color.BLACK if flags[0] else Color.WHITE)
        bp.set_seed((0, 0, 0))
        bp.compile()
        marked = [v for v in range(10) if bp.color_at(layout.at(0, v)) == Color.BLACK]
        self.assertEqual(marked, [2, 5, 8])

    def test_exit_glue(self):
        counter = ZigZagCounter("x", [CounterField.stop(3, 2)])
        bp = Blueprint("exit", 2)
        layout = counter.lay_out(bp, (0, 0, 0), Direction.E, Direction.N, "x", exit_at="lo")
        self.assertEqual(bp.glue_at(layout.at(0, 2), Direction.N).strength, 2)
        self.assertEqual(bp.glue_at(layout.at(1, 2), Direction.N).label, "x:done")

    def test_needs_one_stop_field(self):
        with self.assertRaises(SpecError):
            ZigZagCounter("bad", [CounterField.wrap(4)])
