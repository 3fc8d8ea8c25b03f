import unittest

from AssemblyEngine.AttachmentPolicy import UniformRandom
from ConfigValidator.CustomErrors.PatternErrors import NotTwoColoredError, OutOfRangeError
from Compilers.CompiledSystem import log_term
from Compilers.GridRepeat import Frame, Spines, compile_grid_repeat
from Patterns.Generators import grid_repeat, random_two_colored, single_pixel
from Patterns.Pattern import Pattern
from TileModel.Direction import Direction
from TileModel.Palette import Color

from test.Compilers.helpers import grow


class TestSpines(unittest.TestCase):
    def test_strips_cover_the_block(self):
        for n in (1, 2, 4, 5, 8, 16, 33):
            spines = Spines(n)
            covered = [a + t for a, arm in zip(spines.starts, spines.arms) for t in range(arm + 1)]
            self.assertEqual(covered, list(range(n)), n)
            self.assertTrue(all(arm <= spines.k for arm in spines.arms), n)

    def test_eight_wide_block(self):
        spines = Spines(8)
        self.assertEqual((spines.k, spines.count, spines.starts, spines.arms), (3, 2, [0, 4], [3, 3]))
        self.assertEqual(spines.hub(3, 2), (12, 16))

    def test_counter_depth_in_blocks(self):
        spines = Spines(4)
        self.assertEqual([spines.blocks_for(rows) for rows in (1, 2, 4, 5, 16, 17, 64)], [1, 1, 1, 2, 2, 3, 3])

    def test_transposed_frame(self):
        frame = Frame(True, (1, 2))
        self.assertEqual(frame.at(3, 4), (6, 4, 0))
        self.assertEqual(frame.turn(Direction.E), Direction.N)
        self.assertEqual(frame.rib_prefix, "gn")


class TestCompileGridRepeat(unittest.TestCase):
    def test_single_pixel_three_times(self):
        source = single_pixel(4, 1, 2)
        compiled = compile_grid_repeat(source, 3)
        terminal, pattern = grow(compiled)
        self.assertTrue(terminal)
        self.assertEqual((pattern.width, pattern.height), (12, 12))
        self.assertEqual(pattern, grid_repeat(source, 3))

    def test_once_is_the_source(self):
        source = random_two_colored(4, 2)
        terminal, pattern = grow(compile_grid_repeat(source, 1))
        self.assertEqual(pattern, source)

    def test_random_sources(self):
        for m in (1, 2, 3, 5):
            source = random_two_colored(4, 10 + m)
            compiled = compile_grid_repeat(source, m)
            self.assertEqual(grow(compiled)[1], grid_repeat(source, m), m)
            self.assertEqual(grow(compiled, UniformRandom(m))[1], compiled.target, m)

    def test_small_blocks(self):
        for n in (1, 2, 5):
            source = random_two_colored(n, n)
            self.assertEqual(grow(compile_grid_repeat(source, 2))[1], grid_repeat(source, 2), n)

    def test_eight_wide_source(self):
        source = random_two_colored(8, 3)
        compiled = compile_grid_repeat(source, 4)
        self.assertEqual(grow(compiled)[1], grid_repeat(source, 4))
        self.assertTrue(compiled.within_budget)

    def test_within_budget(self):
        for m in (1, 2, 9, 40):
            self.assertTrue(compile_grid_repeat(random_two_colored(4, m), m, certify=False).within_budget, m)

    def test_count_constant_for_equal_counter_widths(self):
        # 33 and 40 both give two 6-bit counters; only the shafts of their first rows can differ
        source = random_two_colored(4, 4)
        counts = [compile_grid_repeat(source, m, certify=False).tile_count for m in (33, 40)]
        self.assertLessEqual(abs(counts[0] - counts[1]), 2 * 6 * (4 - 1))

    def test_count_grows_with_log_m(self):
        source = random_two_colored(4, 4)
        spines = Spines(4)
        counts = {m: compile_grid_repeat(source, m, certify=False).tile_count for m in (4, 64)}
        self.assertLessEqual(counts[64] - counts[4], 2 * log_term(64) * (4 + spines.k + 1))

    def test_rib_families(self):
        compiled = compile_grid_repeat(random_two_colored(8, 1), 2, certify=False)
        self.assertEqual(len(compiled.rib_family("north")), 2 + 4 + 8)
        self.assertEqual(len(compiled.rib_family("east")), 2 + 4 + 8)

    def test_rejects_bad_input(self):
        with self.assertRaises(OutOfRangeError):
            compile_grid_repeat(Pattern.filled(4, 4), 0)
        with self.assertRaises(NotTwoColoredError):
            compile_grid_repeat(Pattern.filled(4, 4, Color.GREEN), 2)
