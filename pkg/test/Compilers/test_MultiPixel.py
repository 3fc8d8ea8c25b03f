import unittest

from AssemblyEngine.AttachmentPolicy import UniformRandom
from ConfigValidator.CustomErrors.PatternErrors import SeparationViolationError
from Compilers.MultiPixel import CombRouter, band_rows, compile_multi_pixel
from Patterns.Generators import multi_pixel, single_pixel

from test.Compilers.helpers import grow


class TestCombRouter(unittest.TestCase):
    def test_band_rows(self):
        self.assertEqual(band_rows(16, 4), [(0, 4), (4, 4), (8, 4), (12, 4)])
        self.assertEqual(band_rows(10, 4), [(0, 4), (4, 6)])
        self.assertEqual(band_rows(1, 1), [(0, 1)])

    def test_branches_and_gaps(self):
        router = CombRouter(16, [(2, 2), (10, 2), (2, 12)])
        self.assertEqual([(b.y0, b.columns) for b in router.bands], [(0, [2, 10]), (12, [2])])
        self.assertEqual([(g.y0, g.length, g.band_below) for g in router.gaps], [(4, 8, True)])

    def test_bottom_gap_feeds_upward(self):
        router = CombRouter(16, [(5, 5)])
        self.assertEqual([(g.y0, g.length, g.band_below) for g in router.gaps], [(0, 4, False), (8, 8, True)])
        band, = router.bands
        self.assertEqual((band.below, band.above), ("fill:g0", "fill:g1"))


class TestCompileMultiPixel(unittest.TestCase):
    def test_one_pixel(self):
        terminal, pattern = grow(compile_multi_pixel(16, [(5, 5)]))
        self.assertTrue(terminal)
        self.assertEqual(pattern, single_pixel(16, 5, 5))

    def test_three_pixels(self):
        pixels = [(2, 2), (10, 2), (2, 12)]
        compiled = compile_multi_pixel(16, pixels)
        terminal, pattern = grow(compiled)
        self.assertTrue(terminal)
        self.assertEqual(pattern, multi_pixel(16, pixels))
        for seed in range(3):
            self.assertEqual(grow(compiled, UniformRandom(seed))[1], compiled.target)

    def test_diagonal_within_budget(self):
        pixels = [(3, 3), (10, 10), (17, 17), (24, 24)]
        compiled = compile_multi_pixel(32, pixels)
        self.assertLessEqual(compiled.tile_count, 4 * 24 * 5 + 96)
        self.assertTrue(compiled.within_budget)
        self.assertEqual(grow(compiled)[1], multi_pixel(32, pixels))

    def test_edges_and_corners(self):
        pixels = [(0, 0), (15, 0), (0, 15), (15, 15), (7, 8)]
        terminal, pattern = grow(compile_multi_pixel(16, pixels))
        self.assertEqual(pattern, multi_pixel(16, pixels))

    def test_uneven_top_band(self):
        pixels = [(1, 9), (6, 4)]
        terminal, pattern = grow(compile_multi_pixel(10, pixels))
        self.assertEqual(pattern, multi_pixel(10, pixels))

    def test_no_pixels(self):
        terminal, pattern = grow(compile_multi_pixel(8, []))
        self.assertEqual(pattern, multi_pixel(8, []))

    def test_separation(self):
        with self.assertRaises(SeparationViolationError):
            compile_multi_pixel(16, [(2, 2), (3, 3)])
