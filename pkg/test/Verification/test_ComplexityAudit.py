import math
import unittest

from Compilers.SinglePixel import compile_single_pixel
from Compilers.SquarePattern import compile_square_pattern
from Compilers.Stripes import compile_stripes
from Patterns.Generators import random_two_colored
from Verification.ComplexityAudit import AuditRow, complexity_audit, growth_ratio, ratio_spread


class TestComplexityAudit(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        systems = [compile_square_pattern(random_two_colored(n, n), certify=False) for n in (8, 16, 32)]
        systems += [compile_single_pixel(n, 1, 1, certify=False) for n in (8, 64)]
        systems.append(compile_stripes(16, 3, 5, certify=False))
        cls.rows, cls.growth = complexity_audit(systems)

    def test_one_row_per_system(self):
        self.assertEqual(len(self.rows), 6)
        self.assertEqual(len(self.growth), 6)
        self.assertTrue(all(r.within_budget for r in self.rows))

    def test_square_ratio_bounded(self):
        square = self.growth[self.growth.kind == "square"]
        self.assertEqual(list(square.n), [8, 16, 32])
        self.assertTrue((square.ratio <= 11).all())

    def test_single_pixel_growth(self):
        pixel = self.growth[self.growth.kind == "single-pixel"]
        small, large = list(pixel.tiles)
        self.assertLessEqual(large / small, 3)
        self.assertEqual(list(pixel.increase)[1], large - small)

    def test_spread_covers_tracked_kinds(self):
        spread = ratio_spread(self.growth)
        self.assertEqual(sorted(spread.index), ["single-pixel", "square", "stripes"])

    def test_over_budget(self):
        self.assertFalse(AuditRow("x", "square", 8, 101, 100).within_budget)
        self.assertTrue(AuditRow("x", "square", 8, 100, 100).within_budget)

    def test_untracked_kind(self):
        self.assertTrue(math.isnan(growth_ratio("pn-lift", 16, 300)))
        self.assertEqual(growth_ratio("stripes", 16, 40), 10)
