import unittest

import numpy as np

from AssemblyEngine.AttachmentPolicy import UniformRandom
from ConfigValidator.CustomErrors.PatternErrors import NotSquareError, NotTwoColoredError
from Compilers.SquarePattern import compile_square_pattern
from Patterns.Generators import random_two_colored
from Patterns.Pattern import Pattern
from TileModel.Palette import Color

from test.Compilers.helpers import grow


class TestSquareLayout(unittest.TestCase):
    def setUp(self):
        self.compiled = compile_square_pattern(random_two_colored(16, 7))

    def test_seed_position(self):
        (loc, _), = self.compiled.system.seed
        self.assertEqual(loc, (4, 0, 0))
        self.assertEqual(self.compiled.system.temperature, 1)

    def test_bottom_row_reaches_fourteen(self):
        row = [loc for loc, (_, role) in self.compiled.blueprint.cells.items() if role == "sk-row"]
        self.assertEqual(max(x for x, _, _ in row), 14)
        self.assertEqual(min(x for x, _, _ in row), 4)

    def test_rib_families(self):
        self.assertEqual(len(self.compiled.rib_family("east")), 30)
        self.assertEqual(len(self.compiled.rib_family("west")), 30)

    def test_rib_families_scale_with_n(self):
        for n in (8, 16, 32):
            compiled = compile_square_pattern(Pattern.filled(n, n), certify=False)
            self.assertEqual(len(compiled.rib_family("east")), 2 * n - 2)
            self.assertEqual(len(compiled.rib_family("west")), 2 * n - 2)


class TestCompileSquarePattern(unittest.TestCase):
    def test_random_patterns(self):
        for seed in range(8):
            target = random_two_colored(16, seed)
            terminal, pattern = grow(compile_square_pattern(target))
            self.assertTrue(terminal)
            self.assertEqual(pattern, target, seed)

    def test_single_colored(self):
        for color in (Color.WHITE, Color.BLACK):
            target = Pattern.filled(16, 16, color)
            terminal, pattern = grow(compile_square_pattern(target))
            self.assertEqual(pattern, target)

    def test_other_sizes(self):
        for n in (2, 3, 5, 8, 11):
            target = random_two_colored(n, n)
            terminal, pattern = grow(compile_square_pattern(target))
            self.assertTrue(terminal)
            self.assertEqual(pattern, target, n)

    def test_random_order(self):
        compiled = compile_square_pattern(random_two_colored(8, 3))
        for seed in range(5):
            terminal, pattern = grow(compiled, UniformRandom(seed))
            self.assertEqual(pattern, compiled.target)

    def test_one_cell(self):
        compiled = compile_square_pattern(Pattern.filled(1, 1, Color.BLACK))
        self.assertEqual(compiled.tile_count, 1)

    def test_budget_ratio_bounded(self):
        for n in (8, 16, 32, 64):
            compiled = compile_square_pattern(random_two_colored(n, 1), certify=False)
            self.assertTrue(compiled.within_budget, n)

    def test_rejects_bad_patterns(self):
        with self.assertRaises(NotSquareError):
            compile_square_pattern(Pattern(np.zeros((3, 4))))
        with self.assertRaises(NotTwoColoredError):
            compile_square_pattern(Pattern(np.full((4, 4), Color.RED)))
