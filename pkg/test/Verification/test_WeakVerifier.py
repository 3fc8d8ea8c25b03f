import unittest

from AssemblyEngine.AttachmentPolicy import PaperOrder, UniformRandom
from Compilers.SinglePixel import compile_single_pixel
from Compilers.SquarePattern import compile_square_pattern
from Compilers.Stripes import compile_stripes
from ConfigValidator.CustomErrors.VerifyErrors import NonTerminatingError
from Diagonalization.PnLift import compile_pn_lift
from Patterns.Generators import random_two_colored, single_pixel
from Patterns.Pattern import Pattern
from TileModel.Palette import Color
from TileModel.TileAssemblySystem import TileAssemblySystem
from TileModel.TileSet import TileSet
from TileModel.TileType import TileType
from Verification.VerifyReport import Mismatch, VerifyReport
from Verification.WeakVerifier import trial_policies, verify_system, verify_weak

from test.AssemblyEngine.fixtures import choice_system, sticky_system


def white_dot(*extra: TileType) -> TileAssemblySystem:
    return TileAssemblySystem(TileSet([TileType.of("dot", Color.WHITE), *extra]), [((0, 0, 0), 0)], 1)


class TestVerifyReport(unittest.TestCase):
    def test_pass_line(self):
        report = VerifyReport(20, True, True, 1, None, False)
        self.assertEqual(report.to_line(), "VERIFY pass trials=20 distinct=1 exhaustive=0")

    def test_fail_line(self):
        report = VerifyReport(3, True, False, 2, Mismatch((3, 4), Color.WHITE, Color.BLACK), True)
        self.assertEqual(report.to_line(), "VERIFY fail trials=3 distinct=2 exhaustive=1 mismatch=3,4")

    def test_match_needs_terminal(self):
        with self.assertRaises(ValueError):
            VerifyReport(1, False, True, 1, None, False)


class TestTrialPolicies(unittest.TestCase):
    def test_paper_order_first(self):
        policies = trial_policies(4, 7)
        self.assertEqual(policies[0], PaperOrder())
        self.assertTrue(all(isinstance(p, UniformRandom) for p in policies[1:]))
        self.assertEqual(policies, trial_policies(4, 7))
        self.assertNotEqual(policies, trial_policies(4, 8))


class TestVerify(unittest.TestCase):
    def test_stripes(self):
        report = verify_weak(compile_stripes(16, 3, 5), trials=20)
        self.assertTrue(report.all_match)
        self.assertEqual(report.distinct_terminals, 1)
        self.assertEqual(report.trials, 20)
        self.assertFalse(report.exhaustive)

    def test_wrong_target(self):
        cs = compile_single_pixel(8, 3, 3)
        report = verify_system(cs.system, single_pixel(8, 3, 4), trials=3)
        self.assertFalse(report.passed)
        self.assertIn(report.first_mismatch.location, {(3, 3), (3, 4)})
        self.assertTrue(report.to_line().startswith("VERIFY fail"))

    def test_one_white_tile_strict(self):
        report = verify_system(white_dot(), Pattern.filled(1, 1, Color.WHITE), strict=True)
        self.assertTrue(report.passed)
        self.assertTrue(report.exhaustive)
        self.assertEqual((report.trials, report.distinct_terminals), (1, 1))

    def test_strict_rejects_foreign_colors(self):
        system = white_dot(TileType.of("unused", Color.RED))
        target = Pattern.filled(1, 1, Color.WHITE)
        self.assertTrue(verify_system(system, target).passed)
        report = verify_system(system, target, strict=True)
        self.assertFalse(report.passed)
        self.assertEqual(report.first_mismatch, Mismatch(None, None, Color.RED))
        self.assertNotIn("mismatch=", report.to_line())

    def test_square_pattern_strict(self):
        report = verify_weak(compile_square_pattern(random_two_colored(8, 3)), trials=4, strict=True)
        self.assertTrue(report.passed)
        self.assertEqual(report.distinct_terminals, 1)

    def test_two_terminals(self):
        report = verify_system(choice_system(), Pattern.filled(2, 1, Color.WHITE))
        self.assertTrue(report.exhaustive)
        self.assertEqual(report.distinct_terminals, 2)
        self.assertFalse(report.all_match)
        self.assertEqual(report.first_mismatch, Mismatch((1, 0), Color.WHITE, Color.BLACK))

    def test_endless_growth(self):
        with self.assertRaises(NonTerminatingError):
            verify_system(sticky_system(), Pattern.filled(1, 1, Color.WHITE), trials=2)

    def test_workers_do_not_change_the_report(self):
        cs = compile_stripes(8, 2, 3)
        self.assertEqual(verify_weak(cs, trials=4, workers=2), verify_weak(cs, trials=4, workers=1))

    def test_lifted_plane(self):
        report = verify_weak(compile_pn_lift([1, 0], 6), trials=3)
        self.assertTrue(report.passed)
