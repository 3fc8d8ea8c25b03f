import unittest

from AssemblyEngine.AttachmentPolicy import UniformRandom
from AssemblyEngine.Simulator import simulate
from AssemblyEngine.TerminalEnumerator import Overflow, enumerate_terminal

from test.AssemblyEngine.fixtures import null_tile_system, sticky_system, choice_system, tau2_square


class TestEnumerateTerminal(unittest.TestCase):
    def test_single_null_tile(self):
        terminals = enumerate_terminal(null_tile_system(), 10, 10)
        self.assertEqual(len(terminals), 1)
        self.assertEqual(next(iter(terminals)), frozenset({((0, 0, 0), 0)}))

    def test_constructed_nondeterminism(self):
        terminals = enumerate_terminal(choice_system(), 100, 10)
        self.assertEqual(len(terminals), 2)

    def test_overflow_on_size(self):
        result = enumerate_terminal(sticky_system(), 10_000, 6)
        self.assertIsInstance(result, Overflow)

    def test_overflow_on_count(self):
        result = enumerate_terminal(sticky_system(), 50, 10_000)
        self.assertIsInstance(result, Overflow)

    def test_directed_square(self):
        terminals = enumerate_terminal(tau2_square(4), 100_000, 16)
        self.assertEqual(len(terminals), 1)
        self.assertEqual(len(next(iter(terminals))), 16)

    def test_random_runs_land_in_terminal_set(self):
        system = choice_system()
        terminals = enumerate_terminal(system, 100, 10)
        for seed in range(10):
            asm = simulate(system, 100, UniformRandom(seed)).asm
            self.assertIn(asm.frozen(), terminals)


if __name__ == '__main__':
    unittest.main()
