import unittest

import psutil

from AssemblyEngine.TrialPool import WorkerFailure, map_in_order, resolve_workers
from ConfigValidator.Config.WorkbenchConfig import WorkbenchConfig


def square(x: int) -> int:
    return x * x


def fragile(x: int) -> int:
    if x == 3:
        raise ValueError("three is not allowed")
    return x


class TestTrialPool(unittest.TestCase):
    def test_inline_keeps_order(self):
        self.assertEqual(list(map_in_order(square, ((k,) for k in range(6)))), [0, 1, 4, 9, 16, 25])

    def test_pool_keeps_order(self):
        self.assertEqual(list(map_in_order(square, [(k,) for k in range(40)], workers=3, chunksize=4)),
                         [k * k for k in range(40)])

    def test_inline_errors_propagate(self):
        with self.assertRaises(ValueError):
            list(map_in_order(fragile, [(k,) for k in range(5)]))

    def test_pool_errors_carry_the_remote_traceback(self):
        with self.assertRaises(WorkerFailure) as raised:
            list(map_in_order(fragile, [(k,) for k in range(5)], workers=2, chunksize=1))
        self.assertIn("ValueError: three is not allowed", str(raised.exception))
        self.assertIn("fragile", str(raised.exception))

    def test_resolve_workers(self):
        self.assertEqual(resolve_workers(4), 4)
        self.assertEqual(resolve_workers(-2), 1)
        self.assertEqual(resolve_workers(0), psutil.cpu_count(logical=False) or 1)
        saved = WorkbenchConfig.worker_count
        try:
            WorkbenchConfig.worker_count = 2
            self.assertEqual(resolve_workers(), 2)
        finally:
            WorkbenchConfig.worker_count = saved


if __name__ == '__main__':
    unittest.main()
