import unittest

from Patterns.AssemblyPattern import NotRectangular, assembly_pattern
from Patterns.Pattern import Pattern
from TileModel.Assembly import Assembly


class TestAssemblyPattern(unittest.TestCase):
    colors = staticmethod(lambda idx: [0, 1][idx])

    def test_single_tile(self):
        p = assembly_pattern(Assembly({(5, -3, 0): 1}), self.colors)
        self.assertEqual(p, Pattern.from_rows([[1]]))

    def test_translation(self):
        asm = Assembly({(3, 3, 0): 1, (4, 3, 0): 0, (3, 4, 0): 0, (4, 4, 0): 0})
        p = assembly_pattern(asm, self.colors)
        self.assertEqual(p.color(0, 0), 1)
        self.assertEqual(p.origin, (0, 0))
        raw = assembly_pattern(asm, self.colors, normalize=False)
        self.assertEqual(raw.origin, (3, 3))
        self.assertEqual(raw, p)

    def test_l_shape(self):
        asm = Assembly({(0, 0, 0): 0, (1, 0, 0): 0, (0, 1, 0): 0})
        self.assertEqual(assembly_pattern(asm, self.colors), NotRectangular((1, 1)))

    def test_plane_selection(self):
        asm = Assembly({(0, 0, 0): 0, (1, 0, 0): 0, (1, 0, 1): 1})
        p = assembly_pattern(asm, self.colors, z=1)
        self.assertEqual((p.width, p.height, p.color(0, 0)), (1, 1, 1))


if __name__ == '__main__':
    unittest.main()
