import unittest

from ConfigValidator.CustomErrors.ModelErrors import OccupiedLocationError
from TileModel.Assembly import Assembly
from TileModel.Attachment import attachment_strength, legal_tiles
from TileModel.Glue import Glue
from TileModel.TileAssemblySystem import TileAssemblySystem
from TileModel.TileSet import TileSet
from TileModel.TileType import TileType


def tau2_system():
    a, b = Glue("a", 1), Glue("b", 1)
    tiles = TileSet([
        TileType.of("seed", 0, E=Glue("s", 2), N=a),
        TileType.of("east", 0, W=Glue("s", 2), N=b),
        TileType.of("north", 0, S=a),
        TileType.of("coop", 1, W=a, S=b),
        TileType.of("half", 0, S=b),
    ])
    return TileAssemblySystem(tiles, [((0, 0, 0), 0)], 2)


class TestAttachmentStrength(unittest.TestCase):
    def setUp(self):
        self.system = tau2_system()
        self.asm = self.system.seed_assembly()

    def test_single_strength_two_neighbor(self):
        self.assertEqual(attachment_strength(self.system, self.asm, (1, 0, 0), self.system.tileset[1]), 2)

    def test_single_strength_one_neighbor_is_illegal(self):
        self.assertEqual(attachment_strength(self.system, self.asm, (0, 1, 0), self.system.tileset[2]), 1)
        self.assertEqual(legal_tiles(self.system, self.asm, (0, 1, 0)), [])

    def test_cooperative_binding(self):
        asm = Assembly({(0, 0, 0): 0, (1, 0, 0): 1, (0, 1, 0): 3})
        asm2 = Assembly({(0, 0, 0): 0, (1, 0, 0): 1})
        self.assertEqual(legal_tiles(self.system, asm2, (1, 1, 0)), [])
        coop = self.system.tileset[3]
        self.assertEqual(attachment_strength(self.system, asm, (1, 1, 0), coop), 1)

    def test_two_strength_one_neighbors_sum_to_tau(self):
        a = Glue("a", 1)
        tiles = TileSet([
            TileType.of("left", 0, E=a),
            TileType.of("below", 0, N=a),
            TileType.of("corner", 0, W=a, S=a),
        ])
        system = TileAssemblySystem(tiles, [((0, 1, 0), 0)], 2)
        asm = Assembly({(0, 1, 0): 0, (1, 0, 0): 1})
        self.assertEqual(attachment_strength(system, asm, (1, 1, 0), tiles[2]), 2)
        self.assertEqual(legal_tiles(system, asm, (1, 1, 0)), [2])

    def test_occupied_location(self):
        with self.assertRaises(OccupiedLocationError):
            attachment_strength(self.system, self.asm, (0, 0, 0), self.system.tileset[1])

    def test_monotone_in_neighbors(self):
        a = Glue("a", 1)
        tiles = TileSet([TileType.of("t", 0, N=a, E=a, S=a, W=a)])
        system = TileAssemblySystem(tiles, [((0, 0, 0), 0)], 2)
        asm = Assembly({(0, 0, 0): 0})
        before = attachment_strength(system, asm, (1, 1, 0), tiles[0])
        asm.place((1, 0, 0), 0)
        middle = attachment_strength(system, asm, (1, 1, 0), tiles[0])
        asm.place((0, 1, 0), 0)
        after = attachment_strength(system, asm, (1, 1, 0), tiles[0])
        self.assertLessEqual(before, middle)
        self.assertLessEqual(middle, after)
        self.assertEqual(after, 2)


class TestSystemNormalisation(unittest.TestCase):
    def test_strengths_clamped_to_temperature(self):
        tiles = TileSet([TileType.of("t", 0, E=Glue("a", 5), W=Glue("a", 5))])
        system = TileAssemblySystem(tiles, [((0, 0, 0), 0)], 2)
        self.assertEqual(system.tileset[0].glue_map()[list(system.sides)[1]], Glue("a", 2))

    def test_bad_temperature(self):
        tiles = TileSet([TileType.of("t", 0)])
        for tau in (0, -1, 1.5):
            with self.assertRaises(Exception):
                TileAssemblySystem(tiles, [((0, 0, 0), 0)], tau)


if __name__ == '__main__':
    unittest.main()
