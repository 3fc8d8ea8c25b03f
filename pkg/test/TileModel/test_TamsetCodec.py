import unittest

from ConfigValidator.CustomErrors.ModelErrors import ParseError, ValidationError
from TileModel.Codec.TamsetCodec import TamsetCodec
from TileModel.Glue import Glue
from TileModel.TileAssemblySystem import TileAssemblySystem
from TileModel.TileSet import TileSet
from TileModel.TileType import TileType

ONE_TILE = (
    "TAMSET v1\n"
    "TEMP 1\n"
    "TILE t COLOR 0 N -|0 E a|1 S -|0 W a|1\n"
    "SEED t 0 0\n"
)


class TestTamsetCodec(unittest.TestCase):
    def test_one_tile_system_is_four_lines(self):
        tiles = TileSet([TileType.of("t", 0, E=Glue("a", 1), W=Glue("a", 1))])
        system = TileAssemblySystem(tiles, [((0, 0, 0), 0)], 1)
        text = TamsetCodec.serialize(system)
        self.assertEqual(text, ONE_TILE)
        self.assertEqual(len(text.splitlines()), 4)
        self.assertEqual(TamsetCodec.parse(text), system)

    def test_canonicalisation(self):
        verbose = (
            "TAMSET v1\n"
            "# comment\n"
            "DIM 2\n"
            "TEMP 1\n"
            "PALETTE 0=White 1=Black 2=Red 3=Green 4=Aqua 5=Blue 6=Yellow 7=Fuchsia\n"
            "\n"
            "TILE t COLOR 0 N -|0 E a|1 S -|0 W a|1\n"
            "SEED t 0 0\n"
        )
        self.assertEqual(TamsetCodec.serialize(TamsetCodec.parse(verbose)), ONE_TILE)

    def test_barely_3d_round_trip(self):
        text = (
            "TAMSET v1\n"
            "DIM 3\n"
            "TEMP 2\n"
            "PALETTE 0=White 1=Black\n"
            "TILE a COLOR 1 N -|0 E -|0 S -|0 W -|0 U up|2 D -|0\n"
            "TILE b COLOR 0 N -|0 E -|0 S -|0 W -|0 U -|0 D up|2\n"
            "SEED a 3 -2 0\n"
        )
        system = TamsetCodec.parse(text)
        self.assertEqual(system.dim, 3)
        self.assertEqual(system.seed, (((3, -2, 0), 0),))
        self.assertEqual(TamsetCodec.serialize(system), text)

    def test_duplicate_names(self):
        text = ONE_TILE.replace("SEED", "TILE t COLOR 1 N -|0 E -|0 S -|0 W -|0\nSEED")
        with self.assertRaises(ValidationError):
            TamsetCodec.parse(text)

    def test_plane_violation_in_2d(self):
        with self.assertRaises(ValidationError):
            TamsetCodec.parse(ONE_TILE.replace("SEED t 0 0", "SEED t 0 0 1"))
        with self.assertRaises(ValidationError):
            TamsetCodec.parse(ONE_TILE.replace("W a|1", "W a|1 U b|1 D -|0"))

    def test_bad_temperature(self):
        with self.assertRaises(ValidationError):
            TamsetCodec.parse(ONE_TILE.replace("TEMP 1", "TEMP 0"))

    def test_parse_error_carries_line(self):
        try:
            TamsetCodec.parse(ONE_TILE.replace("E a|1", "E a1"))
            self.assertTrue(False)
        except ParseError as e:
            self.assertEqual(e.line_number, 3)

    def test_bad_header(self):
        with self.assertRaises(ParseError):
            TamsetCodec.parse("TAMSET v2\nTEMP 1\n")


if __name__ == '__main__':
    unittest.main()
