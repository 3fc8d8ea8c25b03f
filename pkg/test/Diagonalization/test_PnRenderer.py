import unittest

import numpy as np

from Diagonalization.PnRenderer import BOUNDARY, INTERIOR, decode_color, render_pn
from TileModel.Palette import Color


def boundary_mask(c: int, m: int) -> np.ndarray:
    offsets = np.arange(m) % c
    return (offsets[:, None] == 0) | (offsets[None, :] == 0)


def colors_where(pattern, mask):
    return {int(v) for v in np.asarray(pattern.rows())[mask]}


class TestRenderPn(unittest.TestCase):
    def test_leading_one(self):
        bits = [1, 1, 0, 1, 0, 1, 0, 1]
        p = render_pn(bits, 8, 16)
        mask = boundary_mask(8, 16)
        self.assertEqual(colors_where(p, mask), {Color.BLACK, Color.WHITE, Color.GREEN})
        self.assertEqual(colors_where(p, ~mask), set(INTERIOR))
        self.assertEqual(len(p.colors_present()), 7)

    def test_leading_zero(self):
        p = render_pn([0, 0, 1, 0, 1, 0, 1, 0], 8, 16)
        self.assertEqual(colors_where(p, boundary_mask(8, 16)), {Color.RED, Color.GREEN, Color.BLACK})

    def test_all_zeros(self):
        p = render_pn([0, 0], 2, 4)
        self.assertEqual(p.colors_present(), {Color.RED, Color.FUCHSIA})
        self.assertEqual(p.count_colors()["Red"], 12)

    def test_cells_are_read_back(self):
        bits = [1, 0, 0, 1]
        rows = np.asarray(render_pn(bits, 4, 8).rows())
        for r in range(8):
            for x in range(8):
                (rb, cb), boundary = decode_color(rows[r, x])
                self.assertEqual((rb, cb, boundary), (bits[r % 4], bits[x % 4], r % 4 == 0 or x % 4 == 0))

    def test_transpose_swaps_row_and_column_colors(self):
        swap = {Color.GREEN: Color.BLACK, Color.BLACK: Color.GREEN, Color.BLUE: Color.YELLOW,
                Color.YELLOW: Color.BLUE}
        for bits, c, m in (([1, 0, 1, 1], 4, 12), ([0, 1, 1, 0, 1, 0, 0, 1], 8, 24), ([1, 0, 1], 3, 7)):
            rows = np.asarray(render_pn(bits, c, m).rows())
            swapped = np.vectorize(lambda v: int(swap.get(v, v)))(rows)
            self.assertTrue(np.array_equal(rows.T, swapped), bits)

    def test_short_sequence_repeats_inside_a_cell(self):
        rows = np.asarray(render_pn([1, 0], 5, 5).rows())
        self.assertEqual([decode_color(v)[0][1] for v in rows[1]], [1, 0, 1, 0, 1])

    def test_boundary_and_interior_partition(self):
        self.assertEqual(len(BOUNDARY | INTERIOR), 8)
        self.assertFalse(BOUNDARY & INTERIOR)

    def test_bad_arguments(self):
        for bits, c, m in (([1, 0], 1, 4), ([], 2, 4), ([1], 2, 0)):
            with self.assertRaises(ValueError):
                render_pn(bits, c, m)
