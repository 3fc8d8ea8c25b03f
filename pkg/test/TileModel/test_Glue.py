import unittest

from ConfigValidator.CustomErrors.BaseError import BaseError
from TileModel.Glue import Glue, NULL_GLUE, glue_binds


class TestGlueBinds(unittest.TestCase):
    def test_equal_glues_bind_with_their_strength(self):
        self.assertEqual(glue_binds(Glue("a", 2), Glue("a", 2)), 2)

    def test_unequal_strengths_do_not_bind(self):
        self.assertEqual(glue_binds(Glue("a", 2), Glue("a", 1)), 0)

    def test_null_glue_never_binds(self):
        self.assertEqual(glue_binds(NULL_GLUE, NULL_GLUE), 0)
        self.assertEqual(glue_binds(Glue("a", 0), Glue("a", 0)), 0)

    def test_symmetry(self):
        glues = [NULL_GLUE, Glue("a", 1), Glue("a", 2), Glue("b", 1), Glue("a", 0)]
        for g1 in glues:
            for g2 in glues:
                self.assertEqual(glue_binds(g1, g2), glue_binds(g2, g1))


class TestGlueValidation(unittest.TestCase):
    def test_empty_label_requires_zero_strength(self):
        try:
            Glue("", 1)
            self.assertTrue(False)
        except BaseError:
            pass

    def test_label_without_separators(self):
        for label in ("a b", "a|b", "-"):
            with self.assertRaises(BaseError):
                Glue(label, 1)

    def test_clamp(self):
        self.assertEqual(Glue("a", 5).clamped(2), Glue("a", 2))
        self.assertEqual(Glue("a", 1).clamped(2), Glue("a", 1))

    def test_text(self):
        self.assertEqual(NULL_GLUE.to_text(), "-|0")
        self.assertEqual(Glue("x:1", 2).to_text(), "x:1|2")


if __name__ == '__main__':
    unittest.main()
