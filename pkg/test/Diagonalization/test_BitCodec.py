import os
import tempfile
import unittest

from ConfigValidator.CustomErrors.ModelErrors import ParseError
from Diagonalization.BitSequence import EMPTY_FRONTIER_EARLY, FLIP, NO_INDEX_TILE, BitSequence
from Diagonalization.Codec.BitCodec import BitCodec


def sample() -> BitSequence:
    bits = BitSequence()
    bits.append(0, EMPTY_FRONTIER_EARLY)
    bits.append(1, FLIP)
    bits.append(0, NO_INDEX_TILE)
    return bits


class TestBitCodec(unittest.TestCase):
    def test_serialize(self):
        self.assertEqual(BitCodec.serialize(sample()), "010\n")
        self.assertEqual(BitCodec.serialize_provenance(sample()).split("\n")[1], "BIT 1 1 flip")

    def test_parse_ignores_whitespace(self):
        self.assertEqual(BitCodec.parse("0110\n 01\n").bits, [0, 1, 1, 0, 0, 1])

    def test_parse_errors(self):
        for text in ("", "  \n", "01x0", "0 1 2"):
            with self.assertRaises(ParseError):
                BitCodec.parse(text)

    def test_provenance_back(self):
        original = sample()
        bits = BitCodec.parse(BitCodec.serialize(original))
        merged = BitCodec.parse_provenance(bits, BitCodec.serialize_provenance(original))
        self.assertEqual(merged.provenance, original.provenance)

    def test_provenance_must_agree(self):
        bits = BitCodec.parse("010")
        with self.assertRaises(ParseError):
            BitCodec.parse_provenance(bits, "BIT 0 1 flip\nBIT 1 1 flip\nBIT 2 0 flip\n")
        with self.assertRaises(ParseError):
            BitCodec.parse_provenance(bits, "BIT 0 0 flip\n")
        with self.assertRaises(ParseError):
            BitCodec.parse_provenance(bits, "BIT 0 0 sideways\nBIT 1 1 flip\nBIT 2 0 flip\n")

    def test_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            path, prov = os.path.join(tmp, "bits.txt"), os.path.join(tmp, "bits.prov")
            BitCodec.write(sample(), path, prov)
            bits = BitCodec.read(path)
            self.assertEqual(bits.bits, [0, 1, 0])
            with open(prov, encoding='utf-8') as f:
                self.assertEqual(BitCodec.parse_provenance(bits, f.read()).provenance, sample().provenance)
