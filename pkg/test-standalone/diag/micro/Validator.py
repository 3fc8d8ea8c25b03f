from Diagonalization.BitSequence import REASONS
from Diagonalization.Codec.BitCodec import BitCodec
from Diagonalization.SFCounting import count_sf_systems
from Diagonalization.SFModels import Universe
from Patterns.Codec.PatternCodec import PatternCodec

import TestUtilities

if __name__ == '__main__':
    TEST_DIR = TestUtilities.get_test_dir(__file__)
    out = TEST_DIR / 'out'

    total = int(TestUtilities.read_text(out / 'count'))
    assert total == count_sf_systems(Universe.from_text("micro-colors"))

    bits = BitCodec.read(out / 'micro.bits')
    bits = BitCodec.parse_provenance(bits, TestUtilities.read_text(out / 'micro.bits.prov'))
    assert len(bits) == total
    assert all(r.reason in REASONS for r in bits.provenance)

    pn = PatternCodec.read(out / 'pn.pat')
    assert (pn.width, pn.height) == (32, 32)

    assert TestUtilities.read_text(out / 'lift.pat') == TestUtilities.read_text(out / 'lift.target.pat')

    differs = TestUtilities.read_text(out / 'differs').split()
    assert differs[:2] == ["DIFFERS", "pass"], differs
    assert "compared=1320" in differs, differs
