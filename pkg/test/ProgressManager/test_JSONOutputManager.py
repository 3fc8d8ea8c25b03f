import json
import unittest
from pathlib import Path
from tempfile import TemporaryDirectory

import jsonpickle

from ConfigValidator.Config.Models.Metadata import Metadata
from ProgressManager.Output.JSONOutputManager import JSONOutputManager
from TileModel.Codec.TamsetCodec import TamsetCodec
from Verification.VerifyReport import Mismatch, VerifyReport

from test.AssemblyEngine.fixtures import choice_system, tau2_square


class TestJSONOutputManager(unittest.TestCase):
    def setUp(self):
        self.tmp = TemporaryDirectory()
        self.manager = JSONOutputManager(Path(self.tmp.name) / "reports")

    def tearDown(self):
        self.tmp.cleanup()

    def test_metadata_written_as_json(self):
        metadata = Metadata.of_system(tau2_square(3))
        self.manager.write_metadata(metadata)
        path = Path(self.tmp.name) / "reports" / "metadata.json"
        self.assertEqual(jsonpickle.decode(path.read_text()).md5sum, metadata.md5sum)

    def test_report_is_plain_json(self):
        report = VerifyReport(2, True, False, 2, Mismatch((1, 0), 0, 1), False)
        path = self.manager.write_report("verify", report)
        data = json.loads(path.read_text())
        self.assertEqual(data["distinct_terminals"], 2)
        self.assertFalse(data["all_match"])
        self.assertNotIn("py/object", path.read_text())


class TestFingerprint(unittest.TestCase):
    def test_equal_for_reparsed_text(self):
        system = tau2_square(4)
        text = TamsetCodec.serialize(system)
        self.assertEqual(Metadata.of_system(TamsetCodec.parse(text)).md5sum, Metadata.of_system(system).md5sum)

    def test_differs_between_systems(self):
        self.assertNotEqual(Metadata.of_system(tau2_square(3)).md5sum, Metadata.of_system(choice_system()).md5sum)
        self.assertEqual(len(Metadata.of_system(choice_system()).md5sum), 16)


if __name__ == '__main__':
    unittest.main()
