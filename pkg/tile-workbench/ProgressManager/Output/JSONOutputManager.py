from pathlib import Path

import jsonpickle

from ConfigValidator.Config.Models.Metadata import Metadata
from ProgressManager.Output.BaseOutputManager import BaseOutputManager


class JSONOutputManager(BaseOutputManager):

    def write_metadata(self, metadata: Metadata):
        self._report_path.mkdir(parents=True, exist_ok=True)
        with open(self._report_path / "metadata.json", 'w') as json_file:
            json_file.write(jsonpickle.encode(metadata, indent=2))

    def write_report(self, name: str, report) -> Path:
        """Plain JSON (no type tags) of any report object or list of them."""
        self._report_path.mkdir(parents=True, exist_ok=True)
        path = self._report_path / f"{name}.json"
        with open(path, 'w', encoding='utf-8', newline='\n') as json_file:
            json_file.write(jsonpickle.encode(report, unpicklable=False, indent=2) + "\n")
        return path
