from pathlib import Path


class BaseOutputManager:

    def __init__(self, report_path: Path):
        self._report_path = Path(report_path)
