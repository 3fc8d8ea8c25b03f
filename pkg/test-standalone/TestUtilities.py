from os.path import dirname, realpath
from pathlib import Path
from typing import AnyStr


def get_test_dir(file: AnyStr) -> Path:
    return Path(dirname(realpath(file)))


def read_text(path: Path) -> str:
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def read_exit_codes(test_dir: Path) -> dict:
    """`<name> <code>` lines the scenario appended to out/exit-codes."""
    codes = {}
    for line in read_text(test_dir / 'out' / 'exit-codes').splitlines():
        name, code = line.split()
        codes[name] = int(code)
    return codes
