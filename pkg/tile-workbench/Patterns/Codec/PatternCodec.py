from typing import List

import numpy as np

from ConfigValidator.CustomErrors.ModelErrors import ParseError
from Patterns.Pattern import Pattern
from TileModel.Palette import palette_from_tokens, palette_to_text

HEADER = "PAT v1"


class PatternCodec:
    """PAT v1: header, SIZE, PALETTE, then one ROW per grid row, north row first."""

    @staticmethod
    def serialize(pattern: Pattern) -> str:
        lines = [HEADER, f"SIZE {pattern.width} {pattern.height}", f"PALETTE {palette_to_text(pattern.palette)}"]
        for row in pattern.rows():
            lines.append("ROW " + " ".join(str(int(c)) for c in row))
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse(text: str) -> Pattern:
        lines = [(n, line.strip()) for n, line in enumerate(text.split("\n"), start=1)
                 if line.strip() and not line.strip().startswith("#")]
        if not lines or lines[0][1] != HEADER:
            raise ParseError(1, f"expected `{HEADER}` header")
        if len(lines) < 3:
            raise ParseError(len(lines) + 1, "expected SIZE and PALETTE lines")

        number, size = lines[1]
        tokens = size.split()
        if len(tokens) != 3 or tokens[0] != "SIZE" or not tokens[1].isdigit() or not tokens[2].isdigit():
            raise ParseError(number, "expected `SIZE <w> <h>`")
        width, height = int(tokens[1]), int(tokens[2])
        if width < 1 or height < 1:
            raise ParseError(number, "pattern size must be positive")

        number, palette_line = lines[2]
        tokens = palette_line.split()
        if tokens[0] != "PALETTE":
            raise ParseError(number, "expected `PALETTE <idx>=<name> ...`")
        try:
            palette = palette_from_tokens(tokens[1:])
        except ValueError as e:
            raise ParseError(number, str(e))

        rows: List[List[int]] = []
        for number, line in lines[3:]:
            tokens = line.split()
            if tokens[0] != "ROW" or len(tokens) != width + 1:
                raise ParseError(number, f"expected `ROW` with {width} colors")
            try:
                row = [int(t) for t in tokens[1:]]
            except ValueError:
                raise ParseError(number, "colors must be integers")
            if any(not 0 <= c < len(palette) for c in row):
                raise ParseError(number, "color outside the palette")
            rows.append(row)
        if len(rows) != height:
            raise ParseError(lines[-1][0], f"expected {height} ROW lines, found {len(rows)}")
        return Pattern.from_rows(np.array(rows), palette)

    @staticmethod
    def read(path) -> Pattern:
        with open(path, 'r', encoding='utf-8') as f:
            return PatternCodec.parse(f.read())

    @staticmethod
    def write(pattern: Pattern, path):
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(PatternCodec.serialize(pattern))
