from typing import List, Optional

from ConfigValidator.CustomErrors.ModelErrors import ParseError, ValidationError
from TileModel.Direction import Direction, FILE_ORDER_3D
from TileModel.Glue import Glue, NULL_GLUE
from TileModel.Palette import DEFAULT_PALETTE, palette_from_tokens, palette_to_text
from TileModel.TileAssemblySystem import TileAssemblySystem
from TileModel.TileSet import TileSet
from TileModel.TileType import TileType

HEADER = "TAMSET v1"


class TamsetCodec:
    """Line-oriented text form of a tile assembly system.

    Canonical output omits `DIM 2` and a default `PALETTE`; both are still accepted on input,
    as are blank lines and `#` comments.
    """

    @staticmethod
    def serialize(system: TileAssemblySystem) -> str:
        lines = [HEADER]
        if system.dim == 3:
            lines.append("DIM 3")
        lines.append(f"TEMP {system.temperature}")
        if system.tileset.palette != DEFAULT_PALETTE:
            lines.append(f"PALETTE {palette_to_text(system.tileset.palette)}")
        for tile in system.tileset:
            sides = " ".join(f"{d.name} {tile.glue(d).to_text()}" for d in system.sides)
            lines.append(f"TILE {tile.name} COLOR {tile.color} {sides}")
        for loc, idx in system.seed:
            coords = f"{loc[0]} {loc[1]}" + (f" {loc[2]}" if system.dim == 3 else "")
            lines.append(f"SEED {system.tileset[idx].name} {coords}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse(text: str) -> TileAssemblySystem:
        lines = text.split("\n")
        if not lines or lines[0].strip() != HEADER:
            raise ParseError(1, f"expected `{HEADER}` header")

        dim = 2
        temperature: Optional[int] = None
        palette = DEFAULT_PALETTE
        tiles: List[TileType] = []
        seeds = []

        for number, raw in enumerate(lines[1:], start=2):
            line = raw.strip()
            if line == "" or line.startswith("#"):
                continue
            tokens = line.split()
            keyword = tokens[0]
            if keyword == "DIM":
                if tiles or len(tokens) != 2 or tokens[1] not in ("2", "3"):
                    raise ParseError(number, "DIM must precede tiles and be 2 or 3")
                dim = int(tokens[1])
            elif keyword == "TEMP":
                if temperature is not None or len(tokens) != 2:
                    raise ParseError(number, "exactly one `TEMP <tau>` line is allowed")
                temperature = TamsetCodec.__int(tokens[1], number)
                if temperature < 1:
                    raise ValidationError(f"temperature must be positive (line {number})")
            elif keyword == "PALETTE":
                if tiles:
                    raise ParseError(number, "PALETTE must precede tiles")
                try:
                    palette = palette_from_tokens(tokens[1:])
                except ValueError as e:
                    raise ParseError(number, str(e))
            elif keyword == "TILE":
                tiles.append(TamsetCodec.__parse_tile(tokens, number, dim))
            elif keyword == "SEED":
                seeds.append((tokens, number))
            else:
                raise ParseError(number, f"unknown keyword `{keyword}`")

        if temperature is None:
            raise ParseError(len(lines), "missing TEMP line")
        tileset = TileSet(tiles, palette)

        seed = []
        for tokens, number in seeds:
            if len(tokens) not in (4, 5):
                raise ParseError(number, "expected `SEED <tile> <x> <y> [<z>]`")
            x, y = TamsetCodec.__int(tokens[2], number), TamsetCodec.__int(tokens[3], number)
            z = TamsetCodec.__int(tokens[4], number) if len(tokens) == 5 else 0
            seed.append(((x, y, z), tileset.index_of(tokens[1])))
        return TileAssemblySystem(tileset, seed, temperature, dim)

    @staticmethod
    def __parse_tile(tokens: List[str], number: int, dim: int) -> TileType:
        if len(tokens) not in (12, 16) or tokens[2] != "COLOR":
            raise ParseError(number, "expected `TILE <name> COLOR <idx> N .. E .. S .. W .. [U .. D ..]`")
        glues = []
        for k in range((len(tokens) - 4) // 2):
            side, glue_text = tokens[4 + 2 * k], tokens[5 + 2 * k]
            if side != FILE_ORDER_3D[k].name:
                raise ParseError(number, f"expected side {FILE_ORDER_3D[k].name}, found {side}")
            glues.append(TamsetCodec.__glue(glue_text, number))
        if dim == 2 and len(glues) == 6:
            if any(not g.is_null for g in glues[4:]):
                raise ValidationError(f"tile {tokens[1]} has U/D glues in a 2D system (line {number})")
            glues = glues[:4]
        if dim == 3 and len(glues) == 4:
            glues += [NULL_GLUE, NULL_GLUE]
        return TileType(tokens[1], TamsetCodec.__int(tokens[3], number), tuple(glues))

    @staticmethod
    def __glue(text: str, number: int) -> Glue:
        label, sep, strength = text.rpartition("|")
        if sep != "|" or label == "":
            raise ParseError(number, f"bad glue `{text}`")
        value = TamsetCodec.__int(strength, number)
        if label == "-":
            if value != 0:
                raise ParseError(number, "the null glue `-` must have strength 0")
            return NULL_GLUE
        return Glue(label, value)

    @staticmethod
    def __int(token: str, number: int) -> int:
        try:
            return int(token)
        except ValueError:
            raise ParseError(number, f"expected an integer, found `{token}`")

    @staticmethod
    def read(path) -> TileAssemblySystem:
        with open(path, 'r', encoding='utf-8') as f:
            return TamsetCodec.parse(f.read())

    @staticmethod
    def write(system: TileAssemblySystem, path):
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(TamsetCodec.serialize(system))
