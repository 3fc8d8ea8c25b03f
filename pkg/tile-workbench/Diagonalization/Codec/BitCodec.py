from ConfigValidator.CustomErrors.ModelErrors import ParseError
from Diagonalization.BitSequence import REASONS, BitRecord, BitSequence


class BitCodec:
    """Bits as one `0`/`1` character each; provenance as `BIT <serial> <value> <reason>` lines."""

    @staticmethod
    def serialize(bits: BitSequence) -> str:
        return bits.to_text() + "\n"

    @staticmethod
    def serialize_provenance(bits: BitSequence) -> str:
        return "".join(f"BIT {r.serial} {r.value} {r.reason}\n" for r in bits.provenance)

    @staticmethod
    def parse(text: str) -> BitSequence:
        body = "".join(text.split())
        if body == "":
            raise ParseError(1, "bit sequence is empty")
        bad = next((c for c in body if c not in "01"), None)
        if bad is not None:
            raise ParseError(1, f"unexpected character {bad!r} in bit sequence")
        return BitSequence.of(int(c) for c in body)

    @staticmethod
    def parse_provenance(bits: BitSequence, text: str) -> BitSequence:
        records = []
        for number, line in enumerate(text.split("\n"), start=1):
            tokens = line.split()
            if not tokens:
                continue
            if len(tokens) != 4 or tokens[0] != "BIT" or not tokens[1].isdigit() or tokens[2] not in ("0", "1"):
                raise ParseError(number, "expected `BIT <serial> <value> <reason>`")
            if tokens[3] not in REASONS:
                raise ParseError(number, f"unknown reason `{tokens[3]}`")
            serial, value = int(tokens[1]), int(tokens[2])
            if serial != len(records) or serial >= len(bits) or bits[serial] != value:
                raise ParseError(number, f"record {serial} does not match the bit sequence")
            records.append(BitRecord(serial, value, tokens[3]))
        if len(records) != len(bits):
            raise ParseError(len(text.split("\n")), f"expected {len(bits)} BIT lines, found {len(records)}")
        return BitSequence(list(bits.bits), records)

    @staticmethod
    def read(path) -> BitSequence:
        with open(path, 'r', encoding='utf-8') as f:
            return BitCodec.parse(f.read())

    @staticmethod
    def write(bits: BitSequence, path, provenance_path=None):
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(BitCodec.serialize(bits))
        if provenance_path is not None:
            with open(provenance_path, 'w', encoding='utf-8', newline='\n') as f:
                f.write(BitCodec.serialize_provenance(bits))
