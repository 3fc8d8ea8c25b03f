from dataclasses import dataclass

from ConfigValidator.CustomErrors.ModelErrors import ValidationError


@dataclass(frozen=True)
class Glue:
    label:      str = ""
    strength:   int = 0

    def __post_init__(self):
        if not isinstance(self.strength, int) or self.strength < 0:
            raise ValidationError(f"glue strength must be a nonnegative integer, found {self.strength!r}")
        if self.label == "" and self.strength != 0:
            raise ValidationError("a glue with an empty label must have strength 0")
        if any(c.isspace() or c == '|' for c in self.label):
            raise ValidationError(f"glue label {self.label!r} contains whitespace or '|'")
        if self.label == "-" :
            raise ValidationError("'-' is reserved for the null glue")

    @property
    def is_null(self) -> bool:
        return self.strength == 0

    def clamped(self, temperature: int) -> 'Glue':
        return self if self.strength <= temperature else Glue(self.label, temperature)

    def to_text(self) -> str:
        if self.label == "":
            return "-|0"
        return f"{self.label}|{self.strength}"

    def __str__(self):
        return self.to_text()


NULL_GLUE = Glue()


def glue_binds(g1: Glue, g2: Glue) -> int:
    if g1.strength > 0 and g1 == g2:
        return g1.strength
    return 0
