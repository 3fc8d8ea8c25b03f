from ConfigValidator.CustomErrors.BaseError import BaseError

class PatternBaseError(BaseError):
    def __init__(self, text: str):
        super().__init__(text)

class OutOfRangeError(PatternBaseError):
    def __init__(self, what: str, value, n: int):
        super().__init__(f"{what}={value} lies outside the {n}x{n} square")

class SeparationViolationError(PatternBaseError):
    def __init__(self, first, second, separation: int):
        super().__init__(f"Pixels {first} and {second} are closer than {separation} in both axes")
        self.pair = (first, second)

class MissingColorError(PatternBaseError):
    def __init__(self, color_id: int, name: str = "?"):
        super().__init__(f"No RGB entry for color {color_id} ({name})")
        self.color_id = color_id

class NotTwoColoredError(PatternBaseError):
    def __init__(self, colors):
        super().__init__(f"Pattern must only use White and Black, found colors {sorted(colors)}")

class NotSquareError(PatternBaseError):
    def __init__(self, width: int, height: int):
        super().__init__(f"Pattern must be square, found {width}x{height}")

class NotRectangularError(PatternBaseError):
    def __init__(self, hole):
        super().__init__(f"Assembly domain is not a full rectangle, first hole at {hole}")
        self.hole = hole
