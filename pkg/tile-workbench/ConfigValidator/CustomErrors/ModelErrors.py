from ConfigValidator.CustomErrors.BaseError import BaseError

class ModelBaseError(BaseError):
    def __init__(self, text: str):
        super().__init__(text)

class ParseError(ModelBaseError):
    def __init__(self, line_number: int, text: str):
        super().__init__(f"Parse error on line {line_number}: {text}")
        self.line_number = line_number

class ValidationError(ModelBaseError):
    def __init__(self, text: str):
        super().__init__(f"Invalid tile assembly system: {text}")

class OccupiedLocationError(ModelBaseError):
    def __init__(self, loc):
        super().__init__(f"Location {loc} is already occupied by a tile")
        self.loc = loc
