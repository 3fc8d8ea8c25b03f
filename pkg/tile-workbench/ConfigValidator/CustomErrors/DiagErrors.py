from ConfigValidator.CustomErrors.BaseError import BaseError

class DiagBaseError(BaseError):
    def __init__(self, text: str):
        super().__init__(text)

class UnsupportedError(DiagBaseError):
    def __init__(self, mode: str):
        super().__init__(f"Universe mode `{mode}` is not supported: strength-free systems are simulated natively (use mode=directSF)")

class UniverseTooLargeError(DiagBaseError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"Universe enumerates {count} systems, the configured cap is {cap}.")
        self.count = count
        self.cap = cap

class BadLengthError(DiagBaseError):
    def __init__(self, length: int, m: int):
        super().__init__(f"Bit sequence of length {length} cannot be lifted into an {m}x{m} square (need 2 <= |b| <= m)")
