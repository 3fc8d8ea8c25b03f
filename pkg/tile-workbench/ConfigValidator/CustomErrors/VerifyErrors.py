from ConfigValidator.CustomErrors.BaseError import BaseError

class VerifyBaseError(BaseError):
    def __init__(self, text: str):
        super().__init__(text)

class NonTerminatingError(VerifyBaseError):
    def __init__(self, trial: int, step_cap: int):
        super().__init__(f"Trial {trial} did not reach a terminal assembly within {step_cap} steps")
        self.trial = trial

class VerificationFailedError(VerifyBaseError):
    def __init__(self, line: str):
        super().__init__(f"Verification failed: {line}")
        self.line = line
