from ConfigValidator.CustomErrors.BaseError import BaseError

class SimulationBaseError(BaseError):
    def __init__(self, text: str):
        super().__init__(text)

class StepBudgetOverflowError(SimulationBaseError):
    def __init__(self, max_steps: int, hard_cap: int):
        super().__init__(f"Requested {max_steps} steps, the configured hard cap is {hard_cap}.")
        self.max_steps = max_steps
        self.hard_cap = hard_cap
