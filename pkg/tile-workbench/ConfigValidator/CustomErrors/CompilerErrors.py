from ConfigValidator.CustomErrors.BaseError import BaseError

class CompilerBaseError(BaseError):
    def __init__(self, text: str):
        super().__init__(text)

class SpecError(CompilerBaseError):
    def __init__(self, text: str):
        super().__init__(f"Invalid gadget specification: {text}")

class RoutingFailureError(CompilerBaseError):
    def __init__(self, text: str):
        super().__init__(f"Could not route counter segments: {text}")

class CertificationError(CompilerBaseError):
    def __init__(self, role: str, text: str):
        super().__init__(f"Blueprint `{role}` failed certification: {text}")
        self.role = role
