"""Error types shared by the library, the service, and the CLI."""


class DomainError(Exception):
    """A precondition on the mathematical input was violated."""

    def __init__(self, code: str, message: str, witness=None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.witness = witness


class VerificationError(Exception):
    """An internal consistency check failed; never expected on valid inputs."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.code = "contradiction"
        self.message = message
        self.witness = witness
