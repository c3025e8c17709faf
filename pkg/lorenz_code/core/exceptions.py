"""Exception hierarchy shared by every lorenz_code module.

Each exception carries the exit code the command line reports for it:
1 for domain and validation problems, 2 for container format and I/O problems.
"""

EXIT_DOMAIN = 1
EXIT_FORMAT = 2


class LorenzCodeError(Exception):
    """Base class for all errors raised by lorenz_code."""

    exit_code = EXIT_DOMAIN


# mp-core
class MPDomainError(LorenzCodeError):
    """Raised on division by exact zero."""


class NonFiniteError(LorenzCodeError):
    """Raised when a result leaves the configured exponent range."""


class MPParseError(LorenzCodeError):
    """Raised when a decimal literal cannot be parsed."""


class PrecisionMismatchError(LorenzCodeError):
    """Raised when operands of one operation carry different precisions."""


class ComposeError(LorenzCodeError):
    """Raised by a left-to-right fold when one of its steps fails."""

    def __init__(self, step: int, cause: LorenzCodeError):
        self.step = step
        self.cause = cause
        super().__init__(f"step {step} failed: {cause}")


# lorenz-dynamics
class DivergedError(LorenzCodeError):
    """Raised when an integration produces a non-finite state."""

    def __init__(self, step: int, detail: str = "non-finite state"):
        self.step = step
        super().__init__(f"integration diverged at step {step}: {detail}")


# cup-analysis
class FitError(LorenzCodeError):
    """Raised when a model cannot be fitted from the given samples."""


class NoInteriorMinimumError(FitError):
    """Raised when the fitted error law has no interior minimum."""


class MectBeyondHorizonError(LorenzCodeError):
    """Raised when no divergence is observed before the horizon."""

    def __init__(self, t_max: float):
        self.t_max = t_max
        super().__init__(f"MECT beyond horizon t_max={t_max}")


# one-way
class ConfigError(LorenzCodeError):
    """Raised when base parameters or keys violate the one-way invariants."""


# lorenz-cipher
class EncryptionError(LorenzCodeError):
    """Raised when the keystream of one group cannot be generated."""

    def __init__(self, group: int, cause: Exception):
        self.group = group
        self.cause = cause
        super().__init__(f"keystream generation failed at group {group}: {cause}")


class ContainerFormatError(LorenzCodeError):
    exit_code = EXIT_FORMAT


class BadMagicError(ContainerFormatError):
    pass


class UnsupportedVersionError(ContainerFormatError):
    pass


class CorruptContainerError(ContainerFormatError):
    pass


# rand-quality
class SampleTooSmallError(LorenzCodeError):
    def __init__(self, test_name: str, minimum: int, unit: str, got: int):
        self.minimum = minimum
        super().__init__(
            f"{test_name} needs at least {minimum} {unit}, got {got}",
        )


class InvalidPrecisionError(LorenzCodeError):
    """Raised when a precision is not an integer of at least 2 bits."""
