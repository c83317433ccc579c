"""Exception hierarchy shared by all omvkit modules."""


class OmvkitError(Exception):
    """Base class for every error raised by this package."""


class NonPositiveValue(OmvkitError):
    """A value was zero or negative; its order of magnitude is undefined."""


class DomainError(OmvkitError):
    """An argument fell outside the mathematical domain of an operation."""


class OutOfRange(OmvkitError):
    """A value cannot be expressed in the requested notation or range."""


class ConfigSyntaxError(OmvkitError):
    """A configuration string violates the grammar.

    ``position`` is the byte offset of the first offending token in the
    UTF-8 encoding of the input; ``expected`` lists acceptable tokens.
    """

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.position = position
        self.expected = expected


class ConfigSemanticError(OmvkitError):
    """A configuration string is grammatical but structurally invalid."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class DomainExceeded(OmvkitError):
    """A data value falls outside the exponent domain of a chart design."""


class EmptyDataset(OmvkitError):
    """A chart was requested for a dataset with no rows."""


class UnrenderableConfig(OmvkitError):
    """A gallery panel was requested for a non-viable configuration."""

    def __init__(self, message: str, violations: tuple[str, ...] = ()):
        super().__init__(message)
        self.violations = violations


class InsufficientPairs(OmvkitError):
    """A dataset cannot supply enough distinct category pairs for a task."""


class MissingTrials(OmvkitError):
    """A participant is missing trials required for aggregation."""


class TooFewSamples(OmvkitError):
    """Bootstrap resampling needs at least two observations."""
