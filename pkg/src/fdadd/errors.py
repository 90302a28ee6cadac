"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An operation received malformed or out-of-contract input."""


class NumericalError(RuntimeError):
    """A numerical routine failed to converge or produce a usable result."""


class NoViableCandidateError(RuntimeError):
    """Model selection found no eligible candidate."""


class ConfigError(ValueError):
    """A configuration document is invalid or contains unknown fields."""


class DataError(ValueError):
    """An input data file is malformed."""
