"""Exception types shared across the package.

Every error message names the offending parameter or input so CLI users can
act on it without reading a stack trace.
"""


class NegammError(Exception):
    """Base class for all library errors."""


class ParameterError(NegammError, ValueError):
    """A curve or request parameter is outside its allowed range."""


class InvalidFee(ParameterError):
    """Swap fee outside [0, 1)."""


class DomainError(NegammError, ValueError):
    """A coordinate or price lies outside the curve's domain."""


class DomainExceeded(DomainError):
    """A trade would push the pool past the edge of its trading branch."""


class ConvergenceError(NegammError, RuntimeError):
    """An iterative solve did not reach tolerance within its iteration cap."""


class SeriesError(NegammError, ValueError):
    """Base class for price-series loading and analysis errors."""


class SeriesParseError(SeriesError):
    """A CSV row failed to parse; the message names row and column."""


class MonotonicityError(SeriesError):
    """Timestamps are not strictly increasing."""


class InsufficientDataError(SeriesError):
    """Not enough observations for the requested statistic."""
