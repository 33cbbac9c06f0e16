"""Exception hierarchy shared by every module."""


class FibQuarticError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FibQuarticError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class IndexOverflowError(DomainError):
    """A subscript (or subscript expression) left the supported index range."""


class ParameterError(FibQuarticError, ValueError):
    """Malformed request: wrong arity, empty range, unknown name."""


class ConsistencyError(FibQuarticError, AssertionError):
    """An internal exactness check failed. Always a bug, never user error."""


class InexactDivisionError(ConsistencyError):
    def __init__(self, site, dividend, divisor):
        self.site = site
        self.dividend = dividend
        self.divisor = divisor
        super().__init__(
            f"{site}: division by {divisor} leaves remainder {dividend % divisor}"
        )
