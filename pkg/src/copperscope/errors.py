"""Exception hierarchy. Every error a caller can trigger with bad input is a
``CopperscopeError``; the CLI maps those to exit code 1."""

from __future__ import annotations


class CopperscopeError(ValueError):
    pass


class NonPrimeModulus(CopperscopeError):
    pass


class NonMonicPolynomial(CopperscopeError):
    pass


class DegenerateInput(CopperscopeError):
    pass


class DependentRows(CopperscopeError):
    pass


class BadDelta(CopperscopeError):
    pass


class CapExceeded(CopperscopeError):
    pass


class DomainTooSmall(CopperscopeError):
    pass


class BoundNotCertified(Exception):
    """The reduced lattice vector failed the Howgrave-Graham test at the
    requested radius.  ``certified_X`` is the largest radius below it that
    did pass (0 if none did)."""

    def __init__(self, requested_X: int, certified_X: int, m: int, t_extra: int):
        self.requested_X = requested_X
        self.certified_X = certified_X
        self.m = m
        self.t_extra = t_extra
        super().__init__(
            f"radius {requested_X} not certified at m={m}, t_extra={t_extra}; "
            f"largest certified radius {certified_X}"
        )
