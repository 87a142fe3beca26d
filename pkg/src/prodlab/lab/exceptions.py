"""
Custom exceptions for the prodlab library.

This module defines a hierarchy of exceptions that separate malformed
arguments, violated mathematical preconditions and limits of the finite
representation, so callers can tell a bug in their input from a limit of
the truncation depth.
"""

from typing import Any


class ProdlabError(Exception):
    """Base exception for all prodlab errors.

    Every exception raised by the library inherits from this class, so a
    single except clause catches all of them.

    Example:
        try:
            op(x, y)
        except ProdlabError as e:
            print(f"lab error: {e}")
    """

    def __init__(self, message: str, details: Any = None):
        super().__init__(message)
        self.message = message
        self.details = details

    def __str__(self) -> str:
        return self.message


class DescriptorMismatchError(ProdlabError):
    """Raised when two operands belong to different groups.

    This error occurs when:
    - Elements of ℤ_3 and ℤ_5 are combined
    - Two p-adic values stored at different depths are compared
    - Product values over different coordinate windows are added

    Example:
        try:
            op(int_to_padic(1, 3, 4), int_to_padic(1, 5, 4))
        except DescriptorMismatchError as e:
            print(e.details)
    """

    pass


class ArgumentError(ProdlabError, ValueError):
    """Raised when an argument is malformed.

    This error occurs when:
    - A segment is requested with l >= m
    - A weight or bound is negative where it must not be
    - An injection passed to the reshuffling check repeats a value
    """

    pass


class DomainError(ProdlabError):
    """Raised when a mathematical precondition does not hold.

    This error occurs when:
    - v_p(η) < v_p(α) in the approximation solver
    - A CRT index set is not contained in the support
    - An abelian-only test receives a non-abelian group

    Example:
        try:
            padic_approx_solve(eta, alpha, k)
        except DomainError as e:
            print(f"precondition violated: {e}")
    """

    pass


class DegenerateInputError(DomainError):
    """Raised when an input is degenerate, such as α = 0 for the solver."""

    pass


class UnsupportedError(ProdlabError):
    """Raised for valid inputs the library does not handle.

    This error occurs when:
    - A CRT index set repeats a prime modulus
    - A nested basis is requested for a discrete group
    - A product factor kind has no scalar arithmetic
    """

    pass


class DepthExhaustedError(ProdlabError):
    """Raised when the truncation depth cannot realise a requested object.

    This error occurs when:
    - The set V_n of the builder has no new representable element
    - Two Cantor children cannot be separated at the working depth
    - No small element of the sequence appears within the search limit
    """

    pass


class ConfigError(ProdlabError):
    """Raised when an experiment configuration is invalid.

    Attributes:
        field: Dotted path of the offending field (e.g. ``f.tail-rule``)

    Example:
        try:
            load_config(Path("experiment.json"))
        except ConfigError as e:
            print(f"{e.field}: {e}")
    """

    def __init__(self, message: str, field: str | None = None, details: Any = None):
        super().__init__(message, details)
        self.field = field

    def __str__(self) -> str:
        if self.field:
            return f"{self.field}: {self.message}"
        return self.message


class UnknownSuiteError(ProdlabError):
    """Raised when a verification suite name is not registered."""

    pass
