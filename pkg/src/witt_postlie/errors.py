"""Exception hierarchy shared by every module of the package."""


class WittError(Exception):
    """Base class for all errors raised by witt_postlie."""


class ContractError(WittError, ValueError):
    """A precondition of a public operation was violated."""


class MissingParameterError(ContractError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"missing value for parameter {name!r}")

    def __str__(self):
        return self.args[0]


class UnknownParameterError(ContractError):
    pass


class IndexOutOfRangeError(ContractError):
    pass


class UnknownNameError(ContractError):
    pass


class InadmissibleNuError(ContractError):
    pass


class NuZeroError(ContractError):
    pass


class UnsupportedVariantError(ContractError):
    pass


class WindowError(ContractError):
    """Invalid window bounds or a window exceeding the desk-scale guard."""


class WindowEscapeError(ContractError):
    """A table-backed product was evaluated outside its declared rectangle."""


class ParameterConstraintError(ContractError):
    pass


class DenominatorZeroError(ParameterConstraintError):
    def __init__(self, m, n):
        self.m, self.n = m, n
        super().__init__(f"denominator vanishes at (m, n) = ({m}, {n})")


class WindowTooLargeError(ContractError):
    pass


class WindowTooSmallError(ContractError):
    pass


class AmbiguousMatchError(WittError):
    pass


class ParseError(ContractError):
    pass


class SchemaError(ContractError):
    """A structure-constants file does not follow the expected schema."""
