from sat_dominance.domain.types import ParseErrorKind


class SatDominanceException(Exception):
    pass


class ImproperlyConfigured(SatDominanceException):
    pass


class DimacsParseError(SatDominanceException):
    def __init__(self, kind: ParseErrorKind, line: int, column: int, detail: str = "") -> None:
        self.kind = kind
        self.line = line
        self.column = column
        self.detail = detail

        message = f"{kind.value} at line {line}, column {column}"
        if detail:
            message = f"{message}: {detail}"

        super().__init__(message)


class OracleLimitExceeded(SatDominanceException):
    pass


class InvariantViolation(SatDominanceException):
    pass
