from loguru import logger

from sat_dominance.domain.exceptions import DimacsParseError
from sat_dominance.domain.formula import CnfFormula, Literal, ParsedFormula, normalize_clause
from sat_dominance.domain.types import ParseErrorKind


def _tokens(line: str) -> list[tuple[int, str]]:
    """Split a line into (1-based column, token) pairs."""

    tokens = []
    column = 0
    for token in line.split():
        column = line.index(token, column)
        tokens.append((column + 1, token))
        column += len(token)

    return tokens


def _parse_header(tokens: list[tuple[int, str]], line_no: int) -> tuple[int, int]:
    if len(tokens) != 4 or tokens[1][1] != "cnf":
        raise DimacsParseError(ParseErrorKind.BAD_HEADER, line_no, 1, "expected 'p cnf <vars> <clauses>'")

    values = []
    for column, token in tokens[2:]:
        try:
            value = int(token)
        except ValueError:
            raise DimacsParseError(ParseErrorKind.BAD_HEADER, line_no, column, f"'{token}' is not an integer") from None
        if value < 0:
            raise DimacsParseError(ParseErrorKind.BAD_HEADER, line_no, column, f"negative count {value}")
        values.append(value)

    return values[0], values[1]


def parse_dimacs(text: bytes | str) -> ParsedFormula:
    """
    Parses a DIMACS CNF document into a normalized formula.

    Comment lines are skipped and a '%' line ends the clause section (SATLIB convention). Tautologies are dropped and
    duplicate literals merged. A clause count that disagrees with the header is tolerated and flagged.

    Raises:
        DimacsParseError: On a malformed header, a non-integer token, a variable beyond the declared range or a
            clause missing its terminating 0 at end of input.
    """

    if isinstance(text, bytes):
        text = text.decode("utf-8")

    header: tuple[int, int] | None = None
    clauses: list[list[Literal]] = []
    pending: list[Literal] = []
    last_position = (1, 1)
    line_no = 0

    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("%"):
            break

        tokens = _tokens(line)
        if stripped.startswith("p"):
            if header is not None or clauses or pending:
                raise DimacsParseError(ParseErrorKind.BAD_HEADER, line_no, tokens[0][0], "unexpected header line")
            header = _parse_header(tokens, line_no)
            continue

        if header is None:
            raise DimacsParseError(ParseErrorKind.BAD_HEADER, line_no, tokens[0][0], "clause before header")
        num_vars = header[0]

        for column, token in tokens:
            try:
                literal = int(token)
            except ValueError:
                raise DimacsParseError(
                    ParseErrorKind.BAD_TOKEN, line_no, column, f"'{token}' is not an integer"
                ) from None

            if abs(literal) > num_vars:
                raise DimacsParseError(
                    ParseErrorKind.VAR_OUT_OF_RANGE, line_no, column, f"variable {abs(literal)} > {num_vars}"
                )

            last_position = (line_no, column)
            if literal == 0:
                clauses.append(pending)
                pending = []
            else:
                pending.append(literal)

    if header is None:
        raise DimacsParseError(ParseErrorKind.BAD_HEADER, max(line_no, 1), 1, "missing 'p cnf' header")
    if pending:
        raise DimacsParseError(ParseErrorKind.TRUNCATED, *last_position, "clause is missing its terminating 0")

    num_vars, declared_clauses = header
    header_mismatch = declared_clauses != len(clauses)
    if header_mismatch:
        logger.warning(f"DIMACS header declares {declared_clauses} clauses but {len(clauses)} were read.")

    normalized = [clause for clause in map(normalize_clause, clauses) if clause is not None]
    formula = CnfFormula(num_vars=num_vars, clauses=normalized)

    return ParsedFormula(formula=formula, declared_clauses=declared_clauses, header_mismatch=header_mismatch)
