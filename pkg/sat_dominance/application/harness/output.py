from sat_dominance.domain.outcome import SolveOutcome
from sat_dominance.domain.types import SolveStatus

ERROR_EXIT_CODE = 1

_STATUS_LINES = {
    SolveStatus.SAT: "s SATISFIABLE",
    SolveStatus.UNSAT: "s UNSATISFIABLE",
    SolveStatus.UNKNOWN: "s UNKNOWN",
}
_EXIT_CODES = {
    SolveStatus.SAT: 10,
    SolveStatus.UNSAT: 20,
    SolveStatus.UNKNOWN: 0,
}


def status_line(status: SolveStatus) -> str:
    return _STATUS_LINES[status]


def exit_code(status: SolveStatus) -> int:
    return _EXIT_CODES[status]


def competition_lines(outcome: SolveOutcome) -> list[str]:
    """Solver answer in the SAT competition text protocol: the status line, then the model as one `v` line."""

    lines = [status_line(outcome.status)]
    if outcome.status == SolveStatus.SAT and outcome.model is not None:
        lines.append(" ".join(["v", *map(str, outcome.model), "0"]))

    return lines
