from sat_dominance.domain.formula import CnfFormula


def write_dimacs(formula: CnfFormula) -> bytes:
    lines = [f"p cnf {formula.num_vars} {formula.num_clauses}"]
    lines.extend(" ".join([*map(str, clause), "0"]) for clause in formula.clauses)

    return ("\n".join(lines) + "\n").encode("utf-8")
