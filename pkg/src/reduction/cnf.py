"""DIMACS CNF parsing, brute-force satisfiability and small formula corpora."""

import random
from itertools import product
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from src.core.exceptions import CnfParseException, GeneratorException
from src.core.logger import get_logger
from src.schemas.reduction import CnfFormula

logger = get_logger(__name__)

Assignment = Tuple[bool, ...]


def _parse_header(tokens: List[str], line_number: int) -> Tuple[int, int]:
    if len(tokens) != 4 or tokens[1] != "cnf":
        raise CnfParseException(f"Line {line_number}: malformed header, expected 'p cnf <vars> <clauses>'")
    try:
        variables, clauses = int(tokens[2]), int(tokens[3])
    except ValueError:
        raise CnfParseException(f"Line {line_number}: header counts must be integers")
    if variables < 0 or clauses < 0:
        raise CnfParseException(f"Line {line_number}: header counts must be non-negative")
    return variables, clauses


def parse_dimacs_cnf(text: str, strict: bool = False) -> CnfFormula:
    """Parse DIMACS CNF.

    Clauses are 0-terminated and may span lines; a lone ``0`` is an empty
    clause. ``c`` lines are comments and a ``%`` line ends the input. Strict
    mode rejects empty clauses, clauses longer than three literals and a
    clause count that differs from the header.

    Raises:
        CnfParseException: malformed header, missing header, bad token or literal out of range
    """
    header: Optional[Tuple[int, int]] = None
    clauses: List[Tuple[int, ...]] = []
    current: List[int] = []

    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise CnfParseException(f"Line {line_number}: second header")
            header = _parse_header(tokens, line_number)
            continue
        if header is None:
            raise CnfParseException(f"Line {line_number}: clause before the 'p cnf' header")
        for token in tokens:
            try:
                literal = int(token)
            except ValueError:
                raise CnfParseException(f"Line {line_number}: '{token}' is not a literal")
            if literal == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(literal) > header[0]:
                raise CnfParseException(
                    f"Line {line_number}: literal {literal} out of range for {header[0]} variables"
                )
            else:
                current.append(literal)

    if header is None:
        raise CnfParseException("Missing 'p cnf' header")
    if current:
        # last clause without its terminating 0
        clauses.append(tuple(current))

    if strict:
        for index, clause in enumerate(clauses, 1):
            if not clause:
                raise CnfParseException(f"Clause {index} is empty")
            if len(clause) > 3:
                raise CnfParseException(f"Clause {index} has {len(clause)} literals, at most 3 allowed")
        if len(clauses) != header[1]:
            raise CnfParseException(f"Header declares {header[1]} clauses, found {len(clauses)}")
    elif len(clauses) != header[1]:
        logger.warning(f"Header declares {header[1]} clauses, found {len(clauses)}")

    return CnfFormula(variable_count=header[0], clauses=tuple(clauses))


def load_cnf(path: Union[str, Path], strict: bool = False) -> CnfFormula:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CnfParseException(f"Cannot read CNF file '{path}': {e}")
    return parse_dimacs_cnf(text, strict=strict)


def evaluate(formula: CnfFormula, assignment: Sequence[bool]) -> bool:
    """``assignment[i - 1]`` is the value of variable i."""
    if len(assignment) < formula.variable_count:
        raise CnfParseException(
            f"Assignment covers {len(assignment)} of {formula.variable_count} variables"
        )
    return all(
        any(assignment[abs(literal) - 1] == (literal > 0) for literal in clause)
        for clause in formula.clauses
    )


def brute_force_sat(formula: CnfFormula) -> Optional[Assignment]:
    """First satisfying assignment in (False, True) lexicographic order, or ``None``."""
    for assignment in product((False, True), repeat=formula.variable_count):
        if evaluate(formula, assignment):
            return assignment
    return None


def random_bounded_formula(variables: int, seed: int, max_clause_size: int = 3) -> CnfFormula:
    """Random formula where every variable occurs two or three times.

    Occurrences with random signs are shuffled and cut into clauses of
    1..max_clause_size literals.
    """
    if variables < 1 or max_clause_size < 1:
        raise GeneratorException("A bounded formula needs at least one variable and clause size")
    rng = random.Random(seed)
    literals = [
        variable if rng.random() < 0.5 else -variable
        for variable in range(1, variables + 1)
        for _ in range(rng.choice((2, 3)))
    ]
    rng.shuffle(literals)
    clauses: List[Tuple[int, ...]] = []
    start = 0
    while start < len(literals):
        size = rng.randint(1, max_clause_size)
        clauses.append(tuple(literals[start:start + size]))
        start += size
    return CnfFormula(variable_count=variables, clauses=tuple(clauses))


def contradiction_family(variables: int) -> List[CnfFormula]:
    """Every sign pattern of the implication chain (l1)(¬l1 ∨ l2)...(¬l_{n-1} ∨ l_n)(¬l_n).

    Each member is unsatisfiable and every variable occurs exactly twice.
    """
    if variables < 1:
        raise GeneratorException("A contradiction chain needs at least one variable")
    family = []
    for signs in product((1, -1), repeat=variables):
        literals = [sign * variable for sign, variable in zip(signs, range(1, variables + 1))]
        clauses = [(literals[0],)]
        clauses.extend((-literals[i], literals[i + 1]) for i in range(variables - 1))
        clauses.append((-literals[-1],))
        family.append(CnfFormula(variable_count=variables, clauses=tuple(clauses)))
    return family
