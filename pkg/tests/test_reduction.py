import pytest
from pydantic import ValidationError

from src.core.enums import RoleKind
from src.core.exceptions import (
    CnfParseException,
    ContractViolationException,
    DisconnectedGraphException,
    GeneratorException,
    ReductionException,
    SizeGuardException,
)
from src.graph.bfs import is_connected
from src.graph.paths import domination_radius, validate_witness
from src.reduction.cnf import (
    brute_force_sat,
    contradiction_family,
    evaluate,
    load_cnf,
    parse_dimacs_cnf,
    random_bounded_formula,
)
from src.reduction.construction import (
    build_reduction,
    certified_diameter,
    certify_diameter,
    padded_variable_count,
    save_roles,
    validate_roles,
    write_roles,
)
from src.reduction.equivalence import assignment_from_witness, verify_equivalence
from src.schemas.reduction import CnfFormula

FOUR_CLAUSES = """c four clauses over three variables
p cnf 3 4
1 2 -3 0
-1 -2 3 0
1 -2 3 0
-1 2 -3 0
"""


@pytest.fixture
def formula() -> CnfFormula:
    return parse_dimacs_cnf(FOUR_CLAUSES)


@pytest.fixture
def instance(formula):
    return build_reduction(formula)


def assignment_path(instance, values):
    """Spine, one literal per padded variable, spine."""
    n = instance.n_padded
    path = [instance.spine_vertex(j) for j in range(1, n + 1)]
    path.extend(instance.literal_vertex(i, value) for i, value in enumerate(values, 1))
    path.extend(instance.spine_vertex(j) for j in range(n + 1, 2 * n + 1))
    return tuple(path)


class TestDimacsParser:
    def test_single_clause(self):
        parsed = parse_dimacs_cnf("p cnf 1 1\n1 0")
        assert (parsed.variable_count, parsed.clause_count) == (1, 1)

    def test_counts(self):
        parsed = parse_dimacs_cnf("p cnf 3 2\n1 -2 3 0\n-1 2 -3 0")
        assert (parsed.variable_count, parsed.clause_count, parsed.occurrence_count) == (3, 2, 6)
        assert parsed.occurrences() == [2, 2, 2]

    def test_literal_out_of_range(self):
        with pytest.raises(CnfParseException, match="out of range"):
            parse_dimacs_cnf("p cnf 1 1\n2 0")

    def test_clause_spanning_lines_and_end_marker(self):
        parsed = parse_dimacs_cnf("c comment\np cnf 2 2\n1\n-2 0 2\n0\n%\n0\n")
        assert parsed.clauses == ((1, -2), (2,))

    def test_unterminated_last_clause(self):
        assert parse_dimacs_cnf("p cnf 2 1\n1 2").clauses == ((1, 2),)

    def test_lone_zero_is_empty_clause(self):
        assert parse_dimacs_cnf("p cnf 1 2\n1 0\n0\n").clauses == ((1,), ())

    @pytest.mark.parametrize(
        "text, message",
        [
            ("", "Missing"),
            ("1 0\n", "before"),
            ("p dnf 1 1\n1 0\n", "malformed header"),
            ("p cnf x 1\n1 0\n", "integers"),
            ("p cnf 1 1\np cnf 1 1\n1 0\n", "second header"),
            ("p cnf 1 1\na 0\n", "not a literal"),
        ],
    )
    def test_malformed(self, text, message):
        with pytest.raises(CnfParseException, match=message):
            parse_dimacs_cnf(text)

    def test_strict_mode(self):
        with pytest.raises(CnfParseException, match="empty"):
            parse_dimacs_cnf("p cnf 1 2\n1 0\n0\n", strict=True)
        with pytest.raises(CnfParseException, match="at most 3"):
            parse_dimacs_cnf("p cnf 4 1\n1 2 3 4 0\n", strict=True)
        with pytest.raises(CnfParseException, match="declares 2"):
            parse_dimacs_cnf("p cnf 1 2\n1 0\n", strict=True)
        assert parse_dimacs_cnf("p cnf 1 2\n1 0\n").clause_count == 1

    def test_load_cnf(self, tmp_path):
        path = tmp_path / "four.cnf"
        path.write_text(FOUR_CLAUSES)
        assert load_cnf(path).clause_count == 4
        with pytest.raises(CnfParseException, match="Cannot read"):
            load_cnf(tmp_path / "missing.cnf")
        (tmp_path / "latin1.cnf").write_bytes(b"c caf\xe9\np cnf 1 1\n1 0\n")
        with pytest.raises(CnfParseException, match="Cannot read"):
            load_cnf(tmp_path / "latin1.cnf")

    def test_dimacs_round_trip(self, formula):
        assert parse_dimacs_cnf(formula.to_dimacs(), strict=True) == formula

    def test_formula_rejects_bad_literals(self):
        with pytest.raises(ValidationError):
            CnfFormula(variable_count=1, clauses=((2,),))
        with pytest.raises(ValidationError):
            CnfFormula(variable_count=1, clauses=((0,),))


class TestSatisfiability:
    def test_brute_force_takes_first_assignment(self, formula):
        assert brute_force_sat(formula) == (False, False, False)
        assert evaluate(formula, (True, True, True))
        assert not evaluate(formula, (False, False, True))

    def test_short_assignment_rejected(self, formula):
        with pytest.raises(CnfParseException):
            evaluate(formula, (True,))

    def test_contradiction_family(self):
        family = contradiction_family(3)
        assert len(family) == 8
        for member in family:
            assert brute_force_sat(member) is None
            assert member.occurrences() == [2, 2, 2]

    def test_bounded_formula(self):
        generated = random_bounded_formula(6, seed=3)
        assert generated == random_bounded_formula(6, seed=3)
        assert all(2 <= count <= 3 for count in generated.occurrences())
        assert all(1 <= len(clause) <= 3 for clause in generated.clauses)
        with pytest.raises(GeneratorException):
            random_bounded_formula(0, seed=1)


class TestConstruction:
    def test_padding(self):
        assert [padded_variable_count(n) for n in (0, 1, 3, 4, 5, 6, 7)] == [4, 4, 4, 4, 6, 6, 8]

    def test_vertex_count(self, instance):
        assert (instance.n_padded, instance.k_target) == (4, 3)
        assert instance.graph.n == 16 + 4 + 12 * 2
        assert is_connected(instance.graph)

    def test_roles_report(self, instance):
        report = validate_roles(instance)
        assert report.valid
        assert report.role_counts[RoleKind.CLAUSE_HUB] == 4
        assert report.role_counts[RoleKind.OCCURRENCE_CHAIN] == 24
        assert report.hub_per_clause_count == 44
        assert report.hub_per_occurrence_count == 16 + 12 * 3
        assert report.size_bounds == (36, 144)
        # x4 is padding and never occurs
        assert not report.occurrence_regime
        assert report.within_size_bounds is None

    @pytest.mark.parametrize("variables, seed", [(4, 0), (4, 7), (6, 1), (6, 5)])
    def test_size_bounds_in_occurrence_regime(self, variables, seed):
        report = validate_roles(build_reduction(random_bounded_formula(variables, seed)))
        assert report.valid
        assert report.occurrence_regime
        assert report.within_size_bounds

    def test_empty_formula_rejected(self):
        with pytest.raises(ReductionException):
            build_reduction(CnfFormula(variable_count=2, clauses=()))

    def test_diameter_certificate(self, instance):
        certificate = certify_diameter(instance)
        assert certificate.value == certificate.spine_distance == 11
        assert certificate.max_hub_eccentricity < 11
        assert certificate.stated_value == 14
        assert "differs" in certificate.note
        assert certified_diameter(instance) == 11

    def test_empty_clause_disconnects(self):
        instance = build_reduction(parse_dimacs_cnf("p cnf 1 2\n1 0\n0\n"))
        assert not is_connected(instance.graph)
        assert validate_roles(instance).valid
        with pytest.raises(DisconnectedGraphException):
            certify_diameter(instance)

    def test_roles_sidecar(self, instance, tmp_path):
        lines = write_roles(instance).splitlines()
        assert len(lines) == 44
        assert lines[0] == "V1\tspine_chain\t1"
        assert "C1_1_1\toccurrence_chain\t1,1,1" in lines
        path = tmp_path / "roles.tsv"
        save_roles(instance, path)
        assert path.read_text().splitlines() == lines


class TestWitnesses:
    def test_satisfying_path_dominates(self, instance):
        path = assignment_path(instance, (True, True, True, False))
        validate_witness(instance.graph, path, 3, 11)
        assert assignment_from_witness(instance, path) == (True, True, True)

    def test_falsifying_path_misses_a_hub(self, instance):
        path = assignment_path(instance, (False, False, True, True))
        assert domination_radius(instance.graph, path) == 4

    def test_both_polarities(self, instance):
        path = (instance.literal_vertex(1, True), instance.literal_vertex(1, False))
        with pytest.raises(ContractViolationException, match="both"):
            assignment_from_witness(instance, path)

    def test_skipped_variable(self, instance):
        with pytest.raises(ContractViolationException, match="no literal"):
            assignment_from_witness(instance, (instance.spine_vertex(1),))


class TestEquivalence:
    def test_satisfiable(self, formula):
        report = verify_equivalence(formula)
        assert report.satisfiable and report.laminar and report.fast_laminar
        assert report.agree
        assert report.diameter == 11
        assert report.witness_assignment_satisfies
        assert report.witness[0] == "V1"

    def test_unsatisfiable(self):
        for member in contradiction_family(2):
            report = verify_equivalence(member)
            assert not report.satisfiable
            assert not report.laminar
            assert report.fast_laminar is False
            assert report.agree

    def test_empty_clause(self):
        report = verify_equivalence(parse_dimacs_cnf("p cnf 1 2\n1 0\n0\n"))
        assert (report.satisfiable, report.laminar, report.diameter) == (False, False, None)
        assert report.agree

    def test_six_variables_skip_fast_recognizer(self):
        report = verify_equivalence(random_bounded_formula(6, seed=2))
        assert report.k_target == 4
        assert report.fast_laminar is None
        assert report.agree

    def test_size_guard(self):
        with pytest.raises(SizeGuardException):
            verify_equivalence(random_bounded_formula(7, seed=0))
        with pytest.raises(SizeGuardException):
            verify_equivalence(random_bounded_formula(6, seed=0), max_variables=4)
