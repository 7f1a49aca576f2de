"""Unit tests for catalogs, verification reports and CSV output."""

import io
import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from jacobson_lab.graph import build_graph, degree_closed_form, edge_count_closed_form
from jacobson_lab.oracles import SearchBudget
from jacobson_lab.rings import RingKind, format_ring, parse_ring
from jacobson_lab.survey import (
    CSV_COLUMNS,
    FLAG_ORDER,
    CatalogFilter,
    OracleStatus,
    OracleValue,
    catalog,
    classify_ring,
    discrepancy_flags,
    local_catalog,
    run_survey,
    verify_ring,
    witness_document,
    write_csv,
)
from jacobson_lab.theory import construct_hamiltonian

LEDGER = Path(__file__).resolve().parents[1] / "golden" / "discrepancy_ledger.json"

ORDER_NINE = [
    "Z2 x Z2",
    "Z2 x Z3",
    "GF(2)[x]/(x^2) x Z2",
    "GF(4) x Z2",
    "Z2 x Z2 x Z2",
    "Z2 x Z4",
    "Z3 x Z3",
]


class TestCatalog:
    """Tests for catalog enumeration."""

    def test_local_catalog(self):
        labels = [R.label for R in local_catalog(9)]
        assert labels == [
            "GF(4)",
            "GF(8)",
            "GF(9)",
            "GF(2)[x]/(x^2)",
            "GF(2)[x]/(x^3)",
            "GF(3)[x]/(x^2)",
            "Z2",
            "Z3",
            "Z4",
            "Z5",
            "Z7",
            "Z8",
            "Z9",
        ]

    def test_order_nine_non_local(self):
        labels = [format_ring(R) for R in catalog(CatalogFilter(max_order=9))]
        assert labels == ORDER_NINE

    def test_order_sixteen_with_local(self):
        labels = {format_ring(R) for R in catalog(CatalogFilter(max_order=16, include_local=True))}
        for expected in ["Z2", "Z4", "Z2 x Z2", "Z2 x Z3", "Z8", "Z9", "Z2 x Z5", "Z3 x Z4",
                         "GF(4)", "GF(4) x Z2", "Z16", "GF(4) x GF(4)", "Z2 x Z2 x Z2 x Z2"]:
            assert expected in labels

    def test_no_duplicates_and_sorted(self):
        rings = catalog(CatalogFilter(max_order=32, include_local=True))
        keys = [(R.size, format_ring(R)) for R in rings]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_kind_whitelist(self):
        filt = CatalogFilter(max_order=9, kinds=frozenset({RingKind.INTEGER_MOD}))
        labels = [format_ring(R) for R in catalog(filt)]
        assert labels == ["Z2 x Z2", "Z2 x Z3", "Z2 x Z2 x Z2", "Z2 x Z4", "Z3 x Z3"]

    def test_empty_intersection(self):
        filt = CatalogFilter(max_order=7, kinds=frozenset({RingKind.GALOIS_FIELD}))
        assert catalog(filt) == []

    def test_max_order_validated(self):
        with pytest.raises(ValidationError):
            CatalogFilter(max_order=1)


class TestClassifyRing:
    """Tests for formula-only reports."""

    def test_z3_z3(self):
        report = classify_ring(parse_ring("Z3 x Z3"))
        f = report.formula
        assert (report.order, report.radical, report.vertices, report.n_factors) == (9, 1, 8, 2)
        assert f.edges == "12"
        assert f.ham == "cycle"
        assert f.eulerian and not f.euler_trail
        assert (f.lc, f.lp, f.lc_closed_form) == (4, 4, 4)
        assert f.lc_rule == "small_case_4"
        assert not f.lc_heuristic
        assert report.oracle is None
        assert report.flags == []

    def test_local_ring(self):
        f = classify_ring(parse_ring("Z4")).formula
        assert f.euler_trail
        assert f.lc == "NoCycle"
        assert f.lc_closed_form is None
        assert f.diameter_bound is None

    def test_spec_text_is_kept(self):
        assert classify_ring(parse_ring("Z6"), spec="Z6").spec == "Z6"
        assert classify_ring(parse_ring("Z6")).spec == "Z2 x Z3"


class TestVerifyRing:
    """Tests for formula-versus-oracle comparison."""

    def test_clean_ring(self, budget):
        report = verify_ring(parse_ring("Z3 x Z3"), budget)
        assert report.flags == []
        o = report.oracle
        assert o.edges.value == 12
        assert o.ham.value == "cycle"
        assert o.euler.value == "tour"
        assert o.pancyclic.value is True
        assert (o.lc.value, o.lp.value) == (4, 4)
        assert o.components.value == 1

    def test_known_discrepancies(self, budget):
        report = verify_ring(parse_ring("Z2 x Z5"), budget)
        assert report.flags == ["edges", "degree", "lc_closed_form"]
        assert report.formula.edges == "16"
        assert report.oracle.edges.value == 15
        assert report.has_discrepancy

    def test_z2_z2(self, budget):
        report = verify_ring(parse_ring("Z2 x Z2"), budget)
        assert report.flags == []
        assert report.oracle.ham.value == "path"
        assert report.oracle.lp.value == 2
        assert report.oracle.lc.value == "NoCycle"
        assert report.oracle.euler.value == "trail"

    def test_oracle_limit_marks_skipped(self):
        report = verify_ring(parse_ring("Z3 x Z3"), SearchBudget(vertex_limit=5))
        assert report.oracle.ham.status is OracleStatus.SKIPPED
        assert report.oracle.lc.status is OracleStatus.SKIPPED
        assert report.oracle.edges.exact
        assert report.flags == []

    def test_graph_limit_skips_every_oracle(self, budget, monkeypatch):
        monkeypatch.setenv("JLAB_GRAPH_VERTEX_LIMIT", "5")
        report = verify_ring(parse_ring("Z3 x Z3"), budget)
        assert report.formula.edges == "12"
        assert report.flags == []
        for name, value in report.oracle:
            assert value.status is OracleStatus.SKIPPED, name
        assert report.csv_row()[CSV_COLUMNS.index("edges_oracle")] == "skipped"

    @pytest.mark.parametrize("spec", ["Z4 x Z2", "GF(2)[x]/(x^2) x Z2", "Z4 x Z4"])
    def test_radical_z2_z2_path_is_short(self, spec, budget):
        """With J != 0 and R/J = Z2 + Z2 every class is a clique, so induced paths stop at 2."""
        report = verify_ring(parse_ring(spec), budget)
        assert report.formula.lp == 3
        assert report.oracle.lp.value == 2
        assert "lp" in report.flags

    def test_flags_need_exact_values(self, budget):
        report = verify_ring(parse_ring("Z3 x Z3"), budget)
        wrong = report.formula.model_copy(update={"lc": 5})
        assert discrepancy_flags(wrong, report.oracle) == ["lc"]
        unknown = report.oracle.model_copy(
            update={"lc": OracleValue(status=OracleStatus.BUDGET_EXCEEDED)}
        )
        assert discrepancy_flags(wrong, unknown) == []

    def test_degree_and_edge_rule(self):
        """Edges and degree disagree exactly when n >= 2 and some |F_i| >= 4."""
        for R in catalog(CatalogFilter(max_order=32, include_local=True)):
            G = build_graph(R)
            edges_off = edge_count_closed_form(R).render() != str(G.edge_count)
            degree_off = any(
                degree_closed_form(R, x) != G.degree(i) for i, x in enumerate(G.vertices)
            )
            expected = R.n >= 2 and max(R.residue_field_orders) >= 4
            assert edges_off == degree_off == expected, R.label


class TestGoldenLedger:
    """Regression lock on the reviewed discrepancy ledger."""

    def test_ledger_tracks_every_flag(self):
        ledger = json.loads(LEDGER.read_text())
        assert ledger["flags"] == list(FLAG_ORDER)
        assert ledger["max_order"] == 32

    @pytest.mark.slow
    def test_ledger(self, budget):
        ledger = json.loads(LEDGER.read_text())
        reports = run_survey(CatalogFilter(max_order=ledger["max_order"], include_local=True), budget)
        assert {r.spec for r in reports} == set(ledger["rings"])
        for report in reports:
            assert report.flags == ledger["rings"][report.spec], report.spec


class TestCsv:
    """Tests for CSV rendering."""

    def test_header(self):
        out = io.StringIO()
        write_csv([], out)
        assert out.getvalue() == ",".join(CSV_COLUMNS) + "\n"
        assert out.getvalue().startswith("spec,order,radical,n_factors,vertices,edges_formula,")

    def test_row(self, budget):
        row = verify_ring(parse_ring("Z2 x Z5"), budget).csv_row()
        assert ",".join(row) == (
            "Z2 x Z5,10,1,2,9,16,15,path,path,false,false,false,false,false,false,"
            "4,4,4,4,edges;degree;lc_closed_form"
        )

    def test_classify_only_row(self):
        row = classify_ring(parse_ring("Z3 x Z3")).csv_row()
        assert row[CSV_COLUMNS.index("ham_oracle")] == "skipped"
        assert row[CSV_COLUMNS.index("flags")] == ""

    def test_budget_marker(self):
        assert OracleValue(status=OracleStatus.BUDGET_EXCEEDED).render() == "budget_exceeded"
        assert OracleValue(status=OracleStatus.EXACT, value=False).render() == "false"

    def test_survey_is_deterministic(self, budget):
        filt = CatalogFilter(max_order=9)
        first, second = io.StringIO(), io.StringIO()
        write_csv(run_survey(filt, budget), first)
        write_csv(run_survey(filt, budget), second)
        assert first.getvalue() == second.getvalue()
        lines = first.getvalue().split("\n")
        assert len(lines) == len(ORDER_NINE) + 2  # header, rows, trailing newline
        assert [line.split(",")[0] for line in lines[1:-1]] == ORDER_NINE

    def test_graph_limit_keeps_formula_columns(self, budget, monkeypatch):
        monkeypatch.setenv("JLAB_GRAPH_VERTEX_LIMIT", "5")
        reports = run_survey(CatalogFilter(max_order=9), budget)
        by_spec = {r.spec: r for r in reports}
        assert by_spec["Z2 x Z3"].oracle is not None
        assert by_spec["Z3 x Z3"].oracle.ham.status is OracleStatus.SKIPPED
        assert by_spec["Z3 x Z3"].flags == []
        assert by_spec["Z3 x Z3"].formula.edges == "12"


class TestWitnessDocument:
    """Tests for the witness JSON layout."""

    def test_hamiltonian_witness(self, z3z3_graph):
        R = z3z3_graph.ring
        trace = construct_hamiltonian(R)
        doc = witness_document(R, z3z3_graph, "hamiltonian", trace.strategy.value, [trace.walk])
        assert doc["spec"] == "Z3 x Z3"
        assert doc["strategy"] == "TwoFieldGrid"
        (walk,) = doc["walks"]
        assert walk["kind"] == "cycle"
        assert walk["length"] == 8
        assert len(walk["vertices"]) == 8
        assert all(len(v) == 2 for v in walk["vertices"])
        json.dumps(doc)
