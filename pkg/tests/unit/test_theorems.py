"""Unit tests for the closed-form classification."""

import networkx as nx
import pytest

from jacobson_lab.graph import NO_CYCLE, LengthValue, build_graph, to_networkx
from jacobson_lab.oracles import (
    EulerKind,
    SearchStatus,
    components,
    eulerian,
    girth,
    hamiltonian_cycle,
    hamiltonian_path,
    pancyclic_check,
)
from jacobson_lab.rings import parse_ring
from jacobson_lab.rings.primes import prime_power
from jacobson_lab.survey import CatalogFilter, catalog
from jacobson_lab.theory import (
    HamStatus,
    LcRule,
    classify,
    field_stats,
    is_z2_plus_field,
    lc_classified,
    lc_closed_form,
    lc_closed_form_ordered,
    lc_local,
    lc_rule,
    local_structure,
    lp_classified,
    lp_local,
    thm_components,
    thm_diameter_bound,
    thm_euler_trail,
    thm_eulerian,
    thm_girth,
    thm_hamiltonian,
    thm_pancyclic,
)
from jacobson_lab.utils.exceptions import UnsupportedRingError


class TestLengthValue:
    """Tests for the NoCycle-aware length type."""

    def test_ordering(self):
        assert NO_CYCLE < LengthValue(3) < LengthValue(4)
        assert max([LengthValue(3), NO_CYCLE]) == LengthValue(3)

    def test_rendering(self):
        assert str(NO_CYCLE) == "NoCycle"
        assert NO_CYCLE.to_json() == "NoCycle"
        assert LengthValue(5).to_json() == 5


class TestFieldStats:
    """Tests for component counts of field graphs."""

    @pytest.mark.parametrize(
        "q, components, bipartite",
        [(2, 1, 0), (3, 2, 0), (4, 2, 1), (5, 3, 1), (7, 4, 2), (8, 4, 3), (9, 5, 3)],
    )
    def test_counts(self, q, components, bipartite):
        stats = field_stats(q)
        assert (stats.components, stats.bipartite_components) == (components, bipartite)

    def test_rejects_order_one(self):
        with pytest.raises(UnsupportedRingError):
            field_stats(1)


class TestLocalStructure:
    """Tests for the component shape of local rings."""

    def test_z9(self):
        shape = local_structure(parse_ring("Z9"))
        assert (shape.clique_count, shape.clique_size, shape.biclique_count) == (2, 3, 0)
        assert shape.components == 2

    def test_truncated_over_gf4(self):
        shape = local_structure(parse_ring("GF(4)[x]/(x^2)"))
        assert (shape.clique_count, shape.biclique_count, shape.biclique_side) == (1, 1, 4)

    def test_requires_local_ring(self):
        with pytest.raises(UnsupportedRingError):
            local_structure(parse_ring("Z6"))


class TestClassification:
    """Tests for the per-theorem predicates."""

    def test_z3_z3(self):
        c = classify(parse_ring("Z3 x Z3"))
        assert c.eulerian
        assert c.ham is HamStatus.CYCLE
        assert c.lc == LengthValue(4)
        assert c.lp == LengthValue(4)

    def test_z2_z7(self):
        c = classify(parse_ring("Z2 x Z7"))
        assert c.ham is HamStatus.PATH_ONLY
        assert c.lp == LengthValue(5)
        assert not c.pancyclic

    def test_z4(self):
        c = classify(parse_ring("Z4"))
        assert c.euler_trail
        assert c.lc == NO_CYCLE

    @pytest.mark.parametrize(
        "spec, status",
        [
            ("Z2", HamStatus.NEITHER),
            ("Z4", HamStatus.PATH_ONLY),
            ("Z8", HamStatus.CYCLE),
            ("Z9", HamStatus.NEITHER),
            ("GF(4)", HamStatus.NEITHER),
            ("Z2 x Z3", HamStatus.PATH_ONLY),
            ("Z2 x GF(4)", HamStatus.PATH_ONLY),
            ("Z4 x Z2", HamStatus.CYCLE),
            ("Z2 x Z2 x Z2", HamStatus.CYCLE),
            ("Z3 x Z5", HamStatus.CYCLE),
        ],
    )
    def test_hamiltonian(self, spec, status):
        assert thm_hamiltonian(parse_ring(spec)) is status

    def test_z2_plus_field(self):
        assert is_z2_plus_field(parse_ring("Z5 x Z2"))
        assert not is_z2_plus_field(parse_ring("Z4 x Z3"))
        assert not thm_pancyclic(parse_ring("Z2 x Z5"))
        assert thm_pancyclic(parse_ring("Z4 x Z2"))

    @pytest.mark.parametrize("spec", ["Z2", "Z3 x Z3", "Z9 x Z3", "Z3 x Z3 x Z3"])
    def test_eulerian(self, spec):
        assert thm_eulerian(parse_ring(spec))

    @pytest.mark.parametrize("spec", ["Z3", "Z4", "Z3 x Z5", "Z2 x Z2", "Z6 x Z3"])
    def test_not_eulerian(self, spec):
        assert not thm_eulerian(parse_ring(spec))

    @pytest.mark.parametrize(
        "spec, expected",
        [
            ("Z4", True),
            ("GF(2)[x]/(x^2)", True),
            ("Z2 x Z2", True),
            ("GF(4) x Z2", True),
            ("Z4 x Z2", False),
            ("Z2 x Z3", False),
            ("Z8", False),
        ],
    )
    def test_euler_trail(self, spec, expected):
        assert thm_euler_trail(parse_ring(spec)) is expected

    def test_structure_predictions(self):
        assert thm_girth(parse_ring("Z2 x Z2")) == NO_CYCLE
        assert thm_girth(parse_ring("Z3 x Z3")) == LengthValue(3)
        assert thm_girth(parse_ring("Z8")) == LengthValue(3)
        assert thm_girth(parse_ring("Z4")) == NO_CYCLE
        assert thm_diameter_bound(parse_ring("Z6")) == 3
        assert thm_diameter_bound(parse_ring("Z9")) is None
        assert thm_components(parse_ring("Z9")) == 2
        assert thm_components(parse_ring("Z4 x Z3")) == 1


class TestInducedLengths:
    """Tests for the induced cycle and path classification."""

    @pytest.mark.parametrize(
        "spec, lc, lp",
        [
            ("Z2", None, 0),
            ("Z4", None, 1),
            ("Z8", 3, 1),
            ("Z9", 3, 1),
            ("GF(4)", None, 1),
            ("GF(4)[x]/(x^2)", 4, 2),
        ],
    )
    def test_local_tables(self, spec, lc, lp):
        R = parse_ring(spec)
        assert lc_local(R) == LengthValue(lc)
        assert lp_local(R) == LengthValue(lp)

    @pytest.mark.parametrize(
        "spec, lc, lp",
        [
            ("Z2 x Z2", None, 2),
            ("Z2 x Z3", 3, 3),
            ("Z2 x GF(4)", 4, 4),
            ("Z2 x Z5", 4, 4),
            ("Z2 x Z7", 4, 5),
            ("Z3 x Z3", 4, 4),
            ("Z4 x Z2", 3, 3),
            ("Z2 x Z2 x Z2", 3, 3),
            ("Z2 x Z2 x Z3", 4, 4),
        ],
    )
    def test_classified(self, spec, lc, lp):
        R = parse_ring(spec)
        assert lc_classified(R) == LengthValue(lc)
        assert lp_classified(R) == LengthValue(lp)

    def test_closed_form_values(self):
        """Hand-evaluated closed-form arithmetic."""
        assert lc_closed_form(parse_ring("Z3 x Z3"), 2) == 4
        assert lc_closed_form(parse_ring("Z2 x Z3"), 1) == 3
        assert lc_closed_form(parse_ring("Z2 x Z3"), 2) == 2
        assert lc_closed_form(parse_ring("Z2 x Z5"), 1) == 5
        assert lc_closed_form(parse_ring("Z2 x Z5"), 2) == 3

    def test_ordering_conventions(self):
        R = parse_ring("Z2 x Z5")
        assert lc_closed_form_ordered(R, "min") == 3
        assert lc_closed_form_ordered(R, "max") == 5
        assert lc_closed_form_ordered(R, "last") == 3
        with pytest.raises(ValueError):
            lc_closed_form_ordered(R, "first")

    def test_ordering_from_settings(self, monkeypatch):
        monkeypatch.setenv("JLAB_THEORY_LC_ORDERING", "max")
        assert lc_closed_form_ordered(parse_ring("Z2 x Z5")) == 5

    def test_closed_form_domain(self):
        with pytest.raises(UnsupportedRingError):
            lc_closed_form(parse_ring("Z9"), 1)
        with pytest.raises(UnsupportedRingError):
            lc_closed_form(parse_ring("Z3 x Z3"), 3)
        with pytest.raises(UnsupportedRingError):
            lc_local(parse_ring("Z3 x Z3"))

    @pytest.mark.parametrize(
        "spec, rule",
        [
            ("Z9", LcRule.LOCAL),
            ("Z2 x Z2", LcRule.Z2_Z2),
            ("Z4 x Z2", LcRule.RADICAL_Z2_Z2),
            ("Z2 x Z3", LcRule.SMALL_THREE),
            ("Z3 x Z3", LcRule.SMALL_FOUR),
            ("GF(4) x Z2", LcRule.SMALL_FOUR),
            ("Z3 x Z5", LcRule.FORMULA),
        ],
    )
    def test_rules(self, spec, rule):
        assert lc_rule(parse_ring(spec)) is rule
        assert rule.is_heuristic == (rule is LcRule.FORMULA)


class TestFieldGraphs:
    """field_stats against the built graph of every field of order <= 32."""

    @pytest.mark.parametrize("q", [q for q in range(2, 33) if prime_power(q)])
    def test_component_counts(self, q):
        G = build_graph(parse_ring(f"GF({q})"))
        parts = components(G)
        stats = field_stats(q)
        assert len(parts) == stats.components
        assert sum(1 for part in parts if len(part) == 2) == stats.bipartite_components


class TestGirthOverCatalog:
    """thm_girth matches the graph for every ring up to order 64."""

    def test_girth(self):
        for R in catalog(CatalogFilter(max_order=64, include_local=True)):
            assert thm_girth(R) == girth(build_graph(R)), R.label


def _ham_oracle(G, budget):
    cycle = hamiltonian_cycle(G, budget)
    assert cycle.status is not SearchStatus.BUDGET_EXCEEDED
    if cycle.found:
        return HamStatus.CYCLE
    path = hamiltonian_path(G, budget)
    assert path.status is not SearchStatus.BUDGET_EXCEEDED
    return HamStatus.PATH_ONLY if path.found else HamStatus.NEITHER


def _expected_euler(G):
    """Euler kind from networkx degrees and connectivity."""
    H = to_networkx(G)
    if not nx.is_connected(H):
        return EulerKind.NEITHER
    odd = sum(1 for _, d in H.degree() if d % 2)
    if odd == 0:
        return EulerKind.TOUR
    return EulerKind.TRAIL if odd == 2 else EulerKind.NEITHER


@pytest.mark.slow
class TestTheoremSweeps:
    """Classification theorems against the exact oracles across the catalog."""

    def test_hamiltonian(self, budget):
        checked = 0
        for R in catalog(CatalogFilter(max_order=48, include_local=True)):
            if R.vertex_count > 24:
                continue
            assert thm_hamiltonian(R) is _ham_oracle(build_graph(R), budget), R.label
            checked += 1
        assert checked > 60

    def test_pancyclic(self, budget):
        for R in catalog(CatalogFilter(max_order=40, include_local=True)):
            if R.vertex_count > 20:
                continue
            G = build_graph(R)
            result = pancyclic_check(G, budget)
            assert result.status is not SearchStatus.BUDGET_EXCEEDED, R.label
            assert result.is_pancyclic == hamiltonian_cycle(G, budget).found, R.label
            if R.is_local:
                # complete graphs K_m, m >= 3, are pancyclic although not listed
                factor = R.factors[0]
                complete = factor.residue_field_size == 2 and factor.radical_size >= 3
                assert result.is_pancyclic == complete, R.label
            else:
                assert result.is_pancyclic == thm_pancyclic(R), R.label

    def test_eulerian(self):
        missed_trails = []
        for R in catalog(CatalogFilter(max_order=81, include_local=True)):
            G = build_graph(R)
            result = eulerian(G)
            assert result.kind is _expected_euler(G), R.label
            assert (result.kind is EulerKind.TOUR) == thm_eulerian(R), R.label
            if thm_euler_trail(R):
                assert result.kind is EulerKind.TRAIL, R.label
            elif result.kind is EulerKind.TRAIL:
                missed_trails.append(R)
        # a blow-up by |J| >= 2 gives 0 or at least |J| odd vertices per class
        assert all(R.is_semisimple for R in missed_trails)
        labels = {R.label for R in missed_trails}
        assert {"Z3 x Z5", "GF(8) x Z2", "GF(16) x Z2"} <= labels
