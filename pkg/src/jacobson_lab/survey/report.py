"""
Formula-versus-oracle verification reports and their CSV/JSON renderings.

A discrepancy flag is raised only when both sides are exact and disagree;
budget overruns and skipped oracles never raise flags.
"""

import csv
from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, TextIO, Union

from pydantic import BaseModel, Field

from jacobson_lab.config import get_settings
from jacobson_lab.graph.jgraph import (
    JacobsonGraph,
    build_graph,
    degree_closed_form,
    edge_count_closed_form,
)
from jacobson_lab.oracles import (
    EulerKind,
    SearchBudget,
    SearchStatus,
    Walk,
    components,
    diameter,
    eulerian,
    girth,
    hamiltonian_cycle,
    hamiltonian_path,
    longest_induced_cycle,
    longest_induced_path,
    pancyclic_check,
)
from jacobson_lab.rings.product_ring import ProductRing
from jacobson_lab.rings.ring_spec import format_ring
from jacobson_lab.survey.catalog import CatalogFilter, catalog
from jacobson_lab.theory.theorems import classify, lc_closed_form_ordered
from jacobson_lab.utils import get_logger
from jacobson_lab.utils.exceptions import GraphSizeError, OracleLimitError

logger = get_logger(__name__)

Scalar = Union[bool, int, str]

FLAG_ORDER = (
    "edges",
    "degree",
    "ham",
    "euler",
    "trail",
    "pancyclic",
    "lc",
    "lc_closed_form",
    "lp",
    "girth",
    "diameter",
    "components",
)

CSV_COLUMNS = (
    "spec",
    "order",
    "radical",
    "n_factors",
    "vertices",
    "edges_formula",
    "edges_oracle",
    "ham_thm",
    "ham_oracle",
    "euler_thm",
    "euler_oracle",
    "trail_thm",
    "trail_oracle",
    "pancyclic_thm",
    "pancyclic_oracle",
    "lc_formula",
    "lc_oracle",
    "lp_formula",
    "lp_oracle",
    "flags",
)


class OracleStatus(str, Enum):
    EXACT = "exact"
    BUDGET_EXCEEDED = "budget_exceeded"
    SKIPPED = "skipped"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return "" if value is None else str(value)


class OracleValue(BaseModel):
    """One oracle outcome."""

    status: OracleStatus
    value: Optional[Scalar] = None

    @property
    def exact(self) -> bool:
        return self.status is OracleStatus.EXACT

    def render(self) -> str:
        return _cell(self.value) if self.exact else self.status.value


def _exact(value: Scalar) -> OracleValue:
    return OracleValue(status=OracleStatus.EXACT, value=value)


_SKIPPED = OracleValue(status=OracleStatus.SKIPPED)
_BUDGET = OracleValue(status=OracleStatus.BUDGET_EXCEEDED)


class FormulaValues(BaseModel):
    """Closed-form side of a report."""

    edges: str
    edges_integral: bool
    ham: str
    pancyclic: bool
    eulerian: bool
    euler_trail: bool
    lc: Scalar
    lp: Scalar
    lc_rule: str
    lc_heuristic: bool
    lc_closed_form: Optional[int] = None
    girth: Scalar
    diameter_bound: Optional[int] = None
    components: int


class OracleValues(BaseModel):
    """Exact side of a report."""

    edges: OracleValue
    degree_mismatches: OracleValue
    ham: OracleValue
    euler: OracleValue
    pancyclic: OracleValue
    lc: OracleValue
    lp: OracleValue
    girth: OracleValue
    diameter: OracleValue
    components: OracleValue


class VerificationReport(BaseModel):
    """Everything known about one ring."""

    spec: str
    order: int
    radical: int
    vertices: int
    factors: List[str]
    formula: FormulaValues
    oracle: Optional[OracleValues] = None
    flags: List[str] = Field(default_factory=list)

    @property
    def n_factors(self) -> int:
        return len(self.factors)

    @property
    def has_discrepancy(self) -> bool:
        return bool(self.flags)

    def csv_row(self) -> List[str]:
        f, o = self.formula, self.oracle

        def oracle_cell(name: str, transform: Callable[[Scalar], Scalar] = lambda v: v) -> str:
            if o is None:
                return OracleStatus.SKIPPED.value
            value: OracleValue = getattr(o, name)
            return _cell(transform(value.value)) if value.exact else value.status.value

        return [
            self.spec,
            str(self.order),
            str(self.radical),
            str(self.n_factors),
            str(self.vertices),
            f.edges,
            oracle_cell("edges"),
            f.ham,
            oracle_cell("ham"),
            _cell(f.eulerian),
            oracle_cell("euler", lambda v: v == EulerKind.TOUR.value),
            _cell(f.euler_trail),
            oracle_cell("euler", lambda v: v == EulerKind.TRAIL.value),
            _cell(f.pancyclic),
            oracle_cell("pancyclic"),
            _cell(f.lc),
            oracle_cell("lc"),
            _cell(f.lp),
            oracle_cell("lp"),
            ";".join(self.flags),
        ]


def _formula_values(R: ProductRing) -> FormulaValues:
    c = classify(R)
    edges = edge_count_closed_form(R)
    closed_form = None
    if not R.is_local and not (R.is_semisimple and sorted(R.residue_field_orders) == [2, 2]):
        closed_form = lc_closed_form_ordered(R)
    return FormulaValues(
        edges=edges.render(),
        edges_integral=edges.is_integral,
        ham=c.ham.value,
        pancyclic=c.pancyclic,
        eulerian=c.eulerian,
        euler_trail=c.euler_trail,
        lc=c.lc.to_json(),
        lp=c.lp.to_json(),
        lc_rule=c.lc_rule.value,
        lc_heuristic=c.lc_rule.is_heuristic,
        lc_closed_form=closed_form,
        girth=c.girth.to_json(),
        diameter_bound=c.diameter_bound,
        components=c.components,
    )


def classify_ring(R: ProductRing, spec: Optional[str] = None) -> VerificationReport:
    """Formula-only report; no graph is built."""
    return VerificationReport(
        spec=spec or format_ring(R),
        order=R.size,
        radical=R.radical_size,
        vertices=R.vertex_count,
        factors=[f.label for f in R.factors],
        formula=_formula_values(R),
    )


# ----------------------------------------------------------------------
# Oracles
# ----------------------------------------------------------------------


def _guarded(run: Callable[[], OracleValue]) -> OracleValue:
    try:
        return run()
    except OracleLimitError as e:
        logger.debug(f"Skipped: {e}")
        return _SKIPPED


def _ham_oracle(G: JacobsonGraph, budget: SearchBudget) -> OracleValue:
    cycle = hamiltonian_cycle(G, budget)
    if cycle.status is SearchStatus.BUDGET_EXCEEDED:
        return _BUDGET
    if cycle.found:
        return _exact("cycle")
    path = hamiltonian_path(G, budget)
    if path.status is SearchStatus.BUDGET_EXCEEDED:
        return _BUDGET
    return _exact("path" if path.found else "neither")


def _pancyclic_oracle(G: JacobsonGraph, budget: SearchBudget) -> OracleValue:
    result = pancyclic_check(G, budget)
    if result.status is SearchStatus.BUDGET_EXCEEDED:
        return _BUDGET
    return _exact(result.is_pancyclic)


def _induced_oracle(G: JacobsonGraph, budget: SearchBudget, closed: bool) -> OracleValue:
    search = longest_induced_cycle if closed else longest_induced_path
    result = search(G, budget)
    if result.status is SearchStatus.BUDGET_EXCEEDED:
        return _BUDGET
    return _exact(result.length.to_json())


def run_oracles(R: ProductRing, G: JacobsonGraph, budget: SearchBudget) -> OracleValues:
    """Run every oracle that fits the budget."""
    mismatches = sum(
        1 for i, x in enumerate(G.vertices) if degree_closed_form(R, x) != G.degree(i)
    )
    structural = G.n <= get_settings().oracle.structure_vertex_limit
    if structural:
        d = diameter(G)
        girth_value = _exact(girth(G).to_json())
        diameter_value = _exact("disconnected" if d is None else d)
    else:
        girth_value = diameter_value = _SKIPPED

    return OracleValues(
        edges=_exact(G.edge_count),
        degree_mismatches=_exact(mismatches),
        ham=_guarded(lambda: _ham_oracle(G, budget)),
        euler=_exact(eulerian(G).kind.value),
        pancyclic=_guarded(lambda: _pancyclic_oracle(G, budget)),
        lc=_guarded(lambda: _induced_oracle(G, budget, closed=True)),
        lp=_guarded(lambda: _induced_oracle(G, budget, closed=False)),
        girth=girth_value,
        diameter=diameter_value,
        components=_exact(len(components(G))),
    )


def _skipped_oracles() -> OracleValues:
    return OracleValues(**{name: _SKIPPED for name in OracleValues.model_fields})


def discrepancy_flags(formula: FormulaValues, oracle: OracleValues) -> List[str]:
    """Flags in FLAG_ORDER; each requires an exact oracle value that disagrees."""
    raised = set()

    def compare(flag: str, value: OracleValue, differs: Callable[[Scalar], bool]) -> None:
        if value.exact and differs(value.value):
            raised.add(flag)

    compare("edges", oracle.edges, lambda v: formula.edges != str(v))
    compare("degree", oracle.degree_mismatches, lambda v: v != 0)
    compare("ham", oracle.ham, lambda v: formula.ham != v)
    compare("euler", oracle.euler, lambda v: formula.eulerian != (v == EulerKind.TOUR.value))
    compare("trail", oracle.euler, lambda v: formula.euler_trail != (v == EulerKind.TRAIL.value))
    compare("pancyclic", oracle.pancyclic, lambda v: formula.pancyclic != v)
    compare("lc", oracle.lc, lambda v: formula.lc != v)
    if formula.lc_closed_form is not None:
        compare("lc_closed_form", oracle.lc, lambda v: formula.lc_closed_form != v)
    compare("lp", oracle.lp, lambda v: formula.lp != v)
    compare("girth", oracle.girth, lambda v: formula.girth != v)
    if formula.diameter_bound is not None:
        bound = formula.diameter_bound
        compare("diameter", oracle.diameter, lambda v: v == "disconnected" or v > bound)
    compare("components", oracle.components, lambda v: formula.components != v)
    return [flag for flag in FLAG_ORDER if flag in raised]


def verify_ring(
    R: ProductRing,
    budget: Optional[SearchBudget] = None,
    spec: Optional[str] = None,
) -> VerificationReport:
    """
    Formulas plus oracles for one ring.

    A graph above the build limit is not built: the report keeps its formula
    columns, every oracle entry is skipped and no flag is raised.
    """
    budget = budget or SearchBudget.from_settings()
    report = classify_ring(R, spec)
    try:
        G = build_graph(R)
    except GraphSizeError as e:
        logger.warning(f"{report.spec}: {e}")
        return report.model_copy(update={"oracle": _skipped_oracles()})
    oracle = run_oracles(R, G, budget)
    flags = discrepancy_flags(report.formula, oracle)
    if flags:
        logger.warning(f"{report.spec}: discrepancies {', '.join(flags)}")
    return report.model_copy(update={"oracle": oracle, "flags": flags})


# ----------------------------------------------------------------------
# Survey
# ----------------------------------------------------------------------


def run_survey(filt: CatalogFilter, budget: Optional[SearchBudget] = None) -> List[VerificationReport]:
    """Verify every catalog ring; graphs above the build limit keep formula columns only."""
    budget = budget or SearchBudget.from_settings()
    reports = []
    for R in catalog(filt):
        reports.append(verify_ring(R, budget))
    logger.info(f"Surveyed {len(reports)} rings up to order {filt.max_order}")
    return reports


def write_csv(reports: Iterable[VerificationReport], stream: TextIO) -> None:
    """Header plus one row per report, LF line endings."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        writer.writerow(report.csv_row())


def witness_document(
    R: ProductRing,
    G: JacobsonGraph,
    kind: str,
    strategy: str,
    walks: Sequence[Walk],
) -> Dict[str, Any]:
    """JSON-ready witness: walks as lists of coordinate tuples."""
    return {
        "spec": format_ring(R),
        "kind": kind,
        "strategy": strategy,
        "walks": [
            {
                "kind": w.kind.value,
                "length": w.length,
                "vertices": [list(x) for x in w.elements(G)],
            }
            for w in walks
        ],
    }
