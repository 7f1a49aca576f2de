"""
Explicit Hamiltonian cycles and paths for Jacobson graphs.

Builders work on ring elements (coordinate tuples) and only at the end map
them to vertex ids of the built graph, where the result is validated. Every
builder is deterministic.

Base families:
- two_field_cycle: E + F with |E| >= |F| >= 3. Rows x = r of E are grouped
  into blocks (a row pair {a, a^-1} is complete bipartite, rows 1 and -1 are
  cliques) and consecutive blocks are joined either directly through
  mutually inverse columns or through a unit of row 0.
- k_z2_z2_cycle: K + Z2 + Z2, threading the Z2 + Z2 layers 01, 11, 10
  around units of layer 00.
- layer_compose: extends a Hamiltonian cycle of S to S + F layer by layer.
- blowup_lift / coset_schedule: rings with J(R) != 0 through the cosets
  x + J(R), which adjacency cannot tell apart.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from jacobson_lab.config import get_settings
from jacobson_lab.graph.jgraph import JacobsonGraph, build_graph
from jacobson_lab.oracles.pancyclic import cycle_of_length, shorter_cycles
from jacobson_lab.oracles.walks import SearchBudget, Walk, WalkKind, validate_walk
from jacobson_lab.rings.local_ring import (
    GaloisField,
    IntegerModPrimePower,
    LocalRing,
    make_local_ring,
)
from jacobson_lab.rings.primes import prime_power
from jacobson_lab.rings.product_ring import (
    ProductRing,
    RingElement,
    make_product,
    semisimplify,
)
from jacobson_lab.theory.theorems import HamStatus, thm_hamiltonian, thm_pancyclic
from jacobson_lab.utils import get_logger
from jacobson_lab.utils.exceptions import ConstructionError, NotAVertexError

logger = get_logger(__name__)

FieldLike = Union[int, LocalRing]


class Strategy(str, Enum):
    """Construction that produced a walk."""

    LAYER_COMPOSE = "LayerCompose"
    TWO_FIELD_GRID = "TwoFieldGrid"
    KZ2Z2 = "KZ2Z2"
    COSET_SCHEDULE = "CosetSchedule"
    BLOWUP_LIFT = "BlowupLift"
    LOCAL_CLIQUE = "LocalClique"


@dataclass(frozen=True)
class ConstructionTrace:
    """A validated walk together with the steps that produced it."""

    strategy: Strategy
    ring: ProductRing
    walk: Walk
    elements: Tuple[RingElement, ...]
    children: Tuple["ConstructionTrace", ...] = field(default=())

    def strategies(self) -> List[str]:
        """Strategy tags from the innermost step outwards."""
        tags: List[str] = []
        for child in self.children:
            tags.extend(child.strategies())
        tags.append(self.strategy.value)
        return tags


# ----------------------------------------------------------------------
# Field helpers
# ----------------------------------------------------------------------


def field_of_order(q: int) -> LocalRing:
    """Z_p for primes, GF(p^k) otherwise."""
    pk = prime_power(q)
    if pk is None:
        raise ConstructionError(f"no field of order {q}")
    p, k = pk
    return make_local_ring(IntegerModPrimePower(p, 1) if k == 1 else GaloisField(p, k))


def _as_field(F: FieldLike) -> LocalRing:
    if isinstance(F, LocalRing):
        if not F.is_field:
            raise ConstructionError(f"{F.label} is not a field")
        return F
    return field_of_order(F)


def inverse_pairs(F: LocalRing) -> List[Tuple[int, int]]:
    """Pairs (a, a^-1) with a < a^-1 over the units other than 1 and -1."""
    minus_one = F.neg(1)
    pairs = []
    for a in F.units():
        if a in (1, minus_one):
            continue
        inv = F.inverse(a)
        if a < inv:
            pairs.append((a, inv))
    return pairs


@dataclass(frozen=True)
class _Unit:
    """
    A run of units threaded between two segments.

    The predecessor's coordinate must be the inverse of members[0] and the
    successor's the inverse of members[-1].
    """

    members: Tuple[int, ...]
    entry: int
    exit: int


def _units(F: LocalRing, leading_minus_one: bool) -> List[_Unit]:
    minus_one = F.neg(1)
    pairs = [_Unit((a, b), b, a) for a, b in inverse_pairs(F)]
    one = [_Unit((1,), 1, 1)]
    minus = [_Unit((minus_one,), minus_one, minus_one)] if minus_one != 1 else []
    if leading_minus_one:
        return minus + pairs + one
    return one + pairs + minus


# ----------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------


def _finish(
    R: ProductRing,
    elements: Sequence[RingElement],
    kind: WalkKind,
    strategy: Strategy,
    children: Tuple[ConstructionTrace, ...] = (),
    graph: Optional[JacobsonGraph] = None,
) -> ConstructionTrace:
    G = graph or build_graph(R)
    try:
        ids = tuple(G.index_of(x) for x in elements)
    except NotAVertexError as e:
        raise ConstructionError(f"{R.label}: {e}", strategy.value) from e
    walk = Walk(kind, ids)
    if get_settings().theory.construction_validate:
        check = validate_walk(G, walk, spanning=True)
        if not check:
            raise ConstructionError(
                f"{R.label}: {check.message} at position {check.index}", strategy.value
            )
    logger.debug(f"{strategy.value} produced a {kind.value} of {len(ids)} vertices on {R.label}")
    return ConstructionTrace(strategy, R, walk, tuple(elements), children)


# ----------------------------------------------------------------------
# Two fields
# ----------------------------------------------------------------------


def _two_field_elements(E: LocalRing, F: LocalRing) -> List[RingElement]:
    e_minus = E.neg(1)
    f_minus = F.neg(1)
    blocks: List[Tuple[int, ...]] = [pair for pair in inverse_pairs(E)]
    blocks.append((1,))
    if e_minus != 1:
        blocks.append((e_minus,))
    units = _units(F, leading_minus_one=False)
    N, k = len(blocks), len(units)
    if N < k:
        raise ConstructionError(f"|E| = {E.size} must not be smaller than |F| = {F.size}")

    start: List[Optional[int]] = [None] * N
    end: List[Optional[int]] = [None] * N
    for i, unit in enumerate(units):
        end[i] = unit.entry
        start[(i + 1) % N] = unit.exit

    def is_clique(i: int) -> bool:
        return len(blocks[i]) == 1

    columns = list(dict.fromkeys([1, f_minus] + list(F.units())))
    for i in range(k, N):
        j = (i + 1) % N
        for c in columns:
            if is_clique(i) and c == start[i]:
                continue
            if is_clique(j) and end[j] is not None and F.inverse(c) == end[j]:
                continue
            end[i], start[j] = c, F.inverse(c)
            break

    sequence: List[RingElement] = []
    for i, rows in enumerate(blocks):
        s, t = start[i], end[i]
        if len(rows) == 2:
            a, a_inv = rows
            top = [s] + [c for c in F.elements() if c != s]
            bottom = [c for c in F.elements() if c != t] + [t]
            for x, y in zip(top, bottom):
                sequence.extend([(a, x), (a_inv, y)])
        else:
            r = rows[0]
            middle = [c for c in F.elements() if c not in (s, t)]
            sequence.extend((r, c) for c in [s] + middle + [t])
        if i < k:
            sequence.extend((0, m) for m in units[i].members)
    return sequence


def _two_field_trace(E: LocalRing, F: LocalRing) -> ConstructionTrace:
    R = make_product([E, F])
    return _finish(R, _two_field_elements(E, F), WalkKind.CYCLE, Strategy.TWO_FIELD_GRID)


def two_field_cycle(E: FieldLike, F: FieldLike) -> Walk:
    """
    Hamiltonian cycle of the Jacobson graph of E + F.

    Args:
        E: Field (or field order) with |E| >= |F|
        F: Field (or field order) with |F| >= 3

    Returns:
        Validated CYCLE walk on build_graph(E + F)

    Raises:
        ConstructionError: If |F| < 3 or |E| < |F|
    """
    E, F = _as_field(E), _as_field(F)
    if F.size < 3 or E.size < F.size:
        raise ConstructionError(
            f"needs |E| >= |F| >= 3, got |E| = {E.size}, |F| = {F.size}",
            Strategy.TWO_FIELD_GRID.value,
        )
    return _two_field_trace(E, F).walk


# ----------------------------------------------------------------------
# K + Z2 + Z2
# ----------------------------------------------------------------------


def _kz2z2_elements(K: LocalRing) -> List[RingElement]:
    L01, L11, L10 = (0, 1), (1, 1), (1, 0)

    def at(k: int, layer: Tuple[int, int]) -> RingElement:
        return (k,) + layer

    units = _units(K, leading_minus_one=True)
    m = len(units)
    ks = list(K.elements())

    if m == 1:
        sequence = [at(1, L01)] + [at(k, L01) for k in ks if k != 1]
        sequence += [at(k, L11) for k in ks]
        sequence += [at(k, L10) for k in ks if k != 1] + [at(1, L10), at(1, (0, 0))]
        return sequence

    first = units[0].entry
    sequence = [at(1, L01)] + [at(k, L01) for k in ks if k not in (1, first)] + [at(first, L01)]
    sequence += [at(u, (0, 0)) for u in units[0].members]

    used = set()
    for i in range(1, m - 1):
        pair = [units[i - 1].exit, units[i].entry]
        used.update(pair)
        sequence += [at(k, L11) for k in pair]
        sequence += [at(u, (0, 0)) for u in units[i].members]

    lead = units[m - 2].exit
    sequence += [at(lead, L11)] + [at(k, L11) for k in ks if k not in used and k != lead]
    sequence += [at(k, L10) for k in ks if k != 1] + [at(1, L10)]
    sequence += [at(u, (0, 0)) for u in units[m - 1].members]
    return sequence


def _kz2z2_trace(K: LocalRing) -> ConstructionTrace:
    z2 = field_of_order(2)
    R = make_product([K, z2, z2])
    return _finish(R, _kz2z2_elements(K), WalkKind.CYCLE, Strategy.KZ2Z2)


def k_z2_z2_cycle(K: FieldLike) -> Walk:
    """Validated Hamiltonian cycle on the 4|K| - 1 vertices of K + Z2 + Z2."""
    return _kz2z2_trace(_as_field(K)).walk


# ----------------------------------------------------------------------
# Composition S -> S + F
# ----------------------------------------------------------------------


def _compose_elements(
    S: ProductRing, cycle: Sequence[RingElement], F: LocalRing
) -> List[RingElement]:
    x, y = cycle[0], cycle[-1]
    zero = S.zero()
    everything = [s for s in S.elements() if s != x and s != y]

    def clique_layer(f: int) -> List[RingElement]:
        return [s + (f,) for s in [x] + everything + [y]]

    def path_layer(f: int) -> List[RingElement]:
        return [s + (f,) for s in cycle]

    minus_one = F.neg(1)
    sequence: List[RingElement] = []
    if minus_one != 1:
        sequence += clique_layer(minus_one)
    sequence += path_layer(0) + clique_layer(1)
    for a, a_inv in inverse_pairs(F):
        sequence += path_layer(a)
        sequence += [zero + (a_inv,), zero + (a,)]
        sequence += path_layer(a_inv)
    return sequence


def layer_compose(S: ProductRing, cycle_S: Walk, F: FieldLike) -> Walk:
    """
    Extend a Hamiltonian cycle of S to one of S + F.

    The closing edge {x, y} of cycle_S is opened into a path P from x to y.
    Layers F = 1 and F = -1 are cliques and are crossed as Q (all of S from
    x to y); layer 0 and each layer pair {a, a^-1} are crossed along P, with
    the pair joined through 0 + a^-1 and 0 + a. Consecutive layers meet at
    the edge y -- x.

    Raises:
        ConstructionError: If cycle_S is not a Hamiltonian cycle of S or S is not semisimple
    """
    F = _as_field(F)
    if not S.is_semisimple:
        raise ConstructionError(f"{S.label} is not a product of fields", Strategy.LAYER_COMPOSE.value)
    G_S = build_graph(S)
    check = validate_walk(G_S, cycle_S, spanning=True)
    if cycle_S.kind is not WalkKind.CYCLE or not check:
        raise ConstructionError(
            f"input is not a Hamiltonian cycle of {S.label}: {check.message}",
            Strategy.LAYER_COMPOSE.value,
        )
    elements = _compose_elements(S, cycle_S.elements(G_S), F)
    R = make_product(list(S.factors) + [F])
    return _finish(R, elements, WalkKind.CYCLE, Strategy.LAYER_COMPOSE).walk


# ----------------------------------------------------------------------
# Semisimple rings
# ----------------------------------------------------------------------


def _unpermute(x: RingElement, order: Sequence[int]) -> RingElement:
    out = [0] * len(order)
    for position, index in enumerate(order):
        out[index] = x[position]
    return tuple(out)


def _semisimple_cycle(R: ProductRing) -> ConstructionTrace:
    """Hamiltonian cycle of a product of fields other than Z2 + F."""
    fields = list(R.factors)
    sizes = [f.size for f in fields]
    big = sorted((i for i in range(R.n) if sizes[i] >= 3), key=lambda i: (-sizes[i], i))

    if len(big) >= 2:
        order = big[:2]
        trace = _two_field_trace(fields[order[0]], fields[order[1]])
    else:
        twos = [i for i in range(R.n) if sizes[i] == 2]
        head = big[0] if big else twos[0]
        order = [head] + [i for i in twos if i != head][:2]
        trace = _kz2z2_trace(fields[head])
    logger.info(f"{R.label}: base cycle {trace.strategy.value} on {trace.ring.label}")

    elements = list(trace.elements)
    for i in range(R.n):
        if i in order:
            continue
        S = trace.ring
        elements = _compose_elements(S, elements, fields[i])
        order.append(i)
        ring = make_product(list(S.factors) + [fields[i]])
        trace = _finish(ring, elements, WalkKind.CYCLE, Strategy.LAYER_COMPOSE, (trace,))

    if order != list(range(R.n)):
        user = [_unpermute(x, order) for x in elements]
        trace = _finish(R, user, WalkKind.CYCLE, trace.strategy, trace.children)
    return trace


# ----------------------------------------------------------------------
# Rings with a radical
# ----------------------------------------------------------------------


def fiber(R: ProductRing, residue: Sequence[int]) -> List[RingElement]:
    """
    The coset of R/J(R) over a residue tuple.

    Element j is the canonical lift (same codes) plus the j-th radical element
    in lexicographic order, so index 0 is the lift itself.
    """
    lift = tuple(residue)
    return [R.add(lift, m) for m in R.radical_elements()]


def _blowup_elements(R: ProductRing, quotient_cycle: Sequence[RingElement]) -> List[RingElement]:
    fibers = [fiber(R, X) for X in quotient_cycle]
    depth = R.radical_size
    return [fibers[i][j] for j in range(depth) for i in range(len(fibers))]


def _coset_coordinates(R: ProductRing) -> Tuple[int, int]:
    orders = R.residue_field_orders
    if R.n != 2 or 2 not in orders:
        raise ConstructionError(
            f"{R.label}: needs two factors with a residue field of order 2",
            Strategy.COSET_SCHEDULE.value,
        )
    z = orders.index(2)
    return z, 1 - z


def _coset_elements(R: ProductRing) -> Tuple[List[RingElement], WalkKind]:
    z, k = _coset_coordinates(R)
    K = R.factors[k].residue_field()
    minus_one = K.neg(1)

    def cls(r0: int, r1: int) -> List[RingElement]:
        residue = [0, 0]
        residue[z], residue[k] = r0, r1
        return fiber(R, residue)

    if R.is_semisimple:
        sequence = [cls(0, 1)[0], cls(1, 1)[0]]
        for a, a_inv in inverse_pairs(K):
            sequence += [cls(1, a)[0], cls(0, a_inv)[0], cls(0, a)[0], cls(1, a_inv)[0]]
        used = set(sequence)
        tail = cls(1, minus_one)[0]
        sequence += [cls(1, r)[0] for r in K.elements() if cls(1, r)[0] not in used and cls(1, r)[0] != tail]
        if minus_one != 1:
            sequence += [tail, cls(0, minus_one)[0]]
        return sequence, WalkKind.PATH

    depth = R.radical_size
    sequence = [cls(1, 1)[0]] + cls(0, 1) + [cls(1, 1)[1]]
    for a, a_inv in inverse_pairs(K):
        sequence.append(cls(1, a)[0])
        low, high = cls(0, a_inv), cls(0, a)
        for j in range(depth):
            sequence += [low[j], high[j]]
        sequence.append(cls(1, a_inv)[0])
    if minus_one != 1:
        sequence += [cls(1, minus_one)[0]] + cls(0, minus_one) + [cls(1, minus_one)[1]]
    used = set(sequence)
    rest = sorted(x for r in K.elements() for x in cls(1, r) if x not in used)
    return sequence + rest, WalkKind.CYCLE


def _coset_trace(R: ProductRing) -> ConstructionTrace:
    elements, kind = _coset_elements(R)
    return _finish(R, elements, kind, Strategy.COSET_SCHEDULE)


def coset_schedule(R: ProductRing) -> Walk:
    """
    Schedule for two factors where one residue field is Z2.

    With J(R) != 0 the cosets over residue Z2-coordinate 1 form one big
    clique; the remaining cosets hang off it through inverse pairs and the
    result is a Hamiltonian cycle. With J(R) = 0 (R = Z2 + F) the same
    schedule degenerates to a Hamiltonian path.

    Raises:
        ConstructionError: If R does not have that shape
    """
    return _coset_trace(R).walk


def blowup_lift(R: ProductRing, quotient_walk: Walk) -> Walk:
    """
    Lift a Hamiltonian walk of R/J(R) to a Hamiltonian cycle of R.

    Adjacency only depends on cosets x + J(R), and adjacent cosets are
    complete bipartite, so a quotient cycle X_0..X_{N-1} is walked |J| times
    taking the j-th element of every coset on pass j. A quotient path (only
    for R/J = Z2 + F) is handled by coset_schedule.

    Raises:
        ConstructionError: If J(R) = 0 or the quotient walk is invalid
    """
    if R.is_semisimple:
        raise ConstructionError(f"{R.label} has no radical to lift through", Strategy.BLOWUP_LIFT.value)
    quotient = semisimplify(R).ring
    G_Q = build_graph(quotient)
    check = validate_walk(G_Q, quotient_walk, spanning=True)
    if not check or quotient_walk.kind not in (WalkKind.CYCLE, WalkKind.PATH):
        raise ConstructionError(
            f"input is not a Hamiltonian walk of {quotient.label}: {check.message}",
            Strategy.BLOWUP_LIFT.value,
        )
    if quotient_walk.kind is WalkKind.PATH:
        return coset_schedule(R)
    elements = _blowup_elements(R, quotient_walk.elements(G_Q))
    return _finish(R, elements, WalkKind.CYCLE, Strategy.BLOWUP_LIFT).walk


# ----------------------------------------------------------------------
# Dispatch
# ----------------------------------------------------------------------


def construct_hamiltonian(R: ProductRing) -> ConstructionTrace:
    """
    Build a Hamiltonian cycle (or the Hamiltonian path where that is all there is).

    Dispatch:
        local, residue field Z2  -> the clique 1 + m in code order
        two factors, residue Z2  -> coset schedule (path if J = 0)
        product of fields        -> two-field grid or K + Z2 + Z2, then compose
        J != 0                   -> cycle of R/J(R), lifted through the cosets

    Raises:
        ConstructionError: If the ring has neither a Hamiltonian cycle nor path
    """
    status = thm_hamiltonian(R)
    if status is HamStatus.NEITHER:
        if R.is_local and R.residue_field_orders[0] != 2:
            reason = "local ring with residue field of order >= 3 has a disconnected graph"
        else:
            reason = "graph has fewer than two vertices"
        raise ConstructionError(
            f"{R.label} has no Hamiltonian cycle or path: {reason}"
            " (Hamiltonicity classification theorem)",
            "dispatch",
        )

    if R.is_local:
        elements = list(R.vertices())
        kind = WalkKind.CYCLE if status is HamStatus.CYCLE else WalkKind.PATH
        return _finish(R, elements, kind, Strategy.LOCAL_CLIQUE)

    if R.n == 2 and 2 in R.residue_field_orders:
        logger.info(f"{R.label}: coset schedule over a Z2 residue field")
        return _coset_trace(R)

    if R.is_semisimple:
        return _semisimple_cycle(R)

    quotient = _semisimple_cycle(semisimplify(R).ring)
    logger.info(f"{R.label}: lifting a {quotient.ring.label} cycle through |J| = {R.radical_size}")
    elements = _blowup_elements(R, quotient.elements)
    return _finish(R, elements, WalkKind.CYCLE, Strategy.BLOWUP_LIFT, (quotient,))


def cycles_all_lengths(R: ProductRing, budget: Optional[SearchBudget] = None) -> List[Walk]:
    """
    One validated cycle of every length 3..|V|.

    Shorter cycles come from the Hamiltonian cycle by deleting vertices whose
    cycle neighbours are adjacent and by chord shortcuts; any length still
    missing is searched for directly within the time budget.

    Raises:
        ConstructionError: If R is not pancyclic or a length could not be found
    """
    if not thm_pancyclic(R):
        raise ConstructionError(
            f"{R.label} is not pancyclic (pancyclicity classification theorem)", "cycles_all_lengths"
        )
    G = build_graph(R)
    trace = construct_hamiltonian(R)
    found: Dict[int, Tuple[int, ...]] = shorter_cycles(G, trace.walk.vertices)

    deadline = (budget or SearchBudget.from_settings()).deadline()
    for length in range(3, G.n + 1):
        if length in found:
            continue
        logger.debug(f"{R.label}: searching for a cycle of length {length}")
        result = cycle_of_length(G, length, deadline=deadline)
        if not result.found:
            raise ConstructionError(
                f"{R.label}: no cycle of length {length} ({result.status.value})",
                "cycles_all_lengths",
            )
        found[length] = result.walk.vertices

    walks = []
    for length in range(3, G.n + 1):
        walk = Walk(WalkKind.CYCLE, found[length])
        check = validate_walk(G, walk)
        if not check:
            raise ConstructionError(f"{R.label}: {check.message}", "cycles_all_lengths")
        walks.append(walk)
    return walks
