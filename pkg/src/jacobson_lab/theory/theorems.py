"""
Closed-form predictions for Jacobson graphs.

Everything here depends only on the factor data of R (|R_i|, |J(R_i)| and
the residue field orders |F_i|), never on a built graph. The survey compares
these predictions against the exact oracles.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from jacobson_lab.config import get_settings
from jacobson_lab.graph.lengths import NO_CYCLE, LengthValue
from jacobson_lab.rings.product_ring import ProductRing
from jacobson_lab.utils.exceptions import UnsupportedRingError


class HamStatus(str, Enum):
    """Hamiltonicity classification."""

    CYCLE = "cycle"
    PATH_ONLY = "path"
    NEITHER = "neither"


@dataclass(frozen=True)
class FieldStats:
    """
    Component counts of the Jacobson graph of a finite field F.

    The graph of F is a perfect matching b -- b^-1 on F minus {0, 1, -1}
    plus the looped vertices 1 and -1, so it has c components of which
    c_bp are single edges.
    """

    q: int
    eps: int
    components: int
    bipartite_components: int


def field_stats(q: int) -> FieldStats:
    """FieldStats for a field of order q >= 2."""
    if q < 2:
        raise UnsupportedRingError(f"no field of order {q}")
    eps = q % 2
    return FieldStats(
        q=q,
        eps=eps,
        components=(q + eps) // 2,
        bipartite_components=(q - 2 - eps) // 2,
    )


@dataclass(frozen=True)
class LocalStructure:
    """
    Shape of the Jacobson graph of a local ring with maximal ideal m.

    The vertex set is R minus m and splits into cosets x + m of size |m|.
    A coset whose residue is self-inverse is a clique K_|m|; a residue pair
    {a, a^-1} gives one complete bipartite K_|m|,|m|.
    """

    clique_count: int
    clique_size: int
    biclique_count: int
    biclique_side: int

    @property
    def components(self) -> int:
        return self.clique_count + self.biclique_count


def _require_local(R: ProductRing) -> None:
    if not R.is_local:
        raise UnsupportedRingError("expected a local ring", R.label)


def local_structure(R: ProductRing) -> LocalStructure:
    """Component shape of a local ring's Jacobson graph."""
    _require_local(R)
    factor = R.factors[0]
    stats = field_stats(factor.residue_field_size)
    m = factor.radical_size
    return LocalStructure(
        clique_count=stats.components - stats.bipartite_components,
        clique_size=m,
        biclique_count=stats.bipartite_components,
        biclique_side=m,
    )


# ----------------------------------------------------------------------
# Residue-field shape helpers
# ----------------------------------------------------------------------


def _quotient_shape(R: ProductRing) -> Tuple[int, ...]:
    """Sorted residue field orders, i.e. R/J(R) up to isomorphism."""
    return tuple(sorted(R.residue_field_orders))


def is_z2_plus_field(R: ProductRing) -> bool:
    """R is Z2 + F for a finite field F (J(R) = 0, two factors, one of order 2)."""
    return R.n == 2 and R.is_semisimple and 2 in R.residue_field_orders


def _is_z2_z2(R: ProductRing) -> bool:
    return R.is_semisimple and _quotient_shape(R) == (2, 2)


# ----------------------------------------------------------------------
# Classification predicates
# ----------------------------------------------------------------------


def thm_hamiltonian(R: ProductRing) -> HamStatus:
    """
    Hamiltonicity of the Jacobson graph.

    Non-local rings are Hamiltonian except Z2 + F, which only has a
    Hamiltonian path. A local ring with residue field Z2 gives the complete
    graph on 1 + m; any larger residue field disconnects the graph.
    """
    if R.is_local:
        factor = R.factors[0]
        if factor.residue_field_size != 2:
            return HamStatus.NEITHER
        m = factor.radical_size
        if m >= 3:
            return HamStatus.CYCLE
        if m == 2:
            return HamStatus.PATH_ONLY
        return HamStatus.NEITHER
    if is_z2_plus_field(R):
        return HamStatus.PATH_ONLY
    return HamStatus.CYCLE


def thm_pancyclic(R: ProductRing) -> bool:
    """Non-local rings other than Z2 + F are pancyclic."""
    return not R.is_local and not is_z2_plus_field(R)


def thm_eulerian(R: ProductRing) -> bool:
    """R = Z2, or |R| odd with R/J(R) a sum of at least two copies of Z3."""
    if R.is_local:
        return R.size == 2
    return R.size % 2 == 1 and all(q == 3 for q in R.residue_field_orders)


def thm_euler_trail(R: ProductRing) -> bool:
    """An Eulerian trail but no tour: Z4, Z2[x]/(x^2), Z2 + Z2 and GF(4) + Z2."""
    if R.is_local:
        return R.size == 4 and R.residue_field_orders == (2,)
    return R.n == 2 and R.is_semisimple and _quotient_shape(R) in {(2, 2), (2, 4)}


def thm_girth(R: ProductRing) -> LengthValue:
    """Girth: 3 for non-local rings other than Z2 + Z2, else from the local structure."""
    if not R.is_local:
        return NO_CYCLE if _is_z2_z2(R) else LengthValue(3)
    shape = local_structure(R)
    if shape.clique_size >= 3:
        return LengthValue(3)
    if shape.biclique_count and shape.biclique_side >= 2:
        return LengthValue(4)
    return NO_CYCLE


def thm_diameter_bound(R: ProductRing) -> Optional[int]:
    """Non-local Jacobson graphs are connected with diameter at most 3."""
    return None if R.is_local else 3


def thm_components(R: ProductRing) -> int:
    """Connected component count."""
    if R.is_local:
        return local_structure(R).components
    return 1


# ----------------------------------------------------------------------
# Longest induced cycles and paths
# ----------------------------------------------------------------------


def lc_local(R: ProductRing) -> LengthValue:
    """Longest induced cycle of a local ring."""
    _require_local(R)
    factor = R.factors[0]
    m, q = factor.radical_size, factor.residue_field_size
    if m == 1 or (m == 2 and q <= 3):
        return NO_CYCLE
    if q <= 3:
        return LengthValue(3)
    return LengthValue(4)


def lp_local(R: ProductRing) -> LengthValue:
    """Longest induced path of a local ring, in edges."""
    _require_local(R)
    factor = R.factors[0]
    radical_nonzero = factor.radical_size > 1
    big_field = factor.residue_field_size >= 4
    return LengthValue(int(radical_nonzero) + int(big_field))


def lc_closed_form(R: ProductRing, d: int) -> int:
    """
    The induced-cycle formula with residue field d (1-based) as the distinguished one.

    With F = F_d, the others F_i, and eps = 1 for odd orders:
        span  = min(|F| + eps_F, sum(|F_i| + eps_i))
        bonus = span - floor(4 / (|F| + 4 - span - eps_F))
        l_c   = sum |F_i| - (n - 1) + bonus

    Raises:
        UnsupportedRingError: For a local ring or an index out of range
    """
    if R.is_local:
        raise UnsupportedRingError("the induced-cycle formula needs at least two factors", R.label)
    orders = list(R.residue_field_orders)
    if not 1 <= d <= len(orders):
        raise UnsupportedRingError(f"distinguished index {d} out of range 1..{len(orders)}", R.label)
    fd = orders.pop(d - 1)
    eps_d = fd % 2
    span = min(fd + eps_d, sum(q + q % 2 for q in orders))
    bonus = span - 4 // (fd + 4 - span - eps_d)
    return sum(orders) - (R.n - 1) + bonus


def lc_closed_form_ordered(R: ProductRing, ordering: Optional[str] = None) -> int:
    """lc_closed_form under an ordering convention: "min", "max" or "last"."""
    ordering = ordering or get_settings().theory.lc_ordering
    if ordering == "last":
        return lc_closed_form(R, R.n)
    values = [lc_closed_form(R, d) for d in range(1, R.n + 1)]
    if ordering == "min":
        return min(values)
    if ordering == "max":
        return max(values)
    raise ValueError(f"unknown ordering convention '{ordering}'")


class LcRule(str, Enum):
    """Which branch of the induced-cycle classification applies."""

    LOCAL = "local"
    Z2_Z2 = "z2xz2"
    RADICAL_Z2_Z2 = "radical_z2xz2"
    SMALL_THREE = "small_case_3"
    SMALL_FOUR = "small_case_4"
    FORMULA = "formula"

    @property
    def is_heuristic(self) -> bool:
        return self is LcRule.FORMULA


_THREE_SHAPES = {(2, 3), (2, 2, 2)}
_FOUR_SHAPES = {(3, 3), (2, 2, 3), (2, 2, 2, 2)}


def lc_rule(R: ProductRing) -> LcRule:
    """Classify R into a dispatch branch of lc_classified."""
    if R.is_local:
        return LcRule.LOCAL
    shape = _quotient_shape(R)
    if shape == (2, 2):
        return LcRule.Z2_Z2 if R.is_semisimple else LcRule.RADICAL_Z2_Z2
    if shape in _THREE_SHAPES:
        return LcRule.SMALL_THREE
    if shape in _FOUR_SHAPES or (len(shape) == 2 and shape[0] == 2 and shape[1] >= 4):
        return LcRule.SMALL_FOUR
    return LcRule.FORMULA


def lc_classified(R: ProductRing, ordering: Optional[str] = None) -> LengthValue:
    """
    Longest induced cycle as classified from the factor data.

    Args:
        R: Any ring
        ordering: Convention for the formula branch (defaults to settings)

    Returns:
        LengthValue, NoCycle for acyclic graphs
    """
    rule = lc_rule(R)
    if rule is LcRule.LOCAL:
        return lc_local(R)
    if rule is LcRule.Z2_Z2:
        return NO_CYCLE
    if rule in (LcRule.RADICAL_Z2_Z2, LcRule.SMALL_THREE):
        return LengthValue(3)
    if rule is LcRule.SMALL_FOUR:
        return LengthValue(4)
    return LengthValue(lc_closed_form_ordered(R, ordering))


def lp_classified(R: ProductRing, ordering: Optional[str] = None) -> LengthValue:
    """
    Longest induced path as classified from the factor data.

    Equals lc_classified except for local rings, Z2 + Z2 (a path of length
    two) and R/J(R) = Z2 + F with |F| >= 7, where it is 5.
    """
    if R.is_local:
        return lp_local(R)
    if _is_z2_z2(R):
        return LengthValue(2)
    shape = _quotient_shape(R)
    if len(shape) == 2 and shape[0] == 2 and shape[1] >= 7:
        return LengthValue(5)
    return lc_classified(R, ordering)


@dataclass(frozen=True)
class Classification:
    """All formula-side predictions for one ring."""

    ham: HamStatus
    pancyclic: bool
    eulerian: bool
    euler_trail: bool
    lc: LengthValue
    lp: LengthValue
    lc_rule: LcRule
    girth: LengthValue
    diameter_bound: Optional[int]
    components: int


def classify(R: ProductRing, ordering: Optional[str] = None) -> Classification:
    return Classification(
        ham=thm_hamiltonian(R),
        pancyclic=thm_pancyclic(R),
        eulerian=thm_eulerian(R),
        euler_trail=thm_euler_trail(R),
        lc=lc_classified(R, ordering),
        lp=lp_classified(R, ordering),
        lc_rule=lc_rule(R),
        girth=thm_girth(R),
        diameter_bound=thm_diameter_bound(R),
        components=thm_components(R),
    )


def formula_orderings(R: ProductRing) -> List[int]:
    """lc_closed_form for every choice of distinguished index."""
    return [lc_closed_form(R, d) for d in range(1, R.n + 1)]
