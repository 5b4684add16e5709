"""Wedderburn decompositions of the rational group algebra QG.

Every simple component of QG for the groups handled here is a full matrix
ring M_n(Q(zeta_d)) over a cyclotomic field (the Schur index is 1 for odd
p-groups), so a decomposition is just a multiset of (n, d) pairs.  Two
independent routes are provided:

* closed-form family counts (``formula_decomposition``), which read the
  multiplicities off cyclic-subgroup counts of small abelian sections, and
* the representation-level oracle (``oracle_decomposition``), which emits one
  component per Galois orbit of irreducible characters via required pairs.

``decompose`` runs both routes when a closed form exists and insists the
multisets agree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping

from .catalog import CatalogGroup, classify
from .characters import euler_phi
from .pairs import (
    DispatchError,
    Progress,
    RequiredPair,
    _order_p_central_subgroups,
    check_cover,
    generic_search,
)
from .pcgroup import PcGroup, QuotientData, StructureError, Subgroup


class FormulaError(StructureError):
    """No closed-form decomposition is available for this group/prime."""


class DecompositionError(StructureError):
    """A decomposition invariant or a formula/oracle cross-check failed."""


@dataclass(frozen=True, order=True)
class WedderburnComponent:
    """One simple component M_n(Q(zeta_d)); d = 1 encodes the rationals."""

    n: int
    d: int

    @property
    def dimension(self) -> int:
        return self.n * self.n * euler_phi(self.d)

    def __str__(self) -> str:
        field = "Q" if self.d == 1 else f"Q(zeta_{self.d})"
        return field if self.n == 1 else f"M_{self.n}({field})"


class Decomposition:
    """A multiset of Wedderburn components with standing sanity invariants."""

    __slots__ = ("_counts",)

    def __init__(self, components: Iterable[tuple[int, int]] | Mapping[tuple[int, int], int]):
        if isinstance(components, Mapping):
            counts = Counter(dict(components))
        else:
            counts = Counter(components)
        for (n, d), mult in sorted(counts.items()):
            if n < 1 or d < 1 or mult < 0:
                raise DecompositionError(f"malformed component M_{n}(zeta_{d}) x {mult}")
        self._counts = Counter({key: m for key, m in counts.items() if m})

    @property
    def counts(self) -> dict[tuple[int, int], int]:
        return dict(sorted(self._counts.items()))

    def items(self) -> list[tuple[WedderburnComponent, int]]:
        return [(WedderburnComponent(n, d), m) for (n, d), m in sorted(self._counts.items())]

    @property
    def dimension(self) -> int:
        return sum(n * n * euler_phi(d) * m for (n, d), m in self._counts.items())

    @property
    def component_count(self) -> int:
        return sum(self._counts.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"{m} x {WedderburnComponent(n, d)}" for (n, d), m in sorted(self._counts.items()))
        return f"Decomposition({body})"

    def validate(self, group: PcGroup) -> None:
        """Check the dimension identity and the component count against G."""
        if self.dimension != group.size:
            raise DecompositionError(
                f"dimension identity fails: {self.dimension} != |G| = {group.size}"
            )
        expected, _ = group.cyclic_subgroup_classes()
        if self.component_count != expected:
            raise DecompositionError(
                f"component count {self.component_count} != "
                f"{expected} classes of cyclic subgroups"
            )


# ---------------------------------------------------------------------------
# Cyclic-subgroup counting on abelian sections.
# ---------------------------------------------------------------------------


def _cyclic_counts(sub: Subgroup) -> dict[int, int]:
    """Map d -> number of cyclic subgroups of order d (abelian subgroup)."""
    p = sub.group.p
    cum = sub.order_counts()
    out: dict[int, int] = {}
    for d, total in cum.items():
        exact = total - (cum[d // p] if d > 1 else 0)
        if d == 1:
            out[1] = 1
        elif exact:
            out[d] = exact // euler_phi(d)
    return out


def _image_subgroup(qd: QuotientData, sub: Subgroup) -> Subgroup:
    """The image of a subgroup of G inside the quotient carried by ``qd``."""
    return qd.group.subgroup_from_members({qd.projection[x] for x in sub.members})


def _whole(group: PcGroup) -> Subgroup:
    return group.subgroup(list(group.generators))


def _abelianization(group: PcGroup) -> Subgroup:
    """G/G' as the whole subgroup of an explicit quotient group."""
    qd = group.quotient_data(group.derived_subgroup())
    return _whole(qd.group)


def _linear_counts(group: PcGroup) -> Counter[tuple[int, int]]:
    """Components contributed by characters with G' in the kernel."""
    return Counter({(1, d): a for d, a in _cyclic_counts(_abelianization(group)).items()})


def _section_counts(
    big: Subgroup, small: Subgroup
) -> tuple[dict[int, int], dict[int, int]]:
    """Cyclic-subgroup counts of an abelian subgroup and of its quotient.

    Returns (counts of ``big``, counts of ``big``/``small``); ``small`` must
    be normal in the ambient group so the quotient can be formed explicitly.
    """
    a = _cyclic_counts(big)
    qd = big.group.quotient_data(small)
    a_bar = _cyclic_counts(_image_subgroup(qd, big))
    return a, a_bar


def _merge_section(
    comps: Counter[tuple[int, int]],
    n: int,
    a: dict[int, int],
    a_bar: dict[int, int],
    divisor: int = 1,
) -> None:
    """Add components (n, d) with multiplicity a_d or (a_d - a'_d), over p."""
    for d, mult in a.items():
        m = mult - a_bar.get(d, 0)
        if d not in a_bar:
            m = mult
        if m % divisor:
            raise DecompositionError(
                f"multiplicity {m} for M_{n}(zeta_{d}) not divisible by {divisor}"
            )
        if m:
            comps[(n, d)] += m // divisor


# ---------------------------------------------------------------------------
# Closed-form family decompositions.
# ---------------------------------------------------------------------------


def perlis_walker(group: PcGroup | Subgroup) -> Decomposition:
    """QG for abelian G: one Q(zeta_d) per cyclic subgroup of order d."""
    sub = _whole(group) if isinstance(group, PcGroup) else group
    if not sub.is_abelian():
        raise DispatchError("the abelian decomposition needs an abelian group")
    return Decomposition({(1, d): a for d, a in _cyclic_counts(sub).items()})


def vz_decomposition(group: PcGroup) -> Decomposition:
    """QG for a VZ group: linear part plus one size from |G/Z|^(1/2)."""
    der = group.derived_subgroup()
    z = group.center()
    if der.order == 1:
        raise DispatchError("the VZ decomposition needs a non-abelian group")
    if not der <= z:
        raise DispatchError("the VZ decomposition needs G' inside the center")
    c = isqrt(group.size // z.order)
    if c * c * z.order != group.size:
        raise DispatchError("|G/Z| must be a perfect square for a VZ group")
    comps = _linear_counts(group)
    a, a_bar = _section_counts(z, der)
    _merge_section(comps, c, a, a_bar)
    return Decomposition(comps)


def phi4_decomposition(group: PcGroup) -> Decomposition:
    """Sum of VZ quotient contributions over the p+1 lines K in Z(G) = G'."""
    z = group.center()
    der = group.derived_subgroup()
    if z != der or z.order != group.p**2:
        raise DispatchError("expected Z(G) = G' of order p^2")
    comps = _linear_counts(group)
    for k in _order_p_central_subgroups(group, z):
        qd = group.quotient_data(k)
        q = qd.group
        a, a_bar = _section_counts(q.center(), q.derived_subgroup())
        _merge_section(comps, group.p, a, a_bar)
    return Decomposition(comps)


def phi6_decomposition(group: PcGroup) -> Decomposition:
    """Linear part, one M_p(Q(zeta_p)) from G/Z, and per-line quotient counts."""
    p = group.p
    z = group.center()
    der = group.derived_subgroup()
    if z.order != p**2 or der.order != p**3 or not z <= der:
        raise DispatchError("expected Z(G) < G' with |Z| = p^2, |G'| = p^3")
    comps = _linear_counts(group)
    comps[(p, p)] += 1
    for k in _order_p_central_subgroups(group, z):
        qd = group.quotient_data(k)
        q = qd.group
        cent = q.centralizer(q.derived_subgroup())
        a, a_bar = _section_counts(cent, _image_subgroup(qd, z))
        _merge_section(comps, p, a, a_bar, divisor=p)
    return Decomposition(comps)


def _centralizer_counts_decomposition(group: PcGroup) -> Decomposition:
    """Shared shape for the maximal-class families with abelian C_G(G')."""
    p = group.p
    der = group.derived_subgroup()
    cent = group.centralizer(der)
    if cent.order * p != group.size or not cent.is_abelian():
        raise DispatchError("expected an abelian index-p centralizer of G'")
    comps = _linear_counts(group)
    a, a_bar = _section_counts(cent, der)
    _merge_section(comps, p, a, a_bar, divisor=p)
    return Decomposition(comps)


def phi9_decomposition(group: PcGroup) -> Decomposition:
    """Counts over the abelian centralizer of G' and its quotient by G'."""
    if group.p == 3:
        raise FormulaError(
            "no closed-form decomposition at p = 3; use the oracle route"
        )
    return _centralizer_counts_decomposition(group)


def phi3_decomposition(group: PcGroup, name: str | None = None) -> Decomposition:
    """Three cases: two explicit multisets plus the generic centralizer shape.

    ``name`` is the catalog name; the two exceptional cases are keyed on it.
    """
    p = group.p
    if p == 3:
        raise FormulaError(
            "no closed-form decomposition at p = 3; use the oracle route"
        )
    if name is None:
        raise FormulaError("case selection needs the catalog name; use the oracle")
    if name.startswith("Phi_3(311)b"):
        return Decomposition(
            {(1, 1): 1, (1, p): p + 1, (1, p * p): p, (p, p): p, (p, p**3): 1}
        )
    if name in ("Phi_3(221)a", "Phi_3(2111)e"):
        return Decomposition(
            {(1, 1): 1, (1, p): p + 1, (1, p * p): p, (p, p): 2 * p, (p, p * p): p - 1}
        )
    return _centralizer_counts_decomposition(group)


def _camina_top_component(group: PcGroup) -> tuple[int, int]:
    """The single degree-p^2 component M_{p^2}(Q(zeta_p)) when Z(G) = C_p."""
    if group.center().order != group.p:
        raise DispatchError("expected a center of order p")
    return (group.p**2, group.p)


def phi7_phi8_decomposition(group: PcGroup) -> Decomposition:
    comps = _linear_counts(group)
    comps[(group.p, group.p)] += group.p
    comps[_camina_top_component(group)] += 1
    return Decomposition(comps)


def phi10_decomposition(group: PcGroup) -> Decomposition:
    p = group.p
    comps = _linear_counts(group)
    if p == 3:
        comps[(3, 3)] += 1
        comps[(3, 9)] += 1
    else:
        comps[(p, p)] += p + 1
    comps[_camina_top_component(group)] += 1
    return Decomposition(comps)


_FORMULAS = {
    2: vz_decomposition,
    4: phi4_decomposition,
    5: vz_decomposition,
    6: phi6_decomposition,
    7: phi7_phi8_decomposition,
    8: phi7_phi8_decomposition,
    9: phi9_decomposition,
    10: phi10_decomposition,
}


def formula_decomposition(
    group: PcGroup, family: int | None = None, name: str | None = None
) -> Decomposition:
    """Dispatch the closed-form decomposition by isoclinism family."""
    if family is None:
        family = classify(group)
    if family == 1:
        dec = perlis_walker(group)
    elif family == 3:
        dec = phi3_decomposition(group, name)
    elif family in _FORMULAS:
        dec = _FORMULAS[family](group)
    else:
        raise FormulaError(f"no closed-form decomposition for family Phi_{family}")
    dec.validate(group)
    return dec


# ---------------------------------------------------------------------------
# Oracle route and the cross-checking dispatcher.
# ---------------------------------------------------------------------------


def _schur_index_guard(group: PcGroup, pair: RequiredPair) -> None:
    """Assert <Omega, Omega> = [Q(chi) : Q], i.e. a trivial division ring."""
    classes = group.classes
    total = sum(
        size * v * v for size, v in zip(classes.sizes, pair.rational_values)
    )
    norm = Fraction(total, group.size)
    if norm != pair.orbit_size:
        raise DecompositionError(
            f"<Omega,Omega> = {norm} != {pair.orbit_size} for an orbit of "
            f"degree {pair.degree}, d = {pair.d}: nontrivial division ring?"
        )


def oracle_decomposition(
    group: PcGroup,
    pairs: list[RequiredPair] | None = None,
    progress: Progress = None,
) -> Decomposition:
    """One component (chi(1), d) per Galois orbit of irreducible characters."""
    if pairs is None:
        pairs = generic_search(group, progress)
    else:
        check_cover(group, pairs)
    for pair in pairs:
        _schur_index_guard(group, pair)
    dec = Decomposition(Counter((pair.degree, pair.d) for pair in pairs))
    dec.validate(group)
    return dec


def decompose(
    group: PcGroup | CatalogGroup,
    pairs: list[RequiredPair] | None = None,
    progress: Progress = None,
    method: str = "both",
) -> Decomposition:
    """Closed form cross-checked against the oracle (``method='both'``).

    ``method='formula'`` or ``'oracle'`` runs a single route.  With ``both``,
    a missing closed form falls back to the oracle; a disagreement raises a
    ``DecompositionError`` carrying both multisets.
    """
    name = None
    family = None
    if isinstance(group, CatalogGroup):
        name, family, group = group.name, group.family, group.group
    if method not in ("formula", "oracle", "both"):
        raise DispatchError(f"unknown method {method!r}")
    if method == "formula":
        return formula_decomposition(group, family, name)
    if method == "oracle":
        return oracle_decomposition(group, pairs, progress)
    try:
        formula = formula_decomposition(group, family, name)
    except FormulaError:
        return oracle_decomposition(group, pairs, progress)
    oracle = oracle_decomposition(group, pairs, progress)
    if formula != oracle:
        raise DecompositionError(
            "formula and oracle decompositions disagree:\n"
            f"  formula: {formula!r}\n  oracle:  {oracle!r}"
        )
    return oracle
