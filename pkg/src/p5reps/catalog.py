"""Catalog of order-p^5 group presentations organized by isoclinism family.

Each entry carries a power-commutator presentation template (instantiable at
any supported odd prime subject to the entry's admissibility constraint)
together with declared structural subgroups -- center, derived subgroup and,
where relevant, the centralizer of the derived subgroup -- and the candidate
subgroups H used to seed required-pair construction.  Generator words are
written against the entry's own pc-generator numbering.

The module also provides an invariant-based family classifier for arbitrary
consistent presentations of order p^5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .pcgroup import PcGroup, PcPresentation, StructureError, Subgroup

__all__ = [
    "CatalogError",
    "CatalogEntry",
    "CatalogGroup",
    "all_entries",
    "entry_names",
    "get_entry",
    "instantiate",
    "classify",
    "names_for_prime",
    "smallest_nonresidue",
    "smallest_primitive_root",
]

# A generator word: ((generator, exponent), ...) with 1-based generators.
Word = tuple[tuple[int, int], ...]
# A subgroup description: a tuple of generator words.
SubgroupWords = tuple[Word, ...]


class CatalogError(ValueError):
    """Raised for unknown names, inadmissible parameters, or bad catalog data."""


def smallest_nonresidue(p: int) -> int:
    """Smallest positive quadratic non-residue modulo the odd prime p."""
    residues = {pow(x, 2, p) for x in range(1, p)}
    for v in range(2, p):
        if v not in residues:
            return v
    raise ValueError(f"no quadratic non-residue modulo {p}")


def smallest_primitive_root(p: int) -> int:
    """Smallest primitive root modulo the odd prime p."""
    for g in range(2, p):
        seen = set()
        acc = 1
        for _ in range(p - 1):
            acc = acc * g % p
            seen.add(acc)
        if len(seen) == p - 1:
            return g
    raise ValueError(f"no primitive root modulo {p}")


def _binom3_mod(p: int) -> int:
    """C(p,3) mod p (1 at p = 3, 0 at p >= 5)."""
    return (p * (p - 1) * (p - 2) // 6) % p


Relations = tuple[Mapping[int, Mapping[int, int]], Mapping[tuple[int, int], Mapping[int, int]]]


@dataclass(frozen=True)
class CatalogEntry:
    """A named presentation template with declared structural data."""

    name: str
    family: int
    min_p: int
    ngens: int
    relations: Callable[[int], Relations]
    center: SubgroupWords
    derived: SubgroupWords
    # C_G(G') generator words for families with an abelian index-p subgroup.
    centralizer: SubgroupWords | None = None
    # Candidate H subgroups for closed-form required pairs, possibly p-dependent.
    h_candidates: Callable[[int], tuple[SubgroupWords, ...]] | None = None

    def admissible(self, p: int) -> bool:
        return p >= self.min_p

    def presentation(self, p: int) -> PcPresentation:
        if not self.admissible(p):
            raise CatalogError(
                f"{self.name} requires p >= {self.min_p}; p={p} is not admissible"
            )
        powers, commutators = self.relations(p)
        return PcPresentation.build(p, self.ngens, powers, commutators)


@dataclass(frozen=True)
class CatalogGroup:
    """An instantiated catalog entry with resolved structural subgroups."""

    entry: CatalogEntry
    p: int
    group: PcGroup
    center: Subgroup
    derived: Subgroup
    centralizer: Subgroup | None

    @property
    def name(self) -> str:
        return self.entry.name

    @property
    def family(self) -> int:
        return self.entry.family

    def h_candidates(self) -> tuple[Subgroup, ...]:
        if self.entry.h_candidates is None:
            return ()
        return tuple(
            resolve_subgroup(self.group, words)
            for words in self.entry.h_candidates(self.p)
        )


def resolve_subgroup(group: PcGroup, words: SubgroupWords) -> Subgroup:
    """Close the subgroup generated by the given generator words."""
    return group.subgroup([group.collect(w) for w in words])


def _g(i: int, e: int = 1) -> Word:
    return ((i, e),)


# ---------------------------------------------------------------------------
# Entry constructions.  Within each entry the pc generators g_1..g_n are an
# ordered refinement of the display generators so that every relation's
# right-hand side uses strictly later generators.
# ---------------------------------------------------------------------------

_ENTRIES: list[CatalogEntry] = []


def _add(entry: CatalogEntry) -> None:
    _ENTRIES.append(entry)


def _const_h(*candidates: SubgroupWords) -> Callable[[int], tuple[SubgroupWords, ...]]:
    fixed = tuple(candidates)
    return lambda p: fixed


# -- Family 1: the seven abelian types -------------------------------------

def _abelian_relations(partition: Sequence[int]) -> Callable[[int], Relations]:
    # Greedy chain layout: one pc generator per C_{p} layer of each factor.
    def rel(p: int) -> Relations:
        powers: dict[int, dict[int, int]] = {}
        g = 1
        for part in partition:
            for step in range(part - 1):
                powers[g + step] = {g + step + 1: 1}
            g += part
        return powers, {}

    return rel


def _whole_group(ngens: int) -> SubgroupWords:
    return tuple(_g(i) for i in range(1, ngens + 1))


for _name, _partition in [
    ("Phi_1(5)", (5,)),
    ("Phi_1(41)", (4, 1)),
    ("Phi_1(32)", (3, 2)),
    ("Phi_1(311)", (3, 1, 1)),
    ("Phi_1(221)", (2, 2, 1)),
    ("Phi_1(2111)", (2, 1, 1, 1)),
    ("Phi_1(1^5)", (1, 1, 1, 1, 1)),
]:
    _add(
        CatalogEntry(
            name=_name,
            family=1,
            min_p=3,
            ngens=5,
            relations=_abelian_relations(_partition),
            center=_whole_group(5),
            derived=(),
        )
    )


# -- Family 2 ----------------------------------------------------------------

# Phi_2(311)a: g1=alpha, g2=alpha_1, g3=gamma, g4=alpha^p, g5=alpha^{p^2}.
_add(
    CatalogEntry(
        name="Phi_2(311)a",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {4: 1}, 4: {5: 1}}, {(2, 1): {5: 1}}),
        center=(_g(4), _g(3)),
        derived=(_g(5),),
        h_candidates=_const_h((_g(4), _g(2), _g(3))),
    )
)

# Phi_2(221)a: g1=alpha, g2=alpha_1, g3=gamma, g4=alpha^p, g5=alpha_1^p.
_add(
    CatalogEntry(
        name="Phi_2(221)a",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {4: 1}, 2: {5: 1}}, {(2, 1): {4: 1}}),
        center=(_g(4), _g(5), _g(3)),
        derived=(_g(4),),
        h_candidates=lambda p: tuple(
            (((1, -i), (2, 1)), _g(4), _g(3)) for i in range(p)
        ),
    )
)

# Phi_2(221)b: g1=alpha, g2=alpha_1, g3=gamma, g4=alpha^p, g5=gamma^p.
_add(
    CatalogEntry(
        name="Phi_2(221)b",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {4: 1}, 3: {5: 1}}, {(2, 1): {4: 1}}),
        center=(_g(4), _g(3)),
        derived=(_g(4),),
        h_candidates=_const_h((_g(4), _g(2), _g(3))),
    )
)

# Phi_2(2111)a: g1=alpha, g2=alpha_1, g3=gamma, g4=delta, g5=alpha^p.
_add(
    CatalogEntry(
        name="Phi_2(2111)a",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {5: 1}}, {(2, 1): {5: 1}}),
        center=(_g(5), _g(3), _g(4)),
        derived=(_g(5),),
        h_candidates=_const_h((_g(5), _g(2), _g(3), _g(4))),
    )
)

# Phi_2(2111)b: g1=alpha, g2=alpha_1, g3=gamma, g4=delta, g5=gamma^p.
_add(
    CatalogEntry(
        name="Phi_2(2111)b",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({3: {5: 1}}, {(2, 1): {5: 1}}),
        center=(_g(3), _g(4)),
        derived=(_g(5),),
        h_candidates=_const_h((_g(1), _g(3), _g(4))),
    )
)

# Phi_2(2111)c: g1=alpha, g2=alpha_1, g3=gamma, g4=alpha^p, g5=alpha_2.
_add(
    CatalogEntry(
        name="Phi_2(2111)c",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {4: 1}}, {(2, 1): {5: 1}}),
        center=(_g(4), _g(5), _g(3)),
        derived=(_g(5),),
        h_candidates=_const_h((_g(4), _g(2), _g(5), _g(3))),
    )
)

# Phi_2(2111)d: g1=alpha, g2=alpha_1, g3=gamma, g4=alpha_2, g5=gamma^p.
_add(
    CatalogEntry(
        name="Phi_2(2111)d",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({3: {5: 1}}, {(2, 1): {4: 1}}),
        center=(_g(4), _g(3)),
        derived=(_g(4),),
        h_candidates=_const_h((_g(2), _g(4), _g(3))),
    )
)

# Phi_2(1^5): g1=alpha, g2=alpha_1, g3=gamma, g4=delta, g5=alpha_2.
_add(
    CatalogEntry(
        name="Phi_2(1^5)",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({}, {(2, 1): {5: 1}}),
        center=(_g(5), _g(3), _g(4)),
        derived=(_g(5),),
        h_candidates=_const_h((_g(2), _g(5), _g(3), _g(4))),
    )
)

# Phi_2(41): g1=alpha, g2=alpha_1, g3=alpha^p, g4=alpha^{p^2}, g5=alpha^{p^3}.
_add(
    CatalogEntry(
        name="Phi_2(41)",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {3: 1}, 3: {4: 1}, 4: {5: 1}}, {(2, 1): {5: 1}}),
        center=(_g(3),),
        derived=(_g(5),),
        h_candidates=_const_h((_g(3), _g(2))),
    )
)

# Phi_2(32)a_1: g1=alpha, g2=alpha_1, g3=alpha^p, g4=alpha_1^p, g5=alpha^{p^2}.
_add(
    CatalogEntry(
        name="Phi_2(32)a_1",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {3: 1}, 2: {4: 1}, 3: {5: 1}}, {(2, 1): {5: 1}}),
        center=(_g(3), _g(4)),
        derived=(_g(5),),
        h_candidates=_const_h((_g(3), _g(2))),
    )
)

# Phi_2(32)a_2: g1=alpha, g2=alpha_1, g3=alpha^p, g4=alpha^{p^2}, g5=alpha_1^p.
_add(
    CatalogEntry(
        name="Phi_2(32)a_2",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {3: 1}, 2: {5: 1}, 3: {4: 1}}, {(2, 1): {5: 1}}),
        center=(_g(3), _g(5)),
        derived=(_g(5),),
        h_candidates=lambda p: ((_g(3), _g(2)),)
        + tuple((((1, 1), (2, -i)), _g(5)) for i in range(p)),
    )
)

# Phi_2(311)b: g1=alpha, g2=alpha_1, g3=gamma, g4=gamma^p, g5=gamma^{p^2}.
_add(
    CatalogEntry(
        name="Phi_2(311)b",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({3: {4: 1}, 4: {5: 1}}, {(2, 1): {5: 1}}),
        center=(_g(3),),
        derived=(_g(5),),
        h_candidates=_const_h((_g(1), _g(3))),
    )
)

# Phi_2(311)c: g1=alpha, g2=alpha_1, g3=alpha^p, g4=alpha^{p^2}, g5=alpha_2.
_add(
    CatalogEntry(
        name="Phi_2(311)c",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {3: 1}, 3: {4: 1}}, {(2, 1): {5: 1}}),
        center=(_g(3), _g(5)),
        derived=(_g(5),),
        h_candidates=_const_h((_g(3), _g(2), _g(5))),
    )
)

# Phi_2(221)c: g1=alpha, g2=alpha_1, g3=gamma, g4=alpha^p, g5=gamma^p.
_add(
    CatalogEntry(
        name="Phi_2(221)c",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {4: 1}, 3: {5: 1}}, {(2, 1): {5: 1}}),
        center=(_g(4), _g(3)),
        derived=(_g(5),),
        h_candidates=_const_h((_g(4), _g(2), _g(3))),
    )
)

# Phi_2(221)d: g1=alpha, g2=alpha_1, g3=alpha^p, g4=alpha_1^p, g5=alpha_2.
_add(
    CatalogEntry(
        name="Phi_2(221)d",
        family=2,
        min_p=3,
        ngens=5,
        relations=lambda p: ({1: {3: 1}, 2: {4: 1}}, {(2, 1): {5: 1}}),
        center=(_g(3), _g(4), _g(5)),
        derived=(_g(5),),
        h_candidates=lambda p: ((_g(3), _g(2), _g(5)),)
        + tuple((((1, 1), (2, -i)), _g(4), _g(5)) for i in range(p)),
    )
)


# -- Family 3 (closed forms require p >= 5) ---------------------------------

# Phi_3(1^5): g1=alpha, g2=alpha_1, g3=alpha_2, g4=alpha_3, g5=alpha_4.
_add(
    CatalogEntry(
        name="Phi_3(1^5)",
        family=3,
        min_p=5,
        ngens=5,
        relations=lambda p: ({}, {(2, 1): {3: 1}, (3, 1): {4: 1}}),
        center=(_g(4), _g(5)),
        derived=(_g(3), _g(4)),
        centralizer=(_g(2), _g(3), _g(4), _g(5)),
    )
)


def _phi3_311b(r_of_p: Callable[[int], int], suffix: str) -> CatalogEntry:
    # g1=alpha, g2=alpha_1, g3=alpha_2, g4=alpha_1^p, g5=alpha_1^{p^2}=alpha_3.
    # Printed relation [alpha_2, alpha]^r = alpha_3, so [g3, g1] = g5^(1/r mod p).
    def rel(p: int) -> Relations:
        r = r_of_p(p)
        s = pow(r, -1, p)
        return {2: {4: 1}, 4: {5: 1}}, {(2, 1): {3: 1}, (3, 1): {5: s}}

    return CatalogEntry(
        name=f"Phi_3(311)b_{suffix}",
        family=3,
        min_p=5,
        ngens=5,
        relations=rel,
        center=(_g(4),),
        derived=(_g(3), _g(5)),
        centralizer=(_g(2), _g(3)),
    )


_add(_phi3_311b(lambda p: 1, "1"))
_add(_phi3_311b(smallest_nonresidue, "nu"))

# Phi_3(221)a: g1=alpha, g2=alpha_1, g3=alpha_2, g4=alpha_1^p, g5=alpha^p=alpha_3.
_add(
    CatalogEntry(
        name="Phi_3(221)a",
        family=3,
        min_p=5,
        ngens=5,
        relations=lambda p: (
            {1: {5: 1}, 2: {4: 1}},
            {(2, 1): {3: 1}, (3, 1): {5: 1}},
        ),
        center=(_g(4), _g(5)),
        derived=(_g(3), _g(5)),
        centralizer=(_g(2), _g(3), _g(4), _g(5)),
    )
)

# Phi_3(2111)e: g1=alpha, g2=alpha_1, g3=alpha_2, g4=alpha_1^p, g5=alpha_3.
_add(
    CatalogEntry(
        name="Phi_3(2111)e",
        family=3,
        min_p=5,
        ngens=5,
        relations=lambda p: ({2: {4: 1}}, {(2, 1): {3: 1}, (3, 1): {5: 1}}),
        center=(_g(4), _g(5)),
        derived=(_g(3), _g(5)),
        centralizer=(_g(2), _g(3), _g(4), _g(5)),
    )
)


# -- Family 4 ----------------------------------------------------------------

# Phi_4(1^5): g1=alpha, g2=alpha_1, g3=alpha_2, g4=beta_1, g5=beta_2.
_add(
    CatalogEntry(
        name="Phi_4(1^5)",
        family=4,
        min_p=3,
        ngens=5,
        relations=lambda p: ({}, {(2, 1): {4: 1}, (3, 1): {5: 1}}),
        center=(_g(4), _g(5)),
        derived=(_g(4), _g(5)),
    )
)


# -- Family 5 ----------------------------------------------------------------

# Phi_5(2111): g1..g4 = alpha_1..alpha_4, g5 = beta = alpha_1^p.
_add(
    CatalogEntry(
        name="Phi_5(2111)",
        family=5,
        min_p=3,
        ngens=5,
        relations=lambda p: (
            {1: {5: 1}},
            {(2, 1): {5: p - 1}, (4, 3): {5: p - 1}},
        ),
        center=(_g(5),),
        derived=(_g(5),),
        h_candidates=_const_h((_g(5), _g(2), _g(3))),
    )
)

# Phi_5(1^5): g1..g4 = alpha_1..alpha_4, g5 = beta.
_add(
    CatalogEntry(
        name="Phi_5(1^5)",
        family=5,
        min_p=3,
        ngens=5,
        relations=lambda p: ({}, {(2, 1): {5: p - 1}, (4, 3): {5: p - 1}}),
        center=(_g(5),),
        derived=(_g(5),),
        h_candidates=_const_h((_g(1), _g(3), _g(5))),
    )
)


# -- Family 7 ----------------------------------------------------------------
# pc order: g1=alpha, g2=beta, g3=alpha_1, g4=alpha_2, g5=alpha_3.
# The power alpha_1^(p) carries the binomial correction alpha_3^C(p,3)
# (nontrivial only at p = 3).


def _phi7(
    name: str,
    pow1_of_p: Callable[[int], dict[int, int]],
    pow2_of_p: Callable[[int], dict[int, int]],
    alpha1_word_of_p: Callable[[int], dict[int, int]],
    h_of_p: Callable[[int], tuple[SubgroupWords, ...]],
) -> CatalogEntry:
    def rel(p: int) -> Relations:
        powers: dict[int, dict[int, int]] = {}
        if pow1_of_p(p):
            powers[1] = pow1_of_p(p)
        if pow2_of_p(p):
            powers[2] = pow2_of_p(p)
        pw3 = alpha1_word_of_p(p)
        if pw3:
            powers[3] = pw3
        commutators = {(3, 1): {4: 1}, (4, 1): {5: 1}, (3, 2): {5: 1}}
        return powers, commutators

    return CatalogEntry(
        name=name,
        family=7,
        min_p=3,
        ngens=5,
        relations=rel,
        center=(_g(5),),
        derived=(_g(4), _g(5)),
        h_candidates=h_of_p,
    )


# Phi_7(2111)a: alpha^p = alpha_3, alpha_1^(p) = 1.
_add(
    _phi7(
        "Phi_7(2111)a",
        lambda p: {5: 1},
        lambda p: {},
        lambda p: {5: (-_binom3_mod(p)) % p},
        _const_h((_g(4), _g(5), _g(2))),
    )
)

# Phi_7(2111)b_r: [alpha_1, beta] = alpha_3, alpha_1^(p) = alpha_3^r.
def _phi7_b(r_of_p: Callable[[int], int], suffix: str) -> CatalogEntry:
    return _phi7(
        f"Phi_7(2111)b_{suffix}",
        lambda p: {},
        lambda p: {},
        lambda p: {5: (r_of_p(p) - _binom3_mod(p)) % p},
        _const_h((_g(4), _g(5), _g(2))),
    )


_add(_phi7_b(lambda p: 1, "1"))
_add(_phi7_b(smallest_nonresidue, "nu"))

# Phi_7(2111)c: beta^p = alpha_3, alpha_1^(p) = 1; H differs at p = 3.
_add(
    _phi7(
        "Phi_7(2111)c",
        lambda p: {},
        lambda p: {5: 1},
        lambda p: {5: (-_binom3_mod(p)) % p},
        lambda p: (
            ((((2, -2), (3, 1)), _g(4), _g(5)),)
            if p == 3
            else ((_g(3), _g(4), _g(5)),)
        ),
    )
)

# Phi_7(1^5): all display generators of order p, alpha_1^(p) = 1.
_add(
    _phi7(
        "Phi_7(1^5)",
        lambda p: {},
        lambda p: {},
        lambda p: {5: (-_binom3_mod(p)) % p},
        _const_h((_g(4), _g(5), _g(2))),
    )
)


# -- Family 8 ----------------------------------------------------------------

# Phi_8(32): g1=alpha_2, g2=alpha_2^p, g3=alpha_1, g4=alpha_1^p, g5=alpha_1^{p^2}.
_add(
    CatalogEntry(
        name="Phi_8(32)",
        family=8,
        min_p=3,
        ngens=5,
        relations=lambda p: (
            {1: {2: 1}, 3: {4: 1}, 4: {5: 1}},
            {(3, 1): {4: 1}, (4, 1): {5: 1}, (3, 2): {5: 1}},
        ),
        center=(_g(5),),
        derived=(_g(4),),
        h_candidates=_const_h((_g(5), _g(1))),
    )
)


# -- Family 9 (closed form requires p >= 5) ----------------------------------

# Phi_9(2111)b_1: g1=alpha, g2..g5 = alpha_1..alpha_4; alpha_1^p = alpha_4^k
# with k the smallest primitive root modulo p.
_add(
    CatalogEntry(
        name="Phi_9(2111)b_1",
        family=9,
        min_p=5,
        ngens=5,
        relations=lambda p: (
            {2: {5: smallest_primitive_root(p)}},
            {(2, 1): {3: 1}, (3, 1): {4: 1}, (4, 1): {5: 1}},
        ),
        center=(_g(5),),
        derived=(_g(3), _g(4), _g(5)),
        centralizer=(_g(2), _g(3), _g(4)),
    )
)


_BY_NAME = {e.name: e for e in _ENTRIES}


def all_entries() -> tuple[CatalogEntry, ...]:
    return tuple(_ENTRIES)


def entry_names() -> tuple[str, ...]:
    return tuple(e.name for e in _ENTRIES)


def names_for_prime(p: int) -> tuple[str, ...]:
    return tuple(e.name for e in _ENTRIES if e.admissible(p))


def get_entry(name: str) -> CatalogEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}") from None


def instantiate(name: str, p: int) -> CatalogGroup:
    """Build the named group at prime p and verify its declared subgroups."""
    entry = get_entry(name)
    pres = entry.presentation(p)
    group = PcGroup(pres, name=f"{name}@p={p}")
    if group.size != p**5:
        raise CatalogError(f"{name}: expected order p^5, got {group.size}")

    center = resolve_subgroup(group, entry.center)
    if center != group.center():
        raise CatalogError(f"{name}: declared center differs from computed center")
    derived = resolve_subgroup(group, entry.derived)
    if derived != group.derived_subgroup():
        raise CatalogError(
            f"{name}: declared derived subgroup differs from computed one"
        )
    centralizer = None
    if entry.centralizer is not None:
        centralizer = resolve_subgroup(group, entry.centralizer)
        if centralizer != group.centralizer(derived):
            raise CatalogError(
                f"{name}: declared centralizer of G' differs from computed one"
            )
    return CatalogGroup(entry, p, group, center, derived, centralizer)


def classify(group: PcGroup) -> int:
    """Family number (1-10) of a consistent order-p^5 group, by invariants."""
    p = group.p
    if group.size != p**5:
        raise StructureError(f"classification needs order p^5, got {group.size}")
    derived = group.derived_subgroup()
    if derived.order == 1:
        return 1
    center = group.center()
    z, d = center.order, derived.order
    if d == p and z == p**3:
        return 2
    if z == p and d == p:
        return 5
    if z == p**2 and d == p**2 and derived <= center:
        return 4
    if z == p**2 and d == p**3:
        return 6
    if z == p**2 and d == p**2:
        return 3
    cd = set(group.char_degree_counts())
    if z == p and d == p**3 and cd == {1, p}:
        return 9
    if cd == {1, p, p**2}:
        if d == p**3:
            return 10
        if d == p**2:
            # Exponent of G/Z(G) distinguishes the two families.
            return 7 if _quotient_exponent(group, center) == p else 8
    raise StructureError("no classification row matches this group")


def _quotient_exponent(group: PcGroup, sub: Subgroup) -> int:
    """Exponent of G/N for a normal subgroup N (orders of elements mod N)."""
    exp = 1
    for x in range(group.size):
        y = x
        order = 1
        while y not in sub:
            y = group.mul(y, x)
            order += 1
        exp = max(exp, order)
    return exp
