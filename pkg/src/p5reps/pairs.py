"""Required pairs (H, psi): linear seeds for the rational irreducibles.

A required pair for a rational irreducible consists of a subgroup H and a
degree-one character psi of H such that psi^G is an irreducible complex
character chi with Q(psi) = Q(chi).  One pair per Galois orbit of Irr(G)
suffices to realize every rational irreducible representation.

Two construction routes are provided and cross-checked:

* ``closed_form_pairs`` follows the per-family structure theory (centrally
  vanishing groups, Camina pairs, abelian index-p subgroups, and quotient
  lifting for the remaining families);
* ``generic_search`` scans candidate subgroups directly and keeps every
  (H, psi) whose induced character is irreducible with matching field.

Both must cover exactly one pair per rational irreducible; the number of
rational irreducibles equals the number of conjugacy classes of cyclic
subgroups, which is used as a completeness check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Callable, Iterator, Mapping

from .catalog import CatalogGroup
from .characters import (
    ClassFunction,
    LinearCharacter,
    euler_phi,
    left_transversal,
    linear_orbits,
    ramanujan_sum,
)
from .cyclotomic import CycNumber, root_of_unity
from .pcgroup import PcGroup, StructureError, Subgroup

Progress = Callable[[str], None] | None


class SearchError(StructureError):
    """A pair construction failed or did not cover all rational irreducibles."""


class DispatchError(StructureError):
    """A family-specific construction was applied to the wrong family."""


# ---------------------------------------------------------------------------
# degree-one characters of arbitrary subgroups


class PsiChar:
    """A degree-one character of a (possibly non-abelian) subgroup.

    Stored as an explicit exponent table: psi(x) = zeta_n^exps[x] with n the
    exact order of psi.  This representation works uniformly for abelian and
    non-abelian domains (the character factors through H/H').
    """

    __slots__ = ("domain", "order", "exps")

    def __init__(self, domain: Subgroup, order: int, exps: Mapping[int, int]):
        self.domain = domain
        self.order = order
        self.exps = exps

    @staticmethod
    def from_linear(psi: LinearCharacter) -> "PsiChar":
        exps = {x: psi.value_exponent(x) for x in psi.domain.members}
        return PsiChar(psi.domain, psi.order, exps)

    def value_exponent(self, x: int) -> int:
        return self.exps[x]

    def value(self, x: int) -> CycNumber:
        return root_of_unity(self.order, self.exps[x])

    def kernel_size(self) -> int:
        return sum(1 for e in self.exps.values() if e == 0)

    def generator_exponents(self) -> tuple[int, ...]:
        """Image exponents on the subgroup's stored generators."""
        return tuple(self.exps[g] for g in self.domain.gens)


def _derived_within(h: Subgroup) -> Subgroup:
    """The derived subgroup of h (normal closure in h of generator commutators)."""
    g = h.group
    seeds = {g.commutator(a, b) for a in h.gens for b in h.gens}
    seeds.discard(g.identity)
    sub = g.subgroup(sorted(seeds))
    while True:
        extra = [g.conj(x, t) for x in sub.gens for t in h.gens]
        if all(e in sub for e in extra):
            return sub
        sub = g.subgroup(list(sub.gens) + extra)


def _quotient_structure(
    h: Subgroup,
) -> tuple[tuple[tuple[int, int], ...], dict[int, tuple[int, ...]]]:
    """Basis of H/H' and coordinates of every member of H with respect to it.

    For abelian H this is the subgroup's own basis; otherwise the basis
    consists of canonical coset representatives and the coordinates of a
    member are those of its coset.
    """
    if h.is_abelian():
        return h.abelian_basis(), h.coordinates()
    g = h.group
    p = g.p
    der = _derived_within(h)
    dset = der._member_set
    rep: dict[int, int] = {}
    for x in h.members:
        if x in rep:
            continue
        coset = sorted(g.mul(x, m) for m in der.members)
        r = coset[0]
        for y in coset:
            rep[y] = r
    qreps = sorted(set(rep.values()))
    qorder = len(qreps)

    def bar_order(x: int) -> int:
        m = 1
        while g.pow(x, m) not in dset:
            m *= p
        return m

    orders = {x: bar_order(x) for x in qreps}
    # Invariants from cumulative order counts (conjugate partition).
    logs = []
    d = 1
    total = 0
    while total < qorder:
        total = sum(1 for x in qreps if orders[x] <= d)
        k = 0
        while p**k < total:
            k += 1
        logs.append(k)
        d *= p
    increments = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
    invariants = sorted(
        (
            p ** sum(1 for c in increments if c > pos)
            for pos in range(increments[0] if increments else 0)
        ),
        reverse=True,
    )
    # Greedy canonical basis, mirroring the abelian subgroup algorithm.
    basis: list[tuple[int, int]] = []
    span = {g.identity}
    for m in invariants:
        found = None
        for x in qreps:
            if x in span or orders[x] != m:
                continue
            if m > p and rep[g.pow(x, m // p)] in span:
                continue
            found = x
            break
        if found is None:
            raise StructureError("abelianized basis extraction failed")
        basis.append((found, m))
        new_span: set[int] = set()
        y = g.identity
        for _ in range(m):
            new_span.update(rep[g.mul(s, y)] for s in span)
            y = rep[g.mul(y, found)]
        span = new_span
    if len(span) != qorder:
        raise StructureError("abelianized basis does not span the quotient")
    qcoords: dict[int, tuple[int, ...]] = {g.identity: (0,) * len(basis)}
    for pos, (b, m) in enumerate(basis):
        current = dict(qcoords)
        y = g.identity
        for e in range(1, m):
            y = rep[g.mul(y, b)]
            for x, vec in current.items():
                qcoords[rep[g.mul(x, y)]] = vec[:pos] + (e,) + vec[pos + 1 :]
    if len(qcoords) != qorder:
        raise StructureError("abelianized coordinate enumeration failed")
    return tuple(basis), {x: qcoords[rep[x]] for x in h.members}


def _weight_odometer(moduli: list[int]) -> Iterator[tuple[int, ...]]:
    """All exponent tuples, first position fastest (deterministic order)."""
    exps = [0] * len(moduli)
    while True:
        yield tuple(exps)
        pos = 0
        while pos < len(moduli):
            exps[pos] += 1
            if exps[pos] < moduli[pos]:
                break
            exps[pos] = 0
            pos += 1
        else:
            break
        if pos == len(moduli):
            break


def _psi_from_weights(
    h: Subgroup,
    basis: tuple[tuple[int, int], ...],
    coords: dict[int, tuple[int, ...]],
    weights: tuple[int, ...],
) -> PsiChar:
    moduli = [m for _, m in basis]
    cap = max(moduli, default=1)
    strides = [cap // m for m in moduli]
    g = gcd(cap, *(a * s for a, s in zip(weights, strides))) if basis else cap
    n = cap // g
    exps = {
        x: (sum(a * s * c for a, s, c in zip(weights, strides, vec)) % cap) // g
        for x, vec in coords.items()
    }
    return PsiChar(h, n, exps)


def _psi_orbits(h: Subgroup) -> list[PsiChar]:
    """Galois orbit representatives of the nontrivial degree-one characters."""
    basis, coords = _quotient_structure(h)
    moduli = [m for _, m in basis]
    cap = max(moduli, default=1)
    strides = [cap // m for m in moduli]
    seen: set[tuple[int, ...]] = set()
    out: list[PsiChar] = []
    for a in _weight_odometer(moduli):
        if a in seen:
            continue
        g = gcd(cap, *(ai * si for ai, si in zip(a, strides))) if basis else cap
        n = cap // g
        for t in range(1, n + 1):
            if gcd(t, n) == 1:
                seen.add(tuple(ai * t % mi for ai, mi in zip(a, moduli)))
        if n == 1:
            continue
        out.append(_psi_from_weights(h, basis, coords, a))
    return out


def _extension(h: Subgroup, z: Subgroup, mu: LinearCharacter, target_order: int) -> PsiChar | None:
    """First degree-one psi on abelian H with psi|_Z = mu and the given order.

    The order pins the kernel size (|ker psi| = |H| / order), which is the
    field-equality condition for the centrally vanishing and Camina families.
    """
    basis = h.abelian_basis()
    coords = h.coordinates()
    moduli = [m for _, m in basis]
    cap = max(moduli, default=1)
    strides = [cap // m for m in moduli]
    n0 = mu.order
    if cap % n0:
        return None
    checks = [
        (coords[zb], cap // n0 * mu.value_exponent(zb) % cap)
        for zb, _ in z.abelian_basis()
    ]
    for a in _weight_odometer(moduli):
        img = [ai * si for ai, si in zip(a, strides)]
        if any(
            sum(e * c for e, c in zip(img, vec)) % cap != target
            for vec, target in checks
        ):
            continue
        if cap // gcd(cap, *img) != target_order:
            continue
        return _psi_from_weights(h, basis, coords, a)
    return None


# ---------------------------------------------------------------------------
# induction, irreducibility, and field checks


class _InductionContext:
    """Cached transversal and conjugation data for inducing from one subgroup."""

    def __init__(self, group: PcGroup, h: Subgroup):
        self.group = group
        self.h = h
        self.transversal = left_transversal(group, h)
        hset = h._member_set
        self.conj_pairs: list[list[tuple[int, int]]] = []
        for t in self.transversal[1:]:
            ti = group.inv(t)
            pairs = [
                (x, y)
                for x in h.members
                if (y := group.mul(group.mul(t, x), ti)) in hset
            ]
            self.conj_pairs.append(pairs)

    def irreducible(self, psi: PsiChar) -> bool:
        """Mackey test: psi^G is irreducible iff no outside conjugate fixes psi."""
        e = psi.exps
        for pairs in self.conj_pairs:
            if all(e[y] == e[x] for x, y in pairs):
                return False
        return True

    def induce(self, psi: PsiChar) -> ClassFunction:
        group = self.group
        in_h = self.h._member_set
        n = psi.order
        exps = psi.exps
        values = []
        for rep in group.classes.reps:
            counts = [0] * max(n, 1)
            for t in self.transversal:
                y = group.mul(group.mul(group.inv(t), rep), t)
                if y in in_h:
                    counts[exps[y]] += 1
            values.append(CycNumber(n, counts))
        return ClassFunction(group, tuple(values))


def _prime_factors(m: int) -> list[int]:
    out = []
    q = 2
    while q * q <= m:
        if m % q == 0:
            out.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.append(m)
    return out


@lru_cache(maxsize=None)
def _unit_generator(n: int) -> int:
    """Smallest generator of the (cyclic) unit group modulo an odd prime power."""
    ph = euler_phi(n)
    for g in range(2, n):
        if gcd(g, n) != 1:
            continue
        if all(pow(g, ph // q, n) != 1 for q in _prime_factors(ph)):
            return g
    raise StructureError(f"no unit generator modulo {n}")


def _field_equals(values: tuple[CycNumber, ...], n: int) -> bool:
    """Whether the values generate exactly Q(zeta_n)."""
    if n == 1:
        return all(v.is_rational() for v in values)
    if max(v.n for v in values) < n:
        return False
    ph = euler_phi(n)
    g = _unit_generator(n)
    for q in _prime_factors(ph):
        w = pow(g, ph // q, n)
        if all(v.n == 1 or v.conj_by(w % v.n) == v for v in values):
            return False
    return True


def _trace_tuple(chi: ClassFunction, d: int) -> tuple[int, ...]:
    """Values of the rational character (sum of Galois conjugates over Q(zeta_d))."""
    out = []
    phd = euler_phi(d)
    for v in chi.values:
        if v.is_zero():
            out.append(0)
            continue
        s = sum(c * ramanujan_sum(v.n, j) for j, c in enumerate(v.coeffs) if c)
        q = Fraction(s) * Fraction(phd, euler_phi(v.n))
        if q.denominator != 1:
            raise StructureError("rational character value is not an integer")
        out.append(int(q))
    return tuple(out)


# ---------------------------------------------------------------------------
# the pair record


@dataclass(frozen=True, eq=False)
class RequiredPair:
    """One pair (H, psi) per Galois orbit of Irr(G).

    ``degree`` is chi(1) = [G:H]; ``d`` the conductor of Q(chi) = Q(psi);
    ``rational_values`` the values of the rational irreducible character on
    the conjugacy class representatives (the orbit's canonical fingerprint);
    ``induced`` the exact induced class function (None for degree one, where
    it is determined by psi itself).
    """

    group: PcGroup
    subgroup: Subgroup
    psi: PsiChar
    degree: int
    d: int
    rational_values: tuple[int, ...]
    induced: ClassFunction | None

    @property
    def orbit_size(self) -> int:
        return euler_phi(self.d)

    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.degree, self.d, self.rational_values)

    @property
    def rational_degree(self) -> int:
        return self.degree * euler_phi(self.d)


def _sorted_pairs(pairs: dict[tuple, RequiredPair]) -> list[RequiredPair]:
    return [pairs[k] for k in sorted(pairs)]


def _try_pair(ctx: _InductionContext, psi: PsiChar) -> RequiredPair | None:
    if not ctx.irreducible(psi):
        return None
    chi = ctx.induce(psi)
    n = psi.order
    if not _field_equals(chi.values, n):
        return None
    degree = ctx.group.size // ctx.h.order
    return RequiredPair(
        ctx.group, ctx.h, psi, degree, n, _trace_tuple(chi, n), chi
    )


def _require_pair(ctx: _InductionContext, psi: PsiChar, what: str) -> RequiredPair:
    pair = _try_pair(ctx, psi)
    if pair is None:
        raise SearchError(f"{what}: constructed psi does not give a required pair")
    return pair


def make_pair(group: PcGroup, h: Subgroup, psi: PsiChar) -> RequiredPair:
    """Validate and package an explicitly given (H, psi) as a required pair."""
    return _require_pair(_InductionContext(group, h), psi, "explicit pair")


def check_cover(group: PcGroup, pairs: list[RequiredPair]) -> None:
    """Completeness: one pair per rational irreducible, total dimension |G|."""
    expected = group.cyclic_subgroup_classes()[0]
    if len(pairs) != expected:
        raise SearchError(
            f"found {len(pairs)} pair orbits, expected {expected} rational irreducibles"
        )
    total = sum(p.degree * p.rational_degree for p in pairs)
    if total != group.size:
        raise SearchError(
            f"pair orbits sum to dimension {total}, expected {group.size}"
        )
    if len({p.key for p in pairs}) != len(pairs):
        raise SearchError("duplicate pair orbits")


# ---------------------------------------------------------------------------
# linear part (degree-one rational irreducibles)


def linear_pairs(group: PcGroup) -> list[RequiredPair]:
    """One pair per Galois orbit of degree-one characters of G."""
    whole = group.subgroup(list(group.generators))
    basis, coords = _quotient_structure(whole)
    reps = group.classes.reps
    out = []
    trivial = PsiChar(whole, 1, {x: 0 for x in whole.members})
    out.append(
        RequiredPair(group, whole, trivial, 1, 1, (1,) * len(reps), None)
    )
    for psi in _psi_orbits(whole):
        d = psi.order
        traces = tuple(ramanujan_sum(d, psi.exps[x]) for x in reps)
        out.append(RequiredPair(group, whole, psi, 1, d, traces, None))
    return out


# ---------------------------------------------------------------------------
# closed-form constructions per family


def _nontrivial_on(mu: LinearCharacter, sub: Subgroup) -> bool:
    return any(mu.value_exponent(x) != 0 for x in sub.members)


def _central_mu_pairs(
    group: PcGroup,
    z: Subgroup,
    der: Subgroup,
    candidates: tuple[Subgroup, ...],
    c: int,
    what: str,
) -> list[RequiredPair]:
    """Pairs from extensions of central characters with pinned kernel size.

    For each Galois orbit of mu in lin(Z) nontrivial on G', find an abelian
    candidate H of order c*|Z| containing Z and a degree-one psi extending mu
    with |ker psi| = c * |ker mu|; then chi = psi^G is the (unique) degree-c
    irreducible over mu and Q(psi) = Q(chi).
    """
    contexts: dict[tuple[int, ...], _InductionContext] = {}
    out: dict[tuple, RequiredPair] = {}
    usable = [
        h for h in candidates if h.order == c * z.order and h.is_abelian() and z <= h
    ]
    if not usable:
        raise SearchError(f"{what}: no usable candidate subgroups")
    zder = group.subgroup_from_members(z._member_set & der._member_set)
    for mu, dmu, _ in linear_orbits(z):
        if not _nontrivial_on(mu, zder):
            continue
        target_order = usable[0].order * dmu // (c * z.order)
        pair = None
        for h in usable:
            psi = _extension(h, z, mu, target_order)
            if psi is None:
                continue
            ctx = contexts.setdefault(h.members, _InductionContext(group, h))
            pair = _require_pair(ctx, psi, what)
            break
        if pair is None:
            raise SearchError(f"{what}: no candidate H admits a valid extension")
        out.setdefault(pair.key, pair)
    return _sorted_pairs(out)


def _vz_pairs(cg: CatalogGroup) -> list[RequiredPair]:
    """Nonlinear pairs for the centrally vanishing families (Phi_2, Phi_5)."""
    group = cg.group
    c = isqrt(group.size // cg.center.order)
    return _central_mu_pairs(
        group, cg.center, cg.derived, cg.h_candidates(), c, cg.name
    )


def _camina_degree_p2_pairs(
    group: PcGroup,
    z: Subgroup,
    der: Subgroup,
    candidates: tuple[Subgroup, ...],
    what: str,
) -> list[RequiredPair]:
    """Degree-p^2 pairs for Camina-type groups (Phi_7, Phi_8, Phi_10)."""
    p = group.p
    return _central_mu_pairs(group, z, der, candidates, p * p, what)


def _index_p_abelian_pairs(
    group: PcGroup,
    csub: Subgroup,
    der: Subgroup,
    order_exact: int | None = None,
    progress: Progress = None,
) -> list[RequiredPair]:
    """Nonlinear pairs induced from the abelian index-p subgroup C_G(G').

    Covers the families whose nonlinear irreducibles all have degree p and
    are monomial over C_G(G') with matching fields (Phi_3 with unramified
    field data, Phi_9).  ``order_exact`` restricts to characters of a single
    exact order (the faithful-field slice of Phi_3(311)b_r).
    """
    ctx = _InductionContext(group, csub)
    out: dict[tuple, RequiredPair] = {}
    orbits = linear_orbits(csub)
    for i, (psi_lin, n, _) in enumerate(orbits):
        if progress and i % 25 == 0:
            progress(f"index-p induction: orbit {i + 1}/{len(orbits)}")
        if order_exact is not None and n != order_exact:
            continue
        if not _nontrivial_on(psi_lin, der):
            continue
        pair = _try_pair(ctx, PsiChar.from_linear(psi_lin))
        if pair is not None:
            out.setdefault(pair.key, pair)
    return _sorted_pairs(out)


def _order_p_central_subgroups(group: PcGroup, z: Subgroup) -> list[Subgroup]:
    """The subgroups of order p inside Z, sorted canonically."""
    p = group.p
    found: dict[tuple[int, ...], Subgroup] = {}
    for x in z.members:
        if x != group.identity and group.element_order(x) == p:
            s = group.subgroup([x])
            found.setdefault(s.members, s)
    return [found[k] for k in sorted(found)]


def lifted_pairs(
    group: PcGroup, k: Subgroup, progress: Progress = None
) -> list[RequiredPair]:
    """Nonlinear pairs of G/K pulled back to G through the quotient projection.

    If (H-bar, psi-bar) is a required pair of Q = G/K, then the preimage H of
    H-bar together with the inflation psi of psi-bar is a required pair of G
    affording the inflation of the induced character.
    """
    qd = group.quotient_data(k)
    out = []
    for pr in generic_search(qd.group, progress=progress):
        if pr.degree > 1:
            out.extend(_lift_one(group, qd, pr))
    return out


def _lift_one(group: PcGroup, qd, pr: RequiredPair) -> list[RequiredPair]:
    proj = qd.projection
    qclass = qd.group.classes.class_of
    hbar = pr.subgroup._member_set
    members = [x for x in range(group.size) if proj[x] in hbar]
    h = group.subgroup_from_members(members)
    exps = {x: pr.psi.exps[proj[x]] for x in members}
    psi = PsiChar(h, pr.psi.order, exps)
    assert pr.induced is not None
    values = tuple(
        pr.induced.values[qclass[proj[rep]]] for rep in group.classes.reps
    )
    chi = ClassFunction(group, values)
    return [
        RequiredPair(group, h, psi, pr.degree, pr.d, _trace_tuple(chi, pr.d), chi)
    ]


def _family3_pairs(cg: CatalogGroup, progress: Progress = None) -> list[RequiredPair]:
    group = cg.group
    p = cg.p
    out: dict[tuple, RequiredPair] = {}
    if cg.name.startswith("Phi_3(311)b"):
        # Faithful-field slice from C_G(G'), the rest lifted over the socle of Z.
        assert cg.centralizer is not None
        for pr in _index_p_abelian_pairs(
            group, cg.centralizer, cg.derived, order_exact=p**3, progress=progress
        ):
            out.setdefault(pr.key, pr)
        (k,) = _order_p_central_subgroups(group, cg.center)
        for pr in lifted_pairs(group, k, progress=progress):
            out.setdefault(pr.key, pr)
    elif cg.name == "Phi_3(1^5)":
        assert cg.centralizer is not None
        for pr in _index_p_abelian_pairs(
            group, cg.centralizer, cg.derived, progress=progress
        ):
            out.setdefault(pr.key, pr)
    else:
        # Phi_3(221)a / Phi_3(2111)e: every nonlinear character kills one of
        # the p+1 order-p central subgroups; lift over each.
        for k in _order_p_central_subgroups(group, cg.center):
            for pr in lifted_pairs(group, k, progress=progress):
                out.setdefault(pr.key, pr)
    return _sorted_pairs(out)


def closed_form_pairs(cg: CatalogGroup, progress: Progress = None) -> list[RequiredPair]:
    """All required pairs of a catalog group via the per-family structure theory."""
    group = cg.group
    fam = cg.family
    pairs = {pr.key: pr for pr in linear_pairs(group)}
    extra: list[RequiredPair] = []
    if fam == 1:
        pass
    elif fam in (2, 5):
        extra = _vz_pairs(cg)
    elif fam == 3:
        extra = _family3_pairs(cg, progress=progress)
    elif fam == 4:
        for k in _order_p_central_subgroups(group, cg.center):
            extra.extend(lifted_pairs(group, k, progress=progress))
    elif fam in (7, 8):
        extra = _camina_degree_p2_pairs(
            group, cg.center, cg.derived, cg.h_candidates(), cg.name
        )
        extra.extend(lifted_pairs(group, cg.center, progress=progress))
    elif fam == 9:
        assert cg.centralizer is not None
        extra = _index_p_abelian_pairs(
            group, cg.centralizer, cg.derived, progress=progress
        )
    else:
        raise SearchError(f"no closed-form construction for family {fam}")
    for pr in extra:
        pairs.setdefault(pr.key, pr)
    result = _sorted_pairs(pairs)
    check_cover(group, result)
    return result


def closed_form_pairs_for(
    group: PcGroup, family: int, progress: Progress = None
) -> list[RequiredPair]:
    """Closed-form pairs for a bare classified group (no catalog candidates).

    Candidate subgroups for the extension-based families are recovered
    structurally (abelian overgroups of the relevant normal subgroup), which
    also covers ingested presentations of families absent from the catalog
    (Phi_6, Phi_10).
    """
    p = group.p
    z = group.center()
    der = group.derived_subgroup()
    pairs = {pr.key: pr for pr in linear_pairs(group)}
    extra: list[RequiredPair] = []
    if family == 1:
        pass
    elif family in (2, 5):
        c = isqrt(group.size // z.order)
        cands = tuple(group.overgroups_of(z, c * z.order, abelian_only=True))
        extra = _central_mu_pairs(group, z, der, cands, c, f"family {family}")
    elif family in (7, 8, 10):
        if family == 10:
            cands: tuple[Subgroup, ...] = (der,)
        else:
            join = group.subgroup(list(der.gens) + list(z.gens))
            cands = tuple(
                group.overgroups_of(join, p * p * z.order, abelian_only=True)
            )
        extra = _camina_degree_p2_pairs(group, z, der, cands, f"family {family}")
        extra.extend(lifted_pairs(group, z, progress=progress))
    elif family in (4, 6):
        for k in _order_p_central_subgroups(group, z):
            extra.extend(lifted_pairs(group, k, progress=progress))
    elif family in (3, 9):
        if p == 3:
            # The index-p closed form is only asserted for p >= 5.
            extra = [pr for pr in generic_search(group, progress=progress) if pr.degree > 1]
        else:
            csub = group.centralizer(der)
            if csub.order == group.size // p and csub.is_abelian():
                extra = _index_p_abelian_pairs(group, csub, der, progress=progress)
            else:
                raise SearchError("expected an abelian index-p centralizer of G'")
    else:
        raise SearchError(f"no closed-form construction for family {family}")
    for pr in extra:
        pairs.setdefault(pr.key, pr)
    result = _sorted_pairs(pairs)
    check_cover(group, result)
    return result


# ---------------------------------------------------------------------------
# public per-family entry points


def vz_pairs(cg: CatalogGroup) -> list[RequiredPair]:
    """Nonlinear pairs for a centrally vanishing catalog group (Phi_2, Phi_5)."""
    if cg.family not in (2, 5):
        raise DispatchError(f"{cg.name} is not a centrally vanishing family member")
    return _vz_pairs(cg)


def camina_pairs(cg: CatalogGroup) -> list[RequiredPair]:
    """Degree-p^2 pairs for a Camina-type catalog group (Phi_7, Phi_8, Phi_10)."""
    if cg.family not in (7, 8, 10):
        raise DispatchError(f"{cg.name} is not a Camina-type family member")
    candidates = cg.h_candidates() if cg.family != 10 else (cg.derived,)
    return _camina_degree_p2_pairs(
        cg.group, cg.center, cg.derived, candidates, cg.name
    )


def abelian_index_p_pairs(cg: CatalogGroup, progress: Progress = None) -> list[RequiredPair]:
    """Nonlinear pairs over C_G(G') for Phi_3 / Phi_9 members.

    At p = 3 the closed form is unproven; falls back to the generic search
    with a warning.
    """
    if cg.family not in (3, 9):
        raise DispatchError(f"{cg.name} does not have the abelian index-p structure")
    if cg.p == 3:
        import warnings

        warnings.warn(
            f"{cg.name}: index-p closed form is only asserted for p >= 5; "
            "using the generic search",
            stacklevel=2,
        )
        return [pr for pr in generic_search(cg.group, progress=progress) if pr.degree > 1]
    assert cg.centralizer is not None
    order_exact = cg.p**3 if cg.name.startswith("Phi_3(311)b") else None
    return _index_p_abelian_pairs(
        cg.group, cg.centralizer, cg.derived, order_exact=order_exact, progress=progress
    )


def quotient_lift_pairs(
    group: PcGroup, k: Subgroup, progress: Progress = None
) -> list[RequiredPair]:
    """All pairs whose characters contain K in their kernel (K central, |K| <= p).

    Solved in the quotient G/K and pulled back; with trivial K this is just
    the full generic search.
    """
    if k.order == 1:
        return generic_search(group, progress=progress)
    if k.order != group.p or not all(
        group.mul(x, y) == group.mul(y, x)
        for x in k.members
        for y in group.generators
    ):
        raise SearchError("lifting requires a central subgroup of order p")
    qd = group.quotient_data(k)
    proj = qd.projection
    qclass = qd.group.classes.class_of
    out = []
    for pr in generic_search(qd.group, progress=progress):
        if pr.degree == 1:
            # Degree-one characters of G/K inflate to degree-one of G; they are
            # already covered by linear_pairs, but the lift form is included
            # for completeness of the "all chi with K in the kernel" contract.
            whole = group.subgroup(list(group.generators))
            exps = {x: pr.psi.exps[proj[x]] for x in range(group.size)}
            psi = PsiChar(whole, pr.psi.order, exps)
            traces = tuple(
                pr.rational_values[qclass[proj[rep]]] for rep in group.classes.reps
            )
            out.append(RequiredPair(group, whole, psi, 1, pr.d, traces, None))
        else:
            out.extend(_lift_one(group, qd, pr))
    return out


# ---------------------------------------------------------------------------
# generic search


def _candidate_subgroups(group: PcGroup) -> list[Subgroup]:
    """Subgroups that can carry a required pair for a nonlinear character.

    Maximal subgroups (degree p), abelian overgroups of the center of index
    p^2 (degree p^2 extensions of central characters), and overgroups of G'
    of index p^2 when G' is large enough to force H >= G'.
    """
    p = group.p
    z = group.center()
    der = group.derived_subgroup()
    found: dict[tuple[int, ...], Subgroup] = {}
    for h in group.maximal_subgroups():
        found.setdefault(h.members, h)
    target = group.size // (p * p)
    if target >= z.order:
        for h in group.overgroups_of(z, target, abelian_only=True):
            found.setdefault(h.members, h)
    if p * p <= der.order <= target:
        for h in group.overgroups_of(der, target):
            found.setdefault(h.members, h)
    return [found[k] for k in sorted(found)]


def generic_search(group: PcGroup, progress: Progress = None) -> list[RequiredPair]:
    """All required pairs by direct scan over candidate subgroups.

    Independent of the family theory: keeps every (H, psi) whose induced
    character passes the Mackey irreducibility test and the field-equality
    test, deduplicated by rational character values, then checks coverage.
    """
    pairs = {pr.key: pr for pr in linear_pairs(group)}
    if group.derived_subgroup().order > 1:
        candidates = _candidate_subgroups(group)
        for i, h in enumerate(candidates):
            if progress:
                progress(
                    f"searching subgroup {i + 1}/{len(candidates)} (order {h.order})"
                )
            ctx = _InductionContext(group, h)
            for psi in _psi_orbits(h):
                pr = _try_pair(ctx, psi)
                if pr is not None:
                    pairs.setdefault(pr.key, pr)
    result = _sorted_pairs(pairs)
    check_cover(group, result)
    return result
