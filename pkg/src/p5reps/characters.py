"""Characters of small p-groups: linear characters, induction, Galois orbits.

Linear characters are stored arithmetically — an order n and integer weights
with respect to the domain's abelian basis — so that evaluation, Galois
twisting and comparison never materialize field elements.  Class functions
store one exact cyclotomic value per conjugacy class; rational-character data
(the sum over a Galois orbit) is computed through Ramanujan sums and is always
exactly rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .cyclotomic import CycNumber, CyclotomicError, field_of_values, root_of_unity
from .pcgroup import ConjugacyClasses, PcGroup, StructureError, Subgroup

Rational = int | Fraction


def euler_phi(n: int) -> int:
    out = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            out -= out // f
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out -= out // m
    return out


def ramanujan_sum(n: int, e: int) -> int:
    """sum over t coprime to n of zeta_n^(t*e), for prime-power (or 1) n."""
    if n == 1:
        return 1
    g = gcd(e % n, n)
    m = n // g
    if m == 1:
        return euler_phi(n)
    p = _least_prime_factor(m)
    if m == p:
        return -(euler_phi(n) // euler_phi(p))
    return 0


def _least_prime_factor(m: int) -> int:
    f = 2
    while f * f <= m:
        if m % f == 0:
            return f
        f += 1
    return m


class LinearCharacter:
    """A homomorphism H -> <zeta_n>, H abelian, given by basis weights.

    With basis ((b_i, m_i)) and coordinates x = prod b_i^{c_i}, the value is
    psi(x) = zeta_n^(sum w_i c_i); n is always the exact order of psi.
    """

    __slots__ = ("domain", "order", "weights", "_hash")

    def __init__(self, domain: Subgroup, order: int, weights: tuple[int, ...]):
        self.domain = domain
        basis = domain.abelian_basis()
        n0 = order
        g = n0
        for w, (_, m) in zip(weights, basis):
            # each weight must define a valid image on a basis element
            if (w * m) % n0:
                raise StructureError("weight does not respect basis element order")
            g = gcd(g, w)
        n = n0 // g
        self.order = n
        self.weights = tuple((w // g) % n for w in weights)
        self._hash: int | None = None

    @staticmethod
    def from_images(domain: Subgroup, image_exponents: Sequence[int]) -> "LinearCharacter":
        """psi(b_i) = zeta_{m_i}^{a_i} for the domain's abelian basis (b_i, m_i)."""
        basis = domain.abelian_basis()
        if len(image_exponents) != len(basis):
            raise StructureError("one image exponent per basis element required")
        n0 = max((m for _, m in basis), default=1)
        weights = tuple(
            (a % m) * (n0 // m) for a, (_, m) in zip(image_exponents, basis)
        )
        return LinearCharacter(domain, n0, weights)

    @staticmethod
    def trivial(domain: Subgroup) -> "LinearCharacter":
        return LinearCharacter(domain, 1, (0,) * len(domain.abelian_basis()))

    @staticmethod
    def all_of(domain: Subgroup) -> list["LinearCharacter"]:
        """All |H| linear characters, in deterministic image-exponent order."""
        if not domain.is_abelian():
            raise StructureError("linear characters require an abelian domain")
        basis = domain.abelian_basis()
        out: list[LinearCharacter] = []
        exps = [0] * len(basis)
        while True:
            out.append(LinearCharacter.from_images(domain, tuple(exps)))
            pos = 0
            while pos < len(basis):
                exps[pos] += 1
                if exps[pos] < basis[pos][1]:
                    break
                exps[pos] = 0
                pos += 1
            else:
                break
            if pos == len(basis):
                break
        return out

    def value_exponent(self, x: int) -> int:
        coords = self.domain.coordinates()[x]
        return sum(w * c for w, c in zip(self.weights, coords)) % self.order

    def value(self, x: int) -> CycNumber:
        return root_of_unity(self.order, self.value_exponent(x))

    def is_trivial(self) -> bool:
        return self.order == 1

    def power(self, t: int) -> "LinearCharacter":
        """The Galois twist / power psi^t."""
        return LinearCharacter(
            self.domain, self.order, tuple(w * t % self.order for w in self.weights)
        )

    def restrict(self, sub: Subgroup) -> "LinearCharacter":
        if not all(x in self.domain for x in sub.members):
            raise StructureError("restriction target is not contained in the domain")
        images = []
        for b, m in sub.abelian_basis():
            e = self.value_exponent(b)
            images.append(e * m // self.order % m)
        return LinearCharacter.from_images(sub, tuple(images))

    def kernel_members(self) -> tuple[int, ...]:
        return tuple(x for x in self.domain.members if self.value_exponent(x) == 0)

    def kernel(self) -> Subgroup:
        return self.domain.group.subgroup_from_members(self.kernel_members())

    def canonical_weights(self) -> tuple[int, ...]:
        """Least weight tuple over the Galois orbit (orbit canonical form)."""
        n = self.order
        return min(
            tuple(w * t % n for w in self.weights)
            for t in range(1, n + 1)
            if gcd(t, n) == 1
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCharacter):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.order == other.order
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.domain.members, self.order, self.weights))
        return self._hash


def linear_orbits(domain: Subgroup) -> list[tuple[LinearCharacter, int, int]]:
    """Galois orbit representatives of lin(H): (representative, d, orbit size).

    The orbit of a linear character of exact order d has size phi(d) and field
    of values Q(zeta_d); the representative is the orbit member met first in
    the deterministic enumeration order of lin(H).
    """
    seen: set[tuple[int, tuple[int, ...]]] = set()
    out: list[tuple[LinearCharacter, int, int]] = []
    for psi in LinearCharacter.all_of(domain):
        n = psi.order
        if (n, psi.weights) in seen:
            continue
        for t in range(1, n + 1):
            if gcd(t, n) == 1:
                seen.add((n, tuple(w * t % n for w in psi.weights)))
        out.append((psi, n, euler_phi(n)))
    return out


@dataclass(frozen=True)
class ClassFunction:
    """Exact cyclotomic values, one per conjugacy class of the group."""

    group: PcGroup
    values: tuple[CycNumber, ...]

    @property
    def degree(self) -> Rational:
        v = self.values[0]
        return v.rational_value()

    def value_at(self, x: int) -> CycNumber:
        return self.values[self.group.classes.class_of[x]]

    def conj_by(self, t: int) -> "ClassFunction":
        return ClassFunction(
            self.group, tuple(v.conj_by(t % v.n if v.n > 1 else 1) for v in self.values)
        )

    def kernel(self) -> Subgroup:
        g = self.group
        deg = self.values[0]
        members = [
            x for x in range(g.size) if self.values[g.classes.class_of[x]] == deg
        ]
        return g.subgroup_from_members(members)

    def restrict_values(self, sub: Subgroup) -> dict[int, CycNumber]:
        return {x: self.value_at(x) for x in sub.members}


def class_function_from_linear(psi: LinearCharacter) -> ClassFunction:
    """View a linear character of the whole group as a class function."""
    g = psi.domain.group
    if psi.domain.order != g.size:
        raise StructureError("expected a character of the full group")
    values = tuple(psi.value(rep) for rep in g.classes.reps)
    return ClassFunction(g, values)


def induce(psi: LinearCharacter, group: PcGroup) -> ClassFunction:
    """Frobenius induction psi^G as an exact class function.

    Uses the canonical left transversal (least-index representative per coset
    x*H, cosets ordered by representative index).
    """
    h = psi.domain
    if h.group is not group:
        raise StructureError("subgroup belongs to a different group")
    transversal = left_transversal(group, h)
    n = psi.order
    in_h = h._member_set
    exps = h.coordinates()
    weights = psi.weights
    values = []
    for rep in group.classes.reps:
        counts = [0] * max(n, 1)
        for t in transversal:
            y = group.mul(group.mul(group.inv(t), rep), t)
            if y in in_h:
                coords = exps[y]
                e = sum(w * c for w, c in zip(weights, coords)) % n
                counts[e] += 1
        values.append(CycNumber(n, counts))
    return ClassFunction(group, tuple(values))


def left_transversal(group: PcGroup, h: Subgroup) -> tuple[int, ...]:
    """Least-index representatives of the cosets x*H, in index order."""
    seen = bytearray(group.size)
    reps = []
    for x in range(group.size):
        if seen[x]:
            continue
        reps.append(x)
        for m in h.members:
            seen[group.mul(x, m)] = 1
    return tuple(reps)


def inner_product(a: ClassFunction, b: ClassFunction) -> Rational:
    """(1/|G|) sum over g of a(g) * b(g^-1), exact."""
    g = a.group
    if b.group is not g:
        raise StructureError("class functions on different groups")
    classes = g.classes
    inv_class = [classes.class_of[g.inv(rep)] for rep in classes.reps]
    total = CycNumber.rational(0)
    for c, size in enumerate(classes.sizes):
        term = a.values[c] * b.values[inv_class[c]]
        if not term.is_zero():
            total = total + term.scaled(size)
    total = total.scaled(Fraction(1, g.size))
    if not total.is_rational():
        raise StructureError("inner product of class functions is irrational")
    return total.rational_value()


def is_irreducible(chi: ClassFunction) -> bool:
    return inner_product(chi, chi) == 1


@dataclass(frozen=True)
class GaloisOrbit:
    """A Galois conjugacy class of irreducible characters."""

    representative: ClassFunction
    size: int
    field_order: int  # d with Q(chi) = Q(zeta_d)


def galois_orbit(chi: ClassFunction) -> GaloisOrbit:
    """Orbit of chi under the Galois action on values.

    The representative is the orbit member whose value vector is
    lexicographically least under the fixed class ordering.
    """
    e = 1
    for v in chi.values:
        if v.n > e:
            e = v.n
    d = field_of_values(chi.values)
    seen: dict[tuple, ClassFunction] = {}
    for t in range(1, max(e, 2)):
        if gcd(t, e) != 1:
            continue
        member = chi.conj_by(t) if t > 1 else chi
        key = _value_key(member)
        if key not in seen:
            seen[key] = member
    size = len(seen)
    if size != euler_phi(d):
        raise StructureError("Galois orbit size does not match the field of values")
    rep_key = min(seen)
    return GaloisOrbit(seen[rep_key], size, d)


def _value_key(chi: ClassFunction) -> tuple:
    return tuple((v.n, tuple(map(Fraction, v.coeffs))) for v in chi.values)


def omega(chi: ClassFunction) -> ClassFunction:
    """Sum of the Galois conjugates of chi: the rational character it affords.

    Computed coefficientwise through Ramanujan sums, then scaled by
    phi(d)/phi(e) to count each orbit member exactly once (the Schur index is
    1 for the groups in scope).
    """
    e = 1
    for v in chi.values:
        if v.n > e:
            e = v.n
    d = field_of_values(chi.values)
    scale = Fraction(euler_phi(d), euler_phi(e))
    out = []
    for v in chi.values:
        promoted = v.promoted(e)
        total = sum(c * ramanujan_sum(e, j) for j, c in enumerate(promoted) if c)
        val = Fraction(total) * scale
        out.append(CycNumber.rational(val if val.denominator != 1 else int(val)))
    return ClassFunction(chi.group, tuple(out))


def omega_linear_values(psi: LinearCharacter) -> dict[int, int]:
    """Values of the rational character summing the orbit of a linear psi.

    Works purely with exponents, so it also covers orders beyond the
    cyclotomic arithmetic cap (e.g. C_{p^5}).
    """
    n = psi.order
    return {x: ramanujan_sum(n, psi.value_exponent(x)) for x in psi.domain.members}


def lift(chi_bar: ClassFunction, quotient_projection: Sequence[int], group: PcGroup) -> ClassFunction:
    """Lift a class function on G/N to G through the projection array."""
    q = chi_bar.group
    values = []
    for rep in group.classes.reps:
        values.append(chi_bar.values[q.classes.class_of[quotient_projection[rep]]])
    return ClassFunction(group, tuple(values))


def is_camina_pair(group: PcGroup, n: Subgroup) -> bool:
    """Whether every g outside n is conjugate to the whole coset g*n."""
    if n.order <= 1 or n.order >= group.size or not group.is_normal(n):
        return False
    cls = group.classes.class_of
    for g in range(group.size):
        if g in n:
            continue
        c = cls[g]
        if any(cls[group.mul(g, m)] != c for m in n.members):
            return False
    return True


def is_vz_group(group: PcGroup) -> bool:
    """Whether every nonlinear irreducible character vanishes off the center.

    Equivalent class-level criterion: the class of every g outside Z(G) is
    exactly the coset g*G'.
    """
    center = group.center()
    derived = group.derived_subgroup()
    if derived.order == 1:
        return False
    cls = group.classes.class_of
    sizes = group.classes.sizes
    for g in range(group.size):
        if g in center:
            continue
        if sizes[cls[g]] != derived.order:
            return False
        c = cls[g]
        if any(cls[group.mul(g, m)] != c for m in derived.members):
            return False
    return True
