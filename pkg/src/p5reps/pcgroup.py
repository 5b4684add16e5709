"""Power-commutator presentations and structural algorithms for small p-groups.

A presentation on generators g_1 < g_2 < ... < g_m (m <= 5) lists, for each i,
the normal form of g_i^p, and for each pair j > i the normal form of the
commutator [g_j, g_i] = g_j^-1 g_i^-1 g_j g_i; every right-hand side uses only
strictly later generators.  Elements are exponent vectors in collected normal
form g_1^{e_1} ... g_m^{e_m}, addressed by the little-endian index
sum(e_i * p^(i-1)), so g_1 varies fastest and the identity is index 0.

Multiplication is realized by per-generator right-multiplication permutation
tables, bootstrapped from the relations one generator at a time (deepest
first).  Consistency of a presentation is checked at construction time:
tables must be permutations, the defining relations must hold under table
multiplication, and associativity must hold on all generator triples plus a
deterministic sample of random triples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence

SUPPORTED_PRIMES = (3, 5, 7)

_ASSOC_SAMPLES = 1000
_RNG_SEED = 987654321


class PresentationError(ValueError):
    """The relations do not define a consistent group of order p^ngens."""


class CapacityError(ValueError):
    """The requested prime or order is outside the supported envelope."""


class StructureError(ValueError):
    """Invalid structural request (non-normal quotient, mixed groups, ...)."""


@dataclass(frozen=True)
class PcPresentation:
    """A validated power-commutator presentation (generators are 0-based here)."""

    p: int
    ngens: int
    powers: tuple[tuple[int, ...], ...]
    commutators: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]

    @staticmethod
    def build(
        p: int,
        ngens: int,
        powers: Mapping[int, Mapping[int, int]] | None = None,
        commutators: Mapping[tuple[int, int], Mapping[int, int]] | None = None,
    ) -> "PcPresentation":
        """Build from 1-based sparse relation data.

        ``powers[i]`` maps generator number -> exponent for the normal form of
        g_i^p; ``commutators[(j, i)]`` (j > i) likewise for [g_j, g_i].
        Unlisted relations are trivial.
        """
        if p == 2 or p < 2:
            raise PresentationError(f"p must be an odd prime, got {p}")
        if p not in SUPPORTED_PRIMES:
            raise CapacityError(f"p={p} is outside the supported primes {SUPPORTED_PRIMES}")
        if not 1 <= ngens <= 5:
            raise PresentationError(f"ngens must be in 1..5, got {ngens}")

        def vec(data: Mapping[int, int], floor: int, what: str) -> tuple[int, ...]:
            out = [0] * ngens
            for gen, e in data.items():
                if not 1 <= gen <= ngens:
                    raise PresentationError(f"{what}: generator {gen} out of range")
                if gen <= floor:
                    raise PresentationError(
                        f"{what}: right-hand side must use generators after g_{floor}"
                    )
                out[gen - 1] = e % p
            return tuple(out)

        pw = []
        for i in range(1, ngens + 1):
            pw.append(vec((powers or {}).get(i, {}), i, f"g_{i}^p"))
        cm = []
        for (j, i), data in sorted((commutators or {}).items()):
            if not 1 <= i < j <= ngens:
                raise PresentationError(f"commutator pair ({j},{i}) invalid")
            v = vec(data, j, f"[g_{j},g_{i}]")
            if any(v):
                cm.append(((j - 1, i - 1), v))
        return PcPresentation(p, ngens, tuple(pw), tuple(cm))

    def commutator_map(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return dict(self.commutators)


class Subgroup:
    """A subgroup identified canonically by its sorted member-index tuple."""

    __slots__ = ("group", "gens", "members", "_member_set", "_abelian", "_basis", "_coords")

    def __init__(self, group: "PcGroup", gens: Sequence[int], members: Sequence[int]):
        self.group = group
        self.gens = tuple(gens)
        self.members = tuple(sorted(members))
        self._member_set = frozenset(self.members)
        self._abelian: bool | None = None
        self._basis: tuple[tuple[int, int], ...] | None = None
        self._coords: dict[int, tuple[int, ...]] | None = None

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    def __le__(self, other: "Subgroup") -> bool:
        return self._member_set <= other._member_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.group is other.group and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.group), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order})"

    def is_abelian(self) -> bool:
        if self._abelian is None:
            g = self.group
            self._abelian = all(
                g.mul(a, b) == g.mul(b, a) for a in self.gens for b in self.gens
            )
        return self._abelian

    def order_counts(self) -> dict[int, int]:
        """Map p^j -> number of members x with x^(p^j) = identity."""
        g = self.group
        counts: dict[int, int] = {}
        for x in self.members:
            counts[g.element_order(x)] = counts.get(g.element_order(x), 0) + 1
        cum: dict[int, int] = {}
        total = 0
        d = 1
        while total < self.order:
            total += counts.get(d, 0)
            cum[d] = total
            d *= g.p
        return cum

    def exponent(self) -> int:
        g = self.group
        return max(g.element_order(x) for x in self.members)

    def abelian_invariants(self) -> tuple[int, ...]:
        """Cyclic factor orders of an abelian subgroup, sorted descending."""
        if not self.is_abelian():
            raise StructureError("abelian_invariants requires an abelian subgroup")
        p = self.group.p
        cum = self.order_counts()
        # c_j = log_p |{x : x^(p^j) = 1}|; the increments form the conjugate
        # partition of the invariant exponents.
        logs = []
        d = 1
        while d in cum:
            logs.append(_ilog(cum[d], p))
            d *= p
        increments = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        result = []
        for pos in range(increments[0] if increments else 0):
            lam = sum(1 for c in increments if c > pos)
            result.append(p**lam)
        result.sort(reverse=True)
        return tuple(result)

    def abelian_basis(self) -> tuple[tuple[int, int], ...]:
        """An independent generating sequence ((element, order), ...).

        Chosen deterministically: for each invariant order m (descending), the
        least-index member of order m whose image modulo the span so far still
        has order m.
        """
        if self._basis is not None:
            return self._basis
        g = self.group
        invariants = self.abelian_invariants()
        basis: list[tuple[int, int]] = []
        span = {g.identity}
        span_sub = None
        for m in invariants:
            found = None
            for x in self.members:
                if x in span or g.element_order(x) != m:
                    continue
                if m > g.p and g.pow(x, m // g.p) in span:
                    continue
                found = x
                break
            if found is None:
                raise StructureError("abelian basis extraction failed")
            basis.append((found, m))
            new_span = set()
            y = g.identity
            for _ in range(m):
                new_span.update(g.mul(s, y) for s in span)
                y = g.mul(y, found)
            span = new_span
        if len(span) != self.order:
            raise StructureError("abelian basis does not span the subgroup")
        self._basis = tuple(basis)
        return self._basis

    def coordinates(self) -> dict[int, tuple[int, ...]]:
        """Map member -> exponent tuple with respect to abelian_basis()."""
        if self._coords is not None:
            return self._coords
        g = self.group
        basis = self.abelian_basis()
        coords: dict[int, tuple[int, ...]] = {g.identity: (0,) * len(basis)}
        for pos, (b, m) in enumerate(basis):
            current = dict(coords)
            y = g.identity
            for e in range(1, m):
                y = g.mul(y, b)
                for x, vec in current.items():
                    z = g.mul(x, y)
                    coords[z] = vec[:pos] + (e,) + vec[pos + 1 :]
        if len(coords) != self.order:
            raise StructureError("coordinate enumeration failed")
        self._coords = coords
        return coords


def _ilog(x: int, p: int) -> int:
    k = 0
    while x > 1:
        if x % p:
            raise StructureError(f"{x} is not a power of {p}")
        x //= p
        k += 1
    return k


@dataclass(frozen=True)
class ConjugacyClasses:
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    class_of: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.reps)


@dataclass(frozen=True)
class QuotientData:
    """A consistent presentation of G/N with projection and section maps."""

    group: "PcGroup"
    projection: tuple[int, ...]  # G index -> quotient index
    section: tuple[int, ...]  # quotient index -> coset representative in G


class PcGroup:
    """A group of order p^ngens realized from a power-commutator presentation."""

    def __init__(self, pres: PcPresentation, name: str | None = None):
        self.pres = pres
        self.name = name
        self.p = pres.p
        self.ngens = pres.ngens
        self.size = pres.p**pres.ngens
        self.identity = 0
        self._strides = tuple(pres.p**i for i in range(pres.ngens))
        self._comm = pres.commutator_map()
        self._tables = self._build_tables()
        self._inv: list[int] | None = None
        self._conj_perms: list[list[int]] | None = None
        self._orders: list[int] | None = None
        self._check_consistency()

    # -- element coding ----------------------------------------------------

    def idx(self, exps: Sequence[int]) -> int:
        return sum((e % self.p) * s for e, s in zip(exps, self._strides))

    def exps(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.ngens):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def generator(self, i: int) -> int:
        """Index of g_i, 1-based."""
        return self._strides[i - 1]

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(self._strides)

    # -- table bootstrap ----------------------------------------------------

    def _build_tables(self) -> list[list[int]]:
        p, n, size = self.p, self.ngens, self.size
        tables: list[list[int] | None] = [None] * n

        def fold(a: int, b: int) -> int:
            # a * b where b's nonzero digits all have built tables.
            j = 0
            while b:
                e = b % p
                if e:
                    t = tables[j]
                    for _ in range(e):
                        a = t[a]
                b //= p
                j += 1
            return a

        for i in reversed(range(n)):
            stride = p**i
            block = stride * p
            pow_word = self.idx(self.pres.powers[i])
            cbase = {}
            for j in range(i + 1, n):
                comm = self._comm.get((j, i))
                cbase[j] = p**j + (self.idx(comm) if comm else 0)
            conj_cache: dict[int, int] = {0: 0}

            def conj_tail(t: int) -> int:
                cached = conj_cache.get(t)
                if cached is not None:
                    return cached
                acc = 0
                tt = t // block
                for j in range(i + 1, n):
                    e = tt % p
                    tt //= p
                    for _ in range(e):
                        acc = fold(acc, cbase[j])
                conj_cache[t] = acc
                return acc

            table = [0] * size
            for x in range(size):
                low = x % stride
                e_i = (x // stride) % p
                conj = conj_tail(x - x % block)
                if e_i + 1 < p:
                    table[x] = low + (e_i + 1) * stride + conj
                else:
                    table[x] = low + fold(pow_word, conj)
            tables[i] = table
        return tables  # type: ignore[return-value]

    # -- core arithmetic ----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        p = self.p
        tables = self._tables
        j = 0
        while b:
            e = b % p
            if e:
                t = tables[j]
                for _ in range(e):
                    a = t[a]
            b //= p
            j += 1
        return a

    def _inv_table(self) -> list[int]:
        if self._inv is None:
            p = self.p
            inv = [0] * self.size
            gen_inv = {}
            for i in range(self.ngens):
                g = self._strides[i]
                acc = self._pow_raw(g, self.size - 1)
                gen_inv[i] = [0] * p
                y = 0
                for e in range(1, p):
                    y = self.mul(y, acc)
                    gen_inv[i][e] = y
            for x in range(1, self.size):
                j = 0
                xx = x
                while xx % p == 0:
                    xx //= p
                    j += 1
                e = xx % p
                rest = x - e * self._strides[j]
                inv[x] = self.mul(inv[rest], gen_inv[j][e])
            self._inv = inv
        return self._inv

    def inv(self, a: int) -> int:
        return self._inv_table()[a]

    def _pow_raw(self, a: int, k: int) -> int:
        result = 0
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a = self.inv(a)
            k = -k
        return self._pow_raw(a, k)

    def commutator(self, a: int, b: int) -> int:
        return self.mul(self.mul(self.mul(self.inv(a), self.inv(b)), a), b)

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def collect(self, word: Iterable[tuple[int, int]]) -> int:
        """Normal form of a word given as (generator 1-based, exponent) letters."""
        acc = 0
        for gen, e in word:
            if not 1 <= gen <= self.ngens:
                raise StructureError(f"generator {gen} out of range")
            acc = self.mul(acc, self.pow(self._strides[gen - 1], e))
        return acc

    def element_order(self, x: int) -> int:
        if self._orders is None:
            self._orders = [0] * self.size
            self._orders[0] = 1
        cached = self._orders[x]
        if cached:
            return cached
        chain = []
        y = x
        while self._orders[y] == 0:
            chain.append(y)
            y = self._pow_raw(y, self.p)
        base = self._orders[y]
        for z in reversed(chain):
            base *= self.p
            self._orders[z] = base
        return self._orders[x]

    # -- consistency ---------------------------------------------------------

    def _check_consistency(self) -> None:
        size, p, n = self.size, self.p, self.ngens
        full = set(range(size))
        for i, table in enumerate(self._tables):
            if set(table) != full:
                raise PresentationError(
                    f"right multiplication by g_{i+1} is not a permutation"
                )
        for i in range(n):
            g = self._strides[i]
            if self._pow_raw(g, p) != self.idx(self.pres.powers[i]):
                raise PresentationError(f"power relation for g_{i+1} fails")
        for (j, i), vec in self._comm.items():
            if self.commutator(self._strides[j], self._strides[i]) != self.idx(vec):
                raise PresentationError(f"commutator relation [g_{j+1},g_{i+1}] fails")
        gens = self._strides
        for a in gens:
            for b in gens:
                ab = self.mul(a, b)
                for c in gens:
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)):
                        raise PresentationError("associativity fails on a generator triple")
        rng = random.Random(_RNG_SEED)
        for _ in range(_ASSOC_SAMPLES):
            a = rng.randrange(size)
            b = rng.randrange(size)
            c = rng.randrange(size)
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise PresentationError("associativity fails on a random triple")

    # -- subgroups ------------------------------------------------------------

    def subgroup(self, gens: Sequence[int]) -> Subgroup:
        members = {0}
        queue = [0]
        gens = [g for g in gens if g]
        while queue:
            x = queue.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in members:
                    members.add(y)
                    queue.append(y)
        return Subgroup(self, gens or [0], members)

    def subgroup_from_members(self, members: Iterable[int]) -> Subgroup:
        mem = sorted(set(members))
        return Subgroup(self, [m for m in mem if m] or [0], mem)

    def normal_closure(self, gens: Sequence[int]) -> Subgroup:
        perms = self.conj_perms()
        sub = self.subgroup(gens)
        while True:
            extra = [perm[x] for x in sub.gens for perm in perms if perm[x] not in sub]
            if not extra:
                return sub
            sub = self.subgroup(list(sub.gens) + extra)

    def center(self) -> Subgroup:
        gens = self._strides
        members = [
            x
            for x in range(self.size)
            if all(self.mul(x, g) == self.mul(g, x) for g in gens)
        ]
        return self.subgroup_from_members(members)

    def derived_subgroup(self) -> Subgroup:
        comms = [
            self.commutator(self._strides[j], self._strides[i])
            for j in range(self.ngens)
            for i in range(j)
        ]
        return self.normal_closure([c for c in comms if c])

    def centralizer(self, s: Subgroup) -> Subgroup:
        gens = s.gens
        members = [
            x
            for x in range(self.size)
            if all(self.mul(x, g) == self.mul(g, x) for g in gens)
        ]
        return self.subgroup_from_members(members)

    def is_normal(self, s: Subgroup) -> bool:
        perms = self.conj_perms()
        return all(perm[x] in s for x in s.gens for perm in perms)

    def conj_perms(self) -> list[list[int]]:
        """Permutations x -> g^-1 x g for each pc generator g."""
        if self._conj_perms is None:
            perms = []
            for g in self._strides:
                gi = self.inv(g)
                perms.append([self.mul(self.mul(gi, x), g) for x in range(self.size)])
            self._conj_perms = perms
        return self._conj_perms

    # -- conjugacy ---------------------------------------------------------

    @cached_property
    def classes(self) -> ConjugacyClasses:
        perms = self.conj_perms()
        class_of = [-1] * self.size
        reps: list[int] = []
        sizes: list[int] = []
        for x in range(self.size):
            if class_of[x] >= 0:
                continue
            cls = len(reps)
            orbit = [x]
            class_of[x] = cls
            queue = [x]
            while queue:
                y = queue.pop()
                for perm in perms:
                    z = perm[y]
                    if class_of[z] < 0:
                        class_of[z] = cls
                        orbit.append(z)
                        queue.append(z)
            reps.append(x)
            sizes.append(len(orbit))
        if sum(sizes) != self.size:
            raise PresentationError("conjugacy class sizes do not sum to |G|")
        return ConjugacyClasses(tuple(reps), tuple(sizes), tuple(class_of))

    @cached_property
    def _cyclic_subgroup_data(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        p = self.p
        assigned: dict[int, tuple[int, ...]] = {}
        keys: set[tuple[int, ...]] = set()
        for x in range(self.size):
            if x in assigned:
                continue
            powers = [0]
            y = x
            while y != 0:
                powers.append(y)
                y = self.mul(y, x)
            m = len(powers)
            if x == 0:
                assigned[0] = (0,)
                keys.add((0,))
                continue
            for j in range(1, m + 1):
                d = gcd(j, m)
                key = tuple(sorted(powers[k] for k in range(0, m, d)))
                target = powers[j] if j < m else 0
                if target not in assigned:
                    assigned[target] = key
                    keys.add(key)
        perms = self.conj_perms()
        seen: set[tuple[int, ...]] = set()
        reps: list[tuple[int, ...]] = []
        for key in sorted(keys):
            if key in seen:
                continue
            reps.append(key)
            queue = [key]
            seen.add(key)
            while queue:
                k = queue.pop()
                for perm in perms:
                    nk = tuple(sorted(perm[m] for m in k))
                    if nk not in seen:
                        seen.add(nk)
                        queue.append(nk)
        return len(reps), tuple(reps)

    def cyclic_subgroup_classes(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """(number of conjugacy classes of cyclic subgroups, class representatives)."""
        return self._cyclic_subgroup_data

    # -- structure ------------------------------------------------------------

    @cached_property
    def frattini(self) -> Subgroup:
        gens = [
            self.commutator(self._strides[j], self._strides[i])
            for j in range(self.ngens)
            for i in range(j)
        ] + [self._pow_raw(g, self.p) for g in self._strides]
        return self.normal_closure([g for g in gens if g])

    def maximal_subgroups(self) -> list[Subgroup]:
        p = self.p
        phi = self.frattini
        basis: list[int] = []
        span = phi
        for g in self._strides:
            if g not in span:
                basis.append(g)
                span = self.subgroup(list(span.gens) + basis)
        r = _ilog(self.size // phi.order, p)
        if len(basis) != r:
            raise StructureError("Frattini quotient basis extraction failed")
        out = []
        for v in _normalized_vectors(r, p):
            pivot = next(t for t in range(r) if v[t])
            kernel_elements = []
            for t in range(r):
                if t == pivot:
                    continue
                w = [0] * r
                w[t] = 1
                w[pivot] = (-v[t]) % p
                elt = 0
                for pos, e in enumerate(w):
                    elt = self.mul(elt, self.pow(basis[pos], e))
                kernel_elements.append(elt)
            sub = self.subgroup(list(phi.gens) + kernel_elements)
            if sub.order != self.size // p:
                raise StructureError("maximal subgroup has wrong order")
            out.append(sub)
        out.sort(key=lambda s: s.members)
        return out

    def overgroups_of(self, n: Subgroup, order: int, abelian_only: bool = False) -> list[Subgroup]:
        """All subgroups of the given order containing n (optionally abelian)."""
        if n.order > order:
            return []
        if abelian_only and not n.is_abelian():
            return []
        if n.order == order:
            return [n]
        cent0 = frozenset(self.centralizer(n).members) if abelian_only else None
        level: dict[tuple[int, ...], tuple[Subgroup, frozenset[int] | None]] = {
            n.members: (n, cent0)
        }
        results: dict[tuple[int, ...], Subgroup] = {}
        while level:
            nxt: dict[tuple[int, ...], tuple[Subgroup, frozenset[int] | None]] = {}
            for sub, cent in level.values():
                candidates = cent if abelian_only else range(self.size)
                for x in candidates:
                    if x in sub:
                        continue
                    new = self.subgroup(list(sub.gens) + [x])
                    if new.order > order or new.members in results or new.members in nxt:
                        continue
                    new_cent = None
                    if abelian_only:
                        new_cent = frozenset(
                            y for y in cent if self.mul(y, x) == self.mul(x, y)
                        )
                        if not new._member_set <= new_cent:
                            continue
                    if new.order == order:
                        results[new.members] = new
                    else:
                        nxt[new.members] = (new, new_cent)
            level = nxt
        return [results[k] for k in sorted(results)]

    def char_degree_counts(self) -> dict[int, int]:
        """Multiset of complex irreducible character degrees {degree: count}."""
        p = self.p
        derived = self.derived_subgroup()
        a = self.size // derived.order
        if derived.order == 1:
            return {1: self.size}
        k = self.classes.count
        # a*1 + b*p^2 + c*p^4 = p^5 and a + b + c = k.
        numer = self.size - a - (k - a) * p * p
        denom = p**4 - p * p
        if numer % denom:
            raise StructureError("no integer character-degree solution")
        c = numer // denom
        b = k - a - c
        if b < 0 or c < 0:
            raise StructureError("negative character-degree multiplicity")
        out = {1: a}
        if b:
            out[p] = b
        if c:
            out[p * p] = c
        return out

    # -- quotients --------------------------------------------------------------

    def quotient_data(self, n: Subgroup) -> QuotientData:
        if not self.is_normal(n):
            raise StructureError("quotient requires a normal subgroup")
        p = self.p
        current = set(n.members)
        chain_gens = list(n.gens)
        depth_first: list[int] = []
        while len(current) < self.size:
            z = self._central_mod(current)
            depth_first.append(z)
            sub = self.subgroup(chain_gens + [z])
            chain_gens = list(sub.gens)
            current = set(sub.members)
        us = list(reversed(depth_first))
        m = len(us)
        qsize = p**m
        # Enumerate quotient normal forms and label cosets.
        section = [0] * qsize
        proj = [-1] * self.size
        for q in range(qsize):
            qq = q
            elt = 0
            for i in range(m):
                e = qq % p
                qq //= p
                elt = self.mul(elt, self.pow(us[i], e))
            section[q] = elt
            for nm in n.members:
                y = self.mul(elt, nm)
                if proj[y] >= 0:
                    raise PresentationError("quotient coset labeling collided")
                proj[y] = q
        if any(v < 0 for v in proj):
            raise PresentationError("quotient coset labeling incomplete")
        powers: dict[int, dict[int, int]] = {}
        comms: dict[tuple[int, int], dict[int, int]] = {}
        qstr = [p**i for i in range(m)]

        def qexps(x: int) -> dict[int, int]:
            q = proj[x]
            out = {}
            for i in range(m):
                e = q % p
                q //= p
                if e:
                    out[i + 1] = e
            return out

        for i in range(m):
            vec = qexps(self._pow_raw(us[i], p))
            if any(g <= i + 1 for g in vec):
                raise PresentationError("quotient power relation not in later generators")
            if vec:
                powers[i + 1] = vec
        for j in range(m):
            for i in range(j):
                vec = qexps(self.commutator(us[j], us[i]))
                if any(g <= j + 1 for g in vec):
                    raise PresentationError("quotient commutator not in later generators")
                if vec:
                    comms[(j + 1, i + 1)] = vec
        pres = PcPresentation.build(p, m, powers, comms)
        qgroup = PcGroup(pres, name=(self.name or "G") + "/N")
        rng = random.Random(_RNG_SEED + 1)
        for _ in range(_ASSOC_SAMPLES):
            a = rng.randrange(self.size)
            b = rng.randrange(self.size)
            if qgroup.mul(proj[a], proj[b]) != proj[self.mul(a, b)]:
                raise PresentationError("quotient projection is not a homomorphism")
        return QuotientData(qgroup, tuple(proj), tuple(section))

    def _central_mod(self, current: set[int]) -> int:
        for x in range(self.size):
            if x in current:
                continue
            if self._pow_raw(x, self.p) not in current:
                continue
            if all(self.commutator(x, g) in current for g in self._strides):
                return x
        raise PresentationError("no central element found modulo the chain")


def _normalized_vectors(r: int, p: int) -> list[tuple[int, ...]]:
    """Nonzero vectors of F_p^r with first nonzero coordinate 1 (one per line)."""
    out = []
    for pivot in range(r):
        tail_len = r - pivot - 1
        for code in range(p**tail_len):
            vec = [0] * r
            vec[pivot] = 1
            cc = code
            for t in range(pivot + 1, r):
                vec[t] = cc % p
                cc //= p
            out.append(tuple(vec))
    return out
