"""Explicit irreducible rational matrix representations from required pairs.

A required pair (H, psi) with n = order(psi) yields a rational irreducible of
degree [G:H] * phi(n): psi is modeled on H by powers of the companion matrix C
of the n-th cyclotomic polynomial, and the block-monomial induction to G sends
g to the q x q block matrix (q = [G:H]) with block (i, j) = C^e when
t_i^{-1} g t_j lies in H with psi-exponent e, and the zero block otherwise.

Images are stored in compressed block-monomial form (a block permutation plus
one companion exponent per block); dense integer matrices are materialized on
demand.  All verification (defining relations, random products, traces against
the rational character) runs exactly on the compressed form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .characters import euler_phi, left_transversal, ramanujan_sum
from .pcgroup import PcGroup, StructureError, Subgroup
from .pairs import RequiredPair, check_cover


class RepError(StructureError):
    """A representation failed verification."""


# ---------------------------------------------------------------------------
# companion-matrix arithmetic for cyclotomic polynomials of prime-power order


@lru_cache(maxsize=None)
def cyclotomic_companion_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row j of C^e is row (j, e) of this table: x^(j+e) reduced mod Phi_n.

    Returns the coordinates of x^j modulo the n-th cyclotomic polynomial for
    every j in range(n), as integer vectors of length phi(n). Requires n an
    odd prime power (or 1).
    """
    if n == 1:
        return ((),)
    m = euler_phi(n)
    t = n - m  # n = p^k, m = (p-1)p^(k-1), so t = p^(k-1)
    p = n // t
    # x^m = -(1 + x^t + ... + x^((p-2)t))
    head = [0] * m
    for i in range(p - 1):
        head[i * t] = -1
    rows: list[tuple[int, ...]] = []
    vec = [0] * m
    vec[0] = 1
    for _ in range(n):
        rows.append(tuple(vec))
        carry = vec[m - 1]
        vec = [0] + vec[:-1]
        if carry:
            for i in range(m):
                vec[i] += carry * head[i]
    return tuple(rows)


def companion_power(n: int, e: int) -> list[list[int]]:
    """Dense integer matrix C^e, C the companion matrix of Phi_n (C^n = I)."""
    rows = cyclotomic_companion_rows(n)
    if n == 1:
        return [[1]]
    m = euler_phi(n)
    return [list(rows[(j + e) % n]) for j in range(m)]


def companion_trace(n: int, e: int) -> int:
    """Trace of C^e: the trace of zeta_n^e over Q, a Ramanujan sum."""
    if n == 1:
        return 1
    return ramanujan_sum(n, e % n)


# ---------------------------------------------------------------------------
# block-monomial matrices


@dataclass(frozen=True)
class MonomialMatrix:
    """A q x q block matrix whose block (perm[j], j) is C^exps[j], rest zero.

    C is the companion matrix of Phi_n; the full dimension is q * phi(n).
    """

    n: int
    perm: tuple[int, ...]
    exps: tuple[int, ...]

    @property
    def blocks(self) -> int:
        return len(self.perm)

    @property
    def dimension(self) -> int:
        return len(self.perm) * max(euler_phi(self.n), 1)

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if self.n != other.n or self.blocks != other.blocks:
            raise RepError("monomial matrix shape mismatch")
        n = self.n
        perm = tuple(self.perm[j] for j in other.perm)
        exps = tuple(
            (self.exps[other.perm[j]] + other.exps[j]) % n
            for j in range(len(other.perm))
        )
        return MonomialMatrix(n, perm, exps)

    def __pow__(self, k: int) -> "MonomialMatrix":
        result = MonomialMatrix.identity(self.n, self.blocks)
        base = self
        k = int(k)
        if k < 0:
            raise RepError("negative monomial powers are not needed")
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @staticmethod
    def identity(n: int, blocks: int) -> "MonomialMatrix":
        return MonomialMatrix(n, tuple(range(blocks)), (0,) * blocks)

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.perm)) and not any(self.exps)

    def trace(self) -> int:
        return sum(
            companion_trace(self.n, self.exps[j])
            for j, i in enumerate(self.perm)
            if i == j
        )

    def dense(self) -> list[list[int]]:
        m = max(euler_phi(self.n), 1)
        q = self.blocks
        out = [[0] * (q * m) for _ in range(q * m)]
        for j, i in enumerate(self.perm):
            block = companion_power(self.n, self.exps[j])
            for r in range(m):
                row = out[i * m + r]
                row[j * m : (j + 1) * m] = block[r]
        return out

    def block_pattern(self) -> list[list[int | None]]:
        """q x q array: None for a zero block, else the companion exponent."""
        q = self.blocks
        out: list[list[int | None]] = [[None] * q for _ in range(q)]
        for j, i in enumerate(self.perm):
            out[i][j] = self.exps[j]
        return out


# ---------------------------------------------------------------------------
# the representation object


@dataclass(frozen=True)
class RationalRep:
    """An irreducible rational matrix representation in block-monomial form."""

    group: PcGroup
    pair: RequiredPair
    gen_images: tuple[MonomialMatrix, ...]

    @property
    def d(self) -> int:
        return self.pair.d

    @property
    def degree(self) -> int:
        return self.pair.degree * max(euler_phi(self.pair.d), 1)

    def image(self, x: int) -> MonomialMatrix:
        """Image of a group element, composed along its normal form."""
        g = self.group
        result = MonomialMatrix.identity(self.pair.d, self.pair.degree)
        for i, e in enumerate(g.exps(x)):
            if e:
                result = result * self.gen_images[i] ** e
        return result

    def matrix(self, x: int) -> list[list[int]]:
        return self.image(x).dense()

    def character_value(self, x: int) -> int:
        return self.image(x).trace()

    def character_values(self) -> tuple[int, ...]:
        return tuple(self.character_value(r) for r in self.group.classes.reps)


def cyclic_transversal(group: PcGroup, h: Subgroup, gen: int) -> tuple[int, ...]:
    """The transversal (1, y, y^2, ..., y^(q-1)) when the powers of y cover G/H.

    Orders the cosets along the orbit of left multiplication by y, which is
    the ordering used for the displayed block-cyclic images.
    """
    q = group.size // h.order
    reps = []
    seen = set()
    y = group.identity
    for _ in range(q):
        coset = frozenset(group.mul(y, m) for m in h.members)
        if coset in seen:
            raise RepError("generator powers do not form a transversal")
        seen.add(coset)
        reps.append(y)
        y = group.mul(gen, y)
    return tuple(reps)


def build_rep(pair: RequiredPair, transversal: tuple[int, ...] | None = None) -> RationalRep:
    """Companion-matrix model of psi induced to G in block-monomial form."""
    group = pair.group
    h = pair.subgroup
    n = pair.d
    if n != pair.psi.order:
        raise RepError("pair field order does not match psi order")
    if transversal is None:
        transversal = left_transversal(group, h)
    coset_of = {}
    for i, t in enumerate(transversal):
        for m in h.members:
            coset_of[group.mul(t, m)] = i
    exps = pair.psi.exps
    images = []
    for gen in group.generators:
        perm = []
        gexps = []
        for j, tj in enumerate(transversal):
            y = group.mul(gen, tj)
            i = coset_of[y]
            perm.append(i)
            gexps.append(exps[group.mul(group.inv(transversal[i]), y)])
        images.append(MonomialMatrix(n, tuple(perm), tuple(gexps)))
    return RationalRep(group, pair, tuple(images))


def companion_rep(pair: RequiredPair) -> tuple[int, list[list[int]]]:
    """The degree-phi(n) model of psi on H itself: (n, dense companion C).

    psi(x) = C^e where e is the psi-exponent of x; C generates a cyclic
    matrix group of exact order n.
    """
    return pair.psi.order, companion_power(pair.psi.order, 1)


def induce_rep(pair: RequiredPair) -> RationalRep:
    """Alias for the induction step; identical to build_rep."""
    return build_rep(pair)


# ---------------------------------------------------------------------------
# verification


def verify_relations(rep: RationalRep) -> None:
    """Check every defining power and commutator relation exactly."""
    group = rep.group
    pres = group.pres
    p = group.p
    imgs = rep.gen_images

    def word_image(vec: tuple[int, ...]) -> MonomialMatrix:
        result = MonomialMatrix.identity(rep.pair.d, rep.pair.degree)
        for i, e in enumerate(vec):
            if e:
                result = result * imgs[i] ** e
        return result

    for i in range(pres.ngens):
        lhs = imgs[i] ** p
        rhs = word_image(pres.powers[i])
        if lhs != rhs:
            raise RepError(f"power relation for generator {i + 1} fails")
    cmap = pres.commutator_map()
    for j in range(pres.ngens):
        for i in range(j):
            aj, ai = imgs[j], imgs[i]
            # g_j * g_i = g_i * g_j * [g_j, g_i]
            lhs = aj * ai
            rhs = ai * aj * word_image(cmap.get((j, i), (0,) * pres.ngens))
            if lhs != rhs:
                raise RepError(f"commutator relation [{j + 1},{i + 1}] fails")


def verify_homomorphism_random(rep: RationalRep, trials: int = 1000, seed: int = 246813579) -> None:
    """rep(x*y) = rep(x)*rep(y) on seeded random element pairs."""
    rng = random.Random(seed)
    g = rep.group
    for _ in range(trials):
        x = rng.randrange(g.size)
        y = rng.randrange(g.size)
        if rep.image(g.mul(x, y)) != rep.image(x) * rep.image(y):
            raise RepError(f"homomorphism fails at ({x}, {y})")


def verify_affords(rep: RationalRep) -> None:
    """Trace on every class equals the rational character of the pair's orbit."""
    got = rep.character_values()
    want = rep.pair.rational_values
    if got != want:
        for cls, (a, b) in enumerate(zip(got, want)):
            if a != b:
                raise RepError(
                    f"trace mismatch on class {cls}: rep gives {a}, character gives {b}"
                )
        raise RepError("trace length mismatch")


def integrality_check(rep: RationalRep, sample_identity: bool = True) -> bool:
    """Whether all generator images have integer entries (always true here).

    The images are block matrices of companion powers, which are integral by
    construction; this scans the dense matrices to confirm.
    """
    for img in rep.gen_images:
        for row in img.dense():
            if any(not isinstance(v, int) for v in row):
                return False
    return True


def verify_rep(rep: RationalRep, random_trials: int = 0) -> None:
    verify_relations(rep)
    verify_affords(rep)
    if rep.degree != rep.pair.rational_values[0]:
        raise RepError("degree does not match the rational character degree")
    if random_trials:
        verify_homomorphism_random(rep, trials=random_trials)


def all_rational_irreps(
    group: PcGroup, pairs: list[RequiredPair], verify: bool = True
) -> list[RationalRep]:
    """One verified representation per required pair, with completeness check."""
    check_cover(group, pairs)
    reps = []
    for pair in pairs:
        rep = build_rep(pair)
        if verify:
            verify_rep(rep)
        reps.append(rep)
    if len({r.pair.key for r in reps}) != len(reps):
        raise RepError("emitted representations are not pairwise inequivalent")
    return reps
