"""Unit tests for linear characters, induction, and class-function tools."""

from fractions import Fraction

from p5reps.catalog import instantiate
from p5reps.characters import (
    LinearCharacter,
    euler_phi,
    induce,
    inner_product,
    is_camina_pair,
    is_irreducible,
    is_vz_group,
    left_transversal,
    linear_orbits,
    ramanujan_sum,
)
from p5reps.pcgroup import PcGroup, PcPresentation


def heisenberg(p: int = 3) -> PcGroup:
    return PcGroup(PcPresentation.build(p, 3, {}, {(2, 1): {3: 1}}))


class TestNumberTheory:
    def test_euler_phi(self):
        assert [euler_phi(n) for n in (1, 3, 9, 27, 125)] == [1, 2, 6, 18, 100]

    def test_ramanujan_sum(self):
        # c_n(e) = phi(n) when n | e, and -p^(k-1) one level down.
        assert ramanujan_sum(9, 0) == 6
        assert ramanujan_sum(9, 3) == -3
        assert ramanujan_sum(9, 1) == 0
        assert ramanujan_sum(3, 1) == -1


class TestLinearCharacters:
    def test_character_group_size(self):
        g = heisenberg()
        h = g.subgroup([g.generators[1], g.generators[2]])
        assert len(LinearCharacter.all_of(h)) == h.order

    def test_orbit_partition_of_dual(self):
        g = heisenberg()
        z = g.center()
        orbits = linear_orbits(z)
        # C_3 dual: trivial character plus one Galois orbit of size 2.
        assert [(d, size) for _, d, size in orbits] == [(1, 1), (3, 2)]

    def test_kernel_and_order(self):
        g = heisenberg()
        z = g.center()
        psi = linear_orbits(z)[1][0]
        assert psi.order == 3
        assert psi.kernel().order == 1


class TestInduction:
    def test_transversal_covers(self):
        g = heisenberg()
        h = g.subgroup([g.generators[0], g.generators[2]])
        t = left_transversal(g, h)
        assert len(t) == g.size // h.order
        seen = {g.mul(ti, m) for ti in t for m in h.members}
        assert len(seen) == g.size

    def test_induced_character_is_irreducible(self):
        # Heisenberg: inducing a center-faithful character of a maximal
        # abelian subgroup gives the degree-p irreducible.
        g = heisenberg()
        h = g.subgroup([g.generators[1], g.generators[2]])
        psi = next(
            c for c in LinearCharacter.all_of(h)
            if c.order == 3 and any(c.value_exponent(z) for z in g.center().members)
        )
        chi = induce(psi, g)
        assert chi.values[0].rational_value() == 3
        assert inner_product(chi, chi) == Fraction(1)
        assert is_irreducible(chi)


class TestPredicates:
    def test_heisenberg_is_vz_and_camina(self):
        g = heisenberg()
        assert is_vz_group(g)
        assert is_camina_pair(g, g.center())

    def test_camina_rejects_trivial_subgroups(self):
        g = heisenberg()
        whole = g.subgroup(list(g.generators))
        assert not is_camina_pair(g, whole)

    def test_phi7_center_camina_but_not_vz(self):
        cg = instantiate("Phi_7(1^5)", 3)
        assert is_camina_pair(cg.group, cg.center)
        assert not is_vz_group(cg.group)
