"""Unit tests for pc-presentation arithmetic and structure algorithms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p5reps.pcgroup import (
    CapacityError,
    PcGroup,
    PcPresentation,
    PresentationError,
)


def heisenberg(p: int = 3) -> PcGroup:
    # Extraspecial group of order p^3 and exponent p.
    return PcGroup(PcPresentation.build(p, 3, {}, {(2, 1): {3: 1}}))


def cyclic(p: int, n: int) -> PcGroup:
    powers = {i: {i + 1: 1} for i in range(1, n)}
    return PcGroup(PcPresentation.build(p, n, powers, {}))


class TestBuild:
    def test_rejects_even_prime(self):
        with pytest.raises(PresentationError):
            PcPresentation.build(2, 2)

    def test_rejects_unsupported_prime(self):
        with pytest.raises(CapacityError):
            PcPresentation.build(11, 2)

    def test_rejects_bad_rhs_direction(self):
        with pytest.raises(PresentationError):
            PcPresentation.build(3, 2, {2: {1: 1}}, {})

    def test_order(self):
        assert heisenberg().size == 27
        assert cyclic(3, 5).size == 243


class TestArithmetic:
    def test_identity_and_inverse(self):
        g = heisenberg()
        for x in range(g.size):
            assert g.mul(x, g.identity) == x
            assert g.mul(x, g.inv(x)) == g.identity

    def test_commutator_convention(self):
        # [x, y] = x^-1 y^-1 x y, so y^-1 x y = x * [x, y].
        g = heisenberg()
        a, b = g.generators[0], g.generators[1]
        assert g.conj(a, b) == g.mul(a, g.commutator(a, b))

    def test_cyclic_powers(self):
        g = cyclic(3, 5)
        a = g.generators[0]
        assert g.element_order(a) == 3**5
        assert g.pow(a, 3**5) == g.identity
        assert g.pow(a, 3**4) != g.identity

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_associativity_random(self, data):
        g = heisenberg()
        x = data.draw(st.integers(0, g.size - 1))
        y = data.draw(st.integers(0, g.size - 1))
        z = data.draw(st.integers(0, g.size - 1))
        assert g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))


class TestStructure:
    def test_heisenberg_center_and_derived(self):
        g = heisenberg()
        assert g.center().order == 3
        assert g.derived_subgroup().order == 3
        assert g.center() == g.derived_subgroup()

    def test_class_count_heisenberg(self):
        # p^2 central classes of size 1 plus p^2 - 1 classes of size p.
        g = heisenberg()
        assert g.classes.count == 9 + 2
        assert sum(g.classes.sizes) == g.size

    def test_abelian_invariants(self):
        g = cyclic(3, 3)
        whole = g.subgroup(list(g.generators))
        assert whole.abelian_invariants() == (27,)

    def test_quotient_by_center(self):
        g = heisenberg()
        qd = g.quotient_data(g.center())
        assert qd.group.size == 9
        assert qd.group.derived_subgroup().order == 1

    def test_maximal_subgroups_count(self):
        # Heisenberg has Frattini quotient C_p x C_p: p + 1 maximal subgroups.
        g = heisenberg()
        assert len(g.maximal_subgroups()) == 4

    def test_cyclic_subgroup_classes_cyclic_group(self):
        g = cyclic(3, 5)
        count, _ = g.cyclic_subgroup_classes()
        assert count == 6  # one per divisor of 3^5
