"""Unit tests for the built-in catalog and the family classifier."""

import pytest

from p5reps.catalog import (
    CatalogError,
    classify,
    get_entry,
    instantiate,
    names_for_prime,
    smallest_nonresidue,
    smallest_primitive_root,
)


class TestNames:
    def test_known_entry_counts(self):
        assert len(names_for_prime(3)) == 31
        # The p >= 5 families add their entries.
        assert set(names_for_prime(3)) < set(names_for_prime(5))

    def test_unknown_name(self):
        with pytest.raises(CatalogError):
            get_entry("Phi_99(1)")

    def test_inadmissible_prime(self):
        with pytest.raises(CatalogError):
            instantiate("Phi_3(311)b_1", 3)


class TestParameters:
    def test_smallest_nonresidue(self):
        assert smallest_nonresidue(3) == 2
        assert smallest_nonresidue(5) == 2
        assert smallest_nonresidue(7) == 3

    def test_smallest_primitive_root(self):
        assert smallest_primitive_root(3) == 2
        assert smallest_primitive_root(5) == 2
        assert smallest_primitive_root(7) == 3


class TestInstantiation:
    @pytest.mark.parametrize("name", names_for_prime(3))
    def test_p3_instantiation_and_classification(self, name):
        cg = instantiate(name, 3)
        assert cg.group.size == 3**5
        assert cg.center == cg.group.center()
        assert cg.derived == cg.group.derived_subgroup()
        assert classify(cg.group) == cg.family

    def test_declared_centralizer(self):
        cg = instantiate("Phi_3(1^5)", 5)
        assert cg.centralizer is not None
        assert cg.centralizer == cg.group.centralizer(cg.derived)

    def test_phi2_41_center(self):
        cg = instantiate("Phi_2(41)", 3)
        assert cg.center.order == 27

    def test_nu_variants_not_isomorphic_fingerprint(self):
        # r = 1 and r = nu members must differ somewhere; the catalog keeps
        # both, so at least their presentations must not collide.
        a = instantiate("Phi_7(2111)b_1", 3)
        b = instantiate("Phi_7(2111)b_nu", 3)
        assert a.group.pres != b.group.pres
