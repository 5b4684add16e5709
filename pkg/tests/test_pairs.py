"""Unit tests for required-pair construction (closed forms and search)."""

import pytest

from p5reps.catalog import instantiate
from p5reps.characters import euler_phi
from p5reps.pairs import (
    DispatchError,
    PsiChar,
    RequiredPair,
    abelian_index_p_pairs,
    camina_pairs,
    check_cover,
    closed_form_pairs,
    generic_search,
    linear_pairs,
    make_pair,
    quotient_lift_pairs,
    vz_pairs,
)


def orbit_keys(pairs: list[RequiredPair]) -> set:
    return {pr.key for pr in pairs}


class TestLinearPairs:
    def test_abelian_group_all_linear(self):
        cg = instantiate("Phi_1(32)", 3)  # C_27 x C_9
        pairs = linear_pairs(cg.group)
        check_cover(cg.group, pairs)
        assert all(pr.degree == 1 for pr in pairs)
        # d-multiset: one orbit per cyclic subgroup of order d.
        ds = sorted(pr.d for pr in pairs)
        assert ds == [1] + [3] * 4 + [9] * 12 + [27] * 9

    def test_trivial_pair_values(self):
        cg = instantiate("Phi_2(1^5)", 3)
        trivial = linear_pairs(cg.group)[0]
        assert trivial.d == 1
        assert set(trivial.rational_values) == {1}


class TestClosedForms:
    @pytest.mark.parametrize(
        "name", ["Phi_2(41)", "Phi_2(32)a_2", "Phi_5(1^5)", "Phi_4(1^5)",
                 "Phi_7(2111)a", "Phi_8(32)"]
    )
    def test_matches_generic_search_p3(self, name):
        cg = instantiate(name, 3)
        closed = closed_form_pairs(cg)
        generic = generic_search(cg.group)
        assert orbit_keys(closed) == orbit_keys(generic)

    def test_counting_identity(self):
        cg = instantiate("Phi_8(32)", 3)
        pairs = closed_form_pairs(cg)
        assert len(pairs) == cg.group.cyclic_subgroup_classes()[0]
        assert sum(pr.degree * pr.rational_degree for pr in pairs) == cg.group.size

    def test_faithful_orbit_phi2_41(self):
        # Unique faithful orbit: degree p, field Q(zeta_{p^3}).
        cg = instantiate("Phi_2(41)", 3)
        tops = [pr for pr in closed_form_pairs(cg) if pr.d == 27 and pr.degree == 3]
        assert len(tops) == 1
        assert tops[0].rational_degree == 3 * euler_phi(27)

    def test_vz_dispatch_guard(self):
        cg = instantiate("Phi_7(1^5)", 3)
        with pytest.raises(DispatchError):
            vz_pairs(cg)

    def test_camina_families(self):
        cg = instantiate("Phi_8(32)", 3)
        tops = camina_pairs(cg)
        assert any(pr.degree == 9 for pr in tops)

    def test_abelian_index_p_warns_at_p3(self):
        cg = instantiate("Phi_9(2111)b_1", 5)
        pairs = abelian_index_p_pairs(cg)
        assert all(pr.degree == 5 for pr in pairs)


class TestQuotientLift:
    def test_lift_over_central_line(self):
        cg = instantiate("Phi_4(1^5)", 3)
        z = cg.center
        k = cg.group.subgroup([z.abelian_basis()[0][0]])
        pairs = quotient_lift_pairs(cg.group, k)
        # Every lifted pair has K in its kernel, so d divides exp(G/K).
        assert pairs and all(pr.d in (1, 3, 9) for pr in pairs)


class TestPairValidation:
    def test_make_pair_accepts_known_good(self):
        cg = instantiate("Phi_3(1^5)", 5)
        g, c = cg.group, cg.centralizer
        psi = PsiChar(c, 5, {x: g.exps(x)[2] % 5 for x in c.members})
        pr = make_pair(g, c, psi)
        assert (pr.degree, pr.d) == (5, 5)

    def test_index_equals_degree(self):
        cg = instantiate("Phi_5(2111)", 3)
        for pr in closed_form_pairs(cg):
            assert cg.group.size // pr.subgroup.order == pr.degree
