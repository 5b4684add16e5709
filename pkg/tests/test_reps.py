"""Unit tests for companion matrices, monomial blocks, and built reps."""

import pytest

from p5reps.catalog import instantiate
from p5reps.pairs import PsiChar, closed_form_pairs, make_pair
from p5reps.reps import (
    MonomialMatrix,
    RepError,
    all_rational_irreps,
    build_rep,
    companion_power,
    companion_trace,
    cyclic_transversal,
    cyclotomic_companion_rows,
    integrality_check,
    verify_homomorphism_random,
    verify_rep,
)


class TestCompanion:
    def test_c3(self):
        assert companion_power(3, 1) == [[0, 1], [-1, -1]]
        assert companion_power(3, 3) == [[1, 0], [0, 1]]

    def test_c9_bottom_row(self):
        rows = cyclotomic_companion_rows(9)
        assert rows[5] == (0, 0, 0, 0, 0, 1)
        # x^6 = -1 - x^3 from the cyclotomic polynomial of order 9.
        assert rows[6] == (-1, 0, 0, -1, 0, 0)

    def test_c9_order(self):
        n = 6
        ident = [[int(i == j) for j in range(n)] for i in range(n)]
        assert companion_power(9, 9) == ident
        assert companion_power(9, 3) != ident

    def test_trace_is_ramanujan_sum(self):
        assert companion_trace(9, 0) == 6
        assert companion_trace(9, 3) == -3
        assert companion_trace(9, 1) == 0
        assert companion_trace(1, 0) == 1


class TestMonomialMatrix:
    def test_composition_matches_dense(self):
        a = MonomialMatrix(3, (1, 0, 2), (1, 0, 2))
        b = MonomialMatrix(3, (2, 1, 0), (0, 1, 1))
        def matmul(x, y):
            n = len(x)
            return [
                [sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
        assert (a * b).dense() == matmul(a.dense(), b.dense())

    def test_power_and_identity(self):
        a = MonomialMatrix(3, (1, 2, 0), (0, 0, 1))
        assert (a ** 9).is_identity()
        assert not (a ** 3).is_identity()

    def test_trace_counts_fixed_blocks(self):
        a = MonomialMatrix(3, (0, 2, 1), (1, 0, 0))
        # Fixed block 0 carries exponent 1: trace = c_3(1) = -1.
        assert a.trace() == -1


class TestBuildRep:
    def test_all_reps_verified_sample(self):
        for name in ("Phi_2(311)a", "Phi_5(1^5)", "Phi_7(1^5)"):
            cg = instantiate(name, 3)
            pairs = closed_form_pairs(cg)
            reps = all_rational_irreps(cg.group, pairs, verify=True)
            assert len(reps) == len(pairs)
            assert all(integrality_check(r) for r in reps)

    def test_random_word_homomorphism(self):
        cg = instantiate("Phi_8(32)", 3)
        pairs = [pr for pr in closed_form_pairs(cg) if pr.degree == 9]
        rep = build_rep(pairs[0])
        verify_homomorphism_random(rep, trials=200)

    def test_degree_formula(self):
        cg = instantiate("Phi_2(41)", 3)
        for pr in closed_form_pairs(cg):
            rep = build_rep(pr)
            assert rep.degree == pr.degree * max(1, pr.rational_degree // pr.degree)
            assert rep.degree == pr.rational_degree

    def test_cyclic_transversal_rejects_bad_generator(self):
        cg = instantiate("Phi_8(32)", 3)
        g = cg.group
        h = g.subgroup([g.generators[4], g.generators[0]])
        with pytest.raises(RepError):
            # g_5 lies inside H, so its powers cannot cover the cosets.
            cyclic_transversal(g, h, g.generators[4])


class TestWorkedExamples:
    def test_phi3_example_block_structure(self):
        cg = instantiate("Phi_3(1^5)", 5)
        g, c = cg.group, cg.centralizer
        psi = PsiChar(c, 5, {x: g.exps(x)[2] % 5 for x in c.members})
        rep = build_rep(make_pair(g, c, psi))
        assert rep.degree == 20
        alpha, a1, a2, a3, a4 = rep.gen_images
        assert alpha.perm == (1, 2, 3, 4, 0) and set(alpha.exps) == {0}
        assert a1.perm == (0, 1, 2, 3, 4) and a1.exps == (0, 1, 2, 3, 4)
        assert a2.perm == (0, 1, 2, 3, 4) and set(a2.exps) == {1}
        assert a3.is_identity() and a4.is_identity()
        verify_rep(rep)

    def test_phi8_example_block_structure(self):
        cg = instantiate("Phi_8(32)", 3)
        g = cg.group
        h = g.subgroup([g.generators[4], g.generators[0]])
        psi = PsiChar(h, 3, {x: g.exps(x)[4] % 3 for x in h.members})
        pair = make_pair(g, h, psi)
        rep = build_rep(pair, cyclic_transversal(g, h, g.generators[2]))
        assert rep.degree == 18
        a1 = rep.gen_images[2]
        assert a1.perm == (1, 2, 3, 4, 5, 6, 7, 8, 0)
        assert a1.exps == (0, 0, 0, 0, 0, 0, 0, 0, 1)
        verify_rep(rep)
        # Faithful: no non-identity element maps to the identity matrix.
        assert all(not rep.image(x).is_identity() for x in range(1, g.size))
