"""Operator symbols, canonical ordering, and the model generators."""

from fractions import Fraction

import pytest

from diracsym import ExactMatrix, ExactScalar, OperatorSymbol, doubled, generator, model_for
from diracsym.exact import I_UNIT
from diracsym.models import (
    dispersion_scalar,
    hamiltonian,
    p_monomial,
    square_of_hamiltonian,
    t_monomial,
    unit_monomial,
    x_monomial,
)


def _sym(model, mono, mat=None):
    s = OperatorSymbol(model.d, model.dim)
    s._add_term(mono, mat if mat is not None else ExactMatrix.identity(model.dim))
    return s


class TestCanonicalOrdering:
    def test_p_times_x_reorders_with_commutator(self):
        m = model_for(2)
        x1 = _sym(m, x_monomial(2, 1))
        p1 = _sym(m, p_monomial(2, 1))
        lhs = p1 * x1
        rhs = x1 * p1 - _sym(m, unit_monomial(2)).scale(I_UNIT)
        assert (lhs - rhs).is_zero()

    def test_p_squared_x_squared_expansion(self):
        # p^2 x^2 = x^2 p^2 - 4i x p - 2
        m = model_for(2)
        x1 = _sym(m, x_monomial(2, 1))
        p1 = _sym(m, p_monomial(2, 1))
        lhs = (p1 * p1) * (x1 * x1)
        rhs = (
            (x1 * x1) * (p1 * p1)
            - (x1 * p1).scale(ExactScalar(0, 4))
            - _sym(m, unit_monomial(2)).scale(ExactScalar(2))
        )
        assert (lhs - rhs).is_zero()

    def test_different_indices_commute(self):
        m = model_for(4)
        x1 = _sym(m, x_monomial(4, 1))
        p2 = _sym(m, p_monomial(4, 2))
        assert x1.commutator(p2).is_zero()

    def test_symbol_product_associative(self):
        m = model_for(2)
        a = _sym(m, x_monomial(2, 1)) + _sym(m, p_monomial(2, 2))
        b = _sym(m, p_monomial(2, 1)).scale(ExactScalar(0, 1))
        c = _sym(m, x_monomial(2, 1)) * _sym(m, p_monomial(2, 1))
        assert ((a * b) * c - a * (b * c)).is_zero()


class TestHamiltonianAndGenerators:
    def test_hamiltonian_matrix_structure(self):
        m = model_for(4, mass=Fraction(3))
        p = [Fraction(1), Fraction(0), Fraction(-2), Fraction(5)]
        h = m.hamiltonian_matrix(p)
        want = ExactMatrix.zero(m.dim)
        for pk, ak in zip(p, m.alphas):
            want = want + ak.scale(ExactScalar(pk))
        want = want + m.beta.scale(ExactScalar(3))
        assert h == want

    def test_negative_branch_flips_mass_term(self):
        plus = model_for(4, mass=2, branch=1)
        minus = model_for(4, mass=2, branch=-1)
        zero = [Fraction(0)] * 4
        assert plus.hamiltonian_matrix(zero) == -minus.hamiltonian_matrix(zero)

    def test_square_of_hamiltonian_is_scalar_symbol(self):
        for d in (2, 4):
            m = model_for(d, mass=Fraction(5, 3))
            sq = square_of_hamiltonian(m)
            ident = ExactMatrix.identity(m.dim)
            want = OperatorSymbol(d, m.dim)
            want._add_term(
                unit_monomial(d), ident.scale(ExactScalar(Fraction(25, 9)))
            )
            for k in range(1, d + 1):
                mono = p_monomial(d, k)
                want._add_term((mono[0], mono[1], tuple(2 * e for e in mono[2])), ident)
            assert (sq - want).is_zero()
            disp = dispersion_scalar(m)
            assert disp is not None
            assert sorted(disp.terms) == sorted(want.terms)

    def test_boost_matches_symmetrized_oracle(self):
        # J0k must equal t*p_k - (x_k H + H x_k)/2 after canonical ordering
        m = model_for(4, mass=1)
        h = hamiltonian(m)
        for k in (1, 4):
            xk = _sym(m, x_monomial(4, k))
            tpk = _sym(m, t_monomial(4)) * _sym(m, p_monomial(4, k))
            oracle = tpk - (xk * h + h * xk).scale(ExactScalar(Fraction(1, 2)))
            assert (generator(m, "J0k", k=k) - oracle).is_zero()

    def test_generator_symbols_are_affine_in_each_variable(self):
        m = model_for(4)
        for g in ("P0", "Pk", "Jkl", "J0k"):
            sym = generator(m, g, k=1, l=2)
            assert sym.max_var_degree() <= 1

    @pytest.mark.parametrize("d", [2, 4, 6])
    def test_rotation_translation_closure_all_triples(self, d):
        # [J_kl, P_m] == i*(delta_km P_l - delta_lm P_k) for every index triple
        m = model_for(d, mass=1)
        i_unit = ExactScalar(0, 1)
        ps = {k: generator(m, "Pk", k=k) for k in range(1, d + 1)}
        for k in range(1, d + 1):
            for l in range(k + 1, d + 1):
                jkl = generator(m, "Jkl", k=k, l=l)
                for mm in range(1, d + 1):
                    want = OperatorSymbol(d, m.dim)
                    if mm == k:
                        want = want + ps[l].scale(i_unit)
                    if mm == l:
                        want = want - ps[k].scale(i_unit)
                    assert (jkl.commutator(ps[mm]) - want).is_zero(), (k, l, mm)

    def test_algebra_closure(self):
        m = model_for(4, mass=2)
        h = generator(m, "P0")
        j12 = generator(m, "Jkl", k=1, l=2)
        j01 = generator(m, "J0k", k=1)
        p1 = generator(m, "Pk", k=1)
        p2 = generator(m, "Pk", k=2)
        assert j12.commutator(h).is_zero()
        assert (j01.commutator(h) - p1.scale(ExactScalar(0, -1))).is_zero()
        assert (j12.commutator(p1) - p2.scale(ExactScalar(0, 1))).is_zero()
        assert p1.commutator(p2).is_zero()


class TestDoubledModel:
    def test_blocks(self):
        single = model_for(4, mass=1)
        dbl = model_for(4, mass=1, doubled=True)
        n = single.dim
        assert dbl.dim == 2 * n
        for a_s, a_d in zip(single.alphas, dbl.alphas):
            for i in range(n):
                for j in range(n):
                    assert a_d[i, j] == a_s[i, j]
                    assert a_d[n + i, n + j] == a_s[i, j]
                    assert a_d[i, n + j].is_zero()
        b_s, b_d = single.beta, dbl.beta
        for i in range(n):
            for j in range(n):
                assert b_d[i, j] == b_s[i, j]
                assert b_d[n + i, n + j] == -b_s[i, j]

    def test_double_of_doubled_rejected(self):
        with pytest.raises(ValueError):
            doubled(model_for(2, doubled=True))

    def test_doubled_hamiltonian_contains_both_branches(self):
        dbl = model_for(2, mass=3, doubled=True)
        plus = model_for(2, mass=3, branch=1)
        minus = model_for(2, mass=3, branch=-1)
        p = [Fraction(1), Fraction(-1)]
        h = dbl.hamiltonian_matrix(p)
        hp, hm = plus.hamiltonian_matrix(p), minus.hamiltonian_matrix(p)
        n = plus.dim
        for i in range(n):
            for j in range(n):
                assert h[i, j] == hp[i, j]
                assert h[n + i, n + j] == hm[i, j]


def test_negative_mass_rejected():
    with pytest.raises(ValueError):
        model_for(2, mass=-1)


def test_bad_generator_index_rejected():
    m = model_for(2)
    with pytest.raises(ValueError):
        generator(m, "Pk", k=3)
    with pytest.raises(ValueError):
        generator(m, "Jkl", k=2, l=2)
