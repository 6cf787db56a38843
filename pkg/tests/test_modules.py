import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qweil import modules as md
from qweil import weil
from qweil.checks import integration_triples, random_module, random_module_vector, random_uq
from qweil.linalg import is_zero_matrix, matmul
from qweil.modules import Module, ModuleVector
from qweil.scalars import ONE, ZERO, L, c, q, qint, qint_shifted, specialize_L, t
from qweil.uqsl2 import E, F, K, casimir

seeds = st.integers(0, 10 ** 6)


def w(module, k, spin=1, sign=-1):
    return ModuleVector.basis(module, k, spin, sign)


def test_verma_action():
    m = Module.verma()
    assert md.verma_act(F, w(m, 0)) == w(m, 1)
    assert md.verma_act(F, w(m, 2)) == w(m, 3) * qint(3)
    assert md.verma_act(E, w(m, 3)) == w(m, 2) * qint_shifted(L, -2)
    assert md.verma_act(E, w(m, 0)).is_zero()
    assert md.verma_act(K, w(m, 2)) == w(m, 2) * (L * q ** -4)


def test_finite_action():
    n = 3
    fin = Module.finite(n)
    assert md.finite_act(n, F, w(fin, n)).is_zero()
    assert md.finite_act(n, E, w(fin, n)) == w(fin, n - 1)
    assert md.finite_act(n, E, w(fin, n - 1)) == w(fin, n - 2) * qint(2)
    # E w_{-n} is not [n]_q w_{-n+2}
    assert md.finite_act(n, E, w(fin, n)) != w(fin, n - 1) * qint(n)
    with pytest.raises(ValueError):
        w(fin, n + 1)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_module_axioms(seed):
    rng = random.Random(seed)
    module = random_module(rng)
    a, b = random_uq(rng), random_uq(rng)
    v = random_module_vector(rng, module)
    assert md.verma_act(a * b, v) == md.verma_act(a, md.verma_act(b, v))


def test_commutator_on_finite_module():
    n = 4
    fin = Module.finite(n)
    for k in range(n + 1):
        v = w(fin, k)
        lhs = md.finite_act(n, E * F - F * E, v)
        rhs = md.finite_act(n, (K - K ** -1) * (q - q ** -1).inverse(), v)
        assert lhs == rhs


@pytest.mark.parametrize("k", [1, 2, 5, 12])
def test_dirac_block_matches_closed_form(k):
    assert md.dirac_block(k) == md.closed_form_block(k)


def test_blocks_are_invariant():
    for module in (Module.verma(), Module.verma(-1), Module.finite(3)):
        for sign in (-1, 1):
            assert md.block_invariance_check(module, 6, sign)


def test_eigenvalues():
    mu = md.eigenvalue()
    assert mu == t / (2 * c) * qint_shifted(L, 1)
    for sign in (-1, 1):
        for k in (1, 4, 9):
            sp = md.spectrum(k, sign=sign)
            tr, det = sp.characteristic_polynomial()
            assert tr == ZERO and det == -mu * mu
    assert md.dirac_singleton(sign=-1) == mu
    assert md.dirac_singleton(sign=1) == -mu


@pytest.mark.parametrize("sign", [-1, 1])
def test_eigenvectors(sign):
    mu = md.eigenvalue()
    for k in range(1, 6):
        for ev, vec in md.spectrum(k, sign=sign).eigenpairs:
            which = 1 if ev == mu else -1
            assert vec == md.eigenvector_formula(k, which, sign)


def test_eigenvector_sign_on_s_minus():
    k = 2
    mu = md.eigenvalue()
    frac = q ** (1 - k) * L * (q ** (2 * k) - 1) / (q ** (2 * k) - L ** 2 * q ** 2)
    vecs = {str(ev): vec for ev, vec in md.spectrum(k).eigenpairs}
    assert vecs[str(mu)] == [q ** (1 - k) * L, ONE]
    assert vecs[str(-mu)] == [frac, ONE]
    # the fraction with a leading minus is not an eigenvector for +mu
    assert vecs[str(mu)] != [-frac, ONE]


def test_finite_module_spectrum():
    n = 3
    fin = Module.finite(n)
    mu = md.eigenvalue(fin)
    assert mu == t / (2 * c) * qint(n + 1)
    for k in range(1, n + 1):
        evs = {str(ev) for ev, _ in md.spectrum(k, fin).eigenpairs}
        assert evs == {str(mu), str(-mu)}
        for ev, vec in md.spectrum(k, fin).eigenpairs:
            which = 1 if ev == mu else -1
            assert vec == [specialize_L(x, n) for x in md.eigenvector_formula(k, which)]
    bottom = md.operator_block(weil.dirac(), fin, n + 1)
    assert bottom == [[mu]]


def test_central_scalars():
    assert md.casimir_on_verma() == md.casimir_formula()
    assert md.dsq_on_verma() == md.dsq_formula()
    assert md.dsq_on_verma() == md.eigenvalue() ** 2
    v = w(Module.verma(), 2, -1)
    d = weil.dirac()
    assert md.wq_act(d, md.wq_act(d, v)) == v * md.dsq_formula()


def test_unsquared_dsq_candidate_is_not_the_action():
    candidate = (q ** 2 + 1) / (4 * q * c) * (q ** 2 * L - L.inverse())
    assert md.dsq_on_verma() != candidate


def test_casimir_acts_by_scalar():
    m = Module.verma()
    C = casimir()
    for k in range(4):
        assert md.verma_act(C, w(m, k)) == w(m, k) * md.casimir_formula()


def test_jordan_form_at_minus_one():
    for k in (1, 3):
        jf = md.jordan_form(k)
        assert not is_zero_matrix(jf.matrix)
        assert is_zero_matrix(matmul(jf.matrix, jf.matrix))
        assert matmul(jf.matrix, jf.change_of_basis) == matmul(jf.change_of_basis, jf.form)
    with pytest.raises(ValueError, match="degenerate"):
        md.spectrum(1, Module.verma(-1))


def test_nilpotent_at_negative_root():
    # L = -q^-1 also kills the eigenvalue
    odd = Module(-(q ** -1), None, "odd")
    assert md.eigenvalue(odd) == ZERO
    m = md.dirac_block(2, odd)
    assert is_zero_matrix(matmul(m, m)) and not is_zero_matrix(m)


def test_cohomology_generic_and_integral():
    assert md.dirac_cohomology(None, depth=6).dimension == 0
    for n in (0, 2):
        assert md.dirac_cohomology(n, "verma", 6).dimension == 0
        assert md.dirac_cohomology(n, "finite", 6).dimension == 0


@pytest.mark.parametrize("sign", [-1, 1])
def test_cohomology_at_minus_one(sign):
    r = md.dirac_cohomology(-1, "verma", 8, sign)
    assert r.dimension == 1
    [v] = r.basis()
    assert v == w(Module.verma(-1), 0, 1, sign)
    assert str(v) == "w_{-1} ox s1"


def test_cohomology_rejects_bad_arguments():
    with pytest.raises(ValueError):
        md.dirac_cohomology(None, "finite")
    with pytest.raises(ValueError):
        md.dirac_cohomology(1, "other")


def test_vector_printing():
    m = Module.verma()
    v = w(m, 0) + w(m, 2, -1) * q
    assert str(v) == "w_{lambda} ox s1 + (q)*w_{lambda-4} ox s-1"


@settings(max_examples=5, deadline=None)
@given(seeds)
def test_integration_property(seed):
    for x, y, v in integration_triples(5, seed):
        assert md.wq_act(weil.wq_mul(x, y), v) == md.wq_act(x, md.wq_act(y, v))


def test_eigenvector_where_the_closed_form_degenerates():
    # at lambda = k - 1 the closed-form denominator vanishes; the rescaled vector is w (x) s1
    sp = md.spectrum(3, Module.verma(2))
    vecs = {str(ev): vec for ev, vec in sp.eigenpairs}
    assert vecs[str(-md.eigenvalue(Module.verma(2)))] == [ONE, ZERO]
