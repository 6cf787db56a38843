from hypothesis import given, settings
from hypothesis import strategies as st

from qweil import cliffordq as clq
from qweil.checks import run_suite
from qweil.cliffordq import ClElem, ClqElem
from qweil.linalg import matmul, rank
from qweil.scalars import ONE, ZERO, c, q, r2, t
from qweil.uqsl2 import E, F, K, Ki, X, Y, Z

basis_index = st.integers(0, 7)


def test_straightening_rules():
    v2, v0, vm2 = clq.v2, clq.v0, clq.vm2
    assert v2 * v2 == ClqElem()
    assert vm2 * vm2 == ClqElem()
    assert v0 * v2 == v2 * v0 * -q ** -2
    assert vm2 * v0 == v0 * vm2 * -q ** -2
    assert v0 * v0 == v2 * vm2 * ((1 - q ** 4) / q ** 3) + ClqElem.scalar((q ** 2 + 1) / q * c)
    assert vm2 * v2 == -v2 * vm2 + ClqElem.scalar((q ** 2 + 1) / q ** 2 * c)


def test_ideal_generators_vanish():
    for gen in clq.ideal_generators():
        assert clq.evaluate_words(gen).is_zero()


@settings(max_examples=60, deadline=None)
@given(basis_index, basis_index, basis_index)
def test_associativity(i, j, k):
    a, b, d = ClqElem.basis(i), ClqElem.basis(j), ClqElem.basis(k)
    assert (a * b) * d == a * (b * d)


def test_gamma():
    g = clq.gamma()
    assert g * g == ClqElem.scalar(c ** 2 * t ** 2)
    assert all(g * ClqElem.basis(i) == ClqElem.basis(i) * g for i in range(8))
    assert clq.gamma_pm(1) * clq.gamma_pm(-1) == ClqElem()
    assert clq.gamma_pm(1) - clq.gamma_pm(-1) == clq.CLQ_ONE * (2 * c * t)


def test_parity():
    assert clq.v2.parity() == 1
    assert (clq.v2 * clq.vm2).parity() == 0
    assert (clq.v2 + clq.CLQ_ONE).parity() is None


def test_uq_action():
    assert clq.uq_action_clq(E, clq.vm2) == clq.v0
    assert clq.uq_action_clq(K, clq.v2 * clq.v0) == clq.v2 * clq.v0 * q ** 2
    for x in (E, F):
        assert clq.uq_action_clq(x, clq.gamma()).is_zero()
    for i in range(8):
        v = ClqElem.basis(i)
        for _ in range(4):
            v = clq.uq_action_clq(E, v)
        assert v.is_zero()


def test_spin_modules():
    for sign in (1, -1):
        assert clq.spin_rep(sign, clq.gamma()) == [[c * t * sign, ZERO], [ZERO, c * t * sign]]
        for i in range(8):
            for j in range(8):
                a, b = ClqElem.basis(i), ClqElem.basis(j)
                assert clq.spin_rep(sign, a * b) == matmul(clq.spin_rep(sign, a), clq.spin_rep(sign, b))
    assert clq.spin_rep(-1, clq.v0 * clq.v0) == [[t ** 2 / q ** 4, ZERO], [ZERO, t ** 2]]


def test_spin_sum_is_injective():
    rows = []
    for i in range(8):
        b = ClqElem.basis(i)
        rows.append([x for sign in (1, -1) for r in clq.spin_rep(sign, b) for x in r])
    assert rank(rows) == 8


def test_spin_uq_structure():
    assert clq.spin_uq_action(1, F, [ONE, ZERO]) == [ZERO, ONE]
    assert clq.spin_uq_action(-1, E, [ZERO, ONE]) == [-ONE, ZERO]
    assert clq.spin_compatibility_check()


def test_phi_is_an_isomorphism():
    for i in range(8):
        assert clq.phi_inv(clq.phi(ClqElem.basis(i))) == ClqElem.basis(i)
        assert clq.phi(clq.phi_inv(ClElem.basis(i))) == ClElem.basis(i)
    h = clq.h
    assert clq.phi_inv(h) == clq.v0 * (r2 / t) - clq.v2 * clq.v0 * clq.vm2 * (r2 * (q ** 2 - 1) / (c * t * (q ** 2 + 1)))


@settings(max_examples=40, deadline=None)
@given(basis_index, basis_index)
def test_phi_is_multiplicative(i, j):
    a, b = ClqElem.basis(i), ClqElem.basis(j)
    assert clq.phi(a * b) == clq.phi(a) * clq.phi(b)


def test_classical_relations():
    e, f, h = clq.e, clq.f, clq.h
    assert h * h == ClElem.scalar(2)
    assert e * f + f * e == ClElem.scalar(2)
    assert e * e == ClElem() and e * h + h * e == ClElem()


def test_alpha_maps_are_algebra_maps():
    for fn, one in ((clq.alpha, clq.CLQ_ONE), (clq.alpha0, clq.CL_ONE)):
        aK, aKi, aE, aF = (fn(x) for x in (K, Ki, E, F))
        assert aK * aKi == one
        assert aK * aE == aE * aK * q ** 2
        assert aE * aF - aF * aE == (aK - aKi) * (q - q ** -1).inverse()
    for x in (E, F, K, X, Y, Z):
        assert clq.phi(clq.alpha(x)) == clq.alpha0(x)
    assert clq.alpha(Z) == clq.v2 * clq.vm2 * c.inverse() - clq.CLQ_ONE


def test_printed_elements():
    assert str(clq.v2 * clq.v0) == "(1)*v2*v0"
    assert str(ClqElem()) == "0"


def test_corrupted_table_is_detected(monkeypatch):
    """Changing one structure constant must make the clq suite fail with a witness."""
    table = dict(clq._TABLE)
    table[(clq.V0, clq.V2)] = [(-q ** -1, (clq.V2, clq.V0))]
    monkeypatch.setattr(clq, "_TABLE", table)
    try:
        report = run_suite("clq")
        assert not report.ok
        failed = [r for r in report.results if not r.passed]
        assert any(r.id == "clq.ideal-generators" for r in failed)
        assert all(r.witness for r in failed)
    finally:
        monkeypatch.undo()
    assert run_suite("clq").ok
