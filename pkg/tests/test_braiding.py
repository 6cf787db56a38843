import pytest

from qweil import braiding as br
from qweil import cliffordq as clq
from qweil import modules as md
from qweil import tables
from qweil.linalg import identity, is_zero_matrix, matadd, matmul
from qweil.scalars import ONE, ZERO, L, c, q
from qweil.uqsl2 import E, F, X, Y, Z, casimir
from qweil.weil import WqElem, tensor


def _flat(pairs) -> dict:
    out: dict = {}
    for (k, s), v in pairs:
        for i, x in enumerate(v.coords):
            if not x.is_zero():
                out[(k, i)] = out.get((k, i), ZERO) + s * x
    return {key: x for key, x in out.items() if not x.is_zero()}


def test_braiding_examples():
    [(u, v)] = br.sigma_R_cl_uq(clq.v2, X)
    assert u == X * q ** 2 and v == clq.v2
    [(u, v)] = br.sigma_R_cl_uq(clq.v0, casimir())
    assert u == casimir() and v == clq.v0


def test_braiding_on_VV_has_three_eigenvalues():
    s = br.sigma_R_VV()
    prod = identity(9)
    for ev in br.EIGENVALUES:
        prod = matmul(prod, matadd(s, identity(9), -ev))
    assert is_zero_matrix(prod)


def test_normalized_braiding_is_an_involution():
    st = br.sigma_tilde()
    assert matmul(st, st) == identity(9)
    for g in ("E", "F", "K"):
        a = br.tensor_action(g)
        assert matmul(a, st) == matmul(st, a)


def test_flatness():
    assert br.lambda_q_dims(4) == [1, 3, 3, 1, 0]
    with pytest.raises(ValueError):
        br.lambda_q_dims(9)


def test_bilinear_form():
    assert br.bilinear_form("v2", "vm2") == c
    assert br.bilinear_form("vm2", "v2") == c / q ** 2
    assert br.bilinear_form("v0", "v0") == (q ** 2 + 1) * c / q ** 3
    assert br.bilinear_form("v2", "v2") == ZERO
    assert br.check_ad_invariance()


def test_tabulated_braiding_rows():
    letters = [clq.v2, clq.v0, clq.vm2]
    for (u, j), entry in tables.SIGMA_R_ROWS.items():
        got = WqElem()
        for cl, uq in br.sigma_R_uq_cl(tables.UQ_LETTERS[u], letters[j]):
            got = got + tensor(uq, cl)
        want = WqElem()
        for coef, a, b in entry:
            want = want + tensor(tables.UQ_LETTERS[b], letters[a]) * coef
        assert got == want, (u, j)


def test_inverse_series_needs_ordinary_factorial():
    samples = [(X, clq.vm2), (Y, clq.v2), (Z, clq.v0), (E * F, clq.vm2)]
    mismatches = 0
    for y, v in samples:
        exact: dict = {}
        for u, cl in br.sigma_plus_cl_uq(v, y):
            for m, uc in u.terms.items():
                for i, x in enumerate(cl.coords):
                    if not x.is_zero():
                        exact[(m, i)] = exact.get((m, i), ZERO) + uc * x
        exact = {k: x for k, x in exact.items() if not x.is_zero()}
        assert br.r_inverse_series(y, v) == exact
        mismatches += br.r_inverse_series(y, v, factorial=br.qfactorial_q2) != exact
    # the q^2-factorial variant of the series is not the inverse
    assert mismatches > 0


@pytest.mark.parametrize("k", range(4))
def test_braiding_past_verma_vectors(k):
    mod = md.Module.verma()
    assert _flat(br.sigma_R_cl_mod(clq.v2, k, mod)) == {(k, 1): L * q ** (-2 * k)}
    got = _flat(br.sigma_R_cl_mod(clq.vm2, k, mod))
    assert got[(k + 1, 2)] == q ** (-1 - k) * (q ** (2 * k + 2) - 1)
    # the coefficient q^{1-k}(q^{2k+2}-1) would be off by q^2
    assert got[(k + 1, 2)] != q ** (1 - k) * (q ** (2 * k + 2) - 1)


def test_module_braiding_truncates_on_finite_modules():
    fin = md.Module.finite(2)
    out = _flat(br.sigma_R_cl_mod(clq.vm2, 2, fin))
    assert all(k <= 2 for k, _ in out)


def test_projectors_sum_to_identity():
    vecs, projs = br.decompose_VV()
    total = matadd(matadd(projs[0], projs[1]), projs[2])
    assert total == identity(9)
    for v, ev in zip(vecs, br.EIGENVALUES):
        assert br.apply(br.sigma_R_VV(), v) == [ev * x for x in v]


def test_ideal_generators_span_the_symmetric_part():
    assert br.ideal_generators_check()


def test_truncation_of_e_action():
    v = clq.CLQ_ONE * ONE + clq.v2 * clq.vm2
    for _ in range(4):
        v = clq.uq_action_clq(E, v)
    assert v.is_zero()
    assert not clq.uq_action_clq(F, clq.v2).is_zero()
