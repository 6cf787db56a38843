import random

from hypothesis import given, settings
from hypothesis import strategies as st

from qweil.checks import random_uq
from qweil.scalars import ONE, ZERO, q
from qweil.uqsl2 import (
    E,
    F,
    K,
    Ki,
    UqElem,
    UqTensor,
    X,
    Y,
    Z,
    antipode,
    casimir,
    casimir_alt,
    casimir_v,
    coproduct,
    counit,
    is_central,
    uq_ad,
    uq_normal_form,
)

seeds = st.integers(0, 10 ** 6)


def test_defining_relations():
    assert K * Ki == UqElem.scalar(1)
    assert K * E * Ki == E * q ** 2
    assert K * F * Ki == F * q ** -2
    assert E * F - F * E == (K - Ki) * (q - q ** -1).inverse()


def test_pbw_order_is_F_K_E():
    assert E * F == F * E + (K - Ki) * (q - q ** -1).inverse()
    assert (E * K).terms == {(0, 1, 1): q ** -2}
    assert uq_normal_form(["E", "F"]) == E * F


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_associativity(seed):
    rng = random.Random(seed)
    a, b, d = (random_uq(rng) for _ in range(3))
    assert (a * b) * d == a * (b * d)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_coproduct_is_multiplicative(seed):
    rng = random.Random(seed)
    a, b = random_uq(rng, 2, 1), random_uq(rng, 2, 1)
    assert coproduct(a * b) == coproduct(a) * coproduct(b)


def test_hopf_values():
    assert coproduct(E) == UqTensor.pure(E, K) + UqTensor.pure(UqElem.scalar(1), E)
    assert coproduct(F) == UqTensor.pure(F, UqElem.scalar(1)) + UqTensor.pure(Ki, F)
    assert antipode(E) == -E * Ki
    assert antipode(F) == -K * F
    assert antipode(K) == Ki
    assert counit(E) == ZERO and counit(K) == ONE


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_antipode_axiom(seed):
    # m (S x id) Delta = eta epsilon
    x = random_uq(random.Random(seed), 2, 2)
    total = UqElem()
    for (m1, m2), coef in coproduct(x):
        total = total + antipode(UqElem({m1: ONE})) * UqElem({m2: ONE}) * coef
    assert total == UqElem.scalar(counit(x))


def test_adjoint_action_on_XZY():
    assert uq_ad(K, X) == X * q ** 2
    assert uq_ad(F, X) == -Z
    assert uq_ad(E, Z) == -X * (q + q ** -1)
    assert uq_ad(F, Z) == Y * (q + q ** -1)
    assert uq_ad(E, Y) == Z
    assert uq_ad(E, X).is_zero()
    assert uq_ad(F, Y).is_zero()


def test_adjoint_action_is_an_action():
    for a in (E, F, K):
        for b in (E, F, Ki):
            for y in (X, Y, Z):
                assert uq_ad(a * b, y) == uq_ad(a, uq_ad(b, y))


def test_casimir_is_central():
    C = casimir()
    assert is_central(C)
    assert C == casimir_alt()
    assert is_central(casimir_v())
    assert not is_central(E * F)
