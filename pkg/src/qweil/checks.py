"""Verification suites: every identity the library claims, as named checks.

A check is a zero-argument callable returning a bool or (bool, witness).
Randomized checks draw from ``random.Random(seed)``; the seed defaults to
DEFAULT_SEED and can be overridden with the QWEIL_SEED environment variable.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import braiding as br
from . import cliffordq as clq
from . import modules as md
from . import tables, weil
from .cliffordq import ClElem, ClqElem
from .linalg import identity, in_span, is_zero_matrix, matadd, matmul, rank
from .scalars import (
    BarMode,
    EvaluationError,
    L,
    ONE,
    ZERO,
    Scalar,
    as_scalar,
    bar,
    c,
    eval_q1,
    q,
    qint,
    r2,
    specialize_L,
    t,
)
from .uqsl2 import (
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
    counit_tensor,
    is_central,
    uq_ad,
)

DEFAULT_SEED = 20240611
SUITE_NAMES = ("scalars", "uq", "clq", "braid", "weil", "modules")


def default_seed() -> int:
    value = os.environ.get("QWEIL_SEED")
    return int(value) if value else DEFAULT_SEED


# --- random elements ------------------------------------------------------------------


def random_scalar(rng: random.Random, radicals: bool = True, weight: bool = True) -> Scalar:
    """A small random nonzero element of Q(q, L, c)[t, r2]."""

    def poly():
        out = ZERO
        for _ in range(rng.randint(1, 3)):
            term = as_scalar(rng.choice([-3, -2, -1, 1, 2, 3])) * q ** rng.randint(-2, 2) * c ** rng.randint(0, 1)
            if weight:
                term = term * L ** rng.randint(-1, 1)
            out = out + term
        return out if not out.is_zero() else ONE

    x = poly() / poly()
    if radicals:
        x = x + poly() * rng.choice([ZERO, t, r2, t * r2])
    return x if not x.is_zero() else ONE


def random_uq(rng: random.Random, terms: int = 3, degree: int = 2) -> UqElem:
    out = UqElem()
    for _ in range(rng.randint(1, terms)):
        mono = (rng.randint(0, degree), rng.randint(-degree, degree), rng.randint(0, degree))
        out = out + UqElem({mono: as_scalar(rng.choice([-2, -1, 1, 2, 3]))})
    return out if not out.is_zero() else UqElem.scalar(1)


def random_clq(rng: random.Random) -> ClqElem:
    return ClqElem([as_scalar(rng.randint(-2, 2)) * q ** rng.randint(-1, 1) for _ in range(8)])


def random_wq(rng: random.Random, terms: int = 3, degree: int = 2) -> weil.WqElem:
    out: dict = {}
    for _ in range(rng.randint(1, terms)):
        mono = (rng.randint(0, degree), rng.randint(-degree, degree), rng.randint(0, degree))
        out[(mono, rng.randrange(8))] = as_scalar(rng.choice([-3, -2, -1, 1, 2, 3]))
    return weil.WqElem(out)


def random_module(rng: random.Random) -> md.Module:
    if rng.random() < 0.5:
        return md.Module.verma()
    return md.Module.finite(rng.randint(2, 5))


def random_module_vector(rng: random.Random, module: md.Module, depth: int = 2) -> md.ModuleVector:
    sign = rng.choice((1, -1))
    terms = {}
    for _ in range(rng.randint(1, 2)):
        terms[(rng.randint(0, depth), rng.choice((1, -1)))] = as_scalar(rng.randint(1, 3))
    return md.ModuleVector(module, sign, terms)


def integration_triples(count: int, seed: int) -> list:
    """Seeded (x, y, w) samples for the action-compatibility property."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        module = md.Module.verma() if i % 2 == 0 else md.Module.finite(rng.randint(2, 5))
        out.append((random_wq(rng), random_wq(rng), random_module_vector(rng, module)))
    return out


def integration_check(count: int = 100, seed: int | None = None):
    seed = default_seed() if seed is None else seed
    for x, y, w in integration_triples(count, seed):
        lhs = md.wq_act(weil.wq_mul(x, y), w)
        rhs = md.wq_act(x, md.wq_act(y, w))
        if lhs != rhs:
            return False, f"x={x}; y={y}; w={w}; difference={lhs - rhs}"
    return True


# --- reports --------------------------------------------------------------------------------


@dataclass
class Check:
    id: str
    anchor: str
    fn: Callable


@dataclass
class CheckResult:
    id: str
    anchor: str
    passed: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "status": "pass" if self.passed else "fail"}
        if not self.passed and self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    suite: str
    results: list = field(default_factory=list)
    ms: int = 0

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "checks": [r.as_dict() for r in sorted(self.results, key=lambda r: r.id)],
            "passed": self.passed,
            "failed": self.failed,
        }
        out["ms"] = self.ms if timing else 0
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = []
        for r in sorted(self.results, key=lambda r: r.id):
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status}  {r.id}  [{r.anchor}]")
            if not r.passed and r.witness:
                lines.append(f"      witness: {r.witness}")
        lines.append(f"{self.suite}: {self.passed} passed, {self.failed} failed in {self.ms} ms")
        return "\n".join(lines)


def run_check(check: Check) -> CheckResult:
    try:
        out = check.fn()
    except Exception as exc:  # a crashing check is a failing check
        return CheckResult(check.id, check.anchor, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        ok, witness = out
    else:
        ok, witness = bool(out), None
    if not ok and witness is None:
        witness = "identity does not hold"
    return CheckResult(check.id, check.anchor, bool(ok), None if ok else str(witness))


def run_suite(name: str) -> Report:
    if name == "all":
        names = SUITE_NAMES
    elif name in SUITES:
        names = (name,)
    else:
        raise ValueError(f"unknown suite {name!r}")
    start = time.perf_counter()
    report = Report(name)
    for n in names:
        for check in SUITES[n]():
            report.results.append(run_check(check))
    report.ms = int((time.perf_counter() - start) * 1000)
    return report


def _eq(lhs, rhs):
    if lhs == rhs:
        return True
    return False, f"got {lhs}, expected {rhs}"


def _all(pairs):
    """pairs of (label, lhs, rhs); the first mismatch becomes the witness."""
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            return False, f"{label}: got {lhs}, expected {rhs}"
    return True


# --- scalars ---------------------------------------------------------------------------------


def _scalar_field_axioms():
    rng = random.Random(default_seed())
    for _ in range(15):
        a, b, d = (random_scalar(rng) for _ in range(3))
        if (a * b) * d != a * (b * d) or a * (b + d) != a * b + a * d or a * b != b * a:
            return False, f"a={a}; b={b}; d={d}"
        if a * a.inverse() != ONE:
            return False, f"inverse of {a}"
    return True


def _bar_checks():
    rng = random.Random(default_seed() + 1)
    for mode in BarMode:
        for _ in range(8):
            a, b = random_scalar(rng), random_scalar(rng)
            if bar(bar(a, mode), mode) != a or bar(a * b, mode) != bar(a, mode) * bar(b, mode):
                return False, f"mode={mode.value}; a={a}; b={b}"
    return _all(
        [
            ("bar q unit circle", bar(q, BarMode.UNIT_CIRCLE), q ** -1),
            ("bar t unit circle", bar(t, BarMode.UNIT_CIRCLE), t),
            ("bar q real", bar(q, BarMode.REAL), q),
        ]
    )


def _specialize_checks():
    rng = random.Random(default_seed() + 2)
    for _ in range(8):
        a, b = random_scalar(rng), random_scalar(rng)
        n = rng.randint(-3, 3)
        if specialize_L(a * b, n) != specialize_L(a, n) * specialize_L(b, n):
            return False, f"a={a}; b={b}; n={n}"
    shifted = (L * q - (L * q).inverse()) / (q - q ** -1)
    return _all(
        [
            ("L at 2", specialize_L(L, 2), q ** 2),
            ("[lambda+1] at -1", specialize_L(shifted, -1), ZERO),
            ("[lambda+1] at 1", specialize_L(shifted, 1), q + q ** -1),
        ]
    )


def _eval_q1_checks():
    try:
        eval_q1(1 / (q - 1))
        return False, "no error for a pole at q=1"
    except EvaluationError:
        pass
    try:
        eval_q1(L)
        return False, "no error for an L-dependent value"
    except EvaluationError:
        pass
    return _all(
        [
            ("cancellation", eval_q1((q ** 2 - 1) / (q - 1)), as_scalar(2)),
            ("C_q coefficient", eval_q1((q ** 2 + 1) ** 2 / (4 * q ** 2 * c)), c.inverse()),
            ("quantum integer", eval_q1(qint(3)), as_scalar(3)),
        ]
    )


def _zero_divisor():
    try:
        ONE / ZERO
    except ZeroDivisionError as exc:
        return "zero divisor" in str(exc), str(exc)
    return False, "division by zero succeeded"


def scalar_checks() -> list:
    return [
        Check("scalars.t-squared", "defining relation of t", lambda: _eq(t * t, c * (q ** 2 + 1) / q)),
        Check("scalars.r2-squared", "defining relation of sqrt 2", lambda: _eq(r2 * r2, as_scalar(2))),
        Check("scalars.cancellation", "(q - q^-1)^-1 (q^2 - 1) = q", lambda: _eq((q - q ** -1).inverse() * (q ** 2 - 1), q)),
        Check("scalars.field-axioms", "field axioms on random scalars", _scalar_field_axioms),
        Check("scalars.zero-divisor", "division by zero is rejected", _zero_divisor),
        Check("scalars.bar", "conjugation for |q|=1 and real q", _bar_checks),
        Check("scalars.specialize", "substituting lambda = n", _specialize_checks),
        Check("scalars.eval-q1", "classical limit q = 1", _eval_q1_checks),
    ]


# --- U_q(sl2) --------------------------------------------------------------------------------


def _uq_relations():
    return _all(
        [
            ("KE", K * E, E * K * q ** 2),
            ("KF", K * F, F * K * q ** -2),
            ("EF-FE", E * F - F * E, (K - Ki) * (q - q ** -1).inverse()),
            ("KKi", K * Ki, UqElem.scalar(1)),
            ("EK", E * K, K * E * q ** -2),
        ]
    )


def _uq_associativity():
    rng = random.Random(default_seed() + 3)
    for _ in range(10):
        a, b, d = random_uq(rng), random_uq(rng), random_uq(rng)
        if (a * b) * d != a * (b * d):
            return False, f"a={a}; b={b}; d={d}"
    return True


def _tensor3_left(x: UqElem) -> dict:
    """(Delta (x) id) Delta x as {(m1, m2, m3): coef}."""
    out: dict = {}
    for (m1, m2), coef in coproduct(x):
        for (n1, n2), c2 in coproduct(UqElem({m1: ONE})):
            key = (n1, n2, m2)
            out[key] = out.get(key, ZERO) + coef * c2
    return {k: v for k, v in out.items() if not v.is_zero()}


def _tensor3_right(x: UqElem) -> dict:
    out: dict = {}
    for (m1, m2), coef in coproduct(x):
        for (n1, n2), c2 in coproduct(UqElem({m2: ONE})):
            key = (m1, n1, n2)
            out[key] = out.get(key, ZERO) + coef * c2
    return {k: v for k, v in out.items() if not v.is_zero()}


def _hopf_axioms():
    rng = random.Random(default_seed() + 4)
    samples = [E, F, K, Ki] + [random_uq(rng, degree=1) for _ in range(20)]
    for x in samples:
        if _tensor3_left(x) != _tensor3_right(x):
            return False, f"coassociativity fails on {x}"
        if counit_tensor(coproduct(x), 0) != x or counit_tensor(coproduct(x), 1) != x:
            return False, f"counit fails on {x}"
        s = UqElem()
        for (m1, m2), coef in coproduct(x):
            s = s + antipode(UqElem({m1: ONE})) * UqElem({m2: ONE}) * coef
        if s != UqElem.scalar(counit(x)):
            return False, f"antipode axiom fails on {x}"
    for _ in range(5):
        a, b = random_uq(rng, degree=1), random_uq(rng, degree=1)
        if coproduct(a * b) != coproduct(a) * coproduct(b):
            return False, f"coproduct not multiplicative on {a}; {b}"
        if antipode(a * b) != antipode(b) * antipode(a):
            return False, f"antipode not antimultiplicative on {a}; {b}"
    return True


def _hopf_examples():
    return _all(
        [
            ("Delta K", coproduct(K), UqTensor.pure(K, K)),
            ("S(F)", antipode(F), -(K * F)),
            ("eps(EF)", counit(E * F), ZERO),
        ]
    )


def _ad_table():
    gens = {"E": E, "F": F, "K": K}
    for (g, u), (coef, r) in tables.ADJOINT_ROWS.items():
        got = uq_ad(gens[g], tables.UQ_LETTERS[u])
        want = tables.UQ_LETTERS[r] * coef
        if got != want:
            return False, f"ad_{g}({u}) = {got}, expected {want}"
    letters = list(tables.UQ_LETTERS.values())
    monos = sorted({m for u in letters for m in u.terms})
    span = [[u.coefficient(m) for m in monos] for u in letters]
    for g in (E, F, K, Ki):
        for u in letters:
            img = uq_ad(g, u)
            if set(img.terms) - set(monos) or not in_span(span, [img.coefficient(m) for m in monos]):
                return False, f"ad image {img} leaves span(X, Z, Y)"
    return True


def _ad_module_algebra():
    rng = random.Random(default_seed() + 5)
    for x in (E, F, K, Ki):
        if uq_ad(x, UqElem.scalar(1)) != UqElem.scalar(counit(x)):
            return False, f"ad_x(1) on {x}"
    for _ in range(6):
        a, b, y = random_uq(rng, 2, 1), random_uq(rng, 2, 1), random_uq(rng, 2, 1)
        if uq_ad(a * b, y) != uq_ad(a, uq_ad(b, y)):
            return False, f"ad not an action on {a}; {b}; {y}"
        # ad_x(yz) = sum ad_{x(1)}(y) ad_{x(2)}(z)
        z = random_uq(rng, 2, 1)
        lhs = uq_ad(a, y * z)
        rhs = UqElem()
        for (m1, m2), coef in coproduct(a):
            rhs = rhs + uq_ad(UqElem({m1: ONE}), y) * uq_ad(UqElem({m2: ONE}), z) * coef
        if lhs != rhs:
            return False, f"Leibniz rule on {a}; {y}; {z}"
    return True


def _casimir_checks():
    C = casimir()
    for x in (E, F, K):
        if uq_ad(x, C) != C * counit(x):
            return False, f"ad_{x} C"
    if not is_central(C):
        return False, "C not central"
    if is_central(E):
        return False, "E reported central"
    return _eq(C, casimir_alt())


def _casimir_v_checks():
    C = casimir()
    cv = casimir_v()
    if not is_central(cv):
        return False, "C_V not central"
    rhs = C * C * ((q ** 2 - 1) ** 2 / (q ** 3 * (1 + q ** 2))) - UqElem.scalar((q ** 2 + 1) / (q * (q ** 2 - 1) ** 2))
    return _eq(cv, rhs)


def uq_checks() -> list:
    return [
        Check("uq.relations", "defining relations of U_q(sl2)", _uq_relations),
        Check("uq.associativity", "associativity of the PBW product", _uq_associativity),
        Check("uq.hopf-axioms", "Hopf algebra axioms", _hopf_axioms),
        Check("uq.hopf-examples", "coproduct, antipode, counit values", _hopf_examples),
        Check("uq.adjoint-table", "adjoint action on X, Z, Y", _ad_table),
        Check("uq.adjoint-module-algebra", "adjoint action is a module algebra action", _ad_module_algebra),
        Check("uq.casimir", "the quantum Casimir and its two forms", _casimir_checks),
        Check("uq.casimir-v", "C_V is central and quadratic in C", _casimir_v_checks),
    ]


# --- Cl_q(sl2) ------------------------------------------------------------------------------


def _ideal_generators_vanish():
    for n, gen in enumerate(clq.ideal_generators()):
        val = clq.evaluate_words(gen)
        if not val.is_zero():
            return False, f"generator {n} evaluates to {val}"
    return True


def _clq_associativity():
    basis = [ClqElem.basis(i) for i in range(8)]
    for a in basis:
        for b in basis:
            ab = a * b
            for d in basis:
                if ab * d != a * (b * d):
                    return False, f"({a})({b})({d})"
    return True


def _table_examples():
    v2, v0 = clq.v2, clq.v0
    return _all(
        [
            ("v0 v2", v0 * v2, v2 * v0 * -q ** -2),
            ("v2 v2", v2 * v2, ClqElem()),
            ("v0 v2 + q^-2 v2 v0", v0 * v2 + v2 * v0 * q ** -2, ClqElem()),
        ]
    )


def _gamma_checks():
    g = clq.gamma()
    if g * g != ClqElem.scalar(c ** 2 * t ** 2):
        return False, f"gamma^2 = {g * g}"
    for i in range(8):
        b = ClqElem.basis(i)
        if g * b != b * g:
            return False, f"gamma does not commute with {b}"
    if clq.gamma_pm(1) * clq.gamma_pm(-1) != ClqElem():
        return False, "gamma_+ gamma_- is not zero"
    return _eq(g.parity(), 1)


def _grading():
    for i in range(8):
        for j in range(8):
            prod = ClqElem.basis(i) * ClqElem.basis(j)
            if prod.is_zero():
                continue
            p = prod.parity()
            if p is not None and p != (clq.PARITY[i] + clq.PARITY[j]) % 2:
                return False, f"parity of b{i} b{j}"
            if p is None:
                return False, f"mixed parity product b{i} b{j}"
    return True


def _uq_action_examples():
    g = clq.gamma()
    return _all(
        [
            ("E vm2", clq.uq_action_clq(E, clq.vm2), clq.v0),
            ("K v2v0", clq.uq_action_clq(K, clq.v2 * clq.v0), clq.v2 * clq.v0 * q ** 2),
            ("E gamma", clq.uq_action_clq(E, g), ClqElem()),
            ("F gamma", clq.uq_action_clq(F, g), ClqElem()),
            ("K gamma", clq.uq_action_clq(K, g), g),
        ]
    )


def _uq_action_module_algebra():
    # x(ab) = sum (x(1) a)(x(2) b) on basis pairs
    for x in (E, F, K):
        delta = coproduct(x)
        for i in range(8):
            for j in range(8):
                a, b = ClqElem.basis(i), ClqElem.basis(j)
                rhs = ClqElem()
                for (m1, m2), coef in delta:
                    rhs = rhs + clq.uq_action_clq(UqElem({m1: ONE}), a) * clq.uq_action_clq(UqElem({m2: ONE}), b) * coef
                if clq.uq_action_clq(x, a * b) != rhs:
                    return False, f"{x} on b{i} b{j}"
    return True


def _spin_checks():
    ct = c * t
    for sign in (1, -1):
        if clq.spin_rep(sign, clq.gamma()) != [[ct * sign, ZERO], [ZERO, ct * sign]]:
            return False, f"gamma on S{'+' if sign > 0 else '-'}"
        for i in range(8):
            for j in range(8):
                a, b = ClqElem.basis(i), ClqElem.basis(j)
                if clq.spin_rep(sign, a * b) != matmul(clq.spin_rep(sign, a), clq.spin_rep(sign, b)):
                    return False, f"spin_rep({sign}) not multiplicative on b{i} b{j}"
    v0sq = clq.spin_rep(-1, clq.v0 * clq.v0)
    if v0sq != [[t ** 2 / q ** 4, ZERO], [ZERO, t ** 2]]:
        return False, f"v0^2 on S- is {v0sq}"
    # joint map Cl_q -> End(S+) + End(S-) is injective
    rows = []
    for i in range(8):
        b = ClqElem.basis(i)
        rows.append([x for sign in (1, -1) for r in clq.spin_rep(sign, b) for x in r])
    if rank(rows) != 8:
        return False, f"joint spin map has rank {rank(rows)}"
    for sign in (1, -1):
        mats = [[x for r in clq.spin_rep(sign, ClqElem.basis(i)) for x in r] for i in range(8)]
        if rank(mats) != 4:
            return False, "spin representation is not onto 2x2 matrices"
    return True


def _spin_uq_checks():
    s_plus, s_minus = [ONE, ZERO], [ZERO, ONE]
    ok = _all(
        [
            ("F s+_1", clq.spin_uq_action(1, F, s_plus), [ZERO, ONE]),
            ("E s-_-1", clq.spin_uq_action(-1, E, s_minus), [-ONE, ZERO]),
        ]
    )
    if ok is not True:
        return ok
    return clq.spin_compatibility_check()


def _phi_checks():
    for i in range(8):
        b = ClqElem.basis(i)
        if clq.phi_inv(clq.phi(b)) != b:
            return False, f"phi_inv(phi(b{i}))"
        cb = ClElem.basis(i)
        if clq.phi(clq.phi_inv(cb)) != cb:
            return False, f"phi(phi_inv(c{i}))"
        for j in range(8):
            b2 = ClqElem.basis(j)
            if clq.phi(b * b2) != clq.phi(b) * clq.phi(b2):
                return False, f"phi(b{i} b{j})"
            cb2 = ClElem.basis(j)
            if clq.phi_inv(cb * cb2) != clq.phi_inv(cb) * clq.phi_inv(cb2):
                return False, f"phi_inv(c{i} c{j})"
    letters = [clq.phi(x) for x in (clq.v2, clq.v0, clq.vm2)]
    for n, gen in enumerate(clq.ideal_generators()):
        val = ClElem()
        for coef, word in gen:
            img = clq.CL_ONE
            for x in word:
                img = img * letters[x]
            val = val + img * coef
        if not val.is_zero():
            return False, f"phi does not kill generator {n}"
    h = clq.h
    return _all(
        [
            ("phi_inv(h)", clq.phi_inv(h), clq.v0 * (r2 / t) - clq.v2 * clq.v0 * clq.vm2 * (r2 * (q ** 2 - 1) / (c * t * (q ** 2 + 1)))),
            ("phi(v0 v2)", clq.phi(clq.v0 * clq.v2), clq.phi(clq.v2) * clq.phi(clq.v0) * -q ** -2),
        ]
    )


def _classical_checks():
    e, f, h = clq.e, clq.f, clq.h
    return _all(
        [
            ("h h", h * h, ClElem.scalar(2)),
            ("ef + fe", e * f + f * e, ClElem.scalar(2)),
            ("(eh)f", (e * h) * f, e * (h * f)),
            ("e e", e * e, ClElem()),
            ("eh + he", e * h + h * e, ClElem()),
        ]
    )


def _alpha_checks():
    gens = {"E": E, "F": F, "K": K, "Ki": Ki}
    for name, fn, one in (("alpha", clq.alpha, clq.CLQ_ONE), ("alpha0", clq.alpha0, clq.CL_ONE)):
        a = {g: fn(x) for g, x in gens.items()}
        rels = [
            ("K Ki", a["K"] * a["Ki"], one),
            ("K E", a["K"] * a["E"], a["E"] * a["K"] * q ** 2),
            ("K F", a["K"] * a["F"], a["F"] * a["K"] * q ** -2),
            ("EF - FE", a["E"] * a["F"] - a["F"] * a["E"], (a["K"] - a["Ki"]) * (q - q ** -1).inverse()),
        ]
        for label, lhs, rhs in rels:
            if lhs != rhs:
                return False, f"{name}: {label}"
    for x in (E, F, K, Ki, X, Y, Z):
        if clq.phi(clq.alpha(x)) != clq.alpha0(x):
            return False, f"alpha0 differs from phi o alpha on {x}"
    e, f, h = clq.e, clq.f, clq.h
    return _all(
        [
            ("alpha0(K)", clq.alpha0(K), e * f * ((q ** 2 - 1) / (2 * q)) + clq.CL_ONE * q ** -1),
            ("alpha(Z)", clq.alpha(Z), clq.v2 * clq.vm2 * c.inverse() - clq.CLQ_ONE),
            ("alpha(Y)", clq.alpha(Y), clq.v0 * clq.vm2 * (-q / ((q ** 2 + 1) * c))),
            ("alpha0(Z)", clq.alpha0(Z), e * f * ((q ** 2 + 1) / (2 * q ** 2)) - clq.CL_ONE),
            ("alpha0(Y)", clq.alpha0(Y), h * f * (-r2 / (4 * q))),
        ]
    )


def _filtration_checks():
    """phi maps the word-length filtration onto the classical filtration subspaces, multiplicatively."""
    spans = clq.filtration_spans()
    degs = clq.degree_spans()
    for d in range(4):
        target = [x.coords for x in spans[d]]
        images = [clq.phi(x).coords for x in degs[d]]
        if rank(target) != len(target) or rank(images) != len(images) or rank(target + images) != len(target):
            return False, f"level {d} differs"
    for i in range(4):
        for j in range(4 - i):
            for a in spans[i]:
                for b in spans[j]:
                    if not in_span([x.coords for x in spans[i + j]], (a * b).coords):
                        return False, f"F{i} F{j} not in F{i + j}"
    return True


def clq_checks() -> list:
    return [
        Check("clq.ideal-generators", "the six ideal generators vanish", _ideal_generators_vanish),
        Check("clq.associativity", "associativity on all basis triples", _clq_associativity),
        Check("clq.table-examples", "straightening rules", _table_examples),
        Check("clq.gamma", "gamma is central with scalar square", _gamma_checks),
        Check("clq.grading", "Z/2 grading", _grading),
        Check("clq.uq-action", "U_q action on Cl_q", _uq_action_examples),
        Check("clq.uq-module-algebra", "Cl_q is a U_q module algebra", _uq_action_module_algebra),
        Check("clq.spin", "spin modules S+ and S-", _spin_checks),
        Check("clq.spin-uq", "compatible U_q action on spin modules", _spin_uq_checks),
        Check("clq.phi", "isomorphism with the classical Clifford algebra", _phi_checks),
        Check("clq.classical", "classical Clifford relations", _classical_checks),
        Check("clq.alpha", "algebra maps alpha and alpha0", _alpha_checks),
        Check("clq.filtration", "filtration of the classical Clifford algebra", _filtration_checks),
    ]


# --- braidings ----------------------------------------------------------------------------------


def _sigma_R_examples():
    def flat(pairs):
        return {(str(u), str(v)) for u, v in pairs}

    r1 = br.sigma_R_cl_uq(clq.v2, X)
    r2_ = br.sigma_R_cl_uq(clq.v0, casimir())
    r3 = br.sigma_R_cl_uq(clq.CLQ_ONE, Y)
    return _all(
        [
            ("v2 (x) X", flat(r1), flat([(X * q ** 2, clq.v2)])),
            ("v0 (x) C", flat(r2_), flat([(casimir(), clq.v0)])),
            ("1 (x) Y", flat(r3), flat([(Y, clq.CLQ_ONE)])),
        ]
    )


def _sigma_R_table():
    V = [clq.v2, clq.v0, clq.vm2]

    def norm(pairs):
        d: dict = {}
        for cl, u in pairs:
            for i, cc in enumerate(cl.coords):
                if cc.is_zero():
                    continue
                for m, uc in u.terms.items():
                    d[(i, m)] = d.get((i, m), ZERO) + cc * uc
        return {k: v for k, v in d.items() if not v.is_zero()}

    for (u, j), entry in tables.SIGMA_R_ROWS.items():
        got = norm(br.sigma_R_uq_cl(tables.UQ_LETTERS[u], V[j]))
        want = norm([(V[a] * coef, tables.UQ_LETTERS[b]) for coef, a, b in entry])
        if got != want:
            return False, f"row {u}, column {clq.LETTERS[j]}"
    return True


def _flat_mod(out):
    flat: dict = {}
    for (kk, s), v in out:
        for i, cc in enumerate(v.coords):
            if not cc.is_zero():
                flat[(kk, i)] = flat.get((kk, i), ZERO) + s * cc
    return {k: v for k, v in flat.items() if not v.is_zero()}


def _sigma_R_module_formulas():
    mod = md.Module.verma()
    for k in range(0, 4):
        want_v2 = {(k, 1): L * q ** (-2 * k)}
        want_v0 = {(k, 2): ONE, (k + 1, 1): -L * q ** (-3 * k - 4) * (1 + q ** 2) * (q ** (2 * k + 2) - 1)}
        want_vm2 = {
            (k, 3): L.inverse() * q ** (2 * k),
            (k + 1, 2): q ** (-1 - k) * (q ** (2 * k + 2) - 1),
            (k + 2, 1): -L * q ** (-4 * k - 6) * (q ** (2 * k + 2) - 1) * (q ** (2 * k + 4) - 1),
        }
        for v, want in ((clq.v2, want_v2), (clq.v0, want_v0), (clq.vm2, want_vm2)):
            got = _flat_mod(br.sigma_R_cl_mod(v, k, mod))
            if got != want:
                return False, f"{v} (x) w at depth {k}: got {got}"
    return True


def _sigma_R_VV_checks():
    s = br.sigma_R_VV()
    ident = identity(9)
    prod = ident
    for ev in br.EIGENVALUES:
        prod = matmul(prod, matadd(s, ident, -ev))
    if not is_zero_matrix(prod):
        return False, "minimal polynomial fails"
    vecs, projs = br.decompose_VV()
    for w, ev in zip(vecs, br.EIGENVALUES):
        if br.apply(s, w) != [ev * x for x in w]:
            return False, f"eigenvalue {ev}"
    total = matadd(matadd(projs[0], projs[1]), projs[2])
    if total != ident:
        return False, "projectors do not sum to the identity"
    # the same matrix rebuilt from the tabulated components
    for weight, p in zip((4, 2, 0), projs):
        for v in tables.VV_COMPONENTS[weight]:
            vec = br.vv_vector(v)
            if br.apply(p, vec) != vec:
                return False, f"tabulated vector {v} not in the weight-{weight} component"
    return True


def _hw_vectors():
    vecs, _ = br.decompose_VV()
    targets = [tables.VV_COMPONENTS[w][0] for w in (4, 2, 0)]
    for v, target in zip(vecs, targets):
        tv = br.vv_vector(target)
        if rank([v, tv]) != 1:
            return False, f"{v} is not proportional to {tv}"
    return True


def _equivariance():
    st = br.sigma_tilde()
    s = br.sigma_R_VV()
    for g in ("E", "F", "K"):
        a = br.tensor_action(g)
        if matmul(a, s) != matmul(s, a) or matmul(a, st) != matmul(st, a):
            return False, f"does not commute with {g}"
    return True


def _sigma_tilde_checks():
    st = br.sigma_tilde()
    if matmul(st, st) != identity(9):
        return False, "sigma~ is not an involution"
    for (a, b), (tensor_part, scalar_part, form) in tables.SIGMA_TILDE_ROWS.items():
        x = br.vv_vector([(ONE, a, b)])
        got = [-y for y in br.apply(st, x)]
        if got != br.vv_vector(tensor_part):
            return False, f"row {clq.LETTERS[a]} (x) {clq.LETTERS[b]}"
        if scalar_part != br.bilinear_form(a, b) or form != br.bilinear_form(a, b):
            return False, f"form value on {clq.LETTERS[a]}, {clq.LETTERS[b]}"
    return True


def _form_checks():
    ok = _all(
        [
            ("<v2, vm2>", br.bilinear_form("v2", "vm2"), c),
            ("<v2, v2>", br.bilinear_form("v2", "v2"), ZERO),
        ]
    )
    if ok is not True:
        return ok
    return br.check_ad_invariance()


def _truncation():
    for i in range(8):
        v = ClqElem.basis(i)
        for _ in range(4):
            v = clq.uq_action_clq(E, v)
        if not v.is_zero():
            return False, f"E^4 does not kill basis element {i}"
    return True


def _r_inverse_series():
    samples = [(X, clq.vm2), (Y, clq.v2), (Z, clq.v0), (casimir(), clq.v2 * clq.vm2), (E * F, clq.vm2)]
    for y, v in samples:
        exact = br.sigma_plus_cl_uq(v, y)
        exact_d: dict = {}
        for u, cl in exact:
            for m, uc in u.terms.items():
                for i, cc in enumerate(cl.coords):
                    if not cc.is_zero():
                        exact_d[(m, i)] = exact_d.get((m, i), ZERO) + uc * cc
        exact_d = {k: x for k, x in exact_d.items() if not x.is_zero()}
        if br.r_inverse_series(y, v) != exact_d:
            return False, f"series with [m]_q! differs on ({y}, {v})"
    return True


def braid_checks() -> list:
    return [
        Check("braid.sigma-R-examples", "R-matrix braiding of Cl_q past U_q", _sigma_R_examples),
        Check("braid.sigma-R-table", "tabulated braiding of X, Z, Y against v2, v0, vm2", _sigma_R_table),
        Check("braid.sigma-R-module", "braiding of v2, v0, vm2 past Verma vectors", _sigma_R_module_formulas),
        Check("braid.sigma-R-VV", "eigenvalues of the braiding on V (x) V", _sigma_R_VV_checks),
        Check("braid.highest-weight-vectors", "highest weight vectors of V (x) V", _hw_vectors),
        Check("braid.equivariance", "braidings commute with the diagonal action", _equivariance),
        Check("braid.sigma-tilde-table", "normalized braiding and form values", _sigma_tilde_checks),
        Check("braid.form", "invariant bilinear form", _form_checks),
        Check("braid.ideal-span", "ideal generators span the shifted symmetric part", br.ideal_generators_check),
        Check("braid.flatness", "dimensions of the quantum exterior algebra", lambda: _eq(br.lambda_q_dims(4), [1, 3, 3, 1, 0])),
        Check("braid.truncation", "E^4 kills the Clifford basis", _truncation),
        Check("braid.r-inverse-series", "series for the inverse R-matrix", _r_inverse_series),
    ]


# --- Weil algebra --------------------------------------------------------------------------------


def _wq_examples():
    tensor = weil.tensor
    one_v2 = tensor(None, clq.v2)
    x1 = tensor(X, None)
    return _all(
        [
            ("(1 ox v2)(X ox 1)", weil.wq_mul(one_v2, x1), tensor(X, clq.v2) * q ** 2),
            ("(X ox 1)(1 ox v2)", weil.wq_mul(x1, one_v2), tensor(X, clq.v2)),
            ("(1 ox v2)+(X ox 1)", weil.wq_mul_plus(one_v2, x1), tensor(X, clq.v2) * q ** -2),
        ]
    )


def _wq_associativity():
    rng = random.Random(default_seed() + 6)
    pool_u = [E, F, K, Ki, casimir()]
    samples = []
    for _ in range(6):
        samples.append(
            tuple(weil.tensor(rng.choice(pool_u), ClqElem.basis(rng.randrange(8))) for _ in range(3))
        )
    v0, v2 = weil.tensor(None, clq.v0), weil.tensor(None, clq.v2)
    yy = weil.tensor(Y, None)
    samples.append((v0, yy, v2))
    for mul in (weil.wq_mul, weil.wq_mul_plus):
        for a, b, d in samples:
            if mul(mul(a, b), d) != mul(a, mul(b, d)):
                return False, f"{mul.__name__} on {a}; {b}; {d}"
            one = weil.WqElem.scalar(1)
            if mul(one, a) != a or mul(a, one) != a:
                return False, f"unit law for {mul.__name__}"
    return True


def _dirac_coefficients():
    d = weil.dirac()
    cubic = weil.CUBIC_COEFFICIENT
    C = casimir()
    for mono, coef in C.terms.items():
        if d.coefficient(mono, 7) != coef * cubic:
            return False, f"cubic coefficient at {mono}"
    return _all(
        [
            ("X ox vm2", d.coefficient((0, 0, 1), 3), c.inverse()),
            ("cubic", cubic, -((q ** 2 - 1) ** 2) / (2 * q * (q ** 2 + 1) * c ** 2)),
        ]
    )


def _dirac_square():
    d = weil.dirac()
    sq = weil.wq_mul(d, d)
    rhs = weil.dirac_squared_rhs()
    if sq != rhs:
        return False, f"difference {sq - rhs}"
    dp = weil.dirac_plus()
    sqp = weil.wq_mul_plus(dp, dp)
    if sqp != rhs:
        return False, f"plus difference {sqp - rhs}"
    return True


def _dirac_square_central():
    sq = weil.dirac_squared_rhs()
    for g in weil.generators():
        comm = weil.wq_mul(sq, g) - weil.wq_mul(g, sq)
        if not comm.is_zero():
            return False, f"commutator with {g}: {comm}"
    return True


def _cq_form():
    coeffs = weil.cq_coefficients()
    want = [(q ** 2 + 1) / (4 * q * c), (q ** 2 + 1) ** 2 / (4 * q ** 2 * c), (1 + q ** 2) * (q ** 2 - 1) ** 2 / (16 * q ** 3 * c)]
    if coeffs != want:
        return False, f"coefficients {coeffs}"
    return _eq(weil.dirac_in_cq_form(1 / (2 * c ** 2)), weil.dirac())


def _limit_q1():
    vals = [eval_q1(x) for x in weil.cq_coefficients()]
    return _eq(vals, [1 / (2 * c), c.inverse(), ZERO])


def _invariance():
    d = weil.dirac()
    for x in (E, F, K, Ki):
        img = weil.uq_action_wq(x, d)
        if img != d * counit(x):
            return False, f"{x} acting on D_q gives {img}"
    return _eq(weil.uq_action_wq(E, weil.tensor(None, clq.vm2)), weil.tensor(None, clq.v0))


def _chi_checks():
    for n, rel in enumerate(weil.chi_letter_relations()):
        if not rel.is_zero():
            return False, f"relation {n} maps to {rel}"
    if not weil.chi_commutation_check():
        return False, "chi images do not commute with U_q"
    for i in range(8):
        for j in range(8):
            a, b = ClqElem.basis(i), ClqElem.basis(j)
            if weil.chi_minus(a * b) != weil.chi_minus(a) * weil.chi_minus(b):
                return False, f"chi on b{i} b{j}"
    return True


def _zeta_checks():
    shown = weil.zeta_closed_forms()
    e, f, h = clq.e, clq.f, clq.h
    z = {n: weil.zeta_minus(x) for n, x in (("e", e), ("f", f), ("h", h))}
    one = weil.WqElem.scalar(1)
    checks = [
        ("zeta(e)", z["e"], shown["e"]),
        ("zeta(f)", z["f"], shown["f"]),
        # the reference form of zeta(h) doubles the cubic term
        (
            "zeta(h)",
            z["h"] - shown["h"],
            weil.tensor(None, clq.v2 * clq.v0 * clq.vm2) * (r2 * (q ** 2 - 1) / (c * (1 + q ** 2) * t)),
        ),
        ("zeta(h)^2", z["h"] * z["h"], one * 2),
        ("ef + fe", z["e"] * z["f"] + z["f"] * z["e"], one * 2),
    ]
    return _all(checks)


def _unbraided():
    readings = weil.dirac_unbraided_readings()
    if not readings["(q^2-1)EF"]:
        return False, "the q^2-1 reading does not reproduce D_q"
    return weil.dirac_unbraided_check()


def _smash():
    rng = random.Random(default_seed() + 7)
    pool = [K, Ki, E]
    samples = [(random_uq(rng, 2, 1), rng.choice(pool), random_uq(rng, 2, 1), rng.choice(pool)) for _ in range(8)]
    return weil.smash_product_check(samples)


def _stars():
    res = weil.star_theorem_checks()
    bad = [k for k, v in res.items() if not v]
    if bad:
        return False, f"failing forms: {bad}"
    g = weil.tensor(None, clq.gamma())
    v0 = weil.tensor(None, clq.v0)
    if weil.star(weil.star(v0, weil.SL2R_STAR), weil.SL2R_STAR) != v0:
        return False, "sl2R star is not involutive"
    if weil.star(g, weil.SL2R_STAR) != g:
        return False, "gamma not fixed by the sl2R star"
    for form in (weil.RealForm.SU2, weil.RealForm.SU11):
        for smap in weil.real_pair(form):
            if weil.star(g, smap) != g:
                return False, f"gamma not fixed by {form.value}"
    return True


def _star_antimultiplicative():
    rng = random.Random(default_seed() + 8)
    pool = [weil.tensor(u, ClqElem.basis(i)) for u in (E, F, K, Ki) for i in range(8)]
    for _ in range(8):
        a, b = rng.choice(pool), rng.choice(pool)
        if weil.star(weil.wq_mul(a, b), weil.SL2R_STAR) != weil.wq_mul(weil.star(b, weil.SL2R_STAR), weil.star(a, weil.SL2R_STAR)):
            return False, f"sl2R on {a}; {b}"
        for form in (weil.RealForm.SU2, weil.RealForm.SU11):
            to_plus, _ = weil.real_pair(form)
            if weil.star(weil.wq_mul(a, b), to_plus) != weil.wq_mul_plus(weil.star(b, to_plus), weil.star(a, to_plus)):
                return False, f"{form.value} on {a}; {b}"
    return True


def weil_checks() -> list:
    return [
        Check("weil.products", "braided products of U_q and Cl_q factors", _wq_examples),
        Check("weil.associativity", "associativity of both braided products", _wq_associativity),
        Check("weil.dirac-coefficients", "coefficients of the cubic Dirac element", _dirac_coefficients),
        Check("weil.dirac-square", "Dirac square formula", _dirac_square),
        Check("weil.dirac-square-central", "D_q^2 is central", _dirac_square_central),
        Check("weil.casimir-q-form", "D_q^2 as a polynomial in C_q", _cq_form),
        Check("weil.limit-q1", "classical limit of the C_q coefficients", _limit_q1),
        Check("weil.invariance", "D_q is U_q invariant", _invariance),
        Check("weil.chi", "unbraiding map chi", _chi_checks),
        Check("weil.zeta", "images of e, f, h under zeta", _zeta_checks),
        Check("weil.unbraided-dirac", "unbraided expression for D_q", _unbraided),
        Check("weil.smash-product", "smash product identity", _smash),
        Check("weil.star-theorems", "star theorems for sl2(R), su2, su(1,1)", _stars),
        Check("weil.star-antimultiplicative", "star maps reverse products", _star_antimultiplicative),
    ]


# --- modules -------------------------------------------------------------------------------------


def _module_actions():
    mod = md.Module.verma()
    w = lambda k: md.ModuleVector.basis(mod, k, 1)  # noqa: E731
    fin = md.Module.finite(3)
    wf = lambda k: md.ModuleVector.basis(fin, k, 1)  # noqa: E731
    ok = _all(
        [
            ("E w1", md.verma_act(E, w(1)), w(0) * md.qint_shifted(L, 0)),
            ("F w0", md.verma_act(F, w(0)), w(1)),
            ("E w0", md.verma_act(E, w(0)), md.ModuleVector(mod, -1, {})),
            ("F w_-n", md.finite_act(3, F, wf(3)), md.ModuleVector(fin, -1, {})),
            ("E w_-n", md.finite_act(3, E, wf(3)), wf(2)),
            ("E w_-n+2", md.finite_act(3, E, wf(2)), wf(1) * qint(2)),
        ]
    )
    if ok is not True:
        return ok
    # orbit of the highest weight vector
    v, count = wf(0), 0
    while not v.is_zero():
        count += 1
        v = md.finite_act(3, F, v)
    return _eq(count, 4)


def _module_axioms():
    rng = random.Random(default_seed() + 9)
    for _ in range(10):
        module = random_module(rng)
        a, b = random_uq(rng), random_uq(rng)
        w = random_module_vector(rng, module)
        if md.verma_act(a * b, w) != md.verma_act(a, md.verma_act(b, w)):
            return False, f"a={a}; b={b}; w={w}"
    return True


def _block_matrix():
    for k in range(1, 13):
        m = md.dirac_block(k)
        if m != md.closed_form_block(k):
            return False, f"block {k}: {m}"
    return True


def _spectra():
    mu = md.eigenvalue()
    for sign in (-1, 1):
        for k in range(1, 13):
            sp = md.spectrum(k, sign=sign)
            tr, det = sp.characteristic_polynomial()
            if not tr.is_zero() or det != -mu * mu:
                return False, f"block {k} on S{sign:+d}: trace {tr}, det {det}"
            for ev, vec in sp.eigenpairs:
                which = 1 if ev == mu else -1
                if vec != md.eigenvector_formula(k, which, sign):
                    return False, f"eigenvector for {ev} on block {k}, S{sign:+d}"
        top = md.dirac_singleton(sign=sign)
        if top != -sign * mu:
            return False, f"top vector on S{sign:+d}: {top}"
    return True


def _central_scalars():
    mu = md.eigenvalue()
    ok = _all(
        [
            ("Casimir", md.casimir_on_verma(), md.casimir_formula()),
            ("D_q^2", md.dsq_on_verma(), md.dsq_formula()),
            ("eigenvalue squared", mu * mu, md.dsq_on_verma()),
            ("D_q^2 at lambda=-1", md.dsq_on_verma(md.Module.verma(-1)), ZERO),
        ]
    )
    if ok is not True:
        return ok
    d = weil.dirac()
    for sign in (-1, 1):
        for k in range(0, 4):
            for spin in (1, -1):
                if k == 0 and spin == -1:
                    continue
                w = md.ModuleVector.basis(md.Module.verma(), k, spin, sign)
                if md.wq_act(d, md.wq_act(d, w)) != w * md.dsq_on_verma():
                    return False, f"D_q^2 on depth {k}, spin {spin}, S{sign:+d}"
    return True


def _block_invariance():
    for module in (md.Module.verma(), md.Module.verma(-1), md.Module.finite(4)):
        for sign in (-1, 1):
            if not md.block_invariance_check(module, 12, sign):
                return False, f"{module} on S{sign:+d}"
    return True


def _jordan():
    for k in range(1, 6):
        jf = md.jordan_form(k)
        if is_zero_matrix(jf.matrix) or not is_zero_matrix(matmul(jf.matrix, jf.matrix)):
            return False, f"block {k} at lambda=-1 is not a nonzero nilpotent"
        if matmul(jf.matrix, jf.change_of_basis) != matmul(jf.change_of_basis, jf.form) or rank(jf.change_of_basis) != 2:
            return False, f"bad similarity for block {k}"
    if md.dirac_singleton(md.Module.verma(-1)) != ZERO:
        return False, "top vector at lambda=-1 not in the kernel"
    try:
        md.spectrum(1, md.Module.verma(-1))
        return False, "degenerate block accepted"
    except ValueError:
        return True


def _cohomology():
    for sign in (-1, 1):
        r = md.dirac_cohomology(None, "verma", 12, sign)
        if r.dimension != 0:
            return False, f"generic lambda on S{sign:+d}: {r.dimension}"
        for n in range(6):
            for kind in ("verma", "finite"):
                r = md.dirac_cohomology(n, kind, 12, sign)
                if r.dimension != 0:
                    return False, f"lambda={n} {kind} on S{sign:+d}: {r.dimension}"
        r = md.dirac_cohomology(-1, "verma", 12, sign)
        basis = r.basis()
        want = md.ModuleVector.basis(md.Module.verma(-1), 0, 1, sign)
        if r.dimension != 1 or len(basis) != 1 or basis[0] != want:
            return False, f"lambda=-1 on S{sign:+d}: {[str(b) for b in basis]}"
    return True


def _finite_spectrum():
    for n in range(1, 5):
        mod = md.Module.finite(n)
        mu = md.eigenvalue(mod)
        for sign in (-1, 1):
            for k in range(1, n + 1):
                sp = md.spectrum(k, mod, sign)
                if sorted(str(ev) for ev, _ in sp.eigenpairs) != sorted(str(x) for x in (mu, -mu)):
                    return False, f"V_{n} block {k}"
                for ev, vec in sp.eigenpairs:
                    which = 1 if ev == mu else -1
                    want = [specialize_L(x, n) for x in md.eigenvector_formula(k, which, sign)]
                    if vec != want:
                        return False, f"V_{n} eigenvector {which} on block {k}, S{sign:+d}"
            bottom = md.operator_block(weil.dirac(), mod, n + 1, sign)[0][0]
            if bottom != -sign * mu:
                return False, f"bottom vector of V_{n} on S{sign:+d}: {bottom}"
    return True


def module_checks() -> list:
    return [
        Check("modules.actions", "Verma and finite module actions", _module_actions),
        Check("modules.axioms", "module axioms", _module_axioms),
        Check("modules.block-invariance", "D_q preserves the blocks N_k", _block_invariance),
        Check("modules.block-matrix", "matrix of D_q on N_k", _block_matrix),
        Check("modules.spectra", "eigenvalues and eigenvectors of D_q", _spectra),
        Check("modules.central-scalars", "Casimir and D_q^2 on Verma modules", _central_scalars),
        Check("modules.jordan", "Jordan form at lambda = -1", _jordan),
        Check("modules.cohomology", "Dirac cohomology", _cohomology),
        Check("modules.finite-spectrum", "spectrum on finite-dimensional modules", _finite_spectrum),
        Check("modules.integration", "action of products equals composed actions", integration_check),
    ]


SUITES = {
    "scalars": scalar_checks,
    "uq": uq_checks,
    "clq": clq_checks,
    "braid": braid_checks,
    "weil": weil_checks,
    "modules": module_checks,
}
