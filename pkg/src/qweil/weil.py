"""The braided Weil algebra U_q(sl2) (x)_R Cl_q(sl2) and its cubic Dirac element.

An element is a finite combination of pairs (PBW monomial, Clifford basis
index).  The product of two pairs braids the inner Clifford factor past the
inner U_q factor and multiplies in each algebra:

    (x (x) v)(y (x) w) = sum_i x y_i (x) v_i w,   sigma_R(v (x) y) = sum_i y_i (x) v_i.

The opposite product uses the inverse of the flipped R-matrix instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import cliffordq as clq
from .braiding import braid_basis_monomial, braid_plus_basis_monomial
from .cliffordq import CLQ_WORDS, ClElem, ClqElem, register_cache
from .linalg import nullspace
from .scalars import ONE, ZERO, BarMode, RatFunc, Scalar, as_scalar, bar, c, eval_q1, q, r2, t
from .uqsl2 import (
    UNIT,
    E,
    F,
    K,
    Ki,
    UqElem,
    _mono_mul,
    casimir,
    coproduct,
    counit,
    uq_ad,
    uq_ad_right,
    X,
    Y,
    Z,
)


class WqElem:
    """Finite combination of (PBW monomial, Clifford basis index) pairs; immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def pure(cls, u: UqElem | None = None, v: ClqElem | None = None) -> "WqElem":
        if u is None:
            u = UqElem.scalar(1)
        if v is None:
            v = clq.CLQ_ONE
        out: dict = {}
        for mono, uc in u.terms.items():
            for i, vc in enumerate(v.coords):
                if not vc.is_zero():
                    out[(mono, i)] = uc * vc
        return cls(out)

    @classmethod
    def scalar(cls, s) -> "WqElem":
        return cls({(UNIT, 0): as_scalar(s)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: tuple, index: int) -> Scalar:
        return self.terms.get((mono, index), ZERO)

    def uq_part(self, index: int) -> UqElem:
        """The U_q factor multiplying Clifford basis element ``index``."""
        return UqElem({m: v for (m, i), v in self.terms.items() if i == index})

    def _coerce(self, other):
        if isinstance(other, WqElem):
            return other
        if isinstance(other, (int, Fraction, RatFunc, Scalar)):
            return WqElem.scalar(other)
        return None

    def __add__(self, other) -> "WqElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return WqElem(out)

    __radd__ = __add__

    def __neg__(self) -> "WqElem":
        return WqElem({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "WqElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "WqElem":
        return (-self) + other

    def __mul__(self, other) -> "WqElem":
        if isinstance(other, WqElem):
            return wq_mul(self, other)
        if isinstance(other, (UqElem, ClqElem)):
            return NotImplemented
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return WqElem({k: v * s for k, v in self.terms.items()})

    def __rmul__(self, other) -> "WqElem":
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return WqElem({k: s * v for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "WqElem":
        out = WqElem.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        from .uqsl2 import monomial_str

        parts = []
        for (m, i), v in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            parts.append(f"({v})*{monomial_str(m)} ox {clq.CLQ_NAMES[i]}")
        return " + ".join(parts)

    __repr__ = __str__


def tensor(u, v) -> WqElem:
    """u (x) v for a U_q element (or scalar) and a Clifford element (or scalar)."""
    if u is None:
        u = 1
    if v is None:
        v = 1
    if not isinstance(u, UqElem):
        u = UqElem.scalar(u)
    if not isinstance(v, ClqElem):
        v = ClqElem.scalar(v)
    return WqElem.pure(u, v)


# --- products ------------------------------------------------------------------------


def _product_of_pairs(braid, mx: tuple, i: int, my: tuple, j: int) -> tuple:
    mult = clq.clq_structure().mult
    out: dict = {}
    for (um, k), coef in braid(i, my):
        left = _mono_mul(mx, um)
        cl = mult[k][j]
        for lm, lc in left:
            lcc = coef * lc
            for idx, cc in enumerate(cl):
                if not cc.is_zero():
                    key = (lm, idx)
                    out[key] = out.get(key, ZERO) + lcc * cc
    return tuple((k, v) for k, v in out.items() if not v.is_zero())


@register_cache
@lru_cache(maxsize=None)
def _pair_product(mx: tuple, i: int, my: tuple, j: int) -> tuple:
    return _product_of_pairs(braid_basis_monomial, mx, i, my, j)


@register_cache
@lru_cache(maxsize=None)
def _pair_product_plus(mx: tuple, i: int, my: tuple, j: int) -> tuple:
    return _product_of_pairs(braid_plus_basis_monomial, mx, i, my, j)


def _mul_with(pair_product, x: WqElem, y: WqElem) -> WqElem:
    clq.clq_structure()
    out: dict = {}
    for (mx, i), cx in x.terms.items():
        for (my, j), cy in y.terms.items():
            cxy = cx * cy
            for key, v in pair_product(mx, i, my, j):
                out[key] = out[key] + cxy * v if key in out else cxy * v
    return WqElem(out)


def wq_mul(x: WqElem, y: WqElem) -> WqElem:
    return _mul_with(_pair_product, x, y)


def wq_mul_plus(x: WqElem, y: WqElem) -> WqElem:
    """Product of the opposite braided tensor product (braiding by R21^{-1})."""
    return _mul_with(_pair_product_plus, x, y)


# --- Dirac elements --------------------------------------------------------------------


def _quadratic_part() -> WqElem:
    return (
        tensor(X, clq.vm2)
        + tensor(Z, clq.v0) * (q / (1 + q ** 2))
        + tensor(Y, clq.v2) * q ** -2
    )


CUBIC_COEFFICIENT = -((q ** 2 - 1) ** 2) / (2 * q * (q ** 2 + 1) * c ** 2)


def _cubic_part() -> WqElem:
    return tensor(casimir(), clq.gamma()) * CUBIC_COEFFICIENT


def dirac() -> WqElem:
    return _quadratic_part() * c.inverse() + _cubic_part()


def dirac_plus() -> WqElem:
    return _quadratic_part() * (q ** 4 / c) + _cubic_part()


def dirac_squared_rhs() -> WqElem:
    C = casimir()
    return tensor(
        C * C * ((q ** 2 + 1) * (q ** 2 - 1) ** 2 / (4 * q ** 3 * c))
        - UqElem.scalar(q * (q ** 2 + 1) / ((q ** 2 - 1) ** 2 * c)),
        None,
    )


def generators() -> list:
    """Algebra generators E, F, K, K^-1 (x) 1 and 1 (x) v2, v0, vm2."""
    return [tensor(g, None) for g in (E, F, K, Ki)] + [tensor(None, v) for v in (clq.v2, clq.v0, clq.vm2)]


def commutes_with_generators(w: WqElem, mul=wq_mul) -> bool:
    return all((mul(w, g) - mul(g, w)).is_zero() for g in generators())


def dirac_squared_check() -> bool:
    rhs = dirac_squared_rhs()
    d = dirac()
    dp = dirac_plus()
    return wq_mul(d, d) == rhs and wq_mul_plus(dp, dp) == rhs


def casimir_polynomial(w: WqElem, degree: int = 2) -> list | None:
    """Coefficients [a0, a1, ...] with w = sum a_k C^k (x) 1, or None if no such expansion."""
    C = casimir()
    powers = [UqElem.scalar(1)]
    for _ in range(degree):
        powers.append(powers[-1] * C)
    if any(i != 0 for (_, i) in w.terms):
        return None
    target = w.uq_part(0)
    monos = set(target.terms)
    for p in powers:
        monos |= set(p.terms)
    monos = sorted(monos)
    rows = [[p.coefficient(m) for p in powers] + [-target.coefficient(m)] for m in monos]
    ker = nullspace(rows)
    for v in ker:
        if not v[-1].is_zero():
            inv = v[-1].inverse()
            return [x * inv for x in v[:-1]]
    return None


# C_q = 2C - CQ_SHIFT; with this shift the expansion of D_q^2 in C_q has
# finite coefficients at q = 1.
CQ_SHIFT = 2 * q * (q ** 2 + 1) / (q ** 2 - 1) ** 2


def casimir_q() -> UqElem:
    return casimir() * 2 - UqElem.scalar(CQ_SHIFT)


def cq_coefficients(shift: Scalar = CQ_SHIFT) -> list:
    """[b0, b1, b2] with D_q^2 = b2 C_q^2 + b1 C_q + b0, C_q = 2C - shift."""
    d = dirac()
    a0, a1, a2 = casimir_polynomial(wq_mul(d, d))
    # C = (C_q + shift) / 2
    half = as_scalar(Fraction(1, 2))
    b2 = a2 * half * half
    b1 = a2 * 2 * shift * half * half + a1 * half
    b0 = a2 * shift * shift * half * half + a1 * shift * half + a0
    return [b0, b1, b2]


def limit_q1_check() -> bool:
    b0, b1, b2 = (eval_q1(x) for x in cq_coefficients())
    return b2 == ZERO and b1 == c.inverse() and b0 == (2 * c).inverse()


def dirac_in_cq_form(constant: Scalar) -> WqElem:
    """Quadratic part minus (coefficient * C_q + constant) (x) gamma."""
    cq = casimir_q() * ((q ** 2 - 1) ** 2 / (4 * q * (q ** 2 + 1) * c ** 2)) + UqElem.scalar(constant)
    return _quadratic_part() * c.inverse() - tensor(cq, clq.gamma())


# --- U_q action and invariance ---------------------------------------------------------------


def uq_action_wq(x: UqElem, w: WqElem) -> WqElem:
    """x (u (x) v) = sum ad_{x(1)}(u) (x) x(2) v."""
    out = WqElem()
    for (m1, m2), coef in coproduct(x):
        a = UqElem({m1: ONE})
        b = UqElem({m2: ONE})
        for (mu, i), cu in w.terms.items():
            u = uq_ad(a, UqElem({mu: ONE}))
            if u.is_zero():
                continue
            v = clq.uq_action_clq(b, ClqElem.basis(i))
            if v.is_zero():
                continue
            out = out + WqElem.pure(u, v) * (coef * cu)
    return out


def dirac_invariance_check() -> bool:
    d = dirac()
    return all(uq_action_wq(x, d) == d * counit(x) for x in (E, F, K, Ki))


# --- unbraiding ----------------------------------------------------------------------------


def _chi_letters() -> list:
    return [
        tensor(Ki, clq.v2),
        tensor(None, clq.v0) + tensor(F, clq.v2) * ((q ** 2 + 1) * (q ** 2 - 1) / q ** 4),
        tensor(K, clq.vm2)
        + tensor(F * K, clq.v0) * ((1 - q ** 2) / q ** 3)
        - tensor(F * F * K, clq.v2) * ((q ** 2 - 1) ** 2 / q ** 7),
    ]


@register_cache
@lru_cache(maxsize=1)
def _chi_basis() -> tuple:
    letters = _chi_letters()
    out = []
    for word in CLQ_WORDS:
        img = WqElem.scalar(1)
        for x in word:
            img = img * letters[x]
        out.append(img)
    return tuple(out)


def chi_minus(v: ClqElem) -> WqElem:
    clq.clq_structure()
    out = WqElem()
    for coef, img in zip(v.coords, _chi_basis()):
        if not coef.is_zero():
            out = out + img * coef
    return out


def chi_letter_relations() -> list:
    """chi(a) chi(b) - chi(straightened ab) for every straightening rule; all should vanish."""
    letters = _chi_letters()
    out = []
    for (a, b), repl in clq._TABLE.items():
        lhs = letters[a] * letters[b]
        rhs = WqElem()
        for coef, word in repl:
            img = WqElem.scalar(1)
            for x in word:
                img = img * letters[x]
            rhs = rhs + img * coef
        out.append(lhs - rhs)
    return out


def chi_commutation_check() -> bool:
    letters = _chi_letters()
    return all(
        (letters[i] * tensor(g, None) - tensor(g, None) * letters[i]).is_zero()
        for i in range(3)
        for g in (E, F, K)
    )


def zeta_minus(y: ClElem) -> WqElem:
    return chi_minus(clq.phi_inv(y))


def zeta_closed_forms() -> dict:
    """Reference closed forms for the images of e, h, f; the h entry doubles the cubic term."""
    ti = t.inverse()
    return {
        "e": tensor(Ki, clq.v2) * ti,
        "h": (
            tensor(None, clq.v0) * r2
            + tensor(F, clq.v2) * (2 * r2 * (q ** 2 - 1) / q ** 2)
            - tensor(None, clq.v2 * clq.v0 * clq.vm2) * (2 * r2 * (q ** 2 - 1) / (c * (1 + q ** 2)))
        )
        * ti,
        "f": (
            tensor(K, clq.vm2) * (2 * q)
            - (tensor(F * K, clq.v0) * q ** 4 + tensor(F * F * K, clq.v2) * (q ** 2 - 1)) * (2 * (q ** 2 - 1) / q ** 6)
        )
        * ti,
    }


def gamma0() -> ClElem:
    e, f, h = clq.e, clq.f, clq.h
    return (e * h * f + h) * as_scalar(Fraction(-1, 2))


def unbraided_middle(ef_coefficient: Scalar) -> UqElem:
    return (K - Ki) * (q / (q ** 2 - 1)) + E * F * ef_coefficient


def dirac_unbraided(ef_coefficient: Scalar) -> WqElem:
    """The Dirac element rebuilt from zeta images, for a given EF coefficient."""
    ze = zeta_minus(clq.e)
    zf = zeta_minus(clq.f)
    zh = zeta_minus(clq.h)
    zg = zeta_minus(gamma0())
    inner = (
        tensor(E * Ki, None) * zf * (2 * q).inverse()
        + tensor(unbraided_middle(ef_coefficient), None) * zh * (2 * r2 * q).inverse()
        + tensor(F, None) * ze
        + tensor(Ki, None) * zg * (r2 / 2)
    )
    return inner * (t / c)


UNBRAIDED_READINGS = {"(q^2-1)EF": q ** 2 - 1, "(1+q^2)EF": 1 + q ** 2}


def dirac_unbraided_readings() -> dict:
    """Which EF coefficient in the unbraided expression reproduces the Dirac element."""
    d = dirac()
    return {name: dirac_unbraided(coef) == d for name, coef in UNBRAIDED_READINGS.items()}


def right_ad_span_check(ef_coefficient: Scalar) -> bool:
    """span{EK^-1, middle, F, K^-1} is stable under the right adjoint action."""
    from .linalg import in_span

    span = [E * Ki, unbraided_middle(ef_coefficient), F, Ki]
    monos = sorted({m for x in span for m in x.terms})

    def vec(x: UqElem):
        extra = set(x.terms) - set(monos)
        if extra:
            return None
        return [x.coefficient(m) for m in monos]

    vs = [vec(x) for x in span]
    for g in (E, F, K, Ki):
        for x in span:
            img = vec(uq_ad_right(g, x))
            if img is None or not in_span(vs, img):
                return False
    return True


def dirac_unbraided_check() -> bool:
    """The unbraided expression equals the Dirac element and its U_q coefficients span a right-ad-stable space.

    Both hold with the EF coefficient q^2 - 1; with 1 + q^2 neither does.
    """
    coef = UNBRAIDED_READINGS["(q^2-1)EF"]
    return dirac_unbraided(coef) == dirac() and right_ad_span_check(coef)


def smash_product_check(samples) -> bool:
    """phi(a#h . a'#h') = phi(a#h) phi(a'#h') with phi(a#h) = a h, on (a, h, a', h') samples."""
    for a, h, a2, h2 in samples:
        lhs = UqElem()
        for (m1, m2), coef in coproduct(h):
            lhs = lhs + a * uq_ad(UqElem({m1: ONE}), a2) * UqElem({m2: ONE}) * h2 * coef
        if lhs != a * h * a2 * h2:
            return False
    return True


# --- real forms ------------------------------------------------------------------------------


class RealForm(enum.Enum):
    SL2R = "sl2R"
    SU2 = "su2"
    SU11 = "su11"


class StarVariant(enum.Enum):
    INV_REAL = "inv_real"
    MINUS_TO_PLUS = "minus_to_plus"
    PLUS_TO_MINUS = "plus_to_minus"


@dataclass(frozen=True)
class StarMap:
    form: RealForm
    variant: StarVariant
    mode: BarMode

    def __post_init__(self):
        if self.form is RealForm.SL2R:
            ok = self.mode is BarMode.UNIT_CIRCLE and self.variant is StarVariant.INV_REAL
        else:
            ok = self.mode is BarMode.REAL and self.variant is not StarVariant.INV_REAL
        if not ok:
            raise ValueError("incompatible real form")


def _uq_star_generators(form: RealForm) -> dict:
    if form is RealForm.SL2R:
        return {"E": -E, "F": -F, "K": K, "Ki": Ki}
    sign = 1 if form is RealForm.SU2 else -1
    return {"E": F * K * sign, "F": Ki * E * sign, "K": K, "Ki": Ki}


def _clq_star_letters(form: RealForm) -> list:
    if form is RealForm.SL2R:
        return [-clq.v2, clq.v0 * -q ** 2, clq.vm2 * -q ** 2]
    sign = 1 if form is RealForm.SU2 else -1
    return [clq.vm2 * (q ** 2 * sign), clq.v0, clq.v2 * (q ** -2 * sign)]


def _bar_coeffs(x, mode: BarMode):
    if isinstance(x, UqElem):
        return UqElem({m: bar(v, mode) for m, v in x.terms.items()})
    return type(x)([bar(v, mode) for v in x.coords])


def uq_star(x: UqElem, form: RealForm, mode: BarMode) -> UqElem:
    gens = _uq_star_generators(form)
    out = UqElem()
    for (a, b, e_), coef in x.terms.items():
        img = UqElem.scalar(1)
        for _ in range(e_):
            img = img * gens["E"]
        kg = gens["K"] if b > 0 else gens["Ki"]
        for _ in range(abs(b)):
            img = img * kg
        for _ in range(a):
            img = img * gens["F"]
        out = out + img * bar(coef, mode)
    return out


def clq_star(v: ClqElem, form: RealForm, mode: BarMode) -> ClqElem:
    letters = _clq_star_letters(form)
    out = ClqElem()
    for coef, word in zip(v.coords, CLQ_WORDS):
        if coef.is_zero():
            continue
        img = clq.CLQ_ONE
        for x in reversed(word):
            img = img * letters[x]
        out = out + img * bar(coef, mode)
    return out


def star(w: WqElem, smap: StarMap) -> WqElem:
    """(a (x) b)* = (1 (x) b*)(a* (x) 1) in the target product."""
    mul = wq_mul_plus if smap.variant is StarVariant.MINUS_TO_PLUS else wq_mul
    out = WqElem()
    for (m, i), coef in w.terms.items():
        a = uq_star(UqElem({m: ONE}), smap.form, smap.mode)
        b = clq_star(ClqElem.basis(i), smap.form, smap.mode)
        out = out + mul(tensor(None, b), tensor(a, None)) * bar(coef, smap.mode)
    return out


SL2R_STAR = StarMap(RealForm.SL2R, StarVariant.INV_REAL, BarMode.UNIT_CIRCLE)


def real_pair(form: RealForm) -> tuple:
    return (
        StarMap(form, StarVariant.MINUS_TO_PLUS, BarMode.REAL),
        StarMap(form, StarVariant.PLUS_TO_MINUS, BarMode.REAL),
    )


def star_theorem_checks() -> dict:
    d = dirac()
    dp = dirac_plus()
    out = {"sl2R": star(d, SL2R_STAR) == d}
    for form in (RealForm.SU2, RealForm.SU11):
        to_plus, to_minus = real_pair(form)
        out[form.value] = star(d, to_plus) == dp and star(dp, to_minus) == d
    return out
