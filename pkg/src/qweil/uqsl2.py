"""The Hopf algebra U_q(sl2) in the PBW basis F^a K^b E^e.

Relations: K E = q^2 E K, K F = q^-2 F K, E F - F E = (K - K^-1)/(q - q^-1).
Products are straightened with these three exchange rules; no Groebner
machinery is involved.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Union

from .scalars import ONE, ZERO, Scalar, as_scalar, q

Monomial = tuple  # (a, b, e) for F^a K^b E^e

UNIT = (0, 0, 0)


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if not v.is_zero()}


def _accumulate(target: dict, key, value: Scalar) -> None:
    if key in target:
        target[key] = target[key] + value
    else:
        target[key] = value


class UqElem:
    """Finite Scalar combination of PBW monomials; immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = _clean(terms or {})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, e: int = 0, coef=1) -> "UqElem":
        return cls({(a, b, e): as_scalar(coef)})

    @classmethod
    def scalar(cls, s) -> "UqElem":
        return cls({UNIT: as_scalar(s)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(mono, ZERO)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other) -> "UqElem":
        other = _as_uq(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(out, k, v)
        return UqElem(out)

    __radd__ = __add__

    def __neg__(self) -> "UqElem":
        return UqElem({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "UqElem":
        return self + (-_as_uq(other))

    def __rsub__(self, other) -> "UqElem":
        return _as_uq(other) - self

    def __mul__(self, other) -> "UqElem":
        if isinstance(other, UqElem):
            return uq_mul(self, other)
        s = as_scalar(other)
        return UqElem({k: v * s for k, v in self.terms.items()})

    def __rmul__(self, other) -> "UqElem":
        s = as_scalar(other)
        return UqElem({k: s * v for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "UqElem":
        if n < 0:
            if len(self.terms) == 1:
                (a, b, e), coef = next(iter(self.terms.items()))
                if a == 0 and e == 0:
                    return UqElem({(0, -b * -n, 0): coef ** n})
            raise ValueError("only K-powers are invertible")
        out = UqElem.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        try:
            other = _as_uq(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({coef})*{monomial_str(m)}" for m, coef in sorted(self.terms.items()))

    __repr__ = __str__


def _as_uq(x) -> UqElem:
    if isinstance(x, UqElem):
        return x
    return UqElem.scalar(x)


def monomial_str(m: Monomial) -> str:
    a, b, e = m
    parts = []
    if a:
        parts.append("F" if a == 1 else f"F^{a}")
    if b:
        parts.append("K" if b == 1 else f"K^{b}")
    if e:
        parts.append("E" if e == 1 else f"E^{e}")
    return "*".join(parts) if parts else "1"


# --- straightening ---------------------------------------------------------

_QINV = q ** -1
_DQ_INV = (q - _QINV).inverse()


def _times_F(terms: dict) -> dict:
    """Right multiplication of a PBW combination by F."""
    out: dict = {}
    for (a, b, e), coef in terms.items():
        _accumulate(out, (a + 1, b, e), coef * q ** (-2 * b))
        if e:
            # E^e F = F E^e + sum_j (q^-2j K - q^2j K^-1)/(q-q^-1) E^(e-1)
            s_plus = sum((q ** (-2 * j) for j in range(e)), ZERO)
            s_minus = sum((q ** (2 * j) for j in range(e)), ZERO)
            _accumulate(out, (a, b + 1, e - 1), coef * s_plus * _DQ_INV)
            _accumulate(out, (a, b - 1, e - 1), -coef * s_minus * _DQ_INV)
    return out


@lru_cache(maxsize=None)
def _mono_mul(m1: Monomial, m2: Monomial) -> tuple:
    a2, b2, e2 = m2
    terms = {m1: ONE}
    for _ in range(a2):
        terms = _times_F(terms)
    if b2:
        # E^e K^n = q^(-2en) K^n E^e
        terms = {(a, b + b2, e): coef * q ** (-2 * e * b2) for (a, b, e), coef in terms.items()}
    if e2:
        terms = {(a, b, e + e2): coef for (a, b, e), coef in terms.items()}
    return tuple(_clean(terms).items())


def uq_mul(x: UqElem, y: UqElem) -> UqElem:
    out: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c12 = c1 * c2
            for m, coef in _mono_mul(m1, m2):
                _accumulate(out, m, c12 * coef)
    return UqElem(out)


E = UqElem.monomial(e=1)
F = UqElem.monomial(a=1)
K = UqElem.monomial(b=1)
Ki = UqElem.monomial(b=-1)
GENERATORS = {"E": E, "F": F, "K": K, "Ki": Ki}

Word = Iterable[Union[str, Scalar, int]]


def uq_normal_form(word: Word) -> UqElem:
    """Normal form of a product of generator names and scalar prefactors."""
    out = UqElem.scalar(1)
    for item in word:
        if isinstance(item, str):
            out = out * GENERATORS[item]
        else:
            out = out * as_scalar(item)
    return out


# --- Hopf structure -----------------------------------------------------------


class UqTensor:
    """Element of U_q(sl2) (x) U_q(sl2) with factorwise multiplication."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = _clean(terms or {})

    @classmethod
    def pure(cls, x: UqElem, y: UqElem) -> "UqTensor":
        out: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                _accumulate(out, (m1, m2), c1 * c2)
        return cls(out)

    def __add__(self, other: "UqTensor") -> "UqTensor":
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(out, k, v)
        return UqTensor(out)

    def __sub__(self, other: "UqTensor") -> "UqTensor":
        return self + UqTensor({k: -v for k, v in other.terms.items()})

    def __mul__(self, other: "UqTensor") -> "UqTensor":
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                left = _mono_mul(a1, a2)
                right = _mono_mul(b1, b2)
                c12 = c1 * c2
                for ml, cl in left:
                    for mr, cr in right:
                        _accumulate(out, (ml, mr), c12 * cl * cr)
        return UqTensor(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, UqTensor) and self.terms == other.terms

    def __iter__(self):
        return iter(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({coef})*{monomial_str(a)} (x) {monomial_str(b)}" for (a, b), coef in sorted(self.terms.items())
        )

    __repr__ = __str__


_ONE_T = UqTensor({(UNIT, UNIT): ONE})
_DELTA_GEN = {
    "E": UqTensor.pure(E, K) + UqTensor.pure(UqElem.scalar(1), E),
    "F": UqTensor.pure(F, UqElem.scalar(1)) + UqTensor.pure(Ki, F),
    "K": UqTensor.pure(K, K),
    "Ki": UqTensor.pure(Ki, Ki),
}


@lru_cache(maxsize=None)
def _delta_mono(m: Monomial) -> tuple:
    a, b, e = m
    out = _ONE_T
    for _ in range(a):
        out = out * _DELTA_GEN["F"]
    kg = _DELTA_GEN["K"] if b > 0 else _DELTA_GEN["Ki"]
    for _ in range(abs(b)):
        out = out * kg
    for _ in range(e):
        out = out * _DELTA_GEN["E"]
    return tuple(out.terms.items())


def coproduct(x: UqElem) -> UqTensor:
    out: dict = {}
    for m, coef in x.terms.items():
        for key, v in _delta_mono(m):
            _accumulate(out, key, coef * v)
    return UqTensor(out)


_S_GEN = {
    "E": -(E * Ki),
    "F": -(K * F),
}


@lru_cache(maxsize=None)
def _antipode_mono(m: Monomial) -> UqElem:
    a, b, e = m
    # anti-multiplicative: S(F^a K^b E^e) = S(E)^e S(K)^b S(F)^a
    out = UqElem.scalar(1)
    for _ in range(e):
        out = out * _S_GEN["E"]
    out = out * UqElem.monomial(b=-b)
    for _ in range(a):
        out = out * _S_GEN["F"]
    return out


def antipode(x: UqElem) -> UqElem:
    out = UqElem()
    for m, coef in x.terms.items():
        out = out + _antipode_mono(m) * coef
    return out


def counit(x: UqElem) -> Scalar:
    total = ZERO
    for (a, b, e), coef in x.terms.items():
        if a == 0 and e == 0:
            total = total + coef
    return total


def counit_tensor(x: UqTensor, side: int) -> UqElem:
    """(eps (x) id) for side=0, (id (x) eps) for side=1."""
    out: dict = {}
    for (m1, m2), coef in x.terms.items():
        drop, keep = (m1, m2) if side == 0 else (m2, m1)
        if drop[0] == 0 and drop[2] == 0:
            _accumulate(out, keep, coef)
    return UqElem(out)


@lru_cache(maxsize=None)
def _ad_mono(x: Monomial, y: Monomial) -> UqElem:
    yy = UqElem.monomial(*y)
    out = UqElem()
    for (m1, m2), coef in _delta_mono(x):
        out = out + UqElem.monomial(*m1) * yy * _antipode_mono(m2) * coef
    return out


def uq_ad(x: UqElem, y: UqElem) -> UqElem:
    """Left adjoint action ad_x(y) = sum x(1) y S(x(2))."""
    out: dict = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            for m, coef in _ad_mono(mx, my).terms.items():
                _accumulate(out, m, cx * cy * coef)
    return UqElem(out)


def uq_ad_right(x: UqElem, y: UqElem) -> UqElem:
    """Right adjoint action sum S(x(1)) y x(2)."""
    out = UqElem()
    for (m1, m2), coef in coproduct(x):
        out = out + antipode(UqElem.monomial(*m1)) * y * UqElem.monomial(*m2) * coef
    return out


def ad_weight(m: Monomial) -> int:
    """Weight of a PBW monomial under ad_K: K acts by q**ad_weight."""
    a, _, e = m
    return 2 * (e - a)


# --- distinguished elements -------------------------------------------------

X = E
Z = E * F * q ** -2 - F * E
Y = K * F
W = Ki


def casimir() -> UqElem:
    return E * F + (K * q ** -1 + Ki * q) * (q - q ** -1) ** -2


def casimir_alt() -> UqElem:
    return (K * q ** 2 + Ki) * (q / (q ** 2 - 1) ** 2) + F * E


def casimir_v() -> UqElem:
    """C_V = X Y + q/(1+q^2) Z^2 + q^-2 Y X."""
    return X * Y + Z * Z * (q / (1 + q ** 2)) + Y * X * q ** -2


def commutator(x: UqElem, y: UqElem) -> UqElem:
    return x * y - y * x


def is_central(x: UqElem) -> bool:
    return all(commutator(x, g).is_zero() for g in (E, F, K))
