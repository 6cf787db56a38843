"""Exact coefficient field Q(q, L, c)[t, r2].

``RatFunc`` is a reduced quotient of integer polynomials in the commuting
variables ``q``, ``L`` and ``c``.  ``Scalar`` adjoins two square roots:

    t  with  t**2 = c (q**2 + 1) / q
    r2 with  r2**2 = 2

so a scalar is ``a + b t + d r2 + e t r2`` with rational-function
coordinates.  ``L`` stands for ``q**lambda`` of a highest weight.

Polynomial arithmetic and gcds are delegated to ``python-flint``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

import flint

__all__ = [
    "RatFunc",
    "Scalar",
    "BarMode",
    "EvaluationError",
    "q",
    "L",
    "c",
    "t",
    "r2",
    "ONE",
    "ZERO",
    "as_scalar",
    "bar",
    "eval_q1",
    "specialize_L",
    "qint",
    "qint_shifted",
    "qfactorial",
]

_CTX = flint.fmpz_mpoly_ctx.get(("q", "L", "c"), "lex")
_VARS = ("q", "L", "c")
_Q, _L, _C = _CTX.gens()
_P1 = _CTX.from_dict({(0, 0, 0): 1})
_P0 = _CTX.from_dict({})


class EvaluationError(ValueError):
    """A substitution is not defined for the given value."""


def _poly_const(n: int):
    return _CTX.from_dict({(0, 0, 0): n}) if n else _P0


def _monomial(eq: int, el: int, ec: int):
    return _CTX.from_dict({(eq, el, ec): 1})


def _laurent_split(terms: dict) -> tuple:
    """Turn {(eq, el, ec): coef} with possibly negative eq/el into (poly, shift_q, shift_L).

    The represented Laurent polynomial equals poly * q**shift_q * L**shift_L.
    """
    if not terms:
        return _P0, 0, 0
    mq = min(e[0] for e in terms)
    ml = min(e[1] for e in terms)
    mq = min(mq, 0)
    ml = min(ml, 0)
    shifted = {}
    for (eq, el, ec), coef in terms.items():
        key = (eq - mq, el - ml, ec)
        shifted[key] = shifted.get(key, 0) + coef
    shifted = {k: v for k, v in shifted.items() if v}
    return _CTX.from_dict(shifted), mq, ml


class RatFunc:
    """Canonical fraction ``num / den`` of integer polynomials in q, L, c.

    The numerator and denominator are coprime and the denominator has a
    positive leading coefficient (lex order q > L > c); equality is
    structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if isinstance(num, int):
            num = _poly_const(num)
        if den is None:
            den = _P1
        elif isinstance(den, int):
            den = _poly_const(den)
        if not _reduced:
            if den.is_zero():
                raise ZeroDivisionError("zero divisor")
            if num.is_zero():
                den = _P1
            elif not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num = num / g
                    den = den / g
                if den.leading_coefficient() < 0:
                    num = -num
                    den = -den
        self.num = num
        self.den = den

    # construction helpers -------------------------------------------------
    @classmethod
    def from_fraction(cls, value) -> "RatFunc":
        value = Fraction(value)
        return cls(_poly_const(value.numerator), _poly_const(value.denominator))

    @classmethod
    def from_laurent(cls, terms: dict) -> "RatFunc":
        poly, sq, sl = _laurent_split(terms)
        return cls(poly) * cls(_monomial(max(sq, 0), max(sl, 0), 0), _monomial(max(-sq, 0), max(-sl, 0), 0))

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def depends_on(self, var: str) -> bool:
        i = _VARS.index(var)
        return self.num.degrees()[i] > 0 or self.den.degrees()[i] > 0

    # arithmetic -----------------------------------------------------------
    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.num.is_zero() or other.num.is_zero():
            return RAT_ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, _P1, _reduced=True)
        # cross-cancel keeps the intermediate polynomials small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n = (self.num / g1) * (other.num / g2)
        d = (self.den / g2) * (other.den / g1)
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatFunc(n, d, _reduced=True)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("zero divisor")
        n, d = self.den, self.num
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatFunc(n, d, _reduced=True)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((str(self.num), str(self.den)))

    # substitutions ----------------------------------------------------------
    def _map_terms(self, poly, fn) -> "RatFunc":
        out: dict = {}
        for exps, coef in zip(poly.monoms(), poly.coeffs()):
            key = fn(exps)
            out[key] = out.get(key, 0) + int(coef)
        return RatFunc.from_laurent({k: v for k, v in out.items() if v})

    def substitute(self, fn) -> "RatFunc":
        """Apply an exponent map ``(eq, el, ec) -> (eq', el', ec')`` to both parts."""
        return self._map_terms(self.num, fn) / self._map_terms(self.den, fn)

    def __str__(self) -> str:
        n = str(self.num)
        if self.den.is_one():
            return n
        if len(self.num.coeffs()) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    __repr__ = __str__


RAT_ZERO = RatFunc(_P0, _P1, _reduced=True)
RAT_ONE = RatFunc(_P1, _P1, _reduced=True)
# t**2
_T2 = RatFunc(_C * (_Q * _Q + _P1), _Q)
_R2SQ = RatFunc(2)

# e_i * e_j over the basis (1, t, r2, t*r2) -> (index, factor or None)
_MUL_TABLE = {
    (0, 0): (0, None), (0, 1): (1, None), (0, 2): (2, None), (0, 3): (3, None),
    (1, 1): (0, _T2), (1, 2): (3, None), (1, 3): (2, _T2),
    (2, 2): (0, _R2SQ), (2, 3): (1, _R2SQ),
    (3, 3): (0, _T2 * _R2SQ),
}
_NAMES = ("", "t", "r2", "t*r2")


class Scalar:
    """Element of Q(q, L, c)[t, r2]; immutable."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        if parts is None:
            parts = (RAT_ZERO,) * 4
        self.parts = tuple(parts)

    @classmethod
    def of(cls, value) -> "Scalar":
        return as_scalar(value)

    # predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return all(p.num.is_zero() for p in self.parts)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational_function(self) -> bool:
        return all(p.is_zero() for p in self.parts[1:])

    def depends_on(self, var: str) -> bool:
        return any(p.depends_on(var) for p in self.parts)

    # arithmetic ----------------------------------------------------------
    def __add__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(a + b for a, b in zip(self.parts, other.parts))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-a for a in self.parts)

    def __sub__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return as_scalar(other) - self

    def __mul__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.parts, other.parts
        if all(p.num.is_zero() for p in a[1:]) and all(p.num.is_zero() for p in b[1:]):
            return Scalar((a[0] * b[0], RAT_ZERO, RAT_ZERO, RAT_ZERO))
        out = [RAT_ZERO] * 4
        for i in range(4):
            if a[i].num.is_zero():
                continue
            for j in range(4):
                if b[j].num.is_zero():
                    continue
                k, factor = _MUL_TABLE[(i, j) if i <= j else (j, i)]
                term = a[i] * b[j]
                if factor is not None:
                    term = term * factor
                out[k] = out[k] + term
        return Scalar(out)

    __rmul__ = __mul__

    def _conj_r2(self) -> "Scalar":
        a = self.parts
        return Scalar((a[0], a[1], -a[2], -a[3]))

    def _conj_t(self) -> "Scalar":
        a = self.parts
        return Scalar((a[0], -a[1], a[2], -a[3]))

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("zero divisor")
        if self.is_rational_function():
            return Scalar((self.parts[0].inverse(), RAT_ZERO, RAT_ZERO, RAT_ZERO))
        # norm down the tower: x * conj_r2(x) lies in Q(q,L,c)[t]
        x1 = self._conj_r2()
        n1 = self * x1
        x2 = n1._conj_t()
        n2 = n1 * x2
        base = n2.parts[0]
        return x1 * x2 * Scalar((base.inverse(), RAT_ZERO, RAT_ZERO, RAT_ZERO))

    def __truediv__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return as_scalar(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        pieces = []
        for name, part in zip(_NAMES, self.parts):
            if part.is_zero():
                continue
            s = str(part)
            if not name:
                pieces.append(s)
            elif part.is_one():
                pieces.append(name)
            else:
                pieces.append(f"({s})*{name}")
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, RatFunc):
        return Scalar((value, RAT_ZERO, RAT_ZERO, RAT_ZERO))
    if isinstance(value, (int, Fraction)):
        return Scalar((RatFunc.from_fraction(value), RAT_ZERO, RAT_ZERO, RAT_ZERO))
    raise TypeError(f"cannot interpret {type(value).__name__} as a scalar")


def _coerce(value):
    if isinstance(value, (Scalar, RatFunc, int, Fraction)):
        return as_scalar(value)
    return None


ZERO = Scalar()
ONE = as_scalar(1)
q = as_scalar(RatFunc(_Q))
L = as_scalar(RatFunc(_L))
c = as_scalar(RatFunc(_C))
t = Scalar((RAT_ZERO, RAT_ONE, RAT_ZERO, RAT_ZERO))
r2 = Scalar((RAT_ZERO, RAT_ZERO, RAT_ONE, RAT_ZERO))


class BarMode(enum.Enum):
    """Complex conjugation on the coefficient field.

    UNIT_CIRCLE models |q| = 1 (q and L inverted); REAL models real q.
    Both fix c, t and r2.
    """

    UNIT_CIRCLE = "unit_circle"
    REAL = "real"


def bar(a, mode: BarMode) -> Scalar:
    a = as_scalar(a)
    if mode is BarMode.REAL:
        return a
    return Scalar(p.substitute(lambda e: (-e[0], -e[1], e[2])) for p in a.parts)


def specialize_L(a, n: int) -> Scalar:
    """Substitute L = q**n (highest weight lambda = n)."""
    a = as_scalar(a)
    return Scalar(p.substitute(lambda e: (e[0] + n * e[1], 0, e[2])) for p in a.parts)


def eval_q1(a) -> Scalar:
    """Substitute q = 1.

    The result no longer involves q; ``t`` stays a formal square root (its
    square 2c is recovered by evaluating products again).
    """
    a = as_scalar(a)
    out = []
    for p in a.parts:
        if p.depends_on("L"):
            raise EvaluationError("weight-symbolic value")
        num = RatFunc._map_terms(p, p.num, lambda e: (0, e[1], e[2]))
        den = RatFunc._map_terms(p, p.den, lambda e: (0, e[1], e[2]))
        if den.is_zero():
            raise EvaluationError("singular at q=1")
        out.append(num / den)
    return Scalar(out)


@lru_cache(maxsize=None)
def _qpow(n: int) -> Scalar:
    return q ** n


def qint(n: int) -> Scalar:
    """Quantum integer [n]_q = (q**n - q**-n) / (q - q**-1)."""
    return (_qpow(n) - _qpow(-n)) / (q - _qpow(-1))


def qint_shifted(lam, shift: int) -> Scalar:
    """[lambda + shift]_q with ``lam`` the value of q**lambda (e.g. L)."""
    lam = as_scalar(lam)
    return (lam * _qpow(shift) - (lam * _qpow(shift)).inverse()) / (q - _qpow(-1))


@lru_cache(maxsize=None)
def qfactorial(n: int) -> Scalar:
    result = ONE
    for k in range(1, n + 1):
        result = result * qint(k)
    return result
