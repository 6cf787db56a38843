"""The q-Clifford algebra of sl2 and the classical Clifford algebra it deforms.

Both algebras are 8-dimensional and are stored through a straightening
table on three letters.  A word is rewritten by replacing the first adjacent
out-of-order (or repeated) pair until it is ordered; the ordered words are
the basis.  The q-Clifford letters are ordered v2 < v0 < vm2.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linalg import identity, matmul, matadd, zeros
from .scalars import ONE, ZERO, RatFunc, Scalar, as_scalar, c, q, r2, t
from . import uqsl2
from .uqsl2 import UqElem

V2, V0, VM2 = 0, 1, 2
LETTERS = ("v2", "v0", "vm2")

# Basis words in the fixed order 1, v2, v0, vm2, v2vm2, v2v0, v0vm2, v2v0vm2.
CLQ_WORDS = ((), (V2,), (V0,), (VM2,), (V2, VM2), (V2, V0), (V0, VM2), (V2, V0, VM2))
CLQ_NAMES = ("1", "v2", "v0", "vm2", "v2*vm2", "v2*v0", "v0*vm2", "v2*v0*vm2")
WEIGHTS = (0, 2, 0, -2, 0, 2, -2, 0)
PARITY = (0, 1, 1, 1, 0, 0, 0, 1)
LETTER_WEIGHT = (2, 0, -2)

# (left letter, right letter) -> [(coefficient, ordered word)] for every pair
# that is not strictly increasing.
_TABLE = {
    (V2, V2): [],
    (VM2, VM2): [],
    (V0, V2): [(-q ** -2, (V2, V0))],
    (VM2, V0): [(-q ** -2, (V0, VM2))],
    (V0, V0): [((1 - q ** 4) / q ** 3, (V2, VM2)), ((q ** 2 + 1) / q * c, ())],
    (VM2, V2): [(-ONE, (V2, VM2)), ((q ** 2 + 1) / q ** 2 * c, ())],
}

# Classical letters e < f < h internally; the public basis lists hf, so the
# stored coordinate of hf is minus that of the ordered word fh.
E_, F_, H_ = 0, 1, 2
CL_LETTERS = ("e", "f", "h")
CL_WORDS = ((), (E_,), (F_,), (H_,), (E_, F_), (E_, H_), (F_, H_), (E_, F_, H_))
CL_SIGNS = (1, 1, 1, 1, 1, 1, -1, 1)
CL_NAMES = ("1", "e", "f", "h", "e*f", "e*h", "h*f", "e*f*h")
_CL_TABLE = {
    (E_, E_): [],
    (F_, F_): [],
    (H_, H_): [(as_scalar(2), ())],
    (F_, E_): [(-ONE, (E_, F_)), (as_scalar(2), ())],
    (H_, E_): [(-ONE, (E_, H_))],
    (H_, F_): [(-ONE, (F_, H_))],
}


def _straighten(word: tuple, table: dict, cache: dict) -> dict:
    """Ordered-word expansion of ``word`` under ``table``."""
    hit = cache.get(word)
    if hit is not None:
        return hit
    for i in range(len(word) - 1):
        pair = (word[i], word[i + 1])
        if pair[0] >= pair[1]:
            out: dict = {}
            for coef, repl in table[pair]:
                sub = _straighten(word[:i] + repl + word[i + 2:], table, cache)
                for w, v in sub.items():
                    out[w] = out.get(w, ZERO) + coef * v
            out = {w: v for w, v in out.items() if not v.is_zero()}
            break
    else:
        out = {word: ONE}
    cache[word] = out
    return out


class _Structure:
    """Multiplication table of an 8-dim algebra built from a straightening table."""

    def __init__(self, table: dict, words: tuple, signs: tuple):
        self.table = table
        self.words = words
        self.signs = signs
        self.index = {w: i for i, w in enumerate(words)}
        self.cache: dict = {}
        self.mult = [[self.word_vector(wi + wj, si * sj) for wj, sj in zip(words, signs)] for wi, si in zip(words, signs)]

    def word_vector(self, word: tuple, sign: int = 1) -> tuple:
        vec = [ZERO] * 8
        for w, v in _straighten(word, self.table, self.cache).items():
            i = self.index[w]
            vec[i] = vec[i] + v * (sign * self.signs[i])
        return tuple(vec)


_CLQ_STRUCT: list = [None, None]
_CL_STRUCT = _Structure(_CL_TABLE, CL_WORDS, CL_SIGNS)
_DEPENDENT_CACHES: list = []


def register_cache(fn):
    """Mark an lru_cache-wrapped function as depending on the q-Clifford table."""
    _DEPENDENT_CACHES.append(fn)
    return fn


def clq_structure() -> _Structure:
    """Current q-Clifford structure; rebuilt if ``_TABLE`` has been replaced."""
    if _CLQ_STRUCT[0] is not _TABLE:
        _CLQ_STRUCT[0] = _TABLE
        _CLQ_STRUCT[1] = _Structure(_TABLE, CLQ_WORDS, (1,) * 8)
        _ACTION_CACHE.clear()
        for fn in _DEPENDENT_CACHES:
            fn.cache_clear()
    return _CLQ_STRUCT[1]


def _vec_mul(mult, x: tuple, y: tuple) -> list:
    out = [ZERO] * 8
    for i, a in enumerate(x):
        if a.is_zero():
            continue
        row = mult[i]
        for j, b in enumerate(y):
            if b.is_zero():
                continue
            ab = a * b
            for k, m in enumerate(row[j]):
                if not m.is_zero():
                    out[k] = out[k] + ab * m
    return out


class _Vector8:
    """Scalar coordinates over an 8-element basis; immutable."""

    __slots__ = ("coords",)
    NAMES: tuple = ()

    def __init__(self, coords=None):
        if coords is None:
            coords = (ZERO,) * 8
        self.coords = tuple(as_scalar(x) for x in coords)

    @classmethod
    def basis(cls, i: int, coef=1):
        v = [ZERO] * 8
        v[i] = as_scalar(coef)
        return cls(v)

    @classmethod
    def scalar(cls, s):
        return cls.basis(0, s)

    def _mult(self):
        raise NotImplementedError

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def support(self) -> list:
        return [i for i, x in enumerate(self.coords) if not x.is_zero()]

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction, RatFunc, Scalar)):
            return type(self).scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return type(self)([a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, type(self)):
            return type(self)(_vec_mul(self._mult(), self.coords, other.coords))
        if isinstance(other, _Vector8) or isinstance(other, UqElem):
            return NotImplemented
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return type(self)([a * s for a in self.coords])

    def __rmul__(self, other):
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return type(self)([s * a for a in self.coords])

    def __pow__(self, n: int):
        out = type(self).scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __str__(self) -> str:
        parts = [f"({x})*{self.NAMES[i]}" if i else f"({x})" for i, x in enumerate(self.coords) if not x.is_zero()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


class ClqElem(_Vector8):
    """Element of the q-Clifford algebra in the PBW basis."""

    NAMES = CLQ_NAMES

    def _mult(self):
        return clq_structure().mult

    def parity(self) -> int | None:
        """0 or 1 for homogeneous elements, None for mixed ones."""
        ps = {PARITY[i] for i in self.support()}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0


class ClElem(_Vector8):
    """Element of the classical Clifford algebra on e, f, h."""

    NAMES = CL_NAMES

    def _mult(self):
        return _CL_STRUCT.mult


def clq_mul(x: ClqElem, y: ClqElem) -> ClqElem:
    return x * y


def cl_mul(x: ClElem, y: ClElem) -> ClElem:
    return x * y


def clq_word(letters) -> ClqElem:
    """Product of letters given by name ("v2", "v0", "vm2") or index."""
    word = tuple(LETTERS.index(x) if isinstance(x, str) else x for x in letters)
    return ClqElem(clq_structure().word_vector(word))


def cl_word(letters) -> ClElem:
    word = tuple(CL_LETTERS.index(x) if isinstance(x, str) else x for x in letters)
    return ClElem(_CL_STRUCT.word_vector(word))


def clq_basis(i: int) -> ClqElem:
    return ClqElem.basis(i)


def cl_basis(i: int) -> ClElem:
    return ClElem.basis(i)


v2 = ClqElem.basis(1)
v0 = ClqElem.basis(2)
vm2 = ClqElem.basis(3)
CLQ_ONE = ClqElem.scalar(1)
e = ClElem.basis(1)
f = ClElem.basis(2)
h = ClElem.basis(3)
CL_ONE = ClElem.scalar(1)


def parity(x: ClqElem) -> int | None:
    return x.parity()


def gamma() -> ClqElem:
    return v2 * v0 * vm2 + v0 * c


def gamma_pm(sign: int) -> ClqElem:
    return gamma() + CLQ_ONE * (c * t * sign)


def ideal_generators() -> list:
    """The six generators of the defining ideal, as words."""
    two = (q ** 2 + 1) * 2
    return [
        [(ONE, (V2, V2))],
        [(ONE, (V0, V2)), (q ** -2, (V2, V0))],
        [(ONE, (VM2, V2)), (-q ** -1, (V0, V0)), (q ** -4, (V2, VM2))],
        [(q ** 2, (VM2, V0)), (ONE, (V0, VM2))],
        [(ONE, (VM2, VM2))],
        [
            (two / q ** 3, (VM2, V2)),
            (as_scalar(2), (V0, V0)),
            (two / q, (V2, VM2)),
            (-two * (q ** 4 + q ** 2 + 1) / q ** 5 * c, ()),
        ],
    ]


def evaluate_words(terms) -> ClqElem:
    out = ClqElem()
    for coef, word in terms:
        out = out + clq_word(word) * coef
    return out


# --- U_q action -------------------------------------------------------------

_QQ = q + q ** -1
# generator -> letter -> list of (coefficient, letter)
_LETTER_ACTION = {
    "E": {V2: [], V0: [(-_QQ, V2)], VM2: [(ONE, V0)]},
    "F": {V2: [(-ONE, V0)], V0: [(_QQ, VM2)], VM2: []},
}
_ACTION_CACHE: dict = {}


def _k_scale(word: tuple, power: int) -> Scalar:
    return q ** (power * sum(LETTER_WEIGHT[x] for x in word))


def _act_word(gen: str, word: tuple) -> ClqElem:
    """E or F on an ordered word, through the coproduct."""
    if not word:
        return ClqElem()
    head, rest = word[0], word[1:]
    rest_elem = clq_word(rest)
    head_elem = clq_word((head,))
    moved = ClqElem()
    for coef, letter in _LETTER_ACTION[gen][head]:
        moved = moved + clq_word((letter,)) * coef
    if gen == "E":
        # E(x rest) = (E x)(K rest) + x (E rest)
        return moved * rest_elem * _k_scale(rest, 1) + head_elem * _act_word(gen, rest)
    # F(x rest) = (F x) rest + (K^-1 x)(F rest)
    return moved * rest_elem + head_elem * _k_scale((head,), -1) * _act_word(gen, rest)


def action_matrix(gen: str) -> list:
    """8x8 matrix of E, F, K or Ki; column j is the image of basis j."""
    clq_structure()
    hit = _ACTION_CACHE.get(gen)
    if hit is not None:
        return hit
    if gen in ("K", "Ki"):
        s = 1 if gen == "K" else -1
        m = zeros(8, 8)
        for j in range(8):
            m[j][j] = q ** (s * WEIGHTS[j])
    else:
        m = zeros(8, 8)
        for j, word in enumerate(CLQ_WORDS):
            col = _act_word(gen, word).coords
            for i in range(8):
                m[i][j] = col[i]
    _ACTION_CACHE[gen] = m
    return m


@register_cache
@lru_cache(maxsize=None)
def _monomial_matrix(mono: tuple) -> tuple:
    a, b, e_ = mono
    m = identity(8)
    for _ in range(a):
        m = matmul(m, action_matrix("F"))
    kg = action_matrix("K" if b > 0 else "Ki")
    for _ in range(abs(b)):
        m = matmul(m, kg)
    for _ in range(e_):
        m = matmul(m, action_matrix("E"))
    return tuple(tuple(row) for row in m)


def monomial_matrix(mono: tuple) -> tuple:
    clq_structure()
    return _monomial_matrix(mono)


def uq_action_matrix(x: UqElem) -> list:
    out = zeros(8, 8)
    for mono, coef in x.terms.items():
        out = matadd(out, [list(r) for r in monomial_matrix(mono)], coef)
    return out


def uq_action_clq(x: UqElem, v: ClqElem) -> ClqElem:
    out = [ZERO] * 8
    for mono, coef in x.terms.items():
        m = monomial_matrix(mono)
        for i in range(8):
            row = m[i]
            s = ZERO
            for j, vj in enumerate(v.coords):
                if not vj.is_zero() and not row[j].is_zero():
                    s = s + row[j] * vj
            if not s.is_zero():
                out[i] = out[i] + coef * s
    return ClqElem(out)


# --- spin modules -------------------------------------------------------------


def _letter_spin(sign: int, letter: int) -> list:
    if letter == V2:
        return [[ZERO, t], [ZERO, ZERO]]
    if letter == VM2:
        return [[ZERO, ZERO], [t / q, ZERO]]
    d = t * sign
    return [[-d / q ** 2, ZERO], [ZERO, d]]


@lru_cache(maxsize=None)
def _basis_spin(sign: int, i: int) -> tuple:
    m = identity(2)
    for letter in CLQ_WORDS[i]:
        m = matmul(m, _letter_spin(sign, letter))
    return tuple(tuple(r) for r in m)


def spin_rep(sign: int, x: ClqElem) -> list:
    """2x2 matrix of x on S_+ (sign=+1) or S_- (sign=-1), basis (s1, s-1)."""
    out = zeros(2, 2)
    for i, coef in enumerate(x.coords):
        if not coef.is_zero():
            out = matadd(out, [list(r) for r in _basis_spin(sign, i)], coef)
    return out


def spin_apply(sign: int, x: ClqElem, s: list) -> list:
    m = spin_rep(sign, x)
    return [m[0][0] * s[0] + m[0][1] * s[1], m[1][0] * s[0] + m[1][1] * s[1]]


def _spin_uq_generator(sign: int, gen: str) -> list:
    if gen == "E":
        return [[ZERO, as_scalar(sign)], [ZERO, ZERO]]
    if gen == "F":
        return [[ZERO, ZERO], [as_scalar(sign), ZERO]]
    p = 1 if gen == "K" else -1
    return [[q ** p, ZERO], [ZERO, q ** -p]]


def spin_uq_matrix(sign: int, x: UqElem) -> list:
    out = zeros(2, 2)
    for (a, b, e_), coef in x.terms.items():
        m = identity(2)
        for _ in range(a):
            m = matmul(m, _spin_uq_generator(sign, "F"))
        kg = _spin_uq_generator(sign, "K" if b > 0 else "Ki")
        for _ in range(abs(b)):
            m = matmul(m, kg)
        for _ in range(e_):
            m = matmul(m, _spin_uq_generator(sign, "E"))
        out = matadd(out, m, coef)
    return out


def spin_uq_action(sign: int, x: UqElem, s: list) -> list:
    m = spin_uq_matrix(sign, x)
    return [m[0][0] * s[0] + m[0][1] * s[1], m[1][0] * s[0] + m[1][1] * s[1]]


def spin_compatibility_check() -> bool:
    """X(v s) = sum (X(1) v)(X(2) s) on both spin modules, all generators and basis v.

    The U_q structure labelled ``+`` by ``spin_uq_action`` is the one compatible
    with the Clifford module on which gamma acts by -ct, and vice versa; the
    check pairs them accordingly.
    """
    E, F, K, Ki = uqsl2.E, uqsl2.F, uqsl2.K, uqsl2.Ki
    for sign in (1, -1):
        rho = {g: spin_uq_matrix(-sign, x) for g, x in (("E", E), ("F", F), ("K", K), ("Ki", Ki))}
        for i in range(8):
            v = ClqElem.basis(i)
            pv = spin_rep(sign, v)
            lhs = matmul(rho["E"], pv)
            rhs = matadd(matmul(spin_rep(sign, uq_action_clq(E, v)), rho["K"]), matmul(pv, rho["E"]))
            if lhs != rhs:
                return False
            lhs = matmul(rho["F"], pv)
            rhs = matadd(spin_rep(sign, uq_action_clq(F, v)), matmul(spin_rep(sign, uq_action_clq(Ki, v)), rho["F"]))
            if lhs != rhs:
                return False
            if matmul(rho["K"], pv) != matmul(spin_rep(sign, uq_action_clq(K, v)), rho["K"]):
                return False
    return True


# --- the isomorphism with the classical Clifford algebra ------------------------

_SQRT2_HALF = r2 / 2


def _phi_letters() -> list:
    return [
        e * t,
        h * (CL_ONE - e * f * ((q ** 2 - 1) / (2 * q ** 2))) * (_SQRT2_HALF * t),
        f * (t / (2 * q)),
    ]


def _phi_inv_letters() -> list:
    # indexed by classical letter: e, f, h
    return [
        v2 * t.inverse(),
        vm2 * (2 * q / t),
        v0 * (r2 / t) - v2 * v0 * vm2 * (r2 * (q ** 2 - 1) / (c * t * (q ** 2 + 1))),
    ]


@lru_cache(maxsize=1)
def _phi_basis() -> tuple:
    letters = _phi_letters()
    out = []
    for word in CLQ_WORDS:
        img = CL_ONE
        for x in word:
            img = img * letters[x]
        out.append(img)
    return tuple(out)


@register_cache
@lru_cache(maxsize=1)
def _phi_inv_basis() -> tuple:
    letters = _phi_inv_letters()
    out = []
    for word, sign in zip(CL_WORDS, CL_SIGNS):
        img = CLQ_ONE
        # hf is stored with the opposite sign of the ordered word fh
        for x in (word if sign == 1 else word[::-1]):
            img = img * letters[x]
        out.append(img)
    return tuple(out)


def phi(x: ClqElem) -> ClElem:
    out = ClElem()
    for coef, img in zip(x.coords, _phi_basis()):
        if not coef.is_zero():
            out = out + img * coef
    return out


def phi_inv(y: ClElem) -> ClqElem:
    clq_structure()
    out = ClqElem()
    for coef, img in zip(y.coords, _phi_inv_basis()):
        if not coef.is_zero():
            out = out + img * coef
    return out


# --- algebra maps from U_q ---------------------------------------------------------


def _alpha_generators() -> dict:
    k_part = v2 * vm2 * ((q ** 3 - q) / ((1 + q ** 2) * c))
    return {
        "E": v2 * v0 * (-q / ((1 + q ** 2) * c)),
        "F": v0 * vm2 * (-q ** 2 / ((1 + q ** 2) * c)),
        "K": k_part + CLQ_ONE * q ** -1,
        "Ki": -k_part + CLQ_ONE * q,
    }


def _alpha0_generators() -> dict:
    k_part = e * f * ((q ** 2 - 1) / (2 * q))
    inv_r2 = r2 / 2
    return {
        "E": -(e * h) * inv_r2,
        "F": -(h * f) * (inv_r2 / 2),
        "K": k_part + CL_ONE * q ** -1,
        "Ki": -k_part + CL_ONE * q,
    }


def _extend(gens: dict, x: UqElem, one):
    out = one * 0
    for (a, b, e_), coef in x.terms.items():
        img = one
        for _ in range(a):
            img = img * gens["F"]
        kg = gens["K"] if b > 0 else gens["Ki"]
        for _ in range(abs(b)):
            img = img * kg
        for _ in range(e_):
            img = img * gens["E"]
        out = out + img * coef
    return out


def alpha(x: UqElem) -> ClqElem:
    return _extend(_alpha_generators(), x, CLQ_ONE)


def alpha0(x: UqElem) -> ClElem:
    return _extend(_alpha0_generators(), x, CL_ONE)


# --- filtration ---------------------------------------------------------------------


def filtration_spans() -> list:
    """Classical subspaces F0 in F1 in F2 in F3 carried from the degree filtration."""
    f0 = [CL_ONE]
    f1 = f0 + [e, h + e * h * f * ((q ** 2 - 1) / (2 * q ** 2)), f]
    f2 = f1 + [e * f, e * h, h * f]
    f3 = f2 + [e * f * h]
    return [f0, f1, f2, f3]


def degree_spans() -> list:
    """q-Clifford subspaces spanned by ordered words of length at most d."""
    return [[ClqElem.basis(i) for i, w in enumerate(CLQ_WORDS) if len(w) <= d] for d in range(4)]
