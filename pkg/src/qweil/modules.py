"""Verma and finite-dimensional U_q(sl2)-modules tensored with a spin module.

Basis vectors of M (x) S are written w_{lambda-2k} (x) s_{+-1}; the highest
weight enters only through L = q**lambda, so Verma modules with symbolic
lambda and their integral specializations share one code path.

W_q acts on M (x) S by braiding the Clifford factor past the module vector
and then letting the U_q factor act on M and the Clifford factor act on S.
D_q preserves the planes N_k = span(w_{lambda-2k} (x) s1, w_{lambda-2(k-1)} (x) s-1)
and the line through w_lambda (x) s1, which reduces spectra and cohomology
to 2x2 linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import cliffordq as clq
from .braiding import sigma_R_cl_mod
from .cliffordq import ClqElem, spin_rep
from .linalg import column_space, identity, in_span, is_zero_matrix, matadd, matmul, nullspace
from .scalars import L, ONE, ZERO, Scalar, as_scalar, c, q, qint, qint_shifted, t
from .uqsl2 import UqElem, casimir
from .weil import WqElem, dirac, dirac_squared_rhs

SPINS = (1, -1)


class Module:
    """Highest weight module with q**lambda = ``lam``.

    ``top`` is None for a Verma module and n for the (n+1)-dimensional
    quotient V_{n pi}, realized by the truncation w_{-n-2} = 0.
    """

    def __init__(self, lam=L, top: int | None = None, label: str | None = None):
        self.lam = as_scalar(lam)
        self.top = top
        self.label = label if label is not None else "lambda"

    @classmethod
    def verma(cls, n: int | None = None) -> "Module":
        if n is None:
            return cls(L)
        return cls(q ** n, None, str(n))

    @classmethod
    def finite(cls, n: int) -> "Module":
        if n < 0:
            raise ValueError("finite modules need lambda >= 0")
        return cls(q ** n, n, str(n))

    @property
    def is_finite(self) -> bool:
        return self.top is not None

    def __eq__(self, other) -> bool:
        return isinstance(other, Module) and (self.lam, self.top) == (other.lam, other.top)

    def __hash__(self):
        return hash((self.lam, self.top))

    def __repr__(self) -> str:
        kind = "finite" if self.is_finite else "verma"
        return f"Module({kind}, lambda={self.label})"

    # interface used by the module braiding
    def in_range(self, k: int) -> bool:
        return k >= 0 and (self.top is None or k <= self.top)

    def f_power_coefficient(self, m: int, k: int) -> Scalar:
        """F^m w_{lambda-2k} = coefficient * w_{lambda-2(k+m)}."""
        if not self.in_range(k + m):
            return ZERO
        out = ONE
        for j in range(k, k + m):
            out = out * qint(j + 1)
        return out

    def half_weight_power(self, even_weight: int, k: int) -> Scalar:
        """q**(even_weight * (lambda - 2k) / 2)."""
        return self.lam ** (even_weight // 2) * q ** (-even_weight * k)

    def weight_label(self, k: int) -> str:
        if self.label == "lambda":
            return "lambda" if k == 0 else f"lambda-{2 * k}"
        return str(int(self.label) - 2 * k)

    def act_monomial(self, mono: tuple, k: int) -> tuple[int, Scalar] | None:
        return _act_monomial(self, mono, k)


@lru_cache(maxsize=None)
def _act_monomial(module: Module, mono: tuple, k: int) -> tuple[int, Scalar] | None:
    """F^a K^b E^e w_{lambda-2k} as (depth, coefficient), or None when zero."""
    a, b, e = mono
    coef = ONE
    for j in range(k, k - e, -1):
        if j <= 0:
            return None
        coef = coef * qint_shifted(module.lam, 1 - j)
    k -= e
    if b:
        coef = coef * (module.lam * q ** (-2 * k)) ** b
    for j in range(k, k + a):
        if not module.in_range(j + 1):
            return None
        coef = coef * qint(j + 1)
    k += a
    if coef.is_zero():
        return None
    return k, coef


@dataclass
class ModuleVector:
    """Finite combination of w_{lambda-2k} (x) s_spin in M (x) S_sign."""

    module: Module
    sign: int = -1
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {key: as_scalar(v) for key, v in self.terms.items() if not as_scalar(v).is_zero()}
        if self.module.is_finite and any(k > self.module.top for k, _ in self.terms):
            raise ValueError(f"not in V_{{{self.module.top}π}}")

    @classmethod
    def basis(cls, module: Module, k: int, spin: int, sign: int = -1) -> "ModuleVector":
        return cls(module, sign, {(k, spin): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, k: int, spin: int) -> Scalar:
        return self.terms.get((k, spin), ZERO)

    def _like(self, terms: dict) -> "ModuleVector":
        return ModuleVector(self.module, self.sign, terms)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.terms)
        for key, v in other.terms.items():
            out[key] = out[key] + v if key in out else v
        return self._like(out)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other * -1

    def __mul__(self, s) -> "ModuleVector":
        s = as_scalar(s)
        return self._like({key: v * s for key, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleVector)
            and self.module == other.module
            and self.sign == other.sign
            and self.terms == other.terms
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (k, spin), v in sorted(self.terms.items(), key=lambda kv: (kv[0][0], -kv[0][1])):
            vec = f"w_{{{self.module.weight_label(k)}}} ox s{spin}"
            parts.append(vec if v == ONE else f"({v})*{vec}")
        return " + ".join(parts)

    __repr__ = __str__


def _spin_index(spin: int) -> int:
    return 0 if spin == 1 else 1


# --- actions ------------------------------------------------------------------------


def verma_act(x: UqElem, w: ModuleVector) -> ModuleVector:
    """x acting on the module factor of w."""
    out: dict = {}
    for mono, xc in x.terms.items():
        for (k, spin), wc in w.terms.items():
            r = w.module.act_monomial(mono, k)
            if r is None:
                continue
            k2, coef = r
            key = (k2, spin)
            val = xc * wc * coef
            out[key] = out[key] + val if key in out else val
    return w._like(out)


def finite_act(n: int, x: UqElem, w: ModuleVector) -> ModuleVector:
    """Action on V_{n pi} (x) S; w must live on depths 0..n."""
    if any(k > n or k < 0 for k, _ in w.terms):
        raise ValueError(f"not in V_{{{n}π}}")
    module = Module.finite(n)
    return verma_act(x, ModuleVector(module, w.sign, w.terms))


@lru_cache(maxsize=None)
def _wq_basis_action(module: Module, sign: int, mono: tuple, i: int, k: int, spin: int) -> tuple:
    """(mono (x) b_i) acting on w_{lambda-2k} (x) s_spin, as ((depth, spin), coef) pairs."""
    out: dict = {}
    s = [ONE, ZERO] if spin == 1 else [ZERO, ONE]
    for (k1, scale), cl in sigma_R_cl_mod(ClqElem.basis(i), k, module):
        r = module.act_monomial(mono, k1)
        if r is None:
            continue
        k2, coef = r
        m = spin_rep(sign, cl)
        image = (m[0][0] * s[0] + m[0][1] * s[1], m[1][0] * s[0] + m[1][1] * s[1])
        for idx, sv in enumerate(image):
            if sv.is_zero():
                continue
            key = (k2, SPINS[idx])
            val = scale * coef * sv
            out[key] = out[key] + val if key in out else val
    return tuple((key, v) for key, v in out.items() if not v.is_zero())


def _clear_action_cache() -> None:
    _wq_basis_action.cache_clear()


clq.register_cache(_wq_basis_action)


def wq_act(x: WqElem, w: ModuleVector) -> ModuleVector:
    """Action of the Weil algebra on M (x) S through the R-matrix braiding."""
    clq.clq_structure()
    out: dict = {}
    for (mono, i), xc in x.terms.items():
        for (k, spin), wc in w.terms.items():
            for key, v in _wq_basis_action(w.module, w.sign, mono, i, k, spin):
                val = xc * wc * v
                out[key] = out[key] + val if key in out else val
    return w._like(out)


# --- D_q on the invariant blocks -------------------------------------------------------


@lru_cache(maxsize=1)
def _dirac() -> WqElem:
    return dirac()


def block_basis(module: Module, k: int, sign: int = -1) -> list:
    """Basis of N_k (k >= 1), of the top line (k = 0) or, for V_{n pi}, the bottom line (k = n + 1)."""
    if k == 0:
        return [ModuleVector.basis(module, 0, 1, sign)]
    if module.is_finite and k == module.top + 1:
        return [ModuleVector.basis(module, module.top, -1, sign)]
    return [ModuleVector.basis(module, k, 1, sign), ModuleVector.basis(module, k - 1, -1, sign)]


def block_keys(module: Module, k: int) -> list:
    return [next(iter(b.terms)) for b in block_basis(module, k)]


def operator_block(x: WqElem, module: Module, k: int, sign: int = -1) -> list:
    """Matrix of x on block k: M[i][j] is the coefficient of basis i in x(basis j).

    Raises ValueError if x does not preserve the block.
    """
    keys = block_keys(module, k)
    cols = []
    for b in block_basis(module, k, sign):
        img = wq_act(x, b)
        stray = set(img.terms) - set(keys)
        if stray:
            raise ValueError(f"block {k} is not invariant: image has support {sorted(stray)}")
        cols.append([img.coefficient(*key) for key in keys])
    n = len(keys)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def dirac_block(k: int, module: Module | None = None, sign: int = -1) -> list:
    """2x2 matrix of D_q on N_k for k >= 1."""
    if k < 1:
        raise ValueError("blocks N_k start at k = 1")
    module = module or Module.verma()
    return operator_block(_dirac(), module, k, sign)


def dirac_singleton(module: Module | None = None, sign: int = -1) -> Scalar:
    """Eigenvalue of D_q on w_lambda (x) s1."""
    module = module or Module.verma()
    return operator_block(_dirac(), module, 0, sign)[0][0]


def closed_form_block(k: int) -> list:
    """The closed-form L-symbolic matrix of D_q on N_k in M (x) S_-."""
    d = c * (q ** 2 - 1)
    top_left = t * L.inverse() * (L ** 2 * q ** 2 + 1 - 2 * q ** (2 * k)) / (2 * d)
    top_right = t * q ** (1 - k) * (q ** (2 * k) - 1) / d
    bottom_left = t * q ** (k - 1) * L ** -2 * (L ** 2 * q ** 2 - q ** (2 * k)) / d
    return [[top_left, top_right], [bottom_left, -top_left]]


def eigenvalue(module: Module | None = None) -> Scalar:
    """(t / 2c) [lambda + 1]_q."""
    module = module or Module.verma()
    return t / (2 * c) * qint_shifted(module.lam, 1)


# --- spectra ----------------------------------------------------------------------------


@dataclass
class Spectrum:
    k: int
    matrix: list
    eigenpairs: list  # [(eigenvalue, [coef of w_{lambda-2k} s1, coef of w_{lambda-2(k-1)} s-1])]

    def characteristic_polynomial(self) -> tuple:
        """(trace, determinant) so that the polynomial is x^2 - trace x + det."""
        m = self.matrix
        return m[0][0] + m[1][1], m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _normalize(v: list) -> list:
    pivot = v[-1] if not v[-1].is_zero() else v[0]
    inv = pivot.inverse()
    return [x * inv for x in v]


def spectrum(k: int, module: Module | None = None, sign: int = -1) -> Spectrum:
    """Eigenvalues +-(t/2c)[lambda+1]_q of D_q on N_k with eigenvectors.

    Eigenvectors are normalized to have s-1 coefficient 1 when possible.
    """
    module = module or Module.verma()
    mu = eigenvalue(module)
    if mu.is_zero():
        raise ValueError("degenerate block; use jordan_form")
    m = dirac_block(k, module, sign)
    pairs = []
    for ev in (mu, -mu):
        shifted = matadd(m, identity(2), -ev)
        ker = nullspace(shifted)
        if len(ker) != 1:
            raise ArithmeticError(f"eigenvalue {ev} has a {len(ker)}-dimensional eigenspace on block {k}")
        pairs.append((ev, _normalize(ker[0])))
    return Spectrum(k, m, pairs)


def eigenvector_formula(k: int, which: int, sign: int = -1) -> list:
    """Closed-form eigenvector on M (x) S_sign for the eigenvalue which * (t/2c)[lambda+1]_q.

    For the eigenvalue sign*mu the s1 coefficient is
    -sign * q^{1-k+lambda}(q^{2k}-1)/(q^{2k}-q^{2lambda+2}); for -sign*mu it is
    -sign * q^{1-k+lambda}.  The s-1 coefficient is 1.
    """
    a = q ** (1 - k) * L
    if which == sign:
        return [-sign * a * (q ** (2 * k) - 1) / (q ** (2 * k) - L ** 2 * q ** 2), ONE]
    return [-sign * a, ONE]


@dataclass
class JordanForm:
    matrix: list
    form: list
    change_of_basis: list  # columns P with matrix * P = P * form


def jordan_form(k: int, module: Module | None = None, sign: int = -1) -> JordanForm:
    """Jordan form of a nonzero nilpotent block (lambda = -1)."""
    module = module or Module(q ** -1, None, "-1")
    m = dirac_block(k, module, sign)
    if not is_zero_matrix(matmul(m, m)):
        raise ValueError("block is not nilpotent")
    if is_zero_matrix(m):
        return JordanForm(m, [[ZERO, ZERO], [ZERO, ZERO]], identity(2))
    j = 0 if not (m[0][0].is_zero() and m[1][0].is_zero()) else 1
    v2 = [ONE if i == j else ZERO for i in range(2)]
    v1 = [m[0][j], m[1][j]]
    p = [[v1[0], v2[0]], [v1[1], v2[1]]]
    return JordanForm(m, [[ZERO, ONE], [ZERO, ZERO]], p)


# --- central elements on the Verma module -----------------------------------------------------


def casimir_on_verma(module: Module | None = None) -> Scalar:
    """Scalar by which C acts, read off from C w_lambda."""
    module = module or Module.verma()
    img = verma_act(casimir(), ModuleVector.basis(module, 0, 1))
    return img.coefficient(0, 1)


def casimir_formula() -> Scalar:
    return q * (L * q ** 2 + L.inverse()) / (q ** 2 - 1) ** 2


def dsq_on_verma(module: Module | None = None) -> Scalar:
    """Scalar by which D_q^2 acts: its Casimir polynomial evaluated at casimir_on_verma."""
    module = module or Module.verma()
    rhs = dirac_squared_rhs()
    return verma_act(rhs.uq_part(0), ModuleVector.basis(module, 0, 1)).coefficient(0, 1)


def dsq_formula() -> Scalar:
    return (q ** 2 + 1) * (L * q ** 2 - L.inverse()) ** 2 / (4 * q * c * (q ** 2 - 1) ** 2)


# --- cohomology --------------------------------------------------------------------------------


@dataclass
class BlockCohomology:
    k: int
    kernel: list
    image_in_kernel: list
    representatives: list

    @property
    def dimension(self) -> int:
        return len(self.kernel) - len(self.image_in_kernel)


@dataclass
class CohomologyResult:
    module: Module
    sign: int
    blocks: list

    @property
    def dimension(self) -> int:
        return sum(b.dimension for b in self.blocks)

    def basis(self) -> list:
        out = []
        for b in self.blocks:
            keys = block_keys(self.module, b.k)
            for rep in b.representatives:
                out.append(ModuleVector(self.module, self.sign, dict(zip(keys, rep))))
        return out


def _intersection(a: list, b: list) -> list:
    """Basis of span(a) cap span(b) for lists of coordinate vectors."""
    if not a or not b:
        return []
    n = len(a[0])
    mat = [[v[i] for v in a] + [-w[i] for w in b] for i in range(n)]
    out = []
    for sol in nullspace(mat):
        vec = [ZERO] * n
        for coef, v in zip(sol[: len(a)], a):
            vec = [x + coef * y for x, y in zip(vec, v)]
        if not all(x.is_zero() for x in vec) and not (out and in_span(out, vec)):
            out.append(vec)
    return out


def block_cohomology(m: list, k: int) -> BlockCohomology:
    ker = nullspace(m)
    img = column_space(m)
    both = _intersection(ker, img)
    reps: list = []
    for v in ker:
        if not in_span(both + reps, v):
            reps.append(v)
    return BlockCohomology(k, ker, both, reps)


def _cohomology_blocks(module: Module, depth: int) -> list:
    if module.is_finite:
        return list(range(0, module.top + 2))
    return list(range(0, depth + 1))


def dirac_cohomology(lam: int | None = None, module: str = "verma", depth: int = 12, sign: int = -1) -> CohomologyResult:
    """Dirac cohomology ker D / (im D cap ker D) of M (x) S_sign.

    ``lam`` None means symbolic lambda. For Verma modules the first ``depth``
    planes N_k and the top line are examined; for V_{n pi} every block is.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if module == "verma":
        mod = Module.verma(lam)
    elif module == "finite":
        if lam is None or lam < 0:
            raise ValueError("finite modules need an integer lambda >= 0")
        mod = Module.finite(lam)
    else:
        raise ValueError(f"unknown module kind {module!r}")
    return cohomology_of(mod, depth, sign)


def cohomology_of(mod: Module, depth: int = 12, sign: int = -1) -> CohomologyResult:
    d = _dirac()
    blocks = [block_cohomology(operator_block(d, mod, k, sign), k) for k in _cohomology_blocks(mod, depth)]
    return CohomologyResult(mod, sign, blocks)


def block_invariance_check(module: Module, depth: int, sign: int = -1) -> bool:
    """D_q maps every examined block into itself (operator_block raises otherwise)."""
    try:
        for k in _cohomology_blocks(module, depth):
            operator_block(_dirac(), module, k, sign)
    except ValueError:
        return False
    return True
