"""R-matrix braidings, the normalized braiding and the invariant form.

The universal R-matrix is never materialized.  On a pair of weight vectors
it acts as

    q^{wt1 * wt2 / 2} * sum_m c_m E^m (x) F^m,
    c_m = q^{m(m-1)/2} (q - q^-1)^m / [m]_q!

where the diagonal factor uses the weights after E^m and F^m have acted.
Every left factor that is ever braided (Clifford basis elements) has even
weight, so all exponents are integral in q and in L = q^lambda.  The series
stops once E^m annihilates the left factor.
"""

from __future__ import annotations

from functools import lru_cache

from . import cliffordq as clq
from .cliffordq import WEIGHTS, ClqElem, register_cache, uq_action_clq
from .linalg import identity, in_span, matadd, matmul, matscale, nullspace, rank, zeros
from .scalars import ONE, ZERO, Scalar, as_scalar, c, q, qfactorial
from .uqsl2 import E, F, K, Ki, UqElem, ad_weight, uq_ad

MAX_M = 8


@lru_cache(maxsize=None)
def r_coefficient(m: int) -> Scalar:
    return q ** (m * (m - 1) // 2) * (q - q ** -1) ** m / qfactorial(m)


def _pow_q_half(w1: int, w2: int) -> Scalar:
    # q^{w1 w2 / 2} with at least one even weight
    return q ** ((w1 * w2) // 2)


@register_cache
@lru_cache(maxsize=None)
def _e_powers(i: int) -> tuple:
    """E^m acting on Clifford basis element i, for m = 0, 1, ... until zero."""
    out = []
    v = ClqElem.basis(i)
    while not v.is_zero() and len(out) < MAX_M:
        out.append(v)
        v = uq_action_clq(E, v)
    return tuple(out)


@lru_cache(maxsize=None)
def _f_power(m: int) -> UqElem:
    return UqElem.monomial(a=m)


@lru_cache(maxsize=None)
def _e_power(m: int) -> UqElem:
    return UqElem.monomial(e=m)


@register_cache
@lru_cache(maxsize=None)
def braid_basis_monomial(i: int, mono: tuple) -> tuple:
    """sigma_R(b_i (x) mono) as ((uq monomial, cl index), coefficient) pairs."""
    out: dict = {}
    y = UqElem({mono: ONE})
    wy = ad_weight(mono)
    for m, ev in enumerate(_e_powers(i)):
        fy = uq_ad(_f_power(m), y) if m else y
        if fy.is_zero():
            break
        wv = WEIGHTS[i] + 2 * m
        scale = r_coefficient(m) * _pow_q_half(wv, wy - 2 * m)
        for um, uc in fy.terms.items():
            for k, vc in enumerate(ev.coords):
                if not vc.is_zero():
                    key = (um, k)
                    out[key] = out.get(key, ZERO) + scale * uc * vc
    return tuple((k, v) for k, v in out.items() if not v.is_zero())


def _merge_right(pairs) -> list:
    """Collect (UqElem, Clifford index) contributions into one UqElem per index."""
    acc: dict = {}
    for k, u in pairs:
        acc[k] = acc[k] + u if k in acc else u
    return [(u, ClqElem.basis(k)) for k, u in sorted(acc.items()) if not u.is_zero()]


def sigma_R_cl_uq(v: ClqElem, y: UqElem) -> list:
    """sigma_R(v (x) y) as (UqElem, Clifford basis element) pairs, one per basis element."""
    pairs = []
    for i, vc in enumerate(v.coords):
        if vc.is_zero():
            continue
        for mono, yc in y.terms.items():
            for (um, k), coef in braid_basis_monomial(i, mono):
                pairs.append((k, UqElem({um: coef * vc * yc})))
    return _merge_right(pairs)


def sigma_R_uq_cl(y: UqElem, v: ClqElem) -> list:
    """The braiding in the other orientation: tau R (y (x) v), as (ClqElem, UqElem) pairs.

    E^m acts on the U_q factor by the adjoint action and F^m on the Clifford
    factor; this is the convention of the tabulated R-matrix braiding of
    {X, Z, Y} against {v2, v0, vm2}.
    """
    pairs = []
    fv = v
    for m in range(MAX_M):
        if fv.is_zero():
            break
        ey = uq_ad(_e_power(m), y) if m else y
        if ey.is_zero():
            break
        for i, vc in enumerate(fv.coords):
            if vc.is_zero():
                continue
            for mono, yc in ey.terms.items():
                scale = r_coefficient(m) * _pow_q_half(WEIGHTS[i], ad_weight(mono))
                pairs.append((i, UqElem({mono: scale * vc * yc})))
        fv = uq_action_clq(F, fv)
    return [(cl, u) for u, cl in _merge_right(pairs)]


# --- inverse braiding for the opposite product -----------------------------------


def _diag_inverse_terms(terms: dict) -> dict:
    """Apply q^{-H(x)H/2} to {(uq monomial, cl index): coef}."""
    return {(um, k): v * _pow_q_half(-ad_weight(um), WEIGHTS[k]) for (um, k), v in terms.items()}


def _apply_nilpotent(terms: dict) -> dict:
    """N' = sum_{m>=1} c_m ad_{E^m} (x) F^m on {(uq monomial, cl index): coef}."""
    out: dict = {}
    for (um, k), v in terms.items():
        y = UqElem({um: ONE})
        fv = ClqElem.basis(k)
        for m in range(1, MAX_M):
            fv = uq_action_clq(F, fv)
            if fv.is_zero():
                break
            ey = uq_ad(_e_power(m), y)
            if ey.is_zero():
                break
            scale = r_coefficient(m) * v
            for mono, yc in ey.terms.items():
                for j, vc in enumerate(fv.coords):
                    if not vc.is_zero():
                        key = (mono, j)
                        out[key] = out.get(key, ZERO) + scale * yc * vc
    return {k: v for k, v in out.items() if not v.is_zero()}


@register_cache
@lru_cache(maxsize=None)
def braid_plus_basis_monomial(i: int, mono: tuple) -> tuple:
    """Inverse-opposite braiding of b_i (x) mono.

    tau R21^{-1} equals R^{-1} tau, so the result is R^{-1}(mono (x) b_i) with
    R = q^{HH/2}(1 + N').  Since N' is nilpotent the inverse
    (1 + N')^{-1} = sum_k (-N')^k is a finite sum and exact.
    """
    start = _diag_inverse_terms({(mono, i): ONE})
    total = dict(start)
    term = start
    sign = -1
    while term:
        term = _apply_nilpotent(term)
        for k, v in term.items():
            total[k] = total.get(k, ZERO) + v * sign
        sign = -sign
    return tuple((k, v) for k, v in total.items() if not v.is_zero())


def sigma_plus_cl_uq(v: ClqElem, y: UqElem) -> list:
    pairs = []
    for i, vc in enumerate(v.coords):
        if vc.is_zero():
            continue
        for mono, yc in y.terms.items():
            for (um, k), coef in braid_plus_basis_monomial(i, mono):
                pairs.append((k, UqElem({um: coef * vc * yc})))
    return _merge_right(pairs)


def r_inverse_series(y: UqElem, v: ClqElem, factorial=qfactorial) -> dict:
    """The closed series for R^{-1} applied to y (x) v, with a pluggable factorial.

    R^{-1} = (sum_m q^{-m(m-1)/2} (q^-1 - q)^m / fact(m) E^m (x) F^m) q^{-HH/2}.
    """
    out: dict = {}
    for mono, yc in y.terms.items():
        for i, vc in enumerate(v.coords):
            if vc.is_zero():
                continue
            base = yc * vc * _pow_q_half(-ad_weight(mono), WEIGHTS[i])
            yy = UqElem({mono: ONE})
            fv = ClqElem.basis(i)
            for m in range(MAX_M):
                if fv.is_zero():
                    break
                ey = uq_ad(_e_power(m), yy) if m else yy
                if ey.is_zero():
                    break
                coef = base * q ** (-(m * (m - 1) // 2)) * (q ** -1 - q) ** m / factorial(m)
                for um, uc in ey.terms.items():
                    for j, fc in enumerate(fv.coords):
                        if not fc.is_zero():
                            key = (um, j)
                            out[key] = out.get(key, ZERO) + coef * uc * fc
                fv = uq_action_clq(F, fv)
    return {k: v for k, v in out.items() if not v.is_zero()}


def qfactorial_q2(m: int) -> Scalar:
    """[m]_{q^2}! with [n]_{q^2} = (q^{2n} - q^{-2n}) / (q^2 - q^{-2})."""
    out = ONE
    for n in range(1, m + 1):
        out = out * (q ** (2 * n) - q ** (-2 * n)) / (q ** 2 - q ** -2)
    return out


# --- module braiding -----------------------------------------------------------------


def sigma_R_cl_mod(v: ClqElem, k: int, module) -> list:
    """sigma_R(v (x) w_{lambda-2k}) as a list of ((depth, coefficient), ClqElem).

    ``module`` provides ``f_power_coefficient(m, k)`` (so that
    F^m w_{lambda-2k} = coefficient * w_{lambda-2(k+m)}), ``in_range(k)`` and
    ``half_weight_power(even_weight, k)`` returning q^{even_weight * wt(w_k) / 2}.
    """
    out = []
    for i, vc in enumerate(v.coords):
        if vc.is_zero():
            continue
        for m, ev in enumerate(_e_powers(i)):
            if not module.in_range(k + m):
                break
            fc = module.f_power_coefficient(m, k)
            if fc.is_zero():
                break
            wv = WEIGHTS[i] + 2 * m
            scale = r_coefficient(m) * fc * module.half_weight_power(wv, k + m) * vc
            out.append(((k + m, scale), ev))
    return out


# --- V (x) V ---------------------------------------------------------------------------

LETTERS = clq.LETTERS
LETTER_WEIGHT = clq.LETTER_WEIGHT


def _letter_vec(i: int) -> ClqElem:
    return ClqElem.basis(i + 1)


@register_cache
@lru_cache(maxsize=None)
def letter_action(gen: str) -> tuple:
    """3x3 matrix of E, F, K or Ki on (v2, v0, vm2); column j is the image of letter j."""
    x = {"E": E, "F": F, "K": K, "Ki": Ki}[gen]
    m = zeros(3, 3)
    for j in range(3):
        img = uq_action_clq(x, _letter_vec(j))
        for i in range(3):
            m[i][j] = img[i + 1]
    return tuple(tuple(r) for r in m)


def _kron(a, b):
    n, m = len(a), len(b)
    return [[a[i // m][j // m] * b[i % m][j % m] for j in range(n * m)] for i in range(n * m)]


def tensor_action(gen: str) -> list:
    """Diagonal action on V (x) V through the coproduct; index 3*i + j for v_i (x) v_j."""
    if gen == "E":
        return matadd(_kron(letter_action("E"), letter_action("K")), _kron(identity(3), letter_action("E")))
    if gen == "F":
        return matadd(_kron(letter_action("F"), identity(3)), _kron(letter_action("Ki"), letter_action("F")))
    return _kron(letter_action(gen), letter_action(gen))


@register_cache
@lru_cache(maxsize=1)
def _sigma_R_VV() -> tuple:
    m = zeros(9, 9)
    e_pows = [[_letter_vec(i)] for i in range(3)]
    for i in range(3):
        while True:
            nxt = uq_action_clq(E, e_pows[i][-1])
            if nxt.is_zero():
                break
            e_pows[i].append(nxt)
    for i in range(3):
        for j in range(3):
            fy = _letter_vec(j)
            for mm, ev in enumerate(e_pows[i]):
                if mm:
                    fy = uq_action_clq(F, fy)
                if fy.is_zero():
                    break
                for a in range(3):
                    for b in range(3):
                        coef = ev[a + 1] * fy[b + 1]
                        if coef.is_zero():
                            continue
                        scale = r_coefficient(mm) * _pow_q_half(LETTER_WEIGHT[a], LETTER_WEIGHT[b])
                        # flipped output: (F^m y) (x) (E^m x)
                        m[3 * b + a][3 * i + j] = m[3 * b + a][3 * i + j] + scale * coef
    return tuple(tuple(r) for r in m)


def sigma_R_VV() -> list:
    """9x9 matrix of the R-matrix braiding on V (x) V; column = image of basis vector."""
    return [list(r) for r in _sigma_R_VV()]


def vv_vector(pairs) -> list:
    """Coordinates of sum coef * x (x) y given as (coef, x, y) with letter indices."""
    v = [ZERO] * 9
    for coef, a, b in pairs:
        v[3 * a + b] = v[3 * a + b] + as_scalar(coef)
    return v


EIGENVALUES = (q ** 2, -q ** -2, q ** -4)


@register_cache
@lru_cache(maxsize=1)
def _decomposition() -> tuple:
    s = sigma_R_VV()
    ident = identity(9)
    projs = []
    for lam in EIGENVALUES:
        p = ident
        for mu in EIGENVALUES:
            if mu != lam:
                p = matmul(p, matscale(matadd(s, ident, -mu), (lam - mu).inverse()))
        projs.append(p)
    # highest weight vectors: kernel of E on the weight-4, 2, 0 spaces
    e_mat = tensor_action("E")
    hw = []
    for weight in (4, 2, 0):
        idx = [3 * a + b for a in range(3) for b in range(3) if LETTER_WEIGHT[a] + LETTER_WEIGHT[b] == weight]
        sub = [[e_mat[r][col] for col in idx] for r in range(9)]
        ker = nullspace(sub)
        vecs = []
        for kv in ker:
            full = [ZERO] * 9
            for col, x in zip(idx, kv):
                full[col] = x
            vecs.append(full)
        hw.append(vecs)
    return tuple(tuple(tuple(r) for r in p) for p in projs), tuple(tuple(tuple(v) for v in vs) for vs in hw)


def decompose_VV() -> tuple:
    """(highest weight vectors [w1, w2, w3], projectors [P4, P2, P0])."""
    projs, hw = _decomposition()
    vectors = []
    for vs in hw:
        if len(vs) != 1:
            raise ArithmeticError("unexpected highest weight multiplicity")
        vectors.append(list(vs[0]))
    return vectors, [[list(r) for r in p] for p in projs]


@register_cache
@lru_cache(maxsize=1)
def _sigma_tilde() -> tuple:
    _, (p4, p2, p0) = decompose_VV()
    m = matadd(matadd(p4, p2, -1), p0)
    return tuple(tuple(r) for r in m)


def sigma_tilde() -> list:
    """Normalized braiding P4 - P2 + P0 on V (x) V."""
    return [list(r) for r in _sigma_tilde()]


def apply(m, v: list) -> list:
    return [sum((m[i][j] * v[j] for j in range(len(v)) if not v[j].is_zero()), ZERO) for i in range(len(m))]


# --- bilinear form -----------------------------------------------------------------------


def gram() -> list:
    g = zeros(3, 3)
    g[0][2] = c
    g[1][1] = (1 + q ** 2) * c / q ** 3
    g[2][0] = c / q ** 2
    return g


def bilinear_form(x: int | str, y: int | str) -> Scalar:
    """Form on the letters v2, v0, vm2 (given by index or name)."""
    if isinstance(x, str):
        x = LETTERS.index(x)
    if isinstance(y, str):
        y = LETTERS.index(y)
    return gram()[x][y]


def form_on(u: list, w: list) -> Scalar:
    g = gram()
    return sum((u[i] * g[i][j] * w[j] for i in range(3) for j in range(3)), ZERO)


def check_ad_invariance() -> bool:
    """<X(1) v, X(2) w> = eps(X) <v, w> for X in E, F, K on all letter pairs."""
    col = lambda m, j: [m[i][j] for i in range(3)]  # noqa: E731
    act = {g: letter_action(g) for g in ("E", "F", "K", "Ki")}
    basis = [[ONE if i == j else ZERO for i in range(3)] for j in range(3)]
    for a in range(3):
        for b in range(3):
            va, vb = basis[a], basis[b]
            # Delta E = E (x) K + 1 (x) E
            if form_on(col(act["E"], a), col(act["K"], b)) + form_on(va, col(act["E"], b)) != ZERO:
                return False
            # Delta F = F (x) 1 + K^-1 (x) F
            if form_on(col(act["F"], a), vb) + form_on(col(act["Ki"], a), col(act["F"], b)) != ZERO:
                return False
            if form_on(col(act["K"], a), col(act["K"], b)) != form_on(va, vb):
                return False
    return True


def symmetric_relations() -> list:
    """x (x) y + sigma~(x (x) y) - 2<x,y> 1 for all letter pairs, as 10-vectors (V(x)V, 1)."""
    st = sigma_tilde()
    out = []
    for a in range(3):
        for b in range(3):
            v = [ZERO] * 9
            v[3 * a + b] = ONE
            img = apply(st, v)
            out.append([x + y for x, y in zip(v, img)] + [-2 * bilinear_form(a, b)])
    return out


def ideal_generator_vectors() -> list:
    """The generators of the Clifford ideal as 10-vectors."""
    out = []
    for gen in clq.ideal_generators():
        v = [ZERO] * 10
        for coef, word in gen:
            if word:
                v[3 * word[0] + word[1]] = v[3 * word[0] + word[1]] + coef
            else:
                v[9] = v[9] + coef
        out.append(v)
    return out


def ideal_generators_check() -> bool:
    """The ideal generators span exactly the shifted symmetric part."""
    sym = symmetric_relations()
    gens = ideal_generator_vectors()
    r = rank(sym)
    return r == 6 and rank(gens) == 6 and all(in_span(sym, g) for g in gens)


# --- quantum exterior algebra -------------------------------------------------------------


def _symmetric_part() -> list:
    _, (p4, _, p0) = decompose_VV()
    s = matadd(p4, p0)
    vecs = []
    for j in range(9):
        col = [s[i][j] for i in range(9)]
        if any(not x.is_zero() for x in col):
            vecs.append(col)
    # keep an independent subset
    basis: list = []
    for v in vecs:
        if not basis or not in_span(basis, v):
            basis.append(v)
    return basis


def lambda_q_dims(dmax: int) -> list:
    """Graded dimensions of T(V) modulo the ideal generated by the +1 eigenspace of sigma~."""
    if dmax < 0 or dmax > 6:
        raise ValueError("dmax must lie in 0..6")
    sym = _symmetric_part()
    rel_vectors = []
    for v in sym:
        terms = {(a, b): v[3 * a + b] for a in range(3) for b in range(3) if not v[3 * a + b].is_zero()}
        rel_vectors.append(terms)
    dims = []
    for d in range(dmax + 1):
        if dims and dims[-1] == 0:
            dims.append(0)
            continue
        if d < 2:
            dims.append(3 ** d)
            continue
        dims.append(_degree_dimension(d, rel_vectors))
    return dims


def _words(d: int):
    if d == 0:
        yield ()
        return
    for w in _words(d - 1):
        for a in range(3):
            yield w + (a,)


def _degree_dimension(d: int, rels: list) -> int:
    by_weight: dict = {}
    for w in _words(d):
        by_weight.setdefault(sum(LETTER_WEIGHT[a] for a in w), []).append(w)
    total = 0
    for weight, words in by_weight.items():
        index = {w: i for i, w in enumerate(words)}
        rows = []
        for pos in range(d - 1):
            for left in _words(pos):
                for right in _words(d - 2 - pos):
                    wl = sum(LETTER_WEIGHT[a] for a in left) + sum(LETTER_WEIGHT[a] for a in right)
                    for rel in rels:
                        rw = LETTER_WEIGHT[next(iter(rel))[0]] + LETTER_WEIGHT[next(iter(rel))[1]]
                        if wl + rw != weight:
                            continue
                        row = [ZERO] * len(words)
                        for (a, b), coef in rel.items():
                            row[index[left + (a, b) + right]] = coef
                        rows.append(row)
        r = rank(rows) if rows else 0
        total += len(words) - r
    return total
