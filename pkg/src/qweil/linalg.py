"""Dense exact linear algebra over ``Scalar`` (matrices are lists of rows)."""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar, as_scalar


def zeros(n: int, m: int) -> list[list[Scalar]]:
    return [[ZERO] * m for _ in range(n)]


def identity(n: int) -> list[list[Scalar]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        row = a[i]
        for p in range(k):
            x = row[p]
            if x.is_zero():
                continue
            bp = b[p]
            for j in range(m):
                if not bp[j].is_zero():
                    out[i][j] = out[i][j] + x * bp[j]
    return out


def matadd(a, b, scale=1):
    scale = as_scalar(scale)
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(a, s):
    s = as_scalar(s)
    return [[s * x for x in row] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), ZERO) for row in a]


def is_zero_matrix(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(a):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(row) for row in a]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][col].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(a) -> int:
    if not a or not a[0]:
        return 0
    # eliminate on the shorter side
    if len(a) > len(a[0]):
        a = transpose(a)
    return len(rref(a)[1])


def nullspace(a) -> list[list[Scalar]]:
    """Basis of {x : a x = 0}, one free variable set to 1 per vector."""
    ncols = len(a[0])
    m, pivots = rref(a)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(m, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def column_space(a) -> list[list[Scalar]]:
    """Independent columns of ``a`` spanning its image."""
    _, pivots = rref(a)
    return [[row[j] for row in a] for j in pivots]


def in_span(vectors, v) -> bool:
    if not vectors:
        return all(x.is_zero() for x in v)
    return rank([list(w) for w in vectors] + [list(v)]) == rank([list(w) for w in vectors])


def det2(m) -> Scalar:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def inverse(a):
    n = len(a)
    aug = [list(row) + idrow for row, idrow in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]
