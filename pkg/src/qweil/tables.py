"""Reference tables for V (x) V, the braidings and the adjoint action.

Letters are indexed 0, 1, 2 for v2, v0, vm2.  Tensors are lists of
(coefficient, left letter, right letter).
"""

from __future__ import annotations

from .scalars import ONE, ZERO, c, q
from .uqsl2 import X, Y, Z

# Spanning vectors of the three isotypic components of V (x) V, highest weight first.
VV_COMPONENTS = {
    4: [
        [(ONE, 0, 0)],
        [(-q ** -2, 0, 1), (-ONE, 1, 0)],
        [(-(q ** 2 + 1) / q, 2, 0), ((q ** 2 + 1) / q ** 2, 1, 1), (-(q ** 2 + 1) / q ** 5, 0, 2)],
        [
            ((q ** 2 + 1) * (q ** 4 + q ** 2 + 1) / q ** 5, 1, 2),
            ((q ** 6 + 2 * q ** 4 + 2 * q ** 2 + 1) / q ** 3, 2, 1),
        ],
        [((q ** 2 + 1) ** 2 * (q ** 4 + 1) * (q ** 4 + q ** 2 + 1) / q ** 6, 2, 2)],
    ],
    2: [
        [(ONE, 1, 0), (-q ** 2, 0, 1)],
        [((q ** 2 + 1) / q, 2, 0), (q ** 2 - 1, 1, 1), (-(q ** 2 + 1) / q, 0, 2)],
        [(-(q ** 2 + 1) / q, 2, 1), (q * (q ** 2 + 1), 1, 2)],
    ],
    0: [
        [((q ** 2 + 1) / q, 0, 2), ((q ** 2 + 1) / q ** 3, 2, 0), (ONE, 1, 1)],
    ],
}

_D = q ** 4 + 1
_A = 2 * q ** 2 / _D
_B = 2 * (q ** 5 - q ** 3) / ((q ** 2 + 1) * _D)
_G = 2 * (q ** 2 - 1) * (q ** 2 + 1) / (q * _D)

# (x, y) -> (tensor part, scalar part, form value): the tensor part plus the
# scalar part equals <x,y> - sigma~(x (x) y).
SIGMA_TILDE_ROWS = {
    (0, 0): ([(-ONE, 0, 0)], ZERO, ZERO),
    (0, 1): ([((q ** 4 - 1) / _D, 0, 1), (-_A, 1, 0)], ZERO, ZERO),
    (0, 2): ([(-_A, 2, 0), (-_B, 1, 1), ((-q ** 4 + 2 * q ** 2 - 1) / _D, 0, 2)], c, c),
    (1, 0): ([((1 - q ** 4) / _D, 1, 0), (-_A, 0, 1)], ZERO, ZERO),
    (1, 1): (
        [(_G, 2, 0), ((q ** 4 - 4 * q ** 2 + 1) / _D, 1, 1), (-_G, 0, 2)],
        (q ** 2 + 1) * c / q ** 3,
        (q ** 2 + 1) * c / q ** 3,
    ),
    # the value forced by the spectral projectors, mirroring the (v2, v0) row
    (1, 2): ([((q ** 4 - 1) / _D, 1, 2), (-_A, 2, 1)], ZERO, ZERO),
    (2, 0): ([((-q ** 4 + 2 * q ** 2 - 1) / _D, 2, 0), (_B, 1, 1), (-_A, 0, 2)], c / q ** 2, c / q ** 2),
    (2, 1): ([((1 - q ** 4) / _D, 2, 1), (-_A, 1, 2)], ZERO, ZERO),
    (2, 2): ([(-ONE, 2, 2)], ZERO, ZERO),
}

_P = (q ** 2 - 1) * (q ** 2 + 1)
UQ_LETTERS = {"X": X, "Z": Z, "Y": Y}

# (U_q letter, Clifford letter) -> tau R(u (x) v) as (coefficient, Clifford letter, U_q letter).
SIGMA_R_ROWS = {
    ("X", 0): [(q ** 2, 0, "X")],
    ("X", 1): [(ONE, 1, "X")],
    ("X", 2): [(q ** -2, 2, "X")],
    ("Z", 0): [(_P / q ** 2, 1, "X"), (ONE, 0, "Z")],
    ("Z", 1): [(ONE, 1, "Z"), (-(q ** 2 - 1) * (q ** 2 + 1) ** 2 / q ** 5, 2, "X")],
    ("Z", 2): [(ONE, 2, "Z")],
    ("Y", 0): [(q ** -2, 0, "Y"), ((1 - q ** 2) / q, 1, "Z"), ((q ** 2 - 1) ** 2 * (q ** 2 + 1) / q ** 4, 2, "X")],
    ("Y", 1): [(_P / q ** 2, 2, "Z"), (ONE, 1, "Y")],
    ("Y", 2): [(q ** 2, 2, "Y")],
}

# (generator, U_q letter) -> (coefficient, U_q letter) for ad_generator(letter).
ADJOINT_ROWS = {
    ("K", "X"): (q ** 2, "X"),
    ("F", "X"): (-ONE, "Z"),
    ("K", "Z"): (ONE, "Z"),
    ("E", "Z"): (-(q + q ** -1), "X"),
    ("E", "Y"): (ONE, "Z"),
    ("K", "Y"): (q ** -2, "Y"),
    ("F", "Z"): (q + q ** -1, "Y"),
}
