"""Published reference values the verification suites compare against."""

from __future__ import annotations

from .algebra import LaurentPoly


def _desc(top: int, coeffs) -> LaurentPoly:
    return LaurentPoly({top - k: c for k, c in enumerate(coeffs) if c})


# V for m = 1, 2, 3, highest power first
JONES = {
    1: _desc(5, [1, -2, 2, -2, 2, -1, 1]),
    2: _desc(7, [1, -4, 8, -12, 15, -16, 15, -11, 8, -4, 1]),
    3: _desc(12, [1, -6, 18, -38, 64, -91, 111, -118, 111, -92, 66, -39, 19, -6, 1]),
}

SEGMENT_OUTER = 2.1956467
SEGMENT_INNER = 0.45544667
SEGMENT_LAMBDA = complex(-0.962492, 0.271310)

# zeros of R_1 in the upper half plane; each comes with its conjugate
R1_ZEROS = {
    "A_o": complex(1.398781, 1.091186),
    "A_i": complex(0.444442, 0.346708),
    "H_o": complex(-0.579679, 1.365109),
    "H_i": complex(-0.263544, 0.620631),
}

CIRCLE_ARC = complex(-0.136945, 0.990579)
CIRCLE_ARC_DEG = 97.8711
