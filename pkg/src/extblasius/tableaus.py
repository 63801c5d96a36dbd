"""Butcher tableaus for the explicit fixed-step Runge-Kutta engine.

Two schemes are shipped: the classical four-stage fourth-order method and the
Cooper-Verner eleven-stage eighth-order method, whose coefficients are exact
algebraic expressions in sqrt(21).  Both are plain explicit tableaus: strictly
lower-triangular coupling matrix ``a``, weights ``b`` summing to one, and nodes
``c`` equal to the row sums of ``a``.
"""

from dataclasses import dataclass
from math import sqrt

import numpy as np


@dataclass(frozen=True)
class Tableau:
    name: str
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    order: int

    def __post_init__(self):
        s = self.b.shape[0]
        if self.a.shape != (s, s) or self.c.shape != (s,):
            raise ValueError("tableau arrays must share one stage count")
        if np.any(np.triu(self.a) != 0.0):
            raise ValueError("tableau must be explicit (strictly lower triangular)")
        for arr in (self.a, self.b, self.c):
            arr.setflags(write=False)

    @property
    def stages(self) -> int:
        return self.b.shape[0]


def classical_rk4() -> Tableau:
    """The textbook four-stage fourth-order scheme."""
    a = np.zeros((4, 4))
    a[1, 0] = 0.5
    a[2, 1] = 0.5
    a[3, 2] = 1.0
    b = np.array([1 / 6, 1 / 3, 1 / 3, 1 / 6])
    return Tableau("classical-rk4", a, b, a.sum(axis=1), order=4)


def cooper_verner_8() -> Tableau:
    """Cooper-Verner eleven-stage eighth-order scheme."""
    s = sqrt(21.0)
    a = np.zeros((11, 11))
    a[1, 0] = 1 / 2
    a[2, 0] = 1 / 4
    a[2, 1] = 1 / 4
    a[3, 0] = 1 / 7
    a[3, 1] = -(7 + 3 * s) / 98
    a[3, 2] = (21 + 5 * s) / 49
    a[4, 0] = (11 + s) / 84
    a[4, 2] = (18 + 4 * s) / 63
    a[4, 3] = (21 - s) / 252
    a[5, 0] = (5 + s) / 48
    a[5, 2] = (9 + s) / 36
    a[5, 3] = (-231 + 14 * s) / 360
    a[5, 4] = (63 - 7 * s) / 80
    a[6, 0] = (10 - s) / 42
    a[6, 2] = (-432 + 92 * s) / 315
    a[6, 3] = (633 - 145 * s) / 90
    a[6, 4] = (-504 + 115 * s) / 70
    a[6, 5] = (63 - 13 * s) / 35
    a[7, 0] = 1 / 14
    a[7, 4] = (14 - 3 * s) / 126
    a[7, 5] = (13 - 3 * s) / 63
    a[7, 6] = 1 / 9
    a[8, 0] = 1 / 32
    a[8, 4] = (91 - 21 * s) / 576
    a[8, 5] = 11 / 72
    a[8, 6] = -(385 + 75 * s) / 1152
    a[8, 7] = (63 + 13 * s) / 128
    a[9, 0] = 1 / 14
    a[9, 4] = 1 / 9
    a[9, 5] = -(733 + 147 * s) / 2205
    a[9, 6] = (515 + 111 * s) / 504
    a[9, 7] = -(51 + 11 * s) / 56
    a[9, 8] = (132 + 28 * s) / 245
    a[10, 4] = (-42 + 7 * s) / 18
    a[10, 5] = (-18 + 28 * s) / 45
    a[10, 6] = -(273 + 53 * s) / 72
    a[10, 7] = (301 + 53 * s) / 72
    a[10, 8] = (28 - 28 * s) / 45
    a[10, 9] = (49 - 7 * s) / 18
    b = np.array([1 / 20, 0, 0, 0, 0, 0, 0, 49 / 180, 16 / 45, 49 / 180, 1 / 20])
    return Tableau("cooper-verner-8", a, b, a.sum(axis=1), order=8)


TABLEAUS: dict[int, Tableau] = {4: classical_rk4(), 8: cooper_verner_8()}
