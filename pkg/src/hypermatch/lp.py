"""Exact phase-one simplex over the rationals.

Decides whether ``A z = b, z >= 0`` has a solution.  Pivoting follows
Bland's least-index rule, so the method terminates on degenerate systems.
When the system is infeasible the final simplex multipliers give a Farkas
certificate ``y`` with ``y.A <= 0`` componentwise and ``y.b = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class PhaseOneResult:
    feasible: bool
    x: tuple[Fraction, ...] | None  # a solution when feasible
    farkas: tuple[Fraction, ...] | None  # a certificate when infeasible
    pivots: int


def phase_one(A: Sequence[Sequence], b: Sequence) -> PhaseOneResult:
    m = len(A)
    N = len(A[0]) if m else 0
    if len(b) != m or any(len(row) != N for row in A):
        raise ValueError("inconsistent system dimensions")

    sign = [1] * m
    rows: list[list[Fraction]] = []
    for i in range(m):
        if b[i] < 0:
            sign[i] = -1
        rows.append([Fraction(sign[i] * x) for x in A[i]] + [Fraction(sign[i] * b[i])])

    # reuse unit columns as the starting basis where possible
    basis: list[int | None] = [None] * m
    for j in range(N):
        nonzero = [i for i in range(m) if rows[i][j] != 0]
        if len(nonzero) == 1 and rows[nonzero[0]][j] == 1 and basis[nonzero[0]] is None:
            basis[nonzero[0]] = j
    art_rows = [i for i in range(m) if basis[i] is None]
    width = N + len(art_rows)
    for i in range(m):
        rows[i][N:N] = [Fraction(0)] * len(art_rows)
    for t, i in enumerate(art_rows):
        rows[i][N + t] = Fraction(1)
        basis[i] = N + t
    start = list(basis)
    cost = [0] * N + [1] * len(art_rows)

    # reduced costs with -(objective) in the last slot
    red = [Fraction(c) for c in cost] + [Fraction(0)]
    for i in art_rows:
        row = rows[i]
        for j in range(width + 1):
            if row[j]:
                red[j] -= row[j]

    pivots = 0
    while True:
        enter = next((j for j in range(width) if red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coef = rows[i][enter]
            if coef > 0:
                key = (rows[i][width] / coef, basis[i])
                if best is None or key < best:
                    best, leave = key, i
        if leave is None:
            # cannot happen: the phase-one objective is bounded below by 0
            raise ArithmeticError("phase-one objective unbounded")
        _pivot(rows, red, leave, enter)
        basis[leave] = enter
        pivots += 1

    objective = -red[width]
    if objective == 0:
        x = [Fraction(0)] * N
        for i, j in enumerate(basis):
            if j < N:
                x[j] = rows[i][width]
        return PhaseOneResult(True, tuple(x), None, pivots)

    duals = [cost[start[i]] - red[start[i]] for i in range(m)]
    y = tuple(sign[i] * duals[i] / objective for i in range(m))
    return PhaseOneResult(False, None, y, pivots)


def _pivot(rows: list[list[Fraction]], red: list[Fraction], r: int, e: int) -> None:
    prow = rows[r]
    p = prow[e]
    if p != 1:
        for j, v in enumerate(prow):
            if v:
                prow[j] = v / p
    support = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(rows):
        if i != r:
            f = row[e]
            if f:
                for j in support:
                    row[j] -= f * prow[j]
    f = red[e]
    if f:
        for j in support:
            red[j] -= f * prow[j]
