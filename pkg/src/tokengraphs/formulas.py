"""Closed-form independence numbers for the supported family/operator
pairs, plus the quarter-squares sequence helpers.

Every evaluator uses exact integer arithmetic and rejects parameters
outside its accepted domain instead of extrapolating. The accepted
domain of a formula is sometimes wider than the range its source states;
both are recorded on ``FormulaId`` (the wider range is the one confirmed
by the exhaustive solver in the test suite).
"""

from __future__ import annotations

from enum import Enum


class FormulaId(Enum):
    """Formula registry entry: (key, stated minimum m, accepted minimum m)."""

    DV_PATH = ("dv_path", 2, 2)
    DV_CYCLE = ("dv_cycle", 3, 3)
    DV_FAN = ("dv_fan", 2, 1)
    DV_WHEEL = ("dv_wheel", 4, 3)
    PAIR_PATH = ("pair_path", 3, 1)
    PAIR_FAN = ("pair_fan", 1, 1)
    PAIR_CYCLE = ("pair_cycle", 3, 3)
    PAIR_WHEEL = ("pair_wheel", 3, 3)
    GRID = ("grid", 1, 1)
    ALPHA_PATH = ("alpha_path", 1, 1)
    ALPHA_CYCLE = ("alpha_cycle", 3, 3)

    def __init__(self, key: str, stated_min: int, accepted_min: int):
        self.key = key
        self.stated_min = stated_min
        self.accepted_min = accepted_min


def _require(formula: FormulaId, m: int) -> None:
    if m < formula.accepted_min:
        raise ValueError(f"{formula.key} needs m >= {formula.accepted_min}, got {m}")


def dv_path(m: int) -> int:
    """alpha of the double vertex graph of P_m: floor(m^2/4)."""
    _require(FormulaId.DV_PATH, m)
    return m * m // 4


def dv_cycle(m: int) -> int:
    """alpha of the double vertex graph of C_m: floor(m*floor(m/2)/2)."""
    _require(FormulaId.DV_CYCLE, m)
    return m * (m // 2) // 2


def dv_fan(m: int) -> int:
    """alpha of the double vertex graph of the fan on m+1 vertices:
    floor(m^2/4), with the degenerate single-token case at m = 1."""
    _require(FormulaId.DV_FAN, m)
    if m == 1:
        return 1
    return m * m // 4


def dv_wheel(m: int) -> int:
    """alpha of the double vertex graph of the wheel on m+1 vertices:
    floor((m/2)*floor(m/2)), except the machine-checked value 2 at m = 3."""
    _require(FormulaId.DV_WHEEL, m)
    if m == 3:
        return 2
    return m * (m // 2) // 2


def pair_path(m: int) -> int:
    """alpha of the pair graph of P_m: floor((m+1)^2/4)."""
    _require(FormulaId.PAIR_PATH, m)
    return (m + 1) * (m + 1) // 4


def pair_fan(m: int) -> int:
    """alpha of the pair graph of the fan on m+1 vertices: one more than
    the path value (the apex diagonal joins any maximum set)."""
    _require(FormulaId.PAIR_FAN, m)
    return pair_path(m) + 1


def pair_cycle(m: int) -> int:
    """alpha of the pair graph of C_m: k(k+1) for m = 2k, and
    k(k+1) + floor((k+1)/2) for m = 2k+1."""
    _require(FormulaId.PAIR_CYCLE, m)
    k = m // 2
    if m % 2 == 0:
        return k * (k + 1)
    return k * (k + 1) + (k + 1) // 2


def pair_wheel(m: int) -> int:
    """alpha of the pair graph of the wheel on m+1 vertices: one more
    than the cycle value."""
    _require(FormulaId.PAIR_WHEEL, m)
    return pair_cycle(m) + 1


def grid_alpha(r: int, s: int) -> int:
    """alpha of the grid P_r x P_s (checkerboard count)."""
    if r < 1 or s < 1:
        raise ValueError(f"grid needs r, s >= 1, got ({r}, {s})")
    rc = (r + 1) // 2
    sc = (s + 1) // 2
    return rc * sc + (r - rc) * (s - sc)


def alpha_path(m: int) -> int:
    """alpha of P_m: ceil(m/2)."""
    _require(FormulaId.ALPHA_PATH, m)
    return (m + 1) // 2


def alpha_cycle(m: int) -> int:
    """alpha of C_m: floor(m/2)."""
    _require(FormulaId.ALPHA_CYCLE, m)
    return m // 2


def a002620(n: int) -> int:
    """Quarter-squares: floor(n^2/4)."""
    if n < 0:
        raise ValueError(f"a002620 needs n >= 0, got {n}")
    return n * n // 4


def a002620_recurrence_checks(n_max: int) -> bool:
    """Check the quarter-squares identities up to n_max:

    1. floor(n/2) * ceil(n/2) = floor(n^2/4)
    2. a(n) = a(n-1) + floor(n/2) = a(n-1) + ceil((n-1)/2), a(0) = 0
    3. a(n) = a(n-2) + n - 1 for n >= 2
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    for n in range(n_max + 1):
        if (n // 2) * ((n + 1) // 2) != a002620(n):
            return False
        # floor(n/2) and ceil((n-1)/2) coincide, so one check covers both
        # stated forms of the first-order recurrence.
        if n >= 1 and a002620(n) != a002620(n - 1) + n // 2:
            return False
        if n >= 2 and a002620(n) != a002620(n - 2) + n - 1:
            return False
    return True


EVALUATORS = {
    FormulaId.DV_PATH: dv_path,
    FormulaId.DV_CYCLE: dv_cycle,
    FormulaId.DV_FAN: dv_fan,
    FormulaId.DV_WHEEL: dv_wheel,
    FormulaId.PAIR_PATH: pair_path,
    FormulaId.PAIR_FAN: pair_fan,
    FormulaId.PAIR_CYCLE: pair_cycle,
    FormulaId.PAIR_WHEEL: pair_wheel,
    FormulaId.ALPHA_PATH: alpha_path,
    FormulaId.ALPHA_CYCLE: alpha_cycle,
}


def evaluate(formula: FormulaId, m: int) -> int:
    """Evaluate a single-parameter formula by id."""
    if formula is FormulaId.GRID:
        raise ValueError("grid takes two parameters; call grid_alpha(r, s)")
    return EVALUATORS[formula](m)
