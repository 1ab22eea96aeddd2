"""Counting numerical semigroups of fixed multiplicity and genus.

Closed forms are evaluated with exact rationals; a non-integral result
means a transcription error and raises instead of being rounded.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction as Q
from typing import Callable

from .kunz import count_kunz, count_lattice_points, reduced_system

METHODS = ("closed_form", "enumeration", "partition", "residue_sum")


@dataclass(frozen=True)
class CountReport:
    m: int
    g: int
    method: str
    value: int

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _fl(a: int, b: int) -> int:
    return a // b


def _integral(v: Q, what: str) -> int:
    if v.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {v}")
    return int(v)


def count_enumerated(m: int, g: int) -> CountReport:
    if m < 2:
        raise ValueError("enumeration needs multiplicity >= 2")
    return CountReport(m, g, "enumeration", count_kunz(m, g) if g >= 0 else 0)


def count_mult2(g: int) -> int:
    """Only ``<2, 2g+1>`` has multiplicity two and genus ``g >= 1``."""
    return 1 if g >= 1 else 0


def count_mult3_closed(g: int) -> int:
    # the formula g - floor((2g-1)/3) would give 1 at g = 0, 1 where no such semigroup exists
    if g < 2:
        return 0
    return g - _fl(2 * g - 1, 3)


def _mult4_res1(g: int) -> Q:
    if g == 4:
        return Q(1)
    if 5 <= g <= 8:
        return (Q(11, 4) - Q(g, 2)) * _fl(g, 2) + (g - 8) * _fl(g + 1, 3) + Q(g * g, 8) - Q(9 * g, 8) + 9
    if g == 9:
        return Q(5)
    if g >= 10:
        a = _fl(g + 1, 5)
        b = _fl(g + 1, 3)
        c = _fl(g + 2, 6)
        d = _fl(2 * g + 4, 5)
        h = _fl(g, 2)
        return (
            a**2
            - Q(3, 2) * b**2
            - Q(3, 2) * c**2
            - d**2
            + (Q(5, 4) - Q(g, 2)) * h
            + a
            + (g - Q(1, 2)) * b
            + (h - Q(1, 2)) * c
            + (-a + g + 1) * d
            - Q(g * g, 8)
            - Q(7 * g, 8)
        )
    return Q(0)


def _mult4_res2(g: int) -> Q:
    if g in (4, 5):
        return Q(1)
    if 6 <= g <= 7:
        return (7 - g) * _fl(2 * g + 1, 5) - Q(g * g, 4) + Q(25 * g, 4) - Q(59, 2)
    if g >= 8:
        g5 = _fl(g, 5)
        g4 = _fl(g, 4)
        g3 = _fl(g, 3)
        g2 = _fl(g, 2)
        t5 = _fl(2 * g, 5)
        p5 = _fl(g + 2, 5)
        p4 = _fl(g + 2, 4)
        u5 = _fl(2 * g + 1, 5)
        return (
            -(g5**2)
            + g4**2
            - Q(3, 2) * g3**2
            + t5**2
            - p5**2
            + p4**2
            + u5**2
            - g5
            + (g - Q(3, 2)) * g3
            + (1 - g) * t5
            + g4 * (1 - g2)
            + (Q(g, 2) - Q(1, 4)) * g2
            + t5 * p5
            - g2 * p4
            + (g5 - g + 1) * u5
            + Q(g * g, 8)
            - Q(g, 8)
        )
    return Q(0)


def _mult4_res3(g: int) -> Q:
    if g == 3:
        return Q(1)
    if 4 <= g <= 5:
        return Q(-21, 2) + Q(35, 8) * g - Q(3, 8) * g * g
    if g == 6:
        return Q(3)
    if g >= 7:
        g5 = _fl(g, 5)
        t5 = _fl(2 * g, 5)
        p3 = _fl(g + 2, 3)
        q6 = _fl(g + 5, 6)
        g2 = _fl(g, 2)
        return (
            g5**2
            - t5**2
            - Q(3, 2) * p3**2
            - Q(3, 2) * q6**2
            + g5
            + (-g5 + g - 1) * t5
            + (Q(g, 2) - Q(3, 4)) * g2
            + (g + Q(1, 2)) * p3
            + (-g2 + g + Q(1, 2)) * q6
            - Q(5 * g * g, 8)
            + Q(5 * g, 8)
        )
    return Q(0)


_RESIDUE = {1: _mult4_res1, 2: _mult4_res2, 3: _mult4_res3}


def count_mult4_residue(g: int, r: int) -> int:
    """Multiplicity-4 semigroups of genus ``g`` whose Frobenius number is ``r`` mod 4."""
    if r not in _RESIDUE:
        raise ValueError("residue must be 1, 2 or 3")
    return _integral(_RESIDUE[r](g), f"residue-{r} count at g={g}")


_MULT4_SMALL = (0, 0, 0, 1, 3, 4, 6, 7, 9, 11)


def count_mult4_closed(g: int) -> int:
    if g < 0:
        return 0
    if g <= 9:
        return _MULT4_SMALL[g]
    f4, f3, f2 = _fl(g, 4), _fl(g, 3), _fl(g, 2)
    a1, b1 = _fl(g + 1, 5), _fl(g + 1, 3)
    c6, p5, p4, p3 = _fl(g + 2, 6), _fl(g + 2, 5), _fl(g + 2, 4), _fl(g + 2, 3)
    q6 = _fl(g + 5, 6)
    u5, d5 = _fl(2 * g + 1, 5), _fl(2 * g + 4, 5)
    f5, t5 = _fl(g, 5), _fl(2 * g, 5)
    v = (
        f4**2
        - Q(3, 2) * f3**2
        + a1**2
        - Q(3, 2) * b1**2
        - Q(3, 2) * c6**2
        - p5**2
        + p4**2
        - Q(3, 2) * p3**2
        - Q(3, 2) * q6**2
        + u5**2
        - d5**2
        + (g - Q(3, 2)) * f3
        - f5 * t5
        + f4 * (1 - f2)
        + (Q(1, 4) + Q(g, 2)) * f2
        + a1
        + (g - Q(1, 2)) * b1
        + (f2 - Q(1, 2)) * c6
        + t5 * p5
        - f2 * p4
        + (g + Q(1, 2)) * p3
        + (-f2 + g + Q(1, 2)) * q6
        + (f5 - g + 1) * u5
        + (-a1 + g + 1) * d5
        - Q(5 * g * g, 8)
        - Q(3 * g, 8)
    )
    return _integral(v, f"#S(4,{g})")


def count_mult4_residues(g: int) -> int:
    # no residue 0: multiples of 4 are never gaps of a multiplicity-4 semigroup
    return sum(count_mult4_residue(g, r) for r in (1, 2, 3))


def count_mult4_case(g: int, r: int) -> int:
    """Lattice-point count of the reduced system with largest Apery element at residue ``r``."""
    return count_lattice_points(reduced_system(4, r), g)


def partition_count_enumerated(n: int) -> int:
    """Partitions ``x <= y <= z`` of ``n`` with ``x != 1``, ``y != 2``, ``z != 3``."""
    total = 0
    for x in range(2, n // 3 + 1):
        for y in range(max(x, 3), (n - x) // 2 + 1):
            z = n - x - y
            if z >= max(y, 4):
                total += 1
    return total


def partition_count_closed(n: int) -> int:
    if n < 9:
        return 0
    if n == 9:
        return 1
    if n <= 12:
        return (n - 12) + _fl(n, 2)
    a = _fl(n + 2, 3)
    v = Q(3, 2) * a**2 + Q(1, 2) * _fl(n, 2) + (-n - Q(3, 2)) * a + Q(n * n, 4) - Q(n, 4)
    return _integral(v, f"partition count at n={n}")


def count_mult5_enumerated(g: int) -> int:
    return count_enumerated(5, g).value


@dataclass(frozen=True)
class WindowMonotonicityResult:
    period: int
    start: int
    end: int
    ok: bool
    first_violation: int | None = None

    @property
    def window(self) -> int | None:
        """Index ``g // period`` of the residue window holding the first violation."""
        if self.first_violation is None:
            return None
        return self.first_violation // self.period

    def to_json(self) -> str:
        d = asdict(self)
        d["window"] = self.window
        return json.dumps(d)


def verify_nondecreasing(
    f: Callable[[int], int], g0: int, g1: int, period: int = 1
) -> WindowMonotonicityResult:
    """Check ``f(g) <= f(g+1)`` for every ``g`` in ``[g0, g1)``.

    ``first_violation`` is the smallest ``g`` with ``f(g) > f(g+1)``.
    """
    if g0 > g1:
        raise ValueError(f"empty genus range [{g0}, {g1}]")
    if period < 1:
        raise ValueError("period must be positive")
    prev = f(g0)
    for g in range(g0, g1):
        cur = f(g + 1)
        if prev > cur:
            return WindowMonotonicityResult(period, g0, g1, False, g)
        prev = cur
    return WindowMonotonicityResult(period, g0, g1, True)


def closed_form(m: int) -> Callable[[int], int] | None:
    return {2: count_mult2, 3: count_mult3_closed, 4: count_mult4_closed}.get(m)


def count(m: int, g: int, method: str = "auto") -> CountReport:
    """Dispatch a count query; ``auto`` prefers a closed form when one exists."""
    if method == "auto":
        method = "closed_form" if closed_form(m) else "enumeration"
    if method == "closed_form":
        f = closed_form(m)
        if f is None:
            raise ValueError(f"no closed form for multiplicity {m}")
        return CountReport(m, g, method, f(g))
    if method == "enumeration":
        return count_enumerated(m, g)
    if method in ("partition", "residue_sum") and m != 4:
        raise ValueError(f"method {method} only applies to multiplicity 4")
    if method == "partition":
        return CountReport(m, g, method, partition_count_closed(g + 6))
    if method == "residue_sum":
        return CountReport(m, g, method, count_mult4_residues(g) if g >= 3 else 0)
    raise ValueError(f"unknown method {method!r}")
