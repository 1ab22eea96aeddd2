"""Kunz coordinates and lattice points of the Kunz polytope.

A semigroup of multiplicity ``m`` with Apery elements ``w(i) = k_i*m + i``
is identified with the vector ``(k_1, ..., k_{m-1})``.  Valid vectors are
the positive integer solutions of

    x_i + x_j - x_{i+j}       >= 0    (i <= j, i + j < m)
    x_i + x_j - x_{i+j-m} + 1 >= 0    (i <= j, i + j > m)

and the genus is the coordinate sum.  Inequality rows are stored as integer
tuples ``(c_1, ..., c_{m-1}, c_0)`` read as ``c . (x, 1) >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import NumericalSemigroup

Row = tuple[int, ...]


class NotKunzVectorError(ValueError):
    """Raised for a vector outside the Kunz polytope; ``row`` is the first failing inequality."""

    def __init__(self, k, row: Row):
        self.k = tuple(k)
        self.row = row
        super().__init__(f"not a Kunz vector: {self.k} violates {list(row)} . (x, 1) >= 0")


@dataclass(frozen=True)
class KunzCoordinates:
    m: int
    k: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(self.k))
        if self.m < 2:
            raise ValueError("Kunz coordinates need multiplicity >= 2")
        if len(self.k) != self.m - 1:
            raise ValueError(f"expected {self.m - 1} coordinates, got {len(self.k)}")

    @property
    def genus(self) -> int:
        return sum(self.k)

    def first_violation(self) -> Row | None:
        return kunz_polytope(self.m).first_violation(self.k)

    def is_valid(self) -> bool:
        return self.first_violation() is None


@dataclass(frozen=True)
class KunzPolytope:
    m: int
    rows: tuple[Row, ...]

    def first_violation(self, x: Sequence[int]) -> Row | None:
        for r in self.rows:
            if sum(c * v for c, v in zip(r, x)) + r[-1] < 0:
                return r
        return None

    def contains(self, x: Sequence[int]) -> bool:
        return len(x) == self.m - 1 and self.first_violation(x) is None

    def to_gap(self) -> str:
        """GAP list syntax, e.g. ``[ [ 1, 0, -1 ], [ 0, 1, -1 ] ]``."""
        inner = ", ".join("[ " + ", ".join(map(str, r)) + " ]" for r in self.rows)
        return "[ " + inner + " ]"


def _unit(n: int, i: int, const: int) -> list[int]:
    row = [0] * (n + 1)
    row[i - 1] = 1
    row[n] = const
    return row


def _pair_row(m: int, i: int, j: int) -> Row | None:
    # coordinates are 1-based here, rows are 0-based
    n = m - 1
    if i + j == m:
        return None
    row = [0] * (n + 1)
    row[i - 1] += 1
    row[j - 1] += 1
    if i + j < m:
        row[i + j - 1] -= 1
    else:
        row[i + j - m - 1] -= 1
        row[n] = 1
    return tuple(row)


def _positivity(m: int) -> list[Row]:
    return [tuple(_unit(m - 1, i, -1)) for i in range(1, m)]


def kunz_polytope(m: int, verbatim: bool = False) -> KunzPolytope:
    """Inequality system of the Kunz polytope.

    The default form lists the positivity rows followed by one row per pair
    ``i <= j`` in lexicographic order.  ``verbatim=True`` instead runs over
    ordered pairs ``(i, j)`` and keeps the resulting duplicates, which is the
    layout printed by ``KunzPolytope`` in GAP's NumericalSgps.
    """
    if m < 2:
        raise ValueError("Kunz polytope needs multiplicity >= 2")
    rows = _positivity(m)
    for i in range(1, m):
        for j in range(1 if verbatim else i, m):
            r = _pair_row(m, i, j)
            if r is not None and (verbatim or r not in rows):
                rows.append(r)
    return KunzPolytope(m, tuple(rows))


def reduced_system(m: int, i_star: int) -> KunzPolytope:
    """Inequalities for Kunz vectors whose largest Apery element sits at residue ``i_star``.

    Pair inequalities only involve indices other than ``i_star``; in exchange
    ``k_{i*}*m + i* > k_i*m + i`` is imposed for every other ``i``, written
    over the integers as ``k_{i*} >= k_i + 1`` (``i > i*``) or
    ``k_{i*} >= k_i`` (``i < i*``).
    """
    if m < 2:
        raise ValueError("multiplicity must be >= 2")
    if not 1 <= i_star <= m - 1:
        raise ValueError(f"i_star must lie in 1..{m - 1}")
    n = m - 1
    rows = _positivity(m)
    others = [i for i in range(1, m) if i != i_star]
    for a, i in enumerate(others):
        for j in others[a:]:
            r = _pair_row(m, i, j)
            if r is not None and r not in rows:
                rows.append(r)
    for i in others:
        row = [0] * (n + 1)
        row[i_star - 1] = 1
        row[i - 1] = -1
        row[n] = -1 if i > i_star else 0
        rows.append(tuple(row))
    return KunzPolytope(m, tuple(rows))


def kunz_coordinates(S: NumericalSemigroup) -> KunzCoordinates:
    m = S.multiplicity
    if m == 1:
        raise ValueError("Kunz coordinates undefined for ℕ")
    return KunzCoordinates(m, tuple((S.apery[i] - i) // m for i in range(1, m)))


def semigroup_from_kunz(kc: KunzCoordinates) -> NumericalSemigroup:
    bad = kc.first_violation()
    if bad is not None:
        raise NotKunzVectorError(kc.k, bad)
    m = kc.m
    return NumericalSemigroup(m, (0,) + tuple(k * m + i for i, k in enumerate(kc.k, 1)))


class _Slicer:
    """Depth-first assignment of x_1..x_n under ``rows`` with ``sum(x) = total``.

    Rows are bucketed by their last nonzero coordinate, so that when x_t is
    chosen every row ending at t turns into a lower or upper bound on x_t.
    """

    def __init__(self, rows: Sequence[Row], n: int):
        self.n = n
        self.infeasible = False
        self.by_last: list[list[Row]] = [[] for _ in range(n)]
        for r in rows:
            nz = [i for i in range(n) if r[i]]
            if not nz:
                if r[n] < 0:
                    self.infeasible = True
                continue
            self.by_last[nz[-1]].append(r)

    def _interval(self, t: int, x: list[int], lo: int, hi: int) -> tuple[int, int]:
        for r in self.by_last[t]:
            s = r[self.n]
            for i in range(t):
                s += r[i] * x[i]
            c = r[t]
            if c > 0:
                lo = max(lo, -(s // c))
            else:
                hi = min(hi, s // -c)
        return lo, hi

    def points(self, total: int) -> Iterator[tuple[int, ...]]:
        n = self.n
        if self.infeasible or total < n:
            return
        x = [0] * n

        def walk(t: int, rem: int):
            if t == n - 1:
                lo, hi = self._interval(t, x, rem, rem)
                if lo <= hi:
                    x[t] = rem
                    yield tuple(x)
                return
            lo, hi = self._interval(t, x, 1, rem - (n - 1 - t))
            for v in range(lo, hi + 1):
                x[t] = v
                yield from walk(t + 1, rem - v)

        yield from walk(0, total)

    def count(self, total: int) -> int:
        """Number of points, without visiting the last two coordinates one by one."""
        n = self.n
        if self.infeasible or total < n:
            return 0
        if n == 1:
            return sum(1 for _ in self.points(total))
        x = [0] * n

        def last_pair(rem: int) -> int:
            # x_{n-1} = rem - x_{n-2}; rows ending at n-1 become bounds on x_{n-2}
            t = n - 2
            lo, hi = self._interval(t, x, 1, rem - 1)
            for r in self.by_last[n - 1]:
                s = r[n] + r[n - 1] * rem
                for i in range(t):
                    s += r[i] * x[i]
                c = r[t] - r[n - 1]
                if c > 0:
                    lo = max(lo, -(s // c))
                elif c < 0:
                    hi = min(hi, s // -c)
                elif s < 0:
                    return 0
            return max(0, hi - lo + 1)

        def walk(t: int, rem: int) -> int:
            if t == n - 2:
                return last_pair(rem)
            lo, hi = self._interval(t, x, 1, rem - (n - 1 - t))
            acc = 0
            for v in range(lo, hi + 1):
                x[t] = v
                acc += walk(t + 1, rem - v)
            return acc

        return walk(0, total)


def lattice_points(poly: KunzPolytope, g: int) -> list[tuple[int, ...]]:
    """Lattice points of ``poly`` on the hyperplane ``sum(x) = g``, lexicographically."""
    return list(_Slicer(poly.rows, poly.m - 1).points(g))


def count_lattice_points(poly: KunzPolytope, g: int) -> int:
    return _Slicer(poly.rows, poly.m - 1).count(g)


def enumerate_kunz(m: int, g: int) -> list[KunzCoordinates]:
    """Kunz vectors of all semigroups with multiplicity ``m`` and genus ``g``."""
    return [KunzCoordinates(m, k) for k in lattice_points(kunz_polytope(m), g)]


def count_kunz(m: int, g: int) -> int:
    return count_lattice_points(kunz_polytope(m), g)


def enumerate_kunz_case(g: int, i_star: int, m: int = 4) -> list[KunzCoordinates]:
    return [KunzCoordinates(m, k) for k in lattice_points(reduced_system(m, i_star), g)]
