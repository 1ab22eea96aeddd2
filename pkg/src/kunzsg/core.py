"""Numerical semigroups stored as (multiplicity, Apery set of the multiplicity).

Every invariant used elsewhere in the package is read off the Apery set
``w(0) = 0, w(1), ..., w(m-1)``, where ``w(i)`` is the least element of the
semigroup congruent to ``i`` modulo the multiplicity ``m``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Callable, Iterable


class NotNumericalSemigroupError(ValueError):
    """Raised when input does not describe a numerical semigroup."""


@dataclass(frozen=True)
class NumericalSemigroup:
    multiplicity: int
    apery: tuple[int, ...]

    def __post_init__(self):
        m, w = self.multiplicity, self.apery
        if not isinstance(w, tuple):
            object.__setattr__(self, "apery", tuple(w))
            w = self.apery
        if m < 1 or len(w) != m:
            raise NotNumericalSemigroupError(
                f"need {m} Apery elements for multiplicity {m}, got {len(w)}"
            )
        if w[0] != 0:
            raise NotNumericalSemigroupError("apery[0] must be 0")
        for i in range(1, m):
            if w[i] < m or w[i] % m != i:
                raise NotNumericalSemigroupError(
                    f"apery[{i}] = {w[i]} is not >= {m} and congruent to {i}"
                )
        for i in range(1, m):
            for j in range(i, m):
                if w[i] + w[j] < w[(i + j) % m]:
                    raise NotNumericalSemigroupError(
                        f"apery[{i}] + apery[{j}] < apery[{(i + j) % m}]"
                    )

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n >= self.apery[n % self.multiplicity]

    def __str__(self):
        return "⟨" + ",".join(map(str, self.minimal_generators)) + "⟩"

    def __repr__(self):
        return f"NumericalSemigroup{str(self)}"

    @property
    def frobenius(self) -> int:
        # m = 1 gives max(apery) - m = -1, the value used for N
        return max(self.apery) - self.multiplicity

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @cached_property
    def genus(self) -> int:
        m = self.multiplicity
        return sum(w // m for w in self.apery)

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        """Sorted minimal generating set.

        ``w(i)`` is minimal unless ``w(i) - w(j)`` is a positive element for
        some ``j``; any decomposition of an Apery element into two nonzero
        elements must use two Apery elements.
        """
        m, w = self.multiplicity, self.apery
        if m == 1:
            return (1,)
        gens = [m]
        for i in range(1, m):
            x = w[i]
            if not any(j != i and x - w[j] > 0 and (x - w[j]) in self for j in range(1, m)):
                gens.append(x)
        return tuple(sorted(gens))

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def gaps(self) -> tuple[int, ...]:
        return tuple(n for n in range(1, self.conductor) if n not in self)

    def small_elements(self) -> tuple[int, ...]:
        """Elements up to and including the conductor."""
        return tuple(n for n in range(self.conductor + 1) if n in self)

    def remove(self, x: int) -> NumericalSemigroup:
        """The semigroup ``self \\ {x}``; ``x`` must be a minimal generator."""
        if x not in self.minimal_generators:
            raise ValueError(f"{x} is not a minimal generator of {self}")
        bound = max(self.conductor, x + 1)
        return _from_membership(lambda n: n != x and n in self, bound)


def _from_membership(member: Callable[[int], bool], conductor: int) -> NumericalSemigroup:
    # every n >= conductor is assumed to be a member
    m = next(n for n in range(1, conductor + 2) if n >= conductor or member(n))
    apery = [0] * m
    found = 1
    n = m + 1
    while found < m:
        r = n % m
        if r and not apery[r] and (n >= conductor or member(n)):
            apery[r] = n
            found += 1
        n += 1
    return NumericalSemigroup(m, tuple(apery))


def semigroup_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Canonical form of the monoid generated by ``gens``.

    The Apery set of the smallest generator is found by shortest paths on
    the residues modulo that generator.
    """
    gens = sorted(set(gens))
    if not gens:
        raise ValueError("need at least one generator")
    if gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise NotNumericalSemigroupError(f"not a numerical semigroup: gcd{tuple(gens)} != 1")
    m = gens[0]
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for a in gens[1:]:
            nd, nr = d + a, (r + a) % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return NumericalSemigroup(m, tuple(dist))


def semigroup_from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    gaps = frozenset(gaps)
    if any(n <= 0 for n in gaps):
        raise ValueError("gaps must be positive integers")
    conductor = max(gaps, default=-1) + 1
    elems = [n for n in range(1, conductor) if n not in gaps]
    for a in elems:
        for b in elems:
            if a + b in gaps:
                raise NotNumericalSemigroupError(f"{a} + {b} = {a + b} is listed as a gap")
    return _from_membership(lambda n: n not in gaps, conductor)


NATURALS = NumericalSemigroup(1, (0,))


def contains(S: NumericalSemigroup, n: int) -> bool:
    return n in S


@dataclass(frozen=True)
class SemigroupInvariants:
    frobenius: int
    conductor: int
    genus: int
    embedding_dimension: int
    minimal_generators: tuple[int, ...]


def invariants(S: NumericalSemigroup) -> SemigroupInvariants:
    return SemigroupInvariants(
        frobenius=S.frobenius,
        conductor=S.conductor,
        genus=S.genus,
        embedding_dimension=S.embedding_dimension,
        minimal_generators=S.minimal_generators,
    )


def ordinary(m: int) -> NumericalSemigroup:
    """``<m, m+1, ..., 2m-1>``, the only multiplicity-m semigroup of genus m-1."""
    if m < 1:
        raise ValueError("multiplicity must be positive")
    return NumericalSemigroup(m, (0,) + tuple(m + i for i in range(1, m)))

