"""The tree of numerical semigroups and its fixed-multiplicity subtrees.

The root is ℕ.  The children of ``T`` are ``T \\ {x}`` for every minimal
generator ``x > F(T)``; the removed generator becomes the child's Frobenius
number.  Restricting to semigroups of multiplicity ``m`` gives a subtree
with apex ``<m, m+1, ..., 2m-1>``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterator

from .core import NATURALS, NumericalSemigroup, ordinary


class UnclassifiedError(ArithmeticError):
    """A multiplicity-3 semigroup with ``2F = 3g`` fell outside the trichotomy."""


@dataclass
class TreeNode:
    semigroup: NumericalSemigroup
    genus: int
    children: list[TreeNode] = field(default_factory=list)
    removed_generator: int | None = None

    def walk(self) -> Iterator[TreeNode]:
        yield self
        for c in self.children:
            yield from c.walk()

    def edges(self) -> Iterator[tuple[TreeNode, TreeNode]]:
        for c in self.children:
            yield self, c
            yield from c.edges()


def _child_generators(S: NumericalSemigroup, m: int | None = None) -> list[int]:
    return [
        x for x in S.minimal_generators if x > S.frobenius and (m is None or x != S.multiplicity)
    ]


def children(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    return [S.remove(x) for x in _child_generators(S)]


def children_in_mult_tree(S: NumericalSemigroup, m: int) -> list[NumericalSemigroup]:
    """Children that keep multiplicity ``m``, i.e. never remove ``m`` itself."""
    if S.multiplicity != m:
        raise ValueError(f"{S} has multiplicity {S.multiplicity}, not {m}")
    return [S.remove(x) for x in _child_generators(S, m)]


def tree_root(m: int | None = None) -> NumericalSemigroup:
    return NATURALS if m is None else ordinary(m)


def levels(max_genus: int, m: int | None = None) -> Iterator[tuple[int, list[NumericalSemigroup]]]:
    """Yield ``(g, level)`` for each genus up to ``max_genus``, breadth first.

    Only the current level is kept in memory.
    """
    root = tree_root(m)
    g0 = root.genus
    for g in range(min(g0, max_genus + 1)):
        yield g, []
    if max_genus < g0:
        return
    level = [root]
    yield g0, level
    for g in range(g0 + 1, max_genus + 1):
        if m is None:
            level = [c for S in level for c in children(S)]
        else:
            level = [c for S in level for c in children_in_mult_tree(S, m)]
        yield g, level


def level(g: int, m: int | None = None) -> list[NumericalSemigroup]:
    """All semigroups of genus ``g`` (of multiplicity ``m`` when given)."""
    if g < 0:
        return []
    for h, lv in levels(g, m):
        if h == g:
            return lv
    return []


def build_tree(max_genus: int, m: int | None = None) -> TreeNode | None:
    """Materialize the (restricted) tree down to ``max_genus``; ``None`` if the apex is deeper."""
    root = tree_root(m)
    if root.genus > max_genus:
        return None
    top = TreeNode(root, root.genus)
    frontier = [top]
    while frontier:
        nxt = []
        for node in frontier:
            if node.genus == max_genus:
                continue
            S = node.semigroup
            for x in _child_generators(S, m):
                child = TreeNode(S.remove(x), node.genus + 1, removed_generator=x)
                node.children.append(child)
                nxt.append(child)
        frontier = nxt
    return top


class Mult3Class(enum.Enum):
    Leaf = 0
    OneChild = 1
    TwoChildren = 2


def classify_mult3(S: NumericalSemigroup) -> Mult3Class:
    """Child count in the multiplicity-3 tree, read off ``F(S)`` and ``g(S)`` alone."""
    if S.multiplicity != 3:
        raise ValueError(f"{S} does not have multiplicity 3")
    if S.embedding_dimension == 2:
        return Mult3Class.Leaf
    f2, g3 = 2 * S.frobenius, 3 * S.genus
    if f2 > g3:
        return Mult3Class.OneChild
    if f2 < g3:
        return Mult3Class.TwoChildren
    raise UnclassifiedError(f"{S}: 2F = 3g = {g3}")


def _label(S: NumericalSemigroup) -> str:
    return "⟨" + ",".join(map(str, S.minimal_generators)) + "⟩"


def _to_dict(node: TreeNode) -> dict:
    S = node.semigroup
    return {
        "generators": list(S.minimal_generators),
        "genus": node.genus,
        "frobenius": S.frobenius,
        "removed": node.removed_generator,
        "children": [_to_dict(c) for c in node.children],
    }


def export_tree(root: TreeNode | None, format: str = "dot") -> str:
    """Serialize a tree as Graphviz DOT or nested JSON; children stay in ascending removed-generator order."""
    if format == "json":
        return json.dumps(_to_dict(root) if root is not None else None, ensure_ascii=False)
    if format != "dot":
        raise ValueError(f"unknown tree format {format!r}")
    lines = ["digraph semigroups {"]
    if root is not None:
        ids = {id(n): f"n{i}" for i, n in enumerate(root.walk())}
        for n in root.walk():
            lines.append(f'  {ids[id(n)]} [label="{_label(n.semigroup)}"];')
        for parent, child in root.edges():
            lines.append(
                f'  {ids[id(parent)]} -> {ids[id(child)]} [label="{child.removed_generator}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
