"""Rooted trees in canonical form and their elementary weights."""

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Tuple

from config.settings import WsoConfig
from core.exceptions import CapExceededError, ValidationError
from exact import RMatrix, matmul, ones
from tableau.model import Tableau


@dataclass(frozen=True)
class RootedTree:
    """
    A rooted tree as the sorted tuple of its subtrees.

    Children are sorted by ``key``, so isomorphic trees compare equal.
    """
    children: Tuple["RootedTree", ...] = ()

    @classmethod
    def from_children(cls, children) -> "RootedTree":
        return cls(tuple(sorted(children, key=lambda child: child.key)))

    @cached_property
    def key(self) -> tuple:
        return tuple(child.key for child in self.children)

    @cached_property
    def order(self) -> int:
        return 1 + sum(child.order for child in self.children)

    @cached_property
    def density(self) -> int:
        """gamma(t)"""
        return self.order * math.prod(child.density for child in self.children)

    @cached_property
    def symmetry(self) -> int:
        """sigma(t)"""
        result = 1
        for child, multiplicity in Counter(self.children).items():
            result *= math.factorial(multiplicity) * child.symmetry ** multiplicity
        return result

    def __str__(self) -> str:
        if not self.children:
            return "t"
        return "[" + ",".join(str(child) for child in self.children) + "]"


LEAF = RootedTree()


@lru_cache(maxsize=None)
def trees_of_order(order: int) -> Tuple[RootedTree, ...]:
    """Non-isomorphic rooted trees with exactly ``order`` nodes."""
    if order < 1:
        raise ValidationError(f"Tree order must be positive, got {order}", field="order")
    if order == 1:
        return (LEAF,)

    pool = [tree for k in range(1, order) for tree in trees_of_order(k)]
    found: List[RootedTree] = []

    def extend(start: int, remaining: int, chosen: List[RootedTree]) -> None:
        if remaining == 0:
            found.append(RootedTree.from_children(chosen))
            return
        for index in range(start, len(pool)):
            if pool[index].order <= remaining:
                extend(index, remaining - pool[index].order, chosen + [pool[index]])

    extend(0, order - 1, [])
    return tuple(found)


def enumerate_trees(max_order: int) -> List[RootedTree]:
    """
    All rooted trees of order 1..max_order.

    Raises:
        CapExceededError: max_order above the supported bound.
    """
    cap = WsoConfig.TREE_MAX_ORDER
    if max_order > cap:
        raise CapExceededError(
            f"Tree enumeration supports orders up to {cap}, got {max_order}",
            cap=cap,
            operation="enumerate_trees",
        )
    return [tree for order in range(1, max_order + 1) for tree in trees_of_order(order)]


class ElementaryWeights:
    """Memoized stage weights phi(t) and elementary weights Phi(t) for one tableau."""

    def __init__(self, tableau: Tableau):
        self.tableau = tableau
        self._stage: Dict[RootedTree, RMatrix] = {}

    def stage_weights(self, tree: RootedTree) -> RMatrix:
        if tree not in self._stage:
            vector = ones(self.tableau.s)
            for child in tree.children:
                vector = vector * matmul(self.tableau.A, self.stage_weights(child))
            self._stage[tree] = vector
        return self._stage[tree]

    def weight(self, tree: RootedTree) -> Fraction:
        return sum((w * v for w, v in zip(self.tableau.b, self.stage_weights(tree))), Fraction(0))


def elementary_weight(tree: RootedTree, tableau: Tableau) -> Fraction:
    """Phi(t) = b^T phi(t), exactly."""
    return ElementaryWeights(tableau).weight(tree)
