"""Finite relations stored as per-element bitsets of upper bounds."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import IntegrityError


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Relation:
    """A relation on {0, ..., n-1}; ``up[i]`` has bit j set iff i <= j."""

    def __init__(self, up: Sequence[int]):
        self.up = list(up)
        self.n = len(self.up)
        self._down = None

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]]) -> "Relation":
        """Reflexive-transitive closure of a cover relation; cycles are an integrity error."""
        succ = [[] for _ in range(n)]
        indegree = [0] * n
        for i, j in covers:
            succ[i].append(j)
            indegree[j] += 1
        order = []
        queue = deque(i for i in range(n) if indegree[i] == 0)
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in succ[i]:
                indegree[j] -= 1
                if indegree[j] == 0:
                    queue.append(j)
        if len(order) != n:
            raise IntegrityError("cover relation contains a cycle")
        up = [0] * n
        for i in reversed(order):
            mask = 1 << i
            for j in succ[i]:
                mask |= up[j]
            up[i] = mask
        return cls(up)

    @classmethod
    def from_predicate(cls, n: int, leq: Callable[[int, int], bool]) -> "Relation":
        return cls([sum(1 << j for j in range(n) if leq(i, j)) for i in range(n)])

    @classmethod
    def from_inclusion(cls, masks: Sequence[int], reverse: bool = False) -> "Relation":
        """i <= j iff masks[i] is a subset of masks[j] (superset when ``reverse``)."""
        n = len(masks)
        up = []
        for a in masks:
            row = 0
            for j, b in enumerate(masks):
                if (a & ~b if not reverse else b & ~a) == 0:
                    row |= 1 << j
            up.append(row)
        return cls(up)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    @property
    def down(self) -> list[int]:
        if self._down is None:
            down = [0] * self.n
            for i, row in enumerate(self.up):
                for j in _bits(row):
                    down[j] |= 1 << i
            self._down = down
        return self._down

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.up[i])]

    def __eq__(self, other) -> bool:
        return isinstance(other, Relation) and self.up == other.up

    def __le__(self, other: "Relation") -> bool:
        """Containment of relations as sets of pairs."""
        return all(a & ~b == 0 for a, b in zip(self.up, other.up))

    def first_difference(self, other: "Relation") -> tuple[int, int] | None:
        for i, (a, b) in enumerate(zip(self.up, other.up)):
            if a != b:
                return i, next(_bits(a ^ b))
        return None

    def is_partial_order(self) -> bool:
        for i, row in enumerate(self.up):
            if not row >> i & 1:
                return False
            if row & self.down[i] != 1 << i:
                return False
            for j in _bits(row):
                if self.up[j] & ~row:
                    return False
        return True

    def minimum(self) -> int | None:
        full = (1 << self.n) - 1
        return next((i for i, row in enumerate(self.up) if row == full), None)

    def maximum(self) -> int | None:
        full = (1 << self.n) - 1
        return next((i for i, row in enumerate(self.down) if row == full), None)


def hasse(rel: Relation) -> list[tuple[int, int]]:
    """Cover pairs (transitive reduction) of a partial order."""
    down = rel.down
    for i in range(rel.n):
        if rel.up[i] & down[i] != 1 << i:
            raise IntegrityError(f"relation is not antisymmetric at element {i}")
    covers = []
    for i in range(rel.n):
        strict_up = rel.up[i] & ~(1 << i)
        for j in _bits(strict_up):
            if strict_up & down[j] & ~(1 << j) == 0:
                covers.append((i, j))
    return covers


@dataclass(frozen=True)
class LatticeReport:
    is_lattice: bool
    witness: tuple[int, int, str] | None = None  # (i, j, "meet" | "join")


def is_lattice(rel: Relation) -> LatticeReport:
    """Check every pair has a least upper bound and a greatest lower bound.

    Elements are relabelled along a linear extension so the candidate join of
    a pair is the lowest set bit of its common up-set and the candidate meet
    the highest set bit of its common down-set.
    """
    n = rel.n
    order = sorted(range(n), key=lambda i: bin(rel.down[i]).count("1"))
    pos = [0] * n
    for p, i in enumerate(order):
        pos[i] = p

    def relabel(mask: int) -> int:
        return sum(1 << pos[j] for j in _bits(mask))

    up = [relabel(rel.up[i]) for i in order]
    down = [relabel(rel.down[i]) for i in order]
    for a in range(n):
        for b in range(a + 1, n):
            common_up = up[a] & up[b]
            k = (common_up & -common_up).bit_length() - 1
            if not common_up or up[k] != common_up:
                return LatticeReport(False, (order[a], order[b], "join"))
            common_down = down[a] & down[b]
            k = common_down.bit_length() - 1
            if not common_down or down[k] != common_down:
                return LatticeReport(False, (order[a], order[b], "meet"))
    return LatticeReport(True)
