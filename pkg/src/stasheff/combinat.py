"""Increasing tuples, the intertwining relation and the index sets of A_n^d."""
from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ContractViolation

VertexTuple = tuple[int, ...]


class IndexSetKind(Enum):
    SEPARATED = "separated"
    CYCLIC_SEPARATED = "cyclic_separated"


def as_tuple(entries: Iterable[int], m: int | None = None) -> VertexTuple:
    """Return ``entries`` as a tuple, checking it is strictly increasing (and inside [m])."""
    t = tuple(int(x) for x in entries)
    if any(a >= b for a, b in zip(t, t[1:])):
        raise ContractViolation(f"{t} is not strictly increasing")
    if m is not None and t and (t[0] < 1 or t[-1] > m):
        raise ContractViolation(f"{t} has entries outside [1, {m}]")
    return t


def intertwines(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff a_0 < b_0 < a_1 < b_1 < ... < a_d < b_d."""
    if len(a) != len(b):
        raise ContractViolation(f"cannot compare tuples of lengths {len(a)} and {len(b)}")
    prev = None
    for x, y in zip(a, b):
        if prev is not None and not prev < x:
            return False
        if not x < y:
            return False
        prev = y
    return True


def enumerate_index_set(m: int, d: int, kind: IndexSetKind = IndexSetKind.SEPARATED) -> list[VertexTuple]:
    """All (d+1)-tuples in [m] with consecutive gaps at least 2, lexicographically sorted.

    The cyclic variant additionally requires ``a_d + 2 <= a_0 + m``.
    """
    if m < 1 or d < 0:
        raise ContractViolation(f"need m >= 1 and d >= 0, got m={m}, d={d}")
    out = []
    for t in combinations(range(1, m + 1), d + 1):
        if any(t[i + 1] < t[i] + 2 for i in range(d)):
            continue
        if kind is IndexSetKind.CYCLIC_SEPARATED and t[-1] + 2 > t[0] + m:
            continue
        out.append(t)
    return out


def is_compatible_collection(tuples: Iterable[Sequence[int]]) -> bool:
    """True iff no two members of the collection are intertwining."""
    items = [tuple(t) for t in tuples]
    if len({len(t) for t in items}) > 1:
        raise ContractViolation("collection mixes tuples of different lengths")
    for a, b in combinations(items, 2):
        if intertwines(a, b) or intertwines(b, a):
            return False
    return True


def sorted_tuples(tuples: Iterable[Sequence[int]]) -> tuple[VertexTuple, ...]:
    return tuple(sorted({tuple(t) for t in tuples}))
