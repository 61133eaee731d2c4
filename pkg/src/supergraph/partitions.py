"""Equivalence relations on a finite vertex set, represented as partitions."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .errors import InvalidParameter, SizeMismatch


class Partition:
    """Partition of {0, ..., n-1} into disjoint nonempty blocks.

    Blocks are normalized on construction: sorted internally and ordered by
    their minimum element, so equal partitions compare equal structurally.
    """

    __slots__ = ("_n", "_blocks", "_block_of")

    def __init__(self, ground_size: int, blocks: Iterable[Iterable[int]]):
        n = int(ground_size)
        if n < 1:
            raise InvalidParameter("partition ground size must be >= 1")
        norm = []
        for block in blocks:
            b = tuple(sorted(int(v) for v in block))
            if not b:
                raise InvalidParameter("partition blocks must be nonempty")
            norm.append(b)
        norm.sort(key=lambda b: b[0])
        block_of = [-1] * n
        for idx, b in enumerate(norm):
            for v in b:
                if not 0 <= v < n:
                    raise InvalidParameter(f"element {v} outside ground set of size {n}")
                if block_of[v] != -1:
                    raise InvalidParameter(f"element {v} appears in two blocks")
                block_of[v] = idx
        if any(i == -1 for i in block_of):
            missing = block_of.index(-1)
            raise InvalidParameter(f"element {missing} not covered by any block")
        self._n = n
        self._blocks = tuple(norm)
        self._block_of = tuple(block_of)

    @property
    def ground_size(self) -> int:
        return self._n

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self._blocks

    @property
    def block_of(self) -> tuple[int, ...]:
        return self._block_of

    @property
    def block_count(self) -> int:
        return len(self._blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self._blocks)

    def block_containing(self, v: int) -> tuple[int, ...]:
        return self._blocks[self._block_of[v]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._n == other._n and self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash((self._n, self._blocks))

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self._blocks)
        return f"Partition({self._n}, [{inner}])"

    def to_json_dict(self) -> dict:
        return {"n": self._n, "blocks": [list(b) for b in self._blocks]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Partition":
        return cls(data["n"], data["blocks"])

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        return cls.from_json_dict(json.loads(text))


def least_partition(n: int) -> Partition:
    """All-singletons partition: every class is {x}."""
    return Partition(n, [[v] for v in range(n)])


def greatest_partition(n: int) -> Partition:
    """One-block partition: the single class is the whole ground set."""
    return Partition(n, [list(range(n))])


def refines(p1: Partition, p2: Partition) -> bool:
    """True when every block of p1 is contained in some block of p2."""
    if p1.ground_size != p2.ground_size:
        raise SizeMismatch(
            f"ground sizes differ: {p1.ground_size} vs {p2.ground_size}"
        )
    bo2 = p2.block_of
    for block in p1.blocks:
        target = bo2[block[0]]
        if any(bo2[v] != target for v in block[1:]):
            return False
    return True


def order_partition(group) -> Partition:
    """Partition of a group's elements into fibers of equal element order."""
    fibers: dict[int, list[int]] = {}
    for g in range(group.order):
        fibers.setdefault(group.element_order(g), []).append(g)
    return Partition(group.order, fibers.values())


def conjugacy_partition(group) -> Partition:
    """Partition of a group's elements into conjugacy classes."""
    return group.conjugacy_classes()


def partition_from_blocks(n: int, blocks: Sequence[Sequence[int]]) -> Partition:
    return Partition(n, blocks)
