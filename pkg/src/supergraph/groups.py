"""Finite groups backed by explicit Cayley tables.

Element identity is a plain index 0..order-1; each family constructor fixes a
canonical element enumeration so vertex numbering is reproducible everywhere.
"""

from __future__ import annotations

import random
from pathlib import Path

import numpy as np

from .errors import FormatError, InvalidParameter, NotAGroup
from .partitions import Partition

# Exhaustive associativity checking is O(n^3); beyond this order we sample.
_EXHAUSTIVE_LIMIT = 256
_SAMPLE_FACTOR = 10


class FiniteGroup:
    """Group on elements 0..order-1 with an explicit multiplication table."""

    __slots__ = ("_table", "_identity", "_labels", "_inverses", "name")

    def __init__(self, table, labels=None, name="group", validate=True):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise NotAGroup("multiplication table must be square and nonempty")
        n = arr.shape[0]
        if labels is None:
            labels = tuple(f"g{i}" for i in range(n))
        else:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise InvalidParameter("label count must equal group order")
        if validate:
            identity = _validate_table(arr)
        else:
            identity = _find_identity(arr)
            if identity is None:
                raise NotAGroup("table has no identity element")
        arr.setflags(write=False)
        self._table = arr
        self._identity = identity
        self._labels = labels
        self._inverses = tuple(int(np.nonzero(arr[g] == identity)[0][0]) for g in range(n))
        self.name = name

    @property
    def order(self) -> int:
        return self._table.shape[0]

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def label(self, g: int) -> str:
        return self._labels[g]

    def multiply(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def inverse(self, g: int) -> int:
        return self._inverses[g]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(g), -k)
        acc = self._identity
        for _ in range(k):
            acc = int(self._table[acc, g])
        return acc

    def element_order(self, g: int) -> int:
        """Least t >= 1 with g^t = identity."""
        if not 0 <= g < self.order:
            raise InvalidParameter(f"element {g} outside group of order {self.order}")
        acc = g
        t = 1
        while acc != self._identity:
            acc = int(self._table[acc, g])
            t += 1
        return t

    def commutes(self, a: int, b: int) -> bool:
        return self._table[a, b] == self._table[b, a]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self._table, self._table.T))

    def conjugacy_classes(self) -> Partition:
        """Orbits under conjugation, ordered by minimum element index."""
        n = self.order
        t = self._table
        seen = [False] * n
        blocks = []
        for g in range(n):
            if seen[g]:
                continue
            orbit = sorted({int(t[t[h, g], self._inverses[h]]) for h in range(n)})
            for x in orbit:
                seen[x] = True
            blocks.append(orbit)
        return Partition(n, blocks)

    def center(self) -> tuple[int, ...]:
        """Elements commuting with every group element."""
        t = self._table
        return tuple(int(z) for z in range(self.order) if np.array_equal(t[z, :], t[:, z]))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


def _find_identity(table: np.ndarray):
    n = table.shape[0]
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e, :], idx) and np.array_equal(table[:, e], idx):
            return e
    return None


def _validate_table(table: np.ndarray) -> int:
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise NotAGroup(
            f"table entry at ({bad[0]}, {bad[1]}) outside 0..{n - 1}",
            witness=(int(bad[0]), int(bad[1])),
        )
    idx = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(table[i, :]), idx):
            raise NotAGroup(f"row {i} is not a permutation", witness=i)
        if not np.array_equal(np.sort(table[:, i]), idx):
            raise NotAGroup(f"column {i} is not a permutation", witness=i)
    identity = _find_identity(table)
    if identity is None:
        raise NotAGroup("table has no identity element")
    if n <= _EXHAUSTIVE_LIMIT:
        for i in range(n):
            left = table[table[i, :], :]
            right = table[i, table]
            if not np.array_equal(left, right):
                j, k = np.argwhere(left != right)[0]
                raise NotAGroup(
                    f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})",
                    witness=(i, int(j), int(k)),
                )
    else:
        rng = random.Random(0xA55)
        for _ in range(_SAMPLE_FACTOR * n * n):
            i, j, k = (rng.randrange(n) for _ in range(3))
            if table[table[i, j], k] != table[i, table[j, k]]:
                raise NotAGroup(
                    f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})",
                    witness=(i, j, k),
                )
    return identity


def from_cayley_table(table, labels=None, name="group") -> FiniteGroup:
    """Build and fully validate a group from a square index table."""
    return FiniteGroup(table, labels=labels, name=name, validate=True)


def _pow_label(symbol: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return symbol
    return f"{symbol}^{e}"


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n with elements e, a, a^2, ..."""
    if n < 1:
        raise InvalidParameter("cyclic group order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + [_pow_label("a", i) for i in range(1, n)]
    return FiniteGroup(table, labels=labels, name=f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: relations a^n = b^2 = e, a*b = b*a^-1.

    Element enumeration: e, a, ..., a^(n-1), b, ba, ..., ba^(n-1).
    """
    if n < 3:
        raise InvalidParameter("dihedral parameter must be >= 3")
    size = 2 * n

    def mul(x, y):
        xf, xi = divmod(x, n)
        yf, yi = divmod(y, n)
        if xf == 0 and yf == 0:
            return (xi + yi) % n
        if xf == 0 and yf == 1:
            return n + (yi - xi) % n
        if xf == 1 and yf == 0:
            return n + (xi + yi) % n
        return (yi - xi) % n

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    labels = ["e"] + [_pow_label("a", i) for i in range(1, n)]
    labels += ["b" + _pow_label("a", i) for i in range(n)]
    return FiniteGroup(table, labels=labels, name=f"D{size}")


def generalized_quaternion(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: a^(2n) = e, b^2 = a^n, a*b = b*a^-1.

    Element enumeration: e, a, ..., a^(2n-1), b, ba, ..., ba^(2n-1).
    """
    if n < 2:
        raise InvalidParameter("generalized quaternion parameter must be >= 2")
    m = 2 * n
    size = 4 * n

    def mul(x, y):
        xf, xi = divmod(x, m)
        yf, yi = divmod(y, m)
        if xf == 0 and yf == 0:
            return (xi + yi) % m
        if xf == 0 and yf == 1:
            return m + (yi - xi) % m
        if xf == 1 and yf == 0:
            return m + (xi + yi) % m
        return (n + yi - xi) % m

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    labels = ["e"] + [_pow_label("a", i) for i in range(1, m)]
    labels += ["b" + _pow_label("a", i) for i in range(m)]
    return FiniteGroup(table, labels=labels, name=f"Q{size}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def semidirect_pq(p: int, q: int) -> FiniteGroup:
    """Nonabelian group of order pq: b^p = a^q = e, a*b*a^-1 = b^m.

    Requires distinct primes with q | p-1. The twist m is the smallest m > 1
    with m^q = 1 (mod p); all valid choices give isomorphic groups, so fixing
    the smallest keeps the enumeration deterministic. Element (i, j) = b^i a^j
    has index j*p + i, giving the enumeration e, b, ..., b^(p-1), then the
    b^i a^j block for each j >= 1.
    """
    if not is_prime(p) or not is_prime(q):
        raise InvalidParameter("both parameters must be prime")
    if p == q:
        raise InvalidParameter("the primes must be distinct")
    if (p - 1) % q != 0:
        raise InvalidParameter(f"{q} does not divide {p} - 1")
    m = next(c for c in range(2, p) if pow(c, q, p) == 1)
    size = p * q

    def mul(x, y):
        j1, i1 = divmod(x, p)
        j2, i2 = divmod(y, p)
        return ((j1 + j2) % q) * p + (i1 + i2 * pow(m, j1, p)) % p

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    labels = []
    for j in range(q):
        for i in range(p):
            labels.append("e" if i == 0 and j == 0 else _pow_label("b", i) + _pow_label("a", j))
    return FiniteGroup(table, labels=labels, name=f"Z{p}xZ{q}")


def read_cayley_file(path) -> FiniteGroup:
    """Load a group from a plain-text Cayley table.

    Format: first line is the order n, followed by n lines of n space
    separated indices. An optional line ``#labels: l0 l1 ...`` names the
    elements; other ``#`` lines are comments.
    """
    text = Path(path).read_text()
    labels = None
    rows = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#labels:"):
            labels = line[len("#labels:"):].split()
            continue
        if line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise FormatError(f"{path}: line {lineno}: {exc}") from None
        if n is None:
            if len(values) != 1:
                raise FormatError(f"{path}: line {lineno}: expected a single order value")
            n = values[0]
            if n < 1:
                raise FormatError(f"{path}: line {lineno}: order must be >= 1")
            continue
        if len(values) != n:
            raise FormatError(
                f"{path}: line {lineno}: expected {n} entries, got {len(values)}"
            )
        rows.append(values)
    if n is None:
        raise FormatError(f"{path}: empty table file")
    if len(rows) != n:
        raise FormatError(f"{path}: expected {n} table rows, found {len(rows)}")
    if labels is not None and len(labels) != n:
        raise FormatError(f"{path}: #labels: line has {len(labels)} names, expected {n}")
    return from_cayley_table(rows, labels=labels, name=Path(path).stem)


def write_cayley_file(group: FiniteGroup, path) -> None:
    lines = [str(group.order)]
    for i in range(group.order):
        lines.append(" ".join(str(int(v)) for v in group.table[i]))
    lines.append("#labels: " + " ".join(group.labels))
    Path(path).write_text("\n".join(lines) + "\n")
