"""Integer partitions and the index-shifting operators acting on them.

A partition is stored as a weakly decreasing tuple of positive integers;
the empty partition is ``Partition()``.  The two operators central to the
rest of the package are ``up`` (insert a part of size i at the deepest
legal index, then shrink every part at or above it by one) and ``down``
(delete the j-th part, then grow every earlier part by one).  Both accept
arbitrarily large indices, treating missing parts as zeros.
"""

from __future__ import annotations

from math import factorial


class Partition:
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts if p != 0)
        for p in parts:
            if p < 0:
                raise ValueError(f"negative part {p}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        self.parts = parts

    # -- basic shape -------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, k: int) -> int:
        """k-th part, 1-based; 0 beyond the length."""
        if k < 1:
            raise ValueError("part index is 1-based")
        return self.parts[k - 1] if k <= len(self.parts) else 0

    # -- container protocol -------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def sort_key(self):
        """Deterministic report order: by size, then reverse-lexicographic."""
        return (self.size, tuple(-p for p in self.parts))

    # -- serialization -------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse a comma-separated part list; "" (or "[]") is the empty partition."""
        text = text.strip()
        if text in ("", "[]"):
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def as_json(self):
        return list(self.parts)

    # -- index-shift operators -----------------------------------------

    def u_index(self, i: int) -> int:
        """Number of parts of size >= i; the insertion depth for ``up(i)``."""
        if i < 1:
            raise ValueError("i must be >= 1")
        return sum(1 for p in self.parts if p >= i)

    def up(self, i: int) -> "Partition":
        """Insert a part i at the deepest legal index, then decrement all
        parts at or above the inserted one."""
        u = self.u_index(i)
        parts = [p - 1 for p in self.parts[:u]]
        parts.append(i - 1)
        parts.extend(self.parts[u:])
        return Partition(parts)

    def up_size(self, i: int) -> int:
        """Size of ``up(i)`` without building it: |self| + i - u_i - 1."""
        return self.size + i - self.u_index(i) - 1

    def down(self, j: int) -> "Partition":
        """Remove the j-th part (0 if absent), then increment all earlier parts."""
        if j < 1:
            raise ValueError("j must be >= 1")
        parts = [self.part(k) + 1 for k in range(1, j)]
        parts.extend(self.parts[j:])
        return Partition(parts)

    def down_size(self, j: int) -> int:
        """Size of ``down(j)``: |self| + j - part(j) - 1."""
        return self.size + j - self.part(j) - 1

    # -- diagram data ---------------------------------------------------

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for c in range(p):
                cols[c] += 1
        return Partition(cols)

    def contents(self) -> list[int]:
        """Cell contents col - row, row-major; one entry per cell."""
        return [c - r for r, p in enumerate(self.parts) for c in range(p)]

    def aut_size(self) -> int:
        """Order of the part-permuting stabilizer: product of multiplicity factorials."""
        out = 1
        mult: dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        for m in mult.values():
            out *= factorial(m)
        return out

    def maya_prefix(self, depth: int) -> list[int]:
        """First ``depth`` entries of the strictly decreasing sequence
        {part(k) - k}; requires depth >= length."""
        if depth < len(self.parts):
            raise ValueError(f"depth {depth} < length {len(self.parts)}")
        return [self.part(k) - k for k in range(1, depth + 1)]

    def hook_product(self) -> int:
        """Product of all hook lengths of the diagram."""
        t = self.conjugate()
        out = 1
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                out *= p - j + t.part(j) - i + 1
        return out


def partitions_of(d: int) -> list[Partition]:
    """All partitions of d in reverse-lexicographic order."""
    if d < 0:
        return []
    out: list[Partition] = []

    def rec(rem, bound, prefix):
        if rem == 0:
            out.append(Partition(prefix))
            return
        for k in range(min(rem, bound), 0, -1):
            prefix.append(k)
            rec(rem - k, k, prefix)
            prefix.pop()

    rec(d, d, [])
    return out


def partitions_up_to(bound: int) -> list[Partition]:
    """All partitions of size 0..bound, sizes ascending, reverse-lex within a size."""
    out = []
    for d in range(bound + 1):
        out.extend(partitions_of(d))
    return out


def solve_up_sizes(lam: Partition, target: int) -> list[int]:
    """All i >= 1 with |lam.up(i)| == target (at most one, by strict monotonicity)."""
    out = []
    i = 1
    while True:
        s = lam.up_size(i)
        if s == target:
            out.append(i)
        if s >= target:
            return out
        i += 1


def solve_down_sizes(mu: Partition, target: int) -> list[int]:
    """All j >= 1 with |mu.down(j)| == target (at most one)."""
    out = []
    j = 1
    while True:
        s = mu.down_size(j)
        if s == target:
            out.append(j)
        if s >= target:
            return out
        j += 1
