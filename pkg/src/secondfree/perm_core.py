"""Permutations and set partitions of {1..N}.

Everything is 1-indexed.  Products follow the "p after q" convention:
``(p * q)(i) == p(q(i))``.  Values are immutable; equality and hashing use
the image tuple (permutations) or the canonical block tuple (partitions).
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence


class Permutation:
    """A bijection of {1..N} stored as its image tuple."""

    __slots__ = ("_img", "_cycles")

    def __init__(self, images: Sequence[int]):
        img = (0,) + tuple(int(x) for x in images)
        n = len(img) - 1
        if n < 1 or sorted(img[1:]) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {tuple(images)}")
        self._img = img
        self._cycles = None

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        # img already has the leading 0 and is known to be a bijection
        obj = cls.__new__(cls)
        obj._img = img
        obj._cycles = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> "Permutation":
        cycles = [tuple(int(x) for x in c) for c in cycles]
        seen = [x for c in cycles for x in c]
        if len(seen) != len(set(seen)):
            raise ValueError("cycles are not disjoint")
        if n is None:
            n = max(seen, default=0)
        if any(x < 1 or x > n for x in seen):
            raise ValueError(f"cycle entry outside 1..{n}")
        img = list(range(n + 1))
        for c in cycles:
            for i, x in enumerate(c):
                img[x] = c[(i + 1) % len(c)]
        return cls._raw(tuple(img))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Read cycle notation such as ``"(1,3)(2,4)"``; omitted points are fixed."""
        s = re.sub(r"\s+", "", text)
        if s in ("", "()"):
            if n is None:
                raise ValueError("empty permutation needs an explicit size")
            return cls.identity(n)
        if not re.fullmatch(r"(\(\d+(,\d+)*\))+", s):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [tuple(int(x) for x in body.split(",")) for body in re.findall(r"\(([^()]*)\)", s)]
        return cls.from_cycles(cycles, n)

    # basic data

    @property
    def size(self) -> int:
        return len(self._img) - 1

    @property
    def images(self) -> tuple:
        return self._img[1:]

    def __call__(self, i: int) -> int:
        return self._img[i]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.size, self.cycles())

    def __repr__(self):
        return f"Permutation({self})"

    def __str__(self):
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())

    # group structure

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        img = self._img
        inv = [0] * len(img)
        for i in range(1, len(img)):
            inv[img[i]] = i
        return Permutation._raw(tuple(inv))

    def conjugate(self, tau: "Permutation") -> "Permutation":
        """Return ``tau * self * tau^-1``: relabel every entry x as tau(x)."""
        if tau.size != self.size:
            raise ValueError("size mismatch")
        t = tau._img
        img = [0] * len(self._img)
        for i in range(1, len(img)):
            img[t[i]] = t[self._img[i]]
        return Permutation._raw(tuple(img))

    # cycle structure

    def cycles(self) -> tuple:
        """Cycles starting at their minimum, sorted by minimum; fixed points included."""
        if self._cycles is None:
            img = self._img
            n = len(img) - 1
            seen = [False] * (n + 1)
            out = []
            for i in range(1, n + 1):
                if not seen[i]:
                    c = [i]
                    seen[i] = True
                    j = img[i]
                    while j != i:
                        c.append(j)
                        seen[j] = True
                        j = img[j]
                    out.append(tuple(c))
            self._cycles = tuple(out)
        return self._cycles

    def num_cycles(self) -> int:
        return len(self.cycles())

    def length(self) -> int:
        """|p| = N - #(p), the minimal number of transpositions."""
        return self.size - self.num_cycles()

    def cycle_of(self, x: int) -> tuple:
        for c in self.cycles():
            if x in c:
                return c
        raise ValueError(x)

    def fixed_points(self) -> list:
        return [i for i in range(1, self.size + 1) if self._img[i] == i]

    def as_partition(self) -> "SetPartition":
        return SetPartition(self.cycles(), self.size)

    def restrict(self, subset: Iterable[int]) -> tuple:
        """Cycles C ∩ A in cyclic order, keeping the original labels."""
        return tuple(restrict_cycles(self, subset))

    def restrict_relabelled(self, subset: Iterable[int]) -> "Permutation":
        """Induced permutation on ``subset`` relabelled to 1..|subset| in increasing order."""
        elems = sorted(set(subset))
        pos = {x: k + 1 for k, x in enumerate(elems)}
        return Permutation.from_cycles([[pos[x] for x in c] for c in restrict_cycles(self, elems)], len(elems))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p * q)(i) = p(q(i))."""
    if p.size != q.size:
        raise ValueError(f"size mismatch: {p.size} vs {q.size}")
    a, b = p._img, q._img
    return Permutation._raw(tuple(a[b[i]] for i in range(len(b))))


def restrict_cycles(p: Permutation, subset: Iterable[int]) -> list:
    """Cycles C ∩ A of ``p`` in their cyclic order, keeping original labels."""
    keep = set(subset)
    if not keep:
        raise ValueError("restriction to an empty set")
    out = []
    for c in p.cycles():
        part = [x for x in c if x in keep]
        if part:
            k = part.index(min(part))
            out.append(tuple(part[k:] + part[:k]))
    return sorted(out)


def cycles_str(cycles: Iterable[Sequence[int]]) -> str:
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def perm_leq(p: Permutation, s: Permutation) -> bool:
    """Geodesic order: p <= s iff |p| + |p^-1 s| = |s|."""
    if p.size != s.size:
        raise ValueError("size mismatch")
    return p.length() + compose(p.inverse(), s).length() == s.length()


class SetPartition:
    """Blocks of {1..N}, stored sorted by minimum with sorted blocks."""

    __slots__ = ("size", "blocks")

    def __init__(self, blocks: Iterable[Iterable[int]], size: int | None = None):
        bl = [tuple(sorted(int(x) for x in b)) for b in blocks]
        if any(not b for b in bl):
            raise ValueError("empty block")
        flat = [x for b in bl for x in b]
        if size is None:
            size = max(flat, default=0)
        if sorted(flat) != list(range(1, size + 1)):
            raise ValueError(f"blocks do not partition 1..{size}")
        self.size = size
        self.blocks = tuple(sorted(bl))

    @classmethod
    def from_labels(cls, labels: Sequence) -> "SetPartition":
        groups: dict = {}
        for i, lab in enumerate(labels, start=1):
            groups.setdefault(lab, []).append(i)
        return cls(groups.values(), len(labels))

    @classmethod
    def parse(cls, text: str, size: int | None = None) -> "SetPartition":
        s = re.sub(r"\s+", "", text)
        if not re.fullmatch(r"\{(\{\d+(,\d+)*\}(,\{\d+(,\d+)*\})*)?\}", s):
            raise ValueError(f"malformed partition: {text!r}")
        blocks = [tuple(int(x) for x in b.split(",")) for b in re.findall(r"\{([\d,]+)\}", s)]
        if size is not None:
            have = {x for b in blocks for x in b}
            blocks += [(i,) for i in range(1, size + 1) if i not in have]
        return cls(blocks, size)

    @classmethod
    def zero(cls, n: int) -> "SetPartition":
        return cls([(i,) for i in range(1, n + 1)], n)

    @classmethod
    def one(cls, n: int) -> "SetPartition":
        return cls([tuple(range(1, n + 1))], n)

    def labels(self) -> list:
        """labels[i] = index of the block containing i (index 0 unused)."""
        lab = [0] * (self.size + 1)
        for k, b in enumerate(self.blocks):
            for x in b:
                lab[x] = k
        return lab

    def block_of(self, x: int) -> tuple:
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(x)

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.size == other.size and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.size, self.blocks))

    def __lt__(self, other):
        return (self.size, self.blocks) < (other.size, other.blocks)

    def __repr__(self):
        return f"SetPartition({self})"

    def __str__(self):
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    def join(self, other: "SetPartition") -> "SetPartition":
        return join(self, other)

    def leq(self, other: "SetPartition") -> bool:
        return leq(self, other)


def _as_partition(x) -> SetPartition:
    return x.as_partition() if isinstance(x, Permutation) else x


def join(u, v) -> SetPartition:
    """Join in the lattice of all set partitions (connectivity closure)."""
    u, v = _as_partition(u), _as_partition(v)
    if u.size != v.size:
        raise ValueError("size mismatch")
    parent = list(range(u.size + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (u, v):
        for b in part.blocks:
            r = find(b[0])
            for x in b[1:]:
                parent[find(x)] = r
    return SetPartition.from_labels([find(i) for i in range(1, u.size + 1)])


def leq(u, v) -> bool:
    """Refinement order: every block of u lies inside a block of v."""
    u, v = _as_partition(u), _as_partition(v)
    if u.size != v.size:
        raise ValueError("size mismatch")
    lab = v.labels()
    return all(len({lab[x] for x in b}) == 1 for b in u.blocks)


def is_connected_with(p, q) -> bool:
    """True iff p ∨ q is the one-block partition."""
    return len(join(p, q).blocks) == 1


def gamma(n: int, m: int | None = None) -> Permutation:
    """γ_n = (1..n), or γ_{n,m} = (1..n)(n+1..n+m) when m is given."""
    if n < 1 or (m is not None and m < 1):
        raise ValueError("sizes must be positive")
    cycles = [tuple(range(1, n + 1))]
    if m is not None:
        cycles.append(tuple(range(n + 1, n + m + 1)))
    return Permutation.from_cycles(cycles, n + (m or 0))


def interval_pairing(size: int) -> Permutation:
    """I = (1,2)(3,4)...; a trailing odd point stays fixed."""
    return Permutation.from_cycles([(2 * k - 1, 2 * k) for k in range(1, size // 2 + 1)], size)
