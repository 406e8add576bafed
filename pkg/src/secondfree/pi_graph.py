"""The block graph of a partition, ε-tuples and signs, the Iπ factorization and the cancellation bijection.

For a partition π of {1..2k} the graph has one vertex per block and, for
every j = 1..k, an edge joining the block of 2j-1 to the block of 2j.  Loops
and repeated edges are kept.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .perm_core import Permutation, SetPartition, compose, interval_pairing


class PiGraph:
    __slots__ = ("size", "blocks", "label", "edges")

    def __init__(self, blocks, size: int):
        if size % 2:
            raise ValueError("the block graph needs an even ground set")
        self.size = size
        self.blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
        lab = [0] * (size + 1)
        for k, b in enumerate(self.blocks):
            for x in b:
                lab[x] = k
        self.label = lab
        self.edges = tuple((lab[2 * j - 1], lab[2 * j]) for j in range(1, size // 2 + 1))

    @classmethod
    def of(cls, p) -> "PiGraph":
        if isinstance(p, Permutation):
            return cls(p.cycles(), p.size)
        if isinstance(p, SetPartition):
            return cls(p.blocks, p.size)
        raise TypeError(type(p))

    def vertex_of(self, x: int) -> int:
        return self.label[x]

    def adjacency(self) -> list:
        adj = [[] for _ in self.blocks]
        for k, (s, t) in enumerate(self.edges):
            adj[s].append((t, k))
            if s != t:
                adj[t].append((s, k))
        return adj

    def degrees(self) -> list:
        deg = [0] * len(self.blocks)
        for s, t in self.edges:
            deg[s] += 1
            deg[t] += 1
        return deg

    def _distances(self, root: int, skip_edge: int | None = None) -> list:
        dist = [-1] * len(self.blocks)
        dist[root] = 0
        queue = deque([root])
        adj = self.adjacency()
        while queue:
            x = queue.popleft()
            for y, k in adj[x]:
                if k != skip_edge and dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def is_connected(self) -> bool:
        return all(d >= 0 for d in self._distances(0))

    def is_bipartite(self) -> bool:
        return self._two_colouring() is not None

    def _two_colouring(self):
        colour = [-1] * len(self.blocks)
        adj = self.adjacency()
        for start in range(len(self.blocks)):
            if colour[start] >= 0:
                continue
            colour[start] = 0
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y, _ in adj[x]:
                    if colour[y] < 0:
                        colour[y] = 1 - colour[x]
                        queue.append(y)
                    elif colour[y] == colour[x]:
                        return None
        return colour

    def bipartition(self, root_point: int = 1):
        """(even part, odd part) by distance from the block of ``root_point``.

        Returns None when the graph has an odd cycle (a loop counts as one).
        Raises ValueError on a disconnected graph.
        """
        dist = self._distances(self.label[root_point])
        if any(d < 0 for d in dist):
            raise ValueError("bipartition of a disconnected graph")
        for s, t in self.edges:
            if dist[s] % 2 == dist[t] % 2:
                return None
        even = tuple(b for b, d in zip(self.blocks, dist) if d % 2 == 0)
        odd = tuple(b for b, d in zip(self.blocks, dist) if d % 2 == 1)
        return even, odd

    def is_cutting_edge(self, k: int) -> bool:
        """Edge k (0-based, joining 2k+1 and 2k+2) disconnects the graph when removed."""
        return any(d < 0 for d in self._distances(0, skip_edge=k))

    def cyclomatic_number(self) -> int:
        """#edges - #vertices + 1 for a connected graph."""
        return len(self.edges) - len(self.blocks) + 1

    def to_dot(self, dashed=(), name: str = "G") -> str:
        dashed = set(dashed)
        lines = [f"graph {name} {{"]
        for k, b in enumerate(self.blocks):
            lines.append(f'  v{k} [label="{{{",".join(map(str, b))}}}"];')
        for k, (s, t) in enumerate(self.edges):
            style = ", style=dashed" if (k + 1) in dashed else ""
            lines.append(f'  v{s} -- v{t} [label="{2 * k + 1},{2 * k + 2}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def is_bipartite_connected(p) -> bool:
    g = PiGraph.of(p)
    return g.is_connected() and g.is_bipartite()


@dataclass(frozen=True)
class SignedEpsilon:
    """A tuple over {1,*}: entry 1 puts 2i-1 in A, entry * puts 2i in A."""

    epsilon: tuple
    a_set: frozenset
    b_set: frozenset
    sign: int

    @classmethod
    def from_a_set(cls, a_set, size: int) -> "SignedEpsilon":
        a_set = frozenset(a_set)
        eps = tuple("1" if (2 * i - 1) in a_set else "*" for i in range(1, size // 2 + 1))
        for i, e in enumerate(eps, start=1):
            if ((2 * i) in a_set) == (e == "1"):
                raise ValueError("A does not come from an ε-tuple")
        sign = -1 if sum(1 for x in a_set if x % 2 == 0) % 2 else 1
        return cls(eps, a_set, frozenset(range(1, size + 1)) - a_set, sign)

    @classmethod
    def from_tuple(cls, eps, size: int) -> "SignedEpsilon":
        a = {2 * i - 1 if e == "1" else 2 * i for i, e in enumerate(eps, start=1)}
        return cls.from_a_set(a, size)

    def flipped(self) -> "SignedEpsilon":
        return SignedEpsilon.from_a_set(self.b_set, len(self.a_set) + len(self.b_set))

    def __str__(self):
        return "(" + ",".join(self.epsilon) + ")"


def epsilon_pair(g: PiGraph, root_point: int = 1):
    """The two ε-tuples whose A/B split is a union of blocks; first one has root_point in A."""
    parts = g.bipartition(root_point)
    if parts is None:
        raise ValueError("graph is not bipartite")
    a = {x for b in parts[0] for x in b}
    first = SignedEpsilon.from_a_set(a, g.size)
    return first, first.flipped()


def epsilon_of(p: Permutation):
    """(ε_π, ε'_π) for π in J."""
    return epsilon_pair(PiGraph.of(p))


def sign_of(p: Permutation) -> int:
    return epsilon_of(p)[0].sign


def valid_epsilons_brute(p, size: int) -> list:
    """All ε with {A(ε), B(ε)} coarser than p, by trying all 2^(size/2) tuples."""
    blocks = p.cycles() if isinstance(p, Permutation) else p.blocks
    out = []
    k = size // 2
    for mask in range(1 << k):
        eps = tuple("1" if mask >> (k - 1 - i) & 1 else "*" for i in range(k))
        e = SignedEpsilon.from_tuple(eps, size)
        if all(set(b) <= e.a_set or set(b) <= e.b_set for b in blocks):
            out.append(e)
    return out


@dataclass(frozen=True)
class IpiFactorization:
    c_out: tuple
    c_inn: tuple
    odd_cycles: tuple

    def listing(self) -> tuple:
        """C_out written from 2, then C_inn written from its smallest even point."""
        return self.c_out + self.c_inn


def _rotate_to(cycle: tuple, x: int) -> tuple:
    k = cycle.index(x)
    return cycle[k:] + cycle[:k]


def ipi_factorize(p: Permutation, n: int, m: int) -> IpiFactorization:
    """Factor Iπ for π on the (n, m) annulus, n and m even."""
    if n % 2 or m % 2:
        raise ValueError("both circles must have even size")
    ip = compose(interval_pairing(n + m), p)
    cyc = ip.cycles()
    c_out = next(c for c in cyc if 2 in c)
    c_inn = next(c for c in cyc if (n + 2) in c)
    if c_out == c_inn:
        raise ValueError("2 and n+2 share a cycle of Iπ; π is not in J")
    rest = tuple(c for c in cyc if c is not c_out and c is not c_inn)
    if any(x % 2 == 0 for c in rest for x in c):
        raise ValueError("an extra cycle of Iπ holds an even point; π is not in J")
    return IpiFactorization(_rotate_to(c_out, 2), _rotate_to(c_inn, n + 2), rest)


def flexible_pairs(p: Permutation, n: int, m: int) -> list:
    """Pairs (2i-1, 2i) lying together in C_out or together in C_inn."""
    f = ipi_factorize(p, n, m)
    out = []
    for c in (set(f.c_out), set(f.c_inn)):
        out += [(x, x + 1) for x in c if x % 2 == 1 and (x + 1) in c]
    return sorted(out)


def is_admissible(p: Permutation, n: int, m: int) -> bool:
    return not flexible_pairs(p, n, m)


def first_flexible(p: Permutation, n: int, m: int):
    """First entry of the listing that belongs to a flexible pair, or None."""
    flex = {x for pr in flexible_pairs(p, n, m) for x in pr}
    for x in ipi_factorize(p, n, m).listing():
        if x in flex:
            return x
    return None


def _shift_perm(size: int, mapping: dict) -> Permutation:
    img = list(range(size + 1))
    for x, y in mapping.items():
        img[x] = y
    return Permutation(img[1:])


def t_bijection(p: Permutation, n: int, m: int) -> Permutation:
    """The conjugate τπτ^-1 built from the first flexible pair of an even-cancelable π.

    The image is always in J with the same vertex degrees.  It is odd-cancelable,
    of opposite sign and inverted by :func:`u_bijection` only when the first
    flexible point is neither 2 nor n+2; otherwise the move wraps past the
    start of the listing and those properties can fail.
    """
    f = first_flexible(p, n, m)
    if f is None or f % 2:
        raise ValueError(f"{p} is not even-cancelable")
    i2 = f
    listing = ipi_factorize(p, n, m).listing()
    before = listing[:listing.index(i2 - 1)]
    j2 = max(x for x in before if x % 2 == 0)
    mapping = {i2 - 1: j2, i2: j2 - 1}
    for t in range(i2 + 1, j2 + 1):
        mapping[t] = t - 2
    return p.conjugate(_shift_perm(n + m, mapping))


def u_bijection(p: Permutation, n: int, m: int) -> Permutation:
    """Inverse of :func:`t_bijection` on odd-cancelable permutations."""
    f = first_flexible(p, n, m)
    if f is None or f % 2 == 0:
        raise ValueError(f"{p} is not odd-cancelable")
    j2 = f + 1
    listing = ipi_factorize(p, n, m).listing()
    after = listing[listing.index(f) + 1:]
    i2 = next(x for x in after if x % 2 == 0)
    mapping = {j2 - 1: i2, j2: i2 - 1}
    for t in range(i2 - 1, j2 - 1):
        mapping[t] = t + 2
    return p.conjugate(_shift_perm(n + m, mapping))
