"""Named indexing families on the (N, M) annulus, N and M even.

Every family has a membership predicate and a generator.  The predicates
follow the definitions literally; the generators are the fast paths and are
checked against predicate-filtered enumeration in the tests.

    J    π in S_NC(N,M) with bipartite graph and π^-1 γ separating evens
    A    members of J without flexible pairs (admissible)
    FE   members of J whose first flexible entry is even
    FO   members of J whose first flexible entry is odd
    X    type-2 partitioned permutations whose merged graph is connected and bipartite
    XE   members of X whose cycles all have even size
    K    Kreweras images of J
    SncPar     parity-preserving elements of S_NC(N,M)
    Nc2NonPar  pairings in S_NC(N,M) joining an odd point to an even point
    Spoke      rigid spoke pairings
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .annular import (DEFAULT_SNC_BOUND, PartitionedPermutation, annular_kreweras, enumerate_snc,
                      enumerate_snc_prime, is_snc, iter_snc, product_perm)
from .nc_disk import (BlockTest, at_most_one_even, bipartite_disk_set, check_bound, enumerate_nc,
                      separates_even)
from .perm_core import Permutation, compose, gamma
from .pi_graph import PiGraph, first_flexible, is_admissible

FAMILY_NAMES = ("J", "A", "FE", "FO", "X", "XE", "K", "SncPar", "Nc2NonPar", "Spoke")
DEFAULT_J_BOUND = 12
DEFAULT_SPOKE_BOUND = 48


def _check_even(n: int, m: int) -> None:
    if n < 2 or m < 2 or n % 2 or m % 2:
        raise ValueError(f"sizes must be positive and even, got ({n},{m})")


# J and relatives

def in_j(p: Permutation, n: int, m: int) -> bool:
    if not is_snc(p, n, m):
        return False
    if not separates_even(annular_kreweras(p, n, m)):
        return False
    g = PiGraph.of(p)
    return g.is_connected() and g.is_bipartite()


def iter_j(n: int, m: int, final_ok: BlockTest | None = None):
    """Yield J_{n,m}.  With ``final_ok`` the cycles of π are restricted as well."""
    if final_ok is None:
        # walk the Kreweras side, where separating evens prunes the search
        g = gamma(n, m)
        for sigma in iter_snc(n, m, grow_ok=at_most_one_even):
            p = compose(g, sigma.inverse())
            pg = PiGraph.of(p)
            if pg.is_connected() and pg.is_bipartite():
                yield p
    else:
        for p in iter_snc(n, m, final_ok=final_ok):
            if separates_even(annular_kreweras(p, n, m)):
                pg = PiGraph.of(p)
                if pg.is_connected() and pg.is_bipartite():
                    yield p


def j_family(n: int, m: int, bound: int | None = DEFAULT_J_BOUND, final_ok: BlockTest | None = None) -> list:
    _check_even(n, m)
    check_bound(n + m, bound, "n+m")
    return sorted(iter_j(n, m, final_ok))


def a_family(n: int, m: int, bound: int | None = DEFAULT_J_BOUND, final_ok: BlockTest | None = None) -> list:
    return [p for p in j_family(n, m, bound, final_ok) if is_admissible(p, n, m)]


def cancelable_split(n: int, m: int, bound: int | None = DEFAULT_J_BOUND):
    """(FE, FO): cancelable members of J by parity of their first flexible entry."""
    fe, fo = [], []
    for p in j_family(n, m, bound):
        f = first_flexible(p, n, m)
        if f is not None:
            (fe if f % 2 == 0 else fo).append(p)
    return fe, fo


def k_family(n: int, m: int, bound: int | None = DEFAULT_J_BOUND) -> list:
    return sorted(annular_kreweras(p, n, m) for p in j_family(n, m, bound))


def in_k(sigma: Permutation, n: int, m: int) -> bool:
    """σ separates evens and the graph of γσ^-1 is bipartite (σ taken in S_NC)."""
    if not is_snc(sigma, n, m) or not separates_even(sigma):
        return False
    g = PiGraph.of(compose(gamma(n, m), sigma.inverse()))
    return g.is_connected() and g.is_bipartite()


def k_family_by_predicate(n: int, m: int, bound: int | None = DEFAULT_J_BOUND) -> list:
    _check_even(n, m)
    check_bound(n + m, bound, "n+m")
    return sorted(s for s in iter_snc(n, m, grow_ok=at_most_one_even) if in_k(s, n, m))


# X and XE

@dataclass(frozen=True)
class XMember:
    """A member of X with the data the formulas need.

    ``rest_even``/``rest_odd`` are the non-merged cycles at even/odd distance
    from the merged vertex U = A ∪ B.
    """

    pp: PartitionedPermutation
    rest_even: tuple
    rest_odd: tuple

    @property
    def perm(self) -> Permutation:
        return self.pp.perm

    @property
    def merged(self) -> tuple:
        return self.pp.merged


def _x_member(pp: PartitionedPermutation):
    g = PiGraph.of(pp.u)
    if not g.is_connected():
        return None
    a, b = pp.merged
    parts = g.bipartition(a[0])
    if parts is None:
        return None
    u_block = tuple(sorted(a + b))
    even = tuple(c for c in parts[0] if c != u_block)
    return XMember(pp, even, parts[1])


def in_x(pp: PartitionedPermutation, n: int, m: int) -> bool:
    return pp.kind == "type2" and pp.perm.size == n + m and _x_member(pp) is not None


def x_family(n: int, m: int, bound: int | None = DEFAULT_J_BOUND,
             size_ok=None, pair_ok=None) -> list:
    """X_{n,m} from pairs of connected bipartite disk partitions and every merge choice.

    ``size_ok(s)`` and ``pair_ok(j, k)`` optionally drop members having an
    unmerged cycle of size s, or a merged pair of sizes (j, k), that fails.
    """
    _check_even(n, m)
    check_bound(n + m, bound, "n+m")

    def few_bad(p):
        # at most one cycle may fail size_ok: it has to be the merged one
        return size_ok is None or sum(1 for c in p.cycles() if not size_ok(len(c))) <= 1

    left = [p for p, *_ in bipartite_disk_set(n // 2, None) if few_bad(p)]
    right = [p for p, *_ in bipartite_disk_set(m // 2, None) if few_bad(p)]
    out = []
    for p1 in left:
        for p2 in right:
            p = product_perm(p1, p2)
            outer = [c for c in p.cycles() if c[0] <= n]
            inner = [c for c in p.cycles() if c[0] > n]
            for a in outer:
                for b in inner:
                    if pair_ok is not None and not pair_ok(len(a), len(b)):
                        continue
                    if size_ok is not None and any(not size_ok(len(c)) for c in p.cycles()
                                                   if c is not a and c is not b):
                        continue
                    mem = _x_member(PartitionedPermutation.type2(p, a, b))
                    if mem is None:
                        raise AssertionError("merging two connected bipartite graphs failed")
                    out.append(mem)
    out.sort(key=lambda x: x.pp.sort_key())
    return out


def x_family_by_predicate(n: int, m: int) -> list:
    _check_even(n, m)
    out = [x for x in map(_x_member, enumerate_snc_prime(n, m, None)) if x is not None]
    out.sort(key=lambda x: x.pp.sort_key())
    return out


def x_family_with_merges(n: int, m: int, bound: int | None = DEFAULT_J_BOUND) -> list:
    """X on the doubled annulus (2n, 2m)."""
    return x_family(2 * n, 2 * m, bound)


def xe_family(n: int, m: int, bound: int | None = DEFAULT_J_BOUND) -> list:
    return [x for x in x_family(n, m, bound) if all(len(c) % 2 == 0 for c in x.perm.cycles())]


# parity classes used by the product formulas

def _parity_preserving(block) -> bool:
    return len({x & 1 for x in block}) == 1


def _odd_even_pair(block) -> bool:
    return len(block) == 2 and (block[0] + block[1]) % 2 == 1


def snc_par(n: int, m: int, bound: int | None = DEFAULT_SNC_BOUND) -> list:
    return enumerate_snc(n, m, bound, grow_ok=_parity_preserving)


def nc_par(n: int, bound: int | None = None) -> list:
    return enumerate_nc(n, bound, grow_ok=_parity_preserving)


def nc2_nonpar(n: int, m: int, bound: int | None = DEFAULT_SNC_BOUND) -> list:
    return enumerate_snc(n, m, bound, final_ok=_odd_even_pair, grow_ok=lambda b: len(b) <= 2)


def nc2_nonpar_disk(n: int, bound: int | None = None) -> list:
    return enumerate_nc(n, bound, final_ok=_odd_even_pair, grow_ok=lambda b: len(b) <= 2)


# spoke pairings

def is_spoke(p: Permutation, n: int, m: int) -> bool:
    """Rigid spoke pairing on the (n, m) annulus."""
    if any(len(c) != 2 for c in p.cycles()) or not is_snc(p, n, m):
        return False
    g = gamma(n, m)
    through = []
    for x, y in p.cycles():
        is_through = x <= n < y
        if is_through != (x % 2 == y % 2):
            return False
        if is_through:
            through.append((x, y))
        elif not ((x % 2 == 0 and g(x) == y) or (y % 2 == 0 and g(y) == x)):
            return False
    pts = {z for c in through for z in c}
    outer = [z for z in range(1, n + 1) if z in pts]
    inner = [z for z in range(n + 1, n + m + 1) if z in pts]
    nxt = {a: b for a, b in zip(outer, outer[1:] + outer[:1])}
    prv = {b: a for a, b in zip(inner, inner[1:] + inner[:1])}
    return all(p(nxt[u]) == prv[v] for u, v in through)


def spoke_family(n: int, m: int, bound: int | None = DEFAULT_SPOKE_BOUND, all_through: bool = False) -> list:
    """Spoke pairings on the (2n, 2m) annulus, built slot by slot.

    The outer slots are (2s, γ(2s)).  Choose k outer and k inner slots to open;
    their 2k + 2k points are joined by a rotation-rigid non-crossing matching,
    and of the 2k possible rotations the k even ones preserve parity.  The
    closed slots stay as short pairs.  ``all_through`` keeps only k = n = m.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    check_bound(2 * n + 2 * m, bound, "2n+2m")
    N, M = 2 * n, 2 * m
    g = gamma(N, M)
    outer_slots = [(2 * s, g(2 * s)) for s in range(1, n + 1)]
    inner_slots = [(N + 2 * t, g(N + 2 * t)) for t in range(1, m + 1)]
    out = []
    for k in range(1, min(n, m) + 1):
        if all_through and not (k == n == m):
            continue
        for S in itertools.combinations(range(n), k):
            for T in itertools.combinations(range(m), k):
                P = [x for s in S for x in outer_slots[s]]
                Q = [x for t in T for x in inner_slots[t]]
                closed = [outer_slots[s] for s in range(n) if s not in S]
                closed += [inner_slots[t] for t in range(m) if t not in T]
                for c in range(0, 2 * k, 2):
                    pairs = [(P[i], Q[(c - i) % (2 * k)]) for i in range(2 * k)]
                    out.append(Permutation.from_cycles(pairs + closed, N + M))
    out.sort()
    return out


def spoke_family_by_predicate(n: int, m: int) -> list:
    N, M = 2 * n, 2 * m
    return [p for p in enumerate_snc(N, M, None, final_ok=lambda b: len(b) == 2, grow_ok=lambda b: len(b) <= 2)
            if is_spoke(p, N, M)]


# uniform access

@dataclass
class IndexFamily:
    name: str
    n: int
    m: int
    members: list = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.members)

    def to_dict(self, with_members: bool = True) -> dict:
        d = {"family": self.name, "n": self.n, "m": self.m, "count": self.count}
        if with_members:
            d["members"] = [member_dict(x) for x in self.members]
        return d


def member_dict(x):
    if isinstance(x, XMember):
        return x.pp.to_dict()
    if isinstance(x, PartitionedPermutation):
        return x.to_dict()
    return str(x)


def member_text(x) -> str:
    if isinstance(x, XMember):
        x = x.pp
    if isinstance(x, PartitionedPermutation):
        if x.merged is None:
            return str(x.perm)
        a, b = x.merged
        return f"{x.perm} merge {{{','.join(map(str, a))}}}+{{{','.join(map(str, b))}}}"
    return str(x)


def family(name: str, n: int, m: int, bound: int | None = DEFAULT_J_BOUND) -> IndexFamily:
    """Materialize a family on the (n, m) annulus; ``n`` and ``m`` are ground sizes."""
    if name == "J":
        members = j_family(n, m, bound)
    elif name == "A":
        members = a_family(n, m, bound)
    elif name in ("FE", "FO"):
        fe, fo = cancelable_split(n, m, bound)
        members = fe if name == "FE" else fo
    elif name == "X":
        members = x_family(n, m, bound)
    elif name == "XE":
        members = xe_family(n, m, bound)
    elif name == "K":
        members = k_family(n, m, bound)
    elif name == "SncPar":
        members = snc_par(n, m, bound)
    elif name == "Nc2NonPar":
        members = nc2_nonpar(n, m, bound)
    elif name == "Spoke":
        _check_even(n, m)
        members = spoke_family(n // 2, m // 2, None if bound is None else max(bound, DEFAULT_SPOKE_BOUND))
    else:
        raise ValueError(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")
    return IndexFamily(name, n, m, members)
