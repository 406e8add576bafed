"""Annular non-crossing permutations S_NC(n,m) and partitioned permutations PS_NC(n,m).

The outer circle is 1..n and the inner circle is n+1..n+m, so
γ = (1,...,n)(n+1,...,n+m).

Generation uses a disk reduction.  Take π in S_NC(n,m), let u be the smallest
outer point with π(u) on the inner circle, and put v = π(u).  Then
π' = π·(u,v) fixes v and is non-crossing for the single cycle γ·(u,v).
Conversely, every non-crossing partition of that cycle with v a singleton
gives back an element of S_NC(n,m) by re-inserting v after u.  The extra
requirement "no outer x < u is sent inside" makes (u, v) unique, so each
element is produced exactly once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .nc_disk import BlockTest, check_bound, enumerate_nc, nc_block_lists
from .perm_core import Permutation, SetPartition, compose, gamma, join

DEFAULT_SNC_BOUND = 12


def is_snc(p: Permutation, n: int, m: int) -> bool:
    """Membership test straight from the definition."""
    if p.size != n + m:
        return False
    g = gamma(n, m)
    if len(join(p, g).blocks) != 1:
        return False
    return p.num_cycles() + compose(p.inverse(), g).num_cycles() == n + m


def through_cycles(p: Permutation, n: int) -> list:
    return [c for c in p.cycles() if min(c) <= n < max(c)]


def _with_v(block: tuple, u: int, v: int) -> tuple:
    if u not in block:
        return block
    k = block.index(u)
    return block[:k + 1] + (v,) + block[k + 1:]


def iter_snc(n: int, m: int, final_ok: BlockTest | None = None,
             grow_ok: BlockTest | None = None) -> Iterator[Permutation]:
    """Yield S_NC(n,m) (unsorted).  Block tests see each final cycle as a tuple."""
    N = n + m
    for u in range(1, n + 1):
        for v in range(n + 1, N + 1):
            inner = list(range(v + 1, N + 1)) + list(range(n + 1, v))
            seq = list(range(1, u + 1)) + inner + list(range(u + 1, n + 1))
            fo = None if final_ok is None else (lambda b, u=u, v=v: final_ok(_with_v(b, u, v)))
            go = None if grow_ok is None else (lambda b, u=u, v=v: grow_ok(_with_v(b, u, v)))
            for blocks in nc_block_lists(seq, fo, go):
                img = [0] * (N + 1)
                for b in blocks:
                    c = _with_v(b, u, v)
                    last = len(c) - 1
                    for i, x in enumerate(c):
                        img[x] = c[i + 1] if i < last else c[0]
                ok = True
                for x in range(1, u):
                    if img[x] > n:
                        ok = False
                        break
                if ok:
                    yield Permutation._raw(tuple(img))


def enumerate_snc(n: int, m: int, bound: int | None = DEFAULT_SNC_BOUND,
                  final_ok: BlockTest | None = None, grow_ok: BlockTest | None = None) -> list:
    """All of S_NC(n,m), sorted canonically; optional block tests restrict the cycles."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    check_bound(n + m, bound, "n+m")
    out = list(iter_snc(n, m, final_ok, grow_ok))
    out.sort()
    return out


def enumerate_snc_brute(n: int, m: int) -> list:
    """Filter all of S_{n+m}; only for small sizes."""
    if n + m > 8:
        raise ValueError("brute force limited to n+m <= 8")
    return sorted(p for p in (Permutation(t) for t in itertools.permutations(range(1, n + m + 1)))
                  if is_snc(p, n, m))


def annular_kreweras(p: Permutation, n: int, m: int) -> Permutation:
    return compose(p.inverse(), gamma(n, m))


def kreweras_twice(p: Permutation, n: int, m: int) -> Permutation:
    """Kr(Kr(p)), checked against the conjugate γ^-1 p γ."""
    g = gamma(n, m)
    kk = annular_kreweras(annular_kreweras(p, n, m), n, m)
    expected = compose(compose(g.inverse(), p), g)
    if kk != expected:
        raise AssertionError(f"Kr∘Kr({p}) = {kk} differs from γ^-1πγ = {expected}")
    return kk


@dataclass(frozen=True)
class PartitionedPermutation:
    """A pair (U, π); ``merged`` = (A, B) names the two cycles fused in U (type 2 only)."""

    u: SetPartition
    perm: Permutation
    kind: str
    merged: tuple | None = None

    @classmethod
    def type1(cls, perm: Permutation) -> "PartitionedPermutation":
        return cls(perm.as_partition(), perm, "type1", None)

    @classmethod
    def type2(cls, perm: Permutation, a: tuple, b: tuple) -> "PartitionedPermutation":
        a, b = tuple(sorted(a)), tuple(sorted(b))
        blocks = [c for c in perm.cycles() if set(c) != set(a) and set(c) != set(b)]
        blocks.append(a + b)
        return cls(SetPartition(blocks, perm.size), perm, "type2", (a, b))

    def to_dict(self) -> dict:
        return {
            "u": [list(b) for b in self.u.blocks],
            "perm": str(self.perm),
            "kind": self.kind,
            "merged": None if self.merged is None else [list(self.merged[0]), list(self.merged[1])],
        }

    def sort_key(self):
        return (self.kind, self.perm.sort_key(), self.merged or ())


def product_perm(p1: Permutation, p2: Permutation) -> Permutation:
    """p1 × p2 acting on 1..n and n+1..n+m."""
    n = p1.size
    return Permutation.from_cycles(list(p1.cycles()) + [tuple(x + n for x in c) for c in p2.cycles()],
                                   n + p2.size)


def enumerate_snc_prime(n: int, m: int, bound: int | None = DEFAULT_SNC_BOUND) -> list:
    """Type-2 partitioned permutations: π1 × π2 in NC(n) × NC(m) with one outer and one inner cycle fused."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    check_bound(n + m, bound, "n+m")
    out = []
    for p1 in enumerate_nc(n, None):
        for p2 in enumerate_nc(m, None):
            p = product_perm(p1, p2)
            outer = [c for c in p.cycles() if c[0] <= n]
            inner = [c for c in p.cycles() if c[0] > n]
            for a in outer:
                for b in inner:
                    out.append(PartitionedPermutation.type2(p, a, b))
    out.sort(key=PartitionedPermutation.sort_key)
    return out


def enumerate_psnc(n: int, m: int, bound: int | None = DEFAULT_SNC_BOUND) -> list:
    """PS_NC(n,m) = type 1 elements followed by type 2 elements."""
    return ([PartitionedPermutation.type1(p) for p in enumerate_snc(n, m, bound)]
            + enumerate_snc_prime(n, m, bound))
