"""Non-crossing partitions of a disk and their Kreweras complements."""

from __future__ import annotations

from typing import Callable, Iterator, Sequence

from .perm_core import Permutation, compose, gamma, interval_pairing, join

DEFAULT_NC_BOUND = 14

BlockTest = Callable[[tuple], bool]


class BoundError(ValueError):
    """Requested size exceeds the configured enumeration bound."""


def check_bound(value: int, bound: int | None, what: str) -> None:
    if bound is not None and value > bound:
        raise BoundError(f"{what} = {value} exceeds bound {bound}")


def nc_block_lists(seq: Sequence[int], final_ok: BlockTest | None = None,
                   grow_ok: BlockTest | None = None) -> Iterator[tuple]:
    """Yield every non-crossing partition of the ordered points ``seq``.

    Each partition is a tuple of blocks; a block lists its points in ``seq``
    order.  ``final_ok`` filters completed blocks.  ``grow_ok`` is asked about
    every partial block while it is being built; it must be monotone (if it
    rejects a block it rejects every superset with the same first point) so
    that rejecting early is safe.
    """
    seq = tuple(seq)
    memo: dict = {}

    def part(lo: int, hi: int) -> list:
        key = (lo, hi)
        if key not in memo:
            memo[key] = [()] if lo >= hi else list(extend((lo,), lo + 1, hi))
        return memo[key]

    def extend(idx: tuple, nxt: int, hi: int) -> Iterator[tuple]:
        block = tuple(seq[i] for i in idx)
        if len(idx) == 1 and grow_ok is not None and not grow_ok(block):
            return
        if final_ok is None or final_ok(block):
            for rest in part(nxt, hi):
                yield (block,) + rest
        for j in range(nxt, hi):
            bigger = idx + (j,)
            if grow_ok is not None and not grow_ok(tuple(seq[i] for i in bigger)):
                continue
            gaps = part(nxt, j)
            if not gaps:
                continue
            for tail in extend(bigger, j + 1, hi):
                for gap in gaps:
                    yield gap + tail

    yield from part(0, len(seq))


def perm_from_blocks(blocks, n: int) -> Permutation:
    return Permutation.from_cycles(blocks, n)


def enumerate_nc(n: int, bound: int | None = DEFAULT_NC_BOUND,
                 final_ok: BlockTest | None = None, grow_ok: BlockTest | None = None) -> list:
    """All of NC(n) as permutations whose cycles are increasing blocks."""
    if n < 1:
        raise ValueError("n must be positive")
    check_bound(n, bound, "n")
    out = [perm_from_blocks(bl, n) for bl in nc_block_lists(range(1, n + 1), final_ok, grow_ok)]
    out.sort()
    return out


def is_noncrossing(p) -> bool:
    """Quadruple test: no i<j<k<l with i,k in one block and j,l in another."""
    part = p.as_partition() if isinstance(p, Permutation) else p
    lab = part.labels()
    n = part.size
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if lab[j] == lab[i]:
                continue
            for k in range(j + 1, n + 1):
                if lab[k] != lab[i]:
                    continue
                for l in range(k + 1, n + 1):
                    if lab[l] == lab[j]:
                        return False
    return True


def is_nc_permutation(p: Permutation) -> bool:
    """Geodesic test #(p) + #(p^-1 γ_n) = n + 1."""
    n = p.size
    return p.num_cycles() + compose(p.inverse(), gamma(n)).num_cycles() == n + 1


def kreweras(p: Permutation) -> Permutation:
    """Kr(p) = p^-1 γ_n."""
    return compose(p.inverse(), gamma(p.size))


def separates_even(p: Permutation) -> bool:
    if p.size % 2:
        raise ValueError("separates-even needs an even ground set")
    return all(sum(1 for x in c if x % 2 == 0) <= 1 for c in p.cycles())


def at_most_one_even(block: tuple) -> bool:
    seen = False
    for x in block:
        if not x & 1:
            if seen:
                return False
            seen = True
    return True


def prod_args_index(n: int, bound: int | None = DEFAULT_NC_BOUND) -> list:
    """{π ∈ NC(2n) : π ∨ I_{2n} = 1}, read off from Kreweras complements that separate evens."""
    check_bound(2 * n, bound, "2n")
    g = gamma(2 * n)
    out = []
    for bl in nc_block_lists(range(1, 2 * n + 1), grow_ok=at_most_one_even):
        sigma = perm_from_blocks(bl, 2 * n)
        out.append(compose(g, sigma.inverse()))
    out.sort()
    return out


def prod_args_index_by_join(n: int, bound: int | None = DEFAULT_NC_BOUND) -> list:
    """Same set, filtered directly by the join condition."""
    check_bound(2 * n, bound, "2n")
    pairing = interval_pairing(2 * n)
    return [p for p in enumerate_nc(2 * n, bound) if len(join(p, pairing).blocks) == 1]


def bipartite_disk_set(n: int, bound: int | None = DEFAULT_NC_BOUND) -> list:
    """π ∈ NC(2n) whose block graph is connected and bipartite, with the bipartition.

    Returns a list of ``(π, even_part, odd_part)``; the parts are tuples of
    blocks, the even part holding the block of 1.
    """
    from .pi_graph import PiGraph

    out = []
    for p in prod_args_index(n, bound):
        parts = PiGraph.of(p).bipartition()
        if parts is not None:
            out.append((p,) + parts)
    return out

