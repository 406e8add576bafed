"""Second-order cumulants of ab + ba, ab - ba and ab as polynomials in the cumulants of a and b.

For κ_{n,m} of a quadratic word the annulus is doubled to (2n, 2m): point
2i-1 carries the first letter of the i-th factor and 2i the second.  The
product also has a route on the (n, m) annulus itself.  Routes never mix the
two labellings.

Every function accepts an optional ``support`` = (sizes, pairs).  Members with
an unmerged cycle whose size is not in ``sizes``, or a merged pair not in
``pairs``, are skipped.  The result is the full polynomial with those
cumulants set to zero, which keeps evaluation at sparse specs (semicircular
ones, say) cheap.  ``support_of`` builds it from two specs.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial

from .annular import annular_kreweras, iter_snc, product_perm
from .index_sets import a_family, iter_j, nc2_nonpar, nc2_nonpar_disk, nc_par, snc_par, x_family, xe_family
from .nc_disk import BoundError, bipartite_disk_set, check_bound, enumerate_nc, kreweras, separates_even
from .perm_core import compose, gamma
from .pi_graph import PiGraph, SignedEpsilon, epsilon_pair, is_admissible, sign_of
from .sym_poly import CumulantPolynomial, CumulantSpec, make_monomial, monomial_from_blocks

TARGETS = ("anti", "comm", "prod", "anti1", "prod1")
DEFAULT_MAX_POINTS = 12
SPARSE_MAX_POINTS = 20

__all__ = [
    "TARGETS", "BoundError", "support_of", "anti_commutator", "commutator", "commutator_full",
    "commutator_cancelled", "product", "product_kreweras", "product_pairings", "product_graphs",
    "first_order_anti_commutator", "first_order_product", "centered_product", "formula",
    "commutator_coefficient", "semicircle_closed_form",
]


def support_of(a: CumulantSpec, b: CumulantSpec):
    fa, sa = a.support()
    fb, sb = b.support()
    return fa | fb, sa | sb


def _sizes(blocks) -> list:
    return [len(c) for c in blocks]


def _budget(points: int, support, max_points) -> None:
    if max_points is None:
        max_points = DEFAULT_MAX_POINTS
        if support is not None and max(support[0], default=0) <= 2:
            max_points = SPARSE_MAX_POINTS
    check_bound(points, max_points, "number of points")


def _block_tests(support):
    if support is None:
        return None, None, None
    sizes, pairs = support
    biggest = max(sizes, default=0)
    return ((lambda b: len(b) in sizes), (lambda b: len(b) <= biggest),
            (lambda j, k: (min(j, k), max(j, k)) in pairs))


def _j_members(N: int, M: int, support):
    final_ok, grow_ok, _ = _block_tests(support)
    if final_ok is None:
        yield from iter_j(N, M)
        return
    # restrict π directly; J membership is then checked member by member
    for p in iter_snc(N, M, final_ok=final_ok, grow_ok=grow_ok):
        if separates_even(annular_kreweras(p, N, M)):
            g = PiGraph.of(p)
            if g.is_connected() and g.is_bipartite():
                yield p


def _x_members(N: int, M: int, support, even_only: bool = False):
    if support is None:
        return xe_family(N, M, None) if even_only else x_family(N, M, None)
    sizes, _ = support
    _, _, pair_ok = _block_tests(support)
    out = x_family(N, M, None, size_ok=lambda s: s in sizes, pair_ok=pair_ok)
    if even_only:
        out = [x for x in out if all(len(c) % 2 == 0 for c in x.perm.cycles())]
    return out


# anti-commutator

def anti_commutator(n: int, m: int, support=None, max_points: int | None = None) -> CumulantPolynomial:
    """κ_{n,m}(ab + ba): a sum over J and a sum over X on the (2n, 2m) annulus."""
    N, M = 2 * n, 2 * m
    _budget(N + M, support, max_points)
    acc: Counter = Counter()
    for p in _j_members(N, M, support):
        even, odd = PiGraph.of(p).bipartition()
        se, so = _sizes(even), _sizes(odd)
        acc[monomial_from_blocks(se, so)] += 1
        acc[monomial_from_blocks(so, se)] += 1
    for x in _x_members(N, M, support):
        a, b = x.merged
        se, so = _sizes(x.rest_even), _sizes(x.rest_odd)
        acc[monomial_from_blocks(se, so, ("a", len(a), len(b)))] += 1
        acc[monomial_from_blocks(so, se, ("b", len(a), len(b)))] += 1
    return CumulantPolynomial(acc)


# commutator

def commutator_full(n: int, m: int, support=None, max_points: int | None = None) -> CumulantPolynomial:
    """κ_{n,m}(ab - ba) over all of J and X, each of the two ε-tuples taken with its own sign."""
    N, M = 2 * n, 2 * m
    _budget(N + M, support, max_points)
    acc: Counter = Counter()
    for p in _j_members(N, M, support):
        for eps in epsilon_pair(PiGraph.of(p)):
            a_sz = [len(c) for c in p.cycles() if c[0] in eps.a_set]
            b_sz = [len(c) for c in p.cycles() if c[0] in eps.b_set]
            acc[monomial_from_blocks(a_sz, b_sz)] += eps.sign
    for x in _x_members(N, M, support):
        a, b = x.merged
        eps = epsilon_pair(PiGraph.of(x.pp.u), a[0])
        for e in eps:
            var = "a" if a[0] in e.a_set else "b"
            rest = [c for c in x.perm.cycles() if c != a and c != b]
            a_sz = [len(c) for c in rest if c[0] in e.a_set]
            b_sz = [len(c) for c in rest if c[0] in e.b_set]
            acc[monomial_from_blocks(a_sz, b_sz, (var, len(a), len(b)))] += e.sign
    return CumulantPolynomial(acc)


def commutator_cancelled(n: int, m: int, support=None, max_points: int | None = None) -> CumulantPolynomial:
    """κ_{n,m}(ab - ba) over admissible permutations and the all-even part of X.

    Each member contributes s·(κ^a_{π'}κ^b_{π''} + (-1)^{n+m} κ^b_{π'}κ^a_{π''})
    where s is the sign of its ε-tuple putting 1 (resp. the merged block) in A.
    """
    N, M = 2 * n, 2 * m
    _budget(N + M, support, max_points)
    flip = -1 if (n + m) % 2 else 1
    acc: Counter = Counter()
    final_ok = _block_tests(support)[0]
    members = (a_family(N, M, None) if final_ok is None
               else [p for p in _j_members(N, M, support) if is_admissible(p, N, M)])
    for p in members:
        s = sign_of(p)
        even, odd = PiGraph.of(p).bipartition()
        se, so = _sizes(even), _sizes(odd)
        acc[monomial_from_blocks(se, so)] += s
        acc[monomial_from_blocks(so, se)] += s * flip
    for x in _x_members(N, M, support, even_only=True):
        a, b = x.merged
        s = SignedEpsilon.from_a_set({y for c in x.rest_even + (a, b) for y in c}, N + M).sign
        se, so = _sizes(x.rest_even), _sizes(x.rest_odd)
        acc[monomial_from_blocks(se, so, ("a", len(a), len(b)))] += s
        acc[monomial_from_blocks(so, se, ("b", len(a), len(b)))] += s * flip
    return CumulantPolynomial(acc)


def commutator(n: int, m: int, support=None, max_points: int | None = None, route: str = "cancelled"):
    if route == "cancelled":
        return commutator_cancelled(n, m, support, max_points)
    if route == "full":
        return commutator_full(n, m, support, max_points)
    raise ValueError(f"unknown commutator route {route!r}")


# product

def product_kreweras(n: int, m: int, support=None, max_points: int | None = None) -> CumulantPolynomial:
    """κ_{n,m}(ab) on the (n, m) annulus: S_NC terms plus merges inside π or inside Kr(π)."""
    _budget(n + m, support, max_points)
    final_ok, grow_ok, pair_ok = _block_tests(support)
    acc: Counter = Counter()
    for p in iter_snc(n, m):
        kr = annular_kreweras(p, n, m)
        if final_ok is not None and not all(final_ok(c) for c in p.cycles() + kr.cycles()):
            continue
        acc[monomial_from_blocks(_sizes(p.cycles()), _sizes(kr.cycles()))] += 1
    for p1 in enumerate_nc(n, None):
        k1 = kreweras(p1)
        for p2 in enumerate_nc(m, None):
            k2 = kreweras(p2)
            p = product_perm(p1, p2)
            kr = product_perm(k1, k2)
            pc, kc = p.cycles(), kr.cycles()
            for cyc, other, var in ((pc, kc, "a"), (kc, pc, "b")):
                outer = [c for c in cyc if c[0] <= n]
                inner = [c for c in cyc if c[0] > n]
                for u in outer:
                    for v in inner:
                        rest = [c for c in cyc if c is not u and c is not v]
                        if pair_ok is not None and not (pair_ok(len(u), len(v))
                                                        and all(final_ok(c) for c in rest + list(other))):
                            continue
                        if var == "a":
                            mono = monomial_from_blocks(_sizes(rest), _sizes(other), ("a", len(u), len(v)))
                        else:
                            mono = monomial_from_blocks(_sizes(other), _sizes(rest), ("b", len(u), len(v)))
                        acc[mono] += 1
    return CumulantPolynomial(acc)


def _by_parity(blocks):
    odd = [len(c) for c in blocks if c[0] % 2 == 1]
    even = [len(c) for c in blocks if c[0] % 2 == 0]
    return odd, even


def _merged_parity_terms(acc, blocks, N):
    """Merges of an outer and an inner block of equal parity; odd blocks carry a, even ones b."""
    outer = [c for c in blocks if c[0] <= N]
    inner = [c for c in blocks if c[0] > N]
    for u in outer:
        for v in inner:
            if u[0] % 2 != v[0] % 2:
                continue
            odd, even = _by_parity([c for c in blocks if c is not u and c is not v])
            var = "a" if u[0] % 2 else "b"
            acc[monomial_from_blocks(odd, even, (var, len(u), len(v)))] += 1


def product_pairings(n: int, m: int, max_points: int | None = None) -> CumulantPolynomial:
    """κ_{n,m}(ab) indexed by pairings ρ that always join an odd point to an even one.

    The blocks of γρ are parity-pure: odd blocks give κ^a, even blocks κ^b.
    """
    N, M = 2 * n, 2 * m
    _budget(N + M, None, max_points)
    g = gamma(N, M)
    acc: Counter = Counter()
    for rho in nc2_nonpar(N, M, None):
        odd, even = _by_parity(compose(g, rho).cycles())
        acc[monomial_from_blocks(odd, even)] += 1
    for r1 in nc2_nonpar_disk(N):
        for r2 in nc2_nonpar_disk(M):
            _merged_parity_terms(acc, compose(g, product_perm(r1, r2)).cycles(), N)
    return CumulantPolynomial(acc)


def product_graphs(n: int, m: int, max_points: int | None = None) -> CumulantPolynomial:
    """κ_{n,m}(ab) indexed by parity-preserving π whose graph is unicyclic, plus pairs of trees."""
    N, M = 2 * n, 2 * m
    _budget(N + M, None, max_points)
    acc: Counter = Counter()
    for p in snc_par(N, M, None):
        g = PiGraph.of(p)
        if g.is_connected() and g.cyclomatic_number() == 1:
            odd, even = _by_parity(p.cycles())
            acc[monomial_from_blocks(odd, even)] += 1

    def trees(k):
        out = []
        for p in nc_par(k):
            g = PiGraph.of(p)
            if g.is_connected() and g.cyclomatic_number() == 0:
                out.append(p)
        return out

    for p1 in trees(N):
        for p2 in trees(M):
            _merged_parity_terms(acc, product_perm(p1, p2).cycles(), N)
    return CumulantPolynomial(acc)


def product(n: int, m: int, support=None, max_points: int | None = None, route: str = "kreweras"):
    if route == "kreweras":
        return product_kreweras(n, m, support, max_points)
    if support is not None:
        raise ValueError("support restriction is only available on the kreweras route")
    if route == "pairings":
        return product_pairings(n, m, max_points)
    if route == "graphs":
        return product_graphs(n, m, max_points)
    raise ValueError(f"unknown product route {route!r}")


def centered_product(n: int, m: int, max_points: int | None = None) -> CumulantPolynomial:
    """κ_{n,m}(ab) with κ_1^a = κ_1^b = 0."""
    return product(n, m, max_points=max_points).without(lambda ind: ind[1] == (1,))


# first order

def first_order_anti_commutator(n: int, max_points: int | None = None) -> CumulantPolynomial:
    _budget(2 * n, None, max_points or 14)
    acc: Counter = Counter()
    for _, even, odd in bipartite_disk_set(n, None):
        se, so = _sizes(even), _sizes(odd)
        acc[monomial_from_blocks(se, so)] += 1
        acc[monomial_from_blocks(so, se)] += 1
    return CumulantPolynomial(acc)


def first_order_product(n: int, max_points: int | None = None) -> CumulantPolynomial:
    _budget(n, None, max_points or 14)
    acc: Counter = Counter()
    for p in enumerate_nc(n, None):
        acc[monomial_from_blocks(_sizes(p.cycles()), _sizes(kreweras(p).cycles()))] += 1
    return CumulantPolynomial(acc)


def formula(target: str, n: int, m: int | None = None, support=None, max_points: int | None = None):
    """Dispatch on the target name; first-order targets ignore ``m``."""
    if target in ("anti1", "prod1"):
        if target == "anti1":
            return first_order_anti_commutator(n, max_points)
        return first_order_product(n, max_points)
    if m is None:
        raise ValueError(f"target {target!r} needs both n and m")
    if target == "anti":
        return anti_commutator(n, m, support, max_points)
    if target == "comm":
        return commutator(n, m, support, max_points)
    if target == "prod":
        return product(n, m, support, max_points)
    raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")


def commutator_coefficient(n: int, m: int, monomial, max_points: int | None = None) -> int:
    """Coefficient of ``monomial`` in κ_{n,m}(ab - ba).

    Only members whose cycle sizes occur in the monomial can contribute, so
    the enumeration is restricted to those sizes.
    """
    mono = tuple(monomial)
    if mono and isinstance(mono[0][0], str):
        mono = make_monomial(mono)
    sizes = frozenset(args[0] for (_, args), _ in mono if len(args) == 1)
    pairs = frozenset(args for (_, args), _ in mono if len(args) == 2)
    return commutator(n, m, (sizes, pairs), max_points).coefficient(mono)


# semicircular closed forms

def _spoke_count(n: int, m: int) -> int:
    return factorial(n + m - 1) // (factorial(n - 1) * factorial(m - 1))


def semicircle_closed_form(target: str, n: int, m: int, k2a=1, k22a=1, k2b=1, k22b=1) -> Fraction:
    """Closed forms when every cumulant except κ_2 and κ_{2,2} vanishes."""
    k2a, k22a, k2b, k22b = (Fraction(x) for x in (k2a, k22a, k2b, k22b))
    x = k2a * k2b
    if target == "prod":
        return Fraction(n) * x ** n if n == m else Fraction(0)
    if target not in ("anti", "comm"):
        raise ValueError(f"no closed form for target {target!r}")
    if (n + m) % 2:
        return Fraction(0)
    # the commutator differs from the anti-commutator by (-1)^((n-m)/2) in every branch
    sign = 1 if target == "anti" else (-1) ** (abs(n - m) // 2)
    val = 2 * _spoke_count(n, m) * x ** ((n + m) // 2)
    if n % 2 == 0:
        val += n * m * x ** ((n + m - 4) // 2) * (k22a * k2b ** 2 + k22b * k2a ** 2)
    return sign * val
