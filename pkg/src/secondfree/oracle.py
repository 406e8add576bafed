"""Brute-force reference values from the moment-cumulant relations.

Joint moments of words in two free variables a, b are sums of cumulants over
NC(n) (first order) and over PS_NC(n, m) (second order), with every block
that mixes letters contributing zero.  Cumulants of c = ab + ba, ab - ba or
ab are then peeled off the moments of powers of c by inverting the same
relations in the single variable c.  Nothing here uses the indexing families
or the closed formulas; all arithmetic is in exact rationals.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .annular import iter_snc, product_perm
from .nc_disk import check_bound, enumerate_nc, nc_block_lists
from .sym_poly import CumulantSpec

ORACLE_BOUND_PM = 5
ORACLE_BOUND_PROD = 6

WORD_EXPANSIONS = {
    "anti": ((("a", "b"), 1), (("b", "a"), 1)),
    "comm": ((("a", "b"), 1), (("b", "a"), -1)),
    "prod": ((("a", "b"), 1),),
}


def _mono(letters, block) -> str | None:
    x = letters[block[0] - 1]
    for i in block:
        if letters[i - 1] != x:
            return None
    return x


class JointMoments:
    """Moments of words in a and b for fixed cumulant specs, memoised by word."""

    def __init__(self, a: CumulantSpec, b: CumulantSpec):
        self.specs = {"a": a, "b": b}
        self.first: dict = {}
        self.second: dict = {}

    def moment(self, word: str) -> Fraction:
        """φ(word) = Σ over NC(|w|) of products of single-letter cumulants."""
        if not word:
            raise ValueError("empty word")
        if word not in self.first:
            n = len(word)
            total = Fraction(0)
            pure = lambda b: _mono(word, b) is not None  # noqa: E731
            for blocks in nc_block_lists(range(1, n + 1), grow_ok=pure):
                val = Fraction(1)
                for bl in blocks:
                    val *= self.specs[word[bl[0] - 1]].value(len(bl))
                    if not val:
                        break
                total += val
            self.first[word] = total
        return self.first[word]

    def second_moment(self, w1: str, w2: str) -> Fraction:
        """φ²(w1, w2) = Σ over PS_NC(|w1|, |w2|), type 1 and type 2 terms."""
        if not w1 or not w2:
            raise ValueError("empty word")
        key = (w1, w2)
        if key not in self.second:
            self.second[key] = self._type1(w1, w2) + self._type2(w1, w2)
        return self.second[key]

    def _type1(self, w1: str, w2: str) -> Fraction:
        letters = w1 + w2
        pure = lambda b: _mono(letters, b) is not None  # noqa: E731
        total = Fraction(0)
        for p in iter_snc(len(w1), len(w2), grow_ok=pure):
            val = Fraction(1)
            for c in p.cycles():
                val *= self.specs[letters[c[0] - 1]].value(len(c))
                if not val:
                    break
            total += val
        return total

    def _type2(self, w1: str, w2: str) -> Fraction:
        n = len(w1)
        letters = w1 + w2
        total = Fraction(0)
        left = enumerate_nc(len(w1), None, grow_ok=lambda b: _mono(w1, b) is not None)
        right = enumerate_nc(len(w2), None, grow_ok=lambda b: _mono(w2, b) is not None)
        for p1 in left:
            for p2 in right:
                cyc = product_perm(p1, p2).cycles()
                for a in (c for c in cyc if c[0] <= n):
                    for b in (c for c in cyc if c[0] > n):
                        x = letters[a[0] - 1]
                        if letters[b[0] - 1] != x:
                            continue
                        val = self.specs[x].value(len(a), len(b))
                        for c in cyc:
                            if not val:
                                break
                            if c is not a and c is not b:
                                val *= self.specs[letters[c[0] - 1]].value(len(c))
                        total += val
        return total


def _power_words(target: str, k: int):
    """Expand c^k into (word, coefficient) pairs."""
    for choice in itertools.product(WORD_EXPANSIONS[target], repeat=k):
        word = "".join(x + y for (x, y), _ in choice)
        coeff = 1
        for _, s in choice:
            coeff *= s
        yield word, coeff


def power_moments(target: str, a: CumulantSpec, b: CumulantSpec, max_total: int, cache: JointMoments | None = None):
    """φ(c^k) for k ≤ max_total and φ²(c^p, c^q) for p + q ≤ max_total."""
    jm = cache or JointMoments(a, b)
    first = {}
    for k in range(1, max_total + 1):
        first[k] = sum((s * jm.moment(w) for w, s in _power_words(target, k)), Fraction(0))
    second = {}
    for p in range(1, max_total):
        for q in range(1, max_total - p + 1):
            total = Fraction(0)
            for w1, s1 in _power_words(target, p):
                for w2, s2 in _power_words(target, q):
                    total += s1 * s2 * jm.second_moment(w1, w2)
            second[(p, q)] = total
    return first, second


def cumulants_from_moments(first_m: dict, second_m: dict, max_total: int):
    """Invert the first- and second-order moment-cumulant relations of a single variable."""
    kap1: dict = {}
    for k in range(1, max_total + 1):
        rest = Fraction(0)
        for p in enumerate_nc(k, None):
            if p.num_cycles() == 1:
                continue
            val = Fraction(1)
            for c in p.cycles():
                val *= kap1[len(c)]
            rest += val
        kap1[k] = first_m[k] - rest
    kap2: dict = {}
    for total_size in range(2, max_total + 1):
        for p in range(1, total_size):
            q = total_size - p
            acc = Fraction(0)
            for s in iter_snc(p, q):
                val = Fraction(1)
                for c in s.cycles():
                    val *= kap1[len(c)]
                acc += val
            for p1 in enumerate_nc(p, None):
                for p2 in enumerate_nc(q, None):
                    cyc = product_perm(p1, p2).cycles()
                    if len(cyc) == 2:
                        continue  # the top element carries κ_{p,q} itself
                    for a in (c for c in cyc if c[0] <= p):
                        for b in (c for c in cyc if c[0] > p):
                            val = kap2[(len(a), len(b))]
                            for c in cyc:
                                if c is not a and c is not b:
                                    val *= kap1[len(c)]
                            acc += val
            kap2[(p, q)] = second_m[(p, q)] - acc
    return kap1, kap2


def extract_cumulants(target: str, a: CumulantSpec, b: CumulantSpec, max_total: int, bound: int | None = None):
    """(κ_k(c) for k ≤ max_total, κ_{p,q}(c) for p + q ≤ max_total) with c the target element."""
    if target not in WORD_EXPANSIONS:
        raise ValueError(f"oracle target must be one of {tuple(WORD_EXPANSIONS)}")
    if bound is None:
        bound = ORACLE_BOUND_PROD if target == "prod" else ORACLE_BOUND_PM
    check_bound(max_total, bound, "max total order")
    first_m, second_m = power_moments(target, a, b, max_total)
    return cumulants_from_moments(first_m, second_m, max_total)
