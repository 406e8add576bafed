"""Integer polynomials in the cumulant indeterminates κ_j^x and κ_{j,k}^x, x in {a, b}."""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

VARIABLES = ("a", "b")


def indeterminate(var: str, *args: int) -> tuple:
    """Canonical key (var, args); second-order args are stored sorted."""
    if var not in VARIABLES:
        raise ValueError(f"variable must be 'a' or 'b', got {var!r}")
    if len(args) not in (1, 2) or any(int(j) < 1 for j in args):
        raise ValueError(f"bad cumulant indices {args}")
    return (var, tuple(sorted(int(j) for j in args)))


def _ind_key(ind: tuple):
    var, args = ind
    return (var, len(args), args)


def make_monomial(factors: Iterable[tuple]) -> tuple:
    """Canonical monomial from a multiset of indeterminates: sorted ((ind, exponent), ...)."""
    c = Counter(factors)
    return tuple(sorted(c.items(), key=lambda kv: _ind_key(kv[0])))


def monomial_from_blocks(first_a=(), first_b=(), second=None) -> tuple:
    """Monomial ∏κ^a_{|V|} ∏κ^b_{|W|} (times κ^x_{j,k} if ``second`` = (x, j, k)); sizes given as ints."""
    factors = [("a", (s,)) for s in first_a] + [("b", (s,)) for s in first_b]
    if second is not None:
        x, j, k = second
        factors.append((x, (j, k) if j <= k else (k, j)))
    return make_monomial(factors)


def _mono_key(mono: tuple):
    return tuple(_ind_key(ind) for ind, e in mono for _ in range(e))


class CumulantPolynomial:
    """Immutable; terms map canonical monomials to non-zero ints."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        self._terms = {k: int(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def constant(cls, c: int) -> "CumulantPolynomial":
        return cls({(): c})

    @classmethod
    def kappa(cls, var: str, *args: int) -> "CumulantPolynomial":
        return cls({((indeterminate(var, *args), 1),): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial) -> int:
        """Coefficient of a canonical monomial, or of a product given as a list of indeterminates."""
        mono = tuple(monomial)
        if mono and isinstance(mono[0][0], str):
            mono = make_monomial(mono)
        return self._terms.get(mono, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CumulantPolynomial.constant(other)
        return isinstance(other, CumulantPolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "CumulantPolynomial") -> "CumulantPolynomial":
        out = Counter(self._terms)
        out.update(other._terms)
        return CumulantPolynomial(out)

    def __neg__(self):
        return CumulantPolynomial({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "CumulantPolynomial":
        return CumulantPolynomial({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: Counter = Counter()
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out[make_monomial([i for i, e in m1 for _ in range(e)] + [i for i, e in m2 for _ in range(e)])] += c1 * c2
        return CumulantPolynomial(out)

    __rmul__ = __mul__

    def without(self, predicate) -> "CumulantPolynomial":
        """Drop every term containing an indeterminate for which ``predicate`` holds (i.e. set it to 0)."""
        return CumulantPolynomial({m: c for m, c in self._terms.items() if not any(predicate(i) for i, _ in m)})

    def indeterminates(self) -> set:
        return {i for m in self._terms for i, _ in m}

    def swap_variables(self) -> "CumulantPolynomial":
        sw = {"a": "b", "b": "a"}
        return CumulantPolynomial({make_monomial([(sw[v], a) for (v, a), e in m for _ in range(e)]): c
                                   for m, c in self._terms.items()})

    def evaluate(self, a: "CumulantSpec", b: "CumulantSpec") -> Fraction:
        specs = {"a": a, "b": b}
        total = Fraction(0)
        for mono, c in self._terms.items():
            val = Fraction(c)
            for (var, args), e in mono:
                val *= specs[var].value(*args) ** e
                if not val:
                    break
            total += val
        return total

    # rendering

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (mono, c) in enumerate(self.sorted_terms()):
            body = "".join(_latex_factor(ind, e) for ind, e in mono)
            mag = abs(c)
            txt = body if (mag == 1 and body) else f"{mag}{body}"
            if k == 0:
                parts.append(("-" if c < 0 else "") + txt)
            else:
                parts.append((" - " if c < 0 else " + ") + txt)
        return "".join(parts)

    def to_dict(self) -> dict:
        return {"terms": [{"coeff": str(c),
                           "factors": [{"var": v, "args": list(a)} for (v, a), e in mono for _ in range(e)]}
                          for mono, c in self.sorted_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "CumulantPolynomial":
        out: Counter = Counter()
        for t in d["terms"]:
            out[make_monomial(indeterminate(f["var"], *f["args"]) for f in t["factors"])] += int(t["coeff"])
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> "CumulantPolynomial":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"CumulantPolynomial({self.to_latex()})"

    def __str__(self):
        return self.to_latex()


def _latex_factor(ind: tuple, e: int) -> str:
    var, args = ind
    sub = ",".join(map(str, args))
    if len(args) > 1 or args[0] >= 10:
        sub = "{" + sub + "}"
    base = f"\\kappa_{sub}^{var}"
    if e == 1:
        return base
    return f"({base})^{{{e}}}" if e >= 10 else f"({base})^{e}"


class CumulantSpec:
    """First- and second-order cumulant values of one variable; unspecified entries are 0."""

    __slots__ = ("first", "second")

    def __init__(self, first: Mapping | None = None, second: Mapping | None = None):
        self.first = {int(j): Fraction(v) for j, v in (first or {}).items() if Fraction(v) != 0}
        sec = {}
        for key, v in (second or {}).items():
            j, k = sorted(int(x) for x in key)
            if Fraction(v) != 0:
                if (j, k) in sec and sec[(j, k)] != Fraction(v):
                    raise ValueError(f"conflicting values for ({j},{k}) and ({k},{j})")
                sec[(j, k)] = Fraction(v)
        self.second = sec

    @classmethod
    def semicircle(cls, k2=1, k22=1) -> "CumulantSpec":
        return cls({2: k2}, {(2, 2): k22})

    def value(self, *args: int) -> Fraction:
        if len(args) == 1:
            return self.first.get(args[0], Fraction(0))
        j, k = sorted(args)
        return self.second.get((j, k), Fraction(0))

    def support(self):
        """(first-order sizes, second-order pairs) with non-zero value."""
        return frozenset(self.first), frozenset(self.second)

    def to_dict(self) -> dict:
        return {"first": {str(j): str(v) for j, v in sorted(self.first.items())},
                "second": {f"{j},{k}": str(v) for (j, k), v in sorted(self.second.items())}}

    @classmethod
    def from_dict(cls, d) -> "CumulantSpec":
        if not isinstance(d, dict) or set(d) - {"first", "second"}:
            raise ValueError("cumulant spec must be an object with keys 'first' and/or 'second'")
        first = {}
        for j, v in (d.get("first") or {}).items():
            if int(j) < 1:
                raise ValueError(f"bad order {j}")
            first[int(j)] = _rational(v)
        second = {}
        for key, v in (d.get("second") or {}).items():
            parts = [int(x) for x in str(key).split(",")]
            if len(parts) != 2 or min(parts) < 1:
                raise ValueError(f"bad second-order key {key!r}")
            second[tuple(parts)] = _rational(v)
        return cls(first, second)

    @classmethod
    def from_json(cls, text: str) -> "CumulantSpec":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"CumulantSpec({self.to_dict()})"


def _rational(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise ValueError(f"value must be a rational string or an integer, got {v!r}")
    return Fraction(v)
