"""Exact sparse polynomial arithmetic in the variables s and t.

A BivariatePolynomial maps exponent pairs (a, b) -- the powers of s and t --
to nonzero Python integers, so every operation is exact at any coefficient
size.  The canonical term order, descending in a and then in b, is also the
lexicographic order with s > t under which exact division cancels leading
terms; all divisors produced by factorial quotients are monic in that order,
so division never leaves the integers.

UnivariatePolynomial is the much smaller dense companion type used as the
target of substitutions such as s -> q + 1, t -> -q; coefficients are
indexed by the power of q.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping

from .errors import IndivisibleError

# (s-exponent, t-exponent) -> coefficient
TermMap = Mapping[tuple[int, int], int]


class BivariatePolynomial:
    """Immutable polynomial in s and t over arbitrary-precision integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: TermMap | Iterable[tuple[tuple[int, int], int]] = ()):
        data: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term ({a}, {b})")
            if not c:
                continue
            total = data.get((a, b), 0) + c
            if total:
                data[(a, b)] = total
            else:
                del data[(a, b)]
        self._terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> BivariatePolynomial:
        return cls()

    @classmethod
    def one(cls) -> BivariatePolynomial:
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> BivariatePolynomial:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> BivariatePolynomial:
        return cls({(a, b): c})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> list[tuple[int, int, int]]:
        """All terms as (a, b, coefficient), in canonical order."""
        return [(a, b, c) for (a, b), c in sorted(self._terms.items(), reverse=True)]

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def leading(self) -> tuple[int, int, int]:
        """Leading term under the lexicographic order with s > t."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        a, b = max(self._terms)
        return a, b, self._terms[(a, b)]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivariatePolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == BivariatePolynomial.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: BivariatePolynomial | int) -> BivariatePolynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            total = out.get(key, 0) + c
            if total:
                out[key] = total
            else:
                del out[key]
        result = BivariatePolynomial.__new__(BivariatePolynomial)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> BivariatePolynomial:
        result = BivariatePolynomial.__new__(BivariatePolynomial)
        result._terms = {key: -c for key, c in self._terms.items()}
        return result

    def __sub__(self, other: BivariatePolynomial | int) -> BivariatePolynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: BivariatePolynomial | int) -> BivariatePolynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: BivariatePolynomial | int) -> BivariatePolynomial:
        if isinstance(other, int):
            if not other:
                return BivariatePolynomial.zero()
            result = BivariatePolynomial.__new__(BivariatePolynomial)
            result._terms = {key: c * other for key, c in self._terms.items()}
            return result
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                total = out.get(key, 0) + c1 * c2
                if total:
                    out[key] = total
                else:
                    del out[key]
        result = BivariatePolynomial.__new__(BivariatePolynomial)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BivariatePolynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        base = self
        acc = BivariatePolynomial.one()
        while exponent:
            if exponent & 1:
                acc = acc * base
            base = base * base
            exponent >>= 1
        return acc

    def exact_div(self, divisor: BivariatePolynomial) -> BivariatePolynomial:
        """Exact quotient self / divisor; raises IndivisibleError if inexact.

        Repeatedly cancels the leading term of the running remainder against
        the leading term of the divisor (lexicographic order, s > t).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        da, db, dc = divisor.leading()
        dterms = list(divisor._terms.items())
        rem = dict(self._terms)
        quot: dict[tuple[int, int], int] = {}
        while rem:
            ra, rb = max(rem)
            rc = rem[(ra, rb)]
            ea, eb = ra - da, rb - db
            if ea < 0 or eb < 0 or rc % dc:
                raise IndivisibleError(
                    f"{self.canonical_text()!r} is not exactly divisible by "
                    f"{divisor.canonical_text()!r}"
                )
            qc = rc // dc
            quot[(ea, eb)] = qc
            for (xa, xb), xc in dterms:
                key = (xa + ea, xb + eb)
                total = rem.get(key, 0) - qc * xc
                if total:
                    rem[key] = total
                else:
                    rem.pop(key, None)
        result = BivariatePolynomial.__new__(BivariatePolynomial)
        result._terms = quot
        return result

    # -- evaluation and substitution ----------------------------------------

    def eval_int(self, s0: int, t0: int) -> int:
        """Exact integer value at s = s0, t = t0."""
        total = 0
        spow: dict[int, int] = {0: 1}
        tpow: dict[int, int] = {0: 1}
        for (a, b), c in self._terms.items():
            total += c * _int_power(s0, a, spow) * _int_power(t0, b, tpow)
        return total

    def subst_univar(
        self, s_sub: UnivariatePolynomial, t_sub: UnivariatePolynomial
    ) -> UnivariatePolynomial:
        """Expand self(s_sub(q), t_sub(q)) exactly."""
        total = UnivariatePolynomial.zero()
        spow = {0: UnivariatePolynomial.one()}
        tpow = {0: UnivariatePolynomial.one()}
        for a, b, c in self.terms():
            term = _univar_power(s_sub, a, spow) * _univar_power(t_sub, b, tpow)
            total = total + term * c
        return total

    # -- text and JSON forms -------------------------------------------------

    def canonical_text(self) -> str:
        """Deterministic rendering, e.g. "s^3 + 2*s*t"; zero renders as "0"."""
        if not self._terms:
            return "0"
        rendered = []
        for a, b, c in self.terms():
            mag = abs(c)
            factors = []
            if a:
                factors.append("s" if a == 1 else f"s^{a}")
            if b:
                factors.append("t" if b == 1 else f"t^{b}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            rendered.append(("-" if c < 0 else "+", body))
        sign, body = rendered[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in rendered[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.canonical_text()

    def __repr__(self) -> str:
        return f"BivariatePolynomial.parse({self.canonical_text()!r})"

    @classmethod
    def parse(cls, text: str) -> BivariatePolynomial:
        """Inverse of canonical_text; accepts the same grammar."""
        src = text.strip()
        if not src:
            raise ValueError("empty polynomial text")
        negate_first = src.startswith("-")
        if negate_first:
            src = src[1:].lstrip()
        chunks = re.split(r"\s+([+-])\s+", src)
        terms: list[tuple[tuple[int, int], int]] = []
        sign = -1 if negate_first else 1
        for i in range(0, len(chunks), 2):
            (a, b), c = _parse_term(chunks[i])
            terms.append(((a, b), sign * c))
            if i + 1 < len(chunks):
                sign = -1 if chunks[i + 1] == "-" else 1
        return cls(terms)

    def to_json_dict(self) -> dict:
        """The documented JSON form: terms as [a, b, coefficient-string]."""
        return {"terms": [[a, b, str(c)] for a, b, c in self.terms()]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> BivariatePolynomial:
        return cls({(int(a), int(b)): int(c) for a, b, c in doc["terms"]})


_TERM_FACTOR = re.compile(r"^(\d+|s(\^\d+)?|t(\^\d+)?)$")


def _parse_term(chunk: str) -> tuple[tuple[int, int], int]:
    coeff = 1
    a = b = 0
    seen: set[str] = set()
    for factor in chunk.split("*"):
        factor = factor.strip()
        if not _TERM_FACTOR.match(factor):
            raise ValueError(f"malformed term {chunk!r}")
        kind = "c" if factor[0].isdigit() else factor[0]
        if kind in seen:
            raise ValueError(f"repeated factor in term {chunk!r}")
        seen.add(kind)
        if kind == "c":
            coeff = int(factor)
        else:
            power = int(factor[2:]) if "^" in factor else 1
            if kind == "s":
                a = power
            else:
                b = power
    return (a, b), coeff


def _as_poly(value: object):
    if isinstance(value, BivariatePolynomial):
        return value
    if isinstance(value, int):
        return BivariatePolynomial.const(value)
    return NotImplemented


def _int_power(base: int, exponent: int, cache: dict[int, int]) -> int:
    if exponent not in cache:
        cache[exponent] = base ** exponent
    return cache[exponent]


def _univar_power(base, exponent, cache):
    while exponent not in cache:
        top = max(cache)
        cache[top + 1] = cache[top] * base
    return cache[exponent]


class UnivariatePolynomial:
    """Immutable dense polynomial in one variable (q by convention)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> UnivariatePolynomial:
        return cls()

    @classmethod
    def one(cls) -> UnivariatePolynomial:
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> UnivariatePolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: int = 1) -> UnivariatePolynomial:
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (c,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficients indexed by exponent; empty for the zero polynomial."""
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UnivariatePolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == UnivariatePolynomial.const(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: UnivariatePolynomial | int) -> UnivariatePolynomial:
        other = _as_univar(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return UnivariatePolynomial(
            (self.coeff_at(i) + other.coeff_at(i)) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> UnivariatePolynomial:
        return UnivariatePolynomial(-c for c in self._coeffs)

    def __sub__(self, other: UnivariatePolynomial | int) -> UnivariatePolynomial:
        other = _as_univar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: UnivariatePolynomial | int) -> UnivariatePolynomial:
        other = _as_univar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: UnivariatePolynomial | int) -> UnivariatePolynomial:
        if isinstance(other, int):
            return UnivariatePolynomial(c * other for c in self._coeffs)
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial.zero()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, ci in enumerate(self._coeffs):
            if not ci:
                continue
            for j, cj in enumerate(other._coeffs):
                out[i + j] += ci * cj
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UnivariatePolynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        base = self
        acc = UnivariatePolynomial.one()
        while exponent:
            if exponent & 1:
                acc = acc * base
            base = base * base
            exponent >>= 1
        return acc

    def coeff_at(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def eval_at(self, x: int) -> int:
        total = 0
        for c in reversed(self._coeffs):
            total = total * x + c
        return total

    def exact_div(self, divisor: UnivariatePolynomial) -> UnivariatePolynomial:
        """Exact quotient self / divisor; raises IndivisibleError if inexact."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return UnivariatePolynomial.zero()
        rem = list(self._coeffs)
        dd = divisor.degree
        dc = divisor._coeffs[-1]
        if len(rem) - 1 < dd:
            raise IndivisibleError(f"{self} is not exactly divisible by {divisor}")
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            if c % dc:
                raise IndivisibleError(f"{self} is not exactly divisible by {divisor}")
            k = c // dc
            quot[i - dd] = k
            for j, dj in enumerate(divisor._coeffs):
                rem[i - dd + j] -= k * dj
        if any(rem):
            raise IndivisibleError(f"{self} is not exactly divisible by {divisor}")
        return UnivariatePolynomial(quot)

    def canonical_text(self, var: str = "q") -> str:
        """Deterministic rendering, highest power first, e.g. "q^2 + q + 1"."""
        if not self._coeffs:
            return "0"
        rendered = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[power]
            if not c:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                vartxt = var if power == 1 else f"{var}^{power}"
                body = vartxt if mag == 1 else f"{mag}*{vartxt}"
            rendered.append(("-" if c < 0 else "+", body))
        sign, body = rendered[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in rendered[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.canonical_text()

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({self._coeffs!r})"

    def to_json_dict(self) -> dict:
        return {"coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> UnivariatePolynomial:
        return cls(int(c) for c in doc["coeffs"])


def _as_univar(value: object):
    if isinstance(value, UnivariatePolynomial):
        return value
    if isinstance(value, int):
        return UnivariatePolynomial.const(value)
    return NotImplemented


ZERO = BivariatePolynomial.zero()
ONE = BivariatePolynomial.one()
TWO = BivariatePolynomial.const(2)
S = BivariatePolynomial.monomial(1, 0)
T = BivariatePolynomial.monomial(0, 1)
