"""Exact Laurent polynomials in one variable and Gaussian integers.

Everything here is integer arithmetic: coefficients are Python ints, so
state sums with thousands of terms stay exact.  The variable is called A
by convention (the Kauffman bracket variable) but nothing below depends
on that; renderers accept any variable name.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = [
    "LaurentPoly",
    "GaussianInt",
    "DELTA",
    "coefficient_at",
    "factor_and_eval_A2",
    "PolyError",
]


class PolyError(ValueError):
    """Raised for malformed polynomial input or unsupported operations."""


# ============================================================
# Laurent polynomials
# ============================================================

_TermsLike = Union[Mapping[int, int], Iterable[Tuple[int, int]]]


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    Stored as a dict mapping exponent -> nonzero coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: _TermsLike = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, int] = {}
        for exp, coeff in items:
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise PolyError("exponents and coefficients must be integers")
            if coeff:
                c = acc.get(exp, 0) + coeff
                if c:
                    acc[exp] = c
                else:
                    del acc[exp]
        object.__setattr__(self, "_terms", acc)

    # ---- constructors ----

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    # ---- inspection ----

    def terms(self) -> Tuple[Tuple[int, int], ...]:
        """Terms as (exponent, coefficient) pairs, descending exponent."""
        return tuple(sorted(self._terms.items(), reverse=True))

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.terms())

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise PolyError("zero polynomial has no degree")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise PolyError("zero polynomial has no degree")
        return max(self._terms)

    def exponent_parity(self) -> int:
        """Common parity of all exponents (0 or 1); error if mixed or zero."""
        if not self._terms:
            raise PolyError("zero polynomial has no exponent parity")
        parities = {e & 1 for e in self._terms}
        if len(parities) != 1:
            raise PolyError("mixed exponent parity")
        return parities.pop()

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # ---- arithmetic ----

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", acc)
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", {e: -c for e, c in self._terms.items()})
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            object.__setattr__(
                out, "_terms", {e: c * other for e, c in self._terms.items()}
            )
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: Dict[int, int] = {}
        # iterate over the smaller factor for speed
        a, b = (self._terms, other._terms)
        if len(a) > len(b):
            a, b = b, a
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", acc)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            raise PolyError("polynomial powers must be integers")
        if n < 0:
            # Only monomials with unit coefficient are invertible over Z.
            if not self.is_monomial():
                raise PolyError("negative power of a non-monomial")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise PolyError("negative power needs a unit coefficient")
            return LaurentPoly({e * n: c if n % 2 else 1})
        result = LaurentPoly.one()
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", {e + k: c for e, c in self._terms.items()})
        return out

    def inverse_monomial(self) -> "LaurentPoly":
        """Inverse of a +-A^k monomial."""
        if not self.is_monomial():
            raise PolyError("only monomials are invertible")
        ((e, c),) = self._terms.items()
        if c not in (1, -1):
            raise PolyError("only unit-coefficient monomials are invertible")
        return LaurentPoly({-e: c})

    def reciprocal_variable(self) -> "LaurentPoly":
        """Substitute A -> A^-1 (negate every exponent)."""
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", {-e: c for e, c in self._terms.items()})
        return out

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises PolyError on a nonzero remainder."""
        if not other:
            raise PolyError("division by zero polynomial")
        if not self:
            return LaurentPoly()
        rem = dict(self._terms)
        div = other._terms
        dmax = max(div)
        lead = div[dmax]
        # exact quotients cannot reach below this exponent, which bounds
        # the otherwise endless descent of an inexact Laurent division
        min_shift = min(self._terms) - min(div)
        quot: Dict[int, int] = {}
        while rem:
            rmax = max(rem)
            shift = rmax - dmax
            if shift < min_shift:
                raise PolyError("inexact division (nonzero remainder)")
            q, r = divmod(rem[rmax], lead)
            if r:
                raise PolyError("inexact division (leading coefficient)")
            quot[shift] = q
            for e, c in div.items():
                ee = e + shift
                s = rem.get(ee, 0) - q * c
                if s:
                    rem[ee] = s
                else:
                    rem.pop(ee, None)
        return LaurentPoly(quot)

    # ---- comparison / hashing ----

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self.terms())

    # ---- rendering / parsing ----

    def to_string(self, var: str = "A") -> str:
        """Human-readable form, terms sorted by descending exponent."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}" if e == 1 else f"{head}{var}^{e}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_string()})"

    @classmethod
    def parse(cls, text: str, var: str = "A") -> "LaurentPoly":
        """Parse the to_string format; term order does not matter."""
        src = text.strip()
        if src == "0":
            return cls()
        v = re.escape(var)
        term_re = re.compile(
            rf"([+-]?)\s*(?:(\d+)\s*\*?\s*)?(?:{v}(?:\^(-?\d+))?)?"
        )
        pos = 0
        terms = []
        while pos < len(src):
            m = term_re.match(src, pos)
            if not m or m.end() == pos:
                raise PolyError(f"cannot parse polynomial at: {src[pos:]!r}")
            sign, mag, exp = m.groups()
            has_var = var in m.group(0)
            if mag is None and not has_var:
                raise PolyError(f"empty term in {text!r}")
            coeff = int(mag) if mag is not None else 1
            if sign == "-":
                coeff = -coeff
            if has_var:
                e = int(exp) if exp is not None else 1
            else:
                e = 0
            terms.append((e, coeff))
            pos = m.end()
            while pos < len(src) and src[pos].isspace():
                pos += 1
        return cls(terms)


# Kauffman circle weight: removing one circle multiplies the bracket by this.
DELTA = LaurentPoly({2: -1, -2: -1})


def coefficient_at(p: LaurentPoly, exp: int) -> int:
    """Coefficient of the given exponent (0 when absent)."""
    return p.coefficient(exp)


# ============================================================
# Gaussian integers
# ============================================================


@dataclass(frozen=True)
class GaussianInt:
    """Element of Z[i] with exact integer parts."""

    re: int
    im: int = 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def inverse(self) -> "GaussianInt":
        if not self.is_unit():
            raise PolyError("only Gaussian units are invertible")
        return self.conj()

    def __pow__(self, n: int) -> "GaussianInt":
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussianInt(1, 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        op = "+" if self.im >= 0 else "-"
        return f"{self.re}{op}{abs(self.im)}i"


I = GaussianInt(0, 1)
MINUS_I = GaussianInt(0, -1)


def factor_and_eval_A2(p: LaurentPoly, z: GaussianInt) -> Tuple[int, GaussianInt]:
    """Write p = A^parity * q(A^2) and evaluate q at z exactly.

    Requires all exponents of p to share one parity.  Negative exponents
    of A^2 need z to be a Gaussian unit (so that z^-1 lies in Z[i]).
    Returns (parity, q(z)).
    """
    if not p:
        return 0, GaussianInt(0, 0)
    parity = p.exponent_parity()
    value = GaussianInt(0, 0)
    zinv = None
    for exp, coeff in p.terms():
        half = (exp - parity) // 2
        if half >= 0:
            term = z ** half
        else:
            if zinv is None:
                if not z.is_unit():
                    raise PolyError(
                        "negative A^2 exponent: evaluation point must be a Gaussian unit"
                    )
                zinv = z.inverse()
            term = zinv ** (-half)
        value = value + GaussianInt(coeff, 0) * term
    return parity, value
