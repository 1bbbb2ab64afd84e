"""Exact single-variable Laurent polynomials with integer coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NonIntegralExponent, ZeroPolynomial

_TERM = re.compile(r"^([+-]?)(\d*)(?:\*?([A-Za-z])(?:\^\(?([+-]?\d+)\)?)?)?$")


class LaurentPolynomial:
    """Sparse map ``exponent -> coefficient``; zero coefficients are never stored.

    Instances are immutable and hashable.  Arithmetic between polynomials in
    different variables is an error.
    """

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "t"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self.var = var

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "t") -> LaurentPolynomial:
        return cls({exp: coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "t") -> LaurentPolynomial:
        return cls({0: c}, var)

    # -- queries -----------------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return next(iter(self._terms))

    def max_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return next(reversed(self._terms))

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __call__(self, x):
        """Evaluate exactly at an integer or Fraction (negative powers give Fractions)."""
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * Fraction(x) ** e
        return total

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: LaurentPolynomial) -> None:
        if other.var != self.var and self._terms and other._terms:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient has no inverse")
            return LaurentPolynomial({e * k: c ** (-k)}, self.var)
        result = LaurentPolynomial.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by ``var**k``."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()}, self.var)

    def exact_div(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        """Quotient of an exact division; raises ValueError when a remainder is left."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        dlo, dlc = divisor.min_degree(), divisor.coeff(divisor.min_degree())
        top = (self.max_degree() - divisor.max_degree()) if rem else 0
        while rem:
            lo = min(rem)
            c = rem[lo]
            qe = lo - dlo
            if c % dlc or qe > top:
                raise ValueError("division is not exact")
            q = c // dlc
            quot[qe] = q
            for e, dc in divisor._terms.items():
                v = rem.get(e + qe, 0) - q * dc
                if v:
                    rem[e + qe] = v
                else:
                    rem.pop(e + qe, None)
        return LaurentPolynomial(quot, self.var)

    # -- variable changes ----------------------------------------------------------

    def substitute_power(self, k: int, var: str | None = None) -> LaurentPolynomial:
        """Replace ``x`` by ``y**k`` (k may be negative)."""
        return LaurentPolynomial({e * k: c for e, c in self._terms.items()}, var or self.var)

    def contract(self, k: int, var: str | None = None) -> LaurentPolynomial:
        """Inverse of :meth:`substitute_power`: every exponent must be divisible by ``k``."""
        out = {}
        for e, c in self._terms.items():
            if e % k:
                raise NonIntegralExponent(f"exponent {e} of {self.var} is not divisible by {k}")
            out[e // k] = c
        return LaurentPolynomial(out, var or self.var)

    def invert_variable(self) -> LaurentPolynomial:
        return self.substitute_power(-1)

    # -- comparison, hashing, text ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.var)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.var == other.var and self._terms == other._terms

    def __hash__(self):
        return hash((self.var, tuple(self._terms.items())))

    def to_terms(self) -> list[dict[str, int]]:
        return [{"coeff": c, "exp": e} for e, c in self._terms.items()]

    @classmethod
    def from_terms(cls, terms: Iterable[Mapping[str, int]], var: str = "t") -> LaurentPolynomial:
        return cls(((t["exp"], t["coeff"]) for t in terms), var)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            body = f"{abs(c)}*{self.var}^{e}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r}, var={self.var!r})"

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> LaurentPolynomial:
        """Read the ``coeff*t^exp`` term-list format produced by ``str``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls({}, var or "t")
        tokens = [t for t in re.split(r"(?<![(^])(?=[+-])", s) if t]
        acc: dict[int, int] = {}
        seen_var = var
        for tok in tokens:
            m = _TERM.match(tok)
            if not m:
                raise ValueError(f"bad term {tok!r} in {text!r}")
            sgn, digits, v, e = m.groups()
            if not digits and v is None:
                raise ValueError(f"bad term {tok!r} in {text!r}")
            c = int(sgn + (digits or "1"))
            if v is not None:
                if seen_var is not None and v != seen_var:
                    raise ValueError(f"mixed variables in {text!r}")
                seen_var = v
            exp = 0 if v is None else int(e) if e is not None else 1
            acc[exp] = acc.get(exp, 0) + c
        return cls(acc, seen_var or "t")
