"""Exact arithmetic substrate: sparse polynomials in (y, p, q) over the
integers, and power series in x truncated at a fixed order with such
polynomials as coefficients.

Coefficients are plain Python ints, so nothing overflows.  Polynomials are
kept canonical (no stored zero coefficients); the emission order is graded
lexicographic in the exponent triple (y, p, q).  Series arithmetic is exact
modulo x^(order+1); mixing two series uses the smaller order.
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple, Union

__all__ = ["TriPoly", "XSeries", "rational_series", "Y", "P", "Q", "ONE", "ZERO"]

Expo = Tuple[int, int, int]  # exponents of (y, p, q)
_VARNAMES = ("y", "p", "q")


class TriPoly:
    """Sparse polynomial in y, p, q with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Expo, int] = None):
        cleaned: Dict[Expo, int] = {}
        if terms:
            for expo, coef in terms.items():
                if coef:
                    cleaned[expo] = coef
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("TriPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "TriPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, coef: int, ey: int = 0, ep: int = 0, eq: int = 0) -> "TriPoly":
        if min(ey, ep, eq) < 0:
            raise ValueError("exponents must be >= 0")
        return cls({(ey, ep, eq): coef})

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "TriPoly":
        if isinstance(other, TriPoly):
            return other
        if isinstance(other, int):
            return TriPoly.const(other)
        raise TypeError(f"cannot mix TriPoly with {type(other).__name__}")

    def __add__(self, other) -> "TriPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for expo, coef in other.terms.items():
            new = out.get(expo, 0) + coef
            if new:
                out[expo] = new
            elif expo in out:
                del out[expo]
        result = TriPoly.__new__(TriPoly)
        object.__setattr__(result, "terms", out)
        return result

    __radd__ = __add__

    def __neg__(self) -> "TriPoly":
        result = TriPoly.__new__(TriPoly)
        object.__setattr__(result, "terms", {e: -c for e, c in self.terms.items()})
        return result

    def __sub__(self, other) -> "TriPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TriPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "TriPoly":
        other = self._coerce(other)
        out: Dict[Expo, int] = {}
        for (y1, p1, q1), c1 in self.terms.items():
            for (y2, p2, q2), c2 in other.terms.items():
                expo = (y1 + y2, p1 + p2, q1 + q2)
                new = out.get(expo, 0) + c1 * c2
                if new:
                    out[expo] = new
                elif expo in out:
                    del out[expo]
        result = TriPoly.__new__(TriPoly)
        object.__setattr__(result, "terms", out)
        return result

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TriPoly":
        if k < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TriPoly.const(other)
        if isinstance(other, TriPoly):
            return self.terms == other.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- queries and maps --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, ey: int = 0, ep: int = 0, eq: int = 0) -> int:
        return self.terms.get((ey, ep, eq), 0)

    def constant_value(self) -> int:
        """The value of a constant polynomial; raises if non-constant."""
        for expo in self.terms:
            if expo != (0, 0, 0):
                raise ValueError("polynomial is not constant")
        return self.terms.get((0, 0, 0), 0)

    def degree_y(self) -> int:
        """Largest y-exponent (zero polynomial -> -1)."""
        return max((e[0] for e in self.terms), default=-1)

    def eval_int(self, y: int = 1, p: int = 1, q: int = 1) -> int:
        total = 0
        for (ey, ep, eq), coef in self.terms.items():
            total += coef * y**ey * p**ep * q**eq
        return total

    def subs(self, y: int = None, p: int = None, q: int = None) -> "TriPoly":
        """Substitute integers for any subset of the variables."""
        out: Dict[Expo, int] = {}
        for (ey, ep, eq), coef in self.terms.items():
            if y is not None:
                coef *= y**ey
                ey = 0
            if p is not None:
                coef *= p**ep
                ep = 0
            if q is not None:
                coef *= q**eq
                eq = 0
            expo = (ey, ep, eq)
            new = out.get(expo, 0) + coef
            if new:
                out[expo] = new
            elif expo in out:
                del out[expo]
        result = TriPoly.__new__(TriPoly)
        object.__setattr__(result, "terms", out)
        return result

    def deriv_y(self) -> "TriPoly":
        """Formal derivative with respect to y."""
        out: Dict[Expo, int] = {}
        for (ey, ep, eq), coef in self.terms.items():
            if ey:
                out[(ey - 1, ep, eq)] = coef * ey
        result = TriPoly.__new__(TriPoly)
        object.__setattr__(result, "terms", out)
        return result

    # -- canonical emission -------------------------------------------------

    def sorted_terms(self) -> Iterable[Tuple[Expo, int]]:
        """Terms in graded lexicographic order of (y, p, q) exponents."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for expo, coef in self.sorted_terms():
            mono = "".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(_VARNAMES, expo)
                if e
            )
            mag = abs(coef)
            if mono:
                body = mono if mag == 1 else f"{mag}{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if coef > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"TriPoly({str(self)})"

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"y": e[0], "p": e[1], "q": e[2], "coef": str(c)}
                for e, c in self.sorted_terms()
            ]
        }


ZERO = TriPoly()
ONE = TriPoly.const(1)
Y = TriPoly.monomial(1, ey=1)
P = TriPoly.monomial(1, ep=1)
Q = TriPoly.monomial(1, eq=1)

PolyLike = Union[TriPoly, int]


class XSeries:
    """Power series in x, truncated at a fixed order, with TriPoly
    coefficients.  coefficient(n) is exact for 0 <= n <= order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[PolyLike], order: int = None):
        polys = [TriPoly._coerce(c) for c in coeffs]
        if order is None:
            order = len(polys) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(polys) < order + 1:
            polys.extend([ZERO] * (order + 1 - len(polys)))
        else:
            polys = polys[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", polys)

    def __setattr__(self, name, value):
        raise AttributeError("XSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "XSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "XSeries":
        return cls([ONE], order)

    @classmethod
    def x(cls, order: int) -> "XSeries":
        return cls([ZERO, ONE], order)

    @classmethod
    def from_x_poly(cls, powers: Dict[int, PolyLike], order: int) -> "XSeries":
        """Series of a polynomial in x: {x-power: coefficient}."""
        coeffs = [ZERO] * (order + 1)
        for power, coef in powers.items():
            if power < 0:
                raise ValueError("x-powers must be >= 0")
            if power <= order:
                coeffs[power] = coeffs[power] + TriPoly._coerce(coef)
        return cls(coeffs, order)

    # -- arithmetic ---------------------------------------------------------

    def coefficient(self, n: int) -> TriPoly:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __add__(self, other: "XSeries") -> "XSeries":
        order = min(self.order, other.order)
        return XSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    def __sub__(self, other: "XSeries") -> "XSeries":
        return self + (-other)

    def __neg__(self) -> "XSeries":
        return XSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other) -> "XSeries":
        if isinstance(other, (TriPoly, int)):
            scalar = TriPoly._coerce(other)
            return XSeries([c * scalar for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = [ZERO] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return XSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "XSeries":
        if k < 0:
            raise ValueError("negative power")
        result = XSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, XSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        shown = ", ".join(f"x^{i}: {c}" for i, c in enumerate(self.coeffs[:5]))
        return f"XSeries(order={self.order}; {shown}, ...)"

    def invert(self) -> "XSeries":
        """Multiplicative inverse mod x^(order+1).

        The constant coefficient must be +1 or -1; the inverse then has
        integer polynomial coefficients, by the usual coefficient
        recurrence b_n = -a_0 * sum_{k=1..n} a_k b_{n-k}.
        """
        head = self.coeffs[0]
        try:
            unit = head.constant_value()
        except ValueError:
            unit = 0
        if unit not in (1, -1):
            raise ValueError("series inverse needs constant term +1 or -1")
        n_max = self.order
        out = [ZERO] * (n_max + 1)
        out[0] = TriPoly.const(unit)
        for n in range(1, n_max + 1):
            acc = ZERO
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if not a.is_zero() and not out[n - k].is_zero():
                    acc = acc + a * out[n - k]
            out[n] = acc * (-unit)
        return XSeries(out, n_max)

    def truncate(self, order: int) -> "XSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return XSeries(self.coeffs[: order + 1], order)

    def scale_x_by_q(self) -> "XSeries":
        """Substitute x -> q*x: the x^n coefficient is multiplied by q^n."""
        return XSeries(
            [c * TriPoly.monomial(1, eq=i) for i, c in enumerate(self.coeffs)],
            self.order,
        )

    def deriv_y(self) -> "XSeries":
        """Formal y-derivative, applied coefficientwise."""
        return XSeries([c.deriv_y() for c in self.coeffs], self.order)

    def subs(self, y: int = None, p: int = None, q: int = None) -> "XSeries":
        """Integer substitution applied to every coefficient."""
        return XSeries([c.subs(y=y, p=p, q=q) for c in self.coeffs], self.order)


def rational_series(numerator: XSeries, denominator: XSeries) -> XSeries:
    """numerator / denominator as a truncated series; the denominator's
    constant term must be +1 or -1."""
    return numerator * denominator.invert()
