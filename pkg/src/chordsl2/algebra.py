"""Exact univariate polynomials and truncated even power series.

Rationals are plain :class:`fractions.Fraction` values. Polynomials are dense
tuples in ascending degree with trailing zeros stripped, so the zero
polynomial has no coefficients at all.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [_frac(a) for a in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Poly:
    """Immutable dense polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of ``var**i``. Only the variable name is
    used for rendering; arithmetic between polynomials in different variables
    is refused so a Bernoulli polynomial in x never leaks into W-values in c.
    """

    __slots__ = ("coeffs", "var", "_hash")

    def __init__(self, coeffs: Iterable = (), var: str = "c"):
        object.__setattr__(self, "coeffs", _strip(coeffs))
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors
    @classmethod
    def const(cls, a, var: str = "c") -> Poly:
        return cls((a,), var)

    @classmethod
    def monomial(cls, k: int, a=1, var: str = "c") -> Poly:
        return cls([0] * k + [a], var)

    @classmethod
    def gen(cls, var: str = "c") -> Poly:
        return cls((0, 1), var)

    # basic queries
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.var, self.coeffs)))
        return self._hash

    def __repr__(self):
        return f"Poly({self}, var={self.var!r})"

    # arithmetic
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-a for a in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([a * other for a in self.coeffs], self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, Poly):
            raise TypeError("polynomial division is not supported; use divmod_by_var")
        scalar = _frac(scalar)
        return Poly([a / scalar for a in self.coeffs], self.var)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or another Poly."""
        acc = Poly((), x.var) if isinstance(x, Poly) else Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def divmod_by_var(self) -> tuple[Poly, Fraction]:
        """Return ``(q, r)`` with ``self = var*q + r``."""
        return Poly(self.coeffs[1:], self.var), self[0]

    def substitute_affine(self, a, b) -> Poly:
        """Return p(a*var + b) by exact binomial expansion."""
        a, b = _frac(a), _frac(b)
        out = [Fraction(0)] * max(len(self.coeffs), 1)
        for k, ck in enumerate(self.coeffs):
            if ck == 0:
                continue
            for j in range(k + 1):
                out[j] += ck * comb(k, j) * a**j * b ** (k - j)
        return Poly(out, self.var)

    def with_var(self, var: str) -> Poly:
        return Poly(self.coeffs, var)

    # rendering
    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            num, den = abs(a.numerator), a.denominator
            if k == 0:
                body = str(num)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                body = mono if num == 1 else f"{num}{mono}"
            if den != 1:
                body = f"{body}/{den}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {"coeffs": [[str(a.numerator), str(a.denominator)] for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict, var: str = "c") -> Poly:
        return cls([Fraction(int(n), int(d)) for n, d in obj["coeffs"]], var)


def CasimirPoly(coeffs: Iterable = ()) -> Poly:
    """Polynomial in the Casimir variable c."""
    return Poly(coeffs, "c")


C = Poly.gen("c")
X = Poly.gen("x")


def lagrange_interpolate(points: Sequence[tuple]) -> Poly:
    """Unique polynomial of degree < len(points) through ``points``, exactly.

    Raises ValueError on repeated x-values.
    """
    xs = [_frac(x) for x, _ in points]
    ys = [_frac(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be pairwise distinct")
    result = Poly((), "c")
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Poly.const(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly((-xj, 1))
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def rebase_even_to_casimir(p: Poly) -> Poly:
    """Return r in c with r((x^2-1)/2) = p(x), for p even in x.

    Substitutes x^2 = 2c + 1 term by term. Raises ValueError if p has an
    odd-degree term.
    """
    if any(a != 0 for a in p.coeffs[1::2]):
        raise ValueError(f"polynomial has odd-degree terms: {p}")
    x_squared = Poly((1, 2), "c")
    result = Poly((), "c")
    for k, a in enumerate(p.coeffs[::2]):
        if a != 0:
            result = result + x_squared**k * a
    return result


class EvenSeries:
    """Truncated series sum_{n<=order} terms[n] * h^(2n) with Poly coefficients.

    Arithmetic keeps the smaller of the two orders and never extends it.
    """

    __slots__ = ("order", "terms")

    def __init__(self, terms: Sequence[Poly], order: int | None = None):
        terms = tuple(terms)
        if order is None:
            order = len(terms) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(terms) > order + 1:
            terms = terms[: order + 1]
        var = terms[0].var if terms else "c"
        terms = terms + (Poly((), var),) * (order + 1 - len(terms))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("EvenSeries is immutable")

    def __getitem__(self, n: int) -> Poly:
        return self.terms[n]

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if not isinstance(other, EvenSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return self.terms[: m + 1] == other.terms[: m + 1]

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other: EvenSeries) -> EvenSeries:
        m = min(self.order, other.order)
        return EvenSeries([self[i] + other[i] for i in range(m + 1)], m)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return EvenSeries([t * other for t in self.terms], self.order)
        m = min(self.order, other.order)
        out = []
        for n in range(m + 1):
            acc = Poly((), self[0].var)
            for i in range(n + 1):
                acc = acc + self[i] * other[n - i]
            out.append(acc)
        return EvenSeries(out, m)

    __rmul__ = __mul__

    def __repr__(self):
        body = " + ".join(f"({t})h^{2 * i}" for i, t in enumerate(self.terms))
        return f"EvenSeries[{self.order}]({body})"
