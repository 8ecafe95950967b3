"""Exact truncated Laurent series in q over Z[y, 1/y, z, 1/z].

A :class:`LaurentSeries` stores, for each q-degree up to its truncation order
``N`` (inclusive), a Laurent polynomial in y and z as a dict
``{(y_exp, z_exp): coeff}``.  Coefficients are Python ints, so arithmetic is
exact.  Products and sums track how far the result is actually known, the
usual convention for truncated power series.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

Poly = dict  # (y_exp, z_exp) -> int


class SeriesError(ArithmeticError):
    pass


class NotInvertibleError(SeriesError):
    pass


class TruncationError(SeriesError):
    """A truncated product would need information beyond the known order."""


class DivergenceError(SeriesError):
    pass


class OrderMismatchError(SeriesError):
    pass


@dataclass(frozen=True)
class Monomial:
    coeff: int = 1
    y: int = 0
    z: int = 0
    q: int = 0

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return Monomial(self.coeff * other.coeff, self.y + other.y,
                            self.z + other.z, self.q + other.q)
        if isinstance(other, int):
            return Monomial(self.coeff * other, self.y, self.z, self.q)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return Monomial(-self.coeff, self.y, self.z, self.q)

    def __pow__(self, k: int):
        if k < 0:
            if abs(self.coeff) != 1:
                raise NotInvertibleError(f"{self} has no inverse over the integers")
            return Monomial(self.coeff ** (-k), k * self.y, k * self.z, k * self.q)
        return Monomial(self.coeff ** k, k * self.y, k * self.z, k * self.q)

    def __str__(self):
        return _poly_str({(self.y, self.z): self.coeff}) + (f"*q^{self.q}" if self.q else "")


def mono(coeff: int = 1, y: int = 0, z: int = 0, q: int = 0) -> Monomial:
    return Monomial(coeff, y, z, q)


ONE = Monomial()
Q = Monomial(q=1)
Y = Monomial(y=1)
Z = Monomial(z=1)


def _add_into(acc: Poly, poly: Poly, scale: int = 1) -> None:
    for k, c in poly.items():
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def _poly_mul(p1: Poly, p2: Poly, acc: Poly) -> None:
    for (a1, b1), c1 in p1.items():
        for (a2, b2), c2 in p2.items():
            k = (a1 + a2, b1 + b2)
            acc[k] = acc.get(k, 0) + c1 * c2


def _poly_shift(poly: Poly, m: Monomial) -> Poly:
    return {(a + m.y, b + m.z): c * m.coeff for (a, b), c in poly.items()}


class LaurentSeries:
    __slots__ = ("order", "_c")

    def __init__(self, terms: dict | None = None, order: int = 0):
        self.order = int(order)
        clean = {}
        for d, poly in (terms or {}).items():
            if d > self.order:
                continue
            p = {k: c for k, c in poly.items() if c}
            if p:
                clean[d] = p
        self._c = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        return cls({}, order)

    @classmethod
    def one(cls, order: int) -> "LaurentSeries":
        return cls({0: {(0, 0): 1}}, order)

    @classmethod
    def from_monomial(cls, m: Monomial, order: int) -> "LaurentSeries":
        return cls({m.q: {(m.y, m.z): m.coeff}}, order)

    @classmethod
    def from_terms(cls, triples: Iterable[tuple[int, int, int, int]], order: int) -> "LaurentSeries":
        """Build from ``(coeff, y, z, q)`` tuples, summing repeats."""
        terms: dict = {}
        for c, a, b, d in triples:
            if d > order:
                continue
            poly = terms.setdefault(d, {})
            poly[(a, b)] = poly.get((a, b), 0) + c
        return cls(terms, order)

    # -- queries ---------------------------------------------------------------

    @property
    def valuation(self) -> int:
        """Smallest q-degree present, or order + 1 for the zero series."""
        return min(self._c) if self._c else self.order + 1

    @property
    def d_min(self) -> int:
        return self.valuation

    def degrees(self) -> list[int]:
        return sorted(self._c)

    def poly(self, d: int) -> Poly:
        return dict(self._c.get(d, {}))

    def items(self):
        """Yield ``(q, y, z, coeff)`` in canonical order."""
        for d in sorted(self._c):
            for (a, b) in sorted(self._c[d]):
                yield d, a, b, self._c[d][(a, b)]

    def coefficient(self, q_deg: int, y_exp: int = 0, z_exp: int = 0) -> int:
        if q_deg > self.order:
            raise TruncationError(f"q^{q_deg} is beyond the truncation order {self.order}")
        return self._c.get(q_deg, {}).get((y_exp, z_exp), 0)

    def is_zero(self) -> bool:
        return not self._c

    # -- arithmetic ------------------------------------------------------------

    def truncate(self, order: int) -> "LaurentSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return LaurentSeries(self._c, order)

    def __neg__(self):
        return LaurentSeries({d: {k: -c for k, c in p.items()} for d, p in self._c.items()}, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        out = {d: dict(p) for d, p in self._c.items() if d <= order}
        for d, p in other._c.items():
            if d <= order:
                _add_into(out.setdefault(d, {}), p)
        return LaurentSeries(out, order)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentSeries.zero(self.order)
            return LaurentSeries({d: {k: c * other for k, c in p.items()} for d, p in self._c.items()},
                                 self.order)
        if isinstance(other, Monomial):
            return self.shift(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order + other.valuation, other.order + self.valuation)
        out: dict = {}
        for d1, p1 in self._c.items():
            for d2, p2 in other._c.items():
                d = d1 + d2
                if d <= order:
                    _poly_mul(p1, p2, out.setdefault(d, {}))
        return LaurentSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use geom_inverse for negative powers")
        result = LaurentSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, m: Monomial) -> "LaurentSeries":
        """Multiply by a monomial; the known order moves with the q-exponent."""
        if m.coeff == 0:
            return LaurentSeries.zero(self.order + m.q)
        return LaurentSeries({d + m.q: _poly_shift(p, m) for d, p in self._c.items()}, self.order + m.q)

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, int):
            return LaurentSeries({0: {(0, 0): other}}, self.order)
        if isinstance(other, Monomial):
            return LaurentSeries.from_monomial(other, self.order)
        return NotImplemented

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.order != other.order:
            raise OrderMismatchError(f"cannot compare orders {self.order} and {other.order}")
        return self._c == other._c

    __hash__ = None

    def first_difference(self, other: "LaurentSeries"):
        """First ``(q, y, z, self_coeff, other_coeff)`` where the two differ, else None."""
        if self.order != other.order:
            raise OrderMismatchError(f"cannot compare orders {self.order} and {other.order}")
        for d in sorted(set(self._c) | set(other._c)):
            p1, p2 = self._c.get(d, {}), other._c.get(d, {})
            for k in sorted(set(p1) | set(p2)):
                if p1.get(k, 0) != p2.get(k, 0):
                    return d, k[0], k[1], p1.get(k, 0), p2.get(k, 0)
        return None

    # -- substitutions -----------------------------------------------------------

    def specialize(self, y: Monomial | None = None, z: Monomial | None = None) -> "LaurentSeries":
        """Substitute q-free monomials for y and/or z, e.g. ``y=ONE`` or ``z=Z**-1``."""
        for m in (y, z):
            if m is not None and m.q != 0:
                raise TruncationError("only q-free substitutions preserve the truncation order")
        out: dict = {}
        for d, p in self._c.items():
            acc = out.setdefault(d, {})
            for (a, b), c in p.items():
                term = Monomial(c)
                term = term * (y ** a if y is not None else Monomial(y=a))
                term = term * (z ** b if z is not None else Monomial(z=b))
                k = (term.y, term.z)
                acc[k] = acc.get(k, 0) + term.coeff
        return LaurentSeries(out, self.order)

    # -- output ------------------------------------------------------------------

    def to_json(self) -> list:
        return [
            {"q": d, "terms": [{"y": a, "z": b, "c": self._c[d][(a, b)]} for (a, b) in sorted(self._c[d])]}
            for d in sorted(self._c)
        ]

    @classmethod
    def from_json(cls, data: list, order: int) -> "LaurentSeries":
        return cls.from_terms(((t["c"], t["y"], t["z"], row["q"]) for row in data for t in row["terms"]), order)

    def __str__(self):
        parts = []
        for d in sorted(self._c):
            poly = _poly_str(self._c[d])
            qpart = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not qpart:
                parts.append(poly)
            elif poly == "1":
                parts.append(qpart)
            elif poly == "-1":
                parts.append("-" + qpart)
            else:
                parts.append(f"({poly})*{qpart}")
        parts.append(f"O(q^{self.order + 1})")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentSeries({self})"


def _poly_str(poly: Poly) -> str:
    out = []
    for (a, b) in sorted(poly):
        c = poly[(a, b)]
        factors = []
        for name, e in (("y", a), ("z", b)):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        if not body:
            out.append(str(c))
        elif c == 1:
            out.append(body)
        elif c == -1:
            out.append("-" + body)
        else:
            out.append(f"{c}*{body}")
    s = " + ".join(out) if out else "0"
    return s.replace("+ -", "- ")


# -- q-Pochhammer symbols and friends -----------------------------------------------

def times_one_minus(f: LaurentSeries, m: Monomial) -> LaurentSeries:
    """f * (1 - m)."""
    return f - f.shift(m)


def divide_one_minus(f: LaurentSeries, m: Monomial) -> LaurentSeries:
    """f / (1 - m) for a monomial m of positive q-degree."""
    if m.q < 1:
        raise NotInvertibleError(f"1 - ({m}) is not a unit in the truncated ring")
    e = m.q
    out: dict = {}
    if f.is_zero():
        return LaurentSeries.zero(f.order)
    for d in range(f.valuation, f.order + 1):
        acc = dict(f._c.get(d, {}))
        prev = out.get(d - e)
        if prev:
            _add_into(acc, _poly_shift(prev, m))
        if acc:
            out[d] = acc
    return LaurentSeries(out, f.order)


def poch(a: Monomial, step: int, n: int, N: int) -> LaurentSeries:
    """(a; q^step)_n truncated at q^N."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    factors = [a * Monomial(q=step * k) for k in range(n)]
    # a finite product is exact; only negative q-shifts need headroom
    work = N + sum(max(0, -m.q) for m in factors)
    f = LaurentSeries.one(work)
    for m in factors:
        # terms dropped above `work` can never fall back to degree <= N
        f = f - LaurentSeries({d + m.q: _poly_shift(p, m) for d, p in f._c.items()}, work)
    return f.truncate(N)


def _inf_factor_count(a: Monomial, step: int, N: int) -> int:
    if a.q < 1:
        raise TruncationError(f"(a;q^{step})_inf with a = {a} does not converge in the truncated ring")
    if a.q > N:
        return 0
    return (N - a.q) // step + 1


def poch_inf(a: Monomial, step: int, N: int) -> LaurentSeries:
    """(a; q^step)_inf truncated at q^N; needs a positive q-exponent on a."""
    return poch(a, step, _inf_factor_count(a, step, N), N)


def inv_poch(a: Monomial, step: int, n: int, N: int) -> LaurentSeries:
    """1 / (a; q^step)_n, expanded as a product of geometric series."""
    f = LaurentSeries.one(N)
    for k in range(n):
        f = divide_one_minus(f, a * Monomial(q=step * k))
    return f


def inv_poch_inf(a: Monomial, step: int, N: int) -> LaurentSeries:
    return inv_poch(a, step, _inf_factor_count(a, step, N), N)


def geom_inverse(f: LaurentSeries, N: int | None = None) -> LaurentSeries:
    """Multiplicative inverse of a series whose constant term is +1 or -1."""
    order = f.order if N is None else min(N, f.order)
    if f.is_zero() or f.valuation != 0:
        raise NotInvertibleError("series must start at q^0")
    c0 = f._c[0]
    if set(c0) != {(0, 0)} or abs(c0[(0, 0)]) != 1:
        raise NotInvertibleError("constant term must be the constant +1 or -1")
    u = c0[(0, 0)]
    g: dict = {0: {(0, 0): u}}
    for d in range(1, order + 1):
        acc: Poly = {}
        for k in range(1, d + 1):
            fk = f._c.get(k)
            gk = g.get(d - k)
            if fk and gk:
                _poly_mul(fk, gk, acc)
        acc = {key: -u * c for key, c in acc.items() if c}
        if acc:
            g[d] = acc
    return LaurentSeries(g, order)


def sum_series(term_builder: Callable[[int], LaurentSeries], min_qdeg: Callable[[int], int],
               N: int, max_terms: int = 100_000) -> LaurentSeries:
    """Sum term_builder(n) over n >= 0 up to q^N.

    ``min_qdeg(n)`` must be a nondecreasing lower bound on the q-valuation of
    term n; summation stops at the first n with ``min_qdeg(n) > N``.
    """
    total = LaurentSeries.zero(N)
    last = None
    for n in range(max_terms):
        bound = min_qdeg(n)
        if last is not None and bound < last:
            raise DivergenceError(f"min_qdeg decreased at n={n}: {bound} < {last}")
        last = bound
        if bound > N:
            return total
        term = term_builder(n)
        if term.order < N:
            raise TruncationError(f"term {n} is only known to order {term.order} < {N}")
        if not term.is_zero() and term.valuation < bound:
            raise DivergenceError(f"term {n} has q-valuation {term.valuation} below its bound {bound}")
        total = total + term.truncate(N)
    raise DivergenceError(f"min_qdeg did not exceed {N} within {max_terms} terms")


def substitute_q_negate(f: LaurentSeries) -> LaurentSeries:
    """q -> -q."""
    return LaurentSeries({d: ({k: -c for k, c in p.items()} if d % 2 else dict(p)) for d, p in f._c.items()},
                         f.order)


def coefficient_of(f: LaurentSeries, q_deg: int, y_exp: int = 0, z_exp: int = 0) -> int:
    return f.coefficient(q_deg, y_exp, z_exp)
