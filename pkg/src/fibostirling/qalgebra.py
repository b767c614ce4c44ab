"""Exact integer polynomials in q, bivariate (q, p) monomial sums, and
power series in t truncated at a fixed order with QPoly coefficients.

Everything here is immutable and uses Python integers, so results are exact
no matter how large the coefficients get.
"""
from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Mapping, Sequence


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(int(c) for c in coeffs[:n])


class QPoly:
    """Dense polynomial in q with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``. The tuple never ends in a
    zero, so the zero polynomial is ``()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: int = 1) -> "QPoly":
        if power < 0:
            raise ValueError("negative power of q")
        return cls([0] * power + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, s: int) -> int:
        if 0 <= s < len(self.coeffs):
            return self.coeffs[s]
        return 0

    def at_one(self) -> int:
        return sum(self.coeffs)

    def shift(self, m: int) -> "QPoly":
        """Multiply by q**m."""
        if m < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return QPoly((0,) * m + self.coeffs)

    def lowest_power(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def unshift(self, m: int) -> "QPoly":
        """Exact division by q**m; raises if a lower coefficient is nonzero."""
        if any(self.coeffs[:m]):
            raise ArithmeticError(f"{self} is not divisible by q^{m}")
        return QPoly(self.coeffs[m:])

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return QPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return QPoly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        return to_text(self)


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly((x,))
    return NotImplemented


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def qbracket(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; the zero polynomial when n = 0."""
    if n < 0:
        raise ValueError("qbracket needs a natural number")
    return QPoly((1,) * n)


def poly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def poly_sub(a: QPoly, b: QPoly) -> QPoly:
    return a - b


def poly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def poly_negate(a: QPoly) -> QPoly:
    return -a


def poly_shift(a: QPoly, m: int) -> QPoly:
    return a.shift(m)


def eval_at_one(a: QPoly) -> int:
    return a.at_one()


def coeff(a: QPoly, s: int) -> int:
    return a.coeff(s)


def poly_product(factors: Iterable[QPoly]) -> QPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out


def to_text(p: QPoly) -> str:
    """Render as ``c0 + c1*q + c2*q^2``; unit coefficients on q-powers are dropped."""
    if not p.coeffs:
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "q" if i == 1 else f"q^{i}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def from_text(s: str) -> QPoly:
    """Inverse of :func:`to_text`."""
    s = s.strip()
    if s == "0":
        return ZERO
    tokens = s.replace("- ", "-").replace("+ ", "+").split()
    out: dict[int, int] = {}
    for tok in tokens:
        sign = 1
        if tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            tok = tok[1:]
        if "q" not in tok:
            c, e = int(tok), 0
        else:
            head, _, var = tok.rpartition("*") if "*" in tok else ("1", "", tok)
            c = int(head)
            e = 1 if var == "q" else int(var.split("^", 1)[1])
        out[e] = out.get(e, 0) + sign * c
    coeffs = [0] * (max(out) + 1)
    for e, c in out.items():
        coeffs[e] = c
    return QPoly(coeffs)


def to_json(p: QPoly) -> list[int]:
    return list(p.coeffs)


def from_json(data: Sequence[int]) -> QPoly:
    return QPoly(data)


class PQPoly:
    """Sparse polynomial in q and p.

    ``terms`` maps ``(i, j)`` (power of q, power of p) to a nonzero integer.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {k: int(v) for k, v in (terms or {}).items() if v}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PQPoly is immutable")

    @classmethod
    def monomial(cls, qpow: int, ppow: int, c: int = 1) -> "PQPoly":
        return cls({(qpow, ppow): c})

    def __add__(self, other: "PQPoly") -> "PQPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return PQPoly(out)

    def __mul__(self, other: "PQPoly") -> "PQPoly":
        out: dict[tuple[int, int], int] = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                key = (a + c, b + d)
                out[key] = out.get(key, 0) + u * v
        return PQPoly(out)

    def evaluate(self, p: int, q: int) -> int:
        return sum(c * q**i * p**j for (i, j), c in self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, PQPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"PQPoly({dict(sorted(self.terms.items()))})"


class TSeries:
    """Power series in t truncated after ``t**order``, coefficients in QPoly."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[QPoly] = ()):
        cs = [c if isinstance(c, QPoly) else QPoly.const(c) for c in coeffs]
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TSeries is immutable")

    def __getitem__(self, n: int) -> QPoly:
        return self.coeffs[n] if 0 <= n <= self.order else ZERO

    def __mul__(self, other):
        if isinstance(other, TSeries):
            return series_mul(self, other)
        if isinstance(other, (QPoly, int)):
            return TSeries(self.order, (c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other: "TSeries") -> "TSeries":
        _check_orders(self, other)
        return TSeries(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TSeries") -> "TSeries":
        _check_orders(self, other)
        return TSeries(self.order, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def shift_t(self, k: int) -> "TSeries":
        """Multiply by t**k, dropping what falls past the order."""
        return TSeries(self.order, [ZERO] * k + list(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TSeries({self.order}, {list(self.coeffs)!r})"


def _check_orders(a: TSeries, b: TSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"series orders differ: {a.order} != {b.order}")


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    out = []
    for m in range(n + 1):
        acc = ZERO
        for i in range(m + 1):
            if a.coeffs[i] and b.coeffs[m - i]:
                acc = acc + a.coeffs[i] * b.coeffs[m - i]
        out.append(acc)
    return TSeries(n, out)


def geometric(c: QPoly, order: int) -> TSeries:
    """Expansion of 1/(1 - c t): coefficient of t^n is c^n."""
    out, power = [], ONE
    for _ in range(order + 1):
        out.append(power)
        power = power * c
    return TSeries(order, out)


def one_minus(c: QPoly, order: int) -> TSeries:
    """The series 1 - c t at the given order."""
    return TSeries(order, [ONE, -c])
