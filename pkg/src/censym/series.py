"""Exact truncated bivariate power series; no floating point anywhere.

A series is truncated in x at a fixed order; each x^n coefficient is a
dense polynomial in y with Fraction coefficients.  Division and square
root work by coefficient recurrences and need the constant term to be a
nonzero scalar (respectively exactly 1), which every formula used here
satisfies after factoring out the appropriate monomial.
"""

from fractions import Fraction

_ZERO = Fraction(0)


def _trim(poly):
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO)
        for i in range(n)
    )


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _pscale(a, s):
    if not s:
        return ()
    return tuple(c * s for c in a)


def _pshift(a, k):
    if not a:
        return ()
    return (_ZERO,) * k + tuple(a)


def _pdiv_y(a, k):
    if any(c != 0 for c in a[:k]):
        raise ValueError(f"coefficient {a!r} is not divisible by y^{k}")
    return tuple(a[k:])


class BivariateSeries:
    """A power series in x, truncated at x^order, over Fraction[y]."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = list(coeffs)[: order + 1]
        coeffs += [()] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(_trim(c) for c in coeffs)

    @classmethod
    def from_terms(cls, order: int, terms):
        """Build from (x-exponent, y-exponent, coefficient) triples."""
        rows = [{} for _ in range(order + 1)]
        for i, j, c in terms:
            if i <= order:
                rows[i][j] = rows[i].get(j, _ZERO) + Fraction(c)
        coeffs = []
        for row in rows:
            width = max(row) + 1 if row else 0
            coeffs.append(tuple(row.get(j, _ZERO) for j in range(width)))
        return cls(order, coeffs)

    @classmethod
    def constant(cls, order: int, c):
        return cls.from_terms(order, [(0, 0, c)])

    @classmethod
    def one(cls, order: int):
        return cls.constant(order, 1)

    def coefficient(self, i: int, j: int) -> Fraction:
        if i > self.order:
            raise IndexError(f"x^{i} is beyond truncation order {self.order}")
        row = self.coeffs[i]
        return row[j] if j < len(row) else _ZERO

    def y_degree(self, i: int) -> int:
        """Degree in y of the x^i coefficient (-1 for zero)."""
        return len(self.coeffs[i]) - 1

    def __eq__(self, other):
        return (
            isinstance(other, BivariateSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"BivariateSeries(order={self.order}, coeffs={self.coeffs!r})"

    def truncate(self, order: int) -> "BivariateSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return BivariateSeries(order, self.coeffs[: order + 1])

    def _coerce(self, other):
        if isinstance(other, BivariateSeries):
            return other
        return BivariateSeries.constant(self.order, other)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return BivariateSeries(
            order,
            (_padd(a, b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries(self.order, (_pneg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        out = [() for _ in range(order + 1)]
        for i, a in enumerate(self.coeffs[: order + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: order + 1 - i]):
                if b:
                    out[i + j] = _padd(out[i + j], _pmul(a, b))
        return BivariateSeries(order, out)

    __rmul__ = __mul__

    def scale(self, s) -> "BivariateSeries":
        s = Fraction(s)
        return BivariateSeries(self.order, (_pscale(c, s) for c in self.coeffs))

    def mul_term(self, i: int, j: int, c=1) -> "BivariateSeries":
        """Multiply by c x^i y^j, keeping the truncation order."""
        c = Fraction(c)
        out = [()] * (self.order + 1)
        for a, row in enumerate(self.coeffs):
            if a + i <= self.order and row:
                out[a + i] = _pscale(_pshift(row, j), c)
        return BivariateSeries(self.order, out)

    def _unit_constant(self) -> Fraction:
        head = self.coeffs[0]
        if len(head) != 1 or head[0] == 0:
            raise ValueError("constant term must be a nonzero scalar")
        return head[0]

    def __truediv__(self, other):
        other = self._coerce(other)
        c0 = other._unit_constant()
        order = min(self.order, other.order)
        quotient = []
        for i in range(order + 1):
            acc = self.coeffs[i] if i <= self.order else ()
            for j in range(1, i + 1):
                b = other.coeffs[j] if j <= other.order else ()
                if b and quotient[i - j]:
                    acc = _padd(acc, _pneg(_pmul(b, quotient[i - j])))
            quotient.append(_pscale(acc, Fraction(1, 1) / c0))
        return BivariateSeries(order, quotient)

    def sqrt(self) -> "BivariateSeries":
        """Square root of a series with constant term exactly 1."""
        if self.coeffs[0] != (Fraction(1),):
            raise ValueError("constant term must be 1")
        half = Fraction(1, 2)
        root = [(Fraction(1),)]
        for i in range(1, self.order + 1):
            acc = self.coeffs[i]
            for j in range(1, i):
                acc = _padd(acc, _pneg(_pmul(root[j], root[i - j])))
            root.append(_pscale(acc, half))
        return BivariateSeries(self.order, root)

    def div_x(self, k: int) -> "BivariateSeries":
        """Exact division by x^k; the order drops by k."""
        if any(self.coeffs[i] for i in range(min(k, self.order + 1))):
            raise ValueError(f"series is not divisible by x^{k}")
        if self.order < k:
            raise ValueError("truncation order too small to divide by x^k")
        return BivariateSeries(self.order - k, self.coeffs[k:])

    def div_y(self, k: int) -> "BivariateSeries":
        """Exact division by y^k."""
        return BivariateSeries(self.order, (_pdiv_y(c, k) for c in self.coeffs))

    def substitute_y_squared(self) -> "BivariateSeries":
        """The series with y replaced by y^2."""
        out = []
        for row in self.coeffs:
            spread = [_ZERO] * (2 * len(row) - 1 if row else 0)
            for j, c in enumerate(row):
                spread[2 * j] = c
            out.append(tuple(spread))
        return BivariateSeries(self.order, out)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for row in self.coeffs for c in row)

    def integer_rows(self) -> tuple:
        """Coefficient rows as plain ints; fails on fractional entries."""
        rows = []
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c.denominator != 1:
                    raise ValueError(
                        f"coefficient of x^{i} y^{j} is not an integer: {c}"
                    )
            rows.append(tuple(int(c) for c in row))
        return tuple(rows)


NAMED_SERIES = ("Q", "R", "E", "V", "K", "CK", "S", "T")

_EVEN_SQRT_ARG = [(0, 0, 1), (1, 2, -4), (2, 2, -4), (2, 4, 4)]
_ODD_SQRT_ARG = [(0, 0, 1), (1, 1, -4), (2, 1, -4), (2, 2, 4)]


def _series_Q(order):
    num = BivariateSeries.from_terms(order, [(1, 0, 1), (1, 1, 1)])
    den = BivariateSeries.from_terms(order, [(0, 0, 1), (1, 0, -1), (1, 2, -1)])
    return num / den


def _series_R(order):
    num = BivariateSeries.from_terms(order, [(1, 0, 1)])
    den = BivariateSeries.from_terms(order, [(0, 0, 1), (1, 0, -1), (1, 2, -1)])
    return num / den


def _series_E(order):
    work = order + 1
    root = BivariateSeries.from_terms(work, _ODD_SQRT_ARG).sqrt()
    num = root + BivariateSeries.from_terms(
        work,
        [(0, 0, -1), (1, 1, 2), (2, 1, 2), (1, 2, -2), (2, 2, -4), (2, 3, 2)],
    )
    num = num.div_x(1).div_y(2)
    den = BivariateSeries.from_terms(order, [(0, 0, -2), (1, 1, 2), (1, 0, -2)])
    return num / den


def _series_V(order):
    work = order + 1
    root = BivariateSeries.from_terms(work, _EVEN_SQRT_ARG).sqrt()
    num = (root - 1).div_x(1).div_y(2)
    den = BivariateSeries.from_terms(order, [(0, 0, -2), (1, 0, -2), (1, 2, 2)])
    return num / den


def _series_K(order):
    work = order + 1
    root = BivariateSeries.from_terms(work, _EVEN_SQRT_ARG).sqrt()
    num = BivariateSeries.from_terms(
        work, [(0, 0, 1), (1, 2, -2), (2, 2, -2), (2, 4, 2)]
    ) - root
    num = num.div_x(1).div_y(3)
    den = BivariateSeries.from_terms(order, [(0, 0, 2), (1, 0, 2), (1, 2, -2)])
    return BivariateSeries.one(order) + num / den


def _series_CK(order):
    k = _series_K(order)
    xy = BivariateSeries.from_terms(order, [(1, 1, 1)])
    t1 = (k - 1 - xy).mul_term(1, 2)
    t2 = (k - 1).mul_term(2, 2) - (k - 1).mul_term(2, 4)
    t3 = BivariateSeries.from_terms(order, [(0, 0, 1), (1, 1, 1), (2, 1, 1)])
    return t1 + t2 + t3


def _series_T(order):
    k = _series_K(order)
    num = (
        -(k * k).mul_term(1, 3)
        + k
        + k.mul_term(1, 1)
        - k.mul_term(1, 2).scale(2)
        + k.mul_term(1, 3)
        + BivariateSeries.from_terms(order, [(1, 2, 1), (1, 1, -2), (1, 0, 1)])
    )
    den = (
        BivariateSeries.from_terms(order, [(0, 0, 1), (1, 1, -1), (1, 3, 1)])
        - k.mul_term(1, 2)
        - k.mul_term(1, 3)
    )
    return num / den


def _series_S(order):
    t = _series_T(order)
    k = _series_K(order)
    return (
        BivariateSeries.from_terms(order, [(0, 0, 1), (1, 0, 1)])
        + (t - 1).mul_term(1, 1)
        + t.mul_term(1, 2)
        - k.mul_term(1, 2)
    )


_BUILDERS = {
    "Q": _series_Q,
    "R": _series_R,
    "E": _series_E,
    "V": _series_V,
    "K": _series_K,
    "CK": _series_CK,
    "S": _series_S,
    "T": _series_T,
}


def build_named_series(name: str, order: int) -> BivariateSeries:
    """One of the closed-form descent series, expanded exactly.

    Every coefficient must come out a nonnegative-size integer polynomial
    in y of degree at most 2n+1 in row n; violations raise.
    """
    if name not in _BUILDERS:
        raise ValueError(f"unknown series {name!r} (choose from {NAMED_SERIES})")
    s = _BUILDERS[name](order)
    rows = s.integer_rows()  # raises on fractional coefficients
    for n, row in enumerate(rows):
        if len(row) - 1 > 2 * n + 1:
            raise ValueError(
                f"{name}: x^{n} row has y-degree {len(row) - 1}, beyond 2n+1"
            )
    return s
