"""Dense univariate polynomials over the integers.

Coefficients are stored in ascending order (index 0 is the constant term).
The zero polynomial has no coefficients and degree -1; nothing treats it
as a constant of degree 0.

The text format used by the CLI and reports lists coefficients from the
leading one down, comma separated: ``"1,-11,-43"`` is x^2 - 11x - 43.
"""

from __future__ import annotations

import math
from itertools import zip_longest

from .errors import DegreeTooSmall, NotMonic, ParseError, ZeroPolynomial


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    @classmethod
    def from_text(cls, text: str) -> IntPoly:
        """Parse the canonical leading-first comma-separated format."""
        values = []
        pos = 0
        for token in text.split(","):
            stripped = token.strip()
            try:
                values.append(int(stripped))
            except ValueError:
                raise ParseError(f"bad coefficient {stripped!r}", pos) from None
            pos += len(token) + 1
        if not values:
            raise ParseError("empty polynomial", 0)
        return cls(reversed(values))

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in reversed(self.coeffs))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> IntPoly:
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def require_characteristic(self) -> None:
        """Raise unless this is monic of degree >= 2."""
        if not self.is_monic():
            raise NotMonic(f"{self} is not monic")
        if self.degree < 2:
            raise DegreeTooSmall(f"{self} has degree < 2")

    def recurrence_coefficients(self) -> list[int]:
        """[a_1, ..., a_N] with f = x^N - a_1 x^(N-1) - ... - a_N."""
        n = self.degree
        return [-self.coeffs[n - i] for i in range(1, n + 1)]

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    def __add__(self, other):
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other):
        return IntPoly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = IntPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, d: int) -> IntPoly:
        """Divide every coefficient by d; ValueError unless all divide exactly."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ValueError(f"{d} does not divide {self}")
            out.append(q)
        return IntPoly(out)

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    __call__ = evaluate

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose_power(self, p: int) -> IntPoly:
        """f(x^p)."""
        if p < 1:
            raise ValueError("exponent must be positive")
        if p == 1 or not self.coeffs:
            return self
        out = [0] * (p * self.degree + 1)
        out[::p] = self.coeffs
        return IntPoly(out)

    def pseudo_divmod(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """lc(other)^(deg self - deg other + 1) * self = q * other + r."""
        if other.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        b = other.coeffs
        lb = b[-1]
        delta = len(r) - 1 - db
        if delta < 0:
            return IntPoly(), self
        q = [0] * (delta + 1)
        e = delta + 1
        while len(r) - 1 >= db and r:
            k = len(r) - 1 - db
            lr = r[-1]
            q = [c * lb for c in q]
            q[k] += lr
            r = [c * lb for c in r]
            for j in range(db + 1):
                r[k + j] -= lr * b[j]
            while r and r[-1] == 0:
                r.pop()
            e -= 1
        f = lb**e
        return IntPoly(c * f for c in q), IntPoly(c * f for c in r)


def sylvester_matrix(f: IntPoly, g: IntPoly) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def resultant_sylvester(f: IntPoly, g: IntPoly) -> int:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    if f.degree == 0:
        return f.lc**g.degree
    if g.degree == 0:
        return g.lc**f.degree
    return bareiss_det(sylvester_matrix(f, g))


def resultant_subresultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant via the subresultant PRS (Cohen, Algorithm 3.3.7)."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    a, b = f, g
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -1
    if b.degree == 0:
        return s * b.lc**a.degree
    ca, cb = a.content(), b.content()
    t = ca**b.degree * cb**a.degree
    a, b = a.exact_div(ca), b.exact_div(cb)
    gg = hh = 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        _, r = a.pseudo_divmod(b)
        a = b
        if r.is_zero():
            return 0
        b = r.exact_div(gg * hh**delta)
        gg = a.lc
        # h <- g^delta / h^(delta-1), exact in Z
        if delta == 0:
            hh = hh
        elif delta == 1:
            hh = gg
        else:
            hh = gg**delta // hh ** (delta - 1)
        if b.degree == 0:
            break
    da = a.degree
    if da == 0:
        h = hh
    elif da == 1:
        h = b.lc
    else:
        h = b.lc**da // hh ** (da - 1)
    return s * t * h


def resultant(f: IntPoly, g: IntPoly, method: str = "subresultant") -> int:
    """Res(f, g) over Q, computed exactly.

    ``method`` is ``"subresultant"`` (default) or ``"sylvester"`` (Bareiss
    determinant of the Sylvester matrix).
    """
    if method == "sylvester":
        return resultant_sylvester(f, g)
    if method == "subresultant":
        return resultant_subresultant(f, g)
    raise ValueError(f"unknown resultant method {method!r}")


def discriminant(f: IntPoly, method: str = "subresultant") -> int:
    """(-1)^(N(N-1)/2) * Res(f, f') / lc(f)."""
    if f.is_zero() or f.degree < 2:
        raise DegreeTooSmall("discriminant needs degree >= 2")
    n = f.degree
    r = resultant(f, f.derivative(), method)
    q, rem = divmod(r, f.lc)
    if rem:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return -q if (n * (n - 1) // 2) % 2 else q


def composed_discriminant(f: IntPoly, p: int, disc_f: int | None = None) -> int:
    """Discriminant of f(x^p) for monic f, without building the resultant.

    Composition formula with g = x^p:
    disc(f(x^p)) = (-1)^(N^2 p(p-1)/2) * disc(f)^p * p^(Np) * ((-1)^(Np) f(0))^(p-1).
    The constant-term factor is absent only when |f(0)| = 1.
    """
    if not f.is_monic():
        raise NotMonic("composed_discriminant expects a monic polynomial")
    n = f.degree
    if disc_f is None:
        disc_f = discriminant(f)
    if p == 1:
        return disc_f
    c0 = f.evaluate(0)
    sign = -1 if (n * n * p * (p - 1) // 2) % 2 else 1
    res = p ** (n * p) * ((-1) ** (n * p) * c0) ** (p - 1)
    return sign * disc_f**p * res
