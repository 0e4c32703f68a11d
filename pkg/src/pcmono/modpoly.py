"""Polynomials over Z/m.

Arithmetic works for any modulus m >= 2 as long as every divisor used has
an invertible leading coefficient (monic divisors always qualify, which is
what quotient rings Z/p^2[x]/(f) need).  gcd, irreducibility and
factorization require m prime.

The list-level helpers (``_mul``, ``_rem`` ...) take and return ascending
coefficient lists already reduced into [0, m) and trimmed; ``ModPoly`` is
the public immutable wrapper.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import zip_longest

from .errors import BadModulus, CompositeModulus, ModulusMismatch, NonMonicQuotient, ZeroPolynomial
from .integers import factorize, is_prime
from .intpoly import IntPoly

DEFAULT_SEED = 20240501


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, m):
    return _trim([(x + y) % m for x, y in zip_longest(a, b, fillvalue=0)])


def _sub(a, b, m):
    return _trim([(x - y) % m for x, y in zip_longest(a, b, fillvalue=0)])


def _scale(a, c, m):
    return _trim([x * c % m for x in a])


def _mul(a, b, m):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return _trim([c % m for c in out])


def _divmod(a, b, m):
    """Quotient and remainder; lc(b) must be a unit mod m."""
    if not b:
        raise ZeroPolynomial("division by zero polynomial")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    inv = pow(b[-1], -1, m)
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] * inv % m
        q[k] = c
        if c:
            for j in range(db):
                r[k + j] = (r[k + j] - c * b[j]) % m
        r[k + db] = 0
    return _trim(q), _trim(r[:db])


def _rem(a, b, m):
    db = len(b) - 1
    if len(a) - 1 < db:
        return list(a)
    if b[-1] == 1:
        r = list(a)
        for k in range(len(a) - 1 - db, -1, -1):
            c = r[k + db] % m
            if c:
                for j in range(db):
                    r[k + j] -= c * b[j]
        return _trim([x % m for x in r[:db]])
    return _divmod(a, b, m)[1]


def _mulmod(a, b, f, m):
    return _rem(_mul(a, b, m), f, m)


def _powmod(base, e, f, m):
    result = [1 % m] if len(f) > 1 else []
    base = _rem(base, f, m)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, m)
        e >>= 1
        if e:
            base = _mulmod(base, base, f, m)
    return _trim(result)


def _monic(a, m):
    if not a:
        return []
    inv = pow(a[-1], -1, m)
    return [x * inv % m for x in a]


def _gcd(a, b, m):
    a, b = list(a), list(b)
    while b:
        a, b = b, _rem(a, b, m)
    return _monic(a, m)


def _derivative(a, m):
    return _trim([i * c % m for i, c in enumerate(a)][1:])


def _is_one(a):
    return a == [1]


class ModPoly:
    """Immutable polynomial with coefficients in [0, modulus)."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs, modulus: int):
        if modulus < 2:
            raise BadModulus(f"modulus must be >= 2, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) % modulus for c in coeffs])))

    @classmethod
    def _raw(cls, coeffs, modulus):
        obj = object.__new__(cls)
        object.__setattr__(obj, "modulus", modulus)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ModPoly is immutable")

    def __reduce__(self):
        return (ModPoly._raw, (self.coeffs, self.modulus))

    @classmethod
    def x(cls, modulus):
        return cls._raw((0, 1), modulus)

    @classmethod
    def one(cls, modulus):
        return cls._raw((1,), modulus)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def lift(self) -> IntPoly:
        """Integer polynomial with the canonical representatives in [0, m)."""
        return IntPoly(self.coeffs)

    def to_text(self) -> str:
        return self.lift().to_text()

    def __eq__(self, other):
        return isinstance(other, ModPoly) and self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.modulus))

    def __lt__(self, other):
        # canonical order: degree first, then coefficients from the top down
        return (self.degree, self.coeffs[::-1]) < (other.degree, other.coeffs[::-1])

    def __repr__(self):
        return f"ModPoly({list(self.coeffs)!r}, {self.modulus})"

    def __str__(self):
        return f"{self.lift()} (mod {self.modulus})"

    def _check(self, other):
        if isinstance(other, IntPoly):
            return reduce_mod(other, self.modulus)
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"moduli {self.modulus} and {other.modulus} differ")
        return other

    def __add__(self, other):
        other = self._check(other)
        return ModPoly._raw(_add(list(self.coeffs), list(other.coeffs), self.modulus), self.modulus)

    def __sub__(self, other):
        other = self._check(other)
        return ModPoly._raw(_sub(list(self.coeffs), list(other.coeffs), self.modulus), self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return ModPoly._raw(_scale(list(self.coeffs), other % self.modulus, self.modulus), self.modulus)
        other = self._check(other)
        return ModPoly._raw(_mul(self.coeffs, other.coeffs, self.modulus), self.modulus)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        m = self.modulus
        result = [1]
        base = list(self.coeffs)
        while e:
            if e & 1:
                result = _mul(result, base, m)
            e >>= 1
            if e:
                base = _mul(base, base, m)
        return ModPoly._raw(result, m)

    def __divmod__(self, other):
        other = self._check(other)
        if other.coeffs and math.gcd(other.coeffs[-1], self.modulus) == 1:
            q, r = _divmod(list(self.coeffs), list(other.coeffs), self.modulus)
            return ModPoly._raw(q, self.modulus), ModPoly._raw(r, self.modulus)
        raise NonMonicQuotient(f"leading coefficient of {other} is not a unit")

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> ModPoly:
        return ModPoly._raw(_monic(list(self.coeffs), self.modulus), self.modulus)

    def derivative(self) -> ModPoly:
        return ModPoly._raw(_derivative(self.coeffs, self.modulus), self.modulus)

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * t + c) % self.modulus
        return acc


def reduce_mod(f: IntPoly, m: int) -> ModPoly:
    return ModPoly(f.coeffs, m)


def _require_prime(q):
    if not is_prime(q):
        raise CompositeModulus(f"{q} is not prime")


def gcd_fp(a: ModPoly, b: ModPoly) -> ModPoly:
    """Monic gcd over F_q."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"moduli {a.modulus} and {b.modulus} differ")
    _require_prime(a.modulus)
    return ModPoly._raw(_gcd(a.coeffs, b.coeffs, a.modulus), a.modulus)


def powmod_poly(base: ModPoly, e: int, f: ModPoly) -> ModPoly:
    """base^e mod (m, f) by square-and-multiply; f must be monic."""
    if base.modulus != f.modulus:
        raise ModulusMismatch(f"moduli {base.modulus} and {f.modulus} differ")
    if not f.is_monic() or f.degree < 1:
        raise NonMonicQuotient("quotient polynomial must be monic of degree >= 1")
    if e < 0:
        raise ValueError("negative exponent")
    return ModPoly._raw(_powmod(list(base.coeffs), e, list(f.coeffs), f.modulus), f.modulus)


def _frobenius_powers(f, q, count):
    """[x^(q^1), ..., x^(q^count)] mod f, each reduced."""
    out = []
    h = [0, 1]
    for _ in range(count):
        h = _powmod(h, q, f, q)
        out.append(h)
    return out


def is_irreducible_fp(f: ModPoly) -> bool:
    """Rabin's irreducibility test over F_p."""
    q = f.modulus
    _require_prime(q)
    if f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    a = _monic(list(f.coeffs), q)
    n = len(a) - 1
    if n == 1:
        return True
    frob = _frobenius_powers(a, q, n)
    x = _rem([0, 1], a, q)
    if frob[-1] != x:
        return False
    for r in factorize(n).primes():
        h = frob[n // r - 1]
        if not _is_one(_gcd(a, _sub(h, x, q), q)):
            return False
    return True


@dataclass(frozen=True)
class ModFactorization:
    modulus: int
    factors: tuple[tuple[ModPoly, int], ...]
    unit: int

    def product(self) -> ModPoly:
        acc = ModPoly([self.unit], self.modulus)
        for g, e in self.factors:
            acc = acc * g**e
        return acc

    def radical(self) -> ModPoly:
        acc = ModPoly.one(self.modulus)
        for g, _ in self.factors:
            acc = acc * g
        return acc


def _pth_root(a, p):
    return a[::p]


def squarefree_decomposition(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Pairs (s_i, i) of monic, pairwise coprime squarefree factors with f = lc * prod s_i^i."""
    q = f.modulus
    _require_prime(q)
    if f.is_zero():
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    out: dict[int, list[int]] = {}
    _sff(_monic(list(f.coeffs), q), q, 1, out)
    return sorted(((ModPoly._raw(v, q), k) for k, v in out.items()), key=lambda t: t[1])


def _sff(f, q, mult, out):
    if len(f) <= 1:
        return
    c = _gcd(f, _derivative(f, q), q)
    w = _divmod(f, c, q)[0]
    i = 1
    while not _is_one(w):
        y = _gcd(w, c, q)
        fac = _divmod(w, y, q)[0]
        if not _is_one(fac):
            k = i * mult
            out[k] = _mul(out[k], fac, q) if k in out else fac
        w = y
        c = _divmod(c, y, q)[0]
        i += 1
    if not _is_one(c):
        _sff(_pth_root(c, q), q, mult * q, out)


def radical_fp(f: ModPoly) -> ModPoly:
    """Product of the distinct monic irreducible factors of f over F_q."""
    q = f.modulus
    acc = [1]
    for s, _ in squarefree_decomposition(f):
        acc = _mul(acc, list(s.coeffs), q)
    return ModPoly._raw(acc, q)


def _ddf(f, q):
    """Distinct-degree factorization of a monic squarefree f."""
    out = []
    h = [0, 1]
    i = 1
    rest = f
    while len(rest) - 1 >= 2 * i:
        h = _powmod(h, q, rest, q)
        g = _gcd(rest, _sub(h, [0, 1], q), q)
        if not _is_one(g):
            out.append((g, i))
            rest = _divmod(rest, g, q)[0]
            h = _rem(h, rest, q)
        i += 1
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _edf(f, d, q, rng):
    """Equal-degree splitting (Cantor-Zassenhaus); trace map when q = 2."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(q) for _ in range(n)])
        if len(a) < 2:
            continue
        if q == 2:
            t = list(a)
            s = list(a)
            for _ in range(d - 1):
                s = _mulmod(s, s, f, q)
                t = _add(t, s, q)
            b = t
        else:
            b = _sub(_powmod(a, (q**d - 1) // 2, f, q), [1], q)
        g = _gcd(f, b, q)
        if 0 < len(g) - 1 < n:
            return _edf(g, d, q, rng) + _edf(_divmod(f, g, q)[0], d, q, rng)


def factor_fq(f: ModPoly, seed: int = DEFAULT_SEED) -> ModFactorization:
    """Complete factorization over F_q, canonically ordered."""
    q = f.modulus
    _require_prime(q)
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(seed)
    factors = []
    for s, mult in squarefree_decomposition(f):
        for g, d in _ddf(list(s.coeffs), q):
            for h in _edf(g, d, q, rng):
                factors.append((ModPoly._raw(h, q), mult))
    factors.sort(key=lambda t: (t[0].degree, t[0].coeffs[::-1], t[1]))
    return ModFactorization(q, tuple(factors), f.lc)


def composed_irreducible_fp(f: IntPoly, p: int, q: int) -> bool:
    """Is f(x^p) irreducible over F_q?  p must be prime.

    Uses the tower F_q < F_q(a) < F_q(b) with b^p = a: f(x^p) is irreducible
    iff f is irreducible mod q and x^p - a is irreducible over F_q(a), i.e.
    a is not a p-th power in F_{q^N}.  When q = p every element is a p-th
    power; otherwise that holds exactly when p does not divide q^N - 1 or
    a^((q^N - 1)/p) = 1.
    """
    fq = reduce_mod(f, q)
    if fq.degree != f.degree or not is_irreducible_fp(fq):
        return False
    if p == 1:
        return True
    if p == q:
        return False
    order = q**f.degree - 1
    if order % p:
        return False
    a = list(fq.monic().coeffs)
    return not _is_one(_powmod([0, 1], order // p, a, q))
