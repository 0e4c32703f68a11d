"""The recurrence with characteristic polynomial f and its periods mod p, p^2.

For monic f = x^N - a_1 x^(N-1) - ... - a_N the sequence starts at
U_0 = ... = U_{N-2} = 0, U_{N-1} = 1 and continues with
U_n = a_1 U_{n-1} + ... + a_N U_{n-N}.  The period modulo m is the least
n >= 1 taking the state window (U_0, ..., U_{N-1}) back to itself; it equals
the multiplicative order of the companion matrix modulo m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceeded, FactorizationIncomplete, NotAMultiple, NotIrreducible, NotPeriodic
from .integers import FactorMap, factorize, multiplicative_order
from .intpoly import IntPoly
from .modpoly import _add, _is_one, _mul, _powmod, _rem, is_irreducible_fp, reduce_mod

BRUTE_CAP = 10**7

BRUTE_FORCE = "brute_force"
ALPHA_ORDER = "alpha_order"
LIFT_TEST = "lift_test"


@dataclass(frozen=True)
class ModMatrix:
    modulus: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n, m):
        return cls(m, tuple(tuple(int(i == j) % m for j in range(n)) for i in range(n)))

    def __matmul__(self, other: ModMatrix) -> ModMatrix:
        m = self.modulus
        cols = list(zip(*other.rows))
        return ModMatrix(m, tuple(tuple(sum(a * b for a, b in zip(row, col)) % m for col in cols) for row in self.rows))

    def __pow__(self, e: int) -> ModMatrix:
        result = ModMatrix.identity(self.dim, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def is_identity(self) -> bool:
        return self == ModMatrix.identity(self.dim, self.modulus)

    def apply(self, vec):
        m = self.modulus
        return [sum(a * b for a, b in zip(row, vec)) % m for row in self.rows]


@dataclass(frozen=True)
class PeriodReport:
    modulus: int
    period: int
    method: str
    multiple_used: int | None = None

    def to_dict(self):
        return {"modulus": self.modulus, "period": self.period, "method": self.method, "multiple_used": self.multiple_used}

    @classmethod
    def from_dict(cls, d):
        return cls(d["modulus"], d["period"], d["method"], d.get("multiple_used"))


def _check_periodic(f: IntPoly, m: int):
    f.require_characteristic()
    if m < 2:
        raise NotPeriodic(f"modulus must be >= 2, got {m}")
    if math.gcd(m, f.coeffs[0]) != 1:
        raise NotPeriodic(f"gcd({m}, f(0)) != 1; the sequence is not periodic mod {m}")


def companion_matrix(f: IntPoly, m: int) -> ModMatrix:
    """Shift rows on top, last row (a_N, ..., a_1): maps window n to window n+1."""
    _check_periodic(f, m)
    n = f.degree
    a = f.recurrence_coefficients()
    rows = [tuple(int(j == i + 1) for j in range(n)) for i in range(n - 1)]
    rows.append(tuple(a[n - 1 - j] % m for j in range(n)))
    return ModMatrix(m, tuple(rows))


def sequence_terms(f: IntPoly, m: int, count: int) -> list[int]:
    _check_periodic(f, m)
    n = f.degree
    a = [c % m for c in f.recurrence_coefficients()]
    u = [0] * (n - 1) + [1 % m]
    while len(u) < count:
        u.append(sum(a[i] * u[-1 - i] for i in range(n)) % m)
    return u[:count]


def period_bruteforce(f: IntPoly, m: int, cap: int = BRUTE_CAP) -> PeriodReport:
    """Iterate the state window until it returns to (0, ..., 0, 1)."""
    _check_periodic(f, m)
    n = f.degree
    coeffs = [c % m for c in f.recurrence_coefficients()]
    start = tuple([0] * (n - 1) + [1 % m])
    if n == 2:
        a1, a2 = coeffs
        x, y = 0, 1 % m
        for steps in range(1, cap + 1):
            x, y = y, (a1 * y + a2 * x) % m
            if x == 0 and y == start[1]:
                return PeriodReport(m, steps, BRUTE_FORCE)
        raise CapExceeded(m, cap)
    # ring buffer of the last n terms; rev_coeffs[j] multiplies U_{k-n+j}
    rev = coeffs[::-1]
    window = list(start)
    pos = 0
    for steps in range(1, cap + 1):
        nxt = 0
        for j in range(n):
            nxt += rev[j] * window[(pos + j) % n]
        window[pos] = nxt % m
        pos = (pos + 1) % n
        if window[(pos + n - 1) % n] == start[-1] and all(window[(pos + j) % n] == 0 for j in range(n - 1)):
            return PeriodReport(m, steps, BRUTE_FORCE)
    raise CapExceeded(m, cap)


def matrix_order(c: ModMatrix, multiple: int, factors: FactorMap | None = None) -> int:
    """Exact order of c, given a multiple of it."""
    if not (c ** multiple).is_identity():
        raise NotAMultiple(f"C^{multiple} is not the identity")
    if factors is None:
        factors = factorize(multiple)
    if not isinstance(factors, FactorMap):
        raise FactorizationIncomplete(f"could not fully factor {multiple}")
    return multiplicative_order(c, multiple, factors, lambda g, e: g**e, ModMatrix.is_identity)


def _irreducible_mod_p(f: IntPoly, p: int) -> list[int]:
    fp = reduce_mod(f, p)
    if not is_irreducible_fp(fp):
        raise NotIrreducible(f"{f} is reducible modulo {p}")
    return list(fp.coeffs)


def period_mod_p(f: IntPoly, p: int, brute_cap: int = BRUTE_CAP) -> PeriodReport:
    """pi(p) as the order of x in F_p[x]/(f), a divisor of p^N - 1."""
    _check_periodic(f, p)
    fp = _irreducible_mod_p(f, p)
    multiple = p**f.degree - 1
    factors = factorize(multiple)
    if not isinstance(factors, FactorMap):
        return period_bruteforce(f, p, brute_cap)
    x = [0, 1]
    order = multiplicative_order(x, multiple, factors, lambda g, e: _powmod(g, e, fp, p), _is_one)
    return PeriodReport(p, order, ALPHA_ORDER, multiple)


def period_mod_p2(f: IntPoly, p: int, pi_p: int) -> PeriodReport:
    """pi(p^2) is pi(p) when C^pi(p) = I mod p^2, otherwise p * pi(p)."""
    m = p * p
    c = companion_matrix(f, m)
    period = pi_p if (c**pi_p).is_identity() else p * pi_p
    return PeriodReport(m, period, LIFT_TEST, pi_p)


def galois_ring_test(f: IntPoly, p: int) -> bool:
    """True iff f(x^p) vanishes in Z/p^2[x]/(f).

    With a = x the class of a root, this checks whether a^p is itself a root
    of f modulo p^2, which happens exactly when pi(p^2) = pi(p).
    """
    _irreducible_mod_p(f, p)
    m = p * p
    fm = [c % m for c in f.coeffs]
    ap = _powmod([0, 1], p, fm, m)
    acc: list[int] = []
    for c in reversed(f.coeffs):
        acc = _rem(_add(_mul(acc, ap, m), [c % m], m), fm, m)
    return not acc


def period(f: IntPoly, m: int, brute_cap: int = BRUTE_CAP) -> PeriodReport:
    """pi(m) using the fast paths when m is p or p^2 with f irreducible mod p."""
    _check_periodic(f, m)
    fm = factorize(m)
    if isinstance(fm, FactorMap) and len(fm.entries) == 1:
        (p, e), = fm.entries.items()
        if e <= 2 and is_irreducible_fp(reduce_mod(f, p)):
            rp = period_mod_p(f, p, brute_cap)
            return rp if e == 1 else period_mod_p2(f, p, rp.period)
    return period_bruteforce(f, m, brute_cap)
