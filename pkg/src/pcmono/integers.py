"""Exact integer utilities: primality, factorization and squarefreeness.

Primality battery used by :func:`is_prime`:

* trial division by the primes below 1000;
* for n < 3.3 * 10**24 (which covers every n < 2**64) a strong
  Miller-Rabin test to the thirteen prime bases 2..41, which is
  deterministic in that range (twelve bases are not: 318665857834031151167461
  passes 2..37);
* above that range, the same thirteen bases followed by 65 further
  strong Miller-Rabin rounds with bases drawn from a PRNG seeded by n.
  A composite survives a random-base round with probability at most 1/4,
  so the false-positive probability is at most 4**-65 < 2**-128.

Factorization is trial division up to 10**6 followed by Pollard rho with
Brent's cycle detection.  Rho work is bounded; if cofactors remain
unresolved the caller gets an :class:`Incomplete` instead of a hang.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ZeroInput

TRIAL_LIMIT = 10**6
DEFAULT_EFFORT = 2_000_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_EXTRA_ROUNDS = 65


@lru_cache(maxsize=None)
def _sieve(limit: int) -> bytearray:
    s = bytearray([1]) * (limit + 1)
    s[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if s[i]:
            s[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return s


@lru_cache(maxsize=None)
def primes_upto(limit: int) -> tuple[int, ...]:
    """All primes p <= limit, in increasing order."""
    if limit < 2:
        return ()
    s = _sieve(limit)
    return tuple(i for i in range(limit + 1) if s[i])


_SMALL = primes_upto(1000)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL:
        if n % p == 0:
            return n == p
    if n < 1_000_000:
        return True
    for a in _MR_BASES:
        if not _strong_probable_prime(n, a):
            return False
    if n < _MR_DETERMINISTIC_BOUND:
        return True
    rng = random.Random(n)
    return all(_strong_probable_prime(n, rng.randrange(2, n - 1)) for _ in range(_EXTRA_ROUNDS))


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    n = max(n + 1, 2)
    while not is_prime(n):
        n += 1
    return n


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    if hi <= TRIAL_LIMIT:
        return [p for p in primes_upto(max(hi, 0)) if p >= lo]
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


@dataclass(frozen=True)
class FactorMap:
    """Signed prime factorization: ``sign * prod(p**e for p, e in entries)``."""

    sign: int
    entries: dict[int, int] = field(default_factory=dict)

    def value(self) -> int:
        v = self.sign
        for p, e in self.entries.items():
            v *= p**e
        return v

    def primes(self) -> list[int]:
        return sorted(self.entries)

    def is_squarefree(self) -> bool:
        return all(e == 1 for e in self.entries.values())

    def __str__(self):
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(self.entries.items()))
        return ("-" if self.sign < 0 else "") + (body or "1")


@dataclass(frozen=True)
class Incomplete:
    """Partial factorization; ``resolved.value() * cofactor == n``.

    ``cofactor`` is positive, composite, and free of prime factors below
    the trial-division limit.
    """

    resolved: FactorMap
    cofactor: int

    def value(self) -> int:
        return self.resolved.value() * self.cofactor


def _brent(n: int, c: int, budget: int, rng: random.Random) -> tuple[int | None, int]:
    """One Pollard-Brent attempt.  Returns (factor or None, steps used)."""
    y = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    steps = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        steps += r
        r *= 2
        if steps > budget:
            return None, steps
    if g == n:
        # backtrack one step at a time from the saved position
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    if g == n:
        return None, steps
    return g, steps


def _split(n: int, budget: int, rng: random.Random) -> tuple[int | None, int]:
    r = math.isqrt(n)
    if r * r == n:
        return r, 0
    used = 0
    c = 1
    while used < budget:
        g, steps = _brent(n, c, budget - used, rng)
        used += steps
        if g is not None:
            return g, used
        c += 1
    return None, used


@lru_cache(maxsize=4096)
def _factorize_cached(n: int, effort_bound: int) -> FactorMap | Incomplete:
    sign = -1 if n < 0 else 1
    n = abs(n)
    entries: dict[int, int] = {}
    for p in primes_upto(TRIAL_LIMIT):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            entries[p] = e
    if n > 1 and n < TRIAL_LIMIT**2:
        entries[n] = entries.get(n, 0) + 1
        n = 1

    rng = random.Random(0x5EED)
    budget = effort_bound
    stack = [n] if n > 1 else []
    unresolved = 1
    while stack:
        m = stack.pop()
        if is_prime(m):
            entries[m] = entries.get(m, 0) + 1
            continue
        if budget <= 0:
            unresolved *= m
            continue
        d, used = _split(m, budget, rng)
        budget -= used
        if d is None:
            unresolved *= m
        else:
            stack.extend((d, m // d))

    resolved = FactorMap(sign, dict(sorted(entries.items())))
    if unresolved > 1:
        return Incomplete(resolved, unresolved)
    return resolved


def factorize(n: int, effort_bound: int = DEFAULT_EFFORT) -> FactorMap | Incomplete:
    """Factor a nonzero integer.

    ``effort_bound`` caps the total number of Pollard rho iterations spent
    on cofactors that survive trial division.
    """
    if n == 0:
        raise ZeroInput("cannot factor 0")
    return _factorize_cached(n, effort_bound)


def is_squarefree(n: int, effort_bound: int = DEFAULT_EFFORT) -> bool | None:
    """True iff no prime square divides n; None when undecidable within budget."""
    fm = factorize(n, effort_bound)
    if isinstance(fm, FactorMap):
        return fm.is_squarefree()
    if not fm.resolved.is_squarefree():
        return False
    c = fm.cofactor
    r = math.isqrt(c)
    if r * r == c:
        return False
    # every prime factor of c exceeds TRIAL_LIMIT, so below TRIAL_LIMIT**3 it
    # has at most two of them, and a non-square cannot repeat one
    if c < TRIAL_LIMIT**3:
        return True
    return None


def multiplicative_order(g, multiple: int, factors: FactorMap, power, is_one) -> int:
    """Order of ``g`` given that ``power(g, multiple)`` is the identity.

    Strips each prime of ``multiple`` while the reduced exponent still
    annihilates ``g``.
    """
    order = multiple
    for q, e in factors.entries.items():
        for _ in range(e):
            if is_one(power(g, order // q)):
                order //= q
            else:
                break
    return order
