"""Semi-decision of irreducibility over Q for f and for f(x^p).

There is no rational factorization here.  Each rule either proves
irreducibility, exhibits a factor, or stays silent, and the ladder returns
the first decision in this order:

``SQF0``    f irreducible, |f(0)| >= 2 squarefree => f(x^p) irreducible
            (f(x^p) has the same constant term).
``MODQ``    f(x^p) irreducible over F_q for a prime q <= budget.
``LOCALQ``  p prime, f irreducible: a root a of f is not a p-th power in
            the residue field of some unramified prime above q (q <= budget,
            or q = 1 mod p and q <= p * budget), so a is not
            a p-th power in Q(a) and x^p - a is irreducible over Q(a);
            f(x^p) is then irreducible by Capelli.
``DEGSET``  p = 1: for q not dividing disc(f), any rational factor of
            degree d makes d a subset sum of the factor degrees mod q; an
            empty intersection over q proves irreducibility.
``ROOTQ``   f has an integer root (or a repeated factor), so f(x^p) is
            reducible.
"""

from __future__ import annotations

from functools import lru_cache

from .integers import FactorMap, factorize, is_prime, is_squarefree, primes_upto
from .intpoly import IntPoly, discriminant
from .modpoly import _is_one, _powmod, composed_irreducible_fp, factor_fq, is_irreducible_fp, reduce_mod
from .status import Tri, TriState

PRIME_BUDGET = 500
_MAX_DIVISORS = 100_000


def _divisors(fm: FactorMap):
    divs = [1]
    for p, e in fm.entries.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def integer_roots(f: IntPoly) -> tuple[list[int], bool]:
    """Integer roots of monic f and whether the divisor search was exhaustive."""
    c0 = f.coeffs[0] if f.coeffs else 0
    if c0 == 0:
        return [0], False
    fm = factorize(c0)
    if not isinstance(fm, FactorMap):
        return [], False
    count = 1
    for e in fm.entries.values():
        count *= e + 1
    if count > _MAX_DIVISORS:
        return [], False
    roots = [r for d in sorted(_divisors(fm)) for r in (d, -d) if f.evaluate(r) == 0]
    return roots, True


def _subset_sums(degrees, limit):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums if s + d <= limit}
    return sums


def _base_ladder(f: IntPoly, prime_budget: int) -> TriState:
    n = f.degree
    disc = discriminant(f)
    if disc == 0:
        return TriState(Tri.REFUTED, "ROOTQ: repeated factor (zero discriminant)")
    roots, exhaustive = integer_roots(f)
    if roots:
        return TriState(Tri.REFUTED, f"ROOTQ: integer root {roots[0]}")
    if n <= 3 and exhaustive:
        # a reducible polynomial of degree <= 3 has a linear factor
        return TriState(Tri.ESTABLISHED, "ROOTQ: degree <= 3 without rational roots")
    for q in primes_upto(prime_budget):
        if is_irreducible_fp(reduce_mod(f, q)):
            return TriState(Tri.ESTABLISHED, f"MODQ: irreducible mod {q}")
    possible = set(range(1, n // 2 + 1))
    for q in primes_upto(prime_budget):
        if disc % q == 0:
            continue
        degs = [g.degree for g, _ in factor_fq(reduce_mod(f, q)).factors]
        possible &= _subset_sums(degs, n // 2)
        if not possible:
            return TriState(Tri.ESTABLISHED, f"DEGSET: degree patterns up to q={q}")
    return TriState.unknown("no rule decided within the prime budget")


def _local_candidates(p, prime_budget):
    yield from primes_upto(prime_budget)
    # q = 1 mod p puts the p-th roots of unity in every residue field
    for q in range(p + 1, p * prime_budget + 1, p):
        if q > prime_budget and is_prime(q):
            yield q


def _local_obstruction(f: IntPoly, p: int, prime_budget: int) -> int | None:
    disc = discriminant(f)
    for q in _local_candidates(p, prime_budget):
        if q == p or disc % q == 0:
            continue
        for t, _ in factor_fq(reduce_mod(f, q)).factors:
            order = q**t.degree - 1
            if order % p:
                continue
            if not _is_one(_powmod([0, 1], order // p, list(t.coeffs), q)):
                return q
    return None


@lru_cache(maxsize=8192)
def q_irreducibility_ladder(
    f: IntPoly, p: int = 1, prime_budget: int = PRIME_BUDGET, base: TriState | None = None
) -> TriState:
    """Decide (or fail to decide) irreducibility of f(x^p) over Q.

    ``base`` may carry an already-known status for f itself; otherwise it
    is computed with p = 1.
    """
    f.require_characteristic()
    if p < 1:
        raise ValueError("p must be positive")
    if p == 1:
        return base if base is not None else _base_ladder(f, prime_budget)

    if base is None:
        base = q_irreducibility_ladder(f, 1, prime_budget)
    if base.refuted:
        return TriState(Tri.REFUTED, f"f itself is reducible ({base.provenance})")

    c0 = f.coeffs[0]
    if base.established and abs(c0) >= 2 and is_squarefree(c0):
        return TriState(Tri.ESTABLISHED, f"SQF0: f(0)={c0} squarefree")

    prime_p = is_prime(p)
    composed = f.compose_power(p)
    for q in primes_upto(prime_budget):
        if prime_p:
            hit = composed_irreducible_fp(f, p, q)
        else:
            hit = is_irreducible_fp(reduce_mod(composed, q))
        if hit:
            return TriState(Tri.ESTABLISHED, f"MODQ: f(x^{p}) irreducible mod {q}")

    if base.established and prime_p:
        q = _local_obstruction(f, p, prime_budget)
        if q is not None:
            return TriState(Tri.ESTABLISHED, f"LOCALQ: root not a {p}-th power above {q}")
    return TriState.unknown("no rule decided within the prime budget")
