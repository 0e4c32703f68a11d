"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (also collected into the pytest
terminal summary) and then asserts.  Expected values and tolerances are
pinned here as data; nothing is recomputed from the code under test.
Run standalone with ``python tests/test_acceptance.py``.
"""

import itertools
import math
import random
import time

import pytest

from pcmono.dedekind import is_monogenic
from pcmono.families import instantiate, not_monogenic_rows, scan
from pcmono.integers import FactorMap, factorize, is_prime, is_squarefree, primes_upto
from pcmono.intpoly import IntPoly, discriminant
from pcmono.irreducibility import q_irreducibility_ladder
from pcmono.modpoly import ModPoly, factor_fq, is_irreducible_fp, reduce_mod
from pcmono.pc import is_p_irreducible, pc_verdict
from pcmono.recurrence import BRUTE_CAP, galois_ring_test, period_bruteforce, period_mod_p, period_mod_p2
from pcmono.status import Verdict

# per-pair budgets used by every scan below (the library defaults)
PRIME_BUDGET = 500
PERIOD_BRUTE_CAP = BRUTE_CAP  # 10**7 state steps, only used if p^N - 1 cannot be factored


def check(log, cid, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  AC{cid:<2} {title}: {detail}"
    print(line)
    log.append(line)
    assert ok, line


def _clear_caches():
    from pcmono import dedekind, integers, irreducibility

    dedekind.is_monogenic.cache_clear()
    irreducibility.q_irreducibility_ladder.cache_clear()
    integers._factorize_cached.cache_clear()


def test_ac01_intro_quartic(acceptance_log):
    _clear_caches()
    t0 = time.perf_counter()
    f = IntPoly.from_text("1,21,86,21,1")
    mono = is_monogenic(f).verdict
    pirr = is_p_irreducible(f, 37)
    r = pc_verdict(f, 37)
    elapsed = time.perf_counter() - t0
    ok = (
        mono is Verdict.MONOGENIC
        and pirr.established
        and (r.pi_p, r.pi_p2) == (137, 137)
        and r.verdict is Verdict.NOT_MONOGENIC
        and elapsed < 5.0
    )
    detail = f"f {mono.value}, 37-irreducible {pirr.value}, pi={r.pi_p}/{r.pi_p2}, {r.verdict.value}, {elapsed:.2f}s"
    check(acceptance_log, 1, "x^4+21x^3+86x^2+21x+1 at p=37", ok, detail)


QUADRATIC_ROWS = {
    (3, 8): {5, 13, 22, 23, 24, 31, 32, 41, 49, 50},
    (5, 12): {7, 8, 18, 43, 44},
    (7, 16): {25},
    (11, 8): {19, 20},
    (11, 24): {5},
}


def test_ac02_quadratic_scan(acceptance_log):
    expected = {(k, p, pi) for (p, pi), ks in QUADRATIC_ROWS.items() for k in ks}
    t0 = time.perf_counter()
    rows = scan("quadratic", {"k": range(1, 51)}, primes_upto(11))
    elapsed = time.perf_counter() - t0
    found = {(r.params["k"], r.report.p, r.report.pi_p) for r in not_monogenic_rows(rows)}
    missing = sorted(expected - found)
    extra = sorted(found - expected)
    ok = not missing and not extra and elapsed < 120
    detail = f"{len(found)} rows, missing (k,p,pi)={missing}, extra={extra}, {elapsed:.1f}s"
    check(acceptance_log, 2, "x^2-kx-1, valid 1<=k<=50, p<=11", ok, detail)


def test_ac03_aoki_quartic_scan(acceptance_log):
    expected = {(-2, 7, -70, 25), (-2, 7, -21, 25), (-2, 7, 20, 50), (-2, 7, 69, 50)}
    expected |= {(2, 5, k, 13) for k in range(-100, 101) if k % 25 == 8}
    expected |= {(2, 5, k, 26) for k in range(-100, 101) if k % 25 == 16}
    t0 = time.perf_counter()
    rows = scan("aoki_quartic", {"k": range(-100, 101), "d": (-2, 2)}, primes_upto(97))
    elapsed = time.perf_counter() - t0
    found = {(r.params["d"], r.report.p, r.params["k"], r.report.pi_p) for r in not_monogenic_rows(rows)}
    unknown = sum(r.report.verdict is Verdict.UNKNOWN for r in rows)
    ok = found == expected and elapsed < 30 * 60
    detail = (
        f"{len(rows)} rows, {len(found)} NotMonogenic (expected {len(expected)}), "
        f"missing={sorted(expected - found)}, extra={sorted(found - expected)}, unknown={unknown}, {elapsed:.0f}s"
    )
    check(acceptance_log, 3, "Aoki-Kishi quartics, -100<=k<=100, p<=97", ok, detail)


def _quadratic_43_run(limit):
    f = IntPoly.from_text("1,-11,-43")
    problems = []
    pis = {}
    checked = 0
    for p in primes_upto(limit):
        r = pc_verdict(f, p)
        if not r.p_irreducible.established:
            continue
        checked += 1
        pis[p] = (r.pi_p, r.pi_p2)
        if p in (2, 5):
            if r.verdict is not Verdict.NOT_MONOGENIC:
                problems.append((p, r.verdict.value))
        elif r.verdict is not Verdict.MONOGENIC or r.pi_p2 != p * r.pi_p:
            problems.append((p, r.verdict.value, r.pi_p, r.pi_p2))
    return pis, problems, checked


def test_ac04_quadratic_43(acceptance_log):
    pis, problems, checked = _quadratic_43_run(50)
    ok = pis.get(2) == (3, 3) and pis.get(5) == (24, 24) and not problems
    detail = f"pi(2)/pi(4)={pis.get(2)}, pi(5)/pi(25)={pis.get(5)}, {checked} p-irreducible p<=50, problems={problems}"
    check(acceptance_log, 4, "x^2-11x-43, p<=50", ok, detail)


@pytest.mark.slow
def test_ac04_quadratic_43_extended(acceptance_log):
    pis, problems, checked = _quadratic_43_run(313)
    ok = pis.get(2) == (3, 3) and pis.get(5) == (24, 24) and not problems
    check(acceptance_log, "4+", "x^2-11x-43, p<=313", ok, f"{checked} p-irreducible p, problems={problems}")


def test_ac05_quintics(acceptance_log):
    t0 = time.perf_counter()
    bad = []
    for q in (47, 59, 67, 71, 79, 83):
        r = pc_verdict(instantiate("cm_quintic", {"q": q}).poly, 2)
        if (r.pi_p, r.pi_p2, r.verdict) != (31, 31, Verdict.NOT_MONOGENIC):
            bad.append((q, r.pi_p, r.pi_p2, r.verdict.value))
    tested = []
    for q in (53, 61, 73, 89, 97):
        inst = instantiate("cm_quintic", {"q": q})
        if not inst.valid:
            continue
        tested.append(q)
        r = pc_verdict(inst.poly, 2)
        if r.verdict is not Verdict.MONOGENIC:
            bad.append((q, r.verdict.value))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    check(acceptance_log, 5, "x^5+34x^4+9x^3+q at p=2", ok, f"valid monogenic-side q={tested}, failures={bad}, {elapsed:.2f}s")


def test_ac06_sextics(acceptance_log):
    t0 = time.perf_counter()
    ps = primes_upto(97)
    rows = scan("nyjm_sextic", {"rho": ps}, ps)
    viable = [r for r in rows if r.report.f_monogenic is Verdict.MONOGENIC and r.report.p_irreducible.established]
    found = sorted((r.params["rho"], r.report.p, r.report.pi_p2) for r in viable if r.report.verdict is Verdict.NOT_MONOGENIC)
    elapsed = time.perf_counter() - t0
    expected = [(5, 5, 18), (13, 23, 36), (67, 47, 144)]
    ok = len(viable) == 121 and found == expected and elapsed < 30 * 60
    check(acceptance_log, 6, "x^6+(180rho-1)x^3+1, rho,p<=97", ok, f"{len(viable)} viable pairs, NotMonogenic {found}, {elapsed:.1f}s")


def test_ac07_period_properties(acceptance_log):
    rng = random.Random(7)
    primes = primes_upto(23)
    failures = []
    pairs = brute = 0
    while pairs < 300:
        n = rng.randint(2, 5)
        f = IntPoly([rng.randint(-20, 20) for _ in range(n)] + [1])
        p = rng.choice(primes)
        if f.coeffs[0] % p == 0 or not is_irreducible_fp(reduce_mod(f, p)):
            continue
        pairs += 1
        pi_p = period_mod_p(f, p).period
        pi_p2 = period_mod_p2(f, p, pi_p).period
        ok = (p**n - 1) % pi_p == 0 and pi_p2 in (pi_p, p * pi_p) and pi_p % p != 0
        ok = ok and galois_ring_test(f, p) == (pi_p2 == pi_p)
        if ok and pi_p2 <= 10**6:
            brute += 1
            ok = period_bruteforce(f, p, 10**6).period == pi_p and period_bruteforce(f, p * p, 10**6).period == pi_p2
        if not ok:
            failures.append((f.to_text(), p))
    check(acceptance_log, 7, "period properties, 300 random (f,p)", not failures, f"{brute} brute-force comparisons, failures={failures[:5]}")


def test_ac08_discriminant_power_formula(acceptance_log):
    rng = random.Random(8)
    failures = []
    unit_failures = 0
    for i in range(100):
        n = rng.randint(2, 4)
        f = IntPoly([rng.randint(-20, 20) for _ in range(n)] + [1])
        p = (2, 3, 5, 7)[i % 4]
        lhs = abs(discriminant(f.compose_power(p)))
        rhs = p ** (p * n) * abs(discriminant(f)) ** p
        if lhs != rhs:
            failures.append((f.to_text(), p))
            unit_failures += abs(f.coeffs[0]) == 1
    detail = (
        f"{len(failures)}/100 cases violate |disc f(x^p)| = p^(pN)|disc f|^p "
        f"({unit_failures} of them with |f(0)|=1), first: {failures[:3]}"
    )
    check(acceptance_log, 8, "composed discriminant formula", not failures, detail)


def test_ac09_dedekind_consistency(acceptance_log):
    rng = random.Random(9)
    pairs = []
    disagreements = []
    while len(pairs) < 50:
        n = rng.randint(2, 5)
        f = IntPoly([rng.randint(-10, 10) for _ in range(n)] + [1])
        p = rng.choice([q for q in primes_upto(30) if q * n <= 60])
        if f.coeffs[0] % p == 0 or not is_irreducible_fp(reduce_mod(f, p)):
            continue
        if is_monogenic(f).verdict is not Verdict.MONOGENIC:
            continue
        if not is_p_irreducible(f, p).established:
            continue
        pairs.append((f, p))
        pc = pc_verdict(f, p, degree_cap=0)
        direct = is_monogenic(f.compose_power(p), q_irreducibility_ladder(f, p))
        if direct.verdict is not pc.verdict:
            disagreements.append((f.to_text(), p, pc.verdict.value, direct.verdict.value, direct.index_primes))
    detail = f"{len(disagreements)}/50 disagreements, first: {disagreements[:3]}"
    check(acceptance_log, 9, "Dedekind on f(x^p) vs period verdict", not disagreements, detail)


def _monic_polys(q, degree):
    for tail in itertools.product(range(q), repeat=degree):
        yield ModPoly(list(reversed(tail)) + [1], q)


def _irreducible_by_search(f):
    q = f.modulus
    return not any((f % g).is_zero() for d in range(1, f.degree // 2 + 1) for g in _monic_polys(q, d))


def test_ac10_kernels(acceptance_log):
    failures = []

    rng = random.Random(10)
    for i in range(500):
        q = (2, 3, 5, 7, 13)[i % 5]
        coeffs = [rng.randrange(q) for _ in range(rng.randint(1, 9))]
        coeffs[-1] = rng.randrange(1, q)
        f = ModPoly(coeffs, q)
        fac = factor_fq(f, seed=i)
        if fac.product() != f or not all(is_irreducible_fp(g) for g, _ in fac.factors):
            failures.append(("factor_fq", f.to_text(), q))

    for q in (2, 3):
        for degree in range(1, 7):
            for f in _monic_polys(q, degree):
                if is_irreducible_fp(f) != _irreducible_by_search(f):
                    failures.append(("is_irreducible_fp", f.to_text(), q))

    limit = 10**6
    sieve = set(primes_upto(limit))
    square_free = bytearray([1]) * (limit + 1)
    for d in range(2, math.isqrt(limit) + 1):
        square_free[d * d :: d * d] = bytes(len(range(d * d, limit + 1, d * d)))
    for n in range(1, limit + 1):
        fm = factorize(n)
        if not isinstance(fm, FactorMap) or fm.value() != n or not all(p in sieve for p in fm.entries):
            failures.append(("factorize", n))
        if is_squarefree(n) != bool(square_free[n]):
            failures.append(("is_squarefree", n))
        if is_prime(n) != (n in sieve):
            failures.append(("is_prime", n))
    check(acceptance_log, 10, "kernel suites", not failures, f"{len(failures)} failures, first: {failures[:5]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
