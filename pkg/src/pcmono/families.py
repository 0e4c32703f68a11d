"""Parametrized polynomial families and table scans over them.

Family names and parameter keys (part of the CLI contract):

================  ===========  ==================================================
family            params       polynomial
================  ===========  ==================================================
quadratic         k            x^2 - k x - 1
shanks_cubic      k            x^3 - k x^2 - (k+3) x - 1
aoki_quartic      k, d         x^4 - 2(2k+1) x^3 + ((2k+1)^2 - d + 2) x^2 - 2(2k+1) x + 1
schopp_quartic    k, b         x^4 - k x^3 + b(k-1) x^2 + 2b^2 x - b^3
cm_quintic        q            x^5 + 34 x^4 + 9 x^3 + q
nyjm_sextic       rho          x^6 + (180 rho - 1) x^3 + 1
================  ===========  ==================================================
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import MissingParam, UnknownFamily
from .integers import is_prime, is_squarefree
from .intpoly import IntPoly, discriminant
from .modpoly import is_irreducible_fp, reduce_mod
from .pc import PCReport, pc_verdict

FAMILY_PARAMS = {
    "quadratic": ("k",),
    "shanks_cubic": ("k",),
    "aoki_quartic": ("k", "d"),
    "schopp_quartic": ("k", "b"),
    "cm_quintic": ("q",),
    "nyjm_sextic": ("rho",),
}


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: dict
    poly: IntPoly
    D_value: int
    conditions: dict

    @property
    def valid(self) -> bool:
        return all(self.conditions.values())


def _quadratic(k):
    d = (k * k + 4) // math.gcd(2, k) ** 2
    poly = IntPoly([-1, -k, 1])
    cond = {"k>=1": k >= 1, "k!=0 mod 4": k % 4 != 0, "D squarefree": bool(is_squarefree(d))}
    return poly, d, cond


def _shanks(k):
    d = (k * k + 3 * k + 9) // math.gcd(3, k) ** 2
    poly = IntPoly([-1, -(k + 3), -k, 1])
    cond = {"k>=1": k >= 1, "k!=3 mod 9": k % 9 != 3, "D squarefree": bool(is_squarefree(d))}
    return poly, d, cond


def _aoki(k, d):
    if d not in (-2, 2):
        raise ValueError("aoki_quartic needs d in {-2, 2}")
    a = 2 * k + 1
    poly = IntPoly([1, -2 * a, a * a - d + 2, -2 * a, 1])
    D = (4 * k * k - 4 * k - d + 1) * (4 * k * k + 12 * k - d + 9)
    cond = {"D squarefree": bool(is_squarefree(D)) if D else False, "D>=1024": D >= 1024}
    return poly, D, cond


def _schopp(k, b):
    if b not in (-1, 1):
        raise ValueError("schopp_quartic needs b in {-1, 1}")
    poly = IntPoly([-(b**3), 2 * b * b, b * (k - 1), -k, 1])
    D = (k * k + 4 * b) * (4 * k - 16 * b + 1)
    cond = {
        "k range": (b == 1 and k <= 3) or (b == -1 and k <= -5),
        "D squarefree": bool(is_squarefree(D)) if D else False,
    }
    return poly, D, cond


def _cm_quintic(q):
    poly = IntPoly([q, 0, 0, 9, 34, 1])
    D = (q + 3542940) * (3125 * q - 56)
    cond = {
        "q prime": is_prime(q),
        "q does not divide 1120": q == 0 or 1120 % q != 0,
        "q>44": q > 44,
        "D squarefree": bool(is_squarefree(D)) if D else False,
    }
    return poly, D, cond


def _nyjm(rho):
    poly = IntPoly([1, 0, 0, 180 * rho - 1, 0, 0, 1])
    # no separate D in this family; the discriminant stands in for it
    return poly, discriminant(poly), {"rho prime": is_prime(rho)}


_BUILDERS = {
    "quadratic": _quadratic,
    "shanks_cubic": _shanks,
    "aoki_quartic": _aoki,
    "schopp_quartic": _schopp,
    "cm_quintic": _cm_quintic,
    "nyjm_sextic": _nyjm,
}


def instantiate(family: str, params: dict) -> FamilyInstance:
    if family not in _BUILDERS:
        raise UnknownFamily(family)
    keys = FAMILY_PARAMS[family]
    missing = [k for k in keys if k not in params]
    if missing:
        raise MissingParam(f"{family} needs {', '.join(missing)}")
    values = {k: int(params[k]) for k in keys}
    poly, D, cond = _BUILDERS[family](**values)
    return FamilyInstance(family, values, poly, D, cond)


@dataclass(frozen=True)
class ScanRow:
    family: str
    params: dict
    report: PCReport

    def to_dict(self):
        d = self.report.to_dict()
        d["family"] = self.family
        d["params"] = dict(self.params)
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["family"], dict(d["params"]), PCReport.from_dict(d))


def _rows_for(args):
    family, params, primes, options = args
    inst = instantiate(family, params)
    rows = []
    if not inst.valid:
        return rows
    for p in primes:
        if not is_irreducible_fp(reduce_mod(inst.poly, p)):
            continue
        report = pc_verdict(inst.poly, p, **options)
        if report.p_irreducible.refuted:
            continue
        rows.append(ScanRow(family, inst.params, report))
    return rows


def param_grid(family: str, ranges: dict) -> list[dict]:
    """Cartesian product of per-parameter iterables, in key order."""
    keys = FAMILY_PARAMS[family]
    missing = [k for k in keys if k not in ranges]
    if missing:
        raise MissingParam(f"{family} needs ranges for {', '.join(missing)}")
    return [dict(zip(keys, combo)) for combo in itertools.product(*(list(ranges[k]) for k in keys))]


def scan(family: str, param_ranges: dict, primes, options: dict | None = None, workers: int = 1) -> list[ScanRow]:
    """pc_verdict for every valid instance and every prime where f is irreducible.

    Rows whose p-irreducibility is refuted are dropped; rows where it is
    undecided stay in with verdict Unknown.  Output is ordered by the
    parameter grid, then by p, regardless of ``workers``.
    """
    if family not in _BUILDERS:
        raise UnknownFamily(family)
    options = dict(options or {})
    primes = sorted(primes)
    jobs = [(family, params, primes, options) for params in param_grid(family, param_ranges)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_rows_for, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        chunks = [_rows_for(job) for job in jobs]
    return [row for chunk in chunks for row in chunk]


def not_monogenic_rows(rows):
    return [r for r in rows if r.report.verdict.value == "NotMonogenic"]
