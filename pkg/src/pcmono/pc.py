"""Monogenicity of f(x^p) from the periods of the recurrence attached to f.

Let f be monogenic and p-irreducible (f irreducible mod p and f(x^p)
irreducible over Q).  Then p divides the index of f(x^p) iff
pi(p^2) = pi(p), equivalently iff p does not divide pi(p^2).  A prime with
pi(p^2) = pi(p) is an "upsilon prime" for f (a Wall-Sun-Sun prime when
f = x^2 - x - 1).  The verdict here is the period one: Monogenic iff
pi(p^2) != pi(p).

That verdict only sees the prime p.  disc f(x^p) is
+-p^(Np) f(0)^(p-1) disc(f)^p, so a prime q with q^2 | f(0)^(p-1) can
divide the index too (x^2 - x - 4 at p = 3 has index divisible by 2).  Such
primes are listed in the report notes, and ``dedekind_direct`` catches them
when it runs.

Every verdict is checked three ways when possible:

* ``galois_ring``: f(a^p) = 0 in Z/p^2[x]/(f) must match pi(p^2) = pi(p);
* ``corollary_mod_p``: Monogenic must match pi(p^2) = 0 mod p;
* ``dedekind_direct``: Dedekind's criterion applied to f(x^p) itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dedekind import is_monogenic, is_monogenic_composed
from .errors import PreconditionNotEstablished
from .integers import DEFAULT_EFFORT, FactorMap, factorize
from .intpoly import IntPoly
from .irreducibility import PRIME_BUDGET, q_irreducibility_ladder
from .modpoly import is_irreducible_fp, reduce_mod
from .recurrence import BRUTE_CAP, galois_ring_test, period_mod_p, period_mod_p2
from .status import Tri, TriState, Verdict

DEGREE_CAP = 300

AGREE = "agree"
DISAGREE = "disagree"
SKIPPED = "skipped"
CROSSCHECKS = ("galois_ring", "corollary_mod_p", "dedekind_direct")


def _constant_term_suspects(f, p, effort_bound):
    """Primes q != p with q^2 dividing f(0)^(p-1)."""
    c0 = abs(f.coeffs[0])
    if c0 <= 1:
        return []
    fm = factorize(c0, effort_bound)
    entries = fm.entries if isinstance(fm, FactorMap) else fm.resolved.entries
    out = [q for q, e in entries.items() if q != p and e * (p - 1) >= 2]
    if not isinstance(fm, FactorMap) and p > 2:
        out.append(fm.cofactor)
    return out


def is_p_irreducible(f: IntPoly, p: int, prime_budget: int = PRIME_BUDGET) -> TriState:
    f.require_characteristic()
    if not is_irreducible_fp(reduce_mod(f, p)):
        return TriState(Tri.REFUTED, f"reducible mod {p}")
    ladder = q_irreducibility_ladder(f, p, prime_budget)
    if ladder.established:
        # irreducible of degree >= 2 mod p forces p not to divide f(0)
        assert f.coeffs[0] % p, "p-irreducible f with p | f(0)"
    return ladder


@dataclass(frozen=True)
class PCReport:
    f: IntPoly
    p: int
    irreducible_mod_p: bool
    q_irreducible: TriState
    p_irreducible: TriState
    f_monogenic: Verdict
    pi_p: int | None
    pi_p2: int | None
    upsilon_prime: bool | None
    verdict: Verdict
    crosschecks: dict[str, str] = field(default_factory=dict)
    index_primes: tuple[int, ...] | None = None
    notes: tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return DISAGREE not in self.crosschecks.values()

    def to_dict(self):
        return {
            "kind": "pc",
            "poly": self.f.to_text(),
            "p": self.p,
            "pi_p": self.pi_p,
            "pi_p2": self.pi_p2,
            "upsilon_prime": self.upsilon_prime,
            "verdict": self.verdict.value,
            "crosschecks": dict(self.crosschecks),
            "provenance": {
                "irreducible_mod_p": self.irreducible_mod_p,
                "q_irreducible": self.q_irreducible.to_dict(),
                "p_irreducible": self.p_irreducible.to_dict(),
                "f_monogenic": self.f_monogenic.value,
                "index_primes": None if self.index_primes is None else list(self.index_primes),
                "notes": list(self.notes),
            },
        }

    @classmethod
    def from_dict(cls, d):
        prov = d["provenance"]
        ip = prov.get("index_primes")
        return cls(
            f=IntPoly.from_text(d["poly"]),
            p=d["p"],
            irreducible_mod_p=prov["irreducible_mod_p"],
            q_irreducible=TriState.from_dict(prov["q_irreducible"]),
            p_irreducible=TriState.from_dict(prov["p_irreducible"]),
            f_monogenic=Verdict(prov["f_monogenic"]),
            pi_p=d["pi_p"],
            pi_p2=d["pi_p2"],
            upsilon_prime=d["upsilon_prime"],
            verdict=Verdict(d["verdict"]),
            crosschecks=dict(d["crosschecks"]),
            index_primes=None if ip is None else tuple(ip),
            notes=tuple(prov.get("notes", ())),
        )


def pc_verdict(
    f: IntPoly,
    p: int,
    *,
    prime_budget: int = PRIME_BUDGET,
    degree_cap: int = DEGREE_CAP,
    brute_cap: int = BRUTE_CAP,
    effort_bound: int = DEFAULT_EFFORT,
    monogenic_hint: Verdict | None = None,
    strict: bool = False,
) -> PCReport:
    """Decide monogenicity of f(x^p) from pi(p) and pi(p^2).

    When f is not known to be monogenic and p-irreducible the report comes
    back with verdict Unknown (or PreconditionNotEstablished is raised if
    ``strict``); periods are still filled in whenever f is irreducible mod p.
    """
    f.require_characteristic()
    notes = []
    irr_p = is_irreducible_fp(reduce_mod(f, p))
    q_irr = q_irreducibility_ladder(f, p, prime_budget)
    if not irr_p:
        p_irr = TriState(Tri.REFUTED, f"reducible mod {p}")
    else:
        p_irr = q_irr

    if monogenic_hint is None:
        monogenic_hint = is_monogenic(f, None, prime_budget, effort_bound).verdict

    pi_p = pi_p2 = upsilon = None
    checks = dict.fromkeys(CROSSCHECKS, SKIPPED)
    if irr_p:
        pi_p = period_mod_p(f, p, brute_cap).period
        pi_p2 = period_mod_p2(f, p, pi_p).period
        upsilon = pi_p2 == pi_p
        checks["galois_ring"] = AGREE if galois_ring_test(f, p) == upsilon else DISAGREE

    verdict = Verdict.UNKNOWN
    if monogenic_hint is not Verdict.MONOGENIC:
        notes.append(f"f is not known to be monogenic ({monogenic_hint.value})")
    if not p_irr.established:
        notes.append(f"f is not known to be {p}-irreducible ({p_irr.value}: {p_irr.provenance})")
    if not notes:
        verdict = Verdict.NOT_MONOGENIC if upsilon else Verdict.MONOGENIC

    suspects = _constant_term_suspects(f, p, effort_bound)
    if suspects:
        notes.append(
            f"{suspects} divide disc f(x^{p}) to a square power through f(0)^{p - 1}; "
            "they can divide the index whatever the periods say"
        )

    index_primes = None
    if verdict is not Verdict.UNKNOWN:
        checks["corollary_mod_p"] = AGREE if (verdict is Verdict.MONOGENIC) == (pi_p2 % p == 0) else DISAGREE
        if p * f.degree <= degree_cap:
            direct = is_monogenic_composed(f, p, q_irr, prime_budget, effort_bound)
            index_primes = tuple(direct.index_primes)
            if direct.verdict is not Verdict.UNKNOWN:
                checks["dedekind_direct"] = AGREE if direct.verdict is verdict else DISAGREE
            if checks["dedekind_direct"] == DISAGREE:
                notes.append(f"Dedekind finds index primes {list(index_primes)} for f(x^{p})")

    report = PCReport(
        f, p, irr_p, q_irr, p_irr, monogenic_hint, pi_p, pi_p2, upsilon, verdict, checks, index_primes, tuple(notes)
    )
    if strict and verdict is Verdict.UNKNOWN:
        raise PreconditionNotEstablished("; ".join(notes), report)
    return report
