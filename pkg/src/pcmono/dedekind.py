"""Dedekind's index criterion and the monogenicity decision.

For monic irreducible T and a prime q, write T mod q = prod t_i^e_i, let g be
the product of the distinct t_i, h = T/g (mod q), both lifted with
coefficients in [0, q), and F = (g h - T)/q.  Then q divides the index
[Z_K : Z[theta]] exactly when gcd(F, g, h) mod q is nonconstant.  Only primes
whose square divides disc(T) can divide the index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NonExactDivision, NotMonic
from .integers import DEFAULT_EFFORT, FactorMap, Incomplete, factorize, is_squarefree
from .intpoly import IntPoly, composed_discriminant, discriminant
from .irreducibility import PRIME_BUDGET, q_irreducibility_ladder
from .modpoly import ModPoly, _require_prime, factor_fq, gcd_fp, radical_fp, reduce_mod
from .status import Tri, TriState, Verdict


@dataclass(frozen=True)
class DedekindReport:
    q: int
    g_bar: ModPoly
    h_bar: ModPoly
    F_bar: ModPoly
    gcd_poly: ModPoly
    divides_index: bool

    def to_dict(self):
        return {
            "q": self.q,
            "g_bar": self.g_bar.to_text(),
            "h_bar": self.h_bar.to_text(),
            "F_bar": self.F_bar.to_text(),
            "gcd": self.gcd_poly.to_text(),
            "divides_index": self.divides_index,
        }

    @classmethod
    def from_dict(cls, d):
        q = d["q"]

        def poly(text):
            return reduce_mod(IntPoly.from_text(text), q)

        return cls(q, poly(d["g_bar"]), poly(d["h_bar"]), poly(d["F_bar"]), poly(d["gcd"]), d["divides_index"])


def dedekind_at(T: IntPoly, q: int, seed: int | None = None) -> DedekindReport:
    """Run Dedekind's criterion for monic T at the prime q.

    By default the radical of T mod q comes from its squarefree
    decomposition.  With a ``seed`` it is instead assembled from the seeded
    Cantor-Zassenhaus factorization; both give the same polynomial.
    """
    if not T.is_monic():
        raise NotMonic("Dedekind's criterion needs a monic polynomial")
    _require_prime(q)
    t_bar = reduce_mod(T, q)
    if seed is None:
        g_bar = radical_fp(t_bar)
    else:
        g_bar = factor_fq(t_bar, seed).radical()
    h_bar, rem = divmod(t_bar, g_bar)
    if not rem.is_zero():
        raise NonExactDivision("radical does not divide T mod q")
    g, h = g_bar.lift(), h_bar.lift()
    try:
        F = (g * h - T).exact_div(q)
    except ValueError as exc:
        raise NonExactDivision(str(exc)) from None
    F_bar = reduce_mod(F, q)
    common = gcd_fp(gcd_fp(F_bar, g_bar), h_bar)
    return DedekindReport(q, g_bar, h_bar, F_bar, common, common.degree >= 1)


def _fm_to_dict(fm):
    if fm is None:
        return None
    if isinstance(fm, Incomplete):
        return {"sign": fm.resolved.sign, "entries": {str(p): e for p, e in fm.resolved.entries.items()}, "cofactor": fm.cofactor}
    return {"sign": fm.sign, "entries": {str(p): e for p, e in fm.entries.items()}}


def _fm_from_dict(d):
    if d is None:
        return None
    fm = FactorMap(d["sign"], {int(p): e for p, e in d["entries"].items()})
    if "cofactor" in d:
        return Incomplete(fm, d["cofactor"])
    return fm


@dataclass(frozen=True)
class MonogenicityReport:
    poly: IntPoly
    discriminant: int
    disc_factorization: FactorMap | Incomplete | None
    critical_primes: tuple[tuple[int, DedekindReport], ...]
    verdict: Verdict
    irreducibility_status: TriState
    notes: tuple[str, ...] = field(default=())

    @property
    def index_primes(self) -> list[int]:
        return [q for q, r in self.critical_primes if r.divides_index]

    def to_dict(self):
        return {
            "kind": "monogenicity",
            "poly": self.poly.to_text(),
            "discriminant": self.discriminant,
            "disc_factorization": _fm_to_dict(self.disc_factorization),
            "critical_primes": [r.to_dict() for _, r in self.critical_primes],
            "verdict": self.verdict.value,
            "irreducibility": self.irreducibility_status.to_dict(),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d):
        crit = tuple((r["q"], DedekindReport.from_dict(r)) for r in d["critical_primes"])
        return cls(
            IntPoly.from_text(d["poly"]),
            d["discriminant"],
            _fm_from_dict(d["disc_factorization"]),
            crit,
            Verdict(d["verdict"]),
            TriState.from_dict(d["irreducibility"]),
            tuple(d.get("notes", ())),
        )


def _decide(T, disc, fm, irreducibility) -> MonogenicityReport:
    notes = []
    if disc == 0:
        return MonogenicityReport(T, 0, None, (), Verdict.NOT_MONOGENIC, irreducibility, ("zero discriminant",))

    if isinstance(fm, FactorMap):
        candidates = [q for q, e in fm.entries.items() if e >= 2]
        complete = True
    else:
        candidates = [q for q, e in fm.resolved.entries.items() if e >= 2]
        # the cofactor's primes all exceed the trial-division limit
        complete = bool(is_squarefree(fm.cofactor))
        if not complete:
            notes.append(f"unresolved cofactor {fm.cofactor} may hide an index prime")

    reports = tuple((q, dedekind_at(T, q)) for q in sorted(candidates))
    if any(r.divides_index for _, r in reports):
        verdict = Verdict.NOT_MONOGENIC
    elif irreducibility.refuted:
        verdict = Verdict.NOT_MONOGENIC
        notes.append("reducible over Q")
    elif not complete or not irreducibility.established:
        verdict = Verdict.UNKNOWN
    else:
        verdict = Verdict.MONOGENIC
    return MonogenicityReport(T, disc, fm, reports, verdict, irreducibility, tuple(notes))


@lru_cache(maxsize=4096)
def is_monogenic(
    f: IntPoly,
    irreducibility_hint: TriState | None = None,
    prime_budget: int = PRIME_BUDGET,
    effort_bound: int = DEFAULT_EFFORT,
) -> MonogenicityReport:
    """Decide whether monic f is monogenic.

    A squarefree discriminant settles it without Dedekind; otherwise every
    prime q with q^2 | disc(f) is checked.
    """
    f.require_characteristic()
    if irreducibility_hint is None or irreducibility_hint.value is Tri.UNKNOWN:
        irreducibility_hint = q_irreducibility_ladder(f, 1, prime_budget)
    disc = discriminant(f)
    fm = factorize(disc, effort_bound) if disc else None
    return _decide(f, disc, fm, irreducibility_hint)


def _merge(sign, parts):
    """Combine factorizations of the pieces of a product of powers."""
    entries: dict[int, int] = {}
    cofactor = 1
    for fm, k in parts:
        if isinstance(fm, Incomplete):
            cofactor *= fm.cofactor**k
            fm = fm.resolved
        for q, e in fm.entries.items():
            entries[q] = entries.get(q, 0) + e * k
    out = FactorMap(sign, dict(sorted(entries.items())))
    return out if cofactor == 1 else Incomplete(out, cofactor)


def is_monogenic_composed(
    f: IntPoly,
    p: int,
    irreducibility_hint: TriState | None = None,
    prime_budget: int = PRIME_BUDGET,
    effort_bound: int = DEFAULT_EFFORT,
) -> MonogenicityReport:
    """is_monogenic for T = f(x^p) without factoring disc(T) from scratch.

    disc(T) = +-p^(Np) f(0)^(p-1) disc(f)^p, so its factorization is assembled
    from those of p, f(0) and disc(f).  Dedekind then runs on T itself.
    """
    f.require_characteristic()
    T = f.compose_power(p)
    if irreducibility_hint is None or irreducibility_hint.value is Tri.UNKNOWN:
        irreducibility_hint = q_irreducibility_ladder(f, p, prime_budget)
    disc_f = discriminant(f)
    disc = composed_discriminant(f, p, disc_f)
    if disc == 0:
        return _decide(T, 0, None, irreducibility_hint)
    parts = [(factorize(disc_f, effort_bound), p)]
    if p > 1:
        parts.append((factorize(f.coeffs[0], effort_bound), p - 1))
        parts.append((factorize(p, effort_bound), f.degree * p))
    fm = _merge(1 if disc > 0 else -1, parts)
    return _decide(T, disc, fm, irreducibility_hint)
