"""Monogenicity of power-compositional polynomials f(x^p) via recurrence periods."""

from .dedekind import DedekindReport, MonogenicityReport, dedekind_at, is_monogenic, is_monogenic_composed
from .errors import PcmonoError
from .families import FAMILY_PARAMS, FamilyInstance, ScanRow, instantiate, scan
from .integers import FactorMap, Incomplete, factorize, is_prime, is_squarefree
from .intpoly import IntPoly, discriminant, resultant
from .irreducibility import q_irreducibility_ladder
from .modpoly import ModPoly, factor_fq, is_irreducible_fp, reduce_mod
from .pc import PCReport, is_p_irreducible, pc_verdict
from .recurrence import PeriodReport, companion_matrix, galois_ring_test, period
from .status import Tri, TriState, Verdict

__version__ = "0.1.0"

__all__ = [
    "DedekindReport",
    "FAMILY_PARAMS",
    "FactorMap",
    "FamilyInstance",
    "Incomplete",
    "IntPoly",
    "ModPoly",
    "MonogenicityReport",
    "PCReport",
    "PcmonoError",
    "PeriodReport",
    "ScanRow",
    "Tri",
    "TriState",
    "Verdict",
    "companion_matrix",
    "dedekind_at",
    "discriminant",
    "factor_fq",
    "factorize",
    "galois_ring_test",
    "instantiate",
    "is_irreducible_fp",
    "is_monogenic",
    "is_monogenic_composed",
    "is_p_irreducible",
    "is_prime",
    "is_squarefree",
    "pc_verdict",
    "period",
    "q_irreducibility_ladder",
    "reduce_mod",
    "resultant",
    "scan",
]
