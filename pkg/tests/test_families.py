import random

import pytest

from pcmono.dedekind import is_monogenic
from pcmono.errors import MissingParam, UnknownFamily
from pcmono.families import FAMILY_PARAMS, ScanRow, instantiate, not_monogenic_rows, param_grid, scan
from pcmono.intpoly import IntPoly, discriminant
from pcmono.status import Verdict


def test_examples():
    q5 = instantiate("quadratic", {"k": 5})
    assert q5.poly == IntPoly.from_text("1,-5,-1") and q5.D_value == 29 and q5.valid
    a = instantiate("aoki_quartic", {"k": 2, "d": -2})
    assert a.poly == IntPoly([1, -10, 25 + 2 + 2, -10, 1])
    c = instantiate("cm_quintic", {"q": 47})
    assert c.poly == IntPoly.from_text("1,34,9,0,0,47") and c.valid


def test_invalid_instances_are_inspectable():
    inst = instantiate("quadratic", {"k": 8})
    assert not inst.valid and inst.conditions == {"k>=1": True, "k!=0 mod 4": False, "D squarefree": True}
    assert not instantiate("cm_quintic", {"q": 7}).valid
    assert not instantiate("shanks_cubic", {"k": 3}).valid


def test_errors():
    with pytest.raises(UnknownFamily):
        instantiate("septic", {"k": 1})
    with pytest.raises(MissingParam):
        instantiate("aoki_quartic", {"k": 1})


def _valid_samples(family, draw, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        inst = instantiate(family, draw(rng))
        if inst.valid:
            out.append(inst)
    return out


def test_quadratic_discriminant():
    for inst in _valid_samples("quadratic", lambda r: {"k": r.randint(1, 10**6)}, 50, 1):
        assert discriminant(inst.poly) == inst.params["k"] ** 2 + 4


def test_aoki_discriminant():
    draw = lambda r: {"k": r.randint(-10**4, 10**4), "d": r.choice((-2, 2))}
    for inst in _valid_samples("aoki_quartic", draw, 50, 2):
        assert discriminant(inst.poly) == 64 * inst.D_value


def test_schopp_discriminant():
    draw = lambda r: {"k": r.randint(-10**4, 3), "b": r.choice((-1, 1))}
    for inst in _valid_samples("schopp_quartic", draw, 50, 3):
        k, b = inst.params["k"], inst.params["b"]
        assert discriminant(inst.poly) == (k * k + 4 * b) ** 2 * (4 * k - 16 * b + 1)


DRAWS = {
    "quadratic": lambda r: {"k": r.randint(1, 500)},
    "shanks_cubic": lambda r: {"k": r.randint(1, 500)},
    "aoki_quartic": lambda r: {"k": r.randint(-200, 200), "d": r.choice((-2, 2))},
    "schopp_quartic": lambda r: {"k": r.randint(-500, 3), "b": r.choice((-1, 1))},
    "cm_quintic": lambda r: {"q": r.choice((47, 53, 59, 67, 71, 79, 83, 89, 97, 101, 103, 107))},
}


@pytest.mark.parametrize("family", sorted(DRAWS))
def test_valid_instances_are_monogenic(family):
    for inst in _valid_samples(family, DRAWS[family], 15, 7):
        assert is_monogenic(inst.poly).verdict is Verdict.MONOGENIC, inst


def test_sextic_is_gated_by_monogenicity():
    verdicts = {rho: is_monogenic(instantiate("nyjm_sextic", {"rho": rho}).poly).verdict for rho in (2, 3, 5, 31)}
    assert verdicts == {2: Verdict.NOT_MONOGENIC, 3: Verdict.MONOGENIC, 5: Verdict.MONOGENIC, 31: Verdict.NOT_MONOGENIC}


def test_param_grid_order():
    grid = param_grid("aoki_quartic", {"k": [1, 2], "d": [-2, 2]})
    assert grid == [{"k": 1, "d": -2}, {"k": 1, "d": 2}, {"k": 2, "d": -2}, {"k": 2, "d": 2}]
    assert set(FAMILY_PARAMS) == {"quadratic", "shanks_cubic", "aoki_quartic", "schopp_quartic", "cm_quintic", "nyjm_sextic"}


def test_scan_is_ordered_and_worker_independent():
    ranges = {"k": range(1, 30)}
    serial = scan("shanks_cubic", ranges, [2, 3, 5, 7, 11])
    parallel = scan("shanks_cubic", ranges, [2, 3, 5, 7, 11], workers=3)
    assert serial == parallel
    keys = [(r.params["k"], r.report.p) for r in serial]
    assert keys == sorted(keys)


def test_scan_rows_round_trip():
    rows = scan("quadratic", {"k": range(1, 12)}, [3, 5, 7, 11])
    assert rows and all(ScanRow.from_dict(r.to_dict()) == r for r in rows)
    assert [(r.params["k"], r.report.p) for r in not_monogenic_rows(rows)] == [(5, 3), (5, 11), (7, 5)]


@pytest.mark.slow
def test_schopp_scan_has_no_upsilon_primes():
    rows = scan("schopp_quartic", {"k": range(-4999, -4), "b": [-1]}, [2, 3, 5, 7, 11, 13, 17])
    assert rows
    assert not_monogenic_rows(rows) == []
    assert all(r.report.verdict is Verdict.MONOGENIC and r.report.consistent for r in rows)
