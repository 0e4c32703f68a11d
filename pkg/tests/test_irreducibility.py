import random

import pytest
import sympy

from pcmono.intpoly import IntPoly
from pcmono.irreducibility import integer_roots, q_irreducibility_ladder
from pcmono.pc import is_p_irreducible
from pcmono.status import Tri

X = sympy.Symbol("x")
P = IntPoly.from_text


def sympy_irreducible(f):
    return sympy.Poly(list(reversed(f.coeffs)), X).is_irreducible


@pytest.mark.parametrize("p", [1, 2, 3, 5, 7, 13])
def test_sqf0_for_squarefree_constant(p):
    r = q_irreducibility_ladder(P("1,-11,-43"), p)
    assert r.established
    if p > 1:
        assert r.provenance.startswith("SQF0")


def test_sqf0_for_quintic():
    for q in (47, 53, 89):
        r = q_irreducibility_ladder(P(f"1,34,9,0,0,{q}"), 3)
        assert r.established and r.provenance.startswith("SQF0")


def test_modq_when_constant_is_unit():
    r = q_irreducibility_ladder(P("1,-5,-1"), 3)
    assert r.established and r.provenance.startswith("MODQ")
    assert sympy_irreducible(P("1,-5,-1").compose_power(3))


def test_refuted_by_integer_root():
    r = q_irreducibility_ladder(P("1,0,-1"), 3)
    assert r.refuted
    assert is_p_irreducible(P("1,0,-1"), 3).refuted


def test_cube_is_not_irreducible_after_composition():
    # x^2 - 8 is irreducible, but 8 is a cube so x^6 - 8 = (x^2 - 2)(...)
    f = P("1,0,-8")
    assert q_irreducibility_ladder(f, 1).established
    assert q_irreducibility_ladder(f, 3).value is not Tri.ESTABLISHED


def test_integer_roots():
    assert integer_roots(P("1,-3,2")) == ([1, 2], True)
    assert integer_roots(P("1,0,1")) == ([], True)


def test_p_irreducible_examples():
    assert is_p_irreducible(P("1,21,86,21,1"), 37).established
    assert is_p_irreducible(P("1,-5,-1"), 2).established
    assert is_p_irreducible(P("1,-5,-1"), 5).refuted  # x^2 - 1 mod 5 splits


def test_ladder_never_contradicts_sympy():
    rng = random.Random(99)
    decided = 0
    for _ in range(200):
        f = IntPoly([rng.randint(-12, 12) for _ in range(rng.randint(2, 4))] + [1])
        p = rng.choice((1, 2, 3, 5))
        r = q_irreducibility_ladder(f, p)
        if r.value is Tri.UNKNOWN:
            continue
        decided += 1
        assert r.established == sympy_irreducible(f.compose_power(p)), (f, p, r)
    assert decided > 150
