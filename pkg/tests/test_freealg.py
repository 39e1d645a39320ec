import random
from fractions import Fraction as F

import pytest

from qpainleve.freealg import (
    AlphabetMismatch,
    NcPoly,
    commutator,
    cyclic_derivative,
    cyclic_reduce,
    match_up_to_unit,
    min_rotation,
    ncpoly_from_json,
    ncpoly_to_json,
    substitute_scale,
)
from qpainleve.rewrite import MonomialOrder
from qpainleve.scalars import S_ONE, qpow, rat, var

G = ("X1", "X2", "X3")
q = var("q")


def X(i):
    return NcPoly.gen(i, G)


def W(d):
    return NcPoly(G, {tuple(k): v for k, v in d.items()})


def test_mul_basic():
    assert X(0) * X(1) == W({(0, 1): 1})
    prod = (X(0) * X(1) - X(1) * X(0) * q) * X(2)
    assert len(prod.terms) == 2


def test_alphabet_mismatch():
    other = NcPoly(("Y1", "Y2", "Y3"), {(0,): S_ONE})
    with pytest.raises(AlphabetMismatch):
        X(0) + other


def test_compatibility_identity_expands_to_zero():
    br = [X(0) * X(1) - X(1) * X(0) * q,
          X(1) * X(2) - X(2) * X(1) * q,
          X(2) * X(0) - X(0) * X(2) * q]
    lhs = br[0] * X(2) + br[1] * X(0) + br[2] * X(1)
    rhs = X(2) * br[0] + X(0) * br[1] + X(1) * br[2]
    assert (lhs - rhs).is_zero()


def test_commutator():
    assert commutator(X(0), X(0)).is_zero()
    assert commutator(X(0), X(1)) == W({(0, 1): 1, (1, 0): -1})
    assert commutator(NcPoly.scalar(var("Om1"), G), X(0)).is_zero()


def test_cyclic_reduce():
    assert cyclic_reduce(W({(0, 1, 2): 1, (2, 0, 1): -1})).is_zero()
    red = cyclic_reduce(W({(1, 0, 2): 1}))
    assert list(red.terms) == [min_rotation((1, 0, 2))]
    rng = random.Random(1)
    fs = []
    for _ in range(2):
        fs.append(W({tuple(rng.randrange(3) for _ in range(rng.randrange(1, 4))): rng.randrange(1, 5)
                     for _ in range(3)}))
    assert cyclic_reduce(commutator(fs[0], fs[1])).is_zero()


def test_cyclic_derivative_examples():
    phi = cyclic_reduce(W({(0, 1, 2): 1, (1, 0, 2): -q}))
    assert cyclic_derivative(phi, 0) == W({(1, 2): 1, (2, 1): -q})
    assert cyclic_derivative(cyclic_reduce(W({(0, 0): 1})), 0) == W({(0,): 2})


def test_derivative_linear_and_euler():
    rng = random.Random(3)
    deg = 3
    phi = cyclic_reduce(W({tuple(rng.randrange(3) for _ in range(deg)): rng.randrange(1, 7)
                           for _ in range(5)}))
    total = None
    for j in range(3):
        piece = cyclic_reduce(X(j) * cyclic_derivative(phi, j))
        total = piece if total is None else total + piece
    assert total == phi.scale(rat(deg))


def test_derivatives_match_relations_up_to_unit():
    # the quantized-cubic potential reproduces its relations with unit q^(1/2)
    from qpainleve import catalog

    p = catalog.preset("uz", kind="PVI")
    order = MonomialOrder(G)
    d3 = cyclic_derivative(p.potential, 2)
    u = match_up_to_unit(d3, p.relations.relations[0], order)
    assert u == qpow(F(1, 2))


def test_substitute_scale():
    f = W({(0, 1): 1})
    out = substitute_scale(f, gen_shifts={0: 1})
    assert out == W({(0, 1): var("eps")})
    assert substitute_scale(f, gen_shifts={}) == f


def test_substitute_scale_degeneration_relation():
    # scaling Y1 by eps^2, Y3 by eps: the Y3^2 relation keeps coefficient 1
    # and the Y1 tail of the middle relation acquires eps
    Y = ("Y1", "Y2", "Y3")

    def WY(d):
        return NcPoly(Y, {tuple(k): v for k, v in d.items()})

    rel3 = WY({(0, 1): 1, (1, 0): -q, (2, 2): -1})
    scaled = substitute_scale(rel3, gen_shifts={0: 2, 2: 1})
    eps = var("eps")
    assert scaled == WY({(0, 1): eps ** 2, (1, 0): -q * eps ** 2, (2, 2): -eps ** 2})
    normalized = scaled.scale(eps ** -2)
    assert normalized.map_coeffs(lambda c: c.limit("eps", "zero_plus")) == rel3

    rel2 = WY({(1, 2): 1, (2, 1): -q, (0,): -1})
    scaled2 = substitute_scale(rel2, gen_shifts={0: 2, 2: 1}).scale(eps ** -1)
    limit2 = scaled2.map_coeffs(lambda c: c.limit("eps", "zero_plus"))
    assert limit2 == WY({(1, 2): 1, (2, 1): -q})


def test_substitute_scale_parameters():
    f = NcPoly.scalar(var("lam"), G)
    out = substitute_scale(f, param_shifts={"lam": -2})
    assert out == NcPoly.scalar(var("lam") * var("eps") ** -2, G)


def test_associativity_random():
    rng = random.Random(9)

    def rand():
        return W({tuple(rng.randrange(3) for _ in range(rng.randrange(0, 3))): rng.randrange(1, 9)
                  for _ in range(3)})

    for _ in range(8):
        f, g, h = rand(), rand(), rand()
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_json_round_trip():
    f = W({(0, 1): q, (2,): rat(3), (): qpow(F(1, 2))})
    assert ncpoly_from_json(ncpoly_to_json(f)) == f
