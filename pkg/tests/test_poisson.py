import random
from fractions import Fraction as F

import pytest

from qpainleve import catalog
from qpainleve.freealg import NcPoly
from qpainleve.poisson import (
    BracketTable,
    CommPoly,
    PoissonStructure,
    Rescaling,
    WrongArity,
    chebyshev_cubic,
    chebyshev_t,
    classical_limit,
    comm_from_dict,
    commpoly_from_json,
    commpoly_to_json,
    diagonal_transform,
    poisson_checks,
    scale_limit,
)
from qpainleve.rewrite import orient
from qpainleve.scalars import rat, var

X = ("x1", "x2", "x3")
Y = ("y1", "y2", "y3")


def P(d, vars=X):
    return comm_from_dict(vars, d)


def test_nambu_examples():
    om3 = var("Om3")
    pvi = catalog.poisson_preset("monodromy_PVI")
    x1 = CommPoly.variable("x1", X)
    x2 = CommPoly.variable("x2", X)
    assert pvi.nambu(x1, x2) == P({(1, 1, 0): 1, (0, 0, 1): -2, (0, 0, 0): om3})
    hesse = catalog.poisson_preset("hesse")
    assert hesse.nambu(x1, x2) == P({(0, 0, 2): 1, (1, 1, 0): var("tau")})
    f = P({(1, 2, 0): 3, (0, 0, 1): 1})
    assert hesse.nambu(f, f).is_zero()


def test_wrong_arity():
    with pytest.raises(WrongArity):
        PoissonStructure(comm_from_dict(("x1", "x2"), {(1, 1): 1}))


def test_poisson_checks_pass():
    for pid in ("monodromy_PVI", "vertex_phi2", "hesse"):
        assert poisson_checks(catalog.poisson_preset(pid))["passed"]
    linear = PoissonStructure(P({(1, 0, 0): 1}), "linear")
    assert poisson_checks(linear)["passed"]


def test_classical_limit_uz_matches_nambu():
    p = catalog.preset("uz", kind="PVI")
    rs = p.rewrite_system()
    rs.confluence_check(6)
    table = classical_limit(rs, vars=X)
    target = PoissonStructure(catalog.poisson_preset("monodromy_PVI").phi)
    assert table == target.coordinate_brackets()


def test_classical_limit_skew_is_cluster():
    rs = catalog.preset("skew").rewrite_system()
    rs.confluence_check(6)
    assert classical_limit(rs, vars=X) == catalog.bracket_table("cluster")


def test_classical_limit_prescaled_vacuum_relations():
    # lam, m_i, d_i carry a factor (1-q) so the limit exists; the resulting
    # table is the Jacobian-type table of the total classical potential.
    # the presentation is not confluent (quadratic tails), so the ideal
    # fallback computes the normal forms.
    from qpainleve.idealtools import RelationSet
    from qpainleve.poisson import classical_limit_ideal

    p = catalog.preset("deformvac")
    q = var("q")
    vals = {"lam": F(3, 5), "m1": F(2), "m2": F(-1, 3),
            "d1": F(1, 2), "d2": F(-2), "d3": F(4, 7)}
    binds = {n: (1 - q) * rat(v) for n, v in vals.items()}
    rels = RelationSet(p.gens, [r.map_coeffs(lambda c: c.specialize(binds))
                                for r in p.relations.relations])
    table = classical_limit_ideal(rels, vars=X)
    lam, m1, m2 = vals["lam"], vals["m1"], vals["m2"]
    d1, d2, d3 = vals["d1"], vals["d2"], vals["d3"]
    expected = BracketTable(X, {
        (0, 1): P({(1, 1, 0): 1, (0, 0, 2): lam, (0, 0, 1): m2, (0, 0, 0): d3}),
        (1, 2): P({(0, 1, 1): 1, (2, 0, 0): lam, (1, 0, 0): m1, (0, 0, 0): d1}),
        (2, 0): P({(1, 0, 1): 1, (0, 2, 0): lam, (0, 1, 0): m2, (0, 0, 0): d2}),
    })
    assert table == expected


def test_scale_limit_hesse():
    r, _ = catalog.rescaling("hesse")
    lim, _ = scale_limit(catalog.poisson_preset("hesse"), r)
    assert lim.phi == P({(0, 3, 0): F(1, 3), (1, 1, 1): 1}, Y)
    tab, rep = scale_limit(
        PoissonStructure(catalog.poisson_preset("hesse").phi).coordinate_brackets(), r)
    assert tab == catalog.bracket_table("hesse_degenerate")
    assert rep["normalization"] == 2


def test_scale_limit_divergence_detected():
    from qpainleve.scalars import DivergentLimit

    bad = Rescaling(variables={"x1": (1, -1, "y1"), "x2": (1, 0, "y2"),
                               "x3": (1, 0, "y3")})
    with pytest.raises(DivergentLimit):
        scale_limit(catalog.poisson_preset("hesse"), bad)


def test_scale_limit_mass_rescalings():
    src = catalog.poisson_preset("skl_mass")
    r1, _ = catalog.rescaling("mass1")
    lim1, _ = scale_limit(src, r1)
    assert lim1.phi == catalog.poisson_preset("skl_mass_limit1").phi
    r2, _ = catalog.rescaling("mass2")
    lim2, _ = scale_limit(src, r2)
    assert lim2.phi == catalog.poisson_preset("skl_mass_limit2").phi
    tab1, _ = scale_limit(PoissonStructure(src.phi).coordinate_brackets(), r1)
    assert tab1 == catalog.bracket_table("nodcub2")
    tab2, _ = scale_limit(PoissonStructure(src.phi).coordinate_brackets(), r2)
    assert tab2 == catalog.bracket_table("nodcub3")


def test_limits_stay_jacobian():
    # after rescaling, the potential limit still passes the structural suite
    for name, source in (("hesse", "hesse"), ("mass1", "skl_mass"),
                         ("weighted_213", "phi_213"), ("weighted_112", "phi_112")):
        r, _ = catalog.rescaling(name)
        lim, _ = scale_limit(catalog.poisson_preset(source), r)
        assert poisson_checks(lim)["passed"]


def test_diagonal_transform_weighted_cases():
    r, diag = catalog.rescaling("weighted_213")
    lim, _ = scale_limit(catalog.poisson_preset("phi_213"), r)
    coeffs, lam = diag
    assert diagonal_transform(lim.phi, coeffs, lam) == catalog.poisson_preset("phi_213_0").phi
    r, diag = catalog.rescaling("weighted_112")
    lim, _ = scale_limit(catalog.poisson_preset("phi_112"), r)
    coeffs, lam = diag
    assert diagonal_transform(lim.phi, coeffs, lam) == catalog.poisson_preset("phi_112_0").phi


def test_chebyshev():
    assert chebyshev_t(2) == [F(-1), F(0), F(2)]
    assert chebyshev_t(3) == [F(0), F(-3), F(0), F(4)]
    cubic = chebyshev_cubic(1, -1, -1, -1)
    w = var("w")
    assert cubic == P({(1, 1, 1): 1, (1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1,
                       (0, 0, 0): -w})
    # n = 3 with the same roots still has rational coefficients
    chebyshev_cubic(3, -1, -1, -1)


def test_commpoly_json_round_trip():
    f = P({(1, 1, 1): var("tau"), (0, 0, 2): rat(F(1, 2))})
    assert commpoly_from_json(commpoly_to_json(f)) == f
