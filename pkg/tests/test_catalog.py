import random
from fractions import Fraction as F
from itertools import permutations

import pytest

from qpainleve import catalog
from qpainleve.freealg import cyclic_derivative, match_up_to_unit, substitute_gens
from qpainleve.qtorus import painleve_data
from qpainleve.scalars import qpow, rat, var
from qpainleve.sheardata import PAINLEVE_TYPES

q = var("q")


def test_all_presets_instantiate():
    for pid in catalog.algebra_ids():
        p = catalog.preset(pid) if pid != "uz" else catalog.preset("uz", kind="PVI")
        assert p.relations.relations
    for pid in catalog.poisson_ids():
        catalog.poisson_preset(pid)
    with pytest.raises(catalog.UnknownPreset):
        catalog.preset("nope")


def test_three_relations_for_three_generators():
    for pid in catalog.algebra_ids():
        p = catalog.preset(pid) if pid != "uz" else catalog.preset("uz", kind="PVI")
        if len(p.gens) == 3:
            assert len(p.relations.relations) == 3, pid


def test_every_potential_reproduces_relations():
    for pid in catalog.algebra_ids():
        p = catalog.preset(pid) if pid != "uz" else catalog.preset("uz", kind="PVI")
        if p.potential is None:
            continue
        ders = [cyclic_derivative(p.potential, j) for j in range(len(p.gens))]
        matched = False
        for sigma in permutations(range(3)):
            units = [match_up_to_unit(ders[j], p.relations.relations[sigma[j]], p.order)
                     for j in range(3)]
            if all(u is not None for u in units):
                matched = True
                break
        assert matched, pid


def test_omega_from_g_examples():
    g1, g2, g3, gi = var("g1"), var("g2"), var("g3"), var("ginf")
    w1, w2, w3, w4 = catalog.omega_from_g(g1, g2, g3, gi, (0, 0, 0))
    assert w1 == -g1 * gi
    assert w4 == gi ** 2 + g1 * g2 * g3 * gi
    vals = catalog.omega_from_g(rat(1), rat(1), rat(0), rat(1), (0, 0, 0))
    assert [v.as_rational() for v in vals] == [-1, -1, 0, 1]
    vals2 = catalog.omega_from_g(rat(2), rat(2), rat(2), rat(2), (1, 1, 1))
    assert vals2[3].as_rational() == 28


def test_uz_preset_types_and_epsilons():
    p = catalog.preset("uz", kind="PVI")
    rel = p.relations.relations[0]
    # the X3 tail carries (q^-1 - q) * eps3 with eps3 = 1 for this type
    assert rel.terms[(2,)] == -(q ** -1 - q)
    p0 = catalog.preset("uz", kind="PI")
    assert (2,) not in p0.relations.relations[0].terms


def test_uz_geometric_omega_mode():
    p = catalog.preset("uz", kind="PVI", omega_mode="geometric")
    coeffs = p.relations.relations[0].terms[()]
    assert {"g1", "g2", "ginf"} & coeffs.vars()


def test_specialisation_embeds_uz_into_deformed_cubic():
    eg = catalog.preset("eg")
    uz = catalog.preset("uz")  # universal, symbolic epsilons
    spec = catalog.specialisation_bindings(t_value=0)
    specialized = [r.map_coeffs(lambda c: c.specialize(spec))
                   for r in eg.relations.relations]
    order = eg.order
    unit = qpow(F(1, 2))
    targets = {}
    for r in uz.relations.relations:
        lw = order.leading_word(r)
        targets[lw] = r
    for r in specialized:
        lw = order.leading_word(r)
        target = targets[lw]
        u = match_up_to_unit(r, target, order)
        assert u == unit


def test_res_o_transport_is_exact():
    od = catalog.preset("odesskii")
    mol = catalog.preset("molrag")
    images = catalog.odesskii_to_molrag_images()
    order = od.order

    def norm(f):
        return f.scale(f.terms[order.leading_word(f)].inv())

    transported = {norm(substitute_gens(r, images)) for r in od.relations.relations}
    assert transported == {norm(r) for r in mol.relations.relations}


def test_markov_limit():
    mol = catalog.preset("molrag")
    omt = mol.central["omega_tilde_o"].map_coeffs(lambda c: c.specialize({"q": 1}))
    from qpainleve.poisson import CommPoly

    as_comm = {}
    for w, c in omt.terms.items():
        m = [0, 0, 0]
        for i in w:
            m[i] += 1
        as_comm[tuple(m)] = as_comm.get(tuple(m), rat(0)) + c
    markov = catalog.poisson_preset("markov_classical").phi
    assert CommPoly(markov.vars, as_comm) == markov


def test_solved_transport_constants():
    src = catalog.preset("vcone")
    dst = catalog.preset("vertex1")
    lams = catalog.solve_generator_rescaling(
        src.relations.relations, dst.relations.relations, dst.order, qsub=-1)
    s1 = qpow(F(1, 2)) - qpow(F(-3, 2))
    s2 = q - q ** -2
    assert lams[1] == rat(1)
    assert lams[2] == s1 * s2
    assert lams[0] == s1 * s1 * s2

    order = dst.order

    def norm(f):
        return f.scale(f.terms[order.leading_word(f)].inv())

    target_set = {norm(g) for g in dst.relations.relations}
    for r in src.relations.relations:
        assert norm(catalog.apply_generator_rescaling(r, lams, qsub=-1)) in target_set


def test_degenerate_sklyanin_presets():
    eq = catalog.preset("degenerate_sklyanin_eq")
    assert all(len(r.terms) == 1 for r in eq.relations.relations)
    neq = catalog.preset("degenerate_sklyanin_neq")
    assert {next(iter(r.terms)) for r in neq.relations.relations} == {(0, 1), (1, 2), (2, 0)}


def test_weighted_potentials_generate_relations():
    for pid in ("weighted_potential_e7", "weighted_potential_e8"):
        p = catalog.preset(pid)
        assert p.potential is not None
        assert not p.central  # no stored Casimir for these families
        degs = {r.degree() for r in p.relations.relations}
        assert max(degs) >= 3


def test_manifest_and_shear_data_agree():
    m = catalog.manifest()
    assert set(m["painleve_types"]) == set(PAINLEVE_TYPES)
    assert "uz" in m["algebras"] and m["algebras"]["uz"]["has_potential"]
    for kind in PAINLEVE_TYPES:
        data = painleve_data(kind)
        assert data.epsilons == tuple(__import__("qpainleve.sheardata",
                                                 fromlist=["EPSILONS"]).EPSILONS[kind])
