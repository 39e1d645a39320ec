"""The acceptance suite: one callable per criterion, shared by the test
module and the CLI's report-all command.

Every check is exact (rational/Laurent arithmetic); probabilistic checks run
T seeded trials and record the seed and draws.  Each criterion returns a
CriterionResult with pass/fail, timing, and enough detail to reproduce.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import catalog
from .freealg import NcPoly, cyclic_derivative, match_up_to_unit
from .idealtools import RelationSet, central_by_ideal, contains, filtered_dims, find_potential, graded_dims
from .poisson import PoissonStructure, classical_limit, poisson_checks, scale_limit, diagonal_transform
from .qtorus import painleve_data, shear_relations, verify_painleve
from .rewrite import MonomialOrder, orient
from .scalars import Scalar, qpow, random_rational, rat, var
from .sheardata import PAINLEVE_TYPES

H = Fraction(1, 2)
BINOMIALS = [1, 3, 6, 10, 15, 21, 28]


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    elapsed: float
    details: dict = field(default_factory=dict)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} criterion {self.number:2d}: {self.title} ({self.elapsed:.1f}s)"

    def to_json(self):
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "details": self.details,
        }


def _timed(number, title, fn):
    t0 = time.time()
    passed, details = fn()
    return CriterionResult(number, title, passed, time.time() - t0, details)


def _draw_binds(rng, names):
    return {n: random_rational(rng) for n in names}


def _uz_binds(rng):
    """Random specialization of the quantized-cubic parameters keeping the
    square root of q rational (q is drawn as a square)."""
    r = random_rational(rng, -9, 9)
    return {
        "q": rat(r * r), "eps1": 1, "eps2": 1, "eps3": 1,
        "Om1": random_rational(rng, -9, 9),
        "Om2": random_rational(rng, -9, 9),
        "Om3": random_rational(rng, -9, 9),
    }


# -- criteria ----------------------------------------------------------------


def criterion_1():
    def run():
        details = {}
        ok = True
        for kind in PAINLEVE_TYPES:
            p = catalog.preset("uz", kind=kind)
            rs = p.rewrite_system()
            rs.confluence_check(6)
            good, _ = rs.central_by_rewrite(p.central["omega4"])
            details[kind] = good
            ok = ok and good
        return ok, details
    return _timed(1, "cubic Casimir central for all ten types (symbolic)", run)


def criterion_2(seed=0):
    def run():
        p = catalog.preset("uz", kind="PVI")
        rs = p.rewrite_system()
        rep = rs.confluence_check(6)
        rng = random.Random(seed)
        binds = _uz_binds(rng)
        dims = filtered_dims(p.relations.specialize(binds), 5)
        ok = rep.status == "confluent" and dims == BINOMIALS[:6]
        return ok, {"confluence": rep.status, "filtered_dims": dims.dims,
                    "seed": seed, "binds": {k: str(v) for k, v in binds.items()}}
    return _timed(2, "PBW: confluence at bound 6 and filtered dims", run)


def criterion_3():
    def run():
        p = catalog.preset("uz", kind="PVI")
        ders = [cyclic_derivative(p.potential, j) for j in range(3)]
        pairing = None
        units = None
        for sigma in permutations(range(3)):
            us = [match_up_to_unit(ders[j], p.relations.relations[sigma[j]], p.order)
                  for j in range(3)]
            if all(u is not None for u in us):
                pairing, units = sigma, [str(u) for u in us]
                break
        found = find_potential(p.relations)
        recovered = False
        unit = None
        if found:
            phi, lams, sig2 = found
            diff_unit = None
            for w, c in p.potential.terms.items():
                if w in phi.terms:
                    diff_unit = c / phi.terms[w]
                    break
            if diff_unit is not None and phi.scale(diff_unit) == p.potential:
                recovered = True
                unit = str(diff_unit)
        ok = pairing is not None and recovered
        return ok, {"derivative_pairing": pairing, "units": units,
                    "potential_recovered": recovered, "recovery_unit": unit}
    return _timed(3, "potential consistency (derivatives and reconstruction)", run)


def criterion_4():
    def run():
        gens = ("X1", "X2", "X3")
        q = var("q")
        X = [NcPoly.gen(i, gens) for i in range(3)]
        br = [X[0] * X[1] - X[1] * X[0] * q,
              X[1] * X[2] - X[2] * X[1] * q,
              X[2] * X[0] - X[0] * X[2] * q]
        lhs = br[0] * X[2] + br[1] * X[0] + br[2] * X[1]
        rhs = X[2] * br[0] + X[0] * br[1] + X[1] * br[2]
        first = (lhs - rhs).is_zero()
        qmh, q3h = qpow(-H), qpow(Fraction(3, 2))
        e = [var("eps1"), var("eps2"), var("eps3")]
        o = [var("Om1"), var("Om2"), var("Om3")]
        L = [X[2] * ((qmh - q3h) * e[2]) - NcPoly.scalar((1 - q) * o[2], gens),
             X[0] * ((qmh - q3h) * e[0]) - NcPoly.scalar((1 - q) * o[0], gens),
             X[1] * ((qmh - q3h) * e[1]) - NcPoly.scalar((1 - q) * o[1], gens)]
        second = (L[0] * X[2] + L[1] * X[0] + L[2] * X[1]
                  - X[2] * L[0] - X[0] * L[1] - X[1] * L[2]).is_zero()
        return first and second, {"quadratic_identity": first, "linear_identity": second}
    return _timed(4, "free-algebra compatibility identities", run)


def criterion_5(seed=0, trials=5):
    def run():
        p = catalog.preset("eg")
        z = p.central["omega_eg"]
        rng = random.Random(seed)
        names = ["q", "t", "a1", "a2", "b1", "b2", "c1", "c2"]
        results = []
        ok = True
        for k in range(trials):
            binds = _draw_binds(rng, names)
            rs = p.relations.specialize(binds)
            zz = z.map_coeffs(lambda c: c.specialize(binds))
            good, det = central_by_ideal(rs, zz, bound=4, margin=2)
            ok = ok and good
            results.append({"binds": {k2: str(v) for k2, v in binds.items()},
                            "central": good})
        return ok, {"seed": seed, "trials": results,
                    "verdict": "central (generic, %d witnesses)" % trials if ok else "failed"}
    return _timed(5, "deformed-cubic Casimir central (5 seeded trials)", run)


def _t_part(f, k, binds, gens):
    from .scalars import p_vars

    out = {}
    for w, c in f.terms.items():
        assert "t" not in p_vars(c.den)
        sel = {}
        for m, co in c.num.items():
            d = dict(m)
            e = d.pop("t", 0)
            if e == k:
                sel[tuple(sorted(d.items()))] = co
        if sel:
            out[w] = Scalar(sel, c.den).specialize(binds)
    return NcPoly(gens, out)


def criterion_6(seed=0, trials=3):
    """The embedding limit: expanding the deformed-cubic Casimir under the
    quantized-cubic parameter map in powers of t, the constant term is
    a1*a2*q^2 modulo the ideal and the certificate-corrected linear term is
    (1+q)(q^3-1)sqrt(q) times the cubic Casimir; separately the t=0 Casimir
    is central and equals (q^2-1)sqrt(q) times the cubic Casimir exactly."""
    def run():
        gens = ("X1", "X2", "X3")
        q = var("q")
        qh = qpow(H)
        eg = catalog.preset("eg")
        spec = catalog.specialisation_bindings(t_value=None)
        rels_spec = [r.map_coeffs(lambda c: c.specialize(spec))
                     for r in eg.relations.relations]
        a1a2 = (var("a1") * var("a2")).specialize(spec)
        g_sym = (eg.central["omega_eg"].map_coeffs(lambda c: c.specialize(spec))
                 - NcPoly.scalar(a1a2 * (q * q + var("t") ** 3), gens))
        uzp = catalog.preset("uz")  # universal: epsilons stay symbolic
        om4 = uzp.central["omega4"]
        rng = random.Random(seed)
        ok = True
        trial_info = []
        for k in range(trials):
            binds = _uz_binds(rng)
            r0s = [_t_part(r, 0, binds, gens) for r in rels_spec]
            r1s = [_t_part(r, 1, binds, gens) for r in rels_spec]
            g0 = _t_part(g_sym, 0, binds, gens)
            g1 = _t_part(g_sym, 1, binds, gens)
            rs0 = RelationSet(gens, r0s)
            v, cert, span = contains(rs0, g0, 4, 2, keep_certificates=True)
            stage1 = v == "yes"
            stage2 = False
            if stage1:
                corr = NcPoly.zero(gens)
                for (ri, u, vv, c) in cert:
                    corr = corr + NcPoly(gens, {u + w + vv: cc
                                                for w, cc in r1s[ri].terms.items()}).scale(c)
                beta = ((1 + q) * (q ** 3 - 1) * qh).specialize(binds)
                diff = (g1 - corr) - om4.map_coeffs(lambda c: c.specialize(binds)).scale(beta)
                v2, _, _ = contains(rs0, diff, 4, 2, span=span)
                stage2 = v2 == "yes"
            ok = ok and stage1 and stage2
            trial_info.append({"constant_term": stage1, "linear_term": stage2})
        # t=0 element: central symbolically and equal to (q^2-1)sqrt(q)*Omega4
        rels_t0 = [r.map_coeffs(lambda c: c.specialize({"t": 0}))
                   for r in eg.relations.relations]
        rs0s = orient(rels_t0, MonomialOrder(gens))
        rs0s.confluence_check(6)
        egt0 = eg.central["omega_eg_t0"]
        central_t0, _ = rs0s.central_by_rewrite(egt0)
        spec0 = catalog.specialisation_bindings(t_value=0)
        equal_exact = (egt0.map_coeffs(lambda c: c.specialize(spec0))
                       - om4.scale((q * q - 1) * qh)).is_zero()
        ok = ok and central_t0 and equal_exact
        return ok, {"seed": seed, "trials": trial_info,
                    "t0_central_symbolic": central_t0,
                    "t0_equals_unit_times_omega4": equal_exact,
                    "linear_term_unit": "(1+q)(q^3-1)sqrt(q)"}
    return _timed(6, "embedding limit of the deformed-cubic Casimir", run)


def criterion_7(seed=0, trials=5):
    def run():
        rng = random.Random(seed)
        geg = catalog.preset("geg")
        z = geg.central["omega_geg"]
        ok = True
        info = {"geg": [], "lbw": []}
        names = ["q", "alpha", "beta", "a1", "a2", "b1", "b2", "c1", "c2"]
        for k in range(trials):
            binds = _draw_binds(rng, names)
            binds["gamma"] = Fraction(0)
            rs = geg.relations.specialize(binds)
            zz = z.map_coeffs(lambda c: c.specialize(binds))
            good, _ = central_by_ideal(rs, zz, bound=4, margin=2)
            ok = ok and good
            info["geg"].append(good)
        lbw = catalog.preset("lbw")
        zl = lbw.central["omega_lbw"]
        for k in range(trials):
            binds = {"q": random_rational(rng), "gamma": random_rational(rng)}
            rs = lbw.relations.specialize(binds)
            zz = zl.map_coeffs(lambda c: c.specialize(binds))
            good, _ = central_by_ideal(rs, zz, bound=4, margin=2)
            ok = ok and good
            info["lbw"].append(good)
        return ok, {"seed": seed, **info}
    return _timed(7, "generalized and conformal Casimirs central (ideal method)", run)


def criterion_8():
    def run():
        od = catalog.preset("odesskii")
        rs = od.rewrite_system()
        rs.confluence_check(6)
        central, _ = rs.central_by_rewrite(od.central["omega_q"])
        # transport onto the rotated-rescaled presentation
        images = catalog.odesskii_to_molrag_images()
        mol = catalog.preset("molrag")
        order = od.order
        from .freealg import substitute_gens

        def norm(f):
            return f.scale(f.terms[order.leading_word(f)].inv())

        transported = {norm(substitute_gens(r, images))
                       for r in od.relations.relations}
        targets = {norm(r) for r in mol.relations.relations}
        transport = transported == targets
        # q -> 1 limit of the rotated Casimir is the Markov cubic
        omt = mol.central["omega_tilde_o"].map_coeffs(lambda c: c.specialize({"q": 1}))
        markov = catalog.poisson_preset("markov_classical").phi
        as_comm = {}
        for w, c in omt.terms.items():
            m = [0, 0, 0]
            for i in w:
                m[i] += 1
            as_comm[tuple(m)] = as_comm.get(tuple(m), rat(0)) + c
        from .poisson import CommPoly
        markov_ok = CommPoly(markov.vars, as_comm) == markov
        ok = central and transport and markov_ok
        return ok, {"omega_q_central_symbolic": central,
                    "rotation_transport_exact": transport,
                    "markov_limit": markov_ok}
    return _timed(8, "Sklyanin-type algebra: Casimir, transport, Markov limit", run)


def criterion_9():
    def run():
        ok = True
        details = {}
        for kind in PAINLEVE_TYPES:
            data = painleve_data(kind)
            rq = verify_painleve(kind, "quantum", data)
            rc = verify_painleve(kind, "classical", data)
            details[kind] = {"quantum": rq["passed"], "classical": rc["passed"]}
            ok = ok and rq["passed"] and rc["passed"]
        return ok, details
    return _timed(9, "shear realizations verify (quantum and classical, 10 types)", run)


def criterion_10():
    def run():
        data = painleve_data("PVI").rescaled({"p3": -2})
        rels = shear_relations(data)
        flags = [r.is_zero() for r in rels]
        return all(flags), {"relations_zero_in_eps": flags}
    return _timed(10, "relations persist under the confluence rescaling", run)


def criterion_11():
    def run():
        ok = True
        details = {}
        for kind in PAINLEVE_TYPES:
            p = catalog.preset("uz", kind=kind)
            rs = p.rewrite_system()
            rs.confluence_check(6)
            table = classical_limit(rs, vars=("x1", "x2", "x3"))
            phi = catalog.poisson_preset(f"monodromy_{kind}").phi
            target = PoissonStructure(phi).coordinate_brackets()
            good = table == target
            details[kind] = good
            ok = ok and good
        for pid, sign in (("vertex1", -1), ("vertex2", 1)):
            p = catalog.preset(pid)
            rs = p.rewrite_system()
            rs.confluence_check(6)
            table = classical_limit(rs, vars=("y1", "y2", "y3"))
            target = catalog.bracket_table(p.classical_id).scale(rat(sign))
            good = table == target
            details[pid] = good
            ok = ok and good
        return ok, details
    return _timed(11, "semiclassical limits match the Jacobian brackets", run)


def criterion_12(seed=0):
    def run():
        rng = random.Random(seed)
        p = catalog.preset("genskl")

        def dims(binds):
            return graded_dims(p.relations.specialize(binds), 5)

        a = random_rational(rng)
        case1 = dims({"a": a, "b": a, "c": a,
                      "alpha": random_rational(rng), "beta": random_rational(rng),
                      "gamma": random_rational(rng)})
        a = random_rational(rng)
        case2 = dims({"a": a, "b": a, "c": random_rational(rng),
                      "alpha": 0, "beta": 0, "gamma": random_rational(rng)})
        case5 = dims({"a": random_rational(rng), "b": random_rational(rng),
                      "c": random_rational(rng), "alpha": 0, "beta": 0, "gamma": 0})
        neg = dims({n: random_rational(rng)
                    for n in ("a", "b", "c", "alpha", "beta", "gamma")})
        target = BINOMIALS[:6]
        dev = next((k for k in range(6) if neg.dims[k] != target[k]), None)
        ok = (case1 == target and case2 == target and case5 == target
              and dev is not None and dev <= 4)
        return ok, {"seed": seed, "case1": case1.dims, "case2": case2.dims,
                    "case5": case5.dims, "generic": neg.dims,
                    "first_deviating_degree": dev}
    return _timed(12, "polynomial Hilbert series classification", run)


def criterion_13():
    def run():
        details = {}
        ok = True
        for pid, cname in (("vertex1", "omega_v1"), ("vertex2", "omega_v2"),
                           ("vcone", "omega_m1"), ("vcone_deg", "omega_inf")):
            p = catalog.preset(pid)
            rs = p.rewrite_system()
            rep = rs.confluence_check(6)
            good, _ = rs.central_by_rewrite(p.central[cname])
            details[pid] = {"confluent": rep.status == "confluent", "central": good}
            ok = ok and good and rep.status == "confluent"
        # solved rescaling carries the vcone relations onto the vertex1 ones
        src = catalog.preset("vcone")
        dst = catalog.preset("vertex1")
        lambdas = catalog.solve_generator_rescaling(
            src.relations.relations, dst.relations.relations, dst.order, qsub=-1)
        order = dst.order

        def norm(f):
            return f.scale(f.terms[order.leading_word(f)].inv())

        match = all(
            norm(catalog.apply_generator_rescaling(r, lambdas, qsub=-1)) in
            {norm(g) for g in dst.relations.relations}
            for r in src.relations.relations
        )
        details["rescaling_constants"] = {f"Y{i + 1}": str(lambdas[i]) for i in range(3)}
        details["vcone_maps_to_vertex1"] = match
        ok = ok and match
        return ok, details
    return _timed(13, "vertex quantizations: Casimirs and the solved transport", run)


def criterion_14():
    def run():
        details = {}
        ok = True
        # Hesse degeneration
        r, _ = catalog.rescaling("hesse")
        hesse = catalog.poisson_preset("hesse")
        lim, _ = scale_limit(hesse, r)
        Y = ("y1", "y2", "y3")
        from .poisson import comm_from_dict
        target = comm_from_dict(Y, {(0, 3, 0): Fraction(1, 3), (1, 1, 1): 1})
        good = lim.phi == target
        tab, rep = scale_limit(PoissonStructure(hesse.phi).coordinate_brackets(), r)
        good_tab = tab == catalog.bracket_table("hesse_degenerate")
        details["hesse"] = {"potential": good, "brackets": good_tab,
                            "bracket_normalization": str(rep["normalization"])}
        ok = ok and good and good_tab
        # weighted degenerations with frozen diagonal matches
        for name, target_phi, target_table in (
            ("weighted_213", "phi_213_0", "grosstheta1"),
            ("weighted_112", "phi_112_0", "nodcub_3"),
        ):
            r, diag = catalog.rescaling(name)
            src = catalog.poisson_preset("phi_213" if name == "weighted_213" else "phi_112")
            lim, _ = scale_limit(src, r)
            coeffs, lam = diag
            transformed = diagonal_transform(lim.phi, coeffs, lam)
            tphi = catalog.poisson_preset(target_phi).phi
            good = transformed == tphi
            # bracket side: the Jacobian table of the transformed potential
            tt = PoissonStructure(transformed).coordinate_brackets()
            good_tab = tt == catalog.bracket_table(target_table)
            # internal consistency: the limit of the bracket table is the
            # Jacobian table of the limit potential up to one rational scalar
            raw_tab, _ = scale_limit(PoissonStructure(src.phi).coordinate_brackets(), r)
            nam = PoissonStructure(lim.phi).coordinate_brackets()
            scalar = None
            for key in raw_tab.PAIRS:
                a, b = raw_tab.entries[key], nam.entries[key]
                if not a.is_zero() and not b.is_zero():
                    w0 = next(iter(a.terms))
                    if w0 in b.terms:
                        scalar = a.terms[w0] / b.terms[w0]
                        break
            consistent = scalar is not None and raw_tab == nam.scale(scalar)
            details[name] = {"potential_matches": good, "brackets_match": good_tab,
                             "jacobian_persistence": consistent,
                             "diagonal": [str(c) for c in coeffs], "scale": str(lam)}
            ok = ok and good and good_tab and consistent
        # mass rescalings
        for name, target_phi, target_table in (
            ("mass1", "skl_mass_limit1", "nodcub2"),
            ("mass2", "skl_mass_limit2", "nodcub3"),
        ):
            r, _ = catalog.rescaling(name)
            src = catalog.poisson_preset("skl_mass")
            lim, _ = scale_limit(src, r)
            good = lim.phi == catalog.poisson_preset(target_phi).phi
            tab, _ = scale_limit(PoissonStructure(src.phi).coordinate_brackets(), r)
            good_tab = tab == catalog.bracket_table(target_table)
            details[name] = {"potential_matches": good, "brackets_match": good_tab}
            ok = ok and good and good_tab
        return ok, details
    return _timed(14, "rescaling degenerations reproduce the stated limits", run)


def criterion_15():
    def run():
        details = {}
        ok = True
        for pid in catalog.poisson_ids():
            rep = poisson_checks(catalog.poisson_preset(pid))
            details[pid] = rep["passed"]
            ok = ok and rep["passed"]
        return ok, details
    return _timed(15, "Poisson structural suite (Jacobi, Casimir, unimodularity)", run)


ALL_CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
    criterion_11, criterion_12, criterion_13, criterion_14, criterion_15,
]


def run_all(numbers=None, log=print):
    results = []
    for k, fn in enumerate(ALL_CRITERIA, start=1):
        if numbers and k not in numbers:
            continue
        res = fn()
        results.append(res)
        if log:
            log(res.line())
    return results
