"""Commutative Poisson side: Nambu brackets, structure checks, semiclassical
limits of quantum presentations, and rescaling degenerations.

A CommPoly is a sparse polynomial in named commuting variables with Scalar
coefficients.  A PoissonStructure is a potential phi on three variables with
the Jacobian (Nambu) bivector {x_i, x_j} = d(phi)/d(x_k); a BracketTable
stores explicit brackets for comparisons and limits.
"""

from __future__ import annotations

from fractions import Fraction

from .freealg import NcPoly
from .scalars import (
    DivergentLimit,
    S_ONE,
    S_ZERO,
    Scalar,
    rat,
    scalar_from_json,
    scalar_to_json,
    var,
)


class WrongArity(ValueError):
    pass


class CommPoly:
    """Sparse commutative polynomial; keys are exponent tuples."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, Scalar):
                    c = rat(c)
                if c.is_zero():
                    continue
                m = tuple(m)
                prev = self.terms.get(m)
                c = c if prev is None else prev + c
                if c.is_zero():
                    self.terms.pop(m, None)
                else:
                    self.terms[m] = c

    @staticmethod
    def zero(vars):
        return CommPoly(vars)

    @staticmethod
    def variable(name, vars):
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return CommPoly(vars, {tuple(e): S_ONE})

    @staticmethod
    def constant(c, vars):
        return CommPoly(vars, {(0,) * len(vars): c})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(m) for m in self.terms), default=None)

    def _check(self, other):
        if self.vars != other.vars:
            raise WrongArity(f"{self.vars} vs {other.vars}")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            c = c if prev is None else prev + c
            if c.is_zero():
                out.pop(m, None)
            else:
                out[m] = c
        return CommPoly(self.vars, out)

    def __neg__(self):
        return CommPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                prev = out.get(m)
                c = c if prev is None else prev + c
                if c.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = c
        return CommPoly(self.vars, out)

    __rmul__ = __mul__

    def scale(self, c):
        if not isinstance(c, Scalar):
            c = rat(c)
        if c.is_zero():
            return CommPoly(self.vars)
        return CommPoly(self.vars, {m: cc * c for m, cc in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, CommPoly):
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return CommPoly.constant(other, self.vars)
        raise TypeError

    def __eq__(self, other):
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def diff(self, name):
        i = self.vars.index(name)
        out = {}
        for m, c in self.terms.items():
            if not m[i]:
                continue
            m2 = list(m)
            m2[i] -= 1
            out[tuple(m2)] = c * rat(m[i])
        return CommPoly(self.vars, out)

    def map_coeffs(self, f):
        return CommPoly(self.vars, {m: f(c) for m, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(m), m)):
            c = self.terms[m]
            body = "*".join(
                (f"{v}^{e}" if e != 1 else v)
                for v, e in zip(self.vars, m) if e
            )
            cs = str(c)
            if not body:
                parts.append(cs)
            elif cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append("-" + body)
            else:
                if any(ch in cs[1:] for ch in "+-") or "/" in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def comm_from_dict(vars, d):
    """Build a CommPoly from {exponent-tuple: coefficient}."""
    return CommPoly(vars, {tuple(m): (c if isinstance(c, Scalar) else rat(c))
                           for m, c in d.items()})


class PoissonStructure:
    """Three-variable Jacobian (Nambu) structure defined by a potential."""

    def __init__(self, phi, name=""):
        if len(phi.vars) != 3:
            raise WrongArity("Nambu structure needs exactly three variables")
        self.phi = phi
        self.vars = phi.vars
        self.name = name

    def nambu(self, f, g):
        """dp ^ dq ^ dphi / dx1 ^ dx2 ^ dx3 as a 3x3 Jacobian determinant."""
        rows = [f, g, self.phi]
        cols = self.vars
        d = [[p.diff(v) for v in cols] for p in rows]
        det = CommPoly.zero(self.vars)
        for sgn, (a, b, c) in (
            (1, (0, 1, 2)), (1, (1, 2, 0)), (1, (2, 0, 1)),
            (-1, (0, 2, 1)), (-1, (2, 1, 0)), (-1, (1, 0, 2)),
        ):
            term = d[0][a] * d[1][b] * d[2][c]
            det = det + (term if sgn > 0 else -term)
        return det

    def coordinate_brackets(self):
        x = [CommPoly.variable(v, self.vars) for v in self.vars]
        return BracketTable(self.vars, {
            (0, 1): self.nambu(x[0], x[1]),
            (1, 2): self.nambu(x[1], x[2]),
            (2, 0): self.nambu(x[2], x[0]),
        })


class BracketTable:
    """Coordinate brackets {x_i, x_j} stored on the cyclic pairs."""

    PAIRS = ((0, 1), (1, 2), (2, 0))

    def __init__(self, vars, entries):
        self.vars = tuple(vars)
        self.entries = {}
        for key, val in entries.items():
            i, j = key
            if (i, j) in self.PAIRS:
                self.entries[(i, j)] = val
            elif (j, i) in self.PAIRS:
                self.entries[(j, i)] = -val
            else:
                raise KeyError(key)
        for p in self.PAIRS:
            self.entries.setdefault(p, CommPoly.zero(self.vars))

    def bracket(self, i, j):
        if (i, j) in self.entries:
            return self.entries[(i, j)]
        return -self.entries[(j, i)]

    def __eq__(self, other):
        if not isinstance(other, BracketTable):
            return NotImplemented
        return self.vars == other.vars and self.entries == other.entries

    def scale(self, c):
        return BracketTable(self.vars, {
            k: v.scale(c) for k, v in self.entries.items()
        })

    def bracket_of(self, f, g):
        """Extend the coordinate table to polynomials by the Leibniz rule."""
        out = CommPoly.zero(self.vars)
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                out = out + f.diff(self.vars[i]) * g.diff(self.vars[j]) * self.bracket(i, j)
        return out

    def jacobi_residuals(self):
        x = [CommPoly.variable(v, self.vars) for v in self.vars]
        res = []
        for i, j, k in ((0, 1, 2),):
            r = (self.bracket_of(x[i], self.bracket_of(x[j], x[k]))
                 + self.bracket_of(x[j], self.bracket_of(x[k], x[i]))
                 + self.bracket_of(x[k], self.bracket_of(x[i], x[j])))
            res.append(r)
        return res

    def __str__(self):
        names = self.vars
        lines = []
        for (i, j) in self.PAIRS:
            lines.append(f"{{{names[i]},{names[j]}}} = {self.entries[(i, j)]}")
        return "; ".join(lines)

    __repr__ = __str__


def nambu(structure, f, g):
    return structure.nambu(f, g)


def poisson_checks(structure):
    """Jacobi on coordinates, the potential as Casimir, and unimodularity."""
    phi = structure.phi
    vars = structure.vars
    x = [CommPoly.variable(v, vars) for v in vars]
    table = structure.coordinate_brackets()
    report = {"name": structure.name or str(phi), "checks": {}, "passed": True}

    def record(name, ok):
        report["checks"][name] = bool(ok)
        report["passed"] = report["passed"] and bool(ok)

    jac = table.jacobi_residuals()
    record("jacobi", all(r.is_zero() for r in jac))
    record("casimir", all(structure.nambu(phi, xi).is_zero() for xi in x))
    # unimodularity: sum_i d_i pi^{ij} = 0 for every j
    unim = True
    for j in range(3):
        div = CommPoly.zero(vars)
        for i in range(3):
            if i == j:
                continue
            div = div + table.bracket(i, j).diff(vars[i])
        unim = unim and div.is_zero()
    record("unimodular", unim)
    return report


# ---------------------------------------------------------------------------
# semiclassical limit of a quantum presentation
# ---------------------------------------------------------------------------


def classical_limit(rs, vars=None, normalization="q-1"):
    """Bracket table {x_i,x_j} = lim_{q->1} reduce([X_i,X_j])/(q-1).

    The rewriting system must be confluent so reduce is a normal form; each
    reduced commutator must be divisible by (q-1) (coefficients have a
    removable singularity at q=1).  Division by (q-1) fixes the orientation;
    the opposite (1-q) convention is this table negated.
    """
    if rs.confluence is None:
        rs.confluence_check()
    if not rs.is_confluent():
        raise RuntimeError("classical limit needs a confluent system; "
                           "use classical_limit_ideal for the fallback")
    gens = rs.order.gens
    return _classical_table(gens, rs.reduce, vars, normalization)


def classical_limit_ideal(rels, vars=None, normalization="q-1", margin=2):
    """Ideal-span fallback for non-confluent presentations: commutators are
    put in the canonical span-normal form before dividing by (q-1)."""
    from .idealtools import IdealSpan

    span = IdealSpan(rels, 2, margin)
    gens = rels.gens

    def reduce(f):
        red, _ = span.reduce_member(f)
        return NcPoly(gens, red)

    return _classical_table(gens, reduce, vars, normalization)


def _classical_table(gens, reduce, vars, normalization):
    if len(gens) != 3:
        raise WrongArity
    vars = tuple(vars or [g.lower() for g in gens])
    q = var("q")
    sign = rat(1) if normalization == "q-1" else rat(-1)

    def to_comm(f):
        out = CommPoly.zero(vars)
        for w, c in f.terms.items():
            m = [0, 0, 0]
            for i in w:
                m[i] += 1
            c2 = (c / (q - 1)).limit("q", 1) * sign
            out = out + CommPoly(vars, {tuple(m): c2})
        return out

    entries = {}
    for (i, j) in BracketTable.PAIRS:
        xi = NcPoly.gen(i, gens)
        xj = NcPoly.gen(j, gens)
        comm = reduce(xi * xj - xj * xi)
        entries[(i, j)] = to_comm(comm)
    return BracketTable(vars, entries)


# ---------------------------------------------------------------------------
# rescaling degenerations
# ---------------------------------------------------------------------------


class Rescaling:
    """Degeneration data: x_i -> coeff * eps^w * y_i and parameter powers.

    variables maps old variable name -> (rational coeff, eps exponent, new
    name); parameters maps parameter name -> eps exponent (tau -> eps^-k
    encodes tau -> infinity); fix binds parameters to rationals after the
    shift, so tau -> eps^-2 exactly is parameters={"tau": -2}, fix={"tau": 1}.
    """

    def __init__(self, variables=None, parameters=None, fix=None, eps="eps"):
        self.variables = dict(variables or {})
        self.parameters = dict(parameters or {})
        self.fix = dict(fix or {})
        self.eps = eps

    def new_vars(self, old_vars):
        out = []
        for v in old_vars:
            sub = self.variables.get(v)
            out.append(sub[2] if sub else v)
        return tuple(out)


def _apply_rescaling_poly(p, r):
    new_vars = r.new_vars(p.vars)
    out = CommPoly.zero(new_vars)
    for m, c in p.terms.items():
        shift = Fraction(0)
        coeff = S_ONE
        for v, e in zip(p.vars, m):
            sub = r.variables.get(v)
            if sub and e:
                cf, w, _ = sub
                coeff = coeff * (rat(cf) ** e)
                shift += Fraction(w) * e
        for pname, w in r.parameters.items():
            c = _shift_param(c, pname, Fraction(w), r.eps)
        if r.fix:
            c = c.specialize(r.fix)
        if shift:
            coeff = coeff * var(r.eps, shift)
        out = out + CommPoly(new_vars, {m: c * coeff})
    return out


def _shift_param(c, pname, w, eps):
    # p -> eps^w * p inside a Scalar coefficient
    def conv(poly):
        out = {}
        for m, coef in poly.items():
            d = dict(m)
            e = d.get(pname, 0)
            if e:
                d[eps] = d.get(eps, 0) + w * e
                if not d[eps]:
                    del d[eps]
            key = tuple(sorted((v, x) for v, x in d.items() if x))
            prev = out.get(key)
            out[key] = coef if prev is None else prev + coef
            if not out[key]:
                del out[key]
        return out

    return Scalar(conv(c.num), conv(c.den))


def _eps_order(c, eps):
    from .scalars import p_min_exp

    if c.is_zero():
        return None
    return p_min_exp(c.num, eps) - p_min_exp(c.den, eps)


def scale_limit_potential(phi, r):
    """eps -> 0 limit of the rescaled potential (errors on negative powers)."""
    scaled = _apply_rescaling_poly(phi, r)
    for m, c in scaled.terms.items():
        o = _eps_order(c, r.eps)
        if o is not None and o < 0:
            raise DivergentLimit(f"monomial {m} carries eps^{o}")
    lim = scaled.map_coeffs(lambda c: c.limit(r.eps, "zero_plus"))
    return lim


def scale_limit_brackets(table, r):
    """Transform a bracket table by the chain rule, normalize by one global
    eps power, and take the limit; returns (table, normalization exponent)."""
    new_vars = r.new_vars(table.vars)
    entries = {}
    min_order = None
    for (i, j) in BracketTable.PAIRS:
        vi, vj = table.vars[i], table.vars[j]
        inv_i = _inverse_factor(r, vi)
        inv_j = _inverse_factor(r, vj)
        t = _apply_rescaling_poly(table.entries[(i, j)], r)
        t = t.scale(inv_i * inv_j)
        entries[(i, j)] = t
        for c in t.terms.values():
            o = _eps_order(c, r.eps)
            if o is not None:
                min_order = o if min_order is None else min(min_order, o)
    if min_order is None:
        return BracketTable(new_vars, entries), 0
    norm = var(r.eps, -min_order) if min_order else S_ONE
    out = {}
    for k, t in entries.items():
        t = t.scale(norm)
        out[k] = t.map_coeffs(lambda c: c.limit(r.eps, "zero_plus"))
    return BracketTable(new_vars, out), -min_order


def _inverse_factor(r, vname):
    sub = r.variables.get(vname)
    if not sub:
        return S_ONE
    cf, w, _ = sub
    inv = rat(cf).inv()
    if w:
        inv = inv * var(r.eps, -Fraction(w))
    return inv


def scale_limit(obj, r):
    """Dispatch on potentials vs bracket tables; returns (limit, report)."""
    if isinstance(obj, PoissonStructure):
        lim = scale_limit_potential(obj.phi, r)
        return PoissonStructure(lim, name=obj.name + "_limit"), {"normalization": 0}
    if isinstance(obj, CommPoly):
        return scale_limit_potential(obj, r), {"normalization": 0}
    if isinstance(obj, BracketTable):
        t, n = scale_limit_brackets(obj, r)
        return t, {"normalization": n}
    raise TypeError


def diagonal_transform(phi, coeffs, global_scale=1):
    """phi(y) -> global_scale * phi(c_1 y_1, c_2 y_2, c_3 y_3) exactly."""
    out = {}
    for m, c in phi.terms.items():
        factor = rat(global_scale)
        for cf, e in zip(coeffs, m):
            factor = factor * (rat(cf) ** e)
        out[m] = out.get(m, S_ZERO) + c * factor
    return CommPoly(phi.vars, out)


# ---------------------------------------------------------------------------
# Chebyshev family helper
# ---------------------------------------------------------------------------


def chebyshev_t(n):
    """Coefficient list of the n-th Chebyshev polynomial (standard recurrence)."""
    if n == 0:
        return [Fraction(1)]
    prev = [Fraction(1)]
    cur = [Fraction(0), Fraction(1)]
    for _ in range(n - 1):
        nxt = [Fraction(0)] * (len(cur) + 1)
        for k, c in enumerate(cur):
            nxt[k + 1] += 2 * c
        for k, c in enumerate(prev):
            nxt[k] -= c
        prev, cur = cur, nxt
    return cur


def chebyshev_cubic(n, e1, e2, e3, vars=("x1", "x2", "x3"), w="w"):
    """Moduli cubic of the orbifold family at level n.

    x1x2x3 - sum(e_i^n x_i) + 2 P^{n/2} T_n(-w / (2 P^{1/2})) with
    P = e1*e2*e3; only integer powers of P survive because T_n has parity n.
    """
    e1, e2, e3 = Fraction(e1), Fraction(e2), Fraction(e3)
    P = e1 * e2 * e3
    coeffs = chebyshev_t(n)
    const = S_ZERO
    wv = var(w)
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if (n - k) % 2 != 0:
            raise ArithmeticError("parity violation in Chebyshev expansion")
        # 2 * c * (-w/2)^k * P^((n-k)/2)
        term = rat(2 * c) * ((wv * rat(Fraction(-1, 2))) ** k) * rat(P ** ((n - k) // 2))
        const = const + term
    cube = {(1, 1, 1): S_ONE,
            (1, 0, 0): rat(-(e1 ** n)), (0, 1, 0): rat(-(e2 ** n)),
            (0, 0, 1): rat(-(e3 ** n)), (0, 0, 0): const}
    return CommPoly(vars, cube)


# ---------------------------------------------------------------------------
# JSON exchange
# ---------------------------------------------------------------------------


def commpoly_to_json(p):
    return {
        "vars": list(p.vars),
        "terms": [[scalar_to_json(c), list(m)]
                  for m, c in sorted(p.terms.items())],
    }


def commpoly_from_json(obj):
    vars = tuple(obj["vars"])
    return CommPoly(vars, {
        tuple(int(e) for e in m): scalar_from_json(c)
        for c, m in obj["terms"]
    })
