"""Exact coefficient arithmetic.

Scalars are elements of the fraction field of multivariate Laurent
polynomials over Q.  The distinguished quantization variable ``q`` may carry
rational exponents (roots of q such as q^(1/2), q^(1/4) are rational
exponents sharing a common denominator fixed per computation context); every
other variable carries integer exponents.  All named deformation parameters
(a, b, c, alpha, t, tau, masses, Omega_i, g_i, the limit variable eps, ...)
live here as ordinary variables.

Representation: a monomial is a sorted tuple of (name, exponent) pairs with
nonzero exponents; a polynomial is a dict monomial -> Fraction; a Scalar is a
normalized numerator/denominator pair.  Equality of Scalars is equality of
the normalized representation: gcd(num, den) is a unit, the denominator has
no monomial factors (minimum exponent 0 in every variable) and is monic
under the global deglex order on variable names.
"""

from __future__ import annotations

import math
from fractions import Fraction

Q_VAR = "q"

# variables permitted to carry non-integer exponents
_FRACTIONAL_OK = (Q_VAR, "eps")


class ScalarError(ArithmeticError):
    pass


class DenominatorVanishes(ScalarError):
    pass


class PoleAtPoint(ScalarError):
    pass


class DivergentLimit(ScalarError):
    pass


# ---------------------------------------------------------------------------
# monomials:  tuple of (var, exp) sorted by var, exp a nonzero int/Fraction
# ---------------------------------------------------------------------------

MONE = ()


def mono(*pairs):
    """Build a monomial from (var, exp) pairs; drops zero exponents."""
    d = {}
    for v, e in pairs:
        e = Fraction(e)
        if e.denominator == 1:
            e = int(e)
        if e:
            d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def m_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        ne = d.get(v, 0) + e
        if ne:
            d[v] = ne
        else:
            del d[v]
    return tuple(sorted(d.items()))


def m_pow(m, k):
    if k == 0 or not m:
        return MONE
    out = []
    for v, e in m:
        ne = e * k
        fe = Fraction(ne)
        out.append((v, int(fe) if fe.denominator == 1 else fe))
    return tuple(out)


def m_div(m1, m2):
    return m_mul(m1, m_pow(m2, -1))


def m_degree(m):
    return sum(e for _, e in m)


def _m_cmp_deglex(m1, m2):
    """Global deglex: total degree first, then lexicographic comparison of
    the exponent vectors over the variable names in increasing name order
    (a larger exponent on an earlier name wins)."""
    d1, d2 = m_degree(m1), m_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    i = j = 0
    while i < len(m1) or j < len(m2):
        v1 = m1[i][0] if i < len(m1) else None
        v2 = m2[j][0] if j < len(m2) else None
        if v1 == v2:
            a, b = m1[i][1], m2[j][1]
            if a != b:
                return 1 if a > b else -1
            i += 1
            j += 1
        elif v2 is None or (v1 is not None and v1 < v2):
            return 1 if m1[i][1] > 0 else -1
        else:
            return -1 if m2[j][1] > 0 else 1
    return 0


class _MKey:
    """Total-order sort key wrapping the deglex comparator."""

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = m

    def __lt__(self, other):
        return _m_cmp_deglex(self.m, other.m) < 0

    def __eq__(self, other):
        return self.m == other.m


def m_deglex_key(m):
    return _MKey(m)


# ---------------------------------------------------------------------------
# polynomials:  dict monomial -> Fraction (no zero values)
# ---------------------------------------------------------------------------

PZERO = {}


def p_const(c):
    c = Fraction(c)
    return {MONE: c} if c else {}


P_ONE = p_const(1)


def p_var(name, exp=1):
    return {mono((name, exp)): Fraction(1)}


def p_add(p1, p2):
    if not p1:
        return dict(p2)
    if not p2:
        return dict(p1)
    out = dict(p1)
    for m, c in p2.items():
        nc = out.get(m)
        if nc is None:
            out[m] = c
        else:
            nc = nc + c
            if nc:
                out[m] = nc
            else:
                del out[m]
    return out


def p_neg(p):
    return {m: -c for m, c in p.items()}


def p_sub(p1, p2):
    return p_add(p1, p_neg(p2))


def p_mul(p1, p2):
    if not p1 or not p2:
        return {}
    if p1 is P_ONE or p1 == P_ONE:
        return dict(p2)
    if len(p1) > len(p2):
        p1, p2 = p2, p1
    out = {}
    for m1, c1 in p1.items():
        for m2, c2 in p2.items():
            m = m_mul(m1, m2)
            c = out.get(m)
            if c is None:
                out[m] = c1 * c2
            else:
                c = c + c1 * c2
                if c:
                    out[m] = c
                else:
                    del out[m]
    return out


def p_scale(p, c):
    c = Fraction(c)
    if not c:
        return {}
    return {m: c * v for m, v in p.items()}


def p_mul_mono(p, m, c=1):
    c = Fraction(c)
    if not c:
        return {}
    return {m_mul(mm, m): c * v for mm, v in p.items()}


def p_vars(p):
    s = set()
    for m in p:
        for v, _ in m:
            s.add(v)
    return s


def p_degree(p, var=None):
    if not p:
        return None
    if var is None:
        return max(m_degree(m) for m in p)
    return max(dict(m).get(var, 0) for m in p)


def p_min_exp(p, var):
    return min(dict(m).get(var, 0) for m in p)


def p_leading(p):
    """Leading (monomial, coefficient) under global deglex."""
    it = iter(p)
    best = next(it)
    for m in it:
        if _m_cmp_deglex(m, best) > 0:
            best = m
    return best, p[best]


def p_is_mono(p):
    return len(p) == 1


# ---------------------------------------------------------------------------
# gcd of polynomials with integer exponents (subresultant PRS, primitive)
# ---------------------------------------------------------------------------


def _p_to_uni(p, var):
    """Split p as dict exp -> coefficient-poly in the remaining variables."""
    out = {}
    for m, c in p.items():
        d = dict(m)
        e = d.pop(var, 0)
        rest = tuple(sorted(d.items()))
        out.setdefault(e, {})[rest] = c
    return out


def _uni_to_p(u, var):
    out = {}
    for e, coe in u.items():
        for m, c in coe.items():
            out[m_mul(m, mono((var, e)))] = c
    return out


def _uni_deg(u):
    return max(u) if u else -1


def _uni_lc(u):
    return u[max(u)]


def _uni_scale_poly(u, f):
    return {e: p_mul(c, f) for e, c in u.items() if p_mul(c, f)}


def _uni_sub(u1, u2):
    out = dict(u1)
    for e, c in u2.items():
        nc = p_sub(out.get(e, {}), c)
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return out


def _uni_shift(u, k):
    return {e + k: c for e, c in u.items()}


def _pseudo_rem(u, v, var):
    """Pseudo-remainder of u by v (univariate in var, poly coefficients)."""
    dv = _uni_deg(v)
    lv = _uni_lc(v)
    r = dict(u)
    while _uni_deg(r) >= dv:
        dr = _uni_deg(r)
        lr = _uni_lc(r)
        # lv * r  -  lr * x^(dr-dv) * v
        r = _uni_sub(_uni_scale_poly(r, lv), _uni_shift(_uni_scale_poly(v, lr), dr - dv))
        if _uni_deg(r) == dr:  # cancellation guaranteed; guard anyway
            raise AssertionError("pseudo-division failed to reduce degree")
    return r


def _content(u):
    """gcd of the polynomial coefficients of a univariate-split poly."""
    polys = sorted(u.values(), key=lambda c: (len(c), sorted(map(m_deglex_key, c))))
    g = {}
    for c in polys:
        g = p_gcd(g, c)
        if g == P_ONE:
            break
    return g if g else P_ONE


def _rat_normalize(p):
    """Divide by leading deglex coefficient so leading coefficient is 1."""
    if not p:
        return p
    _, c = p_leading(p)
    if c == 1:
        return dict(p)
    return p_scale(p, Fraction(1) / c)


def p_gcd(p1, p2):
    """gcd of polynomials with integer exponents, monic under deglex."""
    if not p1:
        return _rat_normalize(p2)
    if not p2:
        return _rat_normalize(p1)
    if p_is_mono(p1) or p_is_mono(p2):
        # gcd with a monomial: common monomial part
        def minexp(p):
            d = {}
            first = True
            for m in p:
                md = dict(m)
                if first:
                    d = md
                    first = False
                else:
                    d = {v: min(e, md.get(v, 0)) for v, e in d.items() if v in md}
            return d
        d1, d2 = minexp(p1), minexp(p2)
        common = {v: min(e, d2.get(v, 0)) for v, e in d1.items() if v in d2}
        return {tuple(sorted((v, e) for v, e in common.items() if e)): Fraction(1)}
    vs = sorted(p_vars(p1) | p_vars(p2))
    if not vs:
        return P_ONE
    var = vs[-1]
    u1, u2 = _p_to_uni(p1, var), _p_to_uni(p2, var)
    if _uni_deg(u1) == 0 or _uni_deg(u2) == 0:
        # var-free content path
        c1 = _content(u1)
        c2 = _content(u2)
        return p_gcd(c1, c2)
    c1, c2 = _content(u1), _content(u2)
    cg = p_gcd(c1, c2)
    a = {e: p_exact_div(c, c1) for e, c in u1.items()}
    b = {e: p_exact_div(c, c2) for e, c in u2.items()}
    if _uni_deg(a) < _uni_deg(b):
        a, b = b, a
    while True:
        r = _pseudo_rem(a, b, var)
        if not r:
            break
        if _uni_deg(r) == 0:
            b = {0: P_ONE}
            break
        rc = _content(r)
        a, b = b, {e: p_exact_div(c, rc) for e, c in r.items()}
    g = _uni_to_p(b, var)
    return _rat_normalize(p_mul(cg, g))


def p_exact_div(p, d):
    """Exact polynomial division (raises if not divisible)."""
    if not p:
        return {}
    if p_is_mono(d):
        (m, c), = d.items()
        return {m_div(mm, m): v / c for mm, v in p.items()}
    q, r = p_divmod(p, d)
    if r:
        raise ArithmeticError("not divisible")
    return q


def p_divmod(p, d):
    """Multivariate division by a single divisor under deglex."""
    if not d:
        raise ZeroDivisionError
    q = {}
    r = dict(p)
    dm, dc = p_leading(d)
    while r:
        rm, rc = p_leading(r)
        fac = m_div(rm, dm)
        if any(e < 0 or (Fraction(e).denominator != 1 and v not in _FRACTIONAL_OK)
               for v, e in fac):
            break
        c = rc / dc
        q[fac] = q.get(fac, 0) + c
        r = p_sub(r, p_mul_mono(d, fac, c))
    return {m: c for m, c in q.items() if c}, r


def _exp_den_lcm(p, var):
    l = 1
    for m in p:
        for v, e in m:
            if v == var and isinstance(e, Fraction):
                l = l * e.denominator // math.gcd(l, e.denominator)
    return l


def _scale_var_exp(p, var, k):
    if k == 1:
        return p
    out = {}
    for m, c in p.items():
        out[mono(*[(v, e * k if v == var else e) for v, e in m])] = c
    return out


# ---------------------------------------------------------------------------
# Scalar: the fraction field
# ---------------------------------------------------------------------------


def _laurent_split(p):
    """Factor p = m * p' with p' having min exponent 0 in every variable."""
    if not p:
        return MONE, p
    vars_all = p_vars(p)
    mins = {v: min(dict(m).get(v, 0) for m in p) for v in vars_all}
    shift = mono(*[(v, e) for v, e in mins.items() if e])
    if not shift:
        return MONE, p
    inv = m_pow(shift, -1)
    return shift, {m_mul(m, inv): c for m, c in p.items()}


class Scalar:
    """Element of the fraction field; immutable and normalized."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = P_ONE
        if _normalized:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(num, den)
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rational(c):
        return Scalar(p_const(c), dict(P_ONE), _normalized=True)

    @staticmethod
    def var(name, exp=1):
        e = Fraction(exp)
        if e.denominator != 1 and name not in _FRACTIONAL_OK:
            raise ScalarError(f"fractional exponent not allowed for {name!r}")
        return Scalar(p_var(name, e if e.denominator != 1 else int(e)))

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == P_ONE and self.den == P_ONE

    def is_rational(self):
        return (not self.num or set(self.num) == {MONE}) and self.den == P_ONE

    def as_rational(self):
        if not self.is_rational():
            raise ScalarError("not a rational constant")
        return self.num.get(MONE, Fraction(0))

    def is_monomial(self):
        return len(self.num) == 1 and self.den == P_ONE

    def vars(self):
        return p_vars(self.num) | p_vars(self.den)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return Scalar(p_add(self.num, other.num), self.den)
        return Scalar(
            p_add(p_mul(self.num, other.den), p_mul(other.num, self.den)),
            p_mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(p_neg(self.num), self.den, _normalized=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return S_ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        return Scalar(p_mul(self.num, other.num), p_mul(self.den, other.den))

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inv()

    def __pow__(self, k):
        k = int(k)
        if k == 0:
            return S_ONE
        if k < 0:
            return self.inv() ** (-k)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (frozenset(self.num.items()), frozenset(self.den.items()))
            )
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # -- display ------------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        n = _poly_str(self.num)
        if self.den == P_ONE:
            return n
        d = _poly_str(self.den)
        if len(self.den) > 1:
            d = "(" + d + ")"
        if len(self.num) > 1:
            n = "(" + n + ")"
        return f"{n}/{d}"

    # -- substitution and limits --------------------------------------------

    def specialize(self, bindings):
        """Substitute variables by rationals or monomial Scalars."""
        sb = {}
        for v, val in bindings.items():
            if isinstance(val, Scalar):
                sb[v] = val
            else:
                sb[v] = Scalar.from_rational(val)
        num = _p_specialize(self.num, sb)
        den = _p_specialize(self.den, sb)
        if den.is_zero():
            raise DenominatorVanishes(f"denominator vanishes under {bindings}")
        return num / den

    def limit(self, var, point):
        """Limit as var -> point (a rational), or the eps -> 0^+ constant
        term when point is the string 'zero_plus'."""
        if point == "zero_plus":
            return self._limit_zero_plus(var)
        point = Fraction(point)
        num, den = self.num, self.den
        k = _exp_den_lcm(num, var) * _exp_den_lcm(den, var) // math.gcd(
            _exp_den_lcm(num, var), _exp_den_lcm(den, var)
        )
        if k != 1:
            # work with the k-th root of var as the actual variable
            root = _nth_root_fraction(point, k)
            if root is None:
                raise ScalarError(
                    f"point {point} has no exact {k}-th root for {var} exponents"
                )
            num = _scale_var_exp(num, var, k)
            den = _scale_var_exp(den, var, k)
            point = root
        jn, n1 = _factor_linear(num, var, point)
        jd, d1 = _factor_linear(den, var, point)
        if jn < jd:
            raise PoleAtPoint(f"pole of order {jd - jn} at {var}={point}")
        n_eval = _eval_at(n1, var, point)
        d_eval = _eval_at(d1, var, point)
        if not d_eval:
            raise PoleAtPoint(f"denominator vanishes at {var}={point}")
        if jn > jd:
            return S_ZERO
        return Scalar(n_eval, d_eval)

    def _limit_zero_plus(self, var):
        if self.is_zero():
            return S_ZERO
        a = p_min_exp(self.num, var)
        b = p_min_exp(self.den, var)
        if a - b < 0:
            raise DivergentLimit(f"negative power {a - b} of {var}")
        num = _scale_shift(self.num, var, -b)
        den = _scale_shift(self.den, var, -b)
        n0 = {m: c for m, c in num.items() if dict(m).get(var, 0) == 0}
        d0 = {m: c for m, c in den.items() if dict(m).get(var, 0) == 0}
        return Scalar(n0, d0)

    def subs_var_power(self, var, base_var, power, coeff=1):
        """Substitute var -> coeff * base_var**power (exact, for rescalings)."""
        def conv(p):
            out = {}
            for m, c in p.items():
                d = dict(m)
                e = d.pop(var, 0)
                if e:
                    c = c * Fraction(coeff) ** _int_exp(e)
                    ne = e * power
                    prev = d.get(base_var, 0) + ne
                    if prev:
                        d[base_var] = prev
                    else:
                        d.pop(base_var, None)
                key = tuple(sorted(d.items()))
                c0 = out.get(key)
                if c0 is None:
                    out[key] = c
                else:
                    c0 = c0 + c
                    if c0:
                        out[key] = c0
                    else:
                        del out[key]
            return out
        return Scalar(conv(self.num), conv(self.den))


def _int_exp(e):
    f = Fraction(e)
    if f.denominator != 1:
        raise ScalarError("substitution needs integer exponent for the coefficient")
    return int(f)


def _nth_root_fraction(x, k):
    if x < 0 and k % 2 == 0:
        return None
    sign = -1 if x < 0 else 1
    x = abs(Fraction(x))
    def iroot(n):
        r = round(n ** (1.0 / k))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** k == n:
                return cand
        return None
    a, b = iroot(x.numerator), iroot(x.denominator)
    if a is None or b is None:
        return None
    return Fraction(sign * a, b)


def _scale_shift(p, var, shift):
    if shift == 0:
        return p
    out = {}
    for m, c in p.items():
        d = dict(m)
        e = d.get(var, 0) + shift
        if e:
            d[var] = e
        else:
            d.pop(var, None)
        out[tuple(sorted(d.items()))] = c
    return out


def _factor_linear(p, var, point):
    """Write p = (var-point)^j * p1 with p1(point) != 0; returns (j, p1).

    Negative powers of var are first pulled out (they only matter when the
    point is 0, in which case they count as poles)."""
    if not p:
        raise ZeroDivisionError
    mn = p_min_exp(p, var)
    j = 0
    if mn < 0:
        if point == 0:
            p = _scale_shift(p, var, -mn)
            j += mn
        else:
            p = _scale_shift(p, var, -mn)
            # compensation by point^mn is a nonzero constant; fold into p
            p = p_scale(p, Fraction(point) ** mn)
    if point == 0:
        mn2 = p_min_exp(p, var)
        j += mn2
        return j, _scale_shift(p, var, -mn2)
    lin = p_sub(p_var(var), p_const(point))
    while True:
        u = _p_to_uni(p, var)
        val = {}
        for e, c in u.items():
            val = p_add(val, p_scale(c, Fraction(point) ** e))
        if val:
            return j, p
        q, r = _p_divmod_uni(p, lin, var)
        assert not r
        p = q
        j += 1


def _p_divmod_uni(p, d, var):
    """Division treating p, d as univariate in var (synthetic for linear d)."""
    u = _p_to_uni(p, var)
    du = _p_to_uni(d, var)
    dd = _uni_deg(du)
    lc = _uni_lc(du)
    q = {}
    r = dict(u)
    while _uni_deg(r) >= dd and r:
        e = _uni_deg(r)
        c = _uni_lc(r)
        qc = p_exact_div(c, lc) if lc != P_ONE else c
        q[e - dd] = qc
        r = _uni_sub(r, _uni_shift(_uni_scale_poly(du, qc), e - dd))
    return _uni_to_p(q, var), _uni_to_p(r, var)


def _eval_at(p, var, point):
    out = {}
    for m, c in p.items():
        d = dict(m)
        e = d.pop(var, 0)
        c = c * Fraction(point) ** _int_exp(e) if e else c
        key = tuple(sorted(d.items()))
        c0 = out.get(key, 0)
        c0 = c0 + c
        if c0:
            out[key] = c0
        else:
            out.pop(key, None)
    return out


def _p_specialize(p, bindings):
    out = S_ZERO
    for m, c in p.items():
        term = Scalar.from_rational(c)
        rest = []
        for v, e in m:
            if v in bindings:
                val = bindings[v]
                term = term * _scalar_pow_frac(val, e)
            else:
                rest.append((v, e))
        if rest:
            term = term * Scalar({tuple(rest): Fraction(1)}, _normalized=True)
        out = out + term
    return out


def _scalar_pow_frac(s, e):
    """s**e for rational e; s must be a monomial Scalar if e is fractional."""
    e = Fraction(e)
    if e.denominator == 1:
        return s ** int(e)
    if not s.is_monomial():
        raise ScalarError(f"cannot raise non-monomial Scalar to power {e}")
    (m, c), = s.num.items()
    root = _nth_root_fraction(c, e.denominator)
    if root is None:
        raise ScalarError(f"{c} has no exact {e.denominator}-th root")
    newm = []
    for v, ee in m:
        ne = Fraction(ee) * e
        if ne.denominator != 1 and v not in _FRACTIONAL_OK:
            raise ScalarError(f"fractional exponent for {v!r} after substitution")
        newm.append((v, int(ne) if ne.denominator == 1 else ne))
    return Scalar({mono(*newm): Fraction(root) ** e.numerator}, _normalized=False)


def _normalize(num, den):
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, dict(P_ONE)
    # pull monomial content out of the denominator
    dshift, den = _laurent_split(den)
    num = {m_div(m, dshift): c for m, c in num.items()}
    if p_is_mono(den):
        (m, c), = den.items()
        num = {m_div(mm, m): v / c for mm, v in num.items()}
        return num, dict(P_ONE)
    # integer-exponent working copies for the gcd
    nshift, num = _laurent_split(num)
    scale = {}
    for var in (p_vars(num) | p_vars(den)):
        k = 1
        for p in (num, den):
            kk = _exp_den_lcm(p, var)
            k = k * kk // math.gcd(k, kk)
        if k != 1:
            scale[var] = k
            num = _scale_var_exp(num, var, k)
            den = _scale_var_exp(den, var, k)
    g = p_gcd(num, den)
    if g != P_ONE and len(g) > 0 and g != p_const(1):
        num = p_exact_div(num, g)
        den = p_exact_div(den, g)
    for var, k in scale.items():
        num = _scale_var_exp(num, var, Fraction(1, k))
        den = _scale_var_exp(den, var, Fraction(1, k))
    num = {m_mul(m, nshift): c for m, c in num.items()}
    # denominator monic under deglex; re-split any monomial factor
    dshift2, den = _laurent_split(den)
    num = {m_div(m, dshift2): c for m, c in num.items()}
    _, lc = p_leading(den)
    if lc != 1:
        den = p_scale(den, Fraction(1) / lc)
        num = p_scale(num, Fraction(1) / lc)
    return num, den


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_rational(x)
    return NotImplemented


def _poly_str(p):
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=m_deglex_key, reverse=True):
        c = p[m]
        if not m:
            parts.append(str(c))
            continue
        factors = []
        for v, e in m:
            if e == 1:
                factors.append(v)
            else:
                factors.append(f"{v}^{e}" if Fraction(e).denominator == 1 else f"{v}^({e})")
        body = "*".join(factors)
        if c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"{c}*{body}")
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


S_ZERO = Scalar({}, dict(P_ONE), _normalized=True)
S_ONE = Scalar(dict(P_ONE), dict(P_ONE), _normalized=True)


def rat(c):
    return Scalar.from_rational(c)


def var(name, exp=1):
    return Scalar.var(name, exp)


def qpow(e):
    """q raised to a rational exponent."""
    return Scalar.var(Q_VAR, Fraction(e))


# ---------------------------------------------------------------------------
# random sampling for probabilistic checks
# ---------------------------------------------------------------------------


def random_rational(rng, lo=-97, hi=97):
    """Nonzero rational with numerator and denominator drawn from [lo,hi]\\{0}."""
    def pick():
        while True:
            n = rng.randint(lo, hi)
            if n:
                return n
    return Fraction(pick(), abs(pick()))


def random_scalar(rng, names, max_terms=3):
    out = S_ZERO
    for _ in range(rng.randint(1, max_terms)):
        m = []
        for v in names:
            e = rng.randint(-1, 2) if v == Q_VAR else rng.randint(0, 2)
            if e:
                m.append((v, e))
        out = out + Scalar({mono(*m): random_rational(rng, -9, 9)})
    return out


# JSON exchange ---------------------------------------------------------------


def scalar_to_json(s):
    def side(p):
        items = []
        for m in sorted(p, key=m_deglex_key):
            items.append([str(p[m]), {v: str(e) for v, e in m}])
        return items
    return {"num": side(s.num), "den": side(s.den)}


def scalar_from_json(obj):
    def side(items):
        p = {}
        for coef, expd in items:
            m = mono(*[(v, Fraction(e)) for v, e in expd.items()])
            p[m] = Fraction(coef)
        return p
    num = side(obj["num"])
    den = side(obj.get("den") or [["1", {}]])
    return Scalar(num, den)
