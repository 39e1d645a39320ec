"""Free associative algebra on named generators over Scalar coefficients.

Words are tuples of generator indices into an Alphabet.  NcPoly is a sparse
map word -> Scalar.  Cyclic potentials live in the quotient by the span of
commutators: every cyclic class is stored on the lexicographically minimal
rotation of its words, with coefficients merged.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import S_ONE, S_ZERO, Scalar, rat, scalar_from_json, scalar_to_json, var


class AlphabetMismatch(ValueError):
    pass


DEFAULT_GENS = ("X1", "X2", "X3")
VERTEX_GENS = ("Y1", "Y2", "Y3")


class NcPoly:
    """Finite Scalar-linear combination of words in a fixed alphabet."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens, terms=None):
        self.gens = tuple(gens)
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, Scalar):
                    c = rat(c)
                if c.is_zero():
                    continue
                prev = self.terms.get(w)
                c = c if prev is None else prev + c
                if c.is_zero():
                    self.terms.pop(w, None)
                else:
                    self.terms[w] = c

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(gens=DEFAULT_GENS):
        return NcPoly(gens)

    @staticmethod
    def one(gens=DEFAULT_GENS):
        return NcPoly(gens, {(): S_ONE})

    @staticmethod
    def gen(i, gens=DEFAULT_GENS):
        return NcPoly(gens, {(i,): S_ONE})

    @staticmethod
    def scalar(c, gens=DEFAULT_GENS):
        return NcPoly(gens, {(): c if isinstance(c, Scalar) else rat(c)})

    @staticmethod
    def word(letters, gens=DEFAULT_GENS, coeff=S_ONE):
        return NcPoly(gens, {tuple(letters): coeff})

    # -- basics -------------------------------------------------------------

    def _check(self, other):
        if self.gens != other.gens:
            raise AlphabetMismatch(f"{self.gens} vs {other.gens}")

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(w) for w in self.terms), default=None)

    def coeff(self, w):
        return self.terms.get(tuple(w), S_ZERO)

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            c = c if prev is None else prev + c
            if c.is_zero():
                out.pop(w, None)
            else:
                out[w] = c
        return NcPoly(self.gens, out)

    def __neg__(self):
        return NcPoly(self.gens, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                prev = out.get(w)
                c = c if prev is None else prev + c
                if c.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = c
        return NcPoly(self.gens, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        if not isinstance(c, Scalar):
            c = rat(c)
        if c.is_zero():
            return NcPoly(self.gens)
        return NcPoly(self.gens, {w: cc * c for w, cc in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, NcPoly):
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return NcPoly.scalar(other, self.gens)
        raise TypeError(f"cannot combine NcPoly with {type(other)!r}")

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def map_coeffs(self, f):
        return NcPoly(self.gens, {w: f(c) for w, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            body = "*".join(self.gens[i] for i in w) if w else "1"
            cs = str(c)
            if cs == "1" and w:
                parts.append(body)
            elif cs == "-1" and w:
                parts.append("-" + body)
            else:
                if ("+" in cs[1:]) or ("-" in cs[1:]) or "/" in cs:
                    cs = "(" + cs + ")"
                parts.append(f"{cs}*{body}" if w else cs)
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def nc_mul(f, g):
    return f * g


def commutator(f, g):
    return f * g - g * f


# -- rescaling substitutions -------------------------------------------------


def substitute_scale(f, gen_shifts=None, param_shifts=None, eps="eps"):
    """Multiply generators and coefficient parameters by powers of eps.

    gen_shifts maps generator index -> rational exponent w (generator scaled
    by eps**w); param_shifts maps parameter name -> rational exponent.
    """
    gen_shifts = gen_shifts or {}
    param_shifts = param_shifts or {}
    out = {}
    for w, c in f.terms.items():
        shift = sum((Fraction(gen_shifts.get(i, 0)) for i in w), Fraction(0))
        if param_shifts:
            c = _rescale_params(c, param_shifts, eps)
        if shift:
            c = c * var(eps, shift)
        if not c.is_zero():
            out[w] = out.get(w, S_ZERO) + c
    return NcPoly(f.gens, out)


def _rescale_params(c, param_shifts, eps):
    for p, s in param_shifts.items():
        # p -> eps**s * p
        c = _subs_param_scaled(c, p, Fraction(s), eps)
    return c


def _subs_param_scaled(c, p, s, eps):
    from .scalars import mono

    def conv(poly):
        out = {}
        for m, coef in poly.items():
            d = dict(m)
            e = d.get(p, 0)
            if e:
                d[eps] = d.get(eps, 0) + s * e
                if not d[eps]:
                    del d[eps]
            key = tuple(sorted((v, x) for v, x in d.items() if x))
            prev = out.get(key)
            out[key] = coef if prev is None else prev + coef
            if not out[key]:
                del out[key]
        return out

    return Scalar(conv(c.num), conv(c.den))


def substitute_gens(f, images):
    """Substitute each generator by an NcPoly image (algebra morphism)."""
    out = NcPoly.zero(images[0].gens if images else f.gens)
    for w, c in f.terms.items():
        term = NcPoly.scalar(c, out.gens)
        for i in w:
            term = term * images[i]
        out = out + term
    return out


# -- cyclic words ------------------------------------------------------------


def min_rotation(w):
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


class CyclicPotential:
    """Image of an NcPoly in the cyclic quotient (space of cyclic words)."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens, terms=None):
        self.gens = tuple(gens)
        self.terms = {}
        if terms:
            for w, c in terms.items():
                r = min_rotation(tuple(w))
                prev = self.terms.get(r)
                c = c if prev is None else prev + c
                if c.is_zero():
                    self.terms.pop(r, None)
                else:
                    self.terms[r] = c

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.gens != other.gens:
            raise AlphabetMismatch
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            c = c if prev is None else prev + c
            if c.is_zero():
                out.pop(w, None)
            else:
                out[w] = c
        return CyclicPotential(self.gens, out)

    def __sub__(self, other):
        return self + other.scale(rat(-1))

    def scale(self, c):
        if not isinstance(c, Scalar):
            c = rat(c)
        if c.is_zero():
            return CyclicPotential(self.gens)
        return CyclicPotential(self.gens, {w: cc * c for w, cc in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, CyclicPotential):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def as_ncpoly(self):
        return NcPoly(self.gens, dict(self.terms))

    def __str__(self):
        return str(self.as_ncpoly())

    __repr__ = __str__


def cyclic_reduce(f):
    """Project an NcPoly onto the space of cyclic words."""
    return CyclicPotential(f.gens, f.terms)


def cyclic_derivative(phi, j):
    """Cyclic derivative with respect to generator j.

    For every occurrence of j in a cyclic word, emit the word read cyclically
    starting from the following letter.
    """
    if isinstance(phi, NcPoly):
        phi = cyclic_reduce(phi)
    out = {}
    for w, c in phi.terms.items():
        for k, letter in enumerate(w):
            if letter != j:
                continue
            piece = w[k + 1:] + w[:k]
            prev = out.get(piece)
            nc = c if prev is None else prev + c
            if nc.is_zero():
                out.pop(piece, None)
            else:
                out[piece] = nc
    return NcPoly(phi.gens, out)


def match_up_to_unit(f, g, order=None):
    """If f = u*g for a nonzero Scalar u, return u; else None.

    Both sides are compared after normalizing by the coefficient of their
    deglex-leading word (longest word, ties broken lexicographically), which
    is how potential-derived relations are matched against presentations.
    """
    if f.is_zero() or g.is_zero():
        return S_ONE if f.is_zero() and g.is_zero() else None
    key = order.key if order is not None else (lambda w: (len(w), w))
    wf = max(f.terms, key=key)
    wg = max(g.terms, key=key)
    if wf != wg:
        return None
    u = f.terms[wf] / g.terms[wg]
    if g.scale(u) == f:
        return u
    return None


# -- JSON exchange -----------------------------------------------------------


def ncpoly_to_json(f):
    return {
        "gens": list(f.gens),
        "terms": [
            [scalar_to_json(c), list(w)]
            for w, c in sorted(f.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        ],
    }


def ncpoly_from_json(obj):
    gens = tuple(obj["gens"])
    terms = {}
    for coef, w in obj["terms"]:
        terms[tuple(int(i) for i in w)] = scalar_from_json(coef)
    return NcPoly(gens, terms)
