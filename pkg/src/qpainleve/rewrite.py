"""Term rewriting for free-algebra presentations.

Relations are oriented on their deglex-leading word; the resulting rules
rewrite every occurrence of a leading word by the (strictly smaller) tail.
Confluence is decided by resolving all overlap and inclusion ambiguities of
leading words (the diamond lemma); on a confluent system centrality of an
element is the statement that all commutators with generators reduce to 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .freealg import NcPoly
from .scalars import S_ONE, Scalar


class NotOrientable(ValueError):
    def __init__(self, relation, word, reason):
        self.relation = relation
        self.word = word
        self.reason = reason
        super().__init__(f"cannot orient on {word}: {reason}")


class NotConfluent(RuntimeError):
    pass


class MonomialOrder:
    """Degree-lexicographic order on words given a generator precedence.

    ``precedence`` lists generator indices from largest to smallest.
    """

    def __init__(self, gens, precedence=None):
        self.gens = tuple(gens)
        n = len(self.gens)
        if precedence is None:
            precedence = list(range(n - 1, -1, -1))  # X3 > X2 > X1 style
        self.precedence = tuple(precedence)
        if sorted(self.precedence) != list(range(n)):
            raise ValueError("precedence must be a permutation of the alphabet")
        # rank[i]: position of generator i, larger = bigger generator
        self.rank = [0] * n
        for pos, g in enumerate(self.precedence):
            self.rank[g] = n - pos

    @staticmethod
    def from_names(gens, names_desc):
        gens = tuple(gens)
        idx = {g: i for i, g in enumerate(gens)}
        return MonomialOrder(gens, [idx[n] for n in names_desc])

    def key(self, w):
        return (len(w), tuple(self.rank[i] for i in w))

    def gt(self, w1, w2):
        return self.key(w1) > self.key(w2)

    def leading_word(self, f):
        return max(f.terms, key=self.key)

    def describe(self):
        return " > ".join(self.gens[i] for i in self.precedence)


@dataclass
class Rule:
    lead: tuple
    tail: NcPoly  # lead rewrites to tail; tail words strictly smaller


@dataclass
class ConfluenceReport:
    status: str  # "confluent" | "non_confluent"
    bound: int
    ambiguities: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)

    def to_json(self):
        return {
            "status": self.status,
            "bound": self.bound,
            "ambiguities": [
                {"word": list(w), "resolved": ok, "witness": str(res) if res is not None else None}
                for (w, ok, res) in self.ambiguities
            ],
            "assumptions": list(self.assumptions),
        }


class RewriteSystem:
    def __init__(self, rules, order, assumptions=(), source=None):
        self.order = order
        self.rules = sorted(rules, key=lambda r: order.key(r.lead))
        leads = [r.lead for r in self.rules]
        if len(set(leads)) != len(leads):
            raise NotOrientable(None, None, "duplicate leading words")
        self.assumptions = list(assumptions)
        self.source = source
        self.confluence = None  # None | ConfluenceReport
        self._nf_cache = {}

    # -- reduction -----------------------------------------------------------

    def _find_redex(self, w, rightmost=False):
        positions = range(len(w) - 1, -1, -1) if rightmost else range(len(w))
        for pos in positions:
            for ri, rule in enumerate(self.rules):
                L = len(rule.lead)
                if w[pos:pos + L] == rule.lead:
                    return pos, ri
        return None

    def normal_form_word(self, w, rightmost=False):
        if not rightmost:
            cached = self._nf_cache.get(w)
            if cached is not None:
                return cached
        hit = self._find_redex(w, rightmost)
        if hit is None:
            out = NcPoly(self.order.gens, {w: S_ONE})
        else:
            pos, ri = hit
            rule = self.rules[ri]
            a, b = w[:pos], w[pos + len(rule.lead):]
            out = NcPoly.zero(self.order.gens)
            for tw, tc in rule.tail.terms.items():
                out = out + self.normal_form_word(a + tw + b, rightmost).scale(tc)
        if not rightmost:
            self._nf_cache[w] = out
        return out

    def reduce(self, f, strategy="leftmost"):
        """Normal form of f; result contains no leading word as a subword."""
        rightmost = strategy == "rightmost"
        out = NcPoly.zero(self.order.gens)
        for w, c in f.terms.items():
            out = out + self.normal_form_word(w, rightmost).scale(c)
        return out

    # -- confluence -----------------------------------------------------------

    def confluence_check(self, bound=6):
        maxrule = max((len(r.lead) for r in self.rules), default=1)
        if bound < maxrule + 1:
            raise ValueError("bound must be at least max rule degree + 1")
        ambiguities = []
        ok_all = True
        for i, ri in enumerate(self.rules):
            for j, rj in enumerate(self.rules):
                # overlap: ri.lead = AB, rj.lead = BC, B nonempty
                for k in range(1, len(ri.lead)):
                    B = ri.lead[k:]
                    if len(B) >= len(rj.lead):
                        continue
                    if rj.lead[:len(B)] != B:
                        continue
                    w = ri.lead + rj.lead[len(B):]
                    if len(w) > bound:
                        continue
                    left = self._apply_at(w, 0, ri)
                    right = self._apply_at(w, k, rj)
                    diff = self.reduce(left) - self.reduce(right)
                    resolved = diff.is_zero()
                    ok_all = ok_all and resolved
                    ambiguities.append((w, resolved, None if resolved else diff))
                # inclusion: rj.lead = A ri.lead B with (A,B) != ("","")
                if i != j and len(ri.lead) < len(rj.lead):
                    for pos in range(len(rj.lead) - len(ri.lead) + 1):
                        if rj.lead[pos:pos + len(ri.lead)] == ri.lead:
                            w = rj.lead
                            left = self._apply_at(w, pos, ri)
                            right = self._apply_at(w, 0, rj)
                            diff = self.reduce(left) - self.reduce(right)
                            resolved = diff.is_zero()
                            ok_all = ok_all and resolved
                            ambiguities.append((w, resolved, None if resolved else diff))
        report = ConfluenceReport(
            status="confluent" if ok_all else "non_confluent",
            bound=bound,
            ambiguities=sorted(ambiguities, key=lambda t: (len(t[0]), t[0])),
            assumptions=self.assumptions,
        )
        self.confluence = report
        return report

    def _apply_at(self, w, pos, rule):
        a, b = w[:pos], w[pos + len(rule.lead):]
        out = NcPoly.zero(self.order.gens)
        for tw, tc in rule.tail.terms.items():
            out = out + NcPoly(self.order.gens, {a + tw + b: tc})
        return out

    def is_confluent(self, need_bound=None):
        rep = self.confluence
        if rep is None or rep.status != "confluent":
            return False
        return need_bound is None or rep.bound >= need_bound

    # -- centrality ------------------------------------------------------------

    def central_by_rewrite(self, z):
        need = (z.degree() or 0) + 2
        if self.confluence is None:
            self.confluence_check(max(6, need))
        if not self.is_confluent(need):
            raise NotConfluent(
                f"system not confluent up to degree {need}; use the ideal method"
            )
        gens = self.order.gens
        residuals = {}
        for j in range(len(gens)):
            xj = NcPoly.gen(j, gens)
            residuals[gens[j]] = self.reduce(z * xj - xj * z)
        return all(r.is_zero() for r in residuals.values()), residuals

    # -- normal words -----------------------------------------------------------

    def normal_words(self, degree):
        """All words of the given length avoiding every leading word."""
        leads = [r.lead for r in self.rules]
        out = []

        def ok_tail(w):
            return not any(w[-len(L):] == L for L in leads if len(L) <= len(w))

        def rec(w):
            if len(w) == degree:
                out.append(w)
                return
            for i in range(len(self.order.gens)):
                nw = w + (i,)
                if ok_tail(nw):
                    rec(nw)

        rec(())
        return out

    def describe(self):
        lines = [f"order: {self.order.describe()}"]
        for r in self.rules:
            lw = "*".join(self.order.gens[i] for i in r.lead)
            lines.append(f"  {lw} -> {r.tail}")
        if self.assumptions:
            lines.append("assumptions: " + ", ".join(self.assumptions))
        return "\n".join(lines)


def solve_central(rs, degree, inhomogeneous=True):
    """Basis of central elements of degree <= degree (confluent systems).

    Solves reduce([z, X_j]) = 0 over the normal words linearly; returns a
    list of NcPoly candidates (coefficients normalized on the largest word).
    """
    from .linalg import scalar_nullspace
    from .scalars import S_ZERO

    if rs.confluence is None:
        rs.confluence_check(max(6, degree + 2))
    if not rs.is_confluent(degree + 2):
        raise NotConfluent("central element solve needs confluence")
    gens = rs.order.gens
    words = []
    degrees = range(0 if inhomogeneous else degree, degree + 1)
    for d in degrees:
        words.extend(rs.normal_words(d))
    index = {w: i for i, w in enumerate(words)}
    rows = {}
    for ci, w in enumerate(words):
        zw = NcPoly(gens, {w: S_ONE})
        for j in range(len(gens)):
            xj = NcPoly.gen(j, gens)
            res = rs.reduce(zw * xj - xj * zw)
            for rw, c in res.terms.items():
                key = (j, rw)
                row = rows.setdefault(key, {})
                cur = row.get(ci, S_ZERO) + c
                if cur.is_zero():
                    row.pop(ci, None)
                else:
                    row[ci] = cur
    basis = scalar_nullspace(list(rows.values()), len(words))
    out = []
    for vec in basis:
        z = NcPoly(gens, {words[i]: vec[i] for i in range(len(words))
                          if not vec[i].is_zero()})
        if z.is_zero() or set(z.terms) == {()}:
            continue
        top = rs.order.leading_word(z)
        z = z.scale(z.terms[top].inv())
        out.append(z)
    return out


def _is_unit_coeff(c):
    """Rationals and q-monomials are units of the coefficient ring; anything
    touching a deformation parameter needs a recorded nonvanishing assumption."""
    if not c.is_monomial():
        return False
    (m, _), = c.num.items()
    return all(v == "q" for v, _ in m)


def orient(relations, order):
    """Orient each relation on its deglex-leading word.

    The leading coefficient is divided out; when it involves parameters the
    nonvanishing assumption is recorded on the system.
    """
    rules = []
    assumptions = []
    for rel in relations:
        if rel.is_zero():
            continue
        lead = order.leading_word(rel)
        c = rel.terms[lead]
        if not lead:
            raise NotOrientable(rel, lead, "relation is a nonzero scalar")
        if not _is_unit_coeff(c):
            assumptions.append(f"{c} != 0")
        tail = NcPoly(
            rel.gens,
            {w: -(cc / c) for w, cc in rel.terms.items() if w != lead},
        )
        for w in tail.terms:
            if not order.gt(lead, w):
                raise NotOrientable(rel, lead, f"tail word {w} not smaller than lead")
        rules.append(Rule(lead, tail))
    return RewriteSystem(rules, order, assumptions)
