"""Filtered two-sided ideal spans by exact linear algebra.

This is the fallback engine for presentations that are not confluent: ideal
membership, centrality, graded and filtered Hilbert dimensions, and
reconstruction of a cyclic potential from a relation set.  All results are
exact; membership failures are reported as "not_found within bound+margin",
never as disproofs.

The span of {u*r*v : |u| + deg(r) + |v| <= bound + margin} is row-reduced
incrementally: each row is fully reduced against the current triangular
basis (pivot = deglex-largest word) and inserted if nonzero.  Because pivot
words are distinct and every other word in a reduced row is strictly
smaller, a linear combination of basis rows lies in the degree-<=k
filtration layer exactly when every participating pivot has length <= k, so
one elimination yields all layer dimensions at once.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .freealg import NcPoly, CyclicPotential, cyclic_derivative, min_rotation
from .linalg import scalar_nullspace
from .rewrite import MonomialOrder
from .scalars import S_ONE, S_ZERO, Scalar, rat


class SizeExceeded(RuntimeError):
    pass


class NotHomogeneous(ValueError):
    pass


DEFAULT_MARGIN = 2
DEFAULT_SYMBOLIC_COLUMN_CAP = 3000


def _column_cap():
    return int(os.environ.get("NC_MAX_COLUMNS", DEFAULT_SYMBOLIC_COLUMN_CAP))


@dataclass
class RelationSet:
    gens: tuple
    relations: list
    bindings: dict = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        self.gens = tuple(self.gens)
        for r in self.relations:
            if r.is_zero():
                raise ValueError("zero relation")
            if r.gens != self.gens:
                raise ValueError("relation alphabet mismatch")

    def specialize(self, bindings):
        rels = [r.map_coeffs(lambda c: c.specialize(bindings)) for r in self.relations]
        rels = [r for r in rels if not r.is_zero()]
        merged = dict(self.bindings)
        merged.update(bindings)
        return RelationSet(self.gens, rels, merged, self.name)

    def is_homogeneous(self):
        return all(
            len({len(w) for w in r.terms}) == 1 for r in self.relations
        )

    def is_specialized(self):
        return all(
            c.is_rational() for r in self.relations for c in r.terms.values()
        )

    def max_degree(self):
        return max((r.degree() for r in self.relations), default=0)


@dataclass
class DimSeries:
    dims: list

    def __iter__(self):
        return iter(self.dims)

    def __eq__(self, other):
        if isinstance(other, DimSeries):
            return self.dims == other.dims
        return self.dims == list(other)

    def __repr__(self):
        return f"DimSeries({self.dims})"

    def to_json(self):
        return list(self.dims)


class IdealSpan:
    """Row-reduced basis of a filtered piece of a two-sided ideal."""

    def __init__(self, rels, bound, margin=DEFAULT_MARGIN, order=None,
                 keep_certificates=False, homogeneous_degree=None):
        self.rels = rels
        self.bound = bound
        self.margin = margin
        self.order = order or MonomialOrder(rels.gens)
        self.keep_certificates = keep_certificates
        self.pivots = {}      # word -> row (dict word->coeff, row[word] == 1)
        self.certs = {}       # word -> dict gen_id -> coeff
        self.generators = []  # gen_id -> (rel_index, u, v)
        # coefficients are plain Fractions when the relations are fully
        # specialized; Scalars only for symbolic runs
        self.rational_mode = rels.is_specialized()
        n = len(rels.gens)
        total = bound + margin
        ncols = sum(n ** k for k in range(total + 1))
        if not self.rational_mode and ncols > _column_cap():
            raise SizeExceeded(
                f"{ncols} columns exceed the symbolic cap {_column_cap()}"
            )
        self._build(homogeneous_degree)

    def _coeff(self, c):
        if self.rational_mode:
            return c.as_rational() if isinstance(c, Scalar) else Fraction(c)
        return c if isinstance(c, Scalar) else rat(c)

    def _inv(self, c):
        return 1 / c if self.rational_mode else c.inv()

    # -- construction ---------------------------------------------------------

    def _rows(self, homogeneous_degree):
        n = len(self.rels.gens)
        total = self.bound + self.margin

        def words(length):
            if length == 0:
                yield ()
                return
            for w in words(length - 1):
                for i in range(n):
                    yield w + (i,)

        for ri, r in enumerate(self.rels.relations):
            d = r.degree()
            if homogeneous_degree is not None:
                budgets = [homogeneous_degree - d] if homogeneous_degree >= d else []
            else:
                budgets = range(total - d + 1)
            for budget in budgets:
                for lu in range(budget + 1):
                    for u in words(lu):
                        for v in words(budget - lu):
                            yield ri, u, v

    def _build(self, homogeneous_degree):
        rows = sorted(
            self._rows(homogeneous_degree),
            key=lambda t: (len(t[1]) + len(t[2]), t[0], t[1], t[2]),
        )
        conv = [
            {w: self._coeff(c) for w, c in r.terms.items()}
            for r in self.rels.relations
        ]
        for ri, u, v in rows:
            row = {u + w + v: c for w, c in conv[ri].items()}
            cert = None
            if self.keep_certificates:
                gid = len(self.generators)
                self.generators.append((ri, u, v))
                cert = {gid: self._coeff(S_ONE)}
            self._insert(row, cert)

    def _negkey(self, w):
        k = self.order.key(w)
        return (-k[0], tuple(-x for x in k[1]))

    def _reduce_row(self, row, cert=None):
        pivots = self.pivots
        heap = [(self._negkey(w), w) for w in row if w in pivots]
        heapq.heapify(heap)
        while heap:
            _, hit = heapq.heappop(heap)
            c = row.get(hit)
            if not c:
                continue
            base = pivots[hit]
            for w, bc in base.items():
                prev = row.get(w)
                if prev is None:
                    nc = -c * bc
                    row[w] = nc
                    if w in pivots:
                        heapq.heappush(heap, (self._negkey(w), w))
                else:
                    nc = prev - c * bc
                    if nc:
                        row[w] = nc
                    else:
                        del row[w]
            if cert is not None:
                bcert = self.certs[hit]
                for gid, gc in bcert.items():
                    nv = cert.get(gid)
                    nv = -c * gc if nv is None else nv - c * gc
                    if nv:
                        cert[gid] = nv
                    else:
                        cert.pop(gid, None)
        return row, cert

    def _insert(self, row, cert=None):
        row = {w: c for w, c in row.items() if c}
        row, cert = self._reduce_row(row, cert)
        if not row:
            return None
        lead = max(row, key=self.order.key)
        inv = self._inv(row[lead])
        row = {w: c * inv for w, c in row.items()}
        self.pivots[lead] = row
        if cert is not None:
            self.certs[lead] = {g: c * inv for g, c in cert.items()}
        return lead

    # -- queries ----------------------------------------------------------------

    def rank_by_degree(self):
        out = {}
        for w in self.pivots:
            out[len(w)] = out.get(len(w), 0) + 1
        return out

    def basis_in_filtration(self, k=None):
        """Rows of the reduced basis lying in the degree-<=k layer."""
        k = self.bound if k is None else k
        return {w: r for w, r in self.pivots.items() if len(w) <= k}

    def reduce_member(self, f):
        """Normal form of f against the basis; zero means f is in the span."""
        row = {w: self._coeff(c) for w, c in f.terms.items() if not c.is_zero()}
        cert = {} if self.keep_certificates else None
        row, cert = self._reduce_row(row, cert)
        return row, cert

    def contains(self, f):
        if f.degree() is not None and f.degree() > self.bound:
            raise ValueError("degree of f exceeds the span bound")
        row, cert = self.reduce_member(f)
        if row:
            return False, None
        if not self.keep_certificates:
            return True, None
        # f = sum over generators of -cert[gid] * (u r v)
        combo = []
        for gid, c in sorted((cert or {}).items()):
            ri, u, v = self.generators[gid]
            combo.append((ri, u, v, -c))
        return True, combo


def ideal_basis(rels, bound, margin=DEFAULT_MARGIN, keep_certificates=False):
    span = IdealSpan(rels, bound, margin, keep_certificates=keep_certificates)
    return span


def contains(rels, f, bound, margin=DEFAULT_MARGIN, keep_certificates=False,
             span=None):
    """Certified ideal membership within the stated filtration bound."""
    span = span or IdealSpan(rels, bound, margin, keep_certificates=keep_certificates)
    ok, cert = span.contains(f)
    return ("yes" if ok else "not_found"), cert, span


def verify_certificate(rels, f, combo):
    """Re-multiply a membership certificate and compare against f exactly."""
    total = NcPoly.zero(rels.gens)
    for ri, u, v, c in combo:
        r = rels.relations[ri]
        term = NcPoly(rels.gens, {u + w + v: cc for w, cc in r.terms.items()})
        total = total + term.scale(c)
    return total == f


def central_by_ideal(rels, z, bound=None, margin=DEFAULT_MARGIN):
    """Check [z, X_j] in the ideal for every generator, one shared span."""
    if bound is None:
        bound = (z.degree() or 0) + 1
    span = IdealSpan(rels, bound, margin)
    details = {}
    ok = True
    for j, g in enumerate(rels.gens):
        xj = NcPoly.gen(j, rels.gens)
        f = z * xj - xj * z
        verdict, _, _ = contains(rels, f, bound, margin, span=span)
        details[g] = verdict
        ok = ok and verdict == "yes"
    return ok, {"bound": bound, "margin": margin, "commutators": details}


def graded_dims(rels, N):
    """Hilbert dimensions of the graded quotient (homogeneous relations)."""
    if not rels.is_homogeneous():
        raise NotHomogeneous("graded dimensions need homogeneous relations")
    n = len(rels.gens)
    dims = []
    for k in range(N + 1):
        if k < min(r.degree() for r in rels.relations):
            dims.append(n ** k)
            continue
        span = IdealSpan(rels, k, margin=0, homogeneous_degree=k)
        rank = sum(v for d, v in span.rank_by_degree().items() if d == k)
        dims.append(n ** k - rank)
    return DimSeries(dims)


def filtered_dims(rels, N, margin=DEFAULT_MARGIN):
    """Dimensions of the filtration layers F_k/F_{k-1} of the quotient."""
    n = len(rels.gens)
    span = IdealSpan(rels, N, margin)
    by_deg = span.rank_by_degree()
    dims = []
    prev_total = 0
    cum_words = 0
    cum_rank = 0
    for k in range(N + 1):
        cum_words += n ** k
        cum_rank += by_deg.get(k, 0)
        total = cum_words - cum_rank
        dims.append(total - prev_total)
        prev_total = total
    return DimSeries(dims)


def find_potential(rels, order=None):
    """Reconstruct a cyclic potential whose derivatives give the relations.

    Solves the linear system d_j(Phi) = lambda_j * rel_sigma(j) over cyclic
    words of degree <= max(deg)+1, with one nonzero scalar per relation; the
    pairing sigma of derivatives to relations is searched over permutations.
    Returns (potential, lambdas, pairing) or None.
    """
    gens = rels.gens
    n = len(gens)
    if n != 3 or len(rels.relations) != 3:
        raise ValueError("potential reconstruction expects 3 generators, 3 relations")
    order = order or MonomialOrder(gens)
    maxdeg = rels.max_degree() + 1

    classes = []
    seen = set()

    def words(length):
        if length == 0:
            yield ()
            return
        for w in words(length - 1):
            for i in range(n):
                yield w + (i,)

    for d in range(maxdeg + 1):
        for w in words(d):
            r = min_rotation(w)
            if r not in seen:
                seen.add(r)
                classes.append(r)
    nclasses = len(classes)
    ncols = nclasses + 3  # potential coefficients then lambda_1..3

    der_rows = {}  # (j, word) -> {class_col: coeff}
    for ci, cw in enumerate(classes):
        for j in range(3):
            der = cyclic_derivative(CyclicPotential(gens, {cw: S_ONE}), j)
            for w, c in der.terms.items():
                key = (j, w)
                d = der_rows.setdefault(key, {})
                cur = d.get(ci, S_ZERO) + c
                if cur.is_zero():
                    d.pop(ci, None)
                else:
                    d[ci] = cur

    for sigma in permutations(range(3)):
        rows = {k: dict(v) for k, v in der_rows.items()}
        for j in range(3):
            for w, c in rels.relations[sigma[j]].terms.items():
                d = rows.setdefault((j, w), {})
                cur = d.get(nclasses + j, S_ZERO) - c
                if cur.is_zero():
                    d.pop(nclasses + j, None)
                else:
                    d[nclasses + j] = cur
        basis = scalar_nullspace(list(rows.values()), ncols)
        if not basis:
            continue

        def lambdas_ok(vec):
            return all(not vec[nclasses + j].is_zero() for j in range(3))

        candidate = None
        for vec in basis:
            if lambdas_ok(vec):
                candidate = vec
                break
        if candidate is None and len(basis) > 1:
            acc = [S_ZERO] * ncols
            for k, vec in enumerate(basis):
                acc = [a + rat(k + 1) * b for a, b in zip(acc, vec)]
                if lambdas_ok(acc):
                    candidate = acc
                    break
        if candidate is None:
            continue
        phi = CyclicPotential(gens, {
            classes[i]: candidate[i] for i in range(nclasses)
            if not candidate[i].is_zero()
        })
        lams = [candidate[nclasses + j] for j in range(3)]
        if phi.terms:
            top = max(phi.terms, key=order.key)
            u = phi.terms[top].inv()
            phi = phi.scale(u)
            lams = [l * u for l in lams]
        return phi, lams, sigma
    return None
