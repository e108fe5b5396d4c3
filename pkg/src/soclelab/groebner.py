"""Ideals in a graded ring presentation and the ideal-theoretic toolkit.

An ideal of R = S/a is stored by homogeneous generator lifts; its cached
Groebner basis is the reduced basis of the full preimage (generators
plus relations), which is the canonical object membership and Hilbert
computations reduce against.
"""

import itertools
import warnings

from .errors import DomainError, StructuralError
from .modgb import groebner_polys, poly_divide_exact, poly_normal_form
from .monomials import mono_divides, monomials_of_degree
from .orders import EliminationOrder
from .poly import PolyRing, Polynomial
from .rings import RingPresentation


class Ideal:
    """Homogeneous ideal of a ring presentation, given by generator lifts."""

    def __init__(self, ring, generators):
        if not isinstance(ring, RingPresentation):
            raise StructuralError("ideal needs a ring presentation")
        self.ring = ring
        gens = []
        for f in generators:
            if f.ring != ring.ambient:
                raise StructuralError("generator from a different ambient ring")
            if f.is_zero():
                continue
            if not f.is_homogeneous():
                raise StructuralError("ideal generators must be homogeneous")
            gens.append(f)
        self.generators = tuple(gens)
        self._gb = None

    def __repr__(self):
        gens = ", ".join(str(f) for f in self.generators) or "0"
        return f"Ideal({gens})"

    def groebner(self):
        """Reduced Groebner basis of generators + relations, cached."""
        if self._gb is None:
            self._gb = tuple(groebner_polys(list(self.generators) + list(self.ring.relations)))
        return self._gb

    def is_zero(self):
        return not self.groebner()

    def is_unit(self):
        gb = self.groebner()
        return any(g.degree() == 0 for g in gb)

    def quotient_ring(self):
        """R/I, as a ring presentation of the same ambient ring."""
        rels = [g for g in self.groebner() if g.degree() >= 1]
        return RingPresentation(self.ring.ambient, rels)


def normal_form(f, basis):
    """Remainder of f modulo a Groebner basis (or any monic reducer list)."""
    return poly_normal_form(f, list(basis))


def buchberger(ideal):
    """Reduced Groebner basis of an ideal; see Ideal.groebner."""
    return ideal.groebner()


def contains(ideal, f):
    """Membership f in I, decided by normal form against the cached basis."""
    if f.is_zero():
        return True
    return poly_normal_form(f, list(ideal.groebner())).is_zero()


def ideal_sum(a, b):
    if a.ring != b.ring:
        raise StructuralError("ideals in different rings")
    return Ideal(a.ring, list(a.generators) + list(b.generators))


def ideal_power(ideal, t):
    """I^t, generated by t-fold products of generators, then minimalized."""
    if t < 0:
        raise DomainError("negative ideal power")
    if t == 0:
        warnings.warn("I^0 is the unit ideal by convention", stacklevel=2)
        return Ideal(ideal.ring, [ideal.ring.ambient.one])
    if t == 1:
        return ideal
    prods = []
    for combo in itertools.combinations_with_replacement(ideal.generators, t):
        f = combo[0]
        for g in combo[1:]:
            f = f * g
        prods.append(f)
    kept = minimal_generators(Ideal(ideal.ring, prods))
    return Ideal(ideal.ring, kept)


def frobenius_power(ideal, q):
    """Bracket power I^[q]: the ideal of q-th powers, q a power of char."""
    p = ideal.ring.field.characteristic
    if p == 0:
        raise DomainError("Frobenius powers need positive characteristic")
    m = q
    while m % p == 0:
        m //= p
    if m != 1 or q < 1:
        raise DomainError(f"{q} is not a power of the characteristic {p}")
    return Ideal(ideal.ring, [f**q for f in ideal.generators])


def _extended_ring(ring):
    names = ("_u",) + ring.names
    return PolyRing(ring.field, names, ring.order)


def _embed(ext, f, shift=1):
    return Polynomial(ext, {(0,) * shift + m: c for m, c in f.terms.items()})


def _project(ring, f):
    return Polynomial(ring, {m[1:]: c for m, c in f.terms.items()})


def ideal_intersection(a, b):
    """I cap J via the auxiliary-variable construction <uI, (1-u)J> cap S."""
    if a.ring != b.ring:
        raise StructuralError("ideals in different rings")
    ring = a.ring
    amb = ring.ambient
    ext = _extended_ring(amb)
    u = ext.var(0)
    one = ext.one
    gens = []
    for f in list(a.generators) + list(ring.relations):
        gens.append(u * _embed(ext, f))
    for g in list(b.generators) + list(ring.relations):
        gens.append((one - u) * _embed(ext, g))
    gb = groebner_polys(gens, order=EliminationOrder(1), use_product=True)
    out = []
    for h in gb:
        if all(m[0] == 0 for m in h.terms):
            f = _project(amb, h)
            # The intersection ideal is homogeneous even though the
            # elimination computation is not; keep graded components.
            comps = {}
            for m, c in f.terms.items():
                comps.setdefault(sum(m), []).append((m, c))
            for terms in comps.values():
                out.append(amb.from_terms(terms))
    return Ideal(ring, out)


def ideal_colon(a, b):
    """(I : J) = {f : f J in I}, via intersection with principal ideals.

    Works on the full preimage in the ambient polynomial ring: the lift
    of (I : g) is (lift(I) : g), computed as (1/g)(lift(I) cap (g)) with
    the principal intersection taken in S so the division is exact.
    """
    if a.ring != b.ring:
        raise StructuralError("ideals in different rings")
    ring = a.ring
    amb = RingPresentation(ring.ambient, ())
    lift = Ideal(amb, list(a.generators) + list(ring.relations))
    live = [g for g in b.generators if not ring.is_zero_in_quotient(g)]
    if not live:
        return Ideal(ring, [ring.ambient.one])
    result = None
    for g in live:
        meet = ideal_intersection(lift, Ideal(amb, [g]))
        cols = [poly_divide_exact(h, g) for h in meet.generators]
        part = Ideal(ring, cols)
        result = part if result is None else ideal_intersection(result, part)
    return result


def minimal_generators(ideal):
    """A minimal homogeneous generating subset, greedily by degree.

    Degree by degree, a candidate is kept iff it falls outside the span
    of R-multiples of the generators already kept (graded Nakayama, by
    exact linear algebra on normal forms modulo the relations).  The
    survivor degrees are a canonical multiset even though the survivors
    themselves depend on the input order.
    """
    from .linalg import Span

    ring = ideal.ring
    F = ring.field
    cands = [(f.degree(), i, ring.nf(f)) for i, f in enumerate(ideal.generators)]
    cands = [(d, i, f) for d, i, f in cands if not f.is_zero()]
    cands.sort(key=lambda t: (t[0], t[1]))
    kept = []
    pos = 0
    while pos < len(cands):
        deg = cands[pos][0]
        basis = ring.standard_monomials(deg)
        index = {m: k for k, m in enumerate(basis)}

        def coords(f):
            v = [F.zero] * len(index)
            for m, c in f.terms.items():
                v[index[m]] = c
            return v

        span = Span(F, len(index))
        for g in kept:
            for m in ring.standard_monomials(deg - g.degree()):
                span.add(coords(ring.nf(g.shift(m))))
        while pos < len(cands) and cands[pos][0] == deg:
            f = cands[pos][2]
            if span.add(coords(f)):
                kept.append(f)
            pos += 1
    return kept


def minimal_generator_degrees(ideal):
    return sorted(f.degree() for f in minimal_generators(ideal))


def hilbert_function(obj, degree):
    """dim_k of the degree piece.

    For an Ideal the quotient R/I is measured (standard monomials modulo
    the lead-term ideal); ring presentations measure themselves; module
    presentations go through exact linear algebra on the presentation.
    """
    if isinstance(obj, Ideal):
        if degree < 0:
            return 0
        leads = [g.lead_monomial() for g in obj.groebner()]
        n = obj.ring.n
        return sum(
            1
            for m in monomials_of_degree(n, degree)
            if not any(mono_divides(lt, m) for lt in leads)
        )
    if isinstance(obj, RingPresentation):
        return obj.hilbert(degree)
    from .modules import module_hilbert

    return module_hilbert(obj, degree)


def krull_dimension(obj):
    """Dimension of R/I (Ideal) or of R itself; -1 for the unit ideal."""
    if isinstance(obj, RingPresentation):
        return obj.dimension()
    gb = obj.groebner()
    if any(g.degree() == 0 for g in gb):
        return -1
    return RingPresentation(obj.ring.ambient, [g for g in gb]).dimension()
