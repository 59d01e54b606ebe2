"""Buchberger's algorithm for ideals and for submodules of free modules.

The ring case implements normal-strategy pair selection with Gebauer-Moeller
pruning (the systematic form of Buchberger's product and chain criteria) and
returns the reduced Groebner basis, which is the unique canonical
representative of the ideal for the given order.  The module case keeps the
engine deliberately plain (no pruning criteria; S-vectors only for pairs
whose leading terms sit in the same position) and powers the syzygy
computation used by the local-invariant code.
"""

from dataclasses import dataclass

from .polynomials import Polynomial, mono_div, mono_divides, mono_lcm, mono_mul
from .rings import MonomialOrder


class GroebnerBasis:
    """A reduced Groebner basis: monic, auto-reduced, sorted by leading term."""

    __slots__ = ("ring", "order", "elements", "reduced")

    def __init__(self, ring, order, elements, reduced=True):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)
        self.reduced = reduced

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.elements]

    def contains(self, f):
        return normal_form(f, self).is_zero()

    def is_unit_ideal(self):
        return len(self.elements) == 1 and self.elements[0].total_degree() == 0

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.elements))

    def __repr__(self):
        return "GroebnerBasis[" + ", ".join(str(g) for g in self.elements) + "]"


def _reduce(f, reducers, order):
    """Full normal form of f against a list of (lm, lc, poly) reducers."""
    field = f.ring.field
    zero = field.zero
    key = order.key
    work = dict(f.terms)
    result = {}
    while work:
        e = max(work, key=key)
        c = work[e]
        for lm, lc, g in reducers:
            if mono_divides(lm, e):
                factor = field.div(c, lc)
                q = mono_div(e, lm)
                for eg, cg in g.terms.items():
                    target = mono_mul(eg, q)
                    acc = work.get(target, zero)
                    acc = field.sub(acc, field.mul(cg, factor))
                    if acc == zero:
                        work.pop(target, None)
                    else:
                        work[target] = acc
                break
        else:
            result[e] = c
            del work[e]
    return Polynomial(f.ring, result)


def _reducer_list(polys, order):
    return [(g.leading_monomial(order), g.leading_coefficient(order), g) for g in polys]


def normal_form(f, basis):
    """Normal form of f modulo a Groebner basis.

    No term of the result is divisible by a leading term of the basis, and
    f minus the result lies in the ideal.  For a reduced basis the result
    is unique.
    """
    if isinstance(basis, GroebnerBasis):
        if f.ring != basis.ring:
            raise ValueError("polynomial and basis live in different rings")
        return _reduce(f, _reducer_list(basis.elements, basis.order), basis.order)
    raise TypeError("normal_form expects a GroebnerBasis")


def s_polynomial(f, g, order):
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    lcm = mono_lcm(lmf, lmg)
    field = f.ring.field
    a = f.mul_term(field.inv(lcf), mono_div(lcm, lmf))
    b = g.mul_term(field.inv(lcg), mono_div(lcm, lmg))
    return a - b


def _update_pairs(G, lms, P, new_index, order, use_criteria):
    """Gebauer-Moeller update of the pair set after appending generator new_index."""
    lcm = mono_lcm
    lmf = lms[new_index]
    if not use_criteria:
        return P | {(i, new_index) for i in range(new_index)}
    # prune old pairs strictly dominated by the new generator
    kept = set()
    for i, j in P:
        l = lcm(lms[i], lms[j])
        if (
            not mono_divides(lmf, l)
            or lcm(lms[i], lmf) == l
            or lcm(lms[j], lmf) == l
        ):
            kept.add((i, j))
    # group candidate new pairs by lcm, keep a minimal, non-product pair per lcm
    by_lcm = {}
    for i in range(new_index):
        by_lcm.setdefault(lcm(lms[i], lmf), []).append(i)
    minimal = []
    for l in sorted(by_lcm, key=order.key):
        if all(not mono_divides(m, l) for m in minimal):
            minimal.append(l)
    for l in minimal:
        coprime = any(lcm(lms[i], lmf) == mono_mul(lms[i], lmf) for i in by_lcm[l])
        if not coprime:
            kept.add((min(by_lcm[l]), new_index))
    return kept


def _minimalize(polys, order):
    out = []
    for g in sorted(polys, key=lambda h: order.key(h.leading_monomial(order))):
        lm = g.leading_monomial(order)
        if all(not mono_divides(h.leading_monomial(order), lm) for h in out):
            out.append(g)
    return out


def _interreduce(polys, order):
    out = []
    for i, g in enumerate(polys):
        others = polys[:i] + polys[i + 1 :]
        r = _reduce(g, _reducer_list(others, order), order)
        out.append(r.monic(order))
    return out


def buchberger(gens, order=None, use_criteria=True):
    """Reduced Groebner basis of the ideal generated by gens.

    Deterministic: the reduced basis is unique for the order, so the output
    does not depend on the input ordering.  Zero generators are discarded.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one generator (possibly zero)")
    if not all(isinstance(g, Polynomial) for g in gens):
        raise TypeError("generators must be polynomials")
    rings = {g.ring for g in gens}
    if len(rings) > 1:
        raise ValueError("mixed ring contexts")
    ring = gens[0].ring
    order = ring.order if order is None else order
    if not isinstance(order, MonomialOrder):
        from .rings import order_from_spec

        order = order_from_spec(order)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(ring, order, [])

    G = []
    lms = []
    P = set()
    for f in gens:
        f = f.monic(order)
        G.append(f)
        lms.append(f.leading_monomial(order))
        P = _update_pairs(G, lms, P, len(G) - 1, order, use_criteria)

    def pair_rank(pair):
        i, j = pair
        l = mono_lcm(lms[i], lms[j])
        return (sum(l), order.key(l), i, j)

    while P:
        i, j = min(P, key=pair_rank)
        P.remove((i, j))
        s = s_polynomial(G[i], G[j], order)
        r = _reduce(s, _reducer_list(G, order), order)
        if not r.is_zero():
            r = r.monic(order)
            G.append(r)
            lms.append(r.leading_monomial(order))
            P = _update_pairs(G, lms, P, len(G) - 1, order, use_criteria)

    reduced = _interreduce(_minimalize(G, order), order)
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return GroebnerBasis(ring, order, reduced)


# -- free modules ------------------------------------------------------------


class VectorElement:
    """Element of a free module R^s, stored as a tuple of polynomials."""

    __slots__ = ("ring", "components")

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("vector needs at least one component")
        rings = {c.ring for c in components}
        if len(rings) > 1:
            raise ValueError("mixed ring contexts")
        self.ring = components[0].ring
        self.components = components

    @property
    def arity(self):
        return len(self.components)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __sub__(self, other):
        return VectorElement([a - b for a, b in zip(self.components, other.components)])

    def mul_term(self, coeff, expo):
        return VectorElement([c.mul_term(coeff, expo) for c in self.components])

    def __eq__(self, other):
        return isinstance(other, VectorElement) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class ModuleOrder:
    """Order on module terms (position, monomial).

    position_first=False is term-over-position: compare the ring order
    first, ties broken by the lower position winning.  position_first=True
    makes every term in an earlier position greater, which eliminates
    leading components (used for syzygies).
    """

    ring_order: MonomialOrder
    position_first: bool = False

    def key(self, term):
        pos, expo = term
        if self.position_first:
            return (-pos, self.ring_order.key(expo))
        return (self.ring_order.key(expo), -pos)


def _vector_terms(v):
    for pos, comp in enumerate(v.components):
        for e, c in comp.terms.items():
            yield (pos, e), c


def _vector_lead(v, morder):
    best = None
    best_key = None
    for term, c in _vector_terms(v):
        k = morder.key(term)
        if best_key is None or k > best_key:
            best, best_key = (term, c), k
    if best is None:
        raise ValueError("zero vector has no leading term")
    return best


def _vector_reduce(v, reducers, morder):
    """Full normal form of a vector against reducers [((pos, lm), lc, vector)]."""
    ring = v.ring
    field = ring.field
    zero = field.zero
    work = {}
    for term, c in _vector_terms(v):
        work[term] = c
    result = {}
    while work:
        term = max(work, key=morder.key)
        c = work[term]
        pos, e = term
        for (rpos, rlm), rlc, rvec in reducers:
            if rpos == pos and mono_divides(rlm, e):
                factor = field.div(c, rlc)
                q = mono_div(e, rlm)
                for (gpos, ge), gc in _vector_terms(rvec):
                    target = (gpos, mono_mul(ge, q))
                    acc = work.get(target, zero)
                    acc = field.sub(acc, field.mul(gc, factor))
                    if acc == zero:
                        work.pop(target, None)
                    else:
                        work[target] = acc
                break
        else:
            result[term] = c
            del work[term]
    comps = [dict() for _ in range(v.arity)]
    for (pos, e), c in result.items():
        comps[pos][e] = c
    return VectorElement([Polynomial(ring, comp) for comp in comps])


def _vector_monic(v, morder):
    _, lc = _vector_lead(v, morder)
    field = v.ring.field
    inv = field.inv(lc)
    return VectorElement([c.scale(inv) for c in v.components])


def module_groebner(gens, morder=None):
    """Groebner basis of the submodule of R^s generated by gens.

    S-vectors are formed only for pairs whose leading terms lie in the same
    position.  The result is minimal, auto-reduced, monic, and sorted, so it
    is canonical for the order.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    arities = {g.arity for g in gens}
    if len(arities) > 1:
        raise ValueError("inconsistent numbers of components")
    ring = gens[0].ring
    if morder is None:
        morder = ModuleOrder(ring.order)
    field = ring.field

    G = [_vector_monic(g, morder) for g in gens]
    leads = [_vector_lead(g, morder) for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))
             if leads[i][0][0] == leads[j][0][0]}

    def reducers():
        return [(leads[k][0], leads[k][1], G[k]) for k in range(len(G))]

    def pair_rank(pair):
        i, j = pair
        (pos, ei), _ = leads[i]
        (_, ej), _ = leads[j]
        l = mono_lcm(ei, ej)
        return (sum(l), morder.key((pos, l)), i, j)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.remove((i, j))
        (pos, ei), ci = leads[i]
        (_, ej), cj = leads[j]
        l = mono_lcm(ei, ej)
        a = G[i].mul_term(field.inv(ci), mono_div(l, ei))
        b = G[j].mul_term(field.inv(cj), mono_div(l, ej))
        s = a - b
        if s.is_zero():
            continue
        r = _vector_reduce(s, reducers(), morder)
        if not r.is_zero():
            r = _vector_monic(r, morder)
            G.append(r)
            leads.append(_vector_lead(r, morder))
            new = len(G) - 1
            pairs |= {(k, new) for k in range(new) if leads[k][0][0] == leads[new][0][0]}

    # minimalize by leading-term divisibility within each position
    order_idx = sorted(range(len(G)), key=lambda k: morder.key(leads[k][0]))
    minimal = []
    for k in order_idx:
        (pos, e), _ = leads[k]
        dominated = any(
            leads[m][0][0] == pos and mono_divides(leads[m][0][1], e) for m in minimal
        )
        if not dominated:
            minimal.append(k)
    basis = [G[k] for k in minimal]
    basis_leads = [leads[k] for k in minimal]
    # full auto-reduction
    reduced = []
    for idx, g in enumerate(basis):
        red = [
            (lead[0], lead[1], h)
            for k, (h, lead) in enumerate(zip(basis, basis_leads))
            if k != idx
        ]
        r = _vector_reduce(g, red, morder)
        reduced.append(_vector_monic(r, morder))
    reduced.sort(key=lambda g: morder.key(_vector_lead(g, morder)[0]))
    return reduced


def syzygies(gens):
    """Generators of the syzygy module of (g_1, ..., g_s).

    Embeds (g_i, e_i) in R^(1+s), computes a module Groebner basis under an
    order that eliminates the first component, and keeps the elements whose
    first component vanishes.  Every returned vector is verified to satisfy
    sum a_i g_i = 0 exactly.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("syzygies of an empty generator list")
    if any(g.is_zero() for g in gens):
        raise ValueError("syzygies expects nonzero generators")
    rings = {g.ring for g in gens}
    if len(rings) > 1:
        raise ValueError("mixed ring contexts")
    ring = gens[0].ring
    s = len(gens)
    zero = Polynomial.zero(ring)
    one = Polynomial.constant(ring, 1)
    embedded = []
    for i, g in enumerate(gens):
        comps = [g] + [zero] * s
        comps[1 + i] = one
        embedded.append(VectorElement(comps))
    morder = ModuleOrder(ring.order, position_first=True)
    basis = module_groebner(embedded, morder)
    out = []
    for v in basis:
        if v.components[0].is_zero():
            tail = VectorElement(v.components[1:])
            acc = Polynomial.zero(ring)
            for a, g in zip(tail.components, gens):
                acc = acc + a * g
            if not acc.is_zero():
                raise AssertionError("syzygy verification failed")
            out.append(tail)
    return out
