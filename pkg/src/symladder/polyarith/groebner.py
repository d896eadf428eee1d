"""Buchberger's algorithm, normal forms and Krull dimension.

The pair set is maintained with the Gebauer-Moeller update (product and
chain criteria) and pairs are selected by the normal strategy, ties broken
by pair index so runs are reproducible.
"""

import time
from dataclasses import dataclass

from ..errors import PolyError, ResourceBound
from .poly import Poly, Ring


@dataclass
class Bounds:
    """Resource caps; exceeding one raises :class:`ResourceBound`."""

    max_degree: int = 30
    max_pairs: int = 200_000
    time_budget: float | None = None


DEFAULT_BOUNDS = Bounds()


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _reduce_terms(terms, ring, basis, full=True):
    """Divide a term dict by ``basis``; returns the remainder dict.

    ``basis`` is a list of ``(lm, lc_inverse, terms)`` triples.  With
    ``full=False`` only the leading term is reduced (top reduction).
    """
    key = ring.key
    p = ring.modulus
    f = dict(terms)
    rem = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for lm, lcinv, gterms in basis:
            if _divides(lm, m):
                q = tuple(x - y for x, y in zip(m, lm))
                factor = c * lcinv
                if p:
                    factor %= p
                for e, v in gterms.items():
                    ee = tuple(a + b for a, b in zip(e, q))
                    nv = f.get(ee, 0) - factor * v
                    if p:
                        nv %= p
                    if nv:
                        f[ee] = nv
                    else:
                        del f[ee]
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[m] = c
            del f[m]
    return rem


def _entry(g):
    return (g.lm, g.ring.inv(g.lc), g.terms)


def normal_form(p, basis, order=None):
    """Remainder of ``p`` on division by ``basis``.

    When ``basis`` is a Groebner basis for the ring order this is the unique
    normal form, zero exactly when ``p`` lies in the ideal.
    """
    ring = p.ring
    if order is not None and order != ring.order:
        ring = ring.change(order=order)
        p = ring.convert(p)
        basis = [ring.convert(g) for g in basis]
    entries = [_entry(g) for g in basis if g]
    return Poly(ring, _reduce_terms(p.terms, ring, entries))


def reduce_with_quotients(p, basis):
    """Division algorithm returning ``(quotients, remainder)``.

    ``p == sum(q_i * basis_i) + remainder`` holds identically.
    """
    ring = p.ring
    quotients = [ring.zero() for _ in basis]
    f = p
    rem = ring.zero()
    while f:
        m, c = f.lm, f.lc
        for i, g in enumerate(basis):
            if g and _divides(g.lm, m):
                q = tuple(x - y for x, y in zip(m, g.lm))
                factor = ring.coerce(c * ring.inv(g.lc))
                t = ring.monomial(q, factor)
                quotients[i] = quotients[i] + t
                f = f - g.mul_term(q, factor)
                break
        else:
            lead = ring.monomial(m, c)
            rem = rem + lead
            f = f - lead
    return quotients, rem


def spoly(f, g):
    ring = f.ring
    L = _lcm(f.lm, g.lm)
    a = tuple(x - y for x, y in zip(L, f.lm))
    b = tuple(x - y for x, y in zip(L, g.lm))
    return f.mul_term(a, ring.inv(f.lc)) - g.mul_term(b, ring.inv(g.lc))


class _PairSet:
    """Gebauer-Moeller bookkeeping over indices into a polynomial list."""

    def __init__(self, ring):
        self.key = ring.key
        self.pairs = {}  # (i, j) -> lcm
        self.alive = []

    def add(self, lms, h):
        lmh = lms[h]
        cand = sorted(((g, _lcm(lms[g], lmh)) for g in self.alive),
                      key=lambda kv: (self.key(kv[1]), kv[0]))
        kept = []
        for idx, (g, L) in enumerate(cand):
            if _coprime(lms[g], lmh):
                kept.append((g, L, True))
                continue
            # chain criterion against the unprocessed and the kept pairs
            if any(_divides(L2, L) for _, L2 in cand[idx + 1:]):
                continue
            if any(_divides(L2, L) for _, L2, _ in kept):
                continue
            kept.append((g, L, False))
        pruned = {}
        for (i, j), L in self.pairs.items():
            if (_divides(lmh, L) and _lcm(lms[i], lmh) != L
                    and _lcm(lms[j], lmh) != L):
                continue
            pruned[(i, j)] = L
        # product criterion: coprime pairs never enter
        for g, L, coprime in kept:
            if not coprime:
                pruned[(g, h)] = L
        self.pairs = pruned
        self.alive = [g for g in self.alive if not _divides(lmh, lms[g])] + [h]

    def pop(self):
        (i, j), L = min(self.pairs.items(), key=lambda kv: (self.key(kv[1]), kv[0]))
        del self.pairs[(i, j)]
        return i, j, L


def groebner(generators, order=None, bounds=None):
    """Reduced Groebner basis of the ideal spanned by ``generators``.

    The result is monic, auto-reduced and sorted by decreasing leading
    monomial, so it is unique for the ring (or given) order.
    """
    bounds = bounds or DEFAULT_BOUNDS
    gens = [g for g in generators if g]
    if not gens:
        return []
    ring = gens[0].ring
    if order is not None and order != ring.order:
        ring = ring.change(order=order)
        gens = [ring.convert(g) for g in gens]
    start = time.monotonic()

    polys = []
    lms = []
    entries = []
    pairs = _PairSet(ring)
    for g in gens:
        r = Poly(ring, _reduce_terms(g.terms, ring, entries))
        if not r:
            continue
        r = r.monic()
        if sum(r.lm) == 0:
            return [ring.one()]
        polys.append(r)
        lms.append(r.lm)
        entries.append(_entry(r))
        pairs.add(lms, len(polys) - 1)

    processed = 0
    while pairs.pairs:
        i, j, L = pairs.pop()
        processed += 1
        if processed > bounds.max_pairs:
            raise ResourceBound(f"more than {bounds.max_pairs} S-pairs")
        if sum(L) > bounds.max_degree:
            raise ResourceBound(f"S-pair degree {sum(L)} exceeds {bounds.max_degree}")
        if bounds.time_budget is not None and time.monotonic() - start > bounds.time_budget:
            raise ResourceBound(f"time budget {bounds.time_budget}s exceeded")
        s = spoly(polys[i], polys[j])
        r = Poly(ring, _reduce_terms(s.terms, ring, entries))
        if not r:
            continue
        r = r.monic()
        if sum(r.lm) == 0:
            return [ring.one()]
        polys.append(r)
        lms.append(r.lm)
        entries.append(_entry(r))
        pairs.add(lms, len(polys) - 1)

    return _reduce_basis([polys[k] for k in pairs.alive])


def _reduce_basis(G):
    ring = G[0].ring
    G = sorted(G, key=lambda g: ring.key(g.lm))
    minimal = []
    for idx, g in enumerate(G):
        if any(_divides(h.lm, g.lm) for h in G[:idx]):
            continue
        minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = [_entry(h) for k, h in enumerate(minimal) if k != idx]
        # leading term is untouched since no other lm divides it
        out.append(Poly(ring, _reduce_terms(g.terms, ring, others)).monic())
    out.sort(key=lambda g: ring.key(g.lm), reverse=True)
    return out


def is_groebner(basis):
    """Check Buchberger's criterion: every S-polynomial reduces to zero."""
    entries = [_entry(g) for g in basis if g]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            s = spoly(basis[a], basis[b])
            if _reduce_terms(s.terms, basis[a].ring, entries):
                return False
    return True


def contains(basis, p):
    return normal_form(p, basis).is_zero()


def min_hitting_set(sets):
    """Size of a smallest set of variables meeting every set in ``sets``.

    Sets are bitmasks.  Plain branch and bound, fine for the few dozen
    variables seen here.
    """
    sets = sorted(set(sets), key=lambda s: bin(s).count("1"))
    minimal = []
    for s in sets:
        if not any((m & s) == m for m in minimal):
            minimal.append(s)
    if any(s == 0 for s in minimal):
        raise PolyError("empty set cannot be hit")
    best = [sum(1 for _ in minimal) if minimal else 0]
    best[0] = min(best[0], bin(_union(minimal)).count("1"))

    def search(chosen, size, remaining):
        if size >= best[0]:
            return
        if not remaining:
            best[0] = size
            return
        # branch on the smallest unhit set
        target = min(remaining, key=lambda s: bin(s).count("1"))
        bits = target
        while bits:
            b = bits & -bits
            bits ^= b
            search(chosen | b, size + 1, [s for s in remaining if not s & b])

    search(0, 0, minimal)
    return best[0]


def _union(sets):
    u = 0
    for s in sets:
        u |= s
    return u


def krull_dimension(generators, num_vars=None, bounds=None, basis=None):
    """Krull dimension of ``K[x]/(generators)``.

    Computed from the degrevlex leading terms: the largest variable subset
    carrying no leading monomial.  Returns -1 for the unit ideal.
    """
    gens = [g for g in generators if g]
    if not gens:
        if num_vars is None:
            raise ValueError("num_vars required for the zero ideal")
        return num_vars
    ring = gens[0].ring
    n = ring.nvars if num_vars is None else num_vars
    if basis is None:
        basis = groebner(gens, order=_degrevlex(ring), bounds=bounds)
    masks = []
    for g in basis:
        m = 0
        for i, x in enumerate(g.lm):
            if x:
                m |= 1 << i
        if m == 0:
            return -1
        masks.append(m)
    return n - min_hitting_set(masks)


def height(generators, num_vars=None, bounds=None):
    gens = [g for g in generators if g]
    n = gens[0].ring.nvars if num_vars is None else num_vars
    return n - krull_dimension(gens, n, bounds)


def _degrevlex(ring):
    from .poly import MonomialOrder

    if ring.order.kind == "degrevlex":
        return ring.order
    return MonomialOrder("degrevlex")


__all__ = [
    "Bounds", "DEFAULT_BOUNDS", "groebner", "normal_form", "reduce_with_quotients",
    "spoly", "is_groebner", "contains", "krull_dimension", "height", "min_hitting_set",
    "Ring",
]
