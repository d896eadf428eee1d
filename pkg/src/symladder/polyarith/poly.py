"""Sparse multivariate polynomials over Q or a prime field.

Monomials are dense exponent tuples, one slot per ring variable.  A
polynomial is a mapping ``{exponents: coefficient}`` with no zero
coefficients stored.  Rational coefficients are ``fractions.Fraction``;
prime field coefficients are plain ints reduced into ``range(p)``.
"""

from fractions import Fraction
from functools import cached_property

from ..errors import PolyError

ORDERS = ("degrevlex", "lex")


class MonomialOrder:
    """A monomial order: ``degrevlex`` or ``lex`` with a variable priority.

    ``priority`` lists variable indices from most to least significant; by
    default the ring's own variable order is used.
    """

    def __init__(self, kind="degrevlex", priority=None):
        if kind not in ORDERS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.priority = None if priority is None else tuple(priority)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, priority={self.priority!r})"

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.priority == other.priority)

    def __hash__(self):
        return hash((self.kind, self.priority))

    def key_function(self, nvars):
        """Return ``key(exps)`` such that larger keys mean larger monomials."""
        perm = self.priority
        if perm is not None and sorted(perm) != list(range(nvars)):
            raise ValueError("priority must be a permutation of the variables")
        if self.kind == "lex":
            if perm is None:
                return lambda e: e
            return lambda e: tuple(e[i] for i in perm)
        # degrevlex: higher degree wins, then the smallest exponent in the
        # least significant differing variable wins
        if perm is None:
            return lambda e: (sum(e), tuple(-x for x in reversed(e)))
        rev = tuple(reversed(perm))
        return lambda e: (sum(e), tuple(-e[i] for i in rev))


class Ring:
    """Polynomial ring ``K[names]`` with ``K = Q`` (modulus 0) or ``F_p``."""

    def __init__(self, names, order=None, modulus=0):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self.order = order if order is not None else MonomialOrder()
        self.modulus = int(modulus)
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError("modulus must be 0 or a prime")
        self.key = self.order.key_function(self.nvars)
        self._index = {name: i for i, name in enumerate(self.names)}
        self.one_exps = (0,) * self.nvars

    def __repr__(self):
        field = "Q" if self.modulus == 0 else f"Fp:{self.modulus}"
        return f"Ring({field}, {self.nvars} vars, {self.order.kind})"

    @property
    def field_name(self):
        return "Q" if self.modulus == 0 else f"Fp:{self.modulus}"

    def index(self, name):
        return self._index[name]

    # coefficient arithmetic
    def coerce(self, c):
        p = self.modulus
        if p == 0:
            return Fraction(c)
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, p) % p
        return int(c) % p

    def inv(self, c):
        if self.modulus == 0:
            return 1 / Fraction(c)
        return pow(c, -1, self.modulus)

    # constructors
    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {self.one_exps: self.coerce(1)})

    def const(self, c):
        c = self.coerce(c)
        return Poly(self, {self.one_exps: c} if c else {})

    def var(self, name_or_index, power=1):
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        e = [0] * self.nvars
        e[i] = power
        return Poly(self, {tuple(e): self.coerce(1)})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1):
        c = self.coerce(coeff)
        return Poly(self, {tuple(exps): c} if c else {})

    def from_dict(self, terms):
        out = {}
        for e, c in terms.items():
            c = self.coerce(c)
            if c:
                out[tuple(e)] = c
        return Poly(self, out)

    def change(self, names=None, order=None, modulus=None):
        return Ring(self.names if names is None else names,
                    self.order if order is None else order,
                    self.modulus if modulus is None else modulus)

    def convert(self, f):
        """Map ``f`` from another ring into this one, matching variables by name."""
        if f.ring is self:
            return f
        idx = [self._index[n] for n in f.ring.names]
        out = {}
        for e, c in f.terms.items():
            ne = [0] * self.nvars
            for i, x in enumerate(e):
                if x:
                    ne[idx[i]] = x
            c = self.coerce(c)
            if c:
                out[tuple(ne)] = c
        return Poly(self, out)


class Poly:
    """Immutable sparse polynomial; build through a :class:`Ring`."""

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # structure
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.names == other.ring.names and self.terms == other.terms
        if other == 0:
            return not self.terms
        return self == self.ring.const(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @cached_property
    def lm(self):
        """Leading exponent tuple under the ring order."""
        if not self.terms:
            raise PolyError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.key)

    @property
    def lc(self):
        return self.terms[self.lm]

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.ring.key(kv[0]), reverse=True)

    def support(self):
        """Indices of variables that occur in some term."""
        s = set()
        for e in self.terms:
            s.update(i for i, x in enumerate(e) if x)
        return s

    # arithmetic
    def _wrap(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring.names != self.ring.names:
                raise PolyError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._wrap(other)
        p = self.ring.modulus
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.modulus
        if p:
            return Poly(self.ring, {e: p - c for e, c in self.terms.items()})
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._wrap(other)
        p = self.ring.modulus
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if p:
                    v %= p
                out[e] = v
        return Poly(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        c = self.ring.coerce(c)
        if not c:
            return self.ring.zero()
        p = self.ring.modulus
        if p:
            return Poly(self.ring, {e: v * c % p for e, v in self.terms.items()})
        return Poly(self.ring, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, exps, c):
        """Multiply by the single term ``c * x^exps``."""
        p = self.ring.modulus
        if p:
            return Poly(self.ring, {tuple(a + b for a, b in zip(e, exps)): v * c % p
                                    for e, v in self.terms.items()})
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, exps)): v * c
                                for e, v in self.terms.items()})

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.inv(self.lc))

    def substitute(self, images):
        """Evaluate with variable ``i`` replaced by ``images[i]`` (a Poly)."""
        R = images[0].ring if images else self.ring
        result = R.zero()
        cache = {}
        for e, c in self.terms.items():
            term = R.const(c)
            for i, x in enumerate(e):
                if x:
                    key = (i, x)
                    if key not in cache:
                        cache[key] = images[i] ** x
                    term = term * cache[key]
            result = result + term
        return result

    # text
    def to_text(self, fmt=None):
        """Canonical text: terms in decreasing order, ``c*x^e*...`` with explicit signs."""
        if not self.terms:
            return "0"
        fmt = fmt or (lambda i: self.ring.names[i])
        parts = []
        for e, c in self.sorted_terms():
            if self.ring.modulus and c > self.ring.modulus // 2:
                c = c - self.ring.modulus
            sign = "-" if c < 0 else "+"
            body = [str(abs(c))]
            for i, x in enumerate(e):
                if x == 1:
                    body.append(fmt(i))
                elif x:
                    body.append(f"{fmt(i)}^{x}")
            parts.append(sign + "*".join(body))
        return " ".join(parts)

    def __repr__(self):
        return self.to_text()
