"""Exact multivariate polynomial arithmetic over a ring context.

Polynomials are stored as a map from exponent tuples to nonzero field
coefficients.  All arithmetic is exact; results are canonical (no zero
coefficients, coefficients normalized by the field), so equality of
values is equality of polynomials.
"""


def mono_mul(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


def mono_divides(e1, e2):
    """Whether x^e1 divides x^e2."""
    return all(a <= b for a, b in zip(e1, e2))


def mono_div(e1, e2):
    """Exponent of x^e1 / x^e2; requires divisibility."""
    return tuple(a - b for a, b in zip(e1, e2))


def mono_lcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def mono_gcd(e1, e2):
    return tuple(min(a, b) for a, b in zip(e1, e2))


def mono_degree(e):
    return sum(e)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        # terms must already be normalized: no zero coefficients, field values
        self.ring = ring
        self.terms = terms

    # -- constructors --

    @classmethod
    def from_dict(cls, ring, mapping):
        field = ring.field
        n = ring.nvars
        terms = {}
        for expo, coeff in mapping.items():
            expo = tuple(expo)
            if len(expo) != n or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector {expo!r}")
            c = field.normalize(coeff)
            if c != field.zero:
                terms[expo] = field.add(terms[expo], c) if expo in terms else c
        return cls(ring, {e: c for e, c in terms.items() if c != field.zero})

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def constant(cls, ring, value):
        c = ring.field.normalize(value)
        if c == ring.field.zero:
            return cls(ring, {})
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def variable(cls, ring, name):
        expo = [0] * ring.nvars
        expo[ring.index(name)] = 1
        return cls(ring, {tuple(expo): ring.field.one})

    @classmethod
    def monomial(cls, ring, expo, coeff=1):
        return cls.from_dict(ring, {tuple(expo): coeff})

    # -- predicates and views --

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), self.ring.field.zero)

    def sorted_terms(self, order=None):
        """Terms as (exponent, coefficient), descending under the order."""
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order=None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = (order or self.ring.order).key
        return max(self.terms, key=key)

    def leading_coefficient(self, order=None):
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order=None):
        m = self.leading_monomial(order)
        return m, self.terms[m]

    # -- arithmetic --

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("mixed ring contexts")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ring, other)
        self._check_ring(other)
        field = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            if acc is None:
                out[e] = c
            else:
                s = field.add(acc, c)
                if s == field.zero:
                    del out[e]
                else:
                    out[e] = s
        return Polynomial(self.ring, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ring, other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_ring(other)
        field = self.ring.field
        zero = field.zero
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = field.mul(c1, c2)
                acc = out.get(e)
                if acc is None:
                    out[e] = c
                else:
                    s = field.add(acc, c)
                    if s == zero:
                        del out[e]
                    else:
                        out[e] = s
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value):
        field = self.ring.field
        c = field.normalize(value)
        if c == field.zero:
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {e: field.mul(k, c) for e, k in self.terms.items()})

    def mul_term(self, coeff, expo):
        """Multiply by coeff * x^expo (coeff a field element, expo a tuple)."""
        field = self.ring.field
        if coeff == field.zero:
            return Polynomial(self.ring, {})
        out = {}
        for e, c in self.terms.items():
            out[tuple(a + b for a, b in zip(e, expo))] = field.mul(c, coeff)
        return Polynomial(self.ring, out)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self, order=None):
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        field = self.ring.field
        if lc == field.one:
            return self
        inv = field.inv(lc)
        return Polynomial(self.ring, {e: field.mul(c, inv) for e, c in self.terms.items()})

    # -- calculus and evaluation --

    def derivative(self, var):
        """Formal partial derivative with respect to a variable (name or index)."""
        i = self.ring.index(var) if isinstance(var, str) else var
        field = self.ring.field
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            coeff = field.mul(c, field.normalize(e[i]))
            if coeff == field.zero:
                continue
            new = list(e)
            new[i] -= 1
            out[tuple(new)] = coeff
        return Polynomial(self.ring, out)

    def evaluate(self, values):
        """Evaluate at a point; values is a sequence of field elements."""
        field = self.ring.field
        if len(values) != self.ring.nvars:
            raise ValueError("wrong number of coordinates")
        values = [field.normalize(v) for v in values]
        acc = field.zero
        for e, c in self.terms.items():
            term = c
            for i, exp in enumerate(e):
                if exp:
                    term = field.mul(term, field.pow(values[i], exp))
            acc = field.add(acc, term)
        return acc

    # -- identity --

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, int) and other == 0:
                return not self.terms
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        names = self.ring.variables
        pieces = []
        for e, c in self.sorted_terms():
            factors = []
            for name, exp in zip(names, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            mono = "*".join(factors)
            if not mono:
                pieces.append(field.format(c))
            elif c == field.one:
                pieces.append(mono)
            elif field.characteristic == 0 and c == -field.one:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{field.format(c)}*{mono}")
        text = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                text += " - " + piece[1:]
            else:
                text += " + " + piece
        return text

    def __repr__(self):
        return f"Polynomial({self})"


def substitute(f, assignment, ring=None):
    """Compose f with an assignment mapping every variable of f's ring to a
    polynomial (or constant) of one target ring.

    The target ring is inferred from the polynomial images, or can be given
    explicitly when every image is a constant.  Fields must agree.
    """
    images = {}
    target = ring
    for name, value in assignment.items():
        if isinstance(value, Polynomial):
            if target is None:
                target = value.ring
            elif value.ring != target:
                raise ValueError("substitution images live in different rings")
        images[name] = value
    if target is None:
        raise ValueError("cannot infer the target ring from constant images")
    if target.field != f.ring.field:
        raise ValueError("substitution cannot change the coefficient field")
    for name in f.ring.variables:
        if name not in images:
            raise ValueError(f"assignment misses variable {name!r}")
    images = {
        name: v if isinstance(v, Polynomial) else Polynomial.constant(target, v)
        for name, v in images.items()
    }
    result = Polynomial.zero(target)
    one = Polynomial.constant(target, 1)
    # cache small powers of each image
    powers = {name: [one] for name in f.ring.variables}
    for e, c in sorted(f.terms.items()):
        term = Polynomial.constant(target, c)
        for name, exp in zip(f.ring.variables, e):
            if not exp:
                continue
            cache = powers[name]
            while len(cache) <= exp:
                cache.append(cache[-1] * images[name])
            term = term * cache[exp]
        result = result + term
    return result
