"""Exact multivariate polynomials with a standard grading.

A polynomial is a map from exponent tuples to nonzero field elements,
bound to a :class:`PolyRing` that fixes the field, the variable names,
and the active monomial order.  Values are immutable once built.
"""

import re
from fractions import Fraction

from .errors import StructuralError
from .monomials import mono_degree, mono_mul
from .orders import DEGREVLEX

NEG_INF = float("-inf")
POS_INF = float("inf")


class PolyRing:
    """A polynomial ring over an exact field, every variable in degree 1."""

    def __init__(self, field, names, order=DEGREVLEX):
        self.field = field
        self.names = tuple(names)
        self.n = len(self.names)
        if len(set(self.names)) != self.n:
            raise StructuralError("duplicate variable names")
        self.order = order

    def __repr__(self):
        return f"{self.field}[{', '.join(self.names)}]"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return Polynomial(self, {(0,) * self.n: self.field.one})

    def var(self, i):
        exps = [0] * self.n
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def monomial(self, exps, coeff=None):
        exps = tuple(exps)
        if len(exps) != self.n:
            raise StructuralError("exponent vector of wrong length")
        c = self.field.one if coeff is None else self.field.of(coeff)
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, {exps: c})

    def from_terms(self, raw_terms):
        """Combine a raw (exponents, coefficient) list into a polynomial.

        Like terms are merged and zero coefficients stripped; the term
        order is whatever the ring's active order says it is.
        """
        terms = {}
        F = self.field
        for exps, c in raw_terms:
            exps = tuple(exps)
            if len(exps) != self.n:
                raise StructuralError("exponent vector of wrong length")
            if any(e < 0 for e in exps):
                raise StructuralError("negative exponent")
            c = F.of(c)
            acc = F.add(terms.get(exps, F.zero), c)
            if F.is_zero(acc):
                terms.pop(exps, None)
            else:
                terms[exps] = acc
        return Polynomial(self, terms)

    def from_int(self, k):
        c = self.field.of(k)
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, {(0,) * self.n: c})


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuple to coefficient."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lead = None

    def _check(self, other):
        if self.ring != other.ring:
            raise StructuralError("mixed ambient rings")

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; the zero polynomial gets the -inf sentinel."""
        if not self.terms:
            return NEG_INF
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def lead(self):
        """(monomial, coefficient) of the leading term under the ring order."""
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            key = self.ring.order.key
            m = max(self.terms, key=key)
            self._lead = (m, self.terms[m])
        return self._lead

    def lead_monomial(self):
        return self.lead()[0]

    def lead_coeff(self):
        return self.lead()[1]

    def monic(self):
        if not self.terms:
            return self
        F = self.ring.field
        c = self.lead_coeff()
        if c == F.one:
            return self
        inv = F.inv(c)
        return Polynomial(self.ring, {m: F.mul(inv, v) for m, v in self.terms.items()})

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = F.add(out.get(m, F.zero), c)
            if F.is_zero(acc):
                out.pop(m, None)
            else:
                out[m] = acc
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.field.of(other)
            return self.scale(c)
        self._check(other)
        F = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                acc = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if F.is_zero(acc):
                    out.pop(m, None)
                else:
                    out[m] = acc
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c):
        F = self.ring.field
        if F.is_zero(c):
            return self.ring.zero
        return Polynomial(self.ring, {m: F.mul(c, v) for m, v in self.terms.items()})

    def shift(self, exps, c=None):
        """Multiply by the monomial c * x^exps."""
        F = self.ring.field
        if c is None:
            c = F.one
        if F.is_zero(c):
            return self.ring.zero
        return Polynomial(
            self.ring, {mono_mul(m, exps): F.mul(c, v) for m, v in self.terms.items()}
        )

    def __pow__(self, k):
        if k < 0:
            raise StructuralError("negative power")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self):
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __repr__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# Text syntax: integer coefficients, declared names, operators + - * ^.


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|-)")


def parse_polynomial(ring, text):
    """Parse e.g. ``"x^2*y - 3*z^3"`` into a polynomial of the ring.

    Juxtaposition is not multiplication; every product needs ``*``.
    """
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise StructuralError(f"unexpected character {text[pos:].lstrip()[0]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()

    index = {name: i for i, name in enumerate(ring.names)}
    terms = []
    i = 0

    def parse_factor(i):
        tok = tokens[i]
        if tok.isdigit():
            return int(tok), None, i + 1
        if tok in index:
            var = index[tok]
            if i + 1 < len(tokens) and tokens[i + 1] == "^":
                if i + 2 >= len(tokens) or not tokens[i + 2].isdigit():
                    raise StructuralError("exponent must be a literal integer")
                return None, (var, int(tokens[i + 2])), i + 3
            return None, (var, 1), i + 1
        raise StructuralError(f"unknown variable {tok!r}")

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise StructuralError("dangling sign")
        coeff = sign
        exps = [0] * ring.n
        while True:
            c, ve, i = parse_factor(i)
            if c is not None:
                coeff *= c
            else:
                exps[ve[0]] += ve[1]
            if i < len(tokens) and tokens[i] == "*":
                i += 1
                if i >= len(tokens):
                    raise StructuralError("dangling '*'")
                continue
            break
        terms.append((tuple(exps), coeff))
        if i < len(tokens) and tokens[i] not in "+-":
            raise StructuralError(f"expected '+' or '-' before {tokens[i]!r}")
    return ring.from_terms(terms)


def _coeff_str(field, c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return str(c)
    return str(int(c))


def format_polynomial(poly):
    """Render in the same syntax ``parse_polynomial`` accepts."""
    if poly.is_zero():
        return "0"
    ring = poly.ring
    parts = []
    for m, c in poly.sorted_terms():
        factors = []
        for name, e in zip(ring.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        cs = _coeff_str(ring.field, c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if not factors:
            body = mag
        elif mag == "1":
            body = "*".join(factors)
        else:
            body = mag + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
