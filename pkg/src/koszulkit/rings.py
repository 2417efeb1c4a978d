"""Exact coefficient fields, term orders, sparse polynomials and the text format.

Everything here is immutable after construction: monomials are plain exponent
tuples, polynomials are frozen {monomial: coefficient} maps attached to a ring
descriptor.  All arithmetic is exact (Fraction over the rationals, canonical
representatives in [0, p) over a prime field).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


# ---------------------------------------------------------------------------
# coefficient fields


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Exact coefficient field: the rationals or a prime field GF(p).

    Elements are Fraction (rationals) or int in [0, p) (prime field); the
    field object only carries the arithmetic.
    """

    def __init__(self, p=None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p}")
        self.p = p

    @property
    def is_prime_field(self):
        return self.p is not None

    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def coerce(self, k):
        """Coerce an integer (or Fraction over QQ) into the field."""
        if self.p is not None:
            if isinstance(k, Fraction):
                if k.denominator % self.p == 0:
                    raise ZeroDivisionError(f"denominator divisible by {self.p}")
                return k.numerator * self.inv(k.denominator % self.p) % self.p
            return int(k) % self.p
        return Fraction(k)

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if self.p is not None:
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of zero in prime field")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        """All field elements (prime field only)."""
        if self.p is None:
            raise ValueError("cannot enumerate an infinite field")
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def coeff_str(self, a):
        """Render a coefficient; prime-field values use the symmetric lift."""
        if self.p is not None:
            a %= self.p
            if self.p > 2 and a > self.p // 2:
                a -= self.p
            return str(a)
        return str(a)


QQ = Field()


def GF(p):
    return Field(p)


# ---------------------------------------------------------------------------
# term orders

LT, EQ, GT = -1, 0, 1


class TermOrder:
    """Base class; subclasses provide a sort key that is maximal on the
    leading monomial.  Keys compare as Python tuples."""

    n = 0

    def key(self, mono):
        raise NotImplementedError

    def cmp(self, u, v):
        if len(u) != self.n or len(v) != self.n:
            raise ValueError("monomial arity does not match the term order")
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return LT
        if ku > kv:
            return GT
        return EQ

    def variable_rank(self, i):
        """Position of variable i in the significance order (0 = largest)."""
        return self.perm.index(i)


def _check_perm(perm, n):
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"variable order must be a permutation of 0..{n - 1}")
    return perm


class Lex(TermOrder):
    def __init__(self, n, perm=None):
        self.n = n
        self.perm = _check_perm(perm if perm is not None else range(n), n)

    def key(self, mono):
        return tuple(mono[i] for i in self.perm)

    def __repr__(self):
        return f"Lex({list(self.perm)})"


class DegRevLex(TermOrder):
    def __init__(self, n, perm=None):
        self.n = n
        self.perm = _check_perm(perm if perm is not None else range(n), n)
        self._rev = tuple(reversed(self.perm))

    def key(self, mono):
        return (sum(mono), tuple(-mono[i] for i in self._rev))

    def __repr__(self):
        return f"DegRevLex({list(self.perm)})"


class Block(TermOrder):
    """Elimination order: `front` variables (compared by lex among
    themselves) dominate, ties broken by `back` on the remaining exponents.
    Any monomial meeting a front variable exceeds any monomial free of them.
    """

    def __init__(self, front, back):
        self.front = tuple(front)
        self.back = back
        self.n = back.n
        if any(i < 0 or i >= self.n for i in self.front):
            raise ValueError("front variables out of range")

    def key(self, mono):
        masked = tuple(0 if i in self.front else e for i, e in enumerate(mono))
        return (tuple(mono[i] for i in self.front), self.back.key(masked))

    def __repr__(self):
        return f"Block(front={list(self.front)}, back={self.back!r})"


def compare_monomials(order, u, v):
    """Compare two monomials; returns LT, EQ or GT."""
    return order.cmp(tuple(u), tuple(v))


def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u, v):
    """Does u divide v?"""
    return all(a <= b for a, b in zip(u, v))


def mono_div(u, v):
    """u / v, assuming v divides u."""
    q = tuple(a - b for a, b in zip(u, v))
    if any(e < 0 for e in q):
        raise ValueError("monomial division is not exact")
    return q


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_gcd(u, v):
    return tuple(min(a, b) for a, b in zip(u, v))


def mono_degree(u):
    return sum(u)


# ---------------------------------------------------------------------------
# polynomial rings and polynomials

_MAX_EXP = 2**20  # exponent overflow guard; every worked example stays tiny


class PolyRing:
    """Ring descriptor: coefficient field, variable names, attached order."""

    def __init__(self, field, names, order=None):
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.n = len(self.names)
        self.order = order if order is not None else DegRevLex(self.n)
        if self.order.n != self.n:
            raise ValueError("order arity does not match variable count")
        self._index = {nm: i for i, nm in enumerate(self.names)}

    def with_order(self, order):
        return PolyRing(self.field, self.names, order)

    def same_base(self, other):
        return self.field == other.field and self.names == other.names

    def var_index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.coerce(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.n: c})

    def var(self, i):
        e = [0] * self.n
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one()})

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def monomial(self, exps, coeff=1):
        c = self.field.coerce(coeff)
        if c == 0:
            return self.zero()
        return Polynomial(self, {tuple(exps): c})

    def from_terms(self, terms):
        """Build a polynomial from a {mono: coeff} map, dropping zeros."""
        clean = {}
        for m, c in terms.items():
            if any(e < 0 or e > _MAX_EXP for e in m):
                raise OverflowError("monomial exponent out of range")
            c = self.field.coerce(c)
            if c:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    def linear_form(self, coeffs):
        """Linear form with the given coefficient vector."""
        terms = {}
        for i, c in enumerate(coeffs):
            c = self.field.coerce(c)
            if c:
                e = [0] * self.n
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(self, terms)

    def parse(self, text):
        return parse_polynomial(text, self)

    def extended(self, extra_name="t0"):
        """Ring with one auxiliary variable appended (for eliminations)."""
        name = extra_name
        k = 0
        while name in self.names:
            k += 1
            name = f"{extra_name}_{k}"
        return PolyRing(self.field, self.names + (name,), Lex(self.n + 1)), self.n

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"


class Polynomial:
    """Sparse polynomial: immutable {exponent tuple: nonzero coefficient}."""

    __slots__ = ("ring", "terms", "_key")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._key = None

    # -- queries ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self):
        return len(self.terms) == 1

    def is_binomial(self):
        return len(self.terms) <= 2

    def num_terms(self):
        return len(self.terms)

    def leading(self, order=None):
        """Leading (monomial, coefficient) under the order; None if zero."""
        if not self.terms:
            return None
        order = order or self.ring.order
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order=None):
        lt = self.leading(order)
        return lt[0] if lt else None

    def tail(self, order=None):
        """self minus its leading term."""
        lt = self.leading(order)
        if lt is None:
            return self
        rest = dict(self.terms)
        del rest[lt[0]]
        return Polynomial(self.ring, rest)

    def coeff(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero())

    def support_vars(self):
        """Indices of variables occurring in some term."""
        out = set()
        for m in self.terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    def key(self):
        """Canonical hashable key (ring-independent term data)."""
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    # -- arithmetic ----------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        fld = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = fld.add(out.get(m, 0), c) if fld.p is not None else out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial(self.ring, out)

    def __neg__(self):
        fld = self.ring.field
        return Polynomial(self.ring, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __mul__(self, other):
        other = self._coerce_other(other)
        fld = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = fld.add(out.get(m, fld.zero()), fld.mul(c1, c2))
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce_other(other) - self

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        fld = self.ring.field
        c = fld.coerce(c) if not isinstance(c, (int, Fraction)) or fld.p is not None else c
        if fld.p is not None:
            c = c % fld.p
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {m: fld.mul(cc, c) for m, cc in self.terms.items()})

    def mul_monomial(self, mono, coeff=None):
        fld = self.ring.field
        coeff = fld.one() if coeff is None else coeff
        return Polynomial(
            self.ring,
            {mono_mul(m, mono): fld.mul(c, coeff) for m, c in self.terms.items()},
        )

    def monic(self, order=None):
        lt = self.leading(order)
        if lt is None:
            return self
        return self.scale(self.ring.field.inv(lt[1]))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return not self.terms
            other = self._coerce_other(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.key()))

    # -- printing ------------------------------------------------------------

    def _term_str(self, mono, coeff):
        fld = self.ring.field
        cs = fld.coeff_str(coeff)
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(self.ring.names[i])
            elif e > 1:
                factors.append(f"{self.ring.names[i]}^{e}")
        if not factors:
            return cs
        body = "*".join(factors)
        if cs == "1":
            return body
        if cs == "-1":
            return f"-{body}"
        return f"{cs}*{body}"

    def sorted_terms(self, order=None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            s = self._term_str(m, c)
            if not parts:
                parts.append(s)
            elif s.startswith("-"):
                parts.append(f"- {s[1:]}")
            else:
                parts.append(f"+ {s}")
        return " ".join(parts)

    def to_text(self):
        """Grammar-conforming rendering (integer coefficients).

        Over the rationals the coefficients are scaled to a primitive integer
        vector first, so the output always re-parses; the ideal generated is
        unchanged.
        """
        f = self
        if self.ring.field.p is None and self.terms:
            denoms = [c.denominator for c in self.terms.values()]
            lcm = 1
            for d in denoms:
                g = _gcd(lcm, d)
                lcm = lcm // g * d
            if lcm > 1:
                f = self.scale(lcm)
        return str(f)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# polynomial text format

_OPS = set("+-*^()")


class ParseError(ValueError):
    def __init__(self, msg, line, col):
        super().__init__(f"{msg} (line {line}, column {col})")
        self.line = line
        self.col = col


def _tokenize(text):
    toks = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _OPS:
            toks.append((ch, ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(("end", "", line, col))
    return toks


class _Parser:
    def __init__(self, toks, ring):
        self.toks = toks
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'}", tok[2], tok[3])
        self.pos += 1
        return tok

    def parse_expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.parse_term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.parse_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def parse_term(self):
        acc = self.parse_factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self):
        base = self.parse_base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            base = base ** int(tok[1])
        return base

    def parse_base(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return self.ring.constant(int(tok[1]))
        if tok[0] == "name":
            self.take()
            try:
                idx = self.ring.var_index(tok[1])
            except KeyError:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2], tok[3]) from None
            return self.ring.var(idx)
        if tok[0] == "(":
            self.take()
            inner = self.parse_expr()
            closing = self.peek()
            if closing[0] != ")":
                raise ParseError("expected ')'", closing[2], closing[3])
            self.take()
            return inner
        if tok[0] == "-":
            self.take()
            return -self.parse_base()
        raise ParseError(f"unexpected token {tok[1] or 'end of input'!r}", tok[2], tok[3])


def parse_polynomial(text, ring):
    """Parse the textual polynomial format: ints, names, ``+ - * ^ ( )``."""
    toks = _tokenize(text)
    parser = _Parser(toks, ring)
    poly = parser.parse_expr()
    end = parser.peek()
    if end[0] != "end":
        raise ParseError(f"trailing input {end[1]!r}", end[2], end[3])
    return poly


# ---------------------------------------------------------------------------
# linear forms over a prime field, one representative per scalar class


def enumerate_linear_forms(ring, variables=None):
    """Yield every nonzero linear form with leading coefficient 1, one per
    scalar class; count is (p^n - 1)/(p - 1).

    The leading coefficient is the first nonzero one in declaration order of
    `variables` (default: all ring variables).
    """
    fld = ring.field
    if fld.p is None:
        raise ValueError("linear form enumeration needs a finite field")
    p = fld.p
    idxs = list(range(ring.n)) if variables is None else [
        v if isinstance(v, int) else ring.var_index(v) for v in variables
    ]
    k = len(idxs)
    for lead in range(k):
        for tail in product(range(p), repeat=k - lead - 1):
            coeffs = [0] * ring.n
            coeffs[idxs[lead]] = 1
            for off, c in enumerate(tail):
                coeffs[idxs[lead + 1 + off]] = c
            yield ring.linear_form(coeffs)


def linear_form_count(p, n):
    return (p**n - 1) // (p - 1)
