"""Prime fields, graded polynomial rings and their elements.

Polynomials are stored as ``{exponent tuple: coefficient}`` maps with
coefficients canonical in ``[0, p)``.  A :class:`GradedRing` is the presentation
``k[x_1..x_n]/I``; a :class:`GradedPoly` is an element of the *polynomial* ring
(reduction modulo the relations is explicit, see :meth:`GradedRing.reduce`).
"""

from __future__ import annotations

import functools
import hashlib
import re
from typing import Iterable, Mapping, Sequence

ORDERS = ("grevlex", "lex")


class AlgebraError(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p."""

    def __init__(self, characteristic: int):
        p = int(characteristic)
        if not 2 <= p < 2**31 or not is_prime(p):
            raise AlgebraError(f"characteristic must be a prime below 2^31, got {characteristic}")
        self.p = p

    def __call__(self, value: int) -> int:
        return int(value) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def _grevlex_key(weights, exp):
    return (sum(w * e for w, e in zip(weights, exp)), sum(exp), tuple(-e for e in reversed(exp)))


def monomial_key(order: str, weights: Sequence[int]):
    """Sort key for exponent tuples; larger key = larger monomial."""
    weights = tuple(weights)
    if order == "grevlex":
        return functools.lru_cache(maxsize=None)(lambda e: _grevlex_key(weights, e))
    if order == "lex":
        return lambda e: e
    raise AlgebraError(f"unknown monomial order {order!r}")


class GradedRing:
    """Presentation ``F_p[x_1..x_n]/(relations)`` with per-variable degrees.

    Variables of odd degree are only allowed in characteristic 2, where the
    graded-commutative ring is commutative.
    """

    def __init__(self, characteristic: int, variables: Sequence, relations: Iterable = (), order: str = "grevlex"):
        self.field = PrimeField(characteristic)
        self.p = self.field.p
        names, degrees = [], []
        for v in variables:
            name, deg = (v, 1) if isinstance(v, str) else (v[0], int(v[1]))
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise AlgebraError(f"bad variable name {name!r}")
            if deg < 0:
                raise AlgebraError(f"variable {name} has negative degree")
            if deg % 2 and self.p != 2:
                raise AlgebraError(f"odd degree variable {name} needs characteristic 2")
            names.append(name)
            degrees.append(deg)
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate variable names")
        if order not in ORDERS:
            raise AlgebraError(f"unknown monomial order {order!r}")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.nvars = len(names)
        self.order = order
        self.key = monomial_key(order, degrees)
        self._index = {n: i for i, n in enumerate(names)}
        rels = []
        for r in relations:
            f = self.parse(r) if isinstance(r, str) else self.poly(r.terms)
            if f.is_zero():
                continue
            if f.homogeneous_degree() is None:
                raise AlgebraError(f"relation {f} is not homogeneous")
            rels.append(f)
        self.relations = tuple(rels)
        self._relation_gb = None

    # construction -----------------------------------------------------
    def poly(self, terms: Mapping | None = None) -> "GradedPoly":
        return GradedPoly(self, terms or {})

    @property
    def zero(self) -> "GradedPoly":
        return GradedPoly(self, {})

    @property
    def one(self) -> "GradedPoly":
        return self.const(1)

    def const(self, c: int) -> "GradedPoly":
        return GradedPoly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "GradedPoly":
        i = self._index[name]
        e = [0] * self.nvars
        e[i] = 1
        return GradedPoly(self, {tuple(e): 1})

    @property
    def gens(self) -> tuple:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, exp, coeff: int = 1) -> "GradedPoly":
        return GradedPoly(self, {tuple(exp): coeff})

    def parse(self, text: str) -> "GradedPoly":
        return parse_poly(self, text)

    def __call__(self, x) -> "GradedPoly":
        if isinstance(x, GradedPoly):
            if x.ring is not self and x.ring != self:
                raise AlgebraError("ring mismatch")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, int):
            return self.const(x)
        raise TypeError(f"cannot convert {type(x).__name__} to a polynomial")

    # grading ----------------------------------------------------------
    def degree_of(self, exp) -> int:
        return sum(w * e for w, e in zip(self.degrees, exp))

    @functools.lru_cache(maxsize=None)
    def monomials_of_degree(self, d: int) -> tuple:
        """All exponent vectors of internal degree d, largest first.

        Requires every variable degree to be positive."""
        if any(w == 0 for w in self.degrees):
            raise AlgebraError("graded pieces are infinite when a variable has degree 0")
        out = []
        n = self.nvars

        def rec(i, left, cur):
            if i == n:
                if left == 0:
                    out.append(tuple(cur))
                return
            w = self.degrees[i]
            for e in range(left // w, -1, -1):
                cur.append(e)
                rec(i + 1, left - e * w, cur)
                cur.pop()

        if d >= 0:
            rec(0, d, [])
        out.sort(key=self.key, reverse=True)
        return tuple(out)

    # relations --------------------------------------------------------
    def relation_gb(self):
        if self._relation_gb is None:
            from .groebner import Ideal

            self._relation_gb = Ideal(self, []).gb()
        return self._relation_gb

    def reduce(self, f: "GradedPoly") -> "GradedPoly":
        """Normal form of f modulo the defining relations."""
        if not self.relations:
            return f
        return self.relation_gb().normal_form(f)

    @functools.lru_cache(maxsize=None)
    def standard_monomials(self, d: int) -> tuple:
        """Basis of the degree-d piece of the quotient ring (monomials not in LT(I))."""
        mons = self.monomials_of_degree(d)
        if not self.relations:
            return mons
        lts = [g.leading_exp() for g in self.relation_gb().basis]
        return tuple(m for m in mons if not any(all(a <= b for a, b in zip(lt, m)) for lt in lts))

    def is_quotient(self) -> bool:
        return bool(self.relations)

    # identity ---------------------------------------------------------
    def describe(self) -> dict:
        return {
            "characteristic": self.p,
            "variables": [[n, d] for n, d in zip(self.names, self.degrees)],
            "relations": [str(r) for r in self.relations],
            "order": self.order,
        }

    @functools.cached_property
    def digest(self) -> str:
        text = repr(sorted(self.describe().items()))
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def __eq__(self, other):
        return self is other or (isinstance(other, GradedRing) and self.digest == other.digest)

    def __hash__(self):
        return hash(self.digest)

    def __repr__(self):
        vs = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        rel = f" / ({', '.join(map(str, self.relations))})" if self.relations else ""
        return f"GradedRing(F_{self.p}[{vs}]{rel}, {self.order})"


class GradedPoly:
    """Immutable polynomial over a :class:`GradedRing`."""

    __slots__ = ("ring", "terms", "_hdeg", "_hash")

    def __init__(self, ring: GradedRing, terms: Mapping):
        p = ring.p
        n = ring.nvars
        clean = {}
        for e, c in terms.items():
            c %= p
            if c:
                e = tuple(e)
                if len(e) != n:
                    raise AlgebraError(f"exponent {e} has wrong length for {n} variables")
                clean[e] = c
        self.ring = ring
        self.terms = clean
        self._hdeg = False
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hdeg = False
        obj._hash = None
        return obj

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        if other.ring is not self.ring and other.ring != self.ring:
            raise AlgebraError("ring mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return GradedPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return GradedPoly._raw(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return self.ring.zero
            return GradedPoly._raw(self.ring, {e: v * c % self.ring.p for e, v in self.terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        return GradedPoly._raw(self.ring, poly_mul(self.terms, other.terms, self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.terms == other.terms and (self.ring is other.ring or self.ring == other.ring)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self):
        """Internal degree if all terms share it; None for 0 or inhomogeneous f."""
        if self._hdeg is False:
            degs = {self.ring.degree_of(e) for e in self.terms}
            self._hdeg = degs.pop() if len(degs) == 1 else None
        return self._hdeg

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.homogeneous_degree() is not None

    def leading_exp(self):
        return max(self.terms, key=self.ring.key)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def monic(self) -> "GradedPoly":
        if not self.terms:
            return self
        return self * self.ring.field.inv(self.terms[self.leading_exp()])

    def __str__(self):
        return format_poly(self.ring, self.terms)

    def __repr__(self):
        return f"GradedPoly({self})"


def poly_mul(f: Mapping, g: Mapping, p: int) -> dict:
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = (out.get(e, 0) + c1 * c2) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def format_poly(ring: GradedRing, terms: Mapping) -> str:
    if not terms:
        return "0"
    p = ring.p
    parts = []
    for e in sorted(terms, key=ring.key, reverse=True):
        c = terms[e]
        neg = p != 2 and c > p // 2
        mag = p - c if neg else c
        factors = []
        for name, k in zip(ring.names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        parts.append(("-" if neg else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(\+)|(-))")


def parse_poly(ring: GradedRing, text: str) -> GradedPoly:
    """Parse ``"3*x^2 - y*x"`` style input: integers, variables, ``* + - ^``."""
    pos = 0
    toks = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise AlgebraError(f"cannot parse polynomial {text!r} at offset {pos}")
        pos = m.end()
        num, name, caret, star, plus, minus = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            if name not in ring._index:
                raise AlgebraError(f"unknown variable {name!r} in {text!r}")
            toks.append(("var", ring._index[name]))
        elif caret:
            toks.append(("^", None))
        elif star:
            toks.append(("*", None))
        elif plus:
            toks.append(("+", None))
        else:
            toks.append(("-", None))
    if not toks:
        raise AlgebraError("empty polynomial string")

    p, n = ring.p, ring.nvars
    out: dict = {}
    i = 0
    while i < len(toks):
        sign = 1
        while i < len(toks) and toks[i][0] in "+-":
            if toks[i][0] == "-":
                sign = -sign
            i += 1
        coeff, exp = sign, [0] * n
        expect_factor = True
        while i < len(toks) and expect_factor:
            kind, val = toks[i]
            if kind == "num":
                coeff *= val
                i += 1
                if i < len(toks) and toks[i][0] == "^":
                    if i + 1 >= len(toks) or toks[i + 1][0] != "num":
                        raise AlgebraError(f"bad exponent in {text!r}")
                    coeff *= val ** (toks[i + 1][1] - 1) if toks[i + 1][1] > 0 else 0
                    i += 2
            elif kind == "var":
                k = 1
                i += 1
                if i < len(toks) and toks[i][0] == "^":
                    if i + 1 >= len(toks) or toks[i + 1][0] != "num" or toks[i + 1][1] < 1:
                        raise AlgebraError(f"exponents must be positive integers in {text!r}")
                    k = toks[i + 1][1]
                    i += 2
                exp[val] += k
            else:
                raise AlgebraError(f"unexpected {kind!r} in {text!r}")
            if i < len(toks) and toks[i][0] == "*":
                i += 1
                if i >= len(toks):
                    raise AlgebraError(f"dangling '*' in {text!r}")
            else:
                expect_factor = False
        if expect_factor:
            raise AlgebraError(f"missing term in {text!r}")
        e = tuple(exp)
        v = (out.get(e, 0) + coeff) % p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
        if i < len(toks) and toks[i][0] not in "+-":
            raise AlgebraError(f"unexpected token in {text!r}")
    return GradedPoly._raw(ring, out)
