"""Sparse multivariate polynomials over a prime field.

Monomials are exponent tuples.  Every supported term order is realised as
a linear functional ``key(e) = sum(K[i] * e[i])`` into the integers, so
comparing monomials is comparing two Python ints and the key of a product
is the sum of the keys.  This needs every exponent below ``EXP_BOUND``;
larger exponents raise ``OverflowError``.

Coefficients are plain ints in ``range(p)``; the field is fixed by the ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

EXP_BOUND = 1 << 10
DEFAULT_PRIME = 32003
_DEG_BOUND = 1 << 32


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class TermOrder:
    """``degrevlex``, ``lex`` or ``block`` (first ``k`` variables eliminated).

    ``weights`` replaces the total degree by a weighted degree in degrevlex
    and in each block of a block order.
    """

    kind: str = "degrevlex"
    k: int = 0
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "block" and self.k < 1:
            raise ValueError("a block order needs k >= 1")
        if self.weights is not None and any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")

    @classmethod
    def degrevlex(cls, weights=None) -> "TermOrder":
        return cls("degrevlex", 0, None if weights is None else tuple(weights))

    @classmethod
    def lex(cls) -> "TermOrder":
        return cls("lex")

    @classmethod
    def block(cls, k: int, weights=None) -> "TermOrder":
        return cls("block", k, None if weights is None else tuple(weights))

    def key_vector(self, n: int) -> tuple[int, ...]:
        w = self.weights or (1,) * n
        if len(w) != n:
            raise ValueError(f"weight vector has length {len(w)}, ring has {n} variables")
        B = EXP_BOUND
        if self.kind == "lex":
            return tuple(B ** (n - 1 - i) for i in range(n))
        if self.kind == "degrevlex":
            return _degrevlex_vector(w)
        if self.k > n:
            raise ValueError("block size exceeds the number of variables")
        first = _degrevlex_vector(w[: self.k])
        second = _degrevlex_vector(w[self.k:])
        big = _DEG_BOUND * B ** (n - self.k + 1)
        return tuple(big * c for c in first) + second


def _degrevlex_vector(w: Sequence[int]) -> tuple[int, ...]:
    # weighted degree on top, then "smaller last exponent wins"
    n = len(w)
    top = EXP_BOUND ** n
    return tuple(w[i] * top - EXP_BOUND ** i for i in range(n))


class PolyRing:
    """Polynomial ring GF(p)[x_1..x_n] with a fixed term order."""

    def __init__(self, names: Sequence[str] | int, prime: int = DEFAULT_PRIME, order: TermOrder | None = None):
        if isinstance(names, int):
            names = [f"x{i + 1}" for i in range(names)]
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if not is_prime(prime):
            raise ValueError(f"{prime} is not prime")
        self.prime = prime
        self.order = order or TermOrder.degrevlex()
        self.n = len(self.names)
        self.kvec = self.order.key_vector(self.n)
        self._index = {s: i for i, s in enumerate(self.names)}

    def __repr__(self):
        return f"PolyRing({len(self.names)} vars, p={self.prime}, {self.order})"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.prime == other.prime and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.prime, self.order))

    def with_order(self, order: TermOrder) -> "PolyRing":
        return PolyRing(self.names, self.prime, order)

    def key(self, e: Sequence[int]) -> int:
        return sum(k * x for k, x in zip(self.kvec, e))

    def check_exponent(self, e: Sequence[int]) -> None:
        if len(e) != self.n:
            raise ValueError(f"monomial width {len(e)} != {self.n}")
        if any(x < 0 or x >= EXP_BOUND for x in e):
            raise OverflowError(f"exponent out of range in {tuple(e)}")

    # constructors
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return self.from_dict({(0,) * self.n: c})

    def var(self, v) -> "Polynomial":
        i = self._index[v] if isinstance(v, str) else v
        e = [0] * self.n
        e[i] = 1
        return Polynomial(self, ((tuple(e), 1),))

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.n)]

    def monomial(self, e: Sequence[int], c: int = 1) -> "Polynomial":
        return self.from_dict({tuple(e): c})

    def from_dict(self, d: Mapping[tuple, int]) -> "Polynomial":
        p = self.prime
        items = []
        for e, c in d.items():
            c %= p
            if c:
                e = tuple(e)
                self.check_exponent(e)
                items.append((e, c))
        items.sort(key=lambda t: self.key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def from_terms(self, terms: Iterable[tuple[Sequence[int], int]]) -> "Polynomial":
        acc: dict = {}
        for e, c in terms:
            e = tuple(e)
            acc[e] = acc.get(e, 0) + c
        return self.from_dict(acc)

    def binomial(self, a: Sequence[int], b: Sequence[int]) -> "Polynomial":
        return self.from_terms([(a, 1), (b, -1)])

    def index(self, name: str) -> int:
        return self._index[name]

    def symmetric(self, c: int) -> int:
        """Representative of ``c`` in ``(-p/2, p/2]``."""
        c %= self.prime
        return c - self.prime if c > self.prime // 2 else c

    # text form
    def format_monomial(self, e: Sequence[int]) -> str:
        parts = []
        for i, x in enumerate(e):
            if x == 1:
                parts.append(self.names[i])
            elif x > 1:
                parts.append(f"{self.names[i]}^{x}")
        return "*".join(parts)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)


class Polynomial:
    """Immutable polynomial; ``terms`` are (exponent, coeff) in decreasing order."""

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # basic access
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def monomials(self) -> list[tuple[int, ...]]:
        return [e for e, _ in self.terms]

    def as_dict(self) -> dict:
        return dict(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e, _ in self.terms}) <= 1

    def is_binomial(self) -> bool:
        """Pure binomial: ``x^a - x^b`` up to a unit."""
        return len(self.terms) == 2 and (self.terms[0][1] + self.terms[1][1]) % self.ring.prime == 0

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(pow(self.lc, -1, self.ring.prime))

    # arithmetic
    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self.terms)
        p = self.ring.prime
        for e, c in other.terms:
            v = (d.get(e, 0) + c) % p
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return self.ring.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.prime
        return Polynomial(self.ring, tuple((e, p - c) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.prime
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((e, x * c % p) for e, x in self.terms))

    def mul_monomial(self, m: Sequence[int], c: int = 1) -> "Polynomial":
        p = self.ring.prime
        c %= p
        if not c:
            return self.ring.zero()
        out = tuple((tuple(a + b for a, b in zip(e, m)), x * c % p) for e, x in self.terms)
        for e, _ in out[:1]:
            self.ring.check_exponent(e)
        return Polynomial(self.ring, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        p = self.ring.prime
        d: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = (d.get(e, 0) + c1 * c2) % p
        return self.ring.from_dict(d)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.names, self.terms))

    def substitute(self, images: Sequence["Polynomial"], target: PolyRing | None = None) -> "Polynomial":
        """Ring map sending variable ``i`` to ``images[i]``."""
        target = target or images[0].ring
        out = target.zero()
        powers: dict = {}
        for e, c in self.terms:
            t = target.constant(c)
            for i, x in enumerate(e):
                if x:
                    if (i, x) not in powers:
                        powers[(i, x)] = images[i] ** x
                    t = t * powers[(i, x)]
            out = out + t
        return out

    def map_exponents(self, f, target: PolyRing) -> "Polynomial":
        """Monomial ring map given on exponent vectors."""
        return target.from_terms((f(e), c) for e, c in self.terms)

    # text form
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    ring = f.ring
    out = []
    for k, (e, c) in enumerate(f.terms):
        c = ring.symmetric(c)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = ring.format_monomial(e)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM_SPLIT = re.compile(r"([+-])")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    if s == "0":
        return ring.zero()
    pieces = _TERM_SPLIT.split(s)
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    if len(pieces) % 2:
        raise ValueError(f"malformed polynomial {text!r}")
    terms = []
    for sign, body in zip(pieces[0::2], pieces[1::2]):
        if not body:
            raise ValueError(f"malformed polynomial {text!r}")
        coeff = 1
        e = [0] * ring.n
        for k, fac in enumerate(body.split("*")):
            if fac.isdigit():
                if k:
                    raise ValueError(f"coefficient must come first in {body!r}")
                coeff = int(fac)
                continue
            m = _FACTOR.match(fac)
            if not m or m[1] not in ring._index:
                raise ValueError(f"unknown factor {fac!r}")
            e[ring._index[m[1]]] += int(m[2] or 1)
        terms.append((tuple(e), coeff if sign == "+" else -coeff))
    return ring.from_terms(terms)
