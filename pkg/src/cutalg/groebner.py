"""Buchberger's algorithm and the ideal operations built on it.

Internally a polynomial is a list of ``(key, exponent, coeff)`` triples in
decreasing key order; ``key`` is the ring's linear order functional, so the
key of ``x^a * x^b`` is ``key(a) + key(b)``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .poly import Polynomial, PolyRing, TermOrder


FIELD_BITS = 12
_FIELD_MASK = (1 << FIELD_BITS) - 1


def _mask(e: Sequence[int]) -> int:
    m = 0
    for i, x in enumerate(e):
        if x:
            m |= 1 << i
    return m


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Packer:
    """Exponent vectors packed into one int, ``FIELD_BITS`` bits per variable.

    The top bit of each field is a guard: ``a`` divides ``b`` exactly when
    ``(pack(b) - pack(a)) & guard == 0``.  Packing is linear, so the packed
    product of two monomials is the sum of the packed factors.
    """

    def __init__(self, n: int):
        self.n = n
        self.guard = sum(1 << (FIELD_BITS * i + FIELD_BITS - 1) for i in range(n))
        self.shifts = [FIELD_BITS * i for i in range(n)]

    def pack(self, e) -> int:
        return sum(x << s for x, s in zip(e, self.shifts))

    def unpack(self, v: int) -> tuple[int, ...]:
        return tuple((v >> s) & _FIELD_MASK for s in self.shifts)


class _Reducer:
    """A monic basis element prepared for division."""

    __slots__ = ("lm", "packed", "mask", "key", "tail", "poly")

    def __init__(self, ring: PolyRing, f: Polynomial, packer: _Packer):
        f = f.monic()
        self.poly = f
        self.lm = f.lm
        self.packed = packer.pack(self.lm)
        self.mask = _mask(self.lm)
        self.key = ring.key(self.lm)
        self.tail = [(ring.key(e), packer.pack(e), c) for e, c in f.terms[1:]]


def _initial(ring: PolyRing, packer: _Packer, terms) -> dict:
    p = ring.prime
    cur = {}
    for e, c in terms:
        c %= p
        if c:
            cur[ring.key(e)] = [packer.pack(e), c]
    return cur


def _reduce(ring: PolyRing, packer: _Packer, cur: dict, reducers: list) -> list:
    """Fully reduce ``{key: [packed, coeff]}`` (consumed); returns sorted (key, packed, c)."""
    p = ring.prime
    guard = packer.guard
    heap = [-k for k in cur]
    heapq.heapify(heap)
    out = []
    while heap:
        k = -heapq.heappop(heap)
        entry = cur.pop(k, None)
        if entry is None:
            continue
        pe, c = entry
        for r in reducers:
            if not ((pe - r.packed) & guard):
                break
        else:
            out.append((k, pe, c))
            continue
        dp = pe - r.packed
        dk = k - r.key
        for tk, tp, tc in r.tail:
            nk = tk + dk
            v = c * tc
            ent = cur.get(nk)
            if ent is None:
                cur[nk] = [tp + dp, (-v) % p]
                heapq.heappush(heap, -nk)
            else:
                nv = (ent[1] - v) % p
                if nv:
                    ent[1] = nv
                else:
                    del cur[nk]
    return out


def _to_poly(ring: PolyRing, packer: _Packer, triples: list) -> Polynomial:
    return Polynomial(ring, tuple((packer.unpack(pe), c) for _, pe, c in triples))


def _spair(ring: PolyRing, fa: _Reducer, fb: _Reducer, lcm_packed: int, lcm_key: int) -> dict:
    """Tail part of the S-polynomial of two monic reducers."""
    p = ring.prime
    cur = {}
    da, ka = lcm_packed - fa.packed, lcm_key - fa.key
    for tk, tp, tc in fa.tail:
        cur[tk + ka] = [tp + da, tc]
    db, kb = lcm_packed - fb.packed, lcm_key - fb.key
    for tk, tp, tc in fb.tail:
        nk = tk + kb
        ent = cur.get(nk)
        if ent is None:
            cur[nk] = [tp + db, (-tc) % p]
        else:
            nv = (ent[1] - tc) % p
            if nv:
                ent[1] = nv
            else:
                del cur[nk]
    return cur


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    generators: tuple[Polynomial, ...]
    reduced: bool = True

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    @property
    def order(self) -> TermOrder:
        return self.ring.order

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.lm for g in self.generators]

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def is_unit_ideal(self) -> bool:
        return any(sum(g.lm) == 0 for g in self.generators)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def __str__(self):
        return "\n".join(str(g) for g in self.generators) or "0"


class Reducer:
    """Reusable division by a fixed list of polynomials."""

    def __init__(self, gens: Sequence[Polynomial], ring: PolyRing | None = None):
        gens = [g for g in gens if g]
        self.ring = ring or gens[0].ring
        self.packer = _Packer(self.ring.n)
        self.reducers = [_Reducer(self.ring, g, self.packer) for g in gens]

    def __call__(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial and basis live in different rings")
        cur = _initial(self.ring, self.packer, f.terms)
        return _to_poly(self.ring, self.packer, _reduce(self.ring, self.packer, cur, self.reducers))


def normal_form(f: Polynomial, gb: GroebnerBasis | Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on division by ``gb`` (fully reduced)."""
    gens = gb.generators if isinstance(gb, GroebnerBasis) else tuple(gb)
    ring = gb.ring if isinstance(gb, GroebnerBasis) else (gens[0].ring if gens else f.ring)
    if not any(gens):
        if f.ring != ring:
            raise ValueError("polynomial and basis live in different rings")
        return f
    return Reducer(gens, ring)(f)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    p = ring.prime
    l = _lcm(f.lm, g.lm)
    a = f.mul_monomial(_sub(l, f.lm), pow(f.lc, -1, p))
    b = g.mul_monomial(_sub(l, g.lm), pow(g.lc, -1, p))
    return a - b


def buchberger(gens: Iterable[Polynomial], order: TermOrder | None = None, ring: PolyRing | None = None,
               reduce: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are selected by smallest (weighted) degree of the lcm, ties broken
    by index pair, and pruned with the Gebauer-Moeller installation of the
    coprime and chain criteria.  The output is sorted by leading monomial
    (ascending) so equal ideals give identical bases.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    if order is not None and order != ring.order:
        target = ring.with_order(order)
        gens = [target.from_dict(g.as_dict()) for g in gens]
        ring = target
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")

    packer = _Packer(ring.n)
    guard = packer.guard
    weights = ring.order.weights or (1,) * ring.n
    reducers: list[_Reducer] = []
    active: list[_Reducer] = []
    # pair -> (weighted lcm degree, i, j, lcm tuple, packed lcm)
    pairs: dict = {}

    def add(h: Polynomial):
        nonlocal active
        idx = len(reducers)
        hr = _Reducer(ring, h, packer)
        reducers.append(hr)
        lh = hr.lm
        # Gebauer-Moeller update
        cand = []
        for g in active:
            l = _lcm(g.lm, lh)
            cand.append((g, l, packer.pack(l), not (g.mask & hr.mask)))
        keep = []
        for t, (g, l, lp, cp) in enumerate(cand):
            if cp:
                keep.append((g, l, lp, cp))
                continue
            dominated = False
            for u in range(len(cand)):
                if u == t:
                    continue
                lp2 = cand[u][2]
                if not ((lp - lp2) & guard) and (lp2 != lp or u > t):
                    dominated = True
                    break
            if not dominated:
                keep.append((g, l, lp, cp))
        hp = hr.packed
        for pr in list(pairs):
            _, a, b, lab, lp = pairs[pr]
            if not ((lp - hp) & guard):
                la = packer.pack(_lcm(reducers[a].lm, lh))
                lb = packer.pack(_lcm(reducers[b].lm, lh))
                if la != lp and lb != lp:
                    del pairs[pr]
        gid = {id(r): k for k, r in enumerate(reducers)}
        for g, l, lp, cp in keep:
            if cp:
                continue
            a = gid[id(g)]
            pairs[(a, idx)] = (sum(w * x for w, x in zip(weights, l)), a, idx, l, lp)
        active = [g for g in active if (g.packed - hp) & guard] + [hr]

    for g in gens:
        if not g:
            continue
        cur = _initial(ring, packer, g.terms)
        h = _to_poly(ring, packer, _reduce(ring, packer, cur, active))
        if h:
            add(h)
    while pairs:
        best = min(pairs.values(), key=lambda v: v[:3])
        _, a, b, l, lp = best
        del pairs[(a, b)]
        cur = _spair(ring, reducers[a], reducers[b], lp, ring.key(l))
        if not cur:
            continue
        h = _to_poly(ring, packer, _reduce(ring, packer, cur, active))
        if h:
            add(h)
    basis = [r.poly for r in active]
    if reduce:
        basis = interreduce(basis, ring)
    else:
        basis = sorted(basis, key=lambda f: ring.key(f.lm))
    return GroebnerBasis(ring, tuple(basis), reduce)


def interreduce(polys: Sequence[Polynomial], ring: PolyRing) -> list[Polynomial]:
    """Minimal, monic, tail-reduced version of a Groebner basis."""
    polys = sorted((f.monic() for f in polys if f), key=lambda f: ring.key(f.lm))
    minimal = []
    for f in polys:
        if not any(_divides(g.lm, f.lm) for g in minimal):
            minimal.append(f)
    packer = _Packer(ring.n)
    reds = [_Reducer(ring, g, packer) for g in minimal]
    out = []
    for i, f in enumerate(minimal):
        others = reds[:i] + reds[i + 1:]
        cur = _initial(ring, packer, f.terms[1:])
        tail = _reduce(ring, packer, cur, others)
        out.append(Polynomial(ring, ((f.lm, f.lc),) + tuple((packer.unpack(pe), c) for _, pe, c in tail)))
    return out


def is_groebner(gens: Sequence[Polynomial]) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    gens = [g for g in gens if g]
    if not gens:
        return True
    red = Reducer(gens)
    for f, g in combinations(gens, 2):
        s = spoly(f, g)
        if s and red(s):
            return False
    return True


def same_ideal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    return all(a.contains(g) for g in b) and all(b.contains(g) for g in a)


def eliminate(gb: GroebnerBasis, k: int) -> GroebnerBasis:
    """Intersection with the subring of the variables after the first ``k``."""
    order = gb.ring.order
    if order.kind == "block" and order.k == k:
        sub_w = None if order.weights is None else order.weights[k:]
        sub_order = TermOrder.degrevlex(sub_w)
    elif order.kind == "lex":
        sub_order = TermOrder.lex()
    else:
        raise ValueError(f"cannot eliminate {k} variables from a basis in order {order}")
    sub = PolyRing(gb.ring.names[k:], gb.ring.prime, sub_order)
    kept = []
    for g in gb:
        if not any(g.lm[:k]):
            kept.append(Polynomial(sub, tuple((e[k:], c) for e, c in g.terms)))
    return GroebnerBasis(sub, tuple(kept), gb.reduced)


def _fresh_name(names, base="t"):
    name = base
    while name in names:
        name = "_" + name
    return name


def saturate(gens: Sequence[Polynomial], m: Sequence[int], ring: PolyRing | None = None) -> GroebnerBasis:
    """``(I : x^m)^infinity`` via an auxiliary variable ``t`` with ``t*x^m - 1``."""
    gens = list(gens)
    ring = ring or gens[0].ring
    if not any(m):
        return buchberger(gens, ring=ring)
    t = _fresh_name(ring.names)
    big = PolyRing((t,) + ring.names, ring.prime, TermOrder.block(1))
    lifted = [big.from_dict({(0,) + e: c for e, c in g.terms}) for g in gens]
    lifted.append(big.from_terms([((1,) + tuple(m), 1), ((0,) * big.n, -1)]))
    gb = buchberger(lifted, ring=big)
    small = eliminate(gb, 1)
    back = [ring.from_dict(g.as_dict()) for g in small]
    return buchberger(back, ring=ring)


def saturate_by_variable(gens: Sequence[Polynomial], i: int, ring: PolyRing | None = None) -> GroebnerBasis:
    """``I : x_i^infinity`` for a homogeneous ideal.

    Computes a degrevlex basis with ``x_i`` as the smallest variable; then
    dividing every element by the largest power of ``x_i`` it contains gives
    a basis of the saturation.
    """
    gens = [g for g in gens if g]
    ring = ring or gens[0].ring
    if not all(g.is_homogeneous() for g in gens):
        raise ValueError("saturate_by_variable needs homogeneous generators")
    if not gens:
        return GroebnerBasis(ring, ())
    n = ring.n
    perm = [j for j in range(n) if j != i] + [i]
    pring = PolyRing([ring.names[j] for j in perm], ring.prime, TermOrder.degrevlex())
    moved = [pring.from_dict({tuple(e[j] for j in perm): c for e, c in g.terms}) for g in gens]
    gb = buchberger(moved, ring=pring)
    inv = [0] * n
    for pos, j in enumerate(perm):
        inv[j] = pos
    out = []
    for g in gb:
        k = min(e[-1] for e, _ in g.terms)
        out.append(ring.from_dict({tuple(e[inv[j]] - (k if inv[j] == n - 1 else 0) for j in range(n)): c
                                   for e, c in g.terms}))
    return buchberger(out, ring=ring)


def krull_dimension(gb: GroebnerBasis) -> int:
    """Dimension of ``S/I``: the largest set of variables containing no leading monomial.

    Equals ``n`` minus the minimum size of a variable set meeting the support
    of every leading monomial.
    """
    if gb.is_unit_ideal():
        return -1
    supports = _minimal_masks(_mask(e) for e in gb.leading_monomials())
    return gb.ring.n - _min_hitting_set(supports, gb.ring.n)


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    ms = sorted(set(masks), key=lambda x: bin(x).count("1"))
    out = []
    for m in ms:
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def _min_hitting_set(sets: list[int], n: int) -> int:
    best = [n + 1]

    def rec(remaining: list[int], size: int):
        if size >= best[0]:
            return
        if not remaining:
            best[0] = size
            return
        s = min(remaining, key=lambda x: bin(x).count("1"))
        v = s
        while v:
            low = v & -v
            v ^= low
            rec([r for r in remaining if not r & low], size + 1)

    rec(sets, 0)
    return best[0]


# Hilbert series of S / in(I)


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _minimalize(mons: Iterable[tuple]) -> list[tuple]:
    ms = sorted(set(mons), key=sum)
    out = []
    for m in ms:
        if not any(_divides(o, m) for o in out):
            out.append(m)
    return out


def hilbert_numerator(monomials: Sequence[tuple]) -> list[int]:
    """Numerator ``K(t)`` with ``HS(S/J) = K(t) / (1-t)^n`` for a monomial ideal ``J``."""
    gens = _minimalize(tuple(m) for m in monomials)
    return _hn(gens)


def _hn(gens: list[tuple]) -> list[int]:
    if not gens:
        return [1]
    masks = [_mask(g) for g in gens]
    if all(not (masks[i] & masks[j]) for i in range(len(gens)) for j in range(i + 1, len(gens))):
        out = [1]
        for g in gens:
            f = [0] * (sum(g) + 1)
            f[0] = 1
            f[-1] -= 1
            out = _poly_mul(out, f)
        return out
    n = len(gens[0])
    counts = [0] * n
    for g in gens:
        if sum(g) > 1:
            for i, x in enumerate(g):
                if x:
                    counts[i] += 1
    v = max(range(n), key=lambda i: counts[i])
    x = tuple(int(i == v) for i in range(n))
    plus = _minimalize([g for g in gens if not g[v]] + [x])
    colon = _minimalize([tuple(y - (1 if i == v and y else 0) for i, y in enumerate(g)) for g in gens])
    # 0 -> S/(J:x)(-1) -> S/J -> S/(J+x) -> 0
    return _poly_add(_hn(plus), [0] + _hn(colon))


def hilbert_series(gb: GroebnerBasis) -> tuple[list[int], int]:
    """Reduced Hilbert series ``h(t) / (1-t)^d`` of ``S/I``; returns ``(h, d)``."""
    num = hilbert_numerator(gb.leading_monomials()) if gb.generators else [1]
    d = gb.ring.n
    while d > 0 and sum(num) == 0:
        num = _divide_one_minus_t(num)
        d -= 1
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num, d


def _divide_one_minus_t(a: list[int]) -> list[int]:
    out = []
    acc = 0
    for x in a[:-1]:
        acc += x
        out.append(acc)
    return out


def standard_monomials(gb: GroebnerBasis, degree: int, nvars: int | None = None) -> list[tuple]:
    """Monomials of the given total degree outside the leading ideal."""
    n = gb.ring.n if nvars is None else nvars
    lms = gb.leading_monomials()
    out = []
    for e in monomials_of_degree(n, degree):
        if not any(_divides(l, e) for l in lms):
            out.append(e)
    return out


def monomials_of_degree(n: int, d: int) -> list[tuple]:
    if n == 0:
        return [()] if d == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(tuple(prefix) + (left,))
            return
        for x in range(left, -1, -1):
            rec(prefix + [x], left - x, slots - 1)

    rec([], d, n)
    return out
