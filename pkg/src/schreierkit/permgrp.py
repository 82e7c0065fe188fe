"""Permutation groups with deterministic Schreier-Sims stabilizer chains.

Permutations act on the right: ``(p * q)(x) == q(p(x))``, and conjugation is
``x ** g == ~g * x * g``.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from typing import Iterable, Sequence

from .errors import InputError, ResourceError

DEFAULT_MAX_ORDER = 20000

_IDENT: dict[int, tuple[int, ...]] = {}


def _ident(n: int) -> tuple[int, ...]:
    t = _IDENT.get(n)
    if t is None:
        t = _IDENT[n] = tuple(range(n))
    return t


def _raw(img: tuple[int, ...]) -> "Perm":
    # trusted constructor for hot paths
    p = object.__new__(Perm)
    p.img = img
    p._hash = hash(img)
    return p


class Perm:
    """A permutation of ``range(degree)`` stored as its image tuple."""

    __slots__ = ("img", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        img = tuple(images)
        if check and sorted(img) != list(range(len(img))):
            raise InputError(f"not a permutation: {img}")
        self.img = img
        self._hash = hash(img)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, x: int) -> int:
        return self.img[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return _raw(tuple(map(other.img.__getitem__, self.img)))

    def __invert__(self) -> "Perm":
        inv = [0] * len(self.img)
        for x, y in enumerate(self.img):
            inv[y] = x
        return _raw(tuple(inv))

    def __pow__(self, e) -> "Perm":
        if isinstance(e, Perm):
            return ~e * self * e
        base = self if e >= 0 else ~self
        e = abs(e)
        result = Perm.identity(len(self.img))
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.img == other.img

    def __lt__(self, other: "Perm") -> bool:
        return self.img < other.img

    def __hash__(self) -> int:
        return self._hash

    def is_identity(self) -> bool:
        return self.img == _ident(len(self.img))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(len(self.img)):
            if i in seen or self.img[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.img[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.img[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def commutator(a: Perm, b: Perm) -> Perm:
    return ~a * ~b * a * b


class _Chain:
    """Base, strong generators per level and explicit transversals.

    ``trans[l][q] = (u, ~u)`` with ``u(base[l]) == q`` and ``u`` fixing
    ``base[:l]``.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.ident = Perm.identity(degree)
        self.base: list[int] = []
        self.gens: list[list[Perm]] = []
        self.trans: list[dict[int, tuple[Perm, Perm]]] = []
        self.checked: list[set[tuple[int, int]]] = []

    def order(self) -> int:
        return math.prod(len(t) for t in self.trans)

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for lvl in range(start, len(self.base)):
            hit = self.trans[lvl].get(g.img[self.base[lvl]])
            if hit is None:
                return g, lvl
            g = g * hit[1]
        return g, len(self.base)

    def contains(self, g: Perm) -> bool:
        r, _ = self.sift(g)
        return r.is_identity()

    def _new_level(self, g: Perm) -> None:
        b = next(i for i, x in enumerate(g.img) if i != x)
        self.base.append(b)
        self.gens.append([])
        self.trans.append({b: (self.ident, self.ident)})
        self.checked.append(set())

    def _grow_orbit(self, lvl: int) -> None:
        trans = self.trans[lvl]
        gens = self.gens[lvl]
        queue = list(trans)
        k = 0
        while k < len(queue):
            p = queue[k]
            k += 1
            u = trans[p][0]
            for s in gens:
                q = s.img[p]
                if q not in trans:
                    v = u * s
                    trans[q] = (v, ~v)
                    queue.append(q)

    def _install(self, g: Perm, upto: int) -> None:
        # g fixes base[:upto]; it becomes a strong generator of levels 0..upto
        if upto == len(self.base):
            self._new_level(g)
        for lvl in range(upto + 1):
            if not all(g.img[b] == b for b in self.base[:lvl]):
                continue
            self.gens[lvl].append(g)
            self._grow_orbit(lvl)

    def _fixed_prefix(self, g: Perm) -> int:
        j = 0
        while j < len(self.base) and g.img[self.base[j]] == self.base[j]:
            j += 1
        return j

    def _complete(self, top: int) -> None:
        lvl = top
        while lvl >= 0:
            restart = None
            trans = self.trans[lvl]
            gens = self.gens[lvl]
            checked = self.checked[lvl]
            for p in list(trans):
                u = trans[p][0]
                for si, s in enumerate(gens):
                    if (p, si) in checked:
                        continue
                    checked.add((p, si))
                    us = u * s
                    rep = trans[s.img[p]]
                    if us == rep[0]:
                        continue
                    r, j = self.sift(us * rep[1], lvl + 1)
                    if not r.is_identity():
                        self._install(r, j)
                        restart = j
                        break
                if restart is not None:
                    break
            if restart is not None:
                lvl = restart
            else:
                lvl -= 1

    def copy(self) -> "_Chain":
        ch = _Chain(self.degree)
        ch.base = list(self.base)
        ch.gens = [list(g) for g in self.gens]
        ch.trans = [dict(t) for t in self.trans]
        ch.checked = [set(c) for c in self.checked]
        return ch

    def extend(self, g: Perm) -> bool:
        """Add ``g`` to the generated group; False if it was already a member."""
        if g.is_identity():
            return False
        r, j = self.sift(g)
        if r.is_identity():
            return False
        self._install(g, self._fixed_prefix(g))
        self._complete(len(self.base) - 1)
        return True


class PermGroup:
    """Group generated by permutations of a common degree.

    The stabilizer chain is built lazily on first use and then shared.
    """

    def __init__(self, degree: int, gens: Iterable[Perm | Sequence[int]] = (), name: str | None = None):
        self.degree = degree
        gl = []
        for g in gens:
            g = g if isinstance(g, Perm) else Perm(g)
            if g.degree != degree:
                raise InputError(f"generator of degree {g.degree} in a group of degree {degree}")
            gl.append(g)
        self.gens: list[Perm] = gl
        self.name = name
        self._chain: _Chain | None = None
        self._elements: list[Perm] | None = None

    @property
    def chain(self) -> _Chain:
        if self._chain is None:
            ch = _Chain(self.degree)
            for g in self.gens:
                ch.extend(g)
            self._chain = ch
        return self._chain

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def order(self) -> int:
        return self.chain.order()

    def __len__(self) -> int:
        return self.order()

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            raise InputError(f"permutation of degree {g.degree} tested against a group of degree {self.degree}")
        return self.chain.contains(g)

    __contains__ = contains

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_abelian(self) -> bool:
        gs = self.gens
        return all(a * b == b * a for i, a in enumerate(gs) for b in gs[i + 1:])

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup) or other.degree != self.degree:
            return False
        return self.is_subgroup_of(other) and other.is_subgroup_of(self)

    __hash__ = None

    def is_normal_in(self, G: "PermGroup") -> bool:
        return self.is_subgroup_of(G) and all(self.contains(h ** g) for h in self.gens for g in G.gens)

    def elements(self, max_order: int = DEFAULT_MAX_ORDER) -> list[Perm]:
        """All elements, as products of transversal representatives."""
        if self._elements is None:
            if self.order() > max_order:
                raise ResourceError(f"group of order {self.order()} exceeds element cap {max_order}")
            ch = self.chain
            elems = [ch.ident]
            for lvl in reversed(range(len(ch.base))):
                reps = [u for u, _ in ch.trans[lvl].values()]
                elems = [x * u for x in elems for u in reps]
            self._elements = elems
        return self._elements

    def random_element(self, rng: random.Random) -> Perm:
        ch = self.chain
        g = ch.ident
        for lvl in reversed(range(len(ch.base))):
            reps = list(ch.trans[lvl].values())
            g = g * rng.choice(reps)[0]
        return g

    def subgroup(self, gens: Iterable[Perm], name: str | None = None) -> "PermGroup":
        return PermGroup(self.degree, gens, name=name)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "generators": [list(g.img) for g in self.gens]}

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"PermGroup({label}degree={self.degree}, gens={self.gens})"


def _grow(H: PermGroup, extra: Iterable[Perm]) -> PermGroup:
    # new group with generators appended, reusing a copy of H's chain
    gens = list(H.gens)
    ch = _Chain(H.degree)
    for g in H.gens:
        ch.extend(g)
    for g in extra:
        if ch.extend(g):
            gens.append(g)
    out = PermGroup(H.degree, gens)
    out._chain = ch
    return out


def order(G: PermGroup) -> int:
    return G.order()


def is_member(G: PermGroup, g: Perm) -> bool:
    return G.contains(g)


def normal_closure(G: PermGroup, S: Iterable[Perm], over: PermGroup | None = None) -> PermGroup:
    """Smallest normal subgroup of ``G`` containing ``S``.

    ``over``, if given, must be a normal subgroup of ``G``; it is included in
    the result and its chain is reused.
    """
    S = list(S)
    for s in S:
        if not G.contains(s):
            raise InputError(f"{s} is not an element of the group")
    if over is None:
        ch = _Chain(G.degree)
        gens: list[Perm] = []
    else:
        ch = over.chain.copy()
        gens = list(over.gens)
    queue = []
    for s in S:
        if ch.extend(s):
            gens.append(s)
            queue.append(s)
    k = 0
    while k < len(queue):
        x = queue[k]
        k += 1
        for g in G.gens:
            c = x ** g
            if ch.extend(c):
                gens.append(c)
                queue.append(c)
    N = PermGroup(G.degree, gens)
    N._chain = ch
    return N


def derived_subgroup(G: PermGroup) -> PermGroup:
    gs = G.gens
    comms = [commutator(a, b) for i, a in enumerate(gs) for b in gs[i + 1:]]
    return normal_closure(G, comms)


def canonical_coset_rep(N: PermGroup, g: Perm) -> Perm:
    """The unique element of the right coset ``N g`` whose images of N's base
    points are lexicographically least."""
    ch = N.chain
    h = g
    for lvl in range(len(ch.base)):
        trans = ch.trans[lvl]
        best = min(trans, key=lambda q: h.img[q])
        h = trans[best][0] * h
    return h


def quotient_map(G: PermGroup, N: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> tuple[PermGroup, list[Perm]]:
    """Regular action of G/N on right cosets of N, plus one representative per
    coset.  Coset 0 is N itself; an element ``q`` of the quotient is the image
    of ``reps[q(0)]``."""
    if not N.is_normal_in(G):
        raise InputError("subgroup is not normal")
    idx = G.order() // N.order()
    if idx > max_order:
        raise ResourceError(f"quotient of order {idx} exceeds cap {max_order}")
    first = canonical_coset_rep(N, G.identity())
    reps = [first]
    where = {first: 0}
    images: list[list[int]] = [[] for _ in G.gens]
    k = 0
    while k < len(reps):
        r = reps[k]
        for gi, s in enumerate(G.gens):
            c = canonical_coset_rep(N, r * s)
            j = where.get(c)
            if j is None:
                j = len(reps)
                where[c] = j
                reps.append(c)
            images[gi].append(j)
        k += 1
    Q = PermGroup(len(reps), [Perm(img, check=False) for img in images])
    return Q, reps


def quotient(G: PermGroup, N: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    return quotient_map(G, N, max_order)[0]


def project(N: PermGroup, reps: Sequence[Perm], g: Perm) -> Perm:
    """Image of ``g`` in the quotient returned by ``quotient_map`` with these reps."""
    where = {r: i for i, r in enumerate(reps)}
    return Perm([where[canonical_coset_rep(N, r * g)] for r in reps], check=False)


def lift(reps: Sequence[Perm], q: Perm) -> Perm:
    """A preimage in G of the quotient element ``q`` (see ``quotient_map``)."""
    return reps[q.img[0]]


def normalizer(G: PermGroup, H: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    """``{g in G : g^-1 H g == H}`` by filtering the elements of G."""
    if not H.is_subgroup_of(G):
        raise InputError("H is not a subgroup of G")
    if H.is_normal_in(G):
        return PermGroup(G.degree, G.gens)
    ch = _Chain(G.degree)
    gens = []
    for h in H.gens:
        if ch.extend(h):
            gens.append(h)
    for g in G.elements(max_order):
        if ch.contains(g):
            continue
        if all(H.contains(h ** g) for h in H.gens):
            ch.extend(g)
            gens.append(g)
    out = PermGroup(G.degree, gens)
    out._chain = ch
    return out


def element_orders(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> Counter:
    return Counter(g.order() for g in G.elements(max_order))


def exponent(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> int:
    if G.is_abelian():
        return math.lcm(1, *(g.order() for g in G.gens))
    return math.lcm(1, *element_orders(G, max_order))


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def sylow(G: PermGroup, p: int, max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    """A Sylow p-subgroup, grown from a cyclic p-subgroup inside normalizers."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    target = p_part(G.order(), p)
    if target == 1:
        return PermGroup(G.degree, [])
    if target == G.order():
        return PermGroup(G.degree, G.gens)
    elems = G.elements(max_order)
    start = None
    best = 1
    for g in elems:
        o = g.order()
        po = p_part(o, p)
        if po > best:
            best = po
            start = g ** (o // po)
    P = PermGroup(G.degree, [start])
    while P.order() < target:
        N = normalizer(G, P, max_order)
        step = None
        for x in N.elements(max_order):
            if not P.contains(x) and P.contains(x ** p):
                step = x
                break
        if step is None:  # pragma: no cover - Sylow theory guarantees a step
            raise RuntimeError("failed to extend p-subgroup")
        P = _grow(P, [step])
    return P
