"""Builders for the finite groups under study.

Every builder returns a faithful permutation group of small degree.  The
semidirect-product builders return a :class:`Construction` that also records
the normal base subgroup, the complement and, where relevant, the choices made
while building (prime power, field, element ``t``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import InputError, ResourceError
from .fields import FieldSpec, FiniteField
from .permgrp import (
    DEFAULT_MAX_ORDER,
    Perm,
    PermGroup,
    is_prime,
    prime_divisors,
)


@dataclass(frozen=True)
class AbelianSpec:
    """A ≅ C_{c1} x C_{c2} x ... for ``cyclic_orders = (c1, c2, ...)``."""

    cyclic_orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(int(c) for c in self.cyclic_orders)
        if any(c < 1 for c in orders):
            raise InputError(f"cyclic orders must be positive: {orders}")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return math.lcm(1, *self.cyclic_orders)

    @property
    def d(self) -> int:
        primes = {q for c in self.cyclic_orders for q in prime_divisors(c)}
        return max((sum(1 for c in self.cyclic_orders if c % q == 0) for q in primes), default=0)


@dataclass
class Construction:
    group: PermGroup
    base: PermGroup
    complement: PermGroup
    provenance: dict[str, Any] = field(default_factory=dict)
    # non-serializable companions of the provenance record
    extra: dict[str, Any] = field(default_factory=dict)


def _check_cap(order: int, max_order: int) -> None:
    if order > max_order:
        raise ResourceError(f"group of order {order} exceeds cap {max_order}")


def build_abelian(spec: AbelianSpec | Sequence[int], max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    """Disjoint cycles, one per cyclic factor; factors of order 1 add a fixed point."""
    if not isinstance(spec, AbelianSpec):
        spec = AbelianSpec(tuple(spec))
    _check_cap(spec.order, max_order)
    degree = max(1, sum(spec.cyclic_orders))
    gens = []
    start = 0
    for c in spec.cyclic_orders:
        if c > 1:
            gens.append(Perm.from_cycles(degree, tuple(range(start, start + c))))
        start += c
    return PermGroup(degree, gens, name="x".join(f"C{c}" for c in spec.cyclic_orders) or "1")


def cyclic(n: int) -> PermGroup:
    return build_abelian(AbelianSpec((n,)))


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    if n < 3:
        raise InputError("dihedral group needs n >= 3; use build_abelian([2, 2]) for n = 2")
    rot = Perm.from_cycles(n, tuple(range(n)))
    ref = Perm([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, ref], name=f"D{n}")


def symmetric(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(max(n, 1), [], name=f"S{n}")
    return PermGroup(n, [Perm.from_cycles(n, tuple(range(n))), Perm.from_cycles(n, (0, 1))], name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        return PermGroup(max(n, 1), [], name=f"A{n}")
    gens = [Perm.from_cycles(n, (0, 1, i)) for i in range(2, n)]
    return PermGroup(n, gens, name=f"A{n}")


def quaternion() -> PermGroup:
    """Q8 in its regular representation.  Elements 0..7 are
    1, i, j, k, -1, -i, -j, -k."""
    table = {"1": 0, "i": 1, "j": 2, "k": 3}
    names = ["1", "i", "j", "k"]
    mult = {
        ("1", x): (1, x) for x in names
    }
    mult.update({(x, "1"): (1, x) for x in names})
    mult.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })

    def idx(sign, name):
        return table[name] + (0 if sign == 1 else 4)

    def right_mult(g):
        img = []
        for e in range(8):
            s1, n1 = (1 if e < 4 else -1), names[e % 4]
            s2, n2 = g
            s3, n3 = mult[(n1, n2)]
            img.append(idx(s1 * s2 * s3, n3))
        return Perm(img)

    return PermGroup(8, [right_mult((1, "i")), right_mult((1, "j"))], name="Q8")


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    """G x H acting on the disjoint union of their point sets."""
    d = G.degree + H.degree
    gens = [Perm(list(g.img) + list(range(G.degree, d)), check=False) for g in G.gens]
    gens += [Perm(list(range(G.degree)) + [G.degree + x for x in h.img], check=False) for h in H.gens]
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return PermGroup(d, gens, name=name)


@dataclass(frozen=True)
class VectorSpace:
    p: int
    dim: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")
        if self.dim < 0:
            raise InputError("dimension must be nonnegative")

    @property
    def size(self) -> int:
        return self.p ** self.dim

    def coords(self, x: int) -> list[int]:
        out = []
        for _ in range(self.dim):
            out.append(x % self.p)
            x //= self.p
        return out

    def encode(self, v: Sequence[int]) -> int:
        return sum((c % self.p) * self.p ** i for i, c in enumerate(v))


def _matrix_perm(V: VectorSpace, M: Sequence[Sequence[int]]) -> Perm:
    img = []
    for x in range(V.size):
        v = V.coords(x)
        img.append(V.encode(sum(M[r][c] * v[c] for c in range(V.dim)) for r in range(V.dim)))
    return Perm(img)


def _is_homomorphism(A: PermGroup, images: Sequence[Perm]) -> bool:
    # the graph {(a, phi(a))} is a subgroup projecting isomorphically onto A
    # exactly when the generator assignment extends to a homomorphism
    if not images:
        return True
    D = images[0].degree
    graph = PermGroup(
        A.degree + D,
        [Perm(list(a.img) + [A.degree + x for x in f.img], check=False) for a, f in zip(A.gens, images)],
    )
    return graph.order() == A.order()


def _row_times(V: VectorSpace, phi: Sequence[int], M: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(sum(phi[r] * M[r][c] for r in range(V.dim)) % V.p for c in range(V.dim))


def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _spanning_functionals(V: VectorSpace, matrices) -> list[tuple[int, ...]]:
    # union of orbits of coordinate functionals (row vectors, phi -> phi M),
    # adding an orbit only when it enlarges the span
    S: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for i in range(V.dim):
        e = tuple(int(i == j) for j in range(V.dim))
        if e in seen or (S and _rank_mod_p(S + [e], V.p) == _rank_mod_p(S, V.p)):
            continue
        orbit = [e]
        seen.add(e)
        k = 0
        while k < len(orbit):
            for M in matrices:
                nxt = _row_times(V, orbit[k], M)
                if nxt not in seen:
                    seen.add(nxt)
                    orbit.append(nxt)
            k += 1
        S += orbit
        if _rank_mod_p(S, V.p) == V.dim:
            break
    return S


def _hyperplane_action(V: VectorSpace, matrices, S: Sequence[tuple[int, ...]]):
    # point (f, c) is the hyperplane {x : f.x = c}; translation by v sends it to
    # (f, c + f.v) and x -> Mx sends it to (f M^-1, c)
    p = V.p
    where = {f: i for i, f in enumerate(S)}
    core = len(S) * p
    translations = []
    for j in range(V.dim):
        translations.append([i * p + (c + f[j]) % p for i, f in enumerate(S) for c in range(p)])
    complement_core = []
    for M in matrices:
        pre = [0] * len(S)
        for i, f in enumerate(S):
            pre[where[_row_times(V, f, M)]] = i
        complement_core.append([pre[i] * p + c for i in range(len(S)) for c in range(p)])
    return core, translations, complement_core


def _embed(perm_img: Sequence[int], degree: int, offset: int = 0) -> list[int]:
    img = list(range(degree))
    for x, y in enumerate(perm_img):
        img[offset + x] = offset + y
    return img


def semidirect(
    V: VectorSpace,
    A: PermGroup,
    action: Sequence[Perm] | Sequence[Sequence[Sequence[int]]],
    max_order: int = DEFAULT_MAX_ORDER,
    name: str | None = None,
) -> Construction:
    """V ⋊ A for a vector space V = F_p^dim.

    ``action[i]`` says how ``A.gens[i]`` acts on V: either a Perm of the
    ``dim`` coordinates, or a ``dim x dim`` matrix over F_p.  A coordinate
    action is realized on the points ``(coordinate, value)``.  A linear action
    is realized on affine hyperplanes ``{x : f(x) = c}`` with ``f`` from an
    A-invariant spanning set of functionals when that is smaller than the
    affine action on all ``p**dim`` vectors, and by the affine action otherwise.  When A does not act
    faithfully, A's own points are appended so the result stays faithful.
    """
    if len(action) != len(A.gens):
        raise InputError(f"{len(action)} action images for {len(A.gens)} generators")
    p, dim = V.p, V.dim
    _check_cap(V.size * A.order(), max_order)
    coordinate = all(isinstance(a, Perm) for a in action) and len(action) > 0
    if len(action) == 0:
        coordinate = True

    if coordinate:
        for a in action:
            if a.degree != dim:
                raise InputError("coordinate permutation has wrong degree")
        acts = [Perm(a.img, check=False) for a in action]
    else:
        for M in action:
            if len(M) != dim or any(len(row) != dim for row in M):
                raise InputError("action matrix has wrong shape")
        acts = [_matrix_perm(V, M) for M in action]
    if not _is_homomorphism(A, acts):
        raise InputError("the given action does not define a homomorphism from A")

    image_order = PermGroup(acts[0].degree if acts else 1, acts).order()
    faithful = image_order == A.order()

    functionals = None if coordinate else _spanning_functionals(V, action)
    if coordinate:
        core = dim * p
        translations = []
        for i in range(dim):
            img = list(range(core))
            for x in range(p):
                img[i * p + x] = i * p + (x + 1) % p
            translations.append(img)
        complement_core = []
        for a in acts:
            complement_core.append([a.img[i] * p + x for i in range(dim) for x in range(p)])
    elif functionals is not None and len(functionals) * p < V.size:
        # affine hyperplanes {x : f(x) = c} for f in an invariant spanning set S
        core, translations, complement_core = _hyperplane_action(V, action, functionals)
    else:
        core = V.size
        translations = []
        for j in range(dim):
            e = [0] * dim
            e[j] = 1
            translations.append([V.encode([c + d for c, d in zip(V.coords(x), e)]) for x in range(core)])
        complement_core = [list(a.img) for a in acts]

    degree = core if faithful else core + A.degree
    base_gens = [Perm(_embed(t, degree), check=False) for t in translations]
    comp_gens = []
    for a, img in zip(A.gens, complement_core):
        full = _embed(img, degree)
        if not faithful:
            for x, y in enumerate(a.img):
                full[core + x] = core + y
        comp_gens.append(Perm(full, check=False))
    G = PermGroup(degree, base_gens + comp_gens, name=name)
    return Construction(
        group=G,
        base=PermGroup(degree, base_gens, name="base"),
        complement=PermGroup(degree, comp_gens, name="complement"),
        provenance={"kind": "semidirect", "p": p, "dim": dim, "faithful_on_base": faithful, "degree": degree},
    )


def _index_elements(A: PermGroup) -> tuple[list[Perm], dict[Perm, int]]:
    elems = sorted(A.elements())
    return elems, {g: i for i, g in enumerate(elems)}


def wreath(p: int, n_minus_1: int, A: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> Construction:
    """C_p^{n-1} wr A with A permuting |A| copies regularly.

    Points are ``(b, x)`` with ``b`` an element of A and ``x`` in F_p^{n-1};
    degree ``p**(n-1) * |A|``.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if n_minus_1 < 0:
        raise InputError("number of coordinates must be nonnegative")
    elems, where = _index_elements(A)
    m = len(elems)
    _check_cap(p ** (n_minus_1 * m) * m, max_order)
    W = VectorSpace(p, n_minus_1)
    block = W.size
    degree = max(1, block * m)
    base_gens = []
    for b in range(m):
        for j in range(n_minus_1):
            e = [0] * n_minus_1
            e[j] = 1
            img = list(range(degree))
            for x in range(block):
                img[b * block + x] = b * block + W.encode([c + d for c, d in zip(W.coords(x), e)])
            base_gens.append(Perm(img, check=False))
    comp_gens = []
    for a in A.gens:
        img = list(range(degree))
        for b in range(m):
            tgt = where[elems[b] * a]
            for x in range(block):
                img[b * block + x] = tgt * block + x
        comp_gens.append(Perm(img, check=False))
    G = PermGroup(degree, base_gens + comp_gens, name=f"C{p}^{n_minus_1} wr {A.name or 'A'}")
    return Construction(
        group=G,
        base=PermGroup(degree, base_gens, name="base"),
        complement=PermGroup(degree, comp_gens, name="complement"),
        provenance={"kind": "wreath", "p": p, "copies": n_minus_1, "A_order": m, "degree": degree},
    )


@dataclass(frozen=True)
class SchreierQuotientSpec:
    """Data of the classified group: rank n, prime p, abelian A with
    exp(A) | p - 1.  Free generators are indexed by ({1..n-1} x A) ∪ {u}."""

    n: int
    p: int
    A: AbelianSpec

    def __post_init__(self):
        if not isinstance(self.A, AbelianSpec):
            object.__setattr__(self, "A", AbelianSpec(tuple(self.A)))
        if self.n < 2:
            raise InputError(f"n must be an integer > 1, got {self.n}")
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")
        if (self.p - 1) % self.A.exponent != 0:
            raise InputError(
                f"exp(A) = {self.A.exponent} does not divide p - 1 = {self.p - 1}; "
                "the classified groups require exp(A) | p - 1"
            )
        if self.A.d > self.n:
            raise InputError(f"A needs {self.A.d} generators but must be {self.n}-generated")

    @property
    def index_set_size(self) -> int:
        return (self.n - 1) * self.A.order + 1


def schreier_quotient(spec: SchreierQuotientSpec, max_order: int = DEFAULT_MAX_ORDER) -> Construction:
    """Frattini-level truncation of the free pro-p extension: F_p^I ⋊ A with
    I = ({1..n-1} x A) ∪ {u}, A fixing u and sending (j, b) to (j, ab)."""
    p, n = spec.p, spec.n
    A = build_abelian(spec.A)
    elems, where = _index_elements(A)
    m = len(elems)
    size = spec.index_set_size
    _check_cap(p ** size * m, max_order)
    # coordinates: (j, b) -> (j - 1) * m + b for j in 1..n-1, u -> size - 1
    action = []
    for a in A.gens:
        img = [0] * size
        for j in range(n - 1):
            for b in range(m):
                img[j * m + b] = j * m + where[elems[b] * a]
        img[size - 1] = size - 1
        action.append(Perm(img))
    c = semidirect(VectorSpace(p, size), A, action, max_order=max_order,
                   name=f"schreier_quotient(n={n}, p={p}, A={list(spec.A.cyclic_orders)})")
    c.provenance.update({"kind": "schreier_quotient", "n": n, "A": list(spec.A.cyclic_orders),
                         "index_set_size": size, "u_coordinate": size - 1})
    return c


def schreier_quotient_structure(spec: SchreierQuotientSpec, c: Construction) -> dict[str, bool]:
    """Checks that the group splits as C_p x (C_p^{n-1} wr A): the
    u-translation is central of order p and its complement (remaining
    translations plus A) is a subgroup of index p with isomorphic order and
    n-1 regular A-orbits of coordinates."""
    G = c.group
    p = spec.p
    u = c.base.gens[-1]
    rest = PermGroup(G.degree, c.base.gens[:-1] + c.complement.gens)
    W = wreath(p, spec.n - 1, build_abelian(spec.A)).group
    blocks = []
    size = spec.index_set_size
    seen = set()
    for i in range(size - 1):
        if i in seen:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            x = frontier.pop()
            for a in c.complement.gens:
                y = a.img[x * p] // p
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        seen |= orbit
        blocks.append(len(orbit))
    return {
        "u_central": all(u * g == g * u for g in G.gens),
        "u_order_p": u.order() == p,
        "u_outside_complement": not rest.contains(u),
        "order_splits": G.order() == p * rest.order(),
        "complement_matches_wreath": rest.order() == W.order(),
        "regular_blocks": blocks == [spec.A.order] * (spec.n - 1),
    }


def _prime_power_divisors(c: int):
    for q in prime_divisors(c):
        r = q
        while c % r == 0:
            yield r, q
            r *= q


def choose_prime_power(p: int, A: AbelianSpec) -> tuple[int, int, int]:
    """Smallest prime power r dividing some cyclic order with r ∤ p - 1
    (ties by the smaller prime), and the first factor index it divides.
    Returns ``(r, q, factor)``."""
    best = None
    for f, c in enumerate(A.cyclic_orders):
        for r, q in _prime_power_divisors(c):
            if (p - 1) % r == 0:
                continue
            key = (r, q, f)
            if best is None or key < best:
                best = key
    if best is None:
        raise InputError(f"every prime power in A divides p - 1 = {p - 1}")
    return best


def prop23_group(p: int, A: AbelianSpec | Sequence[int], max_order: int = DEFAULT_MAX_ORDER) -> Construction:
    """Nonsupersolvable extension of A by the additive group of F_{p^k}.

    Picks a prime power r ∤ p - 1 dividing a cyclic factor, lets that factor
    act through A -> Z/r by multiplication by an element t of order r in
    F_{p^k} (k minimal with r | p^k - 1), all other factors trivially.
    """
    if not isinstance(A, AbelianSpec):
        A = AbelianSpec(tuple(A))
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if A.order % p == 0:
        raise InputError(f"p = {p} divides |A| = {A.order}; A must have order prime to p")
    if (p - 1) % A.exponent == 0:
        raise InputError(
            f"exp(A) = {A.exponent} divides p - 1 = {p - 1}; "
            "a nonsupersolvable extension needs exp(A) not dividing p - 1"
        )
    r, q, factor = choose_prime_power(p, A)
    k = 1
    while (p ** k - 1) % r:
        k += 1
    assert k > 1, "r does not divide p - 1, so k = 1 is impossible"
    fspec = FieldSpec.default(p, k)
    F = FiniteField(fspec)
    g = F.primitive_element
    t = F.pow(g, (F.q - 1) // r)
    Ag = build_abelian(A)
    M = F.mul_matrix(t)
    ident = [[int(r_ == c_) for c_ in range(k)] for r_ in range(k)]
    matrices = []
    gen_factor = [f for f, c in enumerate(A.cyclic_orders) if c > 1]
    for f in gen_factor:
        matrices.append(M if f == factor else ident)
    _check_cap(F.q * A.order, max_order)
    c = semidirect(VectorSpace(p, k), Ag, matrices, max_order=max_order,
                   name=f"prop23(p={p}, A={list(A.cyclic_orders)})")
    c.provenance.update({
        "kind": "prop23",
        "r": r,
        "q": q,
        "lambda_factor": factor,
        "k": k,
        "modulus": list(fspec.modulus),
        "primitive_element": F.coeffs(g),
        "t": F.coeffs(t),
        "t_order": F.mult_order(t),
    })
    c.extra["field_spec"] = fspec
    c.extra["t"] = t
    return c


def check_simple_module(spec: FieldSpec, t: int) -> bool:
    """True iff the only additive subgroups of F_{p^k} closed under
    multiplication by ``t`` are 0 and the whole field.

    For every nonzero v (one per t-orbit), builds the additive closure of the
    t-orbit of v and checks it is everything.
    """
    F = FiniteField(spec)
    p = F.p
    done: set[int] = set()
    for v in range(1, F.q):
        if v in done:
            continue  # same t-orbit, same closure
        orbit = []
        x = v
        while x not in orbit:
            orbit.append(x)
            x = F.mul(x, t)
        done.update(orbit)
        span = {0}
        for o in orbit:
            if o in span:
                continue
            multiples = [0]
            for _ in range(p - 1):
                multiples.append(F.add(multiples[-1], o))
            span = {F.add(s, m) for s in span for m in multiples}
        if len(span) != F.q:
            return False
    return True


GROUP_KINDS = (
    "cyclic", "abelian", "dihedral", "symmetric", "alternating", "quaternion",
    "prop23", "schreier_quotient", "wreath", "direct", "perm",
)


def _require(record: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in record]
    if missing:
        raise InputError(f"group spec of kind {record.get('kind')!r} is missing {', '.join(missing)}")


def build_group(record: dict, max_order: int = DEFAULT_MAX_ORDER) -> tuple[PermGroup, dict]:
    """Build a group from a declarative record such as
    ``{kind: prop23, p: 2, abelian: [3]}``.  Returns the group and a
    JSON-serializable provenance dict."""
    if not isinstance(record, dict) or "kind" not in record:
        raise InputError("group spec must be a mapping with a 'kind' field")
    kind = record["kind"]
    if kind == "cyclic":
        _require(record, "n")
        return cyclic(int(record["n"])), {"kind": kind}
    if kind == "abelian":
        _require(record, "abelian")
        return build_abelian(AbelianSpec(tuple(record["abelian"])), max_order), {"kind": kind}
    if kind == "dihedral":
        _require(record, "n")
        return dihedral(int(record["n"])), {"kind": kind}
    if kind == "symmetric":
        _require(record, "n")
        return symmetric(int(record["n"])), {"kind": kind}
    if kind == "alternating":
        _require(record, "n")
        return alternating(int(record["n"])), {"kind": kind}
    if kind == "quaternion":
        return quaternion(), {"kind": kind}
    if kind == "prop23":
        _require(record, "p", "abelian")
        c = prop23_group(int(record["p"]), AbelianSpec(tuple(record["abelian"])), max_order)
        return c.group, c.provenance
    if kind == "schreier_quotient":
        _require(record, "n", "p", "abelian")
        spec = SchreierQuotientSpec(int(record["n"]), int(record["p"]), AbelianSpec(tuple(record["abelian"])))
        c = schreier_quotient(spec, max_order)
        return c.group, c.provenance
    if kind == "wreath":
        _require(record, "p", "copies", "abelian")
        c = wreath(int(record["p"]), int(record["copies"]), build_abelian(record["abelian"]), max_order)
        return c.group, c.provenance
    if kind == "direct":
        _require(record, "factors")
        factors = [build_group(f, max_order) for f in record["factors"]]
        if not factors:
            raise InputError("direct product needs at least one factor")
        G = factors[0][0]
        for H, _ in factors[1:]:
            G = direct_product(G, H)
        if G.order() > max_order:
            raise ResourceError(f"group of order {G.order()} exceeds cap {max_order}")
        return G, {"kind": kind, "factors": [prov for _, prov in factors]}
    if kind == "perm":
        _require(record, "degree", "generators")
        return PermGroup(int(record["degree"]), [Perm(g) for g in record["generators"]]), {"kind": kind}
    raise InputError(f"unknown group kind {kind!r}; expected one of {', '.join(GROUP_KINDS)}")
