"""Structural invariants of finite permutation groups: chief series,
supersolvability, nilpotency, minimal generator number, Frattini subgroup of
p-groups and p-residuals."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InputError, ResourceError
from .permgrp import (
    DEFAULT_MAX_ORDER,
    Perm,
    PermGroup,
    _Chain,
    commutator,
    derived_subgroup,
    exponent,
    is_prime,
    normal_closure,
    p_part,
    prime_divisors,
    quotient,
    sylow,
)

DEFAULT_TRIALS = 5000


def trivial_subgroup(G: PermGroup) -> PermGroup:
    return PermGroup(G.degree, [])


def _serial(H: PermGroup) -> tuple:
    return tuple(g.img for g in H.gens)


def is_cyclic(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    n = G.order()
    if n == 1:
        return True
    if not G.is_abelian():
        return False
    return exponent(G, max_order) == n


def conjugacy_class_reps(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> list[Perm]:
    done: set[Perm] = set()
    reps = []
    for x in G.elements(max_order):
        if x in done:
            continue
        reps.append(x)
        cls = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in G.gens:
                z = y ** g
                if z not in cls:
                    cls.add(z)
                    frontier.append(z)
        done |= cls
    return reps


def _minimal_normal_over(
    G: PermGroup, H: PermGroup, reps: Sequence[Perm]
) -> list[PermGroup]:
    # normal subgroups M of G with M/H minimal normal in G/H: inclusion-minimal
    # closures of H with one element whose image mod H has prime order
    Hord = H.order()
    candidates: list[PermGroup] = []
    for x in reps:
        if H.contains(x):
            continue
        o = x.order()
        if not any(H.contains(x ** q) for q in prime_divisors(o)):
            continue
        # closure lies in any candidate containing x; equal when that one has prime index over H
        if any(is_prime(C.order() // Hord) and C.contains(x) for C in candidates):
            continue
        N = normal_closure(G, [x], over=H)
        if any(C.order() == N.order() and C == N for C in candidates):
            continue
        candidates.append(N)
    minimal = [
        N for N in candidates
        if not any(C.order() < N.order() and C.is_subgroup_of(N) for C in candidates)
    ]
    minimal.sort(key=lambda N: (N.order(), _serial(N)))
    return minimal


def minimal_normal_subgroups(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> list[PermGroup]:
    """Inclusion-minimal members among normal closures of prime-order elements,
    one closure per conjugacy class; sorted by order."""
    if G.order() == 1:
        return []
    return _minimal_normal_over(G, trivial_subgroup(G), conjugacy_class_reps(G, max_order))


@dataclass
class ChiefSeries:
    subgroups: list[PermGroup]
    factor_orders: list[int]
    factor_cyclic: list[bool]

    def to_dict(self) -> dict:
        return {
            "orders": [H.order() for H in self.subgroups],
            "factor_orders": self.factor_orders,
            "factor_cyclic": self.factor_cyclic,
        }


def chief_series(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> ChiefSeries:
    """Ascending chief series from the trivial group to G.

    Each step takes the smallest minimal normal subgroup of G/H_i, found
    directly as its preimage in G.  A chief factor is characteristically
    simple, so it is cyclic exactly when its order is prime.
    """
    if G.order() > max_order:
        raise ResourceError(f"group of order {G.order()} exceeds cap {max_order}")
    reps = conjugacy_class_reps(G, max_order)
    H = trivial_subgroup(G)
    subgroups = [H]
    orders: list[int] = []
    cyclic: list[bool] = []
    while H.order() < G.order():
        nxt = _minimal_normal_over(G, H, reps)[0]
        f = nxt.order() // H.order()
        orders.append(f)
        cyclic.append(is_prime(f))
        subgroups.append(nxt)
        H = nxt
    return ChiefSeries(subgroups, orders, cyclic)


@dataclass
class SupersolvabilityResult:
    value: bool
    series: ChiefSeries
    witness: int | None = None  # index of the first noncyclic chief factor

    def __bool__(self) -> bool:
        return self.value

    @property
    def witness_order(self) -> int | None:
        return None if self.witness is None else self.series.factor_orders[self.witness]


def is_supersolvable(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> SupersolvabilityResult:
    """Supersolvable iff every factor of one chief series is cyclic."""
    cs = chief_series(G, max_order)
    for i, cyc in enumerate(cs.factor_cyclic):
        if not cyc:
            return SupersolvabilityResult(False, cs, i)
    return SupersolvabilityResult(True, cs)


def lower_central_series(G: PermGroup) -> list[PermGroup]:
    series = [G]
    cur = G
    while True:
        comms = [commutator(x, g) for x in cur.gens for g in G.gens]
        nxt = normal_closure(G, comms)
        if nxt.order() == cur.order():
            return series
        series.append(nxt)
        cur = nxt


def is_nilpotent(G: PermGroup) -> bool:
    return lower_central_series(G)[-1].order() == 1


def all_sylows_normal(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    return all(sylow(G, p, max_order).is_normal_in(G) for p in prime_divisors(G.order()))


def is_p_group(G: PermGroup, p: int) -> bool:
    return p_part(G.order(), p) == G.order()


def frattini_p_group(G: PermGroup, p: int) -> PermGroup:
    """Φ(G) = G'·G^p for a p-group G."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if not is_p_group(G, p):
        raise InputError(f"group of order {G.order()} is not a {p}-group")
    gs = G.gens
    words = [commutator(a, b) for i, a in enumerate(gs) for b in gs[i + 1:]]
    words += [g ** p for g in gs]
    words = [w for w in words if not w.is_identity()]
    return normal_closure(G, words)


def _prime_of_p_group(G: PermGroup) -> int | None:
    ps = prime_divisors(G.order())
    return ps[0] if len(ps) == 1 else None


def abelian_rank_bound(G: PermGroup) -> int:
    """max over primes q of the rank of G / G'G^q, a lower bound for d(G)."""
    D = derived_subgroup(G)
    best = 0
    for q in prime_divisors(G.order() // D.order()):
        N = normal_closure(G, [g ** q for g in G.gens], over=D)
        best = max(best, round(math.log(G.order() // N.order(), q)))
    return best


def _generates(degree: int, gens: Sequence[Perm], target: int) -> bool:
    ch = _Chain(degree)
    for g in gens:
        ch.extend(g)
    return ch.order() == target


def d_min(
    G: PermGroup,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    max_order: int = DEFAULT_MAX_ORDER,
    exhaustive: bool = True,
) -> int:
    """Least size of a generating set.

    p-groups: rank of the elementary abelian G/Φ(G).  Otherwise k = 1 is
    decided exactly (cyclic iff abelian with exponent |G|); from k = the
    rank bound of the abelianization (at least 2) upward, a seeded random search looks for a generating k-tuple, then an exhaustive
    search over k-tuples (first entry a conjugacy-class representative)
    proves that none exists before moving to k + 1.
    """
    n = G.order()
    if n == 1:
        return 0
    p = _prime_of_p_group(G)
    if p is not None:
        return round(math.log(n // frattini_p_group(G, p).order(), p))
    if is_cyclic(G, max_order):
        return 1
    rng = random.Random(seed)
    upper = len([g for g in G.gens if not g.is_identity()])
    # no tuple smaller than the abelian bound can generate, so start there
    k = max(2, abelian_rank_bound(G))
    while k < upper:
        for _ in range(trials):
            tup = [G.random_element(rng) for _ in range(k)]
            if _generates(G.degree, tup, n):
                return k
        if not exhaustive:
            raise ResourceError(f"no generating {k}-tuple found in {trials} trials", bounds=(k, upper))
        if n > max_order:
            raise ResourceError(f"exhaustive search over a group of order {n} exceeds cap {max_order}", bounds=(k, upper))
        elems = G.elements(max_order)
        for first in conjugacy_class_reps(G, max_order):
            for rest in itertools.product(elems, repeat=k - 1):
                if _generates(G.degree, (first,) + rest, n):
                    return k
        k += 1
    return upper


def generating_tuple_search(G: PermGroup, k: int, seed: int = 0, trials: int = DEFAULT_TRIALS) -> list[Perm] | None:
    """First seeded random k-tuple generating G, or None."""
    rng = random.Random(seed)
    n = G.order()
    for _ in range(trials):
        tup = [G.random_element(rng) for _ in range(k)]
        if _generates(G.degree, tup, n):
            return tup
    return None


def p_residual(G: PermGroup, p: int, max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    """Smallest normal subgroup with p-group quotient: normal closure of
    Sylow q-subgroups for primes q != p."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    gens: list[Perm] = []
    for q in prime_divisors(G.order()):
        if q != p:
            gens += sylow(G, q, max_order).gens
    return normal_closure(G, gens)


@dataclass
class NormalSylowReport:
    prime: int | None
    hypotheses_hold: bool
    supersolvable: bool | None = None

    @property
    def violation(self) -> bool:
        return self.hypotheses_hold and self.supersolvable is False


def check_cor_2_2(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> NormalSylowReport:
    """Look for a prime p with a normal Sylow p-subgroup P such that G/P is
    abelian of exponent dividing p - 1; when found, test supersolvability."""
    for p in prime_divisors(G.order()):
        P = sylow(G, p, max_order)
        if not P.is_normal_in(G):
            continue
        Q = quotient(G, P, max_order)
        if not Q.is_abelian():
            continue
        if (p - 1) % exponent(Q, max_order):
            continue
        return NormalSylowReport(p, True, bool(is_supersolvable(G, max_order)))
    return NormalSylowReport(None, False)


def derived_nilpotent_if_supersolvable(G: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> bool | None:
    """For supersolvable G, whether G' is nilpotent; None if G is not
    supersolvable."""
    if not is_supersolvable(G, max_order):
        return None
    return is_nilpotent(derived_subgroup(G))


@dataclass
class AnalysisReport:
    order: int
    d_min: int | None = None
    supersolvable: bool | None = None
    nilpotent: bool | None = None
    chief_factor_orders: list[int] | None = None
    sylow_orders: dict[int, int] | None = None
    derived_order: int | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "order": self.order,
            "d_min": self.d_min,
            "supersolvable": self.supersolvable,
            "nilpotent": self.nilpotent,
            "chief_factor_orders": self.chief_factor_orders,
            "sylow_orders": None if self.sylow_orders is None else {str(k): v for k, v in self.sylow_orders.items()},
            "derived_order": self.derived_order,
        }
        out.update(self.extra)
        return out

    def to_text(self) -> str:
        lines = []
        for key, val in self.to_dict().items():
            if val is not None:
                lines.append(f"{key:20s} {val}")
        return "\n".join(lines)


ALL_QUERIES = ("order", "d", "supersolvable", "nilpotent", "chief", "sylow", "derived")


def analyze(
    G: PermGroup,
    queries: Sequence[str] = ALL_QUERIES,
    seed: int = 0,
    max_order: int = DEFAULT_MAX_ORDER,
    residual_primes: Sequence[int] = (),
) -> AnalysisReport:
    rep = AnalysisReport(order=G.order())
    if "d" in queries:
        rep.d_min = d_min(G, seed=seed, max_order=max_order)
    if "supersolvable" in queries or "chief" in queries:
        ss = is_supersolvable(G, max_order)
        if "supersolvable" in queries:
            rep.supersolvable = ss.value
            if ss.witness is not None:
                rep.extra["noncyclic_chief_factor_order"] = ss.witness_order
        if "chief" in queries:
            rep.chief_factor_orders = ss.series.factor_orders
    if "nilpotent" in queries:
        rep.nilpotent = is_nilpotent(G)
    if "sylow" in queries:
        rep.sylow_orders = {p: sylow(G, p, max_order).order() for p in prime_divisors(G.order())}
    if "derived" in queries:
        rep.derived_order = derived_subgroup(G).order()
    for p in residual_primes:
        rep.extra.setdefault("p_residual_orders", {})[str(p)] = p_residual(G, p, max_order).order()
    return rep
