"""The end-to-end verification harness behind ``schreierkit paper-verify``.

Each check returns a :class:`VerifyReport`; checks never raise on a failed
expectation.  All comparisons are exact.
"""

from __future__ import annotations

import json
import random
import time
import traceback
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from . import corpus, stallings
from ._kernels import closure
from .constructions import (
    AbelianSpec,
    SchreierQuotientSpec,
    alternating,
    check_simple_module,
    prop23_group,
    schreier_quotient,
    schreier_quotient_structure,
)
from .fields import FieldSpec
from .permgrp import (
    DEFAULT_MAX_ORDER,
    Perm,
    derived_subgroup,
    exponent,
    normal_closure,
    quotient,
    sylow,
)
from .stallings import (
    enumerate_subgroups,
    from_generators,
    index,
    rank,
    schreier_generators,
    spanning_words,
)
from .structure import (
    check_cor_2_2,
    d_min,
    generating_tuple_search,
    is_cyclic,
    is_nilpotent,
    is_p_group,
    is_supersolvable,
    minimal_normal_subgroups,
    p_residual,
)


@dataclass
class VerifyReport:
    check_id: str
    status: str  # "pass" | "fail" | "skipped"
    expected: Any
    actual: Any
    runtime: float = 0.0
    seed: int | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Settings:
    seed: int = 0
    max_order: int = DEFAULT_MAX_ORDER
    max_index: int = stallings.DEFAULT_MAX_INDEX
    timeout_per_check: float | None = None


@dataclass
class Check:
    check_id: str
    description: str
    budget: float | None
    run: Callable[[Settings], tuple[Any, Any, str]]
    randomized: bool = False
    aliases: tuple[str, ...] = field(default_factory=tuple)


def _rank_formula(s: Settings):
    # every index-k subgroup of F_n: Stallings rank (n-1)k+1
    counts = {}
    bad = []
    for n in (2, 3):
        for k in range(1, 6):
            subs = enumerate_subgroups(n, k, max_index=max(s.max_index, 5))
            counts[f"n={n},k={k}"] = len(subs)
            for g in subs:
                if index(g) != k or rank(g) != (n - 1) * k + 1:
                    bad.append((n, k, g.out))
                # the graph folded from a free basis must reproduce index and rank
                h = from_generators(n, spanning_words(g))
                if index(h) != k or rank(h) != (n - 1) * k + 1:
                    bad.append((n, k, "refold", g.out))
    return 0, len(bad), f"subgroup counts {counts}" + (f"; first exception {bad[0]}" if bad else "")


def _schreier_generators(s: Settings):
    bad = 0
    total = 0
    for n in (2, 3):
        for k in range(1, 6):
            for g in enumerate_subgroups(n, k, max_index=max(s.max_index, 5)):
                total += 1
                gens = schreier_generators(g)
                if len(gens) != (n - 1) * k + 1 or from_generators(n, gens) != g:
                    bad += 1
    return 0, bad, f"{total} subgroups checked"


def _prop23_instances(s: Settings):
    expected = {}
    actual = {}
    for p, A, order, witness in [(2, (3,), 12, 4), (3, (4,), 36, 9), (2, (3, 3), 36, 4)]:
        key = f"p={p},A={list(A)}"
        c = prop23_group(p, A)
        G = c.group
        ss = is_supersolvable(G)
        d = d_min(G, seed=s.seed)
        bound = max(AbelianSpec(A).d, 2)
        simple = check_simple_module(c.extra["field_spec"], c.extra["t"])
        minimal = any(M == c.base for M in minimal_normal_subgroups(G))
        expected[key] = {"order": order, "supersolvable": False, "witness_order": witness,
                         "d": 2, "d_within_bound": True, "simple_module": True, "base_minimal_normal": True}
        actual[key] = {"order": G.order(), "supersolvable": ss.value, "witness_order": ss.witness_order,
                       "d": d, "d_within_bound": d <= bound, "simple_module": simple, "base_minimal_normal": minimal}
    return expected, actual, ""


def _truncation_small(s: Settings):
    spec = SchreierQuotientSpec(2, 3, AbelianSpec((2,)))
    c = schreier_quotient(spec)
    G = c.group
    P = sylow(G, 3)
    Q = quotient(G, P)
    cor = check_cor_2_2(G)
    structure = schreier_quotient_structure(spec, c)
    expected = {"order": 54, "d": 2, "supersolvable": True, "sylow3_order": 27, "sylow3_normal": True,
                "quotient_order": 2, "quotient_exponent_divides_p_minus_1": True,
                "cor22_hypotheses": True, "splits_as_Cp_x_wreath": True}
    actual = {"order": G.order(), "d": d_min(G, seed=s.seed), "supersolvable": bool(is_supersolvable(G)),
              "sylow3_order": P.order(), "sylow3_normal": P.is_normal_in(G),
              "quotient_order": Q.order(), "quotient_exponent_divides_p_minus_1": (3 - 1) % exponent(Q) == 0,
              "cor22_hypotheses": cor.hypotheses_hold and cor.prime == 3,
              "splits_as_Cp_x_wreath": all(structure.values())}
    return expected, actual, ""


def _truncation_large(s: Settings):
    spec = SchreierQuotientSpec(2, 5, AbelianSpec((4,)))
    G = schreier_quotient(spec, max_order=max(s.max_order, 5 ** 5 * 4)).group
    pair = generating_tuple_search(G, 2, seed=s.seed)
    expected = {"order": 5 ** 5 * 4, "noncyclic": True, "generating_pair_found": True, "d": 2}
    found = pair is not None
    noncyclic = not is_cyclic(G, max_order=max(s.max_order, G.order()))
    actual = {"order": G.order(), "noncyclic": noncyclic, "generating_pair_found": found,
              "d": 2 if (found and noncyclic) else None}
    detail = f"pair {pair}" if found else ""
    return expected, actual, detail


def _supersolvable_corpus(s: Settings):
    failing = []
    nilpotent_failing = []
    for name, G in corpus.groups(max_order=16):
        ss = bool(is_supersolvable(G))
        if not ss:
            failing.append(name)
            if is_nilpotent(G):
                nilpotent_failing.append(name)
    # the only nonsupersolvable group of order <= 16 is A4, built here as V4 ⋊ C3
    return {"failing": ["V4:C3"], "nilpotent_failing": []}, {"failing": failing, "nilpotent_failing": nilpotent_failing}, ""


def _derived_nilpotent(s: Settings):
    exceptions = []
    checked = 0
    for name, G in corpus.groups(max_order=s.max_order):
        if is_supersolvable(G):
            checked += 1
            if not is_nilpotent(derived_subgroup(G)):
                exceptions.append(name)
    return [], exceptions, f"{checked} supersolvable corpus groups"


def _normal_sylow(s: Settings):
    exceptions = []
    holding = []
    for name, G in corpus.groups(max_order=s.max_order):
        rep = check_cor_2_2(G)
        if rep.hypotheses_hold:
            holding.append(name)
            if rep.violation:
                exceptions.append(name)
    return [], exceptions, f"hypotheses hold for {len(holding)} groups: {holding}"


def _p_residual(s: Settings):
    bad = []
    for name, G in corpus.groups(max_order=s.max_order):
        for p in (2, 3, 5):
            R = p_residual(G, p)
            Q = quotient(G, R)
            if not is_p_group(Q, p) or not R.is_normal_in(G):
                bad.append((name, p))
    S3 = corpus.get("S3")
    A4 = alternating(4)
    A3 = normal_closure(S3, [Perm.from_cycles(3, (0, 1, 2))])
    V4 = normal_closure(A4, [Perm.from_cycles(4, (0, 1), (2, 3))])
    expected = {"non_p_quotients": [], "S3_p2_is_A3": True, "A4_p3_is_V4": True}
    actual = {"non_p_quotients": bad, "S3_p2_is_A3": p_residual(S3, 2) == A3,
              "A4_p3_is_V4": p_residual(A4, 3) == V4}
    return expected, actual, ""


def _engine_soundness(s: Settings):
    order_mismatch = []
    for name, G in corpus.groups(max_order=500):
        brute = len(closure([g.img for g in G.gens], G.degree))
        if brute != G.order():
            order_mismatch.append(name)
    rng = random.Random(s.seed)
    fold_failures = 0
    for _ in range(1000):
        n = rng.randint(1, 3)
        letters = [x for x in range(-n, n + 1) if x]
        words = [[rng.choice(letters) for _ in range(rng.randint(0, 8))] for _ in range(rng.randint(0, 4))]
        g = from_generators(n, words)
        if from_generators(n, spanning_words(g)) != g:
            fold_failures += 1
    field_failures = []
    for p, k in [(2, 2), (2, 3), (3, 2), (5, 2)]:
        if not _field_axioms(FieldSpec.default(p, k)):
            field_failures.append(p ** k)
    expected = {"order_mismatches": [], "fold_failures": 0, "field_failures": []}
    actual = {"order_mismatches": order_mismatch, "fold_failures": fold_failures, "field_failures": field_failures}
    return expected, actual, ""


def _field_axioms(spec: FieldSpec) -> bool:
    F = spec.field()
    q = F.q
    E = range(q)
    add, mul = F.add, F.mul
    for a in E:
        if add(a, 0) != a or mul(a, 1) != a or add(a, F.neg(a)) != 0:
            return False
        if a and mul(a, F.inv(a)) != 1:
            return False
        for b in E:
            if add(a, b) != add(b, a) or mul(a, b) != mul(b, a):
                return False
            for c in E:
                if add(add(a, b), c) != add(a, add(b, c)):
                    return False
                if mul(mul(a, b), c) != mul(a, mul(b, c)):
                    return False
                if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
                    return False
    return F.mult_order(F.primitive_element) == q - 1


CHECKS: list[Check] = [
    Check("eq1-rank-formula", "every index-k subgroup of F_n (n in {2,3}, k <= 5) has rank (n-1)k+1", 60.0, _rank_formula),
    Check("eq1-schreier-generators", "Schreier generating sets have (n-1)k+1 words and refold to the same graph", 60.0, _schreier_generators),
    Check("prop23-instances", "nonsupersolvable extensions: orders, witnesses, d = 2, simple modules", 10.0, _prop23_instances, randomized=True),
    Check("truncation-small", "n=2, p=3, A=C2: order 54, d = 2, supersolvable, normal Sylow 3", 10.0, _truncation_small, randomized=True),
    Check("truncation-large", "n=2, p=5, A=C4: seeded search finds a generating pair", 120.0, _truncation_large, randomized=True),
    Check("supersolvable-corpus", "order <= 16: only V4 ⋊ C3 fails supersolvability; nilpotent groups pass", None, _supersolvable_corpus),
    Check("derived-nilpotent", "supersolvable corpus groups have nilpotent derived subgroup", None, _derived_nilpotent),
    Check("normal-sylow-criterion", "normal Sylow p with abelian quotient of exponent | p-1 implies supersolvable", None, _normal_sylow),
    Check("p-residual", "G / p-residual is a p-group; S3 -> A3, A4 -> V4", None, _p_residual),
    Check("engine-soundness", "chain orders vs brute force, folding idempotence, field axioms", 60.0, _engine_soundness, randomized=True),
]


def select(only: list[str] | None = None) -> list[Check]:
    if not only:
        return list(CHECKS)
    return [c for c in CHECKS if any(tok in c.check_id for tok in only)]


def run_check(check: Check, settings: Settings) -> VerifyReport:
    t0 = time.perf_counter()
    seed = settings.seed if check.randomized else None
    try:
        expected, actual, detail = check.run(settings)
        status = "pass" if expected == actual else "fail"
    except Exception as exc:  # reported, not thrown
        expected, actual = "no error", f"{type(exc).__name__}: {exc}"
        detail = traceback.format_exc(limit=3)
        status = "fail"
    runtime = time.perf_counter() - t0
    limit = settings.timeout_per_check if settings.timeout_per_check is not None else check.budget
    if limit is not None and runtime > limit and status == "pass":
        status = "fail"
        detail = (detail + "; " if detail else "") + f"runtime {runtime:.1f}s exceeds budget {limit:.0f}s"
    return VerifyReport(check.check_id, status, expected, actual, runtime, seed, detail)


def run_all(settings: Settings | None = None, only: list[str] | None = None) -> list[VerifyReport]:
    settings = settings or Settings()
    return [run_check(c, settings) for c in select(only)]


def format_table(reports: list[VerifyReport]) -> str:
    lines = [f"{'check':26s} {'status':7s} {'time':>8s}  detail"]
    for r in reports:
        info = r.detail.splitlines()[0] if r.detail else ""
        if r.status != "pass":
            info = f"expected {json.dumps(r.expected, default=str)} got {json.dumps(r.actual, default=str)}"
        lines.append(f"{r.check_id:26s} {r.status.upper():7s} {r.runtime:7.2f}s  {info}")
    n_pass = sum(r.passed for r in reports)
    lines.append(f"{n_pass}/{len(reports)} checks passed")
    return "\n".join(lines)
