import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schreierkit import stallings
from schreierkit.errors import InputError, ResourceError, UnsupportedInput
from schreierkit.stallings import (
    INFINITE,
    SubgroupGraph,
    Word,
    contains,
    enumerate_subgroups,
    from_generators,
    index,
    rank,
    schreier_generators,
    spanning_words,
)

from conftest import hall_counts, transitive_tuple_count


def words_in(n, max_len=8, max_size=5):
    letter = st.integers(-n, n).filter(bool)
    return st.lists(st.lists(letter, max_size=max_len), max_size=max_size)


def check_graph_invariants(g: SubgroupGraph):
    V = g.num_vertices
    # determinism and out/in consistency
    for v in range(V):
        for i in range(g.n):
            w = g.out[v][i]
            if w != -1:
                assert g.inn[w][i] == v
            u = g.inn[v][i]
            if u != -1:
                assert g.out[u][i] == v
    # connected from the base
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for i in range(g.n):
            for w in (g.out[v][i], g.inn[v][i]):
                if w != -1 and w not in seen:
                    seen.add(w)
                    stack.append(w)
    assert len(seen) == V
    # core: every non-base vertex has degree >= 2
    for v in range(1, V):
        deg = sum(x != -1 for x in g.out[v]) + sum(x != -1 for x in g.inn[v])
        assert deg >= 2


class TestWord:
    def test_parse_and_print(self):
        w = Word.parse("abA", 2)
        assert w.letters == (1, 2, -1)
        assert str(w) == "abA"

    def test_free_reduction(self):
        assert Word.parse("abBA", 2).letters == ()
        assert Word((1, -1, 2), 2).letters == (2,)

    @pytest.mark.parametrize("text", ["", "1", "e"])
    def test_identity_spellings(self, text):
        assert Word.parse(text, 2).letters == ()

    def test_bad_letters(self):
        with pytest.raises(InputError, match="column 2"):
            Word.parse("a!", 2)
        with pytest.raises(InputError):
            Word.parse("c", 2)
        with pytest.raises(InputError):
            Word((0,), 2)

    def test_inverse_and_product(self):
        w = Word.parse("aab", 2)
        assert (w * w.inverse()).letters == ()
        assert str(w.inverse()) == "BAA"


class TestExamples:
    def test_trivial_subgroup(self):
        g = from_generators(2, [])
        assert g.num_vertices == 1 and g.num_edges == 0
        assert rank(g) == 0
        assert index(g) == INFINITE

    def test_index_two(self):
        g = from_generators(2, ["aa", "b", "abA"])
        assert g.num_vertices == 2 and g.num_edges == 4
        assert index(g) == 2
        assert rank(g) == 3 == (2 - 1) * 2 + 1
        assert contains(g, "aa")
        assert not contains(g, "a")
        # a b a b: the a-edges swap the two vertices, b fixes both
        assert contains(g, "abab")
        assert contains(g, "abab") == (g.trace("abab") == 0)

    def test_infinite_index(self):
        # <a, b a b^-1> folds to two vertices joined by a b-edge with an a-loop on each
        g = from_generators(2, ["a", "baB"])
        assert g.num_vertices == 2
        assert index(g) == INFINITE
        assert rank(g) == 2

    def test_whole_group(self):
        g = from_generators(2, ["a", "b"])
        assert index(g) == 1
        assert [str(w) for w in schreier_generators(g)] == ["a", "b"]
        one = from_generators(1, ["a"])
        assert index(one) == 1 and rank(one) == 1

    def test_schreier_generators_index_two(self):
        g = from_generators(2, ["aa", "b", "abA"])
        gens = schreier_generators(g)
        assert len(gens) == 3
        assert from_generators(2, gens) == g

    def test_schreier_generators_need_finite_index(self):
        with pytest.raises(UnsupportedInput):
            schreier_generators(from_generators(2, ["a"]))

    def test_rank_mismatch_rejected(self):
        with pytest.raises(InputError):
            from_generators(2, [Word.parse("a", 3)])


class TestEnumeration:
    def test_cyclic(self):
        subs = enumerate_subgroups(1, 5)
        assert len(subs) == 1
        assert subs[0] == from_generators(1, ["aaaaa"])

    @pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
    def test_counts_match_brute_force(self, n, m):
        expected = transitive_tuple_count(n, m) // math.factorial(m - 1)
        assert len(enumerate_subgroups(n, m)) == expected

    @pytest.mark.parametrize("n", [2, 3])
    def test_counts_match_hall(self, n):
        assert [len(enumerate_subgroups(n, m)) for m in range(1, 6)] == hall_counts(n, 5)

    @pytest.mark.parametrize("n,m", [(2, 4), (3, 3)])
    def test_enumerated_are_distinct_and_finite_index(self, n, m):
        subs = enumerate_subgroups(n, m)
        assert len(set(subs)) == len(subs)
        for g in subs:
            assert index(g) == m
            assert rank(g) == (n - 1) * m + 1
            check_graph_invariants(g)

    def test_caps(self):
        with pytest.raises(ResourceError):
            enumerate_subgroups(2, 8)
        with pytest.raises(ResourceError):
            enumerate_subgroups(5, 2)
        assert len(enumerate_subgroups(2, 3, max_index=3)) == 13
        with pytest.raises(InputError):
            enumerate_subgroups(0, 2)


class TestProperties:
    @given(words_in(2))
    def test_folded_graph_invariants(self, words):
        check_graph_invariants(from_generators(2, words))

    @given(words_in(3))
    def test_refolding_is_idempotent(self, words):
        g = from_generators(3, words)
        assert from_generators(3, spanning_words(g)) == g
        assert len(spanning_words(g)) == rank(g)

    @given(words_in(2), st.randoms(use_true_random=False))
    def test_generator_order_irrelevant(self, words, rnd):
        shuffled = list(words)
        rnd.shuffle(shuffled)
        assert from_generators(2, words) == from_generators(2, shuffled)

    @given(words_in(2))
    def test_generators_are_members(self, words):
        g = from_generators(2, words)
        for w in words:
            assert contains(g, w)

    @given(words_in(2), st.lists(st.integers(-2, 2).filter(bool), max_size=8))
    def test_membership_under_free_reduction(self, words, w):
        g = from_generators(2, words)
        padded = [1, -1] + list(w) + [2, -2]
        assert contains(g, padded) == contains(g, w)

    @given(words_in(2, max_size=3))
    def test_adding_a_member_changes_nothing(self, words):
        g = from_generators(2, words)
        if words:
            extra = Word(tuple(words[0]), 2) * Word(tuple(words[-1]), 2).inverse()
            assert from_generators(2, list(words) + [extra]) == g


@pytest.mark.parametrize("n,m", [(2, 3), (2, 4), (3, 3)])
def test_schreier_generators_every_subgroup(n, m):
    for g in enumerate_subgroups(n, m):
        gens = schreier_generators(g)
        assert len(gens) == rank(g) == (n - 1) * m + 1
        assert from_generators(n, gens) == g


def test_products_of_schreier_generators_are_members():
    rng = random.Random(3)
    for g in enumerate_subgroups(2, 4):
        gens = schreier_generators(g)
        for _ in range(5):
            w = Word((), 2)
            for _ in range(4):
                s = rng.choice(gens)
                w = w * (s if rng.random() < 0.5 else s.inverse())
            assert contains(g, w)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_membership_matches_coset_action(m):
    # H = stabilizer of point 0 in a transitive action; a word is in H iff it fixes 0
    rng = random.Random(m)
    for sa, sb in itertools.product(itertools.permutations(range(m)), repeat=2):
        try:
            g = SubgroupGraph.from_permutations([sa, sb])
        except InputError:
            continue  # not transitive
        assert index(g) == m
        for _ in range(6):
            w = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 7))]
            pt = 0
            for x in w:
                p = sa if abs(x) == 1 else sb
                pt = p[pt] if x > 0 else p.index(pt)
            assert contains(g, w) == (pt == 0)


def test_permutation_action_is_transitive():
    g = from_generators(2, ["aa", "b", "abA"])
    acts = stallings.permutation_action(g)
    assert SubgroupGraph.from_permutations(acts) == g


def test_serialization():
    g = from_generators(2, ["aa", "b", "abA"])
    d = g.to_dict()
    assert d["index"] == 2 and d["rank"] == 3 and d["vertices"] == 2
    assert "0 --a--> 1" in g.to_text()
    assert g.to_dot().startswith("digraph")
    assert from_generators(2, ["a"]).to_dict()["index"] is None


def test_skip_folding_fault_breaks_the_formula(monkeypatch):
    monkeypatch.setattr(stallings, "_SKIP_FOLDING", True)
    g = from_generators(2, ["aa", "b", "abA", "abab"])
    monkeypatch.setattr(stallings, "_SKIP_FOLDING", False)
    assert g != from_generators(2, ["aa", "b", "abA", "abab"])
