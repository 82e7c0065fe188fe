import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schreierkit import corpus
from schreierkit.constructions import alternating, build_abelian, cyclic, prop23_group, symmetric
from schreierkit.errors import InputError, ResourceError
from schreierkit.permgrp import (
    Perm,
    PermGroup,
    commutator,
    derived_subgroup,
    element_orders,
    exponent,
    is_member,
    normal_closure,
    normalizer,
    order,
    p_part,
    prime_divisors,
    project,
    quotient,
    quotient_map,
    sylow,
)

from conftest import brute_closure


def perms_of(d):
    return st.permutations(list(range(d))).map(Perm)


S3 = PermGroup(3, [Perm([1, 2, 0]), Perm([1, 0, 2])])
DT = Perm.from_cycles(4, (0, 1), (2, 3))


class TestPerm:
    def test_right_action(self):
        p = Perm.from_cycles(3, (0, 1))
        q = Perm.from_cycles(3, (1, 2))
        # apply p first, then q
        assert (p * q)(0) == q(p(0)) == 2

    def test_inverse_power_conjugation(self):
        p = Perm.from_cycles(5, (0, 1, 2, 3, 4))
        assert (p * ~p).is_identity()
        assert p ** 5 == Perm.identity(5)
        g = Perm.from_cycles(5, (0, 1))
        assert p ** g == ~g * p * g
        assert p.order() == 5

    def test_cycles_roundtrip(self):
        p = Perm.from_cycles(6, (0, 3), (1, 4, 5))
        assert Perm.from_cycles(6, *p.cycles()) == p

    def test_rejects_non_bijection(self):
        with pytest.raises(InputError):
            Perm([0, 0, 1])

    @given(perms_of(6), perms_of(6), perms_of(6))
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)


class TestOrderAndMembership:
    def test_small_orders(self):
        assert order(PermGroup(1, [])) == 1
        assert order(S3) == 6
        assert order(prop23_group(2, (3,)).group) == 12

    def test_membership(self):
        C3 = PermGroup(3, [Perm([1, 2, 0])])
        assert is_member(C3, Perm.identity(3))
        assert not is_member(C3, Perm([1, 0, 2]))
        with pytest.raises(InputError):
            is_member(C3, Perm.identity(4))

    def test_random_products_are_members(self):
        A4 = alternating(4)
        rng = random.Random(1)
        for _ in range(100):
            g = Perm.identity(4)
            for _ in range(rng.randint(1, 10)):
                g = g * rng.choice(A4.gens)
            assert A4.contains(g)

    def test_outside_elements_rejected(self):
        A4 = alternating(4)
        for g in symmetric(4).elements():
            even = sum(len(c) - 1 for c in g.cycles()) % 2 == 0
            assert A4.contains(g) == even
        assert not A4.contains(Perm.from_cycles(4, (0, 1)))

    @pytest.mark.parametrize("name", [n for n, G in corpus.groups(500)])
    def test_chain_order_matches_closure(self, name):
        G = corpus.get(name)
        elems = brute_closure([g.img for g in G.gens], G.degree)
        assert G.order() == len(elems)
        assert all(G.contains(Perm(e)) for e in list(elems)[:50])

    @given(st.lists(perms_of(6), max_size=3), perms_of(6))
    def test_membership_agrees_with_closure(self, gens, g):
        G = PermGroup(6, gens)
        elems = brute_closure([x.img for x in gens], 6)
        assert G.order() == len(elems)
        assert G.contains(g) == (g.img in elems)


class TestNormalClosureAndQuotients:
    def test_normal_closure_examples(self):
        assert normal_closure(S3, [Perm.identity(3)]).order() == 1
        assert normal_closure(S3, [Perm([1, 2, 0])]).order() == 3
        assert normal_closure(alternating(4), [DT]).order() == 4

    def test_normal_closure_rejects_outsiders(self):
        with pytest.raises(InputError):
            normal_closure(PermGroup(3, [Perm([1, 2, 0])]), [Perm([1, 0, 2])])

    def test_quotient_examples(self):
        assert quotient(S3, S3).order() == 1
        assert quotient(S3, derived_subgroup(S3)).order() == 2
        A4 = alternating(4)
        assert quotient(A4, normal_closure(A4, [DT])).order() == 3
        with pytest.raises(InputError):
            quotient(S3, PermGroup(3, [Perm([1, 0, 2])]))

    def test_project_is_a_homomorphism(self):
        S4 = symmetric(4)
        V4 = normal_closure(S4, [DT])
        Q, reps = quotient_map(S4, V4)
        rng = random.Random(0)
        for _ in range(30):
            a, b = S4.random_element(rng), S4.random_element(rng)
            assert project(V4, reps, a * b) == project(V4, reps, a) * project(V4, reps, b)
            assert Q.contains(project(V4, reps, a))

    @pytest.mark.parametrize("name", ["S3", "D4", "Q8", "S4", "V4:C3", "C3wrC2", "ext(3,[4])", "S3xS3"])
    def test_derived_subgroup_properties(self, name):
        G = corpus.get(name)
        D = derived_subgroup(G)
        assert D.is_normal_in(G)
        Q = quotient(G, D)
        assert Q.is_abelian()
        assert Q.order() * D.order() == G.order()
        for x in G.gens:
            for y in G.gens:
                assert D.contains(commutator(x, y))

    @pytest.mark.parametrize("name", ["S4", "D6", "ext(2,[3,3])", "sq(2,3,[2])"])
    def test_normal_closure_is_conjugation_closed(self, name):
        G = corpus.get(name)
        N = normal_closure(G, [G.gens[0]])
        for n in N.gens:
            for g in G.gens:
                assert N.contains(n ** g)

    def test_abelian_has_trivial_derived(self):
        assert derived_subgroup(build_abelian([2, 6])).order() == 1


class TestSylowAndElements:
    def test_examples(self):
        assert sylow(cyclic(6), 5).order() == 1
        assert sylow(S3, 3) == derived_subgroup(S3)
        c = prop23_group(2, (3,))
        P = sylow(c.group, 2)
        assert P == c.base and P.is_normal_in(c.group)

    @pytest.mark.parametrize("name", [n for n, G in corpus.groups(800)])
    def test_sylow_orders_across_corpus(self, name):
        G = corpus.get(name)
        for p in prime_divisors(G.order()):
            P = sylow(G, p)
            assert P.order() == p_part(G.order(), p)
            assert P.is_subgroup_of(G)

    def test_normalizer_examples(self):
        assert normalizer(S3, S3) == S3
        t = PermGroup(3, [Perm([1, 0, 2])])
        assert normalizer(S3, t).order() == 2
        A4 = alternating(4)
        assert normalizer(A4, normal_closure(A4, [DT])) == A4

    def test_exponents(self):
        assert exponent(cyclic(6)) == 6
        assert exponent(build_abelian([2, 2])) == 2
        assert exponent(cyclic(3)) == 3 and (2 - 1) % 3 != 0
        assert exponent(symmetric(4)) == 12

    def test_element_orders(self):
        counts = element_orders(S3)
        assert counts == {1: 1, 2: 3, 3: 2}
        assert sum(element_orders(alternating(5)).values()) == 60

    def test_element_cap(self):
        with pytest.raises(ResourceError):
            symmetric(8).elements(max_order=1000)

    def test_group_equality_by_membership(self):
        assert PermGroup(3, [Perm([1, 2, 0]), Perm([1, 0, 2])]) == PermGroup(3, [Perm([0, 2, 1]), Perm([2, 1, 0])])
