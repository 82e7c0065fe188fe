import itertools

import pytest

from schreierkit.errors import InputError
from schreierkit.fields import FieldSpec, is_irreducible, smallest_irreducible

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 6), (7, 2), (3, 3)]


def _brute_irreducible(f, p):
    # no monic factor of degree 1..deg/2, checked by multiplying out all pairs
    deg = len(f) - 1
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out
    for d in range(1, deg // 2 + 1):
        for a in itertools.product(range(p), repeat=d):
            for b in itertools.product(range(p), repeat=deg - d):
                if mul(list(a) + [1], list(b) + [1]) == list(f):
                    return False
    return True


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_irreducibility_matches_brute_force(p, k):
    for tail in itertools.product(range(p), repeat=k):
        f = list(tail) + [1]
        assert is_irreducible(f, p) == _brute_irreducible(f, p)


def test_smallest_moduli():
    assert smallest_irreducible(2, 2) == [1, 1, 1]
    assert smallest_irreducible(3, 2) == [1, 0, 1]
    assert smallest_irreducible(2, 3) == [1, 1, 0, 1]


def test_reducible_modulus_rejected():
    with pytest.raises(InputError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(InputError):
        FieldSpec(4, 1, (0, 1))


@pytest.mark.parametrize("p,k", FIELDS)
def test_field_axioms(p, k):
    F = FieldSpec.default(p, k).field()
    els = list(F.elements)
    sample = els if F.q <= 16 else els[:: max(1, F.q // 12)]
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a, b in itertools.product(els, sample):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
    for a, b, c in itertools.product(sample, repeat=3):
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))


@pytest.mark.parametrize("p,k", FIELDS)
def test_multiplicative_group_is_cyclic(p, k):
    F = FieldSpec.default(p, k).field()
    g = F.primitive_element
    assert F.mult_order(g) == F.q - 1
    assert {F.pow(g, e) for e in range(F.q - 1)} == set(range(1, F.q))
    # smallest such element
    assert all(F.mult_order(x) != F.q - 1 for x in range(1, g))


def test_mul_matrix_acts_like_multiplication():
    F = FieldSpec.default(3, 2).field()
    t = F.pow(F.primitive_element, 2)
    M = F.mul_matrix(t)
    for x in F.elements:
        v = F.coeffs(x)
        image = [sum(M[i][j] * v[j] for j in range(F.k)) % F.p for i in range(F.k)]
        assert F.encode(image) == F.mul(t, x)
