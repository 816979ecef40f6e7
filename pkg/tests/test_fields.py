import random

import pytest

from cubiclifford.errors import CharTwoOrThree, NoOmega, NotPrime
from cubiclifford.fields import make_field


def test_make_prime_field_omega_flags():
    assert make_field("prime", 13).has_omega
    assert make_field("prime", 7).has_omega
    assert not make_field("prime", 5).has_omega


def test_excluded_characteristics():
    with pytest.raises(CharTwoOrThree):
        make_field("prime", 3)
    with pytest.raises(CharTwoOrThree):
        make_field("prime", 2)
    with pytest.raises(NotPrime):
        make_field("prime", 15)


def test_cube_root_of_unity_values():
    assert make_field("prime", 13).omega() == 3
    assert make_field("prime", 7).omega() == 2


def test_no_omega():
    with pytest.raises(NoOmega):
        make_field("prime", 5).omega()
    with pytest.raises(NoOmega):
        make_field("rational").omega()


@pytest.mark.parametrize("p", [7, 13, 31, 10009])
def test_random_inverses(p):
    F = make_field("prime", p)
    rng = random.Random(p)
    for _ in range(50):
        a = rng.randrange(1, p)
        assert F.mul(a, F.inv(a)) == F.one


def test_rational_inverses():
    F = make_field("rational")
    rng = random.Random(0)
    for _ in range(50):
        a = F.of(rng.randrange(1, 100)) / F.of(rng.randrange(1, 100))
        assert F.mul(a, F.inv(a)) == F.one


@pytest.mark.parametrize("p", [7, 13, 31, 10009])
def test_omega_relations(p):
    F = make_field("prime", p)
    w = F.omega()
    assert w != F.one
    assert F.mul(F.mul(w, w), w) == F.one
    # 1 + w + w^2 = 0
    assert F.add(F.one, F.add(w, F.mul(w, w))) == F.zero
