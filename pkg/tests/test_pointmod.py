import random

import pytest

from cubiclifford.commgeo import singular_locus_membership
from cubiclifford.errors import ZeroPoint
from cubiclifford.pointmod import (PointTriple, abc_system_admits_solution,
                                   all_proj_points, central_character_diagonal,
                                   gamma_invariants,
                                   gamma_squared_identity_symbolic,
                                   predict_simple_quotient, proj_point,
                                   solve_next, validate_point_sequence)


def test_proj_point_canonical(f13):
    assert proj_point(f13, 2, 6) == proj_point(f13, 1, 3)
    assert proj_point(f13, 0, 5) == proj_point(f13, 0, 1)
    with pytest.raises(ZeroPoint):
        proj_point(f13, 0, 0)


def test_all_proj_points_count(f7, f13):
    assert len(all_proj_points(f7)) == 8
    assert len(set(all_proj_points(f13))) == 14


def random_triple(field, rng):
    pts = all_proj_points(field)
    return PointTriple(*(rng.choice(pts) for _ in range(3)))


def test_solve_next_exhaustive_f7(f7):
    pts = all_proj_points(f7)
    for p0 in pts:
        for p1 in pts:
            for p2 in pts:
                t = PointTriple(p0, p1, p2)
                assert solve_next(f7, t) == p0


def test_solve_next_random_f13_f31(f13, f31):
    rng = random.Random(8)
    for F in (f13, f31):
        for _ in range(100):
            t = random_triple(F, rng)
            assert solve_next(F, t) == t.p0


def test_validate_point_sequence(f13):
    rng = random.Random(9)
    t = random_triple(f13, rng)
    seq = [t.p0, t.p1, t.p2]
    for _ in range(5):
        seq.append(solve_next(
            f13, PointTriple(seq[-3], seq[-2], seq[-1])))
    assert validate_point_sequence(f13, seq)
    other = proj_point(f13, 1, 1) if seq[3] != proj_point(f13, 1, 1) \
        else proj_point(f13, 1, 2)
    assert not validate_point_sequence(f13, seq[:3] + [other])
    with pytest.raises(ValueError):
        validate_point_sequence(f13, seq[:3])


def test_gamma_squared_symbolic():
    assert gamma_squared_identity_symbolic()


def test_gamma_squared_numeric(f13, f31):
    rng = random.Random(10)
    for F in (f13, f31):
        for _ in range(50):
            inv = gamma_invariants(F, random_triple(F, rng))
            lhs = F.mul(inv["gamma"], inv["gamma"])
            rhs = F.mul(F.mul(inv["X"], inv["Y"]), inv["Z"])
            assert lhs == rhs


def test_diagonal_triple_invariants_vanish(f13):
    p = proj_point(f13, 1, 4)
    inv = gamma_invariants(f13, PointTriple(p, p, p))
    assert inv["X"] == inv["Y"] == inv["Z"] == 0
    assert inv["gamma"] == 0


def test_abc_system_no_solution_off_diagonal(f13):
    rng = random.Random(11)
    checked = 0
    while checked < 50:
        t = random_triple(f13, rng)
        if t.is_diagonal():
            continue
        assert not abc_system_admits_solution(f13, t)
        checked += 1


def test_abc_system_diagonal(f13):
    p = proj_point(f13, 1, 2)
    assert abc_system_admits_solution(f13, PointTriple(p, p, p))


def test_predict_simple_quotient(f13):
    p, q = proj_point(f13, 1, 0), proj_point(f13, 0, 1)
    assert predict_simple_quotient(f13, PointTriple(p, p, p)) == {1}
    assert predict_simple_quotient(f13, PointTriple(p, p, q)) == {0, 3}


def test_diagonal_central_character_is_singular(f13):
    for p in all_proj_points(f13):
        ch = central_character_diagonal(f13, p)
        assert singular_locus_membership(f13, ch)


def test_distinct_diagonal_points_have_distinct_characters(f13):
    pts = all_proj_points(f13)
    chars = {central_character_diagonal(f13, p).coords() for p in pts}
    assert len(chars) == len(pts)
