import pytest

from cubiclifford.commgeo import central_point, enumerate_center_fiber
from cubiclifford.disc import (locus_profile, modified_gram_check,
                               sample_locus, sample_points, v_ell_membership)
from cubiclifford.errors import CriterionMismatch


@pytest.fixture(scope="module")
def smooth_profile(f13):
    return locus_profile(f13, enumerate_center_fiber(f13, 1, 0, 0, 1)[0])


@pytest.fixture(scope="module")
def cubic_profile(f13):
    return locus_profile(f13, central_point(f13, 1, 1, 1, 1, 0, 0))


def test_smooth_profile_numbers(smooth_profile):
    assert smooth_profile.irrep_dims == (3,)
    assert smooth_profile.sum_squares == 9
    assert smooth_profile.gram_rank == 9


def test_cubic_profile_numbers(cubic_profile):
    assert cubic_profile.irrep_dims == (1, 1, 1)
    assert cubic_profile.sum_squares == 3
    assert cubic_profile.gram_rank == 3


def test_membership_trichotomy_smooth(f13, smooth_profile):
    pt = smooth_profile.point
    for ell in range(1, 10):
        assert not v_ell_membership(f13, pt, ell, smooth_profile).member
    for ell in (10, 11, 12):
        assert v_ell_membership(f13, pt, ell, smooth_profile).member


def test_membership_trichotomy_cubic(f13, cubic_profile):
    pt = cubic_profile.point
    for ell in (1, 2, 3):
        assert not v_ell_membership(f13, pt, ell, cubic_profile).member
    for ell in (4, 6, 9, 12):
        assert v_ell_membership(f13, pt, ell, cubic_profile).member


def test_membership_rejects_bad_ell(f13, smooth_profile):
    with pytest.raises(ValueError):
        v_ell_membership(f13, smooth_profile.point, 0, smooth_profile)


def test_modified_gram_matches_rank(smooth_profile, cubic_profile):
    # witnesses exist exactly up to the Gram rank
    assert modified_gram_check(smooth_profile.algebra, 9)
    assert not modified_gram_check(smooth_profile.algebra, 10)
    assert modified_gram_check(cubic_profile.algebra, 3)
    assert not modified_gram_check(cubic_profile.algebra, 4)


def test_sample_points_strata(f13):
    strata = sample_points(f13, n_per_stratum=5, seed=0)
    assert len(strata["cubic"]) == 5
    assert len(strata["smooth"]) == 5
    assert len(strata["degenerate"]) == 5
    assert all(p.e == 0 and p.f == 0 for p in strata["cubic"])
    # the projective parametrization never yields the origin
    assert all(any(c != 0 for c in p.coords()) for p in strata["cubic"])


def test_sample_locus_report(f13):
    report = sample_locus(f13, ells=[3, 6, 12], n_per_stratum=3, seed=0)
    assert report[3]["cubic"]["members"] == 0
    assert report[3]["smooth"]["members"] == 0
    assert report[6]["cubic"]["members"] == 3
    assert report[6]["smooth"]["members"] == 0
    assert report[12]["cubic"]["members"] == 3
    assert report[12]["smooth"]["members"] == 3


def test_sample_locus_with_modified_gram(f13):
    report = sample_locus(f13, ells=[2, 5, 11], n_per_stratum=2, seed=0,
                          check_modified=True, trials=30)
    assert report[2]["smooth"]["members"] == 0
    assert report[5]["cubic"]["members"] == 2
    assert report[11]["smooth"]["members"] == 2


def test_degenerate_stratum_behaves_like_smooth(f13):
    strata = sample_points(f13, n_per_stratum=3, seed=1)
    for pt in strata["degenerate"]:
        prof = locus_profile(f13, pt)
        assert prof.sum_squares == prof.gram_rank


def test_criterion_mismatch_is_raised_on_inconsistent_profile(f13,
                                                             smooth_profile):
    from cubiclifford.disc import LocusProfile
    broken = LocusProfile(smooth_profile.point, smooth_profile.algebra,
                          (3,), 5, 9)
    with pytest.raises(CriterionMismatch):
        v_ell_membership(f13, broken.point, 7, broken)
