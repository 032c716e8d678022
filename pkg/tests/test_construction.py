from fractions import Fraction as F

import pytest

from omstrata import (
    DegenerateStep,
    PlanePoint,
    Seed,
    SeedRejected,
    Vector3,
    build,
    certificate,
    collinear,
    cross_ratio_ledger,
    default_seed,
    delta_arrangement,
    extend,
    initial_family,
    limit_arrangement,
    om_equal,
    om_of,
    scale_degeneration,
    validate_seed,
    weak_map,
)
from omstrata.labels import PERSISTENT, indexed


def seed_with(**overrides) -> Seed:
    base = default_seed().points()
    base.update(overrides)
    return Seed(**base)


# nu placed so that line(nu, a) crosses the baseline at x = 2, inside the
# interval the c_i sweep through: the late levels end up on the other side
# and the limit strata disagree.
WALL_SEED = seed_with(nu=PlanePoint(3, 2))


class TestSeedValidation:
    def test_default_seed_is_valid(self):
        verdict = validate_seed(default_seed())
        assert verdict
        assert verdict.violated is None

    def test_omega_on_baseline(self):
        verdict = validate_seed(seed_with(omega=PlanePoint(2, 0)))
        assert not verdict
        assert verdict.violated == "apex"

    def test_b1_at_beta(self):
        verdict = validate_seed(seed_with(b1=PlanePoint(6, 0)))
        assert not verdict
        assert verdict.violated == "b1_segment"

    def test_gamma_off_baseline(self):
        verdict = validate_seed(seed_with(gamma=PlanePoint(4, 1)))
        assert not verdict
        assert verdict.violated == "baseline"

    def test_gamma_outside_segment(self):
        verdict = validate_seed(seed_with(gamma=PlanePoint(7, 0)))
        assert not verdict
        assert verdict.violated == "baseline"

    def test_a_on_omega_gamma_line(self):
        verdict = validate_seed(seed_with(a=PlanePoint(F(7, 2), F(5, 2))))
        assert not verdict
        assert verdict.violated == "anchor"

    def test_nu_on_a_line(self):
        # (3/5, 1) rides the alpha-omega line
        verdict = validate_seed(seed_with(nu=PlanePoint(F(3, 5), 1)))
        assert not verdict
        assert verdict.violated == "nu_generic"


class TestBuild:
    def test_depth_zero_is_the_seed(self):
        family = build(default_seed(), 0)
        assert family.depth == 0
        assert len(family.points) == 7

    def test_first_level_fixtures(self):
        # frozen from an independent by-hand solve of the three 2x2 systems
        family = build(default_seed(), 1)
        assert family.point("d1") == PlanePoint(F(18, 5), 2)
        assert family.point("b2") == PlanePoint(F(528, 125), F(74, 25))
        assert family.point("c1") == PlanePoint(F(23, 10), 0)

    def test_c1_inside_alpha_gamma(self):
        family = build(default_seed(), 1)
        c1 = family.point("c1")
        assert 0 < c1.x < 4 and c1.y == 0

    def test_incidences_hold_at_every_level(self):
        family = build(default_seed(), 6)
        seed = family.seed
        for n in range(1, 7):
            d_n = family.point(indexed("d", n))
            b_n = family.point(indexed("b", n))
            b_next = family.point(indexed("b", n + 1))
            c_n = family.point(indexed("c", n))
            assert collinear(seed.omega, seed.gamma, d_n)
            assert collinear(seed.alpha, b_n, d_n)
            assert collinear(seed.omega, seed.beta, b_next)
            assert collinear(seed.a, d_n, b_next)
            assert collinear(seed.alpha, seed.beta, c_n)
            assert collinear(seed.a, b_next, c_n)

    def test_monotone_containment(self):
        deep = build(default_seed(), 5)
        shallow = build(default_seed(), 4)
        assert deep.level(4) == shallow

    def test_twenty_distinct_c_points(self):
        family = build(default_seed(), 20)
        points = [family.point(indexed("c", i)) for i in range(1, 21)]
        assert len(set(points)) == 20

    def test_invalid_seed_rejected(self):
        with pytest.raises(SeedRejected) as exc:
            build(seed_with(omega=PlanePoint(2, 0)), 3)
        assert exc.value.check == "apex"

    def test_degenerate_step(self):
        # a placed exactly at the first intersection point d1: the second
        # line of level 1 has no two distinct defining points
        seed = seed_with(a=PlanePoint(F(18, 5), 2))
        family = initial_family(seed)
        with pytest.raises(DegenerateStep) as exc:
            extend(family)
        assert exc.value.step == 1

    def test_parallel_step(self):
        # alpha-b1 parallel to omega-gamma: level 1 cannot start
        seed = seed_with(b1=PlanePoint(-1, 5))
        with pytest.raises(DegenerateStep):
            extend(initial_family(seed))


class TestCrossRatioLedger:
    def test_first_values(self):
        # frozen from the independent recursion oracle
        family = build(default_seed(), 3)
        ledger = cross_ratio_ledger(family)
        assert ledger[0] == (1, F(74, 51))
        assert ledger[1] == (2, F(2600, 1887))
        assert ledger[2] == (3, F(88403, 66300))

    def test_depth_twenty_all_defined_and_distinct(self):
        family = build(default_seed(), 20)
        ledger = cross_ratio_ledger(family)
        assert len(ledger) == 20
        assert len({value for _, value in ledger}) == 20


class TestDeltaArrangement:
    def test_delta_replaces_c_i(self):
        family = build(default_seed(), 2)
        marked = delta_arrangement(family, 1)
        assert "delta" in marked.labels
        assert "c1" not in marked.labels
        assert marked.vector("delta") == Vector3(F(23, 10), 0, 1)

    def test_ground_set_in_global_order(self):
        family = build(default_seed(), 2)
        marked = delta_arrangement(family, 2)
        assert marked.labels == (
            "alpha", "beta", "gamma", "omega", "nu", "a", "delta",
            "b1", "c1", "d1", "b2", "d2", "b3",
        )

    def test_delta_collinear_with_baseline(self):
        family = build(default_seed(), 4)
        from omstrata import perspective_normalize
        for i in range(1, 5):
            marked = delta_arrangement(family, i)
            delta = perspective_normalize(marked.vector("delta"))
            assert collinear(family.seed.alpha, delta, family.seed.beta)

    def test_index_out_of_range(self):
        family = build(default_seed(), 2)
        with pytest.raises(IndexError):
            delta_arrangement(family, 3)
        with pytest.raises(IndexError):
            delta_arrangement(family, 0)

    def test_levels_have_distinct_oriented_matroids(self):
        family = build(default_seed(), 4)
        marked = {i: delta_arrangement(family, i) for i in range(1, 5)}
        for i in range(1, 5):
            for j in range(i + 1, 5):
                common = set(marked[i].labels) & set(marked[j].labels)
                m_i = om_of(marked[i].restrict(common))
                m_j = om_of(marked[j].restrict(common))
                assert not om_equal(m_i, m_j)


class TestDegenerations:
    def test_scale_one_is_identity(self):
        family = build(default_seed(), 2)
        marked = delta_arrangement(family, 1)
        assert scale_degeneration(marked, 1) == marked

    def test_persistent_labels_keep_height_one(self):
        family = build(default_seed(), 2)
        marked = delta_arrangement(family, 2)
        scaled = scale_degeneration(marked, 8)
        for label, vector in scaled.elements:
            if label in PERSISTENT:
                assert vector == marked.vector(label)
            else:
                assert vector == marked.vector(label).scaled(F(1, 8))

    def test_oriented_matroid_constant_along_family(self):
        family = build(default_seed(), 3)
        for i in (1, 3):
            marked = delta_arrangement(family, i)
            reference = om_of(marked)
            for n in (2, 5, 1024):
                assert om_equal(om_of(scale_degeneration(marked, n)), reference)

    def test_limit_zeroes_exactly_the_transient_labels(self):
        family = build(default_seed(), 3)
        marked = delta_arrangement(family, 3)
        limit = limit_arrangement(marked)
        for label, vector in limit.elements:
            if label in PERSISTENT:
                assert vector == marked.vector(label)
            else:
                assert vector.is_zero()

    def test_limit_loops(self):
        family = build(default_seed(), 3)
        marked = delta_arrangement(family, 2)
        limit_om = om_of(limit_arrangement(marked))
        assert limit_om.loops == frozenset(set(marked.labels) - PERSISTENT)

    def test_limits_share_one_oriented_matroid(self):
        family = build(default_seed(), 4)
        shared = [
            om_of(limit_arrangement(delta_arrangement(family, i))).delete_loops()
            for i in range(1, 5)
        ]
        for other in shared[1:]:
            assert om_equal(shared[0], other)

    def test_weak_map_onto_limit(self):
        family = build(default_seed(), 3)
        for i in range(1, 4):
            marked = delta_arrangement(family, i)
            assert weak_map(om_of(marked), om_of(limit_arrangement(marked)))

    def test_connecting_automorphism_is_identity(self):
        # members of the scaled family share the persistent points, so the
        # affine map matching (omega, a, beta) across members is the
        # identity and fixes alpha and b1
        from omstrata import AffineMap2, affine_from_correspondence
        seed = default_seed()
        triple = (seed.omega, seed.a, seed.beta)
        mapping = affine_from_correspondence(triple, triple)
        assert mapping == AffineMap2.identity()
        assert mapping(seed.alpha) == seed.alpha
        assert mapping(seed.b1) == seed.b1


class TestCertificate:
    def test_small_depth_passes(self):
        report = certificate(default_seed(), 3, [1, 2, 7])
        assert report.passed
        assert report.depth == 3
        assert [rec.i for rec in report.records] == [1, 2, 3]
        assert all(ok for rec in report.records for _, ok in rec.degeneration_ok)
        assert len({rec.mi_fingerprint for rec in report.records}) == 3
        assert len({rec.limit_fingerprint for rec in report.records}) == 1
        assert all(rec.limit_cr == rec.cr for rec in report.records)

    def test_shared_limit_fingerprint_fixture(self):
        # frozen after cross-checking against the functional-sampling oracle
        report = certificate(default_seed(), 2, [1, 2])
        assert report.limit_fingerprint == (
            "11c7518ee9a90af6a9bc130831fc765ec09e543ae1a72978699c3761e3168c1c"
        )

    def test_baseline_violation_rejected(self):
        with pytest.raises(SeedRejected) as exc:
            certificate(seed_with(gamma=PlanePoint(4, 1)), 3)
        assert exc.value.check == "baseline"

    def test_collapsing_construction_rejected_in_ledger(self):
        # a on line(alpha, b1) makes c1 collide with alpha, so the
        # cross-ratio ledger cannot be computed
        seed = seed_with(a=PlanePoint(F(-9, 10), F(-1, 2)))
        assert validate_seed(seed)
        with pytest.raises(SeedRejected) as exc:
            certificate(seed, 2)
        assert exc.value.check == "cross_ratio_ledger"
        assert "DegeneratePoints" in str(exc.value)

    def test_wall_seed_fails_limits_equal(self):
        assert validate_seed(WALL_SEED)
        report = certificate(WALL_SEED, 5, [1, 2])
        assert not report.passed
        assert report.checks.c_distinct and report.checks.cr_distinct
        assert report.checks.stratum_constancy
        assert not report.checks.limits_equal
        assert not report.checks.separation
        assert len({rec.limit_fingerprint for rec in report.records}) == 2

    def test_deterministic_reports(self):
        first = certificate(default_seed(), 3, [1, 4])
        second = certificate(default_seed(), 3, [1, 4])
        assert first == second
