import math

import numpy as np
import pytest

from ttc2d.frames import (
    BodyVelocity,
    Pose2D,
    VehicleGeometry,
    VehicleState,
)
from ttc2d.measures import (
    NO_COLLISION,
    Direction,
    RigidPair,
    TtcOutcome,
    ttc2d_baseline,
    ttc2d_v1,
    ttc_conventional,
)
from ttc2d.oracle import MotionModel, first_contact_time
from ttc2d.validation import random_rigid_pair


def make_pair(
    s_x, s_y, u_lead, u_follow,
    lead_psi=0.0, follow_psi=0.0, v_lead=0.0, v_follow=0.0,
    lead_geom=VehicleGeometry(16.5, 2.5), follower_geom=VehicleGeometry(4.6, 1.85),
):
    lead = VehicleState(Pose2D(s_x, s_y, lead_psi), BodyVelocity(u_lead, v_lead))
    follower = VehicleState(Pose2D(0.0, 0.0, follow_psi), BodyVelocity(u_follow, v_follow))
    return RigidPair(lead, lead_geom, follower, follower_geom)


class TestConventional:
    def test_direct_substitution(self):
        out = ttc_conventional(50.0, 20.0, 10.0, 10.0)
        assert out.time == pytest.approx(4.0)
        assert out.direction is Direction.LONGITUDINAL

    def test_not_closing_is_no_collision(self):
        assert not ttc_conventional(50.0, 10.0, 10.0, 10.0).collides
        assert not ttc_conventional(50.0, 8.0, 10.0, 10.0).collides

    def test_contact_limit(self):
        for eps in (1.0, 0.1, 0.001):
            out = ttc_conventional(16.5 + eps, 15.0, 10.0, 16.5)
            assert out.time == pytest.approx(eps / 5.0)

    def test_gap_already_closed_is_no_collision(self):
        out = ttc_conventional(10.0, 20.0, 10.0, 16.5)
        assert not out.collides
        assert out.direction is Direction.NONE

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            ttc_conventional(math.inf, 20.0, 10.0, 10.0)
        with pytest.raises(ValueError):
            ttc_conventional(50.0, 20.0, 10.0, -1.0)


class TestBaseline:
    def test_longitudinal_with_lateral_overlap(self):
        pair = make_pair(40.0, 0.5, 10.0, 20.0)
        out = ttc2d_baseline(pair)
        assert out.time == pytest.approx(2.35)
        assert out.direction is Direction.LONGITUDINAL

    def test_large_static_lateral_offset_is_no_collision(self):
        pair = make_pair(40.0, 6.0, 10.0, 20.0)
        out = ttc2d_baseline(pair)
        assert not out.collides
        assert out.direction is Direction.NONE

    def test_zero_relative_speed_is_no_collision(self):
        pair = make_pair(40.0, 0.0, 15.0, 15.0)
        assert not ttc2d_baseline(pair).collides

    def test_matches_oracle_on_random_colliding_configurations(self):
        rng = np.random.default_rng(11)
        checked = 0
        for _ in range(120):
            pair = random_rigid_pair(rng, aligned=True)
            out = ttc2d_baseline(pair)
            if not out.collides or out.time > 10.0:
                continue
            oracle = first_contact_time(
                MotionModel.rigid(pair.lead, pair.lead_geom, pair.follower, pair.follower_geom),
                horizon=12.0,
            )
            assert oracle.collides
            assert out.time == pytest.approx(oracle.time, abs=0.01)
            checked += 1
        assert checked >= 30


class TestVersion1:
    def test_reduces_to_baseline_when_aligned(self):
        rng = np.random.default_rng(5)
        for _ in range(300):
            pair = random_rigid_pair(rng, aligned=True)
            a = ttc2d_baseline(pair)
            b = ttc2d_v1(pair)
            assert a.time == b.time
            assert a.direction is b.direction

    def test_quarter_turn_lead_uses_swapped_extents(self):
        # Lead across the lane: its longitudinal extent is the half width,
        # the lateral one the full length.
        lead_geom = VehicleGeometry(16.5, 2.5)
        pair = make_pair(30.0, 0.0, 0.0, 10.0, lead_psi=math.pi / 2,
                         lead_geom=lead_geom)
        out = ttc2d_v1(pair)
        assert out.time == pytest.approx((30.0 - 1.25) / 10.0)
        oracle = first_contact_time(
            MotionModel.rigid(pair.lead, pair.lead_geom, pair.follower, pair.follower_geom),
            horizon=6.0,
        )
        assert oracle.time == pytest.approx(out.time, abs=0.005)

    def test_rotated_lead_matches_oracle(self):
        pair = make_pair(28.0, 1.0, 9.0, 17.0, lead_psi=-0.05,
                         lead_geom=VehicleGeometry(5.0, 1.9))
        out = ttc2d_v1(pair)
        oracle = first_contact_time(
            MotionModel.rigid(pair.lead, pair.lead_geom, pair.follower, pair.follower_geom),
            horizon=8.0,
        )
        assert out.collides and oracle.collides
        assert out.time == pytest.approx(oracle.time, abs=0.05)

    def test_zero_relative_speed_is_no_collision(self):
        pair = make_pair(25.0, 3.0, 12.0, 12.0, lead_psi=0.0)
        assert not ttc2d_v1(pair).collides

    def test_translation_invariance(self):
        pair = make_pair(32.0, 2.0, 9.0, 15.0, lead_psi=0.04)
        moved = RigidPair(
            VehicleState(
                Pose2D(pair.lead.pose.x + 210.0, pair.lead.pose.y - 75.0, pair.lead.pose.psi),
                pair.lead.vel, pair.lead.acc,
            ),
            pair.lead_geom,
            VehicleState(
                Pose2D(210.0, -75.0, 0.0), pair.follower.vel, pair.follower.acc
            ),
            pair.follower_geom,
        )
        assert ttc2d_v1(pair).time == pytest.approx(ttc2d_v1(moved).time, abs=1e-12)

    def test_agrees_with_conventional_when_lane_aligned(self):
        pair = make_pair(40.0, 0.0, 10.0, 20.0)
        v1 = ttc2d_v1(pair)
        conv = ttc_conventional(40.0, 20.0, 10.0, pair.lead_geom.length)
        assert v1.direction is Direction.LONGITUDINAL
        assert v1.time == pytest.approx(conv.time)


class TestOutcomeInvariants:
    def test_time_never_negative(self):
        rng = np.random.default_rng(21)
        for _ in range(200):
            pair = random_rigid_pair(rng)
            out = ttc2d_v1(pair)
            assert out.time >= 0.0
            assert (out.direction is Direction.NONE) == math.isinf(out.time)

    def test_outcome_validation(self):
        with pytest.raises(ValueError):
            TtcOutcome(-1.0, Direction.LATERAL)
        with pytest.raises(ValueError):
            TtcOutcome(NO_COLLISION, Direction.LATERAL)
        with pytest.raises(ValueError):
            TtcOutcome(2.0, Direction.NONE)
