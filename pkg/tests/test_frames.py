import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import matvec2, rotation_entries
from ttc2d.frames import (
    BodyAcceleration,
    BodyVelocity,
    Pose2D,
    RotationMatrix2,
    VehicleGeometry,
    VehicleState,
    project_extent,
    relative_kinematics,
    relative_offset,
    relative_rotation,
    transform_acceleration,
    transform_velocity,
    wrap_angle,
)

angles = st.floats(-10.0, 10.0, allow_nan=False)


def entries(rot):
    return (rot.r11, rot.r12, rot.r21, rot.r22)


def test_relative_rotation_zero_angle_is_identity():
    rot = relative_rotation(0.3, 0.3)
    assert entries(rot) == (1.0, -0.0, 0.0, 1.0)


def test_relative_rotation_quarter_turn():
    rot = relative_rotation(math.pi / 2, 0.0)
    assert rot.r11 == pytest.approx(0.0, abs=1e-15)
    assert rot.r12 == pytest.approx(-1.0)
    assert rot.r21 == pytest.approx(1.0)
    assert rot.r22 == pytest.approx(0.0, abs=1e-15)


def test_relative_rotation_matches_independent_trig():
    rot = relative_rotation(0.1, -0.2)
    ref = rotation_entries(0.3)
    assert rot.r11 == pytest.approx(ref[0][0], abs=1e-15)
    assert rot.r12 == pytest.approx(ref[0][1], abs=1e-15)
    # R * R^T = I to 1e-12
    assert rot.r11 * rot.r11 + rot.r12 * rot.r12 == pytest.approx(1.0, abs=1e-12)
    assert rot.r11 * rot.r21 + rot.r12 * rot.r22 == pytest.approx(0.0, abs=1e-12)


def test_relative_rotation_rejects_non_finite():
    with pytest.raises(ValueError):
        relative_rotation(math.nan, 0.0)


@given(angles, angles)
@settings(max_examples=200)
def test_rotation_is_orthonormal_for_all_angles(psi_lead, psi_follow):
    rot = relative_rotation(psi_lead, psi_follow)
    det = rot.r11 * rot.r22 - rot.r12 * rot.r21
    assert abs(det - 1.0) <= 1e-12
    assert abs(rot.r11 ** 2 + rot.r12 ** 2 - 1.0) <= 1e-12
    assert abs(rot.r21 ** 2 + rot.r22 ** 2 - 1.0) <= 1e-12


def test_project_extent_identity():
    rot = RotationMatrix2.from_angle(0.0)
    assert project_extent(VehicleGeometry(16.5, 2.5), rot) == (16.5, 1.25)


def test_project_extent_quarter_turn_swaps():
    rot = RotationMatrix2.from_angle(math.pi / 2)
    c_x, c_y = project_extent(VehicleGeometry(16.5, 2.5), rot)
    assert c_x == pytest.approx(-1.25)
    assert c_y == pytest.approx(16.5)


def test_project_extent_matches_scalar_product():
    rot = RotationMatrix2.from_angle(0.2)
    expected = matvec2(rotation_entries(0.2), (10.0, 1.0))
    got = project_extent(VehicleGeometry(10.0, 2.0), rot)
    assert got[0] == pytest.approx(expected[0], abs=1e-12)
    assert got[1] == pytest.approx(expected[1], abs=1e-12)


def test_transform_velocity_identity_and_half_turn():
    assert transform_velocity(BodyVelocity(20.0, 0.0), RotationMatrix2.from_angle(0.0)) == (20.0, 0.0)
    v_x, v_y = transform_velocity(BodyVelocity(20.0, 0.0), RotationMatrix2.from_angle(math.pi))
    assert v_x == pytest.approx(-20.0)
    assert v_y == pytest.approx(0.0, abs=1e-14)


def test_transform_velocity_matches_scalar_product():
    got = transform_velocity(BodyVelocity(15.0, 1.0), RotationMatrix2.from_angle(0.3))
    expected = matvec2(rotation_entries(0.3), (15.0, 1.0))
    assert got[0] == pytest.approx(expected[0], abs=1e-12)
    assert got[1] == pytest.approx(expected[1], abs=1e-12)


@given(angles, st.floats(-30, 30), st.floats(-5, 5), st.floats(-4, 4))
@settings(max_examples=150)
def test_projection_and_velocity_transforms_are_linear(angle, u, v, k):
    rot = RotationMatrix2.from_angle(angle)
    base = transform_velocity(BodyVelocity(u, v), rot)
    scaled = transform_velocity(BodyVelocity(k * u, k * v), rot)
    assert scaled[0] == pytest.approx(k * base[0], abs=1e-9)
    assert scaled[1] == pytest.approx(k * base[1], abs=1e-9)


def test_transform_acceleration_no_coriolis_identity():
    got = transform_acceleration(
        BodyAcceleration(1.0, 0.0, 0.0), BodyVelocity(20.0, 0.0), RotationMatrix2.from_angle(0.0)
    )
    assert got == (1.0, 0.0)


def test_transform_acceleration_pure_coriolis():
    got = transform_acceleration(
        BodyAcceleration(0.0, 0.0, 0.1), BodyVelocity(20.0, 0.0), RotationMatrix2.from_angle(0.0)
    )
    assert got[0] == pytest.approx(0.0)
    assert got[1] == pytest.approx(2.0)


def test_transform_acceleration_matches_scalar_evaluation():
    acc = BodyAcceleration(0.7, -0.3, 0.25)
    vel = BodyVelocity(13.0, 0.8)
    rot = RotationMatrix2.from_angle(-0.4)
    expected = matvec2(
        rotation_entries(-0.4),
        (acc.ax - vel.v * acc.yaw_rate, acc.ay + vel.u * acc.yaw_rate),
    )
    got = transform_acceleration(acc, vel, rot)
    assert got[0] == pytest.approx(expected[0], abs=1e-12)
    assert got[1] == pytest.approx(expected[1], abs=1e-12)


@given(angles, st.floats(-20, 20), st.floats(-3, 3), st.floats(-2, 2), st.floats(-1, 1))
@settings(max_examples=150)
def test_zero_yaw_rate_acceleration_equals_velocity_transform(angle, u, v, ax, ay):
    rot = RotationMatrix2.from_angle(angle)
    got = transform_acceleration(BodyAcceleration(ax, ay, 0.0), BodyVelocity(u, v), rot)
    ref = transform_velocity(BodyVelocity(ax, ay), rot)
    assert got[0] == pytest.approx(ref[0], abs=1e-12)
    assert got[1] == pytest.approx(ref[1], abs=1e-12)


def test_relative_offset_examples():
    assert relative_offset(Pose2D(1.0, 2.0, 0.5), Pose2D(1.0, 2.0, 0.0)) == (0.0, 0.0)
    assert relative_offset(Pose2D(30.0, 3.5, 0.0), Pose2D(0.0, 0.0, 0.0)) == (30.0, 3.5)
    s_x, s_y = relative_offset(Pose2D(0.0, 10.0, 0.0), Pose2D(0.0, 0.0, math.pi / 2))
    assert s_x == pytest.approx(10.0)
    assert s_y == pytest.approx(0.0, abs=1e-12)


@given(
    st.floats(-40, 40), st.floats(-40, 40), angles,
    st.floats(-40, 40), st.floats(-40, 40), angles,
    st.floats(-50, 50), st.floats(-50, 50), angles,
)
@settings(max_examples=150)
def test_relative_offset_invariant_under_rigid_motion(
    lx, ly, lpsi, fx, fy, fpsi, dx, dy, dpsi
):
    lead, follow = Pose2D(lx, ly, lpsi), Pose2D(fx, fy, fpsi)
    base = relative_offset(lead, follow)
    c, s = math.cos(dpsi), math.sin(dpsi)

    def moved(p):
        return Pose2D(c * p.x - s * p.y + dx, s * p.x + c * p.y + dy, p.psi + dpsi)

    shifted = relative_offset(moved(lead), moved(follow))
    assert shifted[0] == pytest.approx(base[0], abs=1e-9)
    assert shifted[1] == pytest.approx(base[1], abs=1e-9)


@given(angles)
@settings(max_examples=300)
def test_pose_normalizes_yaw(angle):
    psi = Pose2D(0.0, 0.0, angle).psi
    assert -math.pi < psi <= math.pi
    assert math.isclose(math.sin(psi), math.sin(angle), abs_tol=1e-12)
    assert math.isclose(math.cos(psi), math.cos(angle), abs_tol=1e-12)


def test_wrap_angle_boundary():
    assert wrap_angle(math.pi) == math.pi
    assert wrap_angle(-math.pi) == math.pi


def test_geometry_validation():
    with pytest.raises(ValueError):
        VehicleGeometry(0.0, 2.0)
    with pytest.raises(ValueError):
        VehicleGeometry(4.0, -1.0)


def test_relative_kinematics_assembles_consistent_components():
    lead = VehicleState(
        Pose2D(20.0, 4.0, 0.25), BodyVelocity(10.0, 0.4), BodyAcceleration(0.3, 0.1, 0.05)
    )
    follower = VehicleState(
        Pose2D(2.0, 1.0, 0.05), BodyVelocity(16.0, -0.2), BodyAcceleration(0.8, 0.0, 0.0)
    )
    geom = VehicleGeometry(12.0, 2.5)
    kin = relative_kinematics(lead, geom, follower)
    rot = relative_rotation(lead.pose.psi, follower.pose.psi)
    assert (kin.s_x, kin.s_y) == relative_offset(lead.pose, follower.pose)
    v0 = transform_velocity(lead.vel, rot)
    assert kin.dv_x == follower.vel.u - v0[0]
    assert kin.dv_y == follower.vel.v - v0[1]
    assert (kin.c_x, kin.c_y) == project_extent(geom, rot)
