import math

import numpy as np
import pytest

from _oracles import rk4_yaw_constant_speed, rk4_yaw_variable_speed
from ttc2d.kinematics import (
    JackknifeError,
    KinematicState,
    joint_position,
    semitrailer_rear_axle,
    semitrailer_yaw_constant_speed,
    semitrailer_yaw_rate,
    semitrailer_yaw_variable_speed,
    step_kinematic_model,
    tractor_yaw_rate,
)


class TestTractorYawRate:
    def test_straight_driving(self):
        assert tractor_yaw_rate(15.0, 0.0, 4.0) == 0.0

    def test_direct_substitution(self):
        assert tractor_yaw_rate(10.0, 0.1, 4.0) == pytest.approx(10.0 * math.tan(0.1) / 4.0)
        assert tractor_yaw_rate(10.0, 0.1, 4.0) == pytest.approx(0.25084, abs=1e-5)

    def test_odd_in_steering(self):
        assert tractor_yaw_rate(12.0, -0.07, 3.8) == -tractor_yaw_rate(12.0, 0.07, 3.8)

    def test_steering_domain(self):
        with pytest.raises(ValueError):
            tractor_yaw_rate(10.0, math.pi / 2, 4.0)
        with pytest.raises(ValueError):
            tractor_yaw_rate(10.0, 0.1, 0.0)


class TestSemitrailerYawRate:
    def test_aligned_straight(self, truck_geom):
        assert semitrailer_yaw_rate(10.0, 0.0, 0.2, 0.2, truck_geom) == 0.0

    def test_direct_substitution(self, truck_geom):
        # Straight tractor, articulated by 0.2 rad.
        got = semitrailer_yaw_rate(10.0, 0.0, 0.0, 0.2, truck_geom)
        assert got == pytest.approx(-10.0 * math.sin(0.2) / truck_geom.joint_to_rear_axle_l1)

    def test_matches_scalar_reevaluation(self, truck_geom):
        u, delta, psi0, psi1 = 12.5, 0.04, 0.1, 0.17
        got = semitrailer_yaw_rate(u, delta, psi0, psi1, truck_geom)
        l0 = truck_geom.wheelbase_l0
        lb = truck_geom.rear_axle_to_joint_lb
        l1 = truck_geom.joint_to_rear_axle_l1
        expected = (u * math.tan(delta) / l0) * (lb / l1) * math.cos(psi1 - psi0) - (
            u / l1
        ) * math.sin(psi1 - psi0)
        assert got == pytest.approx(expected, abs=1e-12)


class TestYawClosedForms:
    def test_zero_offset_is_fixed_point(self):
        for elapsed in (0.0, 0.5, 3.0, 50.0):
            assert semitrailer_yaw_constant_speed(0.3, 0.3, 12.0, 8.0, elapsed) == 0.3

    def test_documented_value(self):
        # u/l1 = 1, initial offset 0.2 rad, one second elapsed.
        got = semitrailer_yaw_constant_speed(0.2, 0.0, 1.0, 1.0, 1.0)
        assert got == pytest.approx(2.0 * math.atan(math.tan(0.1) * math.exp(-1.0)), abs=1e-12)
        assert got == pytest.approx(0.073786, abs=1e-5)
        ref = rk4_yaw_constant_speed(0.2, 0.0, 1.0, 1.0, dt=1e-4)
        assert got == pytest.approx(ref, abs=1e-9)

    def test_matches_rk4_over_long_horizon(self):
        for offset in (-0.45, -0.2, 0.1, 0.38):
            got = semitrailer_yaw_constant_speed(0.1 + offset, 0.1, 9.0, 8.1, 20.0)
            ref = rk4_yaw_constant_speed(0.1 + offset, 0.1, 9.0 / 8.1, 20.0)
            assert got == pytest.approx(ref, abs=1e-6)

    def test_long_elapsed_limit_monotone(self):
        times = np.linspace(0.0, 30.0, 40)
        psi1 = semitrailer_yaw_constant_speed(0.4, 0.0, 10.0, 8.0, times)
        assert np.all(np.diff(psi1) < 0)
        assert psi1[-1] == pytest.approx(0.0, abs=1e-12)

    def test_offset_never_changes_sign(self):
        times = np.linspace(0.0, 25.0, 200)
        for offset in (-0.5, -0.01, 0.02, 0.5):
            psi1 = semitrailer_yaw_constant_speed(offset, 0.0, 7.0, 8.0, times)
            assert np.all(np.sign(psi1) == np.sign(offset))

    def test_variable_speed_zero_displacement(self):
        assert semitrailer_yaw_variable_speed(0.25, 0.0, 5.0, 5.0, 0.0, 8.0) == pytest.approx(0.25)

    def test_variable_speed_reduces_to_constant_speed(self):
        # psi0 = 0: the displacement exponent equals u*t/l1.
        u, t, l1 = 11.0, 2.5, 8.0
        a = semitrailer_yaw_variable_speed(0.3, 0.0, 0.0, u * t, 0.0, l1)
        b = semitrailer_yaw_constant_speed(0.3, 0.0, u, l1, t)
        assert a == pytest.approx(b, abs=1e-12)

    def test_variable_speed_matches_rk4_for_accelerating_profile(self):
        u0, accel, l1, psi0 = 6.0, 0.8, 8.1, 0.05
        duration = 6.0
        displacement = (u0 * duration + 0.5 * accel * duration**2) * math.cos(psi0)
        got = semitrailer_yaw_variable_speed(
            psi0 + 0.35, psi0, 100.0, 100.0 + displacement, psi0, l1
        )
        ref = rk4_yaw_variable_speed(
            psi0 + 0.35, psi0, lambda t: u0 + accel * t, l1, duration
        )
        assert got == pytest.approx(ref, abs=1e-3)

    def test_variable_speed_singularity_guard(self):
        with pytest.raises(ValueError):
            semitrailer_yaw_variable_speed(0.2, 0.0, 0.0, 1.0, math.pi / 2, 8.0)


class TestStepper:
    def test_straight_motion(self, truck_geom):
        state = KinematicState(0.0, 0.0, 0.0, 0.0)
        for _ in range(100):
            state = step_kinematic_model(state, 10.0, 0.0, truck_geom, 0.01)
        assert state.x_b0 == pytest.approx(10.0)
        assert state.y_b0 == pytest.approx(0.0)
        assert state.psi0 == 0.0
        assert state.psi1 == 0.0

    def test_path_curvature_matches_steering(self, truck_geom):
        delta, u, dt = 0.05, 8.0, 0.002
        state = KinematicState(0.0, 0.0, 0.0, 0.0)
        xs, ys = [], []
        for _ in range(4000):
            state = step_kinematic_model(state, u, delta, truck_geom, dt)
            xs.append(state.x_b0)
            ys.append(state.y_b0)
        # Least-squares circle fit through the rear-axle path.
        x, y = np.asarray(xs), np.asarray(ys)
        a = np.column_stack([2 * x, 2 * y, np.ones_like(x)])
        sol, *_ = np.linalg.lstsq(a, x * x + y * y, rcond=None)
        radius = math.sqrt(sol[2] + sol[0] ** 2 + sol[1] ** 2)
        expected = truck_geom.wheelbase_l0 / math.tan(delta)
        assert radius == pytest.approx(expected, rel=0.01)

    def test_joint_distances_are_rigid(self, truck_geom):
        state = KinematicState(0.0, 0.0, 0.1, 0.0)
        for _ in range(500):
            state = step_kinematic_model(state, 9.0, 0.03, truck_geom, 0.01)
            joint = joint_position(state, truck_geom)
            rear = semitrailer_rear_axle(state, truck_geom)
            d_joint = math.hypot(joint.x - state.x_b0, joint.y - state.y_b0)
            d_trailer = math.hypot(joint.x - rear.x, joint.y - rear.y)
            assert d_joint == pytest.approx(truck_geom.rear_axle_to_joint_lb, abs=1e-9)
            assert d_trailer == pytest.approx(truck_geom.joint_to_rear_axle_l1, abs=1e-9)

    def test_nonholonomic_residuals_first_order(self, truck_geom):
        def residuals(dt):
            n = int(4.0 / dt)
            state = KinematicState(0.0, 0.0, 0.0, 0.0)
            states = [state]
            for i in range(n):
                delta = 0.06 * math.sin(0.8 * i * dt)
                state = step_kinematic_model(state, 10.0, delta, truck_geom, dt)
                states.append(state)
            xb = np.array([s.x_b0 for s in states])
            yb = np.array([s.y_b0 for s in states])
            psi0 = np.array([s.psi0 for s in states])
            xd = np.gradient(xb, dt)
            yd = np.gradient(yb, dt)
            res = xd * np.sin(psi0) - yd * np.cos(psi0)
            return np.max(np.abs(res[2:-2]))

        coarse = residuals(0.01)
        fine = residuals(0.005)
        assert coarse < 0.01
        assert fine < coarse

    def test_jackknife_raises(self, truck_geom):
        # Hard steering pulls the tractor yaw away from an already extreme
        # articulation angle.
        state = KinematicState(0.0, 0.0, 0.0, -1.5)
        with pytest.raises(JackknifeError):
            for _ in range(200):
                state = step_kinematic_model(state, 5.0, 1.4, truck_geom, 0.05)
