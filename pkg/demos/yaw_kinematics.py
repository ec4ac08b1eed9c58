#!/usr/bin/env python3
"""The semitrailer yaw machinery behind the articulated measures.

Shows the exponential decay of the articulation angle toward a straight
tractor heading (closed form vs fine RK4), and a steered lane-change path
from the non-holonomic stepper with the semitrailer tracking inside the
tractor's trace.
"""

import math

import numpy as np

from ttc2d import kinematics
from ttc2d.articulated import ArticulatedGeometry
from ttc2d.frames import VehicleGeometry

GEOM = ArticulatedGeometry(
    tractor=VehicleGeometry(6.2, 2.55),
    semitrailer=VehicleGeometry(13.6, 2.6),
    l_fa=4.7, l_ra=1.3, wheelbase_l0=3.8,
    joint_to_rear_axle_l1=8.1, rear_axle_to_joint_lb=0.6,
    front_axle_to_joint_la=3.2,
)


def rk4(psi1, psi0, u_over_l1, duration, dt=1e-3):
    for _ in range(int(round(duration / dt))):
        f = lambda p: -u_over_l1 * math.sin(p - psi0)
        k1 = f(psi1)
        k2 = f(psi1 + 0.5 * dt * k1)
        k3 = f(psi1 + 0.5 * dt * k2)
        k4 = f(psi1 + dt * k3)
        psi1 += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
    return psi1


def main():
    u, l1 = 9.0, GEOM.joint_to_rear_axle_l1
    offset0 = 0.35
    print("articulation decay toward a straight tractor (u = 9 m/s):")
    print("   t    closed form      RK4            error")
    for t in (0.5, 1.0, 2.0, 4.0, 8.0):
        closed = kinematics.semitrailer_yaw_constant_speed(offset0, 0.0, u, l1, t)
        ref = rk4(offset0, 0.0, u / l1, t)
        print(f"  {t:4.1f}  {closed:+.6f} rad  {ref:+.6f} rad  {abs(closed - ref):.2e}")

    print("\nsteered lane change through the stepper (dt = 10 ms):")
    state = kinematics.KinematicState(0.0, 0.0, 0.0, 0.0)
    dt, duration = 0.01, 12.0
    rows = []
    for i in range(int(duration / dt)):
        t = i * dt
        delta = 0.045 * math.sin(math.pi * t / 6.0) if t < 6.0 else 0.0
        state = kinematics.step_kinematic_model(state, 8.0, delta, GEOM, dt)
        if i % 200 == 0:
            rows.append((t, state))
    for t, s in rows:
        trailer = kinematics.semitrailer_rear_axle(s, GEOM)
        print(f"  t={t:5.1f}  rear axle=({s.x_b0:6.1f},{s.y_b0:5.2f})  "
              f"trailer axle=({trailer.x:6.1f},{trailer.y:5.2f})  "
              f"articulation={math.degrees(s.articulation):+5.2f} deg")
    drift = np.degrees(state.psi0)
    print(f"final tractor heading: {drift:+.2f} deg")


if __name__ == "__main__":
    main()
