#!/usr/bin/env python3
"""Tour of the rigid-pair measures.

Three situations show where each formulation starts to differ: an in-lane
rear-end approach (all agree), an adjacent-lane approach with no lateral
motion (the 2-D gates suppress the false alarm), and a rotated lead vehicle
(only the orientation-aware variant sees the projected footprint).
"""

import math

from ttc2d import (
    BodyVelocity,
    MotionModel,
    Pose2D,
    RigidPair,
    VehicleGeometry,
    VehicleState,
    first_contact_time,
    ttc2d_baseline,
    ttc2d_v1,
    ttc_conventional,
)

CAR = VehicleGeometry(4.6, 1.85)
TRUCK = VehicleGeometry(16.5, 2.5)


def show(title, pair, gap_lon):
    conv = ttc_conventional(gap_lon, pair.follower.vel.u, pair.lead.vel.u, pair.lead_geom.length)
    base = ttc2d_baseline(pair)
    v1 = ttc2d_v1(pair)
    oracle = first_contact_time(
        MotionModel.rigid(pair.lead, pair.lead_geom, pair.follower, pair.follower_geom),
        horizon=15.0,
    )
    fmt = lambda o: f"{o.time:.3f} s ({o.direction.value})" if o.collides else "no collision"
    print(f"\n{title}")
    print(f"  conventional : {fmt(conv)}")
    print(f"  baseline 2-D : {fmt(base)}")
    print(f"  version 1    : {fmt(v1)}")
    print(f"  oracle       : {fmt(oracle)}")


def main():
    follower = VehicleState(Pose2D(0.0, 0.0, 0.0), BodyVelocity(20.0))

    lead = VehicleState(Pose2D(40.0, 0.0, 0.0), BodyVelocity(10.0))
    show("in-lane rear-end approach", RigidPair(lead, TRUCK, follower, CAR), 40.0)

    lead = VehicleState(Pose2D(40.0, 3.5, 0.0), BodyVelocity(10.0))
    show("adjacent lane, no lateral motion (conventional TTC false alarm)",
         RigidPair(lead, TRUCK, follower, CAR), 40.0)

    lead = VehicleState(Pose2D(40.0, 3.5, -0.08), BodyVelocity(10.0))
    show("lead merging toward our lane at 4.6 degrees",
         RigidPair(lead, TRUCK, follower, CAR), 40.0)

    lead = VehicleState(Pose2D(30.0, 0.0, math.pi / 2), BodyVelocity(0.0))
    show("stationary lead across the lane (footprint projections swap)",
         RigidPair(lead, TRUCK, follower, CAR), 30.0)


if __name__ == "__main__":
    main()
