import pytest

from ttc2d.articulated import ArticulatedGeometry, ArticulatedState
from ttc2d.frames import (
    BodyAcceleration,
    BodyVelocity,
    Pose2D,
    VehicleGeometry,
    VehicleState,
)


@pytest.fixture
def truck_geom():
    return ArticulatedGeometry(
        tractor=VehicleGeometry(6.2, 2.55),
        semitrailer=VehicleGeometry(13.6, 2.6),
        l_fa=4.7,
        l_ra=1.3,
        wheelbase_l0=3.8,
        joint_to_rear_axle_l1=8.1,
        rear_axle_to_joint_lb=0.6,
        front_axle_to_joint_la=3.2,
    )


@pytest.fixture
def car_geom():
    return VehicleGeometry(4.6, 1.85)


@pytest.fixture
def cutin_state(truck_geom):
    """Truck ahead in the adjacent lane, small articulation, car closing."""
    tractor = VehicleState(
        Pose2D(35.0, 3.0, -0.06), BodyVelocity(8.0, 0.0), BodyAcceleration()
    )
    art = ArticulatedState(tractor, psi1=-0.03, delta=0.0, u_b0=8.0)
    car = VehicleState(Pose2D(0.0, 0.0, 0.0), BodyVelocity(14.0, 0.0), BodyAcceleration())
    return art, car
