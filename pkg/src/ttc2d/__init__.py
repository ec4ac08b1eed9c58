"""Two-dimensional time-to-collision measures for rigid and articulated vehicles.

The package provides the conventional longitudinal TTC, an aligned-frame 2-D
baseline, an orientation-aware rigid-pair measure, two articulated
(tractor-semitrailer) variants under constant-speed and constant-acceleration
assumptions, an independent brute-force collision oracle, the underlying
non-holonomic yaw kinematics, and a calibrated cut-in scenario simulator.
"""

from .articulated import (
    ArticulatedGeometry,
    ArticulatedState,
    SolverConfig,
    conventional_articulated,
    guo2d_articulated,
    quadratic_contact_time,
    semitrailer_offset,
    ttc2d_v2,
    ttc2d_v3,
)
from .frames import (
    BodyAcceleration,
    BodyVelocity,
    Pose2D,
    RelativeKinematics,
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
from .measures import (
    NO_COLLISION,
    Direction,
    RigidPair,
    TtcOutcome,
    Unit,
    ttc2d_baseline,
    ttc2d_v1,
    ttc_conventional,
)
from .oracle import MotionModel, MotionModelKind, OrientedRect, first_contact_time, rects_overlap

__version__ = "0.1.0"

__all__ = [
    "ArticulatedGeometry",
    "ArticulatedState",
    "BodyAcceleration",
    "BodyVelocity",
    "Direction",
    "MotionModel",
    "MotionModelKind",
    "NO_COLLISION",
    "OrientedRect",
    "Pose2D",
    "RelativeKinematics",
    "RigidPair",
    "RotationMatrix2",
    "SolverConfig",
    "TtcOutcome",
    "Unit",
    "VehicleGeometry",
    "VehicleState",
    "conventional_articulated",
    "first_contact_time",
    "guo2d_articulated",
    "project_extent",
    "quadratic_contact_time",
    "rects_overlap",
    "relative_kinematics",
    "relative_offset",
    "relative_rotation",
    "semitrailer_offset",
    "transform_acceleration",
    "transform_velocity",
    "ttc2d_baseline",
    "ttc2d_v1",
    "ttc2d_v2",
    "ttc2d_v3",
    "ttc_conventional",
    "wrap_angle",
]
