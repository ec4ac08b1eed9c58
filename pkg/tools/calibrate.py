#!/usr/bin/env python3
"""Print the calibration anchor metrics for a scenario config.

Development aid: run after editing the default INI (or pass a path) to see
where the reconstruction lands relative to the published anchors.
"""

import sys
import time

import numpy as np

from ttc2d import evaluate, scenario


def main(path=None):
    cfg = scenario.load_config(path) if path else scenario.default_config()
    t0 = time.perf_counter()
    traj = scenario.generate_cutin(cfg)
    contact = scenario.first_contact(traj)
    conv = evaluate.measure_series(traj, "CONV", indices=range(0, len(traj), 5))
    transition = evaluate.finite_to_inf_transition(traj.t[::5], conv)

    i16 = traj.index_at(16.0)
    v2_16 = evaluate.measure_at(traj, i16, "V2")
    v3_16 = evaluate.measure_at(traj, i16, "V3")
    guo_16 = evaluate.measure_at(traj, i16, "GUO2D")

    t_c = contact.time if contact else traj.t[-1]
    win = np.arange(traj.index_at(t_c - 4.0), traj.index_at(t_c) + 1, 10)
    win = win[(win >= 0) & (win < len(traj))]
    v2s = evaluate.measure_series(traj, "V2", indices=win)
    v3s = evaluate.measure_series(traj, "V3", indices=win)
    cap = lambda o: min(o.time, 5.0)
    diffs = np.array([abs(cap(a) - cap(b)) for a, b in zip(v2s, v3s)])
    k = int(np.argmax(diffs))
    elapsed = time.perf_counter() - t0

    ds = scenario.distance_series(traj)
    print(f"contact:            {contact}")
    print(f"conv transition:    {transition}")
    print(f"V2  @16:            {v2_16.time:.3f} ({v2_16.direction.value}, {v2_16.unit.value})")
    print(f"V3  @16:            {v3_16.time:.3f}")
    print(f"GUO @16:            {guo_16.time:.3f}")
    print(f"max|V2-V3| window:  {diffs.max():.3f} at t={traj.t[win[k]]:.2f}")
    print(f"lat gap @16:        {ds.semitrailer.lat_gap[i16]:.3f}")
    rear_gap = ds.semitrailer.lon_gap[i16] - traj.car_geom.length
    print(f"front-vs-rear @16:  {rear_gap:.3f} (car front to trailer rear)")
    print(f"runtime:            {elapsed:.2f} s")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
