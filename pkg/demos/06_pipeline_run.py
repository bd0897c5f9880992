"""
A checkpointed pipeline run
===========================

The pipeline runs every stage per (case, p) unit, checkpoints each unit,
and can resume an interrupted run.  The full run is the same call with
r_max = 10^6 (or `python -m sumcubes --out out/full`).
"""

import tempfile
from pathlib import Path

from sumcubes.pipeline import Config, render_table, run_range

config = Config(r_max=2000, cases=(3, 4), p_max=23)
with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "run"
    partial = run_range(config, out=out, stop_after=4)
    print(f"interrupted after {len(partial.units)} units")
    report = run_range(config, out=out, resume=out / "state.json")
    print(f"resumed to {len(report.units)} units")
    print(render_table(report, "markdown"))
    print(sorted(p.name for p in out.iterdir()))
