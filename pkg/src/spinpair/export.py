"""CSV and JSON serialization of sweeps, phase rasters and reports.

Numbers are written with 17 significant digits so that parsing them back
gives the exact same doubles. Files are written atomically.
"""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .model import GroundStateClass, ModelParams
from .sweep import SweepResult

SCHEMA_VERSION = 1


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _default_mode() -> int:
    # mkstemp creates 0600 files; give the result the mode a plain open() would
    mask = os.umask(0)
    os.umask(mask)
    return 0o666 & ~mask


def atomic_write_text(path, text: str) -> None:
    """Write *text* to a sibling temp file, then rename it over *path*."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        os.chmod(tmp, _default_mode())
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def params_dict(p: ModelParams) -> dict:
    return {"j": p.j, "dx": p.dx, "gx": p.gx}


def dumps(obj: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **obj}, indent=None, allow_nan=False) + "\n"


def sweep_csv(result: SweepResult) -> str:
    header = [ax.param for ax in result.axes] + ["concurrence"]
    lines = [",".join(header)]
    if len(result.axes) == 1:
        for x, c in zip(result.axes[0].values(), result.values):
            lines.append(f"{fmt(x)},{fmt(c)}")
    else:
        ax, ay = result.axes
        xs, ys = ax.values(), ay.values()
        k = 0
        for y in ys:
            for x in xs:
                lines.append(f"{fmt(x)},{fmt(y)},{fmt(result.values[k])}")
                k += 1
    return "\n".join(lines) + "\n"


def write_csv(result: SweepResult, path) -> None:
    atomic_write_text(path, sweep_csv(result))


def read_sweep_csv(path) -> tuple[list[str], np.ndarray]:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split(",")
        rows = [[float(v) for v in line.rstrip("\n").split(",")] for line in fh if line.strip()]
    return header, np.array(rows)


def sweep_json(result: SweepResult) -> str:
    return dumps(
        {
            "kind": "sweep",
            "method": result.method,
            "base": params_dict(result.base),
            "temp": None if result.base_temp is None else result.base_temp.t,
            "axes": [ax.to_dict() for ax in result.axes],
            "values": [float(v) for v in result.values],
        }
    )


def phase_rows(grid: list[list[GroundStateClass]], x_axis, y_axis):
    xs, ys = x_axis.cell_centers(), y_axis.cell_centers()
    for iy, row in enumerate(grid):
        for ix, cell in enumerate(row):
            yield float(xs[ix]), float(ys[iy]), cell


def phase_csv(grid, x_axis, y_axis) -> str:
    lines = [f"{x_axis.param},{y_axis.param},label,degenerate_with,energy"]
    for x, y, cell in phase_rows(grid, x_axis, y_axis):
        lines.append(f"{fmt(x)},{fmt(y)},{cell.label},{'|'.join(cell.degenerate_with)},{fmt(cell.energy)}")
    return "\n".join(lines) + "\n"


def phase_json(grid, x_axis, y_axis, fixed: ModelParams) -> str:
    cells = [cell for row in grid for cell in row]
    return dumps(
        {
            "kind": "phase_diagram",
            "fixed": params_dict(fixed),
            "axes": [x_axis.to_dict(), y_axis.to_dict()],
            "sampling": "cell_center",
            "labels": [c.label for c in cells],
            "degenerate_with": [list(c.degenerate_with) for c in cells],
            "energy": [c.energy for c in cells],
        }
    )
