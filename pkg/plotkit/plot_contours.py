"""Density contour figure from a solver snapshot CSV.

Renders the benchmark's figure style: a filled + line contour plot of the
density field with 38 levels spanning the snapshot's range, equal-aspect
axes over the domain.

    python plot_contours.py --input snapshot.csv --output fig.png [--levels 38]

The snapshot format is the solver's documented CSV: a comment header
``# nx=<int> ny=<int> time=<float> gamma=<float>`` followed by one
``x,y,rho,u,v,p`` row per cell, y-outer row-major order.
"""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

COLUMNS = ("x", "y", "rho", "u", "v", "p")


class SnapshotError(ValueError):
    pass


def read_snapshot_csv(path):
    """Parse the snapshot into a dict of (ny, nx) arrays per column."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith("#"):
        raise SnapshotError("missing '# nx=.. ny=..' snapshot header")
    meta = dict(token.split("=", 1) for token in lines[0].lstrip("#").split()
                if "=" in token)
    try:
        nx, ny = int(meta["nx"]), int(meta["ny"])
        time = float(meta.get("time", "nan"))
    except (KeyError, ValueError):
        raise SnapshotError("unparsable snapshot header") from None
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) < len(COLUMNS):
            missing = COLUMNS[len(parts)]
            raise SnapshotError(
                f"row {lineno} is missing column {missing!r}")
        rows.append([float(tok) for tok in parts[:len(COLUMNS)]])
    if len(rows) != nx * ny:
        raise SnapshotError(f"expected {nx * ny} rows, found {len(rows)}")
    table = np.asarray(rows).reshape(ny, nx, len(COLUMNS))
    fields = {name: table[:, :, k] for k, name in enumerate(COLUMNS)}
    fields["time"] = time
    return fields


def contour_levels(field, n_levels):
    lo, hi = float(np.min(field)), float(np.max(field))
    if hi - lo <= 1e-12 * max(1.0, abs(hi)):
        # degenerate (uniform) field: a single level around the value
        pad = max(1e-6, 1e-6 * abs(hi))
        return np.array([lo - pad, hi + pad])
    return np.linspace(lo, hi, n_levels)


def plot_contours(fields, n_levels, output):
    x, y, rho = fields["x"], fields["y"], fields["rho"]
    levels = contour_levels(rho, n_levels)
    fig, ax = plt.subplots(figsize=(8, 4.2))
    filled = ax.contourf(x, y, rho, levels=levels, cmap="viridis")
    if len(levels) > 2:
        ax.contour(x, y, rho, levels=levels, colors="black",
                   linewidths=0.25, alpha=0.6)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    t = fields.get("time")
    title = "density"
    if t == t:  # not NaN
        title += f" at t = {t:g}"
    ax.set_title(title)
    fig.colorbar(filled, ax=ax, label="rho", shrink=0.85)
    fig.tight_layout()
    fig.savefig(output, dpi=150)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--input", required=True, help="snapshot CSV")
    parser.add_argument("--output", required=True, help="image path")
    parser.add_argument("--levels", type=int, default=38,
                        help="contour level count (default 38)")
    args = parser.parse_args(argv)
    if args.levels < 2:
        print("error: need at least 2 contour levels", file=sys.stderr)
        return 2
    try:
        fields = read_snapshot_csv(args.input)
    except (OSError, SnapshotError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    plot_contours(fields, args.levels, args.output)
    print(f"wrote {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
