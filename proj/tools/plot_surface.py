#!/usr/bin/env python3
"""Render the CLI's CSV artifacts.

Two modes, detected from the header:

  geometry report  (s,t,F,e,f,g,H,K,...)  ->  heatmap of one column over (s, t)
  mesh scalars     (vertex,s,t,x,y,z,H,K) ->  3-D scatter of the projected
                                              surface, colored by one column

Examples:
  tools/plot_surface.py out/clifford_minimal.csv --column H --out H.png
  tools/plot_surface.py out/mesh_scalars.csv --column K --out mesh.png
"""

import argparse
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def read_csv(path):
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    header, data = rows[0], rows[1:]
    cols = {name: np.array([float(r[i]) for r in data]) for i, name in enumerate(header)}
    return header, cols


def plot_geometry(cols, column, out):
    s, t, v = cols["s"], cols["t"], cols[column]
    su, tu = np.unique(s), np.unique(t)
    grid = v.reshape(len(su), len(tu))
    fig, ax = plt.subplots(figsize=(7, 6))
    im = ax.pcolormesh(tu, su, grid, shading="nearest", cmap="viridis")
    fig.colorbar(im, ax=ax, label=column)
    ax.set_xlabel("t")
    ax.set_ylabel("s")
    ax.set_title(f"{column} over the parameter grid")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}  ({column}: min {v.min():.6g}, max {v.max():.6g})")


def plot_mesh(cols, column, out):
    x, y, z, v = cols["x"], cols["y"], cols["z"], cols[column]
    fig = plt.figure(figsize=(7, 6))
    ax = fig.add_subplot(projection="3d")
    sc = ax.scatter(x, y, z, c=v, s=2, cmap="viridis")
    fig.colorbar(sc, ax=ax, label=column, shrink=0.7)
    ax.set_title(f"projected surface colored by {column}")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}  ({column}: min {v.min():.6g}, max {v.max():.6g})")


def main():
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("csv_path", help="geometry report CSV or mesh scalar CSV")
    ap.add_argument("--column", default="H", help="column to color by (default H)")
    ap.add_argument("--out", default="plot.png", help="output image path")
    args = ap.parse_args()

    header, cols = read_csv(args.csv_path)
    if args.column not in cols:
        sys.exit(f"column '{args.column}' not in {header}")
    if "vertex" in header:
        plot_mesh(cols, args.column, args.out)
    else:
        plot_geometry(cols, args.column, args.out)


if __name__ == "__main__":
    main()
