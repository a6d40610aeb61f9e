#!/usr/bin/env python3
"""plot_figure.py - Quick look at a CSV written by `dar figure` or `dar sweep`.

    dar figure fig1c --out fig1c.csv
    python3 tools/plot_figure.py fig1c.csv -o fig1c.png

Wide tables (first column t) are drawn as one curve per column, long tables with
one axis as curves over the axis (or a t-axis heat map), two-axis tables as a heat map.
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("csv")
    ap.add_argument("-o", "--out", default=None, help="image file (default: <csv>.png)")
    args = ap.parse_args()

    df = pd.read_csv(args.csv, comment="#")
    df = df.drop(columns=["status"])
    fig, ax = plt.subplots(figsize=(6, 4))

    if df.columns[0] == "t":
        for col in df.columns[1:]:
            ax.plot(df["t"], df[col], label=col)
        ax.set_xlabel("t [hbar/eV]")
        ax.legend(fontsize="small")
    elif "t" in df.columns:
        axis, value = df.columns[0], df.columns[-1]
        grid = df.pivot(index="t", columns=axis, values=value)
        mesh = ax.pcolormesh(grid.columns, grid.index, grid.values, shading="auto")
        fig.colorbar(mesh, ax=ax, label=value)
        ax.set_xlabel(axis)
        ax.set_ylabel("t [hbar/eV]")
    elif len(df.columns) >= 3 and df.columns[1] not in ("I", "p1", "p_0", "t_opt"):
        a, b, value = df.columns[0], df.columns[1], df.columns[2]
        grid = df.pivot(index=b, columns=a, values=value)
        mesh = ax.pcolormesh(grid.columns, grid.index, grid.values, shading="auto")
        fig.colorbar(mesh, ax=ax, label=value)
        ax.set_xlabel(a)
        ax.set_ylabel(b)
    else:
        axis = df.columns[0]
        for col in df.columns[1:]:
            if pd.api.types.is_numeric_dtype(df[col]):
                ax.plot(df[axis], df[col], label=col)
        ax.set_xlabel(axis)
        ax.legend(fontsize="small")

    fig.tight_layout()
    fig.savefig(args.out or args.csv.rsplit(".", 1)[0] + ".png", dpi=150)


if __name__ == "__main__":
    main()
