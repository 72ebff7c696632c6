#!/usr/bin/env python3
"""Plot figure-data CSVs written by `sskdv ... --figure-data FILE --wide`.

Each CSV becomes one PNG next to it, with one panel per column (one curve per t slice).
"""

import argparse
import csv
import math
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def read_wide(path):
    with open(path, newline="") as f:
        comment = f.readline().lstrip("# ").strip()
        reader = csv.reader(f)
        header = next(reader)
        rows = [[float(v) for v in row] for row in reader]
    cols = {name: [r[k] for r in rows] for k, name in enumerate(header)}
    return comment, header, cols


def plot(path, ylim=None):
    comment, header, cols = read_wide(path)
    # column names look like "abs_u@t=-10"; group by the part before '@'
    quantities = []
    for name in header[1:]:
        q = name.split("@")[0]
        if q not in quantities:
            quantities.append(q)
    fig, axes = plt.subplots(len(quantities), 1, figsize=(7, 3 * len(quantities)), sharex=True)
    axes = axes if len(quantities) > 1 else [axes]
    for ax, q in zip(axes, quantities):
        for name in header[1:]:
            if name.split("@")[0] != q:
                continue
            label = name.split("@")[1] if "@" in name else name
            ys = [y if math.isfinite(y) else math.nan for y in cols[name]]
            ax.plot(cols["x"], ys, label=label)
        ax.set_ylabel(q)
        if ylim:
            ax.set_ylim(*ylim)
        ax.legend(fontsize="small")
    axes[-1].set_xlabel("x")
    axes[0].set_title(comment, fontsize="small")
    out = pathlib.Path(path).with_suffix(".png")
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv", nargs="+", help="wide-format CSV files")
    ap.add_argument("--ylim", nargs=2, type=float, metavar=("LO", "HI"), help="clip the y axis (useful near poles)")
    args = ap.parse_args()
    for p in args.csv:
        print(plot(p, args.ylim))


if __name__ == "__main__":
    main()
