"""Render a rate-curve CSV (from `latsec rates`) as a figure.

Usage:
    latsec rates --config rates.cfg --out rates.csv
    python demos/plot_rates.py rates.csv rates.png

Plotting is kept out of the core package on purpose; this helper needs
matplotlib.
"""

import csv
import sys


def main(csv_path, out_path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with open(csv_path) as fh:
        rows = list(csv.DictReader(fh))
    snr = [float(r["snr_b_db"]) for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(snr, [float(r["C_b_nats"]) - float(r["C_e_nats"]) for r in rows],
            "k--", label="C_b - C_e")
    for col in rows[0]:
        if col.startswith("R_max_nats_"):
            label = col[len("R_max_nats_"):]
            ax.plot(snr, [max(0.0, float(r[col])) for r in rows], label=label)
    ax.set_xlabel("Bob SNR (dB)")
    ax.set_ylabel("rate (nats / complex channel use)")
    ax.set_title(f"achievable secrecy rates (Eve at {rows[0]['snr_e_db']} dB)")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    print(f"wrote {out_path}")


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    main(sys.argv[1], sys.argv[2])
