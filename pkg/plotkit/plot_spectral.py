"""Fourier-operator figure from an `analyze` spectral CSV.

Plots -F(theta) against theta for every scheme column next to the exact
diffusion curve theta^2.  Schemes with high-frequency damping stay bounded
away from zero at theta = pi; the gradient-interpolation scheme's curve
returns to zero there.

    python plot_spectral.py --input spectral.csv --output fig.png
"""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

STYLES = {
    "exact": dict(color="black", linestyle="--", linewidth=1.2),
    "alpha6": dict(color="tab:blue"),
    "shen6": dict(color="tab:red"),
    "alpha4": dict(color="tab:green", linestyle="-."),
}

LABELS = {
    "exact": r"exact $\theta^2$",
    "alpha6": "6th-order alpha-damping",
    "shen6": "gradient interpolation (6th)",
    "alpha4": "4th-order alpha-damping",
}


class SpectralError(ValueError):
    pass


def read_spectral_csv(path):
    with open(path, encoding="utf-8") as fh:
        lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    if len(lines) < 2:
        raise SpectralError("spectral CSV holds no samples")
    names = lines[0].split(",")
    if names[0] != "theta":
        raise SpectralError("first column must be theta")
    data = np.array([[float(tok) for tok in ln.split(",")]
                     for ln in lines[1:]])
    if data.shape[1] != len(names):
        raise SpectralError("row width does not match header")
    return names, data


def plot_spectral(names, data, output):
    theta = data[:, 0]
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    for k, name in enumerate(names[1:], start=1):
        style = STYLES.get(name, {})
        ax.plot(theta, -data[:, k], label=LABELS.get(name, name), **style)
    ax.set_xlabel(r"wavenumber $\theta = k\,\Delta x$")
    ax.set_ylabel(r"$-\mathcal{F}(\theta)$")
    ax.set_xlim(0, np.pi)
    ax.set_ylim(bottom=0)
    ax.set_xticks([0, np.pi / 4, np.pi / 2, 3 * np.pi / 4, np.pi],
                  ["0", r"$\pi/4$", r"$\pi/2$", r"$3\pi/4$", r"$\pi$"])
    ax.legend(loc="upper left", fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(output, dpi=150)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--input", required=True, help="spectral CSV")
    parser.add_argument("--output", required=True, help="image path")
    args = parser.parse_args(argv)
    try:
        names, data = read_spectral_csv(args.input)
    except (OSError, SpectralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    plot_spectral(names, data, args.output)
    print(f"wrote {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
