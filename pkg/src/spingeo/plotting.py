"""Geography-plane figures rendered with matplotlib.

The map subcommand writes these next to the delimited coverage output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.fonttype"] = "none"  # keep labels as searchable text
matplotlib.rcParams["svg.hashsalt"] = "spingeo"  # reproducible ids

import matplotlib.pyplot as plt

from .geography import CoverageRow, RATIO_BOUND

STATUS_STYLE = {
    "thm1": ("tab:blue", "realized (negative-signature grid)"),
    "thm2": ("tab:green", "realized (region search)"),
    "unresolved": ("tab:orange", "unresolved"),
    "outside": ("lightgray", "outside covered regions"),
}


def geography_figure(rows: list[CoverageRow], chimax: int, cmax: int, group) -> plt.Figure:
    fig, ax = plt.subplots(figsize=(7.2, 5.4))
    chis = [0, chimax]
    ax.plot(chis, [8 * v for v in chis], color="black", lw=1.0, label="c = 8χ")
    ax.plot(
        chis,
        [float(RATIO_BOUND) * v for v in chis],
        color="black",
        lw=1.0,
        ls="--",
        label="c = (219/25)χ",
    )
    for status, (color, label) in STATUS_STYLE.items():
        pts = [(r.point.chi, r.point.c) for r in rows if r.status == status]
        if pts:
            ax.scatter(*zip(*pts), s=18, color=color, label=label, zorder=3)
    ax.set_xlim(0, chimax + 1)
    ax.set_ylim(-0.5, cmax + 1)
    ax.set_xlabel("χ_h")
    ax.set_ylabel("c₁²")
    ax.set_title(f"spin symplectic geography, π₁ = {group}")
    ax.legend(loc="upper left", fontsize=8)
    ax.grid(alpha=0.25)
    fig.tight_layout()
    return fig


def write_geography_svg(rows, chimax, cmax, group, path: str) -> None:
    fig = geography_figure(rows, chimax, cmax, group)
    fig.savefig(path, format="svg")
    plt.close(fig)
