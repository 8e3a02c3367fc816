"""Figure rendering for distance profiles.

Renders with the Agg backend only and strips the writer identification
from PNG metadata, so repeated renders of the same profile produce
byte-identical files.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .distances import DistanceProfile  # noqa: E402


def render_profile_figure(profile: DistanceProfile, path) -> None:
    """Plot row distances against the order, with the per-order guarantee
    staircase and the free-distance level when they are available."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0), dpi=100)
    orders = list(range(1, profile.L + 1))
    known = [(ell, d) for ell, d in zip(orders, profile.d_row)
             if d is not None]
    if known:
        xs = [ell for ell, _ in known]
        ys = [d for _, d in known]
        ax.plot(xs, ys, marker="o", color="#1f6fb4",
                label=f"row distance ({profile.metric})")
        if profile.d_free is not None:
            suffix = ("certified" if profile.status == "certified"
                      else profile.status)
            ax.axhline(profile.d_free, color="#777777", linestyle=":",
                       linewidth=1.0,
                       label=f"free distance = {profile.d_free} ({suffix})")
    else:
        ax.text(0.5, 0.5, "every order is empty\n(no input parks "
                "the encoder)", ha="center", va="center",
                transform=ax.transAxes)
    cb = profile.construction_bound
    if cb is not None and cb.applies and cb.values:
        ax.step(orders, cb.values, where="mid", color="#c45b28",
                linestyle="--", linewidth=1.2, label="guaranteed minimum")
    ax.set_xlabel("order")
    ax.set_ylabel("distance")
    ax.set_xticks(orders)
    shape = f"n={profile.n}, k={profile.k}, k1={profile.k1}"
    if profile.mh is not None:
        shape += f", mH={profile.mh}"
    ax.set_title(f"Row distance profile ({shape})")
    if known or (cb is not None and cb.applies):
        ax.legend(loc="best", fontsize=9)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, format="png", metadata={"Software": None})
    plt.close(fig)
