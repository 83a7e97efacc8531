"""Figures written next to the text/JSON reports."""
from __future__ import annotations

import os
from math import comb
from typing import Dict, Iterable, List

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .enumerative import chi_O  # noqa: E402
from .quartic import EXPECTED_IDEAL_DIMS  # noqa: E402

# deterministic PNG bytes
_SAVE_KW = dict(dpi=100, metadata={"Software": None})


def _finish(fig, path: str) -> str:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
    return path


def plot_hilbert_profiles(profiles: Dict[str, Dict[int, int]], path: str) -> str:
    """Hilbert function of each computed ideal against 25t - 25."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ds = sorted(EXPECTED_IDEAL_DIMS)
    hp = [25 * d - 25 for d in ds]
    ax.plot(ds, hp, "k--", lw=1, label="25t - 25")
    ax.plot(ds, [comb(d + 5, 5) for d in ds], ":", color="grey", lw=1, label="dim S_t")
    for i, (label, dims) in enumerate(sorted(profiles.items())):
        hf = [comb(d + 5, 5) - dims[d] for d in ds]
        ax.plot([d + 0.04 * i for d in ds], hf, "o", ms=5, label=label)
    ax.set_xlabel("degree t")
    ax.set_ylabel("Hilbert function")
    ax.set_xticks(ds)
    ax.legend(fontsize=8, frameon=False)
    return _finish(fig, path)


def plot_gn_chi(ks: Iterable[int], values: List[int], path: str) -> str:
    """chi(I(k)) from the resolution against C(k+5,5) - (25k - 25)."""
    ks = list(ks)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ks, [chi_O(k) - (25 * k - 25) for k in ks], "k-", lw=1, label="C(k+5,5) - (25k-25)")
    ax.plot(ks, values, "o", ms=4, label="resolution")
    ax.set_yscale("symlog", linthresh=10)
    ax.set_xlabel("k")
    ax.set_ylabel("chi(I(k))")
    ax.legend(fontsize=8, frameon=False)
    return _finish(fig, path)
