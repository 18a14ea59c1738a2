"""Figure rendering for report subcommands. Files only, no interactive UI."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["save_series", "save_histogram"]


def save_series(path, ks, terms, cumulative, title, term_label="V_k * D_k"):
    """Per-batch contributions as bars with the running total overlaid."""
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(ks, terms, color="#4878a8", label=term_label)
    ax2 = ax.twinx()
    ax2.plot(ks, cumulative, color="#c44e52", marker="o", label="cumulative")
    ax.set_xlabel("k")
    ax.set_ylabel(term_label)
    ax2.set_ylabel("cumulative")
    ax.set_title(title)
    h1, l1 = ax.get_legend_handles_labels()
    h2, l2 = ax2.get_legend_handles_labels()
    ax.legend(h1 + h2, l1 + l2, loc="center right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_histogram(path, values, title, xlabel="witness size"):
    fig, ax = plt.subplots(figsize=(6, 4))
    lo, hi = int(min(values)), int(max(values))
    # unit bins only while the spread is sane; capped Monte Carlo draws carry
    # exponential D_k bounds that would otherwise ask for ~4^k bin edges
    if hi - lo <= 80:
        bins = [b - 0.5 for b in range(lo, hi + 2)]
    else:
        bins = 80
    ax.hist(values, bins=bins, color="#4878a8", edgecolor="white")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("count")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
