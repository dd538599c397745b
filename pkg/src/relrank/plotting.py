"""Figure rendering for networks and evaluation reports."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .network import SocialNetwork


def render_network(net: SocialNetwork, path: str | Path) -> None:
    """Draw the network on a deterministic circular layout and save it."""
    ids = sorted(net.nodes)
    n = len(ids)
    pos = {}
    for i, actor_id in enumerate(ids):
        angle = 2.0 * math.pi * i / max(n, 1)
        pos[actor_id] = (math.cos(angle), math.sin(angle))

    fig, ax = plt.subplots(figsize=(6, 6))
    for (a, b), edge in sorted(net.edges.items()):
        xa, ya = pos[a]
        xb, yb = pos[b]
        ax.plot(
            [xa, xb],
            [ya, yb],
            color="tab:gray",
            linewidth=0.5 + 4.0 * edge.strength,
            zorder=1,
        )
        ax.annotate(
            f"{edge.strength:.2f}",
            ((xa + xb) / 2, (ya + yb) / 2),
            fontsize=8,
            color="tab:red",
            ha="center",
        )
    for actor_id in ids:
        x, y = pos[actor_id]
        weight = net.nodes[actor_id].weight
        ax.scatter([x], [y], s=200 + 1200 * weight, color="tab:blue", zorder=2)
        ax.annotate(actor_id, (x, y), fontsize=9, ha="center", va="bottom",
                    xytext=(0, 12), textcoords="offset points")
    ax.set_title(f"{len(ids)} nodes, {len(net.edges)} edges "
                 f"(threshold {net.threshold}, window {net.window})")
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_eval(
    per_query: dict[str, tuple[float, float]],
    k: int,
    path: str | Path,
) -> None:
    """Bar chart of precision@k / recall@k per query."""
    qids = sorted(per_query)
    precisions = [per_query[q][0] for q in qids]
    recalls = [per_query[q][1] for q in qids]
    x = range(len(qids))
    width = 0.4

    fig, ax = plt.subplots(figsize=(max(6, 0.8 * len(qids)), 4))
    ax.bar([i - width / 2 for i in x], precisions, width, label=f"P@{k}")
    ax.bar([i + width / 2 for i in x], recalls, width, label=f"R@{k}")
    ax.set_xticks(list(x))
    ax.set_xticklabels(qids, rotation=45, ha="right")
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("metric value")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
