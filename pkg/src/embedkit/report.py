"""File reports: a flat CSV of the result plus matplotlib figures.

Figures are best-effort illustrations (rank-2 cones, the SL(2) monomial
staircase, Dynkin diagrams); the CSV carries the same key/value rows the
text renderer prints, so the directory stands alone.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

from .root_system import GroupType, cartan_data


def flatten(obj, prefix: str = "") -> list[tuple[str, str]]:
    """Dotted-key rows for nested dicts; everything else is JSON-encoded."""
    rows: list[tuple[str, str]] = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            key = f"{prefix}.{k}" if prefix else str(k)
            rows.extend(flatten(obj[k], key))
        return rows
    rows.append((prefix, json.dumps(obj, sort_keys=True)))
    return rows


def write_csv(path: Path, payload: dict) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["key", "value"])
        writer.writerows(flatten(payload))


def _axes(path: Path):
    import matplotlib

    matplotlib.use("Agg")
    from matplotlib import pyplot

    fig, ax = pyplot.subplots(figsize=(5, 5))

    def save() -> None:
        ax.set_aspect("equal")
        fig.tight_layout()
        fig.savefig(path, dpi=120)
        pyplot.close(fig)

    return ax, save


def draw_cone_2d(rays, lineality, path: Path) -> None:
    """Arrows for the generators, shading for the spanned region."""
    ax, save = _axes(path)
    pts = [tuple(r) for r in rays]
    scale = max((max(abs(x), abs(y)) for x, y in pts), default=1) or 1
    unit = [(x / scale, y / scale) for x, y in pts]
    if len(unit) >= 2 and not lineality:
        # sort by angle relative to the first ray so the atan2 branch cut
        # cannot split a wedge that straddles the negative x axis
        base = math.atan2(unit[0][1], unit[0][0])
        spanned = sorted(
            ((3 * x, 3 * y) for x, y in unit),
            key=lambda v: (math.atan2(v[1], v[0]) - base) % (2 * math.pi),
        )
        ax.fill(
            [0.0] + [v[0] for v in spanned],
            [0.0] + [v[1] for v in spanned],
            alpha=0.15,
            color="tab:blue",
        )
    for x, y in unit:
        ax.annotate(
            "",
            xy=(2 * x, 2 * y),
            xytext=(0, 0),
            arrowprops=dict(arrowstyle="->", color="tab:blue", lw=1.5),
        )
    for b in lineality:
        x, y = b[0] / scale, b[1] / scale
        ax.plot([-3 * x, 3 * x], [-3 * y, 3 * y], "--", color="tab:gray", lw=1)
    for (x, y), orig in zip(unit, pts):
        ax.annotate(str(list(orig)), xy=(2.1 * x, 2.1 * y), fontsize=8)
    ax.axhline(0, color="0.8", lw=0.5)
    ax.axvline(0, color="0.8", lw=0.5)
    ax.set_xlim(-3.2, 3.2)
    ax.set_ylim(-3.2, 3.2)
    ax.set_title("cone generators")
    save()


def draw_staircase(p: int, q: int, basis, path: Path) -> None:
    """Lattice points of the height algebra with its generators marked."""
    ax, save = _axes(path)
    top = max(q + 2, 8)
    inside_x, inside_y = [], []
    for i in range(top + 1):
        for j in range(top + 1):
            if q * j <= p * i:
                inside_x.append(i)
                inside_y.append(j)
    ax.scatter(inside_x, inside_y, s=12, color="0.7", zorder=2)
    ax.scatter(
        [m.i for m in basis], [m.j for m in basis], s=45, color="tab:red", zorder=3
    )
    ax.plot([0, top], [0, top * p / q], color="tab:blue", lw=1, zorder=1)
    ax.set_xlim(-0.5, top + 0.5)
    ax.set_ylim(-0.5, top + 0.5)
    ax.set_xlabel("i (exponent of A)")
    ax.set_ylabel("j (exponent of B)")
    ax.set_title(f"monomials of the height-{p}/{q} algebra")
    save()


def _dynkin_positions(group: GroupType) -> list[tuple[float, float]]:
    pos: list[tuple[float, float]] = []
    x = 0.0
    for family, rank in group.factors:
        if family == "D" and rank >= 3:
            for k in range(rank - 2):
                pos.append((x + k, 0.0))
            pos.append((x + rank - 2, 0.6))
            pos.append((x + rank - 2, -0.6))
            x += rank - 1 + 1.5
        else:
            for k in range(rank):
                pos.append((x + k, 0.0))
            x += rank + 0.5
    return pos


def draw_dynkin(group: GroupType, levi: frozenset[int], path: Path) -> None:
    """Nodes on a line, multiple edges by bond order, Levi nodes filled."""
    ax, save = _axes(path)
    matrix = cartan_data(group).matrix
    n = group.semisimple_rank
    pos = _dynkin_positions(group)
    for i in range(n):
        for j in range(i + 1, n):
            bond = max(abs(matrix[i][j]), abs(matrix[j][i]))
            if bond == 0:
                continue
            (x1, y1), (x2, y2) = pos[i], pos[j]
            dx, dy = x2 - x1, y2 - y1
            norm = (dx * dx + dy * dy) ** 0.5
            ox, oy = -dy / norm * 0.05, dx / norm * 0.05
            for k in range(bond):
                off = (k - (bond - 1) / 2)
                ax.plot(
                    [x1 + off * ox, x2 + off * ox],
                    [y1 + off * oy, y2 + off * oy],
                    color="black",
                    lw=1.2,
                    zorder=1,
                )
            if bond > 1:
                # arrow toward the short root
                short_is_j = abs(matrix[j][i]) > abs(matrix[i][j])
                tip = pos[j] if short_is_j else pos[i]
                tail = pos[i] if short_is_j else pos[j]
                mx, my = (x1 + x2) / 2, (y1 + y2) / 2
                ax.annotate(
                    "",
                    xy=((mx + tip[0]) / 2, (my + tip[1]) / 2),
                    xytext=((mx + tail[0]) / 2, (my + tail[1]) / 2),
                    arrowprops=dict(arrowstyle="-|>", color="black", lw=0.8),
                    zorder=2,
                )
    for idx, (x, y) in enumerate(pos, start=1):
        filled = idx in levi
        ax.scatter(
            [x],
            [y],
            s=220,
            facecolors="black" if filled else "white",
            edgecolors="black",
            zorder=3,
        )
        ax.annotate(str(idx), xy=(x, y - 0.35), ha="center", fontsize=9)
    ax.set_title(group.describe() + (f", Levi {sorted(levi)}" if levi else ""))
    ax.axis("off")
    save()


def render(out_dir: str, subcommand: str, payload: dict, context: dict) -> list[str]:
    """Write report.csv plus whatever figure fits; returns the files written."""
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    csv_path = directory / "report.csv"
    write_csv(csv_path, payload)
    written.append(str(csv_path))

    cone = context.get("cone")
    if cone is not None and cone.ambient_rank == 2:
        fig = directory / "cone.png"
        draw_cone_2d(cone.ray_generators, cone.lineality_basis(), fig)
        written.append(str(fig))
    height = context.get("height")
    if height is not None:
        fig = directory / "staircase.png"
        draw_staircase(height.p, height.q, context["basis"], fig)
        written.append(str(fig))
    group = context.get("group")
    if group is not None and group.semisimple_rank > 0:
        fig = directory / "dynkin.png"
        draw_dynkin(group, context.get("levi", frozenset()), fig)
        written.append(str(fig))
    return written
