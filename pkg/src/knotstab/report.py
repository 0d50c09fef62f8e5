"""Zero tables and figures for the report command."""

from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

from .polyring import IntPoly
from .stability import numeric_zeros

ZERO_HEADER = ("re", "im", "label")


def zero_rows(items: Iterable[Tuple[str, IntPoly]], tol: float = 1e-12, seed: int = 0) -> List[Tuple[float, float, str]]:
    rows = []
    for label, p in items:
        if p.degree < 1:
            continue
        for z in numeric_zeros(p, tol=tol, seed=seed):
            rows.append((z.real, z.imag, label))
    return rows


def _fmt(x: float) -> str:
    # round away -0.0 and sub-tolerance noise so reruns are byte-identical
    v = round(x, 12)
    return repr(v + 0.0) if v else "0.0"


def zeros_csv(rows: Sequence[Tuple[float, float, str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ZERO_HEADER)
    for re_, im, label in rows:
        w.writerow((_fmt(re_), _fmt(im), label))
    return buf.getvalue()


def zeros_json(rows: Sequence[Tuple[float, float, str]]) -> str:
    data = [{"re": float(_fmt(a)), "im": float(_fmt(b)), "label": c} for a, b, c in rows]
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def rows_csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: str(r[k]).lower() if isinstance(r[k], bool) else r[k] for k in columns})
    return buf.getvalue()


def rows_json(rows: Sequence[dict]) -> str:
    return json.dumps(list(rows), indent=2, sort_keys=True) + "\n"


def plot_zeros(rows: Sequence[Tuple[float, float, str]], path: Path, title: str = "") -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    th = [2 * math.pi * k / 400 for k in range(401)]
    ax.plot([math.cos(a) for a in th], [math.sin(a) for a in th], color="0.6", lw=0.8)
    labels = sorted({r[2] for r in rows})
    cmap = plt.get_cmap("viridis", max(2, len(labels)))
    for i, lab in enumerate(labels):
        pts = [(a, b) for a, b, c in rows if c == lab]
        ax.scatter([p[0] for p in pts], [p[1] for p in pts], s=12, color=cmap(i), label=lab if len(labels) <= 12 else None)
    ax.axhline(0, color="0.8", lw=0.5)
    ax.axvline(0, color="0.8", lw=0.5)
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    if 1 < len(labels) <= 12:
        ax.legend(fontsize=7, loc="best")
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)


def plot_verdicts(rows: Sequence[dict], path: Path, title: str = "") -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    counts = Counter(r["verdict"] for r in rows)
    names = sorted(counts)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(names, [counts[n] for n in names], color="0.4")
    ax.set_ylabel("members")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
