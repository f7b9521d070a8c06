"""File reports: delimited metric output plus rendered figures.

Writes a properties.csv next to PNG figures (DDT heatmap, per-component
Walsh profile, Hamming-weight signature) for one S-box, and a progress
curve for recorded search runs.
"""
from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .analysis import _iter_component_spectra, difference_distribution, evaluate_all
from .sbox import SBox
from .search import SearchState


def _write_properties_csv(s: SBox, path: Path) -> None:
    report = evaluate_all(s)
    rows = [("property", "value")]
    rows.append(("n", s.n))
    rows.append(("m", s.m))
    for name in ("bijective", "nl", "du", "ccv", "mto", "rto", "wcf"):
        value = getattr(report, name)
        if value is None:
            value = f"unavailable: {report.errors.get(name, 'not applicable')}"
        rows.append((name, value))
    rows.append(("hw_signature", " ".join(str(v) for v in report.hw_signature)))
    with path.open("w", newline="") as fh:
        csv.writer(fh).writerows(rows)


def _plot_ddt(s: SBox, path: Path) -> None:
    ddt = difference_distribution(s)
    fig, ax = plt.subplots(figsize=(6, 5))
    image = ax.imshow(ddt, cmap="viridis", origin="lower", interpolation="nearest")
    ax.set_xlabel("output difference b")
    ax.set_ylabel("input difference a")
    ax.set_title(f"Difference distribution table ({s.n}x{s.m})")
    fig.colorbar(image, ax=ax, label="count")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _plot_walsh_profile(s: SBox, path: Path) -> None:
    peaks = np.concatenate(
        [np.abs(block).max(axis=1) for block in _iter_component_spectra(s)]
    )
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(np.arange(1, peaks.size + 1), peaks, lw=0.8)
    ax.set_xlabel("component mask b")
    ax.set_ylabel("max |WH|")
    ax.set_title("Walsh spectrum peaks per component")
    ax.set_ylim(bottom=0)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _plot_hw_signature(s: SBox, path: Path) -> None:
    weights = [bin(v).count("1") for v in s.table]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.step(range(s.size), weights, where="mid", lw=0.8)
    ax.set_xlabel("input x")
    ax.set_ylabel("HW(F(x))")
    ax.set_title("Hamming-weight signature")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(s: SBox, out_dir: str | Path) -> list[Path]:
    """Write properties.csv and metric figures; returns the created paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    created = []
    csv_path = out / "properties.csv"
    _write_properties_csv(s, csv_path)
    created.append(csv_path)
    if s.n == s.m:
        ddt_path = out / "ddt_heatmap.png"
        _plot_ddt(s, ddt_path)
        created.append(ddt_path)
    walsh_path = out / "walsh_profile.png"
    _plot_walsh_profile(s, walsh_path)
    created.append(walsh_path)
    hw_path = out / "hw_signature.png"
    _plot_hw_signature(s, hw_path)
    created.append(hw_path)
    return created


def plot_search_progress(history: list[SearchState], path: str | Path) -> Path:
    """Render best NL and WCF against iteration for a recorded search run."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    iterations = [st.iteration for st in history]
    best = [st.best_nl for st in history]
    cost = [st.current_wcf for st in history]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.step(iterations, best, where="post", color="tab:blue", label="best NL")
    ax.set_xlabel("iteration")
    ax.set_ylabel("best NL", color="tab:blue")
    twin = ax.twinx()
    twin.plot(iterations, cost, color="tab:orange", lw=0.8, label="WCF")
    twin.set_ylabel("WCF", color="tab:orange")
    ax.set_title("Local search progress")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
