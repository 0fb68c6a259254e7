"""Figure rendering for the report command.

Renders a small set of diagnostic figures (Gram deviation heatmap,
verification residuals, degeneracy counts, a mode slice) to PNG files,
writes the underlying numbers next to them as delimited data, and
returns a manifest describing every file produced.  Everything here is
presentation; the numbers come from the same code paths the verify and
gram commands use.
"""

from __future__ import annotations

import io
import pathlib

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .geometry import HopfPoint
from .mode_families import (
    coexact_field,
    dimension_coexact,
    dimension_exact,
    enumerate_coexact,
    oneform_field,
)
from .indices import ModeIndex
from .quadrature import build_grid, gram
from .scalar_modes import enumerate_scalar
from .serialization import format_float, matrix_csv, render_json
from .verification import suite_eigen

__all__ = ["render_report"]

_SLICE_INDEX = ModeIndex(3, 1, 1)


def _gram_figure(out_dir: pathlib.Path, gram_level: int):
    grid = build_grid(gram_level)
    fields = [
        oneform_field("A", i, normalized=True) for i in enumerate_scalar(gram_level)
    ]
    fields += [coexact_field(b) for b in enumerate_coexact(gram_level)]
    g = gram(fields, grid)
    dev = np.abs(g - np.eye(len(fields)))

    fig, ax = plt.subplots(figsize=(6.0, 5.0))
    with np.errstate(divide="ignore"):
        img = ax.imshow(np.log10(np.maximum(dev, 1e-18)), cmap="viridis")
    ax.set_title(f"one-form Gram deviation from identity, L = {gram_level}")
    ax.set_xlabel("mode index")
    ax.set_ylabel("mode index")
    fig.colorbar(img, ax=ax, label="log10 |G - I|")
    png = out_dir / "gram_deviation.png"
    fig.savefig(png, dpi=150, bbox_inches="tight")
    plt.close(fig)

    csv = out_dir / "gram_matrix.csv"
    csv.write_text(matrix_csv(g, label="gram"), newline="")
    return [
        {
            "file": png.name,
            "data": csv.name,
            "title": "Gram deviation heatmap",
            "max_abs_deviation": float(dev.max()),
        }
    ]


def _residual_figure(out_dir: pathlib.Path, l_max: int, seed: int):
    checks = suite_eigen(l_max=l_max, seed=seed)
    names = [c.name for c in checks]
    residuals = np.array([max(c.residual, 1e-18) for c in checks])
    tols = np.array([max(c.tolerance, 1e-18) for c in checks])
    colors = ["tab:blue" if c.passed else "tab:red" for c in checks]

    fig, ax = plt.subplots(figsize=(7.0, 0.22 * len(checks) + 1.5))
    y = np.arange(len(checks))
    ax.scatter(residuals, y, c=colors, s=14, zorder=3)
    ax.scatter(tols, y, marker="|", c="k", s=60, zorder=2, label="tolerance")
    ax.set_xscale("log")
    ax.set_yticks(y)
    ax.set_yticklabels(names, fontsize=6)
    ax.invert_yaxis()
    ax.set_xlabel("residual")
    ax.set_title(f"eigen-relation residuals through L = {l_max}")
    ax.legend(loc="lower right", fontsize=7)
    png = out_dir / "eigen_residuals.png"
    fig.savefig(png, dpi=150, bbox_inches="tight")
    plt.close(fig)

    buf = io.StringIO()
    buf.write("name,residual,tolerance,passed\r\n")
    for c in checks:
        buf.write(
            f"\"{c.name}\",{format_float(c.residual)},{format_float(c.tolerance)},"
            f"{str(c.passed).lower()}\r\n"
        )
    csv = out_dir / "eigen_residuals.csv"
    csv.write_text(buf.getvalue(), newline="")
    n_passed = sum(c.passed for c in checks)
    return [
        {
            "file": png.name,
            "data": csv.name,
            "title": "verification residuals",
            "checks_total": len(checks),
            "checks_passed": n_passed,
        }
    ]


def _spectrum_figure(out_dir: pathlib.Path, l_max: int):
    levels = np.arange(1, l_max + 1)
    scalar_dims = np.array([dimension_exact(int(L)) for L in levels])
    coexact_dims = np.array(
        [dimension_coexact(int(L)) if L >= 2 else 0 for L in levels]
    )

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.stem(levels - 0.08, scalar_dims, linefmt="C0-", markerfmt="C0o", basefmt=" ",
            label="exact block, (L+1)^2")
    ax.stem(levels + 0.08, coexact_dims, linefmt="C1-", markerfmt="C1s", basefmt=" ",
            label="co-exact block, 2(L-1)(L+1)")
    ax.set_xlabel("level L")
    ax.set_ylabel("degeneracy")
    ax.set_title("one-form degeneracies by level")
    ax.legend()
    png = out_dir / "degeneracies.png"
    fig.savefig(png, dpi=150, bbox_inches="tight")
    plt.close(fig)

    buf = io.StringIO()
    buf.write("L,exact_dimension,coexact_dimension\r\n")
    for L, ds, dc in zip(levels, scalar_dims, coexact_dims):
        buf.write(f"{L},{ds},{dc}\r\n")
    csv = out_dir / "degeneracies.csv"
    csv.write_text(buf.getvalue(), newline="")
    return [
        {
            "file": png.name,
            "data": csv.name,
            "title": "degeneracy counts",
            "l_max": l_max,
        }
    ]


def _slice_figure(out_dir: pathlib.Path, n_alpha: int = 48, n_theta: int = 48):
    margin = 1e-3
    alpha = np.linspace(margin, np.pi / 2 - margin, n_alpha)
    theta = np.linspace(0.0, 2 * np.pi, n_theta, endpoint=False)
    aa, tt = np.meshgrid(alpha, theta, indexing="ij")
    p = HopfPoint(aa.ravel(), tt.ravel(), np.zeros(aa.size))
    field = oneform_field("E", _SLICE_INDEX, normalized=True)
    comps = field(p).components.reshape(3, n_alpha, n_theta)

    fig, axes = plt.subplots(1, 3, figsize=(10.5, 3.4), sharey=True)
    labels = ("alpha component", "theta component", "phi component")
    for k, ax in enumerate(axes):
        img = ax.imshow(
            comps[k].real,
            origin="lower",
            extent=(0.0, 2 * np.pi, 0.0, np.pi / 2),
            aspect="auto",
            cmap="RdBu_r",
        )
        ax.set_title(labels[k], fontsize=9)
        ax.set_xlabel("theta")
        fig.colorbar(img, ax=ax, shrink=0.8)
    axes[0].set_ylabel("alpha")
    i = _SLICE_INDEX
    fig.suptitle(
        f"co-exact mode E at (L, mp, mm) = ({i.L}, {i.mp}, {i.mm}), phi = 0 slice",
        fontsize=10,
    )
    png = out_dir / "mode_slice.png"
    fig.savefig(png, dpi=150, bbox_inches="tight")
    plt.close(fig)

    buf = io.StringIO()
    buf.write(
        "alpha,theta,comp0_re,comp0_im,comp1_re,comp1_im,comp2_re,comp2_im\r\n"
    )
    flat = comps.reshape(3, -1)
    for j in range(aa.size):
        cells = [format_float(aa.ravel()[j]), format_float(tt.ravel()[j])]
        for k in range(3):
            cells.append(format_float(flat[k, j].real))
            cells.append(format_float(flat[k, j].imag))
        buf.write(",".join(cells) + "\r\n")
    csv = out_dir / "mode_slice.csv"
    csv.write_text(buf.getvalue(), newline="")
    return [
        {
            "file": png.name,
            "data": csv.name,
            "title": "mode slice",
            "mode": str(_SLICE_INDEX),
        }
    ]


def render_report(out_dir, l_max: int = 4, gram_level: int = 3, seed: int = 0) -> dict:
    """Render all report figures into out_dir and return the manifest."""
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    figures = []
    figures += _gram_figure(out, gram_level)
    figures += _residual_figure(out, l_max, seed)
    figures += _spectrum_figure(out, max(l_max, 6))
    figures += _slice_figure(out)
    manifest = {
        "command": "report",
        "parameters": {"l_max": l_max, "gram_level": gram_level, "seed": seed},
        "figures": figures,
    }
    (out / "report.json").write_text(render_json(manifest))
    return manifest
