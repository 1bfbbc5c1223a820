"""Static vector-graphics figures accompanying the CSV reports.

Every helper takes already-computed arrays, renders one PDF next to the
delimited output, and returns the figure path.  The CSV is the
contract; these plots are a convenience view of the same data.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

__all__ = [
    "save_transform_plot",
    "save_convergence_plot",
    "save_coeffs_plot",
    "save_soliton_plot",
]


def _finite_mask(*arrays):
    m = np.ones(len(arrays[0]), dtype=bool)
    for a in arrays:
        m &= np.isfinite(np.asarray(a, dtype=float))
    return m


def save_transform_plot(path, x, numeric, exact=None, title: str = "") -> str:
    x = np.asarray(x, dtype=float)
    numeric = np.asarray(numeric, dtype=float)
    if exact is not None:
        exact = np.asarray(exact, dtype=float)
        fig, (ax, axe) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
    else:
        fig, ax = plt.subplots(figsize=(7, 4))
        axe = None
    m = _finite_mask(x, numeric)
    ax.plot(x[m], numeric[m], lw=1.0, label="numeric")
    if exact is not None:
        me = _finite_mask(x, exact)
        ax.plot(x[me], exact[me], "--", lw=1.0, label="exact")
        err = np.abs(numeric - exact)
        mm = _finite_mask(x, err) & (err > 0)
        axe.semilogy(x[mm], err[mm], ".", ms=2.5)
        axe.set_ylabel("abs err")
        axe.set_xlabel("x")
        axe.grid(True, alpha=0.3)
    else:
        ax.set_xlabel("x")
    ax.set_ylabel("H f")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return str(path)


def save_convergence_plot(path, n_values, error_columns: dict, title: str = "") -> str:
    fig, ax = plt.subplots(figsize=(6, 4))
    n_values = np.asarray(n_values, dtype=float)
    for label, errs in error_columns.items():
        errs = np.asarray(errs, dtype=float)
        m = _finite_mask(n_values, errs) & (errs > 0)
        ax.semilogy(n_values[m], errs[m], "o-", ms=3, lw=1.0, label=label)
    ax.set_xlabel("N")
    ax.set_ylabel("max error")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return str(path)


def save_coeffs_plot(path, series: list, title: str = "") -> str:
    """series: list of (label, abs-coefficient array) pairs."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, coeffs in series:
        c = np.asarray(coeffs, dtype=float)
        n = np.arange(c.size)
        m = c > 0
        ax.semilogy(n[m], c[m], ".", ms=3, label=label)
    ax.set_xlabel("n")
    ax.set_ylabel("|coefficient|")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return str(path)


def save_soliton_plot(path, profile, title: str = "") -> str:
    fig, (ax, axc) = plt.subplots(1, 2, figsize=(9, 3.6))
    xs = np.linspace(-8.0, 8.0, 801)
    ax.plot(xs, profile.eval_Q(xs), lw=1.2)
    ax.set_xlabel("position")
    ax.set_ylabel("Q")
    ax.grid(True, alpha=0.3)
    for label, c in (("bounded block", profile.coeffs_Q), ("tail block", profile.coeffs_v)):
        c = np.abs(c)
        n = np.arange(c.size)
        m = c > 0
        axc.semilogy(n[m], c[m], ".", ms=3, label=label)
    axc.set_xlabel("n")
    axc.set_ylabel("|coefficient|")
    axc.grid(True, which="both", alpha=0.3)
    axc.legend(fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return str(path)
