"""Named benchmark presets: one command per standard experiment.

Each preset is an argv fragment for the main parser, so `preset NAME`
behaves exactly like typing the expanded command.  Output filenames are
fixed by the runners; `preset --out DIR` only chooses the directory.
"""

from __future__ import annotations

__all__ = ["PRESETS"]


def _sweep(lo: int, hi: int, step: int) -> str:
    return ",".join(str(n) for n in range(lo, hi + 1, step))


PRESETS: dict = {
    "lorentz-a1-md": (
        "pointwise transform of the narrow rational bump, split method, N=50",
        ["transform", "--example", "lorentz_a1", "--method", "md", "--n", "50"],
    ),
    "lorentz-a2-md": (
        "error vs N for the wide rational bump, split method",
        ["convergence", "--example", "lorentz_a2", "--method", "md",
         "--n-list", _sweep(10, 100, 10)],
    ),
    "quartic-md": (
        "error vs N for the quartic rational, split method",
        ["convergence", "--example", "quartic", "--method", "md",
         "--n-list", _sweep(10, 60, 10)],
    ),
    "lorentz-a2-coeffs": (
        "per-domain Chebyshev coefficient decay for the wide rational bump",
        ["coeffs", "--example", "lorentz_a2", "--method", "md", "--n", "80"],
    ),
    "lorentz-a2-global": (
        "error vs N_F for the wide rational bump, global rational basis",
        ["convergence", "--example", "lorentz_a2", "--method", "global",
         "--n-list", _sweep(10, 120, 10)],
    ),
    "quartic-global": (
        "error vs N_F for the quartic rational, global rational basis",
        ["convergence", "--example", "quartic", "--method", "global",
         "--n-list", _sweep(10, 120, 10)],
    ),
    "piecewise-cont-md": (
        "error vs N for the matched two-branch rational, split method",
        ["convergence", "--example", "piecewise_cont", "--method", "md",
         "--n-list", _sweep(20, 140, 20)],
    ),
    "piecewise-cont-global": (
        "pointwise transform of the matched two-branch rational, global method",
        ["transform", "--example", "piecewise_cont", "--method", "global",
         "--nf", "1000"],
    ),
    "piecewise-disc-md": (
        "pointwise transform of the jumping two-branch rational, split method",
        ["transform", "--example", "piecewise_disc", "--method", "md", "--n", "120"],
    ),
    "piecewise-disc-coeffs": (
        "global coefficient decay for the jumping two-branch rational",
        ["coeffs", "--example", "piecewise_disc", "--method", "global",
         "--nf", "2048"],
    ),
    "gauss-md": (
        "error vs N for the Gaussian, split method",
        ["convergence", "--example", "gauss", "--method", "md",
         "--n-list", _sweep(20, 120, 20)],
    ),
    "gauss-global": (
        "error vs N_F for the Gaussian, global rational basis",
        ["convergence", "--example", "gauss", "--method", "global",
         "--n-list", _sweep(40, 240, 40)],
    ),
    "sech-md": (
        "error vs N for sech, split method (slow decay needs many points)",
        ["convergence", "--example", "sech", "--method", "md",
         "--n-list", _sweep(200, 1000, 200)],
    ),
    "sech-global": (
        "error vs N_F for sech, global rational basis",
        ["convergence", "--example", "sech", "--method", "global",
         "--n-list", _sweep(100, 800, 100)],
    ),
    "absexp-md": (
        "error vs N for exp(-|y|) on the split line, split method",
        ["convergence", "--example", "abs_exp", "--method", "md",
         "--n-list", _sweep(20, 100, 20)],
    ),
    "osc-quadratic-contour": (
        "oscillatory rational via the deformed path, quadratic envelope",
        ["transform", "--example", "osc_quadratic", "--method", "contour"],
    ),
    "osc-quartic-contour": (
        "oscillatory rational via the deformed path, quartic envelope",
        ["transform", "--example", "osc_quartic", "--method", "contour"],
    ),
    "osc-quadratic-global": (
        "oscillatory rational with the global method (slow convergence)",
        ["transform", "--example", "osc_quadratic", "--method", "global",
         "--nf", "1000"],
    ),
    "osc-quartic-global": (
        "oscillatory quartic rational with the global method",
        ["transform", "--example", "osc_quartic", "--method", "global",
         "--nf", "1000"],
    ),
    "soliton-m2": (
        "quadratic-nonlinearity solitary wave, N=100, checked against the closed form",
        ["soliton", "--m", "2", "--n", "100"],
    ),
    "soliton-m3": (
        "cubic-nonlinearity solitary wave, N=300, relaxed Newton",
        ["soliton", "--m", "3", "--n", "300", "--mu", "0.5"],
    ),
    "soliton-m4": (
        "quartic-nonlinearity solitary wave, N=300, relaxed Newton",
        ["soliton", "--m", "4", "--n", "300", "--mu", "0.5"],
    ),
}
