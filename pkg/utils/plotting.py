"""
Boundary-curve export for the plot subcommand: CSV polylines (theta, re, im)
and an optional single-file SVG overlay.

Targets:
    strip           the strip lines, the inscribed disk and tau(|z| = r)
    tau-in-<class>  tau(|z| = r) inside psi(D), r the radius of S*_tau in the class
    <class>-in-tau  psi(|z| = r) inside the strip, r the S*_tau-radius of the class
"""
import logging
import os
from typing import Any, Dict, List, Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

from core.radius import RADIUS_IN_CLASSES, TAU_RADIUS_CLASSES, radius_in, tau_radius_of  # noqa: E402
from core.strip_domain import OMEGA_TAU, boundary_curves, get_class, tau_eval  # noqa: E402

logger = logging.getLogger(__name__)

SVG_PIXELS = 1000
SVG_DPI = 72
STRIP_R = 0.999
CURVE_ANGLES = 720


def plot_targets() -> List[str]:
    return ["strip"] + [f"tau-in-{name}" for name in RADIUS_IN_CLASSES] + [f"{name}-in-tau" for name in TAU_RADIUS_CLASSES]


def resolve_target(which: str, r: Optional[float] = None) -> Dict[str, Any]:
    """
    Curves and contact point of a plot target.

    Args:
        which: A name from :func:`plot_targets`
        r: Radius override; defaults to the sharp radius of the target

    Returns:
        Dictionary with the target, radius, curves and contact point

    Raises:
        ValueError: unknown target
    """
    if which == "strip":
        radius = STRIP_R if r is None else r
        return {"target": which, "r": radius, "curves": boundary_curves(radius, angles=CURVE_ANGLES), "contact": None}

    if which.startswith("tau-in-"):
        name = which[len("tau-in-"):]
        if name not in RADIUS_IN_CLASSES:
            raise ValueError(f"unknown plot target {which!r}; known: {plot_targets()}")
        radius = radius_in(name).numeric if r is None else r
        curves = boundary_curves(radius, [name], angles=CURVE_ANGLES)
        return {"target": which, "r": radius, "curves": curves, "contact": tau_eval(-radius)}

    if which.endswith("-in-tau"):
        name = which[: -len("-in-tau")]
        if name not in TAU_RADIUS_CLASSES:
            raise ValueError(f"unknown plot target {which!r}; known: {plot_targets()}")
        radius = tau_radius_of(name).numeric if r is None else r
        curves = boundary_curves(STRIP_R, [name], angles=CURVE_ANGLES, class_radius=radius)
        descriptor = get_class(name)
        return {
            "target": which,
            "r": radius,
            "curves": curves,
            "contact": complex(descriptor.psi_eval(descriptor.contact_sign * radius)),
        }

    raise ValueError(f"unknown plot target {which!r}; known: {plot_targets()}")


def write_csv(curves: Dict[str, np.ndarray], out_dir: str, prefix: str) -> List[str]:
    """One CSV per curve with columns theta, re, im."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for name, values in curves.items():
        path = os.path.join(out_dir, f"{prefix}_{name}.csv")
        frame = pd.DataFrame(values, columns=["theta", "re", "im"])
        frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
        paths.append(path)
    return paths


def write_svg(plot: Dict[str, Any], path: str) -> str:
    """Overlay every curve of a target on a 1000 x 1000 SVG with axis lines."""
    size = SVG_PIXELS / SVG_DPI
    figure = plt.figure(figsize=(size, size), dpi=SVG_DPI)
    axes = figure.add_subplot(111)
    try:
        axes.set_aspect("equal")
        for name, values in plot["curves"].items():
            style = "--" if name.startswith("strip") else "-"
            axes.plot(values[:, 1], values[:, 2], style, lw=1.0, label=name)
        if plot["contact"] is not None:
            contact = plot["contact"]
            axes.plot([contact.real], [contact.imag], "o", color="black", label="contact")
        axes.axhline(0.0, color="grey", lw=0.5)
        axes.axvline(0.0, color="grey", lw=0.5)
        axes.set_xlim(OMEGA_TAU.left - 0.5, OMEGA_TAU.right + 0.5)
        axes.set_ylim(-2.0, 2.0)
        axes.set_title(f"{plot['target']} (r = {plot['r']:.6f})")
        axes.legend(loc="upper right", fontsize="small")
        figure.savefig(path, format="svg")
    finally:
        plt.close(figure)
    return path


def export_plot(which: str, out_dir: str, r: Optional[float] = None, svg: bool = True) -> Dict[str, Any]:
    """
    Resolve a target and write its CSV polylines and, optionally, the SVG.

    Returns:
        Dictionary with the radius, contact point and written paths
    """
    plot = resolve_target(which, r)
    paths = write_csv(plot["curves"], out_dir, which)
    if svg:
        paths.append(write_svg(plot, os.path.join(out_dir, f"{which}.svg")))
    logger.info("plot %s: r=%.12g, %d files in %s", which, plot["r"], len(paths), out_dir)
    return {"target": which, "r": plot["r"], "contact": plot["contact"], "paths": paths}
