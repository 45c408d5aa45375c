"""Static route figures rendered with matplotlib.

Figures are drawn on an Agg canvas without touching pyplot state. Output
is byte-stable: PNG and PDF files carry no software or date metadata and
SVG ids use a fixed hash salt.
"""

from __future__ import annotations

import logging
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

from matplotlib.backends.backend_agg import FigureCanvasAgg  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from ...domain.enums.problem_variant import ProblemVariant  # noqa: E402
from ...domain.errors import ConstraintViolationError  # noqa: E402
from ...domain.services.feasibility import first_violation, lifo_stack_trace  # noqa: E402
from ...domain.services.geometry import objective  # noqa: E402
from ...domain.value_objects.instance import Instance  # noqa: E402
from ...domain.value_objects.route import Route  # noqa: E402

logger = logging.getLogger(__name__)

DEPOT_STYLE = {"marker": "s", "color": "black", "s": 90, "label": "depot"}
PICKUP_STYLE = {"marker": "^", "color": "tab:blue", "s": 45, "label": "pickup"}
DELIVERY_STYLE = {"marker": "v", "color": "tab:red", "s": 45, "label": "delivery"}

_METADATA = {
    "png": {"Software": None},
    "svg": {"Date": None, "Creator": None},
    "pdf": {"CreationDate": None, "Creator": None, "Producer": None},
}


def plot_route(
    instance: Instance,
    route: Route,
    out_path: Path | str,
    variant: ProblemVariant | None = None,
    title: str | None = None,
    dpi: int = 120,
) -> Path:
    """Draw the nodes and the directed tour of ``route`` to ``out_path``.

    The file type follows the suffix (png, svg or pdf).

    Raises:
        ConstraintViolationError: If the route is infeasible for the
            variant; the first offending position is reported.
    """
    variant = variant or instance.variant
    position = first_violation(route, variant)
    if position is not None:
        kind = lifo_stack_trace(route).violation_kind if variant.is_lifo else "precedence"
        raise ConstraintViolationError(
            variant.value,
            f"refusing to plot: {kind} violation at node {route.order[position]}",
            position=position,
        )

    out_path = Path(out_path)
    fmt = out_path.suffix.lstrip(".").lower() or "png"
    cost = objective(instance, route)

    figure = Figure(figsize=(5, 5))
    FigureCanvasAgg(figure)
    ax = figure.add_subplot(1, 1, 1)

    coords = instance.coords
    n = instance.n
    ax.scatter(coords[1 : n + 1, 0], coords[1 : n + 1, 1], zorder=3, **PICKUP_STYLE)
    ax.scatter(coords[n + 1 :, 0], coords[n + 1 :, 1], zorder=3, **DELIVERY_STYLE)
    ax.scatter(coords[:1, 0], coords[:1, 1], zorder=4, **DEPOT_STYLE)
    for node, (x, y) in enumerate(coords.tolist()):
        if node:
            label = f"{instance.request_of(node)}{'+' if instance.is_pickup(node) else '-'}"
            ax.annotate(label, (x, y), textcoords="offset points", xytext=(4, 4), fontsize=7)

    path = coords[list(route.order) + [route.order[0]]]
    ax.quiver(
        path[:-1, 0],
        path[:-1, 1],
        path[1:, 0] - path[:-1, 0],
        path[1:, 1] - path[:-1, 1],
        scale_units="xy",
        angles="xy",
        scale=1,
        width=0.004,
        color="dimgray",
        zorder=2,
    )

    shown_cost = instance.denormalize_cost(cost)
    ax.set_title(title or f"{instance.name or 'instance'} ({variant.value}) cost {shown_cost:.4f}")
    ax.set_aspect("equal", adjustable="datalim")
    ax.legend(loc="upper right", fontsize=7)
    figure.tight_layout()

    out_path.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context({"svg.hashsalt": "route-plot"} if fmt == "svg" else {}):
        figure.savefig(out_path, format=fmt, dpi=dpi, metadata=_METADATA.get(fmt))
    logger.info(f"Plotted route with cost {shown_cost:.4f} to {out_path}")
    return out_path
