"""Plain-text instance format and the benchmark loader.

One record per line; ``#`` starts a comment::

    PDP <n> [variant]
    SCALE <scale> <offset_x> <offset_y>     (optional)
    <id> <x> <y>                             (one per node)
    PAIR <pickup_id> <delivery_id>           (optional, one per request)

Without ``PAIR`` lines the ids must be ``0..2n`` and pairing follows the
index convention (pickup ``i``, delivery ``i + n``). With them, the k-th
pair becomes request k and the node not named by any pair is the depot.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ...domain.enums.problem_variant import ProblemVariant
from ...domain.errors import InstanceFormatError, InstanceParseError
from ...domain.services.geometry import normalize_coordinates
from ...domain.value_objects.instance import Instance

logger = logging.getLogger(__name__)


@dataclass
class RawInstanceFile:
    """Records of an instance file before pairing and normalization."""

    path: str
    n: int
    variant: ProblemVariant
    nodes: dict[int, tuple[float, float]] = field(default_factory=dict)
    pairs: list[tuple[int, int]] = field(default_factory=list)
    scale: float = 1.0
    offset: tuple[float, float] = (0.0, 0.0)


def _parse_number(token: str, kind: type, path: str, line_number: int) -> float | int:
    try:
        return kind(token)
    except ValueError:
        raise InstanceParseError(path, line_number, f"expected {kind.__name__}, got '{token}'") from None


def parse_instance_text(text: str, path: str = "<string>") -> RawInstanceFile:
    """Parse the records of an instance file.

    Raises:
        InstanceParseError: On a malformed line (reports its 1-based number).
        InstanceFormatError: On duplicate node ids or pair members.
    """
    raw: RawInstanceFile | None = None
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        keyword = tokens[0].upper()

        if raw is None:
            if keyword != "PDP" or len(tokens) not in (2, 3):
                raise InstanceParseError(path, line_number, "expected header 'PDP <n> [variant]'")
            n = int(_parse_number(tokens[1], int, path, line_number))
            if n < 1:
                raise InstanceParseError(path, line_number, f"request count must be positive, got {n}")
            try:
                variant = ProblemVariant.from_string(tokens[2]) if len(tokens) == 3 else ProblemVariant.PDTSP
            except ValueError as e:
                raise InstanceParseError(path, line_number, str(e)) from e
            raw = RawInstanceFile(path=path, n=n, variant=variant)
            continue

        if keyword == "PAIR":
            if len(tokens) != 3:
                raise InstanceParseError(path, line_number, "expected 'PAIR <pickup> <delivery>'")
            pickup = int(_parse_number(tokens[1], int, path, line_number))
            delivery = int(_parse_number(tokens[2], int, path, line_number))
            raw.pairs.append((pickup, delivery))
        elif keyword == "SCALE":
            if len(tokens) != 4:
                raise InstanceParseError(path, line_number, "expected 'SCALE <scale> <offset_x> <offset_y>'")
            raw.scale = float(_parse_number(tokens[1], float, path, line_number))
            raw.offset = (
                float(_parse_number(tokens[2], float, path, line_number)),
                float(_parse_number(tokens[3], float, path, line_number)),
            )
        else:
            if len(tokens) != 3:
                raise InstanceParseError(path, line_number, "expected '<id> <x> <y>'")
            node_id = int(_parse_number(tokens[0], int, path, line_number))
            x = float(_parse_number(tokens[1], float, path, line_number))
            y = float(_parse_number(tokens[2], float, path, line_number))
            if node_id in raw.nodes:
                raise InstanceFormatError(path, f"duplicate node id {node_id} on line {line_number}")
            raw.nodes[node_id] = (x, y)

    if raw is None:
        raise InstanceParseError(path, 1, "file holds no header")
    return raw


def ordered_coordinates(raw: RawInstanceFile) -> np.ndarray:
    """Arrange raw node records into depot, pickups, deliveries order.

    Raises:
        InstanceFormatError: If the ids or pairs do not describe exactly
            ``n`` requests and one depot.
    """
    n, path = raw.n, raw.path
    if len(raw.nodes) != 2 * n + 1:
        raise InstanceFormatError(path, f"header announces {2 * n + 1} nodes, file holds {len(raw.nodes)}")

    if not raw.pairs:
        if set(raw.nodes) != set(range(2 * n + 1)):
            raise InstanceFormatError(path, f"node ids must be 0..{2 * n} when no PAIR lines are given")
        return np.array([raw.nodes[i] for i in range(2 * n + 1)], dtype=np.float64)

    if len(raw.pairs) != n:
        raise InstanceFormatError(path, f"expected {n} PAIR lines, got {len(raw.pairs)}")
    named = [node for pair in raw.pairs for node in pair]
    if len(set(named)) != len(named):
        raise InstanceFormatError(path, "a node appears in more than one PAIR line")
    unknown = sorted(set(named) - set(raw.nodes))
    if unknown:
        raise InstanceFormatError(path, f"PAIR lines name unknown node ids {unknown}")
    (depot,) = set(raw.nodes) - set(named)

    coords = np.empty((2 * n + 1, 2), dtype=np.float64)
    coords[0] = raw.nodes[depot]
    for k, (pickup, delivery) in enumerate(raw.pairs, start=1):
        coords[k] = raw.nodes[pickup]
        coords[k + n] = raw.nodes[delivery]
    return coords


def format_instance(instance: Instance) -> str:
    """Serialize an instance; floats use ``repr`` so they read back exactly."""
    lines = [f"PDP {instance.n} {instance.variant.value}"]
    if instance.name:
        lines.insert(0, f"# {instance.name}")
    if instance.scale != 1.0 or tuple(instance.offset) != (0.0, 0.0):
        lines.append(f"SCALE {instance.scale!r} {instance.offset[0]!r} {instance.offset[1]!r}")
    for node, (x, y) in enumerate(instance.coords.tolist()):
        lines.append(f"{node} {x!r} {y!r}")
    return "\n".join(lines) + "\n"


def read_instance_file(path: Path, variant: ProblemVariant | None = None) -> Instance:
    """Read an instance file as stored, without re-normalizing."""
    raw = parse_instance_text(Path(path).read_text(encoding="utf-8"), str(path))
    return Instance(
        n=raw.n,
        coords=ordered_coordinates(raw),
        variant=variant or raw.variant,
        name=Path(path).stem,
        scale=raw.scale,
        offset=raw.offset,
    )


def load_benchmark_instance(path: Path | str, variant: ProblemVariant | None = None) -> Instance:
    """Load a benchmark file and normalize it into the unit square.

    One isotropic scale is applied to both axes after moving the bounding
    box corner to the origin, so gaps on normalized costs equal gaps on
    raw costs. ``Instance.denormalize_cost`` maps costs back.

    Raises:
        InstanceParseError: On malformed lines, with the line number.
        InstanceFormatError: On duplicate ids or inconsistent pairing.
    """
    path = Path(path)
    raw = parse_instance_text(path.read_text(encoding="utf-8"), str(path))
    coords, scale, offset = normalize_coordinates(ordered_coordinates(raw))
    logger.debug(f"Normalized {path.name}: n={raw.n}, scale={scale:.6g}, offset={offset}")
    return Instance(
        n=raw.n,
        coords=coords,
        variant=variant or raw.variant,
        name=path.stem,
        scale=scale,
        offset=offset,
    )
