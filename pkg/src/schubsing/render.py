"""ASCII diagrams of permutations, rows top-down.

Legend: ``*`` diagram point, ``.`` empty cell, ``@`` highlighted point
(pattern pivot or chain point), ``#`` zone cell, ``%`` point inside the zone.
"""

from __future__ import annotations

from .exceptions import PreconditionError
from .patterns import minimal_configurations, smoothness_witness, surgery
from .perm import Permutation

__all__ = ["render", "RENDER_CAP", "HIGHLIGHTS"]

RENDER_CAP = 30
HIGHLIGHTS = ("none", "patterns", "configs", "zone")


def _grid(w: Permutation, marked: set[int], zone: set[tuple[int, int]]) -> list[str]:
    n = w.n
    lines = []
    for p in range(1, n + 1):
        row = []
        for q in range(1, n + 1):
            point = w(p) == q
            if point and p in marked:
                ch = "@"
            elif point:
                ch = "%" if (p, q) in zone else "*"
            else:
                ch = "#" if (p, q) in zone else "."
            row.append(ch)
        lines.append(" ".join(row))
    return lines


def render(w: Permutation, highlight: str = "none") -> str:
    """Diagram of ``w``; one block per configuration for ``configs`` / ``zone``."""
    if w.n > RENDER_CAP:
        raise PreconditionError(f"render is limited to n <= {RENDER_CAP}")
    if highlight not in HIGHLIGHTS:
        raise ValueError(f"highlight must be one of {HIGHLIGHTS}")
    if highlight == "none":
        return "\n".join(_grid(w, set(), set()))
    if highlight == "patterns":
        occ = smoothness_witness(w)
        marked = set(occ.positions) if occ else set()
        head = f"# {occ}" if occ else "# no 4231/3412 occurrence"
        return "\n".join([head] + _grid(w, marked, set()))
    blocks = []
    for cfg in minimal_configurations(w):
        if highlight == "configs":
            marked = set(cfg.pivots.positions) | set(cfg.nw_chain) | set(cfg.se_chain) | set(cfg.central_chain)
            zone = set()
        else:
            marked, zone = set(), set(cfg.zone.cells)
        head = f"# {cfg.kind} pivots {','.join(map(str, cfg.pivots.positions))} -> {surgery(w, cfg).u}"
        blocks.append("\n".join([head] + _grid(w, marked, zone)))
    if not blocks:
        return "\n".join(["# no minimal configuration"] + _grid(w, set(), set()))
    return "\n\n".join(blocks)
