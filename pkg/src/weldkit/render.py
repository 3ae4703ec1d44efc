"""Static SVG rendering of diagrams.

The drawing is planar-faithful: since every admitted diagram's map traces to
genus 0, a straight-line embedding exists and is computed by a Tutte
barycentric layout (edges subdivided so the graph is simple, the face left
of the basepoint dart pinned as the convex outer boundary).  Classical
crossings break the under-strand; virtual crossings carry a small circle
marker.  The layout depends only on the word, so output is byte-stable.
"""

from __future__ import annotations

import math

import numpy as np

from weldkit.diagram import PlanarDiagram, ROLE_UNDER, ROLE_VIRTUAL

_SIZE = 400.0
_MARGIN = 40.0


def _layout(d: PlanarDiagram) -> tuple[list[tuple[float, float]], list[list[int]]]:
    """Positions for crossings and per-edge polyline support points.

    Nodes: crossing vertices 0..V-1 (by word order of first visit), then two
    subdivision points per edge.  Returns (positions, per-edge node chains).
    """
    n = len(d.tokens)
    cids = sorted(d.crossing_positions)
    cindex = {cid: i for i, cid in enumerate(cids)}
    v = len(cids)
    # nodes: crossings, then 2 subdivision nodes per edge
    total = v + 2 * n
    chains = []
    adj: list[list[int]] = [[] for _ in range(total)]
    for e in range(n):
        a = cindex[d.tokens[e].cid]
        b = cindex[d.tokens[(e + 1) % n].cid]
        s1, s2 = v + 2 * e, v + 2 * e + 1
        chains.append([a, s1, s2, b])
        for x, y in ((a, s1), (s1, s2), (s2, b)):
            adj[x].append(y)
            adj[y].append(x)

    # outer face: the face left of the basepoint dart = the face containing
    # the out-dart of pass 0 under the tracing convention
    faces = d.trace_faces()
    outer = None
    for f in faces:
        if 1 in f:  # out-dart of pass 0
            outer = f
            break
    assert outer is not None

    # boundary cycle of subdivision/crossing nodes along the outer face
    boundary: list[int] = []
    for dart in outer:
        e = dart // 2 if dart % 2 == 1 else (dart // 2 - 1) % n
        s1, s2 = v + 2 * e, v + 2 * e + 1
        endpoint = cindex[d.tokens[e].cid]
        if dart % 2 == 1:  # walking the edge forward
            boundary += [endpoint, s1, s2]
        else:
            boundary += [cindex[d.tokens[(e + 1) % n].cid], s2, s1]

    pos = np.zeros((total, 2))
    fixed = np.zeros(total, dtype=bool)
    k = len(boundary)
    for i, node in enumerate(boundary):
        ang = 2.0 * math.pi * i / k
        if not fixed[node]:
            pos[node] = (math.cos(ang), math.sin(ang))
            fixed[node] = True

    free = [i for i in range(total) if not fixed[i]]
    if free:
        index = {node: i for i, node in enumerate(free)}
        a_mat = np.zeros((len(free), len(free)))
        rhs = np.zeros((len(free), 2))
        for i, node in enumerate(free):
            deg = len(adj[node])
            a_mat[i, i] = deg
            for nb in adj[node]:
                if fixed[nb]:
                    rhs[i] += pos[nb]
                else:
                    a_mat[i, index[nb]] -= 1.0
        sol = np.linalg.solve(a_mat, rhs)
        for i, node in enumerate(free):
            pos[node] = sol[i]

    lo, hi = pos.min(), pos.max()
    span = max(hi - lo, 1e-9)
    scaled = (pos - lo) / span * (_SIZE - 2 * _MARGIN) + _MARGIN
    return [(float(x), float(y)) for x, y in scaled], chains


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(d: PlanarDiagram) -> str:
    """An SVG drawing of the diagram with the standard crossing conventions."""
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(_SIZE)}" '
        f'height="{int(_SIZE)}" viewBox="0 0 {int(_SIZE)} {int(_SIZE)}">',
        f'<rect width="{int(_SIZE)}" height="{int(_SIZE)}" fill="white"/>',
    ]
    if not d.tokens:
        c = _SIZE / 2
        r = _SIZE / 2 - _MARGIN
        out.append(
            f'<circle cx="{_fmt(c)}" cy="{_fmt(c)}" r="{_fmt(r)}" '
            'fill="none" stroke="black" stroke-width="2"/>'
        )
        out.append("</svg>")
        return "\n".join(out) + "\n"

    pos, chains = _layout(d)
    n = len(d.tokens)
    cids = sorted(d.crossing_positions)
    cindex = {cid: i for i, cid in enumerate(cids)}

    gap = 9.0  # under-strand break radius at classical crossings

    def trimmed(chain: list[int], start_break: bool, end_break: bool) -> list[tuple[float, float]]:
        pts = [pos[i] for i in chain]
        if start_break:
            pts[0] = _toward(pts[0], pts[1], gap)
        if end_break:
            pts[-1] = _toward(pts[-1], pts[-2], gap)
        return pts

    for e, chain in enumerate(chains):
        t_out = d.tokens[e]
        t_in = d.tokens[(e + 1) % n]
        pts = trimmed(chain, t_out.role == ROLE_UNDER, t_in.role == ROLE_UNDER)
        path = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts)
        out.append(f'<path d="{path}" fill="none" stroke="black" stroke-width="2"/>')

    for cid in cids:
        x, y = pos[cindex[cid]]
        if d.is_virtual_crossing(cid):
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="6" '
                'fill="white" stroke="black" stroke-width="1.5"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _toward(a: tuple[float, float], b: tuple[float, float], dist: float) -> tuple[float, float]:
    dx, dy = b[0] - a[0], b[1] - a[1]
    norm = math.hypot(dx, dy)
    if norm < 1e-9:
        return a
    f = min(dist / norm, 0.9)
    return (a[0] + dx * f, a[1] + dy * f)
