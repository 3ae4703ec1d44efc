"""The representing surface: 1-handle surgery at every virtual crossing.

Each virtual crossing is removed from the curve and replaced by a handle:
the two strands no longer meet (one runs over the handle), and the surface
genus rises by one per virtual crossing.  Classical crossings stay as honest
degree-4 vertices of the curve.

The handle is encoded as an explicit cell structure so that face tracing of
the resulting combinatorial map is meaningful on the surgered surface.  A
disk around the virtual vertex is replaced by a torus-with-boundary carrying
the rerouted strands::

      ring   4 vertices w0..w3 where the strand ends cross the old disk
             boundary, joined by 4 boundary arcs in the old rotation order;
      base   the first strand runs straight through (arc A between w0, w2);
      tube   the second strand (w1 to w3) crosses two feet circles at new
             vertices p1, p2 and a bridge arc between them; the feet circles
             stay as loop edges.

Every face outside the gadget keeps its boundary walk (a corner at the old
vertex becomes a detour along one ring arc), and the gadget interior
consists of exactly three disk faces (the two base sides and the cut tube),
so the Euler characteristic drops by exactly 2 per virtual crossing no
matter how the ambient faces are shared: ``V - E + F = 2 - 2 g`` with ``g``
the virtual crossing count.  The two symmetric handle attachments give
homeomorphic surfaces; this one is fixed throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from weldkit.diagram import GaussCode, PlanarDiagram, ROLE_VIRTUAL


@dataclass(frozen=True)
class SurfaceCurve:
    """A closed curve carried by a closed oriented surface.

    ``sigma``/``alpha`` encode the full combinatorial map including the
    handle scaffold; ``n_vertices`` counts only the curve's own crossings
    (all classical, all degree 4).
    """

    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    genus: int
    n_vertices: int
    n_scaffold_vertices: int
    n_edges: int
    gauss_code: GaussCode

    def face_count(self) -> int:
        if not self.sigma:
            return 2  # round curve on the sphere: two Jordan sides
        n = len(self.sigma)
        seen = [False] * n
        faces = 0
        for start in range(n):
            if seen[start]:
                continue
            faces += 1
            d = start
            while not seen[d]:
                seen[d] = True
                d = self.sigma[self.alpha[d]]
        return faces

    def euler_summary(self) -> tuple[int, int, int, int]:
        """(V, E, F, chi) of the full map, scaffold included."""
        v = self.n_vertices + self.n_scaffold_vertices
        e = self.n_edges
        f = self.face_count()
        return v, e, f, v - e + f


def representing_surface(d: PlanarDiagram) -> SurfaceCurve:
    """Surger every virtual crossing of ``d`` into a handle.

    The resulting curve is an honest immersion (no virtual decorations);
    its Gauss code is the diagram's underlying Gauss code and its genus is
    the diagram's virtual crossing count.
    """
    tokens = d.tokens
    n = len(tokens)
    if n == 0:
        return SurfaceCurve(
            sigma=(),
            alpha=(),
            genus=0,
            n_vertices=0,
            n_scaffold_vertices=0,
            n_edges=0,
            gauss_code=GaussCode(()),
        )

    base_sigma, base_alpha = d.sigma_alpha
    sigma = list(base_sigma)
    alpha = list(base_alpha)
    rots = d.rotations_by_crossing
    n_edges = n

    def set_cycle(darts: tuple[int, ...]) -> None:
        for a, b in zip(darts, darts[1:] + darts[:1]):
            sigma[a] = b

    for cid, (p, q) in sorted(d.crossing_positions.items()):
        if tokens[p].role != ROLE_VIRTUAL:
            continue
        ip, op_ = 2 * p, 2 * p + 1
        iq, oq = 2 * q, 2 * q + 1
        # stubs in the old counterclockwise rotation order; positions 0/2
        # always belong to the first-visited strand
        stubs = (ip, iq, op_, oq) if rots[cid] > 0 else (ip, oq, op_, iq)

        base = len(sigma)
        sigma.extend([0] * 20)
        alpha.extend([0] * 20)
        # ring arcs R0..R3, each with darts (at w_i, at w_{i+1})
        r = [(base + 2 * i, base + 2 * i + 1) for i in range(4)]
        a_edge = (base + 8, base + 9)        # A: w0 - w2
        b1 = (base + 10, base + 11)          # B1: w1 - p1
        b2 = (base + 12, base + 13)          # B2: p1 - p2
        b3 = (base + 14, base + 15)          # B3: p2 - w3
        f1 = (base + 16, base + 17)          # F1: loop at p1
        f2 = (base + 18, base + 19)          # F2: loop at p2
        for x, y in (*r, a_edge, b1, b2, b3, f1, f2):
            alpha[x], alpha[y] = y, x
        n_edges += 10

        set_cycle((stubs[0], r[0][0], a_edge[0], r[3][1]))   # w0
        set_cycle((stubs[1], r[1][0], b1[0], r[0][1]))       # w1
        set_cycle((stubs[2], r[2][0], a_edge[1], r[1][1]))   # w2
        set_cycle((stubs[3], r[3][0], b3[1], r[2][1]))       # w3
        set_cycle((b1[1], f1[0], b2[0], f1[1]))              # p1
        set_cycle((b2[1], f2[0], b3[0], f2[1]))              # p2

    n_virtual = d.n_virtual
    return SurfaceCurve(
        sigma=tuple(sigma),
        alpha=tuple(alpha),
        genus=n_virtual,
        n_vertices=d.n_classical,
        n_scaffold_vertices=6 * n_virtual,
        n_edges=n_edges,
        gauss_code=d.underlying_gauss_code(),
    )


def surface_genus(sc: SurfaceCurve) -> int:
    """(2 - chi) / 2 from face tracing of the surface map."""
    _v, _e, _f, chi = sc.euler_summary()
    assert (2 - chi) % 2 == 0
    return (2 - chi) // 2
