"""Bounded breadth-first search over the move graph.

States are deduplicated by canonical code, so basepoint shifts and crossing
relabelings never expand twice.  A search answers with a move path (always
minimal length), a distinguishing invariant witness, or ``exhausted`` —
which is a resource statement, never a nonequivalence proof.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from weldkit.diagram import PlanarDiagram
from weldkit.fiberwise import Movie
from weldkit.invariants import Witness, distinguish
from weldkit.moves import MoveInstance, MoveSet, apply_move, find_moves


@dataclass(frozen=True)
class SearchLimits:
    max_depth: int = 8
    max_nodes: int = 200_000
    max_crossings: int = 12


@dataclass(frozen=True)
class MovePath:
    """A replayable move sequence between two canonical codes."""

    start: str
    steps: tuple[tuple[str, MoveInstance], ...]
    end: str

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self, d: PlanarDiagram) -> list[PlanarDiagram]:
        """Frames obtained by applying the steps from ``d``."""
        assert d.canonical_code() == self.start
        frames = [d]
        for _kind, inst in self.steps:
            frames.append(apply_move(frames[-1], inst))
        assert frames[-1].canonical_code() == self.end
        return frames

    def to_movie(self, d: PlanarDiagram) -> Movie:
        frames = self.replay(d)
        events = tuple(
            (kind, inst.site_token()) for kind, inst in self.steps
        )
        return Movie(tuple(frames), events)


@dataclass(frozen=True)
class Distinguished:
    witness: Witness


@dataclass(frozen=True)
class Exhausted:
    nodes_expanded: int
    reason: str


SearchResult = Union[MovePath, Distinguished, Exhausted]


def _expand(
    d: PlanarDiagram, s: MoveSet, lim: SearchLimits
) -> list[tuple[MoveInstance, PlanarDiagram]]:
    out = []
    for m in find_moves(d, s):
        child = apply_move(d, m)
        if child.n_crossings > lim.max_crossings:
            continue
        out.append((m, child))
    return out


def bfs_path(
    a: PlanarDiagram,
    b: PlanarDiagram,
    s: MoveSet,
    lim: SearchLimits = SearchLimits(),
    skip_distinguisher: bool = False,
) -> SearchResult:
    """Search for a move path from ``a`` to ``b`` inside the theory ``s``.

    The invariant distinguisher runs first; a witness short-circuits the
    search.  Otherwise breadth-first expansion (deterministic order) runs
    until ``b``'s canonical code is reached or the limits give out.
    """
    if not skip_distinguisher:
        w = distinguish(a, b, s)
        if w is not None:
            return Distinguished(w)
    start, target = a.canonical_code(), b.canonical_code()
    if start == target:
        return MovePath(start, (), target)

    parent: dict[str, tuple[Optional[str], Optional[MoveInstance], PlanarDiagram]] = {
        start: (None, None, a)
    }
    queue: deque[tuple[str, int]] = deque([(start, 0)])
    expanded = 0
    while queue:
        code, depth = queue.popleft()
        if depth >= lim.max_depth:
            continue
        _, _, d = parent[code]
        expanded += 1
        for m, child in _expand(d, s, lim):
            ccode = child.canonical_code()
            if ccode in parent:
                continue
            parent[ccode] = (code, m, child)
            if ccode == target:
                steps = []
                cur = ccode
                while True:
                    pcode, inst, _dd = parent[cur]
                    if pcode is None:
                        break
                    steps.append((inst.kind, inst))
                    cur = pcode
                steps.reverse()
                return MovePath(start, tuple(steps), target)
            if len(parent) >= lim.max_nodes:
                return Exhausted(expanded, "node limit reached")
            queue.append((ccode, depth + 1))
    return Exhausted(expanded, "frontier exhausted within depth limit")


def reachable_set(
    d: PlanarDiagram, s: MoveSet, lim: SearchLimits = SearchLimits()
) -> dict[str, int]:
    """Canonical codes reachable within the limits, with minimal depths."""
    start = d.canonical_code()
    depths = {start: 0}
    frames = {start: d}
    queue: deque[str] = deque([start])
    while queue:
        code = queue.popleft()
        depth = depths[code]
        if depth >= lim.max_depth:
            continue
        for _m, child in _expand(frames[code], s, lim):
            ccode = child.canonical_code()
            if ccode in depths:
                continue
            if len(depths) >= lim.max_nodes:
                return depths
            depths[ccode] = depth + 1
            frames[ccode] = child
            queue.append(ccode)
    return depths
