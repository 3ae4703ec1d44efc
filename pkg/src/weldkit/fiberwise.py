"""Fiber-circle census, movie certificates, and weak fiberwise equivalence.

Over each point of a diagram the tube construction places fiber circles:
none off the diagram, a single circle over a regular point, a nested pair
over a classical crossing (inner circle = lower strand), and a disjoint pair
over a virtual crossing.  The census of those section types is the
combinatorial shadow used here.

A movie is a sequence of diagrams joined by move events; it certifies an
equivalence when every event kind belongs to the chosen theory and every
adjacent frame pair is connected by an instance of the stated kind.  Under
the rotational-welded theory a ``vR1±`` event is rejected outright
(``move-kind-not-in-theory``): fiberwise movies admit no virtual branch
point, so virtual kinks can never be created or removed along one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from weldkit.diagram import PlanarDiagram
from weldkit.moves import MoveSet, verify_transition


class FiberSection(enum.Enum):
    """Section type of the fiber over one stratum of the base plane."""

    EMPTY = "Empty"
    SINGLE_CIRCLE = "SingleCircle"
    NESTED_PAIR = "NestedPair"
    DISJOINT_PAIR = "DisjointPair"


@dataclass(frozen=True)
class FiberCensus:
    """Counts of fiber sections over each stratum of a diagram."""

    sections: dict[str, FiberSection]
    nested_pairs: int
    disjoint_pairs: int
    regular_arcs: int


def fiber_census(d: PlanarDiagram) -> FiberCensus:
    """Census of the fiber circles over the strata of ``d``.

    Nested pairs sit exactly over classical crossings and disjoint pairs
    exactly over virtual crossings, so the counts are the two crossing
    tallies; every edge is a stratum of regular points with a single circle.
    """
    return FiberCensus(
        sections={
            "off-diagram": FiberSection.EMPTY,
            "regular point": FiberSection.SINGLE_CIRCLE,
            "classical crossing": FiberSection.NESTED_PAIR,
            "virtual crossing": FiberSection.DISJOINT_PAIR,
        },
        nested_pairs=d.n_classical,
        disjoint_pairs=d.n_virtual,
        regular_arcs=len(d.tokens),
    )


@dataclass(frozen=True)
class Movie:
    """n+1 diagrams joined by n (kind, optional location hint) events."""

    diagrams: tuple[PlanarDiagram, ...]
    events: tuple[tuple[str, Optional[str]], ...]

    def __post_init__(self) -> None:
        if len(self.diagrams) != len(self.events) + 1:
            raise ValueError(
                f"{len(self.diagrams)} diagrams need "
                f"{len(self.diagrams) - 1} events, got {len(self.events)}"
            )

    def __len__(self) -> int:
        return len(self.events)


REASON_KIND = "move-kind-not-in-theory"
REASON_ILLEGAL = "move-not-legal-between-frames"


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    frame: Optional[int] = None
    reason: Optional[str] = None

    def summary(self) -> str:
        if self.accepted:
            return "ACCEPT"
        return f"REJECT frame={self.frame} reason={self.reason}"


def check_movie(m: Movie, s: MoveSet) -> Verdict:
    """Validate a movie frame by frame against the theory ``s``.

    Fails fast with the first violating frame index: an event kind outside
    the theory, or an adjacent diagram pair not connected by any instance of
    the stated kind (the location hint, when present, pins the site).
    """
    for i, (kind, hint) in enumerate(m.events):
        if kind not in s.kinds:
            return Verdict(False, frame=i, reason=REASON_KIND)
        found = verify_transition(m.diagrams[i], m.diagrams[i + 1], kind, hint)
        if found is None and hint is not None:
            # a stale or foreign hint must not turn a good movie bad
            found = verify_transition(m.diagrams[i], m.diagrams[i + 1], kind)
        if found is None:
            return Verdict(False, frame=i, reason=REASON_ILLEGAL)
    return Verdict(True)


def weak_fiberwise_equivalent(a: PlanarDiagram, b: PlanarDiagram) -> bool:
    """Decide weak fiberwise equivalence (= virtual parity equality).

    A compact fibered surface joining the two diagrams exists precisely when
    their virtual crossing counts agree mod 2; the same predicate answers the
    nonorientable variant.
    """
    return a.n_virtual % 2 == b.n_virtual % 2
