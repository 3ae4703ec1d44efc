"""Local moves on diagrams and the move sets defining each theory.

Move kinds
----------
``cR1±  cR2±  cR3`` classical Reidemeister moves; ``vR1±  vR2±  vR3``
their virtual counterparts; ``mR3`` the mixed third move (one classical
crossing, two virtual); ``wOC`` the welded overcrossing move (an over-arc
slides across a virtual crossing; the under-arc version stays forbidden in
every theory).  ``+`` creates crossings, ``-`` removes them.

Matching is face-driven: removing R1 moves come from crossings whose two
passes are adjacent along the circuit (for knot diagrams this is exactly the
empty-kink condition), R2 removals from bigon faces, and the R3 family from
triangular faces whose corner decorations match one of the legal patterns
listed in ``_R3_LEGAL``.  Creating moves are enumerated as decorated
insertions and kept only when the rewritten word is planar and the created
pattern is removable again, which makes every instance reversible by
construction.

Instances are value objects tied to one specific diagram value; applying an
instance to any other diagram raises :class:`StaleInstanceError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from weldkit.diagram import (
    PlanarDiagram,
    ROLE_OVER,
    ROLE_UNDER,
    ROLE_VIRTUAL,
    Token,
    validate_tokens,
)

# Fixed enumeration; the listing order is the deterministic report order.
MOVE_KINDS: tuple[str, ...] = (
    "cR1+", "cR1-", "cR2+", "cR2-", "cR3",
    "vR1+", "vR1-", "vR2+", "vR2-", "vR3",
    "mR3", "wOC",
)

_KIND_INDEX = {k: i for i, k in enumerate(MOVE_KINDS)}

INVERSE_KIND: dict[str, str] = {
    "cR1+": "cR1-", "cR1-": "cR1+",
    "cR2+": "cR2-", "cR2-": "cR2+",
    "vR1+": "vR1-", "vR1-": "vR1+",
    "vR2+": "vR2-", "vR2-": "vR2+",
    "cR3": "cR3", "vR3": "vR3", "mR3": "mR3", "wOC": "wOC",
}

#: total crossing-count change per kind
CROSSING_DELTA: dict[str, int] = {
    "cR1+": 1, "cR1-": -1, "cR2+": 2, "cR2-": -2, "cR3": 0,
    "vR1+": 1, "vR1-": -1, "vR2+": 2, "vR2-": -2, "vR3": 0,
    "mR3": 0, "wOC": 0,
}

CREATING_KINDS = frozenset({"cR1+", "cR2+", "vR1+", "vR2+"})


@dataclass(frozen=True)
class MoveSet:
    """A named theory: the set of kinds generating its equivalence."""

    name: str
    kinds: frozenset[str]

    def __contains__(self, kind: str) -> bool:
        return kind in self.kinds

    def restrict(self, kinds: Iterable[str]) -> "MoveSet":
        return MoveSet(self.name, self.kinds & frozenset(kinds))


CLASSICAL = MoveSet("CLASSICAL", frozenset({"cR1+", "cR1-", "cR2+", "cR2-", "cR3"}))
VIRTUAL = MoveSet(
    "VIRTUAL",
    CLASSICAL.kinds | frozenset({"vR1+", "vR1-", "vR2+", "vR2-", "vR3", "mR3"}),
)
WELDED = MoveSet("WELDED", VIRTUAL.kinds | frozenset({"wOC"}))
ROTATIONAL_WELDED = MoveSet(
    "ROTATIONAL_WELDED", WELDED.kinds - frozenset({"vR1+", "vR1-"})
)

THEORIES: dict[str, MoveSet] = {
    "classical": CLASSICAL,
    "virtual": VIRTUAL,
    "welded": WELDED,
    "rotational-welded": ROTATIONAL_WELDED,
}


class StaleInstanceError(RuntimeError):
    """A move instance was applied to a diagram it does not belong to."""


@dataclass(frozen=True, order=True)
class MoveInstance:
    """A located move on one specific diagram value."""

    kind: str
    site: tuple
    base: tuple[Token, ...]

    def site_token(self) -> str:
        """Compact location hint usable in movie files (no whitespace)."""
        parts = []
        for x in self.site:
            parts.append(x if isinstance(x, str) else str(x))
        return ":".join(parts)

    def sort_key(self) -> tuple:
        return (_KIND_INDEX[self.kind], self.site)


# ---------------------------------------------------------------------------
# face bookkeeping helpers
# ---------------------------------------------------------------------------


def _edge_of_dart(d: int, n: int) -> int:
    """Edge index of a dart; edge e joins out-dart 2e+1 to in-dart 2(e+1)."""
    return d // 2 if d % 2 == 1 else (d // 2 - 1) % n


def _edge_tokens(d: PlanarDiagram, e: int) -> tuple[Token, Token]:
    n = len(d.tokens)
    return d.tokens[e], d.tokens[(e + 1) % n]


def _face_edges_and_corners(
    d: PlanarDiagram, face: Sequence[int]
) -> tuple[list[int], list[int]]:
    """Edges of a face walk plus the corner crossing ids between them."""
    n = len(d.tokens)
    edges = [_edge_of_dart(dd, n) for dd in face]
    _sigma, alpha = d.sigma_alpha
    corners = [d.tokens[alpha[dd] // 2].cid for dd in face]
    return edges, corners


# ---------------------------------------------------------------------------
# removing moves
# ---------------------------------------------------------------------------


def _r1_removals(d: PlanarDiagram) -> list[MoveInstance]:
    n = len(d.tokens)
    seen: dict[int, int] = {}
    for p in range(n):
        q = (p + 1) % n
        if d.tokens[p].cid == d.tokens[q].cid and d.tokens[p].cid not in seen:
            seen[d.tokens[p].cid] = p
    out = []
    for cid, p in seen.items():
        kind = "vR1-" if d.is_virtual_crossing(cid) else "cR1-"
        out.append(MoveInstance(kind, ("kink", p), d.tokens))
    return out


def _r2_removals(d: PlanarDiagram) -> list[MoveInstance]:
    n = len(d.tokens)
    out: dict[tuple, MoveInstance] = {}
    for face in d.trace_faces():
        if len(face) != 2:
            continue
        edges, corners = _face_edges_and_corners(d, face)
        if len(set(edges)) != 2 or len(set(corners)) != 2:
            continue
        roles = [tuple(t.role for t in _edge_tokens(d, e)) for e in edges]
        if all(r == (ROLE_VIRTUAL, ROLE_VIRTUAL) for r in roles):
            kind = "vR2-"
        elif sorted(roles) == [(ROLE_OVER, ROLE_OVER), (ROLE_UNDER, ROLE_UNDER)]:
            kind = "cR2-"
        else:
            continue
        site = ("bigon",) + tuple(sorted(edges))
        out.setdefault(site, MoveInstance(kind, site, d.tokens))
    return list(out.values())


def _classify_triangle(
    d: PlanarDiagram, edges: list[int], corners: list[int]
) -> Optional[str]:
    """Return the move kind applying at a triangular face, if any.

    Legal patterns (corner kinds / edge endpoint roles):

    * ``cR3``  three classical corners, one edge over at both ends
      (which forces the pattern one-over-edge / one-under-edge / one mixed);
    * ``vR3``  three virtual corners;
    * ``mR3``  one classical corner, two virtual;
    * ``wOC``  two classical corners, one virtual, and the edge opposite
      the virtual corner over at both ends (over-arc slide); the under
      version matches no kind.
    """
    virt = [d.is_virtual_crossing(c) for c in corners]
    n_virt = sum(virt)
    roles = [tuple(t.role for t in _edge_tokens(d, e)) for e in edges]
    if n_virt == 0:
        if (ROLE_OVER, ROLE_OVER) in roles:
            return "cR3"
        return None
    if n_virt == 3:
        return "vR3"
    if n_virt == 2:
        return "mR3"
    # one virtual corner: the opposite edge is the one not touching it
    vcid = corners[virt.index(True)]
    for e, r in zip(edges, roles):
        ts = _edge_tokens(d, e)
        if all(t.cid != vcid for t in ts):
            return "wOC" if r == (ROLE_OVER, ROLE_OVER) else None
    return None


def _r3_instances(d: PlanarDiagram) -> list[MoveInstance]:
    out: dict[tuple, MoveInstance] = {}
    for face in d.trace_faces():
        if len(face) != 3:
            continue
        edges, corners = _face_edges_and_corners(d, face)
        if len(set(edges)) != 3 or len(set(corners)) != 3:
            continue
        kind = _classify_triangle(d, edges, corners)
        if kind is None:
            continue
        site = ("tri",) + tuple(sorted(edges))
        out.setdefault((kind,) + site, MoveInstance(kind, site, d.tokens))
    return list(out.values())


# ---------------------------------------------------------------------------
# creating moves
# ---------------------------------------------------------------------------


def _gaps(d: PlanarDiagram) -> range:
    return range(max(1, len(d.tokens)))


def _fresh_ids(d: PlanarDiagram, count: int) -> list[int]:
    start = max((t.cid for t in d.tokens), default=0) + 1
    return list(range(start, start + count))


def _r1_insertions(d: PlanarDiagram, kinds: frozenset[str]) -> list[MoveInstance]:
    out = []
    for g in _gaps(d):
        if "cR1+" in kinds:
            for r1, r2 in ((ROLE_OVER, ROLE_UNDER), (ROLE_UNDER, ROLE_OVER)):
                for s in (1, -1):
                    out.append(
                        MoveInstance("cR1+", ("kink+", g, r1, r2, s), d.tokens)
                    )
        if "vR1+" in kinds:
            for s in (1, -1):
                out.append(
                    MoveInstance(
                        "vR1+", ("kink+", g, ROLE_VIRTUAL, ROLE_VIRTUAL, s), d.tokens
                    )
                )
    return out


def _build_r1_insertion(d: PlanarDiagram, site: tuple) -> list[Token]:
    _tag, g, r1, r2, s = site
    cid = _fresh_ids(d, 1)[0]
    tokens = list(d.tokens)
    tokens[g:g] = [Token(r1, cid, s), Token(r2, cid, s)]
    return tokens


def _r2_candidate_words(
    d: PlanarDiagram, site: tuple
) -> tuple[list[Token], int, int]:
    """Build the candidate word for an R2 insertion site."""
    _tag, g1, g2, ra, rb, s1, s2, variant = site
    c1, c2 = _fresh_ids(d, 2)
    a_part = [Token(ra, c1, s1), Token(ra, c2, s2)]
    if variant == "nest":
        b_part = [Token(rb, c2, s2), Token(rb, c1, s1)]
        tokens = list(d.tokens)
        tokens[g1:g1] = a_part + b_part
        return tokens, c1, c2
    if variant == "fwd":
        b_part = [Token(rb, c1, s1), Token(rb, c2, s2)]
    else:  # rev
        b_part = [Token(rb, c2, s2), Token(rb, c1, s1)]
    tokens = list(d.tokens)
    # insert at the later gap first so indices stay valid
    tokens[g2:g2] = b_part
    tokens[g1:g1] = a_part
    return tokens, c1, c2


def _has_removable_bigon(tokens: Sequence[Token], c1: int, c2: int) -> bool:
    """Does the (valid) word contain a legal R2 bigon with corners c1, c2?"""
    d = PlanarDiagram(tokens)
    for face in d.trace_faces():
        if len(face) != 2:
            continue
        edges, corners = _face_edges_and_corners(d, face)
        if set(corners) != {c1, c2} or len(set(edges)) != 2:
            continue
        roles = [tuple(t.role for t in _edge_tokens(d, e)) for e in edges]
        if all(r == (ROLE_VIRTUAL, ROLE_VIRTUAL) for r in roles):
            return True
        if sorted(roles) == [(ROLE_OVER, ROLE_OVER), (ROLE_UNDER, ROLE_UNDER)]:
            return True
    return False


def _r2_insertions(d: PlanarDiagram, kinds: frozenset[str]) -> list[MoveInstance]:
    want_classical = "cR2+" in kinds
    want_virtual = "vR2+" in kinds
    if not (want_classical or want_virtual):
        return []

    role_pairs = []
    if want_classical:
        role_pairs += [("cR2+", ROLE_OVER, ROLE_UNDER), ("cR2+", ROLE_UNDER, ROLE_OVER)]
    if want_virtual:
        role_pairs.append(("vR2+", ROLE_VIRTUAL, ROLE_VIRTUAL))

    def signs_for(kind: str) -> list[tuple[int, int]]:
        if kind == "cR2+":
            return [(1, -1), (-1, 1)]
        return [(1, -1), (-1, 1), (1, 1), (-1, -1)]

    out = []
    gaps = list(_gaps(d))
    for g1 in gaps:
        for g2 in gaps:
            if g2 < g1:
                continue
            variants = ("nest",) if g1 == g2 else ("fwd", "rev")
            for kind, ra, rb in role_pairs:
                for s1, s2 in signs_for(kind):
                    for variant in variants:
                        site = ("poke", g1, g2, ra, rb, s1, s2, variant)
                        tokens, c1, c2 = _r2_candidate_words(d, site)
                        if validate_tokens(tokens):
                            continue
                        if not _has_removable_bigon(tokens, c1, c2):
                            continue
                        out.append(MoveInstance(kind, site, d.tokens))
    return out


# ---------------------------------------------------------------------------
# application
# ---------------------------------------------------------------------------


def _delete_positions(tokens: Sequence[Token], positions: Iterable[int]) -> list[Token]:
    drop = set(positions)
    return [t for i, t in enumerate(tokens) if i not in drop]


def _apply_r3_swaps(d: PlanarDiagram, edges: Sequence[int]) -> PlanarDiagram:
    """Swap the adjacent token pair across each triangle edge.

    An edge ``n-1`` wraps past the basepoint; the word is first rotated by
    one token (with virtual-sign fixups) so every swap is interior.  At most
    one triangle edge can wrap because face edges are position-disjoint.
    """
    n = len(d.tokens)
    if n - 1 in edges:
        d2 = d.rotated(1)
        return _apply_r3_swaps(d2, [(e - 1) % n for e in edges])
    tokens = list(d.tokens)
    for e in edges:
        tokens[e], tokens[e + 1] = tokens[e + 1], tokens[e]
    return PlanarDiagram(tokens)


def apply_move(d: PlanarDiagram, m: MoveInstance) -> PlanarDiagram:
    """Apply an instance produced by :func:`find_moves` on this diagram."""
    if m.base != d.tokens:
        raise StaleInstanceError(
            "instance belongs to a different diagram value"
        )
    tag = m.site[0]
    n = len(d.tokens)
    if tag == "kink":
        p = m.site[1]
        return PlanarDiagram(_delete_positions(d.tokens, [p, (p + 1) % n]))
    if tag == "kink+":
        return PlanarDiagram(_build_r1_insertion(d, m.site))
    if tag == "bigon":
        e1, e2 = m.site[1], m.site[2]
        drop = [e1, (e1 + 1) % n, e2, (e2 + 1) % n]
        return PlanarDiagram(_delete_positions(d.tokens, drop))
    if tag == "poke":
        tokens, _c1, _c2 = _r2_candidate_words(d, m.site)
        return PlanarDiagram(tokens)
    if tag == "tri":
        return _apply_r3_swaps(d, list(m.site[1:]))
    raise ValueError(f"unknown site tag {tag!r}")


def find_moves(d: PlanarDiagram, s: MoveSet) -> list[MoveInstance]:
    """All sites where a kind of ``s`` applies, ordered by (kind, site)."""
    out: list[MoveInstance] = []
    out.extend(m for m in _r1_removals(d) if m.kind in s.kinds)
    out.extend(m for m in _r2_removals(d) if m.kind in s.kinds)
    out.extend(m for m in _r3_instances(d) if m.kind in s.kinds)
    out.extend(_r1_insertions(d, s.kinds))
    out.extend(_r2_insertions(d, s.kinds))
    out.sort(key=MoveInstance.sort_key)
    return out


def verify_transition(
    d: PlanarDiagram, d2: PlanarDiagram, kind: str, hint: Optional[str] = None
) -> Optional[MoveInstance]:
    """An instance of ``kind`` carrying ``d`` to ``d2``, or None.

    With a location ``hint`` only the matching site is tried.
    """
    target = d2.canonical_code()
    single = MoveSet("single", frozenset({kind}))
    for m in find_moves(d, single):
        if hint is not None and m.site_token() != hint:
            continue
        if apply_move(d, m).canonical_code() == target:
            return m
    return None
