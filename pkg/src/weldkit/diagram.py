"""Oriented virtual 1-knot diagrams as planar combinatorial maps.

A diagram is stored as its signed extended Gauss word: the cyclic sequence of
crossing passes read along the knot from a basepoint.  Each token is
``(role, id, sign)`` with role ``O``/``U`` for the two passes of a classical
crossing and ``V`` for both passes of a virtual crossing.  The word determines
a 4-valent combinatorial map (vertices = crossings, cyclic dart order at each
vertex derived from the token data); face tracing of that map recovers the
surface the diagram lives on, and admission requires genus 0.

Dart conventions
----------------
Pass ``j`` (the j-th token) contributes an in-dart ``2j`` and an out-dart
``2j+1``.  The edge involution pairs ``out(j)`` with ``in(j+1)`` along the
circuit.  At a crossing whose passes sit at word positions ``p < q``, the
counterclockwise dart order is

* rotation ``+1``:  ``(in_p, in_q, out_p, out_q)``
* rotation ``-1``:  ``(in_p, out_q, out_p, in_q)``

where the rotation of a classical crossing is ``sign`` if the first-visited
pass is the over-pass and ``-sign`` otherwise, and the rotation of a virtual
crossing is its token sign directly.  This is the unique convention (up to a
global reflection, fixed here by calibration) under which the standard
positive trefoil word ``O1+ U2+ O3+ U1+ O2+ U3+`` traces to five faces at
genus 0.

Because a virtual token's sign encodes rotation relative to the *current*
first/second visit order, shifting the basepoint past one pass of a virtual
crossing must flip that crossing's stored sign; :meth:`PlanarDiagram.rotated`
performs the adjustment so that every rotation of a word describes the same
geometric diagram.  Classical tokens carry their crossing sign, which is
basepoint-independent (the O/U role order absorbs the flip).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence


ROLE_OVER = "O"
ROLE_UNDER = "U"
ROLE_VIRTUAL = "V"


class Token(NamedTuple):
    """One crossing pass: role in {O, U, V}, crossing id, sign in {+1, -1}."""

    role: str
    cid: int
    sign: int

    def format(self) -> str:
        return f"{self.role}{self.cid}{'+' if self.sign > 0 else '-'}"


class ValidationError(ValueError):
    """A word violates a diagram admission invariant."""


def _crossing_positions(tokens: Sequence[Token]) -> dict[int, list[int]]:
    pos: dict[int, list[int]] = {}
    for i, t in enumerate(tokens):
        pos.setdefault(t.cid, []).append(i)
    return pos


def validate_tokens(tokens: Sequence[Token]) -> list[str]:
    """Return the list of violated invariants (empty when the word is valid).

    Checks, in order: token well-formedness, pass multiplicity, role pattern
    per crossing, sign agreement, and planarity (traced genus 0).
    """
    violations: list[str] = []
    for t in tokens:
        if t.role not in (ROLE_OVER, ROLE_UNDER, ROLE_VIRTUAL):
            violations.append(f"unknown role {t.role!r}")
        if t.cid <= 0:
            violations.append(f"crossing id must be positive, got {t.cid}")
        if t.sign not in (1, -1):
            violations.append(f"sign must be +1 or -1, got {t.sign}")
    if violations:
        return violations

    for cid, positions in sorted(_crossing_positions(tokens).items()):
        if len(positions) != 2:
            violations.append(
                f"crossing {cid} appears {len(positions)} times, expected 2"
            )
            continue
        a, b = (tokens[p] for p in positions)
        roles = {a.role, b.role}
        if roles == {ROLE_OVER, ROLE_UNDER}:
            pass
        elif roles == {ROLE_VIRTUAL}:
            pass
        else:
            violations.append(
                f"crossing {cid} has role pattern {a.role}/{b.role}, "
                "expected O/U or V/V"
            )
            continue
        if a.sign != b.sign:
            violations.append(f"crossing {cid} has mismatched signs")
    if violations:
        return violations

    genus = _traced_genus(tokens)
    if genus != 0:
        violations.append(f"word is nonplanar: traced genus {genus}")
    return violations


def _rotations(tokens: Sequence[Token]) -> dict[int, int]:
    """Rotation (+1/-1) of each crossing, relative to the word's visit order."""
    rots: dict[int, int] = {}
    for cid, (p, _q) in (
        (cid, ps) for cid, ps in _crossing_positions(tokens).items()
    ):
        first = tokens[p]
        if first.role == ROLE_VIRTUAL:
            rots[cid] = first.sign
        else:
            rots[cid] = first.sign if first.role == ROLE_OVER else -first.sign
    return rots


def _sigma_alpha(tokens: Sequence[Token]) -> tuple[list[int], list[int]]:
    """Build the rotation permutation and edge involution on dart indices.

    Darts: ``in(j) = 2j``, ``out(j) = 2j+1`` for pass ``j``.
    """
    n = len(tokens)
    sigma = [0] * (2 * n)
    alpha = [0] * (2 * n)
    for j in range(n):
        alpha[2 * j + 1] = 2 * ((j + 1) % n)
        alpha[2 * ((j + 1) % n)] = 2 * j + 1
    rots = _rotations(tokens)
    for cid, (p, q) in _crossing_positions(tokens).items():
        ip, op_, iq, oq = 2 * p, 2 * p + 1, 2 * q, 2 * q + 1
        if rots[cid] > 0:
            cycle = (ip, iq, op_, oq)
        else:
            cycle = (ip, oq, op_, iq)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            sigma[a] = b
    return sigma, alpha


def _face_orbits(sigma: Sequence[int], alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """Orbits of the face permutation φ = σ∘α, each rotated to start minimal."""
    n = len(sigma)
    seen = [False] * n
    faces: list[tuple[int, ...]] = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = sigma[alpha[d]]
        k = orbit.index(min(orbit))
        faces.append(tuple(orbit[k:] + orbit[:k]))
    faces.sort(key=lambda f: f[0])
    return faces


def _traced_genus(tokens: Sequence[Token]) -> int:
    n = len(tokens)
    if n == 0:
        return 0
    sigma, alpha = _sigma_alpha(tokens)
    f = len(_face_orbits(sigma, alpha))
    # V = n/2 crossings, E = n edges
    chi = n // 2 - n + f
    return (2 - chi) // 2


@dataclass(frozen=True)
class GaussCode:
    """Cyclic word over classical passes only; equality up to rotation."""

    tokens: tuple[Token, ...]

    def __post_init__(self) -> None:
        for t in self.tokens:
            if t.role == ROLE_VIRTUAL:
                raise ValidationError("Gauss codes contain no virtual passes")

    def rotations(self) -> Iterable[tuple[Token, ...]]:
        n = len(self.tokens)
        if n == 0:
            yield ()
            return
        for k in range(n):
            yield self.tokens[k:] + self.tokens[:k]

    def canonical(self) -> tuple[Token, ...]:
        return min(
            (_relabel(rot) for rot in self.rotations()),
            default=(),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussCode):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())


def _relabel(tokens: Sequence[Token]) -> tuple[Token, ...]:
    """Relabel crossing ids by first appearance (1, 2, ...)."""
    mapping: dict[int, int] = {}
    out = []
    for t in tokens:
        if t.cid not in mapping:
            mapping[t.cid] = len(mapping) + 1
        out.append(Token(t.role, mapping[t.cid], t.sign))
    return tuple(out)


class PlanarDiagram:
    """A validated oriented virtual 1-knot diagram.

    Immutable; all derived structure is computed lazily and cached.  The
    basepoint is the word's cut point (token 0 is the first pass after it).
    """

    __slots__ = ("tokens", "__dict__")

    def __init__(self, tokens: Sequence[Token]):
        violations = validate_tokens(tokens)
        if violations:
            raise ValidationError(violations[0])
        object.__setattr__(self, "tokens", tuple(tokens))

    def __setattr__(self, name: str, value: object) -> None:
        if name in ("tokens",):
            raise AttributeError("PlanarDiagram is immutable")
        object.__setattr__(self, name, value)

    # -- structure ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.tokens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarDiagram):
            return NotImplemented
        return self.tokens == other.tokens

    def __hash__(self) -> int:
        return hash(self.tokens)

    def __repr__(self) -> str:
        word = " ".join(t.format() for t in self.tokens)
        return f"PlanarDiagram({word!r})"

    @cached_property
    def crossing_positions(self) -> dict[int, tuple[int, int]]:
        return {
            cid: (ps[0], ps[1])
            for cid, ps in _crossing_positions(self.tokens).items()
        }

    @property
    def n_crossings(self) -> int:
        return len(self.tokens) // 2

    @cached_property
    def n_classical(self) -> int:
        return sum(1 for t in self.tokens if t.role == ROLE_OVER)

    @cached_property
    def n_virtual(self) -> int:
        return sum(1 for t in self.tokens if t.role == ROLE_VIRTUAL) // 2

    def is_virtual_crossing(self, cid: int) -> bool:
        p, _ = self.crossing_positions[cid]
        return self.tokens[p].role == ROLE_VIRTUAL

    def crossing_sign(self, cid: int) -> int:
        p, _ = self.crossing_positions[cid]
        return self.tokens[p].sign

    @cached_property
    def rotations_by_crossing(self) -> dict[int, int]:
        """Flat rotation (+1/-1) at each crossing, basepoint-relative."""
        return _rotations(self.tokens)

    # -- map and faces -----------------------------------------------------

    @cached_property
    def sigma_alpha(self) -> tuple[list[int], list[int]]:
        return _sigma_alpha(self.tokens)

    def trace_faces(self) -> list[tuple[int, ...]]:
        """Boundary walks of all faces, as dart tuples.

        Darts are ``2j`` (in-dart of pass j) and ``2j+1`` (out-dart).  The
        0-crossing diagram has two faces by special case (Jordan curve).
        """
        if not self.tokens:
            return [(), ()]
        sigma, alpha = self.sigma_alpha
        return _face_orbits(sigma, alpha)

    @property
    def n_faces(self) -> int:
        return len(self.trace_faces())

    def traced_genus(self) -> int:
        """(2 - V + E - F) / 2; always 0 for an admitted diagram."""
        return _traced_genus(self.tokens)

    def euler_summary(self) -> tuple[int, int, int, int]:
        """(V, E, F, chi) of the diagram's traced map."""
        v = self.n_crossings
        e = len(self.tokens)
        f = self.n_faces
        return v, e, f, v - e + f

    def validate(self) -> list[str]:
        """Re-run the admission checks; empty list means ok."""
        return validate_tokens(self.tokens)

    # -- symmetries --------------------------------------------------------

    def mirror(self) -> "PlanarDiagram":
        """Switch every classical crossing (O/U swap, classical sign negated).

        Virtual signs are kept: the mirror swaps over and under strands
        without touching the flat underlying curve, so the traced map (and
        planarity) is unchanged.  Negating virtual signs as well would flip
        flat rotations and can push the word off genus 0.
        """
        out = []
        for t in self.tokens:
            if t.role == ROLE_OVER:
                out.append(Token(ROLE_UNDER, t.cid, -t.sign))
            elif t.role == ROLE_UNDER:
                out.append(Token(ROLE_OVER, t.cid, -t.sign))
            else:
                out.append(t)
        return PlanarDiagram(out)

    def reverse(self) -> "PlanarDiagram":
        """Reverse the circuit orientation.

        Classical signs are orientation-invariants and are kept; virtual
        signs flip because reversal swaps each crossing's first/second visit
        while negating both strand directions, which negates the flat
        rotation a virtual token's sign encodes.
        """
        out = []
        for t in reversed(self.tokens):
            if t.role == ROLE_VIRTUAL:
                out.append(Token(t.role, t.cid, -t.sign))
            else:
                out.append(t)
        return PlanarDiagram(out)

    def rotated(self, k: int) -> "PlanarDiagram":
        """Shift the basepoint forward past ``k`` tokens.

        The token list rotates; any virtual crossing whose two passes end up
        visited in the opposite order gets its stored sign flipped so the
        rotated word still describes the same geometric diagram.
        """
        n = len(self.tokens)
        if n == 0:
            return self
        k %= n
        flips = set()
        for cid, (p, q) in self.crossing_positions.items():
            if self.tokens[p].role == ROLE_VIRTUAL and p < k <= q:
                flips.add(cid)
        rotated = self.tokens[k:] + self.tokens[:k]
        out = [
            Token(t.role, t.cid, -t.sign) if t.cid in flips else t
            for t in rotated
        ]
        return PlanarDiagram(out)

    # -- codes -------------------------------------------------------------

    def underlying_gauss_code(self) -> GaussCode:
        """The classical-pass word: virtual crossings forgotten."""
        return GaussCode(
            tuple(t for t in self.tokens if t.role != ROLE_VIRTUAL)
        )

    def canonical_code(self) -> str:
        """Lexicographically minimal serialized word over basepoint shifts
        and first-appearance relabelings.  Round circle maps to ``"()"``.
        """
        n = len(self.tokens)
        if n == 0:
            return "()"
        best: Optional[tuple[Token, ...]] = None
        for k in range(n):
            cand = _relabel(self.rotated(k).tokens)
            if best is None or cand < best:
                best = cand
        assert best is not None
        return " ".join(t.format() for t in best)


def from_word(tokens: Iterable[Token]) -> PlanarDiagram:
    return PlanarDiagram(list(tokens))


UNKNOT = PlanarDiagram(())


# ---------------------------------------------------------------------------
# Gauss code realization
# ---------------------------------------------------------------------------

_Point = tuple[Fraction, Fraction]


def _seg_intersection(
    a: _Point, b: _Point, c: _Point, d: _Point
) -> Optional[_Point]:
    """Proper interior intersection of two axis-parallel segments, or None."""
    ax, ay = a
    bx, by = b
    cx, cy = c
    dx, dy = d
    if ax == bx and cy == dy:  # vertical x horizontal
        if min(cx, dx) < ax < max(cx, dx) and min(ay, by) < cy < max(ay, by):
            return (ax, cy)
        return None
    if ay == by and cx == dx:  # horizontal x vertical
        return _seg_intersection(c, d, a, b)
    return None


def realize_gauss_code(gc: GaussCode) -> PlanarDiagram:
    """Produce a planar diagram whose underlying Gauss code is ``gc``.

    If the code itself traces to genus 0 it is returned as a diagram with no
    virtual crossings.  Otherwise the crossings are laid out on an axis with
    fixed diagonal legs and the connecting arcs are routed on disjoint
    rectilinear corridors; every arc/arc intersection becomes a signed
    virtual crossing.  No attempt is made to minimize the virtual count.
    """
    tokens = gc.tokens
    if not tokens:
        return UNKNOT
    if not validate_tokens(tokens):
        return PlanarDiagram(tokens)

    m = len(tokens) // 2
    positions = _crossing_positions(tokens)
    order = {}  # (cid) -> visit index of each pass position
    for cid, (p, q) in ((c, ps) for c, ps in positions.items()):
        order[p] = 0
        order[q] = 1
    cid_to_x = {cid: Fraction(4 * (i + 1)) for i, cid in enumerate(sorted(positions))}

    half = Fraction(1, 2)
    # Required flat rotation per crossing (first visit = earlier position).
    rots = _rotations(tokens)

    # Stub endpoints for each pass: entry point A_k and exit point B_k.
    entries: list[_Point] = []
    exits: list[_Point] = []
    n_tok = len(tokens)
    for k in range(n_tok):
        t = tokens[k]
        x = cid_to_x[t.cid]
        if order[k] == 0:
            entries.append((x - half, -half))  # SW -> NE
            exits.append((x + half, half))
        else:
            if rots[t.cid] > 0:
                entries.append((x + half, -half))  # SE -> NW
                exits.append((x - half, half))
            else:
                entries.append((x - half, half))  # NW -> SE
                exits.append((x + half, -half))

    # Route arc k from exits[k] to entries[(k+1) % n] through a private
    # depth; the two ends get distinct column offsets so an arc leaving and
    # re-entering the same crossing corner never overlaps itself.
    eps = Fraction(1, 4 * (2 * n_tok + 1))
    arcs: list[list[_Point]] = []
    for k in range(n_tok):
        bx, by = exits[k]
        ax, ay = entries[(k + 1) % n_tok]
        u_b = eps * (2 * k + 1)
        u_a = eps * (2 * k + 2)
        depth = Fraction(-2) - Fraction(k + 1, n_tok + 1)
        top = Fraction(2) + Fraction(k + 1, n_tok + 1)
        path: list[_Point] = [(bx, by)]
        # leave the stub horizontally into a private column
        col_b = bx + u_b if bx > cid_to_x[tokens[k].cid] else bx - u_b
        path.append((col_b, by))
        path.append((col_b, depth))
        cid_next = tokens[(k + 1) % n_tok].cid
        col_a = ax + u_a if ax > cid_to_x[cid_next] else ax - u_a
        if ay < 0:
            path.append((col_a, depth))
            path.append((col_a, ay))
        else:
            # entry on the top side: climb over the crossing row
            path.append((col_a, depth))
            path.append((col_a, top))
            path.append((ax, top))
        path.append((ax, ay))
        arcs.append(path)

    # Collect proper intersections between routing segments.
    segs: list[tuple[int, int, _Point, _Point]] = []  # (arc, leg, a, b)
    for ai, path in enumerate(arcs):
        for li in range(len(path) - 1):
            if path[li] != path[li + 1]:
                segs.append((ai, li, path[li], path[li + 1]))
    crossings: dict[tuple[int, int, int, int], _Point] = {}
    for s1, s2 in itertools.combinations(segs, 2):
        pt = _seg_intersection(s1[2], s1[3], s2[2], s2[3])
        if pt is not None:
            crossings[(s1[0], s1[1], s2[0], s2[1])] = pt

    # Walk the circuit, emitting classical tokens and virtual tokens in the
    # order met along each arc.
    def _param(a: _Point, b: _Point, p: _Point) -> Fraction:
        if a[0] != b[0]:
            return (p[0] - a[0]) / (b[0] - a[0])
        return (p[1] - a[1]) / (b[1] - a[1])

    hits_by_seg: dict[tuple[int, int], list[tuple[Fraction, tuple, _Point]]] = {}
    for key, pt in crossings.items():
        a1, l1, a2, l2 = key
        seg1 = next(s for s in segs if s[0] == a1 and s[1] == l1)
        seg2 = next(s for s in segs if s[0] == a2 and s[1] == l2)
        hits_by_seg.setdefault((a1, l1), []).append((_param(seg1[2], seg1[3], pt), key, pt))
        hits_by_seg.setdefault((a2, l2), []).append((_param(seg2[2], seg2[3], pt), key, pt))

    next_id = max(positions) + 1
    vid: dict[tuple, int] = {}
    vdir: dict[tuple, list[_Point]] = {}  # directions at first/second visit
    word: list[Token] = []
    for k in range(n_tok):
        word.append(tokens[k])
        path = arcs[k]
        for li in range(len(path) - 1):
            hits = sorted(hits_by_seg.get((k, li), []))
            for _t, key, _pt in hits:
                if key not in vid:
                    vid[key] = next_id
                    next_id += 1
                    vdir[key] = []
                a, b = path[li], path[li + 1]
                vdir[key].append((b[0] - a[0], b[1] - a[1]))
                word.append(Token(ROLE_VIRTUAL, vid[key], 0))  # sign patched below

    # Patch virtual signs: det(first visit direction, second visit direction).
    signs: dict[int, int] = {}
    for key, cid in vid.items():
        d1, d2 = vdir[key]
        det = d1[0] * d2[1] - d1[1] * d2[0]
        assert det != 0
        signs[cid] = 1 if det > 0 else -1
    word = [
        Token(t.role, t.cid, signs[t.cid]) if t.role == ROLE_VIRTUAL else t
        for t in word
    ]
    return PlanarDiagram(word)
