"""Diagram- and knot-level invariants.

* crossing parities (virtual / classical / mixed);
* Whitney degree of the underlying flat curve;
* the Wirtinger presentation of the (welded) knot group, with virtual
  crossings transparent;
* exact homomorphism counts into bundled finite groups;
* the Alexander polynomial via Fox calculus on the Wirtinger presentation;
* a fixed-order invariant distinguisher per theory.

Whitney degree convention: the basepoint edge is taken on the outer face,
oriented so that the counterclockwise round circle has degree +1; with that
anchor the degree is ``1 + sum of flat crossing rotations`` where rotations
are read from the stored word.  Only its parity is basepoint-independent,
and only the parity feeds the move-coupling laws.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import sympy

from weldkit.diagram import PlanarDiagram, ROLE_UNDER, ROLE_VIRTUAL
from weldkit.groups import FiniteGroupTable, load_panel
from weldkit.moves import MoveSet


@dataclass(frozen=True)
class ParityProfile:
    virtual_parity: int
    classical_parity: int
    mixed_parity: int


def parity_profile(d: PlanarDiagram) -> ParityProfile:
    v = d.n_virtual % 2
    c = d.n_classical % 2
    return ParityProfile(v, c, (v + c) % 2)


def whitney_degree(d: PlanarDiagram) -> int:
    """Rotation number of the flat immersed circle underlying ``d``.

    Classical and virtual crossings both count as flat double points.
    """
    return 1 + sum(d.rotations_by_crossing.values())


# ---------------------------------------------------------------------------
# Wirtinger presentation
# ---------------------------------------------------------------------------

Relator = tuple[tuple[int, int], ...]  # (generator index, exponent) pairs


@dataclass(frozen=True)
class GroupPresentation:
    """Finitely presented group; relators are freely reduced words."""

    generators: tuple[str, ...]
    relators: tuple[Relator, ...]
    # conjugation shape (out, over, in, sign) per relator, kept for the
    # propagation-based counter; None for non-Wirtinger presentations
    wirtinger: Optional[tuple[tuple[int, int, int, int], ...]] = None


def _reduce_word(word: Sequence[tuple[int, int]]) -> Relator:
    """Freely reduce, then compress adjacent equal letters into powers."""
    letters: list[tuple[int, int]] = []
    for gen, exp in word:
        step = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            if letters and letters[-1] == (gen, -step):
                letters.pop()
            else:
                letters.append((gen, step))
    out: list[tuple[int, int]] = []
    for gen, step in letters:
        if out and out[-1][0] == gen:
            out[-1] = (gen, out[-1][1] + step)
        else:
            out.append((gen, step))
    return tuple(p for p in out if p[1] != 0)


def wirtinger_presentation(d: PlanarDiagram) -> GroupPresentation:
    """Knot group presentation: one generator per arc, arcs broken only at
    classical undercrossings; one conjugation relator per classical crossing
    (``out = over^sign  in  over^-sign``).  The 0-classical diagram gives the
    free group on one generator.
    """
    n = len(d.tokens)
    under_positions = sorted(
        i for i, t in enumerate(d.tokens) if t.role == ROLE_UNDER
    )
    if not under_positions:
        return GroupPresentation(("x0",), (), wirtinger=())

    r = len(under_positions)
    generators = tuple(f"x{i}" for i in range(r))

    def arc_of(pos: int) -> int:
        """Index of the arc containing word position ``pos``.

        Arc ``i`` covers positions from just after under_positions[i-1]
        through under_positions[i], cyclically.
        """
        import bisect

        j = bisect.bisect_left(under_positions, pos)
        return j % r

    shapes = []
    words = []
    for i, u in enumerate(under_positions):
        cid = d.tokens[u].cid
        sign = d.tokens[u].sign
        p, q = d.crossing_positions[cid]
        over_pos = q if p == u else p
        over = arc_of(over_pos)
        inn = i
        out = (i + 1) % r
        shapes.append((out, over, inn, sign))
        word = [(out, -1), (over, sign), (inn, 1), (over, -sign)]
        words.append(_reduce_word(word))
    return GroupPresentation(generators, tuple(words), wirtinger=tuple(shapes))


# ---------------------------------------------------------------------------
# homomorphism counting
# ---------------------------------------------------------------------------


class HomBudgetExceeded(RuntimeError):
    """The declared search budget ran out before the count finished."""


DEFAULT_HOM_BUDGET = 5_000_000


def _evaluate(word: Relator, values: Sequence[int], g: FiniteGroupTable) -> int:
    acc = 0
    for gen, exp in word:
        v = values[gen] if exp > 0 else g.inv(values[gen])
        for _ in range(abs(exp)):
            acc = g.mul(acc, v)
    return acc


def hom_count(
    p: GroupPresentation,
    g: FiniteGroupTable,
    budget: int = DEFAULT_HOM_BUDGET,
) -> int:
    """Exact number of homomorphisms from ``p`` into ``g``.

    Wirtinger presentations are counted by walking the undercrossing circuit
    and letting each conjugation relator force the next arc image; a branch
    happens only when an over-arc is still unassigned.  Other presentations
    fall back to relator-checked enumeration.  Every elementary step charges
    the budget; :class:`HomBudgetExceeded` is raised when it runs out.
    """
    r = len(p.generators)
    if not p.relators:
        return g.n ** r

    steps = 0

    def charge() -> None:
        nonlocal steps
        steps += 1
        if steps > budget:
            raise HomBudgetExceeded(f"budget {budget} exhausted")

    if p.wirtinger is not None and len(p.wirtinger) == len(p.relators):
        rels = p.wirtinger
        assign: list[Optional[int]] = [None] * r
        count = 0

        def rec(i: int) -> None:
            nonlocal count
            charge()
            if i == len(rels):
                count += 1
                return
            out, over, inn, sign = rels[i]
            assert assign[inn] is not None
            if assign[over] is None:
                for v in range(g.n):
                    assign[over] = v
                    rec(i)
                    assign[over] = None
                return
            h = assign[over] if sign > 0 else g.inv(assign[over])
            val = g.conj(assign[inn], h)
            if assign[out] is None:
                assign[out] = val
                rec(i + 1)
                assign[out] = None
            elif assign[out] == val:
                rec(i + 1)

        for v0 in range(g.n):
            assign[0] = v0
            rec(0)
            assign[0] = None
        return count

    count = 0
    for values in itertools.product(range(g.n), repeat=r):
        charge()
        if all(_evaluate(w, values, g) == 0 for w in p.relators):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Alexander polynomial (Fox calculus)
# ---------------------------------------------------------------------------

_T = sympy.Symbol("t")


def _fox_derivative(word: Relator, gen: int):
    """Abelianized Fox derivative of a relator word at one generator."""
    total = sympy.Integer(0)
    prefix = sympy.Integer(0)  # exponent sum of the consumed prefix
    for g_, exp in word:
        step = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            if step > 0:
                if g_ == gen:
                    total += _T ** prefix
                prefix += 1
            else:
                prefix -= 1
                if g_ == gen:
                    total -= _T ** prefix
    return sympy.expand(total)


def alexander_polynomial(d: PlanarDiagram) -> tuple[int, ...]:
    """First elementary ideal generator, normalized.

    Computed as the gcd of all (r-1)-minors of the abelianized Fox Jacobian
    of the Wirtinger presentation, with units fixed so the lowest degree is
    0 and the leading coefficient positive.  Returned as the coefficient
    tuple (constant term first); the round circle gives ``(1,)``.
    """
    p = wirtinger_presentation(d)
    r = len(p.generators)
    m = len(p.relators)
    if r <= 1 or m == 0:
        return (1,)
    jac = sympy.zeros(m, r)
    for i, w in enumerate(p.relators):
        for j in range(r):
            jac[i, j] = _fox_derivative(w, j)

    k = r - 1
    minors = []
    for rows in itertools.combinations(range(m), k):
        for cols in itertools.combinations(range(r), k):
            det = jac[list(rows), list(cols)].det()
            det = sympy.expand(det)
            if det != 0:
                minors.append(det)
    if not minors:
        return (0,)
    gcd = minors[0]
    for x in minors[1:]:
        gcd = sympy.gcd(gcd, x)
        if gcd == 1:
            break
    return _normalize_laurent(gcd)


def _normalize_laurent(expr) -> tuple[int, ...]:
    expr = sympy.expand(expr)
    poly = sympy.Poly(sympy.together(expr * _T ** 64), _T)
    coeffs = poly.all_coeffs()[::-1]  # constant term first
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return (0,)
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(int(c) for c in coeffs)


def format_polynomial(coeffs: Sequence[int]) -> str:
    if not coeffs or all(c == 0 for c in coeffs):
        return "0"
    parts = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        if e == 0:
            term = str(abs(c))
        else:
            base = "t" if e == 1 else f"t^{e}"
            term = base if abs(c) == 1 else f"{abs(c)}*{base}"
        parts.append(("- " if c < 0 else "+ ") + term)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


# ---------------------------------------------------------------------------
# distinguisher
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    invariant: str
    left: object
    right: object

    def __str__(self) -> str:
        return f"{self.invariant}: {self.left} != {self.right}"


def distinguish(
    a: PlanarDiagram,
    b: PlanarDiagram,
    s: MoveSet,
    panel: Optional[Sequence[FiniteGroupTable]] = None,
    budget: int = DEFAULT_HOM_BUDGET,
) -> Optional[Witness]:
    """First invariant valid for the theory ``s`` that separates the pair.

    Cheap parities are tried first where the theory preserves them (virtual
    parity is rotational-welded-invariant but not welded-invariant); then
    homomorphism counts over the group panel, then the Alexander polynomial.
    ``None`` means "not distinguished", never "equivalent".  A homomorphism
    count that exhausts its budget is marked inconclusive and skipped.
    """
    if panel is None:
        panel = load_panel()
    if s.name == "ROTATIONAL_WELDED":
        pa, pb = parity_profile(a), parity_profile(b)
        if pa.virtual_parity != pb.virtual_parity:
            return Witness("virtual_parity", pa.virtual_parity, pb.virtual_parity)
    wa = wirtinger_presentation(a)
    wb = wirtinger_presentation(b)
    for g in panel:
        try:
            ca = hom_count(wa, g, budget)
            cb = hom_count(wb, g, budget)
        except HomBudgetExceeded:
            continue
        if ca != cb:
            return Witness(f"hom_count[{g.name}]", ca, cb)
    aa = alexander_polynomial(a)
    ab = alexander_polynomial(b)
    if aa != ab:
        return Witness(
            "alexander_polynomial", format_polynomial(aa), format_polynomial(ab)
        )
    return None
