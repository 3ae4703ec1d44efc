"""Finite group multiplication tables for homomorphism counting.

Tables load from a plain text format: first line the order ``n``, then ``n``
rows of ``n`` element indices; index 0 is the identity.  The loader verifies
closure, identity, inverses, and associativity, so a corrupted bundled table
fails loudly at load time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from itertools import permutations


@dataclass(frozen=True)
class FiniteGroupTable:
    name: str
    n: int
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...] = field(compare=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, h: int) -> int:
        """h g h^-1"""
        return self.table[self.table[h][g]][self.inverse[h]]


class GroupTableError(ValueError):
    pass


def table_from_rows(name: str, rows: list[list[int]]) -> FiniteGroupTable:
    n = len(rows)
    for r in rows:
        if len(r) != n or any(x < 0 or x >= n for x in r):
            raise GroupTableError(f"{name}: malformed row")
    for a in range(n):
        if rows[0][a] != a or rows[a][0] != a:
            raise GroupTableError(f"{name}: index 0 is not the identity")
    inverse = [-1] * n
    for a in range(n):
        for b in range(n):
            if rows[a][b] == 0:
                inverse[a] = b
                break
        else:
            raise GroupTableError(f"{name}: element {a} has no inverse")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                    raise GroupTableError(f"{name}: not associative at {(a, b, c)}")
    return FiniteGroupTable(
        name, n, tuple(tuple(r) for r in rows), tuple(inverse)
    )


def load_group_table(name: str, text: str) -> FiniteGroupTable:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    n = int(lines[0])
    if len(lines) != n + 1:
        raise GroupTableError(f"{name}: expected {n} rows, got {len(lines) - 1}")
    rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    return table_from_rows(name, rows)


def load_bundled(name: str) -> FiniteGroupTable:
    data = resources.files("weldkit").joinpath(f"data/groups/{name}.table")
    return load_group_table(name, data.read_text())


def _symmetric_group_rows(k: int) -> list[list[int]]:
    elems = sorted(permutations(range(k)))
    # put the identity first
    ident = tuple(range(k))
    elems.remove(ident)
    elems.insert(0, ident)
    index = {p: i for i, p in enumerate(elems)}
    rows = []
    for p in elems:
        rows.append([index[tuple(p[q[i]] for i in range(k))] for q in elems])
    return rows


def _subgroup_rows(k: int, keep) -> list[list[int]]:
    elems = sorted(p for p in permutations(range(k)) if keep(p))
    ident = tuple(range(k))
    elems.remove(ident)
    elems.insert(0, ident)
    index = {p: i for i, p in enumerate(elems)}
    rows = []
    for p in elems:
        rows.append([index[tuple(p[q[i]] for i in range(k))] for q in elems])
    return rows


def _perm_sign(p) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def builtin_rows(name: str) -> list[list[int]]:
    """Reference generators for the bundled tables (s3, s4, a4, d4)."""
    if name == "s3":
        return _symmetric_group_rows(3)
    if name == "s4":
        return _symmetric_group_rows(4)
    if name == "a4":
        return _subgroup_rows(4, lambda p: _perm_sign(p) == 1)
    if name == "d4":
        # symmetries of the square 0-1-2-3: permutations preserving adjacency
        def keep(p):
            return all(
                abs((p[(i + 1) % 4] - p[i]) % 4) in (1, 3) for i in range(4)
            )

        return _subgroup_rows(4, keep)
    raise GroupTableError(f"no builtin group {name!r}")


PANEL_NAMES = ("s3", "s4", "a4", "d4")


def load_panel(names=PANEL_NAMES) -> list[FiniteGroupTable]:
    return [load_bundled(n) for n in names]
