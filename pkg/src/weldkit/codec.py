"""Parsing and serialization of diagram, movie, and group-table text formats.

Diagram record::

    diagram NAME
    O1+ U2+ O3+ U1+ O2+ U3+

Movie record::

    movie NAME
    V1+ V1+
    event vR1- [LOCATION]
    <empty word line>

Words are whitespace-separated tokens ``(O|U|V)<id>(+|-)``; an empty line is
the 0-crossing round circle.  ``#`` starts a comment line.  All files are
ASCII; CRLF is normalized to LF on read.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from weldkit.diagram import PlanarDiagram, Token, ValidationError
from weldkit.fiberwise import Movie
from weldkit.moves import MOVE_KINDS


class ParseError(ValueError):
    """Syntax or validation failure, with a 1-based line position."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


_TOKEN_RE = re.compile(r"^([OUV])([0-9]+)([+-])$")


def _parse_word(text: str, line: int) -> list[Token]:
    tokens = []
    for piece in text.split():
        m = _TOKEN_RE.match(piece)
        if m is None:
            raise ParseError(f"bad token {piece!r}", line)
        role, cid, sign = m.group(1), int(m.group(2)), m.group(3)
        if cid == 0:
            raise ParseError(f"crossing id must be positive in {piece!r}", line)
        tokens.append(Token(role, cid, 1 if sign == "+" else -1))
    return tokens


def _word_to_diagram(text: str, line: int) -> PlanarDiagram:
    tokens = _parse_word(text, line)
    try:
        return PlanarDiagram(tokens)
    except ValidationError as exc:
        raise ParseError(str(exc), line) from exc


def _logical_lines(text: str) -> list[tuple[int, str]]:
    """(line number, content) with comments stripped; blank lines kept
    (an empty word is meaningful)."""
    out = []
    for i, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        if raw.lstrip().startswith("#"):
            continue
        out.append((i, raw.strip()))
    # drop trailing blank lines only
    while out and out[-1][1] == "":
        out.pop()
    return out


@dataclass(frozen=True)
class DiagramRecord:
    name: str
    diagram: PlanarDiagram


def parse_diagram(text: str) -> PlanarDiagram:
    """Parse a single diagram record (or a bare word) into a diagram."""
    lines = _logical_lines(text)
    if not lines:
        return PlanarDiagram(())
    first_line, first = lines[0]
    if first.startswith("diagram"):
        rec = parse_diagram_record(text)
        return rec.diagram
    if len(lines) > 1:
        raise ParseError("expected a single word line", lines[1][0])
    return _word_to_diagram(first, first_line)


def parse_diagram_record(text: str) -> DiagramRecord:
    lines = _logical_lines(text)
    if not lines:
        raise ParseError("empty input", 1)
    line_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "diagram":
        raise ParseError("expected 'diagram NAME' header", line_no)
    name = parts[1]
    if len(lines) == 1:
        # header with no word line: treat a missing body as an error; the
        # round circle is written as an explicit blank line
        raise ParseError("missing word line after header", line_no)
    word_line_no, word = lines[1]
    if len(lines) > 2:
        raise ParseError("unexpected content after diagram word", lines[2][0])
    return DiagramRecord(name, _word_to_diagram(word, word_line_no))


def serialize_diagram(d: PlanarDiagram) -> str:
    """Emit the word; parses back to a diagram with the same canonical code."""
    return " ".join(t.format() for t in d.tokens)


def format_diagram_record(name: str, d: PlanarDiagram) -> str:
    return f"diagram {name}\n{serialize_diagram(d)}\n"


def parse_movie(text: str) -> Movie:
    """Parse a movie record: alternating diagram words and event lines."""
    lines = _logical_lines(text)
    if not lines:
        raise ParseError("empty input", 1)
    line_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "movie":
        raise ParseError("expected 'movie NAME' header", line_no)
    body = lines[1:]
    if not body:
        raise ParseError("movie needs at least one diagram word", line_no)

    diagrams: list[PlanarDiagram] = []
    events: list[tuple[str, str | None]] = []
    expect_word = True
    for ln, content in body:
        if content.startswith("event"):
            if expect_word:
                raise ParseError("two consecutive events", ln)
            parts = content.split()
            if len(parts) not in (2, 3):
                raise ParseError("expected 'event KIND [LOCATION]'", ln)
            kind = parts[1]
            if kind not in MOVE_KINDS:
                raise ParseError(f"unknown move kind {kind!r}", ln)
            hint = parts[2] if len(parts) == 3 else None
            events.append((kind, hint))
            expect_word = True
        else:
            if not expect_word:
                raise ParseError("two consecutive diagram words", ln)
            diagrams.append(_word_to_diagram(content, ln))
            expect_word = False
    if expect_word:
        raise ParseError("movie ends with an event, expected a diagram", body[-1][0])
    return Movie(tuple(diagrams), tuple(events))


def serialize_movie(m: Movie, name: str = "movie") -> str:
    out = [f"movie {name}"]
    out.append(serialize_diagram(m.diagrams[0]))
    for (kind, hint), d in zip(m.events, m.diagrams[1:]):
        out.append(f"event {kind} {hint}" if hint else f"event {kind}")
        out.append(serialize_diagram(d))
    return "\n".join(out) + "\n"
