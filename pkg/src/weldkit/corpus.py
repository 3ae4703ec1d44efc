"""Bundled reference diagrams, certificate movies, and random generators.

Corpus entries live under ``data/corpus/``: one ``.diagram`` file per entry,
``.movie`` certificate files, and one ``expectations.tsv`` table of expected
invariant values.  Every row carries a provenance tag: ``reference`` entries
transcribe named diagrams from the literature (reconstructions are marked
``reference-reconstructed`` and carry verified defining properties instead
of a drawing), ``derived`` values were computed by an independent oracle,
and ``generator`` entries come from the move engine itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources

from weldkit.diagram import PlanarDiagram, ROLE_OVER, ROLE_UNDER, ROLE_VIRTUAL, Token
from weldkit.fiberwise import Movie
from weldkit.moves import (
    MoveInstance,
    _has_removable_bigon,
    _r2_candidate_words,
    apply_move,
    find_moves,
)
from weldkit.diagram import validate_tokens


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    diagram: PlanarDiagram
    provenance: str
    expected: dict[str, str]


@dataclass(frozen=True)
class CorpusMovie:
    name: str
    movie: Movie
    provenance: str


def _corpus_dir():
    return resources.files("weldkit").joinpath("data/corpus")


def load_corpus() -> tuple[list[CorpusEntry], list[CorpusMovie]]:
    """Load and validate every bundled entry; any failure is fatal."""
    from weldkit import codec

    expectations: dict[str, dict[str, str]] = {}
    provenance: dict[str, str] = {}
    table = _corpus_dir().joinpath("expectations.tsv").read_text()
    for line in table.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, invariant, value, prov = line.split("\t")
        expectations.setdefault(name, {})[invariant] = value
        provenance.setdefault(name, prov)

    entries = []
    movies = []
    for item in sorted(_corpus_dir().iterdir(), key=lambda p: p.name):
        if item.name.endswith(".diagram"):
            rec = codec.parse_diagram_record(item.read_text())
            entries.append(
                CorpusEntry(
                    rec.name,
                    rec.diagram,
                    provenance.get(rec.name, "unknown"),
                    expectations.get(rec.name, {}),
                )
            )
        elif item.name.endswith(".movie"):
            movie = codec.parse_movie(item.read_text())
            name = item.name[: -len(".movie")]
            movies.append(CorpusMovie(name, movie, provenance.get(name, "unknown")))
    missing = set(expectations) - {e.name for e in entries} - {m.name for m in movies}
    if missing:
        raise ValueError(f"expectations for absent corpus entries: {sorted(missing)}")
    return entries, movies


def entry(name: str) -> CorpusEntry:
    entries, _ = load_corpus()
    for e in entries:
        if e.name == name:
            return e
    raise KeyError(name)


# ---------------------------------------------------------------------------
# random generation
# ---------------------------------------------------------------------------


def random_diagram(seed: int, budget: int) -> PlanarDiagram:
    """Deterministic-for-seed diagram built by random creating moves.

    Kinks and pokes are sampled directly (site and decoration drawn at
    random, candidate kept when the rewritten word is admissible), so
    generation is fast; the result is welded-trivial by construction and
    has exactly ``budget`` crossings when ``budget != 1`` allows it.
    """
    rng = random.Random(seed)
    d = PlanarDiagram(())
    while d.n_crossings < budget:
        want_pair = budget - d.n_crossings >= 2 and rng.random() < 0.6
        if want_pair:
            d = _random_poke(d, rng)
        else:
            d = _random_kink(d, rng)
    return d


def _random_kink(d: PlanarDiagram, rng: random.Random) -> PlanarDiagram:
    g = rng.randrange(max(1, len(d.tokens)))
    cid = max((t.cid for t in d.tokens), default=0) + 1
    s = rng.choice((1, -1))
    roles = rng.choice(
        ((ROLE_OVER, ROLE_UNDER), (ROLE_UNDER, ROLE_OVER), (ROLE_VIRTUAL, ROLE_VIRTUAL))
    )
    tokens = list(d.tokens)
    tokens[g:g] = [Token(roles[0], cid, s), Token(roles[1], cid, s)]
    return PlanarDiagram(tokens)


def _random_poke(d: PlanarDiagram, rng: random.Random) -> PlanarDiagram:
    n = max(1, len(d.tokens))
    while True:
        g1, g2 = sorted((rng.randrange(n), rng.randrange(n)))
        variant = "nest" if g1 == g2 else rng.choice(("fwd", "rev"))
        if rng.random() < 0.5:
            ra, rb = rng.choice(((ROLE_OVER, ROLE_UNDER), (ROLE_UNDER, ROLE_OVER)))
            s1 = rng.choice((1, -1))
            s2 = -s1
        else:
            ra = rb = ROLE_VIRTUAL
            s1, s2 = rng.choice(((1, -1), (-1, 1), (1, 1), (-1, -1)))
        site = ("poke", g1, g2, ra, rb, s1, s2, variant)
        tokens, c1, c2 = _r2_candidate_words(d, site)
        if validate_tokens(tokens):
            continue
        if not _has_removable_bigon(tokens, c1, c2):
            continue
        return PlanarDiagram(tokens)


def random_move(
    d: PlanarDiagram,
    s,
    rng: random.Random,
    max_crossings: int = 12,
) -> MoveInstance | None:
    """A uniformly random applicable instance within the crossing cap."""
    candidates = [
        m
        for m in find_moves(d, s)
        if d.n_crossings + _delta(m.kind) <= max_crossings
    ]
    if not candidates:
        return None
    return rng.choice(candidates)


def _delta(kind: str) -> int:
    from weldkit.moves import CROSSING_DELTA

    return CROSSING_DELTA[kind]


def random_walk(
    d: PlanarDiagram,
    s,
    steps: int,
    seed: int,
    max_crossings: int = 12,
) -> Movie:
    """A movie generated by random applicable moves of the theory ``s``."""
    rng = random.Random(seed)
    frames = [d]
    events: list[tuple[str, str | None]] = []
    for _ in range(steps):
        m = random_move(frames[-1], s, rng, max_crossings)
        if m is None:
            break
        events.append((m.kind, m.site_token()))
        frames.append(apply_move(frames[-1], m))
    return Movie(tuple(frames), tuple(events))
