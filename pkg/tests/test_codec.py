"""Text format round-trips and rejection behavior."""

import pytest

from weldkit import codec
from weldkit.diagram import PlanarDiagram

from conftest import FIG_INF, TREFOIL, diagram


class TestParseDiagram:
    def test_empty_word_is_round_circle(self):
        d = codec.parse_diagram("diagram unknot\n\n")
        assert len(d.tokens) == 0

    def test_bare_word(self):
        d = codec.parse_diagram(FIG_INF)
        assert d.n_virtual == 1

    def test_trefoil_record(self):
        text = f"diagram trefoil\n{TREFOIL}\n"
        rec = codec.parse_diagram_record(text)
        assert rec.name == "trefoil"
        assert rec.diagram.n_classical == 3

    def test_comments_and_crlf(self):
        text = "# a comment\r\ndiagram t\r\n# another\r\nV1+ V1+\r\n"
        rec = codec.parse_diagram_record(text)
        assert rec.diagram.n_virtual == 1

    def test_syntax_error_reports_position(self):
        with pytest.raises(codec.ParseError) as exc:
            codec.parse_diagram("diagram x\nO1+ Q2-\n")
        assert "line 2" in str(exc.value)

    def test_multiplicity_violation(self):
        with pytest.raises(codec.ParseError):
            codec.parse_diagram("O1+ U1+ O1+ U2+ O2+ U2+")

    def test_sign_mismatch(self):
        with pytest.raises(codec.ParseError):
            codec.parse_diagram("O1+ U1-")

    def test_nonplanar_rejected(self):
        with pytest.raises(codec.ParseError) as exc:
            codec.parse_diagram("O1+ O2+ U1+ U2+")
        assert "nonplanar" in str(exc.value)

    def test_zero_id_rejected(self):
        with pytest.raises(codec.ParseError):
            codec.parse_diagram("O0+ U0+")


class TestSerialize:
    def test_round_circle_serializes_empty(self):
        assert codec.serialize_diagram(PlanarDiagram(())) == ""

    def test_fig_inf(self, fig_inf):
        assert codec.serialize_diagram(fig_inf) == FIG_INF

    def test_roundtrip_is_canonical_fixed_point(self, trefoil):
        text = codec.serialize_diagram(trefoil)
        again = codec.parse_diagram(text)
        assert again.canonical_code() == trefoil.canonical_code()
        assert codec.serialize_diagram(again) == text


class TestMovies:
    MOVIE = "movie shrink\nV1+ V1+\nevent vR1-\n\n"

    def test_minimal_movie(self):
        m = codec.parse_movie(self.MOVIE)
        assert len(m) == 1
        assert m.events[0][0] == "vR1-"
        assert len(m.diagrams[1].tokens) == 0

    def test_single_frame_movie(self):
        m = codec.parse_movie("movie still\nV1+ V1+\n")
        assert len(m) == 0

    def test_two_consecutive_events_rejected(self):
        bad = "movie x\nV1+ V1+\nevent vR1-\nevent vR1-\n\n"
        with pytest.raises(codec.ParseError) as exc:
            codec.parse_movie(bad)
        assert "consecutive" in str(exc.value)

    def test_trailing_event_rejected(self):
        # the final blank word line is consumed as trailing blank, so this
        # text ends with an event and no diagram
        bad = "movie x\nV1+ V1+\nevent vR1-"
        with pytest.raises(codec.ParseError):
            codec.parse_movie(bad)

    def test_unknown_move_name(self):
        bad = "movie x\nV1+ V1+\nevent zz9\n\n"
        with pytest.raises(codec.ParseError):
            codec.parse_movie(bad)

    def test_movie_roundtrip(self):
        m = codec.parse_movie(self.MOVIE)
        text = codec.serialize_movie(m, name="shrink")
        again = codec.parse_movie(text)
        assert len(again) == len(m)
        assert [e[0] for e in again.events] == [e[0] for e in m.events]

    def test_movie_with_location_hint(self):
        m = codec.parse_movie("movie x\nV1+ V1+\nevent vR1- kink:0\n\n")
        assert m.events[0][1] == "kink:0"
