"""Core map model: validation, face tracing, symmetries, canonical codes."""

import random

import pytest

from weldkit.diagram import (
    GaussCode,
    PlanarDiagram,
    Token,
    UNKNOT,
    ValidationError,
    realize_gauss_code,
    validate_tokens,
)

from conftest import FIG_INF, NONPLANAR, TREFOIL, TREFOIL_MIRROR, VTREFOIL, diagram, word


class TestValidation:
    def test_round_circle_is_valid(self):
        assert validate_tokens(()) == []

    def test_trefoil_euler_data(self, trefoil):
        # hand face-tracing oracle: V=3, E=6, F=5, chi=2
        assert trefoil.euler_summary() == (3, 6, 5, 2)
        assert trefoil.traced_genus() == 0

    def test_nonplanar_word_rejected(self):
        violations = validate_tokens(word(NONPLANAR))
        assert violations and "nonplanar" in violations[0]
        with pytest.raises(ValidationError):
            diagram(NONPLANAR)

    def test_interleaved_flat_word_rejected_for_all_signs(self):
        # a flat curve with word abab does not exist in the plane
        for s1 in "+-":
            for s2 in "+-":
                violations = validate_tokens(
                    word(f"V1{s1} V2{s2} V1{s1} V2{s2}")
                )
                assert violations

    def test_multiplicity_violations(self):
        assert validate_tokens(word("O1+ U1+ O1+"))
        assert validate_tokens(word("O1+ U2+ U1+ O2+ O3+ U3+ O4+"))

    def test_role_pattern_violations(self):
        assert validate_tokens(word("O1+ O1+"))
        assert validate_tokens(word("V1+ O1+"))

    def test_sign_mismatch(self):
        assert validate_tokens(word("O1+ U1-"))
        assert validate_tokens(word("V1+ V1-"))

    def test_validate_method_of_admitted_diagram(self, trefoil):
        assert trefoil.validate() == []


class TestFaces:
    def test_round_circle_two_faces(self):
        assert UNKNOT.n_faces == 2

    def test_fig_inf_three_faces(self, fig_inf):
        assert fig_inf.n_faces == 3

    def test_trefoil_five_faces(self, trefoil):
        assert trefoil.n_faces == 5

    def test_euler_identity_everywhere(self, trefoil, fig_inf):
        for d in (UNKNOT, trefoil, fig_inf, diagram(VTREFOIL)):
            v, e, f, chi = d.euler_summary()
            assert chi == 2 - 2 * d.traced_genus() == 2


class TestSymmetries:
    def test_mirror_round_circle(self):
        assert UNKNOT.mirror() is not None
        assert UNKNOT.mirror().canonical_code() == UNKNOT.canonical_code()

    def test_mirror_trefoil_word(self, trefoil):
        assert [t.format() for t in trefoil.mirror().tokens] == TREFOIL_MIRROR.split()

    def test_mirror_involution(self, trefoil):
        assert (
            trefoil.mirror().mirror().canonical_code() == trefoil.canonical_code()
        )

    def test_mirror_preserves_planarity_with_virtuals(self):
        d = diagram(VTREFOIL)
        assert d.mirror().validate() == []
        # negating the virtual sign as well would leave genus 0
        broken = [
            Token(t.role, t.cid, -t.sign) if t.role == "V" else t
            for t in d.mirror().tokens
        ]
        assert validate_tokens(broken)  # the flat curve flips off the sphere

    def test_reverse_involution(self, trefoil):
        assert (
            trefoil.reverse().reverse().canonical_code() == trefoil.canonical_code()
        )

    def test_reverse_keeps_validity_and_parity(self, trefoil):
        r = diagram(VTREFOIL).reverse()
        assert r.validate() == []
        assert r.n_classical == 2 and r.n_virtual == 1
        assert trefoil.reverse().n_classical == 3

    def test_mirror_of_reverse_commutes(self):
        d = diagram(VTREFOIL)
        a = d.mirror().reverse().canonical_code()
        b = d.reverse().mirror().canonical_code()
        assert a == b


class TestCanonicalCode:
    def test_round_circle_sentinel(self):
        assert UNKNOT.canonical_code() == "()"

    def test_rotation_orbit_single_code(self, trefoil):
        codes = {trefoil.rotated(k).canonical_code() for k in range(6)}
        assert len(codes) == 1

    def test_rotation_orbit_with_virtual_sign_fixups(self, fig_inf):
        codes = {fig_inf.rotated(k).canonical_code() for k in range(2)}
        assert len(codes) == 1

    def test_rotated_diagrams_stay_valid(self):
        d = diagram(VTREFOIL)
        for k in range(len(d.tokens)):
            assert d.rotated(k).validate() == []

    def test_relabeling_invariance(self, trefoil):
        rng = random.Random(5)
        for _ in range(20):
            ids = sorted({t.cid for t in trefoil.tokens})
            perm = ids[:]
            rng.shuffle(perm)
            mapping = dict(zip(ids, perm))
            relabeled = PlanarDiagram(
                [Token(t.role, mapping[t.cid], t.sign) for t in trefoil.tokens]
            )
            assert relabeled.canonical_code() == trefoil.canonical_code()

    def test_distinct_diagrams_distinct_codes(self, trefoil, fig_inf):
        assert trefoil.canonical_code() != UNKNOT.canonical_code()
        assert fig_inf.canonical_code() != UNKNOT.canonical_code()


class TestGaussCode:
    def test_underlying_code_drops_virtuals(self, fig_inf):
        assert fig_inf.underlying_gauss_code() == GaussCode(())

    def test_trefoil_code_is_its_word(self, trefoil):
        gc = trefoil.underlying_gauss_code()
        assert gc == GaussCode(trefoil.tokens)

    def test_vtrefoil_code(self):
        d = diagram(VTREFOIL)
        assert d.underlying_gauss_code() == GaussCode(tuple(word(NONPLANAR)))

    def test_cyclic_equality(self, trefoil):
        gc = trefoil.underlying_gauss_code()
        rotated = GaussCode(trefoil.tokens[2:] + trefoil.tokens[:2])
        assert gc == rotated


class TestRealization:
    def test_empty_code(self):
        assert realize_gauss_code(GaussCode(())) == UNKNOT

    def test_planar_code_needs_no_virtuals(self, trefoil):
        d = realize_gauss_code(trefoil.underlying_gauss_code())
        assert d.n_virtual == 0
        assert d.underlying_gauss_code() == trefoil.underlying_gauss_code()

    def test_nonplanar_code_needs_virtuals(self):
        gc = GaussCode(tuple(word(NONPLANAR)))
        d = realize_gauss_code(gc)
        assert d.validate() == []
        assert d.n_virtual >= 1
        assert d.underlying_gauss_code() == gc

    def test_realization_roundtrip_random_codes(self):
        # underlying_gauss_code o realize = identity, on scrambled codes
        rng = random.Random(11)
        for trial in range(25):
            n = rng.randint(1, 5)
            positions = list(range(2 * n))
            rng.shuffle(positions)
            tokens: list = [None] * (2 * n)
            ok = True
            for cid in range(1, n + 1):
                p, q = positions[2 * cid - 2], positions[2 * cid - 1]
                s = rng.choice((1, -1))
                first, second = (p, q) if p < q else (q, p)
                tokens[first] = Token(rng.choice("OU"), cid, s)
                tokens[second] = Token(
                    "U" if tokens[first].role == "O" else "O", cid, s
                )
            gc = GaussCode(tuple(tokens))
            d = realize_gauss_code(gc)
            assert d.validate() == []
            assert d.underlying_gauss_code() == gc
