from __future__ import annotations

import pytest

import quandleknot as qk
import fixtures as fx
import oracles


class TestSymbolicLongitude:
    def test_unknot_empty(self):
        assert qk.symbolic_longitude(fx.UNKNOT_LONG).letters == ()

    def test_5_2_word(self):
        sym = qk.symbolic_longitude(fx.KNOT_5_2_LONG)
        # all-negative crossings: under letters unbarred, over letters barred
        assert sym.letters == (
            (1, False), (4, True), (2, False), (5, True), (3, False),
            (2, True), (4, False), (1, True), (5, False), (3, True),
        )
        assert sym.render() == "{x1, x̄4, x2, x̄5, x3, x̄2, x4, x̄1, x5, x̄3}"

    def test_single_positive_kink(self):
        sym = qk.symbolic_longitude(fx.SINGLE_POSITIVE_KINK)
        assert sym.letters == ((1, True), (2, False))
        assert sym.render() == "{x̄1, x2}"


class TestColoredLongitude:
    def test_monochromatic_gives_identity(self, s5_class):
        q = fx.query_5_2()
        mono = qk.Coloring(fx.KNOT_5_2_LONG, ((q.basepoint,) * 6,))
        assert qk.colored_longitude(fx.KNOT_5_2_LONG, s5_class, mono) == \
            qk.identity_automorphism(s5_class)

    def test_unknot_identity(self):
        d3 = qk.dihedral(3)
        mono = qk.Coloring(fx.UNKNOT_LONG, ((1,),))
        assert qk.colored_longitude(fx.UNKNOT_LONG, d3, mono) == qk.identity_automorphism(d3)

    def test_maps_basepoint_to_final_color(self, s5_class):
        q = fx.query_5_2()
        for c in qk.colorings_long(fx.KNOT_5_2_LONG, s5_class, q.basepoint):
            phi = qk.colored_longitude(fx.KNOT_5_2_LONG, s5_class, c)
            assert phi(c.arc_colors[0]) == c.arc_colors[-1]

    def test_composed_translations_agree(self, s5_class):
        # two routes: pointwise word evaluation vs composed translation maps
        q = fx.query_5_2()
        for c in qk.colorings_long(fx.KNOT_5_2_LONG, s5_class, q.basepoint):
            via_word = qk.colored_longitude(fx.KNOT_5_2_LONG, s5_class, c)
            via_translations = oracles.longitude_by_composed_translations(
                fx.KNOT_5_2_LONG, s5_class, c)
            assert via_word == via_translations

    def test_all_longitudes_are_automorphisms(self, s5_class):
        q = fx.query_5_2()
        for c in qk.colorings_long(fx.KNOT_5_2_LONG, s5_class, q.basepoint):
            phi = qk.colored_longitude(fx.KNOT_5_2_LONG, s5_class, c)
            assert qk.is_automorphism(s5_class, phi.images)

    def test_coloring_diagram_mismatch(self, s5_class):
        mono = qk.Coloring(fx.UNKNOT_LONG, ((0,),))
        with pytest.raises(ValueError):
            qk.colored_longitude(fx.KNOT_5_2_LONG, s5_class, mono)

    def test_trivial_pair_insertion_is_neutral(self, s5_class):
        # inserting (q, q-bar) anywhere leaves the evaluation unchanged
        q = fx.query_5_2()
        letters = qk.symbolic_longitude(fx.KNOT_5_2_LONG).letters
        for c in qk.colorings_long(fx.KNOT_5_2_LONG, s5_class, q.basepoint):
            word = tuple((c.arc_colors[arc - 1], barred) for arc, barred in letters)
            base = qk.eval_word(s5_class, q.act_on, word)
            for cut in (0, 3, len(word)):
                padded = word[:cut] + ((q.basepoint, False), (q.basepoint, True)) + word[cut:]
                assert qk.eval_word(s5_class, q.act_on, padded) == base


class TestFamiliesAndSums:
    def test_family_size_is_coloring_count(self, s5_class):
        q = fx.query_5_2()
        fam = qk.longitude_family(fx.KNOT_5_2_LONG, s5_class, q.basepoint)
        assert len(fam) == 7

    def test_5_2_formal_sum(self, s5_class):
        q = fx.query_5_2()
        s = qk.formal_sum(fx.KNOT_5_2_LONG, s5_class, q)
        assert s == fx.sum_of(s5_class, {"(1,2,4)(3,5)": 6, "(1,2,3)(4,5)": 1})
        assert qk.sum_render(s) == "6 · (1,2,4)(3,5) + (1,2,3)(4,5)"

    def test_5_2_mirror_sum(self, s5_class):
        q = fx.query_5_2()
        s = qk.formal_sum(qk.mirror(fx.KNOT_5_2_LONG), s5_class, q)
        assert s == fx.sum_of(s5_class, {"(1,2,5)(3,4)": 6, "(1,2,3)(4,5)": 1})

    def test_trivial_quandle_sum(self):
        t5 = qk.trivial(5)
        query = qk.InvariantQuery(t5, 0, 2)
        s = qk.formal_sum(fx.KNOT_5_2_LONG, t5, query)
        assert s.terms == ((2, 1),)
        assert qk.sum_render(s) == "2"

    def test_sum_agrees_across_codes_of_same_knot(self, s5_class):
        q = fx.query_5_2()
        from_primary_code = qk.formal_sum(qk.break_at(fx.KNOT_5_2_CLOSED, 1), s5_class, q)
        from_braid_code = qk.formal_sum(qk.break_at(fx.KNOT_5_2_CLOSED_ALT, 1), s5_class, q)
        assert qk.sum_equal(from_primary_code, from_braid_code)

    def test_mass_and_basepoint_coefficient(self, s5_class, a5):
        cases = [
            (fx.KNOT_5_2_LONG, s5_class, fx.query_5_2(), 7),
            (qk.break_at(fx.KNOT_9_42_CLOSED, 1), a5, fx.query_9_42(), 13),
        ]
        for d, quandle, query, count in cases:
            s = qk.formal_sum(d, quandle, query)
            assert s.mass() == count == len(qk.colorings_long(d, quandle, query.basepoint))
            assert s.coefficient(query.act_on) >= 1


class TestSumAlgebra:
    def test_inclusion_reflexive_and_empty(self, s5_class):
        s = qk.formal_sum(fx.KNOT_5_2_LONG, s5_class, fx.query_5_2())
        empty = qk.FormalSum(s5_class, ())
        assert qk.sum_included(s, s)
        assert qk.sum_included(empty, s)
        assert not qk.sum_included(s, empty)

    def test_inclusion_fails_across_elements(self, a6):
        x = fx.query_t62().act_on
        other = a6.element_index("(1,2,5,3,4)")
        a = qk.FormalSum(a6, tuple(sorted([(other, 8), (x, 1)])))
        b = qk.FormalSum(a6, ((x, 33),))
        assert not qk.sum_included(a, b)
        assert qk.sum_included(qk.FormalSum(a6, ((x, 9),)), b)

    def test_render_orders_by_coefficient(self, s5_class):
        s = qk.FormalSum(s5_class, tuple(sorted([(0, 1), (3, 5)])))
        rendered = qk.sum_render(s)
        assert rendered.startswith("5 · ") and " + " in rendered

    def test_render_empty(self, s5_class):
        assert qk.sum_render(qk.FormalSum(s5_class, ())) == "0"

    def test_json_map(self, s5_class):
        s = qk.formal_sum(fx.KNOT_5_2_LONG, s5_class, fx.query_5_2())
        assert qk.sum_to_json(s) == '{"(1,2,3)(4,5)": 1, "(1,2,4)(3,5)": 6}'


class TestTangleLongitudes:
    def test_crossingless_parts_empty(self):
        d3 = qk.dihedral(3)
        t = fx.crossingless_tangle()
        c = qk.colorings_tangle_boundary_mono(t, d3, 0)[0]
        assert qk.tangle_longitude_parts(t, c) == ((), ())

    def test_interleaved_part_structure(self, a6):
        # strand 1 word: own arcs 1,2,3 unbarred, other strand's arcs 3,4,2 barred
        q = fx.query_t62()
        t = fx.tangle_t62_interleaved()
        for c in qk.colorings_tangle_boundary_mono(t, a6, q.basepoint):
            s1, s2 = c.strands
            w1, w2 = qk.tangle_longitude_parts(t, c)
            assert w1 == ((s1[0], False), (s2[2], True), (s1[1], False),
                          (s2[3], True), (s1[2], False), (s2[1], True))
            assert w2 == ((s2[0], False), (s1[2], True), (s2[1], False),
                          (s1[3], True), (s2[2], False), (s1[1], True))

    def test_t62_sums(self, a6):
        q = fx.query_t62()
        s1, s2 = qk.tangle_sums(fx.tangle_t62(), a6, q)
        expected = fx.sum_of(a6, {"(1,2,5,3,4)": 8, "(1,2,3,4,5)": 1})
        assert s1 == expected and s2 == expected
        assert s1.mass() == 9

    def test_crossingless_sums(self):
        d3 = qk.dihedral(3)
        query = qk.InvariantQuery(d3, 0, 2)
        s1, s2 = qk.tangle_sums(fx.crossingless_tangle(), d3, query)
        assert s1.terms == s2.terms == ((2, 1),)

    def test_part_concatenation_evaluates_like_closure(self, a6):
        # closing the tangle with trivial arcs turns word1+word2 into the
        # closure's longitude; the sums must agree
        q = fx.query_t62()
        s1, _ = qk.tangle_sums(fx.tangle_t62(), a6, q)
        closure_sum = qk.formal_sum(fx.t62_closure_long(), a6, q)
        assert qk.sum_included(s1, closure_sum)
