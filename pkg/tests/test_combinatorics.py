import itertools

import pytest

from qchar.combinatorics import (
    IntVector,
    MultiTableau,
    Partition,
    SignedMultiPartition,
    Tableau,
    bruhat_leq,
    column_stabilizer,
    enumerate_component,
    enumerate_tableaux,
    in_P_plus,
    multi_leq_T,
    multi_tableau_from_row_reading,
    pyramid_report,
    refine,
    tableau_from_row_reading,
    tableau_leq_T,
    wv_sub,
)


def T(parts, sign, rows):
    return Tableau(Partition(tuple(parts)), sign, tuple(tuple(r) for r in rows))


def MP(*pieces):
    return SignedMultiPartition(tuple((Partition(tuple(p)), s) for p, s in pieces))


# The three plus-sign and three minus-sign tableaux of shape (3,2,2) used as
# running examples: row-only, column-only, and standard.
ROW_PLUS = T((3, 2, 2), "+", [(2, 2), (3, 6), (0, 0, 1)])
COL_PLUS = T((3, 2, 2), "+", [(3, 6), (2, 2), (0, 1, 0)])
STD_PLUS = T((3, 2, 2), "+", [(3, 6), (2, 2), (0, 0, 1)])
ROW_MINUS = T((3, 2, 2), "-", [(2, 2), (1, 0), (6, 3, 3)])
COL_MINUS = T((3, 2, 2), "-", [(1, 0), (2, 2), (3, 3, 6)])
STD_MINUS = T((3, 2, 2), "-", [(1, 0), (2, 2), (6, 3, 3)])


class TestTableauPredicates:
    def test_running_examples_plus(self):
        assert ROW_PLUS.is_row() and not ROW_PLUS.is_col()
        assert COL_PLUS.is_col() and not COL_PLUS.is_row()
        assert STD_PLUS.is_std()

    def test_running_examples_minus(self):
        assert ROW_MINUS.is_row() and not ROW_MINUS.is_col()
        assert COL_MINUS.is_col() and not COL_MINUS.is_row()
        assert STD_MINUS.is_std()


class TestReadingsAndWeights:
    def test_column_reading(self):
        assert STD_PLUS.column_reading() == (3, 2, 0, 6, 2, 0, 1)

    def test_row_reading(self):
        assert STD_PLUS.row_reading() == (3, 6, 2, 2, 0, 0, 1)

    def test_single_box(self):
        t = T((1,), "+", [(7,)])
        assert t.column_reading() == (7,)
        assert t.row_reading() == (7,)

    def test_weight(self):
        assert STD_PLUS.weight() == {0: 2, 1: 1, 2: 2, 3: 1, 6: 1}

    def test_signed_weight_flips_sign(self):
        mt = MultiTableau((STD_MINUS,))
        assert mt.weight_signed() == {a: -c for a, c in STD_MINUS.weight().items()}

    def test_partial_weight_last_component(self):
        mt = MultiTableau((STD_PLUS, STD_MINUS))
        assert mt.partial_weight(2) == {a: -c for a, c in STD_MINUS.weight().items()}

    def test_row_reading_round_trip(self):
        rebuilt = tableau_from_row_reading(STD_PLUS.shape, "+", STD_PLUS.row_reading())
        assert rebuilt == STD_PLUS


class TestPPlus:
    def test_generator(self):
        assert in_P_plus({0: 1, 1: -1})

    def test_negated_generator(self):
        assert not in_P_plus({0: -1, 1: 1})

    def test_nonzero_total(self):
        assert not in_P_plus({0: 2, 1: -1})

    def test_brute_force_agreement(self):
        # N-combinations of delta_a - delta_{a+1}, a in [-3, 2], coefficients <= 4.
        reachable = set()
        coords = range(-3, 3)
        for coeffs in itertools.product(range(5), repeat=len(coords)):
            nu = {}
            for a, c in zip(coords, coeffs):
                nu[a] = nu.get(a, 0) + c
                nu[a + 1] = nu.get(a + 1, 0) - c
            reachable.add(tuple(sorted((a, c) for a, c in nu.items() if c)))
        for support in itertools.product(range(-3, 4), repeat=3):
            for vals in itertools.product(range(-4, 5), repeat=3):
                nu = {}
                for a, c in zip(support, vals):
                    nu[a] = nu.get(a, 0) + c
                nu = {a: c for a, c in nu.items() if c}
                key = tuple(sorted(nu.items()))
                if max((abs(c) for c in nu.values()), default=0) <= 4:
                    assert in_P_plus(nu) == (key in reachable), nu


class TestBruhatOrder:
    def test_reflexive(self):
        f = IntVector((3, 1, 2), ("+", "+", "-"))
        assert bruhat_leq(f, f)

    def test_two_letter_plus(self):
        s = ("+", "+")
        assert bruhat_leq(IntVector((1, 2), s), IntVector((2, 1), s))
        assert not bruhat_leq(IntVector((2, 1), s), IntVector((1, 2), s))

    def test_different_weight(self):
        s = ("+", "+")
        assert not bruhat_leq(IntVector((1, 1), s), IntVector((2, 1), s))

    @pytest.mark.parametrize("signs", [("+", "+", "+"), ("+", "-", "+"), ("-", "-", "+")])
    def test_poset_axioms(self, signs):
        vectors = [IntVector(v, signs) for v in itertools.product(range(3), repeat=3)]
        for f in vectors:
            assert bruhat_leq(f, f)
        for f, g in itertools.permutations(vectors, 2):
            if bruhat_leq(f, g) and bruhat_leq(g, f):
                assert f == g
        for f, g, h in itertools.permutations(vectors, 3):
            if bruhat_leq(f, g) and bruhat_leq(g, h):
                assert bruhat_leq(f, h)


class TestTableauOrder:
    def test_reflexive(self):
        assert tableau_leq_T(STD_PLUS, STD_PLUS, "+")

    def test_antisymmetry_exhaustive(self):
        tabs = enumerate_component(Partition((2, 1)), "+", "row", (0, 2))
        for a, b in itertools.permutations(tabs, 2):
            if tableau_leq_T(a, b, "+") and tableau_leq_T(b, a, "+"):
                assert a == b

    def test_multi_reflexive(self):
        mt = MultiTableau((STD_PLUS, STD_MINUS))
        assert multi_leq_T(mt, mt)

    def test_multi_single_component_collapses(self):
        tabs = enumerate_component(Partition((2, 1)), "+", "std", (0, 2))
        for a, b in itertools.product(tabs, repeat=2):
            assert multi_leq_T(MultiTableau((a,)), MultiTableau((b,))) == tableau_leq_T(
                a, b, "+"
            )

    def test_multi_transitive_exhaustive(self):
        shape = MP(((1,), "+"), ((1,), "+"))
        tabs = enumerate_tableaux(shape, "std", (0, 2))
        for a, b, c in itertools.permutations(tabs, 3):
            if multi_leq_T(a, b) and multi_leq_T(b, c):
                assert multi_leq_T(a, c)


class TestRefine:
    # The running eight-piece refinement example.
    EXAMPLE = MP(((3, 3, 1), "+"), ((4, 2), "-"), ((2,), "+"), ((3, 1), "-"))

    def test_refined_pieces(self):
        ref = refine(self.EXAMPLE)
        assert [p.parts for p, _ in ref.ulam.pieces] == [
            (3,), (3,), (1,), (4,), (2,), (2,), (3,), (1,),
        ]
        assert ref.uep == ("+", "+", "+", "-", "-", "+", "-", "-")

    def test_box_sign_sequence(self):
        ref = refine(self.EXAMPLE)
        assert "".join(ref.s) == "+" * 7 + "-" * 6 + "+" * 2 + "-" * 4

    def test_plus_minus_compositions(self):
        ref = refine(self.EXAMPLE)
        assert ref.lam_plus == (3, 3, 1, 2)
        assert ref.lam_minus == (4, 2, 3, 1)
        assert (self.EXAMPLE.n, self.EXAMPLE.m) == (9, 10)

    def test_single_piece(self):
        ref = refine(MP(((4,), "+")))
        assert [p.parts for p, _ in ref.ulam.pieces] == [(4,)]
        assert ref.uep == ("+",)
        assert ref.s == ("+",) * 4


class TestEnumeration:
    def test_window_singleton(self):
        for kind in ("row", "col", "std"):
            tabs = enumerate_tableaux((Partition((1,)), "+"), kind, (5, 5))
            assert len(tabs) == 1
            assert tabs[0].row_reading() == (5,)

    def test_running_example_membership(self):
        tabs = enumerate_component(Partition((3, 2, 2)), "+", "std", (0, 6))
        assert STD_PLUS in tabs
        assert ROW_PLUS not in tabs
        row_tabs = enumerate_component(Partition((3, 2, 2)), "+", "row", (0, 6))
        assert ROW_PLUS in row_tabs

    def test_minus_example_membership(self):
        tabs = enumerate_component(Partition((3, 2, 2)), "-", "std", (0, 6))
        assert STD_MINUS in tabs

    def test_counts_against_brute_force(self):
        shapes = [(1,), (2,), (1, 1), (2, 1), (3, 2), (2, 2, 1), (3, 2, 1)]
        windows = [(0, 1), (0, 2), (1, 3), (0, 3)]
        for parts, sign, window in itertools.product(shapes, "+-", windows):
            lam = Partition(parts)
            lo, hi = window
            fillings = [
                tableau_from_row_reading(lam, sign, values)
                for values in itertools.product(range(lo, hi + 1), repeat=lam.size)
            ]
            for kind, pred in (
                ("row", Tableau.is_row),
                ("col", Tableau.is_col),
                ("std", Tableau.is_std),
            ):
                expected = sum(1 for t in fillings if pred(t))
                got = enumerate_component(lam, sign, kind, window)
                assert len(got) == expected, (parts, sign, window, kind)
                assert all(pred(t) for t in got)

    def test_std_subset_of_row(self):
        shape = MP(((2, 1), "+"), ((2,), "-"))
        row = set(enumerate_tableaux(shape, "row", (0, 2)))
        std = set(enumerate_tableaux(shape, "std", (0, 2)))
        assert std <= row

    def test_output_sorted_by_row_reading(self):
        tabs = enumerate_tableaux(MP(((2, 1), "+"), ((1,), "-")), "row", (0, 2))
        readings = [t.row_reading() for t in tabs]
        assert readings == sorted(readings)

    def test_multi_round_trip(self):
        shape = MP(((2, 1), "+"), ((2,), "-"))
        for mt in enumerate_tableaux(shape, "row", (0, 2)):
            assert multi_tableau_from_row_reading(shape, mt.row_reading()) == mt


class TestColumnStabilizer:
    def test_single_column_of_height_two(self):
        mt = MultiTableau((T((1, 1), "+", [(2,), (1,)]),))
        elements = list(column_stabilizer(mt))
        assert len(elements) == 2
        assert sorted(length for _, length in elements) == [0, 1]

    def test_hook_size(self):
        mt = MultiTableau((T((2, 1), "+", [(2,), (0, 1)]),))
        assert len(list(column_stabilizer(mt))) == 2

    def test_sign_character_sums_to_zero(self):
        mt = MultiTableau((T((2, 2), "+", [(2, 3), (0, 1)]),))
        assert sum((-1) ** length for _, length in column_stabilizer(mt)) == 0

    def test_rejects_repeated_column_entry(self):
        mt = MultiTableau((T((1, 1), "+", [(1,), (1,)]),))
        with pytest.raises(ValueError):
            list(column_stabilizer(mt))


class TestPyramidReport:
    SHAPE = [((3, 3, 1), None), ((4, 2), None), ((2,), None), ((3, 1), None)]

    def _mp(self, signs):
        return MP(*((parts, s) for (parts, _), s in zip(self.SHAPE, signs)))

    def test_g0_signature_plus_plus_minus_minus(self):
        report = pyramid_report(self._mp("++--"))
        assert report.g0 == ("gl_{5|3}", "gl_{4|2}", "gl_{3|1}", "gl_1")

    def test_g0_signature_alternating(self):
        report = pyramid_report(self._mp("+-+-"))
        assert report.g0 == ("gl_{4|4}", "gl_{3|3}", "gl_{2|2}", "gl_1")

    def test_trivial_piece(self):
        report = pyramid_report(MP(((1,), "+")))
        assert report.g0 == ("gl_1",)
        assert report.e_support == ()

    def test_column_length_identities(self):
        mp = self._mp("+-+-")
        report = pyramid_report(mp)
        for (p, _), cols in zip(mp.pieces, report.column_lengths):
            assert sum(cols) == p.size
        assert sum(report.q_plus) + sum(report.q_minus) == mp.n + mp.m

    def test_e_support_counts(self):
        # One pair per horizontal domino: |lam| - (number of rows) per piece.
        mp = self._mp("++--")
        report = pyramid_report(mp)
        expected = sum(p.size - p.length for p, _ in mp.pieces)
        assert len(report.e_support) == expected

    def test_theta_rejected_when_not_decreasing(self):
        with pytest.raises(ValueError):
            pyramid_report(self._mp("++--"), theta=(3, 3, 2, 1))

    def test_theta_accepted_when_decreasing(self):
        report = pyramid_report(self._mp("++--"), theta=(9, 5, 2, 0))
        assert report.theta_ok
