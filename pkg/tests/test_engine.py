"""Tests for cohomology reports, spectral pages and cross-checks."""

import pytest

from dlcoh.core.errors import CoefficientError, InvalidInputError
from dlcoh.engine import (
    all_reports,
    canonical_sheaf_cohomology,
    compact_support_cohomology,
    cross_check,
    etale_constant_cohomology,
    irreducible_components,
    is_affine,
    is_irreducible,
    spectral_pages,
    structure_sheaf_cohomology,
)
from dlcoh.engine.cohomology import WITT_NOTE, ZP_NOTE
from dlcoh.monoid.words import Word
from dlcoh.schemas.reports import CoefficientKind, RepKind, Variety


class TestStructureSheaf:
    def test_concentrated_in_degree_zero(self):
        report = structure_sheaf_cohomology(Word((1, 2), 3), 3, 2)
        assert report.variety == Variety.COMPACTIFIED
        assert report.coefficients.kind == CoefficientKind.STRUCTURE_SHEAF
        assert report.nonzero_degrees() == [0]
        assert sorted(report.entries) == [0, 1, 2]
        assert report.entries[0].kind == RepKind.INDUCED_TRIVIAL
        assert report.entries[0].parabolic == [1, 2]
        assert report.dimension(0) == 1
        assert report.trace is None

    def test_proper_support_counts_components(self):
        report = structure_sheaf_cohomology(Word((2,), 4), 4, 2)
        assert report.dimension(0) == 105
        assert report.entries[0].parabolic == [2]

    def test_repeated_letters_attach_a_trace(self):
        report = structure_sheaf_cohomology(Word((1, 2, 1), 3), 3, 2)
        assert report.nonzero_degrees() == [0]
        assert sorted(report.entries) == [0, 1, 2, 3]
        assert report.trace[0] == "# start n=3 [1,2,1]"
        assert report.trace[-1] == "# result [2,1]"

    def test_empty_word(self):
        with pytest.raises(InvalidInputError):
            structure_sheaf_cohomology(Word((), 3), 3, 2)


def test_canonical_sheaf_is_top_degree():
    report = canonical_sheaf_cohomology(Word((1, 2), 3), 3, 2)
    assert report.nonzero_degrees() == [2]
    assert report.dimension(2) == 1


class TestEtale:
    def test_mod_pm(self):
        report = etale_constant_cohomology(Word((1,), 3), 3, 2, 2, 3)
        assert report.coefficients.kind == CoefficientKind.MOD_P_M
        assert report.coefficients.m == 3
        assert report.nonzero_degrees() == [0]
        assert report.dimension(0) == 7
        assert WITT_NOTE in report.notes

    def test_zp(self):
        report = etale_constant_cohomology(Word((1,), 3), 3, 9, 3)
        assert report.coefficients.kind == CoefficientKind.Z_P
        assert report.coefficients.m is None
        assert ZP_NOTE in report.notes

    def test_empty_word_is_the_finite_flag_variety(self):
        report = etale_constant_cohomology(Word((), 3), 3, 2, 2, 1)
        assert report.nonzero_degrees() == [0]
        assert report.dimension(0) == 21

    def test_prime_must_be_the_characteristic(self):
        with pytest.raises(CoefficientError) as info:
            etale_constant_cohomology(Word((1,), 2), 2, 4, 3, 1)
        assert info.value.exit_code == 2
        with pytest.raises(CoefficientError):
            etale_constant_cohomology(Word((1,), 2), 2, 4, 2, 0)


class TestCompactSupport:
    @pytest.mark.parametrize(
        "letters, n, q, dimension",
        [((1,), 3, 2, 14), ((1, 2), 3, 2, 8), ((1,), 2, 3, 3), ((1, 2, 1), 3, 2, 8)],
    )
    def test_induced_steinberg_in_top_degree(self, letters, n, q, dimension):
        w = Word(letters, n)
        report = compact_support_cohomology(w, n, q, 2 if q % 2 == 0 else 3, 1)
        assert report.variety == Variety.OPEN_COMPACT_SUPPORT
        assert report.nonzero_degrees() == [len(w)]
        assert report.entries[len(w)].kind == RepKind.INDUCED_STEINBERG
        assert report.dimension(len(w)) == dimension

    def test_ranks_do_not_depend_on_m(self):
        w = Word((2, 1), 3)
        dims = {compact_support_cohomology(w, 3, 4, 2, m).dimension(2) for m in (1, 2, 3, None)}
        assert dims == {4**3}


def test_components_and_irreducibility():
    assert irreducible_components(Word((2,), 4), 4, 2) == 105
    assert irreducible_components(Word((1, 2, 3), 4), 4, 2) == 1
    assert is_irreducible(Word((2, 1, 2), 3), 3)
    assert not is_irreducible(Word((1,), 3), 3)


def test_all_reports():
    reports = all_reports(Word((1, 2), 3), 3, 2, (1, 2))
    assert len(reports) == 8
    kinds = [(r.variety, r.coefficients.kind) for r in reports]
    assert kinds[:2] == [
        (Variety.COMPACTIFIED, CoefficientKind.STRUCTURE_SHEAF),
        (Variety.COMPACTIFIED, CoefficientKind.CANONICAL_SHEAF),
    ]
    assert kinds[-2:] == [
        (Variety.COMPACTIFIED, CoefficientKind.Z_P),
        (Variety.OPEN_COMPACT_SUPPORT, CoefficientKind.Z_P),
    ]


class TestSpectralPages:
    @pytest.mark.parametrize("m", [1, 2, None])
    def test_flagship(self, m):
        page1, page2 = spectral_pages(Word((1, 2), 3), 3, 2, 2, m)
        assert page1.page_index == 1
        assert page1.row(0) == [1, 14, 21]
        assert all(page1.row(j) == [0, 0, 0] for j in (1, 2))
        assert page2.support() == [(2, 0)]
        assert page2.at(2, 0) == 8

    def test_needs_distinct_letters(self):
        with pytest.raises(InvalidInputError):
            spectral_pages(Word((1, 2, 1), 3), 3, 2, 2, 1)

    def test_needs_characteristic(self):
        with pytest.raises(CoefficientError):
            spectral_pages(Word((1,), 2), 2, 2, 3, 1)


class TestCrossCheck:
    def test_distinct_word(self):
        assert cross_check(Word((1, 2), 3), 3, 2, 2, 1)

    def test_repeated_letters(self):
        assert cross_check(Word((1, 2, 1), 3), 3, 3, 3, 2)

    def test_zp(self):
        assert cross_check(Word((1,), 3), 3, 2, 2, None)

    def test_empty_word(self):
        with pytest.raises(InvalidInputError):
            cross_check(Word((), 3), 3, 2, 2)


@pytest.mark.parametrize("q", [2, 3])
def test_euler_characteristic_of_e1_matches_compact_support(q):
    from dlcoh.workflows.verification_workflow import distinct_words

    for w in distinct_words(3):
        page1, _ = spectral_pages(w, 3, q, q, 1)
        euler = sum((-1) ** i * rank for i, rank in enumerate(page1.row(0)))
        top = compact_support_cohomology(w, 3, q, q, 1).dimension(len(w))
        assert euler == (-1) ** len(w) * top


@pytest.mark.parametrize(
    "letters, n, q, expected",
    [
        ((1, 2), 3, 2, True),
        ((2,), 4, 2, True),
        ((1, 2, 1), 3, 2, None),
        ((1, 2, 1), 3, 4, True),
        ((1, 1), 3, 5, None),
        ((), 3, 2, True),
    ],
)
def test_affineness_criteria(letters, n, q, expected):
    assert is_affine(Word(letters, n), n, q) is expected


def test_reports_carry_affineness():
    assert compact_support_cohomology(Word((1, 2), 3), 3, 2, 2, 1).affine is True
    assert structure_sheaf_cohomology(Word((1, 2, 1), 3), 3, 2).affine is None
    assert structure_sheaf_cohomology(Word((1, 2, 1), 3), 3, 4).affine is True
