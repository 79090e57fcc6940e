"""Hilbert series: rational form, expansion against a monomial-counting
oracle, reciprocal long division, and the sign-alternation evidence."""

from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prewdvv.hilbert import (
    REFERENCE_NUMERATORS,
    HilbertSeries,
    Table1Row,
    hilbert_series,
    koszul_evidence,
    verify_table1,
)
from prewdvv.whitehouse import h_recurrence


def test_reference_numerators_match_recurrence():
    for n, numerator in REFERENCE_NUMERATORS.items():
        assert h_recurrence(n).entries == numerator


class TestHilbertSeries:
    def test_string_forms(self):
        assert str(hilbert_series(3)) == "1"
        assert str(hilbert_series(4)) == "(1 + 2t) / (1 - t)"
        assert str(hilbert_series(5)) == "(1 + 8t + 6t^2) / (1 - t)^2"

    def test_validation(self):
        with pytest.raises(ValueError):
            HilbertSeries((2, 1), 1)
        with pytest.raises(ValueError):
            HilbertSeries((1,), -1)

    def test_expand_with_trivial_denominator(self):
        assert HilbertSeries((1,), 0).expand(4) == (1, 0, 0, 0)

    def test_expand_geometric(self):
        assert HilbertSeries((1,), 1).expand(5) == (1, 1, 1, 1, 1)

    def test_expand_smallest_interesting_ring(self):
        # three vertices, all pairs crossing: 1, 3, 3, 3, ...
        assert hilbert_series(4).expand(5) == (1, 3, 3, 3, 3)

    def test_frozen_reciprocal(self):
        assert hilbert_series(4).reciprocal(4) == (1, -3, 6, -12)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_reciprocal_inverts_expansion(self, n):
        series = hilbert_series(n)
        c = series.expand(15)
        r = series.reciprocal(15)
        conv = [sum(c[j] * r[k - j] for j in range(k + 1)) for k in range(15)]
        assert conv == [1] + [0] * 14


def _monomial_count(K, degree):
    """Monomials of the given degree whose support is a face, counted
    directly over multisets of vertex indices."""
    nv = len(K.vertices)
    return sum(
        1 for combo in combinations_with_replacement(range(nv), degree)
        if tuple(sorted(set(combo))) in K
    )


@pytest.mark.parametrize("n", [4, 5])
def test_expansion_counts_monomials(n, delta):
    series = hilbert_series(n)
    expansion = series.expand(5)
    K = delta(n)
    for degree in range(5):
        assert expansion[degree] == _monomial_count(K, degree)


class TestKoszulEvidence:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_signs_alternate(self, n):
        ev = koszul_evidence(n)
        assert len(ev.terms) == 20
        assert ev.alternating
        assert ev.terms[0] == 1

    def test_zero_terms_allowed(self):
        # the size-3 ring is the base field: 1/H = 1, all later terms zero
        ev = koszul_evidence(3)
        assert ev.terms == (1,) + (0,) * 19
        assert ev.alternating

    def test_alternation_detects_violations(self):
        from prewdvv.hilbert import KoszulEvidence
        assert not KoszulEvidence(0, (1, -2, -3)).alternating
        assert KoszulEvidence(0, (1, -2, 3, 0, 5)).alternating


class TestTable1:
    def test_verify_table1_passes(self):
        report = verify_table1()
        assert report.ok
        assert [r.n for r in report.rows] == [3, 4, 5, 6, 7, 8]
        for row in report.rows:
            assert row.from_faces == row.reference

    def test_row_detects_mismatch(self):
        row = Table1Row(n=5, from_faces=(1, 8, 6), from_recurrence=(1, 8, 6),
                        reference=(1, 8, 7))
        assert not row.ok

    def test_subset_of_sizes(self):
        report = verify_table1(sizes=[4, 5])
        assert [r.n for r in report.rows] == [4, 5]
        assert report.ok


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=9), min_size=0, max_size=4),
       st.integers(min_value=0, max_value=3))
def test_expand_matches_naive_polynomial_division(tail, d):
    numerator = (1, *tail)
    series = HilbertSeries(numerator, d)
    got = series.expand(10)
    # multiply the expansion back by (1-t)^d and recover the numerator
    poly = list(got)
    for _ in range(d):
        poly = [poly[0]] + [poly[k] - poly[k - 1] for k in range(1, len(poly))]
    padded = numerator + (0,) * (10 - len(numerator))
    assert tuple(poly) == padded[:10]
