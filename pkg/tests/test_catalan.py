from math import comb

import pytest

from catalan_blocks.catalan import ballot, catalan, catalan_table, gf_coefficients


def test_small_values():
    assert [catalan(n) for n in range(5)] == [1, 1, 2, 5, 14]
    assert catalan(10) == 16796


def test_catalan_matches_quotient_form():
    for n in range(30):
        assert catalan(n) * (n + 1) == comb(2 * n, n)


def test_convolution_recurrence():
    for n in range(21):
        assert catalan(n + 1) == sum(catalan(i) * catalan(n - i) for i in range(n + 1))


def test_ballot_row_4():
    assert [ballot(4, k) for k in range(1, 5)] == [5, 5, 3, 1]
    assert sum(ballot(4, k) for k in range(5)) == catalan(4)


def test_ballot_edges():
    assert ballot(0, 0) == 1
    assert all(ballot(n, 0) == 0 for n in range(1, 13))
    assert all(ballot(n, 1) == catalan(n - 1) for n in range(1, 13))
    with pytest.raises(ValueError):
        ballot(3, 4)


def test_ballot_matches_quotient_form():
    for n in range(1, 15):
        for k in range(1, n + 1):
            assert ballot(n, k) * (2 * n - k) == k * comb(2 * n - k, n)


def test_gf_coefficients():
    assert gf_coefficients(0, 5) == [1, 0, 0, 0, 0, 0]
    for k in range(13):
        coeffs = gf_coefficients(k, 12)
        for n in range(k, 13):
            assert coeffs[n] == ballot(n, k)
    assert all(gf_coefficients(1, n)[n] == catalan(n - 1) for n in range(1, 13))


def test_table_invariants():
    t = catalan_table(12)
    assert t.C[10] == 16796
    for n, row in enumerate(t.triangle):
        assert sum(row) == t.C[n]


def test_table_tsv_matches_a009766_layout():
    lines = catalan_table(4).to_tsv().splitlines()
    assert lines[0].split("\t") == ["n\\k", "0", "1", "2", "3", "4"]
    assert lines[5].split("\t") == ["4", "0", "5", "5", "3", "1"]
