import math

import pytest

from poolregions import oracle, seq2d
from poolregions.errors import InvalidParamsError
from poolregions.faces import is_face, selection_from_word
from poolregions.model import windows_3xn
from poolregions.polyalg import series_coeffs


def test_q2_vertices_are_the_14_faces():
    words = seq2d.q2_vertices()
    assert len(words) == len(set(words)) == 14
    assert set(words) == set(oracle.enumerate_vertices(windows_3xn(2)))


def test_q2_excluded_pairs():
    # only the two cross choices inside the shared middle row are not faces
    fam = windows_3xn(2)
    all_words = {
        (a, b) for a in sorted(fam.windows[0]) for b in sorted(fam.windows[1])
    }
    excluded = all_words - set(seq2d.q2_vertices())
    # middle-row cells of the 3x2 grid are flat indices 2 and 3
    assert excluded == {(2, 3), (3, 2)}
    for word in excluded:
        assert not is_face(selection_from_word(fam, word))


def test_derive_a14_matches_embedded():
    derived = seq2d.derive_a14()
    assert derived.entries == seq2d.A14_ENTRIES


def test_a14_entry_examples():
    assert seq2d.A14_ENTRIES[0][2] == 1  # (1,3) one-based
    assert seq2d.A14_ENTRIES[1][10] == 0  # (2,11) one-based
    assert sum(sum(r) for r in seq2d.A14_ENTRIES) == 150


def test_count_2d_small_values():
    assert seq2d.count_2d(2, "b6") == 14
    assert seq2d.count_2d(3, "b6") == 150
    assert seq2d.count_2d(4, "b6") == 1536
    assert seq2d.count_2d(5, "b6") == 15594
    # applying the recurrence once past the listed values
    assert seq2d.count_2d(6, "b6") == 13 * 15594 - 31 * 1536 + 20 * 150 - 4 * 14


def test_count_2d_methods_agree():
    for n in (2, 3, 4):
        want = seq2d.count_2d(n, "b6")
        assert seq2d.count_2d(n, "gf") == want
        assert seq2d.count_2d(n, "oracle") == want
        if n <= 3:
            assert seq2d.count_2d(n, "a14") == want
    for n in range(2, 21):
        assert seq2d.count_2d(n, "gf") == seq2d.count_2d(n, "b6")


def test_count_2d_method_restrictions():
    with pytest.raises(InvalidParamsError):
        seq2d.count_2d(4, "a14")
    with pytest.raises(InvalidParamsError):
        seq2d.count_2d(5, "oracle")
    with pytest.raises(InvalidParamsError):
        seq2d.count_2d(1, "b6")


def test_gf_2d_series():
    assert series_coeffs(seq2d.gf_2d(), 5) == [0, 1, 14, 150, 1536, 15594]
    g = seq2d.gf_2d()
    assert g.den[0] == 1
    assert (g.num, g.den) == ((0, 1, 1, -1), (1, -13, 31, -20, 4))


def test_recurrence_order_four():
    v = {n: seq2d.count_2d(n, "b6") for n in range(2, 21)}
    for n in range(2, 17):
        assert v[n + 4] == 13 * v[n + 3] - 31 * v[n + 2] + 20 * v[n + 1] - 4 * v[n]


def test_count_2xn():
    assert [seq2d.count_2xn(n) for n in (2, 3, 4, 5)] == [4, 14, 48, 164]


def test_class_counts_n2():
    assert seq2d.class_counts(2).counts == (1,) * 14


def test_class_counts_n3_are_row_sums():
    counts = seq2d.class_counts(3).counts
    assert counts == tuple(sum(row) for row in seq2d.A14_ENTRIES)
    assert sum(counts) == 150


def test_class_counts_identities():
    for n in (2, 3, 4):
        c = seq2d.class_counts(n).counts
        # reflection symmetry pairs, one-based (1,10), (2,13), (11,5), (4,7)
        assert c[0] == c[9]
        assert c[1] == c[12]
        assert c[10] == c[4]
        assert c[3] == c[6]
        # the four-way identity among positions 2, 13, 5, 11
        assert c[1] == c[12] == c[4] == c[10]
        assert sum(c) == seq2d.count_2d(n, "b6")
    for n in (3, 4):
        c = seq2d.class_counts(n).counts
        assert c[5] == c[7] == c[11] == c[13] == seq2d.count_2d(n - 1, "b6")


def test_q_facet_counts():
    for n, want in {2: 8, 3: 21, 4: 40}.items():
        assert oracle.facet_count_oracle(windows_3xn(n), budget=10**10) == want
    for n, want in {2: 8, 3: 21, 4: 40, 5: 67}.items():
        assert oracle.facet_count_two_classes(windows_3xn(n)) == want


def test_growth_2d():
    g = seq2d.growth_2d()
    assert abs(g - 2.3156) < 1e-3
    assert abs(1 / math.exp(g) - 0.098706) < 1e-4
    assert g > seq1d_growth_4_2()


def seq1d_growth_4_2():
    from poolregions import seq1d

    return seq1d.growth_1d(4, 2)
