from collections import Counter

from kla2.cells import a_fn, cond54, left_cell, same_cell, two_sided
from kla2.coxeter import descents, enumerate_elements, parse, reduced_words


def test_examples():
    assert (two_sided(parse("e")), left_cell(parse("e")).left) == ("c_e", "C_empty")
    assert (two_sided(parse("rst")), left_cell(parse("rst")).left) == ("c_1", "B_t")
    assert (two_sided(parse("sts")), left_cell(parse("sts")).left) == ("c_0", "A_st")
    assert a_fn(parse("sts")) == 3 and a_fn(parse("r")) == 1 and a_fn(parse("e")) == 0
    assert cond54(parse("trt"), parse("rstrst"))
    assert cond54(parse("trsts"), parse("rstrstrs"))
    assert not cond54(parse("srs"), parse("rstrst"))


def test_ten_left_cells():
    labels = Counter(left_cell(w) for w in enumerate_elements(12))
    assert len(labels) == 10
    assert sum(1 for c in labels if c.two_sided == "c_0") == 6


def test_c1_by_word_count():
    for w in enumerate_elements(12):
        unique = len(reduced_words(w)) == 1
        assert (two_sided(w) == "c_1") == (unique and w.length > 0)
        if two_sided(w) == "c_1":
            assert len(descents(w, "left")) == len(descents(w, "right")) == 1


def test_c1_counts_per_length():
    # three unique-word elements per positive length: the rotations of (rst)^k...
    counts = Counter(w.length for w in enumerate_elements(12) if two_sided(w) == "c_1")
    assert all(counts[n] == 6 for n in range(2, 13)) and counts[1] == 3


def test_left_cell_label_is_right_descent():
    for w in enumerate_elements(10):
        cell = left_cell(w)
        if w.length:
            assert cell.left.split("_")[1] == "".join(sorted(descents(w, "right")))


def test_same_cell_sides():
    u, w = parse("sts"), parse("rsts")
    assert same_cell(u, w, "left")
    assert same_cell(u.inverse(), w.inverse(), "right")
