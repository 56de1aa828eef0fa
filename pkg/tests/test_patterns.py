import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regmap.patterns import (
    CLASSES,
    INFINITE,
    LINKS,
    MapType,
    PatternReport,
    admissible_links,
    canonical_link,
    classify_type,
    dual_link,
    dualize,
    full_pattern_report,
    link_index,
    link_summary,
    mirror_automorphism_word,
    split_pattern,
    universal_patterns,
)
from regmap.presentations import Word, dual_presentation, enumerate_cosets
from regmap.presentations.triangle import triangle_presentation

S = "B^2CB^2C^4BC^4"
types = st.tuples(st.integers(2, 40), st.integers(2, 40))


@pytest.mark.parametrize(
    "t, expected",
    [
        ((4, 4), {"P": "01", "Q": "12", "R": "02"}),
        ((3, 7), {"P": "010212", "Q": "010212", "R": "010212"}),
        ((3, 8), {"P": "01", "Q": "0212", "R": "0212"}),
        ((6, 3), {"P": "0102", "Q": "12", "R": "0102"}),
    ],
)
def test_classify_type(t, expected):
    assert dict(classify_type(t)) == expected


@given(types)
def test_classify_type_total(t):
    got = classify_type(t)
    assert [c for c, _ in got] == list(CLASSES)
    assert {link for _, link in got} <= set(LINKS)


@given(types)
def test_classification_commutes_with_duality(t):
    swap = {"P": "Q", "Q": "P", "R": "R"}
    dual = dict(classify_type(MapType(*t).dual))
    for c, link in classify_type(t):
        assert dual[swap[c]] == dual_link(link)


def test_map_type_validation():
    with pytest.raises(ValueError):
        MapType(1, 5)
    assert MapType(3, 8).parity == "odd-even"
    assert MapType(4, 4).curvature == "euclidean"


@pytest.mark.parametrize(
    "link, t, word",
    [
        ("12", (6, 3), "B^3A"),
        ("010212", (3, 7), "B^2CB^2C^4BC^4"),
        ("0212", (3, 8), "C^4B^2CB^2"),
        ("01", (6, 4), "C^2A"),
        ("02", (4, 4), "B^2C^2"),
        ("0102", (6, 3), "C^2BC^2B^3"),
    ],
)
def test_mirror_automorphism_word(link, t, word):
    assert mirror_automorphism_word(link, t) == Word.parse(word)


@pytest.mark.parametrize("link, t", [("01", (3, 7)), ("12", (3, 8)), ("0212", (4, 4)), ("010212", (4, 3))])
def test_inadmissible_word_is_an_error(link, t):
    with pytest.raises(ValueError):
        mirror_automorphism_word(link, t)


@given(types)
def test_admissible_words_have_integer_exponents(t):
    for link in admissible_links(t):
        w = mirror_automorphism_word(link, t)
        assert w.letters


def test_link_index_examples():
    klein = enumerate_cosets(triangle_presentation(3, 7, f"({S})^3"))
    assert link_index(klein, "010212", (3, 7)) == 3
    bolza = enumerate_cosets(triangle_presentation(3, 8, "(C^4A)^2"))
    assert link_index(bolza, "0212", (3, 8)) == 2
    macbeath = enumerate_cosets(triangle_presentation(3, 7, f"({S})^2"))
    assert link_index(macbeath, "010212", (3, 7)) == 2


def test_full_pattern_report_klein():
    reports = full_pattern_report(triangle_presentation(3, 7, f"({S})^3"), (3, 7))
    assert [r.notation for r in reports] == ["(010212)^3"] * 3


def test_full_pattern_report_bolza():
    reports = full_pattern_report(triangle_presentation(3, 8, "(C^4A)^2"), (3, 8))
    assert link_summary(reports) == {"01": 2, "0212": 2}


def test_full_pattern_report_wiman_dual():
    # cyclic rotation group of order 10 on a {5,10} map
    p = triangle_presentation(5, 10, "BCB^-1C^-1")
    reports = full_pattern_report(p, (5, 10))
    assert link_summary(reports) == {"01": 1, "0212": 1}


def test_full_pattern_report_rejects_reflection_presentation():
    from regmap.presentations.triangle import extended_triangle_presentation

    with pytest.raises(ValueError):
        full_pattern_report(extended_triangle_presentation(3, 3), (3, 3))


def test_dualize_cube_to_octahedron():
    cube = [PatternReport("P", "0102", 2), PatternReport("Q", "12", 4), PatternReport("R", "0102", 2)]
    octa = dualize(cube)
    assert [(r.reflection_class, r.link, r.link_index) for r in octa] == [
        ("P", "01", 4),
        ("Q", "0212", 2),
        ("R", "0212", 2),
    ]


def test_dualize_rhombic_torus():
    reports = [PatternReport("P", "01", 3), PatternReport("Q", "0212", 3), PatternReport("R", "0212", 3)]
    assert link_summary(dualize(reports)) == {"12": 3, "0102": 3}


reports_strategy = st.lists(
    st.builds(
        PatternReport,
        st.sampled_from(CLASSES),
        st.sampled_from(LINKS),
        st.one_of(st.integers(1, 50), st.just(INFINITE)),
    ),
    max_size=3,
)


@given(reports_strategy)
def test_dualize_is_an_involution(reports):
    key = lambda r: (r.reflection_class, r.link, r.link_index)  # noqa: E731
    assert sorted(map(key, dualize(dualize(reports)))) == sorted(map(key, reports))


@given(st.sampled_from(LINKS), st.integers(1, 30))
def test_pattern_length(link, k):
    r = PatternReport("P", link, k)
    assert len(r.pattern) == len(link) * k
    assert split_pattern(r.pattern) == (link, k)


@given(st.sampled_from(LINKS), st.integers(1, 8), st.integers(0, 47))
def test_split_pattern_is_rotation_and_reversal_invariant(link, k, shift):
    s = link * k
    shift %= len(s)
    rotated = s[shift:] + s[:shift]
    assert split_pattern(rotated) == (link, k)
    assert split_pattern(rotated[::-1]) == (link, k)


def test_canonical_link_typography():
    assert canonical_link("2120") == "0212"
    assert canonical_link("2010") == "0102"
    assert canonical_link("10") == "01"


def test_split_pattern_rejects_non_links():
    with pytest.raises(ValueError):
        split_pattern("0121")


def test_report_validation():
    with pytest.raises(ValueError):
        PatternReport("P", "01", 0)
    with pytest.raises(ValueError):
        PatternReport("X", "01", 1)
    with pytest.raises(ValueError):
        PatternReport("P", "0110", 1)


def test_universal_patterns_are_infinite():
    reports = universal_patterns((3, 7))
    assert all(r.link_index == math.inf and r.notation == "(010212)^inf" for r in reports)


def test_link_summary_rejects_disagreement():
    with pytest.raises(ValueError):
        link_summary([PatternReport("Q", "0212", 2), PatternReport("R", "0212", 3)])


@pytest.mark.parametrize(
    "p, t",
    [
        (triangle_presentation(4, 3), (4, 3)),
        (triangle_presentation(3, 6, "(C^3A)^3"), (3, 6)),
        (triangle_presentation(3, 6, "(C^3A)^2C(C^3A)^2C^-1"), (3, 6)),
        (triangle_presentation(3, 8, "(C^4A)^2"), (3, 8)),
    ],
)
def test_link_index_invariant_under_duality(p, t):
    t = MapType(*t)
    primal = full_pattern_report(p, t)
    dual = full_pattern_report(dual_presentation(p), t.dual)
    assert link_summary(dualize(primal)) == link_summary(dual)
