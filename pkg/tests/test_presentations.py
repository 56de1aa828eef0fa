import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regmap.presentations import (
    REFLECTION_ALPHABET,
    ROTATION_ALPHABET,
    BudgetExceeded,
    IncompleteTable,
    PresentationError,
    Word,
    dual_presentation,
    element_order,
    enumerate_cosets,
    extended_presentation,
    free_reduce,
    group_order,
    parse_presentation,
    serialize_presentation,
)
from regmap.presentations.todd_coxeter import CosetTable
from regmap.presentations.triangle import extended_triangle_presentation, triangle_presentation

S = "B^2CB^2C^4BC^4"


def W(text, alphabet=ROTATION_ALPHABET):
    return Word.parse(text, alphabet)


# -- permutation oracles built by hand -----------------------------------------


def compose(p, q):
    """Apply p, then q (right action, matching the coset tables)."""
    return tuple(q[p[i]] for i in range(len(p)))


def perm_inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def closure(gens):
    ident = tuple(range(len(gens[0])))
    seen, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = compose(g, h)
                if gh not in seen:
                    seen.add(gh)
                    nxt.append(gh)
        frontier = nxt
    return seen


def perm_order(p):
    ident, q, k = tuple(range(len(p))), p, 1
    while q != ident:
        q, k = compose(q, p), k + 1
    return k


def cycles_to_perm(cycles, size):
    p = list(range(size))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return tuple(p)


# (2,3,k) rotation groups as permutation groups: a of order 2, b of order 3,
# c = (ab)^-1 of order k
ORACLES = {
    3: (cycles_to_perm([(0, 1), (2, 3)], 4), cycles_to_perm([(0, 1, 2)], 4)),
    4: (cycles_to_perm([(0, 1)], 4), cycles_to_perm([(1, 2, 3)], 4)),
    5: (cycles_to_perm([(0, 1), (2, 3)], 5), cycles_to_perm([(0, 2, 4)], 5)),
}


@pytest.mark.parametrize("k, size", [(3, 12), (4, 24), (5, 60)])
def test_triangle_group_order_matches_permutation_oracle(k, size):
    a, b = ORACLES[k]
    c = perm_inverse(compose(a, b))
    assert (perm_order(a), perm_order(b), perm_order(c)) == (2, 3, k)
    assert len(closure([a, b])) == size
    assert group_order(triangle_presentation(3, k)) == size


def test_extended_235_is_double_cover():
    p = extended_triangle_presentation(3, 5)
    assert group_order(p) == 120
    # the rotation subgroup <PQ, QR> has index 2
    rot = (W("PQ", REFLECTION_ALPHABET), W("QR", REFLECTION_ALPHABET))
    assert enumerate_cosets(p, rot).index == 2


# -- parsing ---------------------------------------------------------------------


def test_parse_rotation_presentation():
    p = parse_presentation("gens A B C; rels A^2 B^3 C^7 ABC")
    assert p.generators == ("A", "B", "C")
    assert len(p.relators) == 4


def test_parse_extended_presentation():
    p = parse_presentation("gens P Q R; rels P^2 Q^2 R^2 (PQ)^2 (QR)^3 (RP)^7")
    assert p.generators == ("P", "Q", "R")
    assert [len(r) for r in p.relators] == [2, 2, 2, 4, 6, 14]


def test_empty_relator_list_rejected_unless_free():
    with pytest.raises(PresentationError):
        parse_presentation("gens A; rels")
    p = parse_presentation("gens A; rels", allow_free=True)
    assert p.relators == ()


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("gens A B;\nrels A^2 B^ ;", 2, 12),
        ("gens A B;\nrels A^2 D;", 2, 10),
        ("gens A B;\n# comment\nrels AA^-1;", 3, 6),
    ],
)
def test_parse_errors_carry_location(text, line, column):
    with pytest.raises(PresentationError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_unknown_generator_message():
    with pytest.raises(PresentationError, match="unknown generator"):
        parse_presentation("gens A B; rels A^2 X")


def test_inverse_syntax_and_comments():
    p = parse_presentation("# triangle\ngens A B C;  # three\nrels A^2, B', (AB)^-2C;")
    assert p.relators[1] == W("B^-1")
    assert p.relators[2] == W("B^-1A^-1B^-1A^-1C")


def test_relators_are_freely_reduced():
    p = parse_presentation("gens A B; rels ABB^-1A")
    assert str(p.relators[0]) == "A^2"


def test_serializer_round_trip():
    text = "gens A B C; rels A^2 B^3 C^7 ABC (B^2CB^2C^4BC^4)^3;"
    p = parse_presentation(text)
    assert parse_presentation(serialize_presentation(p)) == p


# -- words -----------------------------------------------------------------------


def test_free_reduce_examples():
    assert free_reduce(W("PP", REFLECTION_ALPHABET)) == W("PP", REFLECTION_ALPHABET)
    assert free_reduce(W("PP^-1", REFLECTION_ALPHABET)).letters == ()
    assert free_reduce(Word((1, 2, -2, 3), ROTATION_ALPHABET)) == W("AC")
    assert free_reduce(Word.identity(ROTATION_ALPHABET)).letters == ()


letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=30)


@given(letters)
def test_free_reduce_idempotent_and_reduced(xs):
    w = free_reduce(Word(tuple(xs), ROTATION_ALPHABET))
    assert free_reduce(w) == w
    assert all(a != -b for a, b in zip(w.letters, w.letters[1:]))


@given(letters)
def test_word_times_inverse_is_identity(xs):
    w = Word(tuple(xs), ROTATION_ALPHABET)
    assert free_reduce(w * w.inverse()).letters == ()


@given(letters)
def test_word_string_round_trip(xs):
    w = free_reduce(Word(tuple(xs), ROTATION_ALPHABET))
    assert W(str(w)) == w


# -- coset enumeration --------------------------------------------------------------


@pytest.mark.parametrize("K, order", [(1, 1), (2, 504), (3, 168)])
def test_hurwitz_quotient_orders(K, order):
    assert group_order(triangle_presentation(3, 7, f"({S})^{K}")) == order


def test_budget_exceeded_on_infinite_group():
    with pytest.raises(BudgetExceeded):
        enumerate_cosets(triangle_presentation(3, 7), budget=5000)


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        enumerate_cosets(triangle_presentation(3, 3), budget=0)


def test_accola_maclachlan_orders():
    # rotation group has order 8(g+1); the reflection presentation doubles it
    assert group_order(triangle_presentation(6, 4, "(C^-1B)^2")) == 24
    assert group_order(extended_triangle_presentation(6, 4, "(PRQR)^2")) == 48


def test_square_torus_order():
    assert group_order(triangle_presentation(4, 4, "(BC^-1)^2")) == 16


def test_element_order_examples():
    klein = enumerate_cosets(triangle_presentation(3, 7, f"({S})^3"))
    assert element_order(klein, Word.identity(ROTATION_ALPHABET)) == 1
    assert element_order(klein, W(S)) == 3
    bolza = enumerate_cosets(triangle_presentation(3, 8, "(C^4A)^2"))
    assert bolza.index == 48
    assert element_order(bolza, W("C^4B^2CB^2")) == 2


def test_element_order_needs_complete_table():
    t = CosetTable(("A",), ((0, 0),), complete=False)
    with pytest.raises(IncompleteTable):
        element_order(t, W("A", ("A",)))


KLEIN = enumerate_cosets(triangle_presentation(3, 7, f"({S})^3"))


def test_generators_act_as_permutations():
    for x in range(len(KLEIN.generators)):
        fwd = [row[2 * x] for row in KLEIN.rows]
        back = [row[2 * x + 1] for row in KLEIN.rows]
        assert sorted(fwd) == list(range(KLEIN.index))
        assert all(back[fwd[c]] == c for c in range(KLEIN.index))


def test_relators_act_trivially():
    p = triangle_presentation(3, 7, f"({S})^3")
    for r in p.relators:
        assert KLEIN.permutation(r) == list(range(KLEIN.index))


@settings(max_examples=60)
@given(letters)
def test_lagrange(xs):
    w = Word(tuple(xs), ROTATION_ALPHABET)
    assert KLEIN.index % element_order(KLEIN, w) == 0


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_enumeration_is_deterministic(strategy):
    p = triangle_presentation(3, 8, "(C^4A)^2")
    a = enumerate_cosets(p, strategy=strategy).serialize()
    b = enumerate_cosets(p, strategy=strategy).serialize()
    assert a == b


def test_strategies_agree_on_index():
    for p in (
        triangle_presentation(3, 7, f"({S})^2"),
        extended_triangle_presentation(3, 5),
        triangle_presentation(4, 4, "(BC^-1)^3(B^-1C)^3"),
    ):
        assert enumerate_cosets(p).index == enumerate_cosets(p, strategy="felsch").index


def test_subgroup_index():
    p = triangle_presentation(3, 7, f"({S})^3")
    # stabiliser of a vertex is <C>, of order 7
    assert enumerate_cosets(p, [W("C")]).index == 24
    assert enumerate_cosets(p, [W("B")]).index == 56


def test_extended_and_dual_presentations():
    p = triangle_presentation(3, 8, "(C^4A)^2")
    assert group_order(extended_presentation(p)) == 96
    d = dual_presentation(p)
    assert group_order(d) == 48
    t = enumerate_cosets(d)
    assert (element_order(t, W("B")), element_order(t, W("C"))) == (8, 3)


@pytest.mark.parametrize("m, n", list(itertools.product([2, 3], [3, 4, 5])))
def test_spherical_orders(m, n):
    # |rotation group| = 4 / (2/m + 2/n - 1) for spherical (2,m,n)
    denom = 2 * n + 2 * m - m * n
    if denom <= 0:
        pytest.skip("not spherical")
    assert group_order(triangle_presentation(m, n)) == 4 * m * n // denom
