"""Acceptance criteria, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -s`` to see the lines, or execute the
file directly.  Criterion 10 (the K=4 Hurwitz enumeration, order
16,515,072) only runs when ``REGMAP_ACCEPT_K4`` is set; ``REGMAP_K4_BUDGET``
raises its coset budget (default 60,000,000).
"""

import os
import sys
import tempfile
import time
from pathlib import Path

import pytest

from regmap.lattice_tori import ToroidalMapId, toroidal_patterns
from regmap.patterns import link_summary, reports_from_table
from regmap.presentations import enumerate_cosets, extended_presentation, group_order
from regmap.surface_families import (
    accola_maclachlan,
    bolza,
    bolza_matrix_check,
    fermat_group_order,
    fermat_map,
    fermat_patterns,
    fixture_map,
    hurwitz_presentation,
    hurwitz_quotient,
    wiman_I,
    wiman_II,
)
from regmap.tables import (
    FIXTURE_MISSING,
    VERIFIED,
    run_suite,
    suite_oracle,
    table1,
    table4,
    table5,
    table7,
    table_t41,
    table_t42,
    torus_table,
)
from regmap.hyperbolic_metrics import mirror_length, triangle_sides

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"
TOL = 1e-9


def _rows(table, ids):
    return {r.row_id: r for r in table.rows if r.row_id in ids}


def criterion_1():
    t0 = time.perf_counter()
    got = {K: hurwitz_quotient(K) for K in (1, 2, 3)}
    elapsed = time.perf_counter() - t0
    ok = (
        [got[K].order for K in (1, 2, 3)] == [1, 504, 168]
        and (got[2].genus, got[3].genus) == (7, 3)
        and (got[2].mirror_order, got[3].mirror_order) == (2, 3)
        and link_summary(got[2].reports) == {"010212": 2}
        and link_summary(got[3].reports) == {"010212": 3}
        and elapsed < 5.0
    )
    return ok, f"orders 1/504/168, genus 7/3, indices 2/3 in {elapsed:.2f}s"


def criterion_2():
    tab = table1()
    names = {r.row_id for r in tab.rows}
    needed = {"tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron"}
    needed |= {f"{kind}:{n}" for kind in ("hosohedron", "dihedron") for n in range(2, 9)}
    counts_checked = all(r.computed_counts == r.counts and r.counts for r in tab.rows)
    ok = tab.ok and needed <= names and all(r.status == VERIFIED for r in tab.rows) and counts_checked
    return ok, f"{len(tab.rows)} spherical rows traced, patterns and mirror counts exact"


def criterion_3():
    bs = range(1, 7)
    t41, t42 = table_t41(None), table_t42(None)
    ok = all(r.status == VERIFIED for r in t41.rows + t42.rows)
    for b in bs:
        sq0, sqb = ToroidalMapId("44", "b0", b), ToroidalMapId("44", "bb", b)
        hx0, hxb = ToroidalMapId("36", "b0", b), ToroidalMapId("36", "bb", b)
        ok &= link_summary(toroidal_patterns(sq0)) == {"01": b, "02": b, "12": b}
        ok &= link_summary(toroidal_patterns(sqb)) == {"01": 2 * b, "02": b, "12": 2 * b}
        ok &= link_summary(toroidal_patterns(hx0)) == {"01": b, "0212": b}
        ok &= link_summary(toroidal_patterns(hxb)) == {"01": 3 * b, "0212": b}
    traced = torus_table(("44", "36"), range(1, 4), 10**6)
    ok &= all(r.status == VERIFIED and "tracer" in r.note for r in traced)
    return ok, f"b=1..6 by lattice, b<=3 by enumeration and tracer ({len(traced)} maps)"


def criterion_4():
    bc = bolza_matrix_check()
    fm = bolza()
    row = _rows(table4(None), {"M.2.1"})["M.2.1"]
    ok = (
        (bc.order_S1, bc.order_S2) == (2, 2)
        and link_summary(bc.reports) == {"01": 2, "0212": 2}
        and group_order(fm.presentation) == 48
        and group_order(extended_presentation(fm.presentation)) == 96
        and row.status == VERIFIED
    )
    return ok, "matrix orders (2,2) mod 3, (0212)^2 (01)^2, orders 48/96, row M.2.1"


def _enumerated(fm):
    return link_summary(reports_from_table(enumerate_cosets(fm.presentation), fm.map_type))


def criterion_5():
    ok = True
    for g in range(2, 9):
        ok &= _enumerated(accola_maclachlan(g)) == {"01": 2, "02": 2, "12": 2 if g % 2 else 4}
        ok &= _enumerated(wiman_I(g)) == {"12": 1, "0102": 1}
    for g in range(3, 9):
        ok &= _enumerated(wiman_II(g)) == {"01": 2, "12": 2, "02": 1}
    rows = _rows(table4(None), {"M.2.2", "M.2.5"}) | _rows(table5(None), {"M.3.5", "M.3.7", "M.3.11"})
    ok &= len(rows) == 5 and all(r.status == VERIFIED for r in rows.values())
    return ok, "AM g=2..8, Wiman I g=2..8, Wiman II g=3..8, dual rows M.2.2 M.2.5 M.3.5 M.3.7 M.3.11"


def criterion_6():
    ok = True
    for n in range(3, 7):
        ok &= fermat_group_order(n) == 6 * n * n
        expected = {"01": 3, "0212": n} if n % 2 else {"01": 4, "0212": 2}
        ok &= link_summary(fermat_patterns(n)) == expected == _enumerated(fermat_map(n))
    ok &= _rows(table5(None), {"M.3.2"})["M.3.2"].status == VERIFIED
    ok &= link_summary(fermat_patterns(3)) == link_summary(toroidal_patterns(ToroidalMapId("36", "b0", 3)))
    return ok, "closure 6n^2 and S1/S2 orders for n=3..6, M.3.2, n=3 equals {3,6}_{3,0}"


def criterion_7():
    s = triangle_sides(3, 7)
    pairs = [
        (s.len12, 0.2831281533),
        (s.len01, 0.5452748317),
        (s.len02, 0.6206717375),
        (mirror_length("010212", 2, (3, 7)), 5.7962988904),
        (mirror_length("010212", 3, (3, 7)), 8.6944483356),
    ]
    worst = max(abs(a - b) for a, b in pairs)
    return worst <= TOL, f"max deviation {worst:.1e} against tolerance {TOL:g}"


def criterion_8():
    checks = list(suite_oracle())
    bad = [c for c in checks if not c.ok]
    return not bad, f"{len(checks)} built-in maps, {len(bad)} mismatches (Harnack bound included)"


def criterion_9():
    ok = True
    for name in ("H3", "H4", "H5"):
        res = fixture_map(FIXTURES / f"{name}.pres", (3, 7))
        (k,) = link_summary(res.reports).values()
        ok &= res.order == 1092 and res.genus == 14 and k in (6, 7)
    with tempfile.TemporaryDirectory() as tmp:
        empty = Path(tmp)
        (empty / "manifest").write_text("")
        tab = table7(empty)
        ok &= all(r.status == FIXTURE_MISSING for r in tab.rows if r.row_id not in ("H1", "H2"))
        ok &= tab.ok
        ok &= all(c.ok is not False for c in run_suite("families", fixtures=empty))
    return ok, "genus-14 fixtures give indices in {6,7}; without fixtures rows report fixture-missing and pass"


def criterion_10():
    if not os.environ.get("REGMAP_ACCEPT_K4"):
        return None, "optional K=4 run, set REGMAP_ACCEPT_K4=1 to enable"
    budget = int(os.environ.get("REGMAP_K4_BUDGET", "60000000"))
    t = enumerate_cosets(hurwitz_presentation(4), (), budget)
    return t.index == 16515072, f"K=4 quotient of order {t.index} (budget {budget})"


CRITERIA = [globals()[f"criterion_{k}"] for k in range(1, 11)]


def _line(k, ok, detail):
    mark = "SKIP" if ok is None else "PASS" if ok else "FAIL"
    return f"acceptance {k:>2}: {mark}  {detail}"


@pytest.mark.parametrize("k", range(1, 11))
def test_acceptance(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    if ok is None:
        pytest.skip(detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        print(_line(k, ok, detail), flush=True)
        results.append(ok)
    sys.exit(1 if False in results else 0)
