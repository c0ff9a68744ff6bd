from collections import Counter

import pytest

from chromverify.may_tables import (b_generators, enumerate_entries, name_tokens, nonempty,
                                    permanence_obstructions, permanence_witness, search,
                                    search_by_residue, skeleton_cells, ul_generators,
                                    validity_bound, vanishing_scan)
from chromverify.reference_data import TABLE_P5, TABLE_P7


def test_validity_bound():
    assert validity_bound(7) == 1591
    with pytest.raises(ValueError):
        enumerate_entries(7, 1592)


def test_b_generator_admission():
    assert b_generators(7, 1591) == [(1, 0), (1, 1), (2, 0)]
    assert b_generators(5, 121) == [(1, 0)]


def test_table_entries_p7():
    by_name = {e.name: e for e in enumerate_entries(7, 1591)}
    assert (by_name["b11"].w, by_name["b11"].u) == (586, 12)
    assert (by_name["b20"].w, by_name["b20"].u) == (670, 14)
    assert (by_name["k0h0b20"].w, by_name["k0h0b20"].u) == (859, 39)
    assert (by_name["m1"].w, by_name["m1"].u) == (1532, 56)


def test_table_p7_matches_published():
    derived = [e for e in enumerate_entries(7, 1591) if e.b_exponent((1, 0)) == 0]
    key = lambda n: tuple(sorted(name_tokens(n).items()))  # noqa: E731
    assert sorted((key(e.name), e.w, e.u) for e in derived) == sorted(
        (key(n), w, u) for n, w, u in TABLE_P7)
    assert len(TABLE_P7) == 60


def test_table_p5_matches_published():
    got = [(e.name, e.w) for e in enumerate_entries(5, 121)]
    key = lambda n: tuple(sorted(name_tokens(n).items()))  # noqa: E731
    assert sorted((key(n), w) for n, w in got) == sorted((key(n), w) for n, w in TABLE_P5)
    assert sorted({w for _, w in got}) == [0, 7, 38, 39, 45, 54, 76, 77, 83, 86, 92, 93,
                                            114, 115, 121]


def test_total_degree_additive():
    gens = {g.name: g.w(7) for g in ul_generators(7)}
    bw = {"b10": 82, "b11": 586, "b20": 670}
    for e in enumerate_entries(7, 1591):
        toks = name_tokens(e.name)
        base = e.base
        rest = toks - name_tokens(base) if base != "1" else toks
        assert e.w == gens[base] + sum(bw[k] * v for k, v in rest.items())
        assert e.t - e.s == e.w
        assert e.u == e.w % 82


def test_name_tokens():
    assert name_tokens("b20b11k0h0") == Counter({"b20": 1, "b11": 1, "k0": 1, "h0": 1})
    assert name_tokens("b11^2g0") == Counter({"b11": 2, "g0": 1})
    assert name_tokens("1") == Counter()
    with pytest.raises(ValueError):
        name_tokens("b1x")


@pytest.mark.parametrize("i,names", [
    (656, ["b10^8"]), (657, ["h1b10^7"]), (753, ["h1b20"]), (754, ["g1"]),
    (1395, ["h1b10^16"]), (1492, ["g1b10^9"]), (658, []), (824, []),
])
def test_search_examples(i, names):
    assert [h.name for h in search(7, 1591, i)] == names


def test_search_matches_residue_method_everywhere():
    for i in range(1592):
        exact = sorted((h.name, h.c) for h in search(7, 1591, i))
        table = sorted((h.name, h.c) for h in search_by_residue(7, 1591, i))
        assert exact == table, i


def test_search_out_of_range():
    with pytest.raises(ValueError):
        search(7, 1591, 1600)


def test_skeleton_cells():
    assert skeleton_cells(5, 2) == [0, 1, 9, 10, 49, 50, 58, 59]
    assert skeleton_cells(7, 3) == [0, 1, 13, 14, 97, 98, 110, 111, 685, 686, 698, 699,
                                    782, 783, 795, 796]
    assert skeleton_cells(3, 0) == [0, 1]
    with pytest.raises(ValueError):
        skeleton_cells(5, 3)


def test_pairing_scans_p5():
    cells = skeleton_cells(5, 2)
    assert nonempty(vanishing_scan(5, 121, [0, 1, 9, 10, 49, 50], cells, -1)) == {}
    assert nonempty(vanishing_scan(5, 121, [58, 59], cells, -1)) == {115: ["h1b10^2"]}


def test_v30_scan_empty():
    cells = skeleton_cells(7, 3)
    low = [c for c in cells if c <= 686]
    assert nonempty(vanishing_scan(7, 1591, low, cells, -1)) == {}


def test_high_cell_scans():
    cells = skeleton_cells(7, 3)
    high = [c for c in cells if c > 686]
    assert nonempty(vanishing_scan(7, 1591, high, high, -740)) == {
        656: ["b10^8"], 657: ["h1b10^7"], 753: ["h1b20"], 754: ["g1"]}
    assert nonempty(vanishing_scan(7, 1591, high, high, -1)) == {
        1395: ["h1b10^16"], 1492: ["g1b10^9"]}


def test_scan_rejects_out_of_range():
    with pytest.raises(ValueError):
        vanishing_scan(7, 1591, [796], [796], 0)


def test_permanence():
    # b10^8 at 656 has h1 b10^7 sitting at 657(1) directly above it
    assert [h.name for h in permanence_obstructions(7, 1591, 656)] == ["h1b10^7"]
    assert not permanence_witness(7, 1591, 656)
    assert permanence_witness(7, 1591, 754)
    assert permanence_witness(7, 1591, 1395)
    assert permanence_witness(5, 121, 115)
