"""Exit criteria. All arithmetic is exact; every tolerance is equality."""

import time

import pytest

from chromverify import checks
from chromverify.cohomology import MORAVA_K, CoefficientProfile, cohomology, morava_vanishing_bound
from chromverify.degrees import beta_residue, minimal_vq_exponent, minimal_vq_exponent_scan
from chromverify.exterior import ComplexParams, basis_in_bidegree, format_monomial

P53, P74 = ComplexParams(5, 3), ComplexParams(7, 4)


def assert_check(check_id):
    rep = checks.run_check(check_id)
    assert rep.status == checks.PASS, rep.evidence
    return rep


def test_01_d_squared_zero(criterion):
    criterion("1. d o d = 0 on every monomial of C(2) p=3, C(3) p=5, C(4) p=7")
    ev = assert_check("d_squared_zero").evidence
    assert ev["p=7,n=4"]["monomials"] == 65536


def test_02_basis_3_m12(criterion):
    criterion("2. basis of C(4)^{3,-12} at p=7 is the listed set of 21 monomials")
    assert_check("c4_basis_3_m12")
    want = {"h3,1 h4,0 h4,1", "h1,1 h1,2 h1,3", "h2,1 h2,3 h3,1", "h1,3 h2,1 h4,3"}
    got = {format_monomial(m) for m in basis_in_bidegree(P74, 3, -12)}
    assert want <= got and len(got) == 21


def test_03_empty_8_336(criterion):
    criterion("3. C(4)^{8,336} = 0 at p=7")
    assert basis_in_bidegree(P74, 8, 336) == []
    assert_check("c4_empty_8_336")


def test_04_thm_small_74(criterion):
    criterion("4. p=7: dim C^{13,12}=21, rank in 16, rank out 5, H^{13,12}C(4)=0")
    sl = cohomology(P74, MORAVA_K, 13, 12)
    assert (sl.slice_dim, sl.rank_in, sl.rank_out, sl.dim) == (21, 16, 5, 0)
    assert_check("thm_small_74")


def test_05_p5_bounds(criterion):
    criterion("5. p=5: H^{9,8} bound 0 for K(3)_* and for E(3)_*/(5,v1,v2^k), k <= 25")
    assert morava_vanishing_bound(P53, MORAVA_K, 9, 8) == 0
    for k in range(1, 26):
        assert morava_vanishing_bound(P53, CoefficientProfile.truncated((1, k)), 9, 8) == 0
    assert_check("thm_small_53")
    assert_check("cor_pn53")


def test_06_minimal_exponent(criterion):
    criterion("6. minimal v_{n-1} exponent: closed form = scan on p in {3,5,7,11}, n in {2,3,4}; 26 and 393")
    for p in (3, 5, 7, 11):
        for n in (2, 3, 4):
            assert minimal_vq_exponent(p, n) == minimal_vq_exponent_scan(p, n)
    assert minimal_vq_exponent(5, 3) == minimal_vq_exponent_scan(5, 3) == 26
    assert minimal_vq_exponent(7, 4) == minimal_vq_exponent_scan(7, 4) == 393
    assert_check("hn2_exponents")


def test_07_tables(criterion):
    criterion("7. derived p=7 table = published (name, w, u) triples; p=5 list = 15 published entries")
    rep = assert_check("table2_reproduce")
    assert rep.evidence["derived"] == rep.evidence["published"] == 60
    assert_check("table_p5_reproduce")


def test_08_scans(criterion):
    criterion("8. p=5 pairing scan, p=7 V(3) scan, high-cell scans at offsets -740 and -1")
    rep = assert_check("p5_pairing_scan")
    assert rep.evidence["high_hits"] == {115: ["h1b10^2"]}
    assert_check("v30_scan")
    rep = assert_check("v3w0_scan")
    assert sorted(rep.evidence["offset_740"]["hits"]) == [656, 657, 753, 754]
    assert sorted(rep.evidence["offset_1"]["hits"]) == [1395, 1492]


def test_09_l33(criterion):
    criterion("9. no H^3..H^5 L(3,3) generator in degree 120; degree tables re-derive with 0 mismatches")
    assert_check("htv2_scan")
    assert_check("l33_consistency")


def test_10_duality_and_euler(criterion):
    criterion("10. dim C^{s,t} = dim C^{n^2-s,-t} at (5,3),(7,4); Euler characteristics of H and C agree")
    assert_check("duality_slices")
    assert_check("euler_characteristic")


def test_11_residues(criterion):
    criterion("11. residues mod 82 of 698,699,782,783,795,796 are 42,43,44,45,57,58")
    got = [beta_residue(7, w)[1] for w in (698, 699, 782, 783, 795, 796)]
    assert got == [42, 43, 44, 45, 57, 58]
    assert_check("n3_residues")


def test_12_consumed_bounds(criterion):
    criterion("12. the upper-bound computations consumed downstream all hold (remaining claims are not computational)")
    for cid in ("thm_small_53", "thm_small_74", "cor_pn53", "cor_be140"):
        assert_check(cid)


def test_suite_runtime_and_exit(criterion):
    criterion("full check suite passes, deterministic, under 60 s")
    start = time.perf_counter()
    first = checks.run_all()
    elapsed = time.perf_counter() - start
    assert all(r.passed for r in first), [r.check_id for r in first if not r.passed]
    second = checks.run_all()
    assert checks.reports_json(first) == checks.reports_json(second)
    assert elapsed < 60


@pytest.mark.parametrize("t", [12, 12 - 4800, 12 + 4800])
def test_t_normalization(t):
    assert cohomology(P74, MORAVA_K, 13, t).slice_dim == 21
