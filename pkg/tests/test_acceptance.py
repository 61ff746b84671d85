"""Acceptance criteria 1-9.  Every comparison is exact (integers and integer
Laurent polynomials); a failing criterion prints each mismatch it found."""
import time

from conftest import record

from kla2 import checks


def _finish(criterion, results, extra=""):
    ok = all(r.ok for r in results)
    failed = [ln for r in results for ln in r.lines if ln.startswith("FAIL")]
    detail = ", ".join(f"{r.check_id} {'ok' if r.ok else 'FAIL'}" for r in results)
    if extra:
        detail += f"; {extra}"
    if failed:
        detail += f"; {len(failed)} FAIL lines, first: {failed[0][5:]}"
    record(criterion, ok, detail)
    assert ok, "\n\n".join(r.report() for r in results)


def test_criterion_1_mu_oracle_equivalence():
    start = time.perf_counter()
    res = checks.check_mu_scan(max_len=14)
    elapsed = time.perf_counter() - start
    res.expect("runtime under 300 s", True, elapsed < 300)
    _finish(1, [res], f"{res.lines[0].strip()}, {elapsed:.1f} s")


def test_criterion_2_product_identities():
    results = [checks.check_prop42(), checks.check_prop43()]
    n = sum(1 for r in results for ln in r.lines if ln.startswith("ok"))
    _finish(2, results, f"{n} products compared")


def test_criterion_3_delta_triples():
    _finish(3, [checks.check_prop44()])


def test_criterion_4_coset_data():
    _finish(4, [checks.check_prop64(bound=8, k_max=3)])


def test_criterion_5_a_coefficients():
    _finish(5, [checks.check_prop65(bound=8)])


def test_criterion_6_b_tables():
    results = [checks.run(i) for i in ("6.6", "6.7", "6.8", "6.9")]
    _finish(6, results)


def test_criterion_7_residue_bridge():
    res = checks.check_bridge(max_len=14)
    _finish(7, [res], res.lines[-1].strip())


def test_criterion_8_structure():
    results = [checks.check_structure(max_len=14), checks.check_prop58(max_len=12),
               checks.check_local_finite(centre_len=10)]
    _finish(8, results)


def test_criterion_9_tensor_bounds():
    _finish(9, [checks.check_tensor(bound=5)])
