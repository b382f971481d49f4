"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every tolerance is fixed here; everything not marked with an explicit
tolerance is exact rational equality.
"""

import functools
from fractions import Fraction as F
from itertools import combinations

from cmexpand.catalog import builtin_catalog
from cmexpand.engine import ExpansionRatio, error_bound, expand, regroup
from cmexpand.errors import NonConvergent
from cmexpand.identities import catalan_sides, identity_sweep
from cmexpand.numerics import QuadraticSurd
from cmexpand.realnum import inv_pi, pi_multiple
from cmexpand.sequences import (
    GEN_J,
    GEN_J_LIKE,
    gen_j,
    gen_j_like,
    gen_j_like_recurrence,
    gen_j_recurrence,
    gf_coefficients,
)
from cmexpand.simulator import ledger_init, ledger_step

HALF = ExpansionRatio(1, 2)


def criterion(number, text):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {number:02d} FAIL: {text}")
                raise
            print(f"criterion {number:02d} PASS: {text}")
        return wrapper
    return decorate


@criterion(1, "1/3 in powers of 1/2 and its scaled Jacobsthal values")
def test_criterion_01_canonical_expansion():
    run = expand(F(1, 3), HALF, "zero", 9)
    assert run.partial_sums[:5] == (0, F(1, 2), F(1, 4), F(3, 8), F(5, 16))
    scaled = [x * 2**n for n, x in enumerate(run.partial_sums)]
    assert scaled == [0, 1, 1, 3, 5, 11, 21, 43, 85, 171]


@criterion(2, "1/7 in powers of 1/2: listed sums and block-3 regrouping (A023001)")
def test_criterion_02_one_seventh():
    listed = [
        F(0), F(1, 2), F(1, 4), F(1, 8), F(3, 16), F(5, 32), F(9, 64),
        F(19, 128), F(37, 256), F(73, 512), F(147, 1024), F(293, 2048),
    ]
    run = expand(F(1, 7), HALF, "zero", 15)
    assert list(run.partial_sums[:12]) == listed
    grouped = regroup(run, 3)
    scaled = [x * 8**n for n, x in enumerate(grouped.partial_sums)]
    assert scaled == [0, 1, 9, 73, 585, 4681]


@criterion(3, "1/5 in powers of 1/2: split closed forms and block-4 regrouping (A131865)")
def test_criterion_03_one_fifth():
    run = expand(F(1, 5), HALF, "zero", 17)
    for n in range(9):
        assert run.partial_sums[2 * n] == F(4**n - (-1) ** n, 5 * 4**n)
    for n in range(9):
        assert run.partial_sums[2 * n + 1] == F(2 * 4**n + 3 * (-1) ** n, 5 * 2 * 4**n)
    grouped = regroup(expand(F(1, 5), HALF, "zero", 16), 4)
    scaled = [grouped.partial_sums[n] * 16**n / 3 for n in range(1, 5)]
    assert scaled == [1, 17, 273, 4369]
    assert all(scaled[n] == F(16 ** (n + 1) - 1, 15) for n in range(4))


@criterion(4, "family prefixes: A015518, A015521, A015441, A003462, Fibonacci, Pell")
def test_criterion_04_family_fixtures():
    fixtures = {
        (1, 3): [0, 1, 2, 7, 20, 61, 182, 547, 1640, 4921, 14762, 44287, 132860, 398581],
        (1, 4): [0, 1, 3, 13, 51, 205, 819, 3277, 13107, 52429, 209715, 838861, 3355443],
        (2, 3): [0, 1, 1, 7, 13, 55, 133, 463, 1261, 4039],
    }
    for (r, s), expected in fixtures.items():
        assert [gen_j(r, s, n) for n in range(len(expected))] == expected
    assert [gen_j_like(1, 3, n) for n in range(9)] == [0, 1, 4, 13, 40, 121, 364, 1093, 3280]

    phi = QuadraticSurd(F(1, 2), F(1, 2), 5)
    psi = QuadraticSurd(F(1, 2), F(-1, 2), 5)
    fibonacci = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    assert [gen_j_like(psi, phi, n) for n in range(13)] == fibonacci

    silver = QuadraticSurd(1, 1, 2)
    pell = [0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741, 13860, 33461, 80782]
    assert [gen_j_like(silver.conjugate(), silver, n) for n in range(15)] == pell


@criterion(5, "negative-index listings for both families")
def test_criterion_05_negative_fixtures():
    jacobsthal_window = [
        F(43, 128), F(-21, 64), F(11, 32), F(-5, 16), F(3, 8), F(-1, 4), F(1, 2),
        F(0), F(1), F(1), F(3), F(5), F(11), F(21), F(43),
    ]
    assert [gen_j(1, 2, n) for n in range(-7, 8)] == jacobsthal_window
    jlike_window = [
        F(-364, 729), F(-121, 243), F(-40, 81), F(-13, 27), F(-4, 9), F(-1, 3),
        F(0), F(1), F(4), F(13), F(40), F(121), F(364),
    ]
    assert [gen_j_like(1, 3, n) for n in range(-6, 7)] == jlike_window


@criterion(6, "closed form = recurrence = generating function, r < s <= 6, n <= 24")
def test_criterion_06_triple_route():
    for r, s in combinations(range(1, 7), 2):
        count = 25
        closed_j = [gen_j(r, s, n) for n in range(count)]
        assert gen_j_recurrence(r, s, count) == closed_j
        assert gf_coefficients(GEN_J, r, s, count) == closed_j
        closed_jlike = [gen_j_like(r, s, n) for n in range(count)]
        assert gen_j_like_recurrence(r, s, count) == closed_jlike
        assert gf_coefficients(GEN_J_LIKE, r, s, count) == closed_jlike


@criterion(7, "simulator equals engine over the 1/q grid; conservation at every step")
def test_criterion_07_oracle_equivalence():
    ratios = [HALF, ExpansionRatio(1, 3), ExpansionRatio(2, 3), ExpansionRatio(3, 4)]
    compared = 0
    for q in range(3, 13):
        for ratio in ratios:
            try:
                run = expand(F(1, q), ratio, "larger", 12)
                engine_failed = False
            except NonConvergent:
                engine_failed = True
            # drive the ledger by hand so conservation is checked per step
            ledger = ledger_init(q - 1, 1)
            estimates = []
            sim_failed = abs(ledger.target_cm - ledger.current_estimate) > F(1, ratio.s - ratio.r)
            if not sim_failed:
                for step in range(12):
                    if ledger.current_estimate == ledger.target_cm:
                        break
                    try:
                        record = ledger_step(ledger, ratio)
                    except NonConvergent:
                        sim_failed = True
                        break
                    estimates.append(record.destination)
                    assert ledger.cm() == ledger.target_cm
                    assert sum(c.mass for c in ledger.clusters()) == ledger.total_mass
                    if abs(ledger.target_cm - record.destination) > error_bound(ratio, step + 1):
                        sim_failed = True
                        break
            assert engine_failed == sim_failed, f"asymmetric failure at q={q}, ratio={ratio}"
            if not engine_failed:
                assert tuple(estimates) == run.partial_sums[1:], f"q={q}, ratio={ratio}"
                compared += 1
    assert compared >= 30


@criterion(8, "identity sweep clean for both families; unsquared Catalan still fails")
def test_criterion_08_identities():
    for family in (GEN_J, GEN_J_LIKE):
        summary = identity_sweep(family, 4, 5, 12)
        assert summary.ok, summary.failures[:3]
    lhs, rhs = catalan_sides(GEN_J_LIKE, 1, 2, 2, 1, squared=False)
    assert lhs != rhs, "the unsquared Catalan variant unexpectedly held"


@criterion(9, "pi targets: 1/pi and pi/4 expansions with listed sums, signs, and errors")
def test_criterion_09_pi_reproduction():
    listed = [
        F(0), F(1, 2), F(1, 4), F(3, 8), F(5, 16), F(11, 32), F(21, 64),
        F(41, 128), F(81, 256), F(163, 512), F(325, 1024), F(651, 2048),
        F(1303, 4096), F(2607, 8192), F(5215, 16384), F(10431, 32768),
    ]
    run = expand(inv_pi(), HALF, "zero", 15, max_bits=256)
    assert list(run.partial_sums) == listed

    # |X_15 - 1/pi| must land in (1.5e-5, 2.5e-5); decide with rational brackets
    lo, hi = inv_pi().bracket(64)
    x15 = run.partial_sums[15]
    assert x15 - hi > F(15, 10**6)
    assert x15 - lo < F(25, 10**6)

    quarter_pi = pi_multiple(F(1, 4))
    run = expand(quarter_pi, HALF, "one", 19, max_bits=256)
    listed_signs = (-1, 1, 1, -1, -1, 1, -1, -1, 1, -1, -1, -1, -1, 1, 1, 1, 1)
    assert run.signs[:17] == listed_signs

    expected_errors = {17: F(54022, 10**10), 18: F(15875, 10**10), 19: F(-31988, 10**11)}
    lo, hi = quarter_pi.bracket(96)
    for n, expected in expected_errors.items():
        diff_lo = lo - run.partial_sums[n]
        diff_hi = hi - run.partial_sums[n]
        tolerance = abs(expected) / 1000
        assert abs(diff_lo - expected) <= tolerance
        assert abs(diff_hi - expected) <= tolerance


@criterion(10, "termination: 1/4 ends after 2 halving terms but never in thirds")
def test_criterion_10_termination():
    run = expand(F(1, 4), HALF, "zero", 16)
    assert run.terminated and len(run.signs) == 2
    assert run.partial_sums == (0, F(1, 2), F(1, 4))
    run = expand(F(1, 4), ExpansionRatio(1, 3), "zero", 64)
    assert not run.terminated and len(run.signs) == 64


@criterion(11, "catalog verifies cleanly; a mutated fixture is caught with exit 3")
def test_criterion_11_catalog(capsys, tmp_path):
    import json

    from cmexpand.catalog import entry_to_dict
    from cmexpand.cli import run as cli_run

    assert cli_run(["verify"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["ok"] is True
    assert all(report["first_mismatch"] is None for report in document["reports"])

    entries = [entry_to_dict(entry) for entry in builtin_catalog()]
    entries[2]["values"][5] = "206"
    path = tmp_path / "mutated.json"
    path.write_text(json.dumps({"entries": entries}))
    assert cli_run(["verify", "--catalog", str(path)]) == 3
    document = json.loads(capsys.readouterr().out)
    mutated = next(r for r in document["reports"] if r["id"] == entries[2]["id"])
    assert mutated["first_mismatch"] == {"index": 5, "expected": "206", "computed": "205"}
