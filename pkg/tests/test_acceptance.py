"""Exit criteria. Each test prints one PASS/FAIL line; tolerance is zero
throughout (exact rationals, exact residues)."""

import time
from math import comb

import pytest

from supercong.arith import PrimePower, Residue, primes_between
from supercong.cli import RunConfig, execute, main
from supercong.congruences import CONGRUENCES, CongruenceSpec, run_congruence, run_congruence_all, two_squares
from supercong.engine import run_suite
from supercong.hypergeo import check_chaundy_bullard, check_transform, convolution_hyper_spec, evaluate_truncated, HALF
from supercong.identities import IDENTITIES, run_identity
from supercong.report import loads_csv, loads_json
from supercong.sequences import euler_numbers, euler_polynomial
from fractions import Fraction


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail
    return emit


def _all_pass(spec_id, instances):
    spec = IDENTITIES[spec_id]
    return [i for i in instances if not run_identity(spec, i).passed]


def test_criterion_1_identity_suite(report):
    start = time.perf_counter()
    failures = {}
    failures["id1"] = _all_pass("id1", [(n,) for n in range(61)])
    failures["hyper_form"] = [n for n in range(41)
                              if comb(2 * n, n) ** 2 * evaluate_truncated(convolution_hyper_spec(n))
                              != run_identity(IDENTITIES["id1"], (n,)).lhs]
    failures["transform"] = [n for n in range(26)
                             if not check_transform(n, HALF, -n, HALF, 1, HALF - n, HALF - n).passed]
    failures["three_way"] = _all_pass("conv_id1", [(n,) for n in range(101)]) + \
        _all_pass("conv_sun", [(n,) for n in range(101)])
    failures["id2"] = _all_pass("id2", [(k, l) for l in range(61) for k in range(l + 1)])
    for sid in ("id3", "id6", "id7"):
        failures[sid] = _all_pass(sid, [(k,) for k in range(61)])
    for sid in ("id4", "id5"):
        failures[sid] = _all_pass(sid, [(k,) for k in range(1, 61)])
    failures["chaundy_bullard"] = [(n, m) for n in range(13) for m in range(13)
                                   if not check_chaundy_bullard(n, m).passed]
    elapsed = time.perf_counter() - start
    bad = {k: v for k, v in failures.items() if v}
    report(1, not bad and elapsed < 120,
           f"identity suite, {sum(map(len, bad.values()))} failures {sorted(bad)}, {elapsed:.2f}s single-threaded (< 120s)")


def test_criterion_2_congruence_suite(report):
    primes = primes_between(5, 199)
    ids = [s for s in CONGRUENCES if s != "prod_binom"]
    start = time.perf_counter()
    outs = run_suite(primes, ids, jobs=4)
    elapsed = time.perf_counter() - start
    expected = sum(1 for s in ids for p in primes if CONGRUENCES[s].prime_filter(p))
    one_mod_four = [p for p in primes if p % 4 == 1]
    x_checked = sorted(o.instance[0][1] for o in outs if o.check == "sun_x_8")
    failed = [(o.check, o.instance_str) for o in outs if not o.passed]
    ok = (not failed and len(outs) == expected == (len(ids) - 2) * len(primes) + 2 * len(one_mod_four)
          and x_checked == one_mod_four and elapsed < 300)
    report(2, ok, f"{len(outs)} congruence instances for 5 <= p <= 199, {len(failed)} failed, "
                  f"{elapsed:.2f}s with 4 workers (< 300s)")


def test_criterion_3_spot_values(report):
    E2 = euler_numbers(2)[2]
    m = PrimePower(5, 4)
    den8 = run_congruence(CONGRUENCES["den8"], 5)
    den16 = run_congruence(CONGRUENCES["den16"], 5)
    ts = two_squares(13)
    x8 = run_congruence(CONGRUENCES["sun_x_8"], 13)
    x16 = run_congruence(CONGRUENCES["sun_x_16"], 13)
    target = Residue((-1) ** 3 * -3, PrimePower(13, 2))
    ok = (E2 == -1
          and den8.lhs == Residue(5 + 5 * 125 * E2, m) and den8.passed
          and den16.lhs == Residue(5 + 3 * 125 * E2, m) and den16.passed
          and (ts.x, ts.y) == (-3, 2)
          and x8.lhs == x16.lhs == target == Residue(3, PrimePower(13, 2)))
    report(3, ok, f"p=5: den8 lhs {den8.lhs.value}, den16 lhs {den16.lhs.value} (mod 625); "
                  f"p=13: half sums {x8.lhs.value}, {x16.lhs.value} (mod 169), two_squares {ts.x, ts.y}")


def test_criterion_4_prod_binom(report):
    spec = CONGRUENCES["prod_binom"]
    total = failed = 0
    for p in primes_between(5, 61):
        outs = run_congruence_all(spec, p)
        total += len(outs)
        failed += sum(not o.passed for o in outs)
        assert [o.instance[1][1] for o in outs] == list(range(p))
    report(4, failed == 0, f"prod_binom over every 0 <= k <= p-1, 5 <= p <= 61: {total} instances, {failed} failed")


def test_criterion_5_sequences(report):
    table = euler_numbers(40)
    half = all(2**n * euler_polynomial(n, HALF, table) == table[n] for n in range(41))
    odd = all(table[n] == 0 for n in range(1, 41, 2))
    quarter = euler_polynomial(2, Fraction(1, 4)) == Fraction(-3, 16)
    report(5, half and odd and quarter,
           f"E_n = 2^n E_n(1/2) for n <= 40: {half}; odd E_n = 0: {odd}; E_2(1/4) = -3/16: {quarter}")


def test_criterion_6_cli(report, tmp_path, capsys):
    def run(name, *argv):
        path = tmp_path / name
        code = main(["verify", *argv, "--out", str(path)])
        return code, path.read_bytes()

    code_default, json1 = run("a.json")
    _, json2 = run("b.json")
    _, json4 = run("c.json", "--jobs", "4")
    code_csv, csv1 = run("a.csv", "--format", "csv")
    _, csv4 = run("b.csv", "--format", "csv", "--jobs", "4")

    good = CONGRUENCES["den8"]
    registry = dict(CONGRUENCES, den8_perturbed=CongruenceSpec("den8_perturbed", 4, good.lhs, lambda c: good.rhs(c) + 1))
    code_bad = execute(RunConfig(checks=("den8_perturbed",), out=str(tmp_path / "bad.json")), congruences=registry)
    bad_rows = loads_json((tmp_path / "bad.json").read_text())
    code_usage = [main(a) for a in (["verify", "--primes", "50..5"], ["verify", "--checks", "nonsense"], ["verify", "--jobs", "x"])]

    json_rows = loads_json(json1.decode())
    csv_rows = loads_csv(csv1.decode())
    ok = (code_default == 0 and code_csv == 0
          and code_bad == 1 and bad_rows and not any(r.passed for r in bad_rows)
          and code_usage == [2, 2, 2]
          and json1 == json2 == json4 and csv1 == csv4
          and json_rows == csv_rows and all(r.passed for r in json_rows))
    capsys.readouterr()
    report(6, ok, f"default exit {code_default}, perturbed exit {code_bad}, usage exits {code_usage}, "
                  f"{len(json_rows)} records; JSON/CSV round-trip and byte-identical across runs and --jobs 1/4")
