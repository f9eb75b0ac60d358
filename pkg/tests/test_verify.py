import io
import json
import subprocess
import sys

import pytest

from catalan_blocks import verify
from catalan_blocks.cli import main
from catalan_blocks.perm_core import Permutation


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


class TestChecks:
    def test_equidist_small(self):
        for n in (1, 3, 8):
            assert all(r.passed for r in verify.check_equidist(n))

    def test_bl_distribution_n3(self):
        left, right = verify.equidist_fibers(3)
        qdist = {}
        for key, members in left.items():
            qdist[key[-1]] = qdist.get(key[-1], 0) + len(members)
        assert qdist == {1: 2, 2: 2, 3: 1}

    def test_example_fiber_n8(self):
        left, right = verify.equidist_fibers(8)
        ltr = 0b1101001  # {1,4,6,7}
        key = (ltr, 7, 3)
        assert Permutation.parse("31254786") in left[key]
        assert Permutation.parse("41263785") in right[key]

    def test_hilbert_n3(self):
        assert verify.hilbert_polynomials(3) == ([1, 2, 2], [1, 2, 2])
        assert verify.hilbert_polynomials(1) == ([1], [1])

    def test_schur_n2_by_hand(self):
        levels = verify.bl_level_sets(2)
        assert levels == {1: [Permutation((2, 1))], 2: [Permutation((1, 2))]}
        assert verify.check_schur(2)[0].passed

    def test_pairs_contains_negative_control(self):
        ids = [r.claim_id for r in verify.check_pairs(3)]
        assert "pair-negative-control" in ids

    def test_failing_report_requires_counterexample(self):
        with pytest.raises(ValueError):
            verify.VerificationReport("x", (1, 1), "fail")

    def test_witness_cap(self):
        import time
        r = verify._report("x", 2, time.perf_counter(), list(range(50)))
        assert r.status == "fail" and len(r.counterexample) == verify.MAX_WITNESSES

    def test_guard(self):
        with pytest.raises(ValueError):
            verify.verify_schur(10)

    def test_parallel_matches_serial(self, monkeypatch):
        serial = sorted((r.claim_id, r.n_range, r.status) for r in verify.iter_reports("hilbert", 6, 1))
        par = sorted((r.claim_id, r.n_range, r.status) for r in verify.iter_reports("hilbert", 6, 2))
        assert serial == par

    def test_thread_env(self, monkeypatch):
        monkeypatch.setenv(verify.THREADS_ENV, "1")
        assert verify.thread_count() == 1
        monkeypatch.setenv(verify.THREADS_ENV, "junk")
        assert verify.thread_count() == 1


class TestCli:
    def test_bijection_map_and_inverse(self):
        assert run(["bijection", "map", "31254786"]) == (0, "4 1 2 6 3 7 8 5\n")
        assert run(["bijection", "inverse", "4 1 2 6 3 7 8 5"]) == (0, "3 1 2 5 4 7 8 6\n")

    def test_bijection_trace(self):
        code, text = run(["bijection", "trace", "31254786"])
        assert code == 0
        assert [line.split()[1] for line in text.splitlines()] == [
            "case=B", "case=C", "case=A", "case=C", "case=A", "case=C", "case=C", "case=base"]
        code, text = run(["bijection", "trace", "312", "--json"])
        assert json.loads(text)[0]["case"] == "C"

    def test_bijection_domain_error(self, capsys):
        assert run(["bijection", "map", "321"])[0] == 2
        assert "(1,2,3)" in capsys.readouterr().err

    def test_bijection_parse_error(self):
        assert run(["bijection", "map", "31x"])[0] == 2

    def test_verify_json_lines(self):
        code, text = run(["verify", "cardinalities", "--n-max", "5"])
        assert code == 0
        rows = [json.loads(line) for line in text.splitlines()]
        assert [r["n_range"] for r in rows] == [[n, n] for n in range(1, 6)]
        assert rows[0].keys() == {"claim_id", "n_range", "status", "counterexample", "elapsed_ms"}
        assert all(r["claim_id"] == "cardinalities" and r["status"] == "pass" for r in rows)

    def test_verify_deterministic(self):
        def strip(text):
            rows = [json.loads(line) for line in text.splitlines()]
            for r in rows:
                r.pop("elapsed_ms")
            return rows
        assert strip(run(["verify", "pairs", "--n-max", "4"])[1]) == \
            strip(run(["verify", "pairs", "--n-max", "4"])[1])

    def test_verify_tsv(self):
        code, text = run(["verify", "hilbert", "--n-max", "3", "--tsv"])
        assert code == 0
        assert text.splitlines()[2].split("\t")[:3] == ["hilbert", "3-3", "pass"]

    def test_verify_range_guard(self):
        assert run(["verify", "equidist", "--n-max", "12"])[0] == 2

    def test_verify_failure_exit_code(self, monkeypatch):
        import time

        def broken(n):
            return [verify._report("broken", n, time.perf_counter(), [{"n": n}])]
        monkeypatch.setitem(verify.LIMITS, "hilbert", (3, 3, broken))
        code, text = run(["verify", "hilbert"])
        assert code == 1 and json.loads(text.splitlines()[0])["counterexample"] == [{"n": 1}]

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as info:
            main(["verify", "nonsense"])
        assert info.value.code == 2

    def test_table(self):
        code, text = run(["table", "catalan", "--n-max", "4"])
        assert code == 0 and text.splitlines()[-1] == "4\t0\t5\t5\t3\t1"

    def test_qsym_expand(self):
        code, text = run(["qsym", "expand", "--set", "bl", "--n", "7", "--k", "3"])
        data = json.loads(text)
        assert code == 0 and data["size"] == 90
        coeffs = {tuple(c["shape"]): c["c"] for c in data["schur"]["coeffs"]}
        assert coeffs[(5, 2)] == "3/1"
        code, text2 = run(["qsym", "expand", "--set", "ldes", "--n", "7", "--k", "3"])
        assert json.loads(text2)["qsym"] == data["qsym"]

    def test_module_entry_point(self):
        res = subprocess.run([sys.executable, "-m", "catalan_blocks", "bijection", "map", "21"],
                             capture_output=True, text=True)
        assert res.returncode == 0 and res.stdout == "2 1\n"
