"""End-to-end CLI behavior: output formats, CSV stability, exit codes."""

import csv

import pytest

from stepsum.cli import main, run_bench


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -----------------------------------------------------------------------
# primes
# -----------------------------------------------------------------------


class TestPrimes:
    def test_listing_with_trailer(self, capsys):
        code, out, _ = run_cli(capsys, "primes", "--limit", "10")
        assert code == 0
        assert out.splitlines() == ["2", "3", "5", "7", "# pi(10)=4"]

    def test_limit_below_two_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "primes", "--limit", "1")
        assert code == 2
        assert "at least 2" in err


# -----------------------------------------------------------------------
# compute
# -----------------------------------------------------------------------


class TestCompute:
    def test_exact_value_renders_as_fraction(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "harmonic", "--x", "10", "--method", "identity",
            "--exact",
        )
        assert code == 0
        assert out.strip() == "harmonic identity 10 7381/2520"

    def test_float_value_renders_17_digits(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "harmonic", "--x", "10")
        assert code == 0
        name, method, x, value = out.split()
        assert (name, method, x) == ("harmonic", "direct", "10")
        assert float(value) == pytest.approx(2.9289682539682538, rel=1e-16)

    def test_integer_functions_print_integers(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "pi", "--x", "100")
        assert code == 0
        assert out.strip() == "pi direct 100 25"

    def test_default_method_is_first_listed(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "li2", "--x", "10")
        assert code == 0
        assert out.startswith("li2 direct 10 ")

    def test_method_pairing_enforced(self, capsys):
        code, _, err = run_cli(
            capsys, "compute", "li2", "--x", "10", "--method", "identity"
        )
        assert code == 2
        assert "supports methods" in err

    def test_exact_rejected_for_float_only_route(self, capsys):
        code, _, err = run_cli(
            capsys, "compute", "hp", "--x", "10", "--method", "mertens", "--exact"
        )
        assert code == 2
        assert "no exact mode" in err

    def test_below_domain_is_range_error(self, capsys):
        code, _, err = run_cli(capsys, "compute", "hp", "--x", "1.5")
        assert code == 3

    def test_unknown_function_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "compute", "totient", "--x", "10")
        assert code == 2


# -----------------------------------------------------------------------
# verify
# -----------------------------------------------------------------------


class TestVerify:
    def test_pointwise_pass_summary(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--identity", "harmonic", "--xmax", "100",
            "--samples", "10",
        )
        assert code == 0
        # 10 log-spaced samples plus the 100 integer atoms below the cutoff
        assert out.strip().splitlines()[-1] == "harmonic: 110/110 pass"

    def test_impossible_tolerance_fails_with_exit_1(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--identity", "hp_mertens", "--xmax", "1000",
            "--samples", "20", "--tol", "0",
        )
        assert code == 1
        assert "FAIL" in out

    def test_set_identity_routes_to_random_sets(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--identity", "power_sum", "--samples", "4",
            "--seed", "9",
        )
        assert code == 0
        assert out.strip().splitlines()[-1] == "power_sum: 36/36 pass"

    def test_increment_identity(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--identity", "hp_increment", "--xmax", "500",
            "--samples", "5",
        )
        assert code == 0
        assert "hp_increment: 5/5 pass" in out

    def test_samples_validation(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--identity", "harmonic", "--samples", "0"
        )
        assert code == 2

    def test_unknown_identity_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--identity", "zeta")
        assert code == 2

    def test_csv_written_and_byte_stable(self, capsys, tmp_path):
        """Identical invocations must produce identical bytes."""
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            code, _, _ = run_cli(
                capsys, "verify", "--identity", "count", "--samples", "3",
                "--seed", "3", "--csv", str(p),
            )
            assert code == 0
        first, second = (p.read_bytes() for p in paths)
        assert first == second

    def test_csv_schema(self, capsys, tmp_path):
        path = tmp_path / "out.csv"
        run_cli(
            capsys, "verify", "--identity", "count", "--samples", "2",
            "--seed", "3", "--csv", str(path),
        )
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == [
            "identity", "x", "k", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass",
        ]
        body = rows[1:]
        assert all(len(row) == 9 for row in body)
        count_rows = [row for row in body if row[0] == "count"]
        assert count_rows and all(row[2] == "" for row in count_rows)
        assert all(row[8] in ("true", "false") for row in body)
        # floats are written with 17 significant digits and round-trip
        x = float(body[0][1])
        assert f"{x:.17g}" == body[0][1]

    def test_jobs_flag_keeps_output_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        base = ["verify", "--identity", "hp_from_pi", "--xmax", "300",
                "--samples", "5"]
        run_cli(capsys, *base, "--csv", str(a))
        run_cli(capsys, *base, "--jobs", "4", "--csv", str(b))
        assert a.read_bytes() == b.read_bytes()


# -----------------------------------------------------------------------
# bench
# -----------------------------------------------------------------------


class TestBench:
    def test_rows_well_formed(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--op", "harmonic", "--x", "1000", "--reps", "3"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "op,method,x,reps,median_ns,result"
        assert len(lines) == 5
        methods = []
        for line in lines[1:4]:
            op, method, x, reps, median_ns, result = line.split(",")
            assert op == "harmonic"
            assert float(x) == 1000.0
            assert int(reps) == 3
            assert int(median_ns) > 0
            float(result)
            methods.append(method)
        assert methods == ["direct", "direct_compensated", "identity"]
        assert lines[4].startswith("# |identity - direct_compensated| = ")

    def test_run_bench_results_agree(self):
        rows = run_bench(1000, 3)
        by_method = {row.method: row.result for row in rows}
        gap = abs(by_method["identity"] - by_method["direct_compensated"])
        assert gap <= 1e-12

    def test_reps_validation(self, capsys):
        code, _, err = run_cli(
            capsys, "bench", "--op", "harmonic", "--x", "1000", "--reps", "2"
        )
        assert code == 2
        assert "at least 3" in err

    def test_unknown_op_is_usage_error(self, capsys):
        code, _, _ = run_cli(
            capsys, "bench", "--op", "zeta", "--x", "10", "--reps", "3"
        )
        assert code == 2
