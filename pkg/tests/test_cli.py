import json
from fractions import Fraction

import pytest

from adelic_gaps import PrimeSet
from adelic_gaps.cli import (
    CliError,
    SweepConfig,
    main,
    parse_alpha,
    parse_primes,
    parse_rational,
    run_sweep,
)


class TestParsing:
    def test_rationals(self):
        assert parse_rational("351/100") == Fraction(351, 100)
        assert parse_rational("-7") == Fraction(-7)
        with pytest.raises(CliError):
            parse_rational("x/y")
        with pytest.raises(CliError):
            parse_rational("1/0")

    def test_prime_sets(self):
        assert parse_primes("2,3,5") == PrimeSet.of(2, 3, 5)
        assert parse_primes("all") == PrimeSet.all_primes()
        assert parse_primes("all-except:2,3") == PrimeSet.all_except(2, 3)
        with pytest.raises(CliError):
            parse_primes("2,4")
        with pytest.raises(CliError):
            parse_primes("two")

    def test_alpha(self):
        primes = PrimeSet.of(2)
        point = parse_alpha("inf=351/100;default=0;2=1", primes)
        assert point.at_infinity == Fraction(351, 100)
        assert point.coordinate(2) == 1
        with pytest.raises(CliError, match="key=value"):
            parse_alpha("inf", primes)
        with pytest.raises(CliError, match="unknown point key"):
            parse_alpha("foo=1", primes)
        with pytest.raises(CliError, match="invalid point"):
            parse_alpha("inf=0;3=1", primes)


class TestGapsCommand:
    def test_f1(self, capsys):
        code = main(
            ["gaps", "--primes", "2", "--alpha", "inf=351/100;default=0;2=1", "--N", "52",
             "--format", "json"]
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["gap_count"] == 3
        assert payload["distinct_gaps"] == ["1/100", "3/20", "4/25"]

    def test_i2(self, capsys):
        code = main(["gaps", "--primes", "all", "--alpha", "inf=27/50;default=0;2=-1", "--N", "6"])
        assert code == 0
        assert "distinct gaps (3)" in capsys.readouterr().out

    def test_json_round_trips_exact_rationals(self, capsys):
        main(["gaps", "--primes", "3", "--alpha", "inf=16/5;default=0;3=1", "--N", "5",
              "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        deltas = [Fraction(d) for d in payload["deltas"]]
        assert deltas == [Fraction(1, 5), Fraction(3, 5), Fraction(4, 5), Fraction(3, 5), Fraction(1, 5)]

    def test_csv_output(self, capsys):
        main(["gaps", "--primes", "3", "--alpha", "inf=16/5;default=0;3=1", "--N", "5",
              "--format", "csv"])
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "n,delta"
        assert lines[1] == "1,1/5"

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["gaps", "--primes", "2", "--alpha", "inf=0", "--N", "notanint"])
        assert excinfo.value.code == 1

    def test_bad_n_is_usage_error(self, capsys):
        assert main(["gaps", "--primes", "2", "--alpha", "inf=1/3", "--N", "0"]) == 1

    def test_parse_error_exit_code(self):
        assert main(["gaps", "--primes", "2,4", "--alpha", "inf=0", "--N", "5"]) == 1

    def test_degenerate_orbit_is_an_error(self, capsys):
        assert main(["gaps", "--primes", "2", "--alpha", "inf=3;default=3", "--N", "4"]) == 1
        assert "degenerate" in capsys.readouterr().err


class TestVerifyCommand:
    def test_sweep_histogram_totals(self, capsys):
        code = main(["verify", "--primes", "2", "--seed", "42", "--samples", "200",
                     "--max-N", "12", "--max-height", "20", "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert sum(payload["histogram"].values()) == 200
        assert payload["all_within_three"] is True

    def test_deterministic_given_seed(self, capsys):
        args = ["verify", "--primes", "all-except:2", "--seed", "7", "--samples", "60",
                "--format", "json"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        second = capsys.readouterr().out
        assert first == second

    def test_config_validation(self):
        with pytest.raises(CliError):
            SweepConfig(0, 0, 10, 10, PrimeSet.of(2))
        with pytest.raises(CliError):
            SweepConfig(0, 10, 1, 10, PrimeSet.of(2))
        with pytest.raises(CliError):
            SweepConfig(0, 10, 10, 1, PrimeSet.of(2))

    def test_run_sweep_reports_in_sample_order(self):
        config = SweepConfig(3, 10, 8, 15, PrimeSet.of(2, 3))
        indices = [i for i, *_ in run_sweep(config)]
        assert indices == list(range(10))


class TestPaperCommand:
    def test_pass_exit_zero(self, capsys):
        assert main(["paper"]) == 0
        assert "ALL PASS" in capsys.readouterr().out

    def test_json_format(self, capsys):
        assert main(["paper", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["all_pass"] is True

    def test_csv_format(self, capsys):
        assert main(["paper", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "label,quantity,expected,computed,ok"


class TestLatticeCheckCommand:
    def test_f2(self, capsys):
        code = main(["lattice-check", "--primes", "3", "--alpha", "inf=16/5;default=0;3=1",
                     "--N", "5", "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["matches"] == 5
        assert payload["g_N"] == payload["G_N"] == 3
        assert payload["G_scan"] <= 3
        assert payload["chain_ok"] is True

    def test_f1(self, capsys):
        code = main(["lattice-check", "--primes", "2", "--alpha", "inf=351/100;default=0;2=1",
                     "--N", "52"])
        assert code == 0
        assert "52/52 match" in capsys.readouterr().out
