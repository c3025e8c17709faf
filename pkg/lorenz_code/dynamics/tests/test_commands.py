from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError


def run(*args):
    out = StringIO()
    call_command("integrate", *args, stdout=out)
    return out.getvalue().splitlines()


def test_final_state_only():
    lines = run("--t", "0.05", "--prec", "64")
    assert lines[0] == "t,x,y,z"
    assert len(lines) == 2
    t, x, _y, _z = (float(v) for v in lines[1].split(","))
    assert t == pytest.approx(0.05)
    assert x != 5.0


def test_sampled_trajectory():
    lines = run("--t", "0.05", "--prec", "64", "--every", "2")
    times = [float(line.split(",")[0]) for line in lines[1:]]
    assert times == pytest.approx([0.0, 0.02, 0.04, 0.05])


def test_csv_file(tmp_path):
    target = tmp_path / "run.csv"
    assert run("--t", "0.03", "--prec", "53", "--every", "1", "--csv", str(target)) == []
    lines = target.read_text().splitlines()
    assert lines[0] == "t,x,y,z"
    assert len(lines) == 5


def test_hex_dump():
    lines = run("--t", "0.01", "--prec", "64", "--hex")
    assert [line.split()[0] for line in lines] == ["x", "y", "z"]
    sign, _exponent, significand = lines[0].split()[1].split(":")
    assert sign in {"+", "-"}
    assert len(significand) == 16


def test_short_runs_are_allowed_outside_hashing_limits():
    assert len(run("--t", "1", "--prec", "53", "--gamma", "10")) == 2


def test_divergence_is_a_domain_error():
    with pytest.raises(CommandError, match="diverged") as excinfo:
        run("--t", "100", "--h", "1", "--prec", "53")
    assert excinfo.value.returncode == 1


def test_invalid_step_is_a_domain_error():
    with pytest.raises(CommandError) as excinfo:
        run("--h", "0", "--t", "1")
    assert excinfo.value.returncode == 1
