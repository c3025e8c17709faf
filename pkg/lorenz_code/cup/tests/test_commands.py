from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from lorenz_code.cup.models import MectMeasurement
from lorenz_code.cup.tests.factories import MectMeasurementFactory


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue().splitlines()


@pytest.mark.django_db
def test_mect_records_measurements():
    lines = run("mect", "--precisions", "24", "--delta", "0.000001", "--t-max", "20", "--record")
    assert lines[0] == "p,h,delta,T"
    p, h, delta, t = lines[1].split(",")
    assert p == "24"
    assert float(h) == pytest.approx(0.01)
    assert float(delta) == 1e-6
    assert 0 < float(t) < 20
    measurement = MectMeasurement.objects.get()
    assert measurement.precision_bits == 24
    assert measurement.t_max == 20.0
    assert measurement.parameters["beta"] == "8/3"


def test_mect_beyond_horizon_exits_with_domain_error():
    with pytest.raises(CommandError, match="beyond horizon") as excinfo:
        run("mect", "--prec", "53", "--t-max", "1")
    assert excinfo.value.returncode == 1


def test_fit_error_law_from_samples_file(tmp_path):
    samples = tmp_path / "samples.csv"
    rows = ["h,error"]
    rows += [f"{h},{h**4 + 8 * h**-0.5}" for h in (0.1, 0.3, 1.0, 3.0, 10.0)]
    samples.write_text("\n".join(rows) + "\n")
    lines = run("fit_error_law", "--samples", str(samples))
    assert lines[0] == "h,error,fitA,fitB,hstar"
    assert len(lines) == 6
    _h, _error, fit_a, fit_b, hstar = lines[1].split(",")
    assert float(fit_a) == pytest.approx(1.0, rel=1e-6)
    assert float(fit_b) == pytest.approx(8.0, rel=1e-6)
    assert float(hstar) == pytest.approx(1.0, rel=1e-6)


def test_fit_error_law_needs_four_samples(tmp_path):
    samples = tmp_path / "samples.csv"
    samples.write_text("h,error\n0.1,1\n0.01,2\n")
    with pytest.raises(CommandError, match="at least 4 samples") as excinfo:
        run("fit_error_law", "--samples", str(samples))
    assert excinfo.value.returncode == 1


def test_fit_error_law_missing_file_is_an_io_error(tmp_path):
    with pytest.raises(CommandError) as excinfo:
        run("fit_error_law", "--samples", str(tmp_path / "missing.csv"))
    assert excinfo.value.returncode == 2


def test_extrapolate_from_anchors():
    lines = run(
        "extrapolate",
        "--anchor", "24", "17",
        "--anchor", "53", "35",
        "--target-t", "161",
    )
    header = lines[0].split(",")
    values = dict(zip(header, lines[1].split(","), strict=True))
    assert float(values["chat"]) == pytest.approx(0.252, abs=5e-4)
    assert float(values["T"]) == pytest.approx(161.0, abs=0.5)
    assert values["required_p"] == "256"


@pytest.mark.django_db
def test_extrapolate_from_records():
    MectMeasurementFactory(precision_bits=24)
    MectMeasurementFactory(precision_bits=53)
    lines = run("extrapolate", "--from-records", "24", "53", "--target-p", "24")
    values = dict(zip(lines[0].split(","), lines[1].split(","), strict=True))
    assert float(values["T"]) == pytest.approx(17.0)


def test_extrapolate_needs_anchors():
    with pytest.raises(CommandError, match="anchor") as excinfo:
        run("extrapolate")
    assert excinfo.value.returncode == 1


def test_sensitivity_of_a_short_run():
    lines = run("sensitivity", "--kind", "precision", "--prec", "64", "--t", "1")
    assert lines[0] == "a,b,relative_divergence"
    a, b, divergence = lines[1].split(",")
    assert (a, b) == ("p=64", "p=68")
    assert float(divergence) < 1e-10
