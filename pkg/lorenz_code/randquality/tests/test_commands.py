from io import StringIO

import numpy as np
import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from lorenz_code.randquality.models import ScanReport


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue().splitlines()


@pytest.fixture
def random_file(tmp_path):
    path = tmp_path / "random.bin"
    path.write_bytes(np.random.default_rng(2024).bytes(8192))
    return path


class TestRandtest:
    def test_file_report(self, random_file, tmp_path):
        target = tmp_path / "battery.csv"
        lines = run("randtest", "--in", str(random_file), "--csv", str(target))
        assert lines[0].split() == ["test", "statistic", "p-value", "result"]
        assert [line.split()[0] for line in lines[1:]] == [
            "monobit",
            "runs",
            "chi-square",
            "serial-correlation",
        ]
        rows = target.read_text().splitlines()
        assert rows[0] == "test,statistic,p_value,passed,sample_bits"
        assert len(rows) == 5

    def test_failures_are_reported_not_raised(self, tmp_path):
        zeros = tmp_path / "zeros.bin"
        zeros.write_bytes(bytes(4096))
        lines = run("randtest", "--in", str(zeros))
        assert all(line.endswith("FAIL") for line in lines[1:])

    @pytest.mark.django_db
    def test_record(self, random_file):
        run("randtest", "--in", str(random_file), "--record")
        report = ScanReport.objects.get()
        assert report.kind == ScanReport.Kind.BATTERY
        assert report.count == 8192
        assert set(report.summary) == {"monobit", "runs", "chi-square", "serial-correlation"}

    @pytest.mark.usefixtures("fast_hash")
    def test_keystream_source(self):
        lines = run("randtest", "--keystream-key", "lorenz!!", "--blocks", "128")
        assert len(lines) == 5

    def test_sample_too_small(self, tmp_path):
        short = tmp_path / "short.bin"
        short.write_bytes(bytes(300))
        with pytest.raises(CommandError, match="at least 4096 bytes") as excinfo:
            run("randtest", "--in", str(short))
        assert excinfo.value.returncode == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            run("randtest", "--in", str(tmp_path / "absent.bin"))
        assert excinfo.value.returncode == 2

    def test_alpha_out_of_range(self, random_file):
        with pytest.raises(CommandError, match="alpha") as excinfo:
            run("randtest", "--in", str(random_file), "--alpha", "1.5")
        assert excinfo.value.returncode == 1


@pytest.mark.usefixtures("fast_hash")
class TestCollide:
    def test_report(self, tmp_path):
        target = tmp_path / "pairs.csv"
        lines = run("collide", "--n", "50", "--seed", "3", "--csv", str(target))
        assert lines == ["distinct inputs: 50", "collisions: 0"]
        assert target.read_text() == "key_a,key_b\n"

    @pytest.mark.django_db
    def test_record(self):
        run("collide", "--n", "20", "--seed", "9", "--record")
        report = ScanReport.objects.get()
        assert (report.kind, report.seed, report.count, report.passed) == ("collision", 9, 20, True)

    def test_base_must_stay_one_way(self):
        with pytest.raises(CommandError, match="gamma") as excinfo:
            run("collide", "--n", "5", "--gamma", "20")
        assert excinfo.value.returncode == 1


@pytest.mark.usefixtures("fast_hash")
class TestAvalanche:
    def test_report(self, tmp_path):
        target = tmp_path / "bits.csv"
        lines = run("avalanche", "--trials", "200", "--csv", str(target))
        assert lines[0] == "trials: 200"
        mean = float(lines[1].split()[2])
        assert 112 <= mean <= 144
        rows = target.read_text().splitlines()
        assert rows[0] == "bit,frequency"
        assert len(rows) == 257

    @pytest.mark.django_db
    def test_record(self):
        run("avalanche", "--trials", "100", "--seed", "1", "--record")
        report = ScanReport.objects.get()
        assert report.kind == ScanReport.Kind.AVALANCHE
        assert report.summary["trials"] == 100

    def test_too_few_trials(self):
        with pytest.raises(CommandError, match="at least 100 trials") as excinfo:
            run("avalanche", "--trials", "10")
        assert excinfo.value.returncode == 1
