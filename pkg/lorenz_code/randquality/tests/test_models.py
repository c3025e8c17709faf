import pytest

from lorenz_code.randquality.models import ScanReport
from lorenz_code.randquality.tests.factories import ScanReportFactory

pytestmark = pytest.mark.django_db


def test_str():
    report = ScanReportFactory(kind=ScanReport.Kind.AVALANCHE, count=1000, passed=False)
    assert str(report) == "Avalanche scan of 1000 (failed)"


def test_queryset_filters():
    collision = ScanReportFactory()
    failed_battery = ScanReportFactory(kind=ScanReport.Kind.BATTERY, passed=False)
    assert list(ScanReport.objects.of_kind(ScanReport.Kind.COLLISION)) == [collision]
    assert list(ScanReport.objects.failed()) == [failed_battery]


def test_summary_is_stored_as_json():
    report = ScanReportFactory(summary={"pairs": [["00", "01"]], "collisions": 1})
    report.refresh_from_db()
    assert report.summary["pairs"] == [["00", "01"]]
