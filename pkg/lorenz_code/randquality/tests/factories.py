import factory

from lorenz_code.randquality.models import ScanReport


class ScanReportFactory(factory.django.DjangoModelFactory):
    class Meta:
        model = ScanReport

    kind = ScanReport.Kind.COLLISION
    seed = factory.Sequence(lambda n: n)
    count = 1000
    passed = True
    summary = factory.LazyAttribute(
        lambda obj: {"distinct_inputs": obj.count, "collisions": 0, "pairs": []},
    )
