from django.db import models
from django.utils.translation import gettext_lazy as _
from model_utils.models import TimeStampedModel


class ScanReportQuerySet(models.QuerySet):
    def of_kind(self, kind):
        return self.filter(kind=kind)

    def failed(self):
        return self.filter(passed=False)


class ScanReport(TimeStampedModel):
    """Outcome of one collision scan, avalanche scan or battery run."""

    class Kind(models.TextChoices):
        COLLISION = "collision", _("Collision scan")
        AVALANCHE = "avalanche", _("Avalanche scan")
        BATTERY = "battery", _("Statistical battery")

    kind = models.CharField(
        verbose_name=_("Kind"),
        max_length=16,
        choices=Kind.choices,
        db_index=True,
    )
    seed = models.BigIntegerField(
        verbose_name=_("Seed"),
        null=True,
        blank=True,
    )
    count = models.PositiveIntegerField(
        verbose_name=_("Count"),
        help_text=_("Keys hashed, trials run or bytes tested"),
    )
    passed = models.BooleanField(verbose_name=_("Passed"))
    summary = models.JSONField(
        verbose_name=_("Summary"),
        default=dict,
        blank=True,
    )

    objects = ScanReportQuerySet.as_manager()

    class Meta:
        verbose_name = _("scan report")
        verbose_name_plural = _("scan reports")
        ordering = ["-created"]

    def __str__(self):
        outcome = "passed" if self.passed else "failed"
        return f"{self.get_kind_display()} of {self.count} ({outcome})"
