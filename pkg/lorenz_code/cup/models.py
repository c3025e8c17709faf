from django.db import models
from django.utils.translation import gettext_lazy as _
from model_utils.models import TimeStampedModel

from lorenz_code.core.exceptions import FitError

from .analysis import MectEstimate


class MectMeasurementManager(models.Manager):
    def for_precision(self, p):
        """Return measurements taken at precision ``p`` bits, newest first."""
        return self.filter(precision_bits=p).order_by("-created", "-pk")

    def latest_anchors(self, p1, p2):
        """Return the newest measurement at each of two precisions as MectEstimates."""
        anchors = []
        for p in (p1, p2):
            measurement = self.for_precision(p).first()
            if measurement is None:
                msg = f"no recorded MECT measurement at p={p}"
                raise FitError(msg)
            anchors.append(measurement.as_estimate())
        return anchors

    def record(self, estimate: MectEstimate, *, t_max, parameters):
        return self.create(
            precision_bits=estimate.precision_bits,
            step=estimate.h_used,
            delta=estimate.delta,
            mect=estimate.mect,
            reference_precision=estimate.reference_precision,
            t_max=t_max,
            parameters=parameters,
        )


class MectMeasurement(TimeStampedModel):
    """One measured maximum effective computation time."""

    precision_bits = models.PositiveIntegerField(
        verbose_name=_("Precision (bits)"),
        db_index=True,
    )
    step = models.FloatField(verbose_name=_("Step size h"))
    delta = models.FloatField(
        verbose_name=_("Divergence threshold"),
        help_text=_("Absolute gap in x that marks divergence"),
    )
    mect = models.FloatField(
        verbose_name=_("MECT"),
        help_text=_("First time the run leaves the reference, nondimensional"),
    )
    reference_precision = models.PositiveIntegerField(
        verbose_name=_("Reference precision (bits)"),
    )
    t_max = models.FloatField(verbose_name=_("Horizon"))
    parameters = models.JSONField(
        verbose_name=_("Base parameters"),
        help_text=_("Exact values as decimal or a/b strings"),
        default=dict,
        blank=True,
    )

    objects = MectMeasurementManager()

    class Meta:
        verbose_name = _("MECT measurement")
        verbose_name_plural = _("MECT measurements")
        ordering = ["-created"]

    def __str__(self):
        return f"MECT p={self.precision_bits} h={self.step}: {self.mect:.2f}"

    def as_estimate(self) -> MectEstimate:
        return MectEstimate(
            precision_bits=self.precision_bits,
            mect=self.mect,
            delta=self.delta,
            h_used=self.step,
            reference_precision=self.reference_precision,
        )
