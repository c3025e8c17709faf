from django import forms
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from lorenz_code.core.exceptions import LorenzCodeError
from lorenz_code.mp import parse_exact

from .hashing import MIN_GAMMA
from .hashing import MIN_PRECISION
from .hashing import MIN_TIME
from .hashing import BaseConfig

DEFAULT_VALUES = {
    "gamma": "28",
    "sigma": "10",
    "beta": "8/3",
    "x0": "5",
    "y0": "5",
    "z0": "10",
    "h": "0.01",
    "p": "256",
    "t": "200",
    "h_perturb_scale": "0.00001",
}


class ExactNumberField(forms.CharField):
    """A decimal literal or an exact rational ``a/b``, cleaned to a Fraction."""

    def to_python(self, value):
        value = super().to_python(value)
        if value in self.empty_values:
            return None
        try:
            return parse_exact(value)
        except LorenzCodeError as exc:
            raise ValidationError(
                _("Enter a decimal number or a ratio a/b: %(error)s"),
                code="invalid",
                params={"error": exc},
            ) from exc


class BaseConfigForm(forms.Form):
    """Validates the nine base parameters of the one-way mapping.

    With ``strict=False`` only the sanity checks any integration needs are
    applied; ``strict=True`` adds the invariants that keep the mapping one-way.
    """

    gamma = ExactNumberField()
    sigma = ExactNumberField()
    beta = ExactNumberField()
    x0 = ExactNumberField()
    y0 = ExactNumberField()
    z0 = ExactNumberField()
    h = ExactNumberField()
    p = forms.IntegerField(min_value=2)
    t = ExactNumberField()
    h_perturb_scale = ExactNumberField()
    literal_h_perturb = forms.BooleanField(required=False)

    def __init__(self, *args, strict=True, **kwargs):
        self.strict = strict
        super().__init__(*args, **kwargs)

    def clean_h(self):
        h = self.cleaned_data.get("h")
        if h is not None and h <= 0:
            raise ValidationError(_("Step h must be positive."), code="min_value")
        return h

    def clean_t(self):
        t = self.cleaned_data.get("t")
        if t is not None and t < 0:
            raise ValidationError(_("Time t must not be negative."), code="min_value")
        return t

    def clean_h_perturb_scale(self):
        scale = self.cleaned_data.get("h_perturb_scale")
        if scale is not None and scale <= 0:
            raise ValidationError(
                _("h_perturb_scale must be positive."),
                code="min_value",
            )
        return scale

    def clean(self):
        cleaned_data = super().clean()
        if not self.strict:
            return cleaned_data

        gamma = cleaned_data.get("gamma")
        if gamma is not None and gamma < MIN_GAMMA:
            self.add_error("gamma", _("gamma must be at least %s.") % MIN_GAMMA)
        t = cleaned_data.get("t")
        if t is not None and t < MIN_TIME:
            self.add_error("t", _("t must be at least %s.") % MIN_TIME)
        p = cleaned_data.get("p")
        if p is not None and p < MIN_PRECISION:
            self.add_error("p", _("precision must be at least %s bits.") % MIN_PRECISION)
        return cleaned_data

    def to_base_config(self) -> BaseConfig:
        data = self.cleaned_data
        return BaseConfig(
            gamma=data["gamma"],
            sigma=data["sigma"],
            beta=data["beta"],
            x0=data["x0"],
            y0=data["y0"],
            z0=data["z0"],
            h=data["h"],
            precision=data["p"],
            t=data["t"],
            h_perturb_scale=data["h_perturb_scale"],
            literal_h_perturb=data["literal_h_perturb"],
        )

    def error_summary(self) -> str:
        """All field errors on one line, ``field: message; ...``."""
        parts = []
        for name, errors in self.errors.items():
            parts.extend(f"{name}: {error}" for error in errors)
        return "; ".join(parts)


def default_data() -> dict[str, str]:
    return dict(DEFAULT_VALUES)
