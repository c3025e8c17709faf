"""Base parameter loading: built-in defaults, then a config file, then overrides.

A config file holds ``name = value`` lines; ``#`` starts a comment. Values are
decimal literals or exact ratios such as ``beta = 8/3``.
"""

import logging
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError

from lorenz_code.core.exceptions import ConfigError

from .forms import DEFAULT_VALUES
from .forms import BaseConfigForm
from .forms import default_data
from .hashing import BaseConfig

logger = logging.getLogger(__name__)

CONFIG_NAMES = frozenset(DEFAULT_VALUES)


def parse_config_text(text: str, source: str = "<config>") -> dict[str, str]:
    values: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        name, sep, value = content.partition("=")
        name = name.strip()
        value = value.strip()
        if not sep or not name or not value:
            msg = f"{source}:{lineno}: expected 'name = value', got {line.strip()!r}"
            raise ConfigError(msg)
        if name not in CONFIG_NAMES:
            msg = f"{source}:{lineno}: unknown parameter {name!r}"
            raise ConfigError(msg)
        if name in values:
            msg = f"{source}:{lineno}: duplicate parameter {name!r}"
            raise ConfigError(msg)
        values[name] = value
    return values


def read_config_file(path: str | Path) -> dict[str, str]:
    path = Path(path)
    return parse_config_text(path.read_text(encoding="utf-8"), source=str(path))


def load_base_config(
    path: str | Path | None = None,
    overrides: dict[str, object] | None = None,
    *,
    strict: bool = True,
) -> BaseConfig:
    """Merge defaults < config file < overrides and validate the result.

    ``path`` falls back to ``settings.LORENZ_CODE_CONFIG``; ``None`` values in
    ``overrides`` are ignored. Invalid values raise ``ValidationError``.
    """
    data: dict[str, object] = default_data()
    path = path or getattr(settings, "LORENZ_CODE_CONFIG", "")
    if path:
        logger.debug("Reading base parameters from %s", path)
        data.update(read_config_file(path))
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})

    form = BaseConfigForm(data=data, strict=strict)
    if not form.is_valid():
        raise ValidationError(form.error_summary(), code="invalid")
    base = form.to_base_config()
    for note in base.advisories():
        logger.warning("%s", note)
    return base
