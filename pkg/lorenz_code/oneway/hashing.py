"""The one-way mapping A = L(sigma, gamma, beta, h, p, t, x0, y0, z0) and the
8-byte keyed hash built on it.

A key block m1..m8 perturbs the nine base parameters, the Lorenz system is
integrated far beyond its maximum effective computation time, and the binary
significand of the final x becomes the 256-bit digest.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import field
from dataclasses import fields
from dataclasses import replace
from fractions import Fraction
from functools import lru_cache

from lorenz_code.core.exceptions import ConfigError
from lorenz_code.dynamics.lorenz import IntegrationSpec
from lorenz_code.dynamics.lorenz import LorenzParams
from lorenz_code.dynamics.lorenz import State3
from lorenz_code.dynamics.lorenz import integrate
from lorenz_code.mp import MPReal
from lorenz_code.mp import Op
from lorenz_code.mp import mp_cmp
from lorenz_code.mp import mp_coerce
from lorenz_code.mp import mp_from_int
from lorenz_code.mp import mp_op
from lorenz_code.mp.real import check_precision
from lorenz_code.mp.real import check_raw

logger = logging.getLogger(__name__)

KEY_BYTES = 8
DIGEST_BITS = 256
DIGEST_BYTES = DIGEST_BITS // 8

MIN_GAMMA = Fraction(28)
MIN_TIME = Fraction(200)
MIN_PRECISION = DIGEST_BITS
SLOW_TIME = Fraction(1000)
STEP_ADVISORY = (Fraction(1, 2000), Fraction(1, 20))
LITERAL_H_PERTURB_SCALE = Fraction(1, 1000)


@dataclass(frozen=True, slots=True)
class KeyBlock:
    """The 8-byte message m1..m8."""

    data: bytes

    def __post_init__(self):
        if not isinstance(self.data, bytes) or len(self.data) != KEY_BYTES:
            msg = f"a key block is exactly {KEY_BYTES} bytes"
            raise ConfigError(msg)

    @classmethod
    def from_hex(cls, text: str) -> KeyBlock:
        if len(text) != 2 * KEY_BYTES:
            msg = f"hex keys are exactly {2 * KEY_BYTES} hex characters"
            raise ConfigError(msg)
        try:
            return cls(bytes.fromhex(text))
        except ValueError as exc:
            msg = f"invalid hex key: {text!r}"
            raise ConfigError(msg) from exc

    @classmethod
    def from_ascii(cls, text: str) -> KeyBlock:
        if len(text) != KEY_BYTES:
            msg = f"ASCII keys are exactly {KEY_BYTES} characters"
            raise ConfigError(msg)
        try:
            return cls(text.encode("ascii"))
        except UnicodeEncodeError as exc:
            msg = "ASCII keys may only contain ASCII characters"
            raise ConfigError(msg) from exc

    @classmethod
    def parse(cls, text: str, key_format: str | None = None) -> KeyBlock:
        """Read a key as 16 hex characters or 8 ASCII characters."""
        if key_format == "hex" or (key_format is None and len(text) == 2 * KEY_BYTES):
            return cls.from_hex(text)
        if key_format == "ascii" or (key_format is None and len(text) == KEY_BYTES):
            return cls.from_ascii(text)
        msg = f"keys are {2 * KEY_BYTES} hex characters or {KEY_BYTES} ASCII characters"
        raise ConfigError(msg)

    @property
    def m(self) -> tuple[int, ...]:
        return tuple(self.data)

    def flip_bit(self, index: int) -> KeyBlock:
        """Copy with bit ``index`` flipped, bit 0 being the MSB of m1."""
        buf = bytearray(self.data)
        buf[index // 8] ^= 0x80 >> (index % 8)
        return KeyBlock(bytes(buf))

    def hex(self) -> str:
        return self.data.hex()


@dataclass(frozen=True, slots=True)
class Digest256:
    data: bytes

    def __post_init__(self):
        if len(self.data) != DIGEST_BYTES:
            msg = f"a digest is exactly {DIGEST_BYTES} bytes"
            raise ValueError(msg)

    def hex(self) -> str:
        return self.data.hex()

    def as_int(self) -> int:
        return int.from_bytes(self.data, "big")


@dataclass(frozen=True, slots=True)
class BaseConfig:
    """The nine base parameters, kept as exact rationals until a precision is chosen.

    ``h`` and ``t`` are nondimensional time, ``precision`` is in bits.
    """

    gamma: Fraction = Fraction(28)
    sigma: Fraction = Fraction(10)
    beta: Fraction = Fraction(8, 3)
    x0: Fraction = Fraction(5)
    y0: Fraction = Fraction(5)
    z0: Fraction = Fraction(10)
    h: Fraction = Fraction(1, 100)
    precision: int = 256
    t: Fraction = Fraction(200)
    h_perturb_scale: Fraction = field(default=Fraction(1, 100_000))
    literal_h_perturb: bool = False

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name not in {"precision", "literal_h_perturb"}:
                object.__setattr__(self, f.name, Fraction(value))
        check_precision(self.precision)
        if self.h <= 0:
            msg = f"step h must be positive, got {float(self.h)}"
            raise ConfigError(msg)
        if self.t < 0:
            msg = f"time t must be non-negative, got {float(self.t)}"
            raise ConfigError(msg)
        if self.h_perturb_scale <= 0:
            msg = "h_perturb_scale must be positive"
            raise ConfigError(msg)

    def with_overrides(self, **changes) -> BaseConfig:
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def check_one_way(self) -> BaseConfig:
        """Enforce the invariants every perturbed input must satisfy.

        Key bytes only ever increase gamma and t, so checking the base is enough.
        """
        if self.gamma < MIN_GAMMA:
            msg = f"gamma must be at least {MIN_GAMMA} to stay chaotic, got {float(self.gamma)}"
            raise ConfigError(msg)
        if self.t < MIN_TIME:
            msg = f"t must be at least {MIN_TIME}, got {float(self.t)}"
            raise ConfigError(msg)
        if self.precision < MIN_PRECISION:
            msg = f"a {DIGEST_BITS}-bit digest needs p >= {MIN_PRECISION}, got {self.precision}"
            raise ConfigError(msg)
        return self

    def advisories(self) -> list[str]:
        notes = []
        if self.t > SLOW_TIME:
            notes.append(f"t={float(self.t)} above {SLOW_TIME} makes every hash slow")
        low, high = STEP_ADVISORY
        if not low <= self.h <= high:
            notes.append(f"h={float(self.h)} is outside the usual range [{float(low)}, {float(high)}]")
        return notes

    @property
    def effective_h_scale(self) -> Fraction:
        return LITERAL_H_PERTURB_SCALE if self.literal_h_perturb else self.h_perturb_scale

    def integration_spec(self, **changes) -> IntegrationSpec:
        """The unperturbed integration, optionally with h, t or precision replaced."""
        p = changes.get("precision") or self.precision
        return IntegrationSpec.build(
            sigma=self.sigma,
            gamma=self.gamma,
            beta=self.beta,
            initial=(self.x0, self.y0, self.z0),
            h=Fraction(changes.get("h") or self.h),
            t=Fraction(self.t if changes.get("t") is None else changes["t"]),
            precision=p,
        )

    def as_strings(self) -> dict[str, str]:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            out[f.name] = str(value)
        return out

    @classmethod
    def from_strings(cls, values: dict[str, str]) -> BaseConfig:
        """Inverse of ``as_strings``, used to pass a base through Celery."""
        data: dict[str, object] = dict(values)
        if "precision" in data:
            data["precision"] = int(data["precision"])
        if "literal_h_perturb" in data:
            data["literal_h_perturb"] = data["literal_h_perturb"] in {True, "True"}
        return cls(**data)


@dataclass(frozen=True, slots=True)
class OneWayInput:
    params: LorenzParams
    initial: State3
    h: MPReal
    precision: int
    t: MPReal

    def __post_init__(self):
        p = self.precision
        if p < MIN_PRECISION:
            msg = f"a {DIGEST_BITS}-bit digest needs p >= {MIN_PRECISION}, got {p}"
            raise ConfigError(msg)
        if mp_cmp(self.t, mp_from_int(int(MIN_TIME), p)) < 0:
            msg = f"t must be at least {MIN_TIME}, got {self.t}"
            raise ConfigError(msg)
        if mp_cmp(self.params.gamma, mp_from_int(int(MIN_GAMMA), p)) < 0:
            msg = f"gamma must be at least {MIN_GAMMA}, got {self.params.gamma}"
            raise ConfigError(msg)

    def to_spec(self) -> IntegrationSpec:
        return IntegrationSpec(
            params=self.params,
            initial=self.initial,
            h=self.h,
            t=self.t,
            precision=self.precision,
        )


def encode_key(base: BaseConfig, k: KeyBlock) -> OneWayInput:
    """Perturb the base parameters by the key bytes, all arithmetic at precision p.

    gamma' = gamma + m1/1000, sigma' = sigma + m2/1000, beta' = beta + m3/1000,
    x' = x0 + m4/1000, y' = y0 + m5/1000, z' = z0 + m6/1000,
    h' = h + m7 * h_perturb_scale (or m7/1000 in literal mode), t' = t + m8.
    """
    base.check_one_way()
    p = base.precision
    thousand = mp_from_int(1000, p)
    m1, m2, m3, m4, m5, m6, m7, m8 = k.m

    def milli(value: Fraction, m: int) -> MPReal:
        offset = mp_op(mp_from_int(m, p), thousand, Op.DIV)
        return mp_op(mp_coerce(value, p), offset, Op.ADD)

    if base.literal_h_perturb:
        h = milli(base.h, m7)
    else:
        step_offset = mp_op(mp_from_int(m7, p), mp_coerce(base.h_perturb_scale, p), Op.MUL)
        h = mp_op(mp_coerce(base.h, p), step_offset, Op.ADD)

    return OneWayInput(
        params=LorenzParams(
            sigma=milli(base.sigma, m2),
            gamma=milli(base.gamma, m1),
            beta=milli(base.beta, m3),
        ),
        initial=State3(milli(base.x0, m4), milli(base.y0, m5), milli(base.z0, m6)),
        h=h,
        precision=p,
        t=mp_op(mp_coerce(base.t, p), mp_from_int(m8, p), Op.ADD),
    )


def one_way(one_way_input: OneWayInput) -> State3:
    """Integrate the perturbed system; deterministic for equal inputs."""
    return integrate(one_way_input.to_spec())


def extract_digest(s: State3) -> Digest256:
    """First 256 bits of the binary significand of x; sign and exponent dropped."""
    x = s.x
    check_raw(x.raw)
    if x.precision < DIGEST_BITS:
        msg = f"digest extraction needs p >= {DIGEST_BITS}, got {x.precision}"
        raise ConfigError(msg)
    if x.is_zero:
        return Digest256(bytes(DIGEST_BYTES))
    bits = x.significand >> (x.precision - DIGEST_BITS)
    return Digest256(bits.to_bytes(DIGEST_BYTES, "big"))


@lru_cache(maxsize=4096)
def hash8(base: BaseConfig, k: KeyBlock) -> Digest256:
    """Keyed hash of one 8-byte message."""
    digest = extract_digest(one_way(encode_key(base, k)))
    logger.debug("hash8(%s) = %s", k.hex(), digest.hex())
    return digest
