"""Arbitrary-precision arithmetic contract shared by every module.

All numerical work in this package runs on mpmath values created from an
explicit :class:`PrecisionConfig`.  A config owns a private mpmath context
whose precision equals ``target_digits + guard_digits``; the global
``mpmath.mp`` context is never touched, so two configs can coexist and a
computation can be replayed at a second precision for a self-check.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import mpmath


@dataclass(frozen=True)
class PrecisionConfig:
    """Requested output precision plus guard digits for intermediate work.

    ``target_digits`` is what the caller may rely on; arithmetic happens at
    ``working_digits = target_digits + guard_digits``.
    """

    target_digits: int = 40
    guard_digits: int = 10

    def __post_init__(self) -> None:
        if self.target_digits < 10:
            raise ValueError(f"target_digits must be >= 10, got {self.target_digits}")
        if self.guard_digits < 10:
            raise ValueError(f"guard_digits must be >= 10, got {self.guard_digits}")

    @property
    def working_digits(self) -> int:
        return self.target_digits + self.guard_digits

    @property
    def context(self) -> mpmath.ctx_mp.MPContext:
        """The mpmath context all values of this config live in (cached)."""
        return _context(self.working_digits)

    def eps(self, digits_lost: int = 0) -> mpmath.mpf:
        """10^-(working_digits - digits_lost), the usual residual yardstick."""
        return self.context.mpf(10) ** (-(self.working_digits - digits_lost))


@functools.lru_cache(maxsize=None)
def _context(decimal_digits: int) -> mpmath.ctx_mp.MPContext:
    ctx = mpmath.mp.clone()
    ctx.dps = decimal_digits
    return ctx


_KNOWN_CONSTANTS = ("pi", "log2", "euler_log")


def constant(name: str, cfg: PrecisionConfig, x=None):
    """Named mathematical constant at working precision.

    ``euler_log`` takes the positive argument ``x`` and returns log(x).
    """
    ctx = cfg.context
    if name == "pi":
        return +ctx.pi
    if name == "log2":
        return ctx.ln(ctx.mpf(2))
    if name == "euler_log":
        if x is None:
            raise ValueError("euler_log requires an argument")
        xv = ctx.mpf(x)
        if xv <= 0:
            raise ValueError(f"euler_log argument must be positive, got {x}")
        return ctx.ln(xv)
    raise ValueError(f"unknown constant {name!r}; expected one of {_KNOWN_CONSTANTS}")


def zeta(n: int, cfg: PrecisionConfig):
    """Riemann zeta at an integer n >= 2, at working precision."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"zeta requires an integer n >= 2, got {n!r}")
    return cfg.context.zeta(n)


def agreement_digits(x, y, cfg: PrecisionConfig) -> float:
    """Number of decimal digits to which x and y agree (relative to max(1,|x|)).

    Used by the precision-doubling self-checks; returns working_digits when
    the difference underflows entirely.
    """
    ctx = cfg.context
    diff = abs(ctx.mpc(x) - ctx.mpc(y))
    if diff == 0:
        return float(cfg.working_digits)
    scale = max(ctx.mpf(1), abs(ctx.mpc(x)))
    return float(-ctx.log10(diff / scale))
