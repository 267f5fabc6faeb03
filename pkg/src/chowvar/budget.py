"""Run-wide configuration: weight-space budget and modular primes."""

import os
from dataclasses import dataclass, field

# 31-bit primes; products of two entries stay well inside Python ints and
# single entries inside int64 when handed to numpy.
DEFAULT_PRIMES = (
    2147483629,
    2147483587,
    2147483579,
    2147483563,
    2147483549,
    2147483543,
)


class BudgetExceededError(RuntimeError):
    """A weight space exceeded the configured dimension cap.

    Carries the offending size so callers can report precisely instead of
    degrading to an approximation.
    """

    def __init__(self, size, cap, where=""):
        self.size = size
        self.cap = cap
        self.where = where
        msg = f"weight space of dimension {size} exceeds cap {cap}"
        if where:
            msg += f" ({where})"
        super().__init__(msg)


@dataclass
class Config:
    # refuse to materialize any weight-space basis larger than this
    weight_cap: int = 200_000
    # direct exact nullspace solves up to this weight-space dimension
    exact_cap: int = 500
    # full decompose() only below this ambient dimension; larger spaces
    # must go through the weight-local decompose_at
    decompose_cap: int = 10_000_000
    # number of independent primes that must agree for modular rank claims
    num_primes: int = 2
    primes: tuple = field(default=DEFAULT_PRIMES)


_config = Config()


def get_config() -> Config:
    cfg = _config
    env = os.environ.get("CHOW_WEIGHT_CAP")
    if env:
        cfg = Config(
            weight_cap=int(env),
            exact_cap=cfg.exact_cap,
            num_primes=cfg.num_primes,
            primes=cfg.primes,
        )
    return cfg


def set_config(cfg: Config) -> None:
    global _config
    _config = cfg
