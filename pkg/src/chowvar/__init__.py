"""Exact computations with GL(V)-modules attached to Chow varieties.

Everything here is exact: integer and rational arithmetic throughout,
with modular arithmetic used only as a search accelerator behind exact
verification gates.
"""

__version__ = "0.1.0"

from .budget import BudgetExceededError, Config, get_config, set_config

__all__ = ["BudgetExceededError", "Config", "get_config", "set_config", "__version__"]
