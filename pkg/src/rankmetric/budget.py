"""Enumeration budgets.

Every exponential loop in the package checks its size against a cap before
starting and raises :class:`BudgetExceeded` instead of running unbounded.
"""

from __future__ import annotations

DEFAULT_CODEWORD_CAP = 2**24
DEFAULT_SUBSPACE_CAP = 10**6
DEFAULT_GROUP_CAP = 10**8


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, required: int, cap: int):
        self.what = what
        self.required = required
        self.cap = cap
        super().__init__(f"{what} budget exceeded: need {required}, cap is {cap}")


def check_budget(what: str, required: int, cap: int | None) -> None:
    if cap is not None and required > cap:
        raise BudgetExceeded(what, required, cap)
