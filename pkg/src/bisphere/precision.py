"""Working precision for the few quantities that are not rational."""

import os

DEFAULT_PRECISION = 50
PRECISION_ENV = "BISPHERE_PRECISION"


def working_precision(digits: int | None = None) -> int:
    """Decimal digits: explicit argument, else $BISPHERE_PRECISION, else 50."""
    if digits is not None:
        return int(digits)
    return int(os.environ.get(PRECISION_ENV, DEFAULT_PRECISION))
