import os

from qseries.errors import ConfigurationError

# CONSTANTS
ORDER_ENV = "PARITY_FORGE_ORDER"
JOBS_ENV = "PARITY_FORGE_JOBS"
DEFAULT_ORDER = 2000
DEEP_ORDER = 20000
SMALL_ORDER = 500
# proof steps are many; they run at this order when the suite order is larger
IDENTITY_ORDER = 1000
DEFAULT_JOBS = 1


def _positive_int_from_env(name, default, minimum):
    if name not in os.environ:
        return default
    raw = os.environ[name]
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name}={raw!r} is not an integer") from None
    if value < minimum:
        raise ConfigurationError(f"{name}={raw!r} must be at least {minimum}")
    return value


def order_from_env() -> int:
    return _positive_int_from_env(ORDER_ENV, DEFAULT_ORDER, 0)


def jobs_from_env() -> int:
    return _positive_int_from_env(JOBS_ENV, DEFAULT_JOBS, 1)
