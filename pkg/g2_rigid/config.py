"""Runtime settings.

Values come from the environment (a local .env file is honoured); none is
required.
"""

import os

from dotenv import load_dotenv

# override=True so a project .env beats stale shell variables
load_dotenv(override=True)


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        return default


LOG_LEVEL = os.environ.get("G2RIGID_LOG_LEVEL", "WARNING").upper()
DEFAULT_THREADS = max(1, _int_env("G2RIGID_THREADS", 1))
DEFAULT_CLASSIFY_BOUND = max(1, _int_env("G2RIGID_CLASSIFY_BOUND", 24))
DEFAULT_RATIONAL_MAX_ORDER = max(1, _int_env("G2RIGID_RATIONAL_MAX_ORDER", 14))
