import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_env(name: str, default: int, minimum: int = None) -> int:
    raw = os.environ.get(name, str(default))
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


class Config:
    # Numerics
    SERIES_ORDER = _int_env("STAU_SERIES_ORDER", 48, minimum=1)
    GRID_N = _int_env("STAU_GRID_N", 101, minimum=41)
    REFINE_ITERS = _int_env("STAU_REFINE_ITERS", 60, minimum=0)
    SEED = _int_env("STAU_SEED", 0, minimum=0)
    STARTS = _int_env("STAU_STARTS", 200, minimum=1)
    SAMPLES = _int_env("STAU_SAMPLES", 100000, minimum=1)
    ANGLES = _int_env("STAU_ANGLES", 4096, minimum=8)

    # Output
    OUT_DIR = os.environ.get("STAU_OUT_DIR", "reports")

    # Runtime
    MAX_WORKERS = _int_env("STAU_MAX_WORKERS", 4, minimum=1)
    LOG_LEVEL = os.environ.get("STAU_LOG_LEVEL", "INFO").upper()
    if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        raise ValueError(f"STAU_LOG_LEVEL must be a logging level name, got {LOG_LEVEL!r}")

    VERSION = "1.0.0"

    # Verifier Configuration
    # Per-verifier settings, overridden by CLI flags in app.py
    VERIFIERS = {
        "strip_domain": {
            "angles": ANGLES,
            "seed": SEED,
            "samples": 10000,
        },
        "extremal": {
            "order": SERIES_ORDER,
            "angles": ANGLES,
        },
        "radius": {
            "angles": ANGLES,
            "seed": SEED,
            "samples": 10000,
        },
        "hankel": {
            "grid_n": GRID_N,
            "refine_iters": REFINE_ITERS,
            "starts": STARTS,
            "seed": SEED,
            "samples": SAMPLES,
        },
    }
