import os
from dotenv import load_dotenv

# Load .env if present
load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


class Settings:
    """
    Runtime settings for polycalc, read from the environment (or a .env file).
    """
    LOG_LEVEL = os.getenv("POLYCALC_LOG_LEVEL", "WARNING").upper()

    # Seed and instance count for `check` suites (count 0 = suite default)
    SEED = _env_int("POLYCALC_SEED", 0)
    CHECK_COUNT = _env_int("POLYCALC_CHECK_COUNT", 0)
    CHECK_WORKERS = _env_int("POLYCALC_CHECK_WORKERS", 1)

    # Oracle size guards
    ORACLE_MAX_DIM = _env_int("POLYCALC_ORACLE_MAX_DIM", 4)
    ORACLE_MAX_ROWS = _env_int("POLYCALC_ORACLE_MAX_ROWS", 12)

    # LP redundancy pruning after each Fourier-Motzkin step
    FM_PRUNE = _env_bool("POLYCALC_FM_PRUNE", True)

    @classmethod
    def validate(cls):
        """
        Checks that every setting is in range.
        """
        problems = []
        if cls.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            problems.append(f"POLYCALC_LOG_LEVEL={cls.LOG_LEVEL}")
        if cls.CHECK_COUNT < 0:
            problems.append(f"POLYCALC_CHECK_COUNT={cls.CHECK_COUNT}")
        if cls.CHECK_WORKERS < 1:
            problems.append(f"POLYCALC_CHECK_WORKERS={cls.CHECK_WORKERS}")
        if cls.ORACLE_MAX_DIM < 1:
            problems.append(f"POLYCALC_ORACLE_MAX_DIM={cls.ORACLE_MAX_DIM}")
        if cls.ORACLE_MAX_ROWS < 1:
            problems.append(f"POLYCALC_ORACLE_MAX_ROWS={cls.ORACLE_MAX_ROWS}")

        if problems:
            raise ValueError(f"Invalid settings: {', '.join(problems)}")
