import os

from dotenv import load_dotenv

load_dotenv()


def _float_list(raw: str) -> tuple:
    return tuple(float(item) for item in raw.split(",") if item.strip())


def _int_list(raw: str) -> tuple:
    return tuple(int(item) for item in raw.split(",") if item.strip())


# Output
DEFAULT_OUTPUT_FORMAT = os.getenv("LATTICE_OUTPUT_FORMAT", "table")
OUTPUT_FORMATS = ("table", "csv", "json")
SIGNIFICANT_DIGITS = int(os.getenv("LATTICE_SIGNIFICANT_DIGITS", "7"))

# Command defaults
DEFAULT_ZETAS = _float_list(os.getenv("LATTICE_ZETAS", "0.5,1,2,3,4"))
DEFAULT_STEPS_LIST = _int_list(os.getenv("LATTICE_STEPS_LIST", "100,200,400"))
DEFAULT_KSRF_P = float(os.getenv("LATTICE_DEFAULT_KSRF_P", "0.5"))

# Convergence sweeps; 1 keeps runs sequential
MAX_WORKERS = int(os.getenv("LATTICE_MAX_WORKERS", "1"))

# Brute-force oracle guards (2^N and 3^N paths)
BRUTE_FORCE_MAX_BINOMIAL = int(os.getenv("LATTICE_BRUTE_FORCE_MAX_BINOMIAL", "12"))
BRUTE_FORCE_MAX_TRINOMIAL = int(os.getenv("LATTICE_BRUTE_FORCE_MAX_TRINOMIAL", "8"))

LOG_LEVEL = os.getenv("LATTICE_LOG_LEVEL", "WARNING")

# Tolerances
PROBABILITY_SUM_TOL = 1e-12

# KSRF p outside this band gives very lopsided factors
KSRF_P_COMFORT_BAND = (0.05, 0.95)
