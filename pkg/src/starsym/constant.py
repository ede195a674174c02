from __future__ import annotations

# Enumeration caps
ENUMERATION_LIMIT_DEFAULT = 10**7
PARTITION_LIMIT_DEFAULT = 10**6

# Oracle caps
ORACLE_MAX_S_DEFAULT = 8
ORACLE_MAX_M_DEFAULT = 6
ORACLE_MAX_GENERATORS_DEFAULT = 10**6

# Verification
VERIFY_MONOMIAL_BOUND = 3
VERIFY_SAMPLE_CAP = 5000

# Memo size for the Diophantine counter
COUNT_CACHE_SIZE = 2**16

# Worker pool
THREADS_DEFAULT = 1
THREADPOOL_MAX_WORKERS = 32

# Output
SCHEMA = "starsym/1"
FORM_PREFIX = "F"

# Exit codes
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE_LIMIT = 3
