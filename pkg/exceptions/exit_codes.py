"""Process exit codes shared by the CLI and the exception classes."""

SUCCESS = 0
USAGE_ERROR = 1
DATA_ERROR = 2
FIT_ERROR = 3
INTERNAL_ERROR = 4
