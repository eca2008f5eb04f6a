"""Exception types shared across the package.

CLI exit codes: 0 success, 1 verification failure, 2 resource limit,
3 rejected input.
"""


class InputError(ValueError):
    """Rejected input: bad parameters, malformed files, domain violations."""

    exit_code = 3


class SweepLimitError(RuntimeError):
    """A configured resource limit (subset-sweep size cap) was exceeded."""

    exit_code = 2

    def __init__(self, n, limit):
        super().__init__(
            "n=%d exceeds the subset-sweep limit %d (override with a larger limit)"
            % (n, limit))
        self.n = n
        self.limit = limit
