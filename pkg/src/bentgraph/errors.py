"""Exception types and default resource guards shared across the package."""


class ResourceLimitError(ValueError):
    """Raised when a brute-force path would exceed its configured size guard."""

    def __init__(self, what, value, limit):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds the resource limit {limit}")


class InvariantError(RuntimeError):
    """An internal consistency check failed. Never expected in normal use."""


class InfeasibleParameters(ValueError):
    """srg parameters or spectra that do not yield an integral counterpart."""


# Default guards (all configurable per call).
WHT_MAX_N = 20
BRUTE_FORCE_MAX_N = 14
AFFINE_LIST_MAX_N = 14
RANK_MAX_N = 6
SRG_COUNT_MAX_N = 12
# Brute force over 2**(m*(n+1)) affine maps is allowed while m*(n+1) stays below 20.
VECTORIAL_AFFINE_MAX_BITS = 19


def check_limit(what, value, limit):
    if value > limit:
        raise ResourceLimitError(what, value, limit)
