"""Exception types shared across the package.

Every precondition failure raises a subclass of PlatkitError so the CLI and
HTTP layers can map them uniformly (exit code 1 / status 400).
"""


class PlatkitError(ValueError):
    """Base class for domain errors."""

    code = "invalid"


class ParseError(PlatkitError):
    code = "parse"


class StrandMismatchError(PlatkitError):
    code = "strand-mismatch"


class OddStrandsError(PlatkitError):
    code = "odd-strands"


class HildenMoveError(PlatkitError):
    code = "unknown-hilden-move"


class PathRangeError(PlatkitError):
    code = "path-out-of-range"


class GraphBoundsError(PlatkitError):
    code = "graph-bounds"
