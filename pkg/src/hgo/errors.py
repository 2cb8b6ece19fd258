"""Exception hierarchy.

Every error carries a short machine-greppable ``code`` and the process exit
status the CLI uses for it.
"""


class HgoError(Exception):
    code = "HGO_ERROR"
    exit_status = 1


class ParseError(HgoError):
    code = "PARSE_ERROR"
    exit_status = 2


class ValidationError(HgoError, ValueError):
    code = "VALIDATION_ERROR"
    exit_status = 3


class NegativeColor(ValidationError):
    code = "NEGATIVE_COLOR"


class AsymmetricUndirectedEdge(ValidationError):
    code = "ASYMMETRIC_UNDIRECTED_EDGE"


class SelfLoop(ValidationError):
    code = "SELF_LOOP"


class VertexOutOfRange(ValidationError):
    code = "VERTEX_OUT_OF_RANGE"
    exit_status = 6


class DuplicateVertex(ValidationError):
    code = "DUPLICATE_VERTEX"


class BadLength(ValidationError):
    code = "BAD_LENGTH"


class BadPermutation(ValidationError):
    code = "BAD_PERMUTATION"


class ColorOutOfBounds(ValidationError):
    code = "COLOR_OUT_OF_BOUNDS"


class KExceedsOrder(ValidationError):
    code = "K_EXCEEDS_ORDER"
    exit_status = 7


class ResourceGuard(HgoError):
    code = "RESOURCE_GUARD"
    exit_status = 4


class OrderTooLarge(ResourceGuard):
    code = "ORDER_TOO_LARGE"


class TypeTooLarge(ResourceGuard):
    code = "TYPE_TOO_LARGE"


class CorruptCatalog(HgoError):
    code = "CORRUPT_CATALOG"
    exit_status = 5


class CacheDirMissing(HgoError, OSError):
    code = "CACHE_DIR_MISSING"
