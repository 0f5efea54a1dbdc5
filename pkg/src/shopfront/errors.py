"""Exception hierarchy shared across the package."""


class ShopfrontError(Exception):
    """Base class for all errors raised by this package."""


class ContractError(ShopfrontError, ValueError):
    """A caller violated a documented precondition."""


class GenotypeError(ContractError):
    """An operation sequence does not match the instance's job quotas."""


class ObjectiveError(ContractError):
    """An objective selection cannot be evaluated on the given instance."""


class ParseError(ShopfrontError):
    """A benchmark file could not be parsed. Carries a 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SchemaError(ShopfrontError):
    """An extended-JSON document violates the instance schema. Carries the JSON path."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class EnumerationLimitError(ShopfrontError):
    """Exhaustive enumeration refused: the sequence count exceeds the limit."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"enumeration size {count} exceeds limit {limit}")
        self.count = count
        self.limit = limit


class NotFoundError(ShopfrontError):
    """A store lookup (instance, run, solution) found nothing."""


class IntegrityError(ShopfrontError):
    """A persisted document exists but cannot be decoded."""


class NotConvergedError(ShopfrontError):
    """Aspiration session finalized while the accepted subset is not a singleton."""

    def __init__(self, count: int):
        super().__init__(f"accepted subset has {count} members, expected exactly 1")
        self.count = count
