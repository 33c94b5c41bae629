"""Exception hierarchy for the workbench."""
from typing import Any, Optional


class QHopfError(Exception):
    """Base class for every error raised by qhopf."""


class DimensionMismatch(QHopfError):
    pass


class FieldError(QHopfError):
    pass


class NotInvertible(QHopfError):
    pass


class ConsistencyFailure(QHopfError):
    """A derived structure failed one of its defining identities."""

    def __init__(self, tag: str, message: str = "", lhs: Any = None, rhs: Any = None):
        self.tag = tag
        self.lhs = lhs
        self.rhs = rhs
        text = f"{tag}: {message}" if message else f"{tag} does not hold"
        if lhs is not None or rhs is not None:
            text += f"\n  lhs = {lhs}\n  rhs = {rhs}"
        super().__init__(text)


class NotInYD(QHopfError):
    """A module with coaction fails the Yetter-Drinfeld axioms of its flavor."""

    def __init__(self, flavor: str, tags):
        self.flavor = flavor
        self.tags = list(tags)
        super().__init__(f"not a {flavor} Yetter-Drinfeld module; failing: {', '.join(self.tags)}")


class NotQT(QHopfError):
    pass


class NotTriangular(QHopfError):
    pass


class FlavorMismatch(QHopfError):
    pass


class SpecParseError(QHopfError):
    def __init__(self, message: str, line: int, column: int = 1, path: Optional[str] = None):
        self.line = line
        self.column = column
        self.path = path
        where = f"{path}:" if path else ""
        super().__init__(f"{where}{line}:{column}: {message}")


class SpecValidationError(QHopfError):
    def __init__(self, tag: str, detail: str = ""):
        self.tag = tag
        super().__init__(f"algebra rejected, {tag} fails" + (f": {detail}" if detail else ""))


class UnknownAlgebra(QHopfError):
    pass


class MissingPrerequisite(QHopfError):
    pass
