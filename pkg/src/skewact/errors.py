"""Exception hierarchy.

Axiom failures are never raised; they are recorded in a CheckReport.  These
exceptions signal malformed data or malformed input.
"""


class StructureError(Exception):
    """Data is malformed: a composite has mismatched boundaries, a component
    that must be invertible is not, and so on."""


class CompositionError(StructureError):
    def __init__(self, left, right, detail=""):
        self.left, self.right = left, right
        msg = f"cannot compose: codomain {left} does not match domain {right}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class AdjunctionError(StructureError):
    pass


class BraidingError(StructureError):
    pass


class DiagramError(StructureError):
    pass


class FunctorError(StructureError):
    pass


class MonoidError(ValueError):
    pass


class SchemaError(ValueError):
    """A check-plan document does not conform to the schema."""

    def __init__(self, field, message, line=None):
        self.field, self.line = field, line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{field}: {message}")
