"""Exception types shared across the package."""


class ContactLabError(Exception):
    """Base class for all package errors."""


class CapacityError(ContactLabError):
    """A size budget (atom width, point budget, enumeration width) was exceeded."""


class DomainMismatchError(ContactLabError):
    """Operands live in different algebras/spaces, or an index is out of range."""


class AxiomViolationError(ContactLabError):
    """A relation or family violates a required axiom.

    Carries the axiom tag and, when available, a concrete witness.
    """

    def __init__(self, axiom, witness=None, message=None):
        self.axiom = axiom
        self.witness = witness
        if message is None:
            if witness is None:
                message = f"axiom {axiom} violated"
            else:
                message = f"axiom {axiom} violated, witness {witness!r}"
        super().__init__(message)


class PreconditionError(ContactLabError):
    """An operation precondition does not hold."""


class ValidationError(ContactLabError):
    """An invalid composite structure was used where a valid one is required."""


class ClassificationError(ContactLabError):
    """An object is outside the requested subcategory."""


class SchemaError(ContactLabError):
    """A serialized instance does not match its schema."""

    def __init__(self, message, location="$"):
        self.location = location
        super().__init__(f"{location}: {message}")
