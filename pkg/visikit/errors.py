class VisikitError(Exception):
    """Base for every failure raised by the library"""


class DomainError(VisikitError):
    """A mathematical precondition of an operation does not hold"""


class SchemaError(VisikitError):
    """Serialized input does not match the expected shape"""
