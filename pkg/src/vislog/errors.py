"""Exception types shared across the pipeline."""


class VislogError(Exception):
    """Base class for all vislog errors."""


class DuplicateName(VislogError):
    pass


class UnknownEventName(VislogError):
    pass


class MissingField(VislogError):
    def __init__(self, *fields: str):
        self.fields = tuple(fields)
        super().__init__(f"missing required field(s): {', '.join(fields)}")


class NonPositiveTimestamp(VislogError):
    pass


class MalformedRecord(VislogError):
    def __init__(self, position: int, reason: str):
        self.position = position
        self.reason = reason
        super().__init__(f"malformed record at line {position}: {reason}")


class IoFailure(VislogError):
    pass


class InvalidAnnotation(VislogError):
    pass


class UnknownUser(VislogError):
    pass


class VisitOutOfRange(VislogError):
    pass


class InvalidSpec(VislogError):
    pass


class StoreMissing(VislogError):
    pass
