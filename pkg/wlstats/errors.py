"""Exceptions raised by the analysis pipeline."""
from voluptuous.error import Invalid, MultipleInvalid


class WlstatsError(Exception):
    """Base for all errors raised by wlstats."""

    kind = 'error'


class ConfigError(WlstatsError):
    """Invalid analysis options."""

    kind = 'config'

    @classmethod
    def from_invalid(cls, error: Invalid, prefix: str = 'Invalid configuration'):
        """Render one or many voluptuous failures into a single error."""
        if isinstance(error, MultipleInvalid) and len(error.errors) > 1:
            return cls(
                prefix + ':\n\t' +
                '\n\t'.join(str(err) for err in error.errors)
            )
        return cls('{}: {}'.format(prefix, error))


class IngestError(WlstatsError):
    """A corpus file could not be read."""

    kind = 'ingest'

    def __init__(self, message: str, path: str = None, offset: int = None):
        self.path = path
        self.offset = offset
        details = []
        if path is not None:
            details.append('path {}'.format(path))
        if offset is not None:
            details.append('byte offset {}'.format(offset))
        if details:
            message = '{} ({})'.format(message, ', '.join(details))
        super().__init__(message)


class EmptyInputError(WlstatsError):
    """Nothing to compute on: no segments, no words, no grams."""

    kind = 'empty'


class ContractError(WlstatsError):
    """A caller broke an operation's precondition."""

    kind = 'contract'


class ReportValidationError(WlstatsError):
    """A report does not match the published report schema."""

    kind = 'report'

    def __init__(self, error: Invalid):
        if isinstance(error, MultipleInvalid) and len(error.errors) > 1:
            super().__init__(
                'Multiple errors found during validation:\n\t' +
                '\n\t'.join(str(err) for err in error.errors)
            )
        else:
            super().__init__(str(error))


class EmitError(WlstatsError):
    """Output could not be written."""

    kind = 'emit'
