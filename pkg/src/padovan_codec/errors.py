"""Exception hierarchy.

``InputError`` covers bad text, bad symbols and malformed coded files.
``CodecError`` covers failures of the block arithmetic itself.  The CLI
maps the two families to exit codes 1 and 2.
"""


class PadovanError(Exception):
    """Base class for every error raised by this package."""


class InputError(PadovanError, ValueError):
    pass


class SymbolError(InputError):
    """A character or value outside the 28-symbol alphabet."""


class TextError(InputError):
    """Plaintext that cannot be normalised."""


class ShapeError(InputError):
    """Row count does not match the declared block count."""


class FormatError(InputError):
    """Base for coded-file parse failures."""


class HeaderError(FormatError):
    pass


class RowCountError(FormatError, ShapeError):
    pass


class FieldCountError(FormatError):
    pass


class FieldSyntaxError(FormatError):
    pass


class EntryRangeError(FormatError):
    pass


class CodecError(PadovanError, ArithmeticError):
    pass


class MinorConditionError(CodecError):
    """A block with zero centre minor was handed to the encoder."""


class RemediationError(CodecError):
    """Prepending padding never produced blocks with nonzero minors."""


class SingularSystemError(CodecError):
    """The centre entry drops out of the determinant equation."""


class NonIntegerSolutionError(CodecError):
    """The determinant equation has no integer root; the row is corrupt."""


class CenterRangeError(CodecError):
    """The recovered centre is not a valid alphabet value."""
