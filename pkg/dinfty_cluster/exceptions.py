"""Error types raised by dinfty_cluster."""


class LabelParseError(ValueError):
    """Label or object text that does not follow the label grammar."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{text!r}: {reason} at position {position}")


class InvalidLabelError(ValueError):
    """A label whose parameters violate the family constraints."""


class WindowUnderflowError(ValueError):
    """An object or region does not fit inside the requested window."""


class TruncationError(ValueError):
    """An oracle truncation bound is too small for the representations involved."""


class NotRigidError(ValueError):
    """A set of cluster objects with non-vanishing Ext between (or on) its members."""


class OracleError(RuntimeError):
    """A representation built from a label is not a brick."""
