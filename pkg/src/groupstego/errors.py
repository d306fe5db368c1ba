"""Exception hierarchy shared by every codec and the CLI."""


class StegoError(Exception):
    """Base class for all errors raised by groupstego."""


class InvalidPayloadLength(StegoError, ValueError):
    pass


class IndexOutOfRange(StegoError, IndexError):
    pass


class ImageTooSmall(StegoError, ValueError):
    pass


class NotAStegoImage(StegoError, ValueError):
    pass


class UnsupportedAlgorithm(StegoError, ValueError):
    pass


class CorruptPayload(StegoError, ValueError):
    pass


class UnsupportedImageFormat(StegoError, ValueError):
    pass


class DimensionMismatch(StegoError, ValueError):
    pass


class CapacityExhausted(StegoError, ValueError):
    """Raised when the cover runs out of components before the secret is placed.

    ``placed`` and ``required`` are expressed in secret bits.
    """

    def __init__(self, message: str, placed: int = 0, required: int = 0):
        super().__init__(message)
        self.placed = placed
        self.required = required
