"""Exception hierarchy shared by every layer of the package."""


class DragonCryptoError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ParameterError(DragonCryptoError, ValueError):
    exit_code = 3


class InvalidKeyParameters(ParameterError):
    """A key or curve violates one or more invariants.

    ``failures`` lists a human-readable line per violated invariant.
    """

    def __init__(self, failures):
        if isinstance(failures, str):
            failures = [failures]
        self.failures = list(failures)
        super().__init__("invalid key parameters: " + "; ".join(self.failures))


class MalformedKey(ParameterError):
    pass


class IterationOutOfRange(ParameterError):
    pass


class NotAResidue(DragonCryptoError, ValueError):
    pass


class MalformedCiphertext(DragonCryptoError, ValueError):
    exit_code = 4


class KeyMismatch(DragonCryptoError):
    """Decryption produced a start point that cannot have come from this key."""

    exit_code = 5


class EncodingError(DragonCryptoError, ValueError):
    exit_code = 6


class CodePointOutOfRange(EncodingError):
    pass


class BlockTooLong(EncodingError):
    pass


class MessageTooLarge(EncodingError):
    pass


class EncodeFailure(EncodingError):
    pass


class InvalidCodePoint(EncodingError):
    pass
