"""Dragon-curve toy cipher: Koblitz curve points displaced along a Heighway dragon."""
from .cipher import decrypt, decrypt_text, encrypt, encrypt_text, generate_key
from .codec import Ciphertext, PrivateKey, parse, read_key, render, write_key
from .errors import (
    DragonCryptoError,
    InvalidCodePoint,
    InvalidKeyParameters,
    KeyMismatch,
    MalformedCiphertext,
    MalformedKey,
    ParameterError,
)

__all__ = [
    "Ciphertext",
    "DragonCryptoError",
    "InvalidCodePoint",
    "InvalidKeyParameters",
    "KeyMismatch",
    "MalformedCiphertext",
    "MalformedKey",
    "ParameterError",
    "PrivateKey",
    "decrypt",
    "decrypt_text",
    "encrypt",
    "encrypt_text",
    "generate_key",
    "parse",
    "read_key",
    "render",
    "write_key",
]
