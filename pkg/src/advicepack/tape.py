"""Advice tape with read accounting, and the integer codecs written on it.

Bit strings are plain ``str`` objects over ``"0"``/``"1"``; fields are
big-endian and concatenated without padding.
"""
from __future__ import annotations

from .errors import ValueTooWide


def bit_width(x: int) -> int:
    """Number of bits of ``x`` in binary, i.e. ceil(log2(x + 1)); 0 for x = 0."""
    if x < 0:
        raise ValueError(f"negative value {x}")
    return x.bit_length()


def ceil_log2(x: int) -> int:
    """ceil(log2(x)) for x >= 1; defined as 0 for x in {0, 1}."""
    return max(x - 1, 0).bit_length()


def self_delimited_length(x: int) -> int:
    """Length in bits of the self-delimited code of ``x``."""
    w = bit_width(x)
    return w + 2 * bit_width(w) + 1


def encode_fixed(x: int, width: int) -> str:
    if x < 0:
        raise ValueError(f"negative value {x}")
    if x >= 1 << width:
        raise ValueTooWide(f"{x} does not fit in {width} bits")
    return format(x, f"0{width}b") if width else ""


def encode_unary(x: int) -> str:
    """``x`` ones terminated by a zero."""
    if x < 0:
        raise ValueError(f"negative value {x}")
    return "1" * x + "0"


def encode_self_delimited(x: int) -> str:
    """Unary length-of-length, then the length, then ``x`` itself."""
    if x < 0:
        raise ValueError(f"negative value {x}")
    if x == 0:
        return "0"
    w = x.bit_length()
    lw = w.bit_length()
    return f"{'1' * lw}0{w:0{lw}b}{x:0{w}b}"


class AdviceTape:
    """Read-only advice tape.

    The tape is conceptually infinite: reading past the written prefix yields
    zeros. ``accessed`` is the number of leading bits the reader has touched,
    which is what an algorithm is charged for.
    """

    def __init__(self, bits: str = ""):
        if set(bits) - {"0", "1"}:
            raise ValueError("tape bits must be '0'/'1'")
        self.bits = bits
        self.cursor = 0
        self.accessed = 0

    def __repr__(self):
        return f"AdviceTape({len(self.bits)} bits, cursor={self.cursor}, accessed={self.accessed})"

    def read_bit(self) -> int:
        pos = self.cursor
        self.cursor += 1
        self.accessed = max(self.accessed, self.cursor)
        return 1 if pos < len(self.bits) and self.bits[pos] == "1" else 0

    def read_fixed(self, width: int) -> int:
        if width == 0:
            return 0
        start = self.cursor
        self.cursor += width
        self.accessed = max(self.accessed, self.cursor)
        return int(self.bits[start:self.cursor].ljust(width, "0"), 2)

    def read_unary(self) -> int:
        start = self.cursor
        stop = self.bits.find("0", start)
        if stop == -1:
            stop = max(start, len(self.bits))  # first zero of the implicit tail
        self.cursor = stop + 1
        self.accessed = max(self.accessed, self.cursor)
        return stop - start

    def read_self_delimited(self) -> int:
        lw = self.read_unary()
        if lw == 0:
            return 0
        w = self.read_fixed(lw)
        return self.read_fixed(w)

    # -- serialization -------------------------------------------------

    def to_hex(self) -> str:
        return tape_to_hex(self.bits)

    @classmethod
    def from_hex(cls, text: str) -> "AdviceTape":
        return cls(tape_from_hex(text))


def decode_fixed(tape: AdviceTape, width: int) -> int:
    return tape.read_fixed(width)


def decode_unary(tape: AdviceTape) -> int:
    return tape.read_unary()


def decode_self_delimited(tape: AdviceTape) -> int:
    return tape.read_self_delimited()


def tape_to_hex(bits: str) -> str:
    """Serialize as ``"<bit length>:<hex>"``; the last nibble is zero-padded."""
    if not bits:
        return "0:"
    padded = bits + "0" * (-len(bits) % 4)
    digits = len(padded) // 4
    return f"{len(bits)}:{int(padded, 2):0{digits}x}"


def tape_from_hex(text: str) -> str:
    length_text, _, hex_text = text.strip().partition(":")
    length = int(length_text)
    if length == 0:
        return ""
    bits = format(int(hex_text, 16), "b").zfill(len(hex_text) * 4)
    if length > len(bits):
        raise ValueError(f"tape declares {length} bits but carries {len(bits)}")
    return bits[:length]
