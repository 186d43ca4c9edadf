"""Words over the digit alphabet {1, 2, 4, 7} and their signed multiplication.

A word of length n is a string of digits from {1, 2, 4, 7}, read left to
right.  The digits carry quaternionic meaning through the letter aliases

    1 <-> i,   2 <-> j,   4 <-> k,   7 <-> e,

and two words of equal length multiply digit by digit: each position
contributes a local quaternionic product (a sign and a result digit), the
result digits form the product word and the local signs multiply into one
global sign.  The local rule itself is Boolean.  Each digit d is encoded by
the two-bit code d >> 1 (the top two bits of its octal value):

    1 -> 00,   2 -> 01,   4 -> 10,   7 -> 11.

For codes x = (a, b) and y = (c, d), the product's unsigned code is the
bitwise XNOR (a XNOR c, b XNOR d), and its sign is (-1)**(m + 1) with

    m = (b AND c) + ((a XNOR b) AND d) + (a AND (c XNOR d)).

The 16-entry table generated by this rule is exactly the quaternion table
with the convention ij = k, jk = i, ki = j and i**2 = j**2 = k**2 = -e,
e acting as identity; tests pin all 16 entries.

Signs are always carried as the integers +1 / -1, never as booleans.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, NamedTuple

DIGITS = "1247"

#: Largest word length accepted anywhere in the package.  The packed kernel
#: stores one 2-bit lane per digit, so 32 digits fill a 64-bit lane field.
MAX_ORDER = 32

_LETTER_TO_DIGIT = {"i": "1", "j": "2", "k": "4", "e": "7"}
_DIGIT_TO_LETTER = {d: c for c, d in _LETTER_TO_DIGIT.items()}

#: Two-bit code of each digit (the digit's octal value shifted right by one).
DIGIT_CODE = {"1": 0, "2": 1, "4": 2, "7": 3}
CODE_DIGIT = {c: d for d, c in DIGIT_CODE.items()}


class SignedWord(NamedTuple):
    """A word together with a sign in {+1, -1}."""

    sign: int
    word: str


def _local_rule(cx: int, cy: int) -> tuple[int, int]:
    """XNOR/AND product of two 2-bit digit codes: (sign, result code)."""
    a, b = cx >> 1, cx & 1
    c, d = cy >> 1, cy & 1
    unsigned = ((1 ^ a ^ c) << 1) | (1 ^ b ^ d)
    m = (b & c) + ((1 ^ a ^ b) & d) + (a & (1 ^ c ^ d))
    return (1 if m & 1 else -1), unsigned


#: (x, y) -> (sign, digit) for all 16 digit pairs, generated from the
#: Boolean rule above.
LOCAL_TABLE: dict[tuple[str, str], tuple[int, str]] = {
    (CODE_DIGIT[cx], CODE_DIGIT[cy]): (s, CODE_DIGIT[cz])
    for cx in range(4)
    for cy in range(4)
    for s, cz in [_local_rule(cx, cy)]
}


def local_mul(x: str, y: str) -> tuple[int, str]:
    """Product of two digits: (sign, digit).  Total on {1, 2, 4, 7}."""
    try:
        return LOCAL_TABLE[(x, y)]
    except KeyError:
        raise ValueError(f"not a digit pair: {x!r}, {y!r}") from None


def parse_word(text: str, order: int | None = None) -> str:
    """Normalize word text to canonical digit form.

    Accepts the digit spelling ("124"), the letter spelling ("ijk"), or any
    per-character mix.  Rejects empty words, words longer than MAX_ORDER,
    and, when `order` is given, words of any other length.
    """
    out = []
    for ch in text:
        if ch in DIGIT_CODE:
            out.append(ch)
        elif ch in _LETTER_TO_DIGIT:
            out.append(_LETTER_TO_DIGIT[ch])
        else:
            raise ValueError(f"invalid word character {ch!r} in {text!r}")
    if not out:
        raise ValueError("empty word")
    if len(out) > MAX_ORDER:
        raise ValueError(f"word length {len(out)} exceeds maximum order {MAX_ORDER}")
    word = "".join(out)
    if order is not None and len(word) != order:
        raise ValueError(f"expected a word of length {order}, got {text!r}")
    return word


def parse_signed_word(text: str, order: int | None = None) -> SignedWord:
    """Parse word text with an optional leading sign ("-kjj", "+12", "42")."""
    sign = 1
    body = text
    if body[:1] == "-":
        sign, body = -1, body[1:]
    elif body[:1] == "+":
        body = body[1:]
    return SignedWord(sign, parse_word(body, order))


def format_word(word: str, letters: bool = False) -> str:
    """Render a canonical word, in letters (ijke) on request."""
    if letters:
        return "".join(_DIGIT_TO_LETTER[d] for d in word)
    return word


def format_signed_word(sw: SignedWord, letters: bool = False) -> str:
    body = format_word(sw.word, letters)
    return "-" + body if sw.sign < 0 else body


def identity_word(n: int) -> str:
    """The all-7 word of length n, the multiplicative identity."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
    return "7" * n


def noncentral_count(word: str) -> int:
    """Number of digits in {1, 2, 4}, i.e. positions not equal to 7."""
    return len(word) - word.count("7")


def all_words(n: int) -> Iterator[str]:
    """All 4**n words of length n in canonical (ascending packed) order.

    Position 1 varies fastest, so the sequence starts 11..1, 21..1, 41..1.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
    for tup in product(DIGITS, repeat=n):
        yield "".join(tup[::-1])


def word_mul(a: str, b: str) -> SignedWord:
    """Digitwise product of two equal-length words with collected sign."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    sign = 1
    out = []
    table = LOCAL_TABLE
    try:
        for pair in zip(a, b):
            s, d = table[pair]
            sign *= s
            out.append(d)
    except KeyError:
        raise ValueError(f"invalid digit in {a!r} or {b!r}") from None
    return SignedWord(sign, "".join(out))


def signed_word_mul(u: SignedWord, v: SignedWord) -> SignedWord:
    s, w = word_mul(u.word, v.word)
    return SignedWord(u.sign * v.sign * s, w)


def signed_word_inverse(u: SignedWord) -> SignedWord:
    """Inverse in the signed group.

    Every word squares to +/- the identity word (digit 7 squares to +e,
    the other three digits to -e), so the inverse of +/-b is +/-b up to
    that square's sign.
    """
    square_sign = -1 if noncentral_count(u.word) % 2 else 1
    return SignedWord(u.sign * square_sign, u.word)
