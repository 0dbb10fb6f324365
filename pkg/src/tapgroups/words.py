"""Reduced words in the free group over the ordered alphabet of naturals.

A word is stored in canonical form as a tuple of ``(letter, power)`` pairs
with nonzero powers and distinct adjacent letters.  Letter ``n`` stands for
the generator usually written with a bar over ``n``; the alphabet is ordered
by the natural order of the integers.

Literal syntax (used by the CLI and trace files)::

    word  := "e" | monom ("." monom)*
    monom := letter ("^" power)?

e.g. ``"0^2.1^-3.0"``.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence, Tuple

Monom = Tuple[int, int]

__all__ = [
    "Word",
    "identity",
    "from_monoms",
    "mul",
    "product",
    "inv",
    "pow",
    "cancellation_core",
    "cyclic_conjugate",
    "support",
    "length",
    "monom_at",
    "is_cancellation_free",
    "parse_word",
    "format_word",
    "WordSyntaxError",
]


class WordSyntaxError(ValueError):
    pass


class Word:
    """An immutable canonically reduced word.

    Use :func:`from_monoms` or :func:`parse_word` to build one from
    unreduced data; the constructor trusts its input.
    """

    __slots__ = ("monoms", "_hash")

    def __init__(self, monoms: Tuple[Monom, ...] = ()):
        self.monoms = monoms
        self._hash = None

    def __len__(self):
        return len(self.monoms)

    def __iter__(self):
        return iter(self.monoms)

    def __bool__(self):
        return bool(self.monoms)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.monoms == other.monoms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.monoms)
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        return mul(self, other)

    def __invert__(self) -> "Word":
        return inv(self)

    def __pow__(self, n: int) -> "Word":
        return pow(self, n)

    def __repr__(self):
        return f"Word({format_word(self)!r})"

    def __str__(self):
        return format_word(self)

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(x for x, _ in self.monoms)


E = Word(())


def identity() -> Word:
    return E


def from_monoms(raw: Iterable[Sequence[int]]) -> Word:
    """Reduce a left-to-right product of monoms to canonical form.

    Zero powers and repeated adjacent letters are allowed in the input.

    >>> str(from_monoms([(0, 2), (1, 3), (1, -3), (0, 1)]))
    '0^3'
    """
    stack: list = []
    for letter, power in raw:
        letter = int(letter)
        power = int(power)
        if letter < 0:
            raise ValueError(f"letters are natural numbers, got {letter}")
        if power == 0:
            continue
        if stack and stack[-1][0] == letter:
            merged = stack[-1][1] + power
            if merged:
                stack[-1] = (letter, merged)
            else:
                stack.pop()
        else:
            stack.append((letter, power))
    return Word(tuple(stack)) if stack else E


def mul(v: Word, w: Word) -> Word:
    """Product ``v*w`` with complete and partial cancellation at the seam."""
    a = v.monoms
    b = w.monoms
    if not a:
        return w
    if not b:
        return v
    i = len(a) - 1
    j = 0
    nb = len(b)
    # complete cancellation: a[i] == b[j]^-1
    while i >= 0 and j < nb and a[i][0] == b[j][0] and a[i][1] == -b[j][1]:
        i -= 1
        j += 1
    if i >= 0 and j < nb and a[i][0] == b[j][0]:
        merged = ((a[i][0], a[i][1] + b[j][1]),)
        out = a[:i] + merged + b[j + 1:]
    else:
        out = a[: i + 1] + b[j:]
    return Word(out) if out else E


def product(words: Iterable[Word]) -> Word:
    out = E
    for w in words:
        out = mul(out, w)
    return out


def inv(w: Word) -> Word:
    if not w.monoms:
        return E
    return Word(tuple((x, -p) for x, p in reversed(w.monoms)))


def cancellation_core(v: Word, w: Word) -> Word:
    """The longest initial subword ``u`` of ``w`` with ``u^-1`` a final subword of ``v``."""
    a = v.monoms
    b = w.monoms
    j = 0
    limit = min(len(a), len(b))
    while j < limit:
        x, p = b[j]
        y, q = a[len(a) - 1 - j]
        if x != y or p != -q:
            break
        j += 1
    return Word(b[:j]) if j else E


def cyclic_conjugate(w: Word) -> Word:
    """``c(w) = d^-1 * w * d`` with ``d = cancellation_core(w, w)``.

    ``w = d * c(w) * d^-1`` and that product is cancellation-free, so the
    conjugate is just the middle slice of ``w``.
    """
    d = len(cancellation_core(w, w))
    if d == 0:
        return w
    mid = w.monoms[d: len(w.monoms) - d]
    return Word(mid) if mid else E


def pow(w: Word, n: int) -> Word:
    """``w**n`` for any integer ``n``.

    Uses ``w = d c d^-1`` where ``c`` is the cyclic conjugate.  Copies of
    ``c`` never cancel against each other; at most the outer monoms of
    neighbouring copies merge, so the result is assembled by slicing.
    """
    n = int(n)
    if n == 0 or not w.monoms:
        return E
    if n < 0:
        return inv(pow(w, -n))
    if n == 1:
        return w
    d = len(cancellation_core(w, w))
    monoms = w.monoms
    head = monoms[:d]
    core = monoms[d: len(monoms) - d]
    tail = monoms[len(monoms) - d:] if d else ()
    if len(core) == 1:
        x, p = core[0]
        middle = ((x, p * n),)
    elif core[0][0] == core[-1][0]:
        # core = A M B with A, B in the same letter: A M (BA) M ... (BA) M B
        x = core[0][0]
        inner = core[1:-1]
        seam = ((x, core[-1][1] + core[0][1]),)
        middle = core[:1] + (inner + seam) * (n - 1) + inner + core[-1:]
    else:
        middle = core * n
    return Word(head + middle + tail)


def support(w: Word) -> Tuple[int, ...]:
    return w.letters


def length(w: Word) -> int:
    return len(w.monoms)


def monom_at(w: Word, i: int) -> Monom:
    """The ``i``-th monom, 1-based."""
    if not 1 <= i <= len(w.monoms):
        raise IndexError(f"monom index {i} out of range 1..{len(w.monoms)}")
    return w.monoms[i - 1]


def is_cancellation_free(*words: Word) -> bool:
    """True when no two consecutive nonempty factors meet in the same letter."""
    last = None
    for w in words:
        if not w.monoms:
            continue
        if last is not None and last == w.monoms[0][0]:
            return False
        last = w.monoms[-1][0]
    return True


_MONOM_RE = re.compile(r"^(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> Word:
    """Parse a word literal; adjacent duplicate letters are re-reduced."""
    s = text.strip()
    if s == "e":
        return E
    if not s:
        raise WordSyntaxError("empty word literal (use 'e' for the identity)")
    raw = []
    for part in s.split("."):
        m = _MONOM_RE.match(part)
        if m is None:
            raise WordSyntaxError(f"bad monom {part!r} in {text!r}")
        power = int(m.group(2)) if m.group(2) is not None else 1
        if power == 0:
            raise WordSyntaxError(f"zero power in monom {part!r}")
        raw.append((int(m.group(1)), power))
    return from_monoms(raw)


def format_word(w: Word) -> str:
    if not w.monoms:
        return "e"
    return ".".join(str(x) if p == 1 else f"{x}^{p}" for x, p in w.monoms)
