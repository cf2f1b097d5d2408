"""Generator alphabets and bit-packed words.

An alphabet over k generators has 2k symbols ordered a, a^-1, b, b^-1, ...
(each generator immediately followed by its inverse), so the inverse of
symbol s is always s ^ 1.  Words store their symbols packed at
ceil(log2(2k)) bits per symbol; for the two-generator groups studied here
that is 2 bits per symbol, which keeps words of length 2**20 in 256 KiB.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError

_LOWER = "abcdefghijklmnopqrstuvwxyz"


def inverse_symbol(s: int) -> int:
    """Inverse of an alphabet index; the pairing (2i, 2i+1) makes this s ^ 1."""
    if s < 0:
        raise IndexError(f"symbol index {s} out of range")
    return s ^ 1


@dataclass(frozen=True)
class Alphabet:
    """Symbol labels for the 2k generators-and-inverses, in fixed order."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.names) < 2 or len(self.names) % 2 != 0:
            raise ConfigError("alphabet must list 2k symbols")
        if len(set(self.names)) != len(self.names):
            raise ConfigError("alphabet symbols must be distinct")
        if any(len(n) != 1 for n in self.names):
            raise ConfigError("alphabet symbols must be single characters")

    @classmethod
    def standard(cls, k: int, letters: str | None = None) -> "Alphabet":
        """Alphabet a, A, b, B, ... for k generators (A denotes a^-1)."""
        letters = letters or _LOWER[:k]
        if len(letters) != k:
            raise ConfigError("need one letter per generator")
        names = []
        for ch in letters:
            names.append(ch)
            names.append(ch.upper())
        return cls(tuple(names))

    @property
    def k(self) -> int:
        return len(self.names) // 2

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def bits(self) -> int:
        """Bits per packed symbol."""
        return (self.size - 1).bit_length()

    def inverse(self, s: int) -> int:
        if not 0 <= s < self.size:
            raise IndexError(f"symbol index {s} out of range for 2k={self.size}")
        return s ^ 1

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ConfigError(f"unknown symbol {name!r}") from None


class Word:
    """Mutable sequence of alphabet indices, bit-packed into a bytearray."""

    __slots__ = ("alphabet", "_buf", "_n")

    def __init__(self, alphabet: Alphabet, symbols=()):
        self.alphabet = alphabet
        self._buf = bytearray()
        self._n = 0
        for s in symbols:
            self.append(s)

    def __len__(self) -> int:
        return self._n

    def append(self, s: int) -> None:
        if not 0 <= s < self.alphabet.size:
            raise IndexError(f"symbol index {s} out of range")
        b = self.alphabet.bits
        off = self._n * b
        j = off >> 3
        sh = off & 7
        need = (off + b + 7) >> 3
        if len(self._buf) < need:
            self._buf.extend(b"\0" * (need - len(self._buf)))
        self._buf[j] |= (s << sh) & 0xFF
        if sh + b > 8:
            self._buf[j + 1] |= s >> (8 - sh)
        self._n += 1

    def pop(self) -> int:
        if self._n == 0:
            raise IndexError("pop from empty word")
        s = self[self._n - 1]
        b = self.alphabet.bits
        off = (self._n - 1) * b
        j = off >> 3
        sh = off & 7
        mask = (1 << b) - 1
        self._buf[j] &= ~((mask << sh) & 0xFF) & 0xFF
        if sh + b > 8 and j + 1 < len(self._buf):
            self._buf[j + 1] &= ~(mask >> (8 - sh)) & 0xFF
        self._n -= 1
        need = (self._n * b + 7) >> 3
        del self._buf[need:]
        return s

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self._n
        if not 0 <= i < self._n:
            raise IndexError("word index out of range")
        b = self.alphabet.bits
        off = i * b
        j = off >> 3
        sh = off & 7
        w = self._buf[j]
        if sh + b > 8:
            w |= self._buf[j + 1] << 8
        return (w >> sh) & ((1 << b) - 1)

    def __iter__(self):
        b = self.alphabet.bits
        mask = (1 << b) - 1
        buf = self._buf
        off = 0
        for _ in range(self._n):
            j = off >> 3
            sh = off & 7
            w = buf[j]
            if sh + b > 8:
                w |= buf[j + 1] << 8
            yield (w >> sh) & mask
            off += b

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.alphabet.names == other.alphabet.names
            and self._n == other._n
            and self._buf == other._buf
        )

    def __hash__(self):
        return hash((self.alphabet.names, self._n, bytes(self._buf)))

    def copy(self) -> "Word":
        w = Word(self.alphabet)
        w._buf = bytearray(self._buf)
        w._n = self._n
        return w

    def extend(self, symbols) -> None:
        for s in symbols:
            self.append(s)

    def to_list(self) -> list[int]:
        return list(self)

    def to_text(self) -> str:
        names = self.alphabet.names
        return "".join(names[s] for s in self)

    @classmethod
    def from_text(cls, alphabet: Alphabet, text: str) -> "Word":
        return cls(alphabet, (alphabet.index(ch) for ch in text))

    def to_packed(self) -> bytes:
        """Raw bit-packed payload; pair with len(word) to deserialize."""
        return bytes(self._buf)

    @classmethod
    def from_packed(cls, alphabet: Alphabet, data: bytes, length: int) -> "Word":
        w = cls(alphabet)
        need = (length * alphabet.bits + 7) >> 3
        if len(data) < need:
            raise ValueError("packed payload shorter than declared length")
        w._buf = bytearray(data[:need])
        w._n = length
        for s in w:
            if s >= alphabet.size:
                raise ValueError("packed payload contains out-of-range symbol")
        return w

    def __repr__(self):
        return f"Word({self.to_text()!r})"


def is_freely_reduced(w: Word) -> bool:
    prev = -2
    for s in w:
        if s == prev ^ 1:
            return False
        prev = s
    return True


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain (single stack pass)."""
    out: list[int] = []
    for s in w:
        if out and out[-1] == s ^ 1:
            out.pop()
        else:
            out.append(s)
    return Word(w.alphabet, out)


def grow_random(w: Word, rng) -> Word:
    """Return w extended by one uniformly random symbol; w is not modified."""
    out = w.copy()
    out.append(int(rng.integers(w.alphabet.size)))
    return out
