"""Canonical-normal-form arithmetic for the group roster.

Families (CLI names): f2, z2, bs:p:q, thompson, zwrz, zwrf2, zwrzwrz.
Every family exposes the same four operations: identity, apply_gen,
evaluate and canonical_key.  Elements are plain hashable values whose
equality coincides with group-element equality, so they can be used
directly as dictionary keys during graph construction and enumeration.

Note on Z wr (Z wr Z): its abelianization is Z^3, so it cannot be
generated by two elements; like Z wr F2 it uses three generators
(lamp a; base b, c) and alphabet size 6.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bs as _bs
from . import thompson as _th
from . import wreath as _w
from .errors import ConfigError
from .words import Alphabet, Word


@dataclass(frozen=True)
class GroupId:
    family: str
    p: int = 0
    q: int = 0

    def __str__(self):
        if self.family == "bs":
            return f"bs:{self.p}:{self.q}"
        return self.family

    def __post_init__(self):
        if self.family == "bs" and (self.p < 1 or self.q < 1):
            raise ConfigError("BS(p,q) requires p >= 1 and q >= 1")


FREE2 = GroupId("f2")
ZXZ = GroupId("z2")
THOMPSON = GroupId("thompson")
ZWRZ = GroupId("zwrz")
ZWRF2 = GroupId("zwrf2")
ZWRZWRZ = GroupId("zwrzwrz")


def parse_group(text: str) -> GroupId:
    text = text.strip().lower()
    if text in ("f2", "z2", "thompson", "zwrz", "zwrf2", "zwrzwrz"):
        return GroupId(text)
    if text.startswith("bs:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"bad group spec {text!r}; expected bs:p:q")
        try:
            p, q = int(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigError(f"bad group spec {text!r}; expected bs:p:q") from None
        return GroupId("bs", p, q)
    raise ConfigError(f"unknown group {text!r}")


_ALPHABETS = {
    "f2": Alphabet.standard(2),
    "z2": Alphabet.standard(2),
    "bs": Alphabet.standard(2, "at"),
    "thompson": Alphabet.standard(2),
    "zwrz": Alphabet.standard(2),
    "zwrf2": Alphabet.standard(3, "ast"),
    "zwrzwrz": Alphabet.standard(3),
}

_WREATH_BASES = {
    "zwrz": _w.LineBase,
    "zwrf2": _w.Free2Base,
    "zwrzwrz": _w.ZwrzBase,
}

# abelianized generator steps for z2: a = (1,0), b = (0,1)
_Z2_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def alphabet(group: GroupId) -> Alphabet:
    return _ALPHABETS[group.family]


def generator_count(group: GroupId) -> int:
    return alphabet(group).k


def identity(group: GroupId):
    fam = group.family
    if fam == "f2":
        return ()
    if fam == "z2":
        return (0, 0)
    if fam == "bs":
        return _bs.IDENTITY
    if fam == "thompson":
        return _th.IDENTITY
    return _w.w_identity(_WREATH_BASES[fam])


def apply_gen(group: GroupId, x, s: int):
    fam = group.family
    if fam == "f2":
        if x and x[-1] == s ^ 1:
            return x[:-1]
        return x + (s,)
    if fam == "z2":
        dx, dy = _Z2_STEPS[s]
        return (x[0] + dx, x[1] + dy)
    if fam == "bs":
        return _bs.apply_gen(group.p, group.q, x, s)
    if fam == "thompson":
        return _th.apply_gen(x, s)
    return _w.w_apply(_WREATH_BASES[fam], x, s)


def evaluate(group: GroupId, word):
    """Left-to-right product of the word's symbols from the identity."""
    if isinstance(word, str):
        word = Word.from_text(alphabet(group), word)
    x = identity(group)
    for s in word:
        x = apply_gen(group, x, s)
    return x


def invert(group: GroupId, x):
    fam = group.family
    if fam == "f2":
        return tuple(s ^ 1 for s in reversed(x))
    if fam == "z2":
        return (-x[0], -x[1])
    if fam == "bs":
        return _bs.invert(group.p, group.q, x)
    if fam == "thompson":
        return _th.invert(x)
    return _w.w_invert(_WREATH_BASES[fam], x)


def canonical_key(group: GroupId, x) -> bytes:
    fam = group.family
    if fam == "f2":
        return b"F" + bytes(x)
    if fam == "thompson":
        return _th.canonical_key(x)
    # remaining payloads are nested tuples of ints; repr is canonical
    return fam.encode() + b":" + repr(x).encode()


def _inv_text(text: str) -> str:
    return "".join(ch.swapcase() for ch in reversed(text))


def _commutator(u: str, v: str) -> str:
    return u + v + _inv_text(u) + _inv_text(v)


def relators(group: GroupId) -> list[str]:
    """Defining relators as words over the group's symbol names (tests)."""
    fam = group.family
    if fam == "f2":
        return []
    if fam == "z2":
        return [_commutator("a", "b")]
    if fam == "bs":
        return ["t" + "a" * group.p + "T" + "A" * group.q]
    if fam == "thompson":
        # presentation <a, b | [ab^-1, a^-1 b a], [ab^-1, a^-2 b a^2]>
        return [_commutator("aB", "Aba"), _commutator("aB", "AAbaa")]
    if fam == "zwrz":
        # lamps commute with their translates
        return [_commutator("a", "baB"), _commutator("a", "bbaBB")]
    if fam == "zwrf2":
        return [_commutator("a", "saS"), _commutator("a", "taT"), _commutator("a", "staTS")]
    if fam == "zwrzwrz":
        # outer lamps commute with translates; base satisfies the zwrz relator
        return [_commutator("a", "baB"), _commutator("a", "caC"), _commutator("b", "cbC")]
    raise ConfigError(f"unknown family {fam}")


def debug_text(group: GroupId, x) -> str:
    """Unstable, human-oriented rendering of an element."""
    fam = group.family
    if fam == "f2":
        names = alphabet(group).names
        return "".join(names[s] for s in x) or "1"
    return repr(x)
