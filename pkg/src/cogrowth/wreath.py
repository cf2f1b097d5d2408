"""Wreath products Z wr B with finitely supported integer lamps.

An element is (lamps, cursor): lamps is a tuple of (position, value)
pairs sorted by position with no zero values, positions are elements of
the base group B, and cursor is in B.  Right multiplication by the lamp
generator increments the lamp at the cursor; base generators move the
cursor.  Three bases cover the roster: the integer line (Z wr Z), the
free group on two letters (Z wr F2), and Z wr Z itself for the nested
product Z wr (Z wr Z).
"""

from __future__ import annotations


class LineBase:
    """Base group Z; elements are ints, generators move +1 / -1."""

    identity = 0
    n_syms = 2

    @staticmethod
    def apply(c, s):
        return c + 1 if s == 0 else c - 1

    @staticmethod
    def invert(c):
        return -c

    @staticmethod
    def mul(c, d):
        return c + d


class Free2Base:
    """Base group F2; elements are freely reduced symbol tuples."""

    identity = ()
    n_syms = 4

    @staticmethod
    def apply(c, s):
        if c and c[-1] == s ^ 1:
            return c[:-1]
        return c + (s,)

    @staticmethod
    def invert(c):
        return tuple(s ^ 1 for s in reversed(c))

    @staticmethod
    def mul(c, d):
        out = list(c)
        for s in d:
            if out and out[-1] == s ^ 1:
                out.pop()
            else:
                out.append(s)
        return tuple(out)


def w_identity(base):
    return ((), base.identity)


def w_apply(base, el, s):
    lamps, c = el
    if s < 2:
        delta = 1 if s == 0 else -1
        return (_lamp_add(lamps, c, delta), c)
    return (lamps, base.apply(c, s - 2))


def _lamp_add(lamps, pos, delta):
    out = []
    placed = False
    for p, v in lamps:
        if p == pos:
            v += delta
            placed = True
            if v == 0:
                continue
        out.append((p, v))
    if not placed:
        out.append((pos, delta))
        out.sort()
    return tuple(out)


def w_mul(base, x, y):
    f, c = x
    g, d = y
    out = dict(f)
    for p, v in g:
        p2 = base.mul(c, p)
        nv = out.get(p2, 0) + v
        if nv:
            out[p2] = nv
        else:
            del out[p2]
    return (tuple(sorted(out.items())), base.mul(c, d))


def w_invert(base, x):
    f, c = x
    ci = base.invert(c)
    out = {}
    for p, v in f:
        out[base.mul(ci, p)] = -v
    return (tuple(sorted(out.items())), ci)


class ZwrzBase:
    """Base group Z wr Z, for the nested product Z wr (Z wr Z)."""

    identity = w_identity(LineBase)
    n_syms = 4

    @staticmethod
    def apply(c, s):
        return w_apply(LineBase, c, s)

    @staticmethod
    def invert(c):
        return w_invert(LineBase, c)

    @staticmethod
    def mul(c, d):
        return w_mul(LineBase, c, d)
