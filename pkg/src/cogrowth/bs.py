"""Baumslag-Solitar groups BS(p,q) = <a, t | t a^p t^-1 = a^q>.

Elements are the HNN normal form a^{c0} t^{e1} a^{c1} ... t^{er} a^{cr}
stored as the flat tuple (c0, e1, c1, ..., er, cr).  Every block that is
followed by t (resp. t^-1) is a transversal representative in [0, q)
(resp. [0, p)); the final block is an arbitrary integer.  Pinches
t a^{kp} t^-1 and t^-1 a^{kq} t never occur, so by Britton's lemma the
form is unique.  Exponents are plain Python ints (arbitrary precision:
they grow like q^depth).
"""

from __future__ import annotations

IDENTITY = (0,)

# symbols: 0 = a, 1 = a^-1, 2 = t, 3 = t^-1


def apply_gen(p: int, q: int, el: tuple, s: int) -> tuple:
    if s == 0:
        return el[:-1] + (el[-1] + 1,)
    if s == 1:
        return el[:-1] + (el[-1] - 1,)
    m = el[-1]
    if s == 2:
        if len(el) > 1 and el[-2] == -1 and m % q == 0:
            # pinch: t^-1 a^m t -> a^{(m//q) p}
            return el[:-3] + (el[-3] + (m // q) * p,)
        return el[:-1] + (m % q, 1, (m // q) * p)
    if s == 3:
        if len(el) > 1 and el[-2] == 1 and m % p == 0:
            # pinch: t a^m t^-1 -> a^{(m//p) q}
            return el[:-3] + (el[-3] + (m // p) * q,)
        return el[:-1] + (m % p, -1, (m // p) * q)
    raise IndexError(f"symbol index {s} out of range")


def mul_power_a(el: tuple, m: int) -> tuple:
    return el[:-1] + (el[-1] + m,)


def invert(p: int, q: int, el: tuple) -> tuple:
    """Inverse, renormalized syllable by syllable (O(r) big-int ops)."""
    blocks = el[0::2]
    signs = el[1::2]
    out = (-blocks[-1],)
    for i in range(len(signs) - 1, -1, -1):
        out = apply_gen(p, q, out, 3 if signs[i] == 1 else 2)
        out = mul_power_a(out, -blocks[i])
    return out


def canonical_key(el: tuple) -> bytes:
    return b"B" + repr(el).encode()
