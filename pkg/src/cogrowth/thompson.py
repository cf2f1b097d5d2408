"""Thompson's group F as reduced tree-pair diagrams.

Elements are pairs (domain tree, range tree) of binary trees with equal
leaf counts and no common cancelling caret.  Trees are hash-consed, so
equal subtrees are the same object and element equality is pointer
equality on the pair.  The generators are a = x0 and b = x1 with
x1 = 1 (+) x0, which satisfies the two standard commutator relators.
"""

from __future__ import annotations


class Tree:
    """Interned binary tree; use `node` / `LEAF`, never the constructor."""

    __slots__ = ("left", "right", "leaves", "key_bits", "key_len")

    def __init__(self, left, right, leaves, key_bits, key_len):
        self.left = left
        self.right = right
        self.leaves = leaves
        self.key_bits = key_bits
        self.key_len = key_len

    def is_leaf(self) -> bool:
        return self.left is None

    def __repr__(self):
        if self.is_leaf():
            return "*"
        return f"({self.left!r}^{self.right!r})"


LEAF = Tree(None, None, 1, 0, 1)

_INTERN: dict[tuple[int, int], Tree] = {}


def node(left: Tree, right: Tree) -> Tree:
    """Caret joining two interned trees; result is interned."""
    key = (id(left), id(right))
    t = _INTERN.get(key)
    if t is None:
        # preorder bits: 1 for caret then both subtrees, 0 for leaf
        bits = (1 << (left.key_len + right.key_len)) | (left.key_bits << right.key_len) | right.key_bits
        t = Tree(left, right, left.leaves + right.leaves, bits, left.key_len + right.key_len + 1)
        _INTERN[key] = t
    return t


def tree_key(t: Tree) -> bytes:
    nbytes = (t.key_len + 7) // 8
    return t.key_len.to_bytes(4, "big") + t.key_bits.to_bytes(nbytes, "big")


def _refine(a: Tree, b: Tree) -> Tree:
    """Smallest tree containing both subdivision patterns."""
    if a.is_leaf():
        return b
    if b.is_leaf():
        return a
    return node(_refine(a.left, b.left), _refine(a.right, b.right))


def _leaf_map(t: Tree, e: Tree, out: list[Tree]) -> None:
    """For each leaf of t (left to right) append the matching subtree of e."""
    if t.is_leaf():
        out.append(e)
    else:
        _leaf_map(t.left, e.left, out)
        _leaf_map(t.right, e.right, out)


def _substitute(t: Tree, subs: list[Tree], pos: int) -> tuple[Tree, int]:
    """Replace the leaves of t, in order, by the given subtrees."""
    if t.is_leaf():
        return subs[pos], pos + 1
    left, pos = _substitute(t.left, subs, pos)
    right, pos = _substitute(t.right, subs, pos)
    return node(left, right), pos


def _sibling_pairs(t: Tree, offset: int, out: set[int]) -> None:
    """Leaf indices i such that leaves i, i+1 hang off one caret."""
    if t.is_leaf():
        return
    if t.left.is_leaf() and t.right.is_leaf():
        out.add(offset)
        return
    _sibling_pairs(t.left, offset, out)
    _sibling_pairs(t.right, offset + t.left.leaves, out)


def _drop_carets(t: Tree, targets: set[int], offset: int) -> Tree:
    if t.is_leaf():
        return t
    if t.left.is_leaf() and t.right.is_leaf() and offset in targets:
        return LEAF
    left = _drop_carets(t.left, targets, offset)
    right = _drop_carets(t.right, targets, offset + t.left.leaves)
    if left is t.left and right is t.right:
        return t
    return node(left, right)


def reduce_pair(d: Tree, r: Tree) -> tuple[Tree, Tree]:
    """Remove common cancelling carets until the pair is reduced."""
    while True:
        sd: set[int] = set()
        sr: set[int] = set()
        _sibling_pairs(d, 0, sd)
        _sibling_pairs(r, 0, sr)
        common = sd & sr
        if not common:
            return d, r
        d = _drop_carets(d, common, 0)
        r = _drop_carets(r, common, 0)


def multiply(g: tuple[Tree, Tree], h: tuple[Tree, Tree]) -> tuple[Tree, Tree]:
    """Compose g then h (left-to-right), returning the reduced pair."""
    dg, rg = g
    dh, rh = h
    e = _refine(rg, dh)
    if e is rg and e is dh:
        return reduce_pair(dg, rh)
    subs: list[Tree] = []
    _leaf_map(rg, e, subs)
    d2, _ = _substitute(dg, subs, 0)
    subs2: list[Tree] = []
    _leaf_map(dh, e, subs2)
    r2, _ = _substitute(rh, subs2, 0)
    return reduce_pair(d2, r2)


def invert(g: tuple[Tree, Tree]) -> tuple[Tree, Tree]:
    return (g[1], g[0])


IDENTITY = (LEAF, LEAF)

# Generators a, b with b = 1 (+) a; this pairing satisfies the relators
# [ab^-1, a^-1 b a] and [ab^-1, a^-2 b a^2] under left-to-right composition.
_CARET = node(LEAF, LEAF)
_A_D = node(_CARET, LEAF)
_A_R = node(LEAF, _CARET)
GEN_PAIRS = (
    (_A_D, _A_R),                      # a
    (_A_R, _A_D),                      # a^-1
    (node(LEAF, _A_D), node(LEAF, _A_R)),  # b
    (node(LEAF, _A_R), node(LEAF, _A_D)),  # b^-1
)


def apply_gen(x: tuple[Tree, Tree], s: int) -> tuple[Tree, Tree]:
    return multiply(x, GEN_PAIRS[s])


def canonical_key(x: tuple[Tree, Tree]) -> bytes:
    return b"T" + tree_key(x[0]) + tree_key(x[1])


def spine_split(t: Tree) -> list[Tree]:
    """Subtrees hanging left off the right spine, top to bottom."""
    out = []
    while not t.is_leaf():
        out.append(t.left)
        t = t.right
    return out


def spine_join(forest: list[Tree]) -> Tree:
    t = LEAF
    for sub in reversed(forest):
        t = node(sub, t)
    return t


def pair_to_forests(x: tuple[Tree, Tree]) -> tuple[list[Tree], list[Tree]]:
    """(bottom, top) forest lists of the diagram; inverse of forests_to_pair."""
    return spine_split(x[0]), spine_split(x[1])


def forests_to_pair(bottom: list[Tree], top: list[Tree]) -> tuple[Tree, Tree]:
    return reduce_pair(spine_join(bottom), spine_join(top))


def count_carets(t: Tree) -> int:
    return t.key_len // 2  # key_len = 2*carets + 1 for leaves+carets preorder
