import numpy as np
import pytest

from cogrowth import groups as G
from cogrowth import thompson as TH
from cogrowth.errors import ConfigError
from cogrowth.words import Word, free_reduce

ROSTER = ["f2", "z2", "bs:1:2", "bs:2:3", "thompson", "zwrz", "zwrf2", "zwrzwrz"]


def test_parse_group():
    assert G.parse_group("bs:2:3") == G.GroupId("bs", 2, 3)
    assert G.parse_group("thompson") == G.THOMPSON
    for bad in ("sl2", "bs:2", "bs:x:y"):
        with pytest.raises(ConfigError):
            G.parse_group(bad)
    with pytest.raises(ConfigError):
        G.GroupId("bs", 0, 2)


def test_identity_examples():
    assert G.identity(G.ZXZ) == (0, 0)
    assert G.identity(G.THOMPSON) == (TH.LEAF, TH.LEAF)
    assert G.identity(G.ZWRZ) == ((), 0)


def test_apply_gen_examples():
    bs12 = G.parse_group("bs:1:2")
    assert G.evaluate(bs12, "taT") == G.evaluate(bs12, "aa")
    assert G.evaluate(G.parse_group("bs:2:3"), "taaT") == (3,)
    assert G.evaluate(G.THOMPSON, "aBAbabAABa") == G.identity(G.THOMPSON)
    assert G.apply_gen(G.ZXZ, (2, -1), 2) == (2, 0)


def test_evaluate_examples():
    assert G.evaluate(G.FREE2, "abA") == (0, 2, 1)
    assert G.evaluate(G.ZWRZ, "baB") == (((1, 1),), 0)
    assert G.evaluate(G.parse_group("bs:2:3"), "taaT") == (3,)


def test_canonical_key_examples():
    for name in ROSTER:
        g = G.parse_group(name)
        e = G.identity(g)
        for rel in G.relators(g):
            assert G.canonical_key(g, G.evaluate(g, rel)) == G.canonical_key(g, e)
        a = G.apply_gen(g, e, 0)
        b = G.apply_gen(g, e, 2)
        assert G.canonical_key(g, a) != G.canonical_key(g, b)
    assert G.canonical_key(G.ZXZ, G.evaluate(G.ZXZ, "ab")) == G.canonical_key(G.ZXZ, G.evaluate(G.ZXZ, "ba"))


@pytest.mark.parametrize("name", ROSTER)
def test_trivial_words_evaluate_to_identity(name):
    g = G.parse_group(name)
    e = G.identity(g)
    size = G.alphabet(g).size
    rng = np.random.default_rng(5)
    for _ in range(300):
        w = list(rng.integers(0, size, size=rng.integers(0, 12)))
        full = w + [s ^ 1 for s in reversed(w)]
        assert free_reduce(Word(G.alphabet(g), full)).to_list() == []
        assert G.evaluate(g, Word(G.alphabet(g), full)) == e


@pytest.mark.parametrize("name", ROSTER)
def test_relators_from_random_base_points(name):
    g = G.parse_group(name)
    size = G.alphabet(g).size
    rng = np.random.default_rng(11)
    rels = G.relators(g)
    n_base = 300 if name != "thompson" else 150
    for _ in range(n_base):
        base = G.identity(g)
        for s in rng.integers(0, size, size=rng.integers(0, 10)):
            base = G.apply_gen(g, base, int(s))
        for rel in rels:
            w = Word.from_text(G.alphabet(g), rel).to_list()
            for rot in range(len(w)):
                x = base
                for s in w[rot:] + w[:rot]:
                    x = G.apply_gen(g, x, s)
                assert x == base


@pytest.mark.parametrize("name", ROSTER)
def test_apply_gen_inverse_cancels(name):
    g = G.parse_group(name)
    size = G.alphabet(g).size
    rng = np.random.default_rng(3)
    for _ in range(200):
        x = G.identity(g)
        for s in rng.integers(0, size, size=rng.integers(0, 14)):
            x = G.apply_gen(g, x, int(s))
        for s in range(size):
            assert G.apply_gen(g, G.apply_gen(g, x, s), s ^ 1) == x


@pytest.mark.parametrize("name", ROSTER)
def test_canonicality_under_relator_insertion(name):
    g = G.parse_group(name)
    alpha = G.alphabet(g)
    size = alpha.size
    rels = G.relators(g)
    if not rels:
        return
    rng = np.random.default_rng(17)
    for _ in range(2000):
        u = [int(s) for s in rng.integers(0, size, size=rng.integers(0, 10))]
        rel = Word.from_text(alpha, rels[rng.integers(0, len(rels))]).to_list()
        rot = rng.integers(0, len(rel))
        ins = list(rel[rot:]) + list(rel[:rot])
        cut = rng.integers(0, len(u) + 1)
        v = u[:cut] + ins + u[cut:]
        xu = G.evaluate(g, Word(alpha, u))
        xv = G.evaluate(g, Word(alpha, v))
        assert xu == xv
        assert G.canonical_key(g, xu) == G.canonical_key(g, xv)


def test_invert_roundtrip():
    rng = np.random.default_rng(23)
    for name in ROSTER:
        g = G.parse_group(name)
        size = G.alphabet(g).size
        for _ in range(100):
            syms = [int(s) for s in rng.integers(0, size, size=rng.integers(0, 12))]
            x = G.evaluate(g, Word(G.alphabet(g), syms))
            xi = G.invert(g, x)
            manual = G.evaluate(g, Word(G.alphabet(g), [s ^ 1 for s in reversed(syms)]))
            assert xi == manual


def test_thompson_tree_pair_reduced_and_balanced():
    rng = np.random.default_rng(31)
    g = G.THOMPSON
    for _ in range(500):
        x = G.identity(g)
        for s in rng.integers(0, 4, size=rng.integers(0, 16)):
            x = G.apply_gen(g, x, int(s))
        d, r = x
        assert d.leaves == r.leaves
        assert TH.reduce_pair(d, r) == (d, r)


def test_bs_britton_normal_form_invariants():
    g = G.parse_group("bs:2:3")
    rng = np.random.default_rng(37)
    for _ in range(500):
        x = G.identity(g)
        for s in rng.integers(0, 4, size=rng.integers(0, 20)):
            x = G.apply_gen(g, x, int(s))
        blocks = x[0::2]
        signs = x[1::2]
        for i, e_next in enumerate(signs):
            c = blocks[i]
            if e_next == 1:
                assert 0 <= c < 3
            else:
                assert 0 <= c < 2
            if i > 0 and signs[i - 1] == -e_next:
                assert c != 0  # no pinch survives


def test_bs_exponent_growth_arbitrary_precision():
    g = G.parse_group("bs:1:2")
    x = G.identity(g)
    for _ in range(70):
        x = G.apply_gen(g, x, 2)  # t
    x = G.apply_gen(g, x, 0)  # a
    for _ in range(70):
        x = G.apply_gen(g, x, 3)  # t^-1
    assert x == (2**70,)


def test_wreath_lamp_support_is_sorted_and_nonzero():
    rng = np.random.default_rng(41)
    for name in ("zwrz", "zwrf2", "zwrzwrz"):
        g = G.parse_group(name)
        size = G.alphabet(g).size
        for _ in range(300):
            x = G.identity(g)
            for s in rng.integers(0, size, size=rng.integers(0, 16)):
                x = G.apply_gen(g, x, int(s))
            lamps, _ = x
            assert all(v != 0 for _, v in lamps)
            assert list(lamps) == sorted(lamps)
