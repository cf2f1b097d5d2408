"""Exact return and cogrowth series, and the transforms linking them.

Counting is dynamic programming over canonical group elements with exact
integer coefficients.  States are pruned by distance: the first layer an
element appears in equals its word-metric distance (geodesics are freely
reduced, so this holds for both the all-words and the reduced-words DP),
and an element farther than L - n steps from the identity cannot lie on
a trivial word of length L.

The generating-function transforms are the two-generator case

    C(z) = (1 - z^2) / (1 + 3 z^2) * R(z / (1 + 3 z^2))
    R(z) = (-1 + 2 sqrt(1 - 12 z^2)) / (1 - 16 z^2) * C((1 - sqrt(1 - 12 z^2)) / (6 z))

computed with exact rational arithmetic; any non-integer output
coefficient raises, since it can only come from a bug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import groups as G
from .errors import BudgetExceededError, ConfigError

DEFAULT_STATE_BUDGET = 20_000_000


@dataclass
class Series:
    group: G.GroupId | None
    kind: str  # "returns" | "cogrowth"
    coeffs: list[int]

    def __post_init__(self):
        if self.coeffs and self.coeffs[0] != 1:
            raise ConfigError("series must start with coefficient 1")

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def to_csv(self, fh) -> None:
        fh.write("n,coefficient\n")
        for n, c in enumerate(self.coeffs):
            fh.write(f"{n},{c}\n")


def count_returns(group: G.GroupId, max_len: int, max_states: int = DEFAULT_STATE_BUDGET) -> Series:
    """Exact number of words of each length n <= max_len evaluating to 1."""
    e = G.identity(group)
    size = G.alphabet(group).size
    dist = {e: 0}
    counts = {e: 1}
    out = [1]
    trans: dict = {}
    for n in range(1, max_len + 1):
        limit = max_len - n
        nxt: dict = {}
        for x, c in counts.items():
            cached = trans.get(x)
            if cached is None:
                cached = tuple(G.apply_gen(group, x, s) for s in range(size))
                trans[x] = cached
                if len(trans) > max_states:
                    raise BudgetExceededError("state budget exceeded in count_returns")
            for y in cached:
                d = dist.get(y)
                if d is None:
                    d = n
                    dist[y] = n
                if d > limit:
                    continue
                nxt[y] = nxt.get(y, 0) + c
        counts = nxt
        out.append(counts.get(e, 0))
    return Series(group, "returns", out)


def count_cogrowth(group: G.GroupId, max_len: int, max_states: int = DEFAULT_STATE_BUDGET) -> Series:
    """Exact number of freely reduced words of length n evaluating to 1."""
    e = G.identity(group)
    size = G.alphabet(group).size
    dist = {e: 0}
    counts = {(e, -1): 1}
    out = [1]
    trans: dict = {}
    for n in range(1, max_len + 1):
        limit = max_len - n
        nxt: dict = {}
        for (x, last), c in counts.items():
            cached = trans.get(x)
            if cached is None:
                cached = tuple(G.apply_gen(group, x, s) for s in range(size))
                trans[x] = cached
                if len(trans) > max_states:
                    raise BudgetExceededError("state budget exceeded in count_cogrowth")
            for s in range(size):
                if last >= 0 and s == last ^ 1:
                    continue
                y = cached[s]
                d = dist.get(y)
                if d is None:
                    d = n
                    dist[y] = n
                if d > limit:
                    continue
                key = (y, s)
                nxt[key] = nxt.get(key, 0) + c
        counts = nxt
        out.append(sum(c for (x, _), c in counts.items() if x == e))
    return Series(group, "cogrowth", out)


def _require_two_generators(series: Series) -> None:
    if series.group is not None and G.generator_count(series.group) != 2:
        raise ConfigError("the return/cogrowth transforms are specific to two generators")


def _mul_trunc(a, b, L):
    out = [Fraction(0)] * (L + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > L:
            continue
        for j, bj in enumerate(b):
            if i + j > L:
                break
            if bj:
                out[i + j] += ai * bj
    return out


def _compose_trunc(outer, inner, L):
    """outer(inner(z)) truncated; inner must have zero constant term."""
    if inner[0] != 0:
        raise ConfigError("inner series must vanish at 0")
    result = [Fraction(0)] * (L + 1)
    for c in reversed(outer):
        result = _mul_trunc(result, inner, L)
        result[0] += Fraction(c)
    return result


def _sqrt_one_plus(u, L):
    """sqrt(1 + u(z)) truncated, u(0) = 0, exact rationals."""
    s = [Fraction(0)] * (L + 1)
    s[0] = Fraction(1)
    for n in range(1, L + 1):
        acc = Fraction(u[n]) if n < len(u) else Fraction(0)
        for j in range(1, n):
            acc -= s[j] * s[n - j]
        s[n] = acc / 2
    return s


def _to_ints(fracs, kind, group) -> Series:
    out = []
    for c in fracs:
        if c.denominator != 1:
            raise ConfigError(f"non-integer coefficient {c} in transform output")
        out.append(int(c))
    return Series(group, kind, out)


def cogrowth_from_returns(returns: Series) -> Series:
    """C(z) = (1 - z^2)/(1 + 3 z^2) * R(z / (1 + 3 z^2)), exact."""
    _require_two_generators(returns)
    L = len(returns) - 1
    # 1 / (1 + 3 z^2) = sum (-3)^m z^{2m}
    inv = [Fraction(0)] * (L + 1)
    for m in range(0, L // 2 + 1):
        inv[2 * m] = Fraction((-3) ** m)
    u = _mul_trunc([Fraction(0), Fraction(1)], inv, L)  # z / (1 + 3 z^2)
    comp = _compose_trunc([Fraction(c) for c in returns.coeffs], u, L)
    pref = _mul_trunc([Fraction(1), Fraction(0), Fraction(-1)], inv, L)  # (1 - z^2)/(1+3z^2)
    out = _mul_trunc(pref, comp, L)
    return _to_ints(out, "cogrowth", returns.group)


def returns_from_cogrowth(cogrowth: Series) -> Series:
    """R(z) = (-1 + 2 s)/(1 - 16 z^2) * C((1 - s)/(6 z)) with s = sqrt(1 - 12 z^2)."""
    _require_two_generators(cogrowth)
    L = len(cogrowth) - 1
    u = [Fraction(0)] * (L + 2)
    if L + 1 >= 2:
        u[2] = Fraction(-12)
    s = _sqrt_one_plus(u, L + 1)
    # w = (1 - s)/(6 z): w_n = -s_{n+1}/6
    w = [Fraction(0)] * (L + 1)
    for n in range(1, L + 1):
        w[n] = -s[n + 1] / 6
    comp = _compose_trunc([Fraction(c) for c in cogrowth.coeffs], w, L)
    # (-1 + 2 s) / (1 - 16 z^2)
    inv16 = [Fraction(0)] * (L + 1)
    for m in range(0, L // 2 + 1):
        inv16[2 * m] = Fraction(16 ** m)
    num = [Fraction(-1) + 2 * s[0]] + [2 * s[n] for n in range(1, L + 1)]
    pref = _mul_trunc(num, inv16, L)
    out = _mul_trunc(pref, comp, L)
    return _to_ints(out, "returns", cogrowth.group)


SQRT3 = math.sqrt(3.0)


def transfer_rho(alpha: float) -> float:
    """Lower bound on the returns growth rate from a cogrowth bound.

    (alpha^2 + 3)/alpha when alpha >= sqrt(3); below that the square-root
    branch point of the substitution dominates and the bound saturates at
    2 sqrt(3).
    """
    if not 0.0 < alpha <= 3.0:
        raise ConfigError(f"alpha {alpha} outside (0, 3]")
    if alpha < SQRT3:
        return 2.0 * SQRT3
    return (alpha * alpha + 3.0) / alpha
