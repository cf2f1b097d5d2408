"""Truncated Cayley graphs: the vertex ladder G_N and reduced-path graph H_N.

Both graphs are grown by a deterministic breadth-first search from the
identity, expanding neighbors in fixed alphabet order, so a given group
and N always produce the same graph.  Vertices are remembered by their
BFS discovery word (parent pointer plus one symbol); canonical keys are
only held in a side table while the graph is under construction.

Kind G: vertices are group elements, edges x -> x*s for every symbol s
with both endpoints retained.  Kind H: vertices are states (g, s) of the
reduced-path automaton; edges ((g,s),(h,t)) iff h = g*t and s*t != 1, so
walks from the root are exactly the freely reduced words whose prefixes
stay inside the retained state set.
"""

from __future__ import annotations

import io
import json
import struct
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from . import groups as G
from .errors import BudgetExceededError, ConfigError
from .words import Word

DEFAULT_VERTEX_BUDGET = 10_000_000

_MAGIC = b"CGRF"
_FORMAT_VERSION = 1


@dataclass
class TruncatedGraph:
    kind: str
    group: G.GroupId
    n: int
    indptr: np.ndarray
    indices: np.ndarray
    parent: np.ndarray = field(repr=False)
    parent_symbol: np.ndarray = field(repr=False)
    depth: np.ndarray = field(repr=False)
    root_return_vertices: np.ndarray = field(repr=False)
    checkpoints: list[int] | None = None

    def out_degree(self, i: int) -> int:
        return int(self.indptr[i + 1] - self.indptr[i])

    def vertex_word(self, i: int) -> Word:
        """BFS discovery word of vertex i (bit-packed)."""
        syms = []
        while i != 0:
            syms.append(int(self.parent_symbol[i]))
            i = int(self.parent[i])
        return Word(G.alphabet(self.group), reversed(syms))

    def last_symbol(self, i: int) -> int | None:
        """H-graph state tag: final symbol of the witness word (None at root)."""
        if i == 0:
            return None
        return int(self.parent_symbol[i])

    def csr(self, n: int | None = None) -> sparse.csr_matrix:
        """Adjacency of the leading n-vertex prefix subgraph."""
        full = sparse.csr_matrix(
            (np.ones(len(self.indices), dtype=np.float64), self.indices, self.indptr),
            shape=(self.n, self.n),
        )
        if n is None or n >= self.n:
            return full
        return full[:n, :n]

    def save(self, path) -> None:
        """Checkpoint: header, bit-packed witness words, delta-coded adjacency."""
        header = {
            "format": _FORMAT_VERSION,
            "group": str(self.group),
            "kind": self.kind,
            "n": self.n,
        }
        hdr = json.dumps(header).encode()
        alpha = G.alphabet(self.group)
        bits = alpha.bits
        buf = io.BytesIO()
        buf.write(_MAGIC)
        buf.write(struct.pack("<I", len(hdr)))
        buf.write(hdr)
        # witness words: depth per vertex (varint) then packed symbol bits
        payload = bytearray()
        for i in range(self.n):
            _write_varint(payload, int(self.depth[i]))
        bitbuf = bytearray()
        bitpos = 0
        for i in range(self.n):
            for s in self.vertex_word(i):
                _write_bits(bitbuf, bitpos, s, bits)
                bitpos += bits
        _write_varint(payload, len(bitbuf))
        payload.extend(bitbuf)
        # adjacency: per-vertex degree then ascending deltas
        for i in range(self.n):
            row = self.indices[self.indptr[i]:self.indptr[i + 1]]
            _write_varint(payload, len(row))
            prev = 0
            for v in row:
                _write_varint(payload, int(v) - prev)
                prev = int(v)
        buf.write(payload)
        with open(path, "wb") as fh:
            fh.write(buf.getvalue())

    @classmethod
    def load(cls, path) -> "TruncatedGraph":
        with open(path, "rb") as fh:
            data = fh.read()
        if data[:4] != _MAGIC:
            raise ConfigError("not a graph checkpoint file")
        (hlen,) = struct.unpack("<I", data[4:8])
        header = json.loads(data[8:8 + hlen])
        if header["format"] != _FORMAT_VERSION:
            raise ConfigError(f"unsupported checkpoint version {header['format']}")
        group = G.parse_group(header["group"])
        kind = header["kind"]
        n = header["n"]
        alpha = G.alphabet(group)
        bits = alpha.bits
        pos = 8 + hlen
        depth = np.zeros(n, dtype=np.int32)
        for i in range(n):
            depth[i], pos = _read_varint(data, pos)
        nbits, pos = _read_varint(data, pos)
        bitdata = data[pos:pos + nbits]
        pos += nbits
        # rebuild parent/symbol arrays by replaying the packed words
        parent = np.zeros(n, dtype=np.int64)
        parent_symbol = np.zeros(n, dtype=np.uint8)
        index: dict[tuple, int] = {}
        bitpos = 0
        for i in range(n):
            syms = []
            for _ in range(int(depth[i])):
                syms.append(_read_bits(bitdata, bitpos, bits))
                bitpos += bits
            key = tuple(syms)
            index[key] = i
            if i > 0:
                parent[i] = index[key[:-1]]
                parent_symbol[i] = key[-1]
        indptr = np.zeros(n + 1, dtype=np.int64)
        rows = []
        for i in range(n):
            deg, pos = _read_varint(data, pos)
            prev = 0
            for _ in range(deg):
                d, pos = _read_varint(data, pos)
                prev += d
                rows.append(prev)
            indptr[i + 1] = len(rows)
        indices = np.array(rows, dtype=np.int32)
        graph = cls(kind, group, n, indptr, indices, parent, parent_symbol, depth,
                    root_return_vertices=np.array([], dtype=np.int64))
        graph.root_return_vertices = _find_root_returns(graph)
        return graph


def _write_varint(out: bytearray, v: int) -> None:
    while True:
        b = v & 0x7F
        v >>= 7
        if v:
            out.append(b | 0x80)
        else:
            out.append(b)
            return


def _read_varint(data: bytes, pos: int) -> tuple[int, int]:
    shift = 0
    out = 0
    while True:
        b = data[pos]
        pos += 1
        out |= (b & 0x7F) << shift
        if not b & 0x80:
            return out, pos
        shift += 7


def _write_bits(buf: bytearray, bitpos: int, value: int, nbits: int) -> None:
    j = bitpos >> 3
    sh = bitpos & 7
    need = (bitpos + nbits + 7) >> 3
    while len(buf) < need:
        buf.append(0)
    buf[j] |= (value << sh) & 0xFF
    if sh + nbits > 8:
        buf[j + 1] |= value >> (8 - sh)


def _read_bits(data: bytes, bitpos: int, nbits: int) -> int:
    j = bitpos >> 3
    sh = bitpos & 7
    w = data[j]
    if sh + nbits > 8:
        w |= data[j + 1] << 8
    return (w >> sh) & ((1 << nbits) - 1)


def _find_root_returns(graph: TruncatedGraph) -> np.ndarray:
    """H-graph vertices whose element is the identity (excluding the root)."""
    if graph.kind != "H":
        return np.array([0], dtype=np.int64)
    grp = graph.group
    e = G.identity(grp)
    out = []
    for i in range(1, graph.n):
        x = G.evaluate(grp, graph.vertex_word(i))
        if x == e:
            out.append(i)
    return np.array(out, dtype=np.int64)


def _build(group: G.GroupId, n_target: int, kind: str, max_vertices: int) -> TruncatedGraph:
    if n_target < 1:
        raise ConfigError("graph needs at least one vertex")
    if n_target > max_vertices:
        raise BudgetExceededError(
            f"requested {n_target} vertices exceeds budget {max_vertices}"
        )
    alpha = G.alphabet(group)
    size = alpha.size
    e = G.identity(group)

    elements = [e]
    lasts = [-1]
    parent = [0]
    parent_symbol = [0]
    depth = [0]
    index: dict = {(e, -1) if kind == "H" else e: 0}
    root_returns: list[int] = []

    indptr = [0]
    indices_arr = np.empty(4096, dtype=np.int32)
    n_edges = 0

    u = 0
    while u < len(elements):
        el = elements[u]
        last = lasts[u]
        for s in range(size):
            if kind == "H" and last >= 0 and s == last ^ 1:
                continue
            v_el = G.apply_gen(group, el, s)
            key = (v_el, s) if kind == "H" else v_el
            idx = index.get(key)
            if idx is None and len(elements) < n_target:
                idx = len(elements)
                index[key] = idx
                elements.append(v_el)
                lasts.append(s)
                parent.append(u)
                parent_symbol.append(s)
                depth.append(depth[u] + 1)
                if kind == "H" and v_el == e:
                    root_returns.append(idx)
            if idx is not None:
                if n_edges == len(indices_arr):
                    indices_arr = np.resize(indices_arr, 2 * len(indices_arr))
                indices_arr[n_edges] = idx
                n_edges += 1
        indptr.append(n_edges)
        u += 1

    n = len(elements)
    graph = TruncatedGraph(
        kind=kind,
        group=group,
        n=n,
        indptr=np.array(indptr, dtype=np.int64),
        indices=indices_arr[:n_edges].copy(),
        parent=np.array(parent, dtype=np.int64),
        parent_symbol=np.array(parent_symbol, dtype=np.uint8),
        depth=np.array(depth, dtype=np.int32),
        root_return_vertices=np.array(root_returns if kind == "H" else [0], dtype=np.int64),
    )
    return graph


def build_G(group: G.GroupId, n: int, max_vertices: int = DEFAULT_VERTEX_BUDGET) -> TruncatedGraph:
    """First n BFS vertices of the Cayley graph with all induced edges."""
    return _build(group, n, "G", max_vertices)


def build_H(group: G.GroupId, n: int, max_vertices: int = DEFAULT_VERTEX_BUDGET) -> TruncatedGraph:
    """First n BFS states of the reduced-path graph with induced edges."""
    return _build(group, n, "H", max_vertices)


def classify_period(group: G.GroupId) -> int:
    """Adjacency period of the truncated graphs: 1 iff an odd relator exists."""
    if group.family == "bs":
        return 1 if (group.p + group.q) % 2 == 1 else 2
    # all relators of the remaining roster groups have even length
    return 2


def count_walks_to(graph: TruncatedGraph, targets, max_len: int) -> list[int]:
    """Exact counts of walks root -> targets by length (big integers)."""
    n = graph.n
    counts = [0] * n
    counts[0] = 1
    targets = list(targets)
    out = [sum(counts[t] for t in targets)]
    indptr, indices = graph.indptr, graph.indices
    for _ in range(max_len):
        nxt = [0] * n
        for u in range(n):
            c = counts[u]
            if c:
                for v in indices[indptr[u]:indptr[u + 1]]:
                    nxt[v] += c
        counts = nxt
        out.append(sum(counts[t] for t in targets))
    return out
