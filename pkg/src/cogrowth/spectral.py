"""Dominant eigenvalues of truncated-graph adjacency matrices.

Power iteration with Rayleigh-quotient estimates, squaring the matrix for
period-2 graphs so the iteration converges.  Every result also carries a
certified lower bound obtained from the Collatz-Wielandt minimum ratio
min_i (Av)_i / v_i evaluated on a strongly connected piece of the graph:
for any nonnegative v, Av >= m v implies the spectral radius is at least
m, and every closed walk in an H-graph spells a freely reduced trivial
word, so the bound is a true cogrowth lower bound regardless of how the
iteration was stopped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from . import cayley
from . import groups as G
from .errors import ConfigError

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000


@dataclass
class EigenResult:
    value: float
    iterations: int
    residual: float
    vector: np.ndarray
    certified: float
    converged: bool


@dataclass
class Ladder:
    rows: list  # (n, EigenResult)

    def values(self) -> list[float]:
        return [r.value for _, r in self.rows]

    def certified(self) -> list[float]:
        return [r.certified for _, r in self.rows]

    def to_csv(self, fh) -> None:
        fh.write("N,inv_log_N,alpha_N_certified,alpha_N_rayleigh,residual,iterations\n")
        for n, r in self.rows:
            fh.write(
                f"{n},{1.0 / math.log(n) if n > 1 else ''},{r.certified!r},"
                f"{r.value!r},{r.residual!r},{r.iterations}\n"
            )


def _dot(a: np.ndarray, b: np.ndarray) -> float:
    """Compensated dot product: chunked pairwise sums combined with fsum."""
    n = len(a)
    if n <= 4096:
        return float(np.dot(a, b))
    prods = a * b
    chunks = [float(np.sum(prods[i:i + 4096])) for i in range(0, n, 4096)]
    return math.fsum(chunks)


def _as_csr(graph_or_matrix) -> sparse.csr_matrix:
    if isinstance(graph_or_matrix, cayley.TruncatedGraph):
        return graph_or_matrix.csr()
    return sparse.csr_matrix(graph_or_matrix, dtype=np.float64)


def _power_iterate(mat, period, v, tol, max_iter):
    """Iterate A (or A^2) to convergence; returns (lam_B, v, iters, residual)."""
    n = mat.shape[0]
    iters = 0
    lam_b = 0.0
    residual = math.inf
    check_every = 8
    while iters < max_iter:
        for _ in range(check_every):
            w = mat.dot(v)
            if period == 2:
                w = mat.dot(w)
            iters += 1
            nrm = float(np.max(w))
            if nrm == 0.0:
                return 0.0, w, iters, 0.0
            v = w / nrm
        bv = mat.dot(v)
        if period == 2:
            bv = mat.dot(bv)
        lam_b = _dot(v, bv) / _dot(v, v)
        residual = float(np.max(np.abs(bv - lam_b * v))) / float(np.max(v))
        if residual <= tol * max(1.0, lam_b):
            return lam_b, v, iters, residual
        v = bv / float(np.max(bv))
        iters += 1
    return lam_b, v, iters, residual


def _strong_components(mat) -> tuple[int, np.ndarray]:
    return csgraph.connected_components(mat, directed=True, connection="strong")


def _certified_bound(mat, period, targets, tol, max_iter=2000) -> float:
    """Collatz-Wielandt lower bound on a strongly connected component.

    targets: vertex indices whose components certify cogrowth (identity
    return states for H-graphs; vertex 0 for G-graphs).
    """
    n = mat.shape[0]
    if n == 0 or mat.nnz == 0 or len(targets) == 0:
        return 0.0
    ncomp, labels = _strong_components(mat)
    best = 0.0
    seen = set()
    for t in targets:
        lab = labels[t]
        if lab in seen:
            continue
        seen.add(lab)
        idx = np.flatnonzero(labels == lab)
        if len(idx) == 1:
            # a single vertex certifies only via a self-loop
            if mat[idx[0], idx[0]] != 0:
                best = max(best, float(mat[idx[0], idx[0]]))
            continue
        sub = mat[idx][:, idx].tocsr()
        v = np.ones(len(idx))
        cw = 0.0
        for it in range(max_iter):
            w = sub.dot(v)
            if period == 2:
                w = sub.dot(w)
            mask = v > 0
            if not np.any(mask) or float(np.max(w)) == 0.0:
                cw = 0.0
                break
            ratios = w[mask] / v[mask]
            new_cw = float(np.min(ratios))
            v = w / float(np.max(w))
            if new_cw > 0 and it > 8 and abs(new_cw - cw) <= tol * max(1.0, new_cw):
                cw = new_cw
                break
            cw = max(cw, new_cw)
        if period == 2:
            cw = math.sqrt(max(cw, 0.0))
        best = max(best, cw)
    return best


def dominant_eigenvalue(
    graph_or_matrix,
    period: int,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    v0: np.ndarray | None = None,
    targets=None,
) -> EigenResult:
    """Power iteration estimate plus certified Collatz-Wielandt lower bound."""
    if tol <= 0:
        raise ConfigError("tolerance must be positive")
    if period not in (1, 2):
        raise ConfigError("period must be 1 or 2")
    mat = _as_csr(graph_or_matrix)
    if targets is None:
        if isinstance(graph_or_matrix, cayley.TruncatedGraph):
            targets = graph_or_matrix.root_return_vertices
        else:
            targets = np.arange(mat.shape[0])
    n = mat.shape[0]
    if n == 0 or mat.nnz == 0:
        return EigenResult(0.0, 0, 0.0, np.zeros(n), 0.0, True)
    if v0 is not None and len(v0) == n and np.max(v0) > 0:
        v = np.asarray(v0, dtype=np.float64)
        v = v / np.max(v)
    else:
        v = np.ones(n)
    lam_b, v, iters, residual = _power_iterate(mat, period, v, tol, max_iter)
    if lam_b <= 0.0:
        # nilpotent adjacency (e.g. H-graph of the free group)
        return EigenResult(0.0, iters, 0.0, v, 0.0, True)
    if period == 2:
        lam = math.sqrt(lam_b)
        av = mat.dot(v)
        full = v + av / lam
        mx = float(np.max(full))
        full = full / mx
        res_a = float(np.max(np.abs(mat.dot(full) - lam * full)))
    else:
        lam = lam_b
        full = v
        res_a = float(np.max(np.abs(mat.dot(full) - lam * full)))
    certified = _certified_bound(mat, period, targets, tol)
    converged = residual <= tol * max(1.0, lam_b)
    return EigenResult(lam, iters, res_a, full, certified, converged)


def default_checkpoints(n_max: int, per_decade: int = 50, n_min: int = 10) -> list[int]:
    """Geometric checkpoint grid with the given density per decade."""
    if n_max < n_min:
        return [n_max]
    out = []
    k = 0
    while True:
        v = int(round(n_min * 10 ** (k / per_decade)))
        k += 1
        if v > n_max:
            break
        if not out or v > out[-1]:
            out.append(v)
    if not out or out[-1] != n_max:
        out.append(n_max)
    return out


def eigen_ladder(
    graph: cayley.TruncatedGraph,
    checkpoints: list[int],
    period: int,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Ladder:
    """Warm-started eigenvalues of nested prefix subgraphs."""
    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise ConfigError("checkpoints must be strictly ascending")
    if checkpoints and checkpoints[-1] > graph.n:
        raise ConfigError("checkpoint exceeds graph size")
    full = graph.csr()
    targets_all = np.asarray(graph.root_return_vertices, dtype=np.int64)
    rows = []
    prev_vec = None
    for n in checkpoints:
        sub = full[:n, :n]
        targets = targets_all[targets_all < n]
        if prev_vec is not None:
            pos = prev_vec[prev_vec > 0]
            fill = float(np.min(pos)) if len(pos) else 1.0
            v0 = np.full(n, fill)
            v0[: len(prev_vec)] = prev_vec
        else:
            v0 = None
        res = dominant_eigenvalue(sub, period, tol, max_iter, v0=v0, targets=targets)
        prev_vec = res.vector if len(res.vector) == n else None
        rows.append((n, res))
    return Ladder(rows)


def certified_alpha_bound(
    group: G.GroupId,
    n: int,
    tol: float = DEFAULT_TOL,
    max_vertices: int = cayley.DEFAULT_VERTEX_BUDGET,
) -> float:
    """Rigorous cogrowth lower bound from the H-graph on n vertices."""
    graph = cayley.build_H(group, n, max_vertices=max_vertices)
    res = dominant_eigenvalue(graph, cayley.classify_period(group), tol)
    return res.certified
