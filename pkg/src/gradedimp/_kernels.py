"""Compiled inner loops for large theories (trivial complete sets).

Formulas are rows of two int64 matrices ``ante``/``cons``; ``tnorm``, ``res``
and ``hedge`` are the chain and hedge tables as arrays.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def _entailed_by_others(i, ante, cons, active, tnorm, res, hedge, top):
    # least model of ante[i] w.r.t. active formulas other than i; stops as soon as cons[i] fits
    m = ante.shape[1]
    model = ante[i].copy()
    changed = True
    while changed:
        changed = False
        for k in range(ante.shape[0]):
            if k == i or not active[k]:
                continue
            s = top
            for y in range(m):
                v = res[ante[k, y], model[y]]
                if v < s:
                    s = v
                    if s == 0:
                        break
            s = hedge[s]
            if s == 0:
                continue
            for y in range(m):
                v = tnorm[s, cons[k, y]]
                if v > model[y]:
                    model[y] = v
                    changed = True
        inside = True
        for y in range(m):
            if cons[i, y] > model[y]:
                inside = False
                break
        if inside:
            return True
    return False


@njit(cache=True)
def _greedy(ante, cons, tnorm, res, hedge, top):
    active = np.ones(ante.shape[0], dtype=np.bool_)
    for i in range(ante.shape[0]):
        if _entailed_by_others(i, ante, cons, active, tnorm, res, hedge, top):
            active[i] = False
    return active


def greedy_nonredundant(ante, cons, chain, hedge) -> np.ndarray:
    """Keep-mask of a single in-order greedy redundancy-removal pass."""
    ante = np.ascontiguousarray(ante, dtype=np.int64)
    cons = np.ascontiguousarray(cons, dtype=np.int64)
    if ante.shape[0] == 0:
        return np.ones(0, dtype=bool)
    return _greedy(ante, cons, chain.tnorm_array, chain.res_array, hedge.array, chain.top)


def all_lsets(levels: int, size: int) -> np.ndarray:
    """Every L-set as a row, in lexicographic order."""
    grids = np.indices((levels,) * size).reshape(size, -1).T
    return np.ascontiguousarray(grids, dtype=np.int64)


def batch_closures(lsets, incidence, res, hedge, chunk: int = 1 << 15) -> np.ndarray:
    """``B↓↑`` for every row ``B`` of ``lsets``."""
    out = np.empty_like(lsets)
    for start in range(0, lsets.shape[0], chunk):
        B = lsets[start:start + chunk]
        down = res[B[:, None, :], incidence[None, :, :]].min(axis=2)
        out[start:start + chunk] = res[hedge[down][:, :, None], incidence[None, :, :]].min(axis=1)
    return out
