"""Hot loops of the partition search, shared by two backends.

Every function here is written against plain indexed numpy arrays so the
same source compiles under numba's nopython mode and also runs as-is on
bare numpy. The backend is picked once at import time:

    CLIQUEPART_BACKEND=numba   force jit (ImportError if numba missing)
    CLIQUEPART_BACKEND=numpy   force the interpreted fallback
    unset / "auto"             jit when numba is importable

All bitsets are little-endian vectors of uint64 words. `snaps[d]` holds
the full component table after d decisions and `fsnaps[d][k]` the cached
intersection of cliques_of over the members of component k (garbage for
empty components, which are never consulted); `choice[d]` is the 0-based
clique picked at depth d (-1 = unassigned); `cursor[0]` the current
depth. Candidate cliques per depth live in CSR form (cand_offs,
cand_idx), ascending within each segment.
"""
from __future__ import annotations

import os

import numpy as np

_env = os.environ.get("CLIQUEPART_BACKEND", "").strip().lower()
if _env in ("", "auto"):
    try:
        import numba  # noqa: F401

        _use_numba = True
    except ImportError:
        _use_numba = False
elif _env == "numba":
    import numba  # noqa: F401

    _use_numba = True
elif _env == "numpy":
    _use_numba = False
else:
    raise ValueError(
        f"CLIQUEPART_BACKEND={_env!r}: expected 'numba', 'numpy' or 'auto'"
    )

BACKEND = "numba" if _use_numba else "numpy"

U0 = np.uint64(0)
U1 = np.uint64(1)
UFULL = np.uint64(0xFFFFFFFFFFFFFFFF)


def _bit(words, i):
    return (words[i >> 6] >> np.uint64(i & 63)) & U1 != U0


def _set_bit(words, i):
    words[i >> 6] |= U1 << np.uint64(i & 63)


def _clear_bit(words, i):
    words[i >> 6] &= ~(U1 << np.uint64(i & 63))


def _intersects(a, b):
    for w in range(a.shape[0]):
        if a[w] & b[w]:
            return True
    return False


def _fold_cliques_of(out, comp, cliques_of):
    # out := intersection of cliques_of rows over the members of comp.
    # comp must be nonempty or out stays all-ones.
    for w in range(out.shape[0]):
        out[w] = UFULL
    for cw in range(comp.shape[0]):
        word = comp[cw]
        b = cw << 6
        while word != U0:
            if word & U1:
                row = cliques_of[b]
                for w in range(out.shape[0]):
                    out[w] &= row[w]
            word = word >> U1
            b += 1


def _is_t1_or_t2(folds, choice, ell, v, cliques_of, rgd, high, iw, jw):
    """Combined dead-branch test after the depth-ell decision.

    folds holds the post-decision common-clique sets of the components.
    Fires when the subtree can only produce non-maximal partitions (a
    chosen component's common cliques hit a rigid clique, or two chosen
    components share a common clique) or duplicates (a chosen component
    C_j fits inside some later clique i > j).
    """
    wm = rgd.shape[0]
    for w in range(wm):
        iw[w] = U0
    for k in range(ell + 1):
        c = choice[k]
        if not _bit(rgd, c):
            _set_bit(iw, c)
    nonempty = False
    vrow = cliques_of[v]
    for w in range(wm):
        jw[w] = iw[w] & vrow[w]
        if jw[w] != U0:
            nonempty = True
    if not nonempty:
        return False
    for wj in range(wm):
        jword = jw[wj]
        bj = wj << 6
        while jword != U0:
            if jword & U1:
                j = bj
                pj = folds[j]
                if _intersects(pj, rgd):
                    return True
                if _intersects(pj, high[j]):
                    return True
                for wi in range(wm):
                    iword = iw[wi]
                    bi = wi << 6
                    while iword != U0:
                        if iword & U1:
                            i = bi
                            if i != j and not (i < j and _bit(jw, i)):
                                if _intersects(folds[i], pj):
                                    return True
                        iword = iword >> U1
                        bi += 1
            jword = jword >> U1
            bj += 1
    return False


def _advance(
    snaps,
    fsnaps,
    choice,
    cursor,
    floor,
    shared,
    cand_offs,
    cand_idx,
    cliques_of,
    rgd,
    high,
    iw,
    jw,
):
    """Depth-first step to the next surviving leaf; False when exhausted.

    Resumable: state lives entirely in (snaps, fsnaps, choice, cursor).
    Backtracks no shallower than `floor`, which lets callers fence off a
    subtree.
    """
    s = shared.shape[0]
    ell = cursor[0]
    while ell >= floor:
        v = shared[ell]
        base = snaps[ell]
        fbase = fsnaps[ell]
        nk = -1
        for p in range(cand_offs[ell], cand_offs[ell + 1]):
            k = cand_idx[p]
            if k <= choice[ell]:
                continue
            if _bit(rgd, k) or not _intersects(fbase[k], rgd):
                nk = k
                break
        if nk < 0:
            choice[ell] = -1
            ell -= 1
            continue
        choice[ell] = nk
        nxt = snaps[ell + 1]
        fnxt = fsnaps[ell + 1]
        for r in range(base.shape[0]):
            for w in range(base.shape[1]):
                nxt[r, w] = base[r, w]
            for w in range(fbase.shape[1]):
                fnxt[r, w] = fbase[r, w]
        for p in range(cand_offs[ell], cand_offs[ell + 1]):
            k = cand_idx[p]
            if k != nk:
                _clear_bit(nxt[k], v)
                _fold_cliques_of(fnxt[k], nxt[k], cliques_of)
        if _is_t1_or_t2(fnxt, choice, ell, v, cliques_of, rgd, high, iw, jw):
            continue
        if ell == s - 1:
            cursor[0] = ell
            return True
        ell += 1
    cursor[0] = ell
    return False


def _count_from(
    snaps,
    fsnaps,
    choice,
    cursor,
    floor,
    shared,
    cand_offs,
    cand_idx,
    cliques_of,
    rgd,
    high,
    iw,
    jw,
):
    """Number of surviving leaves below the current position; same walk as
    _advance but never pauses, so no per-answer call overhead."""
    s = shared.shape[0]
    total = 0
    ell = cursor[0]
    while ell >= floor:
        v = shared[ell]
        base = snaps[ell]
        fbase = fsnaps[ell]
        nk = -1
        for p in range(cand_offs[ell], cand_offs[ell + 1]):
            k = cand_idx[p]
            if k <= choice[ell]:
                continue
            if _bit(rgd, k) or not _intersects(fbase[k], rgd):
                nk = k
                break
        if nk < 0:
            choice[ell] = -1
            ell -= 1
            continue
        choice[ell] = nk
        nxt = snaps[ell + 1]
        fnxt = fsnaps[ell + 1]
        for r in range(base.shape[0]):
            for w in range(base.shape[1]):
                nxt[r, w] = base[r, w]
            for w in range(fbase.shape[1]):
                fnxt[r, w] = fbase[r, w]
        for p in range(cand_offs[ell], cand_offs[ell + 1]):
            k = cand_idx[p]
            if k != nk:
                _clear_bit(nxt[k], v)
                _fold_cliques_of(fnxt[k], nxt[k], cliques_of)
        if _is_t1_or_t2(fnxt, choice, ell, v, cliques_of, rgd, high, iw, jw):
            continue
        if ell == s - 1:
            total += 1
            continue
        ell += 1
    cursor[0] = ell
    return total


if _use_numba:
    from numba import njit

    _jit = njit(cache=True, nogil=True)
    _bit = _jit(_bit)
    _set_bit = _jit(_set_bit)
    _clear_bit = _jit(_clear_bit)
    _intersects = _jit(_intersects)
    _fold_cliques_of = _jit(_fold_cliques_of)
    _is_t1_or_t2 = _jit(_is_t1_or_t2)
    _advance = _jit(_advance)
    _count_from = _jit(_count_from)
