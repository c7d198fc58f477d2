"""Connectivity calculus: lambda, k-separations, vertical/cyclic splits,
full closure, guts/coguts classification and blocking."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Matroid, MatroidError, elems, lex_key, popcount


class NotThreeConnected(MatroidError):
    pass


class BadPartition(MatroidError):
    pass


class BadInput(MatroidError):
    pass


@dataclass(frozen=True)
class SeparationReport:
    side: int
    k: int
    lam: int
    exact: bool
    vertical: bool
    cyclic: bool
    guts: int
    coguts: int


def lambda_(m: Matroid, x: int) -> int:
    """Connectivity function r(X) + r(E-X) - r(M)."""
    t = m._list()
    return t[x] + t[m.full ^ x] - m.rank


def lambda_minus(m: Matroid, removed: int, x: int) -> int:
    """lambda of X inside the deletion minor M \\ removed, without relabelling."""
    t = m._list()
    ground = m.full ^ removed
    return t[x] + t[ground ^ x] - t[ground]


def _lambda_all(m: Matroid) -> np.ndarray:
    t = m.table()
    return t.astype(np.int16) + t[::-1].astype(np.int16) - m.rank


def separations(m: Matroid, k: int) -> list[SeparationReport]:
    """All k-separations, one report per unordered pair.

    The reported side is the lexicographically smaller part, which is
    always the part containing element 0.
    """
    if k < 1:
        raise ValueError("k must be positive")
    lam = _lambda_all(m)
    pc = _pc(m)
    n = m.n
    ok = (lam <= k - 1) & (pc >= k) & (pc <= n - k)
    ok &= (np.arange(1 << n) & 1).astype(bool)  # canonical side holds id 0
    out = []
    for x in np.nonzero(ok)[0]:
        x = int(x)
        out.append(_report(m, x, k, int(lam[x])))
    out.sort(key=lambda rep: lex_key(rep.side))
    return out


def _pc(m: Matroid) -> np.ndarray:
    from .core import _popcount_table
    return _popcount_table(m.n)


def _report(m: Matroid, x: int, k: int, lam: int) -> SeparationReport:
    y = m.full ^ x
    t = m._list()
    exact = lam == k - 1
    vertical = t[x] >= k and t[y] >= k
    cyclic = m.corank_of(x) >= k and m.corank_of(y) >= k
    if exact:
        guts = m.closure(x) & m.closure(y)
        coguts = m.coclosure(x) & m.coclosure(y)
    else:
        guts = coguts = 0
    return SeparationReport(x, k, lam, exact, vertical, cyclic, guts, coguts)


def is_connected(m: Matroid) -> bool:
    if m.n == 1:
        return True
    lam = _lambda_all(m)
    pc = _pc(m)
    viol = (lam <= 0) & (pc >= 1) & (pc <= m.n - 1)
    return not bool(viol.any())


def is_3_connected(m: Matroid) -> bool:
    if m._is3conn is None:
        lam = _lambda_all(m)
        pc = _pc(m)
        n = m.n
        viol = (lam <= 0) & (pc >= 1) & (pc <= n - 1)
        viol |= (lam <= 1) & (pc >= 2) & (pc <= n - 2)
        m._is3conn = not bool(viol.any())
    return m._is3conn


def _vertical_triples(m: Matroid) -> list[tuple[int, int, int]]:
    t = m._list()
    n = m.n
    out = []
    for z in range(n):
        bz = 1 << z
        rest = m.full ^ bz
        ids = elems(rest)
        low = 1 << ids[0]
        # canonical X contains the lowest remaining id
        for sub in _half_subsets(rest, low):
            x = sub
            y = rest ^ x
            if popcount(x) < 3 or popcount(y) < 3:
                continue
            if t[x] < 3 or t[y] < 3:
                continue
            if t[x] + t[y | bz] - m.rank > 2:
                continue
            if t[x | bz] + t[y] - m.rank > 2:
                continue
            if t[x | bz] != t[x] or t[y | bz] != t[y]:
                continue  # z in cl(X) and cl(Y)
            out.append((x, z, y))
    out.sort(key=lambda triple: (triple[1], lex_key(triple[0])))
    return out


def _half_subsets(rest: int, low: int):
    others = rest ^ low
    sub = others
    while True:
        yield sub | low
        if sub == 0:
            return
        sub = (sub - 1) & others


def vertical_3_separations(m: Matroid) -> list[tuple[int, int, int]]:
    """All partitions (X, {z}, Y) where both flanking bipartitions are
    vertical 3-separations and z lies in cl(X) and cl(Y)."""
    if not is_3_connected(m):
        raise NotThreeConnected("vertical 3-separation scan needs a 3-connected matroid")
    return _vertical_triples(m)


def cyclic_3_separations(m: Matroid) -> list[tuple[int, int, int]]:
    if not is_3_connected(m):
        raise NotThreeConnected("cyclic 3-separation scan needs a 3-connected matroid")
    return _vertical_triples(m.dual())


def full_closure(m: Matroid, x: int) -> int:
    cur = x
    while True:
        nxt = m.coclosure(m.closure(cur))
        if nxt == cur:
            return cur
        cur = nxt


def classify_guts(m: Matroid, x: int, y: int, e: int) -> str:
    """For an exactly 3-separating partition (X, Y) and e in X with |X| >= 3,
    classify e as a guts element, a coguts element, or neither."""
    if x | y != m.full or x & y or not (x >> e) & 1 or popcount(x) < 3:
        raise BadPartition("need a partition (X, Y) of E with e in X, |X| >= 3")
    if lambda_(m, x) != 2:
        raise BadPartition("(X, Y) is not exactly 3-separating")
    be = 1 << e
    rest = x ^ be
    if (m.closure(rest) & be) and (m.closure(y) & be):
        return "guts"
    if (m.coclosure(rest) & be) and (m.coclosure(y) & be):
        return "coguts"
    return "neither"


def blocks(m: Matroid, d: int, x: int) -> str:
    """How the element d interacts with a set X that is exactly 3-separating
    in M \\ d: 'not-blocked', 'blocked' or 'fully-blocked'."""
    bd = 1 << d
    if x & bd:
        raise BadInput("X must avoid d")
    rest = m.full ^ bd ^ x
    if lambda_minus(m, bd, x) != 2:
        raise BadInput("X is not exactly 3-separating in M \\ d")
    if lambda_(m, x) <= 2:
        return "not-blocked"
    fully = lambda_(m, x | bd) > 2
    # cross-check against the closure criterion for full blocking
    crit = not ((m.closure(x) | m.closure(rest)) & bd)
    if fully != crit:
        raise MatroidError("blocking criterion disagreement; rank logic broken")
    return "fully-blocked" if fully else "blocked"
