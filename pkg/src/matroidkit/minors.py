"""Minor testing, labellings certifying a fixed minor, grounded triangles
and triads, and detachable-pair search (direct and after a single
delta-wye or wye-delta exchange)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (Matroid, MatroidError, bit, elems, is_isomorphic,
                   mask_of, popcount)
from .connectivity import is_3_connected
from .builders import delta_wye, wye_delta
from .structures import triangles, triads


class HypothesisUnmet(MatroidError):
    pass


@dataclass(frozen=True)
class NLabelling:
    contract: int
    delete: int


@dataclass(frozen=True)
class DetachableResult:
    pair: tuple[int, int]
    mode: str               # "contract" | "delete"
    stage: str              # "direct" | "after-delta-wye" | "after-wye-delta"
    exchanged: int | None   # triple the exchange was performed on, if any
    labelling: NLabelling | None


_minor_memo: dict = {}


def _degree_multiset(n: int, bases) -> tuple:
    deg = [0] * n
    for b in bases:
        for i in elems(b):
            deg[i] += 1
    return tuple(sorted(deg))


def _n_profile(n_mat: Matroid):
    return (len(n_mat.bases), _degree_multiset(n_mat.n, n_mat.bases))


def labellings(m: Matroid, n_mat: Matroid, required_contract: int = 0,
               required_delete: int = 0, excluded: int = 0,
               survivor_cap: tuple[int, int] | None = None,
               removed_cap: tuple[int, int] | None = None):
    """Generate every labelling (C, D) with M/C\\D isomorphic to N.

    C always has exactly r(M) - r(N) elements and D the rest of the size
    gap; this loses nothing since every minor has such a reduced form.
    `survivor_cap` = (region, k) keeps only labellings whose surviving
    ground set meets `region` in at most k elements; `removed_cap` bounds
    how many removed elements may fall in a region.
    """
    gap = m.n - n_mat.n
    kc = m.rank - n_mat.rank
    if gap < 0 or kc < 0 or gap < kc:
        return
    t = m._list()
    nb, ndeg = _n_profile(n_mat)
    rn = n_mat.rank
    free = [i for i in range(m.n) if not (excluded >> i) & 1]
    req_c = required_contract
    req_d = required_delete
    if req_c & excluded or req_d & excluded or popcount(req_c) > kc \
            or popcount(req_d) > gap - kc:
        return
    cap_region, cap_k = survivor_cap if survivor_cap else (0, 0)
    rem_region, rem_k = removed_cap if removed_cap else (0, 0)
    c_pool = [i for i in free if not (req_c >> i) & 1 and not (req_d >> i) & 1]
    for c_extra in itertools.combinations(c_pool, kc - popcount(req_c)):
        c = req_c | mask_of(c_extra)
        if t[c] != kc:
            continue
        if removed_cap and popcount(c & rem_region) > rem_k:
            continue
        d_pool = [i for i in c_pool if not (c >> i) & 1
                  and not (req_d >> i) & 1]
        for d_extra in itertools.combinations(d_pool, gap - kc - popcount(req_d)):
            d = req_d | mask_of(d_extra)
            if survivor_cap:
                if popcount(cap_region & ~(c | d)) > cap_k:
                    continue
            if removed_cap and popcount((c | d) & rem_region) > rem_k:
                continue
            if t[m.full ^ d] - kc != rn:
                continue
            survivors = elems(m.full ^ c ^ d)
            minor_bases = []
            for combo in itertools.combinations(survivors, rn):
                if t[mask_of(combo) | c] == rn + kc:
                    minor_bases.append(mask_of(combo))
            if len(minor_bases) != nb:
                continue
            pos = {e: k for k, e in enumerate(survivors)}
            packed = [mask_of(pos[i] for i in elems(b)) for b in minor_bases]
            if _degree_multiset(n_mat.n, packed) != ndeg:
                continue
            cand = Matroid(n_mat.n, packed,
                           [m.labels[i] for i in survivors])
            if is_isomorphic(cand, n_mat) is not None:
                yield NLabelling(c, d)


def has_minor(m: Matroid, n_mat: Matroid) -> NLabelling | None:
    """First labelling in canonical order, or None.  Memoised on the basis
    families of both matroids."""
    key = (m.key, n_mat.key)
    if key in _minor_memo:
        return _minor_memo[key]
    out = next(labellings(m, n_mat), None)
    _minor_memo[key] = out
    return out


def has_minor_avoiding(m: Matroid, n_mat: Matroid, region: int,
                       max_meet: int) -> NLabelling | None:
    """First labelling whose surviving copy meets `region` in at most
    `max_meet` elements."""
    key = (m.key, n_mat.key, region, max_meet)
    if key in _minor_memo:
        return _minor_memo[key]
    out = next(labellings(m, n_mat, survivor_cap=(region, max_meet)), None)
    _minor_memo[key] = out
    return out


def verify_labelling(m: Matroid, n_mat: Matroid, lab: NLabelling) -> bool:
    if lab.contract & lab.delete:
        return False
    return is_isomorphic(m.minor(lab.contract, lab.delete), n_mat) is not None


def element_status(m: Matroid, n_mat: Matroid, e: int):
    """(contractible, deletable, doubly labelled) for the element e."""
    be = bit(e)
    con = has_minor(m.contract(be), n_mat) is not None
    dele = has_minor(m.delete(be), n_mat) is not None
    return con, dele, con and dele


def _grounded(m: Matroid, n_mat: Matroid, triple: int) -> bool:
    for a, b in itertools.combinations(elems(triple), 2):
        ma, mb = bit(a), bit(b)
        for c, d in ((ma | mb, 0), (ma, mb), (mb, ma), (0, ma | mb)):
            if has_minor(m.minor(c, d), n_mat) is not None:
                return False
    return True


def grounded_triangles(m: Matroid, n_mat: Matroid) -> list[int]:
    return [t for t in triangles(m) if _grounded(m, n_mat, t)]


def grounded_triads(m: Matroid, n_mat: Matroid) -> list[int]:
    return [t for t in triads(m) if _grounded(m, n_mat, t)]


def all_triples_grounded(m: Matroid, n_mat: Matroid) -> bool:
    tri = triangles(m)
    trd = triads(m)
    return (len(grounded_triangles(m, n_mat)) == len(tri)
            and len(grounded_triads(m, n_mat)) == len(trd))


def detachable_pairs(m: Matroid, n_mat: Matroid | None,
                     within: int | None = None,
                     first_only: bool = False) -> list[DetachableResult]:
    """Pairs whose double contraction or double deletion is 3-connected and
    (when n_mat is given) keeps an N-minor.  `within` restricts the scan to
    pairs inside a mask; n_mat=None disables the minor requirement."""
    out = []
    if m.n < 3:
        return out
    ids = elems(within) if within is not None else range(m.n)
    for x1, x2 in itertools.combinations(ids, 2):
        pair = bit(x1) | bit(x2)
        for mode in ("contract", "delete"):
            mm = m.contract(pair) if mode == "contract" else m.delete(pair)
            if not is_3_connected(mm):
                continue
            lab = None
            if n_mat is not None:
                found = has_minor(mm, n_mat)
                if found is None:
                    continue
                lab = found
            out.append(DetachableResult((x1, x2), mode, "direct", None, lab))
            if first_only:
                return out
    return out


def detachable_after_exchange(m: Matroid, n_mat: Matroid | None,
                              first_only: bool = False) -> list[DetachableResult]:
    """Run the pair search on every single delta-wye or wye-delta exchange
    of m, tagging results with the exchanged triple."""
    out = []
    for tri in triangles(m):
        m2 = delta_wye(m, tri)
        for res in detachable_pairs(m2, n_mat, first_only=first_only):
            out.append(DetachableResult(res.pair, res.mode,
                                        "after-delta-wye", tri, res.labelling))
            if first_only:
                return out
    for trd in triads(m):
        m2 = wye_delta(m, trd)
        for res in detachable_pairs(m2, n_mat, first_only=first_only):
            out.append(DetachableResult(res.pair, res.mode,
                                        "after-wye-delta", trd, res.labelling))
            if first_only:
                return out
    return out


def switch_labels(m: Matroid, n_mat: Matroid, lab: NLabelling,
                  d: int, e: int) -> NLabelling:
    """Swap the labels of d and e, justified by a parallel pair {d,e} in
    M/c for some contracted c.  The result is re-verified as a labelling."""
    bd, be = bit(d), bit(e)
    t = m._list()
    hyp = any(t[bd | be | bit(c)] - t[bit(c)] == 1
              for c in elems(lab.contract & ~(bd | be)))
    if not hyp:
        raise HypothesisUnmet(
            f"{{{m.labels[d]},{m.labels[e]}}} is not a parallel pair in any "
            "single contraction from the labelling")

    def status(x):
        if lab.contract & x:
            return "contract"
        if lab.delete & x:
            return "delete"
        return "free"

    sd, se = status(bd), status(be)
    c2, d2 = lab.contract, lab.delete
    for b, status_other in ((bd, se), (be, sd)):
        c2 &= ~b
        d2 &= ~b
        if status_other == "contract":
            c2 |= b
        elif status_other == "delete":
            d2 |= b
    new = NLabelling(c2, d2)
    if not verify_labelling(m, n_mat, new):
        raise MatroidError("label switch produced an invalid labelling; "
                           "minor machinery is broken")
    return new


def clear_minor_memo():
    _minor_memo.clear()
