"""Bit-packed matroids represented by their basis families.

Ground sets are index ranges 0..n-1 with n <= 24; every subset is a Python
int bitmask.  All structural queries reduce to rank lookups against a full
2^n subset table that is built lazily with numpy and cached per matroid,
so scans over all subsets stay cheap and exact.
"""

from __future__ import annotations

import itertools

import numpy as np

MAX_GROUND = 24

_ALPHABET = "abcdefghijklmnopqrstuvwx"


class MatroidError(Exception):
    """Base class for every error raised by this package."""


class EmptyFamily(MatroidError):
    pass


class CardinalityMismatch(MatroidError):
    pass


class GroundSetExhausted(MatroidError):
    pass


class AxiomViolation(MatroidError):
    """Basis axioms fail; `witness` carries the offending sets."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------------------
# bitmask helpers (ElemSet = int)

def bit(i: int) -> int:
    return 1 << i


def mask_of(ids) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def elems(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def lex_key(mask: int) -> tuple[int, ...]:
    return tuple(elems(mask))


def subsets_of(mask: int, k: int):
    """All k-element submasks of `mask`, ascending in lex order of id tuples."""
    for combo in itertools.combinations(elems(mask), k):
        yield mask_of(combo)


def submasks(mask: int):
    """Every submask of `mask`, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _popcount_table(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        s = 1 << i
        pc[s:2 * s] = pc[:s] + 1
    return pc


def rank_table(n: int, bases) -> np.ndarray:
    """Full 2^n rank table of the independence system spanned by `bases`.

    rank[X] = size of the largest subset of X contained in some member of
    `bases`.  Valid for arbitrary equicardinal families, which is what lets
    the axiom checker use it before matroidness is known.
    """
    size = 1 << n
    pc = _popcount_table(n)
    indep = np.zeros(size, dtype=bool)
    indep[np.fromiter(bases, dtype=np.int64)] = True
    for i in range(n):
        s = 1 << i
        v = indep.reshape(-1, 2 * s)
        v[:, :s] |= v[:, s:]
    g = np.where(indep, pc, 0).astype(np.int8)
    for i in range(n):
        s = 1 << i
        v = g.reshape(-1, 2 * s)
        np.maximum(v[:, s:], v[:, :s], out=v[:, s:])
    return g


# ---------------------------------------------------------------------------


class Matroid:
    """Immutable matroid given by ground-set size, labels and basis masks.

    Use `validate` to build one from an untrusted family; the constructor
    itself only normalises.  Derived data (rank table, dual, circuits) is
    cached on first use; treat instances as read-only values.
    """

    def __init__(self, n: int, bases, labels=None):
        if not 1 <= n <= MAX_GROUND:
            raise ValueError(f"ground set size {n} outside 1..{MAX_GROUND}")
        bases = tuple(sorted(set(bases)))
        if not bases:
            raise EmptyFamily("no bases given")
        self.n = n
        self.full = (1 << n) - 1
        self.bases = bases
        self.rank = popcount(bases[0])
        if labels is None:
            labels = tuple(_ALPHABET[:n])
        else:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be unique, one per element")
        self.labels = labels
        self._tab = None
        self._tab_list = None
        self._dual = None
        self._circuits = None
        self._is3conn = None

    # -- identity ----------------------------------------------------------

    @property
    def key(self):
        return (self.n, self.bases)

    def __eq__(self, other):
        return (isinstance(other, Matroid)
                and self.key == other.key and self.labels == other.labels)

    def __hash__(self):
        return hash((self.key, self.labels))

    def __repr__(self):
        return f"Matroid(n={self.n}, r={self.rank}, bases={len(self.bases)})"

    # -- label helpers -----------------------------------------------------

    def id_of(self, label) -> int:
        if isinstance(label, int):
            return label
        return self.labels.index(label)

    def set_of(self, items) -> int:
        """Mask from an iterable of element ids or labels."""
        return mask_of(self.id_of(x) for x in items)

    def label_list(self, mask: int) -> list[str]:
        return [self.labels[i] for i in elems(mask)]

    def fmt(self, mask: int) -> str:
        return "{" + ",".join(self.label_list(mask)) + "}"

    # -- rank calculus -----------------------------------------------------

    def table(self) -> np.ndarray:
        if self._tab is None:
            self._tab = rank_table(self.n, self.bases)
        return self._tab

    def _list(self):
        if self._tab_list is None:
            self._tab_list = self.table().tolist()
        return self._tab_list

    def rank_of(self, x: int) -> int:
        return self._list()[x]

    def corank_of(self, x: int) -> int:
        # r*(X) = |X| - r(M) + r(E-X)
        return popcount(x) - self.rank + self._list()[self.full ^ x]

    def closure(self, x: int) -> int:
        t = self._list()
        rx = t[x]
        out = x
        rest = self.full ^ x
        for i in elems(rest):
            if t[x | (1 << i)] == rx:
                out |= 1 << i
        return out

    def coclosure(self, x: int) -> int:
        t = self._list()
        full = self.full
        out = x
        for i in elems(full ^ x):
            b = 1 << i
            # e in cl*(X) iff r(E-X-e) < r(E-X), for e outside X
            if t[full ^ x ^ b] < t[full ^ x]:
                out |= b
        return out

    def is_loop(self, e: int) -> bool:
        return self.rank_of(1 << e) == 0

    def is_coloop(self, e: int) -> bool:
        return self.rank_of(self.full ^ (1 << e)) < self.rank

    # -- duality and minors --------------------------------------------------

    def dual(self) -> "Matroid":
        if self._dual is None:
            d = Matroid(self.n, (self.full ^ b for b in self.bases), self.labels)
            d._dual = self
            self._dual = d
        return self._dual

    def _compress(self, mask: int, keep: int) -> int:
        out = 0
        j = 0
        for i in range(self.n):
            if keep >> i & 1:
                if mask >> i & 1:
                    out |= 1 << j
                j += 1
        return out

    def delete(self, d: int) -> "Matroid":
        if d == 0:
            return self
        keep = self.full ^ d
        if keep == 0:
            raise GroundSetExhausted("cannot delete the whole ground set")
        r2 = max(popcount(b & keep) for b in self.bases)
        newbases = {self._compress(b & keep, keep)
                    for b in self.bases if popcount(b & keep) == r2}
        labels = [self.labels[i] for i in elems(keep)]
        return Matroid(popcount(keep), newbases, labels)

    def contract(self, c: int) -> "Matroid":
        if c == 0:
            return self
        if c == self.full:
            raise GroundSetExhausted("cannot contract the whole ground set")
        return self.dual().delete(c).dual()

    def minor(self, c: int, d: int) -> "Matroid":
        if c & d:
            raise ValueError("contract and delete sets overlap")
        if (c | d) == self.full:
            raise GroundSetExhausted("no elements left")
        m = self.contract(c)
        return m.delete(self._compress(d, self.full ^ c))

    def restrict(self, x: int) -> "Matroid":
        return self.delete(self.full ^ x)

    # -- circuits ------------------------------------------------------------

    def circuits(self) -> tuple[int, ...]:
        if self._circuits is None:
            tab = self.table()
            pc = _popcount_table(self.n)
            dep = tab < pc
            idx = np.arange(1 << self.n, dtype=np.int64)
            mini = dep.copy()
            for i in range(self.n):
                b = 1 << i
                has = (idx & b) != 0
                mini &= ~(has & dep[idx ^ b])
            self._circuits = tuple(int(x) for x in np.nonzero(mini)[0])
        return self._circuits

    def cocircuits(self) -> tuple[int, ...]:
        return self.dual().circuits()

    # -- simplification ------------------------------------------------------

    def simplify(self):
        """Drop loops and parallel duplicates, keeping the lowest id of each
        class.  Returns (matroid, map) where map sends each non-loop label to
        the label of its retained representative."""
        t = self._list()
        loops = mask_of(i for i in range(self.n) if t[1 << i] == 0)
        rep = {}
        seen = 0
        keep = 0
        for i in range(self.n):
            b = 1 << i
            if b & loops or b & seen:
                continue
            cls = self.closure(b) & ~loops
            seen |= cls
            keep |= b
            for j in elems(cls):
                rep[self.labels[j]] = self.labels[i]
        return self.delete(self.full ^ keep), rep

    def cosimplify(self):
        m, rep = self.dual().simplify()
        return m.dual(), rep


# ---------------------------------------------------------------------------


def validate(bases, n: int, labels=None) -> Matroid:
    """Check the basis axioms exhaustively and return the matroid.

    Equicardinality is checked directly.  Exchange is checked through the
    equivalent purity criterion: for every independent set I that cannot be
    extended inside A = E - (ext(I) - I), the rank of A must equal |I|.
    This is O(n * 2^n) vectorised, against O(|B|^2) for pairwise exchange.
    """
    bases = sorted(set(bases))
    if not bases:
        raise EmptyFamily("empty basis family")
    if not 1 <= n <= MAX_GROUND:
        raise ValueError(f"ground set size {n} outside 1..{MAX_GROUND}")
    full = (1 << n) - 1
    for b in bases:
        if b & ~full:
            raise ValueError(f"basis {b:#x} not inside the ground set")
    r = popcount(bases[0])
    for b in bases:
        if popcount(b) != r:
            raise CardinalityMismatch(
                f"bases of sizes {r} and {popcount(b)} in one family")

    tab = rank_table(n, bases)
    pc = _popcount_table(n)
    idx = np.arange(1 << n, dtype=np.int64)
    indep = tab == pc
    ext = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        b = 1 << i
        grows = (tab[idx | b] == tab + 1) & ((idx & b) == 0)
        ext[grows] |= b
    bad = indep & (tab[full ^ ext] != pc)
    if bad.any():
        i_mask = int(np.nonzero(bad)[0][0])
        a_mask = full ^ int(ext[i_mask])
        witness = _exchange_witness(bases, i_mask, a_mask)
        raise AxiomViolation(
            f"exchange fails: independent set {sorted(elems(i_mask))} is "
            f"maximal in {sorted(elems(a_mask))} but rank there is "
            f"{int(tab[a_mask])}", witness)
    return Matroid(n, bases, labels)


def _exchange_witness(bases, i_mask, a_mask):
    """Try to upgrade a purity failure to a literal exchange triple."""
    bset = set(bases)
    for b1 in bases:
        for b2 in bases:
            for x in elems(b1 & ~b2):
                if not any((b1 ^ (1 << x)) | (1 << y) in bset
                           for y in elems(b2 & ~b1)):
                    return (b1, b2, x)
    return (i_mask, a_mask, None)


# ---------------------------------------------------------------------------
# isomorphism


def _element_profile(m: Matroid, use_circuits: bool):
    deg = [0] * m.n
    for b in m.bases:
        for i in elems(b):
            deg[i] += 1
    if not use_circuits:
        return [(d,) for d in deg]
    profs = [[] for _ in range(m.n)]
    for c in m.circuits():
        k = popcount(c)
        for i in elems(c):
            profs[i].append(k)
    return [(deg[i], tuple(sorted(profs[i]))) for i in range(m.n)]


def is_isomorphic(m1: Matroid, m2: Matroid):
    """Search for a ground-set bijection carrying bases onto bases.

    Returns the mapping as a list (image of each id of m1) or None.
    Pruned by rank, basis count, basis-degree profile and, on small ground
    sets, the circuit-size profile per element.
    """
    if (m1.n, m1.rank, len(m1.bases)) != (m2.n, m2.rank, len(m2.bases)):
        return None
    n = m1.n
    if m1.rank == 0:
        return list(range(n))
    use_circ = n <= 12
    p1 = _element_profile(m1, use_circ)
    p2 = _element_profile(m2, use_circ)
    if sorted(p1) != sorted(p2):
        return None
    cands = [[j for j in range(n) if p2[j] == p1[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: (len(cands[i]), i))
    pos = {e: k for k, e in enumerate(order)}
    done_at = [[] for _ in range(n)]
    for b in m1.bases:
        done_at[max(pos[i] for i in elems(b))].append(b)
    bset2 = set(m2.bases)
    t1, t2 = m1._list(), m2._list()
    img = [-1] * n
    used = [False] * n

    def place(k: int) -> bool:
        if k == n:
            return True
        e = order[k]
        be = 1 << e
        for f in cands[e]:
            if used[f]:
                continue
            bf = 1 << f
            ok = True
            for e0 in order[:k]:
                if t1[be | (1 << e0)] != t2[bf | (1 << img[e0])]:
                    ok = False
                    break
            if not ok:
                continue
            img[e] = f
            used[f] = True
            if all(mask_of(img[i] for i in elems(b)) in bset2
                   for b in done_at[k]) and place(k + 1):
                return True
            used[f] = False
            img[e] = -1
        return False

    if place(0):
        return list(img)
    return None
