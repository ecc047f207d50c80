"""Finite groups as dense index tables: builders, validation, file IO, conjugacy."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, List, Optional, Sequence

import numpy as np

__all__ = [
    "FiniteGroup",
    "ConjugacyStructure",
    "CayleyTableError",
    "group_from_table",
    "build_cyclic",
    "build_symmetric",
    "build_alternating",
    "build_sl2",
    "build_psl2",
    "load_cayley_table",
    "format_cayley_table",
    "conjugacy_classes",
    "commutator_subgroup",
]

MAX_ORDER = 5040
EXHAUSTIVE_ASSOC_LIMIT = 256
RANDOM_ASSOC_TRIPLES = 100_000
_ASSOC_SEED = 0x6173_736F  # fixed, so randomized validation is reproducible

_SL2_PRIMES = (3, 5, 7, 11, 13)


class CayleyTableError(ValueError):
    """A multiplication table violates one of the group axioms."""


@dataclass(eq=False)
class FiniteGroup:
    """A finite group on elements 0..order-1 with dense multiplication tables.

    ``mul[i, j]`` is the product i*j, ``inv[i]`` the inverse of i.  Instances
    are immutable after construction; derived tables are cached lazily (the
    races that can occur when two threads fill a cache are benign because both
    compute the same array).
    """

    order: int
    mul: np.ndarray
    inv: np.ndarray
    identity: int
    name: str
    assoc_check: str = "exhaustive"

    def __post_init__(self):
        self.mul = np.ascontiguousarray(self.mul, dtype=np.int32)
        self.inv = np.ascontiguousarray(self.inv, dtype=np.int32)
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)
        self._conj_table: Optional[np.ndarray] = None

    def elements(self) -> range:
        return range(self.order)

    def product(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def commutator(self, a: int, b: int) -> int:
        """a * b * a^-1 * b^-1."""
        ab = self.mul[a, b]
        return int(self.mul[self.mul[ab, self.inv[a]], self.inv[b]])

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def conjugation_table(self) -> np.ndarray:
        """(n, n) table with entry [g, x] = g * x * g^-1, cached."""
        if self._conj_table is None:
            table = self.mul[self.mul, self.inv[:, None]]
            table.setflags(write=False)
            self._conj_table = table
        return self._conj_table


@dataclass(eq=False)
class ConjugacyStructure:
    """Partition of a group into conjugacy classes, in canonical order.

    Classes are numbered by their smallest member.  ``class_of[x]`` is the
    class index of element x, ``representatives[c]`` its smallest member and
    ``class_sizes[c]`` its size.
    """

    class_of: np.ndarray
    representatives: np.ndarray
    class_sizes: np.ndarray
    num_classes: int


def _find_duplicate(row: np.ndarray) -> int:
    counts = np.bincount(row, minlength=len(row))
    return int(np.argmax(counts > 1))


def _associativity_violation(mul: np.ndarray) -> tuple:
    """Return (mode, offending triple or None)."""
    n = len(mul)
    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        for a in range(n):
            left = mul[mul[a]]  # [b, c] -> (a*b)*c
            right = mul[a][mul]  # [b, c] -> a*(b*c)
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                return "exhaustive", (a, int(b), int(c))
        return "exhaustive", None
    rng = np.random.default_rng(_ASSOC_SEED)
    a, b, c = rng.integers(0, n, size=(3, RANDOM_ASSOC_TRIPLES))
    bad = mul[mul[a, b], c] != mul[a, mul[b, c]]
    if bad.any():
        i = int(np.argmax(bad))
        return f"randomized({RANDOM_ASSOC_TRIPLES})", (int(a[i]), int(b[i]), int(c[i]))
    return f"randomized({RANDOM_ASSOC_TRIPLES})", None


def group_from_table(mul, name: str = "table") -> FiniteGroup:
    """Validate a raw multiplication table and wrap it as a FiniteGroup.

    Checks, in order: shape, entry range, Latin-square rows and columns,
    two-sided identity, two-sided inverses, associativity (exhaustive up to
    order 256, randomized sampling above that).  Violations raise
    CayleyTableError naming an offending index.
    """
    mul = np.asarray(mul)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
        raise CayleyTableError(f"table must be square, got shape {mul.shape}")
    n = mul.shape[0]
    if n == 0:
        raise CayleyTableError("order 0 is not a group")
    if n > MAX_ORDER:
        raise CayleyTableError(f"order {n} exceeds the supported cap {MAX_ORDER}")
    if mul.min() < 0 or mul.max() >= n:
        bad = np.argwhere((mul < 0) | (mul >= n))[0]
        raise CayleyTableError(
            f"entry at row {bad[0]}, column {bad[1]} is outside 0..{n - 1}"
        )
    mul = mul.astype(np.int32)

    expect = np.arange(n, dtype=np.int32)
    for i in range(n):
        if not np.array_equal(np.sort(mul[i]), expect):
            raise CayleyTableError(
                f"row {i} is not a permutation (element {_find_duplicate(mul[i])} repeats)"
            )
    for j in range(n):
        col = mul[:, j]
        if not np.array_equal(np.sort(col), expect):
            raise CayleyTableError(
                f"column {j} is not a permutation (element {_find_duplicate(col)} repeats)"
            )

    left_ids = np.nonzero((mul == expect[None, :]).all(axis=1))[0]
    identity = -1
    for e in left_ids:
        if np.array_equal(mul[:, e], expect):
            identity = int(e)
            break
    if identity < 0:
        raise CayleyTableError("no two-sided identity element")

    inv = np.argmax(mul == identity, axis=1).astype(np.int32)
    if not np.array_equal(mul[expect, inv], np.full(n, identity, np.int32)):
        i = int(np.argmax(mul[expect, inv] != identity))
        raise CayleyTableError(f"element {i} has no right inverse")
    if not np.array_equal(mul[inv, expect], np.full(n, identity, np.int32)):
        i = int(np.argmax(mul[inv, expect] != identity))
        raise CayleyTableError(f"inverse of element {i} is not two-sided")

    mode, triple = _associativity_violation(mul)
    if triple is not None:
        raise CayleyTableError(f"associativity fails at triple {triple}")

    return FiniteGroup(n, mul, inv, identity, name, assoc_check=mode)


# ---------------------------------------------------------------------------
# builders


def build_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n; element i is the residue i, product = addition mod n."""
    if n < 1:
        raise ValueError(f"cyclic order must be >= 1, got {n}")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the supported cap {MAX_ORDER}")
    idx = np.arange(n)
    mul = np.add.outer(idx, idx) % n
    return group_from_table(mul, name=f"z:{n}")


def _perm_group(perms: np.ndarray, name: str) -> FiniteGroup:
    m = perms.shape[1]
    weights = (m ** np.arange(m - 1, -1, -1)).astype(np.int64)
    keys = perms @ weights  # ascending, since perms are listed lexicographically
    n = len(perms)
    mul = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        comp = perms[i][perms]  # [j, x] = p_i(p_j(x))
        mul[i] = np.searchsorted(keys, comp @ weights)
    return group_from_table(mul, name=name)


def _perm_signs(perms: np.ndarray) -> np.ndarray:
    m = perms.shape[1]
    inversions = np.zeros(len(perms), dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            inversions += perms[:, i] > perms[:, j]
    return inversions % 2  # 0 = even


def build_symmetric(m: int) -> FiniteGroup:
    """Symmetric group on m letters (2 <= m <= 7), permutations in lexicographic order."""
    if not 2 <= m <= 7:
        raise ValueError(f"symmetric group supported for 2 <= m <= 7, got {m}")
    perms = np.array(list(permutations(range(m))), dtype=np.int64)
    return _perm_group(perms, name=f"s:{m}")


def build_alternating(m: int) -> FiniteGroup:
    """Alternating group on m letters (2 <= m <= 7): even permutations, lexicographic."""
    if not 2 <= m <= 7:
        raise ValueError(f"alternating group supported for 2 <= m <= 7, got {m}")
    perms = np.array(list(permutations(range(m))), dtype=np.int64)
    perms = perms[_perm_signs(perms) == 0]
    return _perm_group(perms, name=f"a:{m}")


def _check_sl2_prime(p: int) -> None:
    if p not in _SL2_PRIMES:
        raise ValueError(f"matrix groups supported for prime moduli {_SL2_PRIMES}, got {p}")


def _sl2_matrices(p: int) -> np.ndarray:
    """All 2x2 matrices (a, b, c, d) over Z_p with ad - bc = 1, lexicographic."""
    grid = np.indices((p, p, p, p)).reshape(4, -1).T.astype(np.int64)
    a, b, c, d = grid.T
    keep = (a * d - b * c) % p == 1
    return grid[keep]


def _sl2_codes(mats: np.ndarray, p: int) -> np.ndarray:
    a, b, c, d = mats.T
    return ((a * p + b) * p + c) * p + d


def _matmul_mod(row: np.ndarray, mats: np.ndarray, p: int) -> np.ndarray:
    a1, b1, c1, d1 = (int(v) for v in row)
    a2, b2, c2, d2 = mats.T
    return np.stack(
        [
            (a1 * a2 + b1 * c2) % p,
            (a1 * b2 + b1 * d2) % p,
            (c1 * a2 + d1 * c2) % p,
            (c1 * b2 + d1 * d2) % p,
        ],
        axis=1,
    )


def build_sl2(p: int) -> FiniteGroup:
    """Special linear group SL(2, p) for prime p in 3..13.

    Elements are the determinant-1 matrices [[a, b], [c, d]] over Z_p in
    lexicographic order of (a, b, c, d).
    """
    _check_sl2_prime(p)
    mats = _sl2_matrices(p)
    n = len(mats)
    lookup = np.full(p**4, -1, dtype=np.int32)
    lookup[_sl2_codes(mats, p)] = np.arange(n, dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        mul[i] = lookup[_sl2_codes(_matmul_mod(mats[i], mats, p), p)]
    return group_from_table(mul, name=f"sl2:{p}")


def build_psl2(p: int) -> FiniteGroup:
    """Projective group PSL(2, p) = SL(2, p) / {I, -I} for prime p in 3..13.

    Each coset {M, -M} is represented by whichever matrix has the
    lexicographically smaller entry tuple; representatives are enumerated in
    lexicographic order.
    """
    _check_sl2_prime(p)
    mats = _sl2_matrices(p)
    codes = _sl2_codes(mats, p)
    neg_codes = _sl2_codes((-mats) % p, p)
    canonical = np.minimum(codes, neg_codes)
    reps = mats[codes == canonical]
    n = len(reps)
    lookup = np.full(p**4, -1, dtype=np.int32)
    rep_codes = _sl2_codes(reps, p)
    neg_rep_codes = _sl2_codes((-reps) % p, p)
    lookup[rep_codes] = np.arange(n, dtype=np.int32)
    lookup[neg_rep_codes] = np.arange(n, dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        mul[i] = lookup[_sl2_codes(_matmul_mod(reps[i], reps, p), p)]
    return group_from_table(mul, name=f"psl2:{p}")


# ---------------------------------------------------------------------------
# Cayley-table text format


def load_cayley_table(text: str, name: str = "cayley") -> FiniteGroup:
    """Parse the plain-text Cayley format and validate it as a group.

    Format: optional comment lines starting with '#', a line holding the
    order n, then n lines of n space-separated 0-based element indices
    (row i, column j holds i*j).  The identity is located by the identity
    law; it need not be element 0.
    """
    rows: List[List[int]] = []
    order: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise CayleyTableError(f"line {lineno}: non-integer token") from None
        if order is None:
            if len(values) != 1:
                raise CayleyTableError(f"line {lineno}: expected a single order value")
            order = values[0]
            if order < 1:
                raise CayleyTableError(f"line {lineno}: order must be >= 1, got {order}")
            continue
        if len(values) != order:
            raise CayleyTableError(
                f"line {lineno}: expected {order} entries, got {len(values)}"
            )
        rows.append(values)
        if len(rows) > order:
            raise CayleyTableError(f"line {lineno}: more than {order} table rows")
    if order is None:
        raise CayleyTableError("empty input: no order line")
    if len(rows) != order:
        raise CayleyTableError(f"expected {order} table rows, got {len(rows)}")
    return group_from_table(np.array(rows, dtype=np.int64), name=name)


def format_cayley_table(group: FiniteGroup) -> str:
    """Render a group in the Cayley text format (round-trips through the loader)."""
    lines = [f"# {group.name}", str(group.order)]
    lines.extend(" ".join(str(int(v)) for v in row) for row in group.mul)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# conjugacy and commutators


def conjugacy_classes(group: FiniteGroup) -> ConjugacyStructure:
    """Partition the group into conjugation orbits, classes ordered by smallest member."""
    n = group.order
    conj = group.conjugation_table()
    class_of = np.full(n, -1, dtype=np.int32)
    reps: List[int] = []
    sizes: List[int] = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        orbit = np.unique(conj[:, x])
        class_of[orbit] = len(reps)
        reps.append(x)
        sizes.append(len(orbit))
    sizes_arr = np.array(sizes, dtype=np.int64)
    if sizes_arr.sum() != n or (class_of < 0).any():
        raise RuntimeError("conjugacy orbits do not partition the group")
    if sizes_arr[class_of[group.identity]] != 1:
        raise RuntimeError("identity class is not a singleton")
    if (n % sizes_arr != 0).any():
        c = int(np.argmax(n % sizes_arr != 0))
        raise RuntimeError(f"class {c} size {sizes_arr[c]} does not divide {n}")
    return ConjugacyStructure(
        class_of=class_of,
        representatives=np.array(reps, dtype=np.int32),
        class_sizes=sizes_arr,
        num_classes=len(reps),
    )


def commutator_subgroup(group: FiniteGroup) -> frozenset:
    """Element indices of the subgroup generated by all commutators."""
    mul, inv = group.mul, group.inv
    inside = mul[mul, inv[:, None]]  # [a, b] = a*b*a^-1
    comms = mul[inside, inv[None, :]]  # [a, b] = a*b*a^-1*b^-1
    current = np.unique(comms)
    while True:
        products = np.unique(mul[np.ix_(current, current)])
        merged = np.union1d(current, products)
        if len(merged) == len(current):
            break
        current = merged
    return frozenset(int(x) for x in current)
