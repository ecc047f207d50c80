"""Class algebra, numeric character tables, quasi-randomness degree, isotypic projections."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._numutil import abs2
from .groups import (
    ConjugacyStructure,
    FiniteGroup,
    commutator_subgroup,
    conjugacy_classes,
)

__all__ = [
    "ClassAlgebra",
    "CharacterTable",
    "QuasiRandomnessDegree",
    "SpectralData",
    "DegenerateSpectrumError",
    "SpectralInconsistencyError",
    "class_algebra",
    "character_table",
    "quasirandomness_degree",
    "spectral_data",
    "isotypic_project",
    "conjugation_multiplicity",
    "is_multiplicity_free",
]

DEFAULT_ORTHO_TOL = 1e-8
DEFAULT_DEGREE_TOL = 1e-6
DEFAULT_ATTEMPTS = 20
_SPECTRA_TAG = 0x5350


class DegenerateSpectrumError(RuntimeError):
    """Random class-matrix combinations kept producing a non-simple spectrum."""


class SpectralInconsistencyError(RuntimeError):
    """Character data contradicts an independent structural cross-check."""


@dataclass(eq=False)
class ClassAlgebra:
    """Integer structure constants of the conjugacy-class sums.

    With C_i the sum of class i in the group algebra,
    C_i * C_j = sum_l constants[i, j, l] * C_l.
    """

    constants: np.ndarray  # (k, k, k) int64


@dataclass(eq=False)
class CharacterTable:
    """Irreducible characters: values[r, c] is character r on class c.

    Rows are sorted by (degree, lexicographic rounded real parts); columns
    follow the canonical conjugacy-class order.  ``trivial_row`` indexes the
    all-ones row.
    """

    values: np.ndarray  # (k, k) complex128
    degrees: np.ndarray  # (k,) int64
    trivial_row: int


@dataclass(frozen=True)
class QuasiRandomnessDegree:
    """Minimal degree of a nontrivial irreducible character.

    ``degree`` is None for the trivial group (no nontrivial rows exist, so the
    group is vacuously quasi-random of every degree and every D-power bound is
    reported as 0).  ``witness_row`` indexes a minimizing table row.
    """

    degree: Optional[int]
    witness_row: Optional[int]


def class_algebra(group: FiniteGroup, classes: ConjugacyStructure) -> ClassAlgebra:
    """Structure constants via one pass over all products x*y.

    constants[i, j, l] counts, for a fixed z in class l, the pairs
    (x, y) in C_i x C_j with x*y = z; the count is the same for every such z.
    """
    k = classes.num_classes
    cls = classes.class_of.astype(np.int64)
    idx = (cls[:, None] * k + cls[None, :]) * k + cls[group.mul]
    counts = np.bincount(idx.ravel(), minlength=k**3).reshape(k, k, k)
    sizes = classes.class_sizes
    constants, remainder = np.divmod(counts, sizes[None, None, :])
    if remainder.any():
        raise SpectralInconsistencyError("class product counts not constant on classes")
    if not np.array_equal((constants * sizes[None, None, :]).sum(axis=2), np.outer(sizes, sizes)):
        raise SpectralInconsistencyError("class algebra row sums disagree with class sizes")
    return ClassAlgebra(constants)


def _sorted_rows(rows: np.ndarray, degrees: np.ndarray) -> np.ndarray:
    keys = []
    for r in range(len(rows)):
        re = tuple(np.round(rows[r].real, 6))
        im = tuple(np.round(rows[r].imag, 6))
        keys.append((int(degrees[r]), re, im, r))
    return np.array([key[-1] for key in sorted(keys)], dtype=np.int64)


def character_table(
    group: FiniteGroup,
    classes: ConjugacyStructure,
    algebra: Optional[ClassAlgebra] = None,
    *,
    rng: Optional[np.random.Generator] = None,
    ortho_tol: float = DEFAULT_ORTHO_TOL,
    degree_tol: float = DEFAULT_DEGREE_TOL,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> CharacterTable:
    """Compute the character table from the class algebra numerically.

    A random positive combination of the class multiplication matrices
    (M_i)[l, j] = constants[i, j, l] has the plain character rows as
    eigenvectors; simple eigenvalues identify them up to scale.  Each
    eigenvector is rescaled to satisfy row orthonormality in the weighted
    metric, phase-fixed so the identity-class entry (the degree) is real and
    positive, and the whole table is polished to the nearest weighted-unitary
    matrix.  Attempts with colliding eigenvalues are retried with fresh
    weights up to ``max_attempts`` before DegenerateSpectrumError is raised.
    """
    if algebra is None:
        algebra = class_algebra(group, classes)
    n = group.order
    k = classes.num_classes
    sizes = classes.class_sizes.astype(np.float64)
    id_class = int(classes.class_of[group.identity])
    mats = np.transpose(algebra.constants, (0, 2, 1)).astype(np.float64)
    if rng is None:
        rng = np.random.default_rng(np.random.SeedSequence((0, _SPECTRA_TAG)))
    weight = np.sqrt(sizes / n)

    failure = "no attempt made"
    for _ in range(max_attempts):
        coeffs = rng.uniform(1.0, 2.0, size=k)
        combined = np.tensordot(coeffs, mats, axes=1)
        evals, evecs = np.linalg.eig(combined)
        scale = max(1.0, float(np.abs(evals).max()))
        gaps = np.abs(evals[:, None] - evals[None, :])
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() < 1e-6 * scale:
            failure = "eigenvalue collision"
            continue

        rows = np.empty((k, k), dtype=np.complex128)
        usable = True
        for r in range(k):
            vec = evecs[:, r]
            norm = np.sqrt(float((sizes * abs2(vec)).sum()) / n)
            if not np.isfinite(norm) or norm < 1e-12:
                usable = False
                break
            vec = vec / norm
            pivot = vec[id_class]
            if abs(pivot) < 1e-8:
                usable = False
                break
            rows[r] = vec * (pivot.conjugate() / abs(pivot))
        if not usable:
            failure = "degenerate eigenvector"
            continue

        # Polish: snap the weighted table to the nearest unitary matrix, then
        # re-fix each row's phase.  This drives both orthogonality residues to
        # machine precision without moving any entry more than the original
        # eigensolver error.
        weighted = rows * weight[None, :]
        u_mat, _, vh_mat = np.linalg.svd(weighted)
        rows = (u_mat @ vh_mat) / weight[None, :]
        pivots = rows[:, id_class]
        if (np.abs(pivots) < 1e-8).any():
            failure = "vanishing degree entry"
            continue
        rows = rows * (pivots.conjugate() / np.abs(pivots))[:, None]

        raw_degrees = rows[:, id_class].real
        degrees = np.rint(raw_degrees).astype(np.int64)
        if np.abs(raw_degrees - degrees).max() > degree_tol or (degrees < 1).any():
            failure = "non-integral degree"
            continue
        if int((degrees**2).sum()) != n:
            failure = "degree squares do not sum to the order"
            continue

        order = _sorted_rows(rows, degrees)
        rows = rows[order]
        degrees = degrees[order]

        trivial_rows = np.nonzero(np.abs(rows - 1.0).max(axis=1) < 1e-6)[0]
        if len(trivial_rows) != 1:
            failure = "trivial row not unique"
            continue

        row_gram = (rows * (sizes / n)[None, :]) @ rows.conj().T
        if np.abs(row_gram - np.eye(k)).max() > ortho_tol:
            failure = "row orthogonality residue too large"
            continue
        col_gram = np.einsum("rc,rd->cd", rows, rows.conj())
        col_target = np.diag(n / sizes)
        if np.abs(col_gram - col_target).max() > ortho_tol:
            failure = "column orthogonality residue too large"
            continue

        return CharacterTable(rows, degrees, int(trivial_rows[0]))

    raise DegenerateSpectrumError(
        f"no usable spectrum after {max_attempts} attempts (last failure: {failure})"
    )


def quasirandomness_degree(table: CharacterTable, group_is_perfect: bool) -> QuasiRandomnessDegree:
    """Minimal nontrivial character degree, cross-checked against perfectness.

    The minimum is 1 exactly when the group has a nontrivial degree-1
    character, i.e. when the commutator subgroup is proper; a mismatch with
    the supplied perfectness flag raises SpectralInconsistencyError.
    """
    nontrivial = [r for r in range(len(table.degrees)) if r != table.trivial_row]
    if not nontrivial:
        if not group_is_perfect:
            raise SpectralInconsistencyError(
                "no nontrivial characters, yet the commutator subgroup is proper"
            )
        return QuasiRandomnessDegree(None, None)
    witness = min(nontrivial, key=lambda r: int(table.degrees[r]))
    degree = int(table.degrees[witness])
    if (degree == 1) != (not group_is_perfect):
        raise SpectralInconsistencyError(
            f"minimal nontrivial degree {degree} contradicts perfectness={group_is_perfect}"
        )
    return QuasiRandomnessDegree(degree, witness)


def isotypic_project(
    group: FiniteGroup,
    classes: ConjugacyStructure,
    table: CharacterTable,
    values: np.ndarray,
    row: int,
) -> np.ndarray:
    """Project a function onto one isotypic component of the conjugation action.

    Averaging the conjugation translates of f against the character:
    (P_r f)(x) = (d_r / n) * sum_h chi_r(h) f(h x h^-1).  The projections are
    idempotent, mutually orthogonal, and sum to the identity; the trivial row
    reproduces class averaging.
    """
    values = np.asarray(values, dtype=np.complex128)
    if values.shape != (group.order,):
        raise ValueError(f"expected {group.order} values, got shape {values.shape}")
    chi = table.values[row][classes.class_of]
    weights = (table.degrees[row] / group.order) * chi
    return weights @ values[group.conjugation_table()]


def conjugation_multiplicity(table: CharacterTable, row: int) -> int:
    """Multiplicity of character ``row`` in the conjugation action on functions.

    The conjugation action fixes |centralizer(g)| points at g, and pairing
    that fixed-point count with the character reduces to a plain sum of the
    conjugated character values over the classes.
    """
    total = np.conj(table.values[row]).sum()
    if abs(total.imag) > 1e-6 or abs(total.real - round(total.real)) > 1e-6:
        raise SpectralInconsistencyError(
            f"conjugation multiplicity of row {row} is not a clean integer: {total}"
        )
    m = int(round(total.real))
    if m < 0:
        raise SpectralInconsistencyError(f"negative multiplicity {m} for row {row}")
    return m


def is_multiplicity_free(
    group: FiniteGroup,
    classes: ConjugacyStructure,
    table: CharacterTable,
    row: int,
    rng: np.random.Generator,
) -> bool:
    """Detect multiplicity one via the rank of the isotypic projection.

    The projection rank equals multiplicity * degree, so probing with
    3*degree + 4 random vectors distinguishes rank == degree from any larger
    rank.  The result is cross-checked against the character-sum formula.
    """
    degree = int(table.degrees[row])
    probes = min(group.order, 3 * degree + 4)
    mat = np.empty((probes, group.order), dtype=np.complex128)
    for t in range(probes):
        probe = rng.standard_normal(group.order) + 1j * rng.standard_normal(group.order)
        mat[t] = isotypic_project(group, classes, table, probe, row)
    svals = np.linalg.svd(mat, compute_uv=False)
    rank = 0 if svals[0] < 1e-9 else int((svals > 1e-6 * svals[0]).sum())
    free = rank == degree
    if free != (conjugation_multiplicity(table, row) == 1):
        raise SpectralInconsistencyError(
            f"rank-based multiplicity detection disagrees with the character sum on row {row}"
        )
    return free


@dataclass(eq=False)
class SpectralData:
    """Bundle of everything the bound calculus needs about one group."""

    group: FiniteGroup
    classes: ConjugacyStructure
    algebra: ClassAlgebra
    table: CharacterTable
    quasirandomness: QuasiRandomnessDegree
    is_perfect: bool


def spectral_data(
    group: FiniteGroup,
    *,
    seed: int = 0,
    rng: Optional[np.random.Generator] = None,
    ortho_tol: float = DEFAULT_ORTHO_TOL,
    degree_tol: float = DEFAULT_DEGREE_TOL,
) -> SpectralData:
    """Compute classes, class algebra, character table and quasi-randomness degree."""
    classes = conjugacy_classes(group)
    algebra = class_algebra(group, classes)
    if rng is None:
        rng = np.random.default_rng(np.random.SeedSequence((seed, _SPECTRA_TAG)))
    table = character_table(
        group, classes, algebra, rng=rng, ortho_tol=ortho_tol, degree_tol=degree_tol
    )
    is_perfect = len(commutator_subgroup(group)) == group.order
    degree = quasirandomness_degree(table, is_perfect)
    return SpectralData(group, classes, algebra, table, degree, is_perfect)
