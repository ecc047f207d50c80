"""Group actions, conditional expectations, tensor projections, and the bound calculus.

All integrals over the group use the uniform probability weight 1/n, and the
L² norm is always the probability-weighted one.  The quantities computed by
the ``*_lhs`` / ``step*`` methods are the left-hand sides of a chain of mixing
inequalities for triple correlations f1(x)·f2(gx)·f3(xg); each returns a
BoundCheck pairing the observed value with the bound implied by the group's
quasi-randomness degree D.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ._numutil import abs2, digest_arrays, l2mu
from .groups import FiniteGroup
from .spectra import SpectralData, spectral_data

__all__ = [
    "GroupFunction",
    "PairFunction",
    "BoundCheck",
    "ConstraintError",
    "Harmonic",
    "harmonic_for",
    "centered",
    "sample_disc",
    "sample_unit",
]

DISC_TOL = 1e-12
IMAG_RESIDUE_TOL = 1e-9
PAIR_SIZE_CAP = 2000
STEP2_IDENTITY_TOL = 1e-10


class ConstraintError(ValueError):
    """An input violates a declared range or normalization constraint."""


@dataclass(eq=False)
class GroupFunction:
    """A complex function on group elements, with optional verified range flags.

    ``disc_valued`` asserts |f(x)| ≤ 1 everywhere, ``two_disc_valued`` asserts
    |f(x)| ≤ 2, and ``mean_zero`` asserts the mean vanishes; each flag is
    checked at construction (tolerance 1e-12) and trusted afterwards.
    """

    values: np.ndarray
    disc_valued: bool = False
    mean_zero: bool = False
    two_disc_valued: bool = False

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=np.complex128)
        if vals.ndim != 1 or len(vals) == 0:
            raise ConstraintError(f"values must be a nonempty vector, got shape {vals.shape}")
        if self.disc_valued:
            worst = float(np.abs(vals).max())
            if worst > 1.0 + DISC_TOL:
                raise ConstraintError(f"disc_valued set but max |f| = {worst}")
        if self.two_disc_valued:
            worst = float(np.abs(vals).max())
            if worst > 2.0 + DISC_TOL:
                raise ConstraintError(f"two_disc_valued set but max |f| = {worst}")
        if self.mean_zero:
            m = abs(complex(vals.mean()))
            if m > DISC_TOL:
                raise ConstraintError(f"mean_zero set but |mean| = {m}")
        vals.setflags(write=False)
        self.values = vals

    def __len__(self) -> int:
        return len(self.values)

    @property
    def mean(self) -> complex:
        return complex(self.values.mean())

    @property
    def norm2(self) -> float:
        """L² norm under the uniform probability weight."""
        return l2mu(self.values)


@dataclass(eq=False)
class PairFunction:
    """A complex function on ordered pairs, dense or factored.

    Factored form stores (left, right) with value(x, y) = left[x]·right[y];
    dense form stores the full matrix.  ``dense()`` materializes either form.
    """

    left: Optional[np.ndarray] = None
    right: Optional[np.ndarray] = None
    matrix: Optional[np.ndarray] = None

    @classmethod
    def tensor(cls, left, right) -> "PairFunction":
        left = np.ascontiguousarray(left, dtype=np.complex128)
        right = np.ascontiguousarray(right, dtype=np.complex128)
        if left.shape != right.shape or left.ndim != 1:
            raise ConstraintError("tensor factors must be equal-length vectors")
        return cls(left=left, right=right)

    @classmethod
    def from_dense(cls, matrix) -> "PairFunction":
        matrix = np.ascontiguousarray(matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ConstraintError(f"dense pair function must be square, got {matrix.shape}")
        return cls(matrix=matrix)

    @property
    def is_factored(self) -> bool:
        return self.matrix is None

    @property
    def n(self) -> int:
        return len(self.left) if self.is_factored else self.matrix.shape[0]

    def at(self, x: int, y: int) -> complex:
        if self.is_factored:
            return complex(self.left[x] * self.right[y])
        return complex(self.matrix[x, y])

    def dense(self) -> np.ndarray:
        if self.is_factored:
            return np.outer(self.left, self.right)
        return self.matrix

    def norm2(self) -> float:
        """L² norm under the product probability weight."""
        if self.is_factored:
            return l2mu(self.left) * l2mu(self.right)
        return l2mu(self.matrix)


@dataclass(frozen=True)
class BoundCheck:
    """One observed quantity against its degree-driven bound.

    margin = bound − observed and is recorded even when negative; a negative
    margin is a failure the caller must surface, never something to clamp.
    """

    quantity_name: str
    observed: float
    bound: float
    margin: float
    inputs_digest: str
    seed: Optional[int] = None


def centered(f: GroupFunction) -> GroupFunction:
    """Subtract the mean of a disc-valued function.

    The result has range in the radius-2 disc with mean zero and L² norm
    ≤ 1 automatically (‖f − mean‖₂² = ‖f‖₂² − |mean|² ≤ 1), which is exactly
    the normalization the step checks require of their first argument.
    """
    if not f.disc_valued:
        raise ConstraintError("centered() expects a disc_valued function")
    vals = f.values - f.values.mean()
    return GroupFunction(vals, two_disc_valued=True, mean_zero=True)


def sample_disc(n: int, rng: np.random.Generator, mode: str = "phase") -> GroupFunction:
    """Random disc-valued function: unit phases by default, or uniform in the disc.

    Phase mode puts every value on the boundary — the extreme points of the
    constraint set, which stress the inequalities hardest.
    """
    if mode == "phase":
        vals = np.exp(2j * np.pi * rng.random(n))
    elif mode == "disc":
        vals = np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
    else:
        raise ValueError(f"unknown sampling mode {mode!r}")
    return GroupFunction(vals, disc_valued=True)


def sample_unit(n: int, rng: np.random.Generator) -> GroupFunction:
    """Random function with L²(μ) norm exactly 1 (complex Gaussian, normalized)."""
    while True:
        vals = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        norm = l2mu(vals)
        if norm > 1e-12:
            return GroupFunction(vals / norm)


def _real_nonnegative(value: complex, what: str) -> float:
    """Take the real part of a quantity that is real and ≥ 0 by symmetry.

    The imaginary residue and any negative excursion must both be numerical
    dust (< 1e-9); anything larger means a symmetry was violated upstream and
    is raised as a hard failure.
    """
    if abs(value.imag) > IMAG_RESIDUE_TOL:
        raise RuntimeError(f"{what}: imaginary residue {value.imag} exceeds {IMAG_RESIDUE_TOL}")
    real = value.real
    if real < 0.0:
        if real < -IMAG_RESIDUE_TOL:
            raise RuntimeError(f"{what}: negative value {real} for a nonnegative quantity")
        real = 0.0
    return float(real)


@dataclass(eq=False)
class Harmonic:
    """Bound calculus over one group's spectral data.

    Wraps a SpectralData bundle and exposes the actions, conditional
    expectations and inequality left-hand sides as methods.  All methods are
    pure; results depend only on the inputs.
    """

    spectral: SpectralData

    def __post_init__(self):
        self.group: FiniteGroup = self.spectral.group
        self.n: int = self.group.order
        self.mul = self.group.mul
        self.inv = self.group.inv
        self.conj = self.group.conjugation_table()

    # -- degree-driven bounds ------------------------------------------------

    @property
    def degree(self) -> Optional[int]:
        """Quasi-randomness degree D; None for the trivial group."""
        return self.spectral.quasirandomness.degree

    def degree_power(self, power: float) -> float:
        """D**power, with the trivial-group convention that the bound is 0.

        The trivial group has no nontrivial representations at all, so it is
        vacuously quasi-random of every degree; every D-power bound collapses
        to 0, and its observables are exactly 0.
        """
        if self.degree is None:
            return 0.0
        return float(self.degree) ** power

    def _check(
        self,
        name: str,
        observed: float,
        bound: float,
        inputs: Tuple[np.ndarray, ...],
        seed: Optional[int],
    ) -> BoundCheck:
        digest = digest_arrays(self.group.name, name, *inputs)
        return BoundCheck(
            quantity_name=name,
            observed=observed,
            bound=bound,
            margin=bound - observed,
            inputs_digest=digest,
            seed=seed,
        )

    def _require(self, f: GroupFunction, name: str, **flags) -> None:
        if len(f) != self.n:
            raise ConstraintError(f"{name} has length {len(f)}, group order is {self.n}")
        if flags.get("disc") and not f.disc_valued:
            raise ConstraintError(f"{name} must be disc_valued")
        if flags.get("mean_zero") and not f.mean_zero:
            raise ConstraintError(f"{name} must be mean_zero")
        if flags.get("two_disc") and not f.two_disc_valued:
            raise ConstraintError(f"{name} must be two_disc_valued")
        if flags.get("unit_l2") and f.norm2 > 1.0 + DISC_TOL:
            raise ConstraintError(f"{name} must have L2 norm <= 1, got {f.norm2}")

    def _cap(self, what: str) -> None:
        if self.n > PAIR_SIZE_CAP:
            raise ConstraintError(
                f"{what} needs dense pair storage; order {self.n} exceeds cap {PAIR_SIZE_CAP}"
            )

    # -- actions ---------------------------------------------------------------

    def _element(self, g: int) -> int:
        g = int(g)
        if not 0 <= g < self.n:
            raise ConstraintError(f"element index {g} outside 0..{self.n - 1}")
        return g

    def act_s(self, g: int, f: GroupFunction) -> GroupFunction:
        """Compose with left translation: returns x ↦ f(gx)."""
        return self._permuted(f, self.mul[self._element(g)])

    def act_t(self, g: int, f: GroupFunction) -> GroupFunction:
        """Compose with right translation: returns x ↦ f(xg⁻¹)."""
        return self._permuted(f, self.mul[:, self.inv[self._element(g)]])

    def conj_action(self, g: int, f: GroupFunction) -> GroupFunction:
        """Compose with conjugation: returns x ↦ f(gxg⁻¹)."""
        return self._permuted(f, self.conj[self._element(g)])

    def _permuted(self, f: GroupFunction, perm: np.ndarray) -> GroupFunction:
        self._require(f, "f")
        return GroupFunction(
            f.values[perm],
            disc_valued=f.disc_valued,
            mean_zero=f.mean_zero,
            two_disc_valued=f.two_disc_valued,
        )

    # -- conditional expectations ------------------------------------------

    def _class_average(self, vals: np.ndarray) -> np.ndarray:
        cls = self.spectral.classes.class_of
        k = self.spectral.classes.num_classes
        sums = np.bincount(cls, weights=vals.real, minlength=k) + 1j * np.bincount(
            cls, weights=vals.imag, minlength=k
        )
        return (sums / self.spectral.classes.class_sizes)[cls]

    def cond_exp_conj(self, f: GroupFunction) -> GroupFunction:
        """Projection onto conjugation-invariant functions: average over each class."""
        self._require(f, "f")
        return GroupFunction(
            self._class_average(f.values),
            disc_valued=f.disc_valued,
            mean_zero=f.mean_zero,
            two_disc_valued=f.two_disc_valued,
        )

    def _diag_profile(self, F: PairFunction) -> np.ndarray:
        """φ(z) = (1/n) Σ_w F(w, wz): the one-variable profile of E(F | Δ)."""
        if F.n != self.n:
            raise ConstraintError(f"pair function size {F.n} does not match order {self.n}")
        if F.is_factored:
            return (F.left @ F.right[self.mul]) / self.n
        rows = F.matrix[np.arange(self.n)[:, None], self.mul]
        return rows.mean(axis=0)

    def cond_exp_diag(self, F: PairFunction) -> PairFunction:
        """Average F over simultaneous left translation of both coordinates.

        The result depends on (x, y) only through x⁻¹y, so it is computed as
        the profile φ(z) = (1/n) Σ_w F(w, wz) and re-expanded, costing O(n²)
        instead of the O(n³) of direct averaging.
        """
        self._cap("cond_exp_diag")
        phi = self._diag_profile(F)
        return PairFunction.from_dense(phi[self.mul[self.inv]])

    def proj_fixed_tensor(self, u: GroupFunction, v: GroupFunction) -> PairFunction:
        """Average u ⊗ v over the diagonal conjugation action on pairs."""
        self._cap("proj_fixed_tensor")
        self._require(u, "u")
        self._require(v, "v")
        U = u.values[self.conj]
        V = v.values[self.conj]
        return PairFunction.from_dense((U.T @ V) / self.n)

    # -- the inequality chain ------------------------------------------------

    def lemma_gap(
        self, u: GroupFunction, v: GroupFunction, seed: Optional[int] = None
    ) -> BoundCheck:
        """Distance between the fixed part of u ⊗ v and the tensor of fixed parts.

        observed = ‖P°(u⊗v) − E(u|Φ) ⊗ E(v|Φ)‖ in L²(μ⊗μ);
        bound = D^(-1/2)·‖u‖₂·‖v‖₂.
        """
        projected = self.proj_fixed_tensor(u, v).matrix
        cu = self._class_average(u.values)
        cv = self._class_average(v.values)
        # The tensor of fixed parts is evaluated through the same averaged
        # product kernel as the projection (class functions are fixed by the
        # gather), so the two terms cancel *exactly* — not just to rounding —
        # whenever u, v are already conjugation-invariant.
        fixed = (cu[self.conj].T @ cv[self.conj]) / self.n
        diff = projected - fixed
        observed = float(np.sqrt(np.mean(abs2(diff))))
        bound = self.degree_power(-0.5) * u.norm2 * v.norm2
        return self._check("lemma", observed, bound, (u.values, v.values), seed)

    def corollary_lhs(
        self, u: GroupFunction, v: GroupFunction, seed: Optional[int] = None
    ) -> Tuple[BoundCheck, BoundCheck]:
        """Mean-square deviation of the conjugation matrix coefficient.

        observed = (1/n) Σ_g |⟨u, π^g v⟩ − ⟨E(u|Φ), E(v|Φ)⟩|² for the
        conjugation action π.  Two checks are returned for the same observed
        value: the D^(-1/2)·‖u‖₂²‖v‖₂² bound, and the sharper D^(-1) variant.
        """
        self._require(u, "u")
        self._require(v, "v")
        inner = (np.conj(v.values)[self.conj] @ u.values) / self.n
        cu = self._class_average(u.values)
        cv = self._class_average(v.values)
        # ⟨E(u|Φ), E(v|Φ)⟩ re-evaluated per g through the identical gather and
        # product kernel; conjugation fixes class functions, so every entry is
        # the same inner product, and the subtraction cancels exactly when u, v
        # are themselves class functions (trivial and abelian groups included).
        fixed_term = (np.conj(cv)[self.conj] @ cu) / self.n
        observed = float(np.mean(abs2(inner - fixed_term)))
        scale = u.norm2**2 * v.norm2**2
        inputs = (u.values, v.values)
        published = self._check(
            "corollary", observed, self.degree_power(-0.5) * scale, inputs, seed
        )
        sharp = self._check(
            "corollary_sharp", observed, self.degree_power(-1.0) * scale, inputs, seed
        )
        return published, sharp

    def _triple_inner(
        self, f1: GroupFunction, f2: GroupFunction, f3: GroupFunction
    ) -> np.ndarray:
        """inner[g] = (1/n) Σ_x f1(x)·f2(gx)·f3(xg).

        Reduced with an elementwise triple product and a mean rather than a
        matrix-vector product; theorem_lhs evaluates its structured term
        through this same kernel shape so the two cancel exactly (not just to
        rounding) on the one-element group.
        """
        A = f2.values[self.mul]
        B = f3.values[self.mul.T]
        return np.mean(A * B * f1.values[None, :], axis=1)

    def theorem_lhs(
        self,
        f1: GroupFunction,
        f2: GroupFunction,
        f3: GroupFunction,
        seed: Optional[int] = None,
    ) -> BoundCheck:
        """Averaged deviation of the triple correlation from its structured product.

        observed = (1/n) Σ_g |(1/n) Σ_x f1(x)f2(gx)f3(xg)
                              − mean(f1)·(1/n) Σ_x E(f2|Φ)(x)E(f3|Φ)(x)|;
        bound = 4·D^(-1/8).  Disc-valued inputs force observed ≤ 2, which is
        asserted unconditionally (a violation is an implementation bug).
        """
        for f, name in ((f1, "f1"), (f2, "f2"), (f3, "f3")):
            self._require(f, name, disc=True)
        inner = self._triple_inner(f1, f2, f3)
        e2 = self._class_average(f2.values)
        e3 = self._class_average(f3.values)
        # Same elementwise product-then-mean kernel as _triple_inner (the
        # vectorized multiply may fuse differently from scalar arithmetic), so
        # the deviation cancels bitwise on the one-element group.
        m1 = np.full(self.n, f1.values.mean())
        structured = complex(np.mean(e2 * e3 * m1))
        observed = float(np.mean(np.abs(inner - structured)))
        if observed > 2.0 + 1e-9:
            raise RuntimeError(f"triple correlation deviation {observed} exceeds the ceiling 2")
        bound = 4.0 * self.degree_power(-0.125)
        return self._check("theorem", observed, bound, (f1.values, f2.values, f3.values), seed)

    def step1_reduced_lhs(
        self,
        f1: GroupFunction,
        f2: GroupFunction,
        f3: GroupFunction,
        seed: Optional[int] = None,
    ) -> BoundCheck:
        """First-moment form after centering f1.

        observed = (1/n) Σ_g |(1/n) Σ_x f1(x)f2(gx)f3(xg)| with f1 in the
        radius-2 disc, mean-zero, ‖f1‖₂ ≤ 1; bound = 3·D^(-1/8).
        """
        self._require(f1, "f1", two_disc=True, mean_zero=True, unit_l2=True)
        self._require(f2, "f2", disc=True)
        self._require(f3, "f3", disc=True)
        inner = self._triple_inner(f1, f2, f3)
        observed = float(np.mean(np.abs(inner)))
        bound = 3.0 * self.degree_power(-0.125)
        return self._check("step1", observed, bound, (f1.values, f2.values, f3.values), seed)

    def _twisted_row(
        self, f1: GroupFunction, f2: GroupFunction, f3: GroupFunction, g: int
    ) -> np.ndarray:
        """x ↦ f3(x)·f1(xg⁻¹)·f2(gxg⁻¹), the change-of-variables integrand."""
        return f3.values * f1.values[self.mul[:, self.inv[g]]] * f2.values[self.conj[g]]

    def step2_squared(
        self,
        f1: GroupFunction,
        f2: GroupFunction,
        f3: GroupFunction,
        seed: Optional[int] = None,
    ) -> BoundCheck:
        """Second-moment form with the absolute values removed.

        observed = (1/n) Σ_g |(1/n) Σ_x f3(x)·f1(xg⁻¹)·f2(gxg⁻¹)|²;
        bound = 5·D^(-1/4).  For a deterministic sample of g the squared inner
        integral is re-derived from the dense pair-function expansion
        (f_i ⊗ conj(f_i) integrated over X²) and must agree to 1e-10 — the
        identity that justifies removing the absolute values.
        """
        self._require(f1, "f1", two_disc=True, mean_zero=True, unit_l2=True)
        self._require(f2, "f2", disc=True)
        self._require(f3, "f3", disc=True)
        T1 = f1.values[self.mul[:, self.inv]].T  # [g, x] = f1(x·g⁻¹)
        C2 = f2.values[self.conj]  # [g, x] = f2(g·x·g⁻¹)
        inner = ((T1 * C2) @ f3.values) / self.n
        observed = float(np.mean(abs2(inner)))

        step = max(1, self.n // 8) if self.n <= 512 else max(1, self.n // 3)
        for g in range(0, self.n, step):
            row = self._twisted_row(f1, f2, f3, g)
            expanded = complex(np.outer(row, np.conj(row)).mean())
            if abs(expanded - complex(abs2(inner[g]))) > STEP2_IDENTITY_TOL:
                raise RuntimeError(
                    f"pair-expansion identity failed at g={g}: "
                    f"|inner|²={abs2(inner[g])} vs expanded={expanded}"
                )
        bound = 5.0 * self.degree_power(-0.25)
        return self._check("step2", observed, bound, (f1.values, f2.values, f3.values), seed)

    def _conj_twist(self, f2: GroupFunction, h: int) -> np.ndarray:
        """a_h(x) = f2(x)·conj(f2(hxh⁻¹)) — the factored half of F2·conj(F2)∘(S̃T̃)^h."""
        return f2.values * np.conj(f2.values[self.conj[h]])

    def step3_intermediate(
        self, f1: GroupFunction, f2: GroupFunction, seed: Optional[int] = None
    ) -> BoundCheck:
        """Expanded two-variable form driven through the diagonal expectation.

        observed = (1/n) Σ_h ∫ F1·conj(F1)T̃^h·E(F2·conj(F2)S̃^hT̃^h | Δ) dμ⊗²
        with F_i = f_i ⊗ conj(f_i); bound = 25·D^(-1/2).  Each h-term reduces
        to profiles φ_h, ψ_h on single elements, so the total cost is O(n³).
        The value is real by the z ↦ z⁻¹ symmetry of the profiles; the
        imaginary residue is checked against 1e-9 before discarding.
        """
        self._require(f1, "f1", two_disc=True, mean_zero=True, unit_l2=True)
        self._require(f2, "f2", disc=True)
        n = self.n
        total = 0.0 + 0.0j
        for h in range(n):
            a = self._conj_twist(f2, h)
            phi = (a @ np.conj(a)[self.mul]) / n
            b = f1.values * np.conj(f1.values[self.mul[:, self.inv[h]]])
            psi = b @ np.conj(b)[self.mul]
            total += phi @ psi
        observed = _real_nonnegative(total / n**3, "step3_intermediate")
        bound = 25.0 * self.degree_power(-0.5)
        return self._check("step3", observed, bound, (f1.values, f2.values), seed)

    def step4_final(
        self, f1: GroupFunction, f2: GroupFunction, seed: Optional[int] = None
    ) -> BoundCheck:
        """Fully scalarized form: product of squared autocorrelation integrals.

        observed = (1/n) Σ_h |(1/n) Σ_x f1(x)conj(f1(xh⁻¹))|²
                           · |(1/n) Σ_x f2(x)conj(f2(hxh⁻¹))|²;
        bound = D^(-1/2) (absorbing ‖f1‖₂ ≤ 1 and ‖f2‖_∞ ≤ 1).
        """
        self._require(f1, "f1", mean_zero=True, unit_l2=True)
        self._require(f2, "f2", disc=True)
        inner_t = (f1.values @ np.conj(f1.values)[self.mul[:, self.inv]]) / self.n
        inner_c = (np.conj(f2.values)[self.conj] @ f2.values) / self.n
        observed = float(np.mean(abs2(inner_t) * abs2(inner_c)))
        bound = self.degree_power(-0.5)
        return self._check("step4", observed, bound, (f1.values, f2.values), seed)

    def step4_lemma_substitution(
        self, f2: GroupFunction, h: int, seed: Optional[int] = None
    ) -> BoundCheck:
        """Distance of the twisted diagonal expectation from its scalar mean.

        observed = ‖E(F2·conj(F2)S̃^hT̃^h | Δ) − |(1/n) Σ f2·conj(f2(h·h⁻¹))|²‖
        in L²(μ⊗μ); bound = D^(-1/2), for the single element h.
        """
        self._cap("step4_lemma_substitution")
        self._require(f2, "f2", disc=True)
        h = self._element(h)
        observed = self._substitution_distance(f2, h)
        bound = self.degree_power(-0.5)
        h_arr = np.array([h], dtype=np.int64)
        return self._check(
            "step4_lemma_substitution", observed, bound, (f2.values, h_arr), seed
        )

    def _substitution_distance(self, f2: GroupFunction, h: int) -> float:
        a = self._conj_twist(f2, h)
        phi = (a @ np.conj(a)[self.mul]) / self.n
        scalar = abs2(complex(a.mean()))
        return float(np.sqrt(np.mean(abs2(phi - scalar))))

    def step4_substitution_sweep(
        self, f2: GroupFunction, seed: Optional[int] = None
    ) -> BoundCheck:
        """Worst case of step4_lemma_substitution over every h in the group."""
        self._cap("step4_lemma_substitution")
        self._require(f2, "f2", disc=True)
        worst = 0.0
        for h in range(self.n):
            worst = max(worst, self._substitution_distance(f2, h))
        bound = self.degree_power(-0.5)
        return self._check("step4_lemma_substitution", worst, bound, (f2.values,), seed)


def harmonic_for(group: FiniteGroup, *, seed: int = 0) -> Harmonic:
    """Build the full spectral bundle for a group and wrap it for bound checks."""
    return Harmonic(spectral_data(group, seed=seed))
