"""Slow, independent reference implementations used to cross-check the package.

Everything here works straight from the multiplication table with plain loops
or a deliberately different linear-algebra route, avoiding the package's own
vectorized kernels.  These are the "second set of books" for the test suite:
when a fast implementation and an oracle agree to near machine precision, a
shared bug is about the only way both could be wrong in the same place.
"""

import numpy as np


def brute_conjugacy_partition(group):
    """Conjugation orbits as a set of frozensets, via scalar products only."""
    orbits = set()
    for x in group.elements():
        orbit = set()
        for g in group.elements():
            gx = group.product(g, x)
            orbit.add(group.product(gx, group.inverse(g)))
        orbits.add(frozenset(orbit))
    return orbits


def regular_degrees(group, rng, attempts=8):
    """Irreducible degree multiset via the regular-representation commutant.

    A random class function c with c(g^-1) = conj(c(g)) yields a Hermitian
    matrix Z[x, y] = c(x·y^-1) commuting with the regular action.  Its
    eigenvalue clusters have sizes d², one per irreducible of degree d, so
    the sorted degree list falls out of plain eigvalsh multiplicities.
    Retries with a fresh c if two clusters happen to collide.
    """
    n = group.order
    partition = sorted(brute_conjugacy_partition(group), key=min)
    class_of = np.empty(n, dtype=np.int64)
    for idx, cls in enumerate(partition):
        for x in cls:
            class_of[x] = idx

    inv_class = np.empty(len(partition), dtype=np.int64)
    for idx, cls in enumerate(partition):
        inv_class[idx] = class_of[group.inverse(min(cls))]

    for _ in range(attempts):
        raw = rng.standard_normal(len(partition)) + 1j * rng.standard_normal(len(partition))
        sym = (raw + np.conj(raw[inv_class])) / 2  # c(g^-1) = conj(c(g))
        c = sym[class_of]
        Z = np.empty((n, n), dtype=np.complex128)
        for x in range(n):
            for y in range(n):
                Z[x, y] = c[group.product(x, group.inverse(y))]
        evals = np.sort(np.linalg.eigvalsh(Z))
        scale = max(1.0, float(np.abs(evals).max()))
        clusters = []
        start = 0
        for i in range(1, n + 1):
            if i == n or evals[i] - evals[i - 1] > 1e-6 * scale:
                clusters.append(i - start)
                start = i
        degrees = []
        ok = True
        for size in clusters:
            d = round(size**0.5)
            if d * d != size:
                ok = False
                break
            degrees.append(d)
        if ok and sum(d * d for d in degrees) == n:
            return sorted(degrees)
    raise RuntimeError("degree oracle failed to separate eigenvalue clusters")


def brute_class_constant(group, class_i, class_j, target_z):
    """Count pairs (x, y) in C_i x C_j with x·y = target_z, by plain loops."""
    count = 0
    for x in class_i:
        for y in class_j:
            if group.product(x, y) == target_z:
                count += 1
    return count


def brute_class_average(group, values):
    """Class averages via the orbit partition, no bincount."""
    out = np.empty(group.order, dtype=np.complex128)
    for cls in brute_conjugacy_partition(group):
        members = sorted(cls)
        avg = sum(values[m] for m in members) / len(members)
        for m in members:
            out[m] = avg
    return out


def brute_cond_exp_diag(group, dense):
    """(x, y) -> (1/n) sum_g F(gx, gy), cubic loops."""
    n = group.order
    out = np.empty((n, n), dtype=np.complex128)
    for x in range(n):
        for y in range(n):
            s = 0.0 + 0.0j
            for g in range(n):
                s += dense[group.product(g, x), group.product(g, y)]
            out[x, y] = s / n
    return out


def brute_fixed_tensor(group, u, v):
    """(x, y) -> (1/n) sum_g u(gxg^-1) v(gyg^-1), cubic loops."""
    n = group.order
    out = np.empty((n, n), dtype=np.complex128)
    for x in range(n):
        for y in range(n):
            s = 0.0 + 0.0j
            for g in range(n):
                s += u[group.conjugate(g, x)] * v[group.conjugate(g, y)]
            out[x, y] = s / n
    return out


def brute_theorem_lhs(group, f1, f2, f3):
    """Averaged triple-correlation deviation, scalar loops only."""
    n = group.order
    e2 = brute_class_average(group, f2)
    e3 = brute_class_average(group, f3)
    structured = (sum(f1) / n) * (sum(e2[x] * e3[x] for x in range(n)) / n)
    total = 0.0
    for g in range(n):
        inner = sum(
            f1[x] * f2[group.product(g, x)] * f3[group.product(x, g)] for x in range(n)
        ) / n
        total += abs(inner - structured)
    return total / n


def brute_step1_lhs(group, f1, f2, f3):
    n = group.order
    total = 0.0
    for g in range(n):
        inner = sum(
            f1[x] * f2[group.product(g, x)] * f3[group.product(x, g)] for x in range(n)
        ) / n
        total += abs(inner)
    return total / n


def brute_step2_squared(group, f1, f2, f3):
    """(1/n) sum_g |(1/n) sum_x f3(x) f1(xg^-1) f2(gxg^-1)|², scalar loops."""
    n = group.order
    total = 0.0
    for g in range(n):
        ginv = group.inverse(g)
        inner = 0.0 + 0.0j
        for x in range(n):
            inner += f3[x] * f1[group.product(x, ginv)] * f2[group.conjugate(g, x)]
        inner /= n
        total += abs(inner) ** 2
    return total / n


def brute_step2_pair_expansion(group, f1, f2, f3):
    """The same quantity through the two-variable pair functions F_i = f_i ⊗ conj(f_i).

    Triple (g, x, y) loops over the expanded integrand — the identity that
    licenses removing the absolute values in the second-moment step.
    """
    n = group.order

    def F(f, x, y):
        return f[x] * np.conj(f[y])

    total = 0.0 + 0.0j
    for g in range(n):
        ginv = group.inverse(g)
        s = 0.0 + 0.0j
        for x in range(n):
            for y in range(n):
                s += (
                    F(f3, x, y)
                    * F(f1, group.product(x, ginv), group.product(y, ginv))
                    * F(f2, group.conjugate(g, x), group.conjugate(g, y))
                )
        total += s / n**2
    return total / n


def brute_step3_quadruple(group, f1, f2):
    """Four-index (g, h, x, y) scalar loop for the expanded second moment.

    Computes ∫∫_{G²} ∫_{X²} F1T̃^g · conj(F1)T̃^{hg} · F2S̃^gT̃^g ·
    conj(F2)S̃^{hg}T̃^{hg} dμ⊗² dg dh with F_i = f_i ⊗ conj(f_i).
    """
    n = group.order

    def F(f, x, y):
        return f[x] * np.conj(f[y])

    total = 0.0 + 0.0j
    for g in range(n):
        for h in range(n):
            hg = group.product(h, g)
            ginv, hginv = group.inverse(g), group.inverse(hg)
            s = 0.0 + 0.0j
            for x in range(n):
                for y in range(n):
                    s += (
                        F(f1, group.product(x, ginv), group.product(y, ginv))
                        * np.conj(F(f1, group.product(x, hginv), group.product(y, hginv)))
                        * F(f2, group.conjugate(g, x), group.conjugate(g, y))
                        * np.conj(F(f2, group.conjugate(hg, x), group.conjugate(hg, y)))
                    )
            total += s / n**2
    return total / n**2


def brute_step3_second_moment(group, f1, f2):
    """∫_{X²} |∫_G F1T̃^g · F2S̃^gT̃^g dg|² dμ⊗² — the pre-expansion form."""
    n = group.order

    def F(f, x, y):
        return f[x] * np.conj(f[y])

    total = 0.0
    for x in range(n):
        for y in range(n):
            inner = 0.0 + 0.0j
            for g in range(n):
                ginv = group.inverse(g)
                inner += F(f1, group.product(x, ginv), group.product(y, ginv)) * F(
                    f2, group.conjugate(g, x), group.conjugate(g, y)
                )
            total += abs(inner / n) ** 2
    return total / n**2


def brute_step4_final(group, f1, f2):
    n = group.order
    total = 0.0
    for h in range(n):
        hinv = group.inverse(h)
        it = sum(f1[x] * np.conj(f1[group.product(x, hinv)]) for x in range(n)) / n
        ic = sum(f2[x] * np.conj(f2[group.conjugate(h, x)]) for x in range(n)) / n
        total += abs(it) ** 2 * abs(ic) ** 2
    return total / n


def brute_right_translation_corollary(group, f1):
    """(1/n) sum_h |<f1, f1(·h^-1)>|² for mean-zero f1 — the step4 cross-path."""
    n = group.order
    total = 0.0
    for h in range(n):
        hinv = group.inverse(h)
        ip = sum(f1[x] * np.conj(f1[group.product(x, hinv)]) for x in range(n)) / n
        total += abs(ip) ** 2
    return total / n
