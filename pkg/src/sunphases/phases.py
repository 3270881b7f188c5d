"""Polar decomposition of ladder matrices and the phase operators built from it.

The ladder matrix C_ij is rank deficient, so its right polar factorization
C = E D fixes the unitary E only on the support of D = sqrt(C^dag C).  The
undetermined columns sit exactly over the kernel states (n_j = 0) and are
filled here by the SU(2)-invariant cyclic completion: each su(2) weight string
becomes a cycle, the wrap entry carrying a convention-dependent sign.

The group commutator of two completed phase operators measures how badly the
corresponding phases fail to be additive; `noncommutativity_norm` and `sweep`
quantify this across irreps and compare against the closed-form edge-counting
predictions.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
import scipy.linalg

from .basis import (
    OrderedBasis,
    Root,
    check_root,
    enumerate_basis,
    kernel_states,
    su2_strings,
)
from .generators import _check_spin, generator_matrix

#: Completion conventions: wrap phase of each cyclic string.
CONVENTION_PLUS = "su2-invariant-plus"
CONVENTION_PAPER_SIGN = "su2-invariant-paper-sign"
CONVENTION_RAW = "raw-partial"

_WRAP_PHASE = {CONVENTION_PLUS: 1.0, CONVENTION_PAPER_SIGN: -1.0}

_ALIASES = {
    "plus": CONVENTION_PLUS,
    "paper-sign": CONVENTION_PAPER_SIGN,
    "raw": CONVENTION_RAW,
}


def canonical_convention(name: str) -> str:
    full = _ALIASES.get(name, name)
    if full not in (CONVENTION_PLUS, CONVENTION_PAPER_SIGN, CONVENTION_RAW):
        raise ValueError(f"unknown completion convention {name!r}")
    return full


def positive_factor(mat: np.ndarray, rel_threshold: float = 1e-10) -> np.ndarray:
    """Hermitian PSD square root of C^dag C, via eigendecomposition.

    Eigenvalues of C^dag C below rel_threshold times max(top eigenvalue, 1)
    are treated as exact zeros.
    """
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"positive factor needs a square matrix, got {mat.shape}")
    gram = mat.conj().T @ mat
    evals, evecs = np.linalg.eigh(gram)
    floor = rel_threshold * max(float(evals[-1]), 1.0)
    roots = np.where(evals > floor, np.sqrt(np.clip(evals, 0.0, None)), 0.0)
    return (evecs * roots) @ evecs.conj().T


def su2_invariant_completion(
    basis: OrderedBasis, root: Root, convention: str = CONVENTION_PLUS
) -> np.ndarray:
    """Unitary completion of the phase part of C_ij by cyclic su(2) strings.

    On every string (ordered by increasing n_i) the matrix acts as the
    successor map of C_ij; the wrap entry from the top of the string back to
    the bottom carries phase +1 ("plus") or -1 ("paper-sign").  Singleton
    strings get the identity.
    """
    convention = canonical_convention(convention)
    if convention == CONVENTION_RAW:
        raise ValueError("raw-partial is not a unitary completion")
    wrap = _WRAP_PHASE[convention]
    root = check_root(basis.n, root)
    d = len(basis)
    mat = np.zeros((d, d), dtype=complex)
    for orbit in su2_strings(basis, root).orbits:
        for pos, idx in enumerate(orbit[:-1]):
            mat[orbit[pos + 1], idx] = 1.0
        if len(orbit) == 1:
            mat[orbit[0], orbit[0]] = 1.0
        else:
            mat[orbit[0], orbit[-1]] = wrap
    return mat


@dataclass(frozen=True)
class PolarFactors:
    """Polar factorization C = E D of one ladder matrix.

    E is unitary (or a partial isometry under the raw convention), D is the
    Hermitian PSD factor, and kernel_dimension counts the columns of the
    partial isometry that had to be completed.
    """

    unitary: np.ndarray
    positive: np.ndarray
    convention: str
    kernel_dimension: int


def polar_decompose(
    basis: OrderedBasis, root: Root, convention: str = CONVENTION_PLUS
) -> PolarFactors:
    """Polar-decompose C_ij on the basis with the requested completion.

    The undetermined columns of the partial isometry must coincide with the
    kernel states of the root; a mismatch signals an internal inconsistency
    and raises.
    """
    convention = canonical_convention(convention)
    root = check_root(basis.n, root)
    cmat = generator_matrix(basis, *root)
    dmat = positive_factor(cmat)
    kernel = set(kernel_states(basis, root))

    zero_columns = {
        k for k in range(len(basis)) if np.max(np.abs(cmat[:, k])) == 0.0
    }
    if zero_columns != kernel:
        raise RuntimeError(
            f"partial isometry kernel {sorted(zero_columns)} does not match "
            f"edge states {sorted(kernel)} for root {root}"
        )

    if convention == CONVENTION_RAW:
        diag = np.real(np.diag(dmat)).copy()
        inv = np.where(diag > 0, 1.0 / np.where(diag > 0, diag, 1.0), 0.0)
        emat = cmat * inv[np.newaxis, :]
    else:
        emat = su2_invariant_completion(basis, root, convention)
    return PolarFactors(
        unitary=emat,
        positive=dmat,
        convention=convention,
        kernel_dimension=len(kernel),
    )


def su2_shift_E(j: float) -> np.ndarray:
    """Cyclic down-shift completing the su(2) lowering operator, size 2j+1.

    Ones on the subdiagonal and in the top-right corner (basis ordered
    m = j, ..., -j); its (2j+1)-th power is the identity and its eigenvalues
    are the (2j+1)-th roots of unity.
    """
    dim = _check_spin(j) + 1
    mat = np.zeros((dim, dim), dtype=complex)
    for p in range(1, dim):
        mat[p, p - 1] = 1.0
    mat[0, dim - 1] = 1.0
    return mat


def unitarity_residual(mat: np.ndarray) -> float:
    eye = np.eye(mat.shape[0])
    return float(np.max(np.abs(mat.conj().T @ mat - eye)))


def phase_hermitian(unitary: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Hermitian phase matrix phi with exp(i phi) equal to the given unitary.

    Eigenphases are taken in (-pi, pi].  The Schur route diagonalizes the
    normal input unitarily, so degenerate eigenvalues need no special care.
    Rejects non-unitary input: complete the polar factor first.
    """
    unitary = np.asarray(unitary, dtype=complex)
    if unitarity_residual(unitary) > tol:
        raise ValueError("input is not unitary; polar completion required first")
    tmat, zmat = scipy.linalg.schur(unitary, output="complex")
    angles = np.angle(np.diag(tmat))
    phi = (zmat * angles) @ zmat.conj().T
    phi = 0.5 * (phi + phi.conj().T)
    rebuilt = (zmat * np.exp(1j * angles)) @ zmat.conj().T
    if np.max(np.abs(rebuilt - unitary)) > 1e-10:
        raise RuntimeError("matrix logarithm failed to reproduce the unitary")
    return phi


def d_identity_residual(lam: int) -> float:
    """Defect of the relations tying differences of squared D factors to Cartans.

    With D_ij = sqrt(C_ij^dag C_ij) the identities read D_21^2 - D_12^2 = h_1,
    D_32^2 - D_23^2 = h_2 and D_31^2 - D_13^2 = h_1 + h_2.  (D_ij^2 is the
    occupation polynomial n_j(n_i + 1), so each difference telescopes to a
    population difference.)
    """
    from .generators import cartan_matrix

    basis = enumerate_basis(3, lam)
    h1 = cartan_matrix(basis, 1)
    h2 = cartan_matrix(basis, 2)

    def dsq(i: int, j: int) -> np.ndarray:
        d = positive_factor(generator_matrix(basis, i, j))
        return d @ d

    residual = 0.0
    for (i, j), target in (((1, 2), h1), ((2, 3), h2), ((1, 3), h1 + h2)):
        defect = dsq(j, i) - dsq(i, j) - target
        residual = max(residual, float(np.max(np.abs(defect))))
    return residual


def group_commutator(ea: np.ndarray, eb: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Group commutator U = Ea Eb Ea^-1 Eb^-1 and its defect M = U - 1."""
    if ea.shape != eb.shape:
        raise ValueError(f"dimension mismatch: {ea.shape} vs {eb.shape}")
    u = ea @ eb @ ea.conj().T @ eb.conj().T
    return u, u - np.eye(u.shape[0])


def _fixed_point_count(u: np.ndarray, tol: float = 1e-9) -> int:
    eye = np.eye(u.shape[0])
    return sum(
        1 for k in range(u.shape[0]) if np.max(np.abs(u[:, k] - eye[:, k])) < tol
    )


@dataclass(frozen=True)
class NoncommutativityReport:
    """One row of a non-commutativity sweep.

    raw_norm is ||M||^2 = Tr(M^dag M) for M = U - 1 with U the group
    commutator of the two completed phase operators; normalized_norm divides
    by the irrep dimension.  formula_value carries the closed-form prediction
    when one applies to (n, roots), else None.
    """

    n: int
    lam: int
    dimension: int
    raw_norm: float
    normalized_norm: float
    formula_value: Fraction | None
    fixed_point_count: int
    convention: str


def formula_su3(lam: int) -> Fraction:
    """Closed-form normalized ||M||^2 for su(3): 2[2(lam+1)-1] / (dim)."""
    if lam < 0:
        raise ValueError("lam must be non-negative")
    return Fraction(4 * (2 * lam + 1), (lam + 1) * (lam + 2))


def formula_su4(lam: int) -> Fraction:
    """Closed-form normalized ||M||^2 quoted for su(4) (see sweep reports)."""
    if lam < 0:
        raise ValueError("lam must be non-negative")
    numer = 2 * (lam + 1) * (lam + 2) - (lam + 1) - 1
    return Fraction(6 * numer, (lam + 1) * (lam + 2) * (lam + 3))


def _formula_for(n: int, root_a: Root, root_b: Root, lam: int) -> Fraction | None:
    if {tuple(root_a), tuple(root_b)} != {(1, 2), (3, 1)}:
        return None
    if n == 3:
        return formula_su3(lam)
    if n == 4:
        return formula_su4(lam)
    return None


def noncommutativity_norm(
    n: int,
    lam: int,
    root_a: Root = (1, 2),
    root_b: Root = (3, 1),
    convention: str = CONVENTION_PLUS,
) -> NoncommutativityReport:
    """Build both phase operators and quantify their failure to commute."""
    convention = canonical_convention(convention)
    basis = enumerate_basis(n, lam)
    ea = su2_invariant_completion(basis, root_a, convention)
    eb = su2_invariant_completion(basis, root_b, convention)
    u, m = group_commutator(ea, eb)
    raw = float(np.real(np.trace(m.conj().T @ m)))
    d = len(basis)
    return NoncommutativityReport(
        n=n,
        lam=lam,
        dimension=d,
        raw_norm=raw,
        normalized_norm=raw / d,
        formula_value=_formula_for(n, root_a, root_b, lam),
        fixed_point_count=_fixed_point_count(u),
        convention=convention,
    )


def sweep(
    n: int,
    lam_min: int,
    lam_max: int,
    root_a: Root = (1, 2),
    root_b: Root = (3, 1),
    convention: str = CONVENTION_PLUS,
    threads: int = 1,
) -> list[NoncommutativityReport]:
    """Non-commutativity reports for lam = lam_min..lam_max, ascending.

    The per-lam computations are independent; with threads > 1 they run
    concurrently but the output order is by ascending lam regardless.
    """
    if lam_min > lam_max:
        raise ValueError(f"empty sweep range {lam_min}..{lam_max}")
    lams = range(lam_min, lam_max + 1)

    def one(lam: int) -> NoncommutativityReport:
        return noncommutativity_norm(n, lam, root_a, root_b, convention)

    if threads <= 1:
        return [one(lam) for lam in lams]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one, lams))


def decay_fit(
    reports: Iterable[NoncommutativityReport] | Sequence[tuple[int, float]],
) -> float:
    """Least-squares slope of log(normalized norm) against log(lam).

    Accepts reports or bare (lam, value) pairs; needs at least four points
    with distinct lam >= 2.
    """
    points = []
    for item in reports:
        if isinstance(item, NoncommutativityReport):
            points.append((item.lam, item.normalized_norm))
        else:
            lam, value = item
            points.append((int(lam), float(value)))
    points = [(lam, value) for lam, value in points if lam >= 2]
    if len({lam for lam, _ in points}) < 4:
        raise ValueError("decay fit needs at least four distinct lam >= 2")
    xs = np.log([lam for lam, _ in points])
    ys = np.log([value for _, value in points])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)
