"""Concurrence of a two-qubit density matrix.

The pipeline follows the Hill-Wootters construction: spin-flip the state,
take the square roots nu_j of the eigenvalues of rho * rho_tilde in
decreasing order, and return max(0, nu_1 - nu_2 - nu_3 - nu_4).

Instead of diagonalizing the non-Hermitian product rho * rho_tilde
directly, we diagonalize H = sqrt(rho) * rho_tilde * sqrt(rho), which is
Hermitian positive semidefinite and has the same spectrum.  Both
eigenproblems (the matrix square root and H itself) go through a cyclic
Jacobi rotation scheme on the 4x4 complex Hermitian matrix, which is
unconditionally stable at this size.  A closed-form fast path for
X-structured matrices is provided as an independent cross-check.
"""

from __future__ import annotations

import math

import numpy as np

#: Convergence: stop when the off-diagonal Frobenius norm drops below this.
_JACOBI_OFF_TOL = 1e-14
#: Hard sweep cap; 4x4 Hermitian matrices converge in a handful of sweeps.
_JACOBI_MAX_SWEEPS = 30
#: Eigenvalues of PSD-by-construction matrices may round below zero by
#: this much and are clamped; anything lower is a logic error upstream.
_EIG_FLOOR = -1e-9
#: Analytically-zero eigenvalues surface as +-1e-16 roundoff; sqrt would
#: blow that up to 1e-8 in the nu values, so anything this far below the
#: spectral radius is treated as an exact zero before rooting.
_RELATIVE_NOISE = 1e-13

_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_FLIP_SIGN = (1.0, -1.0, -1.0, 1.0)


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """(sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y).

    Entrywise: out[i][j] = sign(i) sign(j) conj(rho[3-i][3-j]) with sign
    +1 on basis indices 0,3 and -1 on 1,2.  An involution.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    signs = np.array(_FLIP_SIGN)
    return np.outer(signs, signs) * rho[::-1, ::-1].conj()


def _jacobi_hermitian(a: list[list[complex]], want_vectors: bool):
    """Cyclic Jacobi diagonalization of a 4x4 complex Hermitian matrix in place.

    Returns (eigenvalues, vectors) with eigenvalues unsorted along the
    final diagonal; vectors is None unless requested, else the unitary
    whose columns are eigenvectors.
    """
    v = None
    if want_vectors:
        v = [[1.0 + 0.0j if i == j else 0.0 + 0.0j for j in range(4)] for i in range(4)]
    for _ in range(_JACOBI_MAX_SWEEPS):
        off_sq = 0.0
        for p, q in _PAIRS:
            off_sq += abs(a[p][q]) ** 2
        if 2.0 * off_sq < _JACOBI_OFF_TOL * _JACOBI_OFF_TOL:
            break
        for p, q in _PAIRS:
            b = a[p][q]
            beta = abs(b)
            app = a[p][p].real
            aqq = a[q][q].real
            if beta == 0.0:
                continue
            if beta < 1e-18 * (abs(app) + abs(aqq)):
                # Annihilating mass this far below the diagonal scale cannot
                # move the eigenvalues; rotating on it would only churn V.
                a[p][q] = 0.0 + 0.0j
                a[q][p] = 0.0 + 0.0j
                continue
            w = b / beta
            theta = (aqq - app) / (2.0 * beta)
            # Small root of tan^2 + 2 theta tan - 1 = 0, written without
            # cancellation between theta and sqrt(theta^2 + 1).
            tan = -1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
            if theta < 0.0:
                tan = -tan
            cos = 1.0 / math.sqrt(1.0 + tan * tan)
            sin = tan * cos
            ws = sin * w
            wsc = ws.conjugate()
            a[p][p] = cos * cos * app + sin * sin * aqq + 2.0 * cos * sin * beta
            a[q][q] = cos * cos * aqq + sin * sin * app - 2.0 * cos * sin * beta
            a[p][q] = 0.0 + 0.0j
            a[q][p] = 0.0 + 0.0j
            for i in range(4):
                if i == p or i == q:
                    continue
                aip = a[i][p]
                aiq = a[i][q]
                nip = cos * aip + wsc * aiq
                niq = cos * aiq - ws * aip
                a[i][p] = nip
                a[p][i] = nip.conjugate()
                a[i][q] = niq
                a[q][i] = niq.conjugate()
            if want_vectors:
                for i in range(4):
                    vip = v[i][p]
                    viq = v[i][q]
                    v[i][p] = cos * vip + wsc * viq
                    v[i][q] = cos * viq - ws * vip
    return [a[i][i].real for i in range(4)], v


def _clamped_or_raise(values: list[float], what: str) -> list[float]:
    noise = _RELATIVE_NOISE * max(max(values), 0.0)
    out = []
    for x in values:
        if x < _EIG_FLOOR:
            raise ValueError(f"{what} eigenvalue {x:.3e} below the roundoff floor {_EIG_FLOOR}")
        out.append(x if x > noise else 0.0)
    return out


def _sqrt_psd(rho: np.ndarray) -> np.ndarray:
    """Matrix square root of a PSD-within-roundoff Hermitian 4x4 matrix."""
    vals, vecs = _jacobi_hermitian(rho.tolist(), want_vectors=True)
    roots = np.sqrt(_clamped_or_raise(vals, "density-matrix"))
    varr = np.array(vecs, dtype=complex)
    return (varr * roots[None, :]) @ varr.conj().T


def eigenvalues_rho_rhotilde(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues of rho * spin_flip(rho), nonnegative and descending.

    Computed from the Hermitian similarity H = sqrt(rho) rho_tilde
    sqrt(rho), which shares the spectrum of the non-Hermitian product.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    asym = np.max(np.abs(rho - rho.conj().T))
    if asym > 1e-8:
        raise ValueError(f"matrix is not Hermitian (asymmetry {asym:.3e})")
    herm = 0.5 * (rho + rho.conj().T)
    root = _sqrt_psd(herm)
    h = root @ spin_flip(herm) @ root
    h = 0.5 * (h + h.conj().T)
    vals, _ = _jacobi_hermitian(h.tolist(), want_vectors=False)
    clamped = _clamped_or_raise(vals, "rho*rho_tilde")
    return np.array(sorted(clamped, reverse=True))


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence max(0, nu_1 - nu_2 - nu_3 - nu_4), clamped to [0, 1]."""
    nu = np.sqrt(eigenvalues_rho_rhotilde(rho))
    c = nu[0] - nu[1] - nu[2] - nu[3]
    if c <= 0.0:
        return 0.0
    return min(c, 1.0)


def concurrence_x_state(rho: np.ndarray) -> float:
    """Closed-form concurrence for an X-structured density matrix.

    2 * max(0, |rho_23| - sqrt(rho_11 rho_44), |rho_14| - sqrt(rho_22 rho_33)).
    Raises if any entry outside the X pattern exceeds 1e-10.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    mask = np.ones((4, 4), dtype=bool)
    mask[range(4), range(4)] = False
    mask[0, 3] = mask[3, 0] = mask[1, 2] = mask[2, 1] = False
    worst = np.max(np.abs(rho[mask]))
    if worst > 1e-10:
        raise ValueError(f"matrix is not X-structured (off-pattern entry {worst:.3e})")
    diag = [max(rho[i, i].real, 0.0) for i in range(4)]
    inner = abs(rho[1, 2]) - math.sqrt(diag[0] * diag[3])
    outer = abs(rho[0, 3]) - math.sqrt(diag[1] * diag[2])
    c = 2.0 * max(0.0, inner, outer)
    return min(c, 1.0)
