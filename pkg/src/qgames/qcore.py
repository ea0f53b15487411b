"""Dense complex linear algebra and quantum-state primitives.

States are plain numpy vectors, operators and density matrices are square
complex numpy arrays. Every function is pure and never mutates its inputs,
so the whole module is safe for unrestricted concurrent use.

Tolerances: structural checks (unitarity, Hermiticity, trace, orthonormality)
use ``STRUCTURE_TOL``; comparisons between two independent computations of
the same quantity use the tighter ``ORACLE_TOL``. Double precision on the
dimensions handled here (<= 27) leaves orders of magnitude of headroom.
"""

from __future__ import annotations

import numpy as np

STRUCTURE_TOL = 1e-9
ORACLE_TOL = 1e-10

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two operators (or vectors)."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def basis_state(dim: int, index: int) -> np.ndarray:
    """Computational-basis column vector |index> of the given dimension."""
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dimension {dim}")
    state = np.zeros(dim, dtype=complex)
    state[index] = 1.0
    return state


def pure_density(state: np.ndarray) -> np.ndarray:
    """Density matrix |psi><psi| of a normalized pure state."""
    psi = np.asarray(state, dtype=complex)
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > STRUCTURE_TOL:
        raise ValueError(f"state is not normalized: |psi| = {norm}")
    return np.outer(psi, psi.conj())


def is_unitary(u: np.ndarray, tol: float = STRUCTURE_TOL) -> bool:
    """True when ||U^dag U - I||_max <= tol for a square matrix."""
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    dev = u.conj().T @ u - np.eye(u.shape[0])
    return bool(np.max(np.abs(dev)) <= tol)


def is_density_matrix(rho: np.ndarray, tol: float = STRUCTURE_TOL) -> bool:
    """True when rho is Hermitian, unit-trace and positive within tol."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        return False
    if abs(np.trace(rho).real - 1.0) > tol or abs(np.trace(rho).imag) > tol:
        return False
    eigenvalues = np.linalg.eigvalsh((rho + rho.conj().T) / 2)
    return bool(eigenvalues.min() >= -tol)


def evolve(rho: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Conjugate a density matrix by a unitary: rho -> U rho U^dag."""
    rho = np.asarray(rho, dtype=complex)
    u = np.asarray(u, dtype=complex)
    if rho.shape != u.shape:
        raise ValueError(f"dimension mismatch: state {rho.shape} vs operator {u.shape}")
    if not is_unitary(u):
        raise ValueError("operator is not unitary within tolerance")
    return u @ rho @ u.conj().T


def dephase(rho: np.ndarray, lam: float) -> np.ndarray:
    """Damp every off-diagonal computational-basis entry by (1 - lam).

    ``lam = 1`` removes all coherences, leaving the diagonal classical
    mixture; ``lam = 0`` is the identity channel. The channel acts on the
    joint computational basis of the full system, and it preserves the
    diagonal, the trace and Hermiticity for every ``lam`` in [0, 1].
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"dephasing strength {lam} outside [0, 1]")
    rho = np.asarray(rho, dtype=complex)
    diagonal = np.diag(np.diag(rho))
    return (1.0 - lam) * rho + lam * diagonal


def basis_probability(rho: np.ndarray, index: int) -> float:
    """Probability <index|rho|index> of one computational-basis outcome.

    Values inside [-1e-9, 1 + 1e-9] are clamped to [0, 1]; anything further
    outside signals a malformed state and raises.
    """
    rho = np.asarray(rho)
    dim = rho.shape[0]
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dimension {dim}")
    value = float(rho[index, index].real)
    if value < -STRUCTURE_TOL or value > 1.0 + STRUCTURE_TOL:
        raise ValueError(f"diagonal entry {value} is not a probability")
    return min(max(value, 0.0), 1.0)


def complete_to_unitary(columns: np.ndarray, indices=None) -> np.ndarray:
    """Extend orthonormal columns to a full unitary matrix.

    ``columns`` is a (dim, k) matrix whose k columns are orthonormal; they
    are placed at the column positions ``indices`` (defaults to 0..k-1).
    The remaining columns are produced by Gram-Schmidt orthonormalization
    of the standard basis vectors taken in index order, so the completion
    is deterministic.
    """
    cols = np.asarray(columns, dtype=complex)
    if cols.ndim != 2:
        raise ValueError("columns must be a 2-D array")
    dim, k = cols.shape
    if k > dim:
        raise ValueError(f"more columns ({k}) than dimension ({dim})")
    gram = cols.conj().T @ cols
    if np.max(np.abs(gram - np.eye(k))) > STRUCTURE_TOL:
        raise ValueError("given columns are not orthonormal within tolerance")
    if indices is None:
        indices = list(range(k))
    else:
        indices = [int(i) for i in indices]
        if len(indices) != k or len(set(indices)) != k:
            raise ValueError("indices must be distinct and match the column count")

    unitary = np.zeros((dim, dim), dtype=complex)
    unitary[:, indices] = cols
    accepted = [cols[:, j].copy() for j in range(k)]
    free_slots = [j for j in range(dim) if j not in set(indices)]

    candidate = 0
    for slot in free_slots:
        while True:
            if candidate >= dim:
                raise ValueError("failed to complete columns to a unitary")
            vec = np.zeros(dim, dtype=complex)
            vec[candidate] = 1.0
            candidate += 1
            # Two Gram-Schmidt passes keep orthogonality at working precision.
            for _ in range(2):
                for basis_vec in accepted:
                    vec = vec - basis_vec * (basis_vec.conj() @ vec)
            norm = np.linalg.norm(vec)
            if norm > 1e-6:
                vec /= norm
                unitary[:, slot] = vec
                accepted.append(vec)
                break
    return unitary


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random unitary from QR of a complex Gaussian matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    # Fix the phase ambiguity of QR so the distribution is well defined.
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases


def random_special_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random unitary rescaled to determinant one."""
    u = random_unitary(dim, rng)
    det = np.linalg.det(u)
    return u * det ** (-1.0 / dim)
