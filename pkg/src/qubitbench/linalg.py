"""Dense complex linear algebra helpers shared by every construction.

Conventions used across the package:

* Operators are square ``complex128`` ndarrays in row-major order.
* Pure states are one-dimensional ``complex128`` ndarrays of unit norm.
* Density operators are Hermitian, positive semidefinite, trace-1 ndarrays.
* In tensor products, factor 0 is the most significant index: a three-qubit
  basis ket |abc> sits at index 4a + 2b + c.

Everything here is a pure function of its inputs; randomness enters only
through explicit seeds.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

__all__ = [
    "sigma_x",
    "sigma_y",
    "sigma_z",
    "identity",
    "basis_state",
    "density",
    "dagger",
    "max_abs",
    "kron",
    "kron_all",
    "commutator",
    "anticommutator",
    "is_hermitian",
    "is_unitary",
    "is_projector",
    "eigh",
    "evolve",
    "partial_trace",
    "random_haar_state",
    "random_hermitian",
    "child_seed",
    "KrausChannel",
]

sigma_x = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
sigma_y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
sigma_z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def identity(dim):
    return np.eye(dim, dtype=complex)


def basis_state(dim, index):
    """Computational basis ket e_index in dimension dim."""
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dim {dim}")
    psi = np.zeros(dim, dtype=complex)
    psi[index] = 1.0
    return psi


def density(psi):
    """Rank-one density operator |psi><psi|."""
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def dagger(a):
    return np.asarray(a).conj().T


def max_abs(a):
    """Largest entrywise magnitude, the deviation measure used everywhere."""
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def kron(a, b):
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(*ops):
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def _check_same_square(a, b, what):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{what}: first operand is not square")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError(f"{what}: second operand is not square")
    if a.shape != b.shape:
        raise ValueError(f"{what}: dimension mismatch {a.shape} vs {b.shape}")


def commutator(a, b):
    """AB - BA for equal-dimension square operators."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _check_same_square(a, b, "commutator")
    return a @ b - b @ a


def anticommutator(a, b):
    """AB + BA for equal-dimension square operators."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _check_same_square(a, b, "anticommutator")
    return a @ b + b @ a


def is_hermitian(a, tol=1e-9):
    a = np.asarray(a)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and max_abs(a - dagger(a)) <= tol


def is_unitary(a, tol=1e-9):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return max_abs(dagger(a) @ a - identity(a.shape[0])) <= tol


def is_projector(a, tol=1e-9):
    a = np.asarray(a)
    if not is_hermitian(a, tol):
        return False
    return max_abs(a @ a - a) <= tol


def eigh(h, tol=1e-9):
    """Hermitian eigendecomposition, eigenvalues ascending.

    Returns (w, v) with h @ v[:, j] = w[j] * v[:, j] and orthonormal columns.
    Raises on non-Hermitian input.
    """
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h, tol):
        raise ValueError("eigh requires a Hermitian matrix")
    w, v = np.linalg.eigh(h)
    return w, v


def evolve(h, t):
    """Unitary exp(-i h t) for Hermitian h, via eigendecomposition."""
    w, v = eigh(h)
    phases = np.exp(-1j * w * t)
    return (v * phases) @ dagger(v)


def partial_trace(rho, dims, keep):
    """Reduced operator of rho over the kept tensor factors.

    dims lists the factor dimensions (factor 0 most significant); keep is the
    set of factor indices to retain, in ascending order in the output.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = [int(d) for d in dims]
    total = int(np.prod(dims))
    if rho.shape != (total, total):
        raise ValueError(f"dims {dims} inconsistent with shape {rho.shape}")
    keep = sorted(set(int(k) for k in keep))
    if not keep or any(k < 0 or k >= len(dims) for k in keep):
        raise ValueError(f"bad keep set {keep} for {len(dims)} factors")
    n = len(dims)
    reshaped = rho.reshape(dims + dims)
    row = list(range(n))
    col = list(range(n, 2 * n))
    for i in range(n):
        if i not in keep:
            col[i] = row[i]  # contract the traced factor
    out_idx = [row[i] for i in keep] + [col[i] for i in keep]
    reduced = np.einsum(reshaped, row + col, out_idx)
    d_keep = int(np.prod([dims[i] for i in keep]))
    return reduced.reshape(d_keep, d_keep)


def _as_rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_haar_state(dim, seed):
    """Haar-random pure state, deterministic per seed."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    rng = _as_rng(seed)
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_hermitian(dim, seed):
    """Gaussian random Hermitian matrix, deterministic per seed."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    rng = _as_rng(seed)
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (z + dagger(z)) / 2.0


def child_seed(seed, name):
    """Derive an independent integer seed from (seed, name).

    Stable across platforms so that concurrent suites never depend on
    execution order.
    """
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class KrausChannel:
    """Completely positive map rho -> sum_a K_a rho K_a^dag."""

    ops: tuple

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.ops)
        if not ops:
            raise ValueError("KrausChannel needs at least one operator")
        shape = ops[0].shape
        if any(k.shape != shape for k in ops):
            raise ValueError("Kraus operators must share one shape")
        object.__setattr__(self, "ops", ops)

    @property
    def dim(self):
        return self.ops[0].shape[0]

    def apply(self, rho):
        rho = np.asarray(rho, dtype=complex)
        out = np.zeros_like(rho)
        for k in self.ops:
            out += k @ rho @ dagger(k)
        return out

    def trace_preservation_defect(self):
        """max |sum_a K_a^dag K_a - 1|, zero for a trace-preserving map."""
        acc = np.zeros((self.dim, self.dim), dtype=complex)
        for k in self.ops:
            acc += dagger(k) @ k
        return max_abs(acc - identity(self.dim))
