"""Noiseless qubit of three spin-1/2 particles under collective noise.

When noise couples to the total spin components S_x, S_y, S_z only, the
eight-dimensional space splits by total angular momentum into a spin-3/2
part and two equivalent spin-1/2 routes.  The route label is untouched by
the noise and carries one protected qubit.  The module builds the collective
generators, both explicit protected bases (a singlet-triplet flavor and a
phase flavor built on the cube roots of unity), the rotation-scalar
observables, the protected frame, and the sector frames available when only
S_z and S^2 are conserved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .frames import (
    CheckResult,
    EncodedQubitFrame,
    VerificationReport,
)
from .linalg import (
    basis_state,
    commutator,
    dagger,
    evolve,
    identity,
    kron,
    kron_all,
    max_abs,
    partial_trace,
    random_haar_state,
    sigma_x,
    sigma_y,
    sigma_z,
)

__all__ = [
    "N_SPINS",
    "DIM",
    "FLAVORS",
    "CollectiveSpinSystem",
    "collective_ops",
    "total_spin_ops",
    "no_invariant_state_check",
    "joint_kernel_dimension",
    "ProtectedBasis",
    "protected_basis",
    "scalars",
    "exchange_12",
    "antisymmetric_product",
    "support_projector",
    "gauge_blocks",
    "pauli_coefficients",
    "noiseless_frame",
    "noiseless_invariance_suite",
    "purity_of_protected_qubit",
    "exchange_sector_frames",
    "flavor_change_unitary",
]

N_SPINS = 3
DIM = 8
FLAVORS = ("singlet_triplet", "omega")

_PAULIS = (sigma_x, sigma_y, sigma_z)


def _embed(op, site, n_spins=N_SPINS):
    factors = [identity(2)] * n_spins
    factors[site] = op
    return kron_all(*factors)


def collective_ops(n_spins):
    """Total spin components S_alpha = sum_i sigma_alpha^(i) / 2."""
    out = []
    for pauli in _PAULIS:
        s = np.zeros((2 ** n_spins, 2 ** n_spins), dtype=complex)
        for i in range(n_spins):
            s += _embed(pauli, i, n_spins) / 2.0
        out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class CollectiveSpinSystem:
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray
    s2: np.ndarray

    @property
    def dim(self):
        return self.sx.shape[0]

    def generators(self):
        return (self.sx, self.sy, self.sz)


def total_spin_ops():
    sx, sy, sz = collective_ops(N_SPINS)
    s2 = sx @ sx + sy @ sy + sz @ sz
    return CollectiveSpinSystem(sx=sx, sy=sy, sz=sz, s2=s2)


def _check(name, deviation, tol):
    deviation = float(deviation)
    return CheckResult(name, deviation, deviation <= tol)


def joint_kernel_dimension(n_spins, sv_threshold=1e-8):
    """Dimension of the common null space of the collective generators.

    Returns (dimension, margin): margin is the gap between the singular
    values kept below the threshold and the first one above it.
    """
    ops = collective_ops(n_spins)
    stacked = np.vstack(ops)
    svals = np.linalg.svd(stacked, compute_uv=False)
    below = svals[svals < sv_threshold]
    above = svals[svals >= sv_threshold]
    dim = int(below.size)
    top = float(below.max()) if below.size else 0.0
    bottom = float(above.min()) if above.size else np.inf
    return dim, bottom - top


def no_invariant_state_check(tol=1e-9, sv_threshold=1e-8, min_split=1e-4):
    """No three-spin state is annihilated by all collective generators.

    Contrasts with two spins (one invariant state, the pair singlet) and
    four spins (a two-dimensional invariant subspace).
    """
    expected = {3: 0, 2: 1, 4: 2}
    checks = []
    for n in (3, 2, 4):
        dim, margin = joint_kernel_dimension(n, sv_threshold)
        checks.append(_check(f"joint_kernel_dim_{n}_spins", abs(dim - expected[n]), tol))
        checks.append(
            _check(f"kernel_split_margin_{n}_spins", max(0.0, min_split - margin), tol)
        )
    return VerificationReport("collective_invariant_states", float(tol), 0, tuple(checks))


def _ket(bits):
    index = int(bits, 2)
    return basis_state(DIM, index)


@dataclass(frozen=True)
class ProtectedBasis:
    """Four orthonormal spin-1/2 vectors labeled (route, s_z).

    Columns are ordered route-major: (0,+1/2), (0,-1/2), (1,+1/2), (1,-1/2),
    so that collective generators take the block form 1 (x) B in these
    coordinates.
    """

    flavor: str
    vectors: np.ndarray  # 8 x 4, columns as above

    labels = ((0, +0.5), (0, -0.5), (1, +0.5), (1, -0.5))

    def vector(self, route, sz):
        col = {(0, +0.5): 0, (0, -0.5): 1, (1, +0.5): 2, (1, -0.5): 3}[(route, sz)]
        return self.vectors[:, col]

    def to_json(self):
        """One row per basis vector; amplitudes as [re, im] pairs."""
        rows = [
            [[float(z.real), float(z.imag)] for z in self.vectors[:, col]]
            for col in range(self.vectors.shape[1])
        ]
        return json.dumps(rows)


def protected_basis(flavor):
    """The two explicit realizations of the protected pair of routes.

    singlet_triplet builds on singlet/triplet states of spins 1 and 2; omega
    uses relative phases that are cube roots of unity and diagonalizes the
    cyclic spin permutation.
    """
    if flavor == "singlet_triplet":
        v0p = (_ket("010") - _ket("100")) / np.sqrt(2.0)
        v0m = (_ket("101") - _ket("011")) / np.sqrt(2.0)
        v1p = (2.0 * _ket("001") - _ket("010") - _ket("100")) / np.sqrt(6.0)
        v1m = (2.0 * _ket("110") - _ket("101") - _ket("011")) / np.sqrt(6.0)
    elif flavor == "omega":
        w = np.exp(2j * np.pi / 3.0)
        v0p = (_ket("001") + w * _ket("010") + w ** 2 * _ket("100")) / np.sqrt(3.0)
        v0m = (_ket("110") + w * _ket("101") + w ** 2 * _ket("011")) / np.sqrt(3.0)
        v1p = (_ket("001") + w ** 2 * _ket("010") + w * _ket("100")) / np.sqrt(3.0)
        v1m = (_ket("110") + w ** 2 * _ket("101") + w * _ket("011")) / np.sqrt(3.0)
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    vectors = np.column_stack([v0p, v0m, v1p, v1m])
    return ProtectedBasis(flavor=flavor, vectors=vectors)


def scalars():
    """Rotation scalars s_ij = X_i X_j + Y_i Y_j + Z_i Z_j for the 3 pairs."""
    out = []
    for i, j in ((0, 1), (1, 2), (2, 0)):
        s = np.zeros((DIM, DIM), dtype=complex)
        for pauli in _PAULIS:
            s += _embed(pauli, i) @ _embed(pauli, j)
        out.append(s)
    return tuple(out)  # (s12, s23, s31)


def exchange_12():
    """Unitary swapping spins 1 and 2: (1 + sigma^(1).sigma^(2)) / 2."""
    s12 = scalars()[0]
    return (identity(DIM) + s12) / 2.0


def antisymmetric_product():
    """sum over permutations of eps_{abc} sigma_a^(1) sigma_b^(2) sigma_c^(3)."""
    eps = {
        ("x", "y", "z"): 1.0, ("y", "z", "x"): 1.0, ("z", "x", "y"): 1.0,
        ("x", "z", "y"): -1.0, ("z", "y", "x"): -1.0, ("y", "x", "z"): -1.0,
    }
    by_name = dict(zip("xyz", _PAULIS))
    out = np.zeros((DIM, DIM), dtype=complex)
    for (a, b, c), sign in eps.items():
        out += sign * (_embed(by_name[a], 0) @ _embed(by_name[b], 1) @ _embed(by_name[c], 2))
    return out


def support_projector():
    """P_q = 1/2 - (s12 + s23 + s31)/6, the projector onto the spin-1/2 part."""
    s12, s23, s31 = scalars()
    return identity(DIM) / 2.0 - (s12 + s23 + s31) / 6.0


def noiseless_frame(flavor):
    """Protected qubit observables built from rotation scalars.

    omega flavor: X = (2 s12 - s23 - s31) P / 6 (the swap of spins 1 and 2
    restricted to the support), Y = -(sqrt3/6)(s23 - s31) P, Z = [X, Y]/2i.
    singlet_triplet flavor: X = (sqrt3/6)(s23 - s31) P, Z = -(swap) P, and Y
    completes the triple via Y = [Z, X]/2i.
    """
    s12, s23, s31 = scalars()
    p = support_projector()
    if flavor == "omega":
        x = ((2.0 * s12 - s23 - s31) / 6.0) @ p
        y = (-np.sqrt(3.0) / 6.0) * ((s23 - s31) @ p)
        z = (x @ y - y @ x) / 2.0j
    elif flavor == "singlet_triplet":
        x = (np.sqrt(3.0) / 6.0) * ((s23 - s31) @ p)
        z = -exchange_12() @ p
        y = (z @ x - x @ z) / 2.0j
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    return EncodedQubitFrame(
        support=p, x=x, y=y, z=z, label=f"collective_{flavor}"
    )


def gauge_blocks(flavor):
    """2x2 blocks B_alpha with V^dag S_alpha V = 1 (x) B_alpha.

    Returns (blocks, off_block_deviation).  sigma(alpha) = 2 B_alpha is a
    unit-norm real combination of Pauli matrices; the factor 2 reflects that
    the collective components carry spin-1/2 eigenvalues on the gauge pair.
    """
    v = protected_basis(flavor).vectors
    system = total_spin_ops()
    blocks = []
    dev = 0.0
    for s in system.generators():
        m = dagger(v) @ s @ v
        b00 = m[0:2, 0:2]
        b01 = m[0:2, 2:4]
        b10 = m[2:4, 0:2]
        b11 = m[2:4, 2:4]
        dev = max(dev, max_abs(b01), max_abs(b10), max_abs(b00 - b11))
        blocks.append((b00 + b11) / 2.0)
    return tuple(blocks), float(dev)


def pauli_coefficients(op2):
    """Real coefficients c with op2 = sum_alpha c_alpha sigma_alpha.

    Returns (c, residual) where residual collects the identity component,
    imaginary parts, and reconstruction error.
    """
    op2 = np.asarray(op2, dtype=complex)
    coeffs = np.array([np.trace(p @ op2) / 2.0 for p in _PAULIS])
    ident = np.trace(op2) / 2.0
    rebuilt = sum(c.real * p for c, p in zip(coeffs, _PAULIS))
    residual = max(
        float(np.max(np.abs(coeffs.imag))),
        abs(complex(ident)),
        max_abs(op2 - rebuilt),
    )
    return coeffs.real, float(residual)


def noiseless_invariance_suite(trials, seed=0, tol=1e-9):
    """Protection evidence for both flavors of the three-spin qubit.

    Static part: every frame member commutes with every collective
    generator, and in protected coordinates each generator is 1 (x) B with
    2B a unit-norm real Pauli combination.  Randomized part: expectations of
    the frame observables are invariant under random collective unitaries.
    """
    if trials < 0:
        raise ValueError("trials must be >= 0")
    system = total_spin_ops()
    rng = np.random.default_rng(seed)
    checks = []
    for flavor in FLAVORS:
        frame = noiseless_frame(flavor)
        members = frame.observables() + (frame.support,)

        commute_dev = max(
            max_abs(commutator(o, s))
            for o in members
            for s in system.generators()
        )
        checks.append(_check(f"frame_commutes_with_noise_{flavor}", commute_dev, tol))

        blocks, block_dev = gauge_blocks(flavor)
        unit_dev = 0.0
        for b in blocks:
            coeffs, residual = pauli_coefficients(2.0 * b)
            unit_dev = max(unit_dev, residual, abs(float(coeffs @ coeffs) - 1.0))
        checks.append(_check(f"noise_block_structure_{flavor}", block_dev, tol))
        checks.append(_check(f"gauge_action_unit_pauli_{flavor}", unit_dev, tol))

        if trials > 0:
            dev = 0.0
            for _ in range(trials):
                theta = rng.standard_normal(3)
                h = sum(t * s for t, s in zip(theta, system.generators()))
                u = evolve(h, 1.0)
                psi = random_haar_state(DIM, rng)
                phi = u @ psi
                for o in members:
                    before = np.vdot(psi, o @ psi).real
                    after = np.vdot(phi, o @ phi).real
                    dev = max(dev, abs(after - before))
            checks.append(
                _check(f"collective_unitary_expectation_invariance_{flavor}", dev, tol)
            )
    return VerificationReport(
        "collective_invariance", float(tol), int(seed), tuple(checks)
    )


def purity_of_protected_qubit(psi_q, rho_gauge, flavor="singlet_triplet", factor="qubit"):
    """Purity of one factor of |psi><psi| (x) rho_gauge embedded in 8 dims.

    The qubit factor must come out pure regardless of the gauge state; with
    factor="gauge" the gauge state's own purity is recovered instead.
    """
    psi_q = np.asarray(psi_q, dtype=complex)
    rho_gauge = np.asarray(rho_gauge, dtype=complex)
    if psi_q.shape != (2,) or abs(np.linalg.norm(psi_q) - 1.0) > 1e-9:
        raise ValueError("psi_q must be a normalized 2-dim amplitude vector")
    if rho_gauge.shape != (2, 2):
        raise ValueError("rho_gauge must be 2x2")
    if abs(np.trace(rho_gauge) - 1.0) > 1e-9 or max_abs(rho_gauge - dagger(rho_gauge)) > 1e-9:
        raise ValueError("rho_gauge must be Hermitian with unit trace")
    if factor not in ("qubit", "gauge"):
        raise ValueError(f"factor must be 'qubit' or 'gauge', got {factor!r}")
    v = protected_basis(flavor).vectors
    rho4 = kron(np.outer(psi_q, psi_q.conj()), rho_gauge)
    rho8 = v @ rho4 @ dagger(v)
    back = dagger(v) @ rho8 @ v
    keep = {0} if factor == "qubit" else {1}
    reduced = partial_trace(back, (2, 2), keep)
    return float(np.real(np.trace(reduced @ reduced)))


def exchange_sector_frames(flavor="omega"):
    """Sector qubits available when S_z and S^2 are both conserved.

    Splitting the spin-1/2 part by s_z = +1/2 or -1/2 leaves two rank-2
    supports; the scalar-built observables restrict to a valid frame on
    each.  These sector frames commute with S_z but not with S_x or S_y, so
    they trade collective protection for compatibility with exchange-only
    control.
    """
    basis = protected_basis(flavor)
    frame = noiseless_frame(flavor)
    out = []
    for sz, tag in ((+0.5, "plus"), (-0.5, "minus")):
        cols = [basis.vector(0, sz), basis.vector(1, sz)]
        p = sum(np.outer(c, c.conj()) for c in cols)
        x = p @ frame.x @ p
        y = p @ frame.y @ p
        z = p @ frame.z @ p
        out.append(
            EncodedQubitFrame(
                support=p, x=x, y=y, z=z,
                label=f"exchange_sector_{tag}_{flavor}",
            )
        )
    return tuple(out)


def flavor_change_unitary():
    """2x2 unitary W relating the two protected bases on the qubit factor.

    Returns (w, residual): residual measures how far the basis-change matrix
    is from W (x) 1 on route-major coordinates, plus W's unitarity defect.
    """
    v_om = protected_basis("omega").vectors
    v_st = protected_basis("singlet_triplet").vectors
    m = dagger(v_om) @ v_st  # 4x4, blocks indexed by route
    w = np.zeros((2, 2), dtype=complex)
    for i in (0, 1):
        for j in (0, 1):
            block = m[2 * i : 2 * i + 2, 2 * j : 2 * j + 2]
            w[i, j] = np.trace(block) / 2.0
    residual = max(
        max_abs(m - kron(w, identity(2))),
        max_abs(dagger(w) @ w - identity(2)),
    )
    return w, float(residual)
