"""Dual-rail bosonic qubits in truncated Fock space.

A register of 2n modes, each truncated at a fixed maximum occupation, hosts n
qubits through the pairing (k, k+1): logical |0> puts the single boson in the
second mode of the pair, logical |1> in the first.  The module builds ladder
operators, the unit-excitation projectors, the encoded observables, and the
linear-optics gates (phase shifter, beam splitter, the sign-on-two-photons
gate, and their conditional-sign composition), plus leakage bookkeeping and
destructive photodetection.

Mode indices are 1-based; mode 1 is the most significant index of the basis
ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frames import EncodedQubitFrame
from .linalg import dagger, evolve, identity, kron_all, max_abs

__all__ = [
    "FockConfig",
    "fock_state",
    "occupations_of_index",
    "index_of_occupations",
    "occupation_string",
    "annihilation",
    "creation",
    "number",
    "dual_rail_projector",
    "dual_rail_frame",
    "phase_shifter",
    "beam_splitter",
    "ns_gate",
    "csign",
    "leakage",
    "logical_pairs",
    "prepare_logical",
    "photodetect",
]


@dataclass(frozen=True)
class FockConfig:
    """Geometry of the register: an even number of modes and a cutoff."""

    num_modes: int = 2
    cutoff: int = 2

    def __post_init__(self):
        if self.num_modes < 2 or self.num_modes % 2 != 0:
            raise ValueError("num_modes must be even and >= 2")
        if self.cutoff < 1:
            raise ValueError("cutoff must be >= 1")

    @property
    def mode_dim(self):
        return self.cutoff + 1

    @property
    def dim(self):
        return self.mode_dim ** self.num_modes

    @property
    def num_qubits(self):
        return self.num_modes // 2

    def check_mode(self, k):
        if not 1 <= k <= self.num_modes:
            raise ValueError(f"mode index {k} outside 1..{self.num_modes}")


def occupations_of_index(config, index):
    """Occupation tuple (n_1, ..., n_2n) for a flat basis index."""
    occs = []
    rem = int(index)
    for pos in range(config.num_modes):  # mode 1 is the most significant digit
        power = config.mode_dim ** (config.num_modes - 1 - pos)
        n, rem = divmod(rem, power)
        occs.append(n)
    return tuple(occs)


def index_of_occupations(config, occs):
    occs = tuple(int(n) for n in occs)
    if len(occs) != config.num_modes:
        raise ValueError("one occupation per mode required")
    if any(n < 0 or n > config.cutoff for n in occs):
        raise ValueError(f"occupations {occs} exceed cutoff {config.cutoff}")
    index = 0
    for n in occs:
        index = index * config.mode_dim + n
    return index


def occupation_table(config):
    """dim x num_modes integer array of occupations, row i for basis index i."""
    shape = (config.mode_dim,) * config.num_modes
    grids = np.indices(shape).reshape(config.num_modes, -1)
    return grids.T


def fock_state(config, occs):
    psi = np.zeros(config.dim, dtype=complex)
    psi[index_of_occupations(config, occs)] = 1.0
    return psi


def occupation_string(config, occs):
    return "|" + " ".join(str(int(n)) for n in occs) + ">"


def _single_mode_lowering(dim):
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = np.sqrt(n)
    return a


def annihilation(config, k):
    """Truncated lowering operator on mode k, identity on the others."""
    config.check_mode(k)
    d = config.mode_dim
    factors = [identity(d)] * config.num_modes
    factors[k - 1] = _single_mode_lowering(d)
    return kron_all(*factors)


def creation(config, k):
    return dagger(annihilation(config, k))


def number(config, k):
    """Occupation-number operator of mode k (diagonal)."""
    config.check_mode(k)
    counts = occupation_table(config)[:, k - 1].astype(float)
    return np.diag(counts).astype(complex)


def dual_rail_projector(config, k, kp):
    """Projector onto n_k + n_kp = 1, identity on the remaining modes."""
    config.check_mode(k)
    config.check_mode(kp)
    if k == kp:
        raise ValueError("a dual-rail pair needs two distinct modes")
    occs = occupation_table(config)
    keep = (occs[:, k - 1] + occs[:, kp - 1]) == 1
    return np.diag(keep.astype(float)).astype(complex)


def dual_rail_frame(config, k, kp):
    """Encoded observables of the qubit carried by modes (k, kp).

    Z = (n_kp - n_k) P, X = (a_k^dag a_kp + a_k a_kp^dag) P, Y = -i Z X, with
    P the unit-excitation projector of the pair.  All three conserve the
    joint occupation of the pair, so the frame is exact at any cutoff.
    """
    p = dual_rail_projector(config, k, kp)
    nk = number(config, k)
    nkp = number(config, kp)
    z = (nkp - nk) @ p
    hop = creation(config, k) @ annihilation(config, kp)
    x = (hop + dagger(hop)) @ p
    y = -1j * (z @ x)
    return EncodedQubitFrame(
        support=p, x=x, y=y, z=z, label=f"dual_rail(modes {k},{kp})"
    )


def phase_shifter(config, k, phi):
    """exp(-i phi n_k)."""
    return evolve(number(config, k), phi)


def beam_splitter(config, k, l, theta, phi=0.0):
    """exp(theta (e^{i phi} a_k^dag a_l - e^{-i phi} a_k a_l^dag)).

    Conserves n_k + n_l, so matrix elements between states whose joint
    occupation stays within the cutoff are free of truncation error.
    """
    config.check_mode(k)
    config.check_mode(l)
    if k == l:
        raise ValueError("beam splitter needs two distinct modes")
    hop = np.exp(1j * phi) * (creation(config, k) @ annihilation(config, l))
    generator = 1j * (hop - dagger(hop))  # Hermitian; exp(-i generator theta) below
    return evolve(generator, theta)


def ns_gate(config, k):
    """Sign flip on occupations n_k >= 2, identity on n_k in {0, 1}."""
    config.check_mode(k)
    if config.cutoff < 2:
        raise ValueError("ns_gate needs cutoff >= 2")
    counts = occupation_table(config)[:, k - 1]
    signs = np.where(counts >= 2, -1.0, 1.0)
    return np.diag(signs).astype(complex)


def csign(config, q1_modes=(1, 2), q2_modes=(3, 4), theta=np.pi / 4, phi=0.0):
    """Conditional sign gate on two dual-rail qubits.

    Composition: a beam splitter between the first modes of the two pairs,
    the sign-on-two-photons gate on each of those modes, then the inverse
    beam splitter.  At theta = pi/4 the restriction to the two-qubit logical
    space is diag(1, 1, 1, -1).
    """
    if config.cutoff < 2:
        raise ValueError("csign needs cutoff >= 2")
    k1 = q1_modes[0]
    k2 = q2_modes[0]
    u_bs = beam_splitter(config, k1, k2, theta, phi)
    return dagger(u_bs) @ ns_gate(config, k1) @ ns_gate(config, k2) @ u_bs


def leakage(state, config, pairs):
    """Weight outside the joint unit-excitation sector of the given pairs."""
    state = np.asarray(state, dtype=complex)
    seen = set()
    for k, kp in pairs:
        if k in seen or kp in seen:
            raise ValueError("overlapping pairs")
        seen.update((k, kp))
    occs = occupation_table(config)
    keep = np.ones(config.dim, dtype=bool)
    for k, kp in pairs:
        config.check_mode(k)
        config.check_mode(kp)
        keep &= (occs[:, k - 1] + occs[:, kp - 1]) == 1
    inside = float(np.sum(np.abs(state[keep]) ** 2))
    return min(1.0, max(0.0, 1.0 - inside))


def logical_pairs(config):
    return tuple((2 * i + 1, 2 * i + 2) for i in range(config.num_qubits))


def prepare_logical(config, bits):
    """Product Fock state |b_1 ... b_n> with pair i set to |01> or |10>."""
    bits = list(bits)
    if len(bits) != config.num_qubits:
        raise ValueError(f"need {config.num_qubits} bits, got {len(bits)}")
    occs = []
    for b in bits:
        if b not in (0, 1):
            raise ValueError("bits must be 0 or 1")
        occs.extend((1, 0) if b else (0, 1))
    return fock_state(config, occs)


def photodetect(state, config, k, seed):
    """Destructive number measurement of mode k, modeled as a projection.

    Samples the outcome from the Born distribution, returns the outcome, the
    renormalized post-measurement state, and the outcome probability.
    """
    config.check_mode(k)
    state = np.asarray(state, dtype=complex)
    counts = occupation_table(config)[:, k - 1]
    probs = np.zeros(config.mode_dim)
    for n in range(config.mode_dim):
        probs[n] = float(np.sum(np.abs(state[counts == n]) ** 2))
    total = probs.sum()
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    outcome = int(rng.choice(config.mode_dim, p=probs / total))
    post = np.where(counts == outcome, state, 0.0)
    norm = np.linalg.norm(post)
    if norm == 0.0:  # unreachable for a sampled outcome
        raise ValueError("projection onto the sampled outcome has zero norm")
    return outcome, post / norm, float(probs[outcome])


def born_distribution(state, config, k):
    """Outcome probabilities of photodetection on mode k, no sampling."""
    config.check_mode(k)
    state = np.asarray(state, dtype=complex)
    counts = occupation_table(config)[:, k - 1]
    return np.array(
        [float(np.sum(np.abs(state[counts == n]) ** 2)) for n in range(config.mode_dim)]
    )
