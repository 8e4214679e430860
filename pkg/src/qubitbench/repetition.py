"""Three-qubit repetition code viewed as a protected subsystem.

The code spans |000> and |111> and protects against the error set
E = {1, X1, X2, X3}.  Beyond the standard recovery channel, the module
exposes the two tensor factorizations of the eight-dimensional space: the
error-adapted one, in which every error acts trivially on the qubit factor,
and the stabilizer-eigenvalue one, in which the qubit label is flipped by
the first error.  Observables built by conjugating the code observables with
all four errors give a frame whose support is the whole space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .frames import (
    CheckResult,
    EncodedQubitFrame,
    OperatorAlgebra,
    VerificationReport,
    frame_commutes_with,
)
from .linalg import (
    KrausChannel,
    anticommutator,
    basis_state,
    commutator,
    dagger,
    density,
    identity,
    kron_all,
    max_abs,
    sigma_x,
    sigma_z,
)

__all__ = [
    "DIM",
    "N_PHYSICAL",
    "SYNDROME_TABLE",
    "encode",
    "logical_zero",
    "logical_one",
    "error_operator",
    "syndrome_of",
    "syndrome_from_commutation",
    "syndrome_table_json",
    "stabilizer_generators",
    "code_vector",
    "recovery_channel",
    "SubsystemIso",
    "subsystem_iso_Q",
    "subsystem_iso_Qprime",
    "frame_from_errors",
    "error_recovery_words",
    "invariance_suite",
]

N_PHYSICAL = 3
DIM = 8

# syndrome bits under the stabilizer generators Z1Z2 and Z2Z3, indexed by a
SYNDROME_TABLE = ("00", "10", "11", "01")


def _embed(op, site):
    factors = [identity(2)] * N_PHYSICAL
    factors[site] = op
    return kron_all(*factors)


def error_operator(a):
    """E_0 = 1 and E_a = X_a for a in 1..3; involutive and Hermitian."""
    if a == 0:
        return identity(DIM)
    if a in (1, 2, 3):
        return _embed(sigma_x, a - 1)
    raise ValueError(f"error index {a} outside 0..3")


def syndrome_of(a):
    if a not in (0, 1, 2, 3):
        raise ValueError(f"error index {a} outside 0..3")
    return SYNDROME_TABLE[a]


def syndrome_table_json():
    """Static syndrome table as a four-row JSON array."""
    rows = [{"error": a, "syndrome": SYNDROME_TABLE[a]} for a in range(4)]
    return json.dumps(rows)


def stabilizer_generators():
    m1 = _embed(sigma_z, 0) @ _embed(sigma_z, 1)
    m2 = _embed(sigma_z, 1) @ _embed(sigma_z, 2)
    return m1, m2


def syndrome_from_commutation(a):
    """Syndrome read off the commutation pattern with the stabilizers.

    Bit 0 when the error commutes with the generator, 1 when it
    anticommutes; must reproduce the static table for every error.
    """
    e = error_operator(a)
    bits = []
    for m in stabilizer_generators():
        commutes = max_abs(commutator(e, m)) < 1e-12
        anticommutes = max_abs(anticommutator(e, m)) < 1e-12
        if commutes == anticommutes:
            raise ValueError("error neither commutes nor anticommutes")
        bits.append("0" if commutes else "1")
    return "".join(bits)


def logical_zero():
    return basis_state(DIM, 0)  # |000>


def logical_one():
    return basis_state(DIM, 7)  # |111>


def encode(c0, c1, tol=1e-9):
    norm = abs(c0) ** 2 + abs(c1) ** 2
    if abs(norm - 1.0) > tol:
        raise ValueError("encode requires |c0|^2 + |c1|^2 = 1")
    return c0 * logical_zero() + c1 * logical_one()


def code_vector(a, i):
    """|v_a^i> = E_a |i_L>, the error-adapted orthonormal basis."""
    if i not in (0, 1):
        raise ValueError("logical index must be 0 or 1")
    logical = logical_zero() if i == 0 else logical_one()
    return error_operator(a) @ logical


def recovery_channel():
    """Kraus channel R_a = E_a sum_i |v_a^i><v_a^i|; trace preserving."""
    ops = []
    for a in range(4):
        proj = sum(density(code_vector(a, i)) for i in (0, 1))
        ops.append(error_operator(a) @ proj)
    return KrausChannel(tuple(ops))


@dataclass(frozen=True)
class SubsystemIso:
    """Unitary relabeling of the physical space as qubit (x) syndrome."""

    unitary: np.ndarray
    syndrome_labels: tuple
    q_dim: int = 2
    e_dim: int = 4

    def apply(self, state):
        return self.unitary @ np.asarray(state, dtype=complex)

    def conjugate(self, op):
        return self.unitary @ np.asarray(op, dtype=complex) @ dagger(self.unitary)


def subsystem_iso_Q():
    """|v_a^i> -> |i> (x) |e_a>, syndrome basis ordered by the static table.

    Under this map every error leaves the qubit factor untouched and only
    relabels the syndrome factor.
    """
    u = np.zeros((DIM, DIM), dtype=complex)
    for i in (0, 1):
        for a in range(4):
            u += np.outer(basis_state(DIM, 4 * i + a), code_vector(a, i).conj())
    return SubsystemIso(unitary=u, syndrome_labels=SYNDROME_TABLE)


def subsystem_iso_Qprime():
    """|abc> -> |l=a> (x) |m1=a+b, m2=b+c> (sums mod 2).

    l, m1, m2 mark the -1 eigenspaces of Z1, Z1Z2, Z2Z3.  The labels follow
    the computational basis with positive real phases, the convention fixed
    by requiring the global flip X1X2X3 to act as a positive-real qubit flip.
    """
    u = np.zeros((DIM, DIM), dtype=complex)
    labels = ("00", "01", "10", "11")
    for idx in range(DIM):
        a = (idx >> 2) & 1
        b = (idx >> 1) & 1
        c = idx & 1
        l, m1, m2 = a, a ^ b, b ^ c
        u[4 * l + 2 * m1 + m2, idx] = 1.0
    return SubsystemIso(unitary=u, syndrome_labels=labels)


def code_observables():
    z_c = density(logical_zero()) - density(logical_one())
    x_c = np.outer(logical_zero(), logical_one().conj())
    x_c = x_c + dagger(x_c)
    return x_c, z_c


def frame_from_errors():
    """Frame with full support: O_q = sum_a E_a O_C E_a, Y = -i Z X.

    The four conjugated copies act on orthogonal error sectors, so the sums
    square to the identity and inherit the Pauli relations exactly.
    """
    x_c, z_c = code_observables()
    x_q = np.zeros((DIM, DIM), dtype=complex)
    z_q = np.zeros((DIM, DIM), dtype=complex)
    for a in range(4):
        e = error_operator(a)
        x_q += e @ x_c @ e
        z_q += e @ z_c @ e
    y_q = -1j * (z_q @ x_q)
    return EncodedQubitFrame(
        support=identity(DIM), x=x_q, y=y_q, z=z_q, label="repetition_errors"
    )


def error_recovery_words():
    """All sixteen operators E_b R_a (recovery first, then a fresh error)."""
    channel = recovery_channel()
    words = {}
    for b in range(4):
        e_b = error_operator(b)
        for a in range(4):
            words[(b, a)] = e_b @ channel.ops[a]
    return words


def _check(name, deviation, tol):
    deviation = float(deviation)
    return CheckResult(name, deviation, deviation <= tol)


def _random_encoded(rng):
    c = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    c = c / np.linalg.norm(c)
    return encode(c[0], c[1])


def invariance_suite(trials, seed=0, tol=1e-9):
    """Randomized evidence that the error-built frame ignores the noise.

    For random encoded states: expectations are unchanged by any single
    error, by recovered words of alternating errors and matched resets, and
    by error-then-full-recovery cycles at the density-operator level.  The
    frame also commutes with every word E_b R_a.  trials = 0 yields an empty,
    vacuously passing report.
    """
    if trials < 0:
        raise ValueError("trials must be >= 0")
    label = "repetition_invariance"
    if trials == 0:
        return VerificationReport(label, float(tol), int(seed), ())

    rng = np.random.default_rng(seed)
    frame = frame_from_errors()
    channel = recovery_channel()
    obs = frame.observables()

    single_dev = 0.0
    word_dev = 0.0
    channel_dev = 0.0
    for _ in range(trials):
        psi = _random_encoded(rng)
        ref = [np.vdot(psi, o @ psi).real for o in obs]

        for a in range(4):
            phi = error_operator(a) @ psi
            for o, r in zip(obs, ref):
                single_dev = max(single_dev, abs(np.vdot(phi, o @ phi).real - r))

        # pure-state word: each reset matches the preceding error, the only
        # branch with nonzero amplitude
        phi = psi.copy()
        for _ in range(int(rng.integers(1, 4))):
            b = int(rng.integers(0, 4))
            phi = channel.ops[b] @ (error_operator(b) @ phi)
            for o, r in zip(obs, ref):
                word_dev = max(word_dev, abs(np.vdot(phi, o @ phi).real - r))

        rho = density(psi)
        for _ in range(int(rng.integers(1, 4))):
            b = int(rng.integers(0, 4))
            e = error_operator(b)
            rho = channel.apply(e @ rho @ e)
            for o, r in zip(obs, ref):
                channel_dev = max(channel_dev, abs(np.trace(rho @ o).real - r))

    words = error_recovery_words()
    alg = OperatorAlgebra(tuple(words.values()), label="error_recovery_words")
    commute_dev = frame_commutes_with(frame, alg, tol).max_deviation

    checks = (
        _check("single_error_expectation_invariance", single_dev, tol),
        _check("recovered_word_expectation_invariance", word_dev, tol),
        _check("error_then_recovery_channel_invariance", channel_dev, tol),
        _check("frame_commutes_with_error_recovery_words", commute_dev, tol),
    )
    return VerificationReport(label, float(tol), int(seed), checks)
