"""Encoded-qubit frames and finite-dimensional operator-algebra tools.

An encoded qubit is specified operationally: a support projector P together
with Hermitian observables X, Y, Z that reproduce the Pauli relations on the
range of P.  ``verify_frame`` turns that definition into a numerical report.
The commutant and isotypic machinery locates such qubits inside the structure
that a noise algebra imposes on the state space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    commutator,
    anticommutator,
    dagger,
    eigh,
    identity,
    max_abs,
    random_haar_state,
)

__all__ = [
    "CheckResult",
    "VerificationReport",
    "EncodedQubitFrame",
    "OperatorAlgebra",
    "IsotypicSummary",
    "IsotypicSplitError",
    "verify_frame",
    "commutant_basis",
    "isotypic_decomposition",
    "frame_commutes_with",
    "expectation",
    "generated_algebra_dimension",
]


@dataclass(frozen=True)
class CheckResult:
    """One named numerical check with its worst deviation."""

    name: str
    max_deviation: float
    passed: bool

    def to_json_dict(self):
        return {
            "name": self.name,
            "max_deviation": self.max_deviation,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    label: str
    tolerance: float
    seed: int
    checks: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "checks", tuple(self.checks))

    @property
    def all_pass(self):
        return all(c.passed for c in self.checks)

    @property
    def max_deviation(self):
        return max((c.max_deviation for c in self.checks), default=0.0)

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json_dict(self):
        return {
            "label": self.label,
            "tolerance": self.tolerance,
            "seed": self.seed,
            "checks": [c.to_json_dict() for c in self.checks],
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_json_dict(), indent=indent)


def _check(name, deviation, tol):
    deviation = float(deviation)
    return CheckResult(name, deviation, deviation <= tol)


@dataclass(frozen=True)
class EncodedQubitFrame:
    """Support projector plus encoded X, Y, Z observables."""

    support: np.ndarray
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    label: str = "frame"

    def __post_init__(self):
        for name in ("support", "x", "y", "z"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=complex))
        shape = self.support.shape
        if len(shape) != 2 or shape[0] != shape[1]:
            raise ValueError("support must be a square matrix")
        for name in ("x", "y", "z"):
            if getattr(self, name).shape != shape:
                raise ValueError(f"frame member {name} has mismatched dimension")

    @property
    def ambient_dim(self):
        return self.support.shape[0]

    def observables(self):
        return (self.x, self.y, self.z)

    def support_projector_defect(self):
        p = self.support
        return max(max_abs(p - dagger(p)), max_abs(p @ p - p))


def verify_frame(frame, tol=1e-9, seed=0):
    """Check that (P, X, Y, Z) generates the operator algebra of one qubit.

    Six checks, each reported with its worst entrywise deviation:
    hermiticity, the cyclic commutators [A,B] = 2iC, the anticommutators
    {A,B} = 2 delta_AB P, squares A^2 = P, confinement PA = AP = A, and an
    even support trace of at least 2 (a qubit needs two levels per syndrome
    value).
    """
    p = frame.support
    obs = dict(zip("XYZ", frame.observables()))

    herm = max(max_abs(o - dagger(o)) for o in obs.values())

    comm = 0.0
    for a, b, c in (("X", "Y", "Z"), ("Y", "Z", "X"), ("Z", "X", "Y")):
        comm = max(comm, max_abs(commutator(obs[a], obs[b]) - 2j * obs[c]))

    anti = 0.0
    names = "XYZ"
    for a in names:
        for b in names:
            target = 2.0 * p if a == b else 0.0
            anti = max(anti, max_abs(anticommutator(obs[a], obs[b]) - target))

    squares = max(max_abs(o @ o - p) for o in obs.values())

    confined = max(
        max(max_abs(p @ o - o), max_abs(o @ p - o)) for o in obs.values()
    )

    tr = float(np.real(np.trace(p)))
    nearest_even = max(2.0, 2.0 * np.round(tr / 2.0))
    parity = abs(tr - nearest_even)

    checks = (
        _check("hermitian_observables", herm, tol),
        _check("cyclic_commutators", comm, tol),
        _check("pairwise_anticommutators", anti, tol),
        _check("squares_equal_support", squares, tol),
        _check("observables_confined_to_support", confined, tol),
        _check("support_trace_even", parity, tol),
    )
    return VerificationReport(frame.label, float(tol), int(seed), checks)


@dataclass(frozen=True)
class OperatorAlgebra:
    """A set of generators on one ambient space; adjoints are implied."""

    generators: tuple
    label: str = "algebra"

    def __post_init__(self):
        gens = tuple(np.asarray(g, dtype=complex) for g in self.generators)
        if not gens:
            raise ValueError("OperatorAlgebra needs at least one generator")
        dim = gens[0].shape[0]
        for g in gens:
            if g.ndim != 2 or g.shape != (dim, dim):
                raise ValueError("generators must be square with one shared dimension")
        object.__setattr__(self, "generators", gens)

    @property
    def ambient_dim(self):
        return self.generators[0].shape[0]

    def with_adjoints(self):
        out = list(self.generators)
        for g in self.generators:
            gd = dagger(g)
            if max_abs(g - gd) > 0.0:
                out.append(gd)
        return out


def _nullspace_matrices(constraints, dim, rcond=1e-10):
    """Orthonormal (Hilbert-Schmidt) basis of the joint nullspace.

    constraints is a list of dim^2 x dim^2 arrays acting on vec(M) in
    row-major convention; returns the M matrices.
    """
    stacked = np.vstack(constraints)
    _, svals, vh = np.linalg.svd(stacked)
    cutoff = rcond * max(1.0, svals[0] if len(svals) else 1.0)
    rank = int(np.sum(svals > cutoff))
    null_rows = vh[rank:]
    return [row.conj().reshape(dim, dim) for row in null_rows]


def commutant_basis(alg):
    """Orthonormal basis of {M : [M, G] = 0 for all generators and adjoints}.

    Found as the nullspace of the stacked linear commutation constraints; for
    vec in row-major order, vec(MG - GM) = (1 (x) G^T - G (x) 1) vec(M).
    """
    n = alg.ambient_dim
    eye = identity(n)
    constraints = []
    for g in alg.with_adjoints():
        constraints.append(np.kron(eye, g.T) - np.kron(g, eye))
    return _nullspace_matrices(constraints, n)


@dataclass(frozen=True)
class IsotypicSummary:
    """Multiset of (multiplicity, irrep dimension) blocks of an algebra."""

    blocks: tuple
    ambient_dim: int
    commutant_dim: int

    def as_multiset(self):
        return tuple(sorted(self.blocks))

    def identities_hold(self):
        total = sum(m * d for m, d in self.blocks)
        comm = sum(m * m for m, d in self.blocks)
        return total == self.ambient_dim and comm == self.commutant_dim


class IsotypicSplitError(RuntimeError):
    """Raised when a random central element fails to separate the blocks.

    The caller should retry with a different seed; the failure is a property
    of the drawn coefficients, not of the algebra.
    """


def _span_rank(vectors, rcond=1e-8):
    if not vectors:
        return 0
    stacked = np.vstack([np.ravel(v) for v in vectors])
    svals = np.linalg.svd(stacked, compute_uv=False)
    return int(np.sum(svals > rcond * max(1.0, svals[0])))


def isotypic_decomposition(alg, seed=0, cluster_gap=1e-6):
    """Block structure (m_i, d_i) of the algebra generated by alg.

    A random Hermitian element of the center separates the isotypic
    components; within each component the commutant restricts to a full
    matrix algebra of dimension m_i^2 and the block dimension factors as
    m_i * d_i.
    """
    n = alg.ambient_dim
    comm = commutant_basis(alg)
    center_gens = OperatorAlgebra(
        tuple(alg.generators) + tuple(comm), label=f"{alg.label}+commutant"
    )
    center = commutant_basis(center_gens)

    rng = np.random.default_rng(seed)
    h = np.zeros((n, n), dtype=complex)
    for b in center:
        h += rng.standard_normal() * (b + dagger(b)) / 2.0
        h += rng.standard_normal() * (b - dagger(b)) / 2.0j
    # guard against an accidentally tiny draw
    if max_abs(h) < 1e-12:
        h = h + identity(n)

    w, v = eigh(h, tol=1e-8)
    clusters = []
    start = 0
    for j in range(1, n + 1):
        if j == n or w[j] - w[j - 1] > cluster_gap:
            clusters.append((start, j))
            start = j

    blocks = []
    for lo, hi in clusters:
        vb = v[:, lo:hi]
        bdim = hi - lo
        restricted = [dagger(vb) @ m @ vb for m in comm]
        m_sq = _span_rank(restricted)
        m = int(round(np.sqrt(m_sq)))
        if m * m != m_sq or m == 0 or bdim % m != 0:
            raise IsotypicSplitError(
                f"block of dim {bdim} gave commutant rank {m_sq}; "
                "degenerate central eigenvalues, retry with a new seed"
            )
        blocks.append((m, bdim // m))

    summary = IsotypicSummary(
        blocks=tuple(sorted(blocks)),
        ambient_dim=n,
        commutant_dim=len(comm),
    )
    if not summary.identities_hold():
        raise IsotypicSplitError(
            "dimension identities failed after clustering; "
            "degenerate central eigenvalues, retry with a new seed"
        )
    return summary


def isotypic_decomposition_retrying(alg, seed=0, attempts=8):
    """isotypic_decomposition with deterministic retries on a failed split."""
    last = None
    for k in range(attempts):
        try:
            return isotypic_decomposition(alg, seed=seed + k)
        except IsotypicSplitError as err:  # rare; new coefficients usually separate
            last = err
    raise last


def frame_commutes_with(frame, alg, tol=1e-9):
    """Worst commutator of each generator against the frame observables."""
    if frame.ambient_dim != alg.ambient_dim:
        raise ValueError("frame and algebra dimensions differ")
    checks = []
    for j, g in enumerate(alg.generators):
        dev = max(max_abs(commutator(o, g)) for o in frame.observables())
        checks.append(_check(f"commutes_with_generator_{j}", dev, tol))
    return VerificationReport(
        f"{frame.label} vs {alg.label}", float(tol), 0, tuple(checks)
    )


def expectation(op, state, tol=1e-9):
    """<psi|O|psi> for kets, tr(rho O) for density operators; O Hermitian."""
    op = np.asarray(op, dtype=complex)
    if max_abs(op - dagger(op)) > tol:
        raise ValueError("expectation requires a Hermitian operator")
    state = np.asarray(state, dtype=complex)
    if state.ndim == 1:
        if op.shape[0] != state.shape[0]:
            raise ValueError("operator and state dimensions differ")
        value = np.vdot(state, op @ state)
    elif state.ndim == 2:
        if op.shape != state.shape:
            raise ValueError("operator and state dimensions differ")
        value = np.trace(state @ op)
    else:
        raise ValueError("state must be a vector or a density operator")
    return float(np.real(value))


def generated_algebra_dimension(alg, word_length=4, restrict_to=None):
    """Linear dimension of the span of generator words up to word_length.

    Words start from the identity and multiply generators and adjoints on the
    right.  restrict_to, if given, is an isometry whose columns frame the
    subspace on which the span is measured.
    """
    gens = alg.with_adjoints()
    n = alg.ambient_dim
    words = [identity(n)]
    frontier = [identity(n)]
    rank = _span_rank(words)
    for _ in range(word_length):
        nxt = []
        for w in frontier:
            for g in gens:
                nxt.append(w @ g)
        words.extend(nxt)
        frontier = nxt
        new_rank = _span_rank(words)
        if new_rank == rank:
            # One more letter added no direction: the span is closed under
            # the product, so longer words cannot either.
            break
        rank = new_rank
    if restrict_to is not None:
        words = [dagger(restrict_to) @ w @ restrict_to for w in words]
    return _span_rank(words)


def invariant_expectation_defect(frame, unitaries, states):
    """Worst change of any frame expectation when states flow through unitaries."""
    dev = 0.0
    for psi in states:
        for u in unitaries:
            phi = u @ psi
            for o in frame.observables():
                before = np.vdot(psi, o @ psi)
                after = np.vdot(phi, o @ phi)
                dev = max(dev, abs(after - before))
    return float(dev)


def haar_states(dim, count, seed):
    """count Haar states drawn from one deterministic stream."""
    rng = np.random.default_rng(seed)
    return [random_haar_state(dim, rng) for _ in range(count)]
