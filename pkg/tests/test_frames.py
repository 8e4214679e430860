"""Frame verification and operator-algebra structure analysis."""

import json

import numpy as np
import pytest

from qubitbench.frames import (
    CheckResult,
    EncodedQubitFrame,
    IsotypicSplitError,
    OperatorAlgebra,
    VerificationReport,
    commutant_basis,
    expectation,
    frame_commutes_with,
    generated_algebra_dimension,
    haar_states,
    invariant_expectation_defect,
    isotypic_decomposition,
    isotypic_decomposition_retrying,
    verify_frame,
)
from qubitbench.linalg import (
    basis_state,
    commutator,
    density,
    identity,
    kron,
    max_abs,
    random_haar_state,
    sigma_x,
    sigma_y,
    sigma_z,
)

EXPECTED_CHECKS = (
    "hermitian_observables",
    "cyclic_commutators",
    "pairwise_anticommutators",
    "squares_equal_support",
    "observables_confined_to_support",
    "support_trace_even",
)


def pauli_frame():
    return EncodedQubitFrame(
        support=identity(2), x=sigma_x, y=sigma_y, z=sigma_z, label="pauli"
    )


def doubled_frame():
    # Two commuting copies: support is the full 4-dim space, trace 4.
    return EncodedQubitFrame(
        support=identity(4),
        x=kron(identity(2), sigma_x),
        y=kron(identity(2), sigma_y),
        z=kron(identity(2), sigma_z),
        label="doubled",
    )


def test_verify_frame_passes_exact_qubit():
    report = verify_frame(pauli_frame())
    assert report.all_pass
    assert report.max_deviation == 0.0
    assert tuple(c.name for c in report.checks) == EXPECTED_CHECKS


def test_verify_frame_passes_doubled_qubit():
    report = verify_frame(doubled_frame())
    assert report.all_pass
    assert report.max_deviation == 0.0


def test_verify_frame_flags_non_hermitian():
    frame = EncodedQubitFrame(identity(2), sigma_x, 1j * sigma_y, sigma_z, "bad")
    report = verify_frame(frame)
    assert not report.check("hermitian_observables").passed


def test_verify_frame_flags_scaled_observable():
    frame = EncodedQubitFrame(identity(2), sigma_x, sigma_y / 2.0, sigma_z, "bad")
    report = verify_frame(frame)
    assert not report.check("pairwise_anticommutators").passed
    assert not report.all_pass


def test_verify_frame_flags_wrong_handedness():
    # Swapping X and Y inverts the cyclic commutators but keeps everything else.
    frame = EncodedQubitFrame(identity(2), sigma_y, sigma_x, sigma_z, "bad")
    report = verify_frame(frame)
    assert not report.check("cyclic_commutators").passed
    assert report.check("pairwise_anticommutators").passed
    assert report.check("squares_equal_support").passed


def test_verify_frame_flags_odd_support_trace():
    proj = np.diag([1.0, 1.0, 1.0]).astype(complex)
    frame = EncodedQubitFrame(proj, np.zeros((3, 3)), np.zeros((3, 3)),
                              np.zeros((3, 3)), "odd")
    report = verify_frame(frame)
    assert not report.check("support_trace_even").passed


def test_verify_frame_flags_observable_leaving_support():
    proj = np.diag([1.0, 1.0, 0.0, 0.0]).astype(complex)
    x = np.zeros((4, 4), dtype=complex)
    x[:2, :2] = sigma_x
    y = np.zeros((4, 4), dtype=complex)
    y[:2, :2] = sigma_y
    z = np.zeros((4, 4), dtype=complex)
    z[:2, :2] = sigma_z
    good = EncodedQubitFrame(proj, x, y, z, "embedded")
    assert verify_frame(good).all_pass

    x_leak = x.copy()
    x_leak[2, 3] = x_leak[3, 2] = 1.0
    bad = EncodedQubitFrame(proj, x_leak, y, z, "leaky")
    report = verify_frame(bad)
    assert not report.check("observables_confined_to_support").passed


def test_frame_shape_validation():
    with pytest.raises(ValueError):
        EncodedQubitFrame(identity(2), sigma_x, sigma_y, identity(3), "bad")


def test_check_result_json_fields():
    c = CheckResult("demo", 1.5e-10, True)
    assert c.to_json_dict() == {"name": "demo", "max_deviation": 1.5e-10, "pass": True}


def test_report_json_shape():
    report = verify_frame(pauli_frame(), tol=1e-9, seed=3)
    doc = report.to_json_dict()
    assert sorted(doc.keys()) == ["checks", "label", "seed", "tolerance"]
    assert doc["label"] == "pauli"
    assert doc["tolerance"] == 1e-9
    parsed = json.loads(report.to_json())
    assert parsed == doc
    with pytest.raises(KeyError):
        report.check("not_a_check")


def test_commutant_of_irreducible_algebra_is_scalars():
    basis = commutant_basis(OperatorAlgebra((sigma_x, sigma_y, sigma_z), "pauli"))
    assert len(basis) == 1
    b = basis[0]
    assert max_abs(b / b[0, 0] - identity(2)) < 1e-9


def test_commutant_of_identity_is_everything():
    basis = commutant_basis(OperatorAlgebra((identity(2),), "trivial"))
    assert len(basis) == 4


def test_commutant_of_diagonal_generator():
    basis = commutant_basis(OperatorAlgebra((sigma_z,), "diag"))
    assert len(basis) == 2
    for b in basis:
        assert max_abs(b - np.diag(np.diag(b))) < 1e-9


def test_commutant_members_commute_with_generators():
    gens = (kron(sigma_x, identity(2)), kron(sigma_z, identity(2)))
    alg = OperatorAlgebra(gens, "half")
    basis = commutant_basis(alg)
    assert len(basis) == 4
    for b in basis:
        for g in gens:
            assert max_abs(commutator(b, g)) < 1e-9


def test_with_adjoints_adds_only_new_operators():
    alg = OperatorAlgebra((sigma_x, sigma_x + 1j * sigma_y), "mixed")
    ops = alg.with_adjoints()
    assert len(ops) == 3


def test_isotypic_full_matrix_algebra():
    summary = isotypic_decomposition(OperatorAlgebra((sigma_x, sigma_y, sigma_z), "pauli"))
    assert summary.as_multiset() == ((1, 2),)
    assert summary.identities_hold()


def test_isotypic_tensor_factor():
    gens = (kron(sigma_x, identity(2)), kron(sigma_y, identity(2)),
            kron(sigma_z, identity(2)))
    summary = isotypic_decomposition(OperatorAlgebra(gens, "factor"))
    assert summary.as_multiset() == ((2, 2),)
    assert summary.ambient_dim == 4
    assert summary.commutant_dim == 4


def test_isotypic_abelian_generator():
    summary = isotypic_decomposition(OperatorAlgebra((sigma_z,), "diag"))
    assert summary.as_multiset() == ((1, 1), (1, 1))


def test_isotypic_direct_sum_blocks():
    # 2-dim irreducible block plus a 1-dim trivial block.
    g1 = np.zeros((3, 3), dtype=complex)
    g1[:2, :2] = sigma_x
    g2 = np.zeros((3, 3), dtype=complex)
    g2[:2, :2] = sigma_z
    summary = isotypic_decomposition_retrying(OperatorAlgebra((g1, g2), "sum"))
    assert summary.as_multiset() == ((1, 1), (1, 2))


def test_isotypic_retry_is_seed_stable():
    alg = OperatorAlgebra((sigma_x, sigma_y, sigma_z), "pauli")
    a = isotypic_decomposition_retrying(alg, seed=0)
    b = isotypic_decomposition_retrying(alg, seed=99)
    assert a.as_multiset() == b.as_multiset()


def test_isotypic_split_error_is_runtime_error():
    assert issubclass(IsotypicSplitError, RuntimeError)


def test_frame_commutes_with_commuting_algebra():
    frame = doubled_frame()
    alg = OperatorAlgebra((kron(sigma_x, identity(2)),), "left")
    report = frame_commutes_with(frame, alg)
    assert report.all_pass
    assert report.checks[0].name == "commutes_with_generator_0"


def test_frame_commutes_with_detects_violation():
    frame = pauli_frame()
    alg = OperatorAlgebra((sigma_x,), "clash")
    assert not frame_commutes_with(frame, alg).all_pass


def test_frame_commutes_with_dim_mismatch():
    with pytest.raises(ValueError):
        frame_commutes_with(pauli_frame(), OperatorAlgebra((identity(4),), "big"))


def test_expectation_on_kets_and_densities():
    up = basis_state(2, 0)
    assert expectation(sigma_z, up) == pytest.approx(1.0)
    assert expectation(sigma_x, up) == pytest.approx(0.0)
    plus = (basis_state(2, 0) + basis_state(2, 1)) / np.sqrt(2)
    assert expectation(sigma_x, density(plus)) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        expectation(1j * sigma_x, up)


def test_generated_algebra_dimension_pauli():
    alg = OperatorAlgebra((sigma_x, sigma_z), "pauli-gen")
    assert generated_algebra_dimension(alg, word_length=2) == 4


def test_generated_algebra_dimension_restricted():
    # Restriction to an invariant subspace: fix the first factor, act on the
    # second; the compressed words span the full 2x2 algebra.
    gens = (kron(identity(2), sigma_x), kron(identity(2), sigma_z))
    alg = OperatorAlgebra(gens, "factor")
    sub = np.eye(4, dtype=complex)[:, :2]
    assert generated_algebra_dimension(alg, word_length=2, restrict_to=sub) == 4
    # The same span measured on a subspace the algebra leaves: only the
    # identity compression survives.
    swapped = OperatorAlgebra(
        (kron(sigma_x, identity(2)), kron(sigma_z, identity(2))), "swapped"
    )
    assert generated_algebra_dimension(swapped, word_length=2, restrict_to=sub) == 1


def test_invariant_expectation_defect_zero_for_symmetry():
    frame = doubled_frame()
    unitaries = [kron(u, identity(2)) for u in (sigma_x, sigma_z)]
    states = haar_states(4, 5, seed=2)
    assert invariant_expectation_defect(frame, unitaries, states) < 1e-12


def test_haar_states_shape_and_determinism():
    states = haar_states(3, 4, seed=9)
    assert len(states) == 4
    for psi in states:
        assert abs(np.linalg.norm(psi) - 1.0) < 1e-12
    again = haar_states(3, 4, seed=9)
    assert all(max_abs(a - b) == 0.0 for a, b in zip(states, again))
