//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line. The same checks back `projframe selftest`.

use projframe::selftest::{self, CriterionResult};

fn assert_criterion(result: CriterionResult) {
    println!("{}", result.line());
    assert!(result.passed, "{}", result.line());
}

#[test]
fn a01_klein_determinant_identity() {
    assert_criterion(selftest::c01_klein_determinant());
}

#[test]
fn a02_klein_trivial_cocycle_factorization() {
    assert_criterion(selftest::c02_klein_trivial_factorization());
}

#[test]
fn a03_dihedral_block_diagonalization() {
    assert_criterion(selftest::c03_dihedral_block_diagonalization());
}

#[test]
fn a04_e_matrices_exact_and_unitary() {
    assert_criterion(selftest::c04_e_matrices_exact());
}

#[test]
fn a05_fourier_inversion_and_plancherel() {
    assert_criterion(selftest::c05_inversion_and_plancherel());
}

#[test]
fn a06_convolution_theorem_both_directions() {
    assert_criterion(selftest::c06_convolution_theorem());
}

#[test]
fn a07_rank_parity_and_rank_formula() {
    assert_criterion(selftest::c07_rank_parity());
}

#[test]
fn a08_tight_frame_equivalences() {
    assert_criterion(selftest::c08_tightness_equivalences());
}

#[test]
fn a09_construction_round_trip() {
    assert_criterion(selftest::c09_construction_round_trip());
}

#[test]
fn a10_counting_identities() {
    assert_criterion(selftest::c10_counting_identities());
}

#[test]
fn a11_harmonic_frame_census() {
    assert_criterion(selftest::c11_harmonic_frames());
}

#[test]
fn selftest_runs_everything_within_budget() {
    let start = std::time::Instant::now();
    let results = selftest::run_all();
    assert_eq!(results.len(), 11);
    assert!(results.iter().all(|r| r.passed));
    // full-suite wall-clock budget
    assert!(start.elapsed().as_secs() < 30);
}
