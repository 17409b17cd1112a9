//! Tight projective group frames end to end: orbit Gramians, the projection
//! test, the orbit-side structure conditions, and reconstruction of a frame
//! vector from nothing but the Gramian.
//!
//! Run with `cargo run --example tight_frames`.

use std::sync::Arc;

use num_complex::Complex64;
use projframe::frames::{
    assemble_block_orbit, check_orbit_tightness_conditions, construct_frame, gramian_of_orbit,
    is_tight, random_tight_gramian,
};
use projframe::numerics::ToleranceConfig;
use projframe::repn::dihedral8_irreducibles;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn main() {
    let tol = ToleranceConfig::default();
    let set = Arc::new(dihedral8_irreducibles());
    let n = set.group().order() as f64;

    // an orbit needs ||v||^2 = d/|G| per irreducible component to be tight
    let good = (2.0f64 / n).sqrt();
    let components = vec![
        (0usize, vec![c(good), c(0.0)]),
        (1usize, vec![c(0.0), c(good)]),
    ];
    let report = check_orbit_tightness_conditions(&set, &components, &tol).unwrap();
    println!("orbit-side conditions for v = v_rho1 + v_rho2:");
    for check in &report.norm_conditions {
        println!(
            "  {}: {:.4} vs {:.4} -> {}",
            check.description, check.value, check.expected, check.pass
        );
    }
    println!("  tight: {}", report.tight);

    // the Gramian side agrees
    let (rep, stacked) = assemble_block_orbit(&set, &components, &tol).unwrap();
    let gramian = gramian_of_orbit(&rep, &stacked, &tol).unwrap();
    let direct = is_tight(&gramian, &set, &tol).unwrap();
    println!(
        "Gramian-side projection test: tight = {} (idempotent defect {:.1e})",
        direct.tight, direct.max_idempotent_defect
    );
    assert_eq!(report.tight, direct.tight);

    // breaking the norm condition breaks tightness
    let bad = vec![(0usize, vec![c(1.0), c(0.0)])];
    let report = check_orbit_tightness_conditions(&set, &bad, &tol).unwrap();
    println!("\nwith ||v||^2 = 1 instead of d/|G|: tight = {}", report.tight);
    assert!(!report.tight);

    // reconstruction: given only a tight Gramian, factor each Fourier
    // coefficient as a sum of rank-one projections and read off the vector
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let target = random_tight_gramian(&set, &mut rng);
    println!("\nreconstructing a random tight Gramian:");
    let constructed = construct_frame(&target, &set, &tol).unwrap();
    println!(
        "  multiplicities {:?}, ambient dimension {}",
        constructed.vector.multiplicities(),
        constructed.vector.total_dim()
    );
    println!("  rebuilt-Gramian residual {:.2e}", constructed.residual);
    assert!(constructed.residual < 1e-8);

    // the synthesized orbit really is a normalised tight frame: its frame
    // operator sums phi_g phi_g* to the identity on the span
    let orbit = constructed.vector.synthesize_orbit(&set);
    let dim = constructed.vector.total_dim();
    let mut frame_op = projframe::numerics::CMatrix::zeros(dim, dim);
    for phi in &orbit {
        for i in 0..dim {
            for j in 0..dim {
                frame_op[(i, j)] += phi[i] * phi[j].conj();
            }
        }
    }
    let defect = frame_op.max_abs_diff(&projframe::numerics::CMatrix::identity(dim));
    println!("  frame operator deviates from I by {defect:.2e} (Parseval)");
    assert!(defect < 1e-9);

    // vectors are recovered only up to a unitary mixing per block; the
    // Gramian is the invariant, and it matches entrywise
    let rebuilt = constructed.rebuilt.to_dense();
    let input = target.to_dense();
    println!(
        "  Gramian entries agree to {:.2e} even though vectors are basis-dependent",
        rebuilt.max_abs_diff(&input)
    );
}
