//! The orthogonal decomposition of a function into rho-components, the
//! fine-scale refinement, and how both show up in the rank of the group
//! matrix.
//!
//! Run with `cargo run --example rho_decomposition`.

use std::sync::Arc;

use num_complex::Complex64;
use projframe::blockdiag::rank;
use projframe::fourier::{fine_component, is_rho_function, rho_component};
use projframe::galpha::GAlphaMatrix;
use projframe::numerics::{vec_inner, vec_norm, ToleranceConfig};
use projframe::repn::dihedral8_irreducibles;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let tol = ToleranceConfig::default();
    let set = Arc::new(dihedral8_irreducibles());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f: Vec<Complex64> = (0..8)
        .map(|_| Complex64::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0))
        .collect();

    // coarse decomposition: f = f_rho1 + f_rho2, orthogonal pieces
    let f1 = rho_component(&f, &set, 0).unwrap();
    let f2 = rho_component(&f, &set, 1).unwrap();
    let mut recombined = [Complex64::new(0.0, 0.0); 8];
    for g in 0..8 {
        recombined[g] = f1[g] + f2[g];
    }
    println!("||f||          = {:.6}", vec_norm(&f));
    println!("||f_rho1||     = {:.6}", vec_norm(&f1));
    println!("||f_rho2||     = {:.6}", vec_norm(&f2));
    println!("<f_rho1, f_rho2> = {:.2e}", vec_inner(&f1, &f2).norm());
    let err: f64 = recombined
        .iter()
        .zip(&f)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("f_rho1 + f_rho2 recombines to f within {err:.2e}");
    assert!(err < 1e-12);

    // each component is supported on a single block
    assert!(is_rho_function(&f1, &set, 0, &tol).unwrap());
    assert!(is_rho_function(&f2, &set, 1, &tol).unwrap());
    assert!(!is_rho_function(&f, &set, 0, &tol).unwrap());

    // fine scale: each f_rho splits along the rows of the block
    println!("\nfine components and the ranks of their group matrices:");
    for idx in 0..2 {
        for j in 0..2 {
            let fine = fine_component(&f, &set, idx, j).unwrap();
            let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), fine.clone()).unwrap();
            let cert = rank(&m, &set, &tol).unwrap();
            println!(
                "  f_({}, row {j}): ||.|| = {:.4}, rank M = {} (always 0 or d_rho)",
                set.label(idx),
                vec_norm(&fine),
                cert.rank
            );
            assert!(cert.rank == 0 || cert.rank == 2);
        }
    }

    // the fine pieces telescope back to the coarse ones
    let f10 = fine_component(&f, &set, 0, 0).unwrap();
    let f11 = fine_component(&f, &set, 0, 1).unwrap();
    let err: f64 = (0..8)
        .map(|g| (f10[g] + f11[g] - f1[g]).norm())
        .fold(0.0, f64::max);
    println!("\nf_(rho1,0) + f_(rho1,1) = f_rho1 within {err:.2e}");
    assert!(err < 1e-12);

    // a coordinate function is already a fine component
    let coord = set.rep(1).coordinate(0, 1);
    assert!(is_rho_function(&coord, &set, 1, &tol).unwrap());
    let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), coord).unwrap();
    println!(
        "coordinate function rho2_01 gives a rank-{} group matrix",
        rank(&m, &set, &tol).unwrap().rank
    );
}
