//! The twisted Fourier transform: forward/inverse round trip, the Plancherel
//! identities, and the (order-swapped) convolution theorem.
//!
//! Run with `cargo run --example fourier_inversion`.

use std::sync::Arc;

use num_complex::Complex64;
use projframe::fourier::{check_plancherel, forward, forward_variant, inverse};
use projframe::galpha::alpha_convolve;
use projframe::group::FiniteGroup;
use projframe::repn::{abelian_trivial_irreducibles, dihedral8_irreducibles};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0))
        .collect()
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);

    // cyclic group: the transform is the classical DFT
    let z8 = Arc::new(
        abelian_trivial_irreducibles(Arc::new(FiniteGroup::cyclic(8).unwrap())).unwrap(),
    );
    let f = random_vec(&mut rng, 8);
    let image = forward(&f, &z8).unwrap();
    println!("Z8: one 1x1 block per character; first three blocks:");
    for idx in 0..3 {
        let v = image.block(idx)[(0, 0)];
        println!("  (F f)_chi{idx} = {:+.4}{:+.4}i", v.re, v.im);
    }
    let back = inverse(&image);
    let err: f64 = f
        .iter()
        .zip(&back)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("round trip error {err:.2e}");
    assert!(err < 1e-12);

    // dihedral group with the nontrivial cocycle: two 2x2 blocks
    let d8 = Arc::new(dihedral8_irreducibles());
    let nu = random_vec(&mut rng, 8);
    let mu = random_vec(&mut rng, 8);

    let report = check_plancherel(&nu, &mu, &d8).unwrap();
    println!(
        "\nD8 with cocycle: Plancherel residuals {:.2e} (Hermitian), {:.2e} (bilinear)",
        report.hermitian_residual, report.bilinear_residual
    );
    assert!(report.hermitian_residual < 1e-11);
    assert!(report.bilinear_residual < 1e-11);

    // the convolution theorem swaps the order: F(nu) F(mu) = F(mu * nu)
    let cocycle = d8.cocycle();
    let lhs = forward(&nu, &d8).unwrap().mul(&forward(&mu, &d8).unwrap());
    let correct = forward(&alpha_convolve(&mu, &nu, cocycle), &d8).unwrap();
    let swapped = forward(&alpha_convolve(&nu, &mu, cocycle), &d8).unwrap();
    println!(
        "F(nu)F(mu) vs F(mu * nu): {:.2e}   vs F(nu * mu): {:.2e} (order matters!)",
        lhs.max_abs_diff(&correct),
        lhs.max_abs_diff(&swapped)
    );
    assert!(lhs.max_abs_diff(&correct) < 1e-10);

    // the script variant reverses arguments and convolves over alpha-tilde
    let tilde = cocycle.tilde();
    let vlhs = forward_variant(&nu, &d8)
        .unwrap()
        .mul(&forward_variant(&mu, &d8).unwrap());
    let vrhs = forward_variant(&alpha_convolve(&nu, &mu, &tilde), &d8).unwrap();
    println!(
        "script variant: F'(nu)F'(mu) = F'(nu *_tilde mu) to {:.2e}",
        vlhs.max_abs_diff(&vrhs)
    );
    assert!(vlhs.max_abs_diff(&vrhs) < 1e-10);

    // transform of a basis vector is the inverse representation matrix
    let mut e_a = vec![Complex64::new(0.0, 0.0); 8];
    e_a[1] = Complex64::new(1.0, 0.0);
    let image = forward(&e_a, &d8).unwrap();
    println!("\n(F e_a)_rho1 = rho1(a)^-1 =");
    for i in 0..2 {
        println!(
            "  [{:+.1}{:+.1}i  {:+.1}{:+.1}i]",
            image.block(0)[(i, 0)].re,
            image.block(0)[(i, 0)].im,
            image.block(0)[(i, 1)].re,
            image.block(0)[(i, 1)].im
        );
    }
}
