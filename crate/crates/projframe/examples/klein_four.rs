//! Tour of the Klein four-group with its nontrivial multiplier: the cocycle
//! table, the projective representation, (G,alpha)-matrices, the twisted
//! convolution, and the determinant identity.
//!
//! Run with `cargo run --example klein_four`.

use std::sync::Arc;

use num_complex::Complex64;
use projframe::cocycle::klein_cocycle;
use projframe::galpha::{alpha_convolve, recognize, GAlphaMatrix};
use projframe::numerics::{determinant_dense, ToleranceConfig};
use projframe::repn::klein_rep;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn main() {
    let tol = ToleranceConfig::default();
    let alpha = Arc::new(klein_cocycle());
    let group = alpha.group();

    println!("group {} of order {}", group.name(), group.order());
    println!("elements: {:?}", group.element_names());

    println!("\ncocycle table (rows g, columns h):");
    for g in group.elements() {
        let row: Vec<String> = group
            .elements()
            .map(|h| format!("{:+.0}", alpha.alpha(g, h).re))
            .collect();
        println!("  {}", row.join(" "));
    }
    println!("alpha(b, a) = {} but alpha(a, b) = {}: the twist is real",
        alpha.alpha(2, 1).re, alpha.alpha(1, 2).re);

    // the two-dimensional projective representation
    let rho = klein_rep();
    let report = rho.validate(&tol).unwrap();
    println!(
        "\nrho validates with product defect {:.1e}; unitary: {}",
        report.max_product_defect,
        rho.is_unitary()
    );
    println!("character of rho: {:?}", rho.character().values());

    // a (G,alpha)-matrix from nu = (1, 2, 3, 4)
    let nu = vec![c(1.0), c(2.0), c(3.0), c(4.0)];
    let m = GAlphaMatrix::new(Arc::clone(&alpha), nu.clone()).unwrap();
    println!("\nM_alpha(1,2,3,4):");
    let dense = m.to_dense();
    for g in 0..4 {
        let row: Vec<String> = (0..4).map(|h| format!("{:+.0}", dense[(g, h)].re)).collect();
        println!("  {}", row.join(" "));
    }

    // recognition recovers nu from the dense matrix
    let recovered = recognize(&dense, Arc::clone(&alpha), &tol).unwrap();
    assert_eq!(recovered.nu(), m.nu());
    println!("recognize(to_dense(m)) recovers nu exactly");

    // determinant identity: (n00^2 + n11^2 - n10^2 - n01^2)^2
    let det = determinant_dense(&dense);
    let formula = {
        let v = nu[0] * nu[0] + nu[3] * nu[3] - nu[1] * nu[1] - nu[2] * nu[2];
        v * v
    };
    println!(
        "\ndet = {:.1}, formula (n00^2+n11^2-n10^2-n01^2)^2 = {:.1}",
        det.re, formula.re
    );
    assert!((det - formula).norm() < 1e-10);

    // twisted convolution picks up the cocycle: e_b * e_ab = -e_a
    let mut e_b = vec![c(0.0); 4];
    e_b[2] = c(1.0);
    let mut e_ab = vec![c(0.0); 4];
    e_ab[3] = c(1.0);
    let conv = alpha_convolve(&e_b, &e_ab, &alpha);
    println!("\ne_b *_alpha e_ab = {:?} (the sign is alpha(b, ab) = -1)", conv);
    assert_eq!(conv[1], c(-1.0));

    // the algebra is closed under the inverse
    let inv = m.pseudoinverse(&tol).unwrap();
    let prod = m.mul(&inv).unwrap().to_dense();
    println!(
        "m * m^-1 deviates from I by {:.1e}; the inverse is again a (G,alpha)-matrix",
        prod.max_abs_diff(&projframe::numerics::CMatrix::identity(4))
    );
}
