//! Simultaneous block diagonalisation of the order-8 dihedral group matrices
//! with the nontrivial cocycle: the unitary E, the repeated transposed
//! Fourier blocks, the determinant factorisation, and the even-rank
//! restriction.
//!
//! Run with `cargo run --example dihedral_block_diagonalization`.

use std::sync::Arc;

use num_complex::Complex64;
use projframe::blockdiag::{block_diagonalize, determinant, rank, DiagonalizerE};
use projframe::galpha::GAlphaMatrix;
use projframe::numerics::{determinant_dense, ToleranceConfig};
use projframe::repn::dihedral8_irreducibles;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fmt(z: Complex64) -> String {
    if z.norm() < 1e-12 {
        "   .   ".to_string()
    } else if z.im.abs() < 1e-12 {
        format!("{:+.2}  ", z.re)
    } else if z.re.abs() < 1e-12 {
        format!("{:+.2}i ", z.im)
    } else {
        format!("{:+.1}{:+.1}i", z.re, z.im)
    }
}

fn main() {
    let tol = ToleranceConfig::default();
    let set = Arc::new(dihedral8_irreducibles());
    println!(
        "complete set for {} with the cocycle i^(kl): {:?}, dims {:?}",
        set.group().name(),
        set.labels(),
        set.reps().iter().map(|r| r.dim()).collect::<Vec<_>>()
    );

    let e = DiagonalizerE::build(Arc::clone(&set), &tol).unwrap();
    println!("\nunitary E (columns sqrt(d/|G|) [rho_k1, rho_k2] per (rho, k)):");
    for g in 0..8 {
        let row: Vec<String> = (0..8).map(|col| fmt(e.matrix()[(g, col)])).collect();
        println!("  {}", row.join(" "));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let nu: Vec<Complex64> = (0..8)
        .map(|_| Complex64::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0))
        .collect();
    let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu).unwrap();

    let blocks = block_diagonalize(&m, &e, &tol).unwrap();
    println!("\nconj(E)* M conj(E) block diagonal with {} blocks:", blocks.len());
    for (i, block) in blocks.iter().enumerate() {
        println!(
            "  block {i}: [{} {}; {} {}]",
            fmt(block[(0, 0)]),
            fmt(block[(0, 1)]),
            fmt(block[(1, 0)]),
            fmt(block[(1, 1)])
        );
    }
    assert!(blocks[0].max_abs_diff(&blocks[1]) < 1e-12);
    assert!(blocks[2].max_abs_diff(&blocks[3]) < 1e-12);
    println!("blocks repeat in pairs: each irreducible appears d_rho times");

    let block_det = determinant(&m, &set).unwrap();
    let dense_det = determinant_dense(&m.to_dense());
    println!(
        "\ndet via blocks  = {:.6}+{:.6}i\ndet via dense LU = {:.6}+{:.6}i",
        block_det.re, block_det.im, dense_det.re, dense_det.im
    );
    assert!((block_det - dense_det).norm() < 1e-8 * (1.0 + dense_det.norm()));

    // every (D8, alpha)-matrix has even rank: both irreducibles are
    // two-dimensional, so ranks come in multiples of two
    println!("\nrank census over random matrices with prescribed block ranks:");
    for target in 0..=2usize {
        let basis = projframe::frames::random_orthonormal(&mut rng, 2, target);
        let mut block = projframe::numerics::CMatrix::zeros(2, 2);
        for w in &basis {
            for i in 0..2 {
                for j in 0..2 {
                    block[(i, j)] += w[i] * w[j].conj();
                }
            }
        }
        let image = projframe::fourier::FourierImage::from_blocks(
            Arc::clone(&set),
            vec![block, projframe::numerics::CMatrix::identity(2)],
        )
        .unwrap();
        let nu = projframe::fourier::inverse(&image);
        let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu).unwrap();
        let cert = rank(&m, &set, &tol).unwrap();
        println!(
            "  block ranks ({target}, 2) -> rank {} = {:?}",
            cert.rank,
            cert.blocks
                .iter()
                .map(|(l, r, d)| format!("{l}: {d}x{r}"))
                .collect::<Vec<_>>()
        );
        assert_eq!(cert.rank, 2 * target + 4);
        assert_eq!(cert.rank % 2, 0);
    }
}
