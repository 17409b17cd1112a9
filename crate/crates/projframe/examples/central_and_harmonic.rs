//! Central and harmonic frames: Gramians built from character combinations,
//! the frame classification, and the census of harmonic frames on a cyclic
//! group.
//!
//! Run with `cargo run --example central_and_harmonic`.

use std::sync::Arc;

use projframe::frames::{central_gramian, classify, construct_frame, is_tight, FrameClassTag};
use projframe::group::FiniteGroup;
use projframe::numerics::ToleranceConfig;
use projframe::repn::{abelian_trivial_irreducibles, dihedral8_irreducibles};

fn main() {
    let tol = ToleranceConfig::default();

    // central frames on D8 with the nontrivial cocycle
    let d8 = Arc::new(dihedral8_irreducibles());
    println!("D8 with cocycle, central Gramians M(sum (d/|G|) chi):");
    for subset in [vec![0usize], vec![1], vec![0, 1]] {
        let gramian = central_gramian(&d8, &subset).unwrap();
        let class = classify(&gramian, &d8, &tol).unwrap();
        let tight = is_tight(&gramian, &d8, &tol).unwrap().tight;
        let labels: Vec<&str> = subset.iter().map(|&i| d8.label(i)).collect();
        println!(
            "  S = {:?}: class = {}, tight = {}",
            labels,
            class.tag.as_str(),
            tight
        );
        assert!(tight);
    }
    // a single block of full rank is homogeneous; the full set gives I
    let full = central_gramian(&d8, &[0, 1]).unwrap();
    assert_eq!(classify(&full, &d8, &tol).unwrap().tag, FrameClassTag::Central);

    // the reconstructed frame of a central Gramian is the coordinate frame
    let constructed = construct_frame(&full, &d8, &tol).unwrap();
    println!(
        "full central frame reconstructs {} vectors of dimension {} (coordinates sqrt(d/|G|) xi_kj(g))",
        d8.group().order(),
        constructed.vector.total_dim()
    );

    // harmonic frames: abelian group, trivial cocycle, coefficients in {0,1}
    let z4 = Arc::new(
        abelian_trivial_irreducibles(Arc::new(FiniteGroup::cyclic(4).unwrap())).unwrap(),
    );
    println!("\nZ4 harmonic census: each character subset gives one tight frame");
    let mut count = 0;
    for mask in 0..16usize {
        let subset: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
        let gramian = central_gramian(&z4, &subset).unwrap();
        let tight = is_tight(&gramian, &z4, &tol).unwrap().tight;
        assert!(tight);
        count += 1;
        if subset.len() == 2 {
            let class = classify(&gramian, &z4, &tol).unwrap();
            println!(
                "  subset {:?}: class = {} (rank-2 projection Gramian)",
                subset,
                class.tag.as_str()
            );
        }
    }
    println!("{count} = 2^4 tight Gramians in total, all with 0/1 coefficients");

    // one of them, unpacked: the subset {chi0, chi2} gives four vectors in
    // C^2 forming a tight frame
    let gramian = central_gramian(&z4, &[0, 2]).unwrap();
    let constructed = construct_frame(&gramian, &z4, &tol).unwrap();
    let orbit = constructed.vector.synthesize_orbit(&z4);
    println!("\nframe vectors for S = {{chi0, chi2}} (rows phi_g):");
    for (g, phi) in orbit.iter().enumerate() {
        let coords: Vec<String> = phi
            .iter()
            .map(|z| format!("{:+.3}{:+.3}i", z.re, z.im))
            .collect();
        println!("  phi_{g} = [{}]", coords.join(", "));
    }
}
