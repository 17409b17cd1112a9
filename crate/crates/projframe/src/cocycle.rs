//! 2-cocycles on a finite group: storage, validation, derived cocycles, and
//! the alpha-element machinery that counts irreducibles.
//!
//! Table entries are stored exactly as roots of unity whenever possible
//! (`e^{2 pi i k/N}` as a reduced fraction `k/N`), with a complex-double view
//! for numerics. This keeps golden tests on the built-in examples bit-stable.

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupIndex, IDENTITY};
use crate::numerics::ToleranceConfig;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A unit-modulus complex number, either an exact root of unity
/// `e^{2 pi i num/den}` (reduced, `0 <= num < den`) or a floating pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UnitComplex {
    Root { num: i64, den: i64 },
    Approx(Complex64),
}

impl UnitComplex {
    pub const ONE: UnitComplex = UnitComplex::Root { num: 0, den: 1 };
    pub const MINUS_ONE: UnitComplex = UnitComplex::Root { num: 1, den: 2 };
    pub const I: UnitComplex = UnitComplex::Root { num: 1, den: 4 };

    /// `e^{2 pi i num/den}` in canonical reduced form. Panics if `den` is zero.
    pub fn root(num: i64, den: i64) -> UnitComplex {
        assert!(den != 0, "root of unity needs a nonzero denominator");
        let den = if den < 0 {
            // e^{2 pi i k/(-N)} = e^{2 pi i (-k)/N}
            return UnitComplex::root(-num, -den);
        } else {
            den
        };
        let num = num.rem_euclid(den);
        let g = gcd(num, den).max(1);
        UnitComplex::Root {
            num: num / g,
            den: den / g,
        }
    }

    pub fn approx(z: Complex64) -> UnitComplex {
        UnitComplex::Approx(z)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, UnitComplex::Root { .. })
    }

    /// Complex-double view. Quarter turns come out exactly as
    /// `1, i, -1, -i`, so exact tables stay bit-stable under this view.
    pub fn value(&self) -> Complex64 {
        match *self {
            UnitComplex::Root { num, den } => match (num, den) {
                (0, 1) => Complex64::new(1.0, 0.0),
                (1, 2) => Complex64::new(-1.0, 0.0),
                (1, 4) => Complex64::new(0.0, 1.0),
                (3, 4) => Complex64::new(0.0, -1.0),
                _ => {
                    let theta = 2.0 * std::f64::consts::PI * (num as f64) / (den as f64);
                    Complex64::new(theta.cos(), theta.sin())
                }
            },
            UnitComplex::Approx(z) => z,
        }
    }

    /// Distance of the modulus from 1.
    pub fn unit_defect(&self) -> f64 {
        match self {
            UnitComplex::Root { .. } => 0.0,
            UnitComplex::Approx(z) => (z.norm() - 1.0).abs(),
        }
    }

    pub fn mul(&self, other: &UnitComplex) -> UnitComplex {
        match (*self, *other) {
            (UnitComplex::Root { num: n1, den: d1 }, UnitComplex::Root { num: n2, den: d2 }) => {
                let l = d1 / gcd(d1, d2) * d2;
                UnitComplex::root(n1 * (l / d1) + n2 * (l / d2), l)
            }
            _ => UnitComplex::Approx(self.value() * other.value()),
        }
    }

    /// Multiplicative inverse (equals the conjugate on the unit circle).
    pub fn inv(&self) -> UnitComplex {
        match *self {
            UnitComplex::Root { num, den } => UnitComplex::root(-num, den),
            UnitComplex::Approx(z) => UnitComplex::Approx(z.inv()),
        }
    }

    pub fn conj(&self) -> UnitComplex {
        match *self {
            UnitComplex::Root { num, den } => UnitComplex::root(-num, den),
            UnitComplex::Approx(z) => UnitComplex::Approx(z.conj()),
        }
    }

    /// Exact equality when both sides are exact.
    pub fn eq_exact(&self, other: &UnitComplex) -> Option<bool> {
        match (self, other) {
            (UnitComplex::Root { .. }, UnitComplex::Root { .. }) => Some(self == other),
            _ => None,
        }
    }

    pub fn approx_eq(&self, other: &UnitComplex, tol: f64) -> bool {
        match self.eq_exact(other) {
            Some(eq) => eq,
            None => (self.value() - other.value()).norm() <= tol,
        }
    }
}

#[derive(Debug, Error)]
pub enum CocycleError {
    #[error("cocycle table row {row} has length {got}, expected {expected}")]
    Dimension {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("2-cocycle identity fails at triple ({x}, {y}, {z}), defect {defect:.3e}")]
    IdentityViolation {
        x: GroupIndex,
        y: GroupIndex,
        z: GroupIndex,
        defect: f64,
    },
    #[error("cocycles are defined on different groups")]
    GroupMismatch,
    #[error("coboundary entry {index} must be unit modulus and nonzero")]
    BadCoboundaryEntry { index: usize },
    #[error("operation requires a unitary cocycle")]
    NotUnitary,
    #[error("the table i^(k*l) satisfies the 2-cocycle identity on D_2m only when 4 divides m, got m = {m}")]
    UnsupportedDihedralOrder { m: usize },
}

/// A 2-cocycle `alpha: G x G -> C`, i.e. a table satisfying
/// `alpha(x,y) alpha(xy,z) = alpha(x,yz) alpha(y,z)` for all triples.
#[derive(Debug, Clone)]
pub struct Cocycle {
    group: Arc<FiniteGroup>,
    table: Vec<UnitComplex>,
    unitary: bool,
    exact: bool,
}

impl Cocycle {
    /// Validates the 2-cocycle identity on all `n^3` triples and wraps the
    /// table. Exact tables are checked with exact arithmetic; mixed tables
    /// with tolerance `tol.structural_zero`.
    pub fn new(
        group: Arc<FiniteGroup>,
        table: Vec<Vec<UnitComplex>>,
        tol: &ToleranceConfig,
    ) -> Result<Self, CocycleError> {
        let n = group.order();
        if table.len() != n {
            return Err(CocycleError::Dimension {
                row: 0,
                got: table.len(),
                expected: n,
            });
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(CocycleError::Dimension {
                    row,
                    got: entries.len(),
                    expected: n,
                });
            }
        }
        let flat: Vec<UnitComplex> = table.into_iter().flatten().collect();
        let exact = flat.iter().all(UnitComplex::is_exact);
        let unitary = flat.iter().all(|e| e.unit_defect() <= 1e-12);
        let cocycle = Cocycle {
            group,
            table: flat,
            unitary,
            exact,
        };
        cocycle.check_identity(tol)?;
        Ok(cocycle)
    }

    fn check_identity(&self, tol: &ToleranceConfig) -> Result<(), CocycleError> {
        let g = &self.group;
        let n = g.order();
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, y);
                for z in 0..n {
                    let lhs = self.entry(x, y).mul(self.entry(xy, z));
                    let rhs = self.entry(x, g.mul(y, z)).mul(self.entry(y, z));
                    let ok = match lhs.eq_exact(&rhs) {
                        Some(eq) => eq,
                        None => (lhs.value() - rhs.value()).norm() <= tol.structural_zero,
                    };
                    if !ok {
                        return Err(CocycleError::IdentityViolation {
                            x,
                            y,
                            z,
                            defect: (lhs.value() - rhs.value()).norm(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-runs the full validation; useful after loading from a file.
    pub fn validate(&self, tol: &ToleranceConfig) -> Result<(), CocycleError> {
        self.check_identity(tol)
    }

    /// The trivial cocycle `alpha = 1`.
    pub fn trivial(group: Arc<FiniteGroup>) -> Cocycle {
        let n = group.order();
        Cocycle {
            group,
            table: vec![UnitComplex::ONE; n * n],
            unitary: true,
            exact: true,
        }
    }

    /// The coboundary `beta(g,h) = c_g c_h / c_{gh}` of a unit-modulus map.
    /// Always a valid cocycle.
    pub fn coboundary(
        group: Arc<FiniteGroup>,
        c: &[UnitComplex],
    ) -> Result<Cocycle, CocycleError> {
        let n = group.order();
        if c.len() != n {
            return Err(CocycleError::Dimension {
                row: 0,
                got: c.len(),
                expected: n,
            });
        }
        for (index, entry) in c.iter().enumerate() {
            let modulus = entry.value().norm();
            if !(modulus.is_finite() && (modulus - 1.0).abs() <= 1e-12) {
                return Err(CocycleError::BadCoboundaryEntry { index });
            }
        }
        let exact = c.iter().all(UnitComplex::is_exact);
        let mut table = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                table.push(c[g].mul(&c[h]).mul(&c[group.mul(g, h)].inv()));
            }
        }
        Ok(Cocycle {
            group,
            table,
            unitary: true,
            exact,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|e| *e == UnitComplex::ONE)
    }

    pub fn entry(&self, g: GroupIndex, h: GroupIndex) -> &UnitComplex {
        &self.table[g * self.group.order() + h]
    }

    /// Numeric value `alpha(g, h)`.
    pub fn alpha(&self, g: GroupIndex, h: GroupIndex) -> Complex64 {
        self.entry(g, h).value()
    }

    pub fn table(&self) -> Vec<Vec<UnitComplex>> {
        let n = self.group.order();
        (0..n)
            .map(|g| (0..n).map(|h| *self.entry(g, h)).collect())
            .collect()
    }

    /// Structural comparison: same group tables and entrywise equal cocycle
    /// values (exact where possible, otherwise within `tol`).
    pub fn compatible(&self, other: &Cocycle, tol: f64) -> bool {
        self.group.mul_table() == other.group.mul_table()
            && self
                .table
                .iter()
                .zip(&other.table)
                .all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Pointwise product, a cocycle again.
    pub fn product(&self, other: &Cocycle) -> Result<Cocycle, CocycleError> {
        if self.group.mul_table() != other.group.mul_table() {
            return Err(CocycleError::GroupMismatch);
        }
        let table: Vec<UnitComplex> = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(Cocycle {
            group: Arc::clone(&self.group),
            unitary: table.iter().all(|e| e.unit_defect() <= 1e-12),
            exact: table.iter().all(UnitComplex::is_exact),
            table,
        })
    }

    /// Pointwise reciprocal `1/alpha`, a cocycle again.
    pub fn inverse(&self) -> Cocycle {
        Cocycle {
            group: Arc::clone(&self.group),
            table: self.table.iter().map(UnitComplex::inv).collect(),
            unitary: self.unitary,
            exact: self.exact,
        }
    }

    /// The cocycle `alpha~(a, b) = alpha(b^-1, a^-1)`.
    pub fn tilde(&self) -> Cocycle {
        let g = &self.group;
        let n = g.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(*self.entry(g.inv(b), g.inv(a)));
            }
        }
        Cocycle {
            group: Arc::clone(&self.group),
            table,
            unitary: self.unitary,
            exact: self.exact,
        }
    }

    /// Divides by the constant coboundary `alpha(1,1)` so that the result has
    /// `alpha(1,1) = 1`. Normalisation is never forced elsewhere; formulas
    /// carry `alpha(1,1)` explicitly.
    pub fn normalized(&self) -> Cocycle {
        let scale = self.entry(IDENTITY, IDENTITY).inv();
        Cocycle {
            group: Arc::clone(&self.group),
            table: self.table.iter().map(|e| e.mul(&scale)).collect(),
            unitary: self.unitary,
            exact: self.exact && scale.is_exact(),
        }
    }

    /// An element is an alpha-element when `alpha(g, h) = alpha(h, g)` for
    /// every `h` in its centralizer.
    pub fn is_alpha_element(&self, g: GroupIndex, tol: &ToleranceConfig) -> bool {
        self.group.centralizer(g).into_iter().all(|h| {
            self.entry(g, h)
                .approx_eq(self.entry(h, g), tol.structural_zero)
        })
    }

    /// Number of conjugacy classes containing an alpha-element. This equals
    /// the number of inequivalent irreducible projective representations for
    /// this cocycle.
    pub fn alpha_regular_class_count(&self, tol: &ToleranceConfig) -> usize {
        self.group
            .conjugacy_classes()
            .iter()
            .filter(|class| class.iter().any(|&g| self.is_alpha_element(g, tol)))
            .count()
    }
}

/// The nontrivial cocycle on the Klein four-group, with elements ordered
/// `1, a, b, ab`.
pub fn klein_cocycle() -> Cocycle {
    let group = Arc::new(FiniteGroup::klein());
    let o = UnitComplex::ONE;
    let m = UnitComplex::MINUS_ONE;
    let table = vec![
        vec![o, o, o, o],
        vec![o, o, o, o],
        vec![o, m, o, m],
        vec![o, m, o, m],
    ];
    Cocycle::new(group, table, &ToleranceConfig::default())
        .expect("built-in Klein table is a cocycle")
}

/// The nontrivial cocycle `alpha(a^j b^k, a^l b^m) = i^(k l)` on the dihedral
/// group of order `2m`. The formula is a 2-cocycle exactly when `4 | m`
/// (`m = 4` is the order-8 case).
pub fn dihedral_cocycle(m: usize) -> Result<Cocycle, CocycleError> {
    if m == 0 || m % 4 != 0 {
        return Err(CocycleError::UnsupportedDihedralOrder { m });
    }
    let group = Arc::new(FiniteGroup::dihedral(m).expect("m > 0"));
    let n = 2 * m;
    let table: Vec<Vec<UnitComplex>> = (0..n)
        .map(|x| {
            let k = (x / m) as i64;
            (0..n)
                .map(|y| {
                    let l = (y % m) as i64;
                    UnitComplex::root(k * l, 4)
                })
                .collect()
        })
        .collect();
    Cocycle::new(group, table, &ToleranceConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn root_canonical_form_and_values() {
        assert_eq!(UnitComplex::root(4, 8), UnitComplex::MINUS_ONE);
        assert_eq!(UnitComplex::root(-1, 4), UnitComplex::root(3, 4));
        assert_eq!(UnitComplex::root(5, 4), UnitComplex::I);
        assert_eq!(UnitComplex::ONE.value(), c64(1.0, 0.0));
        assert_eq!(UnitComplex::I.value(), c64(0.0, 1.0));
        assert_eq!(UnitComplex::root(3, 4).value(), c64(0.0, -1.0));
        // i * i = -1 exactly
        assert_eq!(UnitComplex::I.mul(&UnitComplex::I), UnitComplex::MINUS_ONE);
        assert_eq!(UnitComplex::I.inv(), UnitComplex::root(3, 4));
    }

    #[test]
    fn trivial_cocycle_is_valid_and_neutral() {
        let g = Arc::new(FiniteGroup::dihedral(3).unwrap());
        let t = Cocycle::trivial(Arc::clone(&g));
        assert!(t.validate(&tol()).is_ok());
        assert_eq!(t.alpha(0, 0), c64(1.0, 0.0));
        let beta = klein_cocycle();
        let t4 = Cocycle::trivial(Arc::clone(beta.group()));
        let prod = t4.product(&beta).unwrap();
        assert!(prod.compatible(&beta, 1e-12));
    }

    #[test]
    fn klein_table_from_the_worked_example_is_valid() {
        let a = klein_cocycle();
        assert!(a.is_unitary());
        assert!(a.is_exact());
        assert_eq!(a.alpha(2, 1), c64(-1.0, 0.0));
        assert_eq!(a.alpha(1, 2), c64(1.0, 0.0));
    }

    #[test]
    fn perturbed_table_is_rejected_with_witness() {
        let a = klein_cocycle();
        let mut table = a.table();
        // negate alpha(a, b) with a, b away from the identity
        table[1][2] = table[1][2].mul(&UnitComplex::MINUS_ONE);
        let err = Cocycle::new(Arc::clone(a.group()), table, &tol()).unwrap_err();
        match err {
            CocycleError::IdentityViolation { x, y, z, .. } => {
                assert!(x < 4 && y < 4 && z < 4);
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn coboundary_on_z2() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let b = Cocycle::coboundary(Arc::clone(&g), &[UnitComplex::ONE, UnitComplex::I]).unwrap();
        // beta(1,1) = i*i / c_0 = -1, all other entries 1
        assert_eq!(*b.entry(1, 1), UnitComplex::MINUS_ONE);
        assert_eq!(*b.entry(0, 1), UnitComplex::ONE);
        assert_eq!(*b.entry(1, 0), UnitComplex::ONE);
        let trivial_c = vec![UnitComplex::ONE; 2];
        let t = Cocycle::coboundary(g, &trivial_c).unwrap();
        assert!(t.is_trivial());
    }

    #[test]
    fn coboundary_rejects_zero_or_non_unit_entries() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let err = Cocycle::coboundary(
            Arc::clone(&g),
            &[UnitComplex::ONE, UnitComplex::approx(c64(0.0, 0.0))],
        )
        .unwrap_err();
        assert!(matches!(err, CocycleError::BadCoboundaryEntry { index: 1 }));
        assert!(Cocycle::coboundary(g, &[UnitComplex::ONE, UnitComplex::approx(c64(2.0, 0.0))])
            .is_err());
    }

    #[test]
    fn product_and_inverse() {
        let a = klein_cocycle();
        let prod = a.product(&a.inverse()).unwrap();
        assert!(prod.is_trivial());
        // Klein alpha has order 2 in the multiplier group
        let square = a.product(&a).unwrap();
        assert!(square.is_trivial());
        let z3 = Cocycle::trivial(Arc::new(FiniteGroup::cyclic(3).unwrap()));
        assert!(matches!(a.product(&z3), Err(CocycleError::GroupMismatch)));
    }

    #[test]
    fn dihedral_inverse_cocycle_entries_are_reciprocals() {
        let a = dihedral_cocycle(4).unwrap();
        let inv = a.inverse();
        let m = 4usize;
        for x in 0..8 {
            for y in 0..8 {
                let k = (x / m) as i64;
                let l = (y % m) as i64;
                assert_eq!(*inv.entry(x, y), UnitComplex::root(-k * l, 4));
            }
        }
    }

    #[test]
    fn dihedral_cocycle_requires_divisibility_by_four() {
        assert!(dihedral_cocycle(4).is_ok());
        assert!(dihedral_cocycle(8).is_ok());
        assert!(matches!(
            dihedral_cocycle(2),
            Err(CocycleError::UnsupportedDihedralOrder { m: 2 })
        ));
        assert!(dihedral_cocycle(6).is_err());
        assert!(dihedral_cocycle(0).is_err());
    }

    #[test]
    fn tilde_on_klein_is_the_transpose() {
        // All Klein elements are self-inverse, so tilde(a,b) = alpha(b,a).
        let a = klein_cocycle();
        let t = a.tilde();
        for g in 0..4 {
            for h in 0..4 {
                assert_eq!(t.entry(g, h), a.entry(h, g));
            }
        }
        let trivial = Cocycle::trivial(Arc::clone(a.group()));
        assert!(trivial.tilde().is_trivial());
    }

    #[test]
    fn tilde_is_an_involution() {
        for a in [klein_cocycle(), dihedral_cocycle(4).unwrap()] {
            assert!(a.tilde().tilde().compatible(&a, 1e-12));
        }
    }

    #[test]
    fn derived_identities_hold_for_built_ins() {
        // alpha(1,g) = alpha(g,1) = alpha(1,1) and alpha(g,g^-1) = alpha(g^-1,g)
        for a in [
            klein_cocycle(),
            dihedral_cocycle(4).unwrap(),
            Cocycle::trivial(Arc::new(FiniteGroup::cyclic(6).unwrap())),
        ] {
            let g = Arc::clone(a.group());
            let a11 = *a.entry(0, 0);
            for x in g.elements() {
                assert_eq!(*a.entry(0, x), a11);
                assert_eq!(*a.entry(x, 0), a11);
                assert_eq!(a.entry(x, g.inv(x)), a.entry(g.inv(x), x));
            }
        }
    }

    #[test]
    fn alpha_elements_of_the_built_ins() {
        let t = tol();
        let a = klein_cocycle();
        assert!(a.is_alpha_element(0, &t));
        for g in 1..4 {
            assert!(!a.is_alpha_element(g, &t));
        }
        assert_eq!(a.alpha_regular_class_count(&t), 1);

        let d = dihedral_cocycle(4).unwrap();
        assert_eq!(d.alpha_regular_class_count(&t), 2);
        // the rotation class {a, a^3} is alpha-regular, the centre {a^2} is not
        assert!(d.is_alpha_element(1, &t));
        assert!(!d.is_alpha_element(2, &t));

        let trivial = Cocycle::trivial(Arc::new(FiniteGroup::dihedral(4).unwrap()));
        for g in trivial.group().elements() {
            assert!(trivial.is_alpha_element(g, &t));
        }
        assert_eq!(trivial.alpha_regular_class_count(&t), 5);
    }

    #[test]
    fn normalized_pins_alpha11_to_one() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let c = [UnitComplex::I, UnitComplex::I];
        let beta = Cocycle::coboundary(g, &c).unwrap();
        // beta(1,1)... the constant-yes case: beta(0,0) = i*i/i = i
        assert_eq!(*beta.entry(0, 0), UnitComplex::I);
        let norm = beta.normalized();
        assert_eq!(*norm.entry(0, 0), UnitComplex::ONE);
        assert!(norm.validate(&tol()).is_ok());
    }

    proptest! {
        #[test]
        fn coboundaries_are_always_valid_cocycles(seed in 0u64..200) {
            // random exact unit entries c_g = e^{2 pi i k/12}
            let g = Arc::new(FiniteGroup::dihedral(3).unwrap());
            let n = g.order();
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as i64
            };
            let c: Vec<UnitComplex> = (0..n).map(|_| UnitComplex::root(next() % 12, 12)).collect();
            let beta = Cocycle::coboundary(Arc::clone(&g), &c).unwrap();
            prop_assert!(beta.validate(&tol()).is_ok());
            // tilde of a valid cocycle is a valid cocycle
            prop_assert!(beta.tilde().validate(&tol()).is_ok());
        }
    }
}
