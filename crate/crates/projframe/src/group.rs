//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense indices `0..n` with the identity pinned at index 0, so
//! multiplication is a table lookup and serialisation is trivial. Construction
//! always runs the full axiom check (identity, permutation rows/columns,
//! associativity, inverses).

use thiserror::Error;

/// Index of an element of a [`FiniteGroup`]; index 0 is always the identity.
pub type GroupIndex = usize;

/// The identity element of every [`FiniteGroup`].
pub const IDENTITY: GroupIndex = 0;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group order must be at least 1")]
    InvalidOrder,
    #[error("multiplication table row {row} has length {got}, expected {expected}")]
    MalformedTable {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("table entry at ({g}, {h}) is {value}, out of range for order {order}")]
    EntryOutOfRange {
        g: usize,
        h: usize,
        value: usize,
        order: usize,
    },
    #[error("index 0 is not a two-sided identity at element {g}")]
    BrokenIdentity { g: usize },
    #[error("{axis} {index} of the multiplication table is not a permutation")]
    NotAPermutation { axis: &'static str, index: usize },
    #[error("associativity fails at triple ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {g} has no two-sided inverse")]
    MissingInverse { g: usize },
    #[error("expected {expected} element names, got {got}")]
    BadNames { expected: usize, got: usize },
}

/// A finite group of order `n`, stored as its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<GroupIndex>,
    inv: Vec<GroupIndex>,
    element_names: Vec<String>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table, validating all the group
    /// axioms and deriving the inverse table. Entry `(g, h)` of the table is
    /// the index of `g h`.
    pub fn from_mul_table(
        name: impl Into<String>,
        table: &[Vec<usize>],
        element_names: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidOrder);
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::MalformedTable {
                    row,
                    got: entries.len(),
                    expected: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::EntryOutOfRange {
                        g: row,
                        h: col,
                        value,
                        order: n,
                    });
                }
            }
        }
        for g in 0..n {
            if table[IDENTITY][g] != g || table[g][IDENTITY] != g {
                return Err(GroupError::BrokenIdentity { g });
            }
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                seen_row[table[i][j]] = true;
                seen_col[table[j][i]] = true;
            }
            if seen_row.iter().any(|&s| !s) {
                return Err(GroupError::NotAPermutation { axis: "row", index: i });
            }
            if seen_col.iter().any(|&s| !s) {
                return Err(GroupError::NotAPermutation {
                    axis: "column",
                    index: i,
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == IDENTITY && table[h][g] == IDENTITY) {
                Some(h) => inv[g] = h,
                None => return Err(GroupError::MissingInverse { g }),
            }
        }
        let element_names = match element_names {
            Some(names) => {
                if names.len() != n {
                    return Err(GroupError::BadNames {
                        expected: n,
                        got: names.len(),
                    });
                }
                names
            }
            None => (0..n).map(|g| format!("g{g}")).collect(),
        };
        let mut mul = Vec::with_capacity(n * n);
        for row in table {
            mul.extend_from_slice(row);
        }
        Ok(FiniteGroup {
            name: name.into(),
            order: n,
            mul,
            inv,
            element_names,
        })
    }

    /// The cyclic group Z_n with element `k` at index `k`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidOrder);
        }
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n).map(|k| k.to_string()).collect();
        FiniteGroup::from_mul_table(format!("Z{n}"), &table, Some(names))
    }

    /// Direct product, with element `(a, b)` at index `a * |G2| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n1, n2) = (self.order, other.order);
        let n = n1 * n2;
        let idx = |a: usize, b: usize| a * n2 + b;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let (a1, b1) = (x / n2, x % n2);
                (0..n)
                    .map(|y| {
                        let (a2, b2) = (y / n2, y % n2);
                        idx(self.mul(a1, a2), other.mul(b1, b2))
                    })
                    .collect()
            })
            .collect();
        let names = (0..n)
            .map(|x| {
                format!(
                    "({},{})",
                    self.element_names[x / n2],
                    other.element_names[x % n2]
                )
            })
            .collect();
        FiniteGroup::from_mul_table(format!("{}x{}", self.name, other.name), &table, Some(names))
            .expect("product of valid groups is valid")
    }

    /// The dihedral group of order `2m` with presentation
    /// `a^m = 1, b^2 = 1, b a b = a^-1`, ordering the elements
    /// `a^j b^k` at index `j + m k`.
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::InvalidOrder);
        }
        let n = 2 * m;
        // a^{j1} b^{k1} a^{j2} b^{k2} = a^{j1 + (-1)^{k1} j2} b^{k1 + k2}
        let table: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let (j1, k1) = (x % m, x / m);
                (0..n)
                    .map(|y| {
                        let (j2, k2) = (y % m, y / m);
                        let j = if k1 == 0 {
                            (j1 + j2) % m
                        } else {
                            (j1 + m - j2 % m) % m
                        };
                        j + m * ((k1 + k2) % 2)
                    })
                    .collect()
            })
            .collect();
        let rot_name = |j: usize| match j {
            0 => "1".to_string(),
            1 => "a".to_string(),
            j => format!("a{j}"),
        };
        let names = (0..n)
            .map(|x| {
                let (j, k) = (x % m, x / m);
                match (j, k) {
                    (j, 0) => rot_name(j),
                    (0, _) => "b".to_string(),
                    (1, _) => "ab".to_string(),
                    (j, _) => format!("a{j}b"),
                }
            })
            .collect();
        FiniteGroup::from_mul_table(format!("D{n}"), &table, Some(names))
    }

    /// The Klein four-group Z2 x Z2 with elements named `1, a, b, ab`.
    pub fn klein() -> FiniteGroup {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        z2.direct_product(&z2)
            .with_name("Z2xZ2")
            .with_element_names(vec![
                "1".to_string(),
                "a".to_string(),
                "b".to_string(),
                "ab".to_string(),
            ])
            .unwrap()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_element_names(mut self, names: Vec<String>) -> Result<Self, GroupError> {
        if names.len() != self.order {
            return Err(GroupError::BadNames {
                expected: self.order,
                got: names.len(),
            });
        }
        self.element_names = names;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, g: GroupIndex, h: GroupIndex) -> GroupIndex {
        self.mul[g * self.order + h]
    }

    pub fn inv(&self, g: GroupIndex) -> GroupIndex {
        self.inv[g]
    }

    /// `h g h^-1`.
    pub fn conjugate(&self, h: GroupIndex, g: GroupIndex) -> GroupIndex {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn element_name(&self, g: GroupIndex) -> &str {
        &self.element_names[g]
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|g| (0..self.order).map(|h| self.mul(g, h)).collect())
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<GroupIndex> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|g| self.elements().all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, g: GroupIndex) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != IDENTITY {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn centralizer(&self, g: GroupIndex) -> Vec<GroupIndex> {
        self.elements()
            .filter(|&h| self.mul(g, h) == self.mul(h, g))
            .collect()
    }

    /// Conjugacy classes as a partition of `0..n`, identity class first and
    /// classes ordered by their smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<GroupIndex>> {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for g in self.elements() {
            if assigned[g] {
                continue;
            }
            let mut class: Vec<GroupIndex> = self
                .elements()
                .map(|h| self.conjugate(h, g))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            class.sort_unstable();
            for &x in &class {
                assigned[x] = true;
            }
            classes.push(class);
        }
        classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_trivial_group() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.mul_table(), vec![vec![0]]);
    }

    #[test]
    fn cyclic_arithmetic() {
        let g = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(g.mul(1, 3), 0);
        assert_eq!(g.inv(1), 3);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(z2.mul(1, 1), 0);
        assert!(FiniteGroup::cyclic(0).is_err());
    }

    #[test]
    fn klein_is_elementary_abelian() {
        let g = FiniteGroup::klein();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        for x in 1..4 {
            assert_eq!(g.inv(x), x);
        }
        assert_eq!(g.element_names(), &["1", "a", "b", "ab"]);
        // ab = a * b in the chosen ordering
        assert_eq!(g.mul(1, 2), 3);
    }

    #[test]
    fn product_with_trivial_group_is_isomorphic() {
        let z1 = FiniteGroup::cyclic(1).unwrap();
        let g = FiniteGroup::cyclic(5).unwrap();
        let p = z1.direct_product(&g);
        assert_eq!(p.mul_table(), g.mul_table());
    }

    #[test]
    fn z2_x_z4_element_orders() {
        let p = FiniteGroup::cyclic(2)
            .unwrap()
            .direct_product(&FiniteGroup::cyclic(4).unwrap());
        assert_eq!(p.order(), 8);
        // (1,1) sits at index 1*4 + 1 = 5 and has order 4: derived by
        // enumerating powers (1,1) -> (0,2) -> (1,3) -> (0,0).
        assert_eq!(p.element_order(5), 4);
        assert_eq!(p.mul(5, 5), 2);
    }

    #[test]
    fn dihedral8_presentation() {
        let d8 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(
            d8.element_names(),
            &["1", "a", "a2", "a3", "b", "ab", "a2b", "a3b"]
        );
        // b a = a^-1 b = a^3 b
        assert_eq!(d8.mul(4, 1), 7);
        // reflections are involutions: inv(ab) = ab
        assert_eq!(d8.inv(5), 5);
        assert!(!d8.is_abelian());
        let d2 = FiniteGroup::dihedral(1).unwrap();
        assert_eq!(d2.order(), 2);
    }

    #[test]
    fn conjugacy_classes_of_d8() {
        let d8 = FiniteGroup::dihedral(4).unwrap();
        // Derived by brute-force conjugation of the presentation.
        assert_eq!(
            d8.conjugacy_classes(),
            vec![vec![0], vec![1, 3], vec![2], vec![4, 6], vec![5, 7]]
        );
    }

    #[test]
    fn conjugacy_classes_of_abelian_groups_are_singletons() {
        for g in [FiniteGroup::cyclic(6).unwrap(), FiniteGroup::klein()] {
            let classes = g.conjugacy_classes();
            assert_eq!(classes.len(), g.order());
            assert!(classes.iter().all(|c| c.len() == 1));
        }
    }

    #[test]
    fn class_sizes_divide_group_order() {
        for g in [
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::dihedral(3).unwrap(),
            FiniteGroup::cyclic(2)
                .unwrap()
                .direct_product(&FiniteGroup::cyclic(4).unwrap()),
        ] {
            let classes = g.conjugacy_classes();
            let total: usize = classes.iter().map(Vec::len).sum();
            assert_eq!(total, g.order());
            assert!(classes.iter().all(|c| g.order() % c.len() == 0));
            assert_eq!(classes[0], vec![IDENTITY]);
        }
    }

    #[test]
    fn corrupted_table_is_rejected() {
        let d8 = FiniteGroup::dihedral(4).unwrap();
        let mut table = d8.mul_table();
        // Swap two entries in a row: keeps the row a permutation but breaks
        // associativity.
        table[1].swap(2, 3);
        let err = FiniteGroup::from_mul_table("broken", &table, None).unwrap_err();
        assert!(
            matches!(err, GroupError::NotAssociative { .. })
                || matches!(err, GroupError::NotAPermutation { .. }),
            "unexpected error: {err}"
        );

        let bad_identity = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            FiniteGroup::from_mul_table("broken", &bad_identity, None),
            Err(GroupError::BrokenIdentity { .. })
        ));

        let not_perm = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_mul_table("broken", &not_perm, None).is_err());
    }

    #[test]
    fn inverse_table_is_consistent() {
        for g in [
            FiniteGroup::cyclic(7).unwrap(),
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::klein(),
        ] {
            for x in g.elements() {
                assert_eq!(g.mul(x, g.inv(x)), IDENTITY);
                assert_eq!(g.mul(g.inv(x), x), IDENTITY);
            }
        }
    }
}
