//! Named registry of groups, cocycles, and irreducible sets.
//!
//! Built-ins cover the worked examples: cyclic groups `z1..z12`, the Klein
//! four-group, and the dihedral group of order 8, each with their trivial
//! cocycle (`<group>:one`) and, where one exists, the nontrivial cocycle
//! (`<group>:alpha`) with its complete irreducible set. Objects loaded from
//! files pass their validators before registration.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::cocycle::Cocycle;
use crate::group::FiniteGroup;
use crate::json::{CocycleRef, GroupRef, JsonError, MatrixDoc};
use crate::numerics::ToleranceConfig;
use crate::repn::{
    abelian_trivial_irreducibles, dihedral8_irreducibles, dihedral8_ordinary_irreducibles,
    klein_irreducibles, IrreducibleSet,
};
use crate::galpha::GAlphaMatrix;

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("unknown group `{0}` (built-ins: z1..z12, klein, d8)")]
    UnknownGroup(String),
    #[error("unknown cocycle `{0}` (expected `<group>:one` or `<group>:alpha`)")]
    UnknownCocycle(String),
    #[error("no irreducible set registered for `{0}`")]
    UnknownIrreducibles(String),
    #[error(transparent)]
    Json(#[from] JsonError),
}

/// Registry keyed by name; cocycles and irreducible sets use
/// `"<group>:<variant>"` keys with variants `one` (trivial) and `alpha`.
pub struct Workspace {
    groups: BTreeMap<String, Arc<FiniteGroup>>,
    cocycles: BTreeMap<String, Arc<Cocycle>>,
    irreducibles: BTreeMap<String, Arc<IrreducibleSet>>,
    tol: ToleranceConfig,
}

impl Workspace {
    pub fn with_builtins(tol: ToleranceConfig) -> Self {
        let mut ws = Workspace {
            groups: BTreeMap::new(),
            cocycles: BTreeMap::new(),
            irreducibles: BTreeMap::new(),
            tol,
        };
        for n in 1..=12usize {
            let group = Arc::new(FiniteGroup::cyclic(n).unwrap());
            let set = Arc::new(abelian_trivial_irreducibles(Arc::clone(&group)).unwrap());
            let key = format!("z{n}");
            ws.cocycles
                .insert(format!("{key}:one"), Arc::clone(set.cocycle()));
            ws.irreducibles.insert(format!("{key}:one"), set);
            ws.groups.insert(key, group);
        }

        let klein = Arc::new(FiniteGroup::klein());
        let klein_one = Arc::new(abelian_trivial_irreducibles(Arc::clone(&klein)).unwrap());
        ws.cocycles
            .insert("klein:one".into(), Arc::clone(klein_one.cocycle()));
        ws.irreducibles.insert("klein:one".into(), klein_one);
        let klein_alpha = Arc::new(klein_irreducibles());
        ws.cocycles
            .insert("klein:alpha".into(), Arc::clone(klein_alpha.cocycle()));
        ws.irreducibles.insert("klein:alpha".into(), klein_alpha);
        ws.groups.insert("klein".into(), klein);

        let d8 = Arc::new(FiniteGroup::dihedral(4).unwrap());
        let d8_one = Arc::new(dihedral8_ordinary_irreducibles());
        ws.cocycles
            .insert("d8:one".into(), Arc::clone(d8_one.cocycle()));
        ws.irreducibles.insert("d8:one".into(), d8_one);
        let d8_alpha = Arc::new(dihedral8_irreducibles());
        ws.cocycles
            .insert("d8:alpha".into(), Arc::clone(d8_alpha.cocycle()));
        ws.irreducibles.insert("d8:alpha".into(), d8_alpha);
        ws.groups.insert("d8".into(), d8);

        ws
    }

    pub fn tolerances(&self) -> &ToleranceConfig {
        &self.tol
    }

    pub fn group_names(&self) -> Vec<&str> {
        self.groups.keys().map(String::as_str).collect()
    }

    pub fn cocycle_names(&self) -> Vec<&str> {
        self.cocycles.keys().map(String::as_str).collect()
    }

    pub fn group(&self, name: &str) -> Result<Arc<FiniteGroup>, WorkspaceError> {
        self.groups
            .get(name)
            .cloned()
            .ok_or_else(|| WorkspaceError::UnknownGroup(name.to_string()))
    }

    pub fn cocycle(&self, key: &str) -> Result<Arc<Cocycle>, WorkspaceError> {
        self.cocycles
            .get(key)
            .cloned()
            .ok_or_else(|| WorkspaceError::UnknownCocycle(key.to_string()))
    }

    pub fn irreducibles(&self, key: &str) -> Result<Arc<IrreducibleSet>, WorkspaceError> {
        self.irreducibles
            .get(key)
            .cloned()
            .ok_or_else(|| WorkspaceError::UnknownIrreducibles(key.to_string()))
    }

    /// Finds the irreducible set whose cocycle matches the given one.
    pub fn irreducibles_for(
        &self,
        cocycle: &Cocycle,
    ) -> Result<Arc<IrreducibleSet>, WorkspaceError> {
        for set in self.irreducibles.values() {
            if set.cocycle().compatible(cocycle, self.tol.structural_zero) {
                return Ok(Arc::clone(set));
            }
        }
        Err(WorkspaceError::UnknownIrreducibles(
            "<no registered set matches this (group, cocycle)>".to_string(),
        ))
    }

    pub fn resolve_group_ref(&self, r: GroupRef) -> Result<Arc<FiniteGroup>, WorkspaceError> {
        match r {
            GroupRef::Name(name) => self.group(&name),
            GroupRef::Inline(doc) => Ok(Arc::new(doc.into_group()?)),
        }
    }

    /// Resolves a cocycle reference in the context of a named group:
    /// plain variants (`one`/`alpha`) are looked up as `<group>:<variant>`.
    pub fn resolve_cocycle_ref(
        &self,
        group_name: &str,
        r: CocycleRef,
    ) -> Result<Arc<Cocycle>, WorkspaceError> {
        match r {
            CocycleRef::Name(name) => {
                let key = if name.contains(':') {
                    name
                } else {
                    format!("{group_name}:{name}")
                };
                self.cocycle(&key)
            }
            CocycleRef::Inline(doc) => {
                let group = self.resolve_group_ref(doc.group.clone())?;
                Ok(Arc::new(doc.into_cocycle(group, &self.tol)?))
            }
        }
    }

    /// Loads a (G,alpha)-matrix document, resolving its references.
    pub fn load_matrix(&self, doc: MatrixDoc) -> Result<GAlphaMatrix, WorkspaceError> {
        let cocycle = self.resolve_cocycle_ref(&doc.group, doc.cocycle)?;
        let nu = crate::json::vector_from_json(&doc.nu, "nu")?;
        Ok(GAlphaMatrix::new(cocycle, nu).map_err(JsonError::GAlpha)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{dihedral_cocycle, klein_cocycle};

    #[test]
    fn builtins_resolve() {
        let ws = Workspace::with_builtins(ToleranceConfig::default());
        assert_eq!(ws.group("klein").unwrap().order(), 4);
        assert_eq!(ws.group("d8").unwrap().order(), 8);
        assert_eq!(ws.group("z5").unwrap().order(), 5);
        assert!(ws.group("z99").is_err());
        assert!(ws.cocycle("klein:alpha").unwrap().is_unitary());
        assert_eq!(ws.irreducibles("d8:alpha").unwrap().len(), 2);
        assert_eq!(ws.irreducibles("d8:one").unwrap().len(), 5);
        assert!(ws.cocycle("z5:alpha").is_err());
    }

    #[test]
    fn irreducibles_found_by_cocycle() {
        let ws = Workspace::with_builtins(ToleranceConfig::default());
        let c = klein_cocycle();
        let set = ws.irreducibles_for(&c).unwrap();
        assert_eq!(set.len(), 1);
        let d = dihedral_cocycle(4).unwrap();
        assert_eq!(ws.irreducibles_for(&d).unwrap().len(), 2);
    }

    #[test]
    fn matrix_document_loading() {
        let ws = Workspace::with_builtins(ToleranceConfig::default());
        let doc: MatrixDoc = serde_json::from_str(
            r#"{"group": "klein", "cocycle": "alpha", "nu": [[1,0],[2,0],[3,0],[4,0]]}"#,
        )
        .unwrap();
        let m = ws.load_matrix(doc).unwrap();
        assert_eq!(m.nu().len(), 4);
        let bad: MatrixDoc = serde_json::from_str(
            r#"{"group": "klein", "cocycle": "alpha", "nu": [[1,0]]}"#,
        )
        .unwrap();
        assert!(ws.load_matrix(bad).is_err());
    }
}
