//! JSON document schemas for every object the CLI reads or writes.
//!
//! Complex numbers serialise as `[re, im]` pairs; exact roots of unity keep
//! their `{"root": {"num": k, "den": N}}` form so that golden files stay
//! bit-stable. Loaders run the full validators before handing objects out.

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cocycle::{Cocycle, CocycleError, UnitComplex};
use crate::fourier::FourierImage;
use crate::frames::{FrameComponent, FrameVector};
use crate::galpha::{GAlphaError, GAlphaMatrix};
use crate::group::{FiniteGroup, GroupError};
use crate::numerics::{CMatrix, NumericsError, ToleranceConfig};
use crate::repn::{IrreducibleSet, ProjectiveRep, RepnError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("JSON parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("non-finite number in `{context}`")]
    NonFinite { context: String },
    #[error("unknown reference `{0}`; not a built-in name")]
    UnknownReference(String),
    #[error("declared unitary flag disagrees with the matrices")]
    UnitaryFlagMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Repn(#[from] RepnError),
    #[error(transparent)]
    GAlpha(#[from] GAlphaError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

pub type ComplexPair = [f64; 2];

pub fn complex_to_pair(z: Complex64) -> ComplexPair {
    [z.re, z.im]
}

pub fn pair_to_complex(p: &ComplexPair, context: &str) -> Result<Complex64, JsonError> {
    if !(p[0].is_finite() && p[1].is_finite()) {
        return Err(JsonError::NonFinite {
            context: context.to_string(),
        });
    }
    Ok(Complex64::new(p[0], p[1]))
}

pub fn vector_to_json(v: &[Complex64]) -> Vec<ComplexPair> {
    v.iter().map(|&z| complex_to_pair(z)).collect()
}

pub fn vector_from_json(v: &[ComplexPair], context: &str) -> Result<Vec<Complex64>, JsonError> {
    v.iter().map(|p| pair_to_complex(p, context)).collect()
}

pub fn matrix_to_json(m: &CMatrix) -> Vec<Vec<ComplexPair>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|&z| complex_to_pair(z)).collect())
        .collect()
}

pub fn matrix_from_json(rows: &[Vec<ComplexPair>], context: &str) -> Result<CMatrix, JsonError> {
    let data: Vec<Vec<Complex64>> = rows
        .iter()
        .map(|row| vector_from_json(row, context))
        .collect::<Result<_, _>>()?;
    Ok(CMatrix::try_from_rows(&data)?)
}

// ---------------------------------------------------------------------------
// Group documents
// ---------------------------------------------------------------------------

/// `{"name": str, "order": n, "mul_table": [[int]], "element_names": [str]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDoc {
    pub name: String,
    pub order: usize,
    pub mul_table: Vec<Vec<usize>>,
    pub element_names: Vec<String>,
}

impl GroupDoc {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupDoc {
            name: g.name().to_string(),
            order: g.order(),
            mul_table: g.mul_table(),
            element_names: g.element_names().to_vec(),
        }
    }

    /// Runs the full group validation; the inverse table is derived.
    pub fn into_group(self) -> Result<FiniteGroup, JsonError> {
        if self.mul_table.len() != self.order {
            return Err(JsonError::Group(GroupError::MalformedTable {
                row: 0,
                got: self.mul_table.len(),
                expected: self.order,
            }));
        }
        Ok(FiniteGroup::from_mul_table(
            self.name,
            &self.mul_table,
            Some(self.element_names),
        )?)
    }
}

// ---------------------------------------------------------------------------
// Cocycle documents
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootDoc {
    pub num: i64,
    pub den: i64,
}

/// One table entry: `{"root": {"num": k, "den": N}}` or `{"re": x, "im": y}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UnitComplexDoc {
    Root { root: RootDoc },
    Complex { re: f64, im: f64 },
}

impl UnitComplexDoc {
    pub fn from_unit(u: &UnitComplex) -> Self {
        match *u {
            UnitComplex::Root { num, den } => UnitComplexDoc::Root {
                root: RootDoc { num, den },
            },
            UnitComplex::Approx(z) => UnitComplexDoc::Complex { re: z.re, im: z.im },
        }
    }

    pub fn into_unit(self) -> Result<UnitComplex, JsonError> {
        match self {
            UnitComplexDoc::Root { root } => {
                if root.den == 0 {
                    return Err(JsonError::NonFinite {
                        context: "root of unity with zero denominator".to_string(),
                    });
                }
                Ok(UnitComplex::root(root.num, root.den))
            }
            UnitComplexDoc::Complex { re, im } => {
                if !(re.is_finite() && im.is_finite()) {
                    return Err(JsonError::NonFinite {
                        context: "cocycle entry".to_string(),
                    });
                }
                Ok(UnitComplex::approx(Complex64::new(re, im)))
            }
        }
    }
}

/// A by-name reference to a built-in object, or an inline document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Inline(GroupDoc),
}

/// `{"group": name-or-inline, "entries": [[entry]]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CocycleDoc {
    pub group: GroupRef,
    pub entries: Vec<Vec<UnitComplexDoc>>,
}

impl CocycleDoc {
    pub fn from_cocycle(c: &Cocycle, by_name: Option<&str>) -> Self {
        let group = match by_name {
            Some(name) => GroupRef::Name(name.to_string()),
            None => GroupRef::Inline(GroupDoc::from_group(c.group())),
        };
        CocycleDoc {
            group,
            entries: c
                .table()
                .iter()
                .map(|row| row.iter().map(UnitComplexDoc::from_unit).collect())
                .collect(),
        }
    }

    /// Validates against a resolved group (the caller resolves name refs).
    pub fn into_cocycle(
        self,
        group: Arc<FiniteGroup>,
        tol: &ToleranceConfig,
    ) -> Result<Cocycle, JsonError> {
        let table: Vec<Vec<UnitComplex>> = self
            .entries
            .into_iter()
            .map(|row| row.into_iter().map(UnitComplexDoc::into_unit).collect())
            .collect::<Result<_, _>>()?;
        Ok(Cocycle::new(group, table, tol)?)
    }
}

// ---------------------------------------------------------------------------
// Representation documents
// ---------------------------------------------------------------------------

/// `{"dim": d, "unitary": bool, "matrices": [[[pair]]]}` in group order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepDoc {
    pub dim: usize,
    pub unitary: bool,
    pub matrices: Vec<Vec<Vec<ComplexPair>>>,
}

impl RepDoc {
    pub fn from_rep(rep: &ProjectiveRep) -> Self {
        RepDoc {
            dim: rep.dim(),
            unitary: rep.is_unitary(),
            matrices: rep.matrices().iter().map(matrix_to_json).collect(),
        }
    }

    /// Validates against a resolved cocycle; the declared unitary flag must
    /// match the matrices.
    pub fn into_rep(
        self,
        cocycle: Arc<Cocycle>,
        tol: &ToleranceConfig,
    ) -> Result<ProjectiveRep, JsonError> {
        let matrices: Vec<CMatrix> = self
            .matrices
            .iter()
            .map(|m| matrix_from_json(m, "representation matrix"))
            .collect::<Result<_, _>>()?;
        let rep = ProjectiveRep::new(cocycle, matrices, tol)?;
        if rep.is_unitary() != self.unitary {
            return Err(JsonError::UnitaryFlagMismatch);
        }
        Ok(rep)
    }
}

/// `{"labels": [str], "reps": [RepDoc]}` over one shared cocycle.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrreducibleSetDoc {
    pub labels: Vec<String>,
    pub reps: Vec<RepDoc>,
}

impl IrreducibleSetDoc {
    pub fn from_set(set: &IrreducibleSet) -> Self {
        IrreducibleSetDoc {
            labels: set.labels().to_vec(),
            reps: set.reps().iter().map(RepDoc::from_rep).collect(),
        }
    }

    /// Builds and fully validates the complete set.
    pub fn into_set(
        self,
        cocycle: Arc<Cocycle>,
        tol: &ToleranceConfig,
    ) -> Result<IrreducibleSet, JsonError> {
        let reps: Vec<ProjectiveRep> = self
            .reps
            .into_iter()
            .map(|doc| doc.into_rep(Arc::clone(&cocycle), tol))
            .collect::<Result<_, _>>()?;
        let set = IrreducibleSet::new(reps, self.labels)?;
        set.validate_complete(tol)?;
        Ok(set)
    }
}

// ---------------------------------------------------------------------------
// (G,alpha)-matrix documents
// ---------------------------------------------------------------------------

/// Reference to a cocycle: a built-in key (`"klein:alpha"`) or inline entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CocycleRef {
    Name(String),
    Inline(CocycleDoc),
}

/// `{"group": name, "cocycle": name-or-inline, "nu": [[re,im], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub group: String,
    pub cocycle: CocycleRef,
    pub nu: Vec<ComplexPair>,
}

impl MatrixDoc {
    pub fn from_matrix(m: &GAlphaMatrix, group: &str, cocycle: CocycleRef) -> Self {
        MatrixDoc {
            group: group.to_string(),
            cocycle,
            nu: vector_to_json(m.nu()),
        }
    }
}

// ---------------------------------------------------------------------------
// Fourier image and frame vector documents
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FourierBlockDoc {
    pub rho: String,
    pub matrix: Vec<Vec<ComplexPair>>,
}

/// `{"blocks": [{"rho": label, "matrix": [[[re,im]]]}]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FourierImageDoc {
    pub blocks: Vec<FourierBlockDoc>,
}

impl FourierImageDoc {
    pub fn from_image(image: &FourierImage) -> Self {
        FourierImageDoc {
            blocks: image
                .blocks()
                .iter()
                .enumerate()
                .map(|(idx, block)| FourierBlockDoc {
                    rho: image.irreducibles().label(idx).to_string(),
                    matrix: matrix_to_json(block),
                })
                .collect(),
        }
    }

    /// Rebuilds the image over a set, matching blocks by label.
    pub fn into_image(self, r: Arc<IrreducibleSet>) -> Result<FourierImage, JsonError> {
        let mut blocks: Vec<Option<CMatrix>> = vec![None; r.len()];
        for doc in self.blocks {
            let idx = r
                .index_of(&doc.rho)
                .ok_or_else(|| JsonError::UnknownReference(doc.rho.clone()))?;
            blocks[idx] = Some(matrix_from_json(&doc.matrix, "fourier block")?);
        }
        let blocks: Vec<CMatrix> = blocks
            .into_iter()
            .enumerate()
            .map(|(idx, b)| b.unwrap_or_else(|| CMatrix::zeros(r.dim(idx), r.dim(idx))))
            .collect();
        FourierImage::from_blocks(r, blocks)
            .map_err(|e| JsonError::UnknownReference(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameComponentDoc {
    pub rho: String,
    pub vectors: Vec<Vec<ComplexPair>>,
}

/// `{"components": [{"rho": label, "vectors": [...]}], "weights": [...]}`
/// with the weights flattened across components in order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameVectorDoc {
    pub components: Vec<FrameComponentDoc>,
    pub weights: Vec<f64>,
}

impl FrameVectorDoc {
    pub fn from_frame_vector(fv: &FrameVector) -> Self {
        FrameVectorDoc {
            components: fv
                .components
                .iter()
                .map(|c| FrameComponentDoc {
                    rho: c.label.clone(),
                    vectors: c.vectors.iter().map(|v| vector_to_json(v)).collect(),
                })
                .collect(),
            weights: fv
                .components
                .iter()
                .flat_map(|c| c.weights.iter().copied())
                .collect(),
        }
    }

    pub fn into_frame_vector(self, r: &IrreducibleSet) -> Result<FrameVector, JsonError> {
        let mut weights = self.weights.into_iter();
        let mut components = Vec::with_capacity(self.components.len());
        for doc in self.components {
            let idx = r
                .index_of(&doc.rho)
                .ok_or_else(|| JsonError::UnknownReference(doc.rho.clone()))?;
            let vectors: Vec<Vec<Complex64>> = doc
                .vectors
                .iter()
                .map(|v| vector_from_json(v, "frame vector"))
                .collect::<Result<_, _>>()?;
            let w: Vec<f64> = vectors.iter().map(|_| weights.next().unwrap_or(1.0)).collect();
            components.push(FrameComponent {
                label: doc.rho,
                dim: r.dim(idx),
                vectors,
                weights: w,
            });
        }
        Ok(FrameVector { components })
    }
}
