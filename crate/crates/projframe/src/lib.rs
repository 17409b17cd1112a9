//! Computational harmonic analysis for projective group frames.
//!
//! The library implements finite groups as multiplication tables, 2-cocycles
//! and projective representations, the C*-algebra of (G,alpha)-matrices, the
//! twisted Fourier transform with its simultaneous block diagonalisation, and
//! the reconstruction of tight projective group frames from their Gramians.
//!
//! Start with the runnable examples (`cargo run --example klein_four`, ...);
//! each one walks through a single capability end to end. The `projframe`
//! binary exposes the same operations over JSON documents.

pub mod blockdiag;
pub mod cli;
pub mod cocycle;
pub mod fourier;
pub mod frames;
pub mod galpha;
pub mod group;
pub mod json;
pub mod numerics;
pub mod repn;
pub mod selftest;
pub mod workspace;

pub use blockdiag::DiagonalizerE;
pub use cocycle::{Cocycle, UnitComplex};
pub use fourier::FourierImage;
pub use frames::{FrameClass, FrameClassTag, FrameGramian, FrameVector};
pub use galpha::GAlphaMatrix;
pub use group::{FiniteGroup, GroupIndex};
pub use numerics::{CMatrix, ToleranceConfig};
pub use repn::{AlphaCharacter, IrreducibleSet, ProjectiveRep};
pub use workspace::Workspace;
