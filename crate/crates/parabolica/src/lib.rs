//! # parabolica
//!
//! An exact-arithmetic workbench for the |1|-graded simple Lie algebras
//! underlying irreducible parabolic geometries.
//!
//! The crate realizes, in matrix form and over exact scalars (ℚ, ℚ(i),
//! rational quaternions), the four classical families of |1|-graded simple
//! Lie algebras 𝔤 = 𝔤₋₁ ⊕ 𝔤₀ ⊕ 𝔤₁:
//!
//! * projective/Grassmannian type: 𝔰𝔩(p+q, 𝕂) with the block grading,
//! * conformal type: 𝔬(p+1, q+1) in an anti-diagonal realization,
//! * Lagrangean type: 𝔰𝔭(2n, 𝕂),
//! * spinorial type: 𝔬(n, n) in the split realization.
//!
//! On top of the models it provides:
//!
//! * classification of nonzero isotropies Z ∈ 𝔤₁ into geometric types
//!   (𝕂-rank, signature, or causal class), with standard representatives,
//!   exact normalization, and commutants C(Z) ⊂ 𝔤₋₁ ([`isotropy`]);
//! * adapted 𝔰𝔩(2)-triples (X, A = \[Z,X], Z), the torsor T(Z) under
//!   exp(𝔤₀^\[1]), and the eigenvalue structure of ad(A) on the grading
//!   components ([`sl2`]);
//! * the curvature module W = Λ²𝔤₋₁* ⊗ 𝔤 with its homogeneity grading,
//!   the Lie algebra homology boundary ∂* and cochain differential ∂, the
//!   harmonic submodule Ŵ = ker ∂* ∩ ker ∂, and the insertion-kernel
//!   inclusions ([`curvature`]);
//! * exact verification of the SL(2) product decomposition and the
//!   holonomy factorization e^{tZ} e^{sX} = e^{s/(1+st) X} a_t(s) u_t(s)
//!   in defining representations, including complex and quaternionic
//!   reparametrizations ([`flows`]);
//! * verification suites and classification tables over a fixed zoo of
//!   thirteen desk-scale models ([`verify`], [`report`], [`zoo`]).
//!
//! Every computation is exact: arbitrary-precision rationals throughout,
//! no floating point, and every asserted identity is checked entry by
//! entry. A failed check is a hard error carrying the counterexample.
//!
//! The `examples/` directory contains one runnable example per capability
//! (`cargo run --example zoo_report`, etc.). The thin `parabolica` binary
//! exposes the same functionality as `zoo`, `report`, and `verify`
//! subcommands.
//!
//! ```
//! use parabolica::model::{Family, GradedModel, ModelSpec};
//! use parabolica::isotropy::{commutant, enumerate_types};
//! use parabolica::scalar::Ring;
//!
//! // the (2,2) almost Grassmannian model sl(4,R)/p(2)
//! let spec = ModelSpec::new(Family::Grassmann, Ring::Rat, &[2, 2]);
//! let model = GradedModel::build(&spec).unwrap();
//! assert_eq!(model.component_dims(), (4, 7, 4));
//!
//! // two geometric types: rank 1 has a line of commuting directions,
//! // rank 2 is smoothly isolated
//! let types = enumerate_types(&model).unwrap();
//! let dims: Vec<usize> = types
//!     .iter()
//!     .map(|t| commutant(&model, &t.representative).unwrap().len())
//!     .collect();
//! assert_eq!(dims, vec![1, 0]);
//! ```

#![forbid(unsafe_code)]

pub mod curvature;
pub mod error;
pub mod flows;
pub mod isotropy;
pub mod lie;
pub mod linalg;
pub mod model;
pub mod report;
pub mod scalar;
pub mod sl2;
pub mod sparse;
pub mod verify;
pub mod zoo;

pub use error::{Error, Result};
pub use linalg::{Mat, SpectralProjectors};
pub use scalar::{Rat, Ring, Scalar};
