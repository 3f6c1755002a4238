//! Closed-form low-dimensional solvable group laws, a group-cohomology
//! coboundary calculus, lexicographic ordered-group checks and an ordered
//! classifier with verified coordinate witnesses.
//!
//! All numeric types are generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases fix `f64`.

pub mod action;
pub mod classify;
pub mod cohomology;
pub mod element;
pub mod error;
pub mod group;
pub mod json;
pub mod linalg;
pub mod order;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod suite;
pub mod tolerance;

pub use action::{infer_exponents, standardize_action, ActionSample, ExpAction, ExponentFit};
pub use cohomology::{
    coboundary, cocycle_residual, extension_from_cocycle, g3_cocycle, heis_cocycle, ordered_extension,
    verify_coboundary_witness, zero_cocycle, Cochain, CocycleTag, Extension, GModule,
};
pub use element::Element;
pub use error::{Error, Result};
pub use group::{check_group_axioms, heis_to_sut3, sut3_to_heis, AxiomReport, GroupLaw};
pub use linalg::Matrix;
pub use order::{
    check_conjugation_order_preserving, check_translation_invariance, LexOrder, OrderedGroupSpec, TranslationReport,
};
pub use report::Residual;
pub use sampling::{SampleConfig, Sampler};
pub use scalar::Scalar;
pub use tolerance::Tolerance;

pub type Element64 = Element<f64>;
pub type Element32 = Element<f32>;
pub type GroupLaw64 = GroupLaw<f64>;
pub type GroupLaw32 = GroupLaw<f32>;
pub type Tolerance64 = Tolerance<f64>;
pub type Cochain64 = Cochain<f64>;
pub type GModule64 = GModule<f64>;
pub type ExpAction64 = ExpAction<f64>;
pub type OrderedGroupSpec64 = OrderedGroupSpec<f64>;
pub type Matrix64 = Matrix<f64>;
