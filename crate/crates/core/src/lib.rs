//! Finite groupoids as explicit tables, and the equivalence theory built on
//! them.
//!
//! * [`groupoid`]: tables, validation, the standard constructions, orbits,
//!   isotropy and bisections.
//! * [`morphism`]: maps, natural isomorphisms, fully faithful / essentially
//!   surjective / weak-equivalence predicates, skeletons, group isomorphism.
//! * [`fraction`]: homotopy pullbacks, generalized maps as fractions, their
//!   equality, composition and refinement, Morita equivalence and a
//!   brute-force span oracle.
//! * [`bundle`]: groupoid actions, principal bundles, bibundles and the
//!   correspondence between right principal bibundles and fractions.
//! * [`rep`]: representations over the rationals.
//!
//! Every operation is a pure function on immutable values; groupoids are
//! shared through [`Arc`](std::sync::Arc).

pub mod bundle;
pub mod canonical;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod fraction;
pub mod group;
pub mod groupoid;
pub mod morphism;
pub mod rep;
pub mod sample;

/// Objects are dense ids `0..n_objects`.
pub type ObjectId = usize;
/// Arrows are dense ids `0..n_arrows`.
pub type ArrowId = usize;

pub use error::{Error, LawViolation, Result};
pub use group::Group;
pub use groupoid::*;
pub use morphism::*;
pub use fraction::*;
pub use bundle::*;
pub use rep::*;
