//! Generalized maps between groupoids presented as fractions `ψ/φ`.

mod calculus;
mod morita;
mod oracle;
mod pullback;
mod refine;

pub use calculus::*;
pub use morita::*;
pub use oracle::*;
pub use pullback::*;
pub use refine::*;
