//! Groupoid actions, principal bundles and bibundles.
//!
//! Action tables are exchanged as `[arrow, point, result]` triples for
//! either side.

mod action;
mod bibundle;
mod principal;

pub use action::*;
pub use bibundle::*;
pub use principal::*;
