//! Exact low-degree cohomology of irreducible `SL2`-modules in
//! characteristic `p`: `Ext^1` between irreducibles, `H^1` and `H^2`.
//!
//! Two independent routes are provided and checked against each other:
//! closed-form digit rules ([`ext_one`], [`classification`]) and the
//! low-degree terms of the Lyndon–Hochschild–Serre spectral sequence for the
//! first Frobenius kernel ([`g1`], [`spectral`]). Formal characters
//! ([`characters`]) give a brute-force check on the tensor-product facts the
//! digit rules use.

pub mod characters;
pub mod classification;
pub mod cli;
pub mod error;
pub mod ext_one;
pub mod g1;
pub mod spectral;
pub mod weights;

pub use error::{Error, Result};
pub use weights::{PrimeChar, Weight};
