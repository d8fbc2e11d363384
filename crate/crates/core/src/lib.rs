//! Exact computer algebra for quiver Hopf algebras over finite groups.
//!
//! A ramification datum on a group G assigns an arrow multiplicity to each
//! conjugacy class and yields a Hopf quiver; attaching one character of the
//! centralizer per arrow index (an RSC) turns the arrow span into a
//! kG-Hopf bimodule. From that bimodule the crate builds and computes in
//! the associated graded Hopf algebras:
//!
//! - the co-path Hopf algebra on the path coalgebra, with the thin-split
//!   product ([`copath`]);
//! - the semi-path Hopf algebra, the tensor algebra over kG on the arrows
//!   ([`semipath`]);
//! - multiple Taft algebras — the subalgebra generated by vertices and
//!   arrows — with PBW normal forms ([`taft`]);
//! - braided (Yetter–Drinfeld) modules, quantum tensor/symmetric/linear
//!   algebras, biproducts, and Nichols-property checks ([`braided`]);
//! - quantized enveloping algebras as quotients of semi-path Hopf algebras
//!   from Cartan data ([`quantum_group`]).
//!
//! All coefficients are exact ([`scalar::Scalar`]): rationals, elements of
//! a cyclotomic field Q(ζ_N), or rational functions in v with q = v².
//! Classification data (RSC/ESC), isomorphism testing and desk-scale
//! classification live in [`structure`].

pub mod bimodule;
pub mod braided;
pub mod config;
pub mod copath;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod linalg;
pub mod quantum_group;
pub mod quiver;
pub mod scalar;
pub mod semipath;
pub mod structure;
pub mod taft;

pub use error::{Error, Result};
pub use scalar::Scalar;
