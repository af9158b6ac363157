//! Grothendieck, Lascoux and related polynomials, snow diagrams and the
//! rajcode statistic.
//!
//! ```
//! use snowkit::{grothendieck, Permutation};
//!
//! let w: Permutation = "1324".parse().unwrap();
//! assert_eq!(grothendieck(&w).to_string(), "(x1 + x2) + b*x1*x2");
//! assert_eq!(w.rajcode(4).unwrap().to_string(), "(1,1)");
//! ```

pub mod compositions;
pub mod diagrams;
pub mod error;
pub mod format;
pub mod kkohnert;
pub mod permutations;
pub mod polyring;
pub mod qbell;
pub mod schubert;
pub mod tables;
pub mod verify;

pub use num_bigint::{BigInt, BigUint};

pub use compositions::WeakComposition;
pub use diagrams::{Cell, Diagram, RookDiagram, SnowDiagram, SnowLabel};
pub use error::{Error, Result};
pub use kkohnert::GhostDiagram;
pub use permutations::Permutation;
pub use polyring::{Monomial, Polynomial};
pub use qbell::QPolynomial;
pub use schubert::{
    grothendieck, key_polynomial, lascoux, schubert, top_grothendieck, top_lascoux, PolyCache,
};
