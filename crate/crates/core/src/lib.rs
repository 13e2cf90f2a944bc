//! Exact computations in the torus-equivariant cohomology of complete flag
//! manifolds `G/T`, for every finite Cartan type.
//!
//! A class can be held in three presentations:
//!
//! * [`SchubertSum`]: a combination `sum d_w X_w` of equivariant Schubert
//!   classes with coefficients in `H*(BT)`;
//! * [`BorelClass`]: a double polynomial `f(t; x)` modulo the double
//!   coinvariant ideal;
//! * [`GkmClass`]: a family of localizations `h_v`, one per Weyl group
//!   element, satisfying the GKM edge divisibility conditions.
//!
//! The [`presentations`] module converts among all three, and
//! [`structconst`] multiplies Schubert classes by two independent routes.
//! All arithmetic is over exact rationals.
//!
//! ```
//! use eqschubert::{RootSystem, expr::{parse_polynomial, Coords}, presentations::borel_to_schubert, BorelClass};
//!
//! let rs = RootSystem::from_type_str("A2").unwrap();
//! let f = parse_polynomial("t1*x1*x2", &rs, Coords::TypeA).unwrap();
//! let s = borel_to_schubert(&rs, &BorelClass::new(f)).unwrap();
//! assert_eq!(s.len(), 3);
//! ```

pub mod error;
pub mod expr;
pub mod polynomial;
pub mod presentations;
pub mod root_system;
pub mod store;
pub mod structconst;
pub mod weyl;

pub use error::{Error, Result};
pub use polynomial::{DoublePolynomial, LinearForm};
pub use presentations::{BorelClass, GkmClass, SchubertSum, SigmaTable};
pub use root_system::{CartanType, Family, RootSystem, Weight};
pub use weyl::{WeylElement, Word};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// The guide's code samples, compiled and run as doctests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/root-systems.md")]
    pub struct RootSystems;
    #[doc = include_str!("../../../book/src/presentations.md")]
    pub struct Presentations;
    #[doc = include_str!("../../../book/src/divided-differences.md")]
    pub struct DividedDifferences;
    #[doc = include_str!("../../../book/src/double-schubert.md")]
    pub struct DoubleSchubert;
    #[doc = include_str!("../../../book/src/structure-constants.md")]
    pub struct StructureConstants;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct CommandLine;
    #[doc = include_str!("../../../book/src/cache.md")]
    pub struct Cache;
}
