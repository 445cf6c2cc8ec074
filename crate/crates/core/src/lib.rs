//! Graded modules over polynomial rings over prime fields: Groebner bases,
//! minimal free resolutions, gamma-regular sequences and componentwise
//! linearity.

pub mod error;
pub mod families;
pub mod field;
pub mod gamma;
pub mod linalg;
pub mod linear;
pub mod modules;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod twovar;

pub use error::{Error, Result};
pub use field::{Fp, PrimeField, DEFAULT_PRIME};
pub use linear::{LinearChange, LinearForm, LinearQuotient};
pub use modules::{
    colon_by_linear, colon_by_maximal, kernel_of_map, saturate, FreeElement, GradedDims, GradedFreeModule, HilbertSeries,
    PresentedModule, Submodule,
};
pub use monomial::{monomial_cmp, Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring};
pub use resolution::{
    betti_table, first_syzygy, minimal_cover, minimal_resolution, next_syzygy, poincare, regularity, resolve_submodule, submodule_regularity,
    BettiTable, Degree, MinimalCover,
};
pub use gamma::{
    alpha, gamma_depth, is_componentwise_linear, is_gamma_regular, is_gamma_sequence, reduce_mod_linear, socle,
    verify_main_theorem, Alpha, DepthWitness, GammaCertificate,
};
