//! Graded free modules, submodules, presented modules and the Groebner engine.

pub mod free;
pub(crate) mod gb;
pub mod hilbert;
pub mod ops;
pub mod presented;
pub mod submodule;
pub(crate) mod vector;

pub use free::{binomial, FreeElement, GradedFreeModule};
pub use hilbert::{GradedDims, HilbertSeries, Laurent};
pub use ops::{colon_by_linear, colon_by_maximal, kernel_of_map, saturate};
pub use presented::PresentedModule;
pub use submodule::Submodule;
