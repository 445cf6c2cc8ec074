//! Presented modules `M = F/U`.

use std::fmt;

use crate::error::Result;
use crate::modules::free::{FreeElement, GradedFreeModule};
use crate::modules::hilbert::{GradedDims, HilbertSeries};
use crate::modules::submodule::Submodule;
use crate::poly::{Polynomial, Ring};

#[derive(Clone)]
pub struct PresentedModule {
    relations: Submodule,
}

impl PresentedModule {
    pub fn new(relations: Submodule) -> Self {
        PresentedModule { relations }
    }

    /// `F/0`.
    pub fn free(module: GradedFreeModule) -> Self {
        PresentedModule {
            relations: Submodule::zero(module),
        }
    }

    /// `R/I`.
    pub fn cyclic(ring: Ring, ideal: Vec<Polynomial>) -> Result<Self> {
        Ok(PresentedModule {
            relations: Submodule::ideal(ring, ideal)?,
        })
    }

    /// `F/(rels)`.
    pub fn from_relations(free: GradedFreeModule, rels: Vec<FreeElement>) -> Result<Self> {
        Ok(PresentedModule {
            relations: Submodule::new(free, rels)?,
        })
    }

    /// The residue field `k(-j)` over `ring`.
    pub fn residue_field(ring: Ring, j: i32) -> Self {
        let f = GradedFreeModule::new(ring, vec![j]);
        let gens = (0..ring.nvars())
            .map(|i| f.element(vec![ring.var(i)]).unwrap())
            .collect();
        PresentedModule {
            relations: Submodule::new(f, gens).unwrap(),
        }
    }

    pub fn ring(&self) -> &Ring {
        self.relations.ring()
    }

    pub fn free_module(&self) -> &GradedFreeModule {
        self.relations.ambient()
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    pub fn is_zero(&self) -> bool {
        self.relations.is_full()
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        self.relations.quotient_hilbert_series()
    }

    /// `dim_K M_j` for `j` in `[lo, hi]` by standard monomial counting.
    pub fn hilbert_function(&self, lo: i32, hi: i32) -> GradedDims {
        self.relations.quotient_dims(lo, hi)
    }

    /// Total dimension over K, `None` when infinite.
    pub fn length(&self) -> Option<u64> {
        self.hilbert_series().length()
    }
}

impl fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PresentedModule({:?})", self.relations)
    }
}
