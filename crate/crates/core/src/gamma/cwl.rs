//! Componentwise linearity.

use serde::Serialize;

use crate::modules::{PresentedModule, Submodule};
use crate::resolution::{minimal_cover, resolve_submodule_until, BettiTable};

use super::basic::component;

#[derive(Clone, Debug, Serialize)]
pub struct CwlDegree {
    pub j: i32,
    /// `reg M⟨j⟩ ≤ j`.
    pub linear: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CwlReport {
    pub cwl: bool,
    pub degrees: Vec<CwlDegree>,
}

impl CwlReport {
    fn from_degrees(degrees: Vec<CwlDegree>) -> Self {
        CwlReport {
            cwl: degrees.iter().all(|d| d.linear),
            degrees,
        }
    }
}

/// Whether a submodule generated in degree `j` has a `j`-linear resolution,
/// stopping at the first nonlinear step.
fn has_linear_resolution(u: &Submodule, j: i32) -> bool {
    let cap = u.ring().nvars() + 1;
    let table: BettiTable = resolve_submodule_until(u, cap, |i, degs| degs.iter().all(|&d| d == j + i as i32));
    table.entries().keys().all(|&(i, d)| d == j + i as i32)
}

/// Checks `reg M⟨j⟩ ≤ j` for `j` between the lowest and highest generator
/// degree of `M`.
pub fn is_componentwise_linear(m: &PresentedModule) -> CwlReport {
    let mc = minimal_cover(m);
    let twists = mc.cover.twists();
    let (Some(&lo), Some(&hi)) = (twists.iter().min(), twists.iter().max()) else {
        return CwlReport::from_degrees(Vec::new());
    };
    let p = mc.presentation();
    let degrees = (lo..=hi)
        .map(|j| {
            let c = component(&p, j);
            CwlDegree {
                j,
                linear: has_linear_resolution(&c.relations().minimalized(), j + 1),
            }
        })
        .collect();
    CwlReport::from_degrees(degrees)
}

/// Componentwise linearity of a submodule `U ⊆ F` regarded as a module.
pub fn is_submodule_componentwise_linear(u: &Submodule) -> CwlReport {
    let degs = u.generator_degrees();
    let (Some(&lo), Some(&hi)) = (degs.first(), degs.last()) else {
        return CwlReport::from_degrees(Vec::new());
    };
    let degrees = (lo..=hi)
        .map(|j| CwlDegree {
            j,
            linear: has_linear_resolution(&u.component(j), j),
        })
        .collect();
    CwlReport::from_degrees(degrees)
}
