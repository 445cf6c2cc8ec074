//! Socles, torsion, components, truncations, the `C_i` constructions, `α`
//! and reduction modulo linear forms.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::linear::{LinearForm, LinearQuotient};
use crate::modules::{
    colon_by_linear, colon_by_maximal, kernel_of_map, saturate, FreeElement, GradedDims, GradedFreeModule, HilbertSeries,
    PresentedModule, Submodule,
};
use crate::resolution::minimal_cover;

/// `dim_K (0 :_M z)`, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alpha {
    Finite(u64),
    Infinite,
}

impl Alpha {
    pub fn finite(self) -> Option<u64> {
        match self {
            Alpha::Finite(a) => Some(a),
            Alpha::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Alpha::Finite(_))
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Finite(a) => write!(f, "{}", a),
            Alpha::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Alpha::Finite(a) => s.serialize_u64(*a),
            Alpha::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A finite-length submodule `W/U` of `M = F/U`, given by its preimage `W`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub lifted: Submodule,
    pub dims: GradedDims,
}

impl Subquotient {
    /// `W/U` for `U ⊆ W ⊆ F` with `W/U` of finite length.
    pub fn between(u: &Submodule, w: Submodule) -> Self {
        let dims = finite_dims(&u.quotient_hilbert_series().sub(&w.quotient_hilbert_series()))
            .expect("subquotient has finite length");
        Subquotient { lifted: w, dims }
    }

    pub fn is_zero(&self) -> bool {
        self.dims.total() == 0
    }

    pub fn total(&self) -> u64 {
        self.dims.total()
    }

    pub fn indeg(&self) -> Option<i32> {
        self.dims.indeg()
    }

    pub fn deg(&self) -> Option<i32> {
        self.dims.deg()
    }
}

/// Per-degree dimensions of a finite-length series.
pub(crate) fn finite_dims(h: &HilbertSeries) -> Option<GradedDims> {
    let p = h.finite_part()?;
    let mut dims = GradedDims::default();
    for (e, c) in p.terms() {
        if c != 0 {
            dims.dims.insert(e, c as u64);
        }
    }
    Some(dims)
}

/// `soc M = 0 :_M m`.
pub fn socle(m: &PresentedModule) -> Subquotient {
    let u = m.relations();
    Subquotient::between(u, colon_by_maximal(u).expect("same ring"))
}

/// `Γ_m(M) = 0 :_M m^∞`.
pub fn local_cohomology_zero(m: &PresentedModule) -> Subquotient {
    let u = m.relations();
    Subquotient::between(u, saturate(u).expect("same ring"))
}

/// The submodule of `M` generated by the classes of `gens`, presented from
/// its own free module on those generators.
pub fn generated_submodule(m: &PresentedModule, gens: &[FreeElement]) -> PresentedModule {
    let ring = *m.ring();
    let gens: Vec<&FreeElement> = gens.iter().filter(|g| !g.is_zero()).collect();
    let src = GradedFreeModule::new(ring, gens.iter().map(|g| g.degree().unwrap()).collect());
    let images: Vec<FreeElement> = gens.into_iter().cloned().collect();
    let rel = kernel_of_map(&src, m, &images).expect("images have the source degrees");
    PresentedModule::new(rel)
}

fn basis_elements(m: &PresentedModule, j: i32) -> Vec<FreeElement> {
    let f = m.free_module();
    m.relations()
        .standard_monomials(j)
        .into_iter()
        .map(|(k, mon)| f.monomial_element(k, mon))
        .collect()
}

/// `M⟨j⟩ = R·M_j`.
pub fn component(m: &PresentedModule, j: i32) -> PresentedModule {
    generated_submodule(m, &basis_elements(m, j))
}

/// `M_{≥d}`.
pub fn truncate_ge(m: &PresentedModule, d: i32) -> PresentedModule {
    let top = m.free_module().twists().iter().copied().max().unwrap_or(d).max(d);
    let mut gens = Vec::new();
    for j in d..=top {
        gens.extend(basis_elements(m, j));
    }
    generated_submodule(m, &gens)
}

/// `C_i M = F_M / m^i Syz₁ M`; `C_0 M` is `M` itself.
pub fn cmod(m: &PresentedModule, i: u32) -> PresentedModule {
    if i == 0 {
        return m.clone();
    }
    let syz = minimal_cover(m).syzygy;
    PresentedModule::new(syz.mul_maximal_power(i))
}

/// `C⟨j⟩ M = F_M / (Syz₁ M)⟨j⟩`.
pub fn cmod_component(m: &PresentedModule, j: i32) -> PresentedModule {
    let syz = minimal_cover(m).syzygy;
    PresentedModule::new(syz.component(j))
}

/// `α(M; z)` as `dim_K (U :_F z)/U`.
pub fn alpha(m: &PresentedModule, z: &LinearForm) -> Result<Alpha> {
    let u = m.relations();
    let w = colon_by_linear(u, z)?;
    let h = u.quotient_hilbert_series().sub(&w.quotient_hilbert_series());
    Ok(h.length().map_or(Alpha::Infinite, Alpha::Finite))
}

/// Graded dimensions of `0 :_M z`, `None` when infinite.
pub fn annihilator_dims(m: &PresentedModule, z: &LinearForm) -> Result<Option<GradedDims>> {
    let bar = reduce_mod_linear(m, std::slice::from_ref(z))?;
    Ok(finite_dims(&annihilator_series(&m.hilbert_series(), &bar.hilbert_series())))
}

/// `α(M; z)` from the Hilbert series of `M` and `M/zM`.
pub fn alpha_hilbert(m: &PresentedModule, z: &LinearForm) -> Result<Alpha> {
    let bar = reduce_mod_linear(m, std::slice::from_ref(z))?;
    Ok(alpha_from_series(&m.hilbert_series(), &bar.hilbert_series()))
}

/// `H_{0:z} = H_M - (H_M - H_{M/zM}) / u`, with `M/zM` given over one
/// variable fewer.
pub(crate) fn annihilator_series(h: &HilbertSeries, h_bar: &HilbertSeries) -> HilbertSeries {
    let lifted = h_bar.over_more_variables(1);
    let diff = h.numerator.sub(&lifted.numerator).shift(-1);
    HilbertSeries {
        numerator: h.numerator.sub(&diff),
        nvars: h.nvars,
    }
}

pub(crate) fn alpha_from_series(h: &HilbertSeries, h_bar: &HilbertSeries) -> Alpha {
    annihilator_series(h, h_bar)
        .length()
        .map_or(Alpha::Infinite, Alpha::Finite)
}

/// `M ⊗ R/(z_1..z_r)` over a polynomial ring in `n - r` variables.
pub fn reduce_mod_linear(m: &PresentedModule, zs: &[LinearForm]) -> Result<PresentedModule> {
    if zs.is_empty() {
        return Ok(m.clone());
    }
    let q = LinearQuotient::new(*m.ring(), zs)?;
    Ok(reduce_with(m, &q))
}

pub(crate) fn reduce_with(m: &PresentedModule, q: &LinearQuotient) -> PresentedModule {
    let fbar = m.free_module().over(q.target());
    let gens = m
        .relations()
        .generators()
        .iter()
        .map(|g| map_element(&fbar, g, q))
        .collect();
    PresentedModule::new(Submodule::new(fbar, gens).expect("same ring"))
}

pub(crate) fn map_element(fbar: &GradedFreeModule, g: &FreeElement, q: &LinearQuotient) -> FreeElement {
    let comps = g.components().iter().map(|c| q.map(c)).collect();
    fbar.element(comps).expect("linear substitution keeps homogeneity")
}

/// `β_1` of `M`: the number of minimal relations.
pub fn beta1(m: &PresentedModule) -> usize {
    minimal_cover(m).syzygy.num_minimal_generators()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn both_alpha_routes_on_a_small_ideal() {
        let r = Ring::new(2);
        let m = PresentedModule::cyclic(r, vec![r.parse("x1^2").unwrap(), r.parse("x1*x2").unwrap(), r.parse("x2^3").unwrap()])
            .unwrap();
        let y = LinearForm::variable(r, 1);
        let x = LinearForm::variable(r, 0);
        assert_eq!(alpha(&m, &y).unwrap(), Alpha::Finite(2));
        assert_eq!(alpha_hilbert(&m, &y).unwrap(), Alpha::Finite(2));
        assert_eq!(alpha(&m, &x).unwrap(), Alpha::Finite(3));
        assert_eq!(alpha_hilbert(&m, &x).unwrap(), Alpha::Finite(3));
    }

    #[test]
    fn alpha_is_infinite_on_a_zero_divisor() {
        let r = Ring::new(2);
        let m = PresentedModule::cyclic(r, vec![r.parse("x1").unwrap()]).unwrap();
        let x = LinearForm::variable(r, 0);
        assert_eq!(alpha(&m, &x).unwrap(), Alpha::Infinite);
        assert_eq!(alpha_hilbert(&m, &x).unwrap(), Alpha::Infinite);
        assert_eq!(alpha(&m, &LinearForm::variable(r, 1)).unwrap(), Alpha::Finite(0));
    }
}
