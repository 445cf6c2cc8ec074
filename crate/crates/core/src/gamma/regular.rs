//! Gamma-regular elements, gamma-regular sequences and hat-gamma-regularity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{are_independent, LinearForm, LinearQuotient};
use crate::modules::{colon_by_linear, PresentedModule, Submodule};
use crate::resolution::minimal_cover;

use super::basic::{alpha, annihilator_series, beta1, cmod, cmod_component, finite_dims, reduce_with, Alpha};

#[derive(Clone, Debug, Serialize)]
pub struct Criteria {
    /// `β₁ M = α(M;z) + β₁ M̄`.
    pub ii: bool,
    /// `β₁ M = α(C¹M; z)`; skipped when `α(M;z)` is infinite.
    pub iii: Option<bool>,
    /// `Syz₁ M` is m-full in `F_M` with respect to `z`.
    pub iv: bool,
}

impl Criteria {
    pub fn agree(&self) -> bool {
        self.iii.is_none_or(|c| c == self.ii) && self.iv == self.ii
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaCertificate {
    #[serde(serialize_with = "ser_form")]
    pub z: LinearForm,
    pub beta1: usize,
    pub alpha: Alpha,
    pub beta1_bar: usize,
    pub verdict: bool,
    pub criteria: Criteria,
}

pub(crate) fn ser_form<S: serde::Serializer>(z: &LinearForm, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&z.to_string())
}

pub(crate) fn ser_forms<S: serde::Serializer>(zs: &[LinearForm], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(zs.iter().map(|z| z.to_string()))
}

/// `mU :_V z = U` with `V` the ambient free module.
pub fn is_m_full(u: &Submodule, z: &LinearForm) -> Result<bool> {
    let mu = u.mul_maximal_power(1);
    let w = colon_by_linear(&mu, z)?;
    Ok(u.contains_submodule(&w))
}

/// The four equivalent m-fullness conditions for `U ⊆ V` free, evaluated by
/// separate computations.
#[derive(Clone, Debug, Serialize)]
pub struct MFullConditions {
    /// `mU :_V z = U` by membership.
    pub colon: bool,
    /// `V/U -> (V/mU)(1)` by `z` is injective, by Hilbert series.
    pub injective: bool,
    /// `0 :_{V/mU} z = U/mU`, by total dimension.
    pub annihilator: bool,
    /// Graded `Tor_1` comparison.
    pub tor: bool,
}

impl MFullConditions {
    pub fn agree(&self) -> bool {
        self.colon == self.injective && self.colon == self.annihilator && self.colon == self.tor
    }
}

pub fn m_full_conditions(u: &Submodule, z: &LinearForm) -> Result<MFullConditions> {
    let mu = u.mul_maximal_power(1);
    let w = colon_by_linear(&mu, z)?;
    let colon = u.contains_submodule(&w);
    let kernel = u.quotient_hilbert_series().sub(&w.quotient_hilbert_series());
    let injective = kernel.numerator.is_zero();
    let c = PresentedModule::new(mu);
    let q = LinearQuotient::new(*u.ring(), std::slice::from_ref(z))?;
    let ann = annihilator_series(&c.hilbert_series(), &reduce_with(&c, &q).hilbert_series());
    let ann_dims = finite_dims(&ann);
    let gens = u.generator_degrees();
    let annihilator = ann_dims.as_ref().is_some_and(|d| d.total() == gens.len() as u64);
    let tor = ann_dims.is_some_and(|d| {
        let mut expected = crate::modules::GradedDims::default();
        for g in &gens {
            *expected.dims.entry(*g).or_insert(0) += 1;
        }
        d.nonzero() == expected.nonzero()
    });
    Ok(MFullConditions {
        colon,
        injective,
        annihilator,
        tor,
    })
}

/// Decides whether `z` is gamma-regular on `M` by `β₁ M = α(M;z) + β₁ M̄`,
/// recomputing the colon criteria alongside.
pub fn is_gamma_regular(m: &PresentedModule, z: &LinearForm) -> Result<GammaCertificate> {
    m.ring().check_same(z.ring())?;
    let mc = minimal_cover(m);
    let p = mc.presentation();
    let b1 = mc.syzygy.num_minimal_generators();
    let a = alpha(&p, z)?;
    let q = LinearQuotient::new(*m.ring(), std::slice::from_ref(z))?;
    let b1_bar = beta1(&reduce_with(&p, &q));
    let ii = matches!(a, Alpha::Finite(v) if b1 as u64 == v + b1_bar as u64);
    let iii = match a {
        Alpha::Finite(_) => {
            let c1 = cmod(&p, 1);
            Some(alpha(&c1, z)? == Alpha::Finite(b1 as u64))
        }
        Alpha::Infinite => None,
    };
    let iv = is_m_full(&mc.syzygy, z)?;
    Ok(GammaCertificate {
        z: z.clone(),
        beta1: b1,
        alpha: a,
        beta1_bar: b1_bar,
        verdict: ii,
        criteria: Criteria { ii, iii, iv },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceCheck {
    #[serde(serialize_with = "ser_forms")]
    pub forms: Vec<LinearForm>,
    pub accepted: bool,
    pub alphas: Vec<Alpha>,
    pub beta1: usize,
    pub beta1_final: usize,
    /// Per step: `Syz₁ M̄⁽ⁱ⁻¹⁾` is m-full with respect to `z̄_i`.
    pub stepwise: Vec<bool>,
    pub agree: bool,
}

impl SequenceCheck {
    pub fn finite_alphas(&self) -> Option<Vec<u64>> {
        self.alphas.iter().map(|a| a.finite()).collect()
    }
}

/// Decides whether `zs` is a gamma-regular sequence on `M` by the aggregate
/// equality `β₁ M = Σ α(M̄⁽ⁱ⁻¹⁾; z_i) + β₁ M̄⁽ʳ⁾`.
pub fn is_gamma_sequence(m: &PresentedModule, zs: &[LinearForm]) -> Result<SequenceCheck> {
    if zs.is_empty() {
        return Err(Error::Invalid("empty sequence".into()));
    }
    for z in zs {
        m.ring().check_same(z.ring())?;
    }
    if !are_independent(zs) {
        return Err(Error::DependentForms);
    }
    let ring = *m.ring();
    let p = minimal_cover(m).presentation();
    let b1 = beta1(&p);
    let mut alphas = Vec::with_capacity(zs.len());
    let mut stepwise = Vec::with_capacity(zs.len());
    for i in 0..zs.len() {
        let q = LinearQuotient::new(ring, &zs[..i])?;
        let stage = reduce_with(&p, &q);
        let zbar = q.map_form(&zs[i]).ok_or(Error::DependentForms)?;
        alphas.push(alpha(&stage, &zbar)?);
        stepwise.push(is_m_full(stage.relations(), &zbar)?);
    }
    let q = LinearQuotient::new(ring, zs)?;
    let b1_final = beta1(&reduce_with(&p, &q));
    let sum: Option<u64> = alphas.iter().map(|a| a.finite()).sum();
    let accepted = sum.is_some_and(|s| s + b1_final as u64 == b1 as u64);
    let agree = accepted == stepwise.iter().all(|&s| s);
    Ok(SequenceCheck {
        forms: zs.to_vec(),
        accepted,
        alphas,
        beta1: b1,
        beta1_final: b1_final,
        stepwise,
        agree,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HatGammaReport {
    pub verdict: bool,
    /// `(d, z gamma-regular on C⟨d⟩ M)` for each syzygy generator degree.
    pub per_degree: Vec<(i32, bool)>,
    /// Bound used for the direct strongly m-full scan.
    pub scan_bound: u32,
    /// `m^{i+1}U :_F z = m^i U` for all `i ≤ scan_bound`.
    pub scan: bool,
    pub agree: bool,
}

/// Default scan bound `deg soc M - indeg(Syz⊗k) + spread + 2`, at least 0.
pub fn default_scan_bound(m: &PresentedModule) -> u32 {
    let mc = minimal_cover(m);
    let degs = mc.syzygy.generator_degrees();
    let (Some(&lo), Some(&hi)) = (degs.first(), degs.last()) else {
        return 0;
    };
    let soc = super::basic::socle(&mc.presentation());
    let top = soc.deg().unwrap_or(lo - 2);
    (top - lo + (hi - lo) + 2).max(0) as u32
}

/// `m^{i+1}U :_F z = m^i U` for `i = 0..=bound`.
pub fn is_strongly_m_full(u: &Submodule, z: &LinearForm, bound: u32) -> Result<bool> {
    for i in 0..=bound {
        let lower = u.mul_maximal_power(i);
        let upper = u.mul_maximal_power(i + 1);
        let w = colon_by_linear(&upper, z)?;
        if !lower.contains_submodule(&w) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides hat-gamma-regularity through the components `C⟨d⟩ M` and runs the
/// bounded strongly m-full scan as a cross-check.
pub fn is_hat_gamma_regular(m: &PresentedModule, z: &LinearForm, scan_bound: Option<u32>) -> Result<HatGammaReport> {
    m.ring().check_same(z.ring())?;
    let mc = minimal_cover(m);
    let p = mc.presentation();
    let mut degs = mc.syzygy.generator_degrees();
    degs.dedup();
    let mut per_degree = Vec::new();
    for &d in &degs {
        let c = cmod_component(&p, d);
        per_degree.push((d, is_gamma_regular(&c, z)?.verdict));
    }
    let verdict = per_degree.iter().all(|&(_, v)| v);
    let bound = scan_bound.unwrap_or_else(|| default_scan_bound(&p));
    let scan = is_strongly_m_full(&mc.syzygy, z, bound)?;
    Ok(HatGammaReport {
        verdict,
        per_degree,
        scan_bound: bound,
        scan,
        agree: verdict == scan,
    })
}
