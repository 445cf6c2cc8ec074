//! Ideals of `K[x,y]`: the first Betti number formula and the structure of
//! ideals with componentwise linear first syzygy.

use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{maximal_power, random_form, random_ideal, RandomShape};
use crate::gamma::{
    alpha, gamma_depth, is_gamma_regular, is_submodule_componentwise_linear, local_cohomology_zero, socle,
};
use crate::linear::LinearForm;
use crate::modules::{saturate, PresentedModule, Submodule};
use crate::poly::{Polynomial, Ring};
use crate::resolution::betti_table;

fn check_two_variables(ring: &Ring) -> Result<()> {
    if ring.nvars() != 2 {
        return Err(Error::Invalid(format!("expected 2 variables, found {}", ring.nvars())));
    }
    Ok(())
}

fn check_ideal(i: &Submodule) -> Result<()> {
    check_two_variables(i.ring())?;
    if i.ambient().rank() != 1 || i.ambient().twist(0) != 0 {
        return Err(Error::Invalid("expected an ideal".into()));
    }
    if i.is_zero() {
        return Err(Error::Invalid("zero ideal".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct BetaFormulaReport {
    pub beta1: u64,
    pub indeg_generators: i32,
    pub indeg_torsion: i32,
    /// `β₁(R/I) = indeg(I⊗k) - indeg Γ_m(R/I) + 1`.
    pub formula: bool,
    /// `Syz₁(R/I) = I` is componentwise linear.
    pub cwl: bool,
    /// Randomized `γ-depth(R/I) = 2`.
    pub full_depth: bool,
    /// For a random `z`: gamma-regular iff `α(R/I; z) = dim soc(R/I)`.
    pub socle_test: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome")]
pub enum BetaFormulaOutcome {
    Checked(BetaFormulaReport),
    /// `pd(R/I) ≠ 2`.
    WrongPd { pd: usize },
}

/// Compares the Betti number formula with componentwise linearity for
/// `M = R/I` over two variables with `pd M = 2`.
pub fn beta_formula_check(i: &Submodule, trials: usize, seed: u64) -> Result<BetaFormulaOutcome> {
    check_ideal(i)?;
    let m = PresentedModule::new(i.clone());
    let b = betti_table(&m);
    let pd = b.pd().unwrap_or(0);
    if pd != 2 {
        return Ok(BetaFormulaOutcome::WrongPd { pd });
    }
    let beta1 = b.total(1);
    let indeg_generators = i.indeg().expect("nonzero ideal");
    let indeg_torsion = local_cohomology_zero(&m).indeg().expect("depth zero");
    let formula = beta1 as i64 == (indeg_generators - indeg_torsion + 1) as i64;
    let cwl = is_submodule_componentwise_linear(&i.minimalized()).cwl;
    let full_depth = gamma_depth(&m, trials, seed).depth == 2;
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
    let z = LinearForm::random(*i.ring(), &mut rng);
    let soc = socle(&m).total();
    let socle_test = is_gamma_regular(&m, &z)?.verdict == (alpha(&m, &z)?.finite() == Some(soc));
    Ok(BetaFormulaOutcome::Checked(BetaFormulaReport {
        beta1,
        indeg_generators,
        indeg_torsion,
        formula,
        cwl,
        full_depth,
        socle_test,
        agree: formula == cwl && cwl == full_depth && socle_test,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CwlPart {
    pub d: i32,
    pub e: u32,
    #[serde(serialize_with = "ser_poly")]
    pub f: Polynomial,
}

fn ser_poly<S: serde::Serializer>(f: &Polynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&f.to_string())
}

/// `I = Σ m^{d_i - e_i} f_i` with `f_{i+1} | f_i`.
#[derive(Clone, Debug, Serialize)]
pub struct CwlDecomposition {
    pub parts: Vec<CwlPart>,
    /// `f_{i+1} | f_i` for each consecutive pair.
    pub divisibility: Vec<bool>,
    pub verified: bool,
}

impl CwlDecomposition {
    pub fn from_parts(parts: Vec<CwlPart>) -> Self {
        let divisibility = parts.windows(2).map(|w| divides(&w[1].f, &w[0].f)).collect();
        CwlDecomposition {
            parts,
            divisibility,
            verified: false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "parts": self.parts.iter().map(|p| json!({"d": p.d, "e": p.e, "f": p.f.to_string()})).collect::<Vec<_>>(),
            "verified": self.verified,
        })
    }

    /// Same degrees and the same `f_i` up to scalars.
    pub fn equivalent(&self, other: &CwlDecomposition) -> bool {
        self.parts.len() == other.parts.len()
            && self
                .parts
                .iter()
                .zip(&other.parts)
                .all(|(a, b)| a.d == b.d && a.e == b.e && a.f.monic() == b.f.monic())
    }
}

fn divides(g: &Polynomial, f: &Polynomial) -> bool {
    let ring = *f.ring();
    let ideal = Submodule::ideal(ring, vec![g.clone()]).expect("same ring");
    let elem = ideal.ambient().element(vec![f.clone()]).expect("homogeneous");
    ideal.contains(&elem).expect("same ring")
}

/// `m^k f`.
fn part_ideal(ring: Ring, k: u32, f: &Polynomial) -> Submodule {
    let gens = maximal_power(ring, k).into_iter().map(|m| m.mul(f)).collect();
    Submodule::ideal(ring, gens).expect("same ring")
}

/// Recovers the parts of an ideal with componentwise linear first syzygy:
/// `f_i` generates the saturation of `I⟨d_i⟩`.
pub fn decompose_cwl_ideal(i: &Submodule) -> Result<CwlDecomposition> {
    check_ideal(i)?;
    let i = i.minimalized();
    if !is_submodule_componentwise_linear(&i).cwl {
        return Err(Error::Precondition("the ideal is not componentwise linear".into()));
    }
    let ring = *i.ring();
    let mut degs = i.generator_degrees();
    degs.dedup();
    let mut parts = Vec::new();
    let mut ok = true;
    for &d in &degs {
        let c = i.component(d);
        let sat = saturate(&c)?.minimalized();
        let gens = sat.minimal_generators();
        if gens.len() != 1 {
            return Err(Error::Precondition(format!("saturation of the degree {} component is not principal", d)));
        }
        let f = gens[0].components()[0].monic();
        let e = f.degree().expect("nonzero");
        if d < e as i32 {
            return Err(Error::Precondition(format!("degree {} part has d < e", d)));
        }
        ok &= c.same_as(&part_ideal(ring, d as u32 - e, &f));
        parts.push(CwlPart { d, e, f });
    }
    let mut out = CwlDecomposition::from_parts(parts);
    let rebuilt = sum_of_parts(ring, &out.parts);
    out.verified = ok && out.divisibility.iter().all(|&b| b) && rebuilt.same_as(&i);
    Ok(out)
}

fn sum_of_parts(ring: Ring, parts: &[CwlPart]) -> Submodule {
    let mut gens = Vec::new();
    for p in parts {
        gens.extend(maximal_power(ring, p.d as u32 - p.e).into_iter().map(|m| m.mul(&p.f)));
    }
    Submodule::ideal(ring, gens).expect("same ring")
}

/// `Σ m^{d_i - e_i} f_i`, after checking `d` increasing, `e` strictly
/// decreasing, `e_i = deg f_i ≤ d_i` and `f_{i+1} | f_i`.
pub fn build_cwl_ideal(spec: &CwlDecomposition) -> Result<Submodule> {
    let parts = &spec.parts;
    let Some(first) = parts.first() else {
        return Err(Error::Invalid("no parts".into()));
    };
    let ring = *first.f.ring();
    check_two_variables(&ring)?;
    for p in parts {
        ring.check_same(p.f.ring())?;
        if !p.f.is_homogeneous() || p.f.is_zero() || p.f.degree() != Some(p.e) {
            return Err(Error::Invalid(format!("f = {} does not have degree {}", p.f, p.e)));
        }
        if p.d < p.e as i32 {
            return Err(Error::Invalid(format!("d = {} is below e = {}", p.d, p.e)));
        }
    }
    for w in parts.windows(2) {
        if w[1].d <= w[0].d {
            return Err(Error::Invalid("degrees d must increase".into()));
        }
        if w[1].e >= w[0].e {
            return Err(Error::Invalid("degrees e must strictly decrease".into()));
        }
        if !divides(&w[1].f, &w[0].f) {
            return Err(Error::Invalid(format!("{} does not divide {}", w[1].f, w[0].f)));
        }
    }
    Ok(sum_of_parts(ring, parts).minimalized())
}

#[derive(Clone, Debug, Serialize)]
pub struct BuildCheck {
    pub cwl: bool,
    pub round_trip: bool,
    /// `dim_K(I⊗k) = d₁ - e_r + 1`.
    pub generators: bool,
    /// `dim_K soc(R/I) = d₁ - e_r`.
    pub socle: bool,
}

impl BuildCheck {
    pub fn holds(&self) -> bool {
        self.cwl && self.round_trip && self.generators && self.socle
    }
}

/// Builds the ideal and checks it against the decomposition and the
/// dimension formulas.
pub fn check_build(spec: &CwlDecomposition) -> Result<(Submodule, BuildCheck)> {
    let i = build_cwl_ideal(spec)?;
    let cwl = is_submodule_componentwise_linear(&i).cwl;
    let round_trip = decompose_cwl_ideal(&i).is_ok_and(|d| d.verified && d.equivalent(spec));
    let (d1, er) = (spec.parts[0].d, spec.parts.last().unwrap().e as i32);
    let generators = i.num_minimal_generators() as i32 == d1 - er + 1;
    let socle = socle(&PresentedModule::new(i.clone())).total() as i32 == d1 - er;
    Ok((
        i,
        BuildCheck {
            cwl,
            round_trip,
            generators,
            socle,
        },
    ))
}

/// A random valid decomposition with `1..=max_parts` parts and `d_r > e_r`.
pub fn random_cwl_spec<G: Rng + ?Sized>(ring: Ring, max_parts: usize, rng: &mut G) -> CwlDecomposition {
    let r = rng.gen_range(1..=max_parts.max(1));
    let mut es: Vec<u32> = Vec::with_capacity(r);
    let mut e = rng.gen_range(0..=1);
    for _ in 0..r {
        es.push(e);
        e += rng.gen_range(1..=2);
    }
    es.reverse();
    let mut ds: Vec<i32> = Vec::with_capacity(r);
    let mut lo = 1;
    for &e in &es {
        let d = rng.gen_range((lo.max(e as i32 + 1))..=(lo.max(e as i32 + 1) + 1));
        ds.push(d);
        lo = d + 1;
    }
    let mut fs: Vec<Polynomial> = vec![ring.one(); r];
    fs[r - 1] = if es[r - 1] == 0 {
        ring.one()
    } else {
        random_form(ring, es[r - 1], 2, rng).monic()
    };
    for k in (0..r - 1).rev() {
        let g = random_form(ring, es[k] - es[k + 1], 2, rng);
        fs[k] = fs[k + 1].mul(&g).monic();
    }
    let parts = (0..r)
        .map(|k| CwlPart {
            d: ds[k],
            e: es[k],
            f: fs[k].clone(),
        })
        .collect();
    CwlDecomposition::from_parts(parts)
}

/// A random homogeneous ideal of `K[x,y]` with `pd(R/I) = 2`.
pub fn random_pd2_ideal<G: Rng + ?Sized>(ring: Ring, shape: RandomShape, rng: &mut G) -> Submodule {
    loop {
        let gens = random_ideal(ring, shape, rng);
        let i = Submodule::ideal(ring, gens).expect("same ring");
        if betti_table(&PresentedModule::new(i.clone())).pd() == Some(2) {
            return i;
        }
    }
}
