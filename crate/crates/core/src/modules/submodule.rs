//! Submodules of graded free modules with a lazily computed Groebner basis.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::modules::free::{FreeElement, GradedFreeModule};
use crate::modules::gb::{buchberger, GbInput, GbOptions, Reducer};
use crate::modules::hilbert::{monomial_numerator, GradedDims, HilbertSeries, Laurent};
use crate::modules::vector::Vector;
use crate::monomial::Monomial;
use crate::poly::Ring;

pub(crate) struct GbData {
    /// Reduced Groebner basis in internal coordinates.
    pub basis: Vec<Vector>,
    /// Indices of generators forming a minimal generating set.
    pub mingens: Vec<usize>,
    pub twists: Vec<i32>,
}

#[derive(Clone)]
pub struct Submodule {
    ambient: GradedFreeModule,
    generators: Vec<FreeElement>,
    gb: OnceLock<Arc<GbData>>,
}

impl Submodule {
    pub fn new(ambient: GradedFreeModule, generators: Vec<FreeElement>) -> Result<Self> {
        for g in &generators {
            if g.rank() != ambient.rank() {
                return Err(Error::DimensionMismatch {
                    expected: ambient.rank(),
                    found: g.rank(),
                });
            }
            for c in g.components() {
                ambient.ring().check_same(c.ring())?;
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Submodule {
            ambient,
            generators,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ambient: GradedFreeModule) -> Self {
        Submodule {
            ambient,
            generators: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    /// The whole free module.
    pub fn full(ambient: GradedFreeModule) -> Self {
        let generators = (0..ambient.rank()).map(|k| ambient.basis(k)).collect();
        Submodule {
            ambient,
            generators,
            gb: OnceLock::new(),
        }
    }

    /// An ideal of `R` as a submodule of `R`.
    pub fn ideal(ring: Ring, gens: Vec<crate::poly::Polynomial>) -> Result<Self> {
        let f = GradedFreeModule::ring_module(ring);
        let elems = gens
            .into_iter()
            .map(|g| f.element(vec![g]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(f, elems)
    }

    pub fn ambient(&self) -> &GradedFreeModule {
        &self.ambient
    }

    pub fn ring(&self) -> &Ring {
        self.ambient.ring()
    }

    pub fn generators(&self) -> &[FreeElement] {
        &self.generators
    }

    pub(crate) fn gb_data(&self) -> &GbData {
        self.gb.get_or_init(|| {
            let ring = *self.ambient.ring();
            let twists = self.ambient.internal_twists();
            let inputs = self
                .generators
                .iter()
                .map(|g| GbInput {
                    vec: self.ambient.to_vector(g),
                    degree: g.degree().unwrap(),
                })
                .collect();
            let run = buchberger(
                ring,
                &twists,
                inputs,
                GbOptions {
                    reduce: true,
                    ..Default::default()
                },
            );
            let mingens = run.kept.iter().enumerate().filter(|(_, &k)| k).map(|(i, _)| i).collect();
            let mut basis = run.basis;
            basis.sort_by(|a, b| {
                let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
                crate::modules::vector::term_cmp(ring.order(), la.pos, &la.mon, lb.pos, &lb.mon)
            });
            Arc::new(GbData { basis, mingens, twists })
        })
    }

    /// The reduced Groebner basis as a new submodule.
    pub fn groebner_basis(&self) -> Submodule {
        let gb = self.gb_data();
        let generators = gb.basis.iter().map(|v| self.ambient.from_vector(v)).collect();
        Submodule {
            ambient: self.ambient.clone(),
            generators,
            gb: OnceLock::new(),
        }
    }

    /// Lead terms of the Groebner basis as `(generator index, monomial)`.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.gb_data()
            .basis
            .iter()
            .map(|v| {
                let l = v.lead().unwrap();
                (self.ambient.pos_of(l.pos), l.mon.clone())
            })
            .collect()
    }

    pub(crate) fn reducer(&self) -> Reducer<'_> {
        let gb = self.gb_data();
        Reducer::new(*self.ring(), &gb.twists, &gb.basis)
    }

    pub fn normal_form(&self, v: &FreeElement) -> Result<FreeElement> {
        self.check_rank(v)?;
        let w = self.reducer().normal_form(self.ambient.to_vector(v));
        Ok(self.ambient.from_vector(&w))
    }

    fn check_rank(&self, v: &FreeElement) -> Result<()> {
        if v.rank() != self.ambient.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient.rank(),
                found: v.rank(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &FreeElement) -> Result<bool> {
        self.check_rank(v)?;
        Ok(self.reducer().normal_form(self.ambient.to_vector(v)).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_submodule(&self, other: &Submodule) -> bool {
        assert_eq!(self.ambient.rank(), other.ambient.rank());
        let red = self.reducer();
        other
            .generators
            .iter()
            .all(|g| red.normal_form(self.ambient.to_vector(g)).is_zero())
    }

    /// Mutual containment.
    pub fn same_as(&self, other: &Submodule) -> bool {
        self.contains_submodule(other) && other.contains_submodule(self)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether this is the whole ambient module.
    pub fn is_full(&self) -> bool {
        let red = self.reducer();
        (0..self.ambient.rank()).all(|k| red.is_reducible(self.ambient.rank_of(k), &Monomial::one(self.ring().nvars())))
    }

    pub fn minimal_generators(&self) -> Vec<FreeElement> {
        self.gb_data().mingens.iter().map(|&i| self.generators[i].clone()).collect()
    }

    pub fn num_minimal_generators(&self) -> usize {
        self.gb_data().mingens.len()
    }

    /// Degrees of a minimal generating set, ascending.
    pub fn generator_degrees(&self) -> Vec<i32> {
        let mut d: Vec<i32> = self
            .gb_data()
            .mingens
            .iter()
            .map(|&i| self.generators[i].degree().unwrap())
            .collect();
        d.sort_unstable();
        d
    }

    /// The same submodule given by a minimal generating set.
    pub fn minimalized(&self) -> Submodule {
        let gb = self.gb_data();
        let out = Submodule {
            ambient: self.ambient.clone(),
            generators: self.minimal_generators(),
            gb: OnceLock::new(),
        };
        let _ = out.gb.set(Arc::new(GbData {
            basis: gb.basis.clone(),
            mingens: (0..gb.mingens.len()).collect(),
            twists: gb.twists.clone(),
        }));
        out
    }

    /// Hilbert series of the quotient `F/U`.
    pub fn quotient_hilbert_series(&self) -> HilbertSeries {
        let n = self.ring().nvars();
        let gb = self.gb_data();
        let mut per_pos: Vec<Vec<Monomial>> = vec![Vec::new(); self.ambient.rank()];
        for v in &gb.basis {
            let l = v.lead().unwrap();
            per_pos[l.pos as usize].push(l.mon.clone());
        }
        let mut num = Laurent::zero();
        for (r, leads) in per_pos.iter().enumerate() {
            num = num.add(&monomial_numerator(n, leads).shift(gb.twists[r]));
        }
        HilbertSeries { numerator: num, nvars: n }
    }

    /// Hilbert series of `U` itself.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let f = Submodule::zero(self.ambient.clone()).quotient_hilbert_series();
        f.sub(&self.quotient_hilbert_series())
    }

    /// `dim_K (F/U)_d` by counting standard monomials.
    pub fn quotient_dims(&self, lo: i32, hi: i32) -> GradedDims {
        let red = self.reducer();
        let mut dims = GradedDims::default();
        for d in lo..=hi {
            let count = self
                .ambient
                .monomials_of_degree(d)
                .iter()
                .filter(|(k, m)| !red.is_reducible(self.ambient.rank_of(*k), m))
                .count();
            dims.dims.insert(d, count as u64);
        }
        dims
    }

    /// `dim_K U_d`.
    pub fn dim_in_degree(&self, d: i32) -> u64 {
        self.ambient.dim_in_degree(d) - self.quotient_dims(d, d).get(d)
    }

    /// A K-basis of `U_d`: one element per lead term of degree `d`.
    pub fn degree_basis(&self, d: i32) -> Vec<FreeElement> {
        let gb = self.gb_data();
        let ring = *self.ring();
        let k = ring.field();
        let mut out = Vec::new();
        for (kpos, m) in self.ambient.monomials_of_degree(d) {
            let r = self.ambient.rank_of(kpos);
            if let Some(g) = gb.basis.iter().find(|v| {
                let l = v.lead().unwrap();
                l.pos == r && l.mon.divides(&m)
            }) {
                let q = g.lead().unwrap().mon.quotient_of(&m).unwrap();
                out.push(self.ambient.from_vector(&g.mul_mon(k, &q, 1)));
            }
        }
        out
    }

    /// Standard monomials `(k, m)` of degree `d`: a K-basis of `(F/U)_d`.
    pub fn standard_monomials(&self, d: i32) -> Vec<(usize, Monomial)> {
        let red = self.reducer();
        self.ambient
            .monomials_of_degree(d)
            .into_iter()
            .filter(|(k, m)| !red.is_reducible(self.ambient.rank_of(*k), m))
            .collect()
    }

    /// `U + V`.
    pub fn sum(&self, other: &Submodule) -> Submodule {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Submodule {
            ambient: self.ambient.clone(),
            generators: gens,
            gb: OnceLock::new(),
        }
    }

    /// `m^i U`.
    pub fn mul_maximal_power(&self, i: u32) -> Submodule {
        let ring = *self.ring();
        let mons = Monomial::all_of_degree(ring.nvars(), i);
        let mut gens = Vec::new();
        for g in self.minimal_generators() {
            for m in &mons {
                gens.push(g.mul_poly(&ring.term(m.clone(), 1)));
            }
        }
        Submodule {
            ambient: self.ambient.clone(),
            generators: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        }
    }

    /// Submodule generated by `U_j`.
    pub fn component(&self, j: i32) -> Submodule {
        Submodule {
            ambient: self.ambient.clone(),
            generators: self.degree_basis(j),
            gb: OnceLock::new(),
        }
    }

    /// Submodule generated by `U_d, ..., U_D` where `D` is the top generator degree.
    pub fn truncate_ge(&self, d: i32) -> Submodule {
        let top = self.generator_degrees().last().copied().unwrap_or(d).max(d);
        let mut gens = Vec::new();
        for j in d..=top {
            gens.extend(self.degree_basis(j));
        }
        Submodule {
            ambient: self.ambient.clone(),
            generators: gens,
            gb: OnceLock::new(),
        }
    }

    /// Lowest generator degree, `None` for zero.
    pub fn indeg(&self) -> Option<i32> {
        self.generator_degrees().first().copied()
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule(twists {:?}, {:?})", self.ambient.twists(), self.generators)
    }
}
