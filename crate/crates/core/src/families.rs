//! Seeded instance families.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::modules::{FreeElement, GradedFreeModule, PresentedModule};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

/// `R/m^{r+1}`.
pub fn power_of_m(ring: Ring, r: u32) -> PresentedModule {
    PresentedModule::cyclic(ring, maximal_power(ring, r + 1)).expect("same ring")
}

/// Monomial generators of `m^d`.
pub fn maximal_power(ring: Ring, d: u32) -> Vec<Polynomial> {
    Monomial::all_of_degree(ring.nvars(), d)
        .into_iter()
        .map(|m| ring.term(m, 1))
        .collect()
}

/// `I = m·x + m³ = (x², xy, y³)` in two variables.
pub fn rm_ord_ideal(ring: Ring) -> Vec<Polynomial> {
    assert_eq!(ring.nvars(), 2);
    ["x1^2", "x1*x2", "x2^3"].iter().map(|s| ring.parse(s).unwrap()).collect()
}

pub fn rm_ord_example(ring: Ring) -> PresentedModule {
    PresentedModule::cyclic(ring, rm_ord_ideal(ring)).expect("same ring")
}

/// Shape of random instances; ranges are inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomShape {
    pub gens: (usize, usize),
    pub degrees: (u32, u32),
    pub max_terms: usize,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape {
            gens: (1, 4),
            degrees: (1, 4),
            max_terms: 3,
        }
    }
}

/// A sparse homogeneous polynomial of degree `d` with `1..=max_terms` terms.
pub fn random_form<G: Rng + ?Sized>(ring: Ring, d: u32, max_terms: usize, rng: &mut G) -> Polynomial {
    let mons = Monomial::all_of_degree(ring.nvars(), d);
    let p = ring.characteristic();
    loop {
        let t = rng.gen_range(1..=max_terms.max(1)).min(mons.len());
        let picked: Vec<&Monomial> = mons.choose_multiple(rng, t).collect();
        let f = Polynomial::from_terms(ring, picked.into_iter().map(|m| (m.clone(), rng.gen_range(1..p))));
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random homogeneous ideal generators with degrees in `shape.degrees`.
pub fn random_ideal<G: Rng + ?Sized>(ring: Ring, shape: RandomShape, rng: &mut G) -> Vec<Polynomial> {
    let count = rng.gen_range(shape.gens.0..=shape.gens.1);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(shape.degrees.0..=shape.degrees.1);
            random_form(ring, d, shape.max_terms, rng)
        })
        .collect()
}

/// A presented module on 2 or 3 generators of degree 0 or 1 whose relations
/// have no constant entries, so that it needs all its generators.
pub fn random_module<G: Rng + ?Sized>(ring: Ring, shape: RandomShape, rng: &mut G) -> PresentedModule {
    let rank = rng.gen_range(2..=3);
    let twists: Vec<i32> = (0..rank).map(|_| rng.gen_range(0..=1)).collect();
    let free = GradedFreeModule::new(ring, twists.clone());
    let count = rng.gen_range(shape.gens.0..=shape.gens.1);
    let top = *twists.iter().max().unwrap();
    let mut rels: Vec<FreeElement> = Vec::new();
    while rels.len() < count {
        let d = rng.gen_range((top + 1).max(shape.degrees.0 as i32)..=(shape.degrees.1 as i32).max(top + 1));
        let comps: Vec<Polynomial> = twists
            .iter()
            .map(|&t| {
                if rng.gen_bool(0.6) {
                    random_form(ring, (d - t) as u32, shape.max_terms, rng)
                } else {
                    ring.zero()
                }
            })
            .collect();
        let v = free.element(comps).expect("homogeneous by construction");
        if !v.is_zero() {
            rels.push(v);
        }
    }
    PresentedModule::from_relations(free, rels).expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_families_are_reproducible_and_homogeneous() {
        let r = Ring::new(3);
        let a = random_ideal(r, RandomShape::default(), &mut ChaCha8Rng::seed_from_u64(5));
        let b = random_ideal(r, RandomShape::default(), &mut ChaCha8Rng::seed_from_u64(5));
        assert_eq!(a, b);
        assert!(a.iter().all(|f| f.is_homogeneous() && (1..=4).contains(&f.degree().unwrap())));
        let m = random_module(r, RandomShape::default(), &mut ChaCha8Rng::seed_from_u64(9));
        assert!(m.free_module().rank() >= 2);
    }

    #[test]
    fn power_of_m_sizes() {
        let r = Ring::new(3);
        assert_eq!(power_of_m(r, 2).length(), Some(10));
        assert_eq!(rm_ord_example(Ring::new(2)).length(), Some(4));
    }
}
