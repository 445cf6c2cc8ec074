//! Instance families and corpus generation.

use std::str::FromStr;

use gamma_depth_core::families::{maximal_power, random_ideal, random_module, rm_ord_ideal, RandomShape};
use gamma_depth_core::Ring;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::instance::{InstanceFile, ObjectKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    PowerOfM,
    RmOrdExample,
    RandomIdeal,
    RandomModule,
}

impl FromStr for FamilyKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power-of-m" => Ok(FamilyKind::PowerOfM),
            "rm-ord-example" => Ok(FamilyKind::RmOrdExample),
            "random-ideal" => Ok(FamilyKind::RandomIdeal),
            "random-module" => Ok(FamilyKind::RandomModule),
            other => Err(CliError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FamilyParams {
    pub n: usize,
    pub r: u32,
    pub count: usize,
    pub prime: u64,
    pub shape: RandomShape,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            n: 2,
            r: 1,
            count: 1,
            prime: gamma_depth_core::DEFAULT_PRIME as u64,
            shape: RandomShape::default(),
        }
    }
}

fn ring(n: usize, prime: u64) -> Result<Ring> {
    if n > 4 {
        return Err(CliError::Refused(format!("{} variables; at most 4 are supported", n)));
    }
    Ok(Ring::with_prime(n, prime)?)
}

/// One random instance; the generator is seeded with `seed` itself.
pub fn random_instance(kind: FamilyKind, ring: Ring, shape: RandomShape, seed: u64) -> InstanceFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = InstanceFile::new(ring);
    match kind {
        FamilyKind::RandomModule => {
            let m = random_module(ring, shape, &mut rng);
            f.push_object(
                "M",
                ObjectKind::Module {
                    free: m.free_module().clone(),
                    rels: m.relations().generators().to_vec(),
                },
            );
        }
        _ => f.push_object("I", ObjectKind::Ideal(random_ideal(ring, shape, &mut rng))),
    }
    f
}

/// Instance `i` of a random family uses the seed `seed ^ i`.
pub fn generate_family(kind: FamilyKind, params: FamilyParams, seed: u64) -> Result<Vec<InstanceFile>> {
    let ring = ring(params.n, params.prime)?;
    let out = match kind {
        FamilyKind::PowerOfM => {
            let mut f = InstanceFile::new(ring);
            f.push_object("I", ObjectKind::Ideal(maximal_power(ring, params.r + 1)));
            vec![f]
        }
        FamilyKind::RmOrdExample => {
            if params.n != 2 {
                return Err(CliError::Refused("rm-ord-example lives in two variables".into()));
            }
            let mut f = InstanceFile::new(ring);
            f.push_object("I", ObjectKind::Ideal(rm_ord_ideal(ring)));
            vec![f]
        }
        FamilyKind::RandomIdeal | FamilyKind::RandomModule => (0..params.count as u64)
            .map(|i| random_instance(kind, ring, params.shape, seed ^ i))
            .collect(),
    };
    Ok(out)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CorpusConfig {
    pub count: usize,
    pub modules: usize,
    pub n: (usize, usize),
    pub gens: (usize, usize),
    pub degrees: (u32, u32),
    pub seed: u64,
    pub prime: u64,
}

impl CorpusConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = self.n.0 <= self.n.1
            && self.n.1 <= 4
            && self.gens.0 <= self.gens.1
            && self.gens.0 >= 1
            && self.degrees.0 <= self.degrees.1
            && self.degrees.0 >= 1;
        if ok {
            Ok(())
        } else {
            Err(CliError::Refused(format!("empty or unsupported range in {:?}", self)))
        }
    }

    /// `count` ideals followed by `modules` modules; instance `i` has
    /// `n = n_lo + i mod (n_hi - n_lo + 1)` variables and seed `seed ^ i`.
    pub fn instances(&self) -> Result<Vec<(u64, InstanceFile)>> {
        self.validate()?;
        let shape = RandomShape {
            gens: self.gens,
            degrees: self.degrees,
            max_terms: 3,
        };
        let span = self.n.1 - self.n.0 + 1;
        (0..(self.count + self.modules) as u64)
            .map(|i| {
                let ring = ring(self.n.0 + i as usize % span, self.prime)?;
                let kind = if (i as usize) < self.count {
                    FamilyKind::RandomIdeal
                } else {
                    FamilyKind::RandomModule
                };
                let seed = self.seed ^ i;
                Ok((seed, random_instance(kind, ring, shape, seed)))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let p = FamilyParams {
            n: 3,
            r: 2,
            ..Default::default()
        };
        let f = generate_family(FamilyKind::PowerOfM, p, 0).unwrap();
        assert_eq!(f[0].object("I").unwrap().module(f[0].ring).length(), Some(10));
        let f = generate_family(FamilyKind::RmOrdExample, FamilyParams::default(), 0).unwrap();
        assert_eq!(f[0].to_string(), "ring 2 32003\nideal I = x1^2, x1x2, x2^3\n");
        assert!(matches!("cubes".parse::<FamilyKind>(), Err(CliError::UnknownFamily(_))));
    }

    #[test]
    fn random_families_are_deterministic() {
        let p = FamilyParams {
            count: 5,
            ..Default::default()
        };
        let a: Vec<String> = generate_family(FamilyKind::RandomIdeal, p, 7).unwrap().iter().map(|f| f.to_string()).collect();
        let b: Vec<String> = generate_family(FamilyKind::RandomIdeal, p, 7).unwrap().iter().map(|f| f.to_string()).collect();
        assert_eq!(a, b);
        let c = generate_family(FamilyKind::RandomIdeal, p, 8).unwrap();
        assert_ne!(a[0], c[0].to_string());
        for f in generate_family(FamilyKind::RandomIdeal, p, 7).unwrap() {
            match &f.object("I").unwrap().kind {
                ObjectKind::Ideal(g) => assert!(g.iter().all(|p| p.is_homogeneous() && (1..=4).contains(&p.degree().unwrap()))),
                _ => panic!(),
            }
        }
    }
}
