//! Randomized search for long gamma-regular sequences.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::linear::{LinearForm, LinearQuotient};
use crate::modules::{HilbertSeries, PresentedModule};
use crate::resolution::minimal_cover;

use super::basic::{alpha_from_series, reduce_with, Alpha};
use super::regular::{is_gamma_sequence, ser_forms};

/// Candidate forms tried before a greedy extension gives up.
pub const STEP_BUDGET: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct DepthWitness {
    #[serde(serialize_with = "ser_forms")]
    pub sequence: Vec<LinearForm>,
    pub depth: usize,
    pub alphas: Vec<u64>,
    pub trials_used: usize,
    pub seed: u64,
    /// The sequence passed `is_gamma_sequence`.
    pub verified: bool,
}

#[derive(Clone)]
struct Stage {
    chain: Vec<LinearQuotient>,
    module: PresentedModule,
    beta1: usize,
    series: HilbertSeries,
}

impl Stage {
    fn new(chain: Vec<LinearQuotient>, module: PresentedModule) -> Self {
        let beta1 = module.relations().num_minimal_generators();
        let series = module.hilbert_series();
        Stage {
            chain,
            module,
            beta1,
            series,
        }
    }

    fn try_step(&self, w: &LinearForm) -> Option<Stage> {
        let q = LinearQuotient::new(*self.module.ring(), std::slice::from_ref(w)).ok()?;
        let next = reduce_with(&self.module, &q);
        let mut chain = self.chain.clone();
        chain.push(q);
        let next = Stage::new(chain, next);
        match alpha_from_series(&self.series, &next.series) {
            Alpha::Finite(a) if self.beta1 as u64 == a + next.beta1 as u64 => Some(next),
            _ => None,
        }
    }

    fn lift(&self, w: &LinearForm) -> LinearForm {
        self.chain.iter().rev().fold(w.clone(), |acc, q| q.lift_form(&acc))
    }

    fn project(&self, z: &LinearForm) -> Option<LinearForm> {
        let mut cur = z.clone();
        for q in &self.chain {
            cur = q.map_form(&cur)?;
        }
        Some(cur)
    }
}

/// Longest gamma-regular sequence found over `trials` randomized greedy runs.
pub fn gamma_depth(m: &PresentedModule, trials: usize, seed: u64) -> DepthWitness {
    gamma_depth_from(m, &[], trials, seed)
}

/// As [`gamma_depth`], first extending the given prefix as far as it stays
/// gamma-regular.
pub fn gamma_depth_from(m: &PresentedModule, prefix: &[LinearForm], trials: usize, seed: u64) -> DepthWitness {
    let ring = *m.ring();
    let n = ring.nvars();
    let p = minimal_cover(m).presentation();
    if p.is_zero() {
        let sequence: Vec<LinearForm> = (0..n).map(|i| LinearForm::variable(ring, i)).collect();
        return DepthWitness {
            depth: n,
            alphas: vec![0; n],
            sequence,
            trials_used: 0,
            seed,
            verified: true,
        };
    }
    let mut start = Stage::new(Vec::new(), p);
    let mut base_seq = Vec::new();
    for z in prefix {
        if base_seq.len() == n || z.ring().nvars() != n {
            break;
        }
        let Some(w) = start.project(z) else { break };
        let Some(next) = start.try_step(&w) else { break };
        base_seq.push(z.clone());
        start = next;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = base_seq.clone();
    let mut trials_used = 0;
    for _ in 0..trials.max(1) {
        if best.len() == n {
            break;
        }
        trials_used += 1;
        let mut stage = start.clone();
        let mut seq = base_seq.clone();
        while seq.len() < n {
            let sring = *stage.module.ring();
            let mut advanced = false;
            for _ in 0..STEP_BUDGET {
                let w = LinearForm::random(sring, &mut rng);
                if let Some(next) = stage.try_step(&w) {
                    seq.push(stage.lift(&w));
                    stage = next;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        if seq.len() > best.len() {
            best = seq;
        }
    }
    let (alphas, verified) = if best.is_empty() {
        (Vec::new(), true)
    } else {
        match is_gamma_sequence(m, &best) {
            Ok(check) => (check.finite_alphas().unwrap_or_default(), check.accepted),
            Err(_) => (Vec::new(), false),
        }
    };
    DepthWitness {
        depth: best.len(),
        sequence: best,
        alphas,
        trials_used,
        seed,
        verified,
    }
}
