mod common;

use std::time::{Duration, Instant};

use common::*;
use gamma_depth_core::families::{power_of_m, random_ideal, random_module, rm_ord_example, RandomShape};
use gamma_depth_core::gamma::*;
use gamma_depth_core::twovar::*;
use gamma_depth_core::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TRIALS: usize = 20;
const CORPUS_SEED: u64 = 0x5eed_2024;
const SECOND_SEED: u64 = 0x0dd5_eed5;

struct Outcome {
    pass: bool,
    detail: String,
}

struct Instance {
    id: String,
    m: PresentedModule,
    seed: u64,
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `1 + Σ_{i=1}^{n} C(i+r-1, i-1)(1+t)^{i-1} t`.
fn closed_form(n: u64, r: u64) -> Vec<u64> {
    let mut out = vec![0u64; n as usize + 1];
    out[0] = 1;
    for i in 1..=n {
        let c = binom(i + r - 1, i - 1);
        for k in 0..i {
            out[k as usize + 1] += c * binom(i - 1, k);
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=4u64 {
        for r in 0..=3u64 {
            let ring = Ring::new(n as usize);
            let m = power_of_m(ring, r as u32);
            if betti_table(&m).poincare() != closed_form(n, r) {
                bad.push(format!("n={} r={}", n, r));
            }
        }
    }
    let ring = Ring::new(3);
    let syz = first_syzygy(&power_of_m(ring, 2));
    let t = resolve_submodule(&syz, 3);
    let graded: Vec<(usize, i32, u64)> = t.entries().iter().map(|(&(i, j), &v)| (i, j, v)).collect();
    if t.poincare() != vec![10, 15, 6] || graded != vec![(0, 3, 10), (1, 4, 15), (2, 5, 6)] {
        bad.push(format!("m^3 table {:?}", graded));
    }
    let elapsed = start.elapsed();
    Outcome {
        pass: bad.is_empty() && elapsed < Duration::from_secs(120),
        detail: format!("16 cases, mismatches {:?}, {:.2}s", bad, elapsed.as_secs_f64()),
    }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let ring = Ring::new(2);
    let m = rm_ord_example(ring);
    let f = |s: &str| LinearForm::parse(ring, s).unwrap();
    let cases = [
        (vec![f("x2"), f("x1")], true),
        (vec![f("x1"), f("x2")], false),
        (vec![f("x1+x2"), f("x1-x2")], true),
        (vec![f("x1-x2"), f("x1+x2")], true),
    ];
    let mut got = Vec::new();
    let mut ok = true;
    for (zs, want) in &cases {
        let c = is_gamma_sequence(&m, zs).unwrap();
        ok &= c.accepted == *want && c.agree;
        got.push(c.accepted);
    }
    let elapsed = start.elapsed();
    Outcome {
        pass: ok && elapsed < Duration::from_secs(5),
        detail: format!("verdicts {:?}, {:.3}s", got, elapsed.as_secs_f64()),
    }
}

fn corpus() -> Vec<Instance> {
    let shape = RandomShape {
        gens: (1, 4),
        degrees: (1, 4),
        max_terms: 3,
    };
    let mut out = Vec::new();
    for i in 0..100u64 {
        let seed = CORPUS_SEED ^ i;
        let n = 2 + (i % 2) as usize;
        let ring = Ring::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = random_ideal(ring, shape, &mut rng);
        out.push(Instance {
            id: format!("ideal-{}", i),
            m: PresentedModule::cyclic(ring, gens).unwrap(),
            seed,
        });
    }
    for i in 0..25u64 {
        let seed = CORPUS_SEED ^ (1000 + i);
        let n = 2 + (i % 2) as usize;
        let ring = Ring::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        out.push(Instance {
            id: format!("module-{}", i),
            m: random_module(ring, shape, &mut rng),
            seed,
        });
    }
    out
}

fn criterion_3(corpus: &[Instance], reports: &[MainTheoremReport], elapsed: Duration) -> Outcome {
    let disagree: Vec<&str> = corpus
        .iter()
        .zip(reports)
        .filter(|(_, r)| !r.agree)
        .map(|(c, _)| c.id.as_str())
        .collect();
    let cwl = reports.iter().filter(|r| r.cwl).count();
    let retried = reports.iter().filter(|r| r.retried).count();
    let noncyclic = corpus
        .iter()
        .filter(|c| minimal_cover(&c.m).cover.rank() >= 2)
        .count();
    Outcome {
        pass: disagree.is_empty() && noncyclic >= 25 && elapsed < Duration::from_secs(600),
        detail: format!(
            "{} instances ({} non-cyclic), {} with cwl syzygy, {} retried, disagreements {:?}, {:.1}s",
            corpus.len(),
            noncyclic,
            cwl,
            retried,
            disagree,
            elapsed.as_secs_f64()
        ),
    }
}

fn criterion_4(corpus: &[Instance], reports: &[MainTheoremReport]) -> Outcome {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for (inst, rep) in corpus.iter().zip(reports) {
        let Some(z) = rep.witness.sequence.first() else { continue };
        if !is_gamma_regular(&inst.m, z).unwrap().verdict {
            continue;
        }
        pairs += 1;
        let audit = splitting_audit(&inst.m, z).unwrap();
        for k in [2u8, 5, 6, 7, 8] {
            if !audit.item(k).unwrap().holds {
                bad.push(format!("{} item {}", inst.id, k));
            }
        }
    }
    Outcome {
        pass: pairs >= 50 && bad.is_empty(),
        detail: format!("{} certified pairs, violations {:?}", pairs, bad),
    }
}

/// Coefficients `c_i` with `p(t) = Σ_{i=1}^{n} c_i (1+t)^{n-i}`.
fn binomial_basis(p: &[u64], n: usize) -> Vec<i64> {
    let mut q = vec![0i64; n.max(p.len())];
    for (k, &c) in p.iter().enumerate() {
        // (s - 1)^k
        for j in 0..=k {
            let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
            q[j] += sign * c as i64 * binom(k as u64, j as u64) as i64;
        }
    }
    (1..=n).map(|i| q.get(n - i).copied().unwrap_or(0)).collect()
}

fn criterion_5(corpus: &[Instance], reports: &[MainTheoremReport]) -> Outcome {
    let mut full = 0;
    let mut compared = 0;
    let mut bad = Vec::new();
    for (inst, rep) in corpus.iter().zip(reports) {
        let m = &inst.m;
        let n = m.ring().nvars();
        let w = &rep.witness;
        if !w.verified {
            continue;
        }
        let syz_p = resolve_submodule(&first_syzygy(m), n).poincare();
        let c = binomial_basis(&syz_p, n);
        let other = gamma_depth(m, TRIALS, inst.seed ^ SECOND_SEED);
        for (tag, wit) in [("first", w), ("second", &other)] {
            if !wit.verified {
                bad.push(format!("{} {} witness unverified", inst.id, tag));
                continue;
            }
            for (i, &a) in wit.alphas.iter().enumerate() {
                if a as i64 != c[i] {
                    bad.push(format!("{} {} alpha_{} = {} vs {}", inst.id, tag, i + 1, a, c[i]));
                }
            }
        }
        let common = w.alphas.len().min(other.alphas.len());
        if common > 0 {
            compared += 1;
            if w.alphas[..common] != other.alphas[..common] {
                bad.push(format!("{} alpha lists {:?} vs {:?}", inst.id, w.alphas, other.alphas));
            }
        }
        if w.depth != n {
            continue;
        }
        full += 1;
        let b = betti_table(m);
        let (b1, b2) = (b.total(1), b.total(2));
        let s1: u64 = w.alphas.iter().sum();
        let s2: u64 = w.alphas.iter().enumerate().map(|(k, a)| (n - k - 1) as u64 * a).sum();
        if s1 != b1 || s2 != b2 {
            bad.push(format!("{} b1={} b2={} sums {} {}", inst.id, b1, b2, s1, s2));
        }
        let p = minimal_cover(m).presentation();
        let mut sum = 0u64;
        for j in 0..n {
            let q = LinearQuotient::new(*m.ring(), &w.sequence[..j]).unwrap();
            let stage = reduce_mod_linear(&p, &w.sequence[..j]).unwrap();
            let zbar = q.map_form(&w.sequence[j]).unwrap();
            sum += alpha(&cmod(&stage, 1), &zbar).unwrap().finite().unwrap_or(u64::MAX / 4);
        }
        if sum as i64 != n as i64 * b1 as i64 - b2 as i64 {
            bad.push(format!("{} C1 alphas {} vs n b1 - b2 = {}", inst.id, sum, n as i64 * b1 as i64 - b2 as i64));
        }
    }
    Outcome {
        pass: bad.is_empty() && full > 0,
        detail: format!("{} full-length sequences, {} instances with two lists compared, violations {:?}", full, compared, bad),
    }
}

fn criterion_6(corpus: &[Instance]) -> Outcome {
    let mut bad = Vec::new();
    for inst in corpus {
        let n = inst.m.ring().nvars();
        let b = betti_table(&inst.m);
        let s = socle(&inst.m);
        let mut js: Vec<i32> = b.degrees(n);
        js.extend(s.dims.nonzero().keys().map(|d| d + n as i32));
        for j in js {
            if b.get(n, j) != s.dims.get(j - n as i32) {
                bad.push(format!("{} j={}", inst.id, j));
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{} modules, mismatches {:?}", corpus.len(), bad),
    }
}

fn criterion_7() -> Outcome {
    let ring = Ring::new(2);
    let shape = RandomShape {
        gens: (2, 4),
        degrees: (1, 4),
        max_terms: 3,
    };
    let mut bad = Vec::new();
    let mut cwl = 0;
    for i in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ (5000 + i));
        let ideal = random_pd2_ideal(ring, shape, &mut rng);
        match beta_formula_check(&ideal, TRIALS, CORPUS_SEED ^ i).unwrap() {
            BetaFormulaOutcome::Checked(r) => {
                cwl += r.cwl as usize;
                if !r.agree {
                    bad.push(format!("formula {}: {:?}", i, r));
                }
            }
            other => bad.push(format!("formula {}: {:?}", i, other)),
        }
    }
    for i in 0..25u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ (7000 + i));
        let spec = random_cwl_spec(ring, 3, &mut rng);
        match check_build(&spec) {
            Ok((_, check)) if check.holds() => {}
            other => bad.push(format!("build {}: {:?}", i, other.map(|x| x.1))),
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("50 pd-2 ideals ({} cwl), 25 builds, violations {:?}", cwl, bad),
    }
}

fn criterion_8(corpus: &[Instance]) -> Outcome {
    let mut bad = Vec::new();
    let mut deltas = std::collections::BTreeMap::new();
    for inst in corpus {
        let rep = cd_report(&inst.m, TRIALS, inst.seed);
        if !rep.bound_holds || !rep.growth_holds {
            bad.push(format!("{} {:?}", inst.id, rep));
        }
        match delta_invariant(&inst.m, None, TRIALS, inst.seed) {
            DeltaOutcome::Found { delta, .. } => *deltas.entry(delta).or_insert(0) += 1,
            DeltaOutcome::CapExceeded { cap } => bad.push(format!("{} delta cap {} exceeded", inst.id, cap)),
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("delta distribution {:?}, violations {:?}", deltas, bad),
    }
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let shape = RandomShape {
        gens: (1, 4),
        degrees: (1, 3),
        max_terms: 3,
    };
    for i in 0..20u64 {
        let n = 2 + (i % 2) as usize;
        let ring = Ring::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ (9000 + i));
        let u = if i % 4 == 3 {
            random_module(ring, shape, &mut rng).relations().clone()
        } else {
            Submodule::ideal(ring, random_ideal(ring, shape, &mut rng)).unwrap()
        };
        for d in 0..=8 {
            if u.dim_in_degree(d) != dense_dim(&u, d) as u64 {
                bad.push(format!("{} gb degree {}", i, d));
            }
        }
        let z = LinearForm::random(ring, &mut rng);
        let zp = z.to_polynomial();
        let w = colon_by_linear(&u, &z).unwrap();
        for g in w.generators() {
            if !u.contains(&g.mul_poly(&zp)).unwrap() || !dense_contains(&u, &g.mul_poly(&zp)) {
                bad.push(format!("{} colon generator outside", i));
            }
        }
        for d in 0..=6 {
            if w.dim_in_degree(d) != dense_colon_dim(&u, &zp, d) as u64 {
                bad.push(format!("{} colon degree {}", i, d));
            }
        }
        let wm = colon_by_maximal(&u).unwrap();
        for g in wm.generators() {
            for k in 0..n {
                if !u.contains(&g.mul_poly(&ring.var(k))).unwrap() {
                    bad.push(format!("{} maximal colon generator outside", i));
                }
            }
        }
        for d in 0..=6 {
            if wm.dim_in_degree(d) != dense_colon_max_dim(&u, d) as u64 {
                bad.push(format!("{} maximal colon degree {}", i, d));
            }
        }
        let s = saturate(&u).unwrap();
        if !s.contains_submodule(&u) || !s.contains_submodule(&colon_by_maximal(&s).unwrap()) {
            bad.push(format!("{} saturation not stable", i));
        }
        if !(0..=12).any(|k| u.contains_submodule(&s.mul_maximal_power(k))) {
            bad.push(format!("{} saturation not killed by a power of m", i));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("20 submodules, mismatches {:?}", bad),
    }
}

fn print(k: usize, name: &str, o: &Outcome) {
    println!("{} criterion {} ({}): {}", if o.pass { "PASS" } else { "FAIL" }, k, name, o.detail);
}

fn main() {
    let mut outcomes = Vec::new();
    let o = criterion_1();
    print(1, "Poincare family", &o);
    outcomes.push(o);
    let o = criterion_2();
    print(2, "order dependence", &o);
    outcomes.push(o);

    let corpus = corpus();
    let start = Instant::now();
    let reports: Vec<MainTheoremReport> = corpus.iter().map(|c| verify_main_theorem(&c.m, TRIALS, c.seed)).collect();
    let o = criterion_3(&corpus, &reports, start.elapsed());
    print(3, "cwl versus gamma-depth corpus", &o);
    outcomes.push(o);
    let o = criterion_4(&corpus, &reports);
    print(4, "splitting identities", &o);
    outcomes.push(o);
    let o = criterion_5(&corpus, &reports);
    print(5, "sequence criteria coherence", &o);
    outcomes.push(o);
    let o = criterion_6(&corpus);
    print(6, "socle and top Betti numbers", &o);
    outcomes.push(o);
    let o = criterion_7();
    print(7, "two-variable theorems", &o);
    outcomes.push(o);
    let o = criterion_8(&corpus);
    print(8, "global inequalities", &o);
    outcomes.push(o);
    let o = criterion_9();
    print(9, "engine oracle", &o);
    outcomes.push(o);

    let failed = outcomes.iter().filter(|o| !o.pass).count();
    println!("acceptance: {} passed, {} failed", outcomes.len() - failed, failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
