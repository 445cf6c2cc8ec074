//! Homogeneous Buchberger algorithm for submodules of graded free modules,
//! degree by degree, with Gebauer-Moeller pair pruning and optional lift
//! tracking for syzygies.

use crate::modules::vector::{Term, Vector};
use crate::monomial::Monomial;
use crate::poly::Ring;

pub(crate) struct GbInput {
    pub vec: Vector,
    pub degree: i32,
}

#[derive(Default)]
pub(crate) struct GbOptions {
    /// Track lifts with respect to the first `n` inputs; later inputs get zero lifts.
    pub lift_columns: Option<usize>,
    /// A Groebner basis already known; inputs are processed modulo it.
    pub seed: Vec<Vector>,
    /// Interreduce the final basis.
    pub reduce: bool,
}

pub(crate) struct GbRun {
    pub basis: Vec<Vector>,
    /// Whether each input survived reduction, i.e. is a minimal generator
    /// (meaningful without seed).
    pub kept: Vec<bool>,
    /// Lifts of every reduction to zero.
    pub syzygies: Vec<Vector>,
}

struct Elem {
    vec: Vector,
    lift: Vector,
    pos: u32,
    lt: Monomial,
    single: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: i32,
}

struct Engine<'a> {
    ring: Ring,
    twists: &'a [i32],
    track: bool,
    basis: Vec<Elem>,
    by_pos: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    syzygies: Vec<Vector>,
}

impl<'a> Engine<'a> {
    fn new(ring: Ring, twists: &'a [i32], track: bool) -> Self {
        Engine {
            ring,
            twists,
            track,
            basis: Vec::new(),
            by_pos: vec![Vec::new(); twists.len()],
            pairs: Vec::new(),
            syzygies: Vec::new(),
        }
    }

    fn find_reducer(&self, pos: u32, mon: &Monomial) -> Option<usize> {
        self.by_pos[pos as usize]
            .iter()
            .copied()
            .find(|&g| self.basis[g].lt.divides(mon))
    }

    /// Top reduction, or full reduction when `full`.
    fn reduce(&self, mut v: Vector, mut lift: Vector, full: bool) -> (Vector, Vector) {
        let order = self.ring.order();
        let k = self.ring.field();
        let mut idx = 0;
        while idx < v.len() {
            let t = &v.terms()[idx];
            match self.find_reducer(t.pos, &t.mon) {
                Some(g) => {
                    let e = &self.basis[g];
                    let q = e.lt.quotient_of(&t.mon).unwrap();
                    let c = k.neg(t.c);
                    if self.track {
                        lift = lift.axpy(order, k, c, &q, &e.lift);
                    }
                    v = v.axpy(order, k, c, &q, &e.vec);
                }
                None => {
                    if !full {
                        break;
                    }
                    idx += 1;
                }
            }
        }
        (v, lift)
    }

    fn insert(&mut self, vec: Vector, lift: Vector, with_pairs: bool) {
        let k = self.ring.field();
        let lead = vec.lead().unwrap();
        let inv = k.inv(lead.c);
        let (vec, lift) = if lead.c == 1 {
            (vec, lift)
        } else {
            (vec.scale(k, inv), lift.scale(k, inv))
        };
        let lead = vec.lead().unwrap().clone();
        let t = self.basis.len();
        let single = vec.single_position();
        self.basis.push(Elem {
            vec,
            lift,
            pos: lead.pos,
            lt: lead.mon,
            single,
        });
        if with_pairs {
            self.update_pairs(t);
        }
        self.by_pos[lead.pos as usize].push(t);
    }

    fn update_pairs(&mut self, t: usize) {
        let pos = self.basis[t].pos;
        let lt_t = self.basis[t].lt.clone();
        let twist = self.twists[pos as usize];
        // chain criterion on existing pairs
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if basis[p.i].pos != pos || !lt_t.divides(&p.lcm) {
                return true;
            }
            basis[p.i].lt.lcm(&lt_t) == p.lcm || basis[p.j].lt.lcm(&lt_t) == p.lcm
        });
        let product_ok = !self.track && self.basis[t].single;
        let cand: Vec<(usize, Monomial, bool)> = self.by_pos[pos as usize]
            .iter()
            .map(|&i| {
                let e = &self.basis[i];
                let coprime = product_ok && e.single && e.lt.is_coprime(&lt_t);
                (i, e.lt.lcm(&lt_t), coprime)
            })
            .collect();
        let mut keep = vec![true; cand.len()];
        for a in 0..cand.len() {
            for b in 0..cand.len() {
                if a != b && cand[b].1 != cand[a].1 && cand[b].1.divides(&cand[a].1) {
                    keep[a] = false;
                    break;
                }
            }
        }
        for a in 0..cand.len() {
            if !keep[a] {
                continue;
            }
            let class: Vec<usize> = (a..cand.len()).filter(|&b| keep[b] && cand[b].1 == cand[a].1).collect();
            let any_coprime = class.iter().any(|&b| cand[b].2);
            for &b in &class[1..] {
                keep[b] = false;
            }
            if any_coprime {
                keep[a] = false;
            }
        }
        for (a, (i, lcm, _)) in cand.into_iter().enumerate() {
            if keep[a] {
                let degree = lcm.degree() as i32 + twist;
                self.pairs.push(Pair { i, j: t, lcm, degree });
            }
        }
    }

    fn spoly(&self, p: &Pair) -> (Vector, Vector) {
        let order = self.ring.order();
        let k = self.ring.field();
        let (a, b) = (&self.basis[p.i], &self.basis[p.j]);
        let qa = a.lt.quotient_of(&p.lcm).unwrap();
        let qb = b.lt.quotient_of(&p.lcm).unwrap();
        let v = a.vec.mul_mon(k, &qa, 1).axpy(order, k, k.neg(1), &qb, &b.vec);
        let lift = if self.track {
            a.lift.mul_mon(k, &qa, 1).axpy(order, k, k.neg(1), &qb, &b.lift)
        } else {
            Vector::zero()
        };
        (v, lift)
    }

    fn process(&mut self, v: Vector, lift: Vector) -> bool {
        let (v, lift) = self.reduce(v, lift, false);
        if v.is_zero() {
            if self.track && !lift.is_zero() {
                self.syzygies.push(lift);
            }
            false
        } else {
            self.insert(v, lift, true);
            true
        }
    }
}

pub(crate) fn buchberger(ring: Ring, twists: &[i32], inputs: Vec<GbInput>, opts: GbOptions) -> GbRun {
    let track = opts.lift_columns.is_some();
    let ncols = opts.lift_columns.unwrap_or(0);
    let nvars = ring.nvars();
    let mut eng = Engine::new(ring, twists, track);
    let seeded = !opts.seed.is_empty();
    for s in opts.seed {
        if !s.is_zero() {
            eng.insert(s, Vector::zero(), false);
        }
    }
    let mut order: Vec<usize> = (0..inputs.len()).collect();
    order.sort_by_key(|&i| (inputs[i].degree, i));
    let mut kept = vec![false; inputs.len()];
    let mut inputs: Vec<Option<GbInput>> = inputs.into_iter().map(Some).collect();
    let mut next_input = 0;
    loop {
        let pair_deg = eng.pairs.iter().map(|p| p.degree).min();
        let input_deg = order.get(next_input).map(|&i| inputs[i].as_ref().unwrap().degree);
        let d = match (pair_deg, input_deg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        let mut batch: Vec<Pair> = Vec::new();
        eng.pairs.retain(|p| {
            if p.degree == d {
                batch.push(p.clone());
                false
            } else {
                true
            }
        });
        batch.sort_by(|a, b| ring.order().cmp(&a.lcm, &b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))));
        for p in &batch {
            let (v, lift) = eng.spoly(p);
            eng.process(v, lift);
        }
        while next_input < order.len() {
            let i = order[next_input];
            if inputs[i].as_ref().unwrap().degree != d {
                break;
            }
            let inp = inputs[i].take().unwrap();
            let lift = if track && i < ncols {
                Vector::unit(i as u32, nvars)
            } else {
                Vector::zero()
            };
            kept[i] = eng.process(inp.vec, lift);
            next_input += 1;
        }
    }
    let mut basis: Vec<Vector> = eng.basis.iter().map(|e| e.vec.clone()).collect();
    if opts.reduce {
        if seeded {
            basis = minimalize(basis);
        }
        let mut reduced = Vec::with_capacity(basis.len());
        for (g, v) in basis.iter().enumerate() {
            let others: Vec<Vector> = basis
                .iter()
                .enumerate()
                .filter(|&(h, _)| h != g)
                .map(|(_, w)| w.clone())
                .collect();
            reduced.push(tail_reduce(ring, twists, v, &others));
        }
        basis = reduced;
    }
    GbRun {
        basis,
        kept,
        syzygies: eng.syzygies,
    }
}

/// Drops basis elements whose lead term is divisible by another's.
fn minimalize(basis: Vec<Vector>) -> Vec<Vector> {
    let leads: Vec<Term> = basis.iter().map(|v| v.lead().unwrap().clone()).collect();
    basis
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| {
            !leads.iter().enumerate().any(|(j, l)| {
                j != i && l.pos == leads[i].pos && l.mon.divides(&leads[i].mon) && (l.mon != leads[i].mon || j < i)
            })
        })
        .map(|(_, v)| v)
        .collect()
}

fn tail_reduce(ring: Ring, twists: &[i32], v: &Vector, others: &[Vector]) -> Vector {
    let eng = reducer(ring, twists, others);
    let lead = v.lead().unwrap().clone();
    let rest = Vector::from_sorted(v.terms()[1..].to_vec());
    let (rest, _) = eng.reduce(rest, Vector::zero(), true);
    let mut terms = vec![lead];
    terms.extend_from_slice(rest.terms());
    Vector::from_sorted(terms)
}

fn reducer<'a>(ring: Ring, twists: &'a [i32], basis: &[Vector]) -> Engine<'a> {
    let mut eng = Engine::new(ring, twists, false);
    for v in basis {
        eng.insert(v.clone(), Vector::zero(), false);
    }
    eng
}

/// Reusable reducer for many normal forms against one basis.
pub(crate) struct Reducer<'a> {
    eng: Engine<'a>,
}

impl<'a> Reducer<'a> {
    pub fn new(ring: Ring, twists: &'a [i32], basis: &[Vector]) -> Self {
        Reducer {
            eng: reducer(ring, twists, basis),
        }
    }

    pub fn normal_form(&self, v: Vector) -> Vector {
        self.eng.reduce(v, Vector::zero(), true).0
    }

    pub fn is_reducible(&self, pos: u32, mon: &Monomial) -> bool {
        self.eng.find_reducer(pos, mon).is_some()
    }
}
