//! Hilbert series of graded modules `F/U` from lead monomials, and the
//! integer Laurent polynomials that carry them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::modules::free::binomial;
use crate::monomial::Monomial;

/// Integer Laurent polynomial in `u`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent {
    coeffs: BTreeMap<i32, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i32, c: i64) -> Self {
        let mut l = Self::zero();
        l.add_term(exp, c);
        l
    }

    pub fn one_minus_u_pow(e: u32) -> Self {
        let mut l = Self::monomial(0, 1);
        l.add_term(e as i32, -1);
        l
    }

    pub fn add_term(&mut self, exp: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn shift(&self, s: i32) -> Laurent {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + s, c)).collect(),
        }
    }

    pub fn scale(&self, s: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            out.add_term(e, c * s);
        }
        out
    }

    /// Exact division by `1 - u`, `None` if not divisible.
    pub fn div_one_minus_u(&self) -> Option<Laurent> {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Some(Laurent::zero());
        };
        // q_e = sum_{k <= e} a_k
        let mut out = Laurent::zero();
        let mut acc = 0i64;
        for e in lo..=hi {
            acc += self.coefficient(e);
            if e < hi {
                out.add_term(e, acc);
            }
        }
        if acc != 0 {
            return None;
        }
        Some(out)
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

/// `H(u) = numerator(u) / (1-u)^nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Laurent,
    pub nvars: usize,
}

impl HilbertSeries {
    /// Number of factors `1-u` dividing the numerator, capped at `nvars`.
    fn order_at_one(&self) -> usize {
        let mut n = self.numerator.clone();
        let mut k = 0;
        if n.is_zero() {
            return self.nvars;
        }
        while k < self.nvars {
            match n.div_one_minus_u() {
                Some(q) => {
                    n = q;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }

    /// Krull dimension, `None` for the zero module.
    pub fn dimension(&self) -> Option<usize> {
        if self.numerator.is_zero() {
            return None;
        }
        Some(self.nvars - self.order_at_one())
    }

    pub fn is_finite_length(&self) -> bool {
        self.numerator.is_zero() || self.order_at_one() == self.nvars
    }

    /// The Hilbert polynomial's numerator divided out, when finite length.
    pub fn finite_part(&self) -> Option<Laurent> {
        let mut n = self.numerator.clone();
        for _ in 0..self.nvars {
            n = n.div_one_minus_u()?;
        }
        Some(n)
    }

    /// Total dimension, `None` when infinite.
    pub fn length(&self) -> Option<u64> {
        self.finite_part().map(|p| p.eval_one() as u64)
    }

    pub fn dim_in_degree(&self, d: i32) -> i64 {
        let n = self.nvars as u64;
        self.numerator
            .terms()
            .map(|(e, c)| {
                let k = d - e;
                if k < 0 {
                    0
                } else if n == 0 {
                    if k == 0 {
                        c
                    } else {
                        0
                    }
                } else {
                    c * binomial(k as u64 + n - 1, n - 1) as i64
                }
            })
            .sum()
    }

    /// Same module viewed over a ring with `extra` more variables acting by zero.
    pub fn over_more_variables(&self, extra: usize) -> HilbertSeries {
        let mut num = self.numerator.clone();
        for _ in 0..extra {
            num = num.mul(&Laurent::one_minus_u_pow(1));
        }
        HilbertSeries {
            numerator: num,
            nvars: self.nvars + extra,
        }
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.nvars, other.nvars);
        HilbertSeries {
            numerator: self.numerator.sub(&other.numerator),
            nvars: self.nvars,
        }
    }
}

/// Per-degree dimensions over a window.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub dims: BTreeMap<i32, u64>,
}

impl GradedDims {
    pub fn get(&self, d: i32) -> u64 {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Lowest degree with a nonzero entry.
    pub fn indeg(&self) -> Option<i32> {
        self.dims.iter().find(|(_, &v)| v > 0).map(|(&d, _)| d)
    }

    /// Highest degree with a nonzero entry.
    pub fn deg(&self) -> Option<i32> {
        self.dims.iter().rev().find(|(_, &v)| v > 0).map(|(&d, _)| d)
    }

    pub fn nonzero(&self) -> BTreeMap<i32, u64> {
        self.dims.iter().filter(|(_, &v)| v > 0).map(|(&d, &v)| (d, v)).collect()
    }
}

/// Numerator of the Hilbert series of `K[x]/L` for a monomial ideal `L`.
pub(crate) fn monomial_numerator(nvars: usize, gens: &[Monomial]) -> Laurent {
    let mut gens = minimal_monomials(gens.to_vec());
    let _ = nvars;
    gens.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    numerator_rec(gens)
}

fn minimal_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>) -> Laurent {
    if gens.is_empty() {
        return Laurent::monomial(0, 1);
    }
    if gens.iter().any(|g| g.is_one()) {
        return Laurent::zero();
    }
    let support = |m: &Monomial| m.exponents().iter().filter(|&&e| e > 0).count();
    if gens.iter().all(|g| support(g) == 1) {
        let mut out = Laurent::monomial(0, 1);
        for g in &gens {
            out = out.mul(&Laurent::one_minus_u_pow(g.degree()));
        }
        return out;
    }
    // pivot on the variable occurring in the most non-pure generators
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for g in gens.iter().filter(|g| support(g) > 1) {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let var = (0..n).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let mut exps: Vec<u16> = gens
        .iter()
        .filter(|g| support(g) > 1)
        .map(|g| g.exponents()[var])
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = vec![0u16; n];
    pe[var] = e;
    let pivot = Monomial::from_exponents(&pe);
    // N(L) = N(L + p) + u^deg(p) N(L : p)
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex = g.exponents().to_vec();
            ex[var] = ex[var].saturating_sub(e);
            Monomial::from_exponents(&ex)
        })
        .collect();
    let a = numerator_rec(minimal_monomials(with_pivot));
    let b = numerator_rec(minimal_monomials(colon));
    a.add(&b.shift(e as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn count_standard(nvars: usize, gens: &[Monomial], d: u32) -> i64 {
        Monomial::all_of_degree(nvars, d)
            .into_iter()
            .filter(|x| !gens.iter().any(|g| g.divides(x)))
            .count() as i64
    }

    #[test]
    fn numerator_matches_standard_monomial_counts() {
        let cases: Vec<(usize, Vec<Monomial>)> = vec![
            (2, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]),
            (3, vec![m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1])]),
            (3, vec![m(&[2, 1, 0]), m(&[0, 2, 2]), m(&[1, 0, 3]), m(&[1, 1, 1])]),
            (4, vec![m(&[1, 1, 0, 0]), m(&[0, 0, 1, 1])]),
            (3, vec![]),
        ];
        for (n, gens) in cases {
            let h = HilbertSeries {
                numerator: monomial_numerator(n, &gens),
                nvars: n,
            };
            for d in 0..10 {
                assert_eq!(h.dim_in_degree(d), count_standard(n, &gens, d as u32), "{:?} {}", gens, d);
            }
        }
    }

    #[test]
    fn finite_length_detection() {
        let h = HilbertSeries {
            numerator: monomial_numerator(2, &[m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]),
            nvars: 2,
        };
        assert!(h.is_finite_length());
        assert_eq!(h.length(), Some(4));
        let g = HilbertSeries {
            numerator: monomial_numerator(2, &[m(&[2, 0]), m(&[1, 1])]),
            nvars: 2,
        };
        assert!(!g.is_finite_length());
        assert_eq!(g.dimension(), Some(1));
    }
}
