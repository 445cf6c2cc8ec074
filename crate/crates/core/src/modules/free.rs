//! Graded free modules `⊕ R(-j_k)` and their homogeneous elements.

use std::fmt;

use crate::error::{Error, Result};
use crate::modules::vector::{Term, Vector};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    ring: Ring,
    twists: Vec<i32>,
    /// `rank_of[k]` is the place of generator `k` in the module order.
    rank_of: Vec<u32>,
    /// Inverse of `rank_of`.
    pos_of: Vec<u32>,
}

impl GradedFreeModule {
    pub fn new(ring: Ring, twists: Vec<i32>) -> Self {
        let mut pos_of: Vec<u32> = (0..twists.len() as u32).collect();
        pos_of.sort_by_key(|&k| (twists[k as usize], k));
        let mut rank_of = vec![0u32; twists.len()];
        for (r, &k) in pos_of.iter().enumerate() {
            rank_of[k as usize] = r as u32;
        }
        GradedFreeModule {
            ring,
            twists,
            rank_of,
            pos_of,
        }
    }

    /// `R` itself.
    pub fn ring_module(ring: Ring) -> Self {
        Self::new(ring, vec![0])
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    #[inline]
    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    #[inline]
    pub fn twist(&self, k: usize) -> i32 {
        self.twists[k]
    }

    /// Twists listed in module order, indexed by internal position.
    pub(crate) fn internal_twists(&self) -> Vec<i32> {
        self.pos_of.iter().map(|&k| self.twists[k as usize]).collect()
    }

    pub(crate) fn rank_of(&self, k: usize) -> u32 {
        self.rank_of[k]
    }

    pub(crate) fn pos_of(&self, r: u32) -> usize {
        self.pos_of[r as usize] as usize
    }

    /// The same twists over another ring.
    pub fn over(&self, ring: Ring) -> Self {
        GradedFreeModule {
            ring,
            ..self.clone()
        }
    }

    /// Every twist shifted by `s`.
    pub fn shifted(&self, s: i32) -> Self {
        Self::new(self.ring, self.twists.iter().map(|j| j + s).collect())
    }

    /// Direct sum of `copies` copies of this module.
    pub fn power(&self, copies: usize) -> Self {
        let mut twists = Vec::with_capacity(self.rank() * copies);
        for _ in 0..copies {
            twists.extend_from_slice(&self.twists);
        }
        Self::new(self.ring, twists)
    }

    pub fn zero(&self) -> FreeElement {
        FreeElement {
            components: vec![self.ring.zero(); self.rank()],
            degree: None,
        }
    }

    /// The basis vector `e_k`.
    pub fn basis(&self, k: usize) -> FreeElement {
        let mut components = vec![self.ring.zero(); self.rank()];
        components[k] = self.ring.one();
        FreeElement {
            components,
            degree: Some(self.twists[k]),
        }
    }

    /// `mon * e_k`.
    pub fn monomial_element(&self, k: usize, mon: Monomial) -> FreeElement {
        let mut components = vec![self.ring.zero(); self.rank()];
        let d = self.twists[k] + mon.degree() as i32;
        components[k] = self.ring.term(mon, 1);
        FreeElement {
            components,
            degree: Some(d),
        }
    }

    pub fn element(&self, components: Vec<Polynomial>) -> Result<FreeElement> {
        if components.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: components.len(),
            });
        }
        let mut degree = None;
        for (k, f) in components.iter().enumerate() {
            self.ring.check_same(f.ring())?;
            if f.is_zero() {
                continue;
            }
            if !f.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            let d = f.degree().unwrap() as i32 + self.twists[k];
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(FreeElement { components, degree })
    }

    /// Every `mon * e_k` of degree `d`, in module order (descending).
    pub fn monomials_of_degree(&self, d: i32) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for r in 0..self.rank() as u32 {
            let k = self.pos_of(r);
            let e = d - self.twists[k];
            if e < 0 {
                continue;
            }
            let mut mons = Monomial::all_of_degree(self.ring.nvars(), e as u32);
            mons.sort_by(|a, b| self.ring.order().cmp(b, a));
            out.extend(mons.into_iter().map(|m| (k, m)));
        }
        out
    }

    /// `dim_K F_d`.
    pub fn dim_in_degree(&self, d: i32) -> u64 {
        let n = self.ring.nvars() as u64;
        self.twists
            .iter()
            .map(|&j| {
                let e = d - j;
                if e < 0 {
                    0
                } else if n == 0 {
                    u64::from(e == 0)
                } else {
                    binomial(e as u64 + n - 1, n - 1)
                }
            })
            .sum()
    }

    pub(crate) fn to_vector(&self, v: &FreeElement) -> Vector {
        let mut terms = Vec::new();
        for r in 0..self.rank() as u32 {
            let k = self.pos_of(r);
            for (m, c) in v.components[k].terms() {
                terms.push(Term {
                    pos: r,
                    mon: m.clone(),
                    c: *c,
                });
            }
        }
        Vector::from_sorted(terms)
    }

    pub(crate) fn from_vector(&self, v: &Vector) -> FreeElement {
        let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); self.rank()];
        let mut degree = None;
        for t in v.terms() {
            let k = self.pos_of(t.pos);
            degree.get_or_insert(t.mon.degree() as i32 + self.twists[k]);
            buckets[k].push((t.mon.clone(), t.c));
        }
        FreeElement {
            components: buckets
                .into_iter()
                .map(|ts| Polynomial::from_sorted_terms(self.ring, ts))
                .collect(),
            degree,
        }
    }

    /// Parses `[f1 | ... | fm]`.
    pub fn parse_element(&self, text: &str) -> Result<FreeElement> {
        parse_element(self, text, 1, 1)
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub(crate) fn parse_element(module: &GradedFreeModule, text: &str, line: usize, col0: usize) -> Result<FreeElement> {
    let trimmed_start = text.len() - text.trim_start().len();
    let t = text.trim();
    if !t.starts_with('[') || !t.ends_with(']') {
        return Err(Error::parse(line, col0 + trimmed_start, "expected '[f1 | ... | fm]'"));
    }
    let inner = &t[1..t.len() - 1];
    let mut comps = Vec::new();
    let mut offset = col0 + trimmed_start + 1;
    for piece in inner.split('|') {
        comps.push(crate::poly::parse_polynomial(*module.ring(), piece, line, offset)?);
        offset += piece.len() + 1;
    }
    if comps.len() != module.rank() {
        return Err(Error::parse(
            line,
            col0 + trimmed_start,
            format!("expected {} components, found {}", module.rank(), comps.len()),
        ));
    }
    module.element(comps).map_err(|e| match e {
        Error::NotHomogeneous => Error::parse(line, col0 + trimmed_start, "element is not homogeneous"),
        other => other,
    })
}

/// A homogeneous element of a graded free module.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeElement {
    components: Vec<Polynomial>,
    degree: Option<i32>,
}

impl FreeElement {
    #[inline]
    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    #[inline]
    pub fn degree(&self) -> Option<i32> {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.degree.is_none()
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        self.combine(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &FreeElement) -> FreeElement {
        self.combine(other, |a, b| a.sub(b))
    }

    fn combine(&self, other: &FreeElement, op: impl Fn(&Polynomial, &Polynomial) -> Polynomial) -> FreeElement {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        if let (Some(a), Some(b)) = (self.degree, other.degree) {
            assert_eq!(a, b, "adding elements of different degrees");
        }
        let components: Vec<Polynomial> = self
            .components
            .iter()
            .zip(other.components.iter())
            .map(|(a, b)| op(a, b))
            .collect();
        let degree = if components.iter().all(|f| f.is_zero()) {
            None
        } else {
            self.degree.or(other.degree)
        };
        FreeElement { components, degree }
    }

    pub fn scale(&self, c: u32) -> FreeElement {
        let components: Vec<Polynomial> = self.components.iter().map(|f| f.scale(c)).collect();
        let degree = if components.iter().all(|f| f.is_zero()) {
            None
        } else {
            self.degree
        };
        FreeElement { components, degree }
    }

    /// `f * self` for a homogeneous polynomial `f`.
    pub fn mul_poly(&self, f: &Polynomial) -> FreeElement {
        let components: Vec<Polynomial> = self.components.iter().map(|g| g.mul(f)).collect();
        let degree = if components.iter().all(|g| g.is_zero()) {
            None
        } else {
            Some(self.degree.unwrap() + f.degree().unwrap() as i32)
        };
        FreeElement { components, degree }
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" | "))
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_degree_uses_twists() {
        let r = Ring::new(2);
        let f = GradedFreeModule::new(r, vec![1, 2]);
        let v = f.parse_element("[x1^2 | x2]").unwrap();
        assert_eq!(v.degree(), Some(3));
        assert!(matches!(f.parse_element("[x1 | x2]"), Err(Error::Parse { .. })));
        assert!(f.parse_element("[0 | 0]").unwrap().is_zero());
    }

    #[test]
    fn vector_round_trip_respects_order() {
        let r = Ring::new(2);
        let f = GradedFreeModule::new(r, vec![3, 1, 2]);
        let v = f.parse_element("[x1 | x1^2x2 + x2^3 | x1x2]").unwrap();
        let w = f.to_vector(&v);
        assert_eq!(w.terms()[0].pos, 0);
        assert_eq!(f.pos_of(0), 1);
        assert_eq!(f.from_vector(&w), v);
    }

    #[test]
    fn slice_dimensions() {
        let r = Ring::new(3);
        let f = GradedFreeModule::new(r, vec![0, 1]);
        assert_eq!(f.dim_in_degree(2), 6 + 3);
        assert_eq!(f.monomials_of_degree(2).len(), 9);
        assert_eq!(binomial(5, 2), 10);
    }
}
