//! Sparse module elements in internal coordinates: terms sorted by position
//! ascending, then monomial descending. Position 0 is the largest.

use std::cmp::Ordering;

use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub pos: u32,
    pub mon: Monomial,
    pub c: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct Vector {
    terms: Vec<Term>,
}

#[inline]
pub(crate) fn term_cmp(order: MonomialOrder, a_pos: u32, a: &Monomial, b_pos: u32, b: &Monomial) -> Ordering {
    b_pos.cmp(&a_pos).then_with(|| order.cmp(a, b))
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_sorted(terms: Vec<Term>) -> Self {
        Vector { terms }
    }

    #[cfg(test)]
    pub fn from_unsorted(order: MonomialOrder, k: PrimeField, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| term_cmp(order, b.pos, &b.mon, a.pos, &a.mon));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mon == t.mon => {
                    last.c = k.add(last.c, t.c);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.c != 0);
        Vector { terms: out }
    }

    /// `c * e_pos`.
    pub fn unit(pos: u32, nvars: usize) -> Self {
        Vector {
            terms: vec![Term {
                pos,
                mon: Monomial::one(nvars),
                c: 1,
            }],
        }
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn single_position(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].pos == w[1].pos)
    }

    pub fn scale(&self, k: PrimeField, c: u32) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mon: t.mon.clone(),
                    c: k.mul(t.c, c),
                })
                .collect(),
        }
    }

    pub fn mul_mon(&self, k: PrimeField, mon: &Monomial, c: u32) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mon: t.mon.mul(mon),
                    c: k.mul(t.c, c),
                })
                .collect(),
        }
    }

    /// `self + c * mon * other`.
    pub fn axpy(&self, order: MonomialOrder, k: PrimeField, c: u32, mon: &Monomial, other: &Vector) -> Vector {
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut it = other.terms.iter().map(|t| Term {
            pos: t.pos,
            mon: t.mon.mul(mon),
            c: k.mul(t.c, c),
        });
        let mut pending = it.next();
        while let Some(b) = pending.take() {
            if i == self.terms.len() {
                out.push(b);
                out.extend(it.by_ref());
                break;
            }
            let a = &self.terms[i];
            match term_cmp(order, a.pos, &a.mon, b.pos, &b.mon) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                    pending = Some(b);
                }
                Ordering::Less => {
                    out.push(b);
                    pending = it.next();
                }
                Ordering::Equal => {
                    let s = k.add(a.c, b.c);
                    if s != 0 {
                        out.push(Term { c: s, ..b });
                    }
                    i += 1;
                    pending = it.next();
                }
            }
        }
        out.extend_from_slice(&self.terms[i.min(self.terms.len())..]);
        Vector { terms: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(terms: &[(u32, [u16; 2], u32)]) -> Vector {
        Vector::from_unsorted(
            MonomialOrder::DegRevLex,
            PrimeField::default(),
            terms
                .iter()
                .map(|(p, e, c)| Term {
                    pos: *p,
                    mon: Monomial::from_exponents(e),
                    c: *c,
                })
                .collect(),
        )
    }

    #[test]
    fn axpy_cancels_and_merges() {
        let k = PrimeField::default();
        let a = v(&[(0, [1, 0], 1), (1, [0, 1], 2)]);
        let b = v(&[(0, [1, 0], 1)]);
        let one = Monomial::one(2);
        let d = a.axpy(MonomialOrder::DegRevLex, k, k.neg(1), &one, &b);
        assert_eq!(d, v(&[(1, [0, 1], 2)]));
        let x = Monomial::variable(2, 0);
        let e = a.axpy(MonomialOrder::DegRevLex, k, 1, &x, &a);
        assert_eq!(e.len(), 4);
        assert_eq!(e.lead().unwrap().pos, 0);
        assert_eq!(e.lead().unwrap().mon, Monomial::from_exponents(&[2, 0]));
    }
}
