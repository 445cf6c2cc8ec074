//! The polynomial ring `K[x1..xn]` over a prime field and its sparse elements.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField, DEFAULT_PRIME};
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    field: PrimeField,
    order: MonomialOrder,
}

impl Ring {
    /// `K[x1..xn]` over GF(32003) with degrevlex.
    pub fn new(nvars: usize) -> Self {
        Ring {
            nvars,
            field: PrimeField::new(DEFAULT_PRIME as u64).unwrap(),
            order: MonomialOrder::DegRevLex,
        }
    }

    pub fn with_prime(nvars: usize, p: u64) -> Result<Self> {
        Ok(Ring {
            nvars,
            field: PrimeField::new(p)?,
            order: MonomialOrder::DegRevLex,
        })
    }

    pub fn with_order(self, order: MonomialOrder) -> Self {
        Ring { order, ..self }
    }

    /// Same field and order, different number of variables.
    pub fn with_nvars(self, nvars: usize) -> Self {
        Ring { nvars, ..self }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.field.modulus()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: *self,
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.term(Monomial::one(self.nvars), self.field.from_i64(c))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars, "variable index out of range");
        self.term(Monomial::variable(self.nvars, i), 1)
    }

    pub fn term(&self, mon: Monomial, coeff: u32) -> Polynomial {
        assert_eq!(mon.nvars(), self.nvars);
        let coeff = coeff % self.field.modulus();
        Polynomial {
            ring: *self,
            terms: if coeff == 0 { vec![] } else { vec![(mon, coeff)] },
        }
    }

    pub fn element(&self, v: i64) -> Fp {
        self.field.element(v)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(*self, text, 1, 1)
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(format!(
                "{} variables over GF({}) vs {} variables over GF({})",
                self.nvars,
                self.characteristic(),
                other.nvars,
                other.characteristic()
            )));
        }
        Ok(())
    }
}

/// Terms are kept strictly descending in the ring's order with no zero
/// coefficients; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let k = ring.field;
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars);
            let e = acc.entry(m).or_insert(0);
            *e = k.add(*e, c % k.modulus());
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        Polynomial { ring, terms }
    }

    /// Builds from terms already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { ring, terms }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree of the leading term (the degree for homogeneous input).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn coefficient(&self, mon: &Monomial) -> Fp {
        let c = self
            .terms
            .iter()
            .find(|(m, _)| m == mon)
            .map(|t| t.1)
            .unwrap_or(0);
        self.ring.field.element(c as i64)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(other, 1, None)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(other, self.ring.field.neg(1), None)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let k = self.ring.field;
        let c = c % k.modulus();
        if c == 0 {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), k.mul(*a, c))).collect(),
        }
    }

    pub fn mul_term(&self, mon: &Monomial, c: u32) -> Polynomial {
        let k = self.ring.field;
        if c.is_multiple_of(k.modulus()) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mon), k.mul(*a, c)))
                .collect(),
        }
    }

    /// `self + c * mon * other`, merging sorted term lists.
    pub fn add_scaled(&self, other: &Polynomial, c: u32, mon: Option<&Monomial>) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let k = self.ring.field;
        let ord = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |t: &(Monomial, u32)| -> (Monomial, u32) {
            let m = match mon {
                Some(s) => t.0.mul(s),
                None => t.0.clone(),
            };
            (m, k.mul(t.1, c))
        };
        while i < self.terms.len() || j < other.terms.len() {
            if j == other.terms.len() {
                out.push(self.terms[i].clone());
                i += 1;
                continue;
            }
            let b = shifted(&other.terms[j]);
            if i == self.terms.len() {
                if b.1 != 0 {
                    out.push(b);
                }
                j += 1;
                continue;
            }
            match ord.cmp(&self.terms[i].0, &b.0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    if b.1 != 0 {
                        out.push(b);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let s = k.add(self.terms[i].1, b.1);
                    if s != 0 {
                        out.push((b.0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let k = self.ring.field;
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = acc.entry(a.mul(b)).or_insert(0);
                *e = k.add(*e, k.mul(*ca, *cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| self.ring.order.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = self.ring.one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.ring.field.inv(*c)),
        }
    }

    /// Ring map sending `x_i` to `images[i]`, landing in `target`.
    pub fn substitute(&self, images: &[Polynomial], target: Ring) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars);
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(*c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Human-readable form with `x, y, z` aliases when `n <= 3`.
    pub fn pretty(&self) -> String {
        format_polynomial(self, self.ring.nvars <= 3)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_polynomial(self, false))
    }
}

fn format_monomial(m: &Monomial, alias: bool) -> String {
    const ALIASES: [&str; 3] = ["x", "y", "z"];
    let mut s = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if alias {
            s.push_str(ALIASES[i]);
        } else {
            s.push_str(&format!("x{}", i + 1));
        }
        if e > 1 {
            s.push_str(&format!("^{}", e));
        }
    }
    s
}

fn format_polynomial(p: &Polynomial, alias: bool) -> String {
    if p.terms.is_empty() {
        return "0".to_string();
    }
    let k = p.ring.field;
    let mut s = String::new();
    for (idx, (m, c)) in p.terms.iter().enumerate() {
        let v = k.to_signed(*c);
        let (neg, a) = (v < 0, v.unsigned_abs());
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mon = format_monomial(m, alias);
        if mon.is_empty() {
            s.push_str(&a.to_string());
        } else {
            if a != 1 {
                s.push_str(&a.to_string());
                if alias {
                    s.push('*');
                }
            }
            s.push_str(&mon);
        }
    }
    s
}

/// Parses the polynomial syntax `x1^2 - 3x1x2 + 7`. `line` and `col0` give
/// the position of `text` inside a larger document for error reporting.
pub(crate) fn parse_polynomial(ring: Ring, text: &str, line: usize, col0: usize) -> Result<Polynomial> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let err = |pos: usize, msg: &str| Error::parse(line, col0 + pos, msg);
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let read_int = |pos: &mut usize| -> Option<u64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            None
        } else {
            text[start..*pos].parse::<u64>().ok()
        }
    };
    let k = ring.field;
    let p = k.modulus() as u64;
    let mut terms = Vec::new();
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(err(pos, "empty polynomial"));
    }
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        let mut sign = 1i64;
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(err(pos, "expected '+' or '-'"));
        }
        first = false;
        let mut coeff: u32 = 1;
        let mut saw_factor = false;
        if pos < bytes.len() && bytes[pos].is_ascii_digit() {
            let start = pos;
            let c = read_int(&mut pos).ok_or_else(|| err(start, "bad coefficient"))?;
            coeff = (c % p) as u32;
            saw_factor = true;
        }
        let mut exps = vec![0u16; ring.nvars];
        loop {
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                if !saw_factor {
                    return Err(err(pos, "unexpected '*'"));
                }
                pos += 1;
                skip_ws(&mut pos);
                if pos >= bytes.len() || bytes[pos] != b'x' {
                    return Err(err(pos, "expected a variable after '*'"));
                }
            }
            if pos < bytes.len() && bytes[pos] == b'x' {
                let vstart = pos;
                pos += 1;
                let idx = read_int(&mut pos).ok_or_else(|| err(vstart, "variable needs an index, e.g. x1"))?;
                if idx == 0 || idx as usize > ring.nvars {
                    return Err(err(vstart, &format!("unknown variable x{}", idx)));
                }
                let mut e = 1u64;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let estart = pos;
                    e = read_int(&mut pos).ok_or_else(|| err(estart, "malformed power"))?;
                    if e > u16::MAX as u64 / 2 {
                        return Err(err(estart, "exponent too large"));
                    }
                }
                exps[idx as usize - 1] += e as u16;
                saw_factor = true;
            } else {
                break;
            }
        }
        if !saw_factor {
            return Err(err(pos, "expected a term"));
        }
        let c = if sign < 0 { k.neg(coeff) } else { coeff };
        terms.push((Monomial::from_exponents(&exps), c));
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'+' && bytes[pos] != b'-' {
            return Err(err(pos, &format!("unexpected character '{}'", bytes[pos] as char)));
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}
