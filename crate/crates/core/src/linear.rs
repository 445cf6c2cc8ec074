//! Linear forms, invertible coordinate changes, and quotients of `R` by
//! linear forms realized as polynomial rings in fewer variables.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

/// A nonzero element of `R_1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    ring: Ring,
    coeffs: Vec<u32>,
}

impl LinearForm {
    pub fn new(ring: Ring, coeffs: &[i64]) -> Result<Self> {
        if coeffs.len() != ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                found: coeffs.len(),
            });
        }
        let k = ring.field();
        Self::from_residues(ring, coeffs.iter().map(|&c| k.from_i64(c)).collect())
    }

    pub(crate) fn from_residues(ring: Ring, coeffs: Vec<u32>) -> Result<Self> {
        debug_assert_eq!(coeffs.len(), ring.nvars());
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::ZeroForm);
        }
        Ok(LinearForm { ring, coeffs })
    }

    /// The variable `x_{i+1}`.
    pub fn variable(ring: Ring, i: usize) -> Self {
        let mut coeffs = vec![0; ring.nvars()];
        coeffs[i] = 1;
        LinearForm { ring, coeffs }
    }

    pub fn from_polynomial(f: &Polynomial) -> Result<Self> {
        let ring = *f.ring();
        let mut coeffs = vec![0; ring.nvars()];
        for (m, c) in f.terms() {
            if m.degree() != 1 {
                return Err(Error::DegreeMismatch {
                    expected: 1,
                    found: m.degree() as i32,
                });
            }
            let i = m.exponents().iter().position(|&e| e == 1).unwrap();
            coeffs[i] = *c;
        }
        Self::from_residues(ring, coeffs)
    }

    pub fn parse(ring: Ring, text: &str) -> Result<Self> {
        Self::from_polynomial(&ring.parse(text)?)
    }

    /// Uniformly random nonzero form.
    pub fn random<G: Rng + ?Sized>(ring: Ring, rng: &mut G) -> Self {
        let p = ring.characteristic();
        loop {
            let coeffs: Vec<u32> = (0..ring.nvars()).map(|_| rng.gen_range(0..p)).collect();
            if let Ok(z) = Self::from_residues(ring, coeffs) {
                return z;
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.ring.nvars();
        Polynomial::from_terms(
            self.ring,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (Monomial::variable(n, i), c)),
        )
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Whether `forms` are linearly independent in `R_1`.
pub fn are_independent(forms: &[LinearForm]) -> bool {
    let Some(first) = forms.first() else {
        return true;
    };
    let rows: Vec<Vec<u32>> = forms.iter().map(|z| z.coeffs.clone()).collect();
    linalg::rank(first.ring.field(), &rows) == forms.len()
}

/// The ring automorphism `x_j -> sum_l matrix[j][l] x_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    ring: Ring,
    matrix: Vec<Vec<u32>>,
    inverse: Vec<Vec<u32>>,
}

impl LinearChange {
    pub fn new(ring: Ring, matrix: Vec<Vec<u32>>) -> Result<Self> {
        let n = ring.nvars();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.len(),
            });
        }
        let p = ring.characteristic();
        let matrix: Vec<Vec<u32>> = matrix.into_iter().map(|r| r.into_iter().map(|v| v % p).collect()).collect();
        let inverse = linalg::inverse(ring.field(), &matrix).ok_or(Error::SingularMatrix)?;
        Ok(LinearChange { ring, matrix, inverse })
    }

    /// The change sending `x_j` to the form `images[j]`.
    pub fn from_images(images: &[LinearForm]) -> Result<Self> {
        let ring = *images.first().ok_or(Error::Invalid("no images".into()))?.ring();
        Self::new(ring, images.iter().map(|z| z.coeffs.clone()).collect())
    }

    pub fn identity(ring: Ring) -> Self {
        let n = ring.nvars();
        let id: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect();
        LinearChange {
            ring,
            matrix: id.clone(),
            inverse: id,
        }
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &[Vec<u32>] {
        &self.inverse
    }

    pub fn inverse(&self) -> LinearChange {
        LinearChange {
            ring: self.ring,
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        substitute_rows(f, &self.matrix, self.ring)
    }

    pub fn apply_inverse(&self, f: &Polynomial) -> Polynomial {
        substitute_rows(f, &self.inverse, self.ring)
    }
}

/// Substitutes `x_j -> sum_l rows[j][l] y_l` with `y` the variables of `target`.
fn substitute_rows(f: &Polynomial, rows: &[Vec<u32>], target: Ring) -> Polynomial {
    let images: Vec<Polynomial> = rows
        .iter()
        .map(|r| {
            Polynomial::from_terms(
                target,
                r.iter()
                    .enumerate()
                    .take(target.nvars())
                    .filter(|(_, &c)| c != 0)
                    .map(|(l, &c)| (Monomial::variable(target.nvars(), l), c)),
            )
        })
        .collect();
    f.substitute(&images, target)
}

/// The surjection `R -> R/(z_1..z_r)R = K[y_1..y_{n-r}]`.
///
/// New coordinates are `y = A x` where the last `r` rows of `A` are the
/// forms and the first rows are unit vectors completing them to a basis.
#[derive(Clone, Debug)]
pub struct LinearQuotient {
    source: Ring,
    target: Ring,
    forms: Vec<LinearForm>,
    a: Vec<Vec<u32>>,
    b: Vec<Vec<u32>>,
}

impl LinearQuotient {
    pub fn new(source: Ring, forms: &[LinearForm]) -> Result<Self> {
        let n = source.nvars();
        for z in forms {
            source.check_same(z.ring())?;
        }
        if !are_independent(forms) {
            return Err(Error::DependentForms);
        }
        let r = forms.len();
        let k = source.field();
        let mut chosen: Vec<Vec<u32>> = Vec::new();
        let mut span: Vec<Vec<u32>> = forms.iter().map(|z| z.coeffs.clone()).collect();
        for i in 0..n {
            if chosen.len() == n - r {
                break;
            }
            let e: Vec<u32> = (0..n).map(|j| u32::from(i == j)).collect();
            span.push(e.clone());
            if linalg::rank(k, &span) == span.len() {
                chosen.push(e);
            } else {
                span.pop();
            }
        }
        let mut a = chosen;
        a.extend(forms.iter().map(|z| z.coeffs.clone()));
        let b = linalg::inverse(k, &a).ok_or(Error::DependentForms)?;
        Ok(LinearQuotient {
            source,
            target: source.with_nvars(n - r),
            forms: forms.to_vec(),
            a,
            b,
        })
    }

    pub fn source(&self) -> Ring {
        self.source
    }

    pub fn target(&self) -> Ring {
        self.target
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    /// The coordinate change realizing the quotient: after applying it the
    /// forms become the last variables.
    pub fn change(&self) -> LinearChange {
        LinearChange {
            ring: self.source,
            matrix: self.b.clone(),
            inverse: self.a.clone(),
        }
    }

    pub fn map(&self, f: &Polynomial) -> Polynomial {
        substitute_rows(f, &self.b, self.target)
    }

    /// Image of a form, `None` when it lies in the span of the forms.
    pub fn map_form(&self, z: &LinearForm) -> Option<LinearForm> {
        let k = self.source.field();
        let m = self.target.nvars();
        let coeffs: Vec<u32> = (0..m)
            .map(|l| {
                (0..self.source.nvars()).fold(0, |acc, j| k.add(acc, k.mul(z.coeffs[j], self.b[j][l])))
            })
            .collect();
        LinearForm::from_residues(self.target, coeffs).ok()
    }

    /// A preimage in `R_1` of a form of the quotient ring.
    pub fn lift_form(&self, w: &LinearForm) -> LinearForm {
        let k = self.source.field();
        let n = self.source.nvars();
        let coeffs: Vec<u32> = (0..n)
            .map(|j| {
                w.coeffs
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (l, &c)| k.add(acc, k.mul(c, self.a[l][j])))
            })
            .collect();
        LinearForm::from_residues(self.source, coeffs).expect("lift of a nonzero form is nonzero")
    }
}
