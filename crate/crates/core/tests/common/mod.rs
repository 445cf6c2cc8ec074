//! Dense degree-slice linear algebra, independent of the Groebner engine.
#![allow(dead_code)]

use gamma_depth_core::{FreeElement, GradedFreeModule, Monomial, Polynomial, Ring, Submodule};

pub fn rank_mod_p(p: u64, mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = pow_mod(rows[r][c] % p, p - 2, p);
        let prow: Vec<u64> = rows[r].iter().map(|&v| v * inv % p).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_multiple_of(p) {
                let f = rows[i][c] % p;
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + p - f * prow[j] % p) % p;
                }
            }
        }
        rows[r] = prow;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// The monomial basis `(k, m)` of `F_d`.
pub fn slice_basis(f: &GradedFreeModule, d: i32) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for k in 0..f.rank() {
        let e = d - f.twist(k);
        if e >= 0 {
            for m in Monomial::all_of_degree(f.ring().nvars(), e as u32) {
                out.push((k, m));
            }
        }
    }
    out
}

pub fn coords(basis: &[(usize, Monomial)], v: &FreeElement) -> Vec<u64> {
    basis
        .iter()
        .map(|(k, m)| v.components()[*k].coefficient(m).value() as u64)
        .collect()
}

/// Spanning rows of `U_d`: all monomial multiples of generators.
pub fn slice_rows(u: &Submodule, d: i32) -> Vec<Vec<u64>> {
    let f = u.ambient();
    let ring = *f.ring();
    let basis = slice_basis(f, d);
    let mut rows = Vec::new();
    for g in u.generators() {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for m in Monomial::all_of_degree(ring.nvars(), (d - e) as u32) {
            rows.push(coords(&basis, &g.mul_poly(&ring.term(m, 1))));
        }
    }
    if rows.is_empty() {
        rows.push(vec![0; basis.len()]);
    }
    rows
}

pub fn p_of(ring: &Ring) -> u64 {
    ring.characteristic() as u64
}

pub fn dense_dim(u: &Submodule, d: i32) -> usize {
    rank_mod_p(p_of(u.ring()), slice_rows(u, d))
}

pub fn dense_contains(u: &Submodule, v: &FreeElement) -> bool {
    let Some(d) = v.degree() else { return true };
    let basis = slice_basis(u.ambient(), d);
    let mut rows = slice_rows(u, d);
    let r0 = rank_mod_p(p_of(u.ring()), rows.clone());
    rows.push(coords(&basis, v));
    rank_mod_p(p_of(u.ring()), rows) == r0
}

/// `dim (U :_F z)_d` for a linear polynomial `z`.
pub fn dense_colon_dim(u: &Submodule, z: &Polynomial, d: i32) -> usize {
    let f = u.ambient();
    let p = p_of(u.ring());
    let basis_up = slice_basis(f, d + 1);
    let s = slice_rows(u, d + 1);
    let rs = rank_mod_p(p, s.clone());
    let mut rows = s;
    let src = slice_basis(f, d);
    for (k, m) in &src {
        let v = f.monomial_element(*k, m.clone()).mul_poly(z);
        rows.push(coords(&basis_up, &v));
    }
    src.len() - (rank_mod_p(p, rows) - rs)
}

/// `dim (U :_F m)_d`.
pub fn dense_colon_max_dim(u: &Submodule, d: i32) -> usize {
    let f = u.ambient();
    let ring = *f.ring();
    let n = ring.nvars();
    let p = p_of(&ring);
    let basis_up = slice_basis(f, d + 1);
    let w = basis_up.len();
    let s = slice_rows(u, d + 1);
    let rs = rank_mod_p(p, s.clone());
    let mut rows = Vec::new();
    for c in 0..n {
        for row in &s {
            let mut big = vec![0; w * n];
            big[c * w..(c + 1) * w].copy_from_slice(row);
            rows.push(big);
        }
    }
    let src = slice_basis(f, d);
    for (k, m) in &src {
        let mut big = vec![0; w * n];
        for c in 0..n {
            let v = f.monomial_element(*k, m.clone()).mul_poly(&ring.var(c));
            big[c * w..(c + 1) * w].copy_from_slice(&coords(&basis_up, &v));
        }
        rows.push(big);
    }
    src.len() - (rank_mod_p(p, rows) - n * rs)
}
