//! Checks of the splitting identities relating Betti numbers over `R` and
//! over `R/zR` for a gamma-regular `z`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{LinearForm, LinearQuotient};
use crate::modules::{binomial, PresentedModule};
use crate::resolution::{betti_table, minimal_cover, resolve_submodule, BettiTable, Degree};

use super::basic::{alpha, reduce_with, socle, Alpha};
use super::regular::is_gamma_regular;

#[derive(Clone, Debug, Serialize)]
pub struct AuditItem {
    pub item: u8,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplittingReport {
    pub alpha: u64,
    pub items: Vec<AuditItem>,
}

impl SplittingReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|i| i.holds)
    }

    pub fn item(&self, k: u8) -> Option<&AuditItem> {
        self.items.iter().find(|i| i.item == k)
    }
}

fn table_string(t: &BettiTable) -> String {
    let parts: Vec<String> = t.entries().iter().map(|(&(i, j), v)| format!("b{},{}={}", i, j, v)).collect();
    format!("{{{}}}", parts.join(" "))
}

fn poly_string(p: &[u64]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{}t", c),
            _ => format!("{}t^{}", c, i),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn poly_add(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn trimmed(mut p: Vec<u64>) -> Vec<u64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn item(k: u8, holds: bool, lhs: String, rhs: String) -> AuditItem {
    AuditItem { item: k, holds, lhs, rhs }
}

/// Evaluates the splitting identities for `(M, z)`; `z` must be
/// gamma-regular on `M`.
pub fn splitting_audit(m: &PresentedModule, z: &LinearForm) -> Result<SplittingReport> {
    let cert = is_gamma_regular(m, z)?;
    if !cert.verdict {
        return Err(Error::Precondition(format!("{} is not gamma-regular on the module", z)));
    }
    let n = m.ring().nvars();
    let mc = minimal_cover(m);
    let p = mc.presentation();
    let a = match alpha(&p, z)? {
        Alpha::Finite(a) => a,
        Alpha::Infinite => return Err(Error::Precondition("alpha is infinite".into())),
    };
    let q = LinearQuotient::new(*m.ring(), std::slice::from_ref(z))?;
    let bar = reduce_with(&p, &q);
    let syz = &mc.syzygy;
    let syz_bar = minimal_cover(&bar).syzygy;
    let b_syz = resolve_submodule(syz, n + 1);
    let b_syz_bar = resolve_submodule(&syz_bar, n);
    let b_m = betti_table(&p);
    let b_m_bar = betti_table(&bar);
    let soc = socle(&p);

    // Betti numbers of soc M(-1) over R/zR: k(-e) has β_i = C(n-1, i) at e + i.
    let mut soc_shift = BettiTable::new();
    for (&d, &s) in &soc.dims.nonzero() {
        for i in 0..n {
            soc_shift.add(i, d + 1 + i as i32, s * binomial(n as u64 - 1, i as u64));
        }
    }

    let mut items = Vec::new();
    let rhs2 = b_syz_bar.sum(&soc_shift);
    items.push(item(2, b_syz == rhs2, table_string(&b_syz), table_string(&rhs2)));
    items.push(item(3, b_syz == rhs2, table_string(&b_syz), table_string(&rhs2)));
    let rhs4 = b_m_bar.sum(&soc_shift.shift_index(1));
    items.push(item(4, b_m == rhs4, table_string(&b_m), table_string(&rhs4)));

    let one_plus_t: Vec<u64> = (0..n).map(|i| a * binomial(n as u64 - 1, i as u64)).collect();
    let lhs5 = trimmed(b_syz.poincare());
    let rhs5 = poly_add(&b_syz_bar.poincare(), &one_plus_t);
    items.push(item(5, lhs5 == rhs5, poly_string(&lhs5), poly_string(&rhs5)));
    let mut t_times: Vec<u64> = vec![0];
    t_times.extend(one_plus_t.iter().copied());
    let lhs6 = trimmed(b_m.poincare());
    let rhs6 = poly_add(&b_m_bar.poincare(), &t_times);
    items.push(item(6, lhs6 == rhs6, poly_string(&lhs6), poly_string(&rhs6)));

    let soc_degs: Vec<i32> = soc.dims.nonzero().keys().map(|d| d + 1).collect();
    let syz_degs = syz.generator_degrees();
    let holds7 = soc_degs.iter().all(|d| syz_degs.contains(d));
    items.push(item(7, holds7, format!("{:?}", soc_degs), format!("{:?}", syz_degs)));

    let lhs8 = b_syz.regularity();
    let top: Degree = syz_degs.last().copied().into();
    let rhs8 = b_syz_bar.regularity().max(top);
    items.push(item(8, lhs8 == rhs8, lhs8.to_string(), rhs8.to_string()));

    Ok(SplittingReport { alpha: a, items })
}
