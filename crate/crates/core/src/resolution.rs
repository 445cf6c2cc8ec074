//! Minimal free covers, syzygies, minimal free resolutions and Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::modules::{kernel_of_map, FreeElement, GradedFreeModule, PresentedModule, Submodule};

/// An integer or `-∞`; `-∞` is below every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(i32),
}

impl Degree {
    pub fn finite(self) -> Option<i32> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl From<Option<i32>> for Degree {
    fn from(d: Option<i32>) -> Self {
        d.map_or(Degree::NegInf, Degree::Finite)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{}", d),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::NegInf => s.serialize_str("-inf"),
            Degree::Finite(d) => s.serialize_i32(*d),
        }
    }
}

/// Graded Betti numbers `β_{ij}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: i32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn get(&self, i: usize, j: i32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i32), u64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension, `None` for the zero module.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `β_i = Σ_j β_{ij}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((a, _), _)| *a == i).map(|(_, v)| v).sum()
    }

    /// Degrees `j` with `β_{ij} ≠ 0`.
    pub fn degrees(&self, i: usize) -> Vec<i32> {
        self.entries.keys().filter(|(a, _)| *a == i).map(|&(_, j)| j).collect()
    }

    pub fn regularity(&self) -> Degree {
        self.entries.keys().map(|&(i, j)| j - i as i32).max().into()
    }

    /// Coefficients of `p(t) = Σ β_i t^i`.
    pub fn poincare(&self) -> Vec<u64> {
        let len = self.pd().map_or(0, |p| p + 1);
        (0..len).map(|i| self.total(i)).collect()
    }

    /// `β` of the module shifted so that homological index `i` becomes `i + s`.
    pub fn shift_index(&self, s: usize) -> BettiTable {
        BettiTable {
            entries: self.entries.iter().map(|(&(i, j), &v)| ((i + s, j), v)).collect(),
        }
    }

    /// `β` of `X(-s)`.
    pub fn twist(&self, s: i32) -> BettiTable {
        BettiTable {
            entries: self.entries.iter().map(|(&(i, j), &v)| ((i, j + s), v)).collect(),
        }
    }

    pub fn sum(&self, other: &BettiTable) -> BettiTable {
        let mut out = self.clone();
        for (&(i, j), &v) in &other.entries {
            out.add(i, j, v);
        }
        out
    }

    /// Macaulay2-style grid: columns `i`, rows `j - i`.
    pub fn to_grid(&self) -> String {
        let Some(pd) = self.pd() else {
            return "0\n".to_string();
        };
        let rows: Vec<i32> = self.entries.keys().map(|&(i, j)| j - i as i32).collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=pd).map(|i| i.to_string()));
        cells.push(header);
        let mut total = vec!["total:".to_string()];
        total.extend((0..=pd).map(|i| self.total(i).to_string()));
        cells.push(total);
        for r in lo..=hi {
            let mut row = vec![format!("{}:", r)];
            for i in 0..=pd {
                let v = self.get(i, r + i as i32);
                row.push(if v == 0 { ".".to_string() } else { v.to_string() });
            }
            cells.push(row);
        }
        let ncols = pd + 2;
        let widths: Vec<usize> = (0..ncols).map(|c| cells.iter().map(|r| r[c].len()).max().unwrap()).collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, s)| format!("{:>w$}", s, w = widths[c]))
                .collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let betti: Vec<[i64; 3]> = self
            .entries
            .iter()
            .map(|(&(i, j), &v)| [i as i64, j as i64, v as i64])
            .collect();
        serde_json::json!({
            "betti": betti,
            "reg": self.regularity(),
            "pd": self.pd(),
        })
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

/// A minimal graded free cover `π: F_M -> M` with its kernel.
#[derive(Clone, Debug)]
pub struct MinimalCover {
    /// The cover `F_M`.
    pub cover: GradedFreeModule,
    /// For each cover generator, the presentation generator it maps to.
    pub projection: Vec<usize>,
    /// `Syz₁ = Ker π` inside `F_M`.
    pub syzygy: Submodule,
}

impl MinimalCover {
    /// `M ≅ F_M / Syz₁` as a minimal presentation.
    pub fn presentation(&self) -> PresentedModule {
        PresentedModule::new(self.syzygy.clone())
    }
}

/// Prunes presentation generators that are unit combinations of others.
pub fn minimal_cover(m: &PresentedModule) -> MinimalCover {
    let free = m.free_module();
    let ring = *free.ring();
    let k = ring.field();
    let mut alive: Vec<bool> = vec![true; free.rank()];
    let mut gens: Vec<FreeElement> = m.relations().generators().to_vec();
    loop {
        let mut hit = None;
        'search: for (gi, g) in gens.iter().enumerate() {
            let Some(d) = g.degree() else { continue };
            for (pos, c) in g.components().iter().enumerate() {
                if alive[pos] && free.twist(pos) == d && !c.is_zero() {
                    hit = Some((gi, pos, c.leading_term().unwrap().1));
                    break 'search;
                }
            }
        }
        let Some((gi, pos, c)) = hit else { break };
        let g = gens.swap_remove(gi);
        let inv = k.inv(c);
        for h in gens.iter_mut() {
            let hk = &h.components()[pos];
            if hk.is_zero() {
                continue;
            }
            let factor = hk.scale(inv);
            *h = h.sub(&g.mul_poly(&factor));
        }
        gens.retain(|h| !h.is_zero());
        alive[pos] = false;
    }
    let projection: Vec<usize> = (0..free.rank()).filter(|&p| alive[p]).collect();
    let cover = GradedFreeModule::new(ring, projection.iter().map(|&p| free.twist(p)).collect());
    let syz_gens = gens
        .iter()
        .map(|h| {
            cover
                .element(projection.iter().map(|&p| h.components()[p].clone()).collect())
                .expect("projection keeps homogeneity")
        })
        .collect();
    MinimalCover {
        cover: cover.clone(),
        projection,
        syzygy: Submodule::new(cover, syz_gens).expect("same ring"),
    }
}

/// `Syz₁ M`, minimally generated.
pub fn first_syzygy(m: &PresentedModule) -> Submodule {
    minimal_cover(m).syzygy.minimalized()
}

/// The first `count` syzygy modules `Syz_1, Syz_2, ...` of `M`, each minimally
/// generated inside the previous cover.
pub fn syzygy_modules(m: &PresentedModule, count: usize) -> Vec<Submodule> {
    let mut out = Vec::new();
    if count == 0 {
        return out;
    }
    let mut cur = first_syzygy(m);
    out.push(cur.clone());
    while out.len() < count {
        cur = next_syzygy(&cur);
        out.push(cur.clone());
    }
    out
}

/// The kernel of the minimal cover of a submodule `U`, minimally generated.
pub fn next_syzygy(u: &Submodule) -> Submodule {
    let gens = u.minimal_generators();
    let src = GradedFreeModule::new(*u.ring(), gens.iter().map(|g| g.degree().unwrap()).collect());
    kernel_of_map(&src, &PresentedModule::free(u.ambient().clone()), &gens)
        .expect("generators have their own degrees")
        .minimalized()
}

/// Betti table of a submodule `U` regarded as a module, up to index `cap`.
pub fn resolve_submodule(u: &Submodule, cap: usize) -> BettiTable {
    resolve_submodule_until(u, cap, |_, _| true)
}

/// Resolves while `keep_going(i, degrees_i)` holds.
pub(crate) fn resolve_submodule_until(u: &Submodule, cap: usize, mut keep_going: impl FnMut(usize, &[i32]) -> bool) -> BettiTable {
    let mut table = BettiTable::new();
    let mut cur = u.clone();
    let mut i = 0;
    loop {
        let degs = cur.generator_degrees();
        if degs.is_empty() {
            break;
        }
        for &d in &degs {
            table.add(i, d, 1);
        }
        if i >= cap || !keep_going(i, &degs) {
            break;
        }
        cur = next_syzygy(&cur);
        i += 1;
    }
    table
}

/// Betti table of `M` up to homological index `cap`.
pub fn minimal_resolution(m: &PresentedModule, cap: usize) -> BettiTable {
    let mc = minimal_cover(m);
    let mut table = BettiTable::new();
    for &t in mc.cover.twists() {
        table.add(0, t, 1);
    }
    if cap == 0 {
        return table;
    }
    table.sum(&resolve_submodule(&mc.syzygy, cap - 1).shift_index(1))
}

/// Full resolution (length at most `n`).
pub fn betti_table(m: &PresentedModule) -> BettiTable {
    minimal_resolution(m, m.ring().nvars() + 1)
}

pub fn regularity(m: &PresentedModule) -> Degree {
    betti_table(m).regularity()
}

pub fn submodule_regularity(u: &Submodule) -> Degree {
    resolve_submodule(u, u.ring().nvars() + 1).regularity()
}

/// `p(t)` coefficients and `P(t,u)` entries of `M`.
pub fn poincare(m: &PresentedModule) -> (Vec<u64>, BettiTable) {
    let t = betti_table(m);
    (t.poincare(), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn degree_sentinel_orders_below_integers() {
        assert!(Degree::NegInf < Degree::Finite(i32::MIN));
        assert!(Degree::Finite(2) < Degree::Finite(3));
        assert_eq!(Degree::NegInf.to_string(), "-inf");
    }

    #[test]
    fn grid_layout() {
        let r = Ring::new(2);
        let m = PresentedModule::cyclic(r, vec![r.parse("x1^2").unwrap(), r.parse("x1x2").unwrap(), r.parse("x2^2").unwrap()]).unwrap();
        let t = betti_table(&m);
        assert_eq!(t.to_grid(), "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
        assert_eq!(t.to_json()["reg"], 1);
        assert_eq!(t.to_json()["pd"], 2);
    }
}
