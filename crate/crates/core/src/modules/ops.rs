//! Kernels of graded maps, colon modules and saturation.

use crate::error::{Error, Result};
use crate::linear::LinearForm;
use crate::modules::free::{FreeElement, GradedFreeModule};
use crate::modules::gb::{buchberger, GbInput, GbOptions};
use crate::modules::presented::PresentedModule;
use crate::modules::submodule::Submodule;
use crate::modules::vector::Vector;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// Reads a lift vector (positions are source indices) as a source element.
fn lift_to_element(source: &GradedFreeModule, v: &Vector) -> FreeElement {
    let ring = *source.ring();
    let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); source.rank()];
    for t in v.terms() {
        buckets[t.pos as usize].push((t.mon.clone(), t.c));
    }
    let comps = buckets
        .into_iter()
        .map(|ts| Polynomial::from_sorted_terms(ring, ts))
        .collect();
    source.element(comps).expect("syzygies are homogeneous")
}

/// The kernel of `source -> target`, `e_i -> images[i]`.
pub fn kernel_of_map(source: &GradedFreeModule, target: &PresentedModule, images: &[FreeElement]) -> Result<Submodule> {
    if images.len() != source.rank() {
        return Err(Error::DimensionMismatch {
            expected: source.rank(),
            found: images.len(),
        });
    }
    let tfree = target.free_module();
    source.ring().check_same(tfree.ring())?;
    let mut inputs = Vec::with_capacity(images.len());
    for (i, img) in images.iter().enumerate() {
        if img.rank() != tfree.rank() {
            return Err(Error::DimensionMismatch {
                expected: tfree.rank(),
                found: img.rank(),
            });
        }
        if let Some(d) = img.degree() {
            if d != source.twist(i) {
                return Err(Error::DegreeMismatch {
                    expected: source.twist(i),
                    found: d,
                });
            }
        }
        inputs.push(GbInput {
            vec: tfree.to_vector(img),
            degree: source.twist(i),
        });
    }
    let seed = if target.relations().is_zero() {
        Vec::new()
    } else {
        target.relations().gb_data().basis.clone()
    };
    kernel_with_seed(source, tfree, seed, inputs)
}

fn kernel_with_seed(source: &GradedFreeModule, tfree: &GradedFreeModule, seed: Vec<Vector>, inputs: Vec<GbInput>) -> Result<Submodule> {
    let ncols = inputs.len();
    let twists = tfree.internal_twists();
    let run = buchberger(
        *source.ring(),
        &twists,
        inputs,
        GbOptions {
            lift_columns: Some(ncols),
            seed,
            reduce: false,
        },
    );
    let gens = run.syzygies.iter().map(|v| lift_to_element(source, v)).collect();
    Submodule::new(source.clone(), gens)
}

/// Re-reads elements of `from` as elements of `to` (same rank, other twists).
fn retwist(to: &GradedFreeModule, gens: &[FreeElement]) -> Vec<FreeElement> {
    gens.iter()
        .map(|g| to.element(g.components().to_vec()).expect("homogeneous after retwist"))
        .collect()
}

/// `U :_F z`.
pub fn colon_by_linear(u: &Submodule, z: &LinearForm) -> Result<Submodule> {
    let f = u.ambient();
    f.ring().check_same(z.ring())?;
    let zp = z.to_polynomial();
    let source = f.shifted(1);
    let images: Vec<FreeElement> = (0..f.rank()).map(|k| f.basis(k).mul_poly(&zp)).collect();
    let ker = kernel_of_map(&source, &PresentedModule::new(u.clone()), &images)?;
    let mut gens = retwist(f, ker.generators());
    gens.extend(u.generators().iter().cloned());
    Submodule::new(f.clone(), gens)
}

/// `U :_F m`.
pub fn colon_by_maximal(u: &Submodule) -> Result<Submodule> {
    let f = u.ambient();
    let ring = *f.ring();
    let n = ring.nvars();
    let m = f.rank();
    if n == 0 {
        return Ok(Submodule::full(f.clone()));
    }
    let big = f.power(n);
    let mut seed = Vec::new();
    let gb = u.groebner_basis();
    for c in 0..n {
        for g in gb.generators() {
            seed.push(big.to_vector(&place_block(&big, g, c, m)));
        }
    }
    let source = f.shifted(1);
    let images: Vec<FreeElement> = (0..m)
        .map(|k| {
            let mut comps = vec![ring.zero(); n * m];
            for (c, comp) in comps.chunks_mut(m).enumerate() {
                comp[k] = ring.var(c);
            }
            big.element(comps).unwrap()
        })
        .collect();
    let inputs = images
        .iter()
        .enumerate()
        .map(|(k, img)| GbInput {
            vec: big.to_vector(img),
            degree: source.twist(k),
        })
        .collect();
    let ker = kernel_with_seed(&source, &big, seed, inputs)?;
    let mut gens = retwist(f, ker.generators());
    gens.extend(u.generators().iter().cloned());
    Submodule::new(f.clone(), gens)
}

fn place_block(big: &GradedFreeModule, g: &FreeElement, c: usize, m: usize) -> FreeElement {
    let ring = *big.ring();
    let mut comps = vec![ring.zero(); big.rank()];
    comps[c * m..(c + 1) * m].clone_from_slice(g.components());
    big.element(comps).unwrap()
}

/// `U :_F m^∞`.
pub fn saturate(u: &Submodule) -> Result<Submodule> {
    let mut cur = u.clone();
    loop {
        let next = colon_by_maximal(&cur)?.minimalized();
        if cur.contains_submodule(&next) {
            return Ok(cur);
        }
        cur = next;
    }
}
