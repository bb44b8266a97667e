//! Krull-Schmidt decomposition and isomorphism testing.
//!
//! Summands are split off with Fitting's lemma: a polynomial `g(phi)` in an
//! endomorphism `phi` whose minimal polynomial has two coprime factors gives
//! `M = ker g(phi)^D + im g(phi)^D` with both parts nonzero. Endomorphisms are
//! drawn from a basis of `End(M)` and then at random with a fixed seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::{hom_basis, submodule, FDModule, ModMorphism};
use crate::poly::{coprime_split, evaluate, minimal_polynomial};

pub const SEED: u64 = 0xC0FFEE;
const RANDOM_TRIALS: usize = 48;
const ISO_TRIALS: usize = 16;

/// `M` as a sum of indecomposables grouped by isomorphism class.
#[derive(Debug, Clone)]
pub struct Decomposition<F: Field> {
    /// One representative per class with its multiplicity.
    pub summands: Vec<(FDModule<F>, usize)>,
    /// The summands as found inside `M`, grouped by class in the order of `summands`.
    pub parts: Vec<FDModule<F>>,
    /// An isomorphism from the direct sum of `parts` onto `M`.
    pub certificate: ModMorphism<F>,
}

fn random_combination<F: Field>(m: &FDModule<F>, basis: &[ModMorphism<F>], rng: &mut ChaCha8Rng) -> ModMorphism<F> {
    let f = m.field();
    let cs: Vec<F::Elem> = basis.iter().map(|_| f.random(rng)).collect();
    ModMorphism::combination(m, m, basis, &cs)
}

/// Trace-form radical test: `End(M)` modulo the trace-form radical is one-dimensional.
fn trace_form_local<F: Field>(basis: &[ModMorphism<F>]) -> bool {
    let f = basis[0].src().field();
    let mats: Vec<Mat<F>> = basis.iter().map(|b| b.block_matrix()).collect();
    let n = mats.len();
    let mut gram = Mat::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let p = mats[i].mul(&mats[j]);
            let mut tr = f.zero();
            for k in 0..p.rows() {
                tr = f.add(&tr, p.get(k, k));
            }
            gram.set(i, j, tr);
        }
    }
    gram.rank() == 1
}

/// Tries to split `M` once; returns the two Fitting pieces.
#[allow(clippy::type_complexity)]
fn split_once<F: Field>(
    m: &FDModule<F>,
    end: &[ModMorphism<F>],
    rng: &mut ChaCha8Rng,
) -> Option<((FDModule<F>, ModMorphism<F>), (FDModule<F>, ModMorphism<F>))> {
    let f = m.field();
    let d = m.total_dim();
    for t in 0..end.len() + RANDOM_TRIALS {
        let phi = if t < end.len() { end[t].clone() } else { random_combination(m, end, rng) };
        let poly = minimal_polynomial(&phi.block_matrix());
        if poly.len() <= 2 {
            continue;
        }
        let Some(g) = coprime_split(f, &poly, rng) else { continue };
        let psi: Vec<Mat<F>> = phi.mats().iter().map(|p| evaluate(&g, p).pow(d)).collect();
        let kernels: Vec<Mat<F>> = psi.iter().map(|p| p.left_kernel()).collect();
        let images: Vec<Mat<F>> = psi.iter().map(|p| p.row_basis()).collect();
        let k_dim: usize = kernels.iter().map(|k| k.rows()).sum();
        if k_dim == 0 || k_dim == d {
            continue;
        }
        let k = submodule(m, kernels).expect("Fitting kernel is a submodule");
        let i = submodule(m, images).expect("Fitting image is a submodule");
        return Some((k, i));
    }
    None
}

fn split<F: Field>(m: &FDModule<F>, rng: &mut ChaCha8Rng) -> Result<Vec<(FDModule<F>, ModMorphism<F>)>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let end = hom_basis(m, m)?;
    if end.len() == 1 {
        return Ok(vec![(m.clone(), ModMorphism::identity(m))]);
    }
    match split_once(m, &end, rng) {
        Some(((k, ki), (i, ii))) => {
            let mut out = Vec::new();
            for (s, incl) in split(&k, rng)? {
                out.push((s, incl.then(&ki)));
            }
            for (s, incl) in split(&i, rng)? {
                out.push((s, incl.then(&ii)));
            }
            Ok(out)
        }
        None => {
            if m.field().characteristic() == 0 && !trace_form_local(&end) {
                return Err(Error::DecompositionInconclusive(format!(
                    "no splitting endomorphism found for a module of dimension {}",
                    m.total_dim()
                )));
            }
            Ok(vec![(m.clone(), ModMorphism::identity(m))])
        }
    }
}

/// Indecomposable summands of `M` with their inclusions, in discovery order.
pub fn indecomposable_summands<F: Field>(m: &FDModule<F>) -> Result<Vec<(FDModule<F>, ModMorphism<F>)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    split(m, &mut rng)
}

pub fn is_indecomposable<F: Field>(m: &FDModule<F>) -> Result<bool> {
    Ok(!m.is_zero() && indecomposable_summands(m)?.len() == 1)
}

pub fn decompose<F: Field>(m: &FDModule<F>) -> Result<Decomposition<F>> {
    let pieces = indecomposable_summands(m)?;
    let mut classes: Vec<Vec<(FDModule<F>, ModMorphism<F>)>> = Vec::new();
    'next: for (s, incl) in pieces {
        for class in classes.iter_mut() {
            if iso_indecomposable(&class[0].0, &s)?.is_some() {
                class.push((s, incl));
                continue 'next;
            }
        }
        classes.push(vec![(s, incl)]);
    }
    let summands = classes.iter().map(|c| (c[0].0.clone(), c.len())).collect();
    let (parts, incls): (Vec<_>, Vec<_>) = classes.into_iter().flatten().unzip();
    let certificate = if parts.is_empty() { ModMorphism::identity(m) } else { assemble_from_sum(&parts, &incls, m)? };
    if !certificate.is_iso() {
        return Err(Error::DecompositionInconclusive("summands do not recombine to the module".into()));
    }
    Ok(Decomposition { summands, parts, certificate })
}

/// The morphism from `direct_sum(parts)` whose restriction to part `i` is `maps[i]`.
pub fn assemble_from_sum<F: Field>(
    parts: &[FDModule<F>],
    maps: &[ModMorphism<F>],
    target: &FDModule<F>,
) -> Result<ModMorphism<F>> {
    let sum = FDModule::direct_sum(parts)?;
    let f = target.field();
    let mats = (0..target.dims().len())
        .map(|v| {
            let mut acc = Mat::zeros(f, 0, target.dim(v));
            for g in maps {
                acc = acc.vstack(g.mat(v));
            }
            acc
        })
        .collect();
    ModMorphism::new(sum, target.clone(), mats)
}

fn is_nilpotent<F: Field>(m: &Mat<F>) -> bool {
    m.pow(m.rows().max(1)).is_zero()
}

/// Exact isomorphism test when `M` is indecomposable: `End(M)` is local, so an
/// isomorphism exists iff some `f g` (f in Hom(M, N), g in Hom(N, M)) is not nilpotent.
pub fn iso_indecomposable<F: Field>(m: &FDModule<F>, n: &FDModule<F>) -> Result<Option<ModMorphism<F>>> {
    m.check_carrier(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let there = hom_basis(m, n)?;
    let back = hom_basis(n, m)?;
    for f in &there {
        if f.is_iso() {
            return Ok(Some(f.clone()));
        }
    }
    for f in &there {
        for g in &back {
            if !is_nilpotent(&f.then(g).block_matrix()) {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// An explicit isomorphism `M -> N` if one exists.
pub fn find_iso<F: Field>(m: &FDModule<F>, n: &FDModule<F>) -> Result<Option<ModMorphism<F>>> {
    m.check_carrier(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModMorphism::zero(m, n)));
    }
    let there = hom_basis(m, n)?;
    let end_m = hom_basis(m, m)?.len();
    if there.len() != end_m || hom_basis(n, n)?.len() != end_m {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for f in &there {
        if f.is_iso() {
            return Ok(Some(f.clone()));
        }
    }
    for _ in 0..ISO_TRIALS {
        let cs: Vec<F::Elem> = there.iter().map(|_| m.field().random(&mut rng)).collect();
        let f = ModMorphism::combination(m, n, &there, &cs);
        if f.is_iso() {
            return Ok(Some(f));
        }
    }
    // Fall back to matching indecomposable summands one by one.
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.parts.len() == 1 {
        return iso_indecomposable(m, n);
    }
    if dm.parts.len() != dn.parts.len() {
        return Ok(None);
    }
    let mut used = vec![false; dn.parts.len()];
    let mut blocks: Vec<Option<ModMorphism<F>>> = vec![None; dm.parts.len()];
    for (i, p) in dm.parts.iter().enumerate() {
        let mut found = false;
        for (j, q) in dn.parts.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(iso) = iso_indecomposable(p, q)? {
                let into_n = FDModule::injection(&dn.parts, j)?.then(&dn.certificate);
                blocks[i] = Some(iso.then(&into_n));
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    let maps: Vec<ModMorphism<F>> = blocks.into_iter().map(|b| b.expect("matched")).collect();
    let from_sum = assemble_from_sum(&dm.parts, &maps, n)?;
    let back = dm.certificate.inverse().expect("certificate is invertible");
    let iso = back.then(&from_sum);
    if iso.is_iso() {
        Ok(Some(iso))
    } else {
        Err(Error::IsoInconclusive("matched summands did not assemble to an isomorphism".into()))
    }
}

pub fn is_isomorphic<F: Field>(m: &FDModule<F>, n: &FDModule<F>) -> Result<bool> {
    Ok(find_iso(m, n)?.is_some())
}
