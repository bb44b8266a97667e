//! Radical, top, socle, projective covers and injective envelopes.

use crate::error::Result;
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::{from_projective_sum, projective_sum, quotient, submodule, FDModule, ModMorphism};

/// A projective cover `P -> M` together with the generators it sends to `M`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover<F: Field> {
    /// Vertex of each indecomposable summand of `P`, in order.
    pub vertices: Vec<usize>,
    /// Image in `M(x_i)` of the generator of the `i`-th summand.
    pub generators: Vec<Vec<F::Elem>>,
    pub map: ModMorphism<F>,
}

/// An injective envelope `M -> I`; `vertices` lists the socle vertices of `I`.
#[derive(Debug, Clone)]
pub struct InjectiveEnvelope<F: Field> {
    pub vertices: Vec<usize>,
    pub map: ModMorphism<F>,
}

fn radical_bases<F: Field>(m: &FDModule<F>) -> Vec<Mat<F>> {
    let alg = m.algebra();
    let f = m.field();
    (0..alg.n_vertices())
        .map(|v| {
            let mut acc = Mat::zeros(f, 0, m.dim(v));
            for &a in alg.in_arrows(v) {
                acc = acc.vstack(m.map(a));
            }
            acc.row_basis()
        })
        .collect()
}

pub fn radical<F: Field>(m: &FDModule<F>) -> (FDModule<F>, ModMorphism<F>) {
    submodule(m, radical_bases(m)).expect("the radical is a submodule")
}

pub fn top<F: Field>(m: &FDModule<F>) -> (FDModule<F>, ModMorphism<F>) {
    quotient(m, &radical_bases(m))
}

pub fn socle<F: Field>(m: &FDModule<F>) -> (FDModule<F>, ModMorphism<F>) {
    let alg = m.algebra();
    let f = m.field();
    let bases = (0..alg.n_vertices())
        .map(|v| {
            let mut acc = Mat::zeros(f, m.dim(v), 0);
            for &a in alg.out_arrows(v) {
                acc = acc.hstack(m.map(a));
            }
            if acc.cols() == 0 {
                Mat::identity(f, m.dim(v))
            } else {
                acc.left_kernel()
            }
        })
        .collect();
    submodule(m, bases).expect("the socle is a submodule")
}

pub fn projective_cover<F: Field>(m: &FDModule<F>) -> Result<ProjectiveCover<F>> {
    let mut vertices = Vec::new();
    let mut generators = Vec::new();
    for (v, rad) in radical_bases(m).into_iter().enumerate() {
        let comp = rad.complement_rows();
        for r in 0..comp.rows() {
            vertices.push(v);
            generators.push(comp.row_vec(r));
        }
    }
    let p = projective_sum(m.algebra(), &vertices)?;
    let map = from_projective_sum(&p, &vertices, m, &generators);
    Ok(ProjectiveCover { vertices, generators, map })
}

pub fn injective_envelope<F: Field>(m: &FDModule<F>) -> Result<InjectiveEnvelope<F>> {
    let cover = projective_cover(&m.dual())?;
    Ok(InjectiveEnvelope { vertices: cover.vertices, map: cover.map.dual() })
}

/// Projective modules are exactly those whose cover is an isomorphism.
pub fn is_projective<F: Field>(m: &FDModule<F>) -> Result<bool> {
    let cover = projective_cover(m)?;
    Ok(cover.map.tgt().total_dim() == cover.map.src().total_dim())
}

pub fn is_injective<F: Field>(m: &FDModule<F>) -> Result<bool> {
    is_projective(&m.dual())
}
