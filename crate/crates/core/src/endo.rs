//! The endomorphism category of a finite subcategory `U`, presented as a
//! quiver with relations, and the functor `Phi(X) = Hom(-, X)|_U`.
//!
//! Vertex `i` stands for `U_i`; a morphism `f: U_i -> U_j` becomes an arrow
//! `j -> i`, so paths from `x` to `y` correspond to `Hom(U_y, U_x)` and
//! `Phi(U_i)` is the projective at `i`.

use std::sync::Arc;

use crate::algebra::{Algebra, Path, QuiverArrow, Relation, Term};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::{express_in_span, hom_basis, FDModule, ModMorphism};

#[derive(Debug, Clone)]
pub struct EndoCategory<F: Field> {
    pub objects: Vec<FDModule<F>>,
    /// `homs[i][j]` is a basis of `Hom(U_i, U_j)`.
    pub homs: Vec<Vec<Vec<ModMorphism<F>>>>,
    /// Arrow `k` is the irreducible morphism `arrow_maps[k]: U_tgt -> U_src`.
    pub arrow_maps: Vec<ModMorphism<F>>,
    pub algebra: Arc<Algebra<F>>,
}

/// Radical of `Hom(U_i, U_j)`: everything for `i != j`, the nilpotent part of a local ring otherwise.
fn radical_basis<F: Field>(basis: &[ModMorphism<F>], same: bool) -> Result<Vec<ModMorphism<F>>> {
    if !same {
        return Ok(basis.to_vec());
    }
    let m = &basis[0].src().clone();
    let f = m.field();
    let d = m.total_dim();
    let dinv = f
        .inv(&f.from_i64(d as i64))
        .ok_or_else(|| Error::InvalidArgument("module dimension is divisible by the characteristic".into()))?;
    let id = ModMorphism::identity(m);
    let mut out = Vec::new();
    for b in basis {
        let bm = b.block_matrix();
        let mut tr = f.zero();
        for k in 0..d {
            tr = f.add(&tr, bm.get(k, k));
        }
        let r = b.sub(&id.scale(&f.mul(&tr, &dinv)));
        if !r.block_matrix().pow(d.max(1)).is_zero() {
            return Err(Error::InvalidArgument(
                "endomorphism ring is not split local; the endomorphism category is not basic over the field".into(),
            ));
        }
        out.push(r);
    }
    let rows: Vec<Vec<F::Elem>> = out.iter().map(|r| r.flatten()).collect();
    let width = rows.first().map_or(0, |r| r.len());
    let rank = Mat::from_rows(f, width, rows).rank();
    if rank + 1 != basis.len() {
        return Err(Error::InvalidArgument("endomorphism ring modulo its radical is not the field".into()));
    }
    let mut kept: Vec<ModMorphism<F>> = Vec::new();
    for r in out {
        if express_in_span(&kept, &r)?.is_none() {
            kept.push(r);
        }
    }
    Ok(kept)
}

fn span_rank<F: Field>(f: &F, ms: &[ModMorphism<F>]) -> usize {
    if ms.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<F::Elem>> = ms.iter().map(|r| r.flatten()).collect();
    Mat::from_rows(f, rows[0].len(), rows).rank()
}

impl<F: Field> EndoCategory<F> {
    pub fn new(objects: &[FDModule<F>]) -> Result<Self> {
        Self::build(objects, None)
    }

    /// As `new`, with the objects flagged `false` treated as truncated: their
    /// projectives and injectives over the endomorphism category are not trusted.
    pub fn with_completeness(objects: &[FDModule<F>], complete: Vec<bool>) -> Result<Self> {
        if complete.len() != objects.len() {
            return Err(Error::InvalidArgument("one completeness flag per object".into()));
        }
        Self::build(objects, Some(complete))
    }

    fn build(objects: &[FDModule<F>], complete: Option<Vec<bool>>) -> Result<Self> {
        let k = objects.len();
        if k == 0 {
            return Err(Error::InvalidArgument("the endomorphism category needs at least one object".into()));
        }
        let f = objects[0].field().clone();
        let mut homs = vec![vec![Vec::new(); k]; k];
        let mut rads = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for j in 0..k {
                homs[i][j] = hom_basis(&objects[i], &objects[j])?;
                rads[i][j] = if homs[i][j].is_empty() { Vec::new() } else { radical_basis(&homs[i][j], i == j)? };
            }
        }
        if (0..k).any(|i| homs[i][i].is_empty()) {
            return Err(Error::InvalidArgument("objects must be nonzero".into()));
        }
        // arrows: a complement of rad^2 in rad for each pair
        let mut arrows = Vec::new();
        let mut arrow_maps: Vec<ModMorphism<F>> = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let mut sq: Vec<ModMorphism<F>> = Vec::new();
                for m in 0..k {
                    for r in &rads[i][m] {
                        for s in &rads[m][j] {
                            sq.push(r.then(s));
                        }
                    }
                }
                let mut acc = sq.clone();
                let mut rank = span_rank(&f, &acc);
                for r in &rads[i][j] {
                    acc.push(r.clone());
                    let next = span_rank(&f, &acc);
                    if next > rank {
                        rank = next;
                        arrows.push(QuiverArrow {
                            name: format!("u{}_{}_{}", i + 1, j + 1, arrow_maps.len() + 1),
                            src: j,
                            tgt: i,
                        });
                        arrow_maps.push(r.clone());
                    } else {
                        acc.pop();
                    }
                }
            }
        }
        let names: Vec<String> = (1..=k).map(|i| format!("U{i}")).collect();
        let (relations, nilbound) = Self::relations(&f, k, &arrows, &arrow_maps, &homs)?;
        let mut algebra = Algebra::new(f, names, arrows, relations, nilbound)?;
        if let Some(c) = complete {
            algebra = algebra.with_completeness(c.clone(), c);
        }
        let algebra = Arc::new(algebra);
        let endo = Self { objects: objects.to_vec(), homs, arrow_maps, algebra };
        for i in 0..k {
            for j in 0..k {
                if endo.algebra.dim(j, i) != endo.homs[i][j].len() {
                    return Err(Error::InvalidArgument("arrows do not generate the endomorphism category".into()));
                }
            }
        }
        Ok(endo)
    }

    /// The morphism `U_y -> U_x` of a path from `x` to `y`.
    fn evaluate(maps: &[ModMorphism<F>], p: &Path) -> ModMorphism<F> {
        let mut acc = maps[p[0]].clone();
        for &a in &p[1..] {
            acc = maps[a].then(&acc);
        }
        acc
    }

    #[allow(clippy::type_complexity)]
    fn relations(
        f: &F,
        k: usize,
        arrows: &[QuiverArrow],
        maps: &[ModMorphism<F>],
        homs: &[Vec<Vec<ModMorphism<F>>>],
    ) -> Result<(Vec<Relation<F::Elem>>, usize)> {
        // paths by length; each entry (src, tgt, path)
        let mut layers: Vec<Vec<(usize, usize, Path)>> = vec![Vec::new()];
        layers.push(arrows.iter().enumerate().map(|(a, arr)| (arr.src, arr.tgt, vec![a])).collect());
        let cap: usize = homs.iter().flatten().map(|h| h.len()).sum::<usize>() + 1;
        let mut longest = 1;
        loop {
            let last = layers.last().expect("nonempty");
            let mut next = Vec::new();
            let mut nonzero = false;
            for (s, t, p) in last {
                // a path that is already zero stays zero
                if p.len() > 1 && Self::evaluate(maps, p).is_zero() {
                    continue;
                }
                for (a, arr) in arrows.iter().enumerate() {
                    if arr.src == *t {
                        let mut q = p.clone();
                        q.push(a);
                        if !Self::evaluate(maps, &q).is_zero() {
                            nonzero = true;
                        }
                        next.push((*s, arr.tgt, q));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            if !nonzero {
                layers.push(next);
                break;
            }
            longest = layers.len();
            layers.push(next);
            if layers.len() > cap {
                return Err(Error::InvalidArgument("radical of the endomorphism category is not nilpotent".into()));
            }
        }
        let mut relations = Vec::new();
        for x in 0..k {
            for y in 0..k {
                let paths: Vec<&Path> =
                    layers.iter().skip(2).flatten().filter(|(s, t, _)| *s == x && *t == y).map(|(_, _, p)| p).collect();
                if paths.is_empty() {
                    continue;
                }
                let values: Vec<Vec<F::Elem>> = paths
                    .iter()
                    .map(|p| {
                        let g = Self::evaluate(maps, p);
                        express_in_span(&homs[y][x], &g).map(|c| c.expect("paths land in the hom space"))
                    })
                    .collect::<Result<_>>()?;
                let width = homs[y][x].len();
                let m = Mat::from_rows(f, width, values);
                let kernel = m.left_kernel();
                for r in 0..kernel.rows() {
                    let terms: Vec<Term<F::Elem>> = (0..paths.len())
                        .filter(|&c| !f.is_zero(kernel.get(r, c)))
                        .map(|c| Term { coeff: kernel.get(r, c).clone(), path: paths[c].clone() })
                        .collect();
                    relations.push(Relation { terms });
                }
            }
        }
        Ok((relations, longest))
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// `Phi(X)(i) = Hom(U_i, X)`, arrows acting by precomposition.
    pub fn phi(&self, x: &FDModule<F>) -> Result<FDModule<F>> {
        let bases: Vec<Vec<ModMorphism<F>>> = self.objects.iter().map(|u| hom_basis(u, x)).collect::<Result<_>>()?;
        let f = x.field();
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let mut maps = Vec::new();
        for (a, arr) in self.algebra.arrows().iter().enumerate() {
            // arrow j -> i for g: U_i -> U_j sends phi in Hom(U_j, X) to g then phi
            let g = &self.arrow_maps[a];
            let rows = bases[arr.src]
                .iter()
                .map(|phi| {
                    let c = g.then(phi);
                    express_in_span(&bases[arr.tgt], &c).map(|v| v.expect("composite lies in the hom space"))
                })
                .collect::<Result<Vec<_>>>()?;
            maps.push(Mat::from_rows(f, dims[arr.tgt], rows));
        }
        FDModule::new(self.algebra.clone(), dims, maps)
    }
}
