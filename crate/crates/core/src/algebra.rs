//! Finite-dimensional bound quiver algebras `kQ/I`.
//!
//! Paths compose left to right: `[a, b]` is `a` followed by `b`. The path
//! space `A(x, y)` is spanned by paths from `x` to `y` modulo the ideal
//! generated by the relations. Every path space gets a basis of
//! representative paths (shortest first) together with the coordinates of
//! every path of length at most the nilpotency bound.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;

/// A path as a sequence of arrow indices.
pub type Path = Vec<usize>;

/// One term `coeff * path` of a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term<E> {
    pub coeff: E,
    pub path: Path,
}

/// A linear combination of parallel paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation<E> {
    pub terms: Vec<Term<E>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverArrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone)]
struct PathSpace<E> {
    basis: Vec<Path>,
    coords: HashMap<Path, Vec<E>>,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(2);

#[derive(Debug)]
pub struct Algebra<F: Field> {
    id: u64,
    field: F,
    vertices: Vec<String>,
    arrows: Vec<QuiverArrow>,
    relations: Vec<Relation<F::Elem>>,
    nilbound: usize,
    spaces: HashMap<(usize, usize), PathSpace<F::Elem>>,
    out_arrows: Vec<Vec<usize>>,
    in_arrows: Vec<Vec<usize>>,
    proj_complete: Vec<bool>,
    inj_complete: Vec<bool>,
    opposite: OnceLock<Arc<Algebra<F>>>,
    back: Weak<Algebra<F>>,
}

fn path_order(a: &Path, b: &Path) -> std::cmp::Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

impl<F: Field> Algebra<F> {
    /// Builds the algebra and checks that paths longer than `nilbound` vanish.
    pub fn new(
        field: F,
        vertices: Vec<String>,
        arrows: Vec<QuiverArrow>,
        relations: Vec<Relation<F::Elem>>,
        nilbound: usize,
    ) -> Result<Self> {
        let id = NEXT_ID.fetch_add(2, Ordering::Relaxed);
        Self::build(id, field, vertices, arrows, relations, nilbound, Weak::new())
    }

    fn build(
        id: u64,
        field: F,
        vertices: Vec<String>,
        arrows: Vec<QuiverArrow>,
        relations: Vec<Relation<F::Elem>>,
        nilbound: usize,
        back: Weak<Algebra<F>>,
    ) -> Result<Self> {
        let n = vertices.len();
        let mut out_arrows = vec![Vec::new(); n];
        let mut in_arrows = vec![Vec::new(); n];
        for (i, a) in arrows.iter().enumerate() {
            if a.src >= n || a.tgt >= n {
                return Err(Error::Schema(format!("arrow {} has an unknown endpoint", a.name)));
            }
            out_arrows[a.src].push(i);
            in_arrows[a.tgt].push(i);
        }
        let mut alg = Self {
            id,
            field,
            vertices,
            arrows,
            relations,
            nilbound,
            spaces: HashMap::new(),
            out_arrows,
            in_arrows,
            proj_complete: vec![true; n],
            inj_complete: vec![true; n],
            opposite: OnceLock::new(),
            back,
        };
        alg.spaces = alg.compute_spaces()?;
        Ok(alg)
    }

    /// Marks vertices whose indecomposable projective (resp. injective) is
    /// only a truncation of the true one.
    pub fn with_completeness(mut self, proj: Vec<bool>, inj: Vec<bool>) -> Self {
        assert_eq!(proj.len(), self.vertices.len());
        assert_eq!(inj.len(), self.vertices.len());
        self.proj_complete = proj;
        self.inj_complete = inj;
        self
    }

    /// A copy under a fresh identity in which every vertex counts as complete.
    pub fn fully_complete(&self) -> Self {
        let n = self.vertices.len();
        Self {
            id: NEXT_ID.fetch_add(2, Ordering::Relaxed),
            field: self.field.clone(),
            vertices: self.vertices.clone(),
            arrows: self.arrows.clone(),
            relations: self.relations.clone(),
            nilbound: self.nilbound,
            spaces: self.spaces.clone(),
            out_arrows: self.out_arrows.clone(),
            in_arrows: self.in_arrows.clone(),
            proj_complete: vec![true; n],
            inj_complete: vec![true; n],
            opposite: OnceLock::new(),
            back: Weak::new(),
        }
    }

    pub(crate) fn paths_upto(&self, len: usize) -> HashMap<(usize, usize), Vec<Path>> {
        let mut by_pair: HashMap<(usize, usize), Vec<Path>> = HashMap::new();
        for x in 0..self.vertices.len() {
            let mut frontier: Vec<(usize, Path)> = vec![(x, Vec::new())];
            by_pair.entry((x, x)).or_default().push(Vec::new());
            for _ in 0..len {
                let mut next = Vec::new();
                for (end, p) in &frontier {
                    for &a in &self.out_arrows[*end] {
                        let mut q = p.clone();
                        q.push(a);
                        let t = self.arrows[a].tgt;
                        by_pair.entry((x, t)).or_default().push(q.clone());
                        next.push((t, q));
                    }
                }
                frontier = next;
            }
        }
        by_pair
    }

    fn compute_spaces(&self) -> Result<HashMap<(usize, usize), PathSpace<F::Elem>>> {
        let f = &self.field;
        let ell = self.nilbound;
        let mut by_pair = self.paths_upto(ell + 1);
        for paths in by_pair.values_mut() {
            paths.sort_by(path_order);
        }
        let rel_min: Vec<usize> =
            self.relations.iter().map(|r| r.terms.iter().map(|t| t.path.len()).min().unwrap_or(usize::MAX)).collect();
        let rel_ends: Vec<Option<(usize, usize)>> = self
            .relations
            .iter()
            .map(|r| r.terms.first().map(|t| (self.path_source(&t.path), self.path_target(&t.path))))
            .collect();
        let empty = Vec::new();
        let mut spaces = HashMap::new();
        for (&(x, y), paths) in &by_pair {
            let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut rows: Vec<Vec<F::Elem>> = Vec::new();
            for (ri, rel) in self.relations.iter().enumerate() {
                let Some((s, t)) = rel_ends[ri] else { continue };
                if rel_min[ri] > ell + 1 {
                    continue;
                }
                for p in by_pair.get(&(x, s)).unwrap_or(&empty) {
                    if p.len() + rel_min[ri] > ell + 1 {
                        continue;
                    }
                    for q in by_pair.get(&(t, y)).unwrap_or(&empty) {
                        if p.len() + q.len() + rel_min[ri] > ell + 1 {
                            continue;
                        }
                        let mut row = vec![f.zero(); paths.len()];
                        for term in &rel.terms {
                            let len = p.len() + term.path.len() + q.len();
                            if len > ell + 1 {
                                continue;
                            }
                            let mut full = p.clone();
                            full.extend(&term.path);
                            full.extend(q);
                            let c = index[&full];
                            row[c] = f.add(&row[c], &term.coeff);
                        }
                        rows.push(row);
                    }
                }
            }
            let w = Mat::from_rows(f, paths.len(), rows);
            // paths of length ell+1 come first in the column order
            let top: Vec<usize> = (0..paths.len()).filter(|&c| paths[c].len() == ell + 1).collect();
            if !top.is_empty() {
                let mut units = Mat::zeros(f, top.len(), paths.len());
                for (i, &c) in top.iter().enumerate() {
                    units.set(i, c, f.one());
                }
                if w.vstack(&units).rank() != w.rank() {
                    return Err(Error::NotLocallyBounded(format!(
                        "paths of length {} from {} to {} do not vanish",
                        ell + 1,
                        self.vertices[x],
                        self.vertices[y]
                    )));
                }
            }
            let low: Vec<usize> = (0..paths.len()).filter(|&c| paths[c].len() <= ell).collect();
            let low_paths: Vec<Path> = low.iter().map(|&c| paths[c].clone()).collect();
            let (r, pivots) = w.select_cols(&low).rref();
            let free: Vec<usize> = (0..low.len()).filter(|c| !pivots.contains(c)).collect();
            // basis ordered shortest first
            let mut order: Vec<usize> = (0..free.len()).collect();
            order.sort_by(|&a, &b| {
                let (pa, pb) = (&low_paths[free[a]], &low_paths[free[b]]);
                pa.len().cmp(&pb.len()).then_with(|| pa.cmp(pb))
            });
            let mut slot = vec![0; free.len()];
            for (pos, &k) in order.iter().enumerate() {
                slot[k] = pos;
            }
            let basis: Vec<Path> = order.iter().map(|&k| low_paths[free[k]].clone()).collect();
            let mut coords = HashMap::new();
            for (c, p) in low_paths.iter().enumerate() {
                let mut v = vec![f.zero(); free.len()];
                if let Some(k) = free.iter().position(|&fc| fc == c) {
                    v[slot[k]] = f.one();
                } else {
                    let i = pivots.iter().position(|&pc| pc == c).expect("pivot column");
                    for (k, &fc) in free.iter().enumerate() {
                        v[slot[k]] = f.neg(r.get(i, fc));
                    }
                }
                coords.insert(p.clone(), v);
            }
            if !basis.is_empty() {
                spaces.insert((x, y), PathSpace { basis, coords });
            }
        }
        Ok(spaces)
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrows(&self) -> &[QuiverArrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &QuiverArrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out_arrows[v]
    }

    pub fn in_arrows(&self, v: usize) -> &[usize] {
        &self.in_arrows[v]
    }

    pub fn relations(&self) -> &[Relation<F::Elem>] {
        &self.relations
    }

    pub fn nilbound(&self) -> usize {
        self.nilbound
    }

    pub fn proj_complete(&self, v: usize) -> bool {
        self.proj_complete[v]
    }

    pub fn inj_complete(&self, v: usize) -> bool {
        self.inj_complete[v]
    }

    pub fn path_source(&self, p: &Path) -> usize {
        self.arrows[p[0]].src
    }

    pub fn path_target(&self, p: &Path) -> usize {
        self.arrows[*p.last().expect("nonempty path")].tgt
    }

    /// Representative paths forming a basis of `A(x, y)`.
    pub fn path_basis(&self, x: usize, y: usize) -> &[Path] {
        self.spaces.get(&(x, y)).map_or(&[], |s| s.basis.as_slice())
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.path_basis(x, y).len()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.values().map(|s| s.basis.len()).sum()
    }

    /// Coordinates of a path from `x` to `y` in the basis of `A(x, y)`.
    pub fn reduce_path(&self, x: usize, y: usize, p: &Path) -> Vec<F::Elem> {
        let f = &self.field;
        match self.spaces.get(&(x, y)) {
            None => Vec::new(),
            Some(s) => {
                if p.len() > self.nilbound {
                    vec![f.zero(); s.basis.len()]
                } else {
                    s.coords[p].clone()
                }
            }
        }
    }

    /// Product `a * b` for `a` in `A(x, y)` and `b` in `A(y, z)`.
    pub fn multiply(&self, x: usize, y: usize, z: usize, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim(x, z)];
        let (ba, bb) = (self.path_basis(x, y), self.path_basis(y, z));
        for (i, ca) in a.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if f.is_zero(cb) {
                    continue;
                }
                let mut p = ba[i].clone();
                p.extend(&bb[j]);
                let c = f.mul(ca, cb);
                for (o, r) in out.iter_mut().zip(self.reduce_path(x, z, &p)) {
                    *o = f.add(o, &f.mul(&c, &r));
                }
            }
        }
        out
    }

    /// Matrix of right multiplication by arrow `a: y -> z`, from `A(x, y)` to `A(x, z)`.
    pub fn right_arrow_matrix(&self, x: usize, a: usize) -> Mat<F> {
        let QuiverArrow { src: y, tgt: z, .. } = self.arrows[a];
        let basis = self.path_basis(x, y);
        let rows = basis
            .iter()
            .map(|b| {
                let mut p = b.clone();
                p.push(a);
                self.reduce_path(x, z, &p)
            })
            .collect();
        Mat::from_rows(&self.field, self.dim(x, z), rows)
    }

    /// Expresses `a` in `A(x, y)` as an element of the opposite algebra's `A^op(y, x)`.
    pub fn to_opposite(self: &Arc<Self>, x: usize, y: usize, a: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let op = self.opposite();
        let mut out = vec![f.zero(); op.dim(y, x)];
        for (c, p) in a.iter().zip(self.path_basis(x, y)) {
            if f.is_zero(c) {
                continue;
            }
            let rev: Path = p.iter().rev().copied().collect();
            for (o, r) in out.iter_mut().zip(op.reduce_path(y, x, &rev)) {
                *o = f.add(o, &f.mul(c, &r));
            }
        }
        out
    }

    /// The opposite algebra (arrows and paths reversed); `op(op(A))` is `A` itself.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if let Some(orig) = self.back.upgrade() {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let arrows =
                    self.arrows.iter().map(|a| QuiverArrow { name: a.name.clone(), src: a.tgt, tgt: a.src }).collect();
                let relations = self
                    .relations
                    .iter()
                    .map(|r| Relation {
                        terms: r
                            .terms
                            .iter()
                            .map(|t| Term { coeff: t.coeff.clone(), path: t.path.iter().rev().copied().collect() })
                            .collect(),
                    })
                    .collect();
                let op = Self::build(
                    self.id ^ 1,
                    self.field.clone(),
                    self.vertices.clone(),
                    arrows,
                    relations,
                    self.nilbound,
                    Arc::downgrade(self),
                )
                .expect("opposite of a valid algebra is valid");
                Arc::new(op.with_completeness(self.inj_complete.clone(), self.proj_complete.clone()))
            })
            .clone()
    }
}
