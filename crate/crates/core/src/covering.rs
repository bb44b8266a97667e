//! Galois coverings given by a grading: finite windows of the smash cover
//! and orbit categories of free finite actions.
//!
//! The cover of a presentation graded by `G` has vertices `(v, g)` and arrows
//! `(a, g): (src a, g) -> (tgt a, g + weight a)`. A window keeps the shifts in
//! a box. Vertices whose projective or injective would leave the box are
//! marked incomplete, so computations that need them fail with
//! `WindowTooSmall` instead of returning truncated answers.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, Path, QuiverArrow, Relation, Term};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{Group, GroupElem, Window};
use crate::presentation::{GradedArrow, GradedQuiverPresentation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoveringVertex {
    pub base: usize,
    pub shift: GroupElem,
}

impl fmt::Display for CoveringVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.base, self.shift)
    }
}

/// The part of the smash cover lying over a window.
#[derive(Debug, Clone)]
pub struct Covering<F: Field> {
    base: GradedQuiverPresentation<F>,
    window: Window,
    vertices: Vec<CoveringVertex>,
    index: HashMap<CoveringVertex, usize>,
    /// Base arrow and source shift of each window arrow.
    arrows: Vec<(usize, GroupElem)>,
    arrow_lookup: HashMap<(usize, GroupElem), usize>,
    algebra: Arc<Algebra<F>>,
    standalone: Arc<Algebra<F>>,
}

fn check_convex<F: Field>(base: &GradedQuiverPresentation<F>, window: &Window) -> Result<()> {
    let Group::FreeAbelian { .. } = window.group else { return Ok(()) };
    let alg = base.algebra();
    let mut paths: Vec<Path> = alg.paths_upto(base.nilbound()).into_values().flatten().collect();
    for r in base.relations() {
        paths.extend(r.terms.iter().map(|t| t.path.clone()));
    }
    let w = window.half_width;
    for p in paths {
        let total = base.path_weight(&p);
        if total.0.iter().any(|c| c.abs() > 2 * w) {
            continue;
        }
        let mut prefix = base.group().identity();
        for &a in &p {
            prefix = base.group().add(&prefix, &base.arrows()[a].weight);
            for (c, q) in prefix.0.iter().enumerate() {
                let (lo, hi) = (total.0[c].min(0), total.0[c].max(0));
                if *q < lo || *q > hi {
                    return Err(Error::WindowTooSmall(format!(
                        "the grading is not monotone along a path through arrow {}; no box is path-convex",
                        base.arrows()[a].id
                    )));
                }
            }
        }
    }
    Ok(())
}

impl<F: Field> Covering<F> {
    /// Builds the window `[-w..w]^r` (all of `G` for cyclic groups) of the smash cover.
    pub fn new(base: &GradedQuiverPresentation<F>, half_width: i64) -> Result<Self> {
        let window = Window::symmetric(base.group(), half_width)?;
        Self::with_window(base, window)
    }

    pub fn with_window(base: &GradedQuiverPresentation<F>, window: Window) -> Result<Self> {
        if window.group != base.group() {
            return Err(Error::InvalidArgument("window and grading use different groups".into()));
        }
        check_convex(base, &window)?;
        let group = base.group();
        let balg = base.algebra();
        let nv = base.vertices().len();
        let mut vertices = Vec::new();
        let mut index = HashMap::new();
        for g in window.elements() {
            for v in 0..nv {
                let cv = CoveringVertex { base: v, shift: g.clone() };
                index.insert(cv.clone(), vertices.len());
                vertices.push(cv);
            }
        }
        let mut arrows = Vec::new();
        let mut qarrows = Vec::new();
        let mut arrow_index = HashMap::new();
        for g in window.elements() {
            for (a, arrow) in base.arrows().iter().enumerate() {
                let t = group.add(g, &arrow.weight);
                if !window.contains(&t) {
                    continue;
                }
                let src = index[&CoveringVertex { base: arrow.src, shift: g.clone() }];
                let tgt = index[&CoveringVertex { base: arrow.tgt, shift: group.normalize(t) }];
                arrow_index.insert((a, g.clone()), arrows.len());
                arrows.push((a, g.clone()));
                qarrows.push(QuiverArrow { name: format!("{}@{}", arrow.id, g), src, tgt });
            }
        }
        let lift = |p: &Path, start: &GroupElem| -> Option<Path> {
            let mut g = start.clone();
            let mut out = Vec::with_capacity(p.len());
            for &a in p {
                out.push(*arrow_index.get(&(a, g.clone()))?);
                g = group.add(&g, &base.arrows()[a].weight);
            }
            Some(out)
        };
        let mut relations = Vec::new();
        for r in base.relations() {
            let Some(first) = r.terms.first() else { continue };
            let weight = base.path_weight(&first.path);
            for g in window.elements() {
                if !window.contains(&group.add(g, &weight)) {
                    continue;
                }
                let terms: Option<Vec<Term<F::Elem>>> = r
                    .terms
                    .iter()
                    .map(|t| lift(&t.path, g).map(|path| Term { coeff: t.coeff.clone(), path }))
                    .collect();
                let terms = terms
                    .ok_or_else(|| Error::WindowTooSmall("a relation with both ends in the window leaves it".into()))?;
                relations.push(Relation { terms });
            }
        }
        let names = vertices.iter().map(|cv| format!("{}@{}", base.vertices()[cv.base], cv.shift)).collect();
        let alg = Algebra::new(base.field().clone(), names, qarrows, relations, base.nilbound())?;
        let mut proj = vec![true; vertices.len()];
        let mut inj = vec![true; vertices.len()];
        for (i, cv) in vertices.iter().enumerate() {
            for w in 0..nv {
                for p in balg.path_basis(cv.base, w) {
                    if !window.contains(&group.add(&cv.shift, &base.path_weight(p))) {
                        proj[i] = false;
                    }
                }
                for p in balg.path_basis(w, cv.base) {
                    if !window.contains(&group.sub(&cv.shift, &base.path_weight(p))) {
                        inj[i] = false;
                    }
                }
            }
        }
        let standalone = Arc::new(alg.fully_complete());
        let algebra = Arc::new(alg.with_completeness(proj, inj));
        Ok(Self { base: base.clone(), window, vertices, index, arrows, arrow_lookup: arrow_index, algebra, standalone })
    }

    pub fn base(&self) -> &GradedQuiverPresentation<F> {
        &self.base
    }

    pub fn group(&self) -> Group {
        self.base.group()
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// The window algebra with honest completeness flags.
    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    /// The same quiver with relations as a finite-dimensional algebra in its own right.
    pub fn standalone(&self) -> &Arc<Algebra<F>> {
        &self.standalone
    }

    pub fn vertices(&self) -> &[CoveringVertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &CoveringVertex {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, base: usize, shift: &GroupElem) -> Option<usize> {
        let shift = self.group().normalize(shift.clone());
        self.index.get(&CoveringVertex { base, shift }).copied()
    }

    /// Base arrow and source shift of a window arrow.
    pub fn arrow_lift(&self, a: usize) -> (usize, &GroupElem) {
        (self.arrows[a].0, &self.arrows[a].1)
    }

    /// Window arrow over base arrow `a` starting at shift `g`.
    pub fn arrow_index(&self, a: usize, g: &GroupElem) -> Option<usize> {
        self.arrow_lookup.get(&(a, self.group().normalize(g.clone()))).copied()
    }

    /// Vertices with shift the identity.
    pub fn fundamental_domain(&self) -> Vec<usize> {
        let e = self.group().identity();
        (0..self.base.vertices().len()).map(|v| self.vertex_index(v, &e).expect("identity in window")).collect()
    }

    /// The vertex `a . x`, if it lies in the window.
    pub fn shift_vertex(&self, i: usize, a: &GroupElem) -> Option<usize> {
        let cv = &self.vertices[i];
        let shift = self.group().add(&cv.shift, a);
        if !self.window.contains(&shift) {
            return None;
        }
        self.vertex_index(cv.base, &shift)
    }

    /// The shift action is free on window vertices.
    pub fn is_free(&self) -> bool {
        let group = self.group();
        self.window
            .elements()
            .iter()
            .filter(|g| !group.is_identity(g))
            .all(|g| (0..self.vertices.len()).all(|i| self.shift_vertex(i, g) != Some(i)))
    }
}

/// A cyclic group acting on a quiver with relations through a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAction {
    pub order: u32,
    /// Image of each vertex under the generator.
    pub vertex_perm: Vec<usize>,
    /// Image of each arrow under the generator.
    pub arrow_perm: Vec<usize>,
}

impl FiniteAction {
    /// The shift by `1` on a covering graded by `Z/m`.
    pub fn shift<F: Field>(cover: &Covering<F>) -> Result<Self> {
        let Group::Cyclic { order } = cover.group() else {
            return Err(Error::InvalidArgument("the shift action is finite only for cyclic gradings".into()));
        };
        let one = GroupElem(vec![1]);
        let vertex_perm = (0..cover.vertices.len()).map(|i| cover.shift_vertex(i, &one).expect("cyclic")).collect();
        let arrow_perm = cover
            .arrows
            .iter()
            .map(|(a, g)| cover.arrow_index(*a, &cover.group().add(g, &one)).expect("cyclic"))
            .collect();
        Ok(Self { order, vertex_perm, arrow_perm })
    }

    fn power_vertex(&self, v: usize, k: u32) -> usize {
        (0..k).fold(v, |x, _| self.vertex_perm[x])
    }
}

/// The orbit category `C/G` of a free action, graded by `Z/m` so that its
/// smash cover is `C` again.
pub fn orbit_of_finite_action<F: Field>(
    c: &GradedQuiverPresentation<F>,
    action: &FiniteAction,
) -> Result<GradedQuiverPresentation<F>> {
    let alg = c.algebra();
    let nv = alg.n_vertices();
    let na = alg.arrows().len();
    if action.vertex_perm.len() != nv || action.arrow_perm.len() != na || action.order == 0 {
        return Err(Error::InvalidArgument("action does not match the quiver".into()));
    }
    for (a, arrow) in alg.arrows().iter().enumerate() {
        let b = alg.arrow(action.arrow_perm[a]);
        if b.src != action.vertex_perm[arrow.src] || b.tgt != action.vertex_perm[arrow.tgt] {
            return Err(Error::InvalidArgument(format!("generator does not map arrow {} to an arrow", arrow.name)));
        }
    }
    for v in 0..nv {
        if action.power_vertex(v, action.order) != v {
            return Err(Error::InvalidArgument("generator order does not divide the group order".into()));
        }
        for k in 1..action.order {
            if action.power_vertex(v, k) == v {
                return Err(Error::NotFreeAction(format!(
                    "vertex {} is fixed by a non-identity element",
                    alg.vertex_name(v)
                )));
            }
        }
    }
    // the generator must preserve the relation ideal
    for r in alg.relations() {
        let Some(first) = r.terms.first() else { continue };
        let x = action.vertex_perm[alg.path_source(&first.path)];
        let y = action.vertex_perm[alg.path_target(&first.path)];
        let f = alg.field();
        let mut acc = vec![f.zero(); alg.dim(x, y)];
        for t in &r.terms {
            let image: Path = t.path.iter().map(|&a| action.arrow_perm[a]).collect();
            for (o, c) in acc.iter_mut().zip(alg.reduce_path(x, y, &image)) {
                *o = f.add(o, &f.mul(&t.coeff, &c));
            }
        }
        if acc.iter().any(|e| !f.is_zero(e)) {
            return Err(Error::InvalidArgument("the action does not permute the relations".into()));
        }
    }
    // orbit representatives and the exponent reaching each vertex from its representative
    let mut rep = vec![usize::MAX; nv];
    let mut level = vec![0i64; nv];
    let mut orbit_vertices = Vec::new();
    for v in 0..nv {
        if rep[v] != usize::MAX {
            continue;
        }
        let o = orbit_vertices.len();
        orbit_vertices.push(alg.vertex_name(v).to_string());
        let mut x = v;
        for k in 0..action.order {
            rep[x] = o;
            level[x] = k as i64;
            x = action.vertex_perm[x];
        }
    }
    let group = Group::Cyclic { order: action.order };
    let mut arrow_orbit = vec![usize::MAX; na];
    let mut arrows = Vec::new();
    for a in 0..na {
        if arrow_orbit[a] != usize::MAX {
            continue;
        }
        let o = arrows.len();
        let mut b = a;
        for _ in 0..action.order {
            arrow_orbit[b] = o;
            b = action.arrow_perm[b];
        }
        let arrow = alg.arrow(a);
        let weight = group.element(vec![level[arrow.tgt] - level[arrow.src]])?;
        arrows.push(GradedArrow { id: arrow.name.clone(), src: rep[arrow.src], tgt: rep[arrow.tgt], weight });
    }
    let mut seen = HashSet::new();
    let mut relations = Vec::new();
    for r in alg.relations() {
        let terms: Vec<Term<F::Elem>> = r
            .terms
            .iter()
            .map(|t| Term { coeff: t.coeff.clone(), path: t.path.iter().map(|&a| arrow_orbit[a]).collect() })
            .collect();
        let key: Vec<(String, Path)> = terms.iter().map(|t| (t.coeff.to_string(), t.path.clone())).collect();
        if seen.insert(key) {
            relations.push(Relation { terms });
        }
    }
    GradedQuiverPresentation::new(c.field().clone(), group, orbit_vertices, arrows, relations, c.nilbound())
}

/// The finite window of a cyclic grading as a presentation in its own right.
pub fn cover_presentation<F: Field>(cover: &Covering<F>) -> Result<GradedQuiverPresentation<F>> {
    let alg = cover.algebra();
    let group = Group::trivial();
    let arrows = alg
        .arrows()
        .iter()
        .map(|a| GradedArrow { id: a.name.clone(), src: a.src, tgt: a.tgt, weight: group.identity() })
        .collect();
    GradedQuiverPresentation::new(
        alg.field().clone(),
        group,
        alg.vertex_names().to_vec(),
        arrows,
        alg.relations().to_vec(),
        alg.nilbound(),
    )
}
