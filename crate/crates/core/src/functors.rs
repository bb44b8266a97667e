//! Twist, push-down and pull-up along a covering window, and lifting of
//! morphisms between push-downs.

use std::collections::BTreeSet;

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::GroupElem;
use crate::homological::{ext_dim, min_proj_resolution};
use crate::linalg::Mat;
use crate::module::{express_in_span, hom_basis, FDModule, ModMorphism};

fn check_on_cover<F: Field>(cover: &Covering<F>, m: &FDModule<F>) -> Result<()> {
    let id = m.algebra().id();
    if id == cover.algebra().id() || id == cover.standalone().id() {
        Ok(())
    } else {
        Err(Error::CarrierMismatch("module is not over this covering window".into()))
    }
}

fn check_on_base<F: Field>(cover: &Covering<F>, m: &FDModule<F>) -> Result<()> {
    if m.algebra().id() == cover.base().algebra().id() {
        Ok(())
    } else {
        Err(Error::CarrierMismatch("module is not over the base algebra".into()))
    }
}

/// `^a M`, supported on the `a`-translate of the support of `M`.
pub fn twist<F: Field>(cover: &Covering<F>, m: &FDModule<F>, a: &GroupElem) -> Result<FDModule<F>> {
    check_on_cover(cover, m)?;
    let alg = m.algebra();
    let f = m.field();
    let nv = alg.n_vertices();
    let mut dims = vec![0; nv];
    for i in m.support() {
        let j = cover.shift_vertex(i, a).ok_or_else(|| {
            Error::WindowTooSmall(format!("twist by {a} moves vertex {} out of the window", alg.vertex_name(i)))
        })?;
        dims[j] = m.dim(i);
    }
    let group = cover.group();
    let mut maps: Vec<Mat<F>> = alg.arrows().iter().map(|arr| Mat::zeros(f, dims[arr.src], dims[arr.tgt])).collect();
    for (b, arr) in alg.arrows().iter().enumerate() {
        if m.dim(arr.src) == 0 || m.dim(arr.tgt) == 0 {
            continue;
        }
        let (base_arrow, g) = cover.arrow_lift(b);
        let target = cover.arrow_index(base_arrow, &group.add(g, a)).expect("endpoints are in the window");
        maps[target] = m.map(b).clone();
    }
    FDModule::new(alg.clone(), dims, maps)
}

/// Offsets of the blocks `(u, g)` inside `P_* M (u)`, in window order.
fn block_offsets<F: Field>(cover: &Covering<F>, m: &FDModule<F>) -> (Vec<usize>, Vec<usize>) {
    let nb = cover.base().vertices().len();
    let mut dims = vec![0; nb];
    let mut offsets = vec![0; cover.vertices().len()];
    for (i, cv) in cover.vertices().iter().enumerate() {
        offsets[i] = dims[cv.base];
        dims[cv.base] += m.dim(i);
    }
    (dims, offsets)
}

/// `P_* M (u) = sum of M(x) over x above u`.
pub fn push_down<F: Field>(cover: &Covering<F>, m: &FDModule<F>) -> Result<FDModule<F>> {
    check_on_cover(cover, m)?;
    let balg = cover.base().algebra().clone();
    let f = m.field();
    let (dims, offsets) = block_offsets(cover, m);
    let mut maps: Vec<Mat<F>> = balg.arrows().iter().map(|a| Mat::zeros(f, dims[a.src], dims[a.tgt])).collect();
    for (b, arr) in m.algebra().arrows().iter().enumerate() {
        let block = m.map(b);
        if block.rows() == 0 || block.cols() == 0 {
            continue;
        }
        let (base_arrow, _) = cover.arrow_lift(b);
        maps[base_arrow].set_block(offsets[arr.src], offsets[arr.tgt], block);
    }
    FDModule::new(balg, dims, maps)
}

/// `P_*` on morphisms, block diagonal over each fibre.
pub fn push_down_morphism<F: Field>(cover: &Covering<F>, g: &ModMorphism<F>) -> Result<ModMorphism<F>> {
    let src = push_down(cover, g.src())?;
    let tgt = push_down(cover, g.tgt())?;
    let (_, so) = block_offsets(cover, g.src());
    let (_, to) = block_offsets(cover, g.tgt());
    let f = src.field().clone();
    let mut mats: Vec<Mat<F>> = (0..src.dims().len()).map(|u| Mat::zeros(&f, src.dim(u), tgt.dim(u))).collect();
    for (i, cv) in cover.vertices().iter().enumerate() {
        let block = g.mat(i);
        if block.rows() > 0 && block.cols() > 0 {
            mats[cv.base].set_block(so[i], to[i], block);
        }
    }
    ModMorphism::new(src, tgt, mats)
}

/// The canonical isomorphism `P_*(^a Y) -> P_*(Y)`.
pub fn push_down_untwist<F: Field>(cover: &Covering<F>, y: &FDModule<F>, a: &GroupElem) -> Result<ModMorphism<F>> {
    let ty = twist(cover, y, a)?;
    let src = push_down(cover, &ty)?;
    let tgt = push_down(cover, y)?;
    let (_, so) = block_offsets(cover, &ty);
    let (_, to) = block_offsets(cover, y);
    let f = src.field().clone();
    let mut mats: Vec<Mat<F>> = (0..src.dims().len()).map(|u| Mat::zeros(&f, src.dim(u), tgt.dim(u))).collect();
    for i in y.support() {
        let j = cover.shift_vertex(i, a).expect("twist succeeded");
        let u = cover.vertex(i).base;
        mats[u].set_block(so[j], to[i], &Mat::identity(&f, y.dim(i)));
    }
    ModMorphism::new(src, tgt, mats)
}

/// A window truncation of a pull-up. Deliberately not an `FDModule`: for an
/// infinite group the true pull-up is infinite-dimensional.
#[derive(Debug, Clone)]
pub struct TruncatedModule<F: Field> {
    inner: FDModule<F>,
    pub truncated: bool,
}

impl<F: Field> TruncatedModule<F> {
    pub fn dims(&self) -> &[usize] {
        self.inner.dims()
    }

    pub fn total_dim(&self) -> usize {
        self.inner.total_dim()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.inner.to_json();
        v["truncated"] = serde_json::Value::Bool(self.truncated);
        v
    }

    /// The module itself, only when nothing was cut off.
    pub fn into_module(self) -> Option<FDModule<F>> {
        (!self.truncated).then_some(self.inner)
    }
}

/// `P^* N = N . P` restricted to the window.
pub fn pull_up<F: Field>(cover: &Covering<F>, n: &FDModule<F>) -> Result<TruncatedModule<F>> {
    check_on_base(cover, n)?;
    let alg = cover.algebra().clone();
    let dims: Vec<usize> = cover.vertices().iter().map(|cv| n.dim(cv.base)).collect();
    let maps = (0..alg.arrows().len()).map(|b| n.map(cover.arrow_lift(b).0).clone()).collect();
    let inner = FDModule::new(alg, dims, maps)?;
    Ok(TruncatedModule { inner, truncated: !cover.group().is_finite() })
}

/// Twists `a` for which `^a Y` meets `targets` (vertices of the window).
/// Hom and Ext from modules generated at `targets` vanish for every other twist.
pub fn contributing_twists<F: Field>(cover: &Covering<F>, targets: &[usize], y: &FDModule<F>) -> Vec<GroupElem> {
    let group = cover.group();
    let mut out = BTreeSet::new();
    for &x in targets {
        for yv in y.support() {
            let (cx, cy) = (cover.vertex(x), cover.vertex(yv));
            if cx.base == cy.base {
                out.insert(group.sub(&cx.shift, &cy.shift).0);
            }
        }
    }
    out.into_iter().map(GroupElem).collect()
}

/// Morphisms `f_a: X -> ^a Y` with `theta = sum_a P_*(f_a)`.
#[derive(Debug, Clone)]
pub struct LiftingFamily<F: Field> {
    pub pairs: Vec<(GroupElem, ModMorphism<F>)>,
    /// Number of twists examined; all others have no overlapping support.
    pub twists_examined: usize,
}

/// Assembles `sum_a P_*(f_a): P_* X -> P_* Y`.
pub fn assemble_lift<F: Field>(
    cover: &Covering<F>,
    x: &FDModule<F>,
    y: &FDModule<F>,
    family: &LiftingFamily<F>,
) -> Result<ModMorphism<F>> {
    let mut acc = ModMorphism::zero(&push_down(cover, x)?, &push_down(cover, y)?);
    for (a, g) in &family.pairs {
        let down = push_down_morphism(cover, g)?.then(&push_down_untwist(cover, y, a)?);
        acc = acc.add(&down);
    }
    Ok(acc)
}

struct TwistedHoms<F: Field> {
    twists: Vec<GroupElem>,
    bases: Vec<Vec<ModMorphism<F>>>,
    pushed: Vec<ModMorphism<F>>,
}

fn twisted_homs<F: Field>(cover: &Covering<F>, x: &FDModule<F>, y: &FDModule<F>) -> Result<TwistedHoms<F>> {
    let twists = contributing_twists(cover, &x.support(), y);
    let mut bases = Vec::new();
    let mut pushed = Vec::new();
    for a in &twists {
        let ty = twist(cover, y, a)?;
        let basis = hom_basis(x, &ty)?;
        let untwist = push_down_untwist(cover, y, a)?;
        for g in &basis {
            pushed.push(push_down_morphism(cover, g)?.then(&untwist));
        }
        bases.push(basis);
    }
    Ok(TwistedHoms { twists, bases, pushed })
}

/// Splits `theta: P_* X -> P_* Y` into twisted components.
pub fn lift_morphism<F: Field>(
    cover: &Covering<F>,
    x: &FDModule<F>,
    y: &FDModule<F>,
    theta: &ModMorphism<F>,
) -> Result<LiftingFamily<F>> {
    let th = twisted_homs(cover, x, y)?;
    let coeffs = express_in_span(&th.pushed, theta)?.expect("push-down is bijective on hom spaces");
    let mut pairs = Vec::new();
    let mut k = 0;
    for (a, basis) in th.twists.iter().zip(&th.bases) {
        let ty = twist(cover, y, a)?;
        let cs = &coeffs[k..k + basis.len()];
        k += basis.len();
        let g = ModMorphism::combination(x, &ty, basis, cs);
        if !g.is_zero() {
            pairs.push((a.clone(), g));
        }
    }
    Ok(LiftingFamily { pairs, twists_examined: th.twists.len() })
}

/// Both sides of `Hom(P_* X, P_* Y) = sum_a Hom(X, ^a Y)`.
pub fn hom_dims_across<F: Field>(cover: &Covering<F>, x: &FDModule<F>, y: &FDModule<F>) -> Result<(usize, usize)> {
    let down = hom_basis(&push_down(cover, x)?, &push_down(cover, y)?)?.len();
    let th = twisted_homs(cover, x, y)?;
    Ok((down, th.bases.iter().map(|b| b.len()).sum()))
}

/// Dimensions of `Ext^i(P_* X, P_* Y)` and `sum_a Ext^i(X, ^a Y)`, with the
/// number of twists that could contribute.
pub fn ext_dims_across<F: Field>(
    cover: &Covering<F>,
    x: &FDModule<F>,
    y: &FDModule<F>,
    i: usize,
) -> Result<(usize, usize, usize)> {
    let down = ext_dim(&push_down(cover, x)?, &push_down(cover, y)?, i)?;
    let res = min_proj_resolution(x, i + 1)?;
    let tops = res.vertices[i].clone();
    let twists = contributing_twists(cover, &tops, y);
    let mut up = 0;
    for a in &twists {
        up += ext_dim(x, &twist(cover, y, a)?, i)?;
    }
    Ok((down, up, twists.len()))
}
