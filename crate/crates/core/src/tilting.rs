//! Support tau_n-tilting pairs inside an n-cluster tilting subcategory, on
//! a base algebra or equivariantly on a covering.
//!
//! A pair is recorded by the indecomposable summands of `M` (orbit
//! representatives on a covering) and the base vertices of the projective
//! summands of `P`. Conditions quantified over the group become sums over
//! the twists that can contribute.

use serde_json::{json, Value};

use crate::covering::Covering;
use crate::decompose::indecomposable_summands;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::functors::push_down;
use crate::homological::tau_n;
use crate::module::{projective_at, FDModule};
use crate::precluster::{compute_z, describe, push_down_subcategory};
use crate::report::{Claim, VerificationReport};
use crate::subcategory::{Carrier, SubcategorySpec};
use crate::transfer::match_pushdowns;

/// Subsets examined by the pair enumeration.
pub const ENUMERATION_CAP: u64 = 1 << 20;

/// `U` equals both `(n-1)`-perpendicular categories inside an exhaustive pool.
pub fn is_n_cluster_tilting<F: Field>(
    c: &Carrier<'_, F>,
    u: &SubcategorySpec<F>,
    n: usize,
    pool: &[FDModule<F>],
) -> Result<bool> {
    let z = compute_z(c, u, pool, n)?;
    let mut inside = Vec::new();
    for (k, m) in pool.iter().enumerate() {
        if u.contains_indecomposable(c, m)? {
            inside.push(k);
        }
    }
    Ok(inside.len() == u.len() && z.left_indices == inside && z.right_indices == inside)
}

/// `Hom(M, ^a tau_n M) = 0` for every twist `a`.
pub fn is_g_tau_n_rigid<F: Field>(c: &Carrier<'_, F>, m: &FDModule<F>, n: usize) -> Result<bool> {
    Ok(c.hom_across(m, &tau_n(m, n)?)? == 0)
}

#[derive(Debug, Clone)]
pub struct TiltingPair<F: Field> {
    pub m: Vec<FDModule<F>>,
    /// Base vertices `x` with `P(-, x)` a summand of `P`.
    pub p: Vec<usize>,
}

impl<F: Field> TiltingPair<F> {
    pub fn to_json(&self) -> Value {
        json!({ "m": self.m.iter().map(|x| x.dims().to_vec()).collect::<Vec<_>>(), "p": self.p })
    }
}

/// An ambient n-cluster tilting subcategory with its rigidity tables.
#[derive(Debug, Clone)]
pub struct TiltingContext<'a, F: Field> {
    carrier: Carrier<'a, F>,
    pub n: usize,
    pub ambient: SubcategorySpec<F>,
    /// `rigid[x][y]`: `Hom(A_x, ^a tau_n A_y) = 0` for all `a`.
    rigid: Vec<Vec<bool>>,
    /// `proj_free[q][x]`: `Hom(P_q, ^a A_x) = 0` for all `a`.
    proj_free: Vec<Vec<bool>>,
}

/// Indices of a pair: summands of `M` in the ambient, and projective vertices.
pub type PairIndices = (Vec<usize>, Vec<usize>);

impl<'a, F: Field> TiltingContext<'a, F> {
    pub fn new(c: Carrier<'a, F>, ambient: SubcategorySpec<F>, n: usize, pool: &[FDModule<F>]) -> Result<Self> {
        if !is_n_cluster_tilting(&c, &ambient, n, pool)? {
            return Err(Error::AmbientNotClusterTilting(format!(
                "the ambient subcategory with {} generators is not {n}-cluster tilting",
                ambient.len()
            )));
        }
        let taus = ambient.generators.iter().map(|y| tau_n(y, n)).collect::<Result<Vec<_>>>()?;
        let rigid = ambient
            .generators
            .iter()
            .map(|x| taus.iter().map(|t| Ok(c.hom_across(x, t)? == 0)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let proj_free = c
            .projectives()?
            .iter()
            .map(|p| ambient.generators.iter().map(|x| Ok(c.hom_across(p, x)? == 0)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { carrier: c, n, ambient, rigid, proj_free })
    }

    pub fn carrier(&self) -> &Carrier<'a, F> {
        &self.carrier
    }

    pub fn n_projectives(&self) -> usize {
        self.proj_free.len()
    }

    /// Ambient indices of the indecomposable summands of the modules.
    pub fn indices(&self, ms: &[FDModule<F>]) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for m in ms {
            for (s, _) in indecomposable_summands(m)? {
                let k = self
                    .carrier
                    .orbit_index(&self.ambient.generators, &s)?
                    .ok_or_else(|| Error::InvalidArgument("a summand of M is not in the ambient subcategory".into()))?;
                if !out.contains(&k) {
                    out.push(k);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    fn pair_indices(&self, pair: &TiltingPair<F>) -> Result<PairIndices> {
        if let Some(&q) = pair.p.iter().find(|&&q| q >= self.n_projectives()) {
            return Err(Error::InvalidArgument(format!("no projective at base vertex {q}")));
        }
        let mut p = pair.p.clone();
        p.sort_unstable();
        p.dedup();
        Ok((self.indices(&pair.m)?, p))
    }

    pub fn rigid_indices(&self, ms: &[usize], ps: &[usize]) -> bool {
        ms.iter().all(|&x| ms.iter().all(|&y| self.rigid[x][y]))
            && ps.iter().all(|&q| ms.iter().all(|&x| self.proj_free[q][x]))
    }

    pub fn support_tilting_indices(&self, ms: &[usize], ps: &[usize]) -> bool {
        if !self.rigid_indices(ms, ps) {
            return false;
        }
        let maximal = (0..self.ambient.len()).filter(|y| !ms.contains(y)).all(|y| {
            let extended: Vec<usize> = ms.iter().copied().chain(std::iter::once(y)).collect();
            !self.rigid_indices(&extended, ps)
        });
        let support = (0..self.n_projectives()).all(|q| ps.contains(&q) == ms.iter().all(|&x| self.proj_free[q][x]));
        maximal && support
    }

    pub fn is_rigid_pair(&self, pair: &TiltingPair<F>) -> Result<bool> {
        let (ms, ps) = self.pair_indices(pair)?;
        Ok(self.rigid_indices(&ms, &ps))
    }

    pub fn is_support_tilting_pair(&self, pair: &TiltingPair<F>) -> Result<bool> {
        let (ms, ps) = self.pair_indices(pair)?;
        Ok(self.support_tilting_indices(&ms, &ps))
    }

    /// Every support tilting pair, in the order of the subset bitmask.
    pub fn enumerate_indices(&self) -> Result<Vec<PairIndices>> {
        let a = self.ambient.len();
        let d = self.n_projectives();
        if a + d >= 63 || (1u64 << (a + d)) > ENUMERATION_CAP {
            return Err(Error::CapExceeded(format!("2^{} candidate pairs exceed the cap {ENUMERATION_CAP}", a + d)));
        }
        let mut out = Vec::new();
        for mask in 0..(1u64 << (a + d)) {
            let ms: Vec<usize> = (0..a).filter(|&x| mask & (1 << x) != 0).collect();
            let ps: Vec<usize> = (0..d).filter(|&q| mask & (1 << (a + q)) != 0).collect();
            if self.support_tilting_indices(&ms, &ps) {
                out.push((ms, ps));
            }
        }
        Ok(out)
    }

    pub fn pair(&self, (ms, ps): &PairIndices) -> TiltingPair<F> {
        TiltingPair { m: ms.iter().map(|&x| self.ambient.generators[x].clone()).collect(), p: ps.clone() }
    }
}

pub fn enumerate_support_tilting_pairs<F: Field>(ctx: &TiltingContext<'_, F>) -> Result<Vec<TiltingPair<F>>> {
    Ok(ctx.enumerate_indices()?.iter().map(|ix| ctx.pair(ix)).collect())
}

/// Contexts on both sides of a covering, with the ambient pushed down.
fn contexts<'a, F: Field>(
    cover: &'a Covering<F>,
    ambient: &SubcategorySpec<F>,
    n: usize,
    dimcap: usize,
) -> Result<(TiltingContext<'a, F>, TiltingContext<'a, F>)> {
    let up = Carrier::Cover(cover);
    let down = Carrier::Base(cover.base().algebra());
    let up_ctx = TiltingContext::new(up, ambient.clone(), n, &up.pool(dimcap)?)?;
    let down_ctx = TiltingContext::new(down, push_down_subcategory(cover, ambient)?, n, &down.pool(dimcap)?)?;
    Ok((up_ctx, down_ctx))
}

/// A pair upstairs is support (G, tau_n)-tilting iff its push-down is support tau_n-tilting.
pub fn verify_tilting_pushdown<F: Field>(
    cover: &Covering<F>,
    ambient: &SubcategorySpec<F>,
    pair: &TiltingPair<F>,
    n: usize,
    dimcap: usize,
) -> Result<VerificationReport> {
    let mut inst = describe(&Carrier::Cover(cover));
    inst["n"] = json!(n);
    inst["pair"] = pair.to_json();
    let mut r = VerificationReport::new(Claim::TiltingPushdown, inst);
    r.cap("dimcap", dimcap);
    let res = (|| {
        let (up, down) = contexts(cover, ambient, n, dimcap)?;
        let pushed = TiltingPair {
            m: pair.m.iter().map(|x| push_down(cover, x)).collect::<Result<Vec<_>>>()?,
            p: pair.p.clone(),
        };
        let a = up.is_support_tilting_pair(pair)?;
        let b = down.is_support_tilting_pair(&pushed)?;
        r.check("biconditional", a == b, json!({ "covering": a, "base": b }));
        Ok(())
    })();
    if let Err(e) = res {
        r.absorb(e)?;
    }
    Ok(r)
}

/// The enumeration downstairs is the orbit quotient of the enumeration upstairs.
pub fn verify_tilting_enumeration<F: Field>(
    cover: &Covering<F>,
    ambient: &SubcategorySpec<F>,
    n: usize,
    dimcap: usize,
) -> Result<VerificationReport> {
    let mut inst = describe(&Carrier::Cover(cover));
    inst["n"] = json!(n);
    let mut r = VerificationReport::new(Claim::TiltingPushdown, inst);
    r.cap("dimcap", dimcap);
    r.cap("pairs", ENUMERATION_CAP);
    let res = (|| {
        let (up, down) = contexts(cover, ambient, n, dimcap)?;
        let (image, bijective) = match_pushdowns(cover, &up.ambient.generators, &down.ambient.generators)?;
        r.check("ambient_bijection", bijective, json!(image));
        let ups = up.enumerate_indices()?;
        let downs = down.enumerate_indices()?;
        let mut mapped: Vec<PairIndices> = ups
            .iter()
            .map(|(ms, ps)| {
                let mut m: Vec<usize> = ms.iter().filter_map(|&x| image[x]).collect();
                m.sort_unstable();
                (m, ps.clone())
            })
            .collect();
        mapped.sort();
        let mut expected = downs.clone();
        expected.sort();
        r.check(
            "orbit_quotient",
            mapped == expected,
            json!({ "covering": ups.len(), "base": downs.len(), "pairs": expected }),
        );
        Ok(())
    })();
    if let Err(e) = res {
        r.absorb(e)?;
    }
    Ok(r)
}

/// Rigid indecomposables per base vertex agree across the covering.
pub fn scan_tau_n_tilting_finite<F: Field>(cover: &Covering<F>, n: usize, dimcap: usize) -> Result<VerificationReport> {
    let mut inst = describe(&Carrier::Cover(cover));
    inst["n"] = json!(n);
    let mut r = VerificationReport::new(Claim::TiltingFinite, inst);
    r.cap("dimcap", dimcap);
    let res = (|| {
        let up = Carrier::Cover(cover);
        let down = Carrier::Base(cover.base().algebra());
        let mut rigid_up = Vec::new();
        for m in up.pool(dimcap)? {
            if is_g_tau_n_rigid(&up, &m, n)? {
                rigid_up.push(m);
            }
        }
        let mut rigid_down = Vec::new();
        for m in down.pool(dimcap)? {
            if is_g_tau_n_rigid(&down, &m, n)? {
                rigid_down.push(m);
            }
        }
        let (image, bijective) = match_pushdowns(cover, &rigid_up, &rigid_down)?;
        r.check("rigid_bijection", bijective, json!(image));
        let k = cover.base().vertices().len();
        let mut counts_up = vec![0usize; k];
        for m in &rigid_up {
            let mut bases: Vec<usize> = m.support().iter().map(|&v| cover.vertex(v).base).collect();
            bases.sort_unstable();
            bases.dedup();
            for b in bases {
                counts_up[b] += 1;
            }
        }
        let counts_down: Vec<usize> = (0..k).map(|b| rigid_down.iter().filter(|m| m.dim(b) > 0).count()).collect();
        r.check("per_vertex_counts", counts_up == counts_down, json!({ "covering": counts_up, "base": counts_down }));
        Ok(())
    })();
    if let Err(e) = res {
        r.absorb(e)?;
    }
    Ok(r)
}

/// The projective at base vertex `q`, on either carrier.
pub fn projective_for<F: Field>(c: &Carrier<'_, F>, q: usize) -> Result<FDModule<F>> {
    let x = *c.domain().get(q).ok_or_else(|| Error::InvalidArgument(format!("no projective at base vertex {q}")))?;
    projective_at(c.algebra(), x)
}
