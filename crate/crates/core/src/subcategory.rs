//! Finite additive subcategories and the two kinds of carrier they live in:
//! a finite-dimensional algebra, or a window of a Galois covering whose
//! subcategories are closed under the group action.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::covering::Covering;
use crate::decompose::{indecomposable_summands, is_indecomposable, iso_indecomposable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::functors::{contributing_twists, twist};
use crate::group::GroupElem;
use crate::homological::{ext_dim, min_proj_resolution};
use crate::knit::{list_indecomposables, list_window_indecomposables};
use crate::module::{hom_dim, injective_at, projective_at, FDModule};

/// Where modules live.
#[derive(Debug)]
pub enum Carrier<'a, F: Field> {
    Base(&'a Arc<Algebra<F>>),
    Cover(&'a Covering<F>),
}

impl<F: Field> Clone for Carrier<'_, F> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<F: Field> Copy for Carrier<'_, F> {}

impl<'a, F: Field> Carrier<'a, F> {
    pub fn algebra(&self) -> &'a Arc<Algebra<F>> {
        match self {
            Carrier::Base(a) => a,
            Carrier::Cover(c) => c.algebra(),
        }
    }

    pub fn is_cover(&self) -> bool {
        matches!(self, Carrier::Cover(_))
    }

    /// Vertices standing for all vertices up to the group action.
    pub fn domain(&self) -> Vec<usize> {
        match self {
            Carrier::Base(a) => (0..a.n_vertices()).collect(),
            Carrier::Cover(c) => c.fundamental_domain(),
        }
    }

    pub fn projectives(&self) -> Result<Vec<FDModule<F>>> {
        self.domain().into_iter().map(|x| projective_at(self.algebra(), x)).collect()
    }

    pub fn injectives(&self) -> Result<Vec<FDModule<F>>> {
        self.domain().into_iter().map(|x| injective_at(self.algebra(), x)).collect()
    }

    /// Group elements by which `m` can be twisted inside the window.
    pub fn twists_of(&self, m: &FDModule<F>) -> Vec<GroupElem> {
        match self {
            Carrier::Base(_) => vec![GroupElem(Vec::new())],
            Carrier::Cover(c) => {
                let supp = m.support();
                c.window()
                    .elements()
                    .iter()
                    .filter(|g| supp.iter().all(|&v| c.shift_vertex(v, g).is_some()))
                    .cloned()
                    .collect()
            }
        }
    }

    pub fn twist(&self, m: &FDModule<F>, g: &GroupElem) -> Result<FDModule<F>> {
        match self {
            Carrier::Base(_) => Ok(m.clone()),
            Carrier::Cover(c) => twist(c, m, g),
        }
    }

    /// Twists `a` for which `^a y` can meet the vertices `targets`.
    pub fn meeting(&self, targets: &[usize], y: &FDModule<F>) -> Vec<GroupElem> {
        match self {
            Carrier::Base(_) => vec![GroupElem(Vec::new())],
            Carrier::Cover(c) => contributing_twists(c, targets, y),
        }
    }

    /// `sum_a dim Hom(x, ^a y)` over the twists that can contribute.
    pub fn hom_across(&self, x: &FDModule<F>, y: &FDModule<F>) -> Result<usize> {
        let mut total = 0;
        for a in self.meeting(&x.support(), y) {
            total += hom_dim(x, &self.twist(y, &a)?)?;
        }
        Ok(total)
    }

    /// `sum_a dim Ext^i(x, ^a y)` over the twists that can contribute.
    pub fn ext_across(&self, x: &FDModule<F>, y: &FDModule<F>, i: usize) -> Result<usize> {
        if i == 0 {
            return self.hom_across(x, y);
        }
        if x.is_zero() || y.is_zero() {
            return Ok(0);
        }
        let res = min_proj_resolution(x, i + 1)?;
        let mut total = 0;
        for a in self.meeting(&res.vertices[i], y) {
            total += ext_dim(x, &self.twist(y, &a)?, i)?;
        }
        Ok(total)
    }

    /// The twist of `m` whose support has smallest shift zero in each coordinate.
    pub fn normalize(&self, m: &FDModule<F>) -> Result<FDModule<F>> {
        let Carrier::Cover(c) = self else { return Ok(m.clone()) };
        if c.group().is_finite() || m.is_zero() {
            return Ok(m.clone());
        }
        let supp = m.support();
        let rank = c.vertex(supp[0]).shift.0.len();
        let low: Vec<i64> =
            (0..rank).map(|k| supp.iter().map(|&v| c.vertex(v).shift.0[k]).min().expect("nonempty")).collect();
        twist(c, m, &GroupElem(low.iter().map(|x| -x).collect()))
    }

    /// Indecomposables up to isomorphism, one per orbit on a covering. A
    /// covering window must hold the projectives and injectives of the
    /// fundamental domain.
    pub fn pool(&self, dimcap: usize) -> Result<Vec<FDModule<F>>> {
        match self {
            Carrier::Base(a) => list_indecomposables(a, dimcap),
            Carrier::Cover(c) => {
                self.projectives()?;
                self.injectives()?;
                let all = list_window_indecomposables(c, dimcap)?;
                let mut reps: Vec<FDModule<F>> = Vec::new();
                for m in all {
                    if !self.in_orbits(&reps, &m)? {
                        reps.push(self.normalize(&m)?);
                    }
                }
                Ok(reps)
            }
        }
    }

    /// Whether some twist of the indecomposable `m` is isomorphic to one of `list`.
    pub fn in_orbits(&self, list: &[FDModule<F>], m: &FDModule<F>) -> Result<bool> {
        Ok(self.orbit_index(list, m)?.is_some())
    }

    pub fn orbit_index(&self, list: &[FDModule<F>], m: &FDModule<F>) -> Result<Option<usize>> {
        let total = m.total_dim();
        for g in self.twists_of(m) {
            let t = self.twist(m, &g)?;
            for (i, x) in list.iter().enumerate() {
                if x.total_dim() == total && x.dims() == t.dims() && iso_indecomposable(x, &t)?.is_some() {
                    return Ok(Some(i));
                }
            }
        }
        Ok(None)
    }
}

/// An additive subcategory given by finitely many indecomposables. On a
/// covering the generators are orbit representatives and the subcategory is
/// their closure under twists.
#[derive(Debug, Clone)]
pub struct SubcategorySpec<F: Field> {
    pub generators: Vec<FDModule<F>>,
    pub twist_closed: bool,
}

impl<F: Field> SubcategorySpec<F> {
    /// Splits the given modules into indecomposables and keeps one per class.
    pub fn add(carrier: &Carrier<'_, F>, modules: &[FDModule<F>]) -> Result<Self> {
        let mut generators: Vec<FDModule<F>> = Vec::new();
        for m in modules {
            for (s, _) in indecomposable_summands(m)? {
                if !carrier.in_orbits(&generators, &s)? {
                    generators.push(carrier.normalize(&s)?);
                }
            }
        }
        Ok(Self { generators, twist_closed: carrier.is_cover() })
    }

    /// Checks that the generators are indecomposable and pairwise distinct.
    pub fn new(carrier: &Carrier<'_, F>, generators: Vec<FDModule<F>>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if !is_indecomposable(g)? {
                return Err(Error::InvalidArgument(format!("generator {i} is not indecomposable")));
            }
            if carrier.in_orbits(&generators[..i], g)? {
                return Err(Error::InvalidArgument(format!("generator {i} repeats an earlier one")));
            }
        }
        Ok(Self { generators, twist_closed: carrier.is_cover() })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains_indecomposable(&self, carrier: &Carrier<'_, F>, m: &FDModule<F>) -> Result<bool> {
        carrier.in_orbits(&self.generators, m)
    }

    /// `M` lies in the additive closure.
    pub fn contains(&self, carrier: &Carrier<'_, F>, m: &FDModule<F>) -> Result<bool> {
        for (s, _) in indecomposable_summands(m)? {
            if !self.contains_indecomposable(carrier, &s)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All window twists of the generators; the generators themselves on a base.
    pub fn expanded(&self, carrier: &Carrier<'_, F>) -> Result<Vec<FDModule<F>>> {
        let mut out = Vec::new();
        for g in &self.generators {
            for a in carrier.twists_of(g) {
                out.push(carrier.twist(g, &a)?);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "twist_closed": self.twist_closed,
            "generators": self.generators.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
        })
    }
}
