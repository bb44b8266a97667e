//! Enumeration of indecomposables by knitting: start from simples,
//! projectives and injectives and close under syzygies, cosyzygies, the
//! Auslander-Reiten translates, radicals and socle quotients.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::covering::Covering;
use crate::decompose::{indecomposable_summands, iso_indecomposable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological::{cosyzygy, syzygy, tau, tau_minus};
use crate::module::{injective_at, projective_at, FDModule};
use crate::structure::{radical, socle};

/// Pairwise non-isomorphic indecomposables.
#[derive(Debug, Clone)]
pub struct IsoClasses<F: Field> {
    members: Vec<FDModule<F>>,
}

impl<F: Field> Default for IsoClasses<F> {
    fn default() -> Self {
        Self { members: Vec::new() }
    }
}

impl<F: Field> IsoClasses<F> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of the class of an indecomposable `m`, if present.
    pub fn find(&self, m: &FDModule<F>) -> Result<Option<usize>> {
        for (i, x) in self.members.iter().enumerate() {
            if x.dims() == m.dims() && iso_indecomposable(x, m)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Adds an indecomposable; returns its index and whether it was new.
    pub fn insert(&mut self, m: FDModule<F>) -> Result<(usize, bool)> {
        if let Some(i) = self.find(&m)? {
            return Ok((i, false));
        }
        self.members.push(m);
        Ok((self.members.len() - 1, true))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[FDModule<F>] {
        &self.members
    }

    pub fn into_members(self) -> Vec<FDModule<F>> {
        self.members
    }
}

fn neighbours<F: Field>(m: &FDModule<F>) -> Result<Vec<FDModule<F>>> {
    let mut out = vec![syzygy(m, 1)?, cosyzygy(m, 1)?, tau(m)?, tau_minus(m)?, radical(m).0];
    let (_, soc) = socle(m);
    out.push(soc.cokernel().0);
    Ok(out)
}

/// All indecomposables of total dimension at most `dimcap`, up to isomorphism.
///
/// Sorted by total dimension, then dimension vector, then discovery order.
/// Fails with `CapExceeded` when knitting produces an indecomposable above the
/// cap, since the list could then be incomplete.
pub fn list_indecomposables<F: Field>(alg: &Arc<Algebra<F>>, dimcap: usize) -> Result<Vec<FDModule<F>>> {
    let mut classes = IsoClasses::new();
    let mut queue = VecDeque::new();
    let mut seeds = Vec::new();
    for v in 0..alg.n_vertices() {
        seeds.push(FDModule::simple(alg, v));
        seeds.push(projective_at(alg, v)?);
        seeds.push(injective_at(alg, v)?);
    }
    let push = |m: FDModule<F>, classes: &mut IsoClasses<F>, queue: &mut VecDeque<usize>| -> Result<()> {
        for (s, _) in indecomposable_summands(&m)? {
            if s.total_dim() > dimcap {
                return Err(Error::CapExceeded(format!(
                    "found an indecomposable of dimension {} above the cap {dimcap}",
                    s.total_dim()
                )));
            }
            let (i, new) = classes.insert(s)?;
            if new {
                queue.push_back(i);
            }
        }
        Ok(())
    };
    for s in seeds {
        push(s, &mut classes, &mut queue)?;
    }
    while let Some(i) = queue.pop_front() {
        let m = classes.members()[i].clone();
        for n in neighbours(&m)? {
            if !n.is_zero() {
                push(n, &mut classes, &mut queue)?;
            }
        }
    }
    let mut members: Vec<(usize, FDModule<F>)> = classes.into_members().into_iter().enumerate().collect();
    members.sort_by(|(i, a), (j, b)| (a.total_dim(), a.dims()).cmp(&(b.total_dim(), b.dims())).then(i.cmp(j)));
    Ok(members.into_iter().map(|(_, m)| m).collect())
}

/// Indecomposables supported in the window, over the window algebra.
pub fn list_window_indecomposables<F: Field>(cover: &Covering<F>, dimcap: usize) -> Result<Vec<FDModule<F>>> {
    list_indecomposables(cover.standalone(), dimcap)?.into_iter().map(|m| m.rebase(cover.algebra())).collect()
}
