//! Checks that the push-down functor transports Ext and indecomposables.

use serde_json::json;

use crate::covering::Covering;
use crate::decompose::{decompose, is_indecomposable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::functors::{ext_dims_across, push_down};
use crate::knit::list_indecomposables;
use crate::module::FDModule;
use crate::report::{Claim, VerificationReport};
use crate::subcategory::Carrier;

/// Index in `downs` of the push-down of each upstairs representative, and
/// whether this is a bijection.
pub fn match_pushdowns<F: Field>(
    cover: &Covering<F>,
    ups: &[FDModule<F>],
    downs: &[FDModule<F>],
) -> Result<(Vec<Option<usize>>, bool)> {
    let down = Carrier::Base(cover.base().algebra());
    let mut image = Vec::new();
    for m in ups {
        let p = push_down(cover, m)?;
        image.push(if is_indecomposable(&p)? { down.orbit_index(downs, &p)? } else { None });
    }
    let mut seen = vec![false; downs.len()];
    let mut ok = image.len() == downs.len();
    for j in &image {
        match j {
            Some(j) if !seen[*j] => seen[*j] = true,
            _ => ok = false,
        }
    }
    Ok((image, ok))
}

fn absorb_into(r: &mut VerificationReport, res: Result<()>) -> Result<()> {
    match res {
        Ok(()) => Ok(()),
        Err(e) => r.absorb(e),
    }
}

/// `Ext^i(P_* X, P_* Y)` against the sum of `Ext^i(X, ^a Y)` over the contributing twists.
pub fn verify_ext_iso<F: Field>(
    cover: &Covering<F>,
    x: &FDModule<F>,
    y: &FDModule<F>,
    i: usize,
) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(
        Claim::DILemma,
        json!({ "x": x.dims(), "y": y.dims(), "degree": i, "window_twists": cover.window().len() }),
    );
    let res = ext_dims_across(cover, x, y, i).map(|(down, up, twists)| {
        r.cap("contributing_twists", twists);
        r.check("dimensions_equal", down == up, json!({ "base": down, "twist_sum": up }));
    });
    absorb_into(&mut r, res)?;
    Ok(r)
}

/// The push-down of an indecomposable is indecomposable.
pub fn verify_indecomposable_preservation<F: Field>(
    cover: &Covering<F>,
    x: &FDModule<F>,
) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(Claim::Corres, json!({ "x": x.dims() }));
    let res = (|| {
        if !is_indecomposable(x)? {
            return Err(Error::HypothesisUnverified("the module is not indecomposable".into()));
        }
        let d = decompose(&push_down(cover, x)?)?;
        let shape: Vec<usize> = d.summands.iter().map(|(_, mult)| *mult).collect();
        r.check("pushdown_indecomposable", shape == [1], json!({ "multiplicities": shape }));
        Ok(())
    })();
    absorb_into(&mut r, res)?;
    Ok(r)
}

/// Twist orbits of indecomposables upstairs correspond to indecomposables downstairs.
pub fn verify_orbit_bijection<F: Field>(cover: &Covering<F>, dimcap: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(
        Claim::Corres,
        json!({ "base_vertices": cover.base().vertices(), "window_twists": cover.window().len() }),
    );
    r.cap("dimcap", dimcap);
    let res = (|| {
        let ups = Carrier::Cover(cover).pool(dimcap)?;
        let downs = list_indecomposables(cover.base().algebra(), dimcap)?;
        let (image, ok) = match_pushdowns(cover, &ups, &downs)?;
        r.check("bijection", ok, json!({ "orbits": ups.len(), "base": downs.len(), "image": image }));
        Ok(())
    })();
    absorb_into(&mut r, res)?;
    Ok(r)
}
