//! Runs every claim on the canonical instances of one presentation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::covering::Covering;
use crate::decompose::{is_indecomposable, is_isomorphic};
use crate::error::Result;
use crate::field::Field;
use crate::homological::{ext_dim, syzygy, tau, tau_minus};
use crate::module::{hom_dim, projective_at, FDModule};
use crate::precluster::*;
use crate::presentation::GradedQuiverPresentation;
use crate::report::{Claim, Verdict, VerificationReport};
use crate::structure::is_projective;
use crate::subcategory::{Carrier, SubcategorySpec};
use crate::tilting::*;
use crate::transfer::{verify_ext_iso, verify_orbit_bijection};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOptions {
    pub n: usize,
    pub half_width: i64,
    pub dimcap: usize,
    pub closure_cap: usize,
    pub seed: u64,
    /// Random pairs checked by the tilting push-down claim on top of the enumerated ones.
    pub samples: usize,
}

impl SuiteOptions {
    /// Half-width `3 * nilbound * (n + 2)`.
    pub fn default_for<F: Field>(pres: &GradedQuiverPresentation<F>, n: usize) -> Self {
        Self {
            n,
            half_width: default_half_width(pres, n),
            dimcap: 12,
            closure_cap: DEFAULT_CLOSURE_CAP,
            seed: 0,
            samples: 8,
        }
    }
}

pub fn default_half_width<F: Field>(pres: &GradedQuiverPresentation<F>, n: usize) -> i64 {
    3 * pres.nilbound().max(1) as i64 * (n as i64 + 2)
}

/// Folds sub-reports into one report for `claim`; no sub-reports means no instance.
fn combine(claim: Claim, instance: Value, subs: Vec<VerificationReport>) -> VerificationReport {
    let mut r = VerificationReport::new(claim, instance);
    if subs.is_empty() {
        r.pass = Verdict::NotApplicable;
        r.note(json!({ "instances": 0, "detail": "vacuous: no instance satisfies the hypothesis" }));
        return r;
    }
    for s in subs {
        r.pass = r.pass.and(s.pass);
        for (k, v) in s.caps {
            r.caps.entry(k).or_insert(v);
        }
        r.note(json!({ "instance": s.instance, "pass": s.pass, "witnesses": s.witnesses }));
    }
    r
}

/// Failure to even set up an instance, as a report.
fn setup_failed(claim: Claim, instance: Value, err: crate::Error) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(claim, instance);
    r.absorb(err)?;
    Ok(r)
}

macro_rules! or_report {
    ($claim:expr, $inst:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return setup_failed($claim, $inst, err),
        }
    };
}

pub fn run_claim<F: Field>(
    claim: Claim,
    pres: &GradedQuiverPresentation<F>,
    opts: &SuiteOptions,
) -> Result<VerificationReport> {
    let n = opts.n;
    let inst = json!({ "base_vertices": pres.vertices(), "n": n, "window": opts.half_width });
    if claim == Claim::BonGab {
        return verify_bongab(pres, n, opts.half_width);
    }
    let cover = or_report!(claim, inst, Covering::new(pres, opts.half_width));
    let up = Carrier::Cover(&cover);
    let down = Carrier::Base(pres.algebra());
    let search = |c: &Carrier<'_, F>| -> Result<Vec<SubcategorySpec<F>>> {
        search_preclusters(c, n, &c.pool(opts.dimcap)?, SEARCH_CAP)
    };
    let report = match claim {
        Claim::Main1 => {
            let found = or_report!(claim, inst, search(&up));
            let subs = found.iter().map(|u| verify_main1(&cover, u, n)).collect::<Result<Vec<_>>>()?;
            combine(claim, inst, subs)
        }
        Claim::Main2 => {
            let found = or_report!(claim, inst, search(&down));
            let subs = found
                .iter()
                .map(|v| verify_main2(&cover, v, n, opts.dimcap).map(|r| r.0))
                .collect::<Result<Vec<_>>>()?;
            combine(claim, inst, subs)
        }
        Claim::DILemma => {
            let pool = or_report!(claim, inst, up.pool(opts.dimcap));
            let mut subs = Vec::new();
            for x in &pool {
                for y in &pool {
                    for i in 0..=2 {
                        subs.push(verify_ext_iso(&cover, x, y, i)?);
                    }
                }
            }
            combine(claim, inst, subs)
        }
        Claim::Corres => verify_orbit_bijection(&cover, opts.dimcap)?,
        Claim::PnPushdown => verify_pn_pushdown(&cover, n, opts.closure_cap)?,
        Claim::BonGab => unreachable!("handled above"),
        Claim::SelfinjCriteria => verify_selfinjectivity_criteria(&up, n, opts.closure_cap, opts.dimcap)?,
        Claim::ZGpEquivalence => {
            let found = or_report!(claim, inst, search(&down));
            let subs =
                found.iter().map(|u| verify_equivalence_z_gp(&down, u, n, opts.dimcap)).collect::<Result<Vec<_>>>()?;
            combine(claim, inst, subs)
        }
        Claim::ModPushdown => {
            let found = or_report!(claim, inst, search(&up));
            let subs =
                found.iter().map(|u| verify_mod_pushdown(&cover, u, n, opts.dimcap)).collect::<Result<Vec<_>>>()?;
            combine(claim, inst, subs)
        }
        Claim::TiltingPushdown => tilting_claim(&cover, opts, inst)?,
        Claim::TiltingFinite => scan_tau_n_tilting_finite(&cover, n, opts.dimcap)?,
    };
    Ok(report)
}

/// The ambient is the whole pool: the enumeration is compared across the
/// covering and the biconditional is checked on enumerated and random pairs.
fn tilting_claim<F: Field>(cover: &Covering<F>, opts: &SuiteOptions, inst: Value) -> Result<VerificationReport> {
    let claim = Claim::TiltingPushdown;
    let up = Carrier::Cover(cover);
    let pool = or_report!(claim, inst, up.pool(opts.dimcap));
    let ambient = SubcategorySpec { generators: pool.clone(), twist_closed: true };
    let mut subs = vec![verify_tilting_enumeration(cover, &ambient, opts.n, opts.dimcap)?];
    if subs[0].pass != Verdict::Pass {
        return Ok(combine(claim, inst, subs));
    }
    let ctx = TiltingContext::new(up, ambient.clone(), opts.n, &pool)?;
    let mut pairs = ctx.enumerate_indices()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let ms: Vec<usize> = (0..pool.len()).filter(|_| rng.gen_bool(0.5)).collect();
        let ps: Vec<usize> = (0..ctx.n_projectives()).filter(|_| rng.gen_bool(0.3)).collect();
        pairs.push((ms, ps));
    }
    pairs.shuffle(&mut rng);
    for ix in &pairs {
        subs.push(verify_tilting_pushdown(cover, &ambient, &ctx.pair(ix), opts.n, opts.dimcap)?);
    }
    Ok(combine(claim, inst, subs))
}

pub fn run_suite<F: Field>(
    pres: &GradedQuiverPresentation<F>,
    claims: &[Claim],
    opts: &SuiteOptions,
) -> Result<Vec<VerificationReport>> {
    let mut claims = claims.to_vec();
    claims.sort();
    claims.dedup();
    claims.iter().map(|&c| run_claim(c, pres, opts)).collect()
}

/// Outcome of the engine self-checks on a list of modules.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SelfCheck {
    pub yoneda: usize,
    pub dimension_shift: usize,
    pub tau_round_trip: usize,
    pub failures: Vec<String>,
}

impl SelfCheck {
    pub fn samples(&self) -> usize {
        self.yoneda + self.dimension_shift + self.tau_round_trip
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: SelfCheck) {
        self.yoneda += other.yoneda;
        self.dimension_shift += other.dimension_shift;
        self.tau_round_trip += other.tau_round_trip;
        self.failures.extend(other.failures);
    }
}

/// Yoneda dimensions, `Ext^{i+1}(M, N) = Ext^i(Omega M, N)` for `1 <= i <= 3`,
/// and `tau^- tau M = M` on non-projective indecomposables.
pub fn self_check<F: Field>(modules: &[FDModule<F>]) -> Result<SelfCheck> {
    let mut out = SelfCheck::default();
    for (k, m) in modules.iter().enumerate() {
        let alg = m.algebra();
        for x in 0..alg.n_vertices() {
            if !alg.proj_complete(x) {
                continue;
            }
            out.yoneda += 1;
            if hom_dim(&projective_at(alg, x)?, m)? != m.dim(x) {
                out.failures.push(format!("Yoneda at vertex {x} for module {k}"));
            }
        }
        let omega = syzygy(m, 1)?;
        for (l, nn) in modules.iter().enumerate() {
            for i in 1..=3 {
                out.dimension_shift += 1;
                if ext_dim(m, nn, i + 1)? != ext_dim(&omega, nn, i)? {
                    out.failures.push(format!("dimension shift in degree {i} for modules {k}, {l}"));
                }
            }
        }
        if is_indecomposable(m)? && !is_projective(m)? {
            out.tau_round_trip += 1;
            if !is_isomorphic(&tau_minus(&tau(m)?)?, m)? {
                out.failures.push(format!("tau^- tau differs from module {k}"));
            }
        }
    }
    Ok(out)
}
