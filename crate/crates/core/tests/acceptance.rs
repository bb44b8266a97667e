//! Acceptance suite: one pass/fail line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use quiver_cover::covering::Covering;
use quiver_cover::decompose::find_iso;
use quiver_cover::functors::push_down;
use quiver_cover::homological::{dominant_dimension_upto, BoundedDim};
use quiver_cover::module::{injective_at, projective_at};
use quiver_cover::precluster::*;
use quiver_cover::report::{Verdict, VerificationReport};
use quiver_cover::subcategory::{Carrier, SubcategorySpec};
use quiver_cover::suite::{self_check, SelfCheck};
use quiver_cover::tilting::{scan_tau_n_tilting_finite, verify_tilting_enumeration, TiltingContext};
use quiver_cover::transfer::{verify_ext_iso, verify_orbit_bijection};
use quiver_cover::{golden, GradedQuiverPresentation, PrimeField, Result};

const HW: i64 = 6;
const DIMCAP: usize = 12;

type Pres = GradedQuiverPresentation<PrimeField>;

fn f() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn n32() -> Pres {
    golden::nakayama(f(), 3, 2).unwrap()
}

fn dual_numbers() -> Pres {
    golden::truncated_loop(f(), 2).unwrap()
}

fn coverings() -> Vec<(&'static str, Pres)> {
    vec![("N(3,2)", n32()), ("k[x]/(x^2)", dual_numbers())]
}

fn add_projectives(c: &Carrier<'_, PrimeField>) -> Result<SubcategorySpec<PrimeField>> {
    SubcategorySpec::add(c, &c.projectives()?)
}

fn passed(r: &VerificationReport) -> bool {
    r.pass == Verdict::Pass
}

/// Outcome of one criterion: whether it holds and a one-line detail.
type Outcome = Result<(bool, String)>;

fn gabriel_bijection() -> Outcome {
    let cover = Covering::new(&n32(), HW)?;
    let r = verify_orbit_bijection(&cover, DIMCAP)?;
    let d = &r.witnesses[0]["detail"];
    let ok = passed(&r) && d["orbits"] == 6 && d["base"] == 6;
    Ok((ok, format!("{} orbits <-> {} base indecomposables", d["orbits"], d["base"])))
}

fn projectives_and_injectives_push_down() -> Outcome {
    let mut certified = 0;
    let mut total = 0;
    for (_, pres) in coverings() {
        let cover = Covering::new(&pres, HW)?;
        for x in cover.fundamental_domain() {
            let b = cover.vertex(x).base;
            let pairs = [
                (projective_at(cover.algebra(), x)?, projective_at(pres.algebra(), b)?),
                (injective_at(cover.algebra(), x)?, injective_at(pres.algebra(), b)?),
            ];
            for (up, down) in pairs {
                total += 1;
                if find_iso(&push_down(&cover, &up)?, &down)?.is_some_and(|g| g.is_iso()) {
                    certified += 1;
                }
            }
        }
    }
    Ok((certified == total, format!("{certified}/{total} iso certificates")))
}

fn hom_ext_twist_sums() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for (_, pres) in coverings() {
        let cover = Covering::new(&pres, HW)?;
        let pool = Carrier::Cover(&cover).pool(DIMCAP)?;
        for x in &pool {
            for y in &pool {
                for i in 0..=2 {
                    checked += 1;
                    if !passed(&verify_ext_iso(&cover, x, y, i)?) {
                        bad += 1;
                    }
                }
            }
        }
    }
    Ok((bad == 0, format!("{checked} (pair, degree) checks, {bad} mismatches")))
}

fn main_round_trip() -> Outcome {
    let cover = Covering::new(&n32(), HW)?;
    let up = Carrier::Cover(&cover);
    let u = add_projectives(&up)?;
    let pre = is_n_precluster(&up, &u, 1)?.pass();
    let m1 = passed(&verify_main1(&cover, &u, 1)?);
    let v = push_down_subcategory(&cover, &u)?;
    let (r2, back) = verify_main2(&cover, &v, 1, DIMCAP)?;
    let recovered = match back {
        Some(back) => {
            back.len() == u.len()
                && u.generators
                    .iter()
                    .map(|g| back.contains_indecomposable(&up, g))
                    .collect::<Result<Vec<_>>>()?
                    .iter()
                    .all(|&b| b)
        }
        None => false,
    };
    let ok = pre && m1 && passed(&r2) && recovered;
    Ok((ok, format!("precluster {pre}, Main1 {m1}, Main2 {}, preimage recovered {recovered}", r2.pass)))
}

fn n2_discovery() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, pres) in coverings() {
        let cover = Covering::new(&pres, HW)?;
        let up = Carrier::Cover(&cover);
        let found = search_preclusters(&up, 2, &up.pool(DIMCAP)?, SEARCH_CAP)?;
        if found.is_empty() {
            parts.push(format!("{name}: vacuous"));
            continue;
        }
        let mut good = 0;
        for u in &found {
            let m1 = passed(&verify_main1(&cover, u, 2)?);
            let zgp = passed(&verify_equivalence_z_gp(&up, u, 2, DIMCAP)?);
            let (endo, reps) = endo_category(&up, u)?;
            let nmag = check_nmag_on(&endo.algebra, &reps, 2)?.pass;
            if m1 && zgp && nmag {
                good += 1;
            }
        }
        ok &= good == found.len();
        parts.push(format!("{name}: {good}/{} instances", found.len()));
    }
    Ok((ok, parts.join(", ")))
}

fn auslander_gorenstein() -> Outcome {
    let aus = golden::auslander_dual_numbers(f())?;
    let c = Carrier::Base(aus.algebra());
    let r = check_nmag(&c, 1)?;
    let exact = dominant_dimension_upto(aus.algebra(), &c.domain(), 6)?;
    let injdims_ok = r.injective_dimensions.iter().all(|d| matches!(d, BoundedDim::Exact(k) if *k <= 2));
    let ok = r.pass && exact == BoundedDim::Exact(2) && injdims_ok;
    Ok((ok, format!("dominant dimension {exact:?}, injective dimensions {:?}", r.injective_dimensions)))
}

fn bongab_transfer() -> Outcome {
    let mut ok = true;
    for (_, pres) in coverings() {
        for n in 1..=2 {
            ok &= passed(&verify_bongab(&pres, n, HW)?);
        }
    }
    let k = verify_bongab(&golden::kronecker(f())?, 1, HW)?;
    ok &= k.pass == Verdict::NotApplicable;
    Ok((ok, format!("4 agreements checked, Kronecker {}", k.pass)))
}

fn z_gp() -> Outcome {
    let pres = n32();
    let c = Carrier::Base(pres.algebra());
    let r = verify_equivalence_z_gp(&c, &add_projectives(&c)?, 1, DIMCAP)?;
    let dense = r.witnesses.iter().find(|w| w["check"] == "dense").map(|w| w["detail"].clone());
    let (z, gp) = dense.map_or((None, None), |d| (d["z"].as_u64(), d["gp"].as_u64()));
    let ok = passed(&r) && z == Some(6) && gp == Some(6);
    Ok((ok, format!("|Z| = {z:?}, |Gp| = {gp:?}, verdict {}", r.pass)))
}

fn tilting_transfer() -> Outcome {
    let pres = n32();
    let cover = Covering::new(&pres, HW)?;
    let up = Carrier::Cover(&cover);
    let pool = up.pool(DIMCAP)?;
    let ambient = SubcategorySpec::new(&up, pool)?;
    let r = verify_tilting_enumeration(&cover, &ambient, 1, DIMCAP)?;
    let s = scan_tau_n_tilting_finite(&cover, 1, DIMCAP)?;
    let down = Carrier::Base(pres.algebra());
    let dpool = down.pool(DIMCAP)?;
    let count =
        TiltingContext::new(down, SubcategorySpec::new(&down, dpool.clone())?, 1, &dpool)?.enumerate_indices()?.len();
    let ok = passed(&r) && passed(&s) && count == 14;
    Ok((ok, format!("enumeration {}, {count} pairs downstairs, finiteness scan {}", r.pass, s.pass)))
}

fn engine_self_consistency() -> Outcome {
    let mut total = SelfCheck::default();
    let bases = [
        n32(),
        dual_numbers(),
        golden::linear_a(f(), 2)?,
        golden::linear_a(f(), 3)?,
        golden::auslander_dual_numbers(f())?,
    ];
    for pres in &bases {
        total.merge(self_check(&Carrier::Base(pres.algebra()).pool(DIMCAP)?)?);
    }
    for (_, pres) in coverings() {
        let cover = Covering::new(&pres, HW)?;
        total.merge(self_check(&Carrier::Cover(&cover).pool(DIMCAP)?)?);
    }
    let ok = total.pass() && total.samples() >= 100;
    Ok((
        ok,
        format!(
            "{} samples (Yoneda {}, dimension shift {}, tau round trip {}), {} failures",
            total.samples(),
            total.yoneda,
            total.dimension_shift,
            total.tau_round_trip,
            total.failures.len()
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Gabriel orbit bijection", gabriel_bijection),
        ("push-down of projectives and injectives", projectives_and_injectives_push_down),
        ("Hom/Ext twist sums", hom_ext_twist_sums),
        ("Main1/Main2 round trip at n=1", main_round_trip),
        ("n=2 discovery pipeline", n2_discovery),
        ("Auslander-Gorenstein instance", auslander_gorenstein),
        ("BonGab transfer", bongab_transfer),
        ("Z and Gp equivalence", z_gp),
        ("tau_n-tilting transfer", tilting_transfer),
        ("engine self-consistency", engine_self_consistency),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = run().unwrap_or_else(|e| (false, format!("error {}: {e}", e.kind())));
        failed += usize::from(!ok);
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {name}: {detail} [{:.2}s]", k + 1, t.elapsed().as_secs_f64());
    }
    println!("acceptance: {}/10 passed in {:.2}s", 10 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
