use quiver_cover::report::{Claim, Verdict};
use quiver_cover::subcategory::Carrier;
use quiver_cover::suite::{default_half_width, run_claim, run_suite, self_check, SuiteOptions};
use quiver_cover::{golden, PrimeField};

fn f() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn opts(n: usize) -> SuiteOptions {
    let pres = golden::nakayama(f(), 3, 2).unwrap();
    SuiteOptions { half_width: 6, ..SuiteOptions::default_for(&pres, n) }
}

#[test]
fn default_window_grows_with_n() {
    let pres = golden::nakayama(f(), 3, 2).unwrap();
    assert_eq!(default_half_width(&pres, 1), 18);
    assert_eq!(default_half_width(&pres, 2), 24);
}

#[test]
fn suite_dedups_and_orders_claims() {
    let pres = golden::nakayama(f(), 3, 2).unwrap();
    let out = run_suite(&pres, &[Claim::Corres, Claim::BonGab, Claim::Corres], &opts(1)).unwrap();
    let claims: Vec<_> = out.iter().map(|r| r.claim).collect();
    assert_eq!(claims, vec![Claim::Corres, Claim::BonGab]);
    assert!(out.iter().all(|r| r.pass == Verdict::Pass));
}

#[test]
fn nakayama_claims_pass_at_n1() {
    let pres = golden::nakayama(f(), 3, 2).unwrap();
    for claim in [Claim::Main1, Claim::Main2, Claim::PnPushdown, Claim::TiltingFinite] {
        let r = run_claim(claim, &pres, &opts(1)).unwrap();
        assert_eq!(r.pass, Verdict::Pass, "{claim:?}");
    }
}

#[test]
fn kronecker_is_not_applicable() {
    let pres = golden::kronecker(f()).unwrap();
    let o = SuiteOptions { half_width: 4, ..SuiteOptions::default_for(&pres, 1) };
    let r = run_claim(Claim::BonGab, &pres, &o).unwrap();
    assert_eq!(r.pass, Verdict::NotApplicable);
}

#[test]
fn small_window_is_indeterminate() {
    let pres = golden::nakayama(f(), 3, 2).unwrap();
    let o = SuiteOptions { half_width: 1, ..opts(1) };
    for claim in [Claim::Main1, Claim::PnPushdown, Claim::TiltingFinite] {
        let r = run_claim(claim, &pres, &o).unwrap();
        assert_eq!(r.pass, Verdict::Indeterminate, "{claim:?}");
    }
    let o = SuiteOptions { half_width: 0, ..opts(1) };
    assert_eq!(run_claim(Claim::Corres, &pres, &o).unwrap().pass, Verdict::Indeterminate);
}

#[test]
fn self_check_on_nakayama_pool() {
    let pres = golden::nakayama(f(), 3, 2).unwrap();
    let pool = Carrier::Base(pres.algebra()).pool(12).unwrap();
    let s = self_check(&pool).unwrap();
    assert!(s.pass(), "{:?}", s.failures);
    assert_eq!(s.yoneda, 18);
    assert_eq!(s.dimension_shift, 6 * 6 * 3);
    assert_eq!(s.tau_round_trip, 3);
}
