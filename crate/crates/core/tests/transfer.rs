use quiver_cover::covering::Covering;
use quiver_cover::golden;
use quiver_cover::knit::list_window_indecomposables;
use quiver_cover::module::{projective_at, FDModule};
use quiver_cover::report::Verdict;
use quiver_cover::subcategory::Carrier;
use quiver_cover::transfer::*;
use quiver_cover::PrimeField;

fn f() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

#[test]
fn orbit_bijection_counts() {
    let cover = Covering::new(&golden::nakayama(f(), 3, 2).unwrap(), 6).unwrap();
    let r = verify_orbit_bijection(&cover, 8).unwrap();
    assert_eq!(r.pass, Verdict::Pass, "{}", r.to_json_string());
    assert_eq!(r.witnesses[0]["detail"]["orbits"], 6);
    assert_eq!(r.witnesses[0]["detail"]["base"], 6);

    let cover = Covering::new(&golden::truncated_loop(f(), 2).unwrap(), 4).unwrap();
    let r = verify_orbit_bijection(&cover, 8).unwrap();
    assert_eq!(r.pass, Verdict::Pass);
    assert_eq!(r.witnesses[0]["detail"]["orbits"], 2);

    let cover = Covering::new(&golden::linear_a(f(), 3).unwrap(), 0).unwrap();
    let r = verify_orbit_bijection(&cover, 8).unwrap();
    assert_eq!(r.pass, Verdict::Pass);
    assert_eq!(r.witnesses[0]["detail"]["orbits"], 6);
}

#[test]
fn every_window_indecomposable_pushes_down_to_an_indecomposable() {
    let cover = Covering::new(&golden::nakayama(f(), 3, 2).unwrap(), 3).unwrap();
    for m in list_window_indecomposables(&cover, 8).unwrap() {
        let r = verify_indecomposable_preservation(&cover, &m).unwrap();
        assert_eq!(r.pass, Verdict::Pass, "{}", r.to_json_string());
    }
}

#[test]
fn decomposable_input_is_out_of_scope() {
    let cover = Covering::new(&golden::nakayama(f(), 3, 2).unwrap(), 3).unwrap();
    let alg = cover.algebra();
    let d = cover.fundamental_domain();
    let m = FDModule::direct_sum(&[FDModule::simple(alg, d[0]), FDModule::simple(alg, d[1])]).unwrap();
    let r = verify_indecomposable_preservation(&cover, &m).unwrap();
    assert_eq!(r.pass, Verdict::NotApplicable);
}

#[test]
fn ext_iso_on_dual_numbers_cover() {
    let cover = Covering::new(&golden::truncated_loop(f(), 2).unwrap(), 4).unwrap();
    let x = cover.fundamental_domain()[0];
    let s = FDModule::simple(cover.algebra(), x);
    let p = projective_at(cover.algebra(), x).unwrap();
    for i in 0..3 {
        let r = verify_ext_iso(&cover, &s, &s, i).unwrap();
        assert_eq!(r.pass, Verdict::Pass, "{}", r.to_json_string());
        // Ext^i(k, k) over the dual numbers is one-dimensional in every degree
        assert_eq!(r.witnesses[0]["detail"]["base"], 1);
    }
    let r = verify_ext_iso(&cover, &p, &p, 1).unwrap();
    assert_eq!(r.witnesses[0]["detail"]["base"], 0);
    assert_eq!(r.pass, Verdict::Pass);
}

#[test]
fn ext_iso_near_the_border_is_indeterminate() {
    let cover = Covering::new(&golden::truncated_loop(f(), 2).unwrap(), 1).unwrap();
    let up = Carrier::Cover(&cover);
    let edge = (0..cover.vertices().len()).find(|&v| cover.vertex(v).shift.0[0] == 1).unwrap();
    let s = FDModule::simple(up.algebra(), edge);
    let r = verify_ext_iso(&cover, &s, &s, 2).unwrap();
    assert_eq!(r.pass, Verdict::Indeterminate, "{}", r.to_json_string());
}
