use std::sync::Arc;

use quiver_cover::decompose::{decompose, find_iso, is_indecomposable, is_isomorphic};
use quiver_cover::golden;
use quiver_cover::module::{hom_dim, injective_at, projective_at, FDModule};
use quiver_cover::structure::{injective_envelope, projective_cover, radical, socle, top};
use quiver_cover::{Algebra, Error, Mat, PrimeField};
use serde_json::json;

fn f() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn n32() -> Arc<Algebra<PrimeField>> {
    golden::nakayama(f(), 3, 2).unwrap().algebra().clone()
}

fn a(n: usize) -> Arc<Algebra<PrimeField>> {
    golden::linear_a(f(), n).unwrap().algebra().clone()
}

#[test]
fn zero_and_simple_modules_validate() {
    let alg = n32();
    assert!(FDModule::zero(&alg).validate().is_ok());
    for v in 0..3 {
        assert!(FDModule::simple(&alg, v).validate().is_ok());
    }
}

#[test]
fn loop_square_violates_relation() {
    let alg = golden::truncated_loop(f(), 2).unwrap().algebra().clone();
    let err = FDModule::new(alg, vec![1], vec![Mat::from_i64(&f(), &[&[1]])]).unwrap_err();
    assert!(matches!(err, Error::RelationViolated { .. }), "{err}");
}

#[test]
fn json_literal_round_trip() {
    let alg = n32();
    let p = projective_at(&alg, 0).unwrap();
    let doc = p.to_json();
    assert_eq!(doc, json!({"dims": {"1": 1, "2": 1}, "arrowmaps": {"a1": [[1]]}}));
    let q = FDModule::from_json(&alg, &doc).unwrap();
    assert_eq!(q.dims(), p.dims());
    assert!(is_isomorphic(&p, &q).unwrap());
    let bad = json!({"dims": {"1": 1, "2": 1}, "arrowmaps": {"a1": [[1, 0]]}});
    assert_eq!(FDModule::from_json(&alg, &bad).unwrap_err().kind(), "DimensionMismatch");
}

#[test]
fn hom_between_simples() {
    let alg = n32();
    let s: Vec<_> = (0..3).map(|v| FDModule::simple(&alg, v)).collect();
    for v in 0..3 {
        for w in 0..3 {
            assert_eq!(hom_dim(&s[v], &s[w]).unwrap(), usize::from(v == w));
        }
    }
}

#[test]
fn hom_between_projectives_of_a3() {
    let alg = a(3);
    let p1 = projective_at(&alg, 0).unwrap();
    let p3 = projective_at(&alg, 2).unwrap();
    assert_eq!(hom_dim(&p1, &p3).unwrap(), 0);
    assert_eq!(hom_dim(&p3, &p1).unwrap(), 1);
}

#[test]
fn nakayama_projective_dims() {
    let alg = n32();
    let p1 = projective_at(&alg, 0).unwrap();
    assert_eq!(p1.dims(), &[1, 1, 0]);
    assert_eq!(p1.total_dim(), 2);
}

#[test]
fn semisimple_projectives_are_simple_injectives() {
    let alg = golden::semisimple(f(), 3).unwrap().algebra().clone();
    for v in 0..3 {
        let s = FDModule::simple(&alg, v);
        assert!(is_isomorphic(&projective_at(&alg, v).unwrap(), &s).unwrap());
        assert!(is_isomorphic(&injective_at(&alg, v).unwrap(), &s).unwrap());
    }
}

#[test]
fn nakayama_is_self_injective() {
    let alg = n32();
    let ps: Vec<_> = (0..3).map(|v| projective_at(&alg, v).unwrap()).collect();
    let is: Vec<_> = (0..3).map(|v| injective_at(&alg, v).unwrap()).collect();
    for p in &ps {
        assert_eq!(is.iter().filter(|i| is_isomorphic(p, i).unwrap()).count(), 1);
    }
    for i in &is {
        assert_eq!(ps.iter().filter(|p| is_isomorphic(p, i).unwrap()).count(), 1);
    }
}

#[test]
fn yoneda_dimensions() {
    let alg = golden::auslander_dual_numbers(f()).unwrap().algebra().clone();
    let mods: Vec<_> = (0..2)
        .flat_map(|v| [projective_at(&alg, v).unwrap(), injective_at(&alg, v).unwrap(), FDModule::simple(&alg, v)])
        .collect();
    for m in &mods {
        for x in 0..2 {
            assert_eq!(hom_dim(&projective_at(&alg, x).unwrap(), m).unwrap(), m.dim(x));
            assert_eq!(hom_dim(m, &injective_at(&alg, x).unwrap()).unwrap(), m.dim(x));
        }
    }
}

#[test]
fn decompose_examples() {
    let alg = n32();
    let p1 = projective_at(&alg, 0).unwrap();
    let d = decompose(&p1).unwrap();
    assert_eq!(d.summands.len(), 1);
    assert_eq!(d.summands[0].1, 1);

    let s = FDModule::simple(&alg, 1);
    let ss = FDModule::direct_sum(&[s.clone(), s.clone()]).unwrap();
    let d = decompose(&ss).unwrap();
    assert_eq!(d.summands.len(), 1);
    assert_eq!(d.summands[0].1, 2);
    assert!(d.certificate.is_iso());

    let mixed = FDModule::direct_sum(&[p1.clone(), s.clone()]).unwrap();
    let d = decompose(&mixed).unwrap();
    let mut dims: Vec<usize> = d.summands.iter().map(|(m, _)| m.total_dim()).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 2]);
    assert!(d.certificate.is_iso());
}

#[test]
fn iso_examples() {
    let alg = a(2);
    let p1 = projective_at(&alg, 0).unwrap();
    let s1 = FDModule::simple(&alg, 0);
    assert!(is_isomorphic(&p1, &p1).unwrap());
    assert!(!is_isomorphic(&p1, &s1).unwrap());
    let sum_a = FDModule::direct_sum(&[p1.clone(), s1.clone()]).unwrap();
    let sum_b = FDModule::direct_sum(&[s1.clone(), p1.clone()]).unwrap();
    let iso = find_iso(&sum_a, &sum_b).unwrap().unwrap();
    assert!(iso.is_iso());
}

#[test]
fn top_socle_and_covers() {
    let alg = n32();
    for x in 0..3 {
        let p = projective_at(&alg, x).unwrap();
        let (t, _) = top(&p);
        assert!(is_isomorphic(&t, &FDModule::simple(&alg, x)).unwrap());
        let cover = projective_cover(&FDModule::simple(&alg, x)).unwrap();
        assert!(is_isomorphic(cover.map.src(), &p).unwrap());
        assert!(cover.map.is_surjective());
        let env = injective_envelope(&FDModule::simple(&alg, x)).unwrap();
        assert!(env.map.is_injective());
        assert!(is_isomorphic(env.map.tgt(), &injective_at(&alg, x).unwrap()).unwrap());
    }
    let (soc, _) = socle(&projective_at(&alg, 0).unwrap());
    assert!(is_isomorphic(&soc, &FDModule::simple(&alg, 1)).unwrap());
    let (rad, incl) = radical(&projective_at(&alg, 0).unwrap());
    assert_eq!(rad.dims(), &[0, 1, 0]);
    assert!(incl.is_injective());
}

#[test]
fn indecomposability_of_projectives() {
    let alg = golden::auslander_dual_numbers(f()).unwrap().algebra().clone();
    for x in 0..2 {
        assert!(is_indecomposable(&projective_at(&alg, x).unwrap()).unwrap());
        assert!(is_indecomposable(&injective_at(&alg, x).unwrap()).unwrap());
    }
}
