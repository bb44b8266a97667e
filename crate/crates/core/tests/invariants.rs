use std::sync::Arc;

use proptest::prelude::*;
use quiver_cover::decompose::{indecomposable_summands, is_isomorphic};
use quiver_cover::homological::{ext_dim, syzygy};
use quiver_cover::module::{hom_dim, projective_at, FDModule};
use quiver_cover::{golden, Algebra, Mat, PrimeField};

fn f() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn a3() -> Arc<Algebra<PrimeField>> {
    golden::linear_a(f(), 3).unwrap().algebra().clone()
}

fn matrix(rows: usize, cols: usize, seed: &[u64]) -> Mat<PrimeField> {
    let data = (0..rows * cols).map(|i| seed[i % seed.len()] % 5).collect();
    Mat::from_vec(&f(), rows, cols, data).unwrap()
}

/// A representation of `1 -> 2 -> 3`; no relations, so any matrices do.
fn rep(alg: &Arc<Algebra<PrimeField>>, dims: &[usize], seed: &[u64]) -> FDModule<PrimeField> {
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let s: Vec<u64> = seed.iter().map(|x| x.wrapping_mul(k as u64 + 7)).collect();
            matrix(dims[a.src], dims[a.tgt], &s)
        })
        .collect();
    FDModule::new(alg.clone(), dims.to_vec(), maps).unwrap()
}

fn module() -> impl Strategy<Value = (Vec<usize>, Vec<u64>)> {
    (prop::collection::vec(0usize..=2, 3), prop::collection::vec(0u64..25, 1..6))
}

/// `<a, b> = sum a_i b_i - sum_{i -> j} a_i b_j` on a hereditary algebra.
fn euler(alg: &Algebra<PrimeField>, a: &[usize], b: &[usize]) -> i64 {
    let diag: i64 = a.iter().zip(b).map(|(x, y)| (x * y) as i64).sum();
    let off: i64 = alg.arrows().iter().map(|ar| (a[ar.src] * b[ar.tgt]) as i64).sum();
    diag - off
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, seed in prop::collection::vec(0u64..25, 1..8)) {
        let m = matrix(rows, cols, &seed);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), cols);
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn yoneda_on_random_representations((dims, seed) in module()) {
        let alg = a3();
        let m = rep(&alg, &dims, &seed);
        for x in 0..3 {
            prop_assert_eq!(hom_dim(&projective_at(&alg, x).unwrap(), &m).unwrap(), dims[x]);
        }
    }

    #[test]
    fn euler_form_matches_hom_minus_ext((d1, s1) in module(), (d2, s2) in module()) {
        let alg = a3();
        let m = rep(&alg, &d1, &s1);
        let n = rep(&alg, &d2, &s2);
        let h = hom_dim(&m, &n).unwrap() as i64;
        let e = ext_dim(&m, &n, 1).unwrap() as i64;
        prop_assert_eq!(h - e, euler(&alg, &d1, &d2));
        prop_assert_eq!(ext_dim(&m, &n, 2).unwrap(), 0);
    }

    #[test]
    fn dimension_shift((d1, s1) in module(), (d2, s2) in module()) {
        let alg = a3();
        let m = rep(&alg, &d1, &s1);
        let n = rep(&alg, &d2, &s2);
        let omega = syzygy(&m, 1).unwrap();
        prop_assert_eq!(ext_dim(&m, &n, 2).unwrap(), ext_dim(&omega, &n, 1).unwrap());
    }

    #[test]
    fn hom_is_additive((d1, s1) in module(), (d2, s2) in module(), (d3, s3) in module()) {
        let alg = a3();
        let m = rep(&alg, &d1, &s1);
        let n = rep(&alg, &d2, &s2);
        let l = rep(&alg, &d3, &s3);
        let sum = FDModule::direct_sum(&[m.clone(), n.clone()]).unwrap();
        prop_assert_eq!(hom_dim(&sum, &l).unwrap(), hom_dim(&m, &l).unwrap() + hom_dim(&n, &l).unwrap());
        prop_assert_eq!(hom_dim(&l, &sum).unwrap(), hom_dim(&l, &m).unwrap() + hom_dim(&l, &n).unwrap());
    }

    #[test]
    fn decomposition_reassembles((dims, seed) in module()) {
        let alg = a3();
        let m = rep(&alg, &dims, &seed);
        let parts: Vec<_> = indecomposable_summands(&m).unwrap().into_iter().map(|(p, _)| p).collect();
        let total: usize = parts.iter().map(|p| p.total_dim()).sum();
        prop_assert_eq!(total, m.total_dim());
        if !parts.is_empty() {
            prop_assert!(is_isomorphic(&FDModule::direct_sum(&parts).unwrap(), &m).unwrap());
        }
    }

    #[test]
    fn duality_is_an_involution((dims, seed) in module()) {
        let m = rep(&a3(), &dims, &seed);
        let dd = m.dual().dual();
        prop_assert_eq!(dd.dims(), m.dims());
        prop_assert!(is_isomorphic(&dd.rebase(m.algebra()).unwrap(), &m).unwrap());
    }
}
