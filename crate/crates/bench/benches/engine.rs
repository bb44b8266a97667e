use criterion::{criterion_group, criterion_main, Criterion};
use quiver_cover::covering::Covering;
use quiver_cover::homological::{ext_dim, tau};
use quiver_cover::knit::list_indecomposables;
use quiver_cover::report::Claim;
use quiver_cover::subcategory::Carrier;
use quiver_cover::suite::{run_claim, SuiteOptions};
use quiver_cover::{golden, PrimeField};

fn field() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn knitting(c: &mut Criterion) {
    let base = golden::auslander_dual_numbers(field()).unwrap();
    c.bench_function("indecomposables/auslander", |b| b.iter(|| list_indecomposables(base.algebra(), 12).unwrap()));
    let n32 = golden::nakayama(field(), 3, 2).unwrap();
    let cover = Covering::new(&n32, 6).unwrap();
    c.bench_function("orbits/n32_window6", |b| b.iter(|| Carrier::Cover(&cover).pool(12).unwrap()));
}

fn homological(c: &mut Criterion) {
    let base = golden::linear_a(field(), 4).unwrap();
    let pool = list_indecomposables(base.algebra(), 12).unwrap();
    c.bench_function("ext1/a4_all_pairs", |b| {
        b.iter(|| {
            let mut total = 0;
            for x in &pool {
                for y in &pool {
                    total += ext_dim(x, y, 1).unwrap();
                }
            }
            total
        })
    });
    c.bench_function("tau/a4_pool", |b| b.iter(|| pool.iter().map(|m| tau(m).unwrap().total_dim()).sum::<usize>()));
}

fn claims(c: &mut Criterion) {
    let pres = golden::nakayama(field(), 3, 2).unwrap();
    let opts = SuiteOptions { half_width: 6, ..SuiteOptions::default_for(&pres, 1) };
    let mut group = c.benchmark_group("claims");
    group.sample_size(10);
    for claim in [Claim::Corres, Claim::Main1, Claim::TiltingFinite] {
        group.bench_function(claim.name(), |b| b.iter(|| run_claim(claim, &pres, &opts).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, knitting, homological, claims);
criterion_main!(benches);
