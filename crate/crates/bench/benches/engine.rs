use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use thickcalc::identities::{build_thick_r2, build_thick_r3};
use thickcalc::symfunc::{lr_coeff, schur_product};
use thickcalc::Partition;
use thickcalc_bench::{box_partitions, crossing_tower, parse};

fn reduce(c: &mut Criterion) {
    let mut g = c.benchmark_group("reduce");
    for k in [3, 4, 5] {
        let text = crossing_tower(k, 2 * k);
        g.bench_with_input(BenchmarkId::from_parameter(k), &text, |b, t| b.iter(|| parse(black_box(t))));
    }
    g.finish();
}

fn lr(c: &mut Criterion) {
    let parts = box_partitions(2, 2);
    c.bench_function("lr/box2x2_pairs", |b| {
        b.iter(|| {
            let mut n = 0usize;
            for a in &parts {
                for be in &parts {
                    n += schur_product(&[a.clone(), be.clone()], 4).len();
                }
            }
            n
        })
    });
    let (a, be, ga): (Partition, Partition, Partition) = ("3,2,1".parse().unwrap(), "2,1".parse().unwrap(), "4,3,2".parse().unwrap());
    c.bench_function("lr/single_coefficient", |b| b.iter(|| lr_coeff(black_box(&a), &be, &ga)));
}

fn explode(c: &mut Criterion) {
    let mut g = c.benchmark_group("explode");
    g.sample_size(10);
    for (a, b) in [(1, 1), (2, 2), (2, 3)] {
        let (lhs, rhs) = build_thick_r2(1, a, 2, b).expect("thick R2 builds");
        g.bench_function(format!("thick_r2/{a},{b}"), |bn| {
            bn.iter(|| (lhs.explode().unwrap(), rhs.explode().unwrap()))
        });
    }
    let (lhs, rhs) = build_thick_r3(1, 2, 1, 1, 2).expect("thick R3 builds");
    g.bench_function("thick_r3/1,2,1", |bn| bn.iter(|| (lhs.explode().unwrap(), rhs.explode().unwrap())));
    g.finish();
}

criterion_group!(benches, reduce, lr, explode);
criterion_main!(benches);
