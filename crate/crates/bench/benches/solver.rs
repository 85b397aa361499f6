use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use starlab_core::{
    build_instance, classify_properties, gen_level, gen_multisets, gen_partitions, largest_stars,
    max_product_pair, max_product_tuple, GenLimits, SearchLimits,
};

fn pair_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("pair");
    for n in [7, 9, 11] {
        let f = gen_level(n, 2).unwrap();
        let inst = build_instance(&f, &f, 1).unwrap();
        group.bench_function(format!("level_{n}_2"), |b| {
            b.iter(|| max_product_pair(&inst, &SearchLimits::default()))
        });
    }
    let f = gen_level(7, 3).unwrap();
    let inst = build_instance(&f, &f, 2).unwrap();
    for par in [1, 4] {
        let lim = SearchLimits::default().with_parallelism(par);
        group.bench_function(format!("level_7_3_t2_par{par}"), |b| {
            b.iter(|| max_product_pair(&inst, &lim))
        });
    }
    let m = gen_multisets(5, 2).unwrap();
    group.bench_function("multisets_5_2", |b| {
        b.iter_batched(
            || build_instance(&m, &m, 1).unwrap(),
            |i| max_product_pair(&i, &SearchLimits::default()),
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

fn tuple_solve(c: &mut Criterion) {
    let f = gen_level(6, 2).unwrap();
    let fams = [f.clone(), f.clone(), f];
    c.bench_function("tuple/level_6_2_k3", |b| {
        b.iter(|| max_product_tuple(&fams, 1, &SearchLimits::default()).unwrap())
    });
    let f = gen_level(6, 2).unwrap();
    c.bench_function("classify/level_6_2", |b| {
        b.iter(|| {
            classify_properties(&[f.clone(), f.clone()], 1, &SearchLimits::default()).unwrap()
        })
    });
}

fn stars(c: &mut Criterion) {
    let p = gen_partitions(8, 4, &GenLimits::default()).unwrap();
    c.bench_function("stars/partitions_8_4_t2", |b| {
        b.iter(|| largest_stars(&p, 2))
    });
}

criterion_group!(benches, pair_solve, tuple_solve, stars);
criterion_main!(benches);
