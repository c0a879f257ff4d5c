//! Benchmarks of the exhaustive triple scan: sequential (1 worker) against
//! the default pool, plus the component-power evaluation it amortizes.
//!
//! With `--no-default-features` only the plain sequential path exists and is
//! benchmarked on its own.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use quadfermat::curve::EquationSpec;
use quadfermat::power::power_parts;
use quadfermat::quad::Disc;
use quadfermat::rational::int;
use quadfermat::search::{search, Scope, SearchBox};

fn bench_search(c: &mut Criterion) {
    let eq = EquationSpec::from_ints(1, 2, 3, 5, 2).unwrap();
    let sbox = SearchBox::new(2, Scope::FullK).skip_trivial(true);

    let mut group = c.benchmark_group("search/full-k-h2");
    group.sample_size(10);

    #[cfg(feature = "parallel")]
    {
        let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        group.bench_function("sequential", |b| {
            b.iter(|| single.install(|| black_box(search(&eq, &sbox))))
        });
        group.bench_function("parallel-default", |b| {
            b.iter(|| black_box(search(&eq, &sbox)))
        });
    }
    #[cfg(not(feature = "parallel"))]
    group.bench_function("sequential", |b| b.iter(|| black_box(search(&eq, &sbox))));

    group.finish();
}

fn bench_power_parts(c: &mut Criterion) {
    let disc = Disc::new(-3).unwrap();
    c.bench_function("power-parts/p11", |b| {
        let x = int(17);
        let y = int(-13);
        b.iter(|| black_box(power_parts(&x, &y, disc, 11)))
    });
}

criterion_group!(benches, bench_search, bench_power_parts);
criterion_main!(benches);
