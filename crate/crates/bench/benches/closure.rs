use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempreach_core::gen::{random_graph, GraphShape};
use tempreach_core::transforms::{dilate, saturate, semaphore};
use tempreach_core::{closure, Strictness};

fn closures(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    for n in [16, 64, 256] {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let g = random_graph(&mut rng, GraphShape::new(n, 4 * n, 4 * n as u64));
        group.throughput(Throughput::Elements(g.contacts_count() as u64));
        for s in [Strictness::Strict, Strictness::NonStrict] {
            group.bench_with_input(BenchmarkId::new(format!("{s:?}"), n), &g, |b, g| b.iter(|| closure(g, s)));
        }
    }
    group.finish();
}

fn transforms(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = random_graph(&mut rng, GraphShape::new(32, 96, 16));
    let mut group = c.benchmark_group("transform");
    group.bench_function("dilate", |b| b.iter(|| dilate(&g)));
    group.bench_function("saturate", |b| b.iter(|| saturate(&g)));
    group.bench_function("semaphore", |b| b.iter(|| semaphore(&g)));
    group.finish();
}

criterion_group!(benches, closures, transforms);
criterion_main!(benches);
