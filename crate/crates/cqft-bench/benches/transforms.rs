use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use cqft::{cfft, cqdft, cqfft, cqfft_general, Direction, Side, TransformSpec};
use cqft_bench::{complex_signal, example_axis, quaternion_signal, real_quaternion_signal};

fn forward_spec() -> TransformSpec {
    TransformSpec::new(example_axis(), Side::Left, Direction::Forward)
}

fn bench_fast_engine(c: &mut Criterion) {
    let spec = forward_spec();
    let mut group = c.benchmark_group("cqfft");
    for n in [256usize, 1000, 1024, 4096] {
        let f = quaternion_signal(1, n);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| {
            b.iter(|| cqfft(f, &spec).unwrap())
        });
    }
    group.finish();
}

fn bench_direct_engine(c: &mut Criterion) {
    let spec = forward_spec();
    let mut group = c.benchmark_group("cqdft");
    group.sample_size(20);
    for n in [64usize, 256, 1024] {
        let f = quaternion_signal(1, n);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| {
            b.iter(|| cqdft(f, &spec).unwrap())
        });
    }
    group.finish();
}

fn bench_reduction_paths(c: &mut Criterion) {
    let spec = forward_spec();
    let n = 1024;
    let f = real_quaternion_signal(2, n);
    let mut group = c.benchmark_group("real-signal");
    group.throughput(Throughput::Elements(n as u64));
    group.bench_function("two-fft-reduction", |b| {
        b.iter(|| cqfft(&f, &spec).unwrap())
    });
    group.bench_function("four-fft-general", |b| {
        b.iter(|| cqfft_general(&f, &spec).unwrap())
    });
    group.finish();
}

fn bench_complex_fft(c: &mut Criterion) {
    let mut group = c.benchmark_group("cfft");
    for n in [1000usize, 1024, 4096] {
        let x = complex_signal(3, n);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| {
            b.iter(|| cfft(x, Direction::Forward))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_fast_engine,
    bench_direct_engine,
    bench_reduction_paths,
    bench_complex_fft
);
criterion_main!(benches);
