use criterion::{black_box, criterion_group, criterion_main, Criterion};
use cyclat_core::cond::Condition;
use cyclat_core::poset::{enumerate_hasse, satisfies, HasseKind};
use cyclat_core::{cycset, CycleSet, Limits};

fn bench_decompose(c: &mut Criterion) {
    let limits = Limits::default();
    let s = Condition::new(cycset![60, 84, 90, 132]);
    c.bench_function("decompose C{60,84,90,132}", |b| {
        b.iter(|| black_box(&s).decompose(&limits).unwrap())
    });
}

fn bench_satisfies(c: &mut Criterion) {
    let limits = Limits::default();
    let u = cycset![6, 10, 15, 21, 35];
    let s = Condition::new(cycset![30, 42, 70, 105]);
    c.bench_function("satisfies C{6,10,15,21,35} S{30,42,70,105}", |b| {
        b.iter(|| satisfies(black_box(&u), black_box(&s), &limits).unwrap())
    });
}

fn bench_hasse(c: &mut Criterion) {
    let primes = cyclat_core::PrimeSet::new([2u64, 3, 5]).unwrap();
    c.bench_function("hasse unions {2,3,5}", |b| {
        b.iter(|| enumerate_hasse(black_box(&primes), HasseKind::Unions).unwrap())
    });
}

fn bench_oracle_quotient(c: &mut Criterion) {
    let limits = Limits::default();
    let u = cycset![2, 3];
    let d = CycleSet::new([2u64, 5]).unwrap();
    c.bench_function("shift quotient C{2,3}^C{2,5}", |b| {
        b.iter(|| cyclat_core::oracle::shift_quotient(black_box(&u), black_box(&d), &limits).unwrap())
    });
}

criterion_group!(
    benches,
    bench_decompose,
    bench_satisfies,
    bench_hasse,
    bench_oracle_quotient
);
criterion_main!(benches);
