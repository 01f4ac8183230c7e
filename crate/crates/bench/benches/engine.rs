use criterion::{criterion_group, criterion_main, Criterion};

use schubert_ss::coxfeas::classify_all;
use schubert_ss::ssgit::minimal_admitting_oracle;
use schubert_ss::weyl::enumerate_group;
use schubert_ss::{Kind, RootSystem, DEFAULT_ENUM_LIMIT};

fn bench_enumerate_group(c: &mut Criterion) {
    let rs = RootSystem::build(Kind::B, 4).unwrap();
    c.bench_function("enumerate_group B4", |b| {
        b.iter(|| enumerate_group(&rs, DEFAULT_ENUM_LIMIT).unwrap().len())
    });
}

fn bench_minimal_oracle(c: &mut Criterion) {
    let rs = RootSystem::build(Kind::B, 4).unwrap();
    c.bench_function("minimal_admitting_oracle B4 r=2", |b| {
        b.iter(|| minimal_admitting_oracle(&rs, 2, DEFAULT_ENUM_LIMIT).unwrap().len())
    });
}

fn bench_classify_coxeter(c: &mut Criterion) {
    let rs = RootSystem::build(Kind::D, 4).unwrap();
    c.bench_function("classify_all D4", |b| {
        b.iter(|| classify_all(&rs).unwrap().len())
    });
}

criterion_group!(benches, bench_enumerate_group, bench_minimal_oracle, bench_classify_coxeter);
criterion_main!(benches);
