use std::hint::black_box;

use capparelli_bench::level_inputs;
use capparelli_core::combinatorics::{family_table, FamilyId, ProductSideId};
use capparelli_core::qfactory::{constant_term_lhs, product_rhs, sum_rhs, ConstantTermRoute, ProductId, SumId};
use capparelli_core::series::Bounds;
use capparelli_core::staircase::{bijection_audit, compose_levels, decompose_levels, AuditVariant};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    g.sample_size(10);
    for q in [20, 30] {
        g.bench_with_input(BenchmarkId::new("aag_product", q), &q, |b, &q| {
            b.iter(|| product_rhs(ProductId::Aag, Bounds::new(q)))
        });
        for (name, route) in [("ct_taylor", ConstantTermRoute::Taylor), ("ct_laurent", ConstantTermRoute::Laurent)] {
            g.bench_with_input(BenchmarkId::new(name, q), &q, |b, &q| b.iter(|| constant_term_lhs(Bounds::new(q), route)));
        }
    }
    g.bench_function("thm15_sum_q18_d6", |b| b.iter(|| sum_rhs(SumId::Thm15, Bounds::new(18).with_d(6))));
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    g.bench_function("cor1_table_30", |b| b.iter(|| family_table(&FamilyId::Cor1.spec(), 30, None)));
    g.bench_function("dbar_table_30", |b| b.iter(|| ProductSideId::Dbar.table(30)));
    g.bench_function("c1_table_18_k6", |b| b.iter(|| family_table(&FamilyId::C1.spec(), 18, Some(6))));
    g.finish();
}

fn staircase(c: &mut Criterion) {
    let inputs = level_inputs(16, 8);
    let mut g = c.benchmark_group("staircase");
    g.sample_size(10);
    g.bench_function("levels_round_trip", |b| {
        b.iter(|| {
            for (l, q) in &inputs {
                black_box(decompose_levels(l).unwrap());
                black_box(compose_levels(q));
            }
        })
    });
    for variant in [AuditVariant::Full, AuditVariant::C1] {
        g.bench_with_input(BenchmarkId::new("audit_n12_k4", variant), &variant, |b, &v| {
            b.iter(|| bijection_audit(v, 12, 4).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, series, enumeration, staircase);
criterion_main!(benches);
