use std::hint::black_box;

use alterna_core::coeffs::{a_one_param, a_vector, gen_check_d};
use alterna_core::coxeter::CoxeterMatrix;
use alterna_core::heckedihedral::relation_residual;
use alterna_core::presentations::{bourbaki_group, coxeter_group, emit, PresentationKind};
use alterna_core::subgroup_rewrite::{rs_rewrite, SchreierSetup, SignCharacter};
use alterna_core::verify::todd_coxeter;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn coefficients(c: &mut Criterion) {
    let mut g = c.benchmark_group("coefficients");
    for m in [6u32, 12, 20] {
        g.bench_with_input(BenchmarkId::new("two-param", m), &m, |b, &m| {
            b.iter(|| a_vector(black_box(m), false).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("closed-form", m), &m, |b, &m| {
            b.iter(|| a_one_param(black_box(m)).unwrap())
        });
    }
    g.bench_function("generating-function-D-order-20", |b| b.iter(|| gen_check_d(black_box(20))));
    g.finish();
}

fn dihedral(c: &mut Criterion) {
    let mut g = c.benchmark_group("dihedral-residual");
    g.sample_size(10);
    for m in [4u32, 8] {
        g.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| relation_residual(black_box(m), false).unwrap())
        });
    }
    g.finish();
}

fn presentations(c: &mut Criterion) {
    let e8 = CoxeterMatrix::named("E8").unwrap();
    let mut g = c.benchmark_group("presentations");
    for kind in [PresentationKind::BourbakiGroup, PresentationKind::EdgeBraid, PresentationKind::EdgeHecke] {
        g.bench_function(kind.name(), |b| b.iter(|| emit(kind, black_box(&e8)).unwrap()));
    }
    g.bench_function("rs-rewrite-E8", |b| {
        let cox = coxeter_group(&e8);
        let setup = SchreierSetup::new(cox.clone(), SignCharacter::all_minus(&cox)).unwrap();
        b.iter(|| rs_rewrite(black_box(&setup)).unwrap())
    });
    g.finish();
}

fn coset_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("todd-coxeter");
    g.sample_size(10);
    for name in ["A4", "H3", "B4"] {
        let pres = bourbaki_group(&CoxeterMatrix::named(name).unwrap());
        g.bench_function(name, |b| b.iter(|| todd_coxeter(black_box(&pres), 50_000).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, coefficients, dihedral, presentations, coset_enumeration);
criterion_main!(benches);
