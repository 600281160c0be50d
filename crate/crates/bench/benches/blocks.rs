use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use symcrystal::canonical::{global_lower, multiplicity_polys, Block, Side};
use symcrystal::freealg::{set_cache_enabled, ublock};
use symcrystal::mseg::{crystal_triple, enumerate_multisegments, signature_ops};
use symcrystal::theta::{enumerate_theta, theta_formula_ops, theta_signature_ops};
use symcrystal::thetamod::theta_block_data;
use symcrystal_bench::{content_of, sym_of, theta_block, type_a_block, window};

fn crystal_ops(c: &mut Criterion) {
    let w = window();
    let ms = enumerate_multisegments(&w, 4);
    let ts = enumerate_theta(&w, 4).unwrap();
    c.bench_function("type A formulas, degree 4", |b| {
        b.iter(|| ms.iter().map(|m| crystal_triple(1, black_box(m)).epsilon).sum::<u32>())
    });
    c.bench_function("type A signature rule, degree 4", |b| {
        b.iter(|| ms.iter().map(|m| signature_ops(1, black_box(m)).epsilon).sum::<u32>())
    });
    c.bench_function("theta formulas, degree 4", |b| {
        b.iter(|| ts.iter().map(|m| theta_formula_ops(3, black_box(m)).epsilon).sum::<u32>())
    });
    c.bench_function("theta signature rule, degree 4", |b| {
        b.iter(|| ts.iter().map(|m| theta_signature_ops(3, black_box(m)).epsilon).sum::<u32>())
    });
}

fn block_construction(c: &mut Criterion) {
    set_cache_enabled(false);
    let a = type_a_block();
    let t = theta_block();
    c.bench_function("PBW block {-1,1,1,3}, uncached", |b| {
        b.iter(|| ublock(content_of(&a).unwrap()).unwrap().dim())
    });
    c.bench_function("theta block {1,1,3}, uncached", |b| {
        b.iter(|| theta_block_data(sym_of(&t).unwrap()).unwrap().dim())
    });
    set_cache_enabled(true);
}

fn canonical(c: &mut Criterion) {
    let a = type_a_block();
    let t = theta_block();
    c.bench_function("lower global basis {-1,1,1,3}", |b| b.iter(|| global_lower(black_box(&a)).unwrap().dim()));
    c.bench_function("lower global basis theta {1,1,3}", |b| b.iter(|| global_lower(black_box(&t)).unwrap().dim()));
    let small = Block::Theta(symcrystal::mseg::SymContent::from_abs([1, 3]));
    c.bench_function("multiplicities F_-1 on theta {1,3}", |b| {
        b.iter(|| multiplicity_polys(black_box(&small), -1, Side::F).unwrap().cols.len())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = crystal_ops, block_construction, canonical
}
criterion_main!(benches);
