use criterion::{black_box, criterion_group, criterion_main, Criterion};
use theta_core::atlas::load_bundled;
use theta_core::atlas::verify::desing_for;
use theta_core::bott::{bott, FlagSpace};
use theta_core::bundles::{exterior_powers, DEFAULT_MAX_CELLS};
use theta_core::geomtech::{hilbert_numerator, resolution_terms};
use theta_core::grading::{Case, GradedAlgebra};
use theta_core::orbits::{orbit_dimension_seeded, parse_representative, ThetaRep, DEFAULT_SEED};
use theta_core::{build_root_system, DiagramType, WeylFrame};

fn orbit_dimension(c: &mut Criterion) {
    let theta = ThetaRep::new(Case::E7a2).unwrap();
    let rep = parse_representative(&theta.graded, "[123]+[456]+[147]").unwrap();
    c.bench_function("orbit_dimension e7a2 O7", |b| {
        b.iter(|| orbit_dimension_seeded(&theta, black_box(&rep), DEFAULT_SEED).unwrap())
    });
    c.bench_function("graded algebra e7a5", |b| b.iter(|| GradedAlgebra::new(black_box(Case::E7a5)).unwrap()));
}

fn bott_kernel(c: &mut Criterion) {
    let rs = build_root_system(DiagramType::E7).unwrap();
    let frame = WeylFrame::dynkin(&rs.cartan, &[0, 1, 2, 3, 4, 5, 6]);
    let fs = FlagSpace::new(frame, &[0, 1, 2, 3, 4, 5], "E7/P7").unwrap();
    let lambda = [1, 0, 2, 0, 0, 1, -9];
    c.bench_function("bott E7/P7", |b| b.iter(|| bott(&fs, black_box(&lambda)).unwrap()));
}

fn geometric_technique(c: &mut Criterion) {
    let atlas = load_bundled().unwrap();
    let g = GradedAlgebra::new(Case::E7a6).unwrap();
    let row = atlas.case(Case::E7a6).orbit(4).unwrap();
    let d = desing_for(&g, row).unwrap();
    let mut group = c.benchmark_group("e7a6 O4");
    group.sample_size(10);
    group.bench_function("exterior powers of ξ", |b| b.iter(|| exterior_powers(&d.xi(), DEFAULT_MAX_CELLS).unwrap()));
    group.bench_function("resolution terms", |b| b.iter(|| resolution_terms(&d, d.xi_rank(), DEFAULT_MAX_CELLS).unwrap()));
    group.bench_function("hilbert numerator", |b| {
        b.iter(|| hilbert_numerator(&d, row.dim, row.numerator.len() + 1, DEFAULT_MAX_CELLS).unwrap())
    });
    group.finish();
}

criterion_group!(benches, orbit_dimension, bott_kernel, geometric_technique);
criterion_main!(benches);
