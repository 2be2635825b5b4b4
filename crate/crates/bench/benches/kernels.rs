use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tiltlab::qbgraph::{min_degree, min_degree_bfs, tilted_interval};
use tiltlab::quantumschub::path_schubert;
use tiltlab::rpolyhecke::{rtilt_deodhar, rtilt_hecke, rtilt_recursive};
use tiltlab::varietylab::count_points_fq;
use tiltlab::Perm;
use tiltlab_bench::pair_sample;

fn p(s: &str) -> Perm {
    s.parse().unwrap()
}

fn qbg(c: &mut Criterion) {
    let (u, v) = (p("7364152"), p("2513746"));
    c.bench_function("min_degree/depth S7", |b| b.iter(|| min_degree(black_box(&u), black_box(&v))));
    let (u, v) = (p("32514"), p("41253"));
    c.bench_function("min_degree/bfs S5", |b| b.iter(|| min_degree_bfs(black_box(&u), black_box(&v))));
    let pairs = pair_sample(5, 97);
    c.bench_function("min_degree/depth S5 sweep", |b| {
        b.iter(|| pairs.iter().map(|(u, v)| min_degree(u, v).unwrap().total()).sum::<u32>())
    });
    let (u, v) = (p("512346"), p("246513"));
    c.bench_function("tilted_interval S6", |b| b.iter(|| tilted_interval(black_box(&u), black_box(&v))));
}

fn rpoly(c: &mut Criterion) {
    let (u, v) = (p("4231"), p("3142"));
    c.bench_function("rtilt/deodhar S4", |b| b.iter(|| rtilt_deodhar(black_box(&u), black_box(&v))));
    c.bench_function("rtilt/recursive S4", |b| b.iter(|| rtilt_recursive(black_box(&u), black_box(&v))));
    c.bench_function("rtilt/hecke S4", |b| b.iter(|| rtilt_hecke(black_box(&u), black_box(&v))));
}

fn varieties(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_points_fq");
    g.sample_size(10);
    let (u, v) = (p("4231"), p("3142"));
    g.bench_function("S4 p=2", |b| b.iter(|| count_points_fq(black_box(&u), black_box(&v), 2)));
    g.finish();
}

fn schubert(c: &mut Criterion) {
    let (u, v) = (p("3412"), p("2143"));
    c.bench_function("path_schubert S4", |b| b.iter(|| path_schubert(black_box(&u), black_box(&v))));
}

criterion_group!(benches, qbg, rpoly, varieties, schubert);
criterion_main!(benches);
