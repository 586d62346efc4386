use atlas_exact::exec::Strategy;
use atlas_oracle::{run_suite, Case, FormChoice, DEFAULT_CAP};
use criterion::{criterion_group, criterion_main, Criterion};

fn small_suite(c: &mut Criterion) {
    let cases = [
        Case::new(FormChoice::Plus, 4, 3),
        Case::new(FormChoice::Minus, 4, 3),
        Case::new(FormChoice::Minus, 4, 2),
        Case::new(FormChoice::Odd, 3, 5),
    ];
    let mut g = c.benchmark_group("oracle_suite");
    g.sample_size(10);
    for (name, s) in [("parallel", Strategy::Parallel), ("sequential", Strategy::Sequential)] {
        g.bench_function(name, |b| b.iter(|| run_suite(&cases, DEFAULT_CAP, s)));
    }
    g.finish();
}

criterion_group!(benches, small_suite);
criterion_main!(benches);
